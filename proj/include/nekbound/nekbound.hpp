#pragma once

#include "nekbound/bounds.hpp"
#include "nekbound/errors.hpp"
#include "nekbound/fixtures.hpp"
#include "nekbound/io.hpp"
#include "nekbound/lcp.hpp"
#include "nekbound/matrix.hpp"
#include "nekbound/oracles.hpp"
#include "nekbound/profile.hpp"
#include "nekbound/repro.hpp"
#include "nekbound/scaling.hpp"
