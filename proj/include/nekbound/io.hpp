#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nekbound/matrix.hpp"

namespace nekbound {

enum class matrix_format { matrix_market, csv, json };

inline const char* to_string(matrix_format f) {
    switch (f) {
        case matrix_format::matrix_market: return "mm";
        case matrix_format::csv: return "csv";
        case matrix_format::json: return "json";
    }
    return "?";
}

inline std::optional<matrix_format> format_from_name(std::string_view name) {
    if (name == "mm" || name == "mtx" || name == "matrixmarket") return matrix_format::matrix_market;
    if (name == "csv") return matrix_format::csv;
    if (name == "json") return matrix_format::json;
    return std::nullopt;
}

/// Guess a format from a file extension; csv when the extension is unknown.
inline matrix_format infer_format(std::string_view path) {
    const auto dot = path.rfind('.');
    if (dot != std::string_view::npos) {
        std::string ext(path.substr(dot + 1));
        for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (auto f = format_from_name(ext)) return *f;
    }
    return matrix_format::csv;
}

namespace detail {

inline double parse_real(std::string_view tok, std::size_t line) {
    double v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw parse_error(line, "expected a real number, got '" + std::string(tok) + "'");
    return v;
}

inline std::vector<std::string_view> split_fields(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// Comma-separated values, one matrix row per line, no header.
inline square_matrix<double> parse_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        std::vector<double> row;
        for (std::string_view tok : detail::split_fields(line, ','))
            row.push_back(detail::parse_real(detail::trim(tok), lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error(0, "empty csv input");
    const std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw not_square("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return {n, std::move(entries)};
}

/// Matrix Market, array or coordinate layout, field real, symmetry general.
/// Array data is column-major; coordinate entries are 1-based and positions
/// not listed default to zero.
inline square_matrix<double> parse_matrix_market(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw parse_error(0, "empty matrix market input");
    ++lineno;
    std::istringstream header(line);
    std::string banner, object, layout, field, symmetry;
    header >> banner >> object >> layout >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix")
        throw parse_error(lineno, "missing %%MatrixMarket matrix banner");
    if (layout != "array" && layout != "coordinate")
        throw parse_error(lineno, "unsupported layout '" + layout + "'");
    if (field != "real" && field != "integer")
        throw parse_error(lineno, "unsupported field '" + field + "'");
    if (symmetry != "general")
        throw parse_error(lineno, "unsupported symmetry '" + symmetry + "'");

    auto next_data_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++lineno;
            const std::string_view t = detail::trim(line);
            if (t.empty() || t.front() == '%') continue;
            return std::string(t);
        }
        return std::nullopt;
    };

    const auto size_line = next_data_line();
    if (!size_line) throw parse_error(lineno, "missing size line");
    std::istringstream sizes(*size_line);
    long rows = 0, cols = 0, nnz = 0;
    if (!(sizes >> rows >> cols)) throw parse_error(lineno, "bad size line");
    if (layout == "coordinate" && !(sizes >> nnz))
        throw parse_error(lineno, "coordinate size line needs an entry count");
    if (rows <= 0 || cols <= 0) throw parse_error(lineno, "dimensions must be positive");
    if (rows != cols)
        throw not_square("matrix market input is " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    const std::size_t n = static_cast<std::size_t>(rows);

    square_matrix<double> m(n);
    if (layout == "array") {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                const auto value_line = next_data_line();
                if (!value_line) throw parse_error(lineno, "array data ended early");
                m(i, j) = detail::parse_real(detail::trim(*value_line), lineno);
            }
    } else {
        for (long e = 0; e < nnz; ++e) {
            const auto entry_line = next_data_line();
            if (!entry_line) throw parse_error(lineno, "coordinate data ended early");
            std::istringstream entry(*entry_line);
            long i = 0, j = 0;
            std::string value;
            if (!(entry >> i >> j >> value)) throw parse_error(lineno, "bad coordinate entry");
            if (i < 1 || j < 1 || i > rows || j > cols)
                throw parse_error(lineno, "coordinate index out of range");
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                detail::parse_real(value, lineno);
        }
    }
    return m;
}

/// JSON object {"n": dimension, "rows": [[...], ...]}.
inline square_matrix<double> parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(0, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
        throw parse_error(0, "expected an object with fields 'n' and 'rows'");
    if (!doc["n"].is_number_unsigned() && !doc["n"].is_number_integer())
        throw parse_error(0, "'n' must be a positive integer");
    const long long n_signed = doc["n"].get<long long>();
    if (n_signed < 1) throw parse_error(0, "'n' must be a positive integer");
    const std::size_t n = static_cast<std::size_t>(n_signed);

    const auto& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n)
        throw not_square("'rows' has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(n));
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw not_square("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[i][j].is_number())
                throw parse_error(0, "non-numeric entry at row " + std::to_string(i + 1));
            entries.push_back(rows[i][j].get<double>());
        }
    }
    return {n, std::move(entries)};
}

inline square_matrix<double> parse_matrix(std::istream& in, matrix_format fmt) {
    switch (fmt) {
        case matrix_format::csv: return parse_csv(in);
        case matrix_format::matrix_market: return parse_matrix_market(in);
        case matrix_format::json: return parse_json(in);
    }
    throw error("unknown matrix format");
}

inline square_matrix<double> load_matrix(const std::string& path, matrix_format fmt) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    return parse_matrix(in, fmt);
}

inline square_matrix<double> load_matrix(const std::string& path) {
    return load_matrix(path, infer_format(path));
}

/// Serializes with enough digits that a reload reproduces the entries
/// bit for bit.
inline std::string write_matrix(const square_matrix<double>& a, matrix_format fmt) {
    const std::size_t n = a.size();
    std::ostringstream out;
    switch (fmt) {
        case matrix_format::csv:
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j) out << ',';
                    out << detail::format_full(a(i, j));
                }
                out << '\n';
            }
            break;
        case matrix_format::matrix_market:
            out << "%%MatrixMarket matrix array real general\n";
            out << n << ' ' << n << '\n';
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) out << detail::format_full(a(i, j)) << '\n';
            break;
        case matrix_format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < n; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < n; ++j) row.push_back(a(i, j));
                rows.push_back(std::move(row));
            }
            out << nlohmann::json{{"n", n}, {"rows", std::move(rows)}}.dump();
            break;
        }
    }
    return out.str();
}

inline void save_matrix(const square_matrix<double>& a, const std::string& path,
                        matrix_format fmt) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out << write_matrix(a, fmt);
}

/// Comma-separated list of reals, e.g. "-1,0.5,2".
inline std::vector<double> parse_vector(std::string_view text) {
    std::vector<double> v;
    for (std::string_view tok : detail::split_fields(text, ','))
        v.push_back(detail::parse_real(detail::trim(tok), 1));
    return v;
}

}  // namespace nekbound
