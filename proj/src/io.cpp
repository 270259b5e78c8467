#include "orbitcodes/io.hpp"

#include <cctype>

#include "orbitcodes/error.hpp"

namespace orbitcodes {

Vec parse_row(std::string_view text, fq_t q) {
    if (q > 36) throw InvalidArgument("digit-string rows support q <= 36");
    if (text.empty()) throw InvalidArgument("empty row");
    Vec row;
    row.reserve(text.size());
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(ch)));
        fq_t v;
        if (std::isdigit(c)) {
            v = static_cast<fq_t>(c - '0');
        } else if (c >= 'a' && c <= 'z') {
            v = static_cast<fq_t>(c - 'a' + 10);
        } else {
            throw InvalidArgument("malformed row '" + std::string(text) + "'");
        }
        if (v >= q) throw InvalidArgument("row entry '" + std::string(1, ch) + "' out of range for q = " + std::to_string(q));
        row.push_back(v);
    }
    return row;
}

std::string format_row(std::span<const fq_t> row) {
    std::string out;
    out.reserve(row.size());
    for (fq_t v : row) out += static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
    return out;
}

MatFq parse_rows(std::string_view text, fq_t q) {
    std::vector<Vec> rows;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        rows.push_back(parse_row(item, q));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (const Vec& r : rows) {
        if (r.size() != rows.front().size()) throw InvalidArgument("rows have different lengths");
    }
    return MatFq(q, rows);
}

std::vector<std::string> matrix_row_strings(const MatFq& m) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(format_row(m.row(r)));
    return out;
}

std::string format_matrix(const MatFq& m) {
    std::string out;
    for (const auto& r : matrix_row_strings(m)) out += r + '\n';
    return out;
}

}  // namespace orbitcodes
