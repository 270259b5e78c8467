#pragma once

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbitcodes/gf.hpp"
#include "orbitcodes/io.hpp"
#include "orbitcodes/linalg.hpp"

namespace support {

inline orbitcodes::PolyFq poly(const std::string& text, orbitcodes::fq_t q = 2) {
    return orbitcodes::PolyFq::parse(text, q);
}

inline orbitcodes::Subspace rows(const std::string& text, orbitcodes::fq_t q = 2) {
    return orbitcodes::subspace_from_rows(orbitcodes::parse_rows(text, q));
}

inline oracle::Vec coeffs(const orbitcodes::PolyFq& p) {
    oracle::Vec c(p.coeffs().begin(), p.coeffs().end());
    return c;
}

inline orbitcodes::PolyFq from_coeffs(const oracle::Vec& c, orbitcodes::fq_t q) { return orbitcodes::PolyFq(q, c); }

inline oracle::Mat to_oracle(const orbitcodes::MatFq& m) { return m.to_rows(); }

inline orbitcodes::MatFq from_oracle(const oracle::Mat& m, orbitcodes::fq_t q) { return orbitcodes::MatFq(q, m); }

inline std::set<std::uint64_t> as_set(const orbitcodes::Subspace& s) {
    return oracle::span_codes(s.basis().to_rows(), s.q(), s.n());
}

/// Row-reduces a vector set back into a library subspace.
inline orbitcodes::Subspace from_set(const std::set<std::uint64_t>& s, orbitcodes::fq_t q, std::size_t n) {
    std::vector<orbitcodes::Vec> vs;
    for (auto c : s)
        if (c != 0) vs.push_back(oracle::decode(c, q, n));
    return orbitcodes::subspace_from_rows(orbitcodes::MatFq(q, vs));
}

inline std::vector<std::string> row_strings(const orbitcodes::Subspace& s) {
    return orbitcodes::matrix_row_strings(s.basis());
}

}  // namespace support
