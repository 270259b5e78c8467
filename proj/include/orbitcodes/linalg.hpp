#pragma once

// Dense matrices over F_q, reduced row echelon form, and points of the
// Grassmannian G_q(k, n). Vectors are rows and matrices act from the right
// (v -> vA, U -> rs(UA)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orbitcodes/gf.hpp"

namespace orbitcodes {

using Vec = std::vector<fq_t>;

class MatFq {
public:
    /// Zero matrix.
    MatFq(fq_t q, std::size_t rows, std::size_t cols);
    /// From a list of equally long rows (at least one row).
    MatFq(fq_t q, const std::vector<Vec>& rows);

    static MatFq identity(fq_t q, std::size_t n);

    fq_t q() const noexcept { return q_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    fq_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    fq_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const fq_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
    std::vector<Vec> to_rows() const;
    const std::vector<fq_t>& data() const noexcept { return data_; }

    friend bool operator==(const MatFq&, const MatFq&) = default;
    friend auto operator<=>(const MatFq&, const MatFq&) = default;

private:
    fq_t q_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<fq_t> data_;
};

MatFq operator*(const MatFq& a, const MatFq& b);
MatFq operator+(const MatFq& a, const MatFq& b);

struct RrefResult {
    MatFq matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; zero rows are kept at the bottom.
RrefResult rref(const MatFq& m);
std::size_t rank(const MatFq& m);
fq_t determinant(const MatFq& m);
bool is_invertible(const MatFq& m);
/// Throws PreconditionError for singular input.
MatFq inverse(const MatFq& m);
MatFq matrix_power(const MatFq& m, std::uint64_t e);
/// Rows of a followed by rows of b.
MatFq vstack(const MatFq& a, const MatFq& b);

/// Row vector times matrix.
Vec vector_mul(std::span<const fq_t> v, const MatFq& a);

/// det(xI - A), via reduction to upper Hessenberg form (valid in any characteristic).
PolyFq characteristic_polynomial(const MatFq& a);

/// Companion matrix with the coefficient row last: row i < n-1 is e_{i+1},
/// the last row is (-c_0, ..., -c_{n-1}).
MatFq companion_matrix(const PolyFq& p);

/// Smallest m >= 1 with A^m = I.
std::uint64_t matrix_order(const MatFq& a);

/// No nontrivial invariant subspace, decided by irreducibility of the
/// characteristic polynomial.
bool is_irreducible_matrix(const MatFq& a);

/// A point of G_q(k, n), stored as its RREF basis.
class Subspace {
public:
    fq_t q() const noexcept { return basis_.q(); }
    std::size_t n() const noexcept { return basis_.cols(); }
    std::size_t k() const noexcept { return basis_.rows(); }
    const MatFq& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const fq_t> v) const;
    /// All q^k - 1 nonzero vectors, enumerated by coefficient tuples over the basis.
    std::vector<Vec> nonzero_vectors() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

private:
    friend Subspace subspace_from_rows(const MatFq& rows);
    Subspace(MatFq basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    MatFq basis_;
    std::vector<std::size_t> pivots_;
};

/// Row space of the given matrix in canonical form. Rejects the zero space.
Subspace subspace_from_rows(const MatFq& rows);
/// rs[I_k | 0]
Subspace standard_subspace(fq_t q, std::size_t k, std::size_t n);

std::size_t intersection_dim(const Subspace& u, const Subspace& v);
/// RREF basis of U ∩ V; empty when the intersection is {0}.
std::vector<Vec> intersection_basis(const Subspace& u, const Subspace& v);
int subspace_distance(const Subspace& u, const Subspace& v);
/// rs(U A); A must be invertible.
Subspace apply_matrix(const Subspace& u, const MatFq& a);
/// rs(U A) without the invertibility check, for callers that validated A already.
Subspace apply_matrix_unchecked(const Subspace& u, const MatFq& a);

/// Number of points of G_q(k, n).
std::uint64_t gaussian_binomial(fq_t q, std::size_t n, std::size_t k);
/// Every point of G_q(k, n), ordered by pivot set and then by free entries.
std::vector<Subspace> all_subspaces(fq_t q, std::size_t k, std::size_t n);

/// G such that rs(U) = rs[I_k | 0] G: the RREF rows of U followed by the unit
/// vectors at its non-pivot positions.
MatFq completing_basis(const Subspace& u);

}  // namespace orbitcodes

template <>
struct std::hash<orbitcodes::Subspace> {
    std::size_t operator()(const orbitcodes::Subspace& s) const noexcept {
        std::size_t h = s.n() * 1315423911u + s.k();
        for (auto v : s.basis().data()) h = h * 31 + v;
        return h;
    }
};
