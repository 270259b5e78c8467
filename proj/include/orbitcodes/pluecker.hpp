#pragma once

// Plücker embedding of G_q(k, n), the wedge-product model of the same
// embedding with the alpha-action, and ball/Schubert membership tests.
//
// Matrix-column multi-indices are 1-based (1 <= i_1 < ... < i_k <= n). Wedge
// monomials alpha^{e_1} ∧ ... ∧ alpha^{e_k} use 0-based exponents; the
// column j of a matrix corresponds to the exponent j - 1.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcodes/gf.hpp"
#include "orbitcodes/linalg.hpp"

namespace orbitcodes {

struct MultiIndex {
    std::vector<int> idx;

    std::size_t size() const noexcept { return idx.size(); }
    /// Concatenated digits when every index is < 10 ("34"), comma-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Validates strictly increasing entries in [1, n].
MultiIndex make_multi_index(std::vector<int> idx, std::size_t n);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<MultiIndex> all_multi_indices(std::size_t n, std::size_t k);

/// Bruhat order: i <= j iff i_s <= j_s for every position s.
bool multiindex_leq(const MultiIndex& i, const MultiIndex& j);

struct PlueckerPoint {
    fq_t q = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    /// Indexed like all_multi_indices(n, k).
    std::vector<fq_t> coords;
    bool normalized = false;

    /// "[1:1:0:0:0:0]"
    std::string to_string() const;
    /// "12,13,14,23,24,34"
    std::string index_legend() const;
    fq_t coordinate(const MultiIndex& index) const;

    friend bool operator==(const PlueckerPoint&, const PlueckerPoint&) = default;
};

/// Scales by the inverse of the first nonzero coordinate.
PlueckerPoint normalize(PlueckerPoint p);

/// All maximal minors det(M[i]) of a k x n matrix, in lexicographic index order.
std::vector<fq_t> maximal_minors(const MatFq& m);

PlueckerPoint pluecker_embed(const Subspace& u);

/// Sum of coeff * (alpha^{e_1} ∧ ... ∧ alpha^{e_k}) over sorted 0-based exponent tuples.
struct WedgeElement {
    fq_t q = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    std::map<std::vector<int>, fq_t> coeffs;

    friend bool operator==(const WedgeElement&, const WedgeElement&) = default;
};

/// v_1 ∧ ... ∧ v_k expanded over the monomial basis with permutation signs.
WedgeElement wedge_of_vectors(const std::vector<Vec>& vectors, fq_t q);
WedgeElement wedge_from_subspace(const Subspace& u);
/// (v_1 ∧ ... ∧ v_k) * beta = (v_1 beta ∧ ... ∧ v_k beta), extended linearly.
WedgeElement wedge_star(const WedgeElement& x, const ExtElem& beta, const ExtField& field);
WedgeElement wedge_star_alpha(const WedgeElement& x, const ExtField& field);
/// Reads the coefficients in lexicographic order and normalizes. Throws on the zero element.
PlueckerPoint wedge_to_pluecker(const WedgeElement& x);

/// phi'(U) * alpha^i for i = 0, 1, ... until the sequence returns to phi'(U).
std::vector<PlueckerPoint> pluecker_orbit(const Subspace& u, const ExtField& field);

/// Single-exchange Grassmann–Plücker relations; true iff all vanish.
bool satisfies_pluecker_relations(const PlueckerPoint& p);

/// (t+1, ..., k, n-t+1, ..., n)
MultiIndex ball_multi_index(std::size_t k, std::size_t n, std::size_t t);

/// First Plücker coordinate of V that must vanish for V ∈ B_{2t}(U_0) but does not.
std::optional<MultiIndex> ball_center0_violation(const Subspace& v, std::size_t t);
/// V ∈ B_{2t}(rs[I_k | 0]) decided from Plücker coordinates alone.
bool ball_membership_center0(const Subspace& v, std::size_t t);

struct BallVerdict {
    bool by_intersection = false;
    bool by_pluecker = false;
    std::size_t intersection_dim = 0;
    /// Violated vanishing condition after transporting V to the standard center.
    std::optional<MultiIndex> violated_index;

    bool agree() const noexcept { return by_intersection == by_pluecker; }
    bool member() const noexcept { return by_intersection; }
};

/// V ∈ B_{2t}(U): dim(U ∩ V) >= k - t, and the same test via U = U_0 G and V G^{-1}.
BallVerdict ball_membership(const Subspace& v, const Subspace& u, std::size_t t);

/// V_1 ⊂ V_2 ⊂ ... ⊂ V_n = F_q^n with dim V_i = i.
class Flag {
public:
    explicit Flag(std::vector<Subspace> spaces);
    /// V_i = span of the first i rows of an invertible matrix.
    static Flag from_basis(const MatFq& basis);
    /// Flag through U (V_k = U) adapted to completing_basis(U).
    static Flag through(const Subspace& u);

    std::size_t n() const noexcept { return spaces_.size(); }
    fq_t q() const noexcept { return spaces_.front().q(); }
    /// 1-based: space(i) has dimension i.
    const Subspace& space(std::size_t i) const { return spaces_.at(i - 1); }
    /// Rows e_1..e_n with span(e_1..e_i) = V_i.
    const MatFq& adapted_basis() const noexcept { return basis_; }

private:
    std::vector<Subspace> spaces_;
    MatFq basis_;
};

struct SchubertVerdict {
    bool by_intersection = false;
    bool by_pluecker = false;
    /// First s with dim(V ∩ V_{i_s}) < s.
    std::optional<std::size_t> failed_condition;
    /// First j not <= i with x_j != 0 in the flag-adapted basis.
    std::optional<MultiIndex> violated_index;

    bool agree() const noexcept { return by_intersection == by_pluecker; }
    bool member() const noexcept { return by_intersection; }
};

/// V ∈ S(i; F) = {V : dim(V ∩ V_{i_s}) >= s for all s}, evaluated directly and
/// through the vanishing of Plücker coordinates x_j, j not <= i.
SchubertVerdict schubert_membership(const Subspace& v, const Flag& flag, const MultiIndex& i);

}  // namespace orbitcodes
