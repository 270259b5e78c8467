#pragma once

// Irreducible cyclic orbit codes: the orbit of a starting subspace U under the
// cyclic group generated by an irreducible matrix P.
//
// Cardinality and minimum distance are predicted from the multiset of
// differences of the "exponents" of the nonzero vectors of U. For a primitive
// generator the exponent of u is its discrete log b with phi(u) = alpha^b; for
// a non-primitive generator it is the position of u inside its P-orbit on
// F_q^n. An ordered pair (y, z) has b_z - b_y = h exactly when u_y P^h = u_z,
// so the multiplicity of h is |U ∩ U P^h| - 1 = q^j - 1 with
// j = dim(U ∩ U P^h).

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orbitcodes/gf.hpp"
#include "orbitcodes/linalg.hpp"

namespace orbitcodes {

struct OrbitCode {
    MatFq generator;
    Subspace starting_point;
    /// U P^0, U P^1, ... up to (excluding) the first return to U.
    std::vector<Subspace> codewords;
    /// Smallest m > 0 with U P^m = U.
    std::uint64_t period = 0;
    /// Unset for a single-codeword code.
    std::optional<int> min_distance;
    std::uint64_t generator_order = 0;
    bool generator_irreducible = true;

    std::size_t cardinality() const noexcept { return codewords.size(); }
};

/// Walks U, UP, UP^2, ... until the orbit closes. P must be invertible;
/// reducible generators are accepted so that oracle code can use them.
OrbitCode enumerate_orbit(const Subspace& u, const MatFq& p);

/// min_i d(U, U P^i), i in [1, period - 1].
int min_distance_from_start(const OrbitCode& code);
/// Minimum over all unordered pairs of codewords.
int min_distance_pairwise(const OrbitCode& code);
/// Full pairwise scan; throws for a code with fewer than two codewords.
int min_distance_bruteforce(const OrbitCode& code);

/// Multiset {b_m - b_l mod modulus : l != m} over ordered pairs.
struct DifferenceMultiset {
    std::uint64_t modulus = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t max_multiplicity() const noexcept;
    std::uint64_t total() const noexcept;
    std::uint64_t multiplicity(std::uint64_t residue) const noexcept;
};

DifferenceMultiset difference_multiset(const std::vector<std::uint64_t>& exponents, std::uint64_t modulus);

/// Sorted discrete logs of the q^k - 1 nonzero vectors of U. F must be primitive.
std::vector<std::uint64_t> exponent_set(const Subspace& u, const ExtField& field);

/// Rows phi^{-1}(alpha^{ic}), i < k, c = (q^n - 1)/(q^k - 1): the subfield F_{q^k}.
Subspace spread_starting_point(const ExtField& field, std::size_t k);
/// Orbit of the spread starting point under the companion matrix of the modulus.
OrbitCode build_spread_code(const ExtField& field, std::size_t k);

struct PredictedParams {
    std::uint64_t cardinality = 0;
    int min_distance = 0;
    /// Smallest d with max multiplicity <= q^d - 1.
    int d = 0;
    /// True when some difference has full multiplicity q^k - 1, i.e. the orbit
    /// revisits U before the group is exhausted.
    bool degenerate = false;
    /// Degenerate case only: d recomputed after removing full-multiplicity differences.
    std::optional<int> reduced_d;
    /// Degenerate case only: the least full-multiplicity difference m.
    std::optional<std::uint64_t> least_full_difference;
    /// Degenerate case only: the alternative reading "cardinality = m - 1".
    std::optional<std::uint64_t> cardinality_m_minus_one;
    /// Distinct-orbit case of a non-primitive generator (no repeated orbit).
    bool all_distinct_orbits = false;
    DifferenceMultiset differences;
};

PredictedParams predict_params_primitive(const Subspace& u, const ExtField& field);

struct VectorOrbitPartition {
    MatFq generator;
    std::uint64_t orbit_length = 0;
    /// Each orbit starts at its lexicographically smallest vector and follows v -> vP.
    std::vector<std::vector<Vec>> orbits;
    /// encode_coords(v) -> (orbit id, position)
    std::unordered_map<std::uint64_t, std::pair<std::size_t, std::uint64_t>> index;

    std::pair<std::size_t, std::uint64_t> locate(const Vec& v) const;
};

VectorOrbitPartition vector_orbit_partition(const MatFq& p);

PredictedParams predict_params_nonprimitive(const Subspace& u, const MatFq& p);
PredictedParams predict_params_nonprimitive(const Subspace& u, const VectorOrbitPartition& partition);

/// Dispatches on primitivity of the field modulus; the generator is its companion matrix.
PredictedParams predict_params(const Subspace& u, const ExtField& field);

struct DesignOptions {
    std::uint64_t node_budget = 1'000'000;
};

struct DesignResult {
    std::optional<Subspace> subspace;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
    /// Set when a subspace was found: oracle-confirmed orbit parameters.
    std::uint64_t cardinality = 0;
    int min_distance = 0;
};

/// Depth-first search for a k-dimensional starting point whose orbit under the
/// companion matrix of the field modulus has minimum distance >= target.
DesignResult design_starting_point(const ExtField& field, std::size_t k, int target_distance,
                                   const DesignOptions& options = {});

}  // namespace orbitcodes
