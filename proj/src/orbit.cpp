#include "orbitcodes/orbit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orbitcodes/error.hpp"

namespace orbitcodes {

OrbitCode enumerate_orbit(const Subspace& u, const MatFq& p) {
    if (p.q() != u.q() || !p.is_square() || p.rows() != u.n())
        throw InvalidArgument("generator does not act on the ambient space of the starting point");
    const std::uint64_t order = matrix_order(p);  // rejects singular generators

    OrbitCode code{p, u, {u}, 0, std::nullopt, order, is_irreducible_matrix(p)};
    Subspace cur = apply_matrix_unchecked(u, p);
    while (!(cur == u)) {
        if (code.codewords.size() >= order) throw std::logic_error("orbit longer than the generator order");
        code.codewords.push_back(cur);
        cur = apply_matrix_unchecked(cur, p);
    }
    code.period = code.codewords.size();
    if (code.period >= 2) code.min_distance = min_distance_from_start(code);
    return code;
}

int min_distance_from_start(const OrbitCode& code) {
    if (code.codewords.size() < 2) throw InvalidArgument("minimum distance needs at least two codewords");
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 1; i < code.codewords.size(); ++i)
        best = std::min(best, subspace_distance(code.codewords.front(), code.codewords[i]));
    return best;
}

int min_distance_pairwise(const OrbitCode& code) {
    if (code.codewords.size() < 2) throw InvalidArgument("minimum distance needs at least two codewords");
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        for (std::size_t j = i + 1; j < code.codewords.size(); ++j)
            best = std::min(best, subspace_distance(code.codewords[i], code.codewords[j]));
    return best;
}

int min_distance_bruteforce(const OrbitCode& code) { return min_distance_pairwise(code); }

// ---------------------------------------------------------------------------
// Difference multisets

std::uint64_t DifferenceMultiset::max_multiplicity() const noexcept {
    std::uint64_t best = 0;
    for (const auto& [residue, count] : counts) best = std::max(best, count);
    return best;
}

std::uint64_t DifferenceMultiset::total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& [residue, count] : counts) sum += count;
    return sum;
}

std::uint64_t DifferenceMultiset::multiplicity(std::uint64_t residue) const noexcept {
    const auto it = counts.find(residue);
    return it == counts.end() ? 0 : it->second;
}

DifferenceMultiset difference_multiset(const std::vector<std::uint64_t>& exponents, std::uint64_t modulus) {
    if (modulus == 0) throw InvalidArgument("difference multiset needs a positive modulus");
    std::vector<std::uint64_t> reduced(exponents.size());
    std::transform(exponents.begin(), exponents.end(), reduced.begin(), [&](std::uint64_t b) { return b % modulus; });
    std::vector<std::uint64_t> sorted = reduced;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("exponents must be pairwise distinct modulo " + std::to_string(modulus));

    DifferenceMultiset d{modulus, {}};
    for (std::size_t l = 0; l < reduced.size(); ++l) {
        for (std::size_t m = 0; m < reduced.size(); ++m) {
            if (l == m) continue;
            const std::uint64_t diff = (reduced[m] + modulus - reduced[l]) % modulus;
            ++d.counts[diff];
        }
    }
    return d;
}

std::vector<std::uint64_t> exponent_set(const Subspace& u, const ExtField& field) {
    if (u.q() != field.q() || u.n() != field.n()) throw InvalidArgument("subspace and field have different parameters");
    std::vector<std::uint64_t> logs;
    for (const Vec& v : u.nonzero_vectors()) logs.push_back(field.discrete_log(field.element(v)));
    std::sort(logs.begin(), logs.end());
    return logs;
}

// ---------------------------------------------------------------------------
// Spread codes

Subspace spread_starting_point(const ExtField& field, std::size_t k) {
    const std::size_t n = field.n();
    if (k == 0 || k > n || n % k != 0)
        throw InvalidArgument("spread codes need k | n; got k = " + std::to_string(k) + ", n = " + std::to_string(n));
    if (!field.is_primitive())
        throw PreconditionError("spread construction needs a primitive polynomial; " + field.modulus().to_string() + " has order " +
                                std::to_string(field.order()));
    const std::uint64_t c = (field.size() - 1) / (checked_power(field.q(), static_cast<unsigned>(k)) - 1);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(field.alpha_power(static_cast<std::int64_t>(i * c)).coords);
    return subspace_from_rows(MatFq(field.q(), rows));
}

OrbitCode build_spread_code(const ExtField& field, std::size_t k) {
    return enumerate_orbit(spread_starting_point(field, k), companion_matrix(field.modulus()));
}

// ---------------------------------------------------------------------------
// Predictors

namespace {

// Smallest d with bound <= q^d - 1.
int min_exponent_for(std::uint64_t bound, fq_t q) {
    int d = 0;
    std::uint64_t power = 1;
    while (power - 1 < bound) {
        power *= q;
        ++d;
    }
    return d;
}

PredictedParams evaluate_differences(DifferenceMultiset differences, fq_t q, std::size_t k, std::uint64_t group_order) {
    PredictedParams out;
    const std::uint64_t full = checked_power(q, static_cast<unsigned>(k)) - 1;
    out.d = min_exponent_for(differences.max_multiplicity(), q);

    std::optional<std::uint64_t> least_full;
    std::uint64_t reduced_max = 0;
    for (const auto& [residue, count] : differences.counts) {
        if (count == full) {
            if (!least_full) least_full = residue;
        } else {
            reduced_max = std::max(reduced_max, count);
        }
    }

    const auto ki = static_cast<int>(k);
    if (!least_full) {
        out.cardinality = group_order;
        out.min_distance = 2 * ki - 2 * out.d;
    } else {
        // Some U P^m = U: the orbit closes at the least such m, and only the
        // non-full differences describe intersections between distinct codewords.
        out.degenerate = true;
        out.least_full_difference = *least_full;
        out.cardinality = *least_full;
        out.cardinality_m_minus_one = *least_full - 1;
        out.reduced_d = min_exponent_for(reduced_max, q);
        out.min_distance = 2 * ki - 2 * *out.reduced_d;
    }
    out.differences = std::move(differences);
    return out;
}

}  // namespace

PredictedParams predict_params_primitive(const Subspace& u, const ExtField& field) {
    if (!field.is_primitive())
        throw PreconditionError("the primitive predictor needs a primitive polynomial; " + field.modulus().to_string() + " is not");
    const std::vector<std::uint64_t> b = exponent_set(u, field);
    return evaluate_differences(difference_multiset(b, field.size() - 1), field.q(), u.k(), field.size() - 1);
}

std::pair<std::size_t, std::uint64_t> VectorOrbitPartition::locate(const Vec& v) const {
    const auto it = index.find(encode_coords(v, generator.q()));
    if (it == index.end()) throw InvalidArgument("vector is zero or has the wrong length");
    return it->second;
}

namespace {

constexpr std::uint64_t kPartitionCap = std::uint64_t{1} << 24;

// Coordinate tuple for the code-th vector in lexicographic order (coords[0] most significant).
Vec lexicographic_vector(std::uint64_t code, fq_t q, std::size_t n) {
    Vec v = decode_coords(code, q, static_cast<unsigned>(n));
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

VectorOrbitPartition vector_orbit_partition(const MatFq& p) {
    if (!p.is_square()) throw InvalidArgument("generator must be square");
    if (!is_irreducible_matrix(p)) throw PreconditionError("vector orbit partition needs an irreducible generator");
    const fq_t q = p.q();
    const std::size_t n = p.rows();
    const std::uint64_t size = checked_power(q, static_cast<unsigned>(n));
    if (size > kPartitionCap) throw PreconditionError("ambient space too large to partition explicitly");

    VectorOrbitPartition part{p, matrix_order(p), {}, {}};
    part.index.reserve(size);
    for (std::uint64_t code = 1; code < size; ++code) {
        Vec seed = lexicographic_vector(code, q, n);
        if (part.index.contains(encode_coords(seed, q))) continue;
        const std::size_t id = part.orbits.size();
        std::vector<Vec> orbit;
        Vec cur = seed;
        for (std::uint64_t pos = 0; pos < part.orbit_length; ++pos) {
            part.index.emplace(encode_coords(cur, q), std::make_pair(id, pos));
            orbit.push_back(cur);
            cur = vector_mul(cur, p);
        }
        if (cur != seed) throw std::logic_error("vector orbit length differs from the generator order");
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

PredictedParams predict_params_nonprimitive(const Subspace& u, const VectorOrbitPartition& partition) {
    const MatFq& p = partition.generator;
    if (u.q() != p.q() || u.n() != p.rows()) throw InvalidArgument("subspace and generator have different parameters");
    const std::uint64_t group = checked_power(p.q(), static_cast<unsigned>(p.rows())) - 1;
    if (partition.orbit_length == group)
        throw PreconditionError("generator is primitive; use the primitive predictor");

    // Per-orbit exponent sets b_(i, .), merged into D = union of the D_i.
    std::map<std::size_t, std::vector<std::uint64_t>> per_orbit;
    for (const Vec& v : u.nonzero_vectors()) {
        const auto [orbit, position] = partition.locate(v);
        per_orbit[orbit].push_back(position);
    }
    DifferenceMultiset merged{partition.orbit_length, {}};
    bool distinct = true;
    for (const auto& [orbit, positions] : per_orbit) {
        if (positions.size() > 1) distinct = false;
        for (const auto& [residue, count] : difference_multiset(positions, partition.orbit_length).counts)
            merged.counts[residue] += count;
    }
    PredictedParams out = evaluate_differences(std::move(merged), p.q(), u.k(), partition.orbit_length);
    out.all_distinct_orbits = distinct;
    return out;
}

PredictedParams predict_params_nonprimitive(const Subspace& u, const MatFq& p) {
    return predict_params_nonprimitive(u, vector_orbit_partition(p));
}

PredictedParams predict_params(const Subspace& u, const ExtField& field) {
    if (field.is_primitive()) return predict_params_primitive(u, field);
    return predict_params_nonprimitive(u, companion_matrix(field.modulus()));
}

// ---------------------------------------------------------------------------
// Starting-point design

namespace {

class StartingPointSearch {
public:
    StartingPointSearch(const ExtField& field, std::size_t k, int target, std::uint64_t budget)
        : field_(field), k_(k), target_(target), budget_(budget), group_(field.order()) {
        const auto allowed = static_cast<int>(k) - target / 2;
        threshold_ = checked_power(field.q(), static_cast<unsigned>(std::max(allowed, 0)));

        if (field.is_primitive()) {
            ExtElem cur = field.one();
            for (std::uint64_t e = 0; e + 1 < field.size(); ++e) {
                locations_.emplace(encode_coords(cur.coords, field.q()), std::make_pair(std::size_t{0}, e));
                candidates_.push_back(cur.coords);
                cur = field.mul_alpha(cur);
            }
            roots_ = 1;
        } else {
            partition_.emplace(vector_orbit_partition(companion_matrix(field.modulus())));
            for (const auto& orbit : partition_->orbits) candidates_.insert(candidates_.end(), orbit.begin(), orbit.end());
            locations_ = partition_->index;
            roots_ = partition_->orbits.size();
        }

        // alpha^h can fix a k-dimensional space only if it lies in a subfield
        // F_{q^s} with s | gcd(k, n); such differences may legitimately reach
        // full multiplicity without shrinking the distance.
        const std::size_t g = std::gcd(k, static_cast<std::size_t>(field.n()));
        for (std::size_t s = 1; s <= g; ++s) {
            if (g % s == 0) subfield_orders_.push_back(checked_power(field.q(), static_cast<unsigned>(s)) - 1);
        }
    }

    DesignResult run() {
        DesignResult result;
        const std::size_t root_stride = field_.is_primitive() ? 0 : field_.order();
        for (std::size_t r = 0; r < roots_ && !found_ && !exhausted_; ++r) {
            const std::size_t root_index = r * root_stride;
            const Subspace start = subspace_from_rows(MatFq(field_.q(), {candidates_[root_index]}));
            if (!count_node()) break;
            if (!prunable(start)) search(start, root_index);
        }
        result.nodes_explored = nodes_;
        result.budget_exhausted = exhausted_ && !found_;
        result.subspace = found_;
        return result;
    }

private:
    bool count_node() {
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    DifferenceMultiset profile(const Subspace& s) const {
        std::map<std::size_t, std::vector<std::uint64_t>> per_orbit;
        for (const Vec& v : s.nonzero_vectors()) {
            const auto& loc = locations_.at(encode_coords(v, field_.q()));
            per_orbit[loc.first].push_back(loc.second);
        }
        DifferenceMultiset merged{group_, {}};
        for (const auto& [orbit, positions] : per_orbit)
            for (const auto& [residue, count] : difference_multiset(positions, group_).counts) merged.counts[residue] += count;
        return merged;
    }

    bool may_stabilize(std::uint64_t h) const {
        for (std::uint64_t sub : subfield_orders_) {
            const unsigned __int128 prod = static_cast<unsigned __int128>(h) * sub;
            if (prod % group_ == 0) return true;
        }
        return false;
    }

    // Intersections only grow when the span grows, so a non-stabilizing shift
    // that already meets the current span in too many vectors rules out every
    // extension.
    bool prunable(const Subspace& s) const {
        for (const auto& [h, count] : profile(s).counts) {
            if (count >= threshold_ && !may_stabilize(h)) return true;
        }
        return false;
    }

    void search(const Subspace& s, std::size_t last) {
        if (s.k() == k_) {
            const PredictedParams pred = evaluate_differences(profile(s), field_.q(), k_, group_);
            if (pred.cardinality >= 2 && pred.min_distance >= target_) found_ = s;
            return;
        }
        for (std::size_t idx = last + 1; idx < candidates_.size() && !found_ && !exhausted_; ++idx) {
            if (s.contains(candidates_[idx])) continue;
            if (!count_node()) return;
            const Subspace next = subspace_from_rows(vstack(s.basis(), MatFq(field_.q(), {candidates_[idx]})));
            if (prunable(next)) continue;
            search(next, idx);
        }
    }

    const ExtField& field_;
    std::size_t k_;
    int target_;
    std::uint64_t budget_;
    std::uint64_t group_;
    std::uint64_t threshold_ = 1;
    std::vector<Vec> candidates_;
    std::unordered_map<std::uint64_t, std::pair<std::size_t, std::uint64_t>> locations_;
    std::optional<VectorOrbitPartition> partition_;
    std::size_t roots_ = 1;
    std::vector<std::uint64_t> subfield_orders_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::optional<Subspace> found_;
};

}  // namespace

DesignResult design_starting_point(const ExtField& field, std::size_t k, int target_distance, const DesignOptions& options) {
    if (k == 0 || k >= field.n())
        throw InvalidArgument("starting-point design needs 1 <= k < n; got k = " + std::to_string(k));
    if (target_distance < 0 || target_distance % 2 != 0)
        throw InvalidArgument("target distance must be a non-negative even integer");
    if (target_distance > 2 * static_cast<int>(k)) return DesignResult{};

    DesignResult result = StartingPointSearch(field, k, target_distance, options.node_budget).run();
    if (result.subspace) {
        const OrbitCode code = enumerate_orbit(*result.subspace, companion_matrix(field.modulus()));
        if (!code.min_distance || *code.min_distance < target_distance)
            throw std::logic_error("designed starting point fails the orbit check");
        result.cardinality = code.cardinality();
        result.min_distance = *code.min_distance;
    }
    return result;
}

}  // namespace orbitcodes
