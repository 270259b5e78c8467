#include "orbitcodes/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbitcodes/error.hpp"

namespace orbitcodes {

std::string MultiIndex::to_string() const {
    const bool compact = std::all_of(idx.begin(), idx.end(), [](int v) { return v < 10; });
    std::string out;
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (!compact && s) out += ',';
        out += std::to_string(idx[s]);
    }
    return out;
}

MultiIndex make_multi_index(std::vector<int> idx, std::size_t n) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] < 1 || static_cast<std::size_t>(idx[s]) > n)
            throw InvalidArgument("multi-index entry " + std::to_string(idx[s]) + " outside [1, " + std::to_string(n) + "]");
        if (s && idx[s] <= idx[s - 1]) throw InvalidArgument("multi-index entries must be strictly increasing");
    }
    return MultiIndex{std::move(idx)};
}

std::vector<MultiIndex> all_multi_indices(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw InvalidArgument("need 1 <= k <= n");
    std::vector<MultiIndex> out;
    std::vector<int> cur(k);
    for (std::size_t s = 0; s < k; ++s) cur[s] = static_cast<int>(s) + 1;
    const int top = static_cast<int>(n);
    for (;;) {
        out.push_back(MultiIndex{cur});
        std::size_t s = k;
        while (s > 0 && cur[s - 1] == top - static_cast<int>(k - s)) --s;
        if (s == 0) break;
        ++cur[s - 1];
        for (std::size_t r = s; r < k; ++r) cur[r] = cur[r - 1] + 1;
    }
    return out;
}

bool multiindex_leq(const MultiIndex& i, const MultiIndex& j) {
    if (i.size() != j.size()) throw InvalidArgument("comparing multi-indices of different lengths");
    for (std::size_t s = 0; s < i.size(); ++s) {
        if (i.idx[s] > j.idx[s]) return false;
    }
    return true;
}

std::string PlueckerPoint::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ':';
        out += std::to_string(coords[i]);
    }
    return out + "]";
}

std::string PlueckerPoint::index_legend() const {
    std::string out;
    for (const MultiIndex& m : all_multi_indices(n, k)) {
        if (!out.empty()) out += ',';
        out += m.to_string();
    }
    return out;
}

fq_t PlueckerPoint::coordinate(const MultiIndex& index) const {
    const auto all = all_multi_indices(n, k);
    const auto it = std::find(all.begin(), all.end(), index);
    if (it == all.end()) throw InvalidArgument("multi-index does not belong to this Grassmannian");
    return coords[static_cast<std::size_t>(it - all.begin())];
}

PlueckerPoint normalize(PlueckerPoint p) {
    const auto first = std::find_if(p.coords.begin(), p.coords.end(), [](fq_t c) { return c != 0; });
    if (first == p.coords.end()) throw InvalidArgument("the zero vector has no projective point");
    const PrimeField f(p.q);
    const fq_t s = f.inv(*first);
    for (fq_t& c : p.coords) c = f.mul(c, s);
    p.normalized = true;
    return p;
}

std::vector<fq_t> maximal_minors(const MatFq& m) {
    const std::size_t k = m.rows();
    if (k > m.cols()) throw InvalidArgument("maximal minors need rows <= cols");
    std::vector<fq_t> out;
    for (const MultiIndex& cols : all_multi_indices(m.cols(), k)) {
        MatFq sub(m.q(), k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, static_cast<std::size_t>(cols.idx[c] - 1));
        out.push_back(determinant(sub));
    }
    return out;
}

PlueckerPoint pluecker_embed(const Subspace& u) {
    return normalize(PlueckerPoint{u.q(), u.n(), u.k(), maximal_minors(u.basis()), false});
}

// ---------------------------------------------------------------------------
// Wedge products

namespace {

// Parity of the permutation sorting `tuple`; nullopt if an entry repeats.
std::optional<bool> sort_is_odd(std::vector<int>& tuple) {
    bool odd = false;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return std::nullopt;
            std::swap(tuple[j - 1], tuple[j]);
            odd = !odd;
        }
    }
    return odd;
}

void accumulate(WedgeElement& into, const std::vector<int>& key, fq_t value, const PrimeField& f) {
    if (value == 0) return;
    auto [it, inserted] = into.coeffs.emplace(key, value);
    if (!inserted) {
        it->second = f.add(it->second, value);
        if (it->second == 0) into.coeffs.erase(it);
    }
}

void expand(const std::vector<Vec>& vectors, const PrimeField& f, std::size_t slot, std::vector<int>& tuple, fq_t product,
            WedgeElement& out) {
    if (slot == vectors.size()) {
        std::vector<int> sorted = tuple;
        const auto odd = sort_is_odd(sorted);
        if (!odd) return;
        accumulate(out, sorted, *odd ? f.neg(product) : product, f);
        return;
    }
    const Vec& v = vectors[slot];
    for (std::size_t e = 0; e < v.size(); ++e) {
        if (v[e] == 0) continue;
        tuple[slot] = static_cast<int>(e);
        expand(vectors, f, slot + 1, tuple, f.mul(product, v[e]), out);
    }
}

}  // namespace

WedgeElement wedge_of_vectors(const std::vector<Vec>& vectors, fq_t q) {
    if (vectors.empty()) throw InvalidArgument("wedge of an empty family");
    const PrimeField f(q);
    WedgeElement out{q, vectors.front().size(), vectors.size(), {}};
    for (const Vec& v : vectors) {
        if (v.size() != out.n) throw InvalidArgument("wedge factors have different lengths");
    }
    std::vector<int> tuple(vectors.size());
    expand(vectors, f, 0, tuple, 1, out);
    return out;
}

WedgeElement wedge_from_subspace(const Subspace& u) { return wedge_of_vectors(u.basis().to_rows(), u.q()); }

namespace {

void require_compatible(const WedgeElement& x, const ExtField& field) {
    if (x.q != field.q() || x.n != field.n()) throw InvalidArgument("wedge element and field have different parameters");
}

}  // namespace

WedgeElement wedge_star(const WedgeElement& x, const ExtElem& beta, const ExtField& field) {
    require_compatible(x, field);
    const PrimeField& f = field.base();
    WedgeElement out{x.q, x.n, x.k, {}};
    for (const auto& [exponents, c] : x.coeffs) {
        std::vector<Vec> slots;
        for (int e : exponents) slots.push_back(field.mul(field.alpha_power(e), beta).coords);
        for (const auto& [key, value] : wedge_of_vectors(slots, x.q).coeffs) accumulate(out, key, f.mul(c, value), f);
    }
    return out;
}

WedgeElement wedge_star_alpha(const WedgeElement& x, const ExtField& field) {
    require_compatible(x, field);
    const PrimeField& f = field.base();
    const std::size_t n = x.n;
    // alpha * alpha^e = alpha^{e+1}; alpha^n = -(p_0 + p_1 alpha + ... + p_{n-1} alpha^{n-1}).
    Vec wrap(n);
    for (std::size_t j = 0; j < n; ++j) wrap[j] = f.neg(field.modulus()[j]);

    WedgeElement out{x.q, x.n, x.k, {}};
    for (const auto& [exponents, c] : x.coeffs) {
        std::vector<Vec> slots;
        for (int e : exponents) {
            if (static_cast<std::size_t>(e) + 1 < n) {
                Vec unit(n, 0);
                unit[static_cast<std::size_t>(e) + 1] = 1;
                slots.push_back(std::move(unit));
            } else {
                slots.push_back(wrap);
            }
        }
        for (const auto& [key, value] : wedge_of_vectors(slots, x.q).coeffs) accumulate(out, key, f.mul(c, value), f);
    }
    return out;
}

PlueckerPoint wedge_to_pluecker(const WedgeElement& x) {
    PlueckerPoint p{x.q, x.n, x.k, {}, false};
    for (const MultiIndex& m : all_multi_indices(x.n, x.k)) {
        std::vector<int> key(m.idx);
        for (int& e : key) --e;
        const auto it = x.coeffs.find(key);
        p.coords.push_back(it == x.coeffs.end() ? 0 : it->second);
    }
    return normalize(std::move(p));
}

std::vector<PlueckerPoint> pluecker_orbit(const Subspace& u, const ExtField& field) {
    if (u.q() != field.q() || u.n() != field.n()) throw InvalidArgument("subspace and field have different parameters");
    WedgeElement x = wedge_from_subspace(u);
    const PlueckerPoint start = wedge_to_pluecker(x);
    std::vector<PlueckerPoint> orbit{start};
    for (;;) {
        x = wedge_star_alpha(x, field);
        PlueckerPoint p = wedge_to_pluecker(x);
        if (p == start) break;
        if (orbit.size() >= field.order()) throw std::logic_error("Plücker orbit longer than the order of alpha");
        orbit.push_back(std::move(p));
    }
    return orbit;
}

bool satisfies_pluecker_relations(const PlueckerPoint& p) {
    const PrimeField f(p.q);
    const std::size_t k = p.k;
    const std::size_t n = p.n;
    if (k < 2 || k + 1 > n) return true;
    const auto lex = all_multi_indices(n, k);

    // Antisymmetric extension: p(tuple) = sign * p(sorted), 0 on repeats.
    auto coord = [&](std::vector<int> tuple) -> fq_t {
        const auto odd = sort_is_odd(tuple);
        if (!odd) return 0;
        const auto it = std::lower_bound(lex.begin(), lex.end(), MultiIndex{tuple});
        const fq_t v = p.coords[static_cast<std::size_t>(it - lex.begin())];
        return *odd ? f.neg(v) : v;
    };

    for (const MultiIndex& small : all_multi_indices(n, k - 1)) {
        for (const MultiIndex& large : all_multi_indices(n, k + 1)) {
            fq_t sum = 0;
            for (std::size_t l = 0; l <= k; ++l) {
                std::vector<int> left = small.idx;
                left.push_back(large.idx[l]);
                std::vector<int> right;
                for (std::size_t r = 0; r <= k; ++r)
                    if (r != l) right.push_back(large.idx[r]);
                const fq_t term = f.mul(coord(left), coord(right));
                sum = (l % 2 == 0) ? f.add(sum, term) : f.sub(sum, term);
            }
            if (sum != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Balls and Schubert varieties

MultiIndex ball_multi_index(std::size_t k, std::size_t n, std::size_t t) {
    if (t > k) throw InvalidArgument("ball radius parameter t must satisfy 0 <= t <= k");
    std::vector<int> idx;
    for (std::size_t s = t + 1; s <= k; ++s) idx.push_back(static_cast<int>(s));
    for (std::size_t s = n - t + 1; s <= n; ++s) idx.push_back(static_cast<int>(s));
    return MultiIndex{std::move(idx)};
}

namespace {

std::optional<MultiIndex> first_violation(const MatFq& rows, const MultiIndex& bound) {
    const auto minors = maximal_minors(rows);
    const auto indices = all_multi_indices(rows.cols(), rows.rows());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (minors[j] != 0 && !multiindex_leq(indices[j], bound)) return indices[j];
    }
    return std::nullopt;
}

}  // namespace

std::optional<MultiIndex> ball_center0_violation(const Subspace& v, std::size_t t) {
    return first_violation(v.basis(), ball_multi_index(v.k(), v.n(), t));
}

bool ball_membership_center0(const Subspace& v, std::size_t t) { return !ball_center0_violation(v, t).has_value(); }

BallVerdict ball_membership(const Subspace& v, const Subspace& u, std::size_t t) {
    if (u.q() != v.q() || u.n() != v.n() || u.k() != v.k()) throw InvalidArgument("ball membership needs points of the same Grassmannian");
    if (t > u.k()) throw InvalidArgument("ball radius parameter t must satisfy 0 <= t <= k");
    BallVerdict verdict;
    verdict.intersection_dim = intersection_dim(u, v);
    verdict.by_intersection = verdict.intersection_dim + t >= u.k();

    const MatFq g = completing_basis(u);
    const Subspace moved = apply_matrix_unchecked(v, inverse(g));
    verdict.violated_index = ball_center0_violation(moved, t);
    verdict.by_pluecker = !verdict.violated_index.has_value();
    return verdict;
}

namespace {

MatFq adapted_basis_of(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw InvalidArgument("a flag needs at least one subspace");
    const std::size_t n = spaces.size();
    const fq_t q = spaces.front().q();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const Subspace& s = spaces[i];
        if (s.q() != q || s.n() != n || s.k() != i + 1)
            throw InvalidArgument("flag subspace " + std::to_string(i + 1) + " must have dimension " + std::to_string(i + 1) +
                                  " in F_q^" + std::to_string(n));
        if (i > 0 && intersection_dim(spaces[i - 1], s) != i) throw InvalidArgument("flag subspaces are not nested");
        bool extended = false;
        for (const Vec& cand : s.basis().to_rows()) {
            std::vector<Vec> trial = rows;
            trial.push_back(cand);
            if (rank(MatFq(q, trial)) == i + 1) {
                rows = std::move(trial);
                extended = true;
                break;
            }
        }
        if (!extended) throw InvalidArgument("flag subspaces are not nested");
    }
    return MatFq(q, rows);
}

}  // namespace

Flag::Flag(std::vector<Subspace> spaces) : spaces_(std::move(spaces)), basis_(adapted_basis_of(spaces_)) {}

Flag Flag::from_basis(const MatFq& basis) {
    if (!is_invertible(basis)) throw InvalidArgument("flag basis must be an invertible matrix");
    std::vector<Subspace> spaces;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        rows.push_back(basis.row_vec(i));
        spaces.push_back(subspace_from_rows(MatFq(basis.q(), rows)));
    }
    return Flag(std::move(spaces));
}

Flag Flag::through(const Subspace& u) { return from_basis(completing_basis(u)); }

SchubertVerdict schubert_membership(const Subspace& v, const Flag& flag, const MultiIndex& i) {
    if (flag.q() != v.q() || flag.n() != v.n()) throw InvalidArgument("flag and subspace live in different spaces");
    make_multi_index(i.idx, v.n());
    if (i.size() != v.k()) throw InvalidArgument("multi-index length must equal dim V");

    SchubertVerdict verdict;
    verdict.by_intersection = true;
    for (std::size_t s = 1; s <= v.k(); ++s) {
        const Subspace& ref = flag.space(static_cast<std::size_t>(i.idx[s - 1]));
        if (intersection_dim(v, ref) < s) {
            verdict.by_intersection = false;
            verdict.failed_condition = s;
            break;
        }
    }
    // Coordinates with respect to the flag-adapted basis: v = c E  =>  c = v E^{-1}.
    const MatFq in_flag_basis = v.basis() * inverse(flag.adapted_basis());
    verdict.violated_index = first_violation(in_flag_basis, i);
    verdict.by_pluecker = !verdict.violated_index.has_value();
    return verdict;
}

}  // namespace orbitcodes
