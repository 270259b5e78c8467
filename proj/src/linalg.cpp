#include "orbitcodes/linalg.hpp"

#include <algorithm>
#include <string>

#include "orbitcodes/error.hpp"

namespace orbitcodes {

MatFq::MatFq(fq_t q, std::size_t rows, std::size_t cols) : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!is_prime(q)) throw InvalidArgument("field size q = " + std::to_string(q) + " is not prime");
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
}

MatFq::MatFq(fq_t q, const std::vector<Vec>& rows)
    : MatFq(q, rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t r = 0; r < rows_; ++r) {
        if (rows[r].size() != cols_) throw InvalidArgument("matrix rows have different lengths");
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rows[r][c] >= q) throw InvalidArgument("matrix entry out of range for q = " + std::to_string(q));
            (*this)(r, c) = rows[r][c];
        }
    }
}

MatFq MatFq::identity(fq_t q, std::size_t n) {
    MatFq m(q, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Vec> MatFq::to_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

MatFq operator*(const MatFq& a, const MatFq& b) {
    if (a.q() != b.q() || a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
    const PrimeField f(a.q());
    MatFq c(a.q(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const fq_t x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
        }
    }
    return c;
}

MatFq operator+(const MatFq& a, const MatFq& b) {
    if (a.q() != b.q() || a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum dimension mismatch");
    const PrimeField f(a.q());
    MatFq c(a.q(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    return c;
}

RrefResult rref(const MatFq& m) {
    const PrimeField f(m.q());
    MatFq a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
        }
        const fq_t s = f.inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), s);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const fq_t factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), row, std::move(pivots)};
}

std::size_t rank(const MatFq& m) { return rref(m).rank; }

fq_t determinant(const MatFq& m) {
    if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
    const PrimeField f(m.q());
    MatFq a = m;
    const std::size_t n = a.rows();
    fq_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
            det = f.neg(det);
        }
        det = f.mul(det, a(col, col));
        const fq_t s = f.inv(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const fq_t factor = f.mul(a(r, col), s);
            for (std::size_t c = col; c < n; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(col, c)));
        }
    }
    return det;
}

bool is_invertible(const MatFq& m) { return m.is_square() && rank(m) == m.rows(); }

MatFq inverse(const MatFq& m) {
    if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    MatFq aug(m.q(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    MatFq inv(m.q(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
    return inv;
}

MatFq matrix_power(const MatFq& m, std::uint64_t e) {
    if (!m.is_square()) throw InvalidArgument("power of a non-square matrix");
    MatFq result = MatFq::identity(m.q(), m.rows());
    MatFq base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

MatFq vstack(const MatFq& a, const MatFq& b) {
    if (a.q() != b.q() || a.cols() != b.cols()) throw InvalidArgument("vstack dimension mismatch");
    MatFq c(a.q(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = a(r, j);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + r, j) = b(r, j);
    return c;
}

Vec vector_mul(std::span<const fq_t> v, const MatFq& a) {
    if (v.size() != a.rows()) throw InvalidArgument("vector length does not match matrix rows");
    const PrimeField f(a.q());
    Vec out(a.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= a.q()) throw InvalidArgument("vector entry out of range");
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], a(i, j)));
    }
    return out;
}

PolyFq characteristic_polynomial(const MatFq& m) {
    if (!m.is_square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
    const fq_t q = m.q();
    const PrimeField f(q);
    const std::size_t n = m.rows();
    MatFq h = m;

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        const std::size_t sub = j + 1;
        std::size_t sel = sub;
        while (sel < n && h(sel, j) == 0) ++sel;
        if (sel == n) continue;
        if (sel != sub) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(sel, c), h(sub, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, sel), h(r, sub));
        }
        const fq_t s = f.inv(h(sub, j));
        for (std::size_t r = sub + 1; r < n; ++r) {
            const fq_t factor = f.mul(h(r, j), s);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(factor, h(sub, c)));
            for (std::size_t rr = 0; rr < n; ++rr) h(rr, sub) = f.add(h(rr, sub), f.mul(factor, h(rr, r)));
        }
    }

    // p_0 = 1, p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}  (1-based)
    const PolyFq x = PolyFq::monomial(q, 1);
    std::vector<PolyFq> p{PolyFq::constant(q, 1)};
    for (std::size_t mm = 1; mm <= n; ++mm) {
        PolyFq next = (x - PolyFq::constant(q, h(mm - 1, mm - 1))) * p[mm - 1];
        fq_t prod = 1;
        for (std::size_t i = mm - 1; i >= 1; --i) {
            prod = f.mul(prod, h(i, i - 1));
            if (prod == 0) break;
            const fq_t coef = f.mul(h(i - 1, mm - 1), prod);
            next = next - PolyFq::constant(q, coef) * p[i - 1];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

MatFq companion_matrix(const PolyFq& p) {
    if (p.degree() < 1) throw InvalidArgument("companion matrix needs a polynomial of degree >= 1");
    if (!p.is_monic()) throw InvalidArgument("companion matrix needs a monic polynomial; got " + p.to_string());
    const PrimeField f(p.q());
    const auto n = static_cast<std::size_t>(p.degree());
    MatFq c(p.q(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = f.neg(p[j]);
    return c;
}

std::uint64_t matrix_order(const MatFq& a) {
    if (!is_invertible(a)) throw PreconditionError("order is only defined for invertible matrices");
    const PolyFq chi = characteristic_polynomial(a);
    if (is_irreducible(chi)) return poly_order(chi);

    // Reducible: the order of any element of GL_n(q) is at most q^n - 1.
    constexpr std::uint64_t kIterationCap = std::uint64_t{1} << 24;
    const std::uint64_t bound = checked_power(a.q(), static_cast<unsigned>(a.rows()));
    if (bound > kIterationCap) throw PreconditionError("order of a reducible matrix this large is not supported");
    const MatFq id = MatFq::identity(a.q(), a.rows());
    MatFq cur = a;
    for (std::uint64_t m = 1; m < bound; ++m) {
        if (cur == id) return m;
        cur = cur * a;
    }
    throw PreconditionError("matrix order exceeds q^n - 1");
}

bool is_irreducible_matrix(const MatFq& a) {
    if (!is_invertible(a)) return false;
    return is_irreducible(characteristic_polynomial(a));
}

// ---------------------------------------------------------------------------
// Subspace

Subspace subspace_from_rows(const MatFq& rows) {
    RrefResult red = rref(rows);
    if (red.rank == 0) throw InvalidArgument("the zero space is not a point of any Grassmannian G(k, n) with k >= 1");
    MatFq basis(rows.q(), red.rank, rows.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) basis(r, c) = red.matrix(r, c);
    return Subspace(std::move(basis), std::move(red.pivots));
}

Subspace standard_subspace(fq_t q, std::size_t k, std::size_t n) {
    if (k == 0 || k > n) throw InvalidArgument("need 1 <= k <= n");
    MatFq m(q, k, n);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return subspace_from_rows(m);
}

bool Subspace::contains(std::span<const fq_t> v) const {
    if (v.size() != n()) throw InvalidArgument("vector length does not match ambient dimension");
    // Reduce v against the RREF basis; v is in the span iff the residue vanishes.
    const PrimeField f(q());
    Vec r(v.begin(), v.end());
    for (std::size_t i = 0; i < k(); ++i) {
        const fq_t c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n(); ++j) r[j] = f.sub(r[j], f.mul(c, basis_(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](fq_t x) { return x == 0; });
}

std::vector<Vec> Subspace::nonzero_vectors() const {
    const PrimeField f(q());
    const std::uint64_t count = checked_power(q(), static_cast<unsigned>(k()));
    std::vector<Vec> out;
    out.reserve(count - 1);
    for (std::uint64_t code = 1; code < count; ++code) {
        const auto coef = decode_coords(code, q(), static_cast<unsigned>(k()));
        Vec v(n(), 0);
        for (std::size_t i = 0; i < k(); ++i) {
            if (coef[i] == 0) continue;
            for (std::size_t j = 0; j < n(); ++j) v[j] = f.add(v[j], f.mul(coef[i], basis_(i, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.q() != v.q() || u.n() != v.n()) throw InvalidArgument("subspaces live in different ambient spaces");
}

}  // namespace

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    return u.k() + v.k() - rank(vstack(u.basis(), v.basis()));
}

std::vector<Vec> intersection_basis(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    // Zassenhaus: rows (u | u) and (v | 0); after RREF, rows with zero left
    // half carry a basis of U ∩ V in their right half.
    const std::size_t n = u.n();
    MatFq z(u.q(), u.k() + v.k(), 2 * n);
    for (std::size_t r = 0; r < u.k(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(r, c) = z(r, n + c) = u.basis()(r, c);
    for (std::size_t r = 0; r < v.k(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(u.k() + r, c) = v.basis()(r, c);
    const RrefResult red = rref(z);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < red.rank; ++r) {
        if (red.pivots[r] < n) continue;
        rows.emplace_back(red.matrix.row(r).begin() + static_cast<std::ptrdiff_t>(n), red.matrix.row(r).end());
    }
    if (rows.empty()) return rows;
    return subspace_from_rows(MatFq(u.q(), rows)).basis().to_rows();
}

int subspace_distance(const Subspace& u, const Subspace& v) {
    const std::size_t common = intersection_dim(u, v);
    return static_cast<int>(u.k() + v.k()) - 2 * static_cast<int>(common);
}

Subspace apply_matrix_unchecked(const Subspace& u, const MatFq& a) {
    if (a.q() != u.q() || a.rows() != u.n() || a.cols() != u.n())
        throw InvalidArgument("matrix does not act on the ambient space of the subspace");
    return subspace_from_rows(u.basis() * a);
}

Subspace apply_matrix(const Subspace& u, const MatFq& a) {
    if (a.q() != u.q() || a.rows() != u.n() || a.cols() != u.n())
        throw InvalidArgument("matrix does not act on the ambient space of the subspace");
    if (!is_invertible(a)) throw PreconditionError("the group action needs an invertible matrix");
    return apply_matrix_unchecked(u, a);
}

std::uint64_t gaussian_binomial(fq_t q, std::size_t n, std::size_t k) {
    if (k > n) return 0;
    // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), kept exact by dividing as we go.
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t num = checked_power(q, static_cast<unsigned>(n - i)) - 1;
        const std::uint64_t den = checked_power(q, static_cast<unsigned>(i + 1)) - 1;
        const unsigned __int128 wide = static_cast<unsigned __int128>(result) * num;
        result = static_cast<std::uint64_t>(wide / den);
    }
    return result;
}

std::vector<Subspace> all_subspaces(fq_t q, std::size_t k, std::size_t n) {
    if (k == 0 || k > n) throw InvalidArgument("need 1 <= k <= n");
    std::vector<Subspace> out;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = piv[r] + 1; c < n; ++c) {
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cells.emplace_back(r, c);
            }
        }
        const std::uint64_t combos = checked_power(q, static_cast<unsigned>(free_cells.size()));
        for (std::uint64_t code = 0; code < combos; ++code) {
            MatFq m(q, k, n);
            for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
            const auto vals = decode_coords(code, q, static_cast<unsigned>(free_cells.size()));
            for (std::size_t i = 0; i < free_cells.size(); ++i) m(free_cells[i].first, free_cells[i].second) = vals[i];
            out.push_back(subspace_from_rows(m));
        }
        // Next k-combination of {0..n-1} in lexicographic order.
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

MatFq completing_basis(const Subspace& u) {
    const std::size_t n = u.n();
    MatFq g(u.q(), n, n);
    for (std::size_t r = 0; r < u.k(); ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = u.basis()(r, c);
    std::size_t row = u.k();
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(u.pivots().begin(), u.pivots().end(), c) != u.pivots().end()) continue;
        g(row++, c) = 1;
    }
    return g;
}

}  // namespace orbitcodes
