#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "orbitcodes/error.hpp"
#include "orbitcodes/linalg.hpp"
#include "support.hpp"

using namespace orbitcodes;
using support::poly;
using support::rows;

namespace {

MatFq mat(const std::string& text, fq_t q = 2) { return parse_rows(text, q); }

}  // namespace

TEST_CASE("rref examples") {
    const RrefResult a = rref(mat("100000,000110,111100"));
    CHECK(a.matrix == mat("100000,011010,000110"));
    CHECK(a.rank == 3);
    const RrefResult b = rref(mat("100000,111000"));
    CHECK(b.matrix == mat("100000,011000"));
    CHECK(b.rank == 2);
    const MatFq id = MatFq::identity(3, 4);
    CHECK(rref(id).matrix == id);
    CHECK(rref(id).rank == 4);
    const RrefResult z = rref(mat("110,000,011"));
    CHECK(z.matrix == mat("101,011,000"));
    CHECK(z.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref is idempotent and preserves the row space") {
    std::mt19937_64 rng(3);
    for (fq_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = oracle::random_matrix(rng, q, 3, 5);
            const RrefResult r = rref(MatFq(q, m));
            CHECK(rref(r.matrix).matrix == r.matrix);
            CHECK(oracle::span_codes(r.matrix.to_rows(), q, 5) == oracle::span_codes(m, q, 5));
            CHECK(oracle::ipow(q, static_cast<unsigned>(r.rank)) == oracle::span_codes(m, q, 5).size());
        }
    }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(5);
    for (fq_t q : {2u, 3u, 7u}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int trial = 0; trial < 40; ++trial) {
                const auto m = oracle::random_matrix(rng, q, n, n);
                CHECK(determinant(MatFq(q, m)) == oracle::leibniz_det(m, q));
            }
        }
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(9);
    for (fq_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 50; ++trial) {
            const MatFq a(q, oracle::random_invertible(rng, q, 4));
            CHECK(a * inverse(a) == MatFq::identity(q, 4));
            CHECK(inverse(a) * a == MatFq::identity(q, 4));
        }
    }
    CHECK_THROWS_AS(inverse(mat("11,11")), PreconditionError);
}

TEST_CASE("companion matrix layout") {
    CHECK(companion_matrix(poly("x^2+x+1")) == mat("01,11"));
    CHECK(companion_matrix(poly("x^4+x+1")) == mat("0100,0010,0001,1100"));
    CHECK(companion_matrix(poly("x^2+2x+1", 3)) == mat("01,21", 3));
    CHECK_THROWS_AS(companion_matrix(poly("2x^2+1", 3)), InvalidArgument);
}

TEST_CASE("characteristic polynomial of a companion matrix is its polynomial") {
    for (auto [q, max_deg] : {std::pair<fq_t, std::size_t>{2, 6}, {3, 4}, {5, 3}}) {
        for (std::size_t n = 1; n <= max_deg; ++n) {
            for (std::uint64_t c = 0; c < oracle::ipow(q, static_cast<unsigned>(n)); c += 1 + c % 3) {
                auto co = oracle::decode(c, q, n);
                co.push_back(1);
                const PolyFq p(q, co);
                CHECK(characteristic_polynomial(companion_matrix(p)) == p);
            }
        }
    }
}

TEST_CASE("characteristic polynomial matches det(xI - A) evaluated pointwise") {
    std::mt19937_64 rng(13);
    for (fq_t q : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = oracle::random_matrix(rng, q, 4, 4);
            const PolyFq chi = characteristic_polynomial(MatFq(q, a));
            CHECK(chi.degree() == 4);
            CHECK(chi.is_monic());
            for (fq_t x = 0; x < q; ++x) {
                oracle::Mat m = a;
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) m[i][j] = oracle::mod(std::int64_t{i == j ? x : 0} - a[i][j], q);
                CHECK(chi.evaluate(x) == oracle::leibniz_det(m, q));
            }
        }
    }
}

TEST_CASE("matrix orders") {
    CHECK(matrix_order(companion_matrix(poly("x^4+x+1"))) == 15);
    CHECK(matrix_order(companion_matrix(poly("x^4+x^3+x^2+x+1"))) == 5);
    CHECK(matrix_order(MatFq::identity(2, 5)) == 1);
    CHECK(matrix_order(mat("01,10")) == 2);
    CHECK_THROWS_AS(matrix_order(mat("11,11")), PreconditionError);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& co : oracle::irreducible_polys(2, n)) {
            const PolyFq p(2, co);
            CHECK(matrix_order(companion_matrix(p)) == poly_order(p));
        }
}

TEST_CASE("matrix order of reducible matrices by repeated multiplication") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const MatFq a(2, oracle::random_invertible(rng, 2, 4));
        std::uint64_t expected = 1;
        MatFq cur = a;
        while (cur != MatFq::identity(2, 4)) {
            cur = cur * a;
            ++expected;
        }
        CHECK(matrix_order(a) == expected);
    }
}

TEST_CASE("companion matrix acts as multiplication by alpha") {
    for (const char* text : {"x^6+x+1", "x^4+x^3+x^2+x+1", "x^12+x^6+x^4+x+1"}) {
        const ExtField f(poly(text));
        const MatFq p = companion_matrix(f.modulus());
        for (std::uint64_t c = 0; c < f.size(); ++c) {
            const auto v = decode_coords(c, 2, f.n());
            REQUIRE(vector_mul(v, p) == f.mul_alpha(f.element(v)).coords);
        }
    }
    const ExtField f(poly("x^6+x+1"));
    const MatFq p = companion_matrix(f.modulus());
    CHECK(vector_mul(Vec{1, 0, 0, 0, 0, 0}, p) == Vec{0, 1, 0, 0, 0, 0});
    CHECK(vector_mul(Vec{0, 0, 0, 0, 0, 1}, p) == Vec{1, 1, 0, 0, 0, 0});
    const ExtField g(poly("x^3+2x+1", 3));
    const MatFq pg = companion_matrix(g.modulus());
    for (std::uint64_t c = 0; c < g.size(); ++c) {
        const auto v = decode_coords(c, 3, 3);
        CHECK(vector_mul(v, pg) == g.mul(g.element(v), g.alpha()).coords);
    }
}

TEST_CASE("matrix irreducibility agrees with the invariant-subspace search") {
    std::mt19937_64 rng(19);
    for (std::size_t n = 2; n <= 4; ++n) {
        int irreducible_seen = 0;
        for (int trial = 0; trial < 150; ++trial) {
            const auto a = oracle::random_invertible(rng, 2, n);
            const bool expected = oracle::irreducible_by_invariant_search(a, 2);
            irreducible_seen += expected;
            CHECK(is_irreducible_matrix(MatFq(2, a)) == expected);
        }
        CHECK(irreducible_seen > 0);
        for (const auto& co : oracle::irreducible_polys(2, n)) {
            const MatFq c = companion_matrix(PolyFq(2, co));
            CHECK(is_irreducible_matrix(c));
            CHECK(oracle::irreducible_by_invariant_search(c.to_rows(), 2));
        }
    }
}

TEST_CASE("subspace canonical form") {
    const Subspace u = rows("1000,0011,1011");
    CHECK(u.k() == 2);
    CHECK(support::row_strings(u) == std::vector<std::string>{"1000", "0011"});
    CHECK(rows("1000,0011") == u);
    CHECK_THROWS_AS(rows("0000"), InvalidArgument);
    CHECK(u.contains(Vec{1, 0, 1, 1}));
    CHECK_FALSE(u.contains(Vec{0, 1, 0, 0}));
    CHECK(u.nonzero_vectors().size() == 3);
}

TEST_CASE("canonical form ignores the choice of basis") {
    std::mt19937_64 rng(23);
    for (fq_t q : {2u, 3u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const MatFq b(q, oracle::random_matrix(rng, q, 3, 6));
            if (rank(b) < 3) continue;
            const MatFq t(q, oracle::random_invertible(rng, q, 3));
            const Subspace u = subspace_from_rows(b);
            CHECK(subspace_from_rows(t * b) == u);
            CHECK(std::hash<Subspace>{}(subspace_from_rows(t * b)) == std::hash<Subspace>{}(u));
            CHECK(subspace_from_rows(u.basis()) == u);
        }
    }
}

TEST_CASE("intersection dimension and distance examples") {
    const Subspace u = rows("1000,0100");
    CHECK(intersection_dim(u, u) == 2);
    CHECK(intersection_dim(u, rows("0010,0001")) == 0);
    CHECK(intersection_dim(u, rows("0100,0010")) == 1);
    CHECK(subspace_distance(u, u) == 0);
    CHECK(subspace_distance(u, rows("1000,0010")) == 2);
    CHECK(subspace_distance(rows("100000,010000,001000"), rows("000100,000010,000001")) == 6);
    CHECK(intersection_basis(u, rows("0100,0010")) == std::vector<Vec>{{0, 1, 0, 0}});
    CHECK(intersection_basis(u, rows("0010,0001")).empty());
}

TEST_CASE("intersection agrees with vector-set intersection") {
    std::mt19937_64 rng(29);
    for (fq_t q : {2u, 3u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const MatFq a(q, oracle::random_matrix(rng, q, 2 + trial % 2, 5));
            const MatFq b(q, oracle::random_matrix(rng, q, 3, 5));
            if (rank(a) == 0 || rank(b) == 0) continue;
            const Subspace u = subspace_from_rows(a), v = subspace_from_rows(b);
            const auto su = support::as_set(u), sv = support::as_set(v);
            CHECK(intersection_dim(u, v) == oracle::common_dim(su, sv, q));
            std::set<std::uint64_t> common;
            for (auto c : su)
                if (sv.count(c)) common.insert(c);
            const auto basis = intersection_basis(u, v);
            CHECK(oracle::span_codes(basis, q, 5) == (basis.empty() ? std::set<std::uint64_t>{0} : common));
        }
    }
}

TEST_CASE("metric axioms exhaustively") {
    for (auto [k, n] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}}) {
        const auto all = all_subspaces(2, k, n);
        for (const auto& u : all)
            for (const auto& v : all) {
                const int d = subspace_distance(u, v);
                CHECK((d == 0) == (u == v));
                CHECK(d == subspace_distance(v, u));
                CHECK(d % 2 == 0);
                for (const auto& w : all) REQUIRE(subspace_distance(u, w) <= d + subspace_distance(v, w));
            }
    }
}

TEST_CASE("metric axioms by sampling in G_2(3,6)") {
    std::mt19937_64 rng(31);
    auto pick = [&] {
        for (;;) {
            const MatFq m(2, oracle::random_matrix(rng, 2, 3, 6));
            if (rank(m) == 3) return subspace_from_rows(m);
        }
    };
    for (int trial = 0; trial < 300; ++trial) {
        const Subspace u = pick(), v = pick(), w = pick();
        CHECK(subspace_distance(u, v) == oracle::distance(support::as_set(u), support::as_set(v), 2));
        CHECK(subspace_distance(u, v) == subspace_distance(v, u));
        CHECK(subspace_distance(u, w) <= subspace_distance(u, v) + subspace_distance(v, w));
    }
}

TEST_CASE("distance is invariant under GL_n") {
    std::mt19937_64 rng(37);
    for (auto [k, n] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}, {3, 6}}) {
        const auto all = all_subspaces(2, k, n);
        for (int trial = 0; trial < 200; ++trial) {
            const MatFq a(2, oracle::random_invertible(rng, 2, n));
            const Subspace& u = all[rng() % all.size()];
            const Subspace& v = all[rng() % all.size()];
            CHECK(subspace_distance(apply_matrix(u, a), apply_matrix(v, a)) == subspace_distance(u, v));
        }
    }
}

TEST_CASE("group action") {
    const Subspace u0 = standard_subspace(2, 2, 4);
    CHECK(apply_matrix(u0, MatFq::identity(2, 4)) == u0);
    CHECK(apply_matrix(u0, mat("0010,0001,1000,0100")) == rows("0010,0001"));
    const Subspace spread = rows("100000,011010,000110");
    const Subspace image = apply_matrix(spread, companion_matrix(poly("x^6+x+1")));
    CHECK(image != spread);
    CHECK(subspace_distance(spread, image) == 6);
    CHECK_THROWS_AS(apply_matrix(u0, mat("1100,1100,0010,0001")), PreconditionError);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_invertible(rng, 3, 4);
        const MatFq b(3, oracle::random_matrix(rng, 3, 2, 4));
        if (rank(b) == 0) continue;
        const Subspace u = subspace_from_rows(b);
        CHECK(support::as_set(apply_matrix(u, MatFq(3, a))) == oracle::image(support::as_set(u), a, 3, 4));
    }
}

TEST_CASE("Grassmannian enumeration") {
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(2, 5, 2) == 155);
    CHECK(gaussian_binomial(2, 6, 3) == 1395);
    CHECK(gaussian_binomial(3, 4, 2) == 130);
    for (auto [q, k, n] : {std::tuple<fq_t, std::size_t, std::size_t>{2, 2, 4}, {2, 1, 3}, {2, 2, 5}, {3, 2, 4}, {2, 3, 5}}) {
        const auto all = all_subspaces(q, k, n);
        CHECK(all.size() == gaussian_binomial(q, n, k));
        std::unordered_set<Subspace> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        std::set<std::set<std::uint64_t>> ours;
        for (const auto& s : all) ours.insert(support::as_set(s));
        const auto theirs = oracle::all_subspace_sets(q, k, n);
        CHECK(ours == std::set<std::set<std::uint64_t>>(theirs.begin(), theirs.end()));
    }
}

TEST_CASE("completing basis") {
    for (const auto& u : all_subspaces(2, 2, 4)) {
        const MatFq g = completing_basis(u);
        CHECK(is_invertible(g));
        CHECK(apply_matrix(standard_subspace(2, 2, 4), g) == u);
    }
    for (const auto& u : all_subspaces(3, 2, 4)) {
        const MatFq g = completing_basis(u);
        CHECK(apply_matrix(standard_subspace(3, 2, 4), g) == u);
    }
}
