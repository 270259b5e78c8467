#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitcodes/error.hpp"
#include "orbitcodes/gf.hpp"
#include "support.hpp"

using namespace orbitcodes;
using support::poly;

TEST_CASE("number helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(prime_factors(63) == std::vector<std::uint64_t>{3, 7});
    CHECK(divisors(15) == std::vector<std::uint64_t>{1, 3, 5, 15});
    CHECK(checked_power(2, 6) == 64);
    CHECK_THROWS_AS(checked_power(2, 64), InvalidArgument);
}

TEST_CASE("prime field inverse by exhaustion") {
    for (fq_t q : {2u, 3u, 5u, 7u, 11u}) {
        const PrimeField f(q);
        for (fq_t a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK_THROWS_AS(f.inv(0), PreconditionError);
    }
    CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
}

TEST_CASE("polynomial parsing and printing") {
    const PolyFq p = poly("x^6+x+1");
    CHECK(p.degree() == 6);
    CHECK(p.to_string() == "x^6+x+1");
    CHECK(p.to_coefficient_list() == "1,1,0,0,0,0,1");
    CHECK(poly("1,1,0,0,0,0,1") == p);
    CHECK(poly("2x^2-x+1", 3).to_string() == "2x^2+2x+1");
    CHECK(poly("x^2 + x^2", 2).is_zero());
    CHECK_THROWS_AS(poly("x^^2"), InvalidArgument);
    CHECK(poly("3,1") == poly("x+1"));
    CHECK_THROWS_AS(poly("1,a"), InvalidArgument);
    CHECK_THROWS_AS(poly(""), InvalidArgument);
}

TEST_CASE("polynomial division identity") {
    std::mt19937_64 rng(7);
    for (fq_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto a = oracle::random_matrix(rng, q, 1, 9)[0];
            auto b = oracle::random_matrix(rng, q, 1, 4)[0];
            b.back() = 1;
            const PolyFq pa(q, a), pb(q, b);
            const auto [quot, rem] = divmod(pa, pb);
            CHECK(quot * pb + rem == pa);
            CHECK(rem.degree() < pb.degree());
        }
    }
}

TEST_CASE("irreducibility examples") {
    CHECK(is_irreducible(poly("x^2+x+1")));
    CHECK_FALSE(is_irreducible(poly("x^2+1")));
    CHECK(is_irreducible(poly("x^4+x^3+x^2+x+1")));
    CHECK(is_irreducible(poly("x^6+x+1")));
    CHECK_THROWS_AS(is_irreducible(poly("1")), InvalidArgument);
}

TEST_CASE("irreducibility agrees with trial division") {
    for (auto [q, max_deg] : {std::pair<fq_t, std::size_t>{2, 8}, {3, 5}, {5, 3}}) {
        for (std::size_t n = 1; n <= max_deg; ++n) {
            for (std::uint64_t c = 0; c < oracle::ipow(q, static_cast<unsigned>(n)); ++c) {
                auto co = oracle::decode(c, q, n);
                co.push_back(1);
                CHECK_MESSAGE(is_irreducible(PolyFq(q, co)) == oracle::irreducible_by_trial_division(co, q),
                              PolyFq(q, co).to_string());
            }
        }
    }
}

TEST_CASE("polynomial orders") {
    CHECK(poly_order(poly("x^4+x+1")) == 15);
    CHECK(poly_order(poly("x^4+x^3+1")) == 15);
    CHECK(poly_order(poly("x^4+x^3+x^2+x+1")) == 5);
    CHECK(poly_order(poly("x^6+x+1")) == 63);
    CHECK(is_primitive(poly("x^6+x+1")));
    CHECK_FALSE(is_primitive(poly("x^4+x^3+x^2+x+1")));
    CHECK(is_primitive(poly("x^4+x+1")));
    CHECK_THROWS_AS(poly_order(poly("x^2+1")), PreconditionError);
    CHECK_THROWS_AS(poly_order(poly("x^2+x")), PreconditionError);
}

TEST_CASE("order equals LFSR period and divides q^n - 1") {
    for (auto [q, max_deg] : {std::pair<fq_t, std::size_t>{2, 6}, {3, 4}}) {
        for (std::size_t n = 1; n <= max_deg; ++n) {
            for (const auto& co : oracle::irreducible_polys(q, n)) {
                const PolyFq p(q, co);
                const std::uint64_t ord = poly_order(p);
                CHECK_MESSAGE(ord == oracle::lfsr_order(co, q), p.to_string());
                CHECK((oracle::ipow(q, static_cast<unsigned>(n)) - 1) % ord == 0);
            }
        }
    }
}

TEST_CASE("extension field powers of alpha") {
    const ExtField f(poly("x^6+x+1"));
    CHECK(f.size() == 64);
    CHECK(f.order() == 63);
    CHECK(f.alpha_power(0).to_string() == "100000");
    CHECK(f.alpha_power(9).to_string() == "000110");
    CHECK(f.alpha_power(18).to_string() == "111100");
    CHECK(f.mul(f.alpha_power(3), f.alpha_power(6)).to_string() == "000110");
    CHECK(f.alpha_power(-1) == f.alpha_power(62));
    CHECK(f.discrete_log(f.element({1, 0, 0, 0, 0, 0})) == 0);
    CHECK(f.discrete_log(f.element({0, 0, 0, 1, 1, 0})) == 9);
    const ExtElem a = f.element({1, 0, 1, 1, 0, 1});
    CHECK(f.mul(a, f.one()) == a);
}

TEST_CASE("alpha^21 in x^6+x+1 by LFSR") {
    const auto powers = oracle::lfsr_powers(support::coeffs(poly("x^6+x+1")), 2);
    const ExtField f(poly("x^6+x+1"));
    CHECK(f.alpha_power(21).coords == powers[21]);
    CHECK(f.alpha_power(21).to_string() == "110111");
    CHECK(f.mul(f.alpha_power(10), f.alpha_power(11)) == f.alpha_power(21));
    // 1 + alpha + alpha^2 is not a cube root of unity here, so it is not alpha^21.
    CHECK(f.discrete_log(f.element({1, 1, 1, 0, 0, 0})) == 26);
}

TEST_CASE("alpha powers and logs match the LFSR table") {
    for (const char* text : {"x^4+x+1", "x^6+x+1", "x^8+x^4+x^3+x^2+1", "x^12+x^6+x^4+x+1"}) {
        const PolyFq p = poly(text);
        const ExtField f(p);
        REQUIRE(f.is_primitive());
        const auto powers = oracle::lfsr_powers(support::coeffs(p), 2);
        REQUIRE(powers.size() == f.order());
        for (std::uint64_t i = 0; i < powers.size(); ++i) {
            CHECK(f.alpha_power(static_cast<std::int64_t>(i)).coords == powers[i]);
            CHECK(f.discrete_log(f.element(powers[i])) == i);
        }
    }
}

TEST_CASE("log round trip over F_3") {
    for (const auto& co : oracle::irreducible_polys(3, 3)) {
        const ExtField f(PolyFq(3, co));
        if (!f.is_primitive()) {
            CHECK_THROWS_AS(f.discrete_log(f.one()), PreconditionError);
            continue;
        }
        for (std::uint64_t c = 1; c < f.size(); ++c) {
            const ExtElem v = f.element(decode_coords(c, 3, 3));
            CHECK(f.alpha_power(static_cast<std::int64_t>(f.discrete_log(v))) == v);
        }
    }
}

TEST_CASE("non-primitive alpha powers reduce modulo the order") {
    const ExtField f(poly("x^4+x^3+x^2+x+1"));
    CHECK(f.order() == 5);
    CHECK(f.alpha_power(5) == f.one());
    CHECK(f.alpha_power(7) == f.alpha_power(2));
    CHECK(f.alpha_power(-3) == f.alpha_power(2));
}

TEST_CASE("discrete log errors") {
    const ExtField f(poly("x^6+x+1"), 32);
    CHECK_THROWS_AS(f.discrete_log(f.alpha()), LogTableCapExceeded);
    const ExtField g(poly("x^6+x+1"));
    CHECK_THROWS_AS(g.discrete_log(g.zero()), InvalidArgument);
    CHECK_THROWS_AS(ExtField(poly("x^2+1")), PreconditionError);
}

TEST_CASE("field axioms exhaustively for small fields") {
    for (auto [q, text] : {std::pair<fq_t, const char*>{2, "x^4+x+1"}, {2, "x^4+x^3+x^2+x+1"}, {3, "x^3+2x+1"},
                           {5, "x^2+2"}, {2, "x^8+x^4+x^3+x^2+1"}}) {
        const ExtField f(poly(text, q));
        std::vector<ExtElem> all;
        for (std::uint64_t c = 0; c < f.size(); ++c) all.push_back(f.element(decode_coords(c, q, f.n())));
        std::vector<std::vector<ExtElem>> table(all.size());
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b) table[a].push_back(f.mul(all[a], all[b]));
        auto code = [&](const ExtElem& e) { return encode_coords(e.coords, q); };
        std::uint64_t failures = 0;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b) {
                failures += table[a][b] != table[b][a];
                const std::size_t ab = code(table[a][b]);
                for (std::size_t c = 0; c < all.size(); ++c) {
                    failures += table[ab][c] != table[a][code(table[b][c])];
                    failures += table[a][code(f.add(all[b], all[c]))] != f.add(table[a][b], table[a][c]);
                }
            }
        CHECK_MESSAGE(failures == 0, text);
    }
}

TEST_CASE("field axioms by random sampling in F_2^8") {
    const ExtField f(poly("x^8+x^4+x^3+x^2+1"));
    std::mt19937_64 rng(11);
    auto pick = [&] { return f.element(decode_coords(rng() % f.size(), 2, 8)); };
    for (int i = 0; i < 2000; ++i) {
        const auto a = pick(), b = pick(), c = pick();
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("subfield span of 1, alpha^c, ..., alpha^{(k-1)c}") {
    for (auto [text, k] : {std::pair<const char*, unsigned>{"x^4+x+1", 2}, {"x^6+x+1", 2}, {"x^6+x+1", 3}, {"x^6+x+1", 6}}) {
        const ExtField f(poly(text));
        const std::uint64_t c = (f.size() - 1) / (oracle::ipow(2, k) - 1);
        oracle::Mat gens;
        for (unsigned i = 0; i < k; ++i) gens.push_back(f.alpha_power(static_cast<std::int64_t>(i * c)).coords);
        const auto span = oracle::span_codes(gens, 2, f.n());
        std::set<std::uint64_t> powers{0};
        for (std::uint64_t i = 0; i + 1 < oracle::ipow(2, k); ++i)
            powers.insert(encode_coords(f.alpha_power(static_cast<std::int64_t>(i * c)).coords, 2));
        CHECK(span == powers);
        CHECK(span.size() == oracle::ipow(2, k));
    }
}
