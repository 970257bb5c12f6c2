#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "pencilpairs/chern_ring.hpp"

using pp::AmbientProduct;
using pp::CohomologyClass;
using pp::Int;

namespace {

// Untruncated polynomial in Z[w1..wr], used as an oracle: multiply factors
// with no degree cap, then read one coefficient. A truncated monomial can
// never multiply back down, so the top coefficient must agree with the ring.
using Poly = std::map<std::vector<int>, Int>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

AmbientProduct random_ambient(std::mt19937_64& rng, int max_total) {
    std::uniform_int_distribution<int> rdist(1, 4);
    int r = rdist(rng);
    std::vector<int> dims;
    int total = 0;
    for (int i = 0; i < r; ++i) {
        int cap = max_total - total - (r - i - 1);
        if (cap < 1) cap = 1;
        std::uniform_int_distribution<int> ndist(1, std::min(4, cap));
        int n = ndist(rng);
        dims.push_back(n);
        total += n;
    }
    return AmbientProduct(dims);
}

CohomologyClass random_class(std::mt19937_64& rng, const AmbientProduct& a) {
    std::uniform_int_distribution<int> terms_dist(0, 6);
    std::uniform_int_distribution<long long> coeff_dist(-99, 99);
    CohomologyClass::Terms t;
    int k = terms_dist(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> e;
        for (int n : a.factor_dims) {
            std::uniform_int_distribution<int> edist(0, n);
            e.push_back(edist(rng));
        }
        t[e] += Int(coeff_dist(rng));
    }
    return CohomologyClass(a, std::move(t));
}

Int binomial(long long n, long long k) {
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

}  // namespace

TEST_CASE("ambient validation") {
    CHECK_THROWS_AS(AmbientProduct({}), std::invalid_argument);
    CHECK_THROWS_AS(AmbientProduct({2, 0}), std::invalid_argument);
    CHECK(AmbientProduct({1, 1, 2}).total_dim() == 4);
    CHECK(AmbientProduct({3}).factor_count() == 1);
}

TEST_CASE("truncation in the ring of a projective line") {
    AmbientProduct p1({1});
    auto c = pp::parse_class("(1+2*w1)^2", p1);
    CHECK(c.constant_term() == 1);
    CHECK(c.coefficient({1}) == 4);
    CHECK(c == pp::parse_class("1+4*w1", p1));

    auto w5 = pp::parse_class("w1^5", AmbientProduct({2}));
    CHECK(w5.is_zero());
}

TEST_CASE("integrate picks the top coefficient") {
    AmbientProduct p2xp2({2, 2});
    CHECK(pp::integrate(pp::parse_class("w1^2*w2^2", p2xp2)) == 1);
    CHECK(pp::integrate(pp::parse_class("(w1+w2)^4", p2xp2)) == 6);
    CHECK(pp::integrate(pp::parse_class("w1^2", p2xp2)) == 0);
    CHECK(pp::integrate(pp::parse_class("7", AmbientProduct({1}))) == 0);

    AmbientProduct p1p1p2({1, 1, 2});
    CHECK(pp::integrate(pp::parse_class("(w1+w2+w3)^4", p1p1p2)) == 12);
    CHECK(pp::integrate(pp::parse_class("(w1+w2+2*w3)^4", p1p1p2)) == 48);
}

TEST_CASE("total chern class of ambient products") {
    CHECK(pp::total_chern_ambient(AmbientProduct({1})) ==
          pp::parse_class("1+2*w1", AmbientProduct({1})));
    CHECK(pp::total_chern_ambient(AmbientProduct({2})) ==
          pp::parse_class("1+3*w1+3*w1^2", AmbientProduct({2})));
    CHECK(pp::total_chern_ambient(AmbientProduct({1, 1})) ==
          pp::parse_class("1+2*w1+2*w2+4*w1*w2", AmbientProduct({1, 1})));
    CHECK(pp::total_chern_ambient(AmbientProduct({3})) ==
          pp::parse_class("1+4*w1+6*w1^2+4*w1^3", AmbientProduct({3})));
}

TEST_CASE("invert_unit") {
    AmbientProduct p2({2});
    CHECK(pp::invert_unit(pp::parse_class("1+w1", p2)) ==
          pp::parse_class("1+w1^2-w1", p2));
    CHECK(pp::invert_unit(pp::parse_class("1-w1", p2)) ==
          pp::parse_class("1+w1+w1^2", p2));

    auto c = pp::total_chern_ambient(AmbientProduct({3}));
    auto one = CohomologyClass::constant(AmbientProduct({3}), 1);
    CHECK(c * pp::invert_unit(c) == one);

    auto minus = pp::parse_class("2*w1", p2) - pp::parse_class("1", p2);
    CHECK(minus * pp::invert_unit(minus) == CohomologyClass::constant(p2, 1));

    CHECK_THROWS_AS(pp::invert_unit(pp::parse_class("2+w1", p2)), std::invalid_argument);
    CHECK_THROWS_AS(pp::invert_unit(pp::parse_class("w1", p2)), std::invalid_argument);
}

TEST_CASE("parser reports positions and rejects bad syntax") {
    AmbientProduct p2x1({2, 1});
    CHECK_THROWS_AS(pp::parse_class("-w1", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("1+", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("(1+w1", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("2**3", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("w1^0", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("w0", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("w3", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("1 2", p2x1), pp::ParseError);
    CHECK_THROWS_AS(pp::parse_class("", p2x1), pp::ParseError);

    try {
        pp::parse_class("1+)", p2x1);
        FAIL("expected a parse error");
    } catch (const pp::ParseError& e) {
        CHECK(e.position == 2);
    }

    try {
        pp::parse_class("w3+w1", p2x1);
        FAIL("expected a parse error");
    } catch (const pp::ParseError& e) {
        CHECK(e.position == 0);
    }

    CHECK(pp::parse_class("  1 + 4 * w1  ", p2x1) == pp::parse_class("1+4*w1", p2x1));
    CHECK(pp::parse_class("1-3*w1", p2x1).coefficient({1, 0}) == -3);
}

TEST_CASE("rendering is canonical") {
    AmbientProduct p2x1({2, 1});
    CHECK(CohomologyClass::zero(p2x1).str() == "0");
    CHECK(pp::parse_class("1+4*w1", p2x1).str() == "1 + 4*w1");
    CHECK(pp::parse_class("3*w1^2*w2-w1", p2x1).str() == "-w1 + 3*w1^2*w2");
}

TEST_CASE("big coefficients stay exact") {
    AmbientProduct p8({8});
    auto c = pp::parse_class("(1+w1)^1000", p8);
    CHECK(pp::integrate(c) == binomial(1000, 8));
    CHECK(binomial(1000, 8) == Int("24115080524699431125"));

    auto big = pp::parse_class("123456789012345678901234567890", AmbientProduct({1}));
    CHECK(big.constant_term() == Int("123456789012345678901234567890"));
}

TEST_CASE("ring axioms on random classes") {
    std::mt19937_64 rng(0x5eed0001ULL);
    for (int trial = 0; trial < 1000; ++trial) {
        AmbientProduct a = random_ambient(rng, 8);
        auto x = random_class(rng, a);
        auto y = random_class(rng, a);
        auto z = random_class(rng, a);
        auto one = CohomologyClass::constant(a, 1);

        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(one * x == x);
        REQUIRE(x + CohomologyClass::zero(a) == x);
        REQUIRE(x - x == CohomologyClass::zero(a));
        REQUIRE(pp::integrate(x + y) == pp::integrate(x) + pp::integrate(y));
    }
}

TEST_CASE("invert_unit on random units") {
    std::mt19937_64 rng(0x5eed0002ULL);
    for (int trial = 0; trial < 300; ++trial) {
        AmbientProduct a = random_ambient(rng, 8);
        auto noise = random_class(rng, a);
        auto unit = CohomologyClass::constant(a, trial % 2 == 0 ? 1 : -1) +
                    (noise - CohomologyClass::constant(a, noise.constant_term()));
        auto inv = pp::invert_unit(unit);
        REQUIRE(unit * inv == CohomologyClass::constant(a, 1));
    }
}

TEST_CASE("products of linear factors match a brute-force expansion") {
    std::mt19937_64 rng(0x5eed0003ULL);
    for (int trial = 0; trial < 200; ++trial) {
        AmbientProduct a = random_ambient(rng, 8);
        std::size_t r = static_cast<std::size_t>(a.factor_count());

        std::uniform_int_distribution<int> count_dist(1, 10);
        std::uniform_int_distribution<long long> coeff_dist(-9, 9);
        std::uniform_int_distribution<std::size_t> idx_dist(0, r - 1);

        auto ring_product = CohomologyClass::constant(a, 1);
        Poly oracle{{std::vector<int>(r, 0), 1}};

        int factors = count_dist(rng);
        for (int f = 0; f < factors; ++f) {
            long long coeff = coeff_dist(rng);
            std::size_t j = idx_dist(rng);

            CohomologyClass::Terms t;
            t[std::vector<int>(r, 0)] = 1;
            std::vector<int> e(r, 0);
            e[j] = 1;
            t[e] = coeff;
            ring_product = ring_product * CohomologyClass(a, t);

            Poly lin{{std::vector<int>(r, 0), 1}, {e, Int(coeff)}};
            oracle = poly_mul(oracle, lin);
        }

        auto it = oracle.find(a.factor_dims);
        Int expected = it == oracle.end() ? Int(0) : it->second;
        REQUIRE(pp::integrate(ring_product) == expected);
    }
}

TEST_CASE("graded parts decompose a class") {
    AmbientProduct a({2, 2});
    auto c = pp::total_chern_ambient(a);
    auto sum = CohomologyClass::zero(a);
    for (int d = 0; d <= a.total_dim(); ++d) sum = sum + c.graded_part(d);
    CHECK(sum == c);
    CHECK(c.graded_part(1) == pp::parse_class("3*w1+3*w2", a));
}

TEST_CASE("mixed-ambient operations are rejected") {
    auto x = CohomologyClass::constant(AmbientProduct({2}), 1);
    auto y = CohomologyClass::constant(AmbientProduct({3}), 1);
    CHECK_THROWS_AS(x + y, std::invalid_argument);
    CHECK_THROWS_AS(x * y, std::invalid_argument);
}
