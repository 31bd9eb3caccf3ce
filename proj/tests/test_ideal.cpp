#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "neurotop/ideal.hpp"

using namespace neurotop;

namespace {

Code code_from_masks(int n, const std::vector<std::uint64_t>& masks) {
    std::vector<Codeword> words;
    for (std::uint64_t m : masks)
        words.emplace_back(m, n);
    return Code(n, std::move(words));
}

// every code of length 3, indexed by its 8-bit characteristic vector
Code nth_code_n3(std::uint64_t subset) {
    std::vector<std::uint64_t> masks;
    for (int m = 0; m < 8; ++m)
        if ((subset >> m) & 1)
            masks.push_back(static_cast<std::uint64_t>(m));
    return code_from_masks(3, masks);
}

// all pseudo-monomials on n variables: disjoint (sigma, tau) pairs
std::vector<PseudoMonomial> all_pseudo_monomials(int n) {
    std::vector<PseudoMonomial> out;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t sigma = 0; sigma <= full; ++sigma) {
        const std::uint64_t complement = full & ~sigma;
        std::uint64_t tau = complement;
        while (true) {
            out.emplace_back(sigma, tau);
            if (tau == 0)
                break;
            tau = (tau - 1) & complement;
        }
    }
    return out;
}

Code random_code(std::mt19937_64& rng, int n, int max_words) {
    std::uniform_int_distribution<int> count(0, max_words);
    std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << n) - 1);
    std::vector<Codeword> words;
    const int k = count(rng);
    for (int i = 0; i < k; ++i)
        words.emplace_back(word(rng), n);
    return Code(n, std::move(words));
}

}  // namespace

TEST_CASE("evaluate examples") {
    const Codeword w11 = Codeword::from_string("11");
    CHECK(evaluate(ReducedPolynomial::zero(2), w11) == 0);
    // x2 + x1*x2 at 11: 1 + 1 = 0
    CHECK(evaluate(ReducedPolynomial(2, {0b10, 0b11}), w11) == 0);
    CHECK(evaluate(ReducedPolynomial::one(2), w11) == 1);
    CHECK(evaluate(ReducedPolynomial::one(2), Codeword::from_string("00")) == 1);
    CHECK_THROWS_AS(evaluate(ReducedPolynomial::zero(2), Codeword::from_string("111")), Error);
}

TEST_CASE("evaluate is linear in the polynomial") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> bits(0, 15);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::uint64_t> pm, qm;
        for (std::uint64_t m = 0; m < 16; ++m) {
            if (bits(rng) < 6)
                pm.push_back(m);
            if (bits(rng) < 6)
                qm.push_back(m);
        }
        const ReducedPolynomial p(4, pm), q(4, qm);
        const Codeword w(bits(rng), 4);
        CHECK(evaluate(p + q, w) == (evaluate(p, w) ^ evaluate(q, w)));
    }
}

TEST_CASE("code_to_polynomial examples") {
    CHECK(code_to_polynomial(code_from_masks(2, {0, 1, 2, 3})) == ReducedPolynomial::zero(2));
    CHECK(code_to_polynomial(Code(1)) == ReducedPolynomial::one(1));
    // {00,10,11} -> x2 + x1*x2
    const ReducedPolynomial p = code_to_polynomial(code_from_masks(2, {0b00, 0b01, 0b11}));
    CHECK(p == ReducedPolynomial(2, {0b10, 0b11}));
    CHECK(p.to_string() == "x2 + x1*x2");
}

TEST_CASE("code_to_polynomial vanishes exactly on the code") {
    // pointwise oracle via evaluate, independent of the transform
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
        const Code code = random_code(rng, 5, 20);
        const ReducedPolynomial p = code_to_polynomial(code);
        for (std::uint64_t m = 0; m < 32; ++m) {
            const Codeword w(m, 5);
            CHECK((evaluate(p, w) == 0) == code.contains(w));
        }
    }
}

TEST_CASE("polynomial_to_code examples") {
    CHECK(polynomial_to_code(ReducedPolynomial::zero(2)) == code_from_masks(2, {0, 1, 2, 3}));
    CHECK(polynomial_to_code(ReducedPolynomial(2, {0b10, 0b11})) ==
          code_from_masks(2, {0b00, 0b01, 0b11}));
    CHECK(polynomial_to_code(ReducedPolynomial(1, {0b1})) == code_from_masks(1, {0}));
    CHECK_THROWS_AS(polynomial_to_code(ReducedPolynomial::zero(30)), Error);
}

TEST_CASE("bijection round-trip, exhaustive n=3") {
    for (std::uint64_t subset = 0; subset < 256; ++subset) {
        const Code code = nth_code_n3(subset);
        CHECK(polynomial_to_code(code_to_polynomial(code)) == code);
    }
}

TEST_CASE("bijection uniqueness, exhaustive n=3") {
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t subset = 0; subset < 256; ++subset)
        seen.insert(code_to_polynomial(nth_code_n3(subset)).monomials());
    CHECK(seen.size() == 256);
}

TEST_CASE("bijection round-trip, random n=4") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> characteristic(0, ~std::uint64_t{0});
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t subset = characteristic(rng);
        std::vector<std::uint64_t> masks;
        for (int m = 0; m < 16; ++m)
            if ((subset >> m) & 1)
                masks.push_back(static_cast<std::uint64_t>(m));
        const Code code = code_from_masks(4, masks);
        CHECK(polynomial_to_code(code_to_polynomial(code)) == code);
    }
}

TEST_CASE("pseudo-monomial basics") {
    CHECK_THROWS_AS(PseudoMonomial(0b01, 0b01), Error);
    const PseudoMonomial z(0b10, 0b01);  // x2*(1+x1)
    CHECK(z.degree() == 2);
    CHECK(z.to_string() == "x2*(1+x1)");
    CHECK(PseudoMonomial(0, 0).to_string() == "1");
    CHECK(PseudoMonomial(0b011, 0b100).to_string() == "x1*x2*(1+x3)");
    CHECK(PseudoMonomial(0b10, 0).divides(z));
    CHECK(PseudoMonomial(0, 0b01).divides(z));
    CHECK_FALSE(z.divides(PseudoMonomial(0b10, 0)));
}

TEST_CASE("vanishes_on examples") {
    const Code code = code_from_masks(2, {0b00, 0b01, 0b11});  // {00,10,11}
    CHECK(vanishes_on(PseudoMonomial(0b10, 0b01), code));      // x2*(1+x1)
    CHECK_FALSE(vanishes_on(PseudoMonomial(0b01, 0), code));   // x1 hits 10
    CHECK_FALSE(vanishes_on(PseudoMonomial(0, 0), code));      // constant 1
}

TEST_CASE("canonical_form examples") {
    SUBCASE("containment code") {
        const auto cf = canonical_form(code_from_masks(2, {0b00, 0b01, 0b11}));
        REQUIRE(cf.size() == 1);
        CHECK(cf[0] == PseudoMonomial(0b10, 0b01));
    }
    SUBCASE("disjoint-cover code") {
        const auto cf = canonical_form(code_from_masks(2, {0b01, 0b10}));  // {10,01}
        REQUIRE(cf.size() == 2);
        CHECK(cf[0] == PseudoMonomial(0b11, 0));  // x1*x2
        CHECK(cf[1] == PseudoMonomial(0, 0b11));  // (1+x1)*(1+x2)
    }
    SUBCASE("full cube") {
        CHECK(canonical_form(code_from_masks(2, {0, 1, 2, 3})).empty());
        std::vector<std::uint64_t> cube;
        for (std::uint64_t m = 0; m < 8; ++m)
            cube.push_back(m);
        CHECK(canonical_form(code_from_masks(3, cube)).empty());
    }
    SUBCASE("contract errors") {
        CHECK_THROWS_AS(canonical_form(Code(2)), Error);
        CHECK_THROWS_AS(canonical_form(code_from_masks(13, {0})), Error);
    }
}

TEST_CASE("canonical form against the brute-force oracle, all codes n=3") {
    const std::vector<PseudoMonomial> all = all_pseudo_monomials(3);
    REQUIRE(all.size() == 27);
    for (std::uint64_t subset = 1; subset < 256; ++subset) {
        const Code code = nth_code_n3(subset);
        const auto cf = canonical_form(code);
        CAPTURE(subset);

        for (const PseudoMonomial& z : cf) {
            // soundness
            CHECK(vanishes_on(z, code));
            // minimality: dropping any single factor stops the vanishing
            std::uint64_t rest = z.sigma();
            while (rest != 0) {
                const std::uint64_t low = rest & (0 - rest);
                rest ^= low;
                CHECK_FALSE(vanishes_on(PseudoMonomial(z.sigma() ^ low, z.tau()), code));
            }
            rest = z.tau();
            while (rest != 0) {
                const std::uint64_t low = rest & (0 - rest);
                rest ^= low;
                CHECK_FALSE(vanishes_on(PseudoMonomial(z.sigma(), z.tau() ^ low), code));
            }
        }

        // completeness: every vanishing pseudo-monomial is a multiple of a
        // canonical-form element
        for (const PseudoMonomial& z : all) {
            if (!vanishes_on(z, code))
                continue;
            bool divisible = false;
            for (const PseudoMonomial& m : cf)
                if (m.divides(z)) {
                    divisible = true;
                    break;
                }
            CHECK(divisible);
        }
    }
}

TEST_CASE("rf_relations examples and rendering") {
    SUBCASE("containment") {
        const auto rels = rf_relations(code_from_masks(2, {0b00, 0b01, 0b11}));
        REQUIRE(rels.size() == 1);
        CHECK(rels[0].kind == RelationKind::containment);
        CHECK(rels[0].to_string() == "U2 <= U1");
    }
    SUBCASE("disjointness and covering, in canonical order") {
        const auto rels = rf_relations(code_from_masks(2, {0b01, 0b10}));
        REQUIRE(rels.size() == 2);
        CHECK(rels[0].kind == RelationKind::empty_intersection);
        CHECK(rels[0].to_string() == "U1 & U2 = {}");
        CHECK(rels[1].kind == RelationKind::covering);
        CHECK(rels[1].to_string() == "X <= U1 | U2");
    }
    SUBCASE("full cube has none") {
        CHECK(rf_relations(code_from_masks(2, {0, 1, 2, 3})).empty());
    }
}

TEST_CASE("polynomial construction and rendering") {
    CHECK(ReducedPolynomial::zero(3).to_string() == "0");
    CHECK(ReducedPolynomial::one(3).to_string() == "1");
    CHECK(ReducedPolynomial(3, {0b110, 0b001, 0}).to_string() == "1 + x1 + x2*x3");
    CHECK_THROWS_AS(ReducedPolynomial(2, {0b01, 0b01}), Error);
    CHECK_THROWS_AS(ReducedPolynomial(2, {0b100}), Error);
}
