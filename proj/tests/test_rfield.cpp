#include "diffconv/rfield.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace diffconv;
using testutil::pz;
using testutil::rand_rf;
using testutil::rf;

TEST_CASE("prime modulus validation") {
    CHECK_NOTHROW(Prime(3));
    CHECK_NOTHROW(Prime(31));
    CHECK_THROWS_AS(Prime(2), ParameterError);
    CHECK_THROWS_AS(Prime(33), ParameterError);
    CHECK_THROWS_AS(Prime(37), ParameterError);  // prime but out of range
    CHECK_THROWS_AS(Prime(1), ParameterError);
    const Prime p(11);
    CHECK(p.inv(5) == 9);
    CHECK(p.mul(p.inv(7), 7) == 1);
    CHECK_THROWS_AS(p.inv(0), FieldError);
}

TEST_CASE("normalize reduces to coprime monic form") {
    // (2z+2)/(z+1) over F_11: common factor cancels to the constant 2.
    CHECK(normalize(pz("2*z+2", 11), pz("z+1", 11)) == rf("2", 11));
    // zero numerator collapses to 0/1
    const RatFun zero = normalize(PolyZ(Prime(11)), pz("z^3", 11));
    CHECK(zero.is_zero());
    CHECK(zero.den().is_one());
    // oracle: euclidean gcd over F_5[z], then denominator made monic by
    // scaling both parts with 3^{-1} = 2: (3z+4)/(3z+3) -> (z+3)/(z+1)
    CHECK(normalize(pz("3*z+4", 5), pz("3*z+3", 5)) == rf("(z+3)/(z+1)", 5));
    // the coefficients 5z+5 vanish mod 5, so that denominator is rejected
    CHECK_THROWS_AS(normalize(pz("3*z+4", 5), pz("5*z+5", 5)), FieldError);
}

TEST_CASE("field arithmetic examples") {
    const Prime p11(11);
    CHECK(rf("(1)/(z)", 11) * rf("z", 11) == RatFun::one(p11));
    CHECK((rf("(3)/(z)", 11) + rf("(8)/(z)", 11)).is_zero());
    CHECK(rf("(z+4)/(z+1)", 5).inverse() == rf("(z+1)/(z+4)", 5));
    CHECK_THROWS_AS(rf("z", 11) / RatFun::zero(p11), FieldError);
    CHECK_THROWS_AS(RatFun::zero(p11).inverse(), FieldError);
    CHECK(rf("(z+1)/(z^2)", 11).pow(-2) == rf("(z^4)/(z^2+2*z+1)", 11));
}

TEST_CASE("canonical form is preserved by arithmetic") {
    testutil::Rng rng(7);
    const Prime p(5);
    for (int i = 0; i < 300; ++i) {
        const RatFun a = rand_rf(rng, p, 3);
        const RatFun b = rand_rf(rng, p, 3);
        for (const RatFun& r : {a + b, a - b, a * b}) {
            CHECK(r.den().is_monic());
            CHECK(PolyZ::gcd(r.num(), r.den()).is_one());
            if (r.is_zero()) CHECK(r.den().is_one());
            // normalize is idempotent on canonical outputs
            CHECK(normalize(r.num(), r.den()) == r);
        }
    }
}

TEST_CASE("derive follows the quotient rule") {
    const auto d11 = Derivation::make(Prime(11), RatFun::one(Prime(11)));
    CHECK(derive(rf("(1)/(z)", 11), *d11) == rf("(10)/(z^2)", 11));
    CHECK(derive(rf("7", 11), *d11).is_zero());

    const auto d5z = Derivation::make(Prime(5), rf("z", 5));
    // quotient-rule oracle: -1/(z+1)^2 * z reduced mod 5
    CHECK(derive(rf("(1)/(z+1)", 5), *d5z) == rf("(4*z)/(z^2+2*z+1)", 5));
}

TEST_CASE("iterated derivatives") {
    const auto d11 = Derivation::make(Prime(11), RatFun::one(Prime(11)));
    const RatFun alpha = rf("(1)/(z)", 11);
    CHECK(iterate_derive(alpha, *d11, 6) == rf("(5)/(z^7)", 11));
    CHECK(iterate_derive(alpha, *d11, 0) == alpha);
    CHECK(iterate_derive(alpha, *d11, 11).is_zero());
}

TEST_CASE("gamma computation and verification") {
    CHECK(compute_gamma(Prime(11), RatFun::one(Prime(11))).is_zero());
    CHECK(compute_gamma(Prime(5), rf("z", 5)) == RatFun::one(Prime(5)));

    // dz = z^2: cross-check against the 5-fold derivative
    const Prime p5(5);
    const RatFun dz = rf("z^2", 5);
    const auto d = Derivation::make(p5, dz);
    RatFun top = dz;
    for (int i = 1; i < 5; ++i) top = derive(top, *d);
    const RatFun gamma = compute_gamma(p5, dz);
    CHECK(gamma == top / dz);
    CHECK(derive(gamma, *d).is_zero());
    CHECK(d->gamma() == gamma);
}

TEST_CASE("constant field membership") {
    const auto d5 = Derivation::make(Prime(5), RatFun::one(Prime(5)));
    CHECK(in_constant_field(rf("(z^5)/(z^5+1)", 5), *d5));
    CHECK_FALSE(in_constant_field(rf("z", 5), *d5));
    const auto d5z = Derivation::make(Prime(5), rf("z", 5));
    CHECK(in_constant_field(rf("z^10+3*z^5", 5), *d5z));
}

TEST_CASE("parse and format") {
    const Prime p5(5);
    const RatFun g0 = parse_ratfun("(3*z+4)/(z+1)", p5);
    CHECK(g0.num() == pz("3*z+4", 5));
    CHECK(g0.den() == pz("z+1", 5));

    CHECK(parse_ratfun("0", p5).is_zero());
    CHECK(parse_ratfun("10/z^10", Prime(11)) == rf("(10)/(z^10)", 11));

    CHECK(format_ratfun(g0) == "(3*z+4)/(z+1)");
    CHECK(format_ratfun(RatFun::zero(p5)) == "(0)");
    CHECK(format_ratfun(rf("z^2", 5)) == "(z^2)");

    SUBCASE("round-trip on random values") {
        testutil::Rng rng(99);
        for (int i = 0; i < 200; ++i) {
            const RatFun f = rand_rf(rng, Prime(7), 4);
            CHECK(parse_ratfun(format_ratfun(f), Prime(7)) == f);
        }
    }

    SUBCASE("whitespace and signs") {
        CHECK(parse_ratfun(" ( 3*z + 4 ) / ( z + 1 ) ", p5) == g0);
        CHECK(parse_ratfun("-1", p5) == rf("4", 5));
        CHECK(parse_ratfun("z^2-z", p5) == rf("z^2+4*z", 5));
    }

    SUBCASE("strict versus lenient coefficients") {
        CHECK(parse_ratfun("12", p5, ParseMode::lenient) == rf("2", 5));
        CHECK_THROWS_AS(parse_ratfun("12", p5, ParseMode::strict), ParseError);
        CHECK_THROWS_AS(parse_ratfun("12*z", p5, ParseMode::strict), ParseError);
    }

    SUBCASE("syntax errors carry a position") {
        try {
            parse_ratfun("z^", p5);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 2);
        }
        CHECK_THROWS_AS(parse_ratfun("", p5), ParseError);
        CHECK_THROWS_AS(parse_ratfun("(z", p5), ParseError);
        CHECK_THROWS_AS(parse_ratfun("z+", p5), ParseError);
        CHECK_THROWS_AS(parse_ratfun("z/0", p5), ParseError);
        CHECK_THROWS_AS(parse_ratfun("q", p5), ParseError);
        CHECK_THROWS_AS(parse_ratfun("1/z z", p5), ParseError);
    }
}

TEST_CASE("leibniz rule on random pairs") {
    testutil::Rng rng(11);
    const std::vector<std::pair<std::uint32_t, std::string>> setups = {
        {5, "1"}, {5, "z"}, {11, "1"}};
    for (const auto& [pval, dz] : setups) {
        const Prime p(pval);
        const auto d = Derivation::make(p, rf(dz, pval));
        for (int i = 0; i < 340; ++i) {
            const RatFun a = rand_rf(rng, p, 3);
            const RatFun b = rand_rf(rng, p, 3);
            CHECK(derive(a * b, *d) == a * derive(b, *d) + derive(a, *d) * b);
        }
    }
}

TEST_CASE("minimal polynomial delta^p = gamma delta") {
    testutil::Rng rng(13);
    const std::vector<std::pair<std::uint32_t, std::string>> setups = {
        {5, "1"}, {5, "z"}, {7, "1"}, {11, "1"}};
    for (const auto& [pval, dz] : setups) {
        const Prime p(pval);
        const auto d = Derivation::make(p, rf(dz, pval));
        for (int i = 0; i < 50; ++i) {
            const RatFun f = rand_rf(rng, p, 2);
            CHECK(iterate_derive(f, *d, static_cast<int>(pval)) == d->gamma() * derive(f, *d));
        }
    }
}

TEST_CASE("derive is F_p-linear") {
    testutil::Rng rng(17);
    const Prime p(7);
    const auto d = Derivation::make(p, rf("z+1", 7));
    for (int i = 0; i < 100; ++i) {
        const RatFun f = rand_rf(rng, p, 3);
        for (std::uint32_t c = 0; c < 7; ++c)
            CHECK(derive(RatFun::constant(p, c) * f, *d) ==
                  RatFun::constant(p, c) * derive(f, *d));
    }
}
