#include "diffconv/pgz.hpp"

#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

using namespace diffconv;
using testutil::rand_rf;
using testutil::rf;

namespace {

const CodeSpec& spec_p11() {
    static const CodeSpec s =
        CodeSpec::build(11, RatFun::one(Prime(11)), rf("(1)/(z)", 11), 7, 0);
    return s;
}

const CodeSpec& spec_p5() {
    static const CodeSpec s = CodeSpec::build(5, rf("z", 5), rf("(1)/(z+1)", 5), 3, 0);
    return s;
}

std::vector<RatFun> word(const std::vector<const char*>& coords, std::uint32_t p) {
    std::vector<RatFun> w;
    for (const char* c : coords) w.push_back(rf(c, p));
    return w;
}

const std::vector<RatFun>& codeword_p11() {
    static const std::vector<RatFun> c =
        word({"(3)/(z^6)", "(5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)", "(3)",
              "(3*z)", "(9*z^2)", "(3*z^3)", "(z^4)"},
             11);
    return c;
}

// Golden received words: two errors at {6, 8}, and three
// errors at {1, 6, 9}.
const std::vector<RatFun>& received_two() {
    static const std::vector<RatFun> y =
        word({"(3)/(z^6)", "(5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)", "(0)",
              "(3*z)", "(0)", "(3*z^3)", "(z^4)"},
             11);
    return y;
}

const std::vector<RatFun>& received_three() {
    static const std::vector<RatFun> y =
        word({"(3)/(z^6)", "(z^5+5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)",
              "(0)", "(3*z)", "(9*z^2)", "(0)", "(z^4)"},
             11);
    return y;
}

const std::vector<RatFun>& received_p5() {
    static const std::vector<RatFun> y =
        word({"(2*z^2)/(z^2+2*z+1)", "(3*z+4)/(z+1)", "(1)", "(0)", "(z)"}, 5);
    return y;
}

// Direct-formula oracle: S_{i,k} = sum_j delta^k(e_j) delta^(i+k_j)(alpha).
RatFun s_direct(const CodeSpec& spec, const ErrorVector& e, int i, int k) {
    RatFun acc = RatFun::zero(spec.prime());
    for (std::size_t j = 0; j < e.positions.size(); ++j)
        acc += iterate_derive(e.values[j], *spec.derivation(), k) *
               spec.orbit(i + e.positions[j]);
    return acc;
}

}  // namespace

TEST_CASE("syndromes") {
    SUBCASE("codewords have vanishing syndromes") {
        CHECK(std::all_of(syndromes(codeword_p11(), spec_p11()).begin(),
                          syndromes(codeword_p11(), spec_p11()).end(),
                          [](const RatFun& s) { return s.is_zero(); }));
    }
    SUBCASE("two-error word of the p=11 example") {
        const auto s = syndromes(received_two(), spec_p11());
        REQUIRE(s.size() == 6);
        CHECK(s[0] == rf("(6)/(z^6)", 11));
        // S_{0,0} = s_0 * alpha is the golden 6/z^7
        CHECK(s[0] * spec_p11().orbit(0) == rf("(6)/(z^7)", 11));
    }
    SUBCASE("corrupted p=5 word") {
        const auto s = syndromes(received_p5(), spec_p5());
        REQUIRE(s.size() == 2);
        // golden S_{0,0} divided by alpha = 1/(z+1)
        CHECK(s[0] == rf("(z^5+4*z^4+z^3+4*z^2)/(z^5+1)", 5) * rf("z+1", 5));
        CHECK(s[1] == rf("z", 5));
    }
    SUBCASE("offset codes are not decodable") {
        const CodeSpec off = CodeSpec::build(5, rf("z", 5), rf("(1)/(z+1)", 5), 3, 1);
        CHECK_THROWS_AS(syndromes(received_p5(), off), ParameterError);
    }
    SUBCASE("wrong length") {
        CHECK_THROWS_AS(syndromes(received_p5(), spec_p11()), ParameterError);
    }
}

TEST_CASE("syndrome table") {
    SUBCASE("error-free word gives the zero table") {
        const auto tbl = syndrome_table(syndromes(codeword_p11(), spec_p11()), spec_p11());
        CHECK(tbl.table.is_zero());
    }
    SUBCASE("golden table of the two-error case") {
        const auto tbl = syndrome_table(syndromes(received_two(), spec_p11()), spec_p11());
        const char* expected[4][3] = {
            {"(6)/(z^7)", "(9)/(z^8)", "(9)/(z^9)"},
            {"(4)/(z^8)", "(7)/(z^9)", "(7)/(z^10)"},
            {"(5)/(z^9)", "(7)/(z^10)", "(7)/(z^11)"},
            {"(3)/(z^10)", "(0)", "(0)"},
        };
        REQUIRE(tbl.table.rows() == 4);
        REQUIRE(tbl.table.cols() == 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(tbl.table.at(i, k) == rf(expected[i][k], 11));
    }
    SUBCASE("recursion matches the direct formula on a planted error") {
        const ErrorVector planted{{2, 7}, {rf("(z)/(z+3)", 11), rf("z^2+1", 11)}};
        const auto y = [&] {
            auto w = codeword_p11();
            w[2] += planted.values[0];
            w[7] += planted.values[1];
            return w;
        }();
        const auto tbl = syndrome_table(syndromes(y, spec_p11()), spec_p11());
        for (int i = 0; i <= 3; ++i)
            for (int k = 0; k < 3; ++k)
                CHECK(tbl.table.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) ==
                      s_direct(spec_p11(), planted, i, k));
    }
}

TEST_CASE("locator divisor") {
    SUBCASE("two-error case") {
        const auto tbl = syndrome_table(syndromes(received_two(), spec_p11()), spec_p11());
        const auto ld = locator_divisor(tbl, spec_p11());
        CHECK(ld.mu == 2);
        CHECK(ld.rho ==
              parse_ore_coeffs("[(8)/(z^2), (6)/(z), (1)]", spec_p11().derivation()));
    }
    SUBCASE("p=5 case") {
        const auto tbl = syndrome_table(syndromes(received_p5(), spec_p5()), spec_p5());
        // the golden 2x1 syndrome matrix and its echelon form
        CHECK(tbl.table.at(0, 0) == rf("(z^5+4*z^4+z^3+4*z^2)/(z^5+1)", 5));
        CHECK(tbl.table.at(1, 0) == rf("(4*z^2)/(z^2+2*z+1)", 5));
        const FunMatrix r = rcef(tbl.table);
        CHECK(r.at(0, 0).is_one());
        CHECK(r.at(1, 0) == rf("(4*z^3+2*z^2+2*z+4)/(z^3+4*z^2+z+4)", 5));
        const auto ld = locator_divisor(tbl, spec_p5());
        CHECK(ld.mu == 1);
        CHECK(ld.rho ==
              parse_ore_coeffs("[(z^3+3*z^2+3*z+1)/(z^3+4*z^2+z+4), (1)]",
                               spec_p5().derivation()));
    }
    SUBCASE("single planted error yields x - L(delta^k(alpha))") {
        for (int k = 0; k < 11; ++k) {
            auto y = codeword_p11();
            y[static_cast<std::size_t>(k)] += rf("(z^2+3)/(z+1)", 11);
            const auto tbl = syndrome_table(syndromes(y, spec_p11()), spec_p11());
            const auto ld = locator_divisor(tbl, spec_p11());
            CHECK(ld.mu == 1);
            CHECK(ld.rho == OrePoly::x_minus(spec_p11().derivation(),
                                             log_derivative(spec_p11().orbit(k),
                                                            *spec_p11().derivation())));
        }
    }
    SUBCASE("zero table is rejected") {
        const auto tbl = syndrome_table(syndromes(codeword_p11(), spec_p11()), spec_p11());
        CHECK_THROWS_AS(locator_divisor(tbl, spec_p11()), ParameterError);
    }
}

TEST_CASE("mu equals the largest full-rank syndrome truncation") {
    testutil::Rng rng(307);
    const CodeSpec& spec = spec_p11();
    for (int trial = 0; trial < 25; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 3);
        auto y = codeword_p11();
        std::vector<int> pos;
        while (static_cast<int>(pos.size()) < v) {
            const int k = static_cast<int>(rng() % 11);
            if (std::find(pos.begin(), pos.end(), k) == pos.end()) pos.push_back(k);
        }
        for (int k : pos) y[static_cast<std::size_t>(k)] += rand_rf(rng, Prime(11), 1, true);
        const auto tbl = syndrome_table(syndromes(y, spec), spec);
        if (tbl.table.is_zero()) continue;
        const auto ld = locator_divisor(tbl, spec);
        int expected_mu = 0;
        for (std::size_t r = 1; r <= tbl.table.cols(); ++r) {
            std::vector<std::size_t> rows(tbl.table.rows());
            std::vector<std::size_t> cols(r);
            for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
            for (std::size_t i = 0; i < r; ++i) cols[i] = i;
            if (rank(submatrix(tbl.table, rows, cols)) == r)
                expected_mu = static_cast<int>(r);
        }
        CHECK(ld.mu == expected_mu);
    }
}

TEST_CASE("candidate positions") {
    SUBCASE("two-error case with the golden rho_N") {
        const auto tbl = syndrome_table(syndromes(received_two(), spec_p11()), spec_p11());
        const auto ld = locator_divisor(tbl, spec_p11());
        const auto rho_n =
            row_times_matrix(ld.rho.padded_coeffs(11), spec_p11().n_matrix());
        const char* expected[] = {"(4)/(z^2)",  "(2)/(z^2)", "(2)/(z^2)", "(4)/(z^2)",
                                  "(8)/(z^2)",  "(3)/(z^2)", "(0)",       "(10)/(z^2)",
                                  "(0)",        "(3)/(z^2)", "(8)/(z^2)"};
        for (int i = 0; i < 11; ++i)
            CHECK(rho_n[static_cast<std::size_t>(i)] == rf(expected[i], 11));
        CHECK(candidate_positions(ld.rho, spec_p11()) == std::vector<int>{6, 8});
    }
    SUBCASE("three-error case sees a single zero") {
        const auto tbl = syndrome_table(syndromes(received_three(), spec_p11()), spec_p11());
        const auto ld = locator_divisor(tbl, spec_p11());
        CHECK(ld.mu == 2);
        const auto rho_n =
            row_times_matrix(ld.rho.padded_coeffs(11), spec_p11().n_matrix());
        const char* expected[] = {
            "(9*z^5+4)/(z^7+7*z^2)",  "(5)/(z^7+7*z^2)",       "(4*z^5+9)/(z^7+7*z^2)",
            "(10*z^5+5)/(z^7+7*z^2)", "(7*z^5+4)/(z^7+7*z^2)", "(6*z^5+6)/(z^7+7*z^2)",
            "(7*z^3)/(z^5+7)",        "(10*z^5+8)/(z^7+7*z^2)", "(4*z^5+8)/(z^7+7*z^2)",
            "(0)",                    "(9*z^5+6)/(z^7+7*z^2)"};
        for (int i = 0; i < 11; ++i)
            CHECK(rho_n[static_cast<std::size_t>(i)] == rf(expected[i], 11));
        CHECK(candidate_positions(ld.rho, spec_p11()) == std::vector<int>{9});
    }
    SUBCASE("p=5 case points at position 4") {
        const auto tbl = syndrome_table(syndromes(received_p5(), spec_p5()), spec_p5());
        const auto ld = locator_divisor(tbl, spec_p5());
        const auto rho_n = row_times_matrix(ld.rho.padded_coeffs(5), spec_p5().n_matrix());
        const char* expected[] = {
            "(1)/(z^4+4)", "(z^3+4*z^2+z)/(z^4+4)", "(3*z^2+2*z)/(z^3+z^2+z+1)",
            "(2*z^5+3*z^4+3*z^3+3*z^2+2*z)/(z^6+z^5+z^4+4*z^2+4*z+4)", "(0)"};
        for (int i = 0; i < 5; ++i)
            CHECK(rho_n[static_cast<std::size_t>(i)] == rf(expected[i], 5));
        CHECK(candidate_positions(ld.rho, spec_p5()) == std::vector<int>{4});
    }
}

TEST_CASE("three-error rcef matches the golden form") {
    const auto tbl = syndrome_table(syndromes(received_three(), spec_p11()), spec_p11());
    const FunMatrix r = rcef(tbl.table);
    const char* expected[4][3] = {
        {"(1)", "(0)", "(0)"},
        {"(0)", "(1)", "(0)"},
        {"(2*z^5+5)/(z^7+7*z^2)", "(9*z^5+6)/(z^6+7*z)", "(0)"},
        {"(3)/(z^3)", "(8)/(z^2)", "(0)"},
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(r.at(i, j) == rf(expected[i][j], 11));
}

TEST_CASE("full position recovery") {
    SUBCASE("three-error case, golden H_rho") {
        const auto tbl = syndrome_table(syndromes(received_three(), spec_p11()), spec_p11());
        const auto ld = locator_divisor(tbl, spec_p11());
        const FunMatrix h = locator_rref(ld.rho, spec_p11());
        REQUIRE(h.rows() == 9);
        REQUIRE(h.cols() == 11);
        // all rows except the second are unit rows eps_i
        const int unit_cols[] = {0, -1, 2, 3, 4, 5, 7, 8, 10};
        for (std::size_t i = 0; i < 9; ++i) {
            if (i == 1) continue;
            for (std::size_t j = 0; j < 11; ++j)
                CHECK(h.at(i, j) ==
                      (static_cast<int>(j) == unit_cols[i] ? RatFun::one(Prime(11))
                                                           : RatFun::zero(Prime(11))));
        }
        // the non-unit second row is (0,1,0,0,0,0,8z^5,0,0,0,0)
        for (std::size_t j = 0; j < 11; ++j) {
            const char* e = j == 1 ? "(1)" : (j == 6 ? "(8*z^5)" : "(0)");
            CHECK(h.at(1, j) == rf(e, 11));
        }
        CHECK(full_positions(ld.rho, spec_p11()) == std::vector<int>{1, 6, 9});
    }
    SUBCASE("agrees with candidate positions when rho is the locator") {
        const auto tbl = syndrome_table(syndromes(received_two(), spec_p11()), spec_p11());
        const auto ld = locator_divisor(tbl, spec_p11());
        CHECK(full_positions(ld.rho, spec_p11()) == candidate_positions(ld.rho, spec_p11()));
    }
    SUBCASE("two K-dependent constant errors at positions 2 and 5") {
        auto y = codeword_p11();
        y[2] += rf("1", 11);
        y[5] += rf("3", 11);
        const auto tbl = syndrome_table(syndromes(y, spec_p11()), spec_p11());
        const auto ld = locator_divisor(tbl, spec_p11());
        CHECK(ld.mu == 1);
        CHECK(candidate_positions(ld.rho, spec_p11()).size() != 1);
        CHECK(full_positions(ld.rho, spec_p11()) == std::vector<int>{2, 5});
    }
}

TEST_CASE("error values") {
    SUBCASE("two-error system") {
        const auto s = syndromes(received_two(), spec_p11());
        const auto vals = error_values({6, 8}, s, spec_p11());
        CHECK(vals == std::vector<RatFun>{rf("8", 11), rf("2*z^2", 11)});
    }
    SUBCASE("three-error system") {
        const auto s = syndromes(received_three(), spec_p11());
        const auto vals = error_values({1, 6, 9}, s, spec_p11());
        CHECK(vals == std::vector<RatFun>{rf("1", 11), rf("8", 11), rf("8*z^3", 11)});
    }
    SUBCASE("p=5 system") {
        const auto s = syndromes(received_p5(), spec_p5());
        CHECK(error_values({4}, s, spec_p5()) == std::vector<RatFun>{rf("z", 5)});
    }
    SUBCASE("rejects empty or oversized supports") {
        const auto s = syndromes(received_two(), spec_p11());
        CHECK_THROWS_AS(error_values({}, s, spec_p11()), ParameterError);
        CHECK_THROWS_AS(error_values({1, 2, 3, 4}, s, spec_p11()), ParameterError);
    }
}

TEST_CASE("decode_basic") {
    SUBCASE("uncorrupted codeword") {
        CHECK(decode_basic(codeword_p11(), spec_p11()).status == DecodeStatus::zero_error);
    }
    SUBCASE("two-error word") {
        const auto res = decode_basic(received_two(), spec_p11());
        REQUIRE(res.status == DecodeStatus::corrected);
        CHECK(res.error == ErrorVector{{6, 8}, {rf("8", 11), rf("2*z^2", 11)}});
        CHECK(error_polynomial(res.error, spec_p11().derivation()) ==
              parse_ore_coeffs("[(0), (0), (0), (0), (0), (0), (8), (0), (2*z^2)]",
                               spec_p11().derivation()));
    }
    SUBCASE("three-error word fails") {
        CHECK(decode_basic(received_three(), spec_p11()).status == DecodeStatus::failure);
    }
}

TEST_CASE("decode with the full algorithm") {
    SUBCASE("three-error word is recovered") {
        const auto res = decode(received_three(), spec_p11());
        REQUIRE(res.status == DecodeStatus::corrected);
        CHECK(res.error ==
              ErrorVector{{1, 6, 9}, {rf("1", 11), rf("8", 11), rf("8*z^3", 11)}});
    }
    SUBCASE("p=5 word") {
        const auto res = decode(received_p5(), spec_p5());
        REQUIRE(res.status == DecodeStatus::corrected);
        CHECK(res.error == ErrorVector{{4}, {rf("z", 5)}});
    }
    SUBCASE("random planted errors are recovered exactly") {
        testutil::Rng rng(311);
        for (const std::uint32_t p : {5u, 7u}) {
            const CodeSpec spec = CodeSpec::build(
                p, RatFun::one(Prime(p)), RatFun(PolyZ::one(Prime(p)), PolyZ::variable(Prime(p))),
                static_cast<int>(p) >= 7 ? 5 : 3, 0);
            for (int trial = 0; trial < 25; ++trial) {
                Message m;
                for (int i = 0; i < spec.dimension(); ++i)
                    m.coeffs.push_back(rand_rf(rng, spec.prime(), 2));
                auto y = encode(m, spec).coords;
                const int v = 1 + static_cast<int>(rng() % spec.tau());
                ErrorVector planted;
                while (static_cast<int>(planted.positions.size()) < v) {
                    const int k = static_cast<int>(rng() % p);
                    if (std::find(planted.positions.begin(), planted.positions.end(), k) ==
                        planted.positions.end())
                        planted.positions.push_back(k);
                }
                std::sort(planted.positions.begin(), planted.positions.end());
                for (int j = 0; j < v; ++j) {
                    planted.values.push_back(rand_rf(rng, spec.prime(), 2, true));
                    y[static_cast<std::size_t>(planted.positions[static_cast<std::size_t>(j)])] +=
                        planted.values.back();
                }
                const auto res = decode(y, spec);
                REQUIRE(res.status == DecodeStatus::corrected);
                CHECK(res.error == planted);
            }
        }
    }
}

TEST_CASE("divisor and locator degree properties") {
    testutil::Rng rng(313);
    const CodeSpec& spec = spec_p11();
    for (int trial = 0; trial < 20; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 3);
        ErrorVector planted;
        while (static_cast<int>(planted.positions.size()) < v) {
            const int k = static_cast<int>(rng() % 11);
            if (std::find(planted.positions.begin(), planted.positions.end(), k) ==
                planted.positions.end())
                planted.positions.push_back(k);
        }
        std::sort(planted.positions.begin(), planted.positions.end());
        auto y = codeword_p11();
        for (int j = 0; j < v; ++j) {
            planted.values.push_back(rand_rf(rng, Prime(11), 1, true));
            y[static_cast<std::size_t>(planted.positions[static_cast<std::size_t>(j)])] +=
                planted.values.back();
        }
        // true locator: llcm of x - L(delta^(k_j)(alpha))
        std::vector<OrePoly> factors;
        for (int k : planted.positions)
            factors.push_back(OrePoly::x_minus(
                spec.derivation(), log_derivative(spec.orbit(k), *spec.derivation())));
        const OrePoly lambda = llcm(spec.derivation(), factors);
        CHECK(lambda.degree() == v);
        const auto tbl = syndrome_table(syndromes(y, spec), spec);
        const auto ld = locator_divisor(tbl, spec);
        CHECK(right_divmod(lambda, ld.rho).second.is_zero());
    }
}

TEST_CASE("failure happens exactly for K-dependent error values") {
    testutil::Rng rng(317);
    const CodeSpec& spec = spec_p11();
    int failures_seen = 0, successes_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const bool force_dependent = trial % 2 == 0;
        ErrorVector planted;
        planted.positions = {static_cast<int>(rng() % 5),
                             5 + static_cast<int>(rng() % 6)};
        if (force_dependent) {
            // constants are K-dependent for v = 2
            planted.values = {RatFun::constant(Prime(11), 1 + rng() % 10),
                              RatFun::constant(Prime(11), 1 + rng() % 10)};
        } else {
            planted.values = {rand_rf(rng, Prime(11), 2, true), rand_rf(rng, Prime(11), 2, true)};
        }
        const FunMatrix w = wronskian(planted.values, 2, *spec.derivation());
        const bool dependent = rank(w) < 2;
        auto y = codeword_p11();
        for (std::size_t j = 0; j < 2; ++j)
            y[static_cast<std::size_t>(planted.positions[j])] += planted.values[j];
        const auto basic = decode_basic(y, spec);
        if (dependent) {
            CHECK(basic.status == DecodeStatus::failure);
            ++failures_seen;
        } else {
            REQUIRE(basic.status == DecodeStatus::corrected);
            CHECK(basic.error == planted);
            ++successes_seen;
        }
        const auto full = decode(y, spec);
        REQUIRE(full.status == DecodeStatus::corrected);
        CHECK(full.error == planted);
    }
    CHECK(failures_seen >= 20);
    CHECK(successes_seen > 0);
}

TEST_CASE("correct") {
    SUBCASE("two-error word recovers the message") {
        const auto [c, m] = correct(received_two(), spec_p11());
        CHECK(c.coords == codeword_p11());
        CHECK(m == Message{{rf("1", 11), rf("z", 11), rf("0", 11), rf("0", 11), rf("z^4", 11)}});
    }
    SUBCASE("three-error word recovers the message") {
        const auto [c, m] = correct(received_three(), spec_p11());
        CHECK(c.coords == codeword_p11());
        CHECK(m == Message{{rf("1", 11), rf("z", 11), rf("0", 11), rf("0", 11), rf("z^4", 11)}});
    }
    SUBCASE("uncorrupted word passes through") {
        const auto [c, m] = correct(codeword_p11(), spec_p11());
        CHECK(c.coords == codeword_p11());
        CHECK(m == Message{{rf("1", 11), rf("z", 11), rf("0", 11), rf("0", 11), rf("z^4", 11)}});
    }
}

TEST_CASE("beyond-capacity inputs are flagged, not miscorrected") {
    testutil::Rng rng(331);
    const CodeSpec& spec = spec_p11();
    int flagged = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto y = codeword_p11();
        std::vector<int> pos;
        while (pos.size() < 5) {
            const int k = static_cast<int>(rng() % 11);
            if (std::find(pos.begin(), pos.end(), k) == pos.end()) pos.push_back(k);
        }
        for (int k : pos) y[static_cast<std::size_t>(k)] += rand_rf(rng, Prime(11), 1, true);
        const auto res = decode(y, spec);
        if (res.status == DecodeStatus::beyond_capacity) {
            ++flagged;
            CHECK_THROWS_AS(correct(y, spec), BeyondCapacity);
        } else if (res.status == DecodeStatus::corrected) {
            // only acceptable if the correction really lands on a codeword
            auto fixed = y;
            for (std::size_t j = 0; j < res.error.positions.size(); ++j)
                fixed[static_cast<std::size_t>(res.error.positions[j])] -= res.error.values[j];
            CHECK(is_codeword(Codeword{fixed}, spec));
        }
    }
    CHECK(flagged >= 8);
}
