#include <ostream>
#include <string>
#include <vector>

#include "diffconv/cli.hpp"
#include "diffconv/pgz.hpp"

namespace diffconv {

namespace {

// Golden objects for the two replayed constructions. Values are stored in
// the canonical text format and compared as field elements, so the check is
// exact and independent of formatting details.
struct P11Golden {
    static constexpr std::uint32_t p = 11;
    static constexpr const char* dz = "(1)";
    static constexpr const char* alpha = "(1)/(z)";
    static constexpr int d = 7;

    static constexpr const char* g =
        "[(5)/(z^6), (8)/(z^5), (10)/(z^4), (2)/(z^3), (10)/(z^2), (3)/(z), (1)]";

    static const std::vector<std::vector<const char*>>& n_matrix() {
        static const std::vector<std::vector<const char*>> n = {
            {"(1)", "(1)", "(1)", "(1)", "(1)", "(1)", "(1)", "(1)", "(1)", "(1)", "(1)"},
            {"(10)/(z)", "(9)/(z)", "(8)/(z)", "(7)/(z)", "(6)/(z)", "(5)/(z)", "(4)/(z)",
             "(3)/(z)", "(2)/(z)", "(1)/(z)", "(0)"},
            {"(2)/(z^2)", "(6)/(z^2)", "(1)/(z^2)", "(9)/(z^2)", "(8)/(z^2)", "(9)/(z^2)",
             "(1)/(z^2)", "(6)/(z^2)", "(2)/(z^2)", "(0)", "(0)"},
            {"(5)/(z^3)", "(9)/(z^3)", "(6)/(z^3)", "(1)/(z^3)", "(10)/(z^3)", "(5)/(z^3)",
             "(2)/(z^3)", "(6)/(z^3)", "(0)", "(0)", "(0)"},
            {"(2)/(z^4)", "(10)/(z^4)", "(8)/(z^4)", "(4)/(z^4)", "(8)/(z^4)", "(10)/(z^4)",
             "(2)/(z^4)", "(0)", "(0)", "(0)", "(0)"},
            {"(1)/(z^5)", "(6)/(z^5)", "(10)/(z^5)", "(1)/(z^5)", "(5)/(z^5)", "(10)/(z^5)",
             "(0)", "(0)", "(0)", "(0)", "(0)"},
            {"(5)/(z^6)", "(2)/(z^6)", "(8)/(z^6)", "(2)/(z^6)", "(5)/(z^6)", "(0)", "(0)",
             "(0)", "(0)", "(0)", "(0)"},
            {"(9)/(z^7)", "(6)/(z^7)", "(5)/(z^7)", "(2)/(z^7)", "(0)", "(0)", "(0)", "(0)",
             "(0)", "(0)", "(0)"},
            {"(5)/(z^8)", "(1)/(z^8)", "(5)/(z^8)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)",
             "(0)", "(0)"},
            {"(10)/(z^9)", "(1)/(z^9)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)",
             "(0)"},
            {"(10)/(z^10)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)",
             "(0)"},
        };
        return n;
    }

    static const std::vector<const char*>& message() {
        static const std::vector<const char*> m = {"(1)", "(z)", "(0)", "(0)", "(z^4)"};
        return m;
    }

    static const std::vector<const char*>& codeword() {
        static const std::vector<const char*> c = {
            "(3)/(z^6)", "(5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)",
            "(3)",       "(3*z)",     "(9*z^2)",   "(3*z^3)",   "(z^4)"};
        return c;
    }

    static const std::vector<const char*>& received_two() {
        static const std::vector<const char*> y = {
            "(3)/(z^6)", "(5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)",
            "(0)",       "(3*z)",     "(0)",       "(3*z^3)",   "(z^4)"};
        return y;
    }

    static const std::vector<std::vector<const char*>>& syndrome_two() {
        static const std::vector<std::vector<const char*>> s = {
            {"(6)/(z^7)", "(9)/(z^8)", "(9)/(z^9)"},
            {"(4)/(z^8)", "(7)/(z^9)", "(7)/(z^10)"},
            {"(5)/(z^9)", "(7)/(z^10)", "(7)/(z^11)"},
            {"(3)/(z^10)", "(0)", "(0)"},
        };
        return s;
    }

    static const std::vector<std::vector<const char*>>& rcef_two() {
        static const std::vector<std::vector<const char*>> r = {
            {"(1)", "(0)", "(0)"},
            {"(0)", "(1)", "(0)"},
            {"(3)/(z^2)", "(5)/(z)", "(0)"},
            {"(9)/(z^3)", "(1)/(z^2)", "(0)"},
        };
        return r;
    }

    static const std::vector<const char*>& rho_two() {
        static const std::vector<const char*> r = {"(8)/(z^2)", "(6)/(z)", "(1)", "(0)", "(0)",
                                                   "(0)",       "(0)",     "(0)", "(0)", "(0)",
                                                   "(0)"};
        return r;
    }

    static const std::vector<const char*>& rho_n_two() {
        static const std::vector<const char*> r = {
            "(4)/(z^2)", "(2)/(z^2)",  "(2)/(z^2)", "(4)/(z^2)", "(8)/(z^2)", "(3)/(z^2)",
            "(0)",       "(10)/(z^2)", "(0)",       "(3)/(z^2)", "(8)/(z^2)"};
        return r;
    }

    static const std::vector<const char*>& values_two() {
        static const std::vector<const char*> v = {"(8)", "(2*z^2)"};
        return v;
    }

    static const std::vector<const char*>& received_three() {
        static const std::vector<const char*> y = {
            "(3)/(z^6)", "(z^5+5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)",
            "(0)",       "(3*z)",         "(9*z^2)",   "(0)",       "(z^4)"};
        return y;
    }

    static const std::vector<std::vector<const char*>>& rcef_three() {
        static const std::vector<std::vector<const char*>> r = {
            {"(1)", "(0)", "(0)"},
            {"(0)", "(1)", "(0)"},
            {"(2*z^5+5)/(z^7+7*z^2)", "(9*z^5+6)/(z^6+7*z)", "(0)"},
            {"(3)/(z^3)", "(8)/(z^2)", "(0)"},
        };
        return r;
    }

    static const std::vector<const char*>& rho_n_three() {
        static const std::vector<const char*> r = {
            "(9*z^5+4)/(z^7+7*z^2)",  "(5)/(z^7+7*z^2)",        "(4*z^5+9)/(z^7+7*z^2)",
            "(10*z^5+5)/(z^7+7*z^2)", "(7*z^5+4)/(z^7+7*z^2)",  "(6*z^5+6)/(z^7+7*z^2)",
            "(7*z^3)/(z^5+7)",        "(10*z^5+8)/(z^7+7*z^2)", "(4*z^5+8)/(z^7+7*z^2)",
            "(0)",                    "(9*z^5+6)/(z^7+7*z^2)"};
        return r;
    }

    static const std::vector<std::vector<const char*>>& h_rho_three() {
        static const std::vector<std::vector<const char*>> h = {
            {"(1)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)"},
            {"(0)", "(1)", "(0)", "(0)", "(0)", "(0)", "(8*z^5)", "(0)", "(0)", "(0)", "(0)"},
            {"(0)", "(0)", "(1)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)"},
            {"(0)", "(0)", "(0)", "(1)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)"},
            {"(0)", "(0)", "(0)", "(0)", "(1)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)"},
            {"(0)", "(0)", "(0)", "(0)", "(0)", "(1)", "(0)", "(0)", "(0)", "(0)", "(0)"},
            {"(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(1)", "(0)", "(0)", "(0)"},
            {"(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(1)", "(0)", "(0)"},
            {"(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(0)", "(1)"},
        };
        return h;
    }

    static const std::vector<const char*>& values_three() {
        static const std::vector<const char*> v = {"(1)", "(8)", "(8*z^3)"};
        return v;
    }
};

struct P5Golden {
    static constexpr std::uint32_t p = 5;
    static constexpr const char* dz = "(z)";
    static constexpr const char* alpha = "(1)/(z+1)";
    static constexpr int d = 3;

    static constexpr const char* g = "[(2*z^2)/(z^2+2*z+1), (3*z+4)/(z+1), (1)]";
    static constexpr const char* gamma = "(1)";
    static constexpr const char* central = "[(0), (4), (0), (0), (0), (1)]";

    static const std::vector<std::vector<const char*>>& n_matrix() {
        static const std::vector<std::vector<const char*>> n = {
            {"(1)", "(1)", "(1)", "(1)", "(1)"},
            {"(4*z)/(z+1)", "(4*z+1)/(z+1)", "(4*z^2+4*z+4)/(z^2+4)",
             "(4*z^3+z^2+4*z+1)/(z^3+2*z^2+2*z+1)", "(4*z^3+2*z^2+2*z+4)/(z^3+4*z^2+z+4)"},
            {"(z^2+4*z)/(z^2+2*z+1)", "(z^2+z+1)/(z^2+2*z+1)", "(z^2+1)/(z^2+2*z+1)",
             "(z^2+2*z+1)/(z^2+z+1)", "(z^2+2*z+1)/(z^2+1)"},
            {"(4*z^3+4*z^2+4*z)/(z^3+3*z^2+3*z+1)", "(4*z^3+z^2+4*z+1)/(z^3+3*z^2+3*z+1)",
             "(4*z+4)/(z+4)", "(4*z^2+1)/(z^2+z+1)", "(4*z^3+3*z^2+3*z+4)/(z^3+4*z^2+z+4)"},
            {"(z^4+4*z^3+z^2+4*z)/(z^4+4*z^3+z^2+4*z+1)", "(1)", "(1)", "(1)", "(1)"},
        };
        return n;
    }

    static const std::vector<const char*>& message() {
        static const std::vector<const char*> m = {"(1)", "(0)", "(0)"};
        return m;
    }

    static const std::vector<const char*>& codeword() {
        static const std::vector<const char*> c = {"(2*z^2)/(z^2+2*z+1)", "(3*z+4)/(z+1)", "(1)",
                                                   "(0)", "(0)"};
        return c;
    }

    static const std::vector<const char*>& received() {
        static const std::vector<const char*> y = {"(2*z^2)/(z^2+2*z+1)", "(3*z+4)/(z+1)", "(1)",
                                                   "(0)", "(z)"};
        return y;
    }

    static const std::vector<std::vector<const char*>>& syndrome() {
        static const std::vector<std::vector<const char*>> s = {
            {"(z^5+4*z^4+z^3+4*z^2)/(z^5+1)"},
            {"(4*z^2)/(z^2+2*z+1)"},
        };
        return s;
    }

    static const std::vector<std::vector<const char*>>& rcef() {
        static const std::vector<std::vector<const char*>> r = {
            {"(1)"},
            {"(4*z^3+2*z^2+2*z+4)/(z^3+4*z^2+z+4)"},
        };
        return r;
    }

    static const std::vector<const char*>& rho() {
        static const std::vector<const char*> r = {"(z^3+3*z^2+3*z+1)/(z^3+4*z^2+z+4)", "(1)",
                                                   "(0)", "(0)", "(0)"};
        return r;
    }

    static const std::vector<const char*>& rho_n() {
        static const std::vector<const char*> r = {
            "(1)/(z^4+4)", "(z^3+4*z^2+z)/(z^4+4)", "(3*z^2+2*z)/(z^3+z^2+z+1)",
            "(2*z^5+3*z^4+3*z^3+3*z^2+2*z)/(z^6+z^5+z^4+4*z^2+4*z+4)", "(0)"};
        return r;
    }

    static const std::vector<const char*>& values() {
        static const std::vector<const char*> v = {"(z)"};
        return v;
    }
};

// Compares computed objects against the golden tables, printing each object
// as it is checked. In perturb mode the first golden value is corrupted, so
// the run must fail; that is the negative control of the comparison logic.
class GoldenSession {
  public:
    GoldenSession(std::ostream& out, std::ostream& err, bool perturb)
        : out_(out), err_(err), perturb_(perturb) {}

    bool failed() const { return failed_; }

    bool check_ratfun(const std::string& name, const RatFun& actual, const char* expected) {
        return compare(name, format_ratfun(actual),
                       actual == parse_ratfun(golden(expected), actual.prime()), expected);
    }

    bool check_ore(const std::string& name, const OrePoly& actual, const char* expected) {
        const OrePoly want =
            parse_ore_coeffs(golden(expected), actual.context());
        return compare(name, format_ore_pretty(actual), actual == want, expected);
    }

    bool check_word(const std::string& name, const std::vector<RatFun>& actual,
                    const std::vector<const char*>& expected, Prime p) {
        std::string shown;
        bool ok = actual.size() == expected.size();
        for (std::size_t i = 0; i < actual.size(); ++i) {
            if (i > 0) shown += ", ";
            shown += format_ratfun(actual[i]);
            if (ok && actual[i] != parse_ratfun(golden(expected[i]), p)) ok = false;
        }
        return compare(name, "(" + shown + ")", ok, join(expected));
    }

    bool check_matrix(const std::string& name, const FunMatrix& actual,
                      const std::vector<std::vector<const char*>>& expected) {
        bool ok = actual.rows() == expected.size();
        for (std::size_t i = 0; ok && i < actual.rows(); ++i) {
            if (actual.cols() != expected[i].size()) {
                ok = false;
                break;
            }
            for (std::size_t j = 0; j < actual.cols(); ++j)
                if (actual.at(i, j) != parse_ratfun(golden(expected[i][j]), actual.prime())) {
                    ok = false;
                    break;
                }
        }
        std::string shown = "\n" + format_matrix(actual);
        shown.pop_back();
        return compare(name, shown, ok, "(matrix)");
    }

    bool check_positions(const std::string& name, const std::vector<int>& actual,
                         const std::vector<int>& expected) {
        std::string shown;
        for (std::size_t i = 0; i < actual.size(); ++i)
            shown += (i > 0 ? "," : "") + std::to_string(actual[i]);
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i)
            want += (i > 0 ? "," : "") + std::to_string(expected[i]);
        return compare(name, shown, actual == expected && !perturb_positions(), want.c_str());
    }

    bool check_flag(const std::string& name, bool ok, const std::string& shown) {
        return compare(name, shown, ok, "(see algorithm contract)");
    }

  private:
    // Consumes one golden literal; in perturb mode the first one served is
    // corrupted by bumping its first digit.
    std::string golden(const char* text) {
        std::string s = text;
        if (perturb_ && !perturb_done_) {
            for (auto& c : s)
                if (c >= '0' && c <= '9') {
                    c = static_cast<char>('0' + (c - '0' + 1) % 10);
                    perturb_done_ = true;
                    break;
                }
        }
        return s;
    }

    bool perturb_positions() {
        if (!perturb_ || perturb_done_) return false;
        perturb_done_ = true;
        return true;
    }

    static std::string join(const std::vector<const char*>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += std::string(i > 0 ? ", " : "") + v[i];
        return s;
    }

    bool compare(const std::string& name, const std::string& shown, bool ok,
                 const std::string& expected) {
        out_ << name << " = " << shown << '\n';
        if (ok) {
            out_ << "  [ok]\n";
            return true;
        }
        failed_ = true;
        err_ << "mismatch in " << name << "\n  expected: " << expected
             << "\n  actual:   " << shown << '\n';
        return false;
    }

    std::ostream& out_;
    std::ostream& err_;
    bool perturb_;
    bool perturb_done_ = false;
    bool failed_ = false;
};

std::vector<RatFun> parse_list(const std::vector<const char*>& strs, Prime p) {
    std::vector<RatFun> out;
    out.reserve(strs.size());
    for (const char* s : strs) out.push_back(parse_ratfun(s, p));
    return out;
}

template <typename G>
void run_two_error_scenario(GoldenSession& gs, const CodeSpec& spec) {
    const std::vector<RatFun> y = parse_list(G::received_two(), spec.prime());
    gs.check_word("received word (two errors)", y, G::received_two(), spec.prime());

    const SyndromeTable tbl = syndrome_table(syndromes(y, spec), spec);
    gs.check_matrix("syndrome table S^tau", tbl.table, G::syndrome_two());
    gs.check_matrix("rcef(S^tau)", rcef(tbl.table), G::rcef_two());

    const LocatorDivisor ld = locator_divisor(tbl, spec);
    gs.check_word("rho", ld.rho.padded_coeffs(static_cast<int>(spec.prime().value())),
                  G::rho_two(), spec.prime());
    gs.check_word("rho_N", row_times_matrix(ld.rho.padded_coeffs(11), spec.n_matrix()),
                  G::rho_n_two(), spec.prime());
    gs.check_positions("error positions", candidate_positions(ld.rho, spec), {6, 8});

    const DecodeResult res = decode_basic(y, spec);
    gs.check_flag("algorithm 1 corrects the word", res.status == DecodeStatus::corrected,
                  "corrected");
    gs.check_word("error values", res.error.values, G::values_two(), spec.prime());

    const auto [corrected, recovered] = correct(y, spec);
    gs.check_word("corrected codeword", corrected.coords, G::codeword(), spec.prime());
    gs.check_word("recovered message", recovered.coeffs, G::message(), spec.prime());
}

template <typename G>
void run_three_error_scenario(GoldenSession& gs, const CodeSpec& spec) {
    const std::vector<RatFun> y = parse_list(G::received_three(), spec.prime());
    gs.check_word("received word (three errors)", y, G::received_three(), spec.prime());

    gs.check_flag("algorithm 1 reports a decoding failure",
                  decode_basic(y, spec).status == DecodeStatus::failure, "decoding failure");

    const SyndromeTable tbl = syndrome_table(syndromes(y, spec), spec);
    gs.check_matrix("rcef(S^tau)", rcef(tbl.table), G::rcef_three());
    const LocatorDivisor ld = locator_divisor(tbl, spec);
    gs.check_word("rho_N", row_times_matrix(ld.rho.padded_coeffs(11), spec.n_matrix()),
                  G::rho_n_three(), spec.prime());
    gs.check_matrix("H_rho", locator_rref(ld.rho, spec), G::h_rho_three());
    gs.check_positions("error positions", full_positions(ld.rho, spec), {1, 6, 9});

    const DecodeResult res = decode(y, spec);
    gs.check_flag("algorithm 2 corrects the word", res.status == DecodeStatus::corrected,
                  "corrected");
    gs.check_word("error values", res.error.values, G::values_three(), spec.prime());
    gs.check_ore("error polynomial", error_polynomial(res.error, spec.derivation()),
                 "[(0), (1), (0), (0), (0), (0), (8), (0), (0), (8*z^3)]");

    const auto [corrected, recovered] = correct(y, spec);
    gs.check_word("corrected codeword", corrected.coords, G::codeword(), spec.prime());
    gs.check_word("recovered message", recovered.coeffs, G::message(), spec.prime());
}

int demo_p11(GoldenSession& gs) {
    using G = P11Golden;
    const CodeSpec spec =
        CodeSpec::build(G::p, parse_ratfun(G::dz, Prime(G::p)),
                        parse_ratfun(G::alpha, Prime(G::p)), G::d, 0);
    gs.check_ore("generator g", spec.generator(), G::g);
    gs.check_matrix("evaluation matrix N", spec.n_matrix(), G::n_matrix());

    const Message m{parse_list(G::message(), spec.prime())};
    gs.check_word("encoded message", encode(m, spec).coords, G::codeword(), spec.prime());

    run_two_error_scenario<G>(gs, spec);
    run_three_error_scenario<G>(gs, spec);
    return gs.failed() ? exit_code::mismatch : exit_code::ok;
}

int demo_p5(GoldenSession& gs) {
    using G = P5Golden;
    const CodeSpec spec =
        CodeSpec::build(G::p, parse_ratfun(G::dz, Prime(G::p)),
                        parse_ratfun(G::alpha, Prime(G::p)), G::d, 0);
    gs.check_ratfun("gamma", spec.gamma(), G::gamma);
    gs.check_ore("generator g", spec.generator(), G::g);

    // x^5 - x decomposes as the llcm of the five orbit factors
    std::vector<OrePoly> factors;
    for (int i = 0; i < 5; ++i)
        factors.push_back(OrePoly::x_minus(
            spec.derivation(), log_derivative(spec.orbit(i), *spec.derivation())));
    gs.check_ore("llcm of the five linear factors", llcm(spec.derivation(), factors),
                 G::central);

    gs.check_matrix("evaluation matrix N", spec.n_matrix(), G::n_matrix());

    const Message m{parse_list(G::message(), spec.prime())};
    gs.check_word("encoded message", encode(m, spec).coords, G::codeword(), spec.prime());

    const std::vector<RatFun> y = parse_list(G::received(), spec.prime());
    gs.check_word("received word", y, G::received(), spec.prime());

    const SyndromeTable tbl = syndrome_table(syndromes(y, spec), spec);
    gs.check_matrix("syndrome table S^tau", tbl.table, G::syndrome());
    gs.check_matrix("rcef(S^tau)", rcef(tbl.table), G::rcef());
    const LocatorDivisor ld = locator_divisor(tbl, spec);
    gs.check_word("rho", ld.rho.padded_coeffs(5), G::rho(), spec.prime());
    gs.check_word("rho_N", row_times_matrix(ld.rho.padded_coeffs(5), spec.n_matrix()),
                  G::rho_n(), spec.prime());
    gs.check_positions("error positions", candidate_positions(ld.rho, spec), {4});

    const DecodeResult res = decode(y, spec);
    gs.check_flag("algorithm corrects the word", res.status == DecodeStatus::corrected,
                  "corrected");
    gs.check_word("error values", res.error.values, G::values(), spec.prime());

    const auto [corrected, recovered] = correct(y, spec);
    gs.check_word("corrected codeword", corrected.coords, G::codeword(), spec.prime());
    gs.check_word("recovered message", recovered.coeffs, G::message(), spec.prime());
    return gs.failed() ? exit_code::mismatch : exit_code::ok;
}

}  // namespace

int run_demo(const std::string& which, bool perturb, std::ostream& out, std::ostream& err) {
    GoldenSession gs(out, err, perturb);
    if (which == "p11") {
        out << "replaying the p = 11, d = 7 construction\n";
        return demo_p11(gs);
    }
    if (which == "p5") {
        out << "replaying the p = 5, d = 3 construction\n";
        return demo_p5(gs);
    }
    err << "unknown demo '" << which << "' (expected p11 or p5)\n";
    return exit_code::mismatch;
}

}  // namespace diffconv
