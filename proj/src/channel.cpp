#include "diffconv/channel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace diffconv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(splitmix64(seed) ^ (trial + 0x632be59bd9b4e019ULL)));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw ParameterError("uniform_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

std::vector<RatFun> inject_errors(const Codeword& c, const std::vector<int>& positions,
                                  const std::vector<RatFun>& values) {
    if (positions.size() != values.size())
        throw ParameterError("positions and values must have the same length");
    std::set<int> seen;
    std::vector<RatFun> y = c.coords;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        const int k = positions[j];
        if (k < 0 || k >= static_cast<int>(y.size()))
            throw ParameterError("error position out of range");
        if (!seen.insert(k).second) throw ParameterError("duplicate error position");
        if (values[j].is_zero()) throw ParameterError("error value must be nonzero");
        y[static_cast<std::size_t>(k)] += values[j];
    }
    return y;
}

RatFun random_ratfun(Prime p, int degree_bound, bool nonzero, Rng& rng) {
    if (degree_bound < 0) throw ParameterError("negative degree bound");
    const auto random_poly = [&](bool want_nonzero) {
        for (;;) {
            std::vector<std::uint32_t> c(static_cast<std::size_t>(degree_bound) + 1);
            for (auto& x : c) x = static_cast<std::uint32_t>(uniform_below(rng, p.value()));
            PolyZ poly(p, std::move(c));
            if (!want_nonzero || !poly.is_zero()) return poly;
        }
    };
    for (;;) {
        RatFun f(random_poly(nonzero), random_poly(true));
        if (!nonzero || !f.is_zero()) return f;
    }
}

std::pair<std::vector<int>, std::vector<RatFun>> random_error(const CodeSpec& spec, int v,
                                                              int degree_bound, Rng& rng) {
    if (v < 1 || v > spec.tau()) throw ParameterError("error count must be in [1, tau]");
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < v)
        chosen.insert(static_cast<int>(uniform_below(rng, spec.prime().value())));
    std::vector<int> positions(chosen.begin(), chosen.end());
    std::vector<RatFun> values;
    values.reserve(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j)
        values.push_back(random_ratfun(spec.prime(), degree_bound, true, rng));
    return {std::move(positions), std::move(values)};
}

namespace {

std::string dump_instance(const CodeSpec& spec, int trial, std::uint64_t seed,
                          const Message& m, const ErrorVector& planted,
                          const DecodeResult& got) {
    std::ostringstream out;
    out << "trial mismatch: trial=" << trial << " seed=" << seed << '\n';
    out << "spec:\n" << format_code_spec(spec);
    out << "message:";
    for (const auto& c : m.coeffs) out << ' ' << format_ratfun(c);
    out << "\nplanted positions:";
    for (int k : planted.positions) out << ' ' << k;
    out << "\nplanted values:";
    for (const auto& v : planted.values) out << ' ' << format_ratfun(v);
    out << "\ndecode status=" << static_cast<int>(got.status);
    if (got.status == DecodeStatus::corrected) {
        out << "\ngot positions:";
        for (int k : got.error.positions) out << ' ' << k;
        out << "\ngot values:";
        for (const auto& v : got.error.values) out << ' ' << format_ratfun(v);
    }
    out << '\n';
    return out.str();
}

}  // namespace

TrialReport run_trials(const CodeSpec& spec, const TrialConfig& cfg) {
    if (cfg.trials < 1) throw ParameterError("at least one trial required");
    if (cfg.max_errors < 0 || cfg.max_errors > spec.tau())
        throw ParameterError("max_errors must lie in [0, tau]");
    TrialReport report;
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    long long positions_total = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t));
        Message m;
        m.coeffs.reserve(static_cast<std::size_t>(spec.dimension()));
        for (int i = 0; i < spec.dimension(); ++i)
            m.coeffs.push_back(random_ratfun(spec.prime(), cfg.value_degree_bound, false, rng));
        const Codeword c = encode(m, spec);
        ErrorVector planted;
        if (cfg.max_errors > 0) {
            auto [pos, vals] = random_error(spec, cfg.max_errors, cfg.value_degree_bound, rng);
            planted = ErrorVector{std::move(pos), std::move(vals)};
        }
        positions_total += static_cast<long long>(planted.positions.size());
        const std::vector<RatFun> y = inject_errors(c, planted.positions, planted.values);

        if (decode_basic(y, spec).status == DecodeStatus::failure) ++report.basic_failures;

        const DecodeResult res = decode(y, spec);
        const bool ok = planted.positions.empty()
                            ? res.status == DecodeStatus::zero_error
                            : res.status == DecodeStatus::corrected && res.error == planted;
        if (!ok) throw TrialMismatch(dump_instance(spec, t, cfg.seed, m, planted, res));
        const auto [corrected, recovered] = correct(y, spec);
        if (!(corrected == c) || !(recovered == m))
            throw TrialMismatch(dump_instance(spec, t, cfg.seed, m, planted, res));
        ++report.successes;
    }
    report.mean_errors =
        report.trials == 0 ? 0.0 : static_cast<double>(positions_total) / report.trials;
    return report;
}

std::vector<RatFun> sentence_to_nodes(const Codeword& c) { return c.coords; }

Codeword nodes_to_sentence(const std::vector<RatFun>& payloads) { return Codeword{payloads}; }

std::string format_trial_report(const TrialReport& r) {
    std::ostringstream out;
    out << "trials=" << r.trials << '\n';
    out << "successes=" << r.successes << '\n';
    out << "basic_failures=" << r.basic_failures << '\n';
    out << "mean_errors=" << r.mean_errors << '\n';
    out << "seed=" << r.seed << '\n';
    out << "summary trials=" << r.trials << " successes=" << r.successes
        << " basic_failures=" << r.basic_failures << " mean_errors=" << r.mean_errors
        << " seed=" << r.seed << '\n';
    return out.str();
}

}  // namespace diffconv
