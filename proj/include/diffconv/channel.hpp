#ifndef DIFFCONV_CHANNEL_HPP
#define DIFFCONV_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diffconv/pgz.hpp"

namespace diffconv {

using Rng = std::mt19937_64;

/// Deterministic per-trial stream derived from (seed, trial index), so
/// results do not depend on execution order.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform draw from [0, n); exact (rejection sampling).
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

struct TrialConfig {
    int trials = 1;
    int max_errors = 0;  // errors planted per trial (exactly this many), <= tau
    int value_degree_bound = 0;
    std::uint64_t seed = 0;
};

struct TrialReport {
    int trials = 0;
    int successes = 0;        // exact Algorithm 2 recoveries
    int basic_failures = 0;   // Algorithm 1 decoding-failure exits
    double mean_errors = 0.0;
    std::uint64_t seed = 0;
};

/// A trial decoded to something other than the planted error; the message
/// carries a full instance dump for replay.
class TrialMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// y = c + e at the given positions. Positions must be distinct and values
/// nonzero.
std::vector<RatFun> inject_errors(const Codeword& c, const std::vector<int>& positions,
                                  const std::vector<RatFun>& values);

/// Uniform rational function with numerator and denominator degrees bounded
/// by degree_bound; optionally constrained to be nonzero.
RatFun random_ratfun(Prime p, int degree_bound, bool nonzero, Rng& rng);

/// v distinct uniform positions in [0, p) with nonzero random values.
std::pair<std::vector<int>, std::vector<RatFun>> random_error(const CodeSpec& spec, int v,
                                                              int degree_bound, Rng& rng);

/// Encode random messages, plant random errors, decode with Algorithm 2 and
/// compare exactly; also counts how often Algorithm 1 alone would fail.
/// Throws TrialMismatch on any exact mismatch.
TrialReport run_trials(const CodeSpec& spec, const TrialConfig& cfg);

/// Distributed-storage framing: node j stores coordinate j.
std::vector<RatFun> sentence_to_nodes(const Codeword& c);
Codeword nodes_to_sentence(const std::vector<RatFun>& payloads);

/// key=value lines followed by a single-line machine-readable summary.
std::string format_trial_report(const TrialReport& r);

}  // namespace diffconv

#endif
