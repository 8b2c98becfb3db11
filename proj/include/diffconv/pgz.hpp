#ifndef DIFFCONV_PGZ_HPP
#define DIFFCONV_PGZ_HPP

#include <utility>
#include <vector>

#include "diffconv/code.hpp"

namespace diffconv {

/// More than tau errors were detected (a violated internal contract);
/// thrown by correct(), reported as a status by decode().
class BeyondCapacity : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Syndromes s_0..s_{2tau-1} together with the (tau+1) x tau table of
/// S_{i,k} values filled by S_{i,0} = s_i * delta^i(alpha) and the
/// recursion S_{i,k+1} = delta(S_{i,k}) - S_{i+1,k}.
struct SyndromeTable {
    std::vector<RatFun> s;
    FunMatrix table;
};

/// Monic degree-mu right divisor of the error locator, read off the
/// reduced column echelon form of the syndrome table.
struct LocatorDivisor {
    int mu;
    OrePoly rho;
};

/// Error positions (sorted, distinct) with their nonzero values.
struct ErrorVector {
    std::vector<int> positions;
    std::vector<RatFun> values;

    friend bool operator==(const ErrorVector& a, const ErrorVector& b) {
        return a.positions == b.positions && a.values == b.values;
    }
};

enum class DecodeStatus {
    zero_error,       // all syndromes vanish; nothing to correct
    corrected,        // error found; `error` holds it
    failure,          // Algorithm 1 only: |positions| != mu
    beyond_capacity,  // an internal contract failed; > tau errors likely
};

struct DecodeResult {
    DecodeStatus status;
    ErrorVector error;  // meaningful only when status == corrected
};

/// s_i = y[L(delta^i(alpha))] for 0 <= i < 2*tau, i.e. the first 2*tau
/// entries of coords(y) * N. Requires offset r = 0.
std::vector<RatFun> syndromes(const std::vector<RatFun>& y, const CodeSpec& spec);

SyndromeTable syndrome_table(const std::vector<RatFun>& s, const CodeSpec& spec);

/// Extracts (mu, rho) from rcef(S^tau). Throws InternalCheckError when the
/// echelon form does not have the guaranteed [I_mu / a-row / H'] shape.
LocatorDivisor locator_divisor(const SyndromeTable& tbl, const CodeSpec& spec);

/// Positions t with rho[L(delta^t(alpha))] = 0: zero entries of the padded
/// coefficient row of rho times N.
std::vector<int> candidate_positions(const OrePoly& rho, const CodeSpec& spec);

/// H_rho = rref(M_rho * N) where the rows of M_rho are the coordinates of
/// x^i * rho, i = 0..p-1-deg(rho).
FunMatrix locator_rref(const OrePoly& rho, const CodeSpec& spec);

/// Full position recovery: delete the non-unit rows of H_rho; the zero
/// columns of what remains are the error positions.
std::vector<int> full_positions(const OrePoly& rho, const CodeSpec& spec);

/// Solves (x_1..x_v) (Sigma^(v-1))^tr = (alpha s_0, ..., delta^(v-1)(alpha)
/// s_{v-1}); the coefficient matrix is a transposed Wronskian.
std::vector<RatFun> error_values(const std::vector<int>& positions,
                                 const std::vector<RatFun>& s, const CodeSpec& spec);

/// Algorithm with an unlikely decoding-failure exit: reports failure when
/// the locator divisor roots do not account for its degree.
DecodeResult decode_basic(const std::vector<RatFun>& y, const CodeSpec& spec);

/// Full decoder: the failure branch recovers the positions from H_rho and
/// always succeeds when at most tau coordinates are corrupted.
DecodeResult decode(const std::vector<RatFun>& y, const CodeSpec& spec);

/// Returns (y - e, unencode(y - e)); throws BeyondCapacity when decoding
/// fails and NotACodeword when the corrected word is not in the code.
std::pair<Codeword, Message> correct(const std::vector<RatFun>& y, const CodeSpec& spec);

/// The error as a length-p coordinate vector.
std::vector<RatFun> error_word(const ErrorVector& e, Prime p);

/// The error as a polynomial sum e_j x^(k_j).
OrePoly error_polynomial(const ErrorVector& e, DerivationPtr ctx);

}  // namespace diffconv

#endif
