#ifndef DIFFCONV_CODE_HPP
#define DIFFCONV_CODE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "diffconv/linalg.hpp"
#include "diffconv/ore.hpp"
#include "diffconv/rfield.hpp"

namespace diffconv {

/// alpha is not a cyclic vector: its delta-orbit fails to be a K-basis.
class NotCyclicVector : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A word that was required to lie in the code does not.
class NotACodeword : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Length-(p-d+1) message, coefficients of a representative of degree < p-d+1.
struct Message {
    std::vector<RatFun> coeffs;

    friend bool operator==(const Message& a, const Message& b) { return a.coeffs == b.coeffs; }
};

/// Length-p coordinate vector of a code element.
struct Codeword {
    std::vector<RatFun> coords;

    friend bool operator==(const Codeword& a, const Codeword& b) { return a.coords == b.coords; }
};

/// A Reed-Solomon differential convolutional code: the left ideal of
/// R/R(x^p - gamma*x) generated by
///   g = llcm( x - L(delta^r(alpha)), ..., x - L(delta^(r+d-2)(alpha)) ).
/// Immutable after construction; every invariant is verified eagerly.
class CodeSpec {
  public:
    /// Builds and verifies a code. Throws ParameterError for out-of-range
    /// arguments, NotCyclicVector when the Wronskian of the delta-orbit of
    /// alpha is singular, InternalCheckError if a structural check fails.
    static CodeSpec build(std::uint32_t p, const RatFun& dz, const RatFun& alpha, int d, int r);

    Prime prime() const noexcept { return ctx_->prime(); }
    const DerivationPtr& derivation() const noexcept { return ctx_; }
    const RatFun& alpha() const noexcept { return alpha_; }
    int distance() const noexcept { return d_; }
    int offset() const noexcept { return r_; }
    int tau() const noexcept { return (d_ - 1) / 2; }
    int dimension() const noexcept { return static_cast<int>(prime().value()) - d_ + 1; }
    const OrePoly& generator() const noexcept { return g_; }
    const RatFun& gamma() const noexcept { return ctx_->gamma(); }
    const FunMatrix& n_matrix() const noexcept { return nmat_; }
    const FunMatrix& parity_check() const noexcept { return hmat_; }
    /// delta^k(alpha) for 0 <= k <= 2p-2.
    const RatFun& orbit(int k) const;

  private:
    CodeSpec(DerivationPtr ctx, RatFun alpha, int d, int r, OrePoly g, FunMatrix nmat,
             FunMatrix hmat, std::vector<RatFun> orbit);

    DerivationPtr ctx_;
    RatFun alpha_;
    int d_;
    int r_;
    OrePoly g_;
    FunMatrix nmat_;
    FunMatrix hmat_;
    std::vector<RatFun> orbit_;
};

/// The p x p evaluation matrix with entry (i, j) = N_i(L(delta^j(alpha))),
/// satisfying coords(f) * N = (f[alpha], f[delta(alpha)], ...).
FunMatrix build_n_matrix(const Derivation& d, std::span<const RatFun> orbit);

/// The generator computed from the linear system (g_0,...,g_{d-2}) A = -b
/// over the N matrix instead of the llcm route; both must agree exactly.
OrePoly generator_by_linear_system(const CodeSpec& spec);

Codeword encode(const Message& m, const CodeSpec& spec);

/// Right division by the generator; throws NotACodeword on a nonzero
/// remainder.
Message unencode(const Codeword& c, const CodeSpec& spec);

bool is_codeword(const Codeword& c, const CodeSpec& spec);

/// Line-oriented key=value code description; includes the computed g.
std::string format_code_spec(const CodeSpec& spec);
CodeSpec parse_code_spec(std::string_view text, ParseMode mode = ParseMode::lenient);

/// One rational function per line, line index = coordinate index.
std::string format_word(std::span<const RatFun> coords);
std::vector<RatFun> parse_word(std::string_view text, Prime p,
                               ParseMode mode = ParseMode::lenient);

}  // namespace diffconv

#endif
