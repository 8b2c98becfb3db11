#ifndef DIFFCONV_RFIELD_HPP
#define DIFFCONV_RFIELD_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diffconv {

/// Invalid field arithmetic: division by zero, mixed moduli.
class FieldError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Rejected construction parameters (p out of range, bad distance, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A verified internal invariant failed; indicates a bug, not bad input.
class InternalCheckError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Text could not be parsed; position() is a byte offset into the input.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)),
          pos_(position) {}
    std::size_t position() const noexcept { return pos_; }

  private:
    std::size_t pos_;
};

/// Prime modulus p with scalar arithmetic in F_p. Supported range is
/// 3 <= p <= 31; construction rejects anything else.
class Prime {
  public:
    explicit Prime(std::uint32_t p);

    std::uint32_t value() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b % p_) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a % p_; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    std::uint32_t reduce(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(Prime a, Prime b) noexcept { return a.p_ != b.p_; }

  private:
    std::uint32_t p_;
};

/// Dense polynomial over F_p in the variable z. Coefficients are stored
/// little-endian (index = degree) with no trailing zeros; the zero
/// polynomial has an empty coefficient vector and degree neg_inf_degree.
class PolyZ {
  public:
    static constexpr int neg_inf_degree = std::numeric_limits<int>::min();

    explicit PolyZ(Prime p) : p_(p) {}
    PolyZ(Prime p, std::vector<std::uint32_t> coeffs);

    static PolyZ constant(Prime p, std::uint32_t c) { return monomial(p, c, 0); }
    static PolyZ one(Prime p) { return constant(p, 1); }
    static PolyZ variable(Prime p) { return monomial(p, 1, 1); }
    static PolyZ monomial(Prime p, std::uint32_t c, int deg);

    Prime prime() const noexcept { return p_; }
    int degree() const noexcept { return c_.empty() ? neg_inf_degree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    std::uint32_t coeff(int i) const noexcept {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
    }
    std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    PolyZ& operator+=(const PolyZ& rhs);
    PolyZ& operator-=(const PolyZ& rhs);
    PolyZ& operator*=(const PolyZ& rhs) { return *this = *this * rhs; }
    PolyZ operator-() const;
    friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
    friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);

    PolyZ times(std::uint32_t c) const;
    PolyZ shifted(int k) const;
    PolyZ made_monic() const;
    PolyZ derivative() const;

    /// f = q*g + r with deg r < deg g.
    static std::pair<PolyZ, PolyZ> divmod(const PolyZ& f, const PolyZ& g);
    /// Monic gcd; gcd(0, 0) = 0 by convention.
    static PolyZ gcd(PolyZ a, PolyZ b);

    friend bool operator==(const PolyZ& a, const PolyZ& b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const PolyZ& a, const PolyZ& b) noexcept { return !(a == b); }

  private:
    void prune();

    Prime p_;
    std::vector<std::uint32_t> c_;
};

/// Rational function over F_p in canonical form: gcd(num, den) = 1, den
/// monic, and zero represented as 0/1. Structural equality therefore
/// coincides with field equality.
class RatFun {
  public:
    explicit RatFun(Prime p) : num_(p), den_(PolyZ::one(p)) {}
    explicit RatFun(PolyZ num) : num_(std::move(num)), den_(PolyZ::one(num_.prime())) {}
    RatFun(PolyZ num, PolyZ den);

    static RatFun zero(Prime p) { return RatFun(p); }
    static RatFun one(Prime p) { return RatFun(PolyZ::one(p)); }
    static RatFun constant(Prime p, std::uint32_t c) { return RatFun(PolyZ::constant(p, c)); }
    static RatFun variable(Prime p) { return RatFun(PolyZ::variable(p)); }

    Prime prime() const noexcept { return num_.prime(); }
    const PolyZ& num() const noexcept { return num_; }
    const PolyZ& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& rhs) { return *this = *this + rhs; }
    RatFun& operator-=(const RatFun& rhs) { return *this = *this - rhs; }
    RatFun& operator*=(const RatFun& rhs) { return *this = *this * rhs; }
    RatFun& operator/=(const RatFun& rhs) { return *this = *this / rhs; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

    RatFun inverse() const;
    RatFun pow(int e) const;

    friend bool operator==(const RatFun& a, const RatFun& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) noexcept { return !(a == b); }

  private:
    PolyZ num_;
    PolyZ den_;
};

/// Canonical reduced form of num/den (coprime, monic denominator).
inline RatFun normalize(PolyZ num, PolyZ den) { return RatFun(std::move(num), std::move(den)); }

class Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// The derivation delta of F_p(z) determined by delta(z) = dz, acting as
/// delta(f) = f' * dz. Carries the cached scalar gamma = delta^p(z)/delta(z)
/// satisfying delta^p = gamma * delta.
class Derivation {
  public:
    static DerivationPtr make(Prime p, RatFun dz);

    Prime prime() const noexcept { return p_; }
    const RatFun& dz() const noexcept { return dz_; }
    const RatFun& gamma() const noexcept { return gamma_; }

  private:
    Derivation(Prime p, RatFun dz, RatFun gamma)
        : p_(p), dz_(std::move(dz)), gamma_(std::move(gamma)) {}

    Prime p_;
    RatFun dz_;
    RatFun gamma_;
};

/// delta(f) = f' * dz via the quotient rule on the canonical form.
RatFun derive(const RatFun& f, const Derivation& d);

/// delta applied k times; k = 0 returns f.
RatFun iterate_derive(RatFun f, const Derivation& d, int k);

/// gamma = delta^p(z)/delta(z). Throws InternalCheckError unless
/// delta(gamma) = 0.
RatFun compute_gamma(Prime p, const RatFun& dz);

/// True iff delta(f) = 0, i.e. f lies in the constant field F_p(z^p).
bool in_constant_field(const RatFun& f, const Derivation& d);

/// Strict mode rejects integer coefficients >= p; lenient reduces them mod p.
enum class ParseMode { lenient, strict };

RatFun parse_ratfun(std::string_view text, Prime p, ParseMode mode = ParseMode::lenient);
std::string format_ratfun(const RatFun& f);
std::string format_polyz(const PolyZ& f);

}  // namespace diffconv

#endif
