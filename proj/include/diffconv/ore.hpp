#ifndef DIFFCONV_ORE_HPP
#define DIFFCONV_ORE_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffconv/rfield.hpp"

namespace diffconv {

/// Element of the differential operator ring R = F_p(z)[x; delta]:
/// a polynomial in x with coefficients written on the left, multiplying by
/// the rule x*a = a*x + delta(a). Coefficients are stored little-endian
/// (index = degree in x) with no trailing zeros.
class OrePoly {
  public:
    explicit OrePoly(DerivationPtr ctx);
    OrePoly(DerivationPtr ctx, std::vector<RatFun> coeffs);

    static OrePoly one(DerivationPtr ctx);
    static OrePoly x(DerivationPtr ctx) { return monomial(std::move(ctx), 1); }
    static OrePoly monomial(DerivationPtr ctx, int deg);
    static OrePoly monomial(DerivationPtr ctx, RatFun c, int deg);
    /// The linear factor x - a.
    static OrePoly x_minus(DerivationPtr ctx, const RatFun& a);

    const DerivationPtr& context() const noexcept { return ctx_; }
    Prime prime() const noexcept { return ctx_->prime(); }

    static constexpr int neg_inf_degree = PolyZ::neg_inf_degree;
    int degree() const noexcept { return c_.empty() ? neg_inf_degree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
    /// Coefficient of x^i, zero outside the stored range.
    RatFun coeff(int i) const;
    const RatFun& leading() const;
    const std::vector<RatFun>& coeffs() const noexcept { return c_; }
    /// Coefficients padded with zeros to the given length (>= degree + 1).
    std::vector<RatFun> padded_coeffs(int len) const;

    OrePoly& operator+=(const OrePoly& rhs);
    OrePoly& operator-=(const OrePoly& rhs);
    OrePoly operator-() const;
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

    /// Left scalar multiple c*f (coefficient-wise).
    OrePoly scaled(const RatFun& c) const;
    OrePoly made_monic() const;

    friend bool operator==(const OrePoly& a, const OrePoly& b);
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

  private:
    void prune();

    DerivationPtr ctx_;
    std::vector<RatFun> c_;
};

/// Ring product using x^k * a = sum_j C(k,j) delta^j(a) x^(k-j).
OrePoly ore_mul(const OrePoly& f, const OrePoly& g);
inline OrePoly operator*(const OrePoly& f, const OrePoly& g) { return ore_mul(f, g); }

/// f = q*g + r with deg r < deg g (g becomes a right divisor when r = 0).
std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g);

/// f = g*q + r with deg r < deg g.
std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g);

/// Monic greatest common right divisor (generator of Rf + Rg).
OrePoly gcrd(const OrePoly& f, const OrePoly& g);

/// Monic least common left multiple (generator of Rf intersect Rg),
/// computed by the extended right-Euclidean algorithm.
OrePoly llcm(const OrePoly& f, const OrePoly& g);

/// llcm over a list; the empty list yields 1.
OrePoly llcm(DerivationPtr ctx, std::span<const OrePoly> factors);

/// [N_0(a), ..., N_kmax(a)] with N_0 = 1, N_{k+1} = N_k*a + delta(N_k).
std::vector<RatFun> n_values(const RatFun& a, int kmax, const Derivation& d);

/// L(a) = delta(a)/a for a != 0.
RatFun log_derivative(const RatFun& a, const Derivation& d);

/// Right evaluation f[a] = sum f_i N_i(a); the remainder of right division
/// by x - a, so f[a] = 0 iff x - a right-divides f.
RatFun right_eval(const OrePoly& f, const RatFun& a);

/// The central element x^p - gamma*x.
OrePoly central_element(DerivationPtr ctx);

/// Element of the word ambient algebra R/R(x^p - gamma*x), identified with
/// its unique representative of degree < p.
class QuotientElem {
  public:
    explicit QuotientElem(OrePoly rep);

    const OrePoly& rep() const noexcept { return rep_; }
    const DerivationPtr& context() const noexcept { return rep_.context(); }

    friend bool operator==(const QuotientElem& a, const QuotientElem& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const QuotientElem& a, const QuotientElem& b) { return !(a == b); }

  private:
    OrePoly rep_;
};

/// Remainder of right division by x^p - gamma*x.
QuotientElem reduce_mod_center(const OrePoly& f);

QuotientElem quotient_mul(const QuotientElem& f, const QuotientElem& g);

/// Coordinates with respect to the basis {1, x, ..., x^(p-1)}.
std::vector<RatFun> coords(const QuotientElem& f);
QuotientElem from_coords(DerivationPtr ctx, const std::vector<RatFun>& v);

/// Coefficient-list text format "[c0, c1, ...]" (index = x-degree).
std::string format_ore_coeffs(const OrePoly& f);
OrePoly parse_ore_coeffs(std::string_view text, DerivationPtr ctx,
                         ParseMode mode = ParseMode::lenient);

/// Human-oriented form "x^2 + (c1)*x + (c0)" used in reports.
std::string format_ore_pretty(const OrePoly& f);

}  // namespace diffconv

#endif
