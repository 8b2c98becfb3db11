#include "diffconv/rfield.hpp"

#include <algorithm>
#include <cctype>

namespace diffconv {

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
    if (p < 3 || p > 31 || !is_small_prime(p))
        throw ParameterError("modulus must be a prime in [3, 31], got " + std::to_string(p));
}

std::uint32_t Prime::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw FieldError("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

std::uint32_t Prime::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_, acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

PolyZ::PolyZ(Prime p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_.value();
    prune();
}

PolyZ PolyZ::monomial(Prime p, std::uint32_t c, int deg) {
    if (deg < 0) throw ParameterError("monomial degree must be nonnegative");
    PolyZ r(p);
    if (c % p.value() != 0) {
        r.c_.assign(static_cast<std::size_t>(deg) + 1, 0);
        r.c_.back() = c % p.value();
    }
    return r;
}

void PolyZ::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ& PolyZ::operator+=(const PolyZ& rhs) {
    if (p_ != rhs.p_) throw FieldError("mixed moduli");
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = p_.add(c_[i], rhs.c_[i]);
    prune();
    return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& rhs) {
    if (p_ != rhs.p_) throw FieldError("mixed moduli");
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = p_.sub(c_[i], rhs.c_[i]);
    prune();
    return *this;
}

PolyZ PolyZ::operator-() const {
    PolyZ r(*this);
    for (auto& c : r.c_) c = p_.neg(c);
    return r;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.p_ != b.p_) throw FieldError("mixed moduli");
    PolyZ r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    const std::uint32_t p = a.p_.value();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = static_cast<std::uint32_t>(
                (r.c_[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p);
    }
    r.prune();
    return r;
}

PolyZ PolyZ::times(std::uint32_t c) const {
    PolyZ r(*this);
    c %= p_.value();
    if (c == 0) {
        r.c_.clear();
        return r;
    }
    for (auto& x : r.c_) x = p_.mul(x, c);
    r.prune();  // c is a unit, but keep the invariant explicit
    return r;
}

PolyZ PolyZ::shifted(int k) const {
    if (k < 0) throw ParameterError("negative shift");
    if (is_zero() || k == 0) return *this;
    PolyZ r(p_);
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

PolyZ PolyZ::made_monic() const {
    if (is_zero()) return *this;
    return times(p_.inv(leading()));
}

PolyZ PolyZ::derivative() const {
    PolyZ r(p_);
    if (c_.size() < 2) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = p_.mul(c_[i], static_cast<std::uint32_t>(i % p_.value()));
    r.prune();
    return r;
}

std::pair<PolyZ, PolyZ> PolyZ::divmod(const PolyZ& f, const PolyZ& g) {
    if (f.p_ != g.p_) throw FieldError("mixed moduli");
    if (g.is_zero()) throw FieldError("polynomial division by zero");
    PolyZ q(f.p_), r(f);
    const std::uint32_t lead_inv = f.p_.inv(g.leading());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int k = r.degree() - g.degree();
        const std::uint32_t c = f.p_.mul(r.leading(), lead_inv);
        q += monomial(f.p_, c, k);
        r -= g.times(c).shifted(k);
    }
    return {q, r};
}

PolyZ PolyZ::gcd(PolyZ a, PolyZ b) {
    if (a.p_ != b.p_) throw FieldError("mixed moduli");
    while (!b.is_zero()) {
        PolyZ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.made_monic();
}

RatFun::RatFun(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.prime() != den_.prime()) throw FieldError("mixed moduli");
    if (den_.is_zero()) throw FieldError("zero denominator");
    if (num_.is_zero()) {
        den_ = PolyZ::one(num_.prime());
        return;
    }
    PolyZ g = PolyZ::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = PolyZ::divmod(num_, g).first;
        den_ = PolyZ::divmod(den_, g).first;
    }
    const std::uint32_t c = num_.prime().inv(den_.leading());
    if (c != 1) {
        num_ = num_.times(c);
        den_ = den_.times(c);
    }
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    // Cross-cancel before multiplying to keep intermediate degrees down.
    const PolyZ g1 = PolyZ::gcd(a.num_, b.den_);
    const PolyZ g2 = PolyZ::gcd(b.num_, a.den_);
    const PolyZ n1 = g1.is_one() ? a.num_ : PolyZ::divmod(a.num_, g1).first;
    const PolyZ d2 = g1.is_one() ? b.den_ : PolyZ::divmod(b.den_, g1).first;
    const PolyZ n2 = g2.is_one() ? b.num_ : PolyZ::divmod(b.num_, g2).first;
    const PolyZ d1 = g2.is_one() ? a.den_ : PolyZ::divmod(a.den_, g2).first;
    return RatFun(n1 * n2, d1 * d2);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun acc = one(prime());
    RatFun base = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        if (n >>= 1) base *= base;
    }
    return acc;
}

DerivationPtr Derivation::make(Prime p, RatFun dz) {
    if (dz.is_zero()) throw ParameterError("delta(z) must be nonzero");
    RatFun gamma = compute_gamma(p, dz);
    return DerivationPtr(new Derivation(p, std::move(dz), std::move(gamma)));
}

namespace {

RatFun derive_with(const RatFun& f, const RatFun& dz) {
    const PolyZ& n = f.num();
    const PolyZ& dn = f.den();
    RatFun fprime(n.derivative() * dn - n * dn.derivative(), dn * dn);
    return fprime * dz;
}

}  // namespace

RatFun derive(const RatFun& f, const Derivation& d) {
    if (f.prime() != d.prime()) throw FieldError("mixed moduli");
    return derive_with(f, d.dz());
}

RatFun iterate_derive(RatFun f, const Derivation& d, int k) {
    if (k < 0) throw ParameterError("negative derivation count");
    for (int i = 0; i < k && !f.is_zero(); ++i) f = derive(f, d);
    return f;
}

RatFun compute_gamma(Prime p, const RatFun& dz) {
    if (dz.is_zero()) throw ParameterError("delta(z) must be nonzero");
    if (dz.prime() != p) throw FieldError("mixed moduli");
    // delta^p(z) by p-fold application starting from delta(z) = dz.
    RatFun top = dz;
    for (std::uint32_t i = 1; i < p.value(); ++i) top = derive_with(top, dz);
    RatFun gamma = top / dz;
    if (!derive_with(gamma, dz).is_zero())
        throw InternalCheckError("gamma = delta^p(z)/delta(z) is not a constant of delta");
    return gamma;
}

bool in_constant_field(const RatFun& f, const Derivation& d) {
    return derive(f, d).is_zero();
}

// --- text format ------------------------------------------------------

std::string format_polyz(const PolyZ& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const std::uint32_t c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 'z';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::string format_ratfun(const RatFun& f) {
    std::string out = "(" + format_polyz(f.num()) + ")";
    if (!f.den().is_one()) out += "/(" + format_polyz(f.den()) + ")";
    return out;
}

namespace {

class RatFunParser {
  public:
    RatFunParser(std::string_view text, Prime p, ParseMode mode)
        : text_(text), p_(p), mode_(mode) {}

    RatFun parse() {
        PolyZ num = parse_item();
        PolyZ den = PolyZ::one(p_);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            den = parse_item();
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        if (den.is_zero()) throw ParseError("denominator is zero", pos_);
        return RatFun(std::move(num), std::move(den));
    }

  private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    PolyZ parse_item() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            PolyZ poly = parse_poly();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return poly;
        }
        return parse_poly();
    }

    PolyZ parse_poly() {
        PolyZ acc(p_);
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        acc += parse_term(negative);
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negative = peek() == '-';
            ++pos_;
            acc += parse_term(negative);
        }
        return acc;
    }

    PolyZ parse_term(bool negative) {
        skip_ws();
        std::uint32_t c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_coeff();
            have_coeff = true;
        }
        int deg = 0;
        skip_ws();
        if (have_coeff && peek() == '*') {
            ++pos_;
            skip_ws();
            if (peek() != 'z') throw ParseError("expected 'z' after '*'", pos_);
        }
        if (peek() == 'z') {
            ++pos_;
            deg = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                deg = parse_exponent();
            }
        } else if (!have_coeff) {
            throw ParseError("expected coefficient or 'z'", pos_);
        }
        if (negative) c = p_.neg(c % p_.value());
        return PolyZ::monomial(p_, c, deg);
    }

    std::uint32_t parse_coeff() {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 1'000'000'000) throw ParseError("coefficient too large", start);
            ++pos_;
        }
        if (mode_ == ParseMode::strict && v >= p_.value())
            throw ParseError("coefficient not in [0, p) in strict mode", start);
        return static_cast<std::uint32_t>(v % p_.value());
    }

    int parse_exponent() {
        skip_ws();
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected exponent", pos_);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 4096) throw ParseError("exponent too large", start);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    std::string_view text_;
    Prime p_;
    ParseMode mode_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text, Prime p, ParseMode mode) {
    return RatFunParser(text, p, mode).parse();
}

}  // namespace diffconv
