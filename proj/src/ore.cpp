#include "diffconv/ore.hpp"

#include <algorithm>

namespace diffconv {

namespace {

void require_ctx(const DerivationPtr& ctx) {
    if (!ctx) throw ParameterError("null derivation context");
}

bool same_context(const DerivationPtr& a, const DerivationPtr& b) {
    if (a == b) return true;
    return a && b && a->prime() == b->prime() && a->dz() == b->dz();
}

void require_same_context(const OrePoly& f, const OrePoly& g) {
    if (!same_context(f.context(), g.context()))
        throw FieldError("derivation context mismatch");
}

// Pascal's triangle mod p up to row n inclusive.
std::vector<std::vector<std::uint32_t>> binomials(Prime p, int n) {
    std::vector<std::vector<std::uint32_t>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        auto& row = c[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(j)] =
                p.add(c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)],
                      c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
    }
    return c;
}

}  // namespace

OrePoly::OrePoly(DerivationPtr ctx) : ctx_(std::move(ctx)) { require_ctx(ctx_); }

OrePoly::OrePoly(DerivationPtr ctx, std::vector<RatFun> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    require_ctx(ctx_);
    for (const auto& c : c_)
        if (c.prime() != ctx_->prime()) throw FieldError("coefficient modulus mismatch");
    prune();
}

OrePoly OrePoly::one(DerivationPtr ctx) {
    require_ctx(ctx);
    RatFun c = RatFun::one(ctx->prime());
    return monomial(std::move(ctx), std::move(c), 0);
}

OrePoly OrePoly::monomial(DerivationPtr ctx, int deg) {
    require_ctx(ctx);
    RatFun c = RatFun::one(ctx->prime());
    return monomial(std::move(ctx), std::move(c), deg);
}

OrePoly OrePoly::monomial(DerivationPtr ctx, RatFun c, int deg) {
    if (deg < 0) throw ParameterError("monomial degree must be nonnegative");
    OrePoly r(std::move(ctx));
    if (!c.is_zero()) {
        r.c_.assign(static_cast<std::size_t>(deg) + 1, RatFun::zero(r.prime()));
        r.c_.back() = std::move(c);
    }
    return r;
}

OrePoly OrePoly::x_minus(DerivationPtr ctx, const RatFun& a) {
    OrePoly r = monomial(std::move(ctx), 1);
    if (a.prime() != r.prime()) throw FieldError("coefficient modulus mismatch");
    r.c_[0] = -a;
    return r;
}

RatFun OrePoly::coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[static_cast<std::size_t>(i)];
    return RatFun::zero(prime());
}

const RatFun& OrePoly::leading() const {
    if (c_.empty()) throw FieldError("leading coefficient of zero polynomial");
    return c_.back();
}

std::vector<RatFun> OrePoly::padded_coeffs(int len) const {
    if (len < static_cast<int>(c_.size()))
        throw ParameterError("pad length below polynomial size");
    std::vector<RatFun> v(c_);
    v.resize(static_cast<std::size_t>(len), RatFun::zero(prime()));
    return v;
}

void OrePoly::prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OrePoly& OrePoly::operator+=(const OrePoly& rhs) {
    require_same_context(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), RatFun::zero(prime()));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    prune();
    return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& rhs) {
    require_same_context(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), RatFun::zero(prime()));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    prune();
    return *this;
}

OrePoly OrePoly::operator-() const {
    OrePoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

OrePoly OrePoly::scaled(const RatFun& c) const {
    OrePoly r(ctx_);
    if (c.is_zero() || is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(c * x);
    r.prune();
    return r;
}

OrePoly OrePoly::made_monic() const {
    if (is_zero()) throw FieldError("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scaled(leading().inverse());
}

bool operator==(const OrePoly& a, const OrePoly& b) {
    return same_context(a.context(), b.context()) && a.c_ == b.c_;
}

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    const DerivationPtr& ctx = f.context();
    OrePoly out(ctx);
    if (f.is_zero() || g.is_zero()) return out;
    const Prime p = ctx->prime();
    const int n = f.degree();
    const int m = g.degree();

    // delta^t(g_j) tables, truncated once the derivative vanishes.
    std::vector<std::vector<RatFun>> derivs(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        auto& col = derivs[static_cast<std::size_t>(j)];
        col.push_back(g.coeffs()[static_cast<std::size_t>(j)]);
        for (int t = 1; t <= n && !col.back().is_zero(); ++t)
            col.push_back(derive(col.back(), *ctx));
    }
    const auto binom = binomials(p, n);

    std::vector<RatFun> acc(static_cast<std::size_t>(n + m) + 1, RatFun::zero(p));
    for (int i = 0; i <= n; ++i) {
        const RatFun& fi = f.coeffs()[static_cast<std::size_t>(i)];
        if (fi.is_zero()) continue;
        for (int j = 0; j <= m; ++j) {
            const auto& col = derivs[static_cast<std::size_t>(j)];
            const int tmax = std::min(i, static_cast<int>(col.size()) - 1);
            for (int t = 0; t <= tmax; ++t) {
                const std::uint32_t b = binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (b == 0 || col[static_cast<std::size_t>(t)].is_zero()) continue;
                RatFun term = fi * col[static_cast<std::size_t>(t)];
                if (b != 1) term *= RatFun::constant(p, b);
                acc[static_cast<std::size_t>(i - t + j)] += term;
            }
        }
    }
    return OrePoly(ctx, std::move(acc));
}

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    if (g.is_zero()) throw FieldError("division by the zero polynomial");
    const DerivationPtr& ctx = f.context();
    OrePoly q(ctx), r(f);
    const RatFun lead_inv = g.leading().inverse();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int k = r.degree() - g.degree();
        OrePoly term = OrePoly::monomial(ctx, r.leading() * lead_inv, k);
        q += term;
        r -= ore_mul(term, g);
    }
    return {std::move(q), std::move(r)};
}

std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    if (g.is_zero()) throw FieldError("division by the zero polynomial");
    const DerivationPtr& ctx = f.context();
    OrePoly q(ctx), r(f);
    const RatFun lead_inv = g.leading().inverse();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int k = r.degree() - g.degree();
        OrePoly term = OrePoly::monomial(ctx, r.leading() * lead_inv, k);
        q += term;
        r -= ore_mul(g, term);
    }
    return {std::move(q), std::move(r)};
}

OrePoly gcrd(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    if (f.is_zero() && g.is_zero()) throw FieldError("gcrd of two zero polynomials");
    OrePoly a = f, b = g;
    while (!b.is_zero()) {
        OrePoly r = right_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.made_monic();
}

OrePoly llcm(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    if (f.is_zero() || g.is_zero()) throw FieldError("llcm requires nonzero inputs");
    // Track the f-cofactor u_i with r_i = u_i*f + v_i*g; when the remainder
    // reaches zero, u*f is a generator of Rf intersect Rg.
    const DerivationPtr& ctx = f.context();
    OrePoly r_prev = f, r_cur = g;
    OrePoly u_prev = OrePoly::one(ctx), u_cur(ctx);
    while (!r_cur.is_zero()) {
        auto [q, r_next] = right_divmod(r_prev, r_cur);
        OrePoly u_next = u_prev - ore_mul(q, u_cur);
        r_prev = std::move(r_cur);
        r_cur = std::move(r_next);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    OrePoly m = ore_mul(u_cur, f).made_monic();
    const int expected = f.degree() + g.degree() - r_prev.degree();
    if (m.degree() != expected)
        throw InternalCheckError("llcm degree does not match deg f + deg g - deg gcrd");
    return m;
}

OrePoly llcm(DerivationPtr ctx, std::span<const OrePoly> factors) {
    require_ctx(ctx);
    OrePoly acc = OrePoly::one(std::move(ctx));
    for (const auto& f : factors) acc = acc.is_one() ? f.made_monic() : llcm(acc, f);
    return acc;
}

std::vector<RatFun> n_values(const RatFun& a, int kmax, const Derivation& d) {
    if (kmax < 0) throw ParameterError("kmax must be nonnegative");
    std::vector<RatFun> n;
    n.reserve(static_cast<std::size_t>(kmax) + 1);
    n.push_back(RatFun::one(a.prime()));
    for (int k = 0; k < kmax; ++k) n.push_back(n.back() * a + derive(n.back(), d));
    return n;
}

RatFun log_derivative(const RatFun& a, const Derivation& d) {
    if (a.is_zero()) throw FieldError("logarithmic derivative of zero");
    return derive(a, d) / a;
}

RatFun right_eval(const OrePoly& f, const RatFun& a) {
    const Derivation& d = *f.context();
    RatFun acc = RatFun::zero(d.prime());
    RatFun nk = RatFun::one(d.prime());
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0) nk = nk * a + derive(nk, d);
        const RatFun& fi = f.coeffs()[static_cast<std::size_t>(i)];
        if (!fi.is_zero()) acc += fi * nk;
    }
    return acc;
}

OrePoly central_element(DerivationPtr ctx) {
    require_ctx(ctx);
    const Prime p = ctx->prime();
    OrePoly c = OrePoly::monomial(ctx, static_cast<int>(p.value()));
    c += OrePoly::monomial(ctx, -ctx->gamma(), 1);
    return c;
}

QuotientElem::QuotientElem(OrePoly rep) : rep_(std::move(rep)) {
    if (rep_.degree() >= static_cast<int>(rep_.prime().value()))
        throw ParameterError("quotient representative must have degree < p");
}

QuotientElem reduce_mod_center(const OrePoly& f) {
    if (f.degree() < static_cast<int>(f.prime().value())) return QuotientElem(f);
    return QuotientElem(right_divmod(f, central_element(f.context())).second);
}

QuotientElem quotient_mul(const QuotientElem& f, const QuotientElem& g) {
    return reduce_mod_center(ore_mul(f.rep(), g.rep()));
}

std::vector<RatFun> coords(const QuotientElem& f) {
    return f.rep().padded_coeffs(static_cast<int>(f.rep().prime().value()));
}

QuotientElem from_coords(DerivationPtr ctx, const std::vector<RatFun>& v) {
    require_ctx(ctx);
    if (v.size() != ctx->prime().value())
        throw ParameterError("coordinate vector must have length p");
    return QuotientElem(OrePoly(std::move(ctx), v));
}

std::string format_ore_coeffs(const OrePoly& f) {
    if (f.is_zero()) return "[(0)]";
    std::string out = "[";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0) out += ", ";
        out += format_ratfun(f.coeff(i));
    }
    return out + "]";
}

OrePoly parse_ore_coeffs(std::string_view text, DerivationPtr ctx, ParseMode mode) {
    require_ctx(ctx);
    std::size_t begin = text.find('[');
    std::size_t end = text.rfind(']');
    if (begin == std::string_view::npos || end == std::string_view::npos || end < begin)
        throw ParseError("expected bracketed coefficient list", 0);
    std::string_view body = text.substr(begin + 1, end - begin - 1);
    std::vector<RatFun> coeffs;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view piece =
            comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        const bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
        if (!blank) coeffs.push_back(parse_ratfun(piece, ctx->prime(), mode));
        else if (comma != std::string_view::npos || !coeffs.empty())
            throw ParseError("empty coefficient entry", begin + 1 + pos);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return OrePoly(std::move(ctx), std::move(coeffs));
}

std::string format_ore_pretty(const OrePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const RatFun& c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += format_ratfun(c);
            continue;
        }
        if (!c.is_one()) out += format_ratfun(c) + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace diffconv
