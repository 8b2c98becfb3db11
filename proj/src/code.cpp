#include "diffconv/code.hpp"

#include <algorithm>
#include <sstream>

namespace diffconv {

namespace {

std::vector<RatFun> delta_orbit(const RatFun& alpha, const Derivation& d, int upto) {
    std::vector<RatFun> orbit;
    orbit.reserve(static_cast<std::size_t>(upto) + 1);
    orbit.push_back(alpha);
    for (int k = 0; k < upto; ++k) orbit.push_back(derive(orbit.back(), d));
    return orbit;
}

}  // namespace

CodeSpec::CodeSpec(DerivationPtr ctx, RatFun alpha, int d, int r, OrePoly g, FunMatrix nmat,
                   FunMatrix hmat, std::vector<RatFun> orbit)
    : ctx_(std::move(ctx)),
      alpha_(std::move(alpha)),
      d_(d),
      r_(r),
      g_(std::move(g)),
      nmat_(std::move(nmat)),
      hmat_(std::move(hmat)),
      orbit_(std::move(orbit)) {}

const RatFun& CodeSpec::orbit(int k) const {
    if (k < 0 || k >= static_cast<int>(orbit_.size()))
        throw ParameterError("orbit index out of range");
    return orbit_[static_cast<std::size_t>(k)];
}

CodeSpec CodeSpec::build(std::uint32_t p_in, const RatFun& dz, const RatFun& alpha, int d, int r) {
    const Prime p(p_in);
    const int n = static_cast<int>(p.value());
    if (d < 1 || d > n) throw ParameterError("designed distance out of range");
    if (r < 0 || r > n - d) throw ParameterError("offset out of range");
    if (dz.prime() != p || alpha.prime() != p) throw FieldError("mixed moduli");
    DerivationPtr ctx = Derivation::make(p, dz);

    std::vector<RatFun> orbit = delta_orbit(alpha, *ctx, 2 * n - 2);
    for (int k = 0; k < n; ++k)
        if (orbit[static_cast<std::size_t>(k)].is_zero())
            throw NotCyclicVector("delta-orbit of alpha contains zero");
    FunMatrix w(p, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                orbit[static_cast<std::size_t>(i + j)];
    if (rank(w) != static_cast<std::size_t>(n))
        throw NotCyclicVector("Wronskian of the delta-orbit of alpha is singular");

    std::vector<OrePoly> factors;
    factors.reserve(static_cast<std::size_t>(d) - 1);
    for (int i = 0; i <= d - 2; ++i)
        factors.push_back(
            OrePoly::x_minus(ctx, log_derivative(orbit[static_cast<std::size_t>(r + i)], *ctx)));
    OrePoly g = llcm(ctx, factors);
    if (g.degree() != d - 1 || !g.is_monic())
        throw InternalCheckError("generator degree or normalization is wrong");
    if (!right_divmod(central_element(ctx), g).second.is_zero())
        throw InternalCheckError("generator does not right-divide x^p - gamma*x");

    FunMatrix nmat = build_n_matrix(*ctx, orbit);

    // Parity check W_p(delta^r(alpha), ..., delta^(r+d-2)(alpha)).
    FunMatrix hmat(p, static_cast<std::size_t>(n), static_cast<std::size_t>(d) - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= d - 2; ++j)
            hmat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                orbit[static_cast<std::size_t>(i + r + j)];

    return CodeSpec(std::move(ctx), alpha, d, r, std::move(g), std::move(nmat), std::move(hmat),
                    std::move(orbit));
}

FunMatrix build_n_matrix(const Derivation& d, std::span<const RatFun> orbit) {
    const Prime p = d.prime();
    const std::size_t n = p.value();
    if (orbit.size() < n) throw ParameterError("orbit too short for the N matrix");
    FunMatrix nm(p, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<RatFun> col =
            n_values(log_derivative(orbit[j], d), static_cast<int>(n) - 1, d);
        for (std::size_t i = 0; i < n; ++i) nm.at(i, j) = col[i];
    }
    return nm;
}

OrePoly generator_by_linear_system(const CodeSpec& spec) {
    const DerivationPtr& ctx = spec.derivation();
    const int d = spec.distance();
    if (d == 1) return OrePoly::one(ctx);
    const std::size_t k = static_cast<std::size_t>(d) - 1;
    const std::size_t off = static_cast<std::size_t>(spec.offset());
    const FunMatrix& nm = spec.n_matrix();

    // (g_0,...,g_{d-2}) A = -b with A the k x k block of N at rows 0..k-1,
    // columns off..off+k-1, and b the matching slice of row k.
    FunMatrix a(spec.prime(), k, k);
    std::vector<RatFun> b;
    b.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) a.at(i, j) = nm.at(i, off + j);
        b.push_back(-nm.at(k, off + j));
    }
    if (!is_invertible(a))
        throw InternalCheckError("singular principal block of N; alpha is not cyclic");
    std::vector<RatFun> coeffs = solve_left(a, b);
    coeffs.push_back(RatFun::one(spec.prime()));
    return OrePoly(ctx, std::move(coeffs));
}

Codeword encode(const Message& m, const CodeSpec& spec) {
    if (static_cast<int>(m.coeffs.size()) != spec.dimension())
        throw ParameterError("message length must equal the code dimension");
    const OrePoly mp(spec.derivation(), m.coeffs);
    return Codeword{coords(reduce_mod_center(ore_mul(mp, spec.generator())))};
}

Message unencode(const Codeword& c, const CodeSpec& spec) {
    if (c.coords.size() != spec.prime().value())
        throw ParameterError("codeword length must equal p");
    const OrePoly f(spec.derivation(), c.coords);
    auto [q, rem] = right_divmod(f, spec.generator());
    if (!rem.is_zero()) throw NotACodeword("word is not right-divisible by the generator");
    return Message{q.padded_coeffs(spec.dimension())};
}

bool is_codeword(const Codeword& c, const CodeSpec& spec) {
    if (c.coords.size() != spec.prime().value())
        throw ParameterError("codeword length must equal p");
    for (const RatFun& s : row_times_matrix(c.coords, spec.parity_check()))
        if (!s.is_zero()) return false;
    return true;
}

std::string format_code_spec(const CodeSpec& spec) {
    std::ostringstream out;
    out << "p=" << spec.prime().value() << '\n';
    out << "delta_z=" << format_ratfun(spec.derivation()->dz()) << '\n';
    out << "alpha=" << format_ratfun(spec.alpha()) << '\n';
    out << "d=" << spec.distance() << '\n';
    out << "r=" << spec.offset() << '\n';
    out << "g=" << format_ore_coeffs(spec.generator()) << '\n';
    return out.str();
}

CodeSpec parse_code_spec(std::string_view text, ParseMode mode) {
    std::string p_str, dz_str, alpha_str, d_str, r_str = "0", g_str;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value line", lineno);
        const std::string key = line.substr(first, eq - first);
        std::string value = line.substr(eq + 1);
        while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();
        if (key == "p") p_str = value;
        else if (key == "delta_z") dz_str = value;
        else if (key == "alpha") alpha_str = value;
        else if (key == "d") d_str = value;
        else if (key == "r") r_str = value;
        else if (key == "g") g_str = value;
        else throw ParseError("unknown key '" + key + "'", lineno);
    }
    if (p_str.empty() || dz_str.empty() || alpha_str.empty() || d_str.empty())
        throw ParseError("missing required key (p, delta_z, alpha, d)", lineno);
    std::uint32_t p_val = 0;
    int d_val = 0, r_val = 0;
    try {
        p_val = static_cast<std::uint32_t>(std::stoul(p_str));
        d_val = std::stoi(d_str);
        r_val = std::stoi(r_str);
    } catch (const std::exception&) {
        throw ParseError("invalid integer value", lineno);
    }
    const Prime p(p_val);
    CodeSpec spec = CodeSpec::build(p_val, parse_ratfun(dz_str, p, mode),
                                    parse_ratfun(alpha_str, p, mode), d_val, r_val);
    if (!g_str.empty() &&
        parse_ore_coeffs(g_str, spec.derivation(), mode) != spec.generator())
        throw ParseError("generator line does not match the rebuilt generator", lineno);
    return spec;
}

std::string format_word(std::span<const RatFun> coords) {
    std::string out;
    for (const RatFun& c : coords) {
        out += format_ratfun(c);
        out += '\n';
    }
    return out;
}

std::vector<RatFun> parse_word(std::string_view text, Prime p, ParseMode mode) {
    std::vector<RatFun> coords;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        coords.push_back(parse_ratfun(line, p, mode));
    }
    return coords;
}

}  // namespace diffconv
