#include "diffconv/pgz.hpp"

#include <algorithm>

namespace diffconv {

namespace {

void require_decodable(const std::vector<RatFun>& y, const CodeSpec& spec) {
    if (spec.offset() != 0) throw ParameterError("decoding is defined for offset r = 0 only");
    if (y.size() != spec.prime().value()) throw ParameterError("received word length must be p");
    for (const RatFun& c : y)
        if (c.prime() != spec.prime()) throw FieldError("mixed moduli");
}

bool all_zero(const std::vector<RatFun>& v) {
    return std::all_of(v.begin(), v.end(), [](const RatFun& x) { return x.is_zero(); });
}

bool is_unit_row(const FunMatrix& m, std::size_t i) {
    std::size_t nonzero = 0;
    bool one = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j).is_zero()) continue;
        ++nonzero;
        one = m.at(i, j).is_one();
    }
    return nonzero == 1 && one;
}

// Nonzero values, v <= tau, and zero residual syndromes for y - e.
void verify_correction(const std::vector<RatFun>& y, const ErrorVector& e,
                       const CodeSpec& spec) {
    if (e.positions.empty() || static_cast<int>(e.positions.size()) > spec.tau())
        throw InternalCheckError("error support size out of range");
    for (const RatFun& v : e.values)
        if (v.is_zero()) throw InternalCheckError("zero error value");
    std::vector<RatFun> corrected = y;
    for (std::size_t j = 0; j < e.positions.size(); ++j)
        corrected[static_cast<std::size_t>(e.positions[j])] -= e.values[j];
    if (!all_zero(syndromes(corrected, spec)))
        throw InternalCheckError("corrected word still has nonzero syndromes");
}

DecodeResult run_decoder(const std::vector<RatFun>& y, const CodeSpec& spec, bool full) {
    require_decodable(y, spec);
    const std::vector<RatFun> s = syndromes(y, spec);
    if (all_zero(s)) return {DecodeStatus::zero_error, {}};
    try {
        const SyndromeTable tbl = syndrome_table(s, spec);
        const LocatorDivisor ld = locator_divisor(tbl, spec);
        std::vector<int> positions = candidate_positions(ld.rho, spec);
        if (static_cast<int>(positions.size()) != ld.mu) {
            if (!full) return {DecodeStatus::failure, {}};
            positions = full_positions(ld.rho, spec);
            if (static_cast<int>(positions.size()) < ld.mu ||
                static_cast<int>(positions.size()) > spec.tau())
                throw InternalCheckError("recovered position set has impossible size");
        }
        ErrorVector e{positions, error_values(positions, s, spec)};
        verify_correction(y, e, spec);
        return {DecodeStatus::corrected, std::move(e)};
    } catch (const InternalCheckError&) {
        return {DecodeStatus::beyond_capacity, {}};
    } catch (const FieldError&) {
        // Inconsistent or degenerate systems only arise past the decoding
        // radius; surface them as a detected capacity violation.
        return {DecodeStatus::beyond_capacity, {}};
    }
}

}  // namespace

std::vector<RatFun> syndromes(const std::vector<RatFun>& y, const CodeSpec& spec) {
    require_decodable(y, spec);
    std::vector<RatFun> s = row_times_matrix(y, spec.n_matrix());
    s.resize(static_cast<std::size_t>(2 * spec.tau()), RatFun::zero(spec.prime()));
    return s;
}

SyndromeTable syndrome_table(const std::vector<RatFun>& s, const CodeSpec& spec) {
    const int tau = spec.tau();
    if (s.size() != static_cast<std::size_t>(2 * tau))
        throw ParameterError("expected 2*tau syndromes");
    // Triangular grid of every S_{i,k} with i + k <= 2*tau - 1.
    std::vector<std::vector<RatFun>> grid(static_cast<std::size_t>(std::max(2 * tau, 0)));
    for (int i = 0; i < 2 * tau; ++i)
        grid[static_cast<std::size_t>(i)].push_back(s[static_cast<std::size_t>(i)] *
                                                    spec.orbit(i));
    const Derivation& d = *spec.derivation();
    for (int k = 1; k <= 2 * tau - 1; ++k)
        for (int i = 0; i + k <= 2 * tau - 1; ++i) {
            const auto& below = grid[static_cast<std::size_t>(i + 1)];
            auto& row = grid[static_cast<std::size_t>(i)];
            row.push_back(derive(row[static_cast<std::size_t>(k - 1)], d) -
                          below[static_cast<std::size_t>(k - 1)]);
        }
    FunMatrix table(spec.prime(), static_cast<std::size_t>(tau) + 1,
                    static_cast<std::size_t>(std::max(tau, 0)));
    for (int i = 0; i <= tau; ++i)
        for (int k = 0; k < tau; ++k)
            table.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
                grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    return {s, std::move(table)};
}

LocatorDivisor locator_divisor(const SyndromeTable& tbl, const CodeSpec& spec) {
    if (tbl.table.is_zero()) throw ParameterError("syndrome table is zero");
    const FunMatrix r = rcef(tbl.table);
    std::size_t mu = 0;
    while (mu < r.cols()) {
        bool nonzero = false;
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (!r.at(i, mu).is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) break;
        ++mu;
    }
    // Guaranteed shape: I_mu on top, the a-row right below, zeros to the
    // right. Anything else means the no-more-than-tau-errors contract broke.
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j) {
            const bool diag = i == j;
            if (r.at(i, j).is_one() != diag || (!diag && !r.at(i, j).is_zero()))
                throw InternalCheckError("rcef of the syndrome table is not in locator shape");
        }
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = mu; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero())
                throw InternalCheckError("rcef of the syndrome table is not in locator shape");
    std::vector<RatFun> coeffs;
    coeffs.reserve(mu + 1);
    for (std::size_t i = 0; i < mu; ++i) coeffs.push_back(-r.at(mu, i));
    coeffs.push_back(RatFun::one(spec.prime()));
    return {static_cast<int>(mu), OrePoly(spec.derivation(), std::move(coeffs))};
}

std::vector<int> candidate_positions(const OrePoly& rho, const CodeSpec& spec) {
    const int p = static_cast<int>(spec.prime().value());
    const std::vector<RatFun> row = rho.padded_coeffs(p);
    const std::vector<RatFun> rho_n = row_times_matrix(row, spec.n_matrix());
    std::vector<int> positions;
    for (int t = 0; t < p; ++t)
        if (rho_n[static_cast<std::size_t>(t)].is_zero()) positions.push_back(t);
    return positions;
}

FunMatrix locator_rref(const OrePoly& rho, const CodeSpec& spec) {
    if (rho.is_zero()) throw ParameterError("zero locator divisor");
    const int p = static_cast<int>(spec.prime().value());
    const int mu = rho.degree();
    FunMatrix m_rho(spec.prime(), static_cast<std::size_t>(p - mu), static_cast<std::size_t>(p));
    OrePoly h = rho;
    const OrePoly x = OrePoly::x(spec.derivation());
    for (int i = 0; i <= p - 1 - mu; ++i) {
        if (i > 0) h = ore_mul(x, h);
        const std::vector<RatFun> row = h.padded_coeffs(p);
        for (int j = 0; j < p; ++j)
            m_rho.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                row[static_cast<std::size_t>(j)];
    }
    return rref(mat_mul(m_rho, spec.n_matrix()));
}

std::vector<int> full_positions(const OrePoly& rho, const CodeSpec& spec) {
    const FunMatrix h_rho = locator_rref(rho, spec);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < h_rho.rows(); ++i)
        if (is_unit_row(h_rho, i)) kept.push_back(i);
    std::vector<int> positions;
    for (std::size_t j = 0; j < h_rho.cols(); ++j) {
        bool zero = true;
        for (std::size_t i : kept)
            if (!h_rho.at(i, j).is_zero()) {
                zero = false;
                break;
            }
        if (zero) positions.push_back(static_cast<int>(j));
    }
    return positions;
}

std::vector<RatFun> error_values(const std::vector<int>& positions,
                                 const std::vector<RatFun>& s, const CodeSpec& spec) {
    const std::size_t v = positions.size();
    if (v == 0 || static_cast<int>(v) > spec.tau())
        throw ParameterError("number of error positions must be in [1, tau]");
    if (s.size() < v) throw ParameterError("not enough syndromes");
    FunMatrix a(spec.prime(), v, v);
    std::vector<RatFun> rhs;
    rhs.reserve(v);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j)
            a.at(j, i) = spec.orbit(positions[j] + static_cast<int>(i));
        rhs.push_back(spec.orbit(static_cast<int>(i)) * s[i]);
    }
    if (!is_invertible(a)) throw InternalCheckError("singular error-value system");
    return solve_left(a, rhs);
}

DecodeResult decode_basic(const std::vector<RatFun>& y, const CodeSpec& spec) {
    return run_decoder(y, spec, /*full=*/false);
}

DecodeResult decode(const std::vector<RatFun>& y, const CodeSpec& spec) {
    return run_decoder(y, spec, /*full=*/true);
}

std::pair<Codeword, Message> correct(const std::vector<RatFun>& y, const CodeSpec& spec) {
    const DecodeResult res = decode(y, spec);
    if (res.status == DecodeStatus::beyond_capacity)
        throw BeyondCapacity("received word is not decodable within tau errors");
    std::vector<RatFun> c = y;
    if (res.status == DecodeStatus::corrected)
        for (std::size_t j = 0; j < res.error.positions.size(); ++j)
            c[static_cast<std::size_t>(res.error.positions[j])] -= res.error.values[j];
    Codeword cw{std::move(c)};
    Message m = unencode(cw, spec);
    return {std::move(cw), std::move(m)};
}

std::vector<RatFun> error_word(const ErrorVector& e, Prime p) {
    std::vector<RatFun> w(p.value(), RatFun::zero(p));
    for (std::size_t j = 0; j < e.positions.size(); ++j) {
        const int k = e.positions[j];
        if (k < 0 || k >= static_cast<int>(p.value()))
            throw ParameterError("error position out of range");
        w[static_cast<std::size_t>(k)] = e.values[j];
    }
    return w;
}

OrePoly error_polynomial(const ErrorVector& e, DerivationPtr ctx) {
    return OrePoly(ctx, error_word(e, ctx->prime()));
}

}  // namespace diffconv
