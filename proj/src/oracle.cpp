#include "msy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "msy/coeffs.hpp"

namespace msy {

namespace {

constexpr double kRescaleLimit = 1e250;

// Numerov sweep over w[i0..i1] (inclusive), writing u[i0..i1]; direction given
// by the sign of stride. Rescales in place to avoid overflow.
void numerov_sweep(std::span<const double> w, std::span<double> u, int i0, int i1, double h,
                   double seed0, double seed1) {
    const int stride = i1 > i0 ? 1 : -1;
    const double h12 = h * h / 12.0;
    auto fac = [&](int i) { return 1.0 - h12 * w[i]; };
    u[i0] = seed0;
    u[i0 + stride] = seed1;
    for (int i = i0 + stride; i != i1; i += stride) {
        u[i + stride] = ((12.0 - 10.0 * fac(i)) * u[i] - fac(i - stride) * u[i - stride]) / fac(i + stride);
        if (std::abs(u[i + stride]) > kRescaleLimit) {
            const double scale = std::abs(u[i + stride]);
            for (int k = i0; k != i + 2 * stride; k += stride) u[k] /= scale;
        }
    }
}

int count_sign_changes(std::span<const double> u, int lo, int hi) {
    int nodes = 0;
    double last = 0.0;
    for (int i = lo; i <= hi; ++i) {
        if (u[i] == 0.0) continue;
        if (last != 0.0 && u[i] * last < 0.0) ++nodes;
        last = u[i];
    }
    return nodes;
}

struct Workspace {
    std::vector<double> r;
    double h = 0.0;
};

Workspace make_workspace(const RadialGrid& grid) {
    if (grid.spacing != RadialGrid::Spacing::uniform)
        throw std::invalid_argument("oracle: Numerov integration needs a uniform grid");
    Workspace ws;
    ws.r = grid.make();
    ws.h = grid.step();
    return ws;
}

// Matched two-sided integration of u'' = w(r) u for an already-sampled w.
MatchInfo match_sampled(const Workspace& ws, std::span<const double> w, int i_match) {
    const int n = static_cast<int>(ws.r.size());
    i_match = std::clamp(i_match, 2, n - 3);

    // start the outward sweep where the scheme is stable; the solution in the
    // deep forbidden head is far below double precision anyway
    int i0 = 0;
    while (i0 < i_match - 2 && ws.h * ws.h * w[i0] > 1.0) ++i0;

    std::vector<double> u(n, 0.0), v(n, 0.0);
    numerov_sweep(w, u, i0, i_match + 1, ws.h, 0.0, 1e-30);
    numerov_sweep(w, v, n - 1, i_match - 1, ws.h, 0.0, 1e-30);

    MatchInfo info;
    info.nodes = count_sign_changes(u, i0, i_match) + count_sign_changes(v, i_match, n - 1);

    const double cross1 = u[i_match + 1] * v[i_match];
    const double cross2 = v[i_match + 1] * u[i_match];
    const double scale = std::abs(cross1) + std::abs(cross2);
    info.wronskian = scale > 0.0 ? (cross1 - cross2) / scale : 0.0;

    const double du = (u[i_match + 1] - u[i_match - 1]) / (2.0 * ws.h);
    const double dv = (v[i_match + 1] - v[i_match - 1]) / (2.0 * ws.h);
    if (u[i_match] != 0.0 && v[i_match] != 0.0)
        info.log_derivative_gap = du / u[i_match] - dv / v[i_match];
    else
        info.log_derivative_gap = std::numeric_limits<double>::infinity();
    return info;
}

int match_index(const Workspace& ws, std::span<const double> w, double match_point) {
    if (match_point > 0.0) {
        const auto it = std::lower_bound(ws.r.begin(), ws.r.end(), match_point);
        return static_cast<int>(std::distance(ws.r.begin(), it));
    }
    return static_cast<int>(std::distance(w.begin(), std::min_element(w.begin(), w.end())));
}

using Sampler = std::function<void(double E, std::span<double> w)>;

// w(r; E) = V_eff(r; E) - Eeff(E) with the same approximated V_eff the closed
// form uses; sampled without per-point exp calls.
Sampler approx_sampler(const Workspace& ws, const QuantumState& q, const PotentialParams& p,
                       const SymmetrySpec& s) {
    std::vector<double> t(ws.r.size());
    for (std::size_t i = 0; i < ws.r.size(); ++i) t[i] = std::exp(-p.alpha * ws.r[i]);
    const double rho = p.D / p.C;
    return [t = std::move(t), rho, q, p, s](double E, std::span<double> w) {
        const auto c = effective_coefficients(E, p, s, q);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double ti = t[i];
            const double den = 1.0 + rho * ti;
            w[i] = (c.quad * ti * ti + c.lin * ti + c.cst) / (den * den) - c.eff_energy;
        }
    };
}

// w(r; E) rebuilt from the exact centrifugal 1/r^2 and exact tail 1/r terms.
Sampler exact_sampler(const Workspace& ws, const QuantumState& q, const PotentialParams& p,
                      const SymmetrySpec& s) {
    std::vector<double> t(ws.r.size());
    for (std::size_t i = 0; i < ws.r.size(); ++i) t[i] = std::exp(-p.alpha * ws.r[i]);
    return [t = std::move(t), r = ws.r, q, p, s](double E, std::span<double> w) {
        const auto c = effective_coefficients(E, p, s, q);  // for eff_energy
        const double cf = centrifugal_factor(q, s);
        const double cpot = potential_coupling(E, s);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double ti = t[i];
            const double ri = r[i];
            const double mob = (p.A + p.B * ti) / (p.C + p.D * ti);
            double pot = p.V0 * mob * mob;
            if (s.choice == PotentialChoice::first) {
                pot += -p.V1 * ti / ri;
            } else {
                const double base = 1.0 - ti / ri;
                pot += s.tail == TailForm::squared ? -p.V1 * base * base : -p.V1 * base;
                pot += p.V1;  // the constant absorbed into eff_energy
            }
            w[i] = cf / (ri * ri) + cpot * pot - c.eff_energy;
        }
    };
}

double bisect_eigenvalue(const Workspace& ws, const Sampler& sample, double lo, double hi,
                         int node_target, double match_point, double tol, const char* who) {
    std::vector<double> w(ws.r.size());

    auto probe = [&](double E) {
        sample(E, w);
        return match_sampled(ws, w, match_index(ws, w, match_point));
    };

    // scan for discrete-Wronskian sign changes near the right node sector
    const double step = std::min(1e-3, (hi - lo) / 50.0);
    const int steps = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)));
    double prev_E = 0.0, prev_w = 0.0;
    int prev_nodes = -1;
    bool have_prev = false;
    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i <= steps; ++i) {
        const double E = lo + (hi - lo) * i / steps;
        const MatchInfo m = probe(E);
        if (have_prev && prev_w * m.wronskian < 0.0
            && (prev_nodes == node_target || m.nodes == node_target))
            brackets.emplace_back(prev_E, E);
        prev_E = E;
        prev_w = m.wronskian;
        prev_nodes = m.nodes;
        have_prev = true;
    }
    if (brackets.empty())
        throw bracket_error(std::string(who) + ": no Wronskian sign change in ["
                            + std::to_string(lo) + ", " + std::to_string(hi) + "]");

    for (const auto& [blo, bhi] : brackets) {
        double a = blo, b = bhi;
        double fa = probe(a).wronskian;
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            const double fm = probe(mid).wronskian;
            if (fa * fm <= 0.0)
                b = mid;
            else {
                a = mid;
                fa = fm;
            }
        }
        const double E = 0.5 * (a + b);
        if (probe(E).nodes == node_target) return E;
    }
    throw wrong_state_error(std::string(who) + ": converged roots have the wrong node count");
}

}  // namespace

std::vector<double> numerov_integrate(const std::function<double(double)>& w_of_r,
                                      const RadialGrid& grid, Direction dir, double seed0,
                                      double seed1) {
    const Workspace ws = make_workspace(grid);
    const int n = static_cast<int>(ws.r.size());
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = w_of_r(ws.r[i]);
    std::vector<double> u(n, 0.0);
    if (dir == Direction::outward)
        numerov_sweep(w, u, 0, n - 1, ws.h, seed0, seed1);
    else
        numerov_sweep(w, u, n - 1, 0, ws.h, seed0, seed1);
    return u;
}

MatchInfo shooting_match(double E, const QuantumState& q, const PotentialParams& p,
                         const SymmetrySpec& s, const ShootingConfig& cfg) {
    const Workspace ws = make_workspace(cfg.grid);
    const Sampler sample = approx_sampler(ws, q, p, s);
    std::vector<double> w(ws.r.size());
    sample(E, w);
    return match_sampled(ws, w, match_index(ws, w, cfg.match_point));
}

namespace {

std::pair<double, double> shooting_bracket(const QuantumState& q, const PotentialParams& p,
                                           const SymmetrySpec& s, const ShootingConfig& cfg) {
    if (cfg.bracket_lo != cfg.bracket_hi) return {cfg.bracket_lo, cfg.bracket_hi};
    try {
        const double e = solve_energy(q, p, s).E;
        return {e - 0.05, e + 0.05};
    } catch (const std::exception&) {
        const auto win = default_window(s);
        return {win.lo, win.hi};
    }
}

}  // namespace

double shooting_eigenvalue(const QuantumState& q, const PotentialParams& p,
                           const SymmetrySpec& s, const ShootingConfig& cfg) {
    const Workspace ws = make_workspace(cfg.grid);
    const int target = cfg.node_target >= 0 ? cfg.node_target : polynomial_degree(q, s);
    const auto [lo, hi] = shooting_bracket(q, p, s, cfg);
    return bisect_eigenvalue(ws, approx_sampler(ws, q, p, s), lo, hi, target, cfg.match_point,
                             cfg.tol, "shooting_eigenvalue");
}

ApproximationReport approximation_error_report(const QuantumState& q, const PotentialParams& p,
                                               const SymmetrySpec& s, const ShootingConfig& cfg) {
    const Workspace ws = make_workspace(cfg.grid);
    const int target = cfg.node_target >= 0 ? cfg.node_target : polynomial_degree(q, s);
    const auto [lo, hi] = shooting_bracket(q, p, s, cfg);

    ApproximationReport rep;
    rep.e_approx = bisect_eigenvalue(ws, approx_sampler(ws, q, p, s), lo, hi, target,
                                     cfg.match_point, cfg.tol, "approximation_error_report");
    // the exact-centrifugal eigenvalue sits near the approximated one; widen
    // the search if the shift turns out larger than usual
    const Sampler exact = exact_sampler(ws, q, p, s);
    double span = 0.05;
    for (;;) {
        try {
            rep.e_exact_centrifugal =
                bisect_eigenvalue(ws, exact, rep.e_approx - span, rep.e_approx + span, target,
                                  cfg.match_point, cfg.tol, "approximation_error_report");
            break;
        } catch (const bracket_error&) {
            span *= 4.0;
            if (span > 1.0) throw;
        }
    }
    rep.gap = std::abs(rep.e_approx - rep.e_exact_centrifugal);
    return rep;
}

}  // namespace msy
