#include "msy/wavefn.hpp"

#include <cmath>

namespace msy {

Omegas exponent_params(double E, const QuantumState& q, const PotentialParams& p,
                       const SymmetrySpec& s) {
    const auto c = effective_coefficients(E, p, s, q);
    const double a2 = p.alpha * p.alpha;
    const double cd = p.C / p.D;
    Omegas w;
    w.w1 = (c.quad * cd * cd - c.eff_energy) / a2;
    w.w2 = (c.lin * cd - 2.0 * c.eff_energy) / a2;
    w.w3 = (c.cst - c.eff_energy) / a2;
    return w;
}

double jacobi(int n, double a, double b, double x) {
    if (n < 0) throw std::domain_error("jacobi: negative degree");
    if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("jacobi: need a, b > -1");
    if (n == 0) return 1.0;
    double y0 = 1.0;
    double y1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for (int k = 2; k <= n; ++k) {
        const double den = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
        const double c1 = (2.0 * k + a + b - 1.0)
                          * ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x + a * a - b * b);
        const double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
        const double yk = (c1 * y1 + c0 * y0) / den;
        y0 = y1;
        y1 = yk;
    }
    return y1;
}

double jacobi_derivative(int n, double a, double b, double x) {
    if (n <= 0) return 0.0;
    return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
}

namespace {

double jacobi_second_derivative(int n, double a, double b, double x) {
    if (n <= 1) return 0.0;
    return 0.25 * (n + a + b + 1.0) * (n + a + b + 2.0) * jacobi(n - 2, a + 2.0, b + 2.0, x);
}

struct Evaluator {
    double alpha;
    double z0;   // -(D/C): prefactor of e^{-ar} in z(r)
    WaveSpec ws;

    double z(double r) const { return z0 * std::exp(-alpha * r); }

    // log of the envelope z^{exp1} (1-z)^{exp2}, minus the peak offset
    double log_envelope(double zz) const {
        return ws.exp1 * std::log(zz) + ws.exp2 * std::log1p(-zz) - ws.log_scale;
    }

    double value(double r) const {
        const double zz = z(r);
        if (zz >= 1.0) return 0.0;  // r = 0 boundary of the C = -D case
        const double env = std::exp(log_envelope(zz));
        return env * jacobi(ws.n, ws.jacobi_a, ws.jacobi_b, 1.0 - 2.0 * zz);
    }

    double derivative(double r) const {
        const double zz = z(r);
        if (zz >= 1.0) return 0.0;
        const double env = std::exp(log_envelope(zz));
        const double x = 1.0 - 2.0 * zz;
        const double pol = jacobi(ws.n, ws.jacobi_a, ws.jacobi_b, x);
        const double dpol = jacobi_derivative(ws.n, ws.jacobi_a, ws.jacobi_b, x);
        // d/dr = -alpha z d/dz; dx/dz = -2
        return env * alpha * (-(ws.exp1 - ws.exp2 * zz / (1.0 - zz)) * pol + 2.0 * zz * dpol);
    }

    double second_derivative(double r) const {
        const double zz = z(r);
        if (zz >= 1.0) return 0.0;
        const double env = std::exp(log_envelope(zz));
        const double x = 1.0 - 2.0 * zz;
        const double pol = jacobi(ws.n, ws.jacobi_a, ws.jacobi_b, x);
        const double dpol = jacobi_derivative(ws.n, ws.jacobi_a, ws.jacobi_b, x);
        const double ddpol = jacobi_second_derivative(ws.n, ws.jacobi_a, ws.jacobi_b, x);
        const double p1 = ws.exp1 / zz - ws.exp2 / (1.0 - zz);
        const double dp1 = -ws.exp1 / (zz * zz) - ws.exp2 / ((1.0 - zz) * (1.0 - zz));
        const double gz = p1 * pol - 2.0 * dpol;
        const double gzz = (p1 * p1 + dp1) * pol - 4.0 * p1 * dpol + 4.0 * ddpol;
        // d^2/dr^2 = alpha^2 (z d/dz + z^2 d^2/dz^2)
        return env * alpha * alpha * (zz * gz + zz * zz * gzz);
    }
};

Evaluator make_evaluator(const BoundState& bs) {
    Evaluator ev;
    ev.alpha = bs.params.alpha;
    ev.z0 = -(bs.params.D / bs.params.C);
    if (!(ev.z0 > 0.0))
        throw std::domain_error("wavefunction: negative power base -(D/C) e^{-ar}; "
                                "closed form invalid for this sign pattern");
    ev.ws = wave_spec(bs);
    return ev;
}

double coupling_denominator(const BoundState& bs) {
    const auto& s = bs.spec;
    return s.limit == SymmetryLimit::pseudospin ? s.M - bs.E + s.sym_const
                                                : s.M + bs.E - s.sym_const;
}

}  // namespace

WaveSpec wave_spec(const BoundState& bs) {
    const Omegas w = exponent_params(bs.E, bs.state, bs.params, bs.spec);
    if (!(w.w3 > 0.0))
        throw std::domain_error("wave_spec: w3 <= 0, tail exponent not decaying");
    const double s14 = w.w1 - w.w2 + w.w3 + 0.25;
    if (s14 < 0.0)
        throw std::domain_error("wave_spec: complex Mobius exponent (w1 - w2 + w3 + 1/4 < 0)");
    WaveSpec ws;
    ws.exp1 = std::sqrt(w.w3);
    ws.exp2 = 0.5 + std::sqrt(s14);
    ws.jacobi_a = 2.0 * ws.exp1;
    ws.jacobi_b = 2.0 * ws.exp2 - 1.0;
    ws.n = bs.degree;

    // peak of the envelope z^{exp1} (1-z)^{exp2} over the physical z range
    const double zsup = -(bs.params.D / bs.params.C);
    const double zstar = ws.exp1 / (ws.exp1 + ws.exp2);
    if (zsup > 0.0 && zstar < zsup)
        ws.log_scale = ws.exp1 * std::log(zstar) + ws.exp2 * std::log1p(-zstar);
    else if (zsup > 0.0 && zsup < 1.0)
        ws.log_scale = ws.exp1 * std::log(zsup) + ws.exp2 * std::log1p(-zsup);
    // Jacobi argument 1 - 2z spans [1 - 2 zsup, 1)
    ws.jacobi_arg_in_range = zsup <= 1.0;
    return ws;
}

double lower_component_ps(double r, const BoundState& bs) {
    if (bs.spec.limit != SymmetryLimit::pseudospin)
        throw std::invalid_argument("lower_component_ps: state is not a pseudospin solution");
    return make_evaluator(bs).value(r);
}

double upper_component_s(double r, const BoundState& bs) {
    if (bs.spec.limit != SymmetryLimit::spin)
        throw std::invalid_argument("upper_component_s: state is not a spin solution");
    return make_evaluator(bs).value(r);
}

double primary_component(double r, const BoundState& bs) { return make_evaluator(bs).value(r); }

double primary_component_derivative(double r, const BoundState& bs) {
    return make_evaluator(bs).derivative(r);
}

double primary_component_second_derivative(double r, const BoundState& bs) {
    return make_evaluator(bs).second_derivative(r);
}

double partner_component(double r, const BoundState& bs) {
    if (!(r > 0.0)) throw std::domain_error("partner_component: r must be positive");
    const double den = coupling_denominator(bs);
    if (std::abs(den) < 1e-12)
        throw std::domain_error("partner_component: energy at the forbidden value");
    const Evaluator ev = make_evaluator(bs);
    const double u = ev.value(r);
    const double du = ev.derivative(r);
    const double kh = bs.state.kappa + bs.spec.H;
    if (bs.spec.limit == SymmetryLimit::pseudospin)
        return (du - kh * u / r) / den;  // F from G
    return (du + kh * u / r) / den;      // G from F
}

namespace {

double simpson(std::span<const double> y, double h) {
    const std::size_t m = y.size();
    if (m < 3) throw std::invalid_argument("simpson: need at least 3 points");
    double acc = 0.0;
    std::size_t i = 0;
    for (; i + 2 < m; i += 2) acc += y[i] + 4.0 * y[i + 1] + y[i + 2];
    acc *= h / 3.0;
    if (i + 1 < m) acc += 0.5 * h * (y[i] + y[i + 1]);  // trapezoid on a leftover interval
    return acc;
}

}  // namespace

double normalize(const BoundState& bs, const RadialGrid& grid) {
    const Evaluator ev = make_evaluator(bs);
    if (!(ev.ws.exp1 > 0.0)) throw std::domain_error("normalize: non-integrable tail");
    const double den = coupling_denominator(bs);
    if (std::abs(den) < 1e-12)
        throw std::domain_error("normalize: energy at the forbidden value");
    const auto r = grid.make();
    const double h = grid.step();
    const double kh = bs.state.kappa + bs.spec.H;
    std::vector<double> density(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double u = ev.value(r[i]);
        const double du = ev.derivative(r[i]);
        const double sign = bs.spec.limit == SymmetryLimit::pseudospin ? -1.0 : 1.0;
        const double v = (du + sign * kh * u / r[i]) / den;
        density[i] = u * u + v * v;
    }
    const double integral = simpson(density, h);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::domain_error("normalize: non-positive or divergent norm integral");
    return 1.0 / std::sqrt(integral);
}

RadialSolution solve_components(const BoundState& bs, const RadialGrid& grid) {
    RadialSolution sol;
    const Evaluator ev = make_evaluator(bs);
    sol.spec = ev.ws;
    sol.spec.norm = normalize(bs, grid);
    sol.r = grid.make();
    sol.upper.resize(sol.r.size());
    sol.lower.resize(sol.r.size());
    const bool ps = bs.spec.limit == SymmetryLimit::pseudospin;
    const double den = coupling_denominator(bs);
    const double kh = bs.state.kappa + bs.spec.H;
    const double sign = ps ? -1.0 : 1.0;
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        const double u = sol.spec.norm * ev.value(sol.r[i]);
        const double du = sol.spec.norm * ev.derivative(sol.r[i]);
        const double v = (du + sign * kh * u / sol.r[i]) / den;
        sol.lower[i] = ps ? u : v;
        sol.upper[i] = ps ? v : u;
    }
    return sol;
}

int count_nodes(std::span<const double> values, double rel_threshold) {
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0;
    const double cut = rel_threshold * peak;
    int nodes = 0;
    double last = 0.0;
    for (double v : values) {
        if (std::abs(v) < cut) continue;
        if (last != 0.0 && v * last < 0.0) ++nodes;
        last = v;
    }
    return nodes;
}

}  // namespace msy
