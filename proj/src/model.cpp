#include "msy/model.hpp"

#include <cmath>
#include <cstdio>

namespace msy {

void PotentialParams::validate() const {
    if (!(alpha > 0.0))
        throw std::invalid_argument("PotentialParams: alpha must be positive");
    if (C == 0.0 || D == 0.0)
        throw std::invalid_argument("PotentialParams: C and D must be nonzero");
    // C + D x with x = e^{-ar} in (0, 1); an interior zero means a pole of the
    // Mobius factor at finite r > 0. x = 1 (r = 0) is the allowed boundary case.
    const double x0 = -C / D;
    if (x0 > 0.0 && x0 < 1.0)
        throw std::invalid_argument("PotentialParams: Mobius factor has a pole at finite r > 0");
}

double PotentialParams::mobius_factor(double r) const {
    const double t = std::exp(-alpha * r);
    const double den = C + D * t;
    if (den == 0.0)
        throw std::domain_error("mobius_factor: pole of the Mobius denominator");
    return (A + B * t) / den;
}

void SymmetrySpec::validate() const {
    if (!(M > 0.0)) throw std::invalid_argument("SymmetrySpec: M must be positive");
}

void QuantumState::validate() const {
    if (kappa == 0) throw std::invalid_argument("QuantumState: kappa must be nonzero");
    if (n < 0) throw std::invalid_argument("QuantumState: n must be non-negative");
}

namespace {

// spectroscopic letters; S and P capitalised as in the usual level tables
constexpr const char* kOrbitalLetters = "SPdfghiklmnoq";
constexpr int kNumLetters = 13;

}  // namespace

std::string QuantumState::label() const {
    validate();
    const int ell = l();
    char letter = ell < kNumLetters ? kOrbitalLetters[ell] : '?';
    const int two_j = 2 * std::abs(kappa) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%d%c%d/2", n, letter, two_j);
    return buf;
}

QuantumState QuantumState::parse_label(const std::string& text) {
    // <n><letter><2j>/2
    std::size_t i = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == 0 || i >= text.size())
        throw std::invalid_argument("QuantumState::parse_label: missing n or letter in '" + text + "'");
    const int n = std::stoi(text.substr(0, i));
    const char letter = text[i];
    int ell = -1;
    for (int k = 0; k < kNumLetters; ++k)
        if (kOrbitalLetters[k] == letter) { ell = k; break; }
    if (ell < 0)
        throw std::invalid_argument("QuantumState::parse_label: unknown orbital letter in '" + text + "'");
    const std::string jpart = text.substr(i + 1);
    const auto slash = jpart.find('/');
    if (slash == std::string::npos || jpart.substr(slash) != "/2")
        throw std::invalid_argument("QuantumState::parse_label: j must be written as <odd>/2 in '" + text + "'");
    const int two_j = std::stoi(jpart.substr(0, slash));
    if (two_j <= 0 || two_j % 2 == 0)
        throw std::invalid_argument("QuantumState::parse_label: 2j must be a positive odd integer in '" + text + "'");
    // j = l + 1/2 -> kappa = -(l+1);  j = l - 1/2 -> kappa = +l
    QuantumState q;
    q.n = n;
    if (two_j == 2 * ell + 1)
        q.kappa = -(ell + 1);
    else if (two_j == 2 * ell - 1)
        q.kappa = ell;
    else
        throw std::invalid_argument("QuantumState::parse_label: (l, j) mismatch in '" + text + "'");
    q.validate();
    return q;
}

void RadialGrid::validate() const {
    if (!(0.0 < r_min && r_min < r_max))
        throw std::invalid_argument("RadialGrid: need 0 < r_min < r_max");
    if (points < 2) throw std::invalid_argument("RadialGrid: need at least 2 points");
}

double RadialGrid::step() const {
    if (spacing != Spacing::uniform)
        throw std::invalid_argument("RadialGrid::step: grid is not uniform");
    return (r_max - r_min) / (points - 1);
}

std::vector<double> RadialGrid::make() const {
    validate();
    std::vector<double> r(points);
    if (spacing == Spacing::uniform) {
        const double h = step();
        for (int i = 0; i < points; ++i) r[i] = r_min + h * i;
    } else {
        const double lr0 = std::log(r_min), lr1 = std::log(r_max);
        const double dl = (lr1 - lr0) / (points - 1);
        for (int i = 0; i < points; ++i) r[i] = std::exp(lr0 + dl * i);
    }
    r.back() = r_max;
    return r;
}

namespace {

double tail_term(double r, const PotentialParams& p, PotentialChoice choice, TailForm tail) {
    const double yuk = std::exp(-p.alpha * r) / r;
    if (choice == PotentialChoice::first) return -p.V1 * yuk;
    const double base = 1.0 - yuk;
    return tail == TailForm::squared ? -p.V1 * base * base : -p.V1 * base;
}

double mobius_square(double r, const PotentialParams& p) {
    const double m = p.mobius_factor(r);
    return p.V0 * m * m;
}

}  // namespace

double delta_potential(double r, const PotentialParams& p, PotentialChoice choice, TailForm tail) {
    if (!(r > 0.0)) throw std::domain_error("delta_potential: r must be positive");
    return mobius_square(r, p) + tail_term(r, p, choice, tail);
}

double sigma_potential(double r, const PotentialParams& p, PotentialChoice choice, TailForm tail) {
    if (!(r > 0.0)) throw std::domain_error("sigma_potential: r must be positive");
    return mobius_square(r, p) + tail_term(r, p, choice, tail);
}

double tensor_potential(double r, double H) {
    if (!(r > 0.0)) throw std::domain_error("tensor_potential: r must be positive");
    return -H / r;
}

double centrifugal_approx(double r, double alpha, double C, double D) {
    if (!(r > 0.0)) throw std::domain_error("centrifugal_approx: r must be positive");
    const double den = C + D * std::exp(-alpha * r);
    if (den == 0.0) throw std::domain_error("centrifugal_approx: pole of the Mobius denominator");
    const double q = C * alpha / den;
    return q * q;
}

double inverse_r_approx(double r, double alpha, double C, double D) {
    if (!(r > 0.0)) throw std::domain_error("inverse_r_approx: r must be positive");
    const double den = C + D * std::exp(-alpha * r);
    if (den == 0.0) throw std::domain_error("inverse_r_approx: pole of the Mobius denominator");
    return C * alpha / den;
}

}  // namespace msy
