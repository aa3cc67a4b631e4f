#include "optomech/limits.hpp"

#include <cmath>

#include "optomech/errors.hpp"

namespace optomech {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Jet1 mmc_force_jet(double zeta, double k0x, double k0L, double flux)
{
    const double s2 = std::sin(2.0 * k0x);
    const double s4 = std::sin(4.0 * k0x);
    const double sk = std::sin(k0x);
    const double ck = std::cos(k0x);
    const double k0d = k0L - k0x;
    const double pref = 4.0 * flux; // 4 hbar k0 B with k0 folded into flux units
    const double val = pref * (zeta * s2 - zeta * zeta * (2.0 * sk * sk * (4.0 * ck * ck - 1.0)));
    const double eps = pref * (-zeta * zeta * (4.0 * s2 * s2 - 4.0 * k0d * s4));
    return {Complex(val, 0.0), Complex(eps, 0.0)};
}

double mmc_force(double zeta, double k0x, double k0L, double flux, double eps)
{
    const Jet1 f = mmc_force_jet(zeta, k0x, k0L, flux);
    return std::real(at_eps(f, eps));
}

double mmc_temperature(double k0, double k0_L_minus_x)
{
    if (!(k0_L_minus_x > 0.0))
        throw Error("mmc_temperature: requires L - x > 0");
    // k_B T = hbar/(2 tau), tau = 2 (L - x)/c
    return k0 / (4.0 * k0_L_minus_x);
}

double resonator_phi0(double zeta)
{
    // the branch of tan 2 phi0 = -1/zeta that maximizes |C'_0|^2 on (0, pi]
    return kPi - 0.5 * std::atan(1.0 / zeta);
}

ResonatorField resonator_intracavity(double zeta, double phi)
{
    ResonatorField out;
    out.phi0 = resonator_phi0(zeta);
    const Complex e2 = std::exp(-2.0 * kI * phi);
    out.exact = -e2 / (1.0 - kI * zeta + kI * zeta * e2);
    const double width = 1.0 / (4.0 * zeta * zeta);
    out.lorentzian = -e2 / (2.0 * kI * (1.0 - kI * zeta) * Complex(phi - out.phi0, -width));
    return out;
}

double resonator_friction(double zeta, double phi, double k0, double k0L, double flux)
{
    const double dphi = phi - resonator_phi0(zeta);
    const double a = 1.0 / (4.0 * zeta * zeta);
    const double w = a * a + dphi * dphi;
    // F1/v = -(1/2c) hbar k0^2 L (phi - phi0) B / (zeta^4 w^3)
    return -0.5 * k0 * k0L * dphi * flux / (std::pow(zeta, 4) * w * w * w);
}

double resonator_temperature(double zeta, double k0L, double k0)
{
    if (!(zeta > 0.0))
        throw Error("resonator_temperature: requires zeta > 0");
    // k_B T = hbar c/(8 zeta^2 L) = hbar kappa/2
    return k0 / (8.0 * zeta * zeta * k0L);
}

CavityParams cavity_from_scattering(double zeta, double phi_minus_phi0, double k0, double k0L,
                                    double flux)
{
    CavityParams p;
    p.kappa = k0 / (4.0 * k0L * zeta * zeta);
    p.delta_c = -k0 * phi_minus_phi0 / k0L;
    p.eta = std::sqrt(2.0 * p.kappa * flux);
    p.coupling = k0 * k0 / k0L; // G = c k0 / L
    return p;
}

CavityResponse hamiltonian_friction(const CavityParams& cavity, double x)
{
    if (!(cavity.kappa > 0.0))
        throw Error("hamiltonian_friction: requires kappa > 0");
    const double det = cavity.delta_c - cavity.coupling * x;
    const Complex pole = Complex(cavity.kappa, -det); // -i(Delta_C - G x) + kappa
    CavityResponse out;
    out.a0 = cavity.eta / pole;
    out.a1 = kI * cavity.eta * cavity.coupling / (pole * pole * pole);
    // F1/v = -2 hbar G Re{a0* a1}
    out.friction_coefficient = -2.0 * cavity.coupling * std::real(std::conj(out.a0) * out.a1);
    return out;
}

} // namespace optomech
