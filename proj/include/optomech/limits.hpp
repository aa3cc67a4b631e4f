#ifndef OPTOMECH_LIMITS_HPP
#define OPTOMECH_LIMITS_HPP

// Closed-form reference formulas for the two asymptotic regimes of the
// scatterer-mirror system -- weak scatterer in front of a perfect mirror
// and strongly reflecting mirror of a pumped resonator -- plus the
// radiation-pressure-Hamiltonian model they are checked against.
//
// Lengths are k0-scaled throughout (k0L = k0 * L etc.); hbar = c = 1.

#include <complex>

#include "optomech/jet.hpp"

namespace optomech {

// Weak-coupling force, truncated at zeta^2 (perfect mirror, real zeta):
//   F = 4 hbar k0 B ( zeta sin 2k0x - zeta^2 { 2 sin^2 k0x [4 cos^2 k0x - 1] }
//                     - zeta^2 eps [ 4 sin^2 2k0x - 4 k0(L-x) sin 4k0x ] ).
double mmc_force(double zeta, double k0x, double k0L, double flux, double eps);

// Same force as a jet (val, eps coefficient).
Jet1 mmc_force_jet(double zeta, double k0x, double k0L, double flux);

// Equilibrium temperature of the weakly coupled scatterer,
// k_B T = hbar/(2 tau) with tau = 2(L-x)/c the round-trip delay.
// k0_L_minus_x = k0 * (L - x).
double mmc_temperature(double k0, double k0_L_minus_x);

// Resonance position phi0 of the intracavity field, the maximum of
// |C'_0|^2 in phi on (0, pi]: tan 2 phi0 = -1/zeta, phi0 = pi - atan(1/zeta)/2.
double resonator_phi0(double zeta);

struct ResonatorField {
    Complex exact;      // -e^{-2i phi} / (1 - i zeta + i zeta e^{-2i phi})
    Complex lorentzian; // -e^{-2i phi} / { 2i (1 - i zeta) [ (phi - phi0) - i/(4 zeta^2) ] }
    double phi0 = 0.0;
};

// Intracavity amplitude C'_0 at v = 0, exact and in the large-zeta
// Lorentzian approximation (width 1/(4 zeta^2)).
ResonatorField resonator_intracavity(double zeta, double phi);

// Linear force coefficient F1/v on the resonator mirror,
//   F1/v = -(1/2c) hbar k0^2 L (phi - phi0) B / { zeta^4 [ (1/4zeta^2)^2 + (phi - phi0)^2 ]^3 }.
// Negative coefficient = cooling (force opposes v); beta = -(F1/v).
double resonator_friction(double zeta, double phi, double k0, double k0L, double flux);

// Temperature floor of the resonator regime, k_B T = hbar c/(8 zeta^2 L)
// = hbar kappa/2, attained at detuning 4 zeta^2 (phi - phi0) = 1.
double resonator_temperature(double zeta, double k0L, double k0 = 1.0);

struct CavityParams {
    double kappa = 0.0;   // field decay rate
    double delta_c = 0.0; // pump-cavity detuning
    double eta = 0.0;     // drive amplitude, eta^2/(2 kappa) = flux
    double coupling = 0.0; // G = omega_c / L = c k0 / L
};

// Scattering -> cavity parameter map:
//   kappa = c/(4 L zeta^2), Delta_C = -c (phi - phi0)/L, eta^2 = 2 kappa B,
//   G = c k0 / L.
// The squared form G = c^2 k0^2 / L^2 does not reproduce the resonator
// friction; the cross-check in the tests pins the frequency form.
CavityParams cavity_from_scattering(double zeta, double phi_minus_phi0, double k0, double k0L,
                                    double flux);

struct CavityResponse {
    double friction_coefficient = 0.0; // F1/v = 4 hbar eta^2 G^2 kappa Delta_C / (Delta_C^2 + kappa^2)^3
    Complex a0; // adiabatic field eta / (-i (Delta_C - G x) + kappa)
    Complex a1; // linear response i eta G / (-i (Delta_C - G x) + kappa)^3
};

// Friction from the damped-driven single-mode model with coupling
// G a^dag a x, evaluated at mirror position x (kappa > 0 required).
CavityResponse hamiltonian_friction(const CavityParams& cavity, double x = 0.0);

} // namespace optomech

#endif
