#ifndef OPTOMECH_SINGLE_BS_HPP
#define OPTOMECH_SINGLE_BS_HPP

// Force, friction and momentum diffusion for one moving beamsplitter
// illuminated by two counter-propagating monochromatic waves.
//
// Units: hbar = c = 1 throughout.  Photo-current amplitudes b0, c0 have
// |.|^2 = photon flux; forces come out in hbar k0 * flux, friction in
// hbar k0 * flux / c, diffusion in (hbar k0)^2 * flux.

#include <complex>
#include <optional>

#include "optomech/jet.hpp"
#include "optomech/scatterer.hpp"

namespace optomech {

struct DriveFields {
    Complex b0{0.0, 0.0}; // right-propagating input amplitude
    Complex c0{0.0, 0.0}; // left-propagating input amplitude
    double k = 1.0;       // drive wavenumber (k0 units)
};

// Standing-wave drive with equal fluxes, phase referenced to x = 0:
// b0 = sqrt(flux) e^{i k x}, c0 = sqrt(flux) e^{-i k x}.
DriveFields standing_wave(double flux, double k0x, double k = 1.0);

struct MechanicalResponse {
    double force0 = 0.0; // static force, hbar k0 * flux
    double beta = 0.0;   // friction, F = F0 - beta v; beta > 0 cools
    std::optional<double> diffusion; // (hbar k0)^2 * flux
    std::optional<double> temperature; // k_B T = D/(2 beta), defined for beta > 0
};

// Radiation force on the moving scatterer, F = F0 + eps F1, from the
// stress tensor applied to the scattered amplitudes
//   A = (c0 - m12 b0)/m11,  D = (det M b0 + m21 c0)/m11,
//   F = k (|A|^2 + |b0|^2 - |c0|^2 - |D|^2),
// evaluated in jet arithmetic.  force0 = val, beta = -eps (c = 1).
Jet1 force_single(const Polarizability& p, const DriveFields& drive);

// Doppler-cooling friction coefficient for equal counter-propagating
// drives, spatially averaged: beta = 4 hbar k0^2 flux Im(dzeta/domega).
// Zero for a frequency-independent polarizability.
double molasses_friction(const Polarizability& p, double flux, double k0);

// Momentum diffusion of the scatterer at v = 0,
//   D = (hbar k)^2 [ 2 Im zeta |B-C|^2 + 4 |zeta|^2 (|B|^2 + |C|^2) ] / |1 - i zeta|^2.
double diffusion_single(Complex zeta, const DriveFields& drive);

// True iff the amplitude form of the diffusion coefficient (scattered
// A, D from the static map plus the r/t cross terms) agrees with the
// closed form in zeta to 1e-10 relative.
bool diffusion_equivalence_check(Complex zeta, const DriveFields& drive);

namespace detail {
// Un-linearized amplitude chain: same rational expressions with eps kept
// as a plain number.  Used by finite-difference oracles in the tests.
double force_single_at(const Polarizability& p, const DriveFields& drive, double eps);
// Amplitude form of the diffusion coefficient (oracle for the closed form).
double diffusion_single_amplitude_form(Complex zeta, const DriveFields& drive);
} // namespace detail

} // namespace optomech

#endif
