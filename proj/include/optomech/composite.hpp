#ifndef OPTOMECH_COMPOSITE_HPP
#define OPTOMECH_COMPOSITE_HPP

// Mobile scatterer of strength zeta facing a fixed mirror of reflectivity
// r_fixed.  The pump (flux B, wavenumber k0) enters from the left; the
// reflected amplitude relative to the input,
//
//   A = [ i zeta + r e^{-2i k0 x} / (1 - i zeta - r i zeta e^{-2i k0 x}) ] / (1 - i zeta)
//       + (v/c) * (retarded round-trip terms),
//
// is available both as a multiple-reflection series and in closed form.
// Positions are measured from the reference point at distance L from the
// mirror; phases depend on x through e^{-2i k0 x} while the retardation
// enters through k0 (L - x).  x is folded into the canonical half-wave
// window k0 x in (0, pi] before evaluation.

#include <complex>
#include <span>
#include <vector>

#include "optomech/jet.hpp"
#include "optomech/single_bs.hpp"

namespace optomech {

struct SystemSpec {
    Complex zeta{0.0, 0.0};      // mobile scatterer, frequency-independent
    Complex r_fixed{-1.0, 0.0};  // fixed-mirror reflectivity, |r| <= 1
    double k0L = 100.0;          // reference phase k0 * L
    double k0x = 1.0;            // position, canonical window (0, pi]
    double input_flux = 1.0;     // B = |pump amplitude|^2
    double k0 = 1.0;             // pump wavenumber
};

// Fold k0 x into (0, pi]; the closed form is pi-periodic in k0 x and the
// retardation factor uses the folded position.
double canonical_k0x(double k0x);

struct SeriesResult {
    Jet1 amplitude;
    // rigorous bound on the dropped tail (val and eps parts jointly):
    // sum_{m > n} |q|^m (1 + 2m + 2 m^2 k0 d) times the term prefactor
    double truncation_bound = 0.0;
    int terms_used = 0;
};

// Partial sum of the round-trip series, term n carrying the Doppler factor
// (1 + 2 v/c)^n from the tagged m21 entries and the retardation correction
// [1 + 2 i n (n-1) k0 (L-x) v/c].  Terms are accumulated in extended
// precision; the residual bound is reported alongside.
// Throws NonConvergent when |r zeta/(1 - i zeta)| >= 1.
SeriesResult amplitude_series(const SystemSpec& spec, int max_terms = 10'000, double tol = 1e-12);

// Closed form of the reflected amplitude, valid for arbitrary zeta.
// Throws SingularDenominator when 1 - i zeta - r i zeta e^{-2i k0 x}
// (or 1 - i zeta) vanishes.
Jet1 amplitude_closed(const SystemSpec& spec);

struct CompositeAmplitudes {
    Jet1 reflected; // A (relative to pump amplitude)
    Jet1 c_prime;   // C' = (1 - i zeta) A - i zeta (1 - 2 eps)
    Jet1 d_prime;   // D' = i zeta (1 + 2 eps) A + (1 + i zeta)
    Jet1 int_a;     // |A|^2
    Jet1 int_c;     // |C'|^2
    Jet1 int_d;     // |D'|^2
};

// Intensities around the scatterer, truncated at order eps.
CompositeAmplitudes intensities(const SystemSpec& spec, const Jet1& reflected);

// Force on the mobile scatterer from the stress tensor,
//   F = hbar k0 B (|A|^2 + 1 - |C'|^2 - |D'|^2),
// as force0 = val and beta = -eps (units hbar k0 flux, hbar k0 flux / c).
MechanicalResponse force_composite(const SystemSpec& spec);

// Same force as a jet, for callers that need both components raw.
Jet1 force_composite_jet(const SystemSpec& spec);

// Momentum diffusion at v = 0 for the perfect-mirror, lossless case,
//   D = 4 hbar^2 k0^2 B (1 - 1/|1 - i zeta + i zeta e^{-2i k0 x}|^2)^2.
// Throws UnsupportedRegime unless r_fixed = -1 and Im zeta = 0.
double diffusion_composite(const SystemSpec& spec);

struct FrictionMaximum {
    double k0x_max = 0.0;
    double beta = 0.0;
    double diffusion = 0.0;
    double kBT = 0.0; // D / (2 beta)
};

// Locate k0 x* in (0, pi] maximizing beta (2048-point grid scan plus
// golden-section refinement to |dx| <= 1e-10, ties toward smaller k0 x)
// and return the equilibrium temperature there.
// Throws NoCoolingPoint if beta <= 0 over the whole window.
FrictionMaximum temperature_at_max_friction(const SystemSpec& spec);

struct FrictionSample {
    double k0x = 0.0;
    double beta = 0.0;
};

std::vector<FrictionSample> scan_friction(const SystemSpec& spec, std::span<const double> k0x_grid);

struct MaxFrictionSample {
    double zeta = 0.0;
    double k0x_max = 0.0;
    double beta_max = 0.0;
};

// Per-zeta maximum friction over the canonical window (real zeta grid).
std::vector<MaxFrictionSample> scan_max_friction_vs_zeta(std::span<const double> zeta_grid,
                                                         const SystemSpec& spec);

// log-log slope between the first and last sample of a positive-valued
// table, (ln y1 - ln y0) / (ln x1 - ln x0).
double loglog_slope(double x0, double y0, double x1, double y1);

namespace detail {
// Un-linearized composite chain: plain complex arithmetic with eps kept as
// a number and exponential retardation factors e^{2 i n (n-1) k0 d eps}.
// Oracle for finite-difference checks of the jet path.
Complex amplitude_series_at(const SystemSpec& spec, double eps, double tol = 1e-13,
                            int max_terms = 2'000'000);
double force_composite_at(const SystemSpec& spec, double eps);
} // namespace detail

} // namespace optomech

#endif
