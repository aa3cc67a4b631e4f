#ifndef OPTOMECH_SCATTERER_HPP
#define OPTOMECH_SCATTERER_HPP

// Polarizability models and 2x2 transfer matrices of a single point
// scatterer, static and moving.  A scatterer of strength zeta couples the
// four plane-wave amplitudes around it,
//
//   (C, D) = M (A, B),   M0 = [[1 - i zeta, -i zeta], [i zeta, 1 + i zeta]],
//
// with A, B the amplitudes on the left and C, D on the right.  For a
// scatterer moving at v the off-diagonal entries pick up Doppler factors
// (1 -+ 2 v/c) together with the wave-number shift k -> k (1 +- 2 v/c),
// kept here as integer tags; if zeta depends on frequency, the diagonal
// gains -i (v/c) omega dzeta/domega as well.

#include <complex>

#include "optomech/jet.hpp"

namespace optomech {

struct Polarizability {
    enum class Kind { Constant, TwoLevelAtom };

    Kind kind = Kind::Constant;

    // Constant model
    Complex zeta{0.0, 0.0};

    // Two-level atom: zeta = q Gamma / (detuning - i Gamma) with
    // q = sigma_A/(2 S), detuning = omega_A - omega at the drive frequency.
    double gamma = 0.0;                // HWHM linewidth (angular frequency)
    double detuning = 0.0;             // omega_A - omega
    double cross_section_ratio = 0.0;  // sigma_A / (2 S)

    static Polarizability constant(Complex z)
    {
        Polarizability p;
        p.kind = Kind::Constant;
        p.zeta = z;
        return p;
    }

    static Polarizability two_level_atom(double gamma, double detuning, double cross_section_ratio)
    {
        Polarizability p;
        p.kind = Kind::TwoLevelAtom;
        p.gamma = gamma;
        p.detuning = detuning;
        p.cross_section_ratio = cross_section_ratio;
        return p;
    }
};

struct ZetaValue {
    Complex zeta;        // zeta at the evaluation frequency
    Complex omega_dzeta; // omega * dzeta/domega, analytic
};

// zeta and omega dzeta/domega at angular frequency omega.  For the constant
// model the derivative vanishes; for the two-level atom,
// omega dzeta/domega = q Gamma omega / (detuning - i Gamma)^2.
ZetaValue zeta_of(const Polarizability& p, double omega);

struct ReflTrans {
    Complex r; // reflectivity
    Complex t; // transmissivity
};

// t = 1/(1 - i zeta), r = i zeta t.
ReflTrans refltrans_of(Complex zeta);

struct TransferMatrix {
    Jet1 m11, m12, m21, m22;
    // Doppler tags: entry couples to a wave shifted by k -> k(1 + shift * v/c).
    int shift12 = 0;
    int shift21 = 0;

    Jet1 det() const;
    TransferMatrix inverse() const; // first-order adjugate/det; tags carry over
};

// Static transfer matrix M0; unit determinant for every zeta.
TransferMatrix static_matrix(Complex zeta);

// Transfer matrix of the scatterer moving at v, to first order in v/c.
// Value parts equal static_matrix; tags are +2 on m12 and -2 on m21.
TransferMatrix moving_matrix(const Polarizability& p, double omega);

} // namespace optomech

#endif
