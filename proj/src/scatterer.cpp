#include "optomech/scatterer.hpp"

namespace optomech {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ZetaValue zeta_of(const Polarizability& p, double omega)
{
    switch (p.kind) {
    case Polarizability::Kind::Constant:
        return {p.zeta, Complex{0.0, 0.0}};
    case Polarizability::Kind::TwoLevelAtom: {
        const Complex den = Complex(p.detuning, -p.gamma);
        const Complex z = p.cross_section_ratio * p.gamma / den;
        const Complex w = p.cross_section_ratio * p.gamma * omega / (den * den);
        return {z, w};
    }
    }
    return {};
}

ReflTrans refltrans_of(Complex zeta)
{
    const Complex t = 1.0 / (1.0 - kI * zeta);
    return {kI * zeta * t, t};
}

Jet1 TransferMatrix::det() const
{
    return m11 * m22 - m12 * m21;
}

TransferMatrix TransferMatrix::inverse() const
{
    const Jet1 idet = inv(det());
    TransferMatrix out;
    out.m11 = m22 * idet;
    out.m12 = -m12 * idet;
    out.m21 = -m21 * idet;
    out.m22 = m11 * idet;
    out.shift12 = shift12;
    out.shift21 = shift21;
    return out;
}

TransferMatrix static_matrix(Complex zeta)
{
    TransferMatrix m;
    m.m11 = Jet1(1.0 - kI * zeta);
    m.m12 = Jet1(-kI * zeta);
    m.m21 = Jet1(kI * zeta);
    m.m22 = Jet1(1.0 + kI * zeta);
    return m;
}

TransferMatrix moving_matrix(const Polarizability& p, double omega)
{
    const auto [z, w] = zeta_of(p, omega);
    // Off-diagonal eps parts are i (2 zeta - w); written without the
    // (omega/zeta) dzeta/domega ratio so zeta = 0 stays regular.
    const Complex off = kI * (2.0 * z - w);
    TransferMatrix m;
    m.m11 = Jet1(1.0 - kI * z, -kI * w);
    m.m12 = Jet1(-kI * z, off);
    m.m21 = Jet1(kI * z, off);
    m.m22 = Jet1(1.0 + kI * z, -kI * w);
    m.shift12 = +2;
    m.shift21 = -2;
    return m;
}

} // namespace optomech
