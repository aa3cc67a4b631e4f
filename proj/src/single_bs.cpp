#include "optomech/single_bs.hpp"

#include <cmath>

namespace optomech {

namespace {
constexpr Complex kI{0.0, 1.0};
}

DriveFields standing_wave(double flux, double k0x, double k)
{
    // equal fluxes, phases referenced to x = 0
    const double a = std::sqrt(flux);
    return {a * std::exp(kI * k0x), a * std::exp(-kI * k0x), k};
}

Jet1 force_single(const Polarizability& p, const DriveFields& drive)
{
    const TransferMatrix m = moving_matrix(p, drive.k);
    const Jet1 b0{drive.b0};
    const Jet1 c0{drive.c0};
    const Jet1 a = (c0 - m.m12 * b0) * inv(m.m11);
    const Jet1 d = (m.det() * b0 + m.m21 * c0) * inv(m.m11);
    const Jet1 flux_balance = norm(a) + Jet1(std::norm(drive.b0)) - Jet1(std::norm(drive.c0)) - norm(d);
    return drive.k * flux_balance;
}

double molasses_friction(const Polarizability& p, double flux, double k0)
{
    // beta = 4 hbar k0^2 flux Im(dzeta/domega); with omega = c k0 this is
    // 4 hbar k0 flux Im(omega dzeta/domega) / c.
    const ZetaValue zv = zeta_of(p, k0);
    return 4.0 * k0 * flux * std::imag(zv.omega_dzeta);
}

double diffusion_single(Complex zeta, const DriveFields& drive)
{
    const double den = std::norm(1.0 - kI * zeta);
    const double k2 = drive.k * drive.k;
    return k2 * (2.0 * std::imag(zeta) * std::norm(drive.b0 - drive.c0)
                 + 4.0 * std::norm(zeta) * (std::norm(drive.b0) + std::norm(drive.c0)))
           / den;
}

double detail::diffusion_single_amplitude_form(Complex zeta, const DriveFields& drive)
{
    const auto [r, t] = refltrans_of(zeta);
    const Complex b = drive.b0;
    const Complex c = drive.c0;
    const Complex a = t * c + r * b;
    const Complex d = r * c + t * b;
    const double k2 = drive.k * drive.k;
    return k2 * (std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d)
                 + 2.0 * std::real(r * std::conj(a) * b - t * std::conj(a) * c)
                 + 2.0 * std::real(r * std::conj(d) * c - t * std::conj(d) * b));
}

bool diffusion_equivalence_check(Complex zeta, const DriveFields& drive)
{
    const double closed = diffusion_single(zeta, drive);
    const double amp = detail::diffusion_single_amplitude_form(zeta, drive);
    const double scale = std::max(std::abs(closed), std::abs(amp));
    if (scale == 0.0)
        return true;
    return std::abs(closed - amp) <= 1e-10 * scale;
}

double detail::force_single_at(const Polarizability& p, const DriveFields& drive, double eps)
{
    const auto [z, w] = zeta_of(p, drive.k);
    const Complex m11 = 1.0 - kI * z - kI * eps * w;
    const Complex m12 = -kI * z + eps * kI * (2.0 * z - w);
    const Complex m21 = kI * z + eps * kI * (2.0 * z - w);
    const Complex det = 1.0 - 2.0 * kI * eps * w;
    const Complex a = (drive.c0 - m12 * drive.b0) / m11;
    const Complex d = (det * drive.b0 + m21 * drive.c0) / m11;
    return drive.k * (std::norm(a) + std::norm(drive.b0) - std::norm(drive.c0) - std::norm(d));
}

} // namespace optomech
