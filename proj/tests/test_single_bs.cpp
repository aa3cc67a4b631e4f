#include <doctest.h>

#include <random>

#include "optomech/single_bs.hpp"
#include "test_support.hpp"

using namespace optomech;
using namespace optomech::test;
using Complex = std::complex<double>;

namespace {

constexpr Complex kI{0.0, 1.0};

// Transcription of the compact first-order force formula, used as an
// independent oracle for the jet route.  One sign differs from the usual
// print of that formula: the exact expansion of the scattered amplitudes
// (confirmed by central finite differences below) requires
// -eps omega Im{zeta* dzeta/domega} in the Im{B0 C0*} coefficient, not +.
void force_expanded(Complex z, Complex w, Complex b0, Complex c0, double k, double& f0, double& f1)
{
    const double dim = std::imag(w);                      // omega d Im zeta / domega
    const double dabs2 = 2.0 * std::real(std::conj(z) * w); // omega d |zeta|^2 / domega
    const double b2 = std::norm(b0), c2 = std::norm(c0);
    const double imbc = std::imag(b0 * std::conj(c0));
    const double rebc = std::real(b0 * std::conj(c0));

    const double brace0 = (std::imag(z) + std::norm(z)) * (b2 - c2) - 2.0 * std::real(z) * imbc;
    const double brace1 = 0.5 * dabs2 * (b2 - c2)
                          - (dim - 0.5 * dabs2 + 2.0 * std::norm(z)) * (b2 + c2)
                          - 2.0 * std::imag(std::conj(z) * w) * imbc
                          + 2.0 * (2.0 * std::imag(z) - dim + 0.5 * dabs2) * rebc;

    const Complex m11 = 1.0 - kI * z;
    const double pval = std::norm(m11);
    const double peps = 2.0 * std::real(std::conj(m11) * (-kI * w));
    f0 = 2.0 * k * brace0 / pval;
    f1 = 2.0 * k * (brace1 * pval - brace0 * peps) / (pval * pval);
}

Polarizability random_tla(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return Polarizability::two_level_atom(0.2 + std::abs(u(rng)), u(rng), std::abs(u(rng)));
}

} // namespace

TEST_CASE("force_single: transparent scatterer feels nothing")
{
    const Polarizability p = Polarizability::constant({0.0, 0.0});
    const Jet1 f = force_single(p, {{1.3, 0.4}, {-0.2, 0.9}, 1.0});
    CHECK(std::abs(f.val) == 0.0);
    CHECK(std::abs(f.eps) == 0.0);
}

TEST_CASE("force_single: one-sided drive at rest, real zeta")
{
    // F0 = 2 k |B0|^2 (Im zeta + |zeta|^2)/|1 - i zeta|^2; oracle = stress
    // tensor with A = r B0, D = t B0
    for (const double z : {0.1, 0.5, 1.0, 3.0}) {
        const DriveFields drive{{1.2, 0.0}, {0.0, 0.0}, 1.0};
        const Jet1 f = force_single(Polarizability::constant({z, 0.0}), drive);
        const double expect = 2.0 * std::norm(drive.b0) * z * z / (1.0 + z * z);
        CHECK(close_rel(std::real(f.val), expect, 1e-12));

        const auto [r, t] = refltrans_of({z, 0.0});
        const Complex a = r * drive.b0;
        const Complex d = t * drive.b0;
        const double mst = std::norm(a) + std::norm(drive.b0) - std::norm(d);
        CHECK(close_rel(std::real(f.val), mst, 1e-12));
    }
}

TEST_CASE("force_single: v = 0 value equals the static scattering force")
{
    // all velocity terms sit in the eps part; the value part must coincide
    // with the force computed from the static map A = r B + t C, D = t B + r C
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 200; ++i) {
        const Complex z{u(rng), std::abs(u(rng))};
        const DriveFields drive{{u(rng), u(rng)}, {u(rng), u(rng)}, 1.0};
        const Jet1 f = force_single(Polarizability::constant(z), drive);
        const auto [r, t] = refltrans_of(z);
        const Complex a = r * drive.b0 + t * drive.c0;
        const Complex d = t * drive.b0 + r * drive.c0;
        const double mst =
            std::norm(a) + std::norm(drive.b0) - std::norm(drive.c0) - std::norm(d);
        CHECK(close_rel(std::real(f.val), mst, 1e-11));
    }
}

TEST_CASE("force_single equals the expanded first-order formula")
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 300; ++i) {
        const Polarizability p = i % 3 == 0 ? Polarizability::constant({u(rng), std::abs(u(rng))})
                                            : random_tla(rng);
        const double k = 0.5 + std::abs(u(rng));
        const DriveFields drive{{u(rng), u(rng)}, {u(rng), u(rng)}, k};
        const auto [z, w] = zeta_of(p, k);
        double f0 = 0.0, f1 = 0.0;
        force_expanded(z, w, drive.b0, drive.c0, k, f0, f1);
        const Jet1 f = force_single(p, drive);
        CHECK(std::abs(std::real(f.val) - f0) <= 1e-10 * (1.0 + std::abs(f0)));
        CHECK(std::abs(std::real(f.eps) - f1) <= 1e-10 * (1.0 + std::abs(f1)));
        CHECK(std::abs(std::imag(f.val)) <= 1e-12);
        CHECK(std::abs(std::imag(f.eps)) <= 1e-12);
    }
}

TEST_CASE("force_single eps part matches finite differences of the plain chain")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const double h = 1e-8;
    for (int i = 0; i < 200; ++i) {
        const Polarizability p = i % 2 == 0 ? Polarizability::constant({u(rng), std::abs(u(rng))})
                                            : random_tla(rng);
        const DriveFields drive{{u(rng), u(rng)}, {u(rng), u(rng)}, 1.0};
        const Jet1 f = force_single(p, drive);
        const double fd = (detail::force_single_at(p, drive, h)
                           - detail::force_single_at(p, drive, -h))
                          / (2.0 * h);
        CHECK(std::abs(std::real(f.eps) - fd) <= 1e-6 * (1.0 + std::abs(std::real(f.eps))));
    }
}

TEST_CASE("flux conservation and static force identity at v = 0, real zeta")
{
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 300; ++i) {
        const double z = u(rng);
        const Complex b0{u(rng), u(rng)};
        const Complex c0{u(rng), u(rng)};
        const auto [r, t] = refltrans_of({z, 0.0});
        const Complex a = r * b0 + t * c0;
        const Complex d = t * b0 + r * c0;
        CHECK(close_rel(std::norm(a) + std::norm(d), std::norm(b0) + std::norm(c0), 1e-12));

        const Jet1 f = force_single(Polarizability::constant({z, 0.0}), {b0, c0, 1.0});
        const double expect = 2.0 * std::norm(r) * (std::norm(b0) - std::norm(c0))
                              - 4.0 * z / (1.0 + z * z) * std::imag(b0 * std::conj(c0));
        CHECK(std::abs(std::real(f.val) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("drive swap: value part flips, damping part is preserved (constant zeta)")
{
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const Polarizability p = Polarizability::constant({u(rng), std::abs(u(rng))});
        const Complex b0{u(rng), u(rng)};
        const Complex c0{u(rng), u(rng)};
        const Jet1 f = force_single(p, {b0, c0, 1.0});
        const Jet1 g = force_single(p, {c0, b0, 1.0});
        CHECK(std::abs(f.val + g.val) <= 1e-12 * (1.0 + std::abs(f.val)));
        CHECK(std::abs(f.eps - g.eps) <= 1e-12 * (1.0 + std::abs(f.eps)));
    }
}

TEST_CASE("molasses friction")
{
    // frequency-independent polarizability has no Doppler friction
    CHECK(molasses_friction(Polarizability::constant({0.3, 0.1}), 1.0, 1.0) == 0.0);

    // drive below the atomic resonance (stored detuning = omega_A - omega > 0)
    // cools; above heats
    const double gamma = 1e-6, q = 1e-3;
    CHECK(molasses_friction(Polarizability::two_level_atom(gamma, +gamma, q), 1.0, 1.0) > 0.0);
    CHECK(molasses_friction(Polarizability::two_level_atom(gamma, -gamma, q), 1.0, 1.0) < 0.0);
}

TEST_CASE("molasses friction agrees with the averaged standing-wave force")
{
    // |zeta| <= 1e-3; spatial average of the linear force over a full period
    const double gamma = 1e-6;
    const double q = std::sqrt(2.0) * 1e-3; // |zeta| = 1e-3 at detuning = Gamma
    const Polarizability p = Polarizability::two_level_atom(gamma, gamma, q);
    const double flux = 1.0, k0 = 1.0;
    const int m = 64;
    double eps_sum = 0.0;
    for (int j = 0; j < m; ++j) {
        const double k0x = 2.0 * kPi * j / m;
        const Jet1 f = force_single(p, standing_wave(flux, k0x, k0));
        eps_sum += std::real(f.eps);
    }
    const double beta_avg = -eps_sum / m;
    const double beta = molasses_friction(p, flux, k0);
    CHECK(close_rel(beta_avg, beta, 1e-2));
}

TEST_CASE("diffusion_single")
{
    CHECK(diffusion_single({0.0, 0.0}, {{1.0, 0.0}, {0.5, 0.0}, 1.0}) == 0.0);

    // standing wave, small two-level zeta: D -> 8 (hbar k0)^2 Im zeta B sin^2(k0 x)
    const Complex z{0.0, 1e-3};
    const double flux = 2.0;
    const double amp = 8.0 * std::imag(z) * flux;
    for (int j = 0; j < 32; ++j) {
        const double k0x = (j + 0.5) * kPi / 32.0;
        const double d = diffusion_single(z, standing_wave(flux, k0x));
        CHECK(std::abs(d - amp * std::sin(k0x) * std::sin(k0x)) <= 1e-2 * amp);
    }

    // real zeta, equal drives (node of |B - C|): D = 8 k^2 zeta^2/(1+zeta^2) |B|^2
    for (const double zr : {0.2, 1.0, 4.0}) {
        const DriveFields drive{{0.8, 0.3}, {0.8, 0.3}, 1.0};
        const double d = diffusion_single({zr, 0.0}, drive);
        const double expect = 8.0 * zr * zr / (1.0 + zr * zr) * std::norm(drive.b0);
        CHECK(close_rel(d, expect, 1e-12));
        CHECK(close_rel(d, detail::diffusion_single_amplitude_form({zr, 0.0}, drive), 1e-12));
    }
}

TEST_CASE("diffusion equivalence: amplitude form == closed form")
{
    CHECK(diffusion_equivalence_check({0.0, 0.3}, {{1.0, 0.0}, {0.0, 0.0}, 1.0}));
    CHECK(diffusion_equivalence_check({0.0, 0.0}, {{1.0, 0.0}, {0.7, 0.0}, 1.0}));

    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z{u(rng), std::abs(u(rng))};
        const DriveFields drive{{u(rng), u(rng)}, {u(rng), u(rng)}, 0.5 + std::abs(u(rng))};
        CHECK(diffusion_equivalence_check(z, drive));
        CHECK(diffusion_single(z, drive) >= 0.0);
    }
}
