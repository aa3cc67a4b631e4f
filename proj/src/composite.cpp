#include "optomech/composite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "optomech/errors.hpp"

namespace optomech {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = 3.141592653589793238462643383279502884;

using LComplex = std::complex<long double>;

struct LJet {
    LComplex val{0.0L, 0.0L};
    LComplex eps{0.0L, 0.0L};
};

LJet lmul(const LJet& a, const LJet& b)
{
    return {a.val * b.val, a.val * b.eps + a.eps * b.val};
}

LJet ldiv(const LJet& a, const LJet& b)
{
    const LComplex iv = LComplex(1.0L) / b.val;
    const LJet binv{iv, -b.eps * iv * iv};
    return lmul(a, binv);
}

LJet to_ljet(const Jet1& j)
{
    return {LComplex(j.val), LComplex(j.eps)};
}

double fold_phase(double k0x)
{
    double f = std::fmod(k0x, kPi);
    if (f <= 0.0)
        f += kPi;
    return f;
}

} // namespace

double canonical_k0x(double k0x)
{
    return fold_phase(k0x);
}

SeriesResult amplitude_series(const SystemSpec& spec, int max_terms, double tol)
{
    if (max_terms < 1)
        throw Error("amplitude_series: max_terms must be >= 1");
    const double k0x = fold_phase(spec.k0x);
    const double k0d = spec.k0L - k0x; // retardation k0 (L - x)
    const Complex z = spec.zeta;
    const Complex r = spec.r_fixed;

    const double ring = std::abs(r) * std::abs(z / (1.0 - kI * z));
    if (!(ring < 1.0))
        throw NonConvergent("amplitude_series: round-trip factor |r zeta/(1-i zeta)| >= 1");

    // Entries of the right-to-left scatterer matrix, the inverse of the
    // moving transfer matrix: M11 = 1+iz, M12 = iz(1-2eps) [tag +2],
    // M21 = -iz(1+2eps) [tag -2], M22 = 1-iz.
    const TransferMatrix ma = moving_matrix(Polarizability::constant(z), spec.k0).inverse();
    const LJet M11 = to_ljet(ma.m11);
    const LJet M12 = to_ljet(ma.m12);
    const LJet M21 = to_ljet(ma.m21);
    const LJet M22 = to_ljet(ma.m22);

    // Term n of the sum, prefactor (M12/M22 - M11/M21)(-r M21/M22)^n,
    // regrouped so zeta = 0 (M21 = 0) stays regular:
    //   (-r)^n g^{n-1} h,  g = M21/M22,  h = M12 M21/M22^2 - M11/M22.
    const LJet g = ldiv(M21, M22);
    LJet h = ldiv(lmul(M12, M21), lmul(M22, M22));
    {
        const LJet h2 = ldiv(M11, M22);
        h.val -= h2.val;
        h.eps -= h2.eps;
    }

    const LComplex phase = std::exp(LComplex(0.0L, -2.0L) * (long double)k0x);
    const LComplex step_v = -LComplex(r) * phase;

    LJet total = ldiv(M12, M22);
    LJet base{h.val * step_v, h.eps * step_v}; // n = 1 term before retardation
    const LJet step{g.val * step_v, g.eps * step_v};

    // |term_m| <= pref |q|^m (1 + 2m + 2 m^2 k0 d), pref = |h|/|g|
    const double pref = std::abs(g.val) > 0.0 ? double(std::abs(h.val) / std::abs(g.val))
                                              : double(std::abs(h.val));
    auto tail_bound = [&](int n, double ring_n1) {
        // sum_{m > n}: geometric tails of 1, m, m^2 against |q|^m
        const double q1 = 1.0 - ring;
        return pref * ring_n1
               * (1.0 / q1 + 2.0 * (n + 1.0) / (q1 * q1)
                  + 4.0 * k0d * (n + 1.0) * (n + 1.0) / (q1 * q1 * q1));
    };

    int n = 1;
    double ring_n1 = ring * ring; // |q|^{n+1}
    double bound = 0.0;
    for (;;) {
        // retardation correction [1 + 2 i n (n-1) k0 d eps]
        const LJet corr{LComplex(1.0L), LComplex(0.0L, 2.0L * n * (n - 1.0L) * k0d)};
        const LJet term = lmul(base, corr);
        total.val += term.val;
        total.eps += term.eps;

        bound = std::abs(g.val) > 0.0 ? tail_bound(n, ring_n1) : 0.0;
        if (n >= max_terms || bound < tol)
            break;
        base = lmul(base, step);
        ring_n1 *= ring;
        ++n;
    }

    SeriesResult out;
    out.amplitude = Jet1(Complex(total.val), Complex(total.eps));
    out.truncation_bound = bound;
    out.terms_used = n;
    return out;
}

Jet1 amplitude_closed(const SystemSpec& spec)
{
    const double k0x = fold_phase(spec.k0x);
    const double k0d = spec.k0L - k0x;
    const Complex z = spec.zeta;
    const Complex r = spec.r_fixed;

    const Complex one_miz = 1.0 - kI * z;
    const Complex e2 = std::exp(-2.0 * kI * k0x);
    const Complex den = one_miz - r * kI * z * e2;
    if (std::abs(den) < 1e-300 || std::abs(one_miz) < 1e-300)
        throw SingularDenominator("amplitude_closed: resonance denominator vanished");

    const Complex val = (kI * z + r * e2 / den) / one_miz;
    const Complex r2e4 = r * r * e2 * e2;
    const Complex eps = (-2.0 * kI * z / one_miz)
                        * (1.0 - r2e4 / (den * den)
                           - 2.0 * kI * k0d * r2e4 * one_miz / (den * den * den));
    return {val, eps};
}

CompositeAmplitudes intensities(const SystemSpec& spec, const Jet1& reflected)
{
    const Complex z = spec.zeta;
    CompositeAmplitudes out;
    out.reflected = reflected;
    // C' = (1 - i z) A - i z (1 - 2 eps); D' = i z (1 + 2 eps) A + (1 + i z)
    out.c_prime = Jet1(1.0 - kI * z) * reflected - Jet1(kI * z, -2.0 * kI * z);
    out.d_prime = Jet1(kI * z, 2.0 * kI * z) * reflected + Jet1(1.0 + kI * z);
    out.int_a = norm(reflected);
    out.int_c = norm(out.c_prime);
    out.int_d = norm(out.d_prime);
    return out;
}

Jet1 force_composite_jet(const SystemSpec& spec)
{
    const CompositeAmplitudes amps = intensities(spec, amplitude_closed(spec));
    const Jet1 balance = amps.int_a + Jet1(1.0) - amps.int_c - amps.int_d;
    return (spec.k0 * spec.input_flux) * balance;
}

MechanicalResponse force_composite(const SystemSpec& spec)
{
    const Jet1 f = force_composite_jet(spec);
    MechanicalResponse out;
    out.force0 = std::real(f.val);
    out.beta = -std::real(f.eps);
    return out;
}

double diffusion_composite(const SystemSpec& spec)
{
    if (std::abs(spec.r_fixed - Complex(-1.0, 0.0)) > 1e-12)
        throw UnsupportedRegime("diffusion_composite: requires a perfect fixed mirror (r = -1)");
    if (std::abs(std::imag(spec.zeta)) > 1e-12)
        throw UnsupportedRegime("diffusion_composite: requires a lossless scatterer (Im zeta = 0)");
    const double k0x = fold_phase(spec.k0x);
    const double z = std::real(spec.zeta);
    const Complex den = 1.0 - kI * z + kI * z * std::exp(-2.0 * kI * k0x);
    const double w = 1.0 - 1.0 / std::norm(den);
    const double k2 = spec.k0 * spec.k0;
    return 4.0 * k2 * spec.input_flux * w * w;
}

namespace {

double beta_at(const SystemSpec& spec, double k0x)
{
    SystemSpec s = spec;
    s.k0x = k0x;
    return -std::real(force_composite_jet(s).eps);
}

} // namespace

FrictionMaximum temperature_at_max_friction(const SystemSpec& spec)
{
    constexpr int kGrid = 2048;
    double best_x = 0.0;
    double best_b = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        const double x = (i + 0.5) * kPi / kGrid;
        const double b = beta_at(spec, x);
        if (b > best_b) { // strict: ties keep the smaller k0x
            best_b = b;
            best_x = x;
        }
    }
    if (!(best_b > 0.0))
        throw NoCoolingPoint("temperature_at_max_friction: beta <= 0 over the whole window");

    // golden-section refinement on the bracketing grid cells
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::max(best_x - kPi / kGrid, 1e-12);
    double b = std::min(best_x + kPi / kGrid, kPi);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = beta_at(spec, c);
    double fd = beta_at(spec, d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = beta_at(spec, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = beta_at(spec, d);
        }
    }
    FrictionMaximum out;
    out.k0x_max = 0.5 * (a + b);
    out.beta = beta_at(spec, out.k0x_max);
    SystemSpec at = spec;
    at.k0x = out.k0x_max;
    out.diffusion = diffusion_composite(at);
    out.kBT = out.diffusion / (2.0 * out.beta);
    return out;
}

std::vector<FrictionSample> scan_friction(const SystemSpec& spec, std::span<const double> k0x_grid)
{
    std::vector<FrictionSample> out;
    out.reserve(k0x_grid.size());
    for (const double x : k0x_grid)
        out.push_back({x, beta_at(spec, x)});
    return out;
}

std::vector<MaxFrictionSample> scan_max_friction_vs_zeta(std::span<const double> zeta_grid,
                                                         const SystemSpec& spec)
{
    std::vector<MaxFrictionSample> out;
    out.reserve(zeta_grid.size());
    for (const double z : zeta_grid) {
        SystemSpec s = spec;
        s.zeta = Complex(z, 0.0);
        const FrictionMaximum m = temperature_at_max_friction(s);
        out.push_back({z, m.k0x_max, m.beta});
    }
    return out;
}

double loglog_slope(double x0, double y0, double x1, double y1)
{
    return (std::log(y1) - std::log(y0)) / (std::log(x1) - std::log(x0));
}

Complex detail::amplitude_series_at(const SystemSpec& spec, double eps, double tol, int max_terms)
{
    const double k0x = fold_phase(spec.k0x);
    const double k0d = spec.k0L - k0x;
    const Complex z = spec.zeta;
    const Complex r = spec.r_fixed;

    const Complex M11 = 1.0 + kI * z;
    const Complex M12 = kI * z * (1.0 - 2.0 * eps);
    const Complex M21 = -kI * z * (1.0 + 2.0 * eps);
    const Complex M22 = 1.0 - kI * z;

    const double ring = std::abs(r * M21 / M22);
    if (!(ring < 1.0))
        throw NonConvergent("amplitude_series_at: round-trip factor >= 1");

    const Complex g = M21 / M22;
    const Complex h = M12 * M21 / (M22 * M22) - M11 / M22;
    const Complex phase = std::exp(-2.0 * kI * k0x);
    const Complex step = -r * g * phase;

    Complex total = M12 / M22;
    Complex base = h * (-r) * phase;
    int n = 1;
    double ring_n = ring;
    for (;;) {
        total += base * std::exp(Complex(0.0, 2.0 * n * (n - 1.0) * k0d * eps));
        if (n >= max_terms || ring_n / (1.0 - ring) < tol)
            break;
        base *= step;
        ring_n *= ring;
        ++n;
    }
    return total;
}

double detail::force_composite_at(const SystemSpec& spec, double eps)
{
    const Complex z = spec.zeta;
    const Complex a = amplitude_series_at(spec, eps);
    const Complex cp = (1.0 - kI * z) * a - kI * z * (1.0 - 2.0 * eps);
    const Complex dp = kI * z * (1.0 + 2.0 * eps) * a + (1.0 + kI * z);
    return spec.k0 * spec.input_flux * (std::norm(a) + 1.0 - std::norm(cp) - std::norm(dp));
}

} // namespace optomech
