#ifndef OPTOMECH_JET_HPP
#define OPTOMECH_JET_HPP

// Complex numbers carried together with their first-order coefficient in
// eps = v/c. All arithmetic drops eps^2 and higher, so every expression
// built from these stays truncated at the working order:
//
//   (a + eps b)(c + eps d) = ac + eps (ad + bc),
//   (a + eps b)^{-1}       = a^{-1} - eps b a^{-2}.

#include <complex>

#include "optomech/errors.hpp"

namespace optomech {

using Complex = std::complex<double>;

struct Jet1 {
    Complex val{0.0, 0.0}; // order eps^0
    Complex eps{0.0, 0.0}; // coefficient of eps = v/c

    constexpr Jet1() = default;
    constexpr Jet1(Complex v) : val(v) {}
    constexpr Jet1(Complex v, Complex e) : val(v), eps(e) {}
    constexpr Jet1(double v) : val(v, 0.0) {}
};

inline Jet1 operator+(const Jet1& a, const Jet1& b) { return {a.val + b.val, a.eps + b.eps}; }
inline Jet1 operator-(const Jet1& a, const Jet1& b) { return {a.val - b.val, a.eps - b.eps}; }
inline Jet1 operator-(const Jet1& a) { return {-a.val, -a.eps}; }

inline Jet1 operator*(const Jet1& a, const Jet1& b)
{
    return {a.val * b.val, a.val * b.eps + a.eps * b.val};
}

inline Jet1 operator*(const Jet1& a, Complex s) { return {a.val * s, a.eps * s}; }
inline Jet1 operator*(Complex s, const Jet1& a) { return a * s; }
inline Jet1 operator*(const Jet1& a, double s) { return {a.val * s, a.eps * s}; }
inline Jet1 operator*(double s, const Jet1& a) { return a * s; }

inline Jet1 inv(const Jet1& a)
{
    if (std::abs(a.val) == 0.0)
        throw DivisionByZeroVal("jet inverse: value part is zero");
    const Complex iv = 1.0 / a.val;
    return {iv, -a.eps * iv * iv};
}

inline Jet1 operator/(const Jet1& a, const Jet1& b) { return a * inv(b); }
inline Jet1 operator/(const Jet1& a, Complex s) { return {a.val / s, a.eps / s}; }
inline Jet1 operator/(const Jet1& a, double s) { return {a.val / s, a.eps / s}; }

// eps is real (v/c), so conjugation acts componentwise.
inline Jet1 conj(const Jet1& a) { return {std::conj(a.val), std::conj(a.eps)}; }

// |a|^2 as a jet; both components are real by construction.
inline Jet1 norm(const Jet1& a)
{
    const double v = std::norm(a.val);
    const double e = 2.0 * std::real(std::conj(a.val) * a.eps);
    return {Complex(v, 0.0), Complex(e, 0.0)};
}

// Evaluate at a concrete velocity ratio, F(eps) = val + eps * coeff.
inline Complex at_eps(const Jet1& a, double eps) { return a.val + eps * a.eps; }

} // namespace optomech

#endif
