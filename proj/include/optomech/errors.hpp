#ifndef OPTOMECH_ERRORS_HPP
#define OPTOMECH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace optomech {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 1/x with |x.val| = 0; signals a singular matrix element or a t = 0 scatterer.
class DivisionByZeroVal : public Error {
public:
    using Error::Error;
};

// Multiple-reflection series with round-trip gain |r zeta/(1-i zeta)| >= 1.
class NonConvergent : public Error {
public:
    using Error::Error;
};

// Resonance denominator 1 - i zeta - r i zeta e^{-2i k0 x} vanished.
class SingularDenominator : public Error {
public:
    using Error::Error;
};

// Operation requested outside the regime it is derived for
// (e.g. composite diffusion with r != -1 or complex zeta).
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

// Friction coefficient is non-positive over the whole scan window.
class NoCoolingPoint : public Error {
public:
    using Error::Error;
};

} // namespace optomech

#endif
