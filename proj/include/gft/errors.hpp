#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gft {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's stated domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// f or f' vanishes at the evaluation point.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> where)
        : Error(describe(what, where)), where_(where) {}

    std::complex<double> where() const noexcept { return where_; }

private:
    static std::string describe(const std::string& what, std::complex<double> z) {
        std::ostringstream os;
        os.precision(17);
        os << what << " at z = (" << z.real() << ", " << z.imag() << ")";
        return os.str();
    }

    std::complex<double> where_;
};

/// A quadrature or iterative refinement missed its tolerance.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved)
        : Error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// No sign change / root in the searched interval.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace gft
