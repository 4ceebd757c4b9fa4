#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fraczeta {

using Complex = std::complex<double>;

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of the operation (non-finite, Re(s) <= 0, bad interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input sits on a pole or removable singularity of the formula being evaluated.
class SingularParameterError : public Error {
public:
    using Error::Error;
};

/// A requested tolerance could not be met; carries the best bound that was achieved.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Bisection could not shrink a bracket any further.
class RefinementError : public Error {
public:
    using Error::Error;
};

}  // namespace fraczeta
