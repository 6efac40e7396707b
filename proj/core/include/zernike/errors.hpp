#ifndef ZERNIKE_ERRORS_HPP
#define ZERNIKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zernike {

// Rejected (n, m) pair: |m| > n, negative n, or odd n - |m|.
class InvalidIndex : public std::invalid_argument {
public:
    explicit InvalidIndex(const std::string& what) : std::invalid_argument(what) {}
};

// Kintner coefficient k1 evaluated to zero.
class SingularCoefficient : public std::domain_error {
public:
    explicit SingularCoefficient(const std::string& what) : std::domain_error(what) {}
};

// F-coefficients requested at n == m.
class SingularIndex : public std::domain_error {
public:
    explicit SingularIndex(const std::string& what) : std::domain_error(what) {}
};

// A tree recursion expanded more nodes than the caller allowed.
class RecursionBudgetExceeded : public std::runtime_error {
public:
    explicit RecursionBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the 128-bit range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Flop accounting refused an exponentially sized tree walk.
class CostGuardExceeded : public std::runtime_error {
public:
    explicit CostGuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

class EmptySeries : public std::runtime_error {
public:
    explicit EmptySeries(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zernike

#endif
