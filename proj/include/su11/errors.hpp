#ifndef SU11_ERRORS_HPP
#define SU11_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace su11 {

// Thrown when an adaptive truncation or quadrature refinement fails to
// reach the requested tolerance before hitting its hard cap.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a truncated-operator result leaks too much probability past
// the certified band of Fock levels.
class truncation_error : public convergence_error {
public:
    explicit truncation_error(const std::string& what) : convergence_error(what) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace su11

#endif
