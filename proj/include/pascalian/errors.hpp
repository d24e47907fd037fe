#pragma once

#include <stdexcept>
#include <string>

namespace pascalian {

// Precondition violated: index out of range, wrong parity, non-prime modulus...
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Requested work exceeds a configured cap (enumeration size, solver degree).
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Root solver failed to reach the residual tolerance.
class NumericError : public std::runtime_error {
   public:
    NumericError(const std::string& what, double worst_residual)
        : std::runtime_error(what), worst_residual_(worst_residual) {}

    double worst_residual() const noexcept { return worst_residual_; }

   private:
    double worst_residual_;
};

}  // namespace pascalian
