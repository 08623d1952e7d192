#ifndef AREAL_ERRORS_HPP
#define AREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace areal {

// Input violates a documented precondition (grammar, ranges, non-prime p, ...).
// The CLI maps this family to exit code 2.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Value lies outside the mathematical domain of the operation (e.g. alpha = 0
// where the classification theorems require a nonzero number).
struct domain_error : invalid_input {
    using invalid_input::invalid_input;
};

// Stated hypothesis of a closed form is not met (e.g. gamma(t) != 1).
struct precondition_error : invalid_input {
    using invalid_input::invalid_input;
};

// The requested quantity has no finite value for this measure variant.
struct unsupported_measure : invalid_input {
    using invalid_input::invalid_input;
};

// Mutual energy of atomic measures diverges when supports share an atom.
struct diagonal_divergence : invalid_input {
    using invalid_input::invalid_input;
};

// Optimization interval does not bracket a minimum.
struct no_minimum : invalid_input {
    using invalid_input::invalid_input;
};

// Iteration failed to reach the requested tolerance.  Carries the worst
// residual for diagnostics; the CLI maps this to exit code 3.
struct numeric_error : std::runtime_error {
    double residual;
    numeric_error(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

}  // namespace areal

#endif
