#pragma once

#include <stdexcept>
#include <string>

namespace tvo {

// Invalid user input: malformed files, violated preconditions, bad configs.
// The CLI maps this family to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during a computation: non-PD matrices, non-finite
// values, singular systems. The CLI maps this family to exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// ||alpha . nu|| fell below the degeneracy floor; message carries
// path/step context when raised inside a simulation.
class DegenerateAllocationError : public NumericalError {
public:
    explicit DegenerateAllocationError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace tvo
