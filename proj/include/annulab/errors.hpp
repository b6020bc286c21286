#pragma once

#include <stdexcept>
#include <string>

namespace annulab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// tr^2 too close to 4: no well-defined complex length.
struct ParabolicOrIdentity : Error {
    explicit ParabolicOrIdentity(const std::string& what) : Error(what) {}
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};

// Adaptive ODE step control could not reach the requested tolerance.
struct StepFailure : Error {
    explicit StepFailure(const std::string& what) : Error(what) {}
};

// Developing map too close to 0 or infinity for a stable evaluation.
struct NearPole : Error {
    explicit NearPole(const std::string& what) : Error(what) {}
};

// Random draw could not be rescaled to the requested sup norm.
struct SamplerFailure : Error {
    explicit SamplerFailure(const std::string& what) : Error(what) {}
};

// Surface patch failed its normalization checks.
struct DegeneratePatch : Error {
    explicit DegeneratePatch(const std::string& what) : Error(what) {}
};

// Coinciding or otherwise unusable geometric input data.
struct DegenerateData : Error {
    explicit DegenerateData(const std::string& what) : Error(what) {}
};

}  // namespace annulab
