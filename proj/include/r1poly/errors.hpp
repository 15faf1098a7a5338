#pragma once

#include <stdexcept>
#include <string>

namespace r1poly {

/// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user-supplied configuration (JSON descriptor, CLI combination, table shape).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// A numeric procedure failed to reach its stated accuracy.
struct NumericalError : Error {
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

struct NotARoot : NumericalError {
    explicit NotARoot(const std::string& msg) : NumericalError(msg) {}
};

struct NoConvergence : NumericalError {
    explicit NoConvergence(const std::string& msg) : NumericalError(msg) {}
};

struct DegreeTooHigh : Error {
    explicit DegreeTooHigh(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
    int index;
    IndexOutOfRange(const std::string& what, int idx)
        : Error(what + " index " + std::to_string(idx) + " out of range"), index(idx) {}
};

struct InadmissibleParameter : Error {
    int index;
    InadmissibleParameter(const std::string& which, int idx)
        : Error(which + " vanishes at index " + std::to_string(idx)), index(idx) {}
};

struct NonConstantGamma : Error {
    explicit NonConstantGamma(const std::string& msg) : Error(msg) {}
};

struct Beta0Inadmissible : Error {
    explicit Beta0Inadmissible(const std::string& msg) : Error(msg) {}
};

struct AlphaVanished : Error {
    int index;
    explicit AlphaVanished(int idx)
        : Error("alpha vanishes at index " + std::to_string(idx)), index(idx) {}
};

struct QVanished : Error {
    int index;
    explicit QVanished(int idx)
        : Error("q constant vanishes at index " + std::to_string(idx)), index(idx) {}
};

struct RVanished : Error {
    int index;
    explicit RVanished(int idx)
        : Error("r constant vanishes at index " + std::to_string(idx)), index(idx) {}
};

struct SingularMatrix : NumericalError {
    explicit SingularMatrix(const std::string& msg) : NumericalError(msg) {}
};

struct PoleAtZero : Error {
    explicit PoleAtZero(const std::string& msg) : Error(msg) {}
};

struct PoleAtOne : Error {
    explicit PoleAtOne(const std::string& msg) : Error(msg) {}
};

struct CoincidentArguments : Error {
    explicit CoincidentArguments(const std::string& msg) : Error(msg) {}
};

struct DegenerateZero : NumericalError {
    explicit DegenerateZero(const std::string& msg) : NumericalError(msg) {}
};

struct ChainViolation : Error {
    int index;
    ChainViolation(const std::string& msg, int idx) : Error(msg), index(idx) {}
};

struct NonTerminating : Error {
    explicit NonTerminating(const std::string& msg) : Error(msg) {}
};

struct PochhammerPole : Error {
    explicit PochhammerPole(const std::string& msg) : Error(msg) {}
};

}  // namespace r1poly
