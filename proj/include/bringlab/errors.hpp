#pragma once

#include <stdexcept>
#include <string>

namespace bringlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDivision : Error { using Error::Error; };
struct NonInvertible : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct RankDefect : Error { using Error::Error; };
struct DivisionByZeroSeries : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct ExtensionRequired : Error { using Error::Error; };
struct UnknownCertificate : Error { using Error::Error; };
struct NetworkUnavailable : Error { using Error::Error; };

// Carries the kernel dimension so callers can report it.
struct NonUnique : Error {
    int kernel_dim;
    NonUnique(const std::string& msg, int dim) : Error(msg), kernel_dim(dim) {}
};

struct ParseError : Error {
    std::size_t position;
    std::string expected;
    ParseError(const std::string& msg, std::size_t pos, std::string exp)
        : Error(msg + " at position " + std::to_string(pos) + " (expected " + exp + ")"),
          position(pos), expected(std::move(exp)) {}
};

}  // namespace bringlab
