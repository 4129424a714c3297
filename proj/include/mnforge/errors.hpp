#pragma once

#include <stdexcept>
#include <string>

namespace mnforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInversion : Error {
    ZeroInversion() : Error("inversion of zero") {}
    explicit ZeroInversion(const std::string& what) : Error(what) {}
};

struct TruncatedInput : Error {
    explicit TruncatedInput(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct SingularElement : Error {
    explicit SingularElement(const std::string& what) : Error(what) {}
};

struct BadArguments : Error {
    explicit BadArguments(const std::string& what) : Error(what) {}
};

struct NeedsDepth : Error {
    explicit NeedsDepth(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

// Carries the byte offset of the failure and a description of what the
// parser would have accepted there.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;

    ParseError(std::size_t off, std::string exp)
        : Error("parse error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off),
          expected(std::move(exp)) {}
};

}  // namespace mnforge
