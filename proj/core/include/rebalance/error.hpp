#pragma once

#include <stdexcept>
#include <string>

namespace rebalance {

/// Error codes for every failure mode surfaced by the library. The CLI maps
/// code categories to process exit codes, so additions must pick a category
/// in `error_category`.
enum class Errc {
    // data / contract errors
    EmptyClass,
    AlreadySatisfied,
    KTooLarge,
    CategoricalUnsupported,
    MinorityTooSmall,
    SchemaMismatch,
    ParseError,
    LengthMismatch,
    NoPositives,
    BaselineZero,
    SubsetTooSmall,
    InvalidRatio,
    InvalidArgument,
    IoError,
    UnknownMethod,
    // degenerate-method signals (caller may opt into a fallback)
    NoBoundary,
    NoDanger,
    NoEligibleCluster,
    NoSupportVectors,
    // fitting
    DegenerateFit,
    AllFitsFailed,
    Internal,
};

enum class ErrorCategory {
    BadArgument,
    DataError,
    DegenerateMethod,
    Internal,
};

ErrorCategory error_category(Errc code);

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }
    ErrorCategory category() const { return error_category(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace rebalance
