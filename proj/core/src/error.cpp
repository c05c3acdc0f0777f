#include "rebalance/error.hpp"

namespace rebalance {

ErrorCategory error_category(Errc code) {
    switch (code) {
        case Errc::InvalidArgument:
        case Errc::InvalidRatio:
        case Errc::UnknownMethod:
            return ErrorCategory::BadArgument;
        case Errc::EmptyClass:
        case Errc::AlreadySatisfied:
        case Errc::KTooLarge:
        case Errc::CategoricalUnsupported:
        case Errc::MinorityTooSmall:
        case Errc::SchemaMismatch:
        case Errc::ParseError:
        case Errc::LengthMismatch:
        case Errc::NoPositives:
        case Errc::BaselineZero:
        case Errc::SubsetTooSmall:
        case Errc::IoError:
            return ErrorCategory::DataError;
        case Errc::NoBoundary:
        case Errc::NoDanger:
        case Errc::NoEligibleCluster:
        case Errc::NoSupportVectors:
        case Errc::DegenerateFit:
        case Errc::AllFitsFailed:
            return ErrorCategory::DegenerateMethod;
        case Errc::Internal:
            return ErrorCategory::Internal;
    }
    return ErrorCategory::Internal;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::EmptyClass: return "EmptyClass";
        case Errc::AlreadySatisfied: return "AlreadySatisfied";
        case Errc::KTooLarge: return "KTooLarge";
        case Errc::CategoricalUnsupported: return "CategoricalUnsupported";
        case Errc::MinorityTooSmall: return "MinorityTooSmall";
        case Errc::SchemaMismatch: return "SchemaMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::NoPositives: return "NoPositives";
        case Errc::BaselineZero: return "BaselineZero";
        case Errc::SubsetTooSmall: return "SubsetTooSmall";
        case Errc::InvalidRatio: return "InvalidRatio";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::IoError: return "IoError";
        case Errc::UnknownMethod: return "UnknownMethod";
        case Errc::NoBoundary: return "NoBoundary";
        case Errc::NoDanger: return "NoDanger";
        case Errc::NoEligibleCluster: return "NoEligibleCluster";
        case Errc::NoSupportVectors: return "NoSupportVectors";
        case Errc::DegenerateFit: return "DegenerateFit";
        case Errc::AllFitsFailed: return "AllFitsFailed";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace rebalance
