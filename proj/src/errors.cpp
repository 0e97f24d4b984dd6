#include "lya/errors.hpp"

namespace lya {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::PolynomialEntries: return "PolynomialEntries";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::NotInSubcomplex: return "NotInSubcomplex";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::InvalidRep: return "InvalidRep";
        case ErrorKind::NotNijenhuis: return "NotNijenhuis";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::ConsequenceViolated: return "ConsequenceViolated";
        case ErrorKind::IncompatibleCrossCheck: return "IncompatibleCrossCheck";
        case ErrorKind::DualRouteDisagreement: return "DualRouteDisagreement";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotSkew: return "NotSkew";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConflictingEntry: return "ConflictingEntry";
        case ErrorKind::BadRational: return "BadRational";
    }
    return "Unknown";
}

}  // namespace lya
