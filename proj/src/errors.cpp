#include "symrem/errors.hpp"

namespace symrem {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::RepeatedCoordinate: return "RepeatedCoordinate";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::BadEdgeType: return "BadEdgeType";
        case ErrorKind::PartMismatch: return "PartMismatch";
        case ErrorKind::UniverseMismatch: return "UniverseMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotAutomorphism: return "NotAutomorphism";
        case ErrorKind::IdentityInConnectionSet: return "IdentityInConnectionSet";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::DiagonalPair: return "DiagonalPair";
        case ErrorKind::KernelMismatch: return "KernelMismatch";
        case ErrorKind::NotAbelian: return "NotAbelian";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NoIdentity: return "NoIdentity";
        case ErrorKind::NoInverse: return "NoInverse";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::BadModulus: return "BadModulus";
        case ErrorKind::EmptyTemplate: return "EmptyTemplate";
        case ErrorKind::EmptyTarget: return "EmptyTarget";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::IdentityFailed: return "IdentityFailed";
    }
    return "UnknownError";
}

} // namespace symrem
