#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symrem {

// Every failure the library reports, by kind. The CLI maps kinds to exit
// codes: BudgetExceeded -> 3, IdentityFailed -> 1, everything else -> 2.
enum class ErrorKind {
    RepeatedCoordinate,
    UnknownVertex,
    BadEdgeType,
    PartMismatch,
    UniverseMismatch,
    BudgetExceeded,
    CapExceeded,
    NotAutomorphism,
    IdentityInConnectionSet,
    UnknownElement,
    DiagonalPair,
    KernelMismatch,
    NotAbelian,
    NotClosed,
    NoIdentity,
    NoInverse,
    NotAssociative,
    BadModulus,
    EmptyTemplate,
    EmptyTarget,
    BadInput,
    IdentityFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Search node cap hit; carries how far the search got.
class BudgetError : public Error {
public:
    explicit BudgetError(std::uint64_t nodes_visited)
        : Error(ErrorKind::BudgetExceeded,
                "search stopped after " + std::to_string(nodes_visited) + " nodes"),
          nodes_visited_(nodes_visited) {}

    std::uint64_t nodes_visited() const { return nodes_visited_; }

private:
    std::uint64_t nodes_visited_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace symrem
