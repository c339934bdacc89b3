#include "symrem/kernels.hpp"

#include <bit>

namespace symrem::kernels::scalar {

namespace {

bool and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t nwords) {
    std::uint64_t any = 0;
    for (std::size_t i = 0; i < nwords; ++i) {
        dst[i] = a[i] & b[i];
        any |= dst[i];
    }
    return any != 0;
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool and_any(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void or_into(std::uint64_t* dst, const std::uint64_t* a, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] |= a[i];
}

} // namespace

const Ops ops = {and_into, popcount, and_popcount, and_any, equal, or_into, "scalar"};

} // namespace symrem::kernels::scalar
