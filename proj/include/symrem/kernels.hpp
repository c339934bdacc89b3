#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level kernels behind the dynamic bitsets used by the homomorphism
// search and the hitting-set solvers. The scalar versions are the reference
// semantics; the AVX2 versions must be bit-for-bit equivalent and are picked
// at runtime when the CPU supports them (override with SYMREM_KERNELS=scalar).

namespace symrem::kernels {

struct Ops {
    // dst = a & b, returns true if any word of dst is nonzero
    bool (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t nwords);
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t nwords);
    bool (*and_any)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* a, std::size_t nwords);
    const char* name;
};

namespace scalar {
extern const Ops ops;
}

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
extern const Ops ops;
}
#endif

// Currently selected implementation.
const Ops& active();

// Force a specific implementation ("scalar", "avx2"); returns false if the
// name is unknown or unsupported on this CPU.
bool select(std::string_view name);

std::string_view active_name();

// True if the AVX2 path can run on this machine.
bool avx2_supported();

} // namespace symrem::kernels
