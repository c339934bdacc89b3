#include "symrem/kernels.hpp"

#include <cstdlib>

namespace symrem::kernels {

namespace {

const Ops* pick_default() {
    if (const char* env = std::getenv("SYMREM_KERNELS")) {
        std::string_view want(env);
        if (want == "scalar") return &scalar::ops;
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2" && avx2_supported()) return &avx2::ops;
#endif
        // unknown or unsupported request: fall through to auto-detect
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return &avx2::ops;
#endif
    return &scalar::ops;
}

const Ops*& current() {
    static const Ops* ops = pick_default();
    return ops;
}

} // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Ops& active() { return *current(); }

bool select(std::string_view name) {
    if (name == "scalar") {
        current() = &scalar::ops;
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && avx2_supported()) {
        current() = &avx2::ops;
        return true;
    }
#endif
    return false;
}

std::string_view active_name() { return current()->name; }

} // namespace symrem::kernels
