#include "spiderweb/qgates/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include <fmt/format.h>

namespace spiderweb::qgates::kernels {
namespace {

// -1 means no override.
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(SPIDERWEB_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return has;
#else
    return false;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "?";
}

bool available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active() {
    const int forced = g_override.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Isa>(forced);
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

void set_override(std::optional<Isa> isa) {
    if (isa && !available(*isa))
        throw std::invalid_argument(fmt::format("kernel variant '{}' is not available here", to_string(*isa)));
    g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void matmul(Isa isa, const Complex* a, const Complex* b, Complex* c, std::size_t n) {
    if (!available(isa))
        throw std::invalid_argument(fmt::format("kernel variant '{}' is not available here", to_string(isa)));
#if defined(SPIDERWEB_HAVE_AVX2_KERNELS)
    if (isa == Isa::avx2) {
        detail::matmul_avx2(a, b, c, n);
        return;
    }
#endif
    detail::matmul_scalar(a, b, c, n);
}

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) { matmul(active(), a, b, c, n); }

}  // namespace spiderweb::qgates::kernels
