#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "spiderweb/qgates/unitary.hpp"

namespace spiderweb::qgates::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Whether this build and this CPU can run `isa`.
bool available(Isa isa);

/// The variant `matmul` dispatches to: the override if set, else the best available.
Isa active();

/// Pins dispatch to one variant (tests, benchmarks); nullopt restores auto-detection.
/// Throws std::invalid_argument for an unavailable variant.
void set_override(std::optional<Isa> isa);

/// c = a * b for n x n row-major complex matrices. `c` must not alias `a` or `b`.
void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void matmul(Isa isa, const Complex* a, const Complex* b, Complex* c, std::size_t n);

namespace detail {
void matmul_scalar(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void matmul_avx2(const Complex* a, const Complex* b, Complex* c, std::size_t n);
}  // namespace detail

}  // namespace spiderweb::qgates::kernels
