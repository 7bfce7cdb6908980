#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spiderweb/model.hpp"
#include "spiderweb/schedule/timing.hpp"

namespace spiderweb::units {

/// Exponents over meter, second, volt, farad, kelvin, joule, ohm.
struct Dimension {
    std::array<int, 7> exponents{};
    bool operator==(const Dimension&) const = default;
};

inline constexpr Dimension dimensionless{};
inline constexpr Dimension length{{1, 0, 0, 0, 0, 0, 0}};
inline constexpr Dimension area{{2, 0, 0, 0, 0, 0, 0}};
inline constexpr Dimension time{{0, 1, 0, 0, 0, 0, 0}};
inline constexpr Dimension frequency{{0, -1, 0, 0, 0, 0, 0}};
inline constexpr Dimension voltage{{0, 0, 1, 0, 0, 0, 0}};
inline constexpr Dimension voltage_rate{{0, -1, 1, 0, 0, 0, 0}};
inline constexpr Dimension capacitance{{0, 0, 0, 1, 0, 0, 0}};
inline constexpr Dimension capacitance_per_length{{-1, 0, 0, 1, 0, 0, 0}};
inline constexpr Dimension capacitance_per_area{{-2, 0, 0, 1, 0, 0, 0}};
inline constexpr Dimension temperature{{0, 0, 0, 0, 1, 0, 0}};
inline constexpr Dimension energy{{0, 0, 0, 0, 0, 1, 0}};
inline constexpr Dimension resistance{{0, 0, 0, 0, 0, 0, 1}};

std::string to_string(const Dimension& dim);

class UnitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "13um", "0.1 V/s", "1pF/um^2", "100kHz" or a bare number into SI
/// base units. A bare number is taken as already in SI units.
double parse_quantity(std::string_view text, const Dimension& expected);

std::int64_t parse_integer(std::string_view text);

/// Lengths must land on a whole nanometer.
Nanometers parse_length_nm(std::string_view text);

/// Durations must land on a whole picosecond.
schedule::Picoseconds parse_duration_ps(std::string_view text);

}  // namespace spiderweb::units
