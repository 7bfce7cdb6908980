#pragma once

// CODATA 2018 exact / recommended values, SI units.
namespace spiderweb::constants {

inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double boltzmann = 1.380649e-23;             // J/K
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double speed_of_light = 299792458.0;         // m/s
inline constexpr double pi = 3.14159265358979323846;

}  // namespace spiderweb::constants
