#include "spiderweb/units.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <utility>

#include <fmt/format.h>

namespace spiderweb::units {
namespace {

struct Symbol {
    std::string_view name;
    Dimension dim;
    double scale;
};

constexpr Symbol kSymbols[] = {
    {"m", length, 1.0},        {"s", time, 1.0},          {"V", voltage, 1.0},
    {"F", capacitance, 1.0},   {"K", temperature, 1.0},   {"J", energy, 1.0},
    {"Ohm", resistance, 1.0},  {"Ω", resistance, 1.0}, {"Hz", frequency, 1.0},
    {"W", {{0, -1, 0, 0, 0, 1, 0}}, 1.0}, {"sq", dimensionless, 1.0},
};

constexpr std::pair<std::string_view, double> kPrefixes[] = {
    {"f", 1e-15}, {"p", 1e-12}, {"n", 1e-9}, {"u", 1e-6}, {"µ", 1e-6}, {"m", 1e-3},
    {"c", 1e-2},  {"k", 1e3},   {"M", 1e6},  {"G", 1e9},  {"T", 1e12},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::optional<Symbol> lookup(std::string_view name) {
    for (const auto& sym : kSymbols)
        if (sym.name == name) return sym;
    return std::nullopt;
}

Dimension scaled(const Dimension& d, int power) {
    Dimension out;
    for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] = d.exponents[i] * power;
    return out;
}

Dimension combine(const Dimension& a, const Dimension& b) {
    Dimension out;
    for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] = a.exponents[i] + b.exponents[i];
    return out;
}

// One factor such as "um^2" or "kHz".
std::pair<Dimension, double> parse_factor(std::string_view factor, std::string_view whole) {
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
        const auto exp_text = factor.substr(caret + 1);
        auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), power);
        if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size())
            throw UnitError(fmt::format("bad exponent in unit '{}'", whole));
        factor = factor.substr(0, caret);
    }
    std::optional<Symbol> sym = lookup(factor);
    double prefix = 1.0;
    if (!sym) {
        for (const auto& [p, value] : kPrefixes) {
            if (factor.size() > p.size() && factor.substr(0, p.size()) == p) {
                if (auto base = lookup(factor.substr(p.size()))) {
                    sym = base;
                    prefix = value;
                    break;
                }
            }
        }
    }
    if (!sym) throw UnitError(fmt::format("unknown unit '{}' in '{}'", factor, whole));
    return {scaled(sym->dim, power), std::pow(prefix * sym->scale, power)};
}

}  // namespace

std::string to_string(const Dimension& dim) {
    static constexpr std::string_view names[] = {"m", "s", "V", "F", "K", "J", "Ohm"};
    std::string out;
    for (std::size_t i = 0; i < dim.exponents.size(); ++i) {
        const int e = dim.exponents[i];
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += names[i];
        if (e != 1) out += fmt::format("^{}", e);
    }
    return out.empty() ? "1" : out;
}

double parse_quantity(std::string_view text, const Dimension& expected) {
    const std::string_view whole = trim(text);
    if (whole.empty()) throw UnitError("empty value");

    double value = 0.0;
    auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), value);
    if (ec != std::errc{}) throw UnitError(fmt::format("'{}' does not start with a number", whole));
    if (!std::isfinite(value)) throw UnitError(fmt::format("'{}' is not finite", whole));

    const std::string_view unit = trim(whole.substr(static_cast<std::size_t>(ptr - whole.data())));
    if (unit.empty()) return value;

    Dimension dim;
    double scale = 1.0;
    std::size_t start = 0;
    bool denominator = false;
    while (start <= unit.size()) {
        const auto slash = unit.find('/', start);
        const auto factor = trim(unit.substr(start, slash == std::string_view::npos ? unit.npos : slash - start));
        if (factor.empty()) throw UnitError(fmt::format("malformed unit in '{}'", whole));
        auto [fdim, fscale] = parse_factor(factor, whole);
        dim = combine(dim, denominator ? scaled(fdim, -1) : fdim);
        scale = denominator ? scale / fscale : scale * fscale;
        if (slash == std::string_view::npos) break;
        start = slash + 1;
        denominator = true;
    }
    if (dim != expected)
        throw UnitError(fmt::format("'{}' has units of {}, expected {}", whole, to_string(dim), to_string(expected)));
    return value * scale;
}

std::int64_t parse_integer(std::string_view text) {
    const auto t = trim(text);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw UnitError(fmt::format("'{}' is not an integer", t));
    return value;
}

namespace {

std::int64_t to_whole_units(double si, double per_unit, std::string_view text, std::string_view unit) {
    const double scaled_value = si / per_unit;
    const double rounded = std::round(scaled_value);
    if (std::abs(scaled_value - rounded) > 1e-6 * std::max(1.0, std::abs(rounded)))
        throw UnitError(fmt::format("'{}' is not a whole number of {}", trim(text), unit));
    return static_cast<std::int64_t>(rounded);
}

}  // namespace

Nanometers parse_length_nm(std::string_view text) {
    return {to_whole_units(parse_quantity(text, length), 1e-9, text, "nanometers")};
}

schedule::Picoseconds parse_duration_ps(std::string_view text) {
    return schedule::Picoseconds{to_whole_units(parse_quantity(text, time), 1e-12, text, "picoseconds")};
}

}  // namespace spiderweb::units
