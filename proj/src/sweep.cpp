#include "spiderweb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

namespace spiderweb {
namespace {

std::pair<double, std::string_view> split_number(std::string_view text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{}) throw std::invalid_argument(fmt::format("'{}' does not start with a number", text));
    return {v, text.substr(static_cast<std::size_t>(ptr - text.data()))};
}

SweepPoint evaluate(const Settings& base, const SweepSpec& spec, const std::string& value) {
    SweepPoint point;
    point.value = value;
    Settings s = base;
    try {
        apply_setting(s, spec.parameter, value);
    } catch (const std::exception& e) {
        point.issues.push_back(e.what());
        return point;
    }
    if (auto report = validate_settings(s); !report.ok()) {
        for (const auto& issue : report.issues) point.issues.push_back(fmt::format("{}: {}", issue.field, issue.message));
        return point;
    }
    point.report = build_report(s);
    point.feasible = true;
    if (const auto* fit = point.report.find("pitch_feasible"); fit && fit->value == 0.0) {
        point.feasible = false;
        point.issues.push_back(
            fmt::format("pitch below minimum {:.3f} um", point.report.value("min_pitch")));
    }
    point.issues.insert(point.issues.end(), point.report.warnings.begin(), point.report.warnings.end());
    return point;
}

std::vector<std::string> column_keys(const std::vector<SweepPoint>& points) {
    std::vector<std::string> keys;
    for (const auto& p : points)
        for (const auto& e : p.report.entries)
            if (std::find(keys.begin(), keys.end(), e.key) == keys.end()) keys.push_back(e.key);
    return keys;
}

std::string csv_field(std::string text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

std::vector<std::string> expand_range(std::string_view range) {
    const auto first = range.find(':');
    const auto second = first == range.npos ? range.npos : range.find(':', first + 1);
    if (second == range.npos) throw std::invalid_argument(fmt::format("expected start:stop:step, got '{}'", range));
    const auto [start, unit_a] = split_number(range.substr(0, first));
    const auto [stop, unit_b] = split_number(range.substr(first + 1, second - first - 1));
    const auto [step, unit_c] = split_number(range.substr(second + 1));
    if (unit_a != unit_b || unit_a != unit_c)
        throw std::invalid_argument(fmt::format("range '{}' mixes units", range));
    if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
    if (stop < start) throw std::invalid_argument(fmt::format("range '{}' runs backwards", range));

    std::vector<std::string> values;
    const auto n = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
    for (std::int64_t i = 0; i <= n; ++i)
        values.push_back(fmt::format("{}{}", start + static_cast<double>(i) * step, unit_a));
    return values;
}

std::vector<SweepPoint> run_sweep(const Settings& base, const SweepSpec& spec, unsigned threads) {
    if (!is_setting_key(spec.parameter)) throw std::invalid_argument(fmt::format("unknown sweep parameter '{}'", spec.parameter));
    std::vector<SweepPoint> points(spec.values.size());
    if (points.empty()) return points;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) points[i] = evaluate(base, spec, spec.values[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    return points;
}

std::string sweep_to_csv(const SweepSpec& spec, const std::vector<SweepPoint>& points) {
    const auto keys = column_keys(points);
    std::string out = csv_field(spec.parameter) + ",feasible,issues";
    for (const auto& k : keys) out += "," + csv_field(k);
    out += "\n";
    for (const auto& p : points) {
        std::string issues;
        for (const auto& i : p.issues) issues += (issues.empty() ? "" : "; ") + i;
        out += fmt::format("{},{},{}", csv_field(p.value), p.feasible ? 1 : 0, csv_field(issues));
        for (const auto& k : keys) {
            const auto* e = p.report.find(k);
            if (!e) out += ",";
            else if (e->integral) out += fmt::format(",{}", static_cast<std::int64_t>(e->value));
            else out += fmt::format(",{:.17g}", e->value);
        }
        out += "\n";
    }
    return out;
}

std::string sweep_to_json(const SweepSpec& spec, const std::vector<SweepPoint>& points) {
    nlohmann::ordered_json root;
    root["parameter"] = spec.parameter;
    root["points"] = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json item;
        item["value"] = p.value;
        item["feasible"] = p.feasible;
        item["issues"] = p.issues;
        nlohmann::ordered_json results = nlohmann::ordered_json::object();
        for (const auto& e : p.report.entries) {
            if (e.integral) results[e.key] = static_cast<std::int64_t>(e.value);
            else results[e.key] = e.value;
        }
        item["results"] = std::move(results);
        root["points"].push_back(std::move(item));
    }
    return root.dump(2) + "\n";
}

}  // namespace spiderweb
