#include "spiderweb/schedule/patches.hpp"

#include <fmt/format.h>

namespace spiderweb::schedule {

CrossbarAssignment patches_to_crossbars(const std::vector<PatchRect>& patches, const ArrayConfig& cfg) {
    if (auto report = validate_config(cfg); !report.ok()) throw ConfigError(std::move(report));
    const auto available = static_cast<std::size_t>(cfg.crossbars);
    if (patches.size() > available)
        throw PatchError(fmt::format("{} patches requested but only {} crossbars exist", patches.size(), available));

    const std::int64_t edge = plane_edge_cells(cfg);
    CrossbarAssignment out;
    std::set<std::int64_t> used;
    for (std::size_t i = 0; i < patches.size(); ++i) {
        const auto& p = patches[i];
        if (p.row_begin < 0 || p.col_begin < 0 || p.row_end > edge || p.col_end > edge)
            throw PatchError(fmt::format("patch {} lies outside the {}x{} array", i, edge, edge));
        if (p.row_begin >= p.row_end || p.col_begin >= p.col_end) throw PatchError(fmt::format("patch {} is empty", i));
        if (p.crossbar < 0 || p.crossbar >= cfg.crossbars)
            throw PatchError(fmt::format("patch {} uses crossbar {} outside 0..{}", i, p.crossbar, cfg.crossbars - 1));
        if (!used.insert(p.crossbar).second)
            throw PatchError(fmt::format("crossbar {} drives more than one patch", p.crossbar));

        out.activations.push_back({p.crossbar, p.row_end - p.row_begin, p.col_end - p.col_begin});
        for (auto r = p.row_begin; r < p.row_end; ++r)
            for (auto c = p.col_begin; c < p.col_end; ++c) out.disabled.insert({r, c});
    }
    return out;
}

}  // namespace spiderweb::schedule
