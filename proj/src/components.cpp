#include "mcfs/components.hpp"

#include <algorithm>
#include <numeric>

namespace mcfs {

std::vector<ComponentInfo> component_info(const LevelSetField& field,
                                          std::vector<std::int32_t>* labels_out) {
    const GridSpec& spec = field.spec;
    const std::int64_t n = spec.node_count();

    std::vector<std::int32_t> label(std::size_t(n), -1);
    std::vector<ComponentInfo> comps;
    std::vector<std::int64_t> stack;

    for (std::int64_t seed = 0; seed < n; ++seed) {
        if (field.values[std::size_t(seed)] >= 0.0 || label[std::size_t(seed)] >= 0) continue;
        const std::int32_t id = std::int32_t(comps.size());
        ComponentInfo info;
        info.seed_index = seed;
        const Vec3i sn = spec.unindex(seed);
        info.bbox_lo = info.bbox_hi = spec.position(sn);
        stack.clear();
        stack.push_back(seed);
        label[std::size_t(seed)] = id;
        while (!stack.empty()) {
            const std::int64_t cur = stack.back();
            stack.pop_back();
            ++info.node_count;
            const Vec3i c = spec.unindex(cur);
            const Vec3 p = spec.position(c);
            for (int a = 0; a < 3; ++a) {
                info.bbox_lo[a] = std::min(info.bbox_lo[a], p[a]);
                info.bbox_hi[a] = std::max(info.bbox_hi[a], p[a]);
            }
            const int di[6] = {1, -1, 0, 0, 0, 0};
            const int dj[6] = {0, 0, 1, -1, 0, 0};
            const int dk[6] = {0, 0, 0, 0, 1, -1};
            for (int d = 0; d < 6; ++d) {
                const int ni = c[0] + di[d], nj = c[1] + dj[d], nk = c[2] + dk[d];
                if (!spec.in_bounds(ni, nj, nk)) continue;
                const std::int64_t nidx = spec.index(ni, nj, nk);
                if (field.values[std::size_t(nidx)] >= 0.0 || label[std::size_t(nidx)] >= 0) continue;
                label[std::size_t(nidx)] = id;
                stack.push_back(nidx);
            }
        }
        comps.push_back(info);
    }

    // decreasing node count, ties by smallest node index
    std::vector<std::int32_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        if (comps[a].node_count != comps[b].node_count)
            return comps[a].node_count > comps[b].node_count;
        return comps[a].seed_index < comps[b].seed_index;
    });
    std::vector<std::int32_t> rank(comps.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[std::size_t(order[r])] = std::int32_t(r);

    std::vector<ComponentInfo> sorted;
    sorted.reserve(comps.size());
    for (auto o : order) sorted.push_back(comps[o]);

    if (labels_out) {
        labels_out->assign(label.size(), -1);
        for (std::size_t i = 0; i < label.size(); ++i)
            if (label[i] >= 0) (*labels_out)[i] = rank[std::size_t(label[i])];
    }
    return sorted;
}

std::vector<RegionMask> connected_components(const LevelSetField& field) {
    std::vector<std::int32_t> labels;
    const auto info = component_info(field, &labels);
    std::vector<RegionMask> masks(info.size(), RegionMask(field.spec));
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] >= 0) masks[std::size_t(labels[i])].membership[i] = 1;
    return masks;
}

}  // namespace mcfs
