#pragma once

#include <vector>

#include "mcfs/field.hpp"

namespace mcfs {

// 6-connected components of the interior {w < 0}. Masks partition the
// interior; ordered by decreasing node count, ties by smallest node index.
std::vector<RegionMask> connected_components(const LevelSetField& field);

// Per-component summary without materializing full masks.
struct ComponentInfo {
    std::int64_t node_count = 0;
    std::int64_t seed_index = 0;  // smallest linear node index in the component
    Vec3 bbox_lo{0, 0, 0};
    Vec3 bbox_hi{0, 0, 0};
    double diameter() const { return (bbox_hi - bbox_lo).norm(); }
};

std::vector<ComponentInfo> component_info(const LevelSetField& field,
                                          std::vector<std::int32_t>* labels_out = nullptr);

}  // namespace mcfs
