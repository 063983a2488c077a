#include "mcfs/mesh.hpp"

#include <map>
#include <unordered_map>

namespace mcfs {

namespace {
inline std::uint64_t edge_id(std::int32_t a, std::int32_t b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}
}  // namespace

long SurfaceMesh::euler_characteristic() const {
    std::unordered_map<std::uint64_t, int> edges;
    edges.reserve(triangles.size() * 2);
    for (const auto& t : triangles) {
        edges[edge_id(t[0], t[1])]++;
        edges[edge_id(t[1], t[2])]++;
        edges[edge_id(t[2], t[0])]++;
    }
    return long(vertices.size()) - long(edges.size()) + long(triangles.size());
}

bool SurfaceMesh::is_watertight() const {
    std::unordered_map<std::uint64_t, int> edges;
    edges.reserve(triangles.size() * 2);
    for (const auto& t : triangles) {
        edges[edge_id(t[0], t[1])]++;
        edges[edge_id(t[1], t[2])]++;
        edges[edge_id(t[2], t[0])]++;
    }
    for (const auto& [k, uses] : edges)
        if (uses != 2) return false;
    return true;
}

}  // namespace mcfs
