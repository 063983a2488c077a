#pragma once

#include <unordered_map>
#include <vector>

#include "mcfs/mesh.hpp"

namespace mcfs {

// Exact closest distance from points to a triangle mesh, accelerated by a
// uniform binning of vertices plus vertex->triangle adjacency.
class MeshDistanceQuery {
  public:
    explicit MeshDistanceQuery(const SurfaceMesh& mesh);

    double distance(const Vec3& x) const;
    const SurfaceMesh& mesh() const { return *mesh_; }

  private:
    const SurfaceMesh* mesh_;
    double cell_ = 1.0;
    Vec3 lo_{0, 0, 0};
    Vec3i dims_{1, 1, 1};
    std::vector<std::int32_t> bin_start_;   // CSR over cells
    std::vector<std::int32_t> bin_items_;   // vertex ids
    std::vector<std::int32_t> vtri_start_;  // CSR vertex -> incident triangles
    std::vector<std::int32_t> vtri_items_;
    double max_tri_diam_ = 0.0;

    std::int64_t cell_index(int cx, int cy, int cz) const {
        return cx + std::int64_t(dims_[0]) * (cy + std::int64_t(dims_[1]) * cz);
    }
    double nearest_vertex(const Vec3& x) const;
};

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Symmetric Hausdorff distance, vertex-to-triangle in both directions.
double hausdorff_distance(const SurfaceMesh& a, const SurfaceMesh& b);

// Point-set variant (vertex-to-vertex).
double hausdorff_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

// Hausdorff distance of spacetime tracks under the parabolic metric
// d((x,t),(y,s)) = max(|x-y|, sqrt(|t-s|)). Computed over all sample pairs.
// Throws EmptyInput or DisjointTimeRanges.
double spacetime_hausdorff(const SpacetimeTrack& a, const SpacetimeTrack& b);

}  // namespace mcfs
