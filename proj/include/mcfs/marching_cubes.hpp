#pragma once

#include "mcfs/field.hpp"
#include "mcfs/mesh.hpp"

namespace mcfs {

namespace detail {
extern const int kMcEdgeTable[256];
extern const int kMcTriTable[256][16];
}  // namespace detail

// Marching-cubes extraction of the zero set. Vertices are shared across cube
// edges, so compact zero sets away from the domain boundary come out
// watertight. Per-vertex normals and principal curvatures are sampled from
// the field (see curvature.hpp). Throws EmptyZeroSet when the field has no
// sign change.
SurfaceMesh extract_surface(const LevelSetField& field);

// Extraction without per-vertex curvature annotation (cheaper; used by inner
// loops that only need geometry).
SurfaceMesh extract_surface_geometry(const LevelSetField& field);

}  // namespace mcfs
