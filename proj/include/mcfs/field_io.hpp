#pragma once

#include <string>

#include "mcfs/field.hpp"
#include "mcfs/mesh.hpp"

namespace mcfs {

// .lsf field dump: textual header followed by the raw node array as
// little-endian 32-bit floats in x-fastest order.
//
//   lsf 1
//   origin <ox> <oy> <oz>
//   resolution <nx> <ny> <nz>
//   spacing <h>
//   band_width <b>
//   time <t>
//   sdf <0|1>
//   data
//   <nx*ny*nz float32>
void write_lsf(const LevelSetField& field, const std::string& path);
LevelSetField read_lsf(const std::string& path);

// Wavefront OBJ (v/vn/f) plus a sidecar CSV (<path>.curv.csv) with per-vertex
// H, lambda1, lambda2 when the mesh carries curvature data.
void write_obj(const SurfaceMesh& mesh, const std::string& path);

}  // namespace mcfs
