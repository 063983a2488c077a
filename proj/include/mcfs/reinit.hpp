#pragma once

#include "mcfs/field.hpp"

namespace mcfs {

// Rebuilds signed distance on the narrow band by fast marching from the zero
// crossing; values beyond the band are clamped to +-band_width and sdf_flag
// is set. The zero set moves by at most half a cell. A field that is already
// unit-gradient on the band to tight tolerance is returned unchanged, which
// makes exact signed distance inputs fixed points. Throws EmptyZeroSet when
// the field has no sign change.
LevelSetField reinitialize(const LevelSetField& field, double band_width);

// In-place variant used by the solvers.
void reinitialize_inplace(LevelSetField& field, double band_width);

// Max |(|grad w| - 1)| over band nodes; diagnostic for the signed-distance
// invariant. Uses Godunov upwinding so medial-axis ridges of a genuine
// distance field (tube cores, corner bisectors) do not register as failures
// the way central differences would.
double max_unit_gradient_deviation(const LevelSetField& field, double band_fraction = 0.5);

// Central-difference variant restricted to nodes within `width` of the zero
// set; meaningful only away from distance-field shocks.
double max_unit_gradient_deviation_central(const LevelSetField& field, double width);

}  // namespace mcfs
