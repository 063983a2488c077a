#pragma once

#include <cmath>
#include <functional>

#include "mcfs/field.hpp"

namespace mcfs::testing {

// Fill a field by sampling fn at nodes, clamped to the band.
inline LevelSetField make_field(const GridSpec& spec, double band_width,
                                const std::function<double(const Vec3&)>& fn,
                                bool clamp_band = true) {
    LevelSetField f(spec, band_width);
    const auto& res = spec.resolution();
    for (int k = 0; k < res[2]; ++k)
        for (int j = 0; j < res[1]; ++j)
            for (int i = 0; i < res[0]; ++i) {
                double v = fn(spec.position(i, j, k));
                if (clamp_band) v = std::clamp(v, -band_width, band_width);
                f.at(i, j, k) = v;
            }
    return f;
}

inline double sphere_sdf(const Vec3& x, const Vec3& c, double r) { return (x - c).norm() - r; }

inline double torus_sdf(const Vec3& x, double major, double minor) {
    const double q = std::sqrt(x[0] * x[0] + x[1] * x[1]) - major;
    return std::sqrt(q * q + x[2] * x[2]) - minor;
}

inline double cylinder_sdf_z(const Vec3& x, double r) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1]) - r;
}

}  // namespace mcfs::testing
