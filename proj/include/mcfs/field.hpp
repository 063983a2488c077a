#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mcfs/grid.hpp"

namespace mcfs {

// Node-sampled implicit function. The zero set is the surface; values are
// negative inside the enclosed domain K. After reinitialization the values are
// a signed distance on the narrow band (|grad| within 10% of 1) and are
// clamped to +-band_width outside it.
struct LevelSetField {
    GridSpec spec;
    std::vector<double> values;  // x-fastest
    double band_width = 0.0;     // narrow band half-width
    double time = 0.0;           // flow time, units of length^2
    bool sdf_flag = false;

    LevelSetField() = default;
    explicit LevelSetField(const GridSpec& s, double bw)
        : spec(s), values(std::size_t(s.node_count()), bw), band_width(bw) {}

    double& at(int i, int j, int k) { return values[std::size_t(spec.index(i, j, k))]; }
    double at(int i, int j, int k) const { return values[std::size_t(spec.index(i, j, k))]; }

    double clamped(int i, int j, int k) const {
        if (!spec.in_bounds(i, j, k)) {
            // clamped linear extension off the domain boundary
            const auto& r = spec.resolution();
            int ci = std::clamp(i, 0, r[0] - 1);
            int cj = std::clamp(j, 0, r[1] - 1);
            int ck = std::clamp(k, 0, r[2] - 1);
            int ci2 = std::clamp(2 * ci - i, 0, r[0] - 1);
            int cj2 = std::clamp(2 * cj - j, 0, r[1] - 1);
            int ck2 = std::clamp(2 * ck - k, 0, r[2] - 1);
            double v = 2.0 * at(ci, cj, ck) - at(ci2, cj2, ck2);
            return std::clamp(v, -band_width, band_width);
        }
        return at(i, j, k);
    }

    // Trilinear sample at an arbitrary point (clamped extension outside).
    double sample(const Vec3& x) const;
    // Central-difference gradient of the trilinear interpolant, step = spacing.
    Vec3 gradient(const Vec3& x) const;
    // Central-difference Hessian, step = spacing.
    Eigen::Matrix3d hessian(const Vec3& x) const;

    bool has_zero_crossing() const;
};

// Boolean node mask tied to a grid.
struct RegionMask {
    GridSpec spec;
    std::vector<std::uint8_t> membership;

    RegionMask() = default;
    explicit RegionMask(const GridSpec& s, bool value = false)
        : spec(s), membership(std::size_t(s.node_count()), value ? 1 : 0) {}

    bool at(int i, int j, int k) const { return membership[std::size_t(spec.index(i, j, k))] != 0; }
    void set(int i, int j, int k, bool v) { membership[std::size_t(spec.index(i, j, k))] = v ? 1 : 0; }

    bool contains(const Vec3& x) const {
        Vec3 g = spec.to_grid(x);
        int i = int(std::lround(g[0])), j = int(std::lround(g[1])), k = int(std::lround(g[2]));
        if (!spec.in_bounds(i, j, k)) return false;
        return at(i, j, k);
    }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (auto m : membership) c += m;
        return c;
    }

    static RegionMask full(const GridSpec& s) { return RegionMask(s, true); }

    // All nodes within the closed ball B(center, radius).
    static RegionMask ball(const GridSpec& s, const Vec3& center, double radius);
    // All nodes with |x - center| <= radius in the two axes orthogonal to
    // `axis` (infinite cylinder mask).
    static RegionMask cylinder(const GridSpec& s, const Vec3& center, int axis, double radius);
    // Axis-aligned box mask.
    static RegionMask box(const GridSpec& s, const Vec3& lo, const Vec3& hi);

    RegionMask dilated(int cells) const;
    RegionMask complement() const;
};

}  // namespace mcfs
