#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcfs {

using Vec3 = Eigen::Vector3d;
using Vec3i = Eigen::Vector3i;

// Uniform cubic sampling lattice. Spacing is identical along all axes and
// extent is derived exactly as resolution * spacing, so the three are always
// consistent.
class GridSpec {
  public:
    GridSpec() = default;

    GridSpec(const Vec3& origin, double spacing, const Vec3i& resolution)
        : origin_(origin), spacing_(spacing), res_(resolution) {
        if (spacing <= 0.0)
            throw std::invalid_argument("GridSpec: spacing must be positive");
        for (int a = 0; a < 3; ++a) {
            if (res_[a] < 16)
                throw std::invalid_argument("GridSpec: resolution must be >= 16 per axis");
        }
    }

    // Extent/resolution constructor; requires extent_a / resolution_a to agree
    // across axes to within one part in 1e12.
    static GridSpec from_extent(const Vec3& origin, const Vec3& extent, const Vec3i& resolution) {
        const double h = extent[0] / resolution[0];
        for (int a = 1; a < 3; ++a) {
            const double ha = extent[a] / resolution[a];
            if (std::abs(ha - h) > 1e-12 * h)
                throw std::invalid_argument("GridSpec: extent/resolution must give uniform spacing");
        }
        return GridSpec(origin, h, resolution);
    }

    const Vec3& origin() const { return origin_; }
    double spacing() const { return spacing_; }
    const Vec3i& resolution() const { return res_; }
    Vec3 extent() const { return spacing_ * res_.cast<double>(); }

    std::int64_t node_count() const {
        return std::int64_t(res_[0]) * res_[1] * res_[2];
    }

    // x-fastest linear index
    std::int64_t index(int i, int j, int k) const {
        return std::int64_t(i) + res_[0] * (std::int64_t(j) + std::int64_t(res_[1]) * k);
    }
    Vec3i unindex(std::int64_t n) const {
        const int i = int(n % res_[0]);
        const std::int64_t r = n / res_[0];
        return {i, int(r % res_[1]), int(r / res_[1])};
    }

    bool in_bounds(int i, int j, int k) const {
        return i >= 0 && j >= 0 && k >= 0 && i < res_[0] && j < res_[1] && k < res_[2];
    }

    Vec3 position(int i, int j, int k) const {
        return origin_ + spacing_ * Vec3(i, j, k);
    }
    Vec3 position(const Vec3i& n) const { return position(n[0], n[1], n[2]); }

    // Continuous grid coordinates of a point (node units)
    Vec3 to_grid(const Vec3& x) const { return (x - origin_) / spacing_; }

    bool operator==(const GridSpec& o) const {
        return origin_ == o.origin_ && spacing_ == o.spacing_ && res_ == o.res_;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

  private:
    Vec3 origin_{0, 0, 0};
    double spacing_ = 1.0;
    Vec3i res_{16, 16, 16};
};

}  // namespace mcfs
