#include "mcfs/field.hpp"

namespace mcfs {

double LevelSetField::sample(const Vec3& x) const {
    const Vec3 g = spec.to_grid(x);
    const int i0 = int(std::floor(g[0]));
    const int j0 = int(std::floor(g[1]));
    const int k0 = int(std::floor(g[2]));
    const double fx = g[0] - i0, fy = g[1] - j0, fz = g[2] - k0;

    double c[2][2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c2 = 0; c2 < 2; ++c2)
                c[a][b][c2] = clamped(i0 + a, j0 + b, k0 + c2);

    auto lerp = [](double u, double v, double t) { return u + (v - u) * t; };
    double c00 = lerp(c[0][0][0], c[1][0][0], fx);
    double c10 = lerp(c[0][1][0], c[1][1][0], fx);
    double c01 = lerp(c[0][0][1], c[1][0][1], fx);
    double c11 = lerp(c[0][1][1], c[1][1][1], fx);
    double c0 = lerp(c00, c10, fy);
    double c1 = lerp(c01, c11, fy);
    return lerp(c0, c1, fz);
}

Vec3 LevelSetField::gradient(const Vec3& x) const {
    const double h = spec.spacing();
    Vec3 g;
    for (int a = 0; a < 3; ++a) {
        Vec3 e = Vec3::Zero();
        e[a] = h;
        g[a] = (sample(x + e) - sample(x - e)) / (2.0 * h);
    }
    return g;
}

Eigen::Matrix3d LevelSetField::hessian(const Vec3& x) const {
    const double h = spec.spacing();
    Eigen::Matrix3d m;
    const double w0 = sample(x);
    for (int a = 0; a < 3; ++a) {
        Vec3 ea = Vec3::Zero();
        ea[a] = h;
        m(a, a) = (sample(x + ea) - 2.0 * w0 + sample(x - ea)) / (h * h);
        for (int b = a + 1; b < 3; ++b) {
            Vec3 eb = Vec3::Zero();
            eb[b] = h;
            double v = (sample(x + ea + eb) - sample(x + ea - eb) - sample(x - ea + eb) +
                        sample(x - ea - eb)) /
                       (4.0 * h * h);
            m(a, b) = v;
            m(b, a) = v;
        }
    }
    return m;
}

bool LevelSetField::has_zero_crossing() const {
    bool neg = false, pos = false;
    for (double v : values) {
        neg |= (v < 0.0);
        pos |= (v >= 0.0);
        if (neg && pos) return true;
    }
    return false;
}

RegionMask RegionMask::ball(const GridSpec& s, const Vec3& center, double radius) {
    RegionMask m(s);
    const auto& r = s.resolution();
    const double r2 = radius * radius;
    for (int k = 0; k < r[2]; ++k)
        for (int j = 0; j < r[1]; ++j)
            for (int i = 0; i < r[0]; ++i)
                if ((s.position(i, j, k) - center).squaredNorm() <= r2) m.set(i, j, k, true);
    return m;
}

RegionMask RegionMask::cylinder(const GridSpec& s, const Vec3& center, int axis, double radius) {
    RegionMask m(s);
    const auto& r = s.resolution();
    const double r2 = radius * radius;
    for (int k = 0; k < r[2]; ++k)
        for (int j = 0; j < r[1]; ++j)
            for (int i = 0; i < r[0]; ++i) {
                Vec3 d = s.position(i, j, k) - center;
                d[axis] = 0.0;
                if (d.squaredNorm() <= r2) m.set(i, j, k, true);
            }
    return m;
}

RegionMask RegionMask::box(const GridSpec& s, const Vec3& lo, const Vec3& hi) {
    RegionMask m(s);
    const auto& r = s.resolution();
    for (int k = 0; k < r[2]; ++k)
        for (int j = 0; j < r[1]; ++j)
            for (int i = 0; i < r[0]; ++i) {
                Vec3 p = s.position(i, j, k);
                if (p[0] >= lo[0] && p[0] <= hi[0] && p[1] >= lo[1] && p[1] <= hi[1] &&
                    p[2] >= lo[2] && p[2] <= hi[2])
                    m.set(i, j, k, true);
            }
    return m;
}

RegionMask RegionMask::dilated(int cells) const {
    RegionMask out = *this;
    const auto& r = spec.resolution();
    for (int pass = 0; pass < cells; ++pass) {
        RegionMask next = out;
        for (int k = 0; k < r[2]; ++k)
            for (int j = 0; j < r[1]; ++j)
                for (int i = 0; i < r[0]; ++i) {
                    if (out.at(i, j, k)) continue;
                    bool nb = (i > 0 && out.at(i - 1, j, k)) || (i + 1 < r[0] && out.at(i + 1, j, k)) ||
                              (j > 0 && out.at(i, j - 1, k)) || (j + 1 < r[1] && out.at(i, j + 1, k)) ||
                              (k > 0 && out.at(i, j, k - 1)) || (k + 1 < r[2] && out.at(i, j, k + 1));
                    if (nb) next.set(i, j, k, true);
                }
        out = next;
    }
    return out;
}

RegionMask RegionMask::complement() const {
    RegionMask m = *this;
    for (auto& v : m.membership) v = v ? 0 : 1;
    return m;
}

}  // namespace mcfs
