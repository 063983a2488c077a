#include "mcfs/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mcfs/errors.hpp"

namespace mcfs {

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // closest point on triangle (Ericson, Real-Time Collision Detection)
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return (p - a).norm();

    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return (p - b).norm();

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return (p - (a + v * ab)).norm();
    }

    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return (p - c).norm();

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return (p - (a + w * ac)).norm();
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return (p - (b + w * (c - b))).norm();
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom, w = vc * denom;
    return (p - (a + ab * v + ac * w)).norm();
}

MeshDistanceQuery::MeshDistanceQuery(const SurfaceMesh& mesh) : mesh_(&mesh) {
    if (mesh.vertices.empty()) throw EmptyInput("MeshDistanceQuery: empty mesh");

    Vec3 hi = mesh.vertices[0];
    lo_ = mesh.vertices[0];
    for (const auto& v : mesh.vertices) {
        lo_ = lo_.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tr = mesh.triangles[t];
        double d = std::max({(mesh.vertices[tr[0]] - mesh.vertices[tr[1]]).norm(),
                             (mesh.vertices[tr[1]] - mesh.vertices[tr[2]]).norm(),
                             (mesh.vertices[tr[2]] - mesh.vertices[tr[0]]).norm()});
        max_tri_diam_ = std::max(max_tri_diam_, d);
    }

    const Vec3 span = hi - lo_;
    const double target_cells = std::cbrt(double(mesh.vertices.size())) + 1.0;
    cell_ = std::max({span[0], span[1], span[2]}) / target_cells;
    if (cell_ <= 0.0) cell_ = 1.0;
    cell_ = std::max(cell_, max_tri_diam_ > 0 ? max_tri_diam_ : cell_);
    for (int a = 0; a < 3; ++a)
        dims_[a] = std::max(1, int(std::floor(span[a] / cell_)) + 1);

    const std::int64_t n_cells = std::int64_t(dims_[0]) * dims_[1] * dims_[2];
    std::vector<std::int32_t> counts(std::size_t(n_cells) + 1, 0);
    auto cell_of = [&](const Vec3& v) {
        int cx = std::clamp(int((v[0] - lo_[0]) / cell_), 0, dims_[0] - 1);
        int cy = std::clamp(int((v[1] - lo_[1]) / cell_), 0, dims_[1] - 1);
        int cz = std::clamp(int((v[2] - lo_[2]) / cell_), 0, dims_[2] - 1);
        return cell_index(cx, cy, cz);
    };
    for (const auto& v : mesh.vertices) counts[std::size_t(cell_of(v)) + 1]++;
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    bin_start_ = counts;
    bin_items_.resize(mesh.vertices.size());
    std::vector<std::int32_t> cursor(bin_start_.begin(), bin_start_.end() - 1);
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        const auto c = cell_of(mesh.vertices[v]);
        bin_items_[std::size_t(cursor[std::size_t(c)]++)] = std::int32_t(v);
    }

    // vertex -> incident triangles
    std::vector<std::int32_t> tcounts(mesh.vertices.size() + 1, 0);
    for (const auto& tr : mesh.triangles)
        for (int c = 0; c < 3; ++c) tcounts[std::size_t(tr[c]) + 1]++;
    std::partial_sum(tcounts.begin(), tcounts.end(), tcounts.begin());
    vtri_start_ = tcounts;
    vtri_items_.resize(mesh.triangles.size() * 3);
    std::vector<std::int32_t> tcur(vtri_start_.begin(), vtri_start_.end() - 1);
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t)
        for (int c = 0; c < 3; ++c)
            vtri_items_[std::size_t(tcur[std::size_t(mesh.triangles[t][c])]++)] = std::int32_t(t);
}

double MeshDistanceQuery::nearest_vertex(const Vec3& x) const {
    const int cx = std::clamp(int((x[0] - lo_[0]) / cell_), 0, dims_[0] - 1);
    const int cy = std::clamp(int((x[1] - lo_[1]) / cell_), 0, dims_[1] - 1);
    const int cz = std::clamp(int((x[2] - lo_[2]) / cell_), 0, dims_[2] - 1);
    const int max_ring = dims_[0] + dims_[1] + dims_[2];

    double best = std::numeric_limits<double>::infinity();
    for (int ring = 0; ring <= max_ring; ++ring) {
        // once a hit exists, rings beyond best/cell_ cannot improve it
        if (best < std::numeric_limits<double>::infinity() && double(ring - 1) * cell_ > best)
            break;
        bool any_cell = false;
        const int x0 = cx - ring, x1 = cx + ring;
        const int y0 = cy - ring, y1 = cy + ring;
        const int z0 = cz - ring, z1 = cz + ring;
        for (int gz = std::max(z0, 0); gz <= std::min(z1, dims_[2] - 1); ++gz)
            for (int gy = std::max(y0, 0); gy <= std::min(y1, dims_[1] - 1); ++gy)
                for (int gx = std::max(x0, 0); gx <= std::min(x1, dims_[0] - 1); ++gx) {
                    const bool shell = (gx == x0 || gx == x1 || gy == y0 || gy == y1 ||
                                        gz == z0 || gz == z1);
                    if (!shell) continue;
                    any_cell = true;
                    const std::int64_t ci = cell_index(gx, gy, gz);
                    for (std::int32_t s = bin_start_[std::size_t(ci)];
                         s < bin_start_[std::size_t(ci) + 1]; ++s) {
                        const double d = (mesh_->vertices[bin_items_[std::size_t(s)]] - x).norm();
                        best = std::min(best, d);
                    }
                }
        if (!any_cell && ring > 0 && best < std::numeric_limits<double>::infinity()) break;
    }
    return best;
}

double MeshDistanceQuery::distance(const Vec3& x) const {
    const double dv = nearest_vertex(x);
    if (mesh_->triangles.empty()) return dv;

    // candidate triangles touch a vertex within dv + diam
    const double reach = dv + max_tri_diam_;
    const int r0 = int(std::ceil(reach / cell_)) + 1;
    const int cx = std::clamp(int((x[0] - lo_[0]) / cell_), 0, dims_[0] - 1);
    const int cy = std::clamp(int((x[1] - lo_[1]) / cell_), 0, dims_[1] - 1);
    const int cz = std::clamp(int((x[2] - lo_[2]) / cell_), 0, dims_[2] - 1);

    double best = dv;
    for (int gz = std::max(cz - r0, 0); gz <= std::min(cz + r0, dims_[2] - 1); ++gz)
        for (int gy = std::max(cy - r0, 0); gy <= std::min(cy + r0, dims_[1] - 1); ++gy)
            for (int gx = std::max(cx - r0, 0); gx <= std::min(cx + r0, dims_[0] - 1); ++gx) {
                const std::int64_t ci = cell_index(gx, gy, gz);
                for (std::int32_t s = bin_start_[std::size_t(ci)];
                     s < bin_start_[std::size_t(ci) + 1]; ++s) {
                    const std::int32_t v = bin_items_[std::size_t(s)];
                    if ((mesh_->vertices[v] - x).norm() > reach) continue;
                    for (std::int32_t t = vtri_start_[std::size_t(v)];
                         t < vtri_start_[std::size_t(v) + 1]; ++t) {
                        const auto& tr = mesh_->triangles[vtri_items_[std::size_t(t)]];
                        best = std::min(best, point_triangle_distance(x, mesh_->vertices[tr[0]],
                                                                      mesh_->vertices[tr[1]],
                                                                      mesh_->vertices[tr[2]]));
                    }
                }
            }
    return best;
}

double hausdorff_distance(const SurfaceMesh& a, const SurfaceMesh& b) {
    if (a.vertices.empty() || b.vertices.empty())
        throw EmptyInput("hausdorff_distance: empty mesh");
    const MeshDistanceQuery qa(a), qb(b);
    double d = 0.0;
    for (const auto& v : a.vertices) d = std::max(d, qb.distance(v));
    for (const auto& v : b.vertices) d = std::max(d, qa.distance(v));
    return d;
}

double hausdorff_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    if (a.empty() || b.empty()) throw EmptyInput("hausdorff_distance: empty point set");
    SurfaceMesh ma, mb;
    ma.vertices = a;
    mb.vertices = b;
    const MeshDistanceQuery qa(ma), qb(mb);
    double d = 0.0;
    for (const auto& v : a) d = std::max(d, qb.distance(v));
    for (const auto& v : b) d = std::max(d, qa.distance(v));
    return d;
}

namespace {

double directed_spacetime(const SpacetimeTrack& a,
                          const std::vector<MeshDistanceQuery>& qb,
                          const SpacetimeTrack& b) {
    double worst = 0.0;
    for (const auto& sa : a.samples) {
        // b samples in order of temporal proximity
        std::vector<std::size_t> order(b.samples.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            return std::abs(b.samples[i].time - sa.time) < std::abs(b.samples[j].time - sa.time);
        });
        for (const auto& x : sa.mesh.vertices) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t oi : order) {
                const double dt = std::sqrt(std::abs(b.samples[oi].time - sa.time));
                if (dt >= best) break;  // later samples only farther in time
                const double ds = qb[oi].distance(x);
                best = std::min(best, std::max(ds, dt));
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

}  // namespace

double spacetime_hausdorff(const SpacetimeTrack& a, const SpacetimeTrack& b) {
    if (a.empty() || b.empty()) throw EmptyInput("spacetime_hausdorff: empty track");
    if (a.t_end() < b.t_begin() || b.t_end() < a.t_begin())
        throw DisjointTimeRanges("spacetime_hausdorff: tracks do not overlap in time");

    std::vector<MeshDistanceQuery> qa, qb;
    qa.reserve(a.samples.size());
    qb.reserve(b.samples.size());
    for (const auto& s : a.samples) qa.emplace_back(s.mesh);
    for (const auto& s : b.samples) qb.emplace_back(s.mesh);

    return std::max(directed_spacetime(a, qb, b), directed_spacetime(b, qa, a));
}

}  // namespace mcfs
