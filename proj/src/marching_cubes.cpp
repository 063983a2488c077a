#include "mcfs/marching_cubes.hpp"

#include <unordered_map>

#include "mcfs/curvature.hpp"
#include "mcfs/errors.hpp"

namespace mcfs {

namespace {

// Cube corner offsets, Bourke numbering (rings in the j and j+1 planes).
const int kCorner[8][3] = {
    {0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1},
    {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1},
};

const int kEdgeEnds[12][2] = {
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
    {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
};

SurfaceMesh extract_impl(const LevelSetField& field, bool annotate) {
    const GridSpec& spec = field.spec;
    const auto& res = spec.resolution();
    const double h = spec.spacing();

    SurfaceMesh mesh;
    mesh.time = field.time;

    // Grid-edge key -> vertex id. An edge is its lower node plus an axis.
    std::unordered_map<std::int64_t, std::int32_t> edge_vertex;
    edge_vertex.reserve(1 << 16);

    auto edge_key = [&](int i, int j, int k, int axis) {
        return 3 * spec.index(i, j, k) + axis;
    };

    double vals[8];
    std::int32_t everts[12];

    for (int k = 0; k + 1 < res[2]; ++k) {
        for (int j = 0; j + 1 < res[1]; ++j) {
            for (int i = 0; i + 1 < res[0]; ++i) {
                int cube = 0;
                for (int c = 0; c < 8; ++c) {
                    vals[c] = field.at(i + kCorner[c][0], j + kCorner[c][1], k + kCorner[c][2]);
                    if (vals[c] < 0.0) cube |= (1 << c);
                }
                const int edges = detail::kMcEdgeTable[cube];
                if (edges == 0) continue;

                for (int e = 0; e < 12; ++e) {
                    if (!(edges & (1 << e))) continue;
                    const int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
                    int ai = i + kCorner[a][0], aj = j + kCorner[a][1], ak = k + kCorner[a][2];
                    int bi = i + kCorner[b][0], bj = j + kCorner[b][1], bk = k + kCorner[b][2];
                    int axis = (ai != bi) ? 0 : (aj != bj) ? 1 : 2;
                    // canonical lower node of the grid edge
                    int li = std::min(ai, bi), lj = std::min(aj, bj), lk = std::min(ak, bk);
                    const std::int64_t key = edge_key(li, lj, lk, axis);
                    auto it = edge_vertex.find(key);
                    if (it != edge_vertex.end()) {
                        everts[e] = it->second;
                        continue;
                    }
                    double wa = vals[a], wb = vals[b];
                    double t = wa / (wa - wb);
                    t = std::clamp(t, 1e-6, 1.0 - 1e-6);
                    Vec3 pa = spec.position(ai, aj, ak);
                    Vec3 pb = spec.position(bi, bj, bk);
                    Vec3 p = pa + t * (pb - pa);
                    const std::int32_t id = std::int32_t(mesh.vertices.size());
                    mesh.vertices.push_back(p);
                    edge_vertex.emplace(key, id);
                    everts[e] = id;
                }

                const int* tt = detail::kMcTriTable[cube];
                for (int t = 0; tt[t] != -1; t += 3) {
                    mesh.triangles.push_back({everts[tt[t]], everts[tt[t + 1]], everts[tt[t + 2]]});
                }
            }
        }
    }

    if (mesh.vertices.empty())
        throw EmptyZeroSet("extract_surface: field has no zero crossing");

    // Normals from the field gradient (outward from {w < 0}).
    mesh.normals.resize(mesh.vertices.size());
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        Vec3 g = field.gradient(mesh.vertices[v]);
        double gn = g.norm();
        mesh.normals[v] = (gn > 1e-12) ? Vec3(g / gn) : Vec3(0, 0, 1);
    }

    // Table winding already matches outward normals for inside = {w < 0}.

    if (annotate) {
        mesh.mean_curvature.resize(mesh.vertices.size());
        mesh.lambda1.resize(mesh.vertices.size());
        mesh.lambda2.resize(mesh.vertices.size());
        for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
            try {
                ImplicitCurvature c = implicit_curvature_at(field, mesh.vertices[v]);
                mesh.lambda1[v] = c.lambda1;
                mesh.lambda2[v] = c.lambda2;
                mesh.mean_curvature[v] = c.mean();
            } catch (const DegenerateGradient&) {
                mesh.lambda1[v] = 0.0;
                mesh.lambda2[v] = 0.0;
                mesh.mean_curvature[v] = 0.0;
            }
        }
    }

    (void)h;
    return mesh;
}

}  // namespace

SurfaceMesh extract_surface(const LevelSetField& field) { return extract_impl(field, true); }

SurfaceMesh extract_surface_geometry(const LevelSetField& field) {
    return extract_impl(field, false);
}

}  // namespace mcfs
