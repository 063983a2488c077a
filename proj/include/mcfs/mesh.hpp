#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mcfs/grid.hpp"

namespace mcfs {

// Triangulated extraction of a zero set. Normals are unit and point outward
// from the enclosed domain (along +grad w). Principal curvatures are stored
// sorted, lambda1 <= lambda2, and H = lambda1 + lambda2 (n = 2).
struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::int32_t, 3>> triangles;
    std::vector<Vec3> normals;
    std::vector<double> mean_curvature;
    std::vector<double> lambda1;
    std::vector<double> lambda2;
    double time = 0.0;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t triangle_count() const { return triangles.size(); }
    bool empty() const { return vertices.empty(); }

    double triangle_area(std::size_t t) const {
        const auto& tr = triangles[t];
        return 0.5 * (vertices[tr[1]] - vertices[tr[0]])
                         .cross(vertices[tr[2]] - vertices[tr[0]])
                         .norm();
    }

    double total_area() const {
        double a = 0.0;
        for (std::size_t t = 0; t < triangles.size(); ++t) a += triangle_area(t);
        return a;
    }

    // V - E + F over the whole mesh (edges counted once).
    long euler_characteristic() const;

    // True when every edge is used by exactly two triangles.
    bool is_watertight() const;
};

// Ordered (time, mesh) samples; times strictly increasing.
struct SpacetimeTrack {
    struct Sample {
        double time;
        SurfaceMesh mesh;
    };
    std::vector<Sample> samples;

    bool empty() const { return samples.empty(); }
    double t_begin() const { return samples.front().time; }
    double t_end() const { return samples.back().time; }

    void push(double t, SurfaceMesh mesh) {
        if (!samples.empty() && t <= samples.back().time)
            throw std::invalid_argument("SpacetimeTrack: times must be strictly increasing");
        mesh.time = t;
        samples.push_back({t, std::move(mesh)});
    }
};

}  // namespace mcfs
