#include <doctest.h>

#include <cstdio>
#include <random>

#include "helpers.hpp"
#include "mcfs/components.hpp"
#include "mcfs/errors.hpp"
#include "mcfs/field_io.hpp"
#include "mcfs/hausdorff.hpp"
#include "mcfs/marching_cubes.hpp"
#include "mcfs/reinit.hpp"

using namespace mcfs;
using namespace mcfs::testing;

namespace {
constexpr double kPi = 3.14159265358979323846;

GridSpec cube_grid(double half_extent, int res) {
    const double h = 2.0 * half_extent / res;
    return GridSpec(Vec3(-half_extent, -half_extent, -half_extent), h, Vec3i(res, res, res));
}
}  // namespace

TEST_CASE("GridSpec invariants") {
    CHECK_THROWS_AS(GridSpec(Vec3(0, 0, 0), 0.1, Vec3i(8, 32, 32)), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(Vec3(0, 0, 0), -1.0, Vec3i(32, 32, 32)), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::from_extent(Vec3(0, 0, 0), Vec3(1, 1, 2), Vec3i(32, 32, 32)),
                    std::invalid_argument);
    GridSpec s = GridSpec::from_extent(Vec3(0, 0, 0), Vec3(2, 1, 4), Vec3i(32, 16, 64));
    CHECK(s.spacing() == doctest::Approx(0.0625));
    CHECK(s.node_count() == 32 * 16 * 64);
    // x-fastest indexing round trip
    Vec3i n = s.unindex(s.index(5, 7, 11));
    CHECK(n == Vec3i(5, 7, 11));
}

TEST_CASE("extract_surface: unit sphere area on 128^3 extent 4") {
    GridSpec spec = cube_grid(2.0, 128);
    const double band = 6 * spec.spacing();
    auto f = make_field(spec, band, [](const Vec3& x) { return sphere_sdf(x, Vec3(0, 0, 0), 1.0); });
    f.sdf_flag = true;
    SurfaceMesh mesh = extract_surface_geometry(f);
    CHECK(mesh.total_area() == doctest::Approx(4.0 * kPi).epsilon(0.02));
    CHECK(mesh.is_watertight());
    CHECK(mesh.euler_characteristic() == 2);

    // vertices on the interpolated zero set
    double worst = 0.0;
    for (const auto& v : mesh.vertices) worst = std::max(worst, std::abs(f.sample(v)));
    CHECK(worst <= 0.5 * spec.spacing());

    // orientation: normals point outward from {w<0}, triangle winding agrees
    std::size_t bad = 0;
    for (const auto& v : mesh.vertices)
        if (mesh.normals[&v - mesh.vertices.data()].dot(v) <= 0.0) ++bad;
    CHECK(bad == 0);
    std::size_t bad_tri = 0;
    for (const auto& t : mesh.triangles) {
        Vec3 c = (mesh.vertices[t[0]] + mesh.vertices[t[1]] + mesh.vertices[t[2]]) / 3.0;
        Vec3 n = (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                     .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
        if (n.dot(c) <= 0.0) ++bad_tri;
    }
    CHECK(bad_tri == 0);
}

TEST_CASE("extract_surface: plane area exact, negation flips orientation") {
    GridSpec spec = cube_grid(1.0, 32);
    const double h = spec.spacing();
    const double z0 = 0.3 * h;
    auto f = make_field(spec, 6 * h, [&](const Vec3& x) { return x[2] - z0; });
    SurfaceMesh mesh = extract_surface_geometry(f);
    const double expect = std::pow((32 - 1) * h, 2);  // zero set spans the cell range
    CHECK(mesh.total_area() == doctest::Approx(expect).epsilon(0.01));
    for (const auto& n : mesh.normals) CHECK(n[2] == doctest::Approx(1.0).epsilon(1e-9));

    auto g = make_field(spec, 6 * h, [&](const Vec3& x) { return -(x[2] - z0); });
    SurfaceMesh neg = extract_surface_geometry(g);
    for (const auto& n : neg.normals) CHECK(n[2] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("extract_surface: torus is genus 1") {
    GridSpec spec = cube_grid(3.0, 96);
    auto f = make_field(spec, 6 * spec.spacing(),
                        [](const Vec3& x) { return torus_sdf(x, 2.0, 0.5); });
    SurfaceMesh mesh = extract_surface_geometry(f);
    CHECK(mesh.is_watertight());
    CHECK(mesh.euler_characteristic() == 0);
}

TEST_CASE("extract_surface: empty zero set throws") {
    GridSpec spec = cube_grid(1.0, 16);
    LevelSetField f(spec, 6 * spec.spacing());  // all +band
    CHECK_THROWS_AS(extract_surface_geometry(f), EmptyZeroSet);
}

TEST_CASE("reinitialize: exact SDF is a fixed point") {
    GridSpec spec = cube_grid(1.6, 64);
    const double band = 6 * spec.spacing();
    auto f = make_field(spec, band, [](const Vec3& x) { return sphere_sdf(x, Vec3(0, 0, 0), 1.0); });
    LevelSetField out = reinitialize(f, band);
    CHECK(out.sdf_flag);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(out.values[i] - f.values[i]));
    CHECK(worst <= 1e-6);
}

TEST_CASE("reinitialize: rescaled SDF collapses to unit gradient") {
    GridSpec spec = cube_grid(1.6, 64);
    const double band = 6 * spec.spacing();
    auto f = make_field(spec, band,
                        [](const Vec3& x) { return 2.0 * sphere_sdf(x, Vec3(0, 0, 0), 1.0); });
    LevelSetField out = reinitialize(f, band);
    CHECK(out.sdf_flag);
    CHECK(max_unit_gradient_deviation(out) <= 0.1);
    // against the true sphere SDF on the band
    double worst = 0.0;
    const auto& res = spec.resolution();
    for (int k = 0; k < res[2]; ++k)
        for (int j = 0; j < res[1]; ++j)
            for (int i = 0; i < res[0]; ++i) {
                const double exact = sphere_sdf(spec.position(i, j, k), Vec3(0, 0, 0), 1.0);
                if (std::abs(exact) > 0.5 * band) continue;
                worst = std::max(worst, std::abs(out.at(i, j, k) - exact));
            }
    CHECK(worst <= 0.5 * spec.spacing());
}

TEST_CASE("reinitialize: composite min/max field gets unit gradient, zero set stays put") {
    GridSpec spec = cube_grid(1.6, 64);
    const double band = 6 * spec.spacing();
    // slab with a vertical string: smooth-min union, not a distance field
    // near the junction
    auto smin = [](double a, double b, double kk) {
        const double m = std::max(kk - std::abs(a - b), 0.0) / kk;
        return std::min(a, b) - m * m * kk * 0.25;
    };
    auto fn = [&](const Vec3& x) {
        // disk slab with rounded rim (exact SDF of a rounded rectangle in the
        // (rho, z) half-plane, revolved)
        const double re = 0.15;
        const double vx = std::hypot(x[0] - 0.007, x[1] - 0.003) - (1.2 - re);
        const double vy = std::abs(x[2] - 0.013) - (0.25 - re);
        const double slab = std::hypot(std::max(vx, 0.0), std::max(vy, 0.0)) +
                            std::min(std::max(vx, vy), 0.0) - re;
        const double zc = std::clamp(x[2], 0.0, 0.9);
        const double tube = std::hypot(x[0], x[1], x[2] - zc) - 0.22;
        return smin(slab, tube, 0.44);
    };
    auto f = make_field(spec, band, fn);
    SurfaceMesh before = extract_surface_geometry(f);
    LevelSetField out = reinitialize(f, band);
    CHECK(max_unit_gradient_deviation(out) <= 0.1);  // gradient within [0.9, 1.1]
    // central differences near the surface (away from medial-axis shocks)
    CHECK(max_unit_gradient_deviation_central(out, 2.5 * spec.spacing()) <= 0.1);
    SurfaceMesh after = extract_surface_geometry(out);
    CHECK(hausdorff_distance(before, after) <= 0.5 * spec.spacing());

    // idempotent up to zero-set drift
    LevelSetField out2 = reinitialize(out, band);
    SurfaceMesh after2 = extract_surface_geometry(out2);
    CHECK(hausdorff_distance(after, after2) <= 0.5 * spec.spacing());
}

TEST_CASE("reinitialize: empty zero set throws") {
    GridSpec spec = cube_grid(1.0, 16);
    LevelSetField f(spec, 6 * spec.spacing());
    CHECK_THROWS_AS(reinitialize(f, f.band_width), EmptyZeroSet);
}

TEST_CASE("connected_components: counts and partition") {
    GridSpec spec = cube_grid(1.6, 64);
    const double band = 6 * spec.spacing();
    auto two = make_field(spec, band, [](const Vec3& x) {
        return std::min(sphere_sdf(x, Vec3(-0.7, 0, 0), 0.4), sphere_sdf(x, Vec3(0.8, 0, 0), 0.3));
    });
    auto masks = connected_components(two);
    REQUIRE(masks.size() == 2);
    CHECK(masks[0].count() >= masks[1].count());

    // masks partition {w<0}
    std::int64_t neg = 0;
    for (double v : two.values) neg += (v < 0.0);
    CHECK(masks[0].count() + masks[1].count() == neg);
    for (std::size_t i = 0; i < two.values.size(); ++i) {
        const int in0 = masks[0].membership[i], in1 = masks[1].membership[i];
        CHECK(in0 + in1 == (two.values[i] < 0.0 ? 1 : 0));
    }

    auto slab = make_field(spec, band, [](const Vec3& x) {
        return std::max(std::abs(x[2]) - 0.3, std::hypot(x[0], x[1]) - 1.0);
    });
    CHECK(connected_components(slab).size() == 1);

    LevelSetField empty(spec, band);
    CHECK(connected_components(empty).empty());
}

TEST_CASE("hausdorff_distance: anchors") {
    GridSpec spec = cube_grid(1.6, 64);
    const double band = 6 * spec.spacing();
    auto a = make_field(spec, band, [](const Vec3& x) { return sphere_sdf(x, Vec3(0, 0, 0), 1.0); });
    auto b = make_field(spec, band, [](const Vec3& x) { return sphere_sdf(x, Vec3(0, 0, 0), 1.1); });
    SurfaceMesh ma = extract_surface_geometry(a);
    SurfaceMesh mb = extract_surface_geometry(b);

    CHECK(hausdorff_distance(ma, ma) == doctest::Approx(0.0));
    CHECK(hausdorff_distance(ma, mb) == doctest::Approx(0.1).epsilon(0.5 * spec.spacing() / 0.1));

    std::vector<Vec3> p0{Vec3(0, 0, 0)}, p1{Vec3(3, 4, 0)};
    CHECK(hausdorff_distance(p0, p1) == doctest::Approx(5.0));
    CHECK_THROWS_AS(hausdorff_distance(std::vector<Vec3>{}, p1), EmptyInput);
}

TEST_CASE("hausdorff_distance: symmetry and triangle inequality on point sets") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto draw = [&](std::size_t n) {
        std::vector<Vec3> pts(n);
        for (auto& p : pts) p = Vec3(u(rng), u(rng), u(rng));
        return pts;
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto A = draw(40), B = draw(25), C = draw(33);
        const double ab = hausdorff_distance(A, B);
        const double ba = hausdorff_distance(B, A);
        const double bc = hausdorff_distance(B, C);
        const double ac = hausdorff_distance(A, C);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(ac <= ab + bc + 1e-9);
    }
    // zero iff equal as sets
    auto A = draw(10);
    auto B = A;
    std::shuffle(B.begin(), B.end(), rng);
    CHECK(hausdorff_distance(A, B) <= 1e-9);
}

TEST_CASE("spacetime_hausdorff: metric anchors") {
    GridSpec spec = cube_grid(1.2, 32);
    auto f = make_field(spec, 6 * spec.spacing(),
                        [](const Vec3& x) { return sphere_sdf(x, Vec3(0, 0, 0), 0.8); });
    SurfaceMesh m = extract_surface_geometry(f);

    SpacetimeTrack t1, t2, t3;
    for (int s = 0; s < 3; ++s) {
        t1.push(0.02 * s, m);
        t2.push(0.02 * s, m);
        t3.push(0.02 * s + 0.01, m);
    }
    CHECK(spacetime_hausdorff(t1, t2) == doctest::Approx(0.0));
    CHECK(spacetime_hausdorff(t1, t3) == doctest::Approx(std::sqrt(0.01)));

    SpacetimeTrack far;
    far.push(10.0, m);
    CHECK_THROWS_AS(spacetime_hausdorff(t1, far), DisjointTimeRanges);
    SpacetimeTrack empty;
    CHECK_THROWS_AS(spacetime_hausdorff(t1, empty), EmptyInput);
}

TEST_CASE("lsf round trip") {
    GridSpec spec(Vec3(-1, -0.5, 0), 0.05, Vec3i(32, 16, 24));
    auto f = make_field(spec, 0.3, [](const Vec3& x) { return sphere_sdf(x, Vec3(0, 0, 0.5), 0.4); });
    f.time = 0.125;
    f.sdf_flag = true;
    const std::string path = "roundtrip_test.lsf";
    write_lsf(f, path);
    LevelSetField g = read_lsf(path);
    CHECK(g.spec == f.spec);
    CHECK(g.time == f.time);
    CHECK(g.band_width == f.band_width);
    CHECK(g.sdf_flag == f.sdf_flag);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(f.values[i] - g.values[i]));
    CHECK(worst <= 1e-6);  // float32 round trip
    std::remove(path.c_str());
}
