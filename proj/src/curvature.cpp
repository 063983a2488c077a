#include "mcfs/curvature.hpp"

#include <Eigen/Eigenvalues>

#include "mcfs/errors.hpp"

namespace mcfs {

ImplicitCurvature implicit_curvature_at(const LevelSetField& field, const Vec3& x,
                                        double grad_eps) {
    const Vec3 g = field.gradient(x);
    const double gn = g.norm();
    if (gn <= grad_eps)
        throw DegenerateGradient("implicit_curvature_at: |grad w| <= eps at query point");
    const Vec3 nu = g / gn;

    const Eigen::Matrix3d hess = field.hessian(x);
    const Eigen::Matrix3d proj = Eigen::Matrix3d::Identity() - nu * nu.transpose();
    const Eigen::Matrix3d shape = (proj * hess * proj) / gn;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(shape);
    const Vec3 ev = es.eigenvalues();  // ascending

    // Drop the eigenvalue whose eigenvector is closest to the normal; for the
    // projected operator that eigenvalue is ~0 with eigenvector ~nu.
    int normal_idx = 0;
    double best = -1.0;
    for (int c = 0; c < 3; ++c) {
        const double align = std::abs(es.eigenvectors().col(c).dot(nu));
        if (align > best) {
            best = align;
            normal_idx = c;
        }
    }
    double l[2];
    int m = 0;
    for (int c = 0; c < 3; ++c)
        if (c != normal_idx) l[m++] = ev[c];

    ImplicitCurvature out;
    out.normal = nu;
    out.lambda1 = std::min(l[0], l[1]);
    out.lambda2 = std::max(l[0], l[1]);
    return out;
}

}  // namespace mcfs
