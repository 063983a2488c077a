#pragma once

#include "mcfs/field.hpp"

namespace mcfs {

// Pointwise second-fundamental-form data of the level set through x,
// computed from the implicit function: nu = grad w/|grad w|, and the
// principal curvatures are the eigenvalues of the tangentially projected
// Hessian scaled by 1/|grad w| (the normal eigenvalue is discarded).
// Signs follow w < 0 inside, so a round sphere has lambda = +1/rho.
struct ImplicitCurvature {
    Vec3 normal;
    double lambda1;  // lambda1 <= lambda2
    double lambda2;
    double mean() const { return lambda1 + lambda2; }
    double a_norm2() const { return lambda1 * lambda1 + lambda2 * lambda2; }
};

// Throws DegenerateGradient when |grad w|(x) <= eps.
ImplicitCurvature implicit_curvature_at(const LevelSetField& field, const Vec3& x,
                                        double grad_eps = 1e-6);

}  // namespace mcfs
