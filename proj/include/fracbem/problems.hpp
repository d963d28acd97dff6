#pragma once

#include <functional>
#include <vector>

#include "fracbem/geometry.hpp"

namespace fracbem {

/// A manufactured problem: exact solution, matching forcing, initial and
/// Dirichlet data on a concrete domain. The forcing satisfies
///   D_t^alpha u = kappa lap(u) + g
/// identically for the stored exact solution.
struct TestProblem {
    Domain domain;
    double kappa = 1.0;
    std::function<double(Vec2, double)> exact;
    std::function<double(Vec2, double)> forcing;
    std::function<double(Vec2)> phi; // u(X, 0)
    std::function<double(Vec2)> psi; // du/dt(X, 0)
    std::function<double(Vec2, double)> dirichlet;
    std::function<double(Vec2, double)> exact_laplacian; // analytic lap(u)
};

/// u = t^(2+alpha) sin(x) sin(y) on [0,pi]^2, homogeneous Dirichlet data.
TestProblem problem_1(double alpha);

/// u = exp(x+y) t^2 on the unit disk centered at the origin.
TestProblem problem_2(double alpha);

/// u = cos(pi(x+y)) t^2 on a polygonal region (default: L-shaped hexagon).
TestProblem problem_3(double alpha);
TestProblem problem_3(double alpha, Domain region);

/// Default polygonal region for problem 3.
Polygon l_shaped_region();

/// sqrt( sum (numeric_i - exact_i)^2 / L )
double rms_error(const std::vector<double>& numeric, const std::vector<double>& exact);

} // namespace fracbem
