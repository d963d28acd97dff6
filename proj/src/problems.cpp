#include "fracbem/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "fracbem/specfun.hpp"

namespace fracbem {

namespace {
constexpr double pi = 3.14159265358979323846;

void check_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw config_error("test problem: alpha must lie in (1,2)");
}
} // namespace

TestProblem problem_1(double alpha) {
    check_alpha(alpha);
    TestProblem p;
    p.domain = Rectangle{0.0, 0.0, pi, pi};
    p.kappa = 1.0;
    p.exact = [alpha](Vec2 x, double t) {
        return std::pow(t, 2.0 + alpha) * std::sin(x.x) * std::sin(x.y);
    };
    // D_t^alpha t^(2+alpha) = Gamma(3+alpha)/2 t^2 and lap(u) = -2u.
    const double c = 0.5 * gamma(3.0 + alpha);
    p.forcing = [alpha, c](Vec2 x, double t) {
        return std::sin(x.x) * std::sin(x.y) * (c * t * t + 2.0 * std::pow(t, 2.0 + alpha));
    };
    p.phi = [](Vec2) { return 0.0; };
    p.psi = [](Vec2) { return 0.0; };
    p.dirichlet = [](Vec2, double) { return 0.0; };
    p.exact_laplacian = [exact = p.exact](Vec2 x, double t) { return -2.0 * exact(x, t); };
    return p;
}

TestProblem problem_2(double alpha) {
    check_alpha(alpha);
    TestProblem p;
    p.domain = Disk{0.0, 0.0, 1.0};
    p.kappa = 1.0;
    p.exact = [](Vec2 x, double t) { return std::exp(x.x + x.y) * t * t; };
    // D_t^alpha t^2 = 2 t^(2-alpha)/Gamma(3-alpha) and lap(u) = 2u, so
    // g = 2 exp(x+y) (t^(2-alpha)/Gamma(3-alpha) - t^2).
    const double inv_g3a = 1.0 / gamma(3.0 - alpha);
    p.forcing = [alpha, inv_g3a](Vec2 x, double t) {
        return 2.0 * std::exp(x.x + x.y) * (std::pow(t, 2.0 - alpha) * inv_g3a - t * t);
    };
    p.phi = [](Vec2) { return 0.0; };
    p.psi = [](Vec2) { return 0.0; };
    p.dirichlet = [exact = p.exact](Vec2 x, double t) { return exact(x, t); };
    p.exact_laplacian = [exact = p.exact](Vec2 x, double t) { return 2.0 * exact(x, t); };
    return p;
}

Polygon l_shaped_region() {
    return Polygon{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.5}, {0.5, 0.5}, {0.5, 1.0}, {0.0, 1.0}}};
}

TestProblem problem_3(double alpha) { return problem_3(alpha, l_shaped_region()); }

TestProblem problem_3(double alpha, Domain region) {
    check_alpha(alpha);
    TestProblem p;
    p.domain = std::move(region);
    p.kappa = 1.0;
    p.exact = [](Vec2 x, double t) { return std::cos(pi * (x.x + x.y)) * t * t; };
    // lap(u) = -2 pi^2 u/t^2 * t^2; g = 2 cos(pi(x+y)) (t^(2-alpha)/Gamma(3-alpha) + pi^2 t^2).
    const double inv_g3a = 1.0 / gamma(3.0 - alpha);
    p.forcing = [inv_g3a, alpha](Vec2 x, double t) {
        return 2.0 * std::cos(pi * (x.x + x.y)) *
               (std::pow(t, 2.0 - alpha) * inv_g3a + pi * pi * t * t);
    };
    p.phi = [](Vec2) { return 0.0; };
    p.psi = [](Vec2) { return 0.0; };
    p.dirichlet = [exact = p.exact](Vec2 x, double t) { return exact(x, t); };
    p.exact_laplacian = [exact = p.exact](Vec2 x, double t) {
        return -2.0 * pi * pi * exact(x, t);
    };
    return p;
}

double rms_error(const std::vector<double>& numeric, const std::vector<double>& exact) {
    if (numeric.size() != exact.size() || numeric.empty())
        throw std::invalid_argument("rms_error: vectors must be nonempty and equal length");
    double s = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double d = numeric[i] - exact[i];
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(numeric.size()));
}

} // namespace fracbem
