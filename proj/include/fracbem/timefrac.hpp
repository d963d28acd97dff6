#pragma once

#include <functional>
#include <vector>

#include "fracbem/geometry.hpp"

namespace fracbem {

/// Quadrature weights a_k = tau^(2-alpha)/(2-alpha) [(k+1)^(2-alpha) - k^(2-alpha)]
/// of the Caputo discretization, k = 0..count-1. Requires alpha in (1,2).
std::vector<double> caputo_weights(double alpha, double tau, int count);

/// Time discretization of the order-alpha Caputo operator. Each step reduces
/// the evolution problem to the modified Helmholtz equation
///   kappa lap(u^n) + b u^n = F^{n-1},   b = -a_0 / (tau^2 Gamma(2-alpha)) < 0.
struct FractionalScheme {
    double alpha;
    double tau;
    double kappa;
    int n_steps;
    std::vector<double> weights; // a_0 .. a_{n_steps-1}

    static FractionalScheme make(double alpha, double tau, double kappa, int n_steps);

    /// 1 / (tau^2 Gamma(2-alpha))
    double theta() const;
    double time_at(int n) const { return n * tau; }
};

struct HelmholtzCoefficients {
    double b;      // < 0
    double k_wave; // sqrt(-b/kappa)
};

HelmholtzCoefficients helmholtz_coefficients(const FractionalScheme& scheme);

/// Nodal solution snapshots u^0..u^n plus the initial velocity, all sampled
/// at the same node set (boundary midpoints followed by interior points).
struct SolutionHistory {
    std::vector<std::vector<double>> u;
    std::vector<double> psi;

    int steps_completed() const { return static_cast<int>(u.size()) - 1; }
    const std::vector<double>& at(int n) const { return u.at(n); }
    const std::vector<double>& final() const { return u.back(); }
};

/// Right-hand side of the per-step Helmholtz equation:
///   F^{n-1} = -theta [ a_0 u^{n-1}
///                      + sum_{l=1}^{n-1} (a_{n-l-1} - a_{n-l}) (u^l - u^{l-1})
///                      + tau a_{n-1} psi ] - g^{n-1/2}.
/// g_mid holds g(X, (t_n + t_{n-1})/2) at the history's nodes.
std::vector<double> rhs_f(const FractionalScheme& scheme, const SolutionHistory& history,
                          int n, const std::vector<double>& g_mid);

/// Residual of the difference scheme applied to an exact solution at one
/// spatial point; a truncation probe for the test suite. u_of_t and
/// lap_u_of_t sample the solution and its Laplacian at that point.
double scheme_residual(const FractionalScheme& scheme, int n,
                       const std::function<double(double)>& u_of_t,
                       const std::function<double(double)>& lap_u_of_t,
                       const std::function<double(double)>& g_of_t, double psi);

} // namespace fracbem
