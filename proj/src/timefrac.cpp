#include "fracbem/timefrac.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracbem/specfun.hpp"

namespace fracbem {

std::vector<double> caputo_weights(double alpha, double tau, int count) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw config_error("caputo_weights: alpha must lie in (1,2), got " +
                           std::to_string(alpha));
    if (!(tau > 0.0))
        throw config_error("caputo_weights: tau must be positive");
    if (count < 1)
        throw config_error("caputo_weights: count must be at least 1");

    const double e = 2.0 - alpha;
    const double scale = std::pow(tau, e) / e;
    std::vector<double> a(count);
    for (int k = 0; k < count; ++k)
        a[k] = scale * (std::pow(k + 1.0, e) - std::pow(static_cast<double>(k), e));
    return a;
}

FractionalScheme FractionalScheme::make(double alpha, double tau, double kappa,
                                        int n_steps) {
    if (!(kappa > 0.0))
        throw config_error("FractionalScheme: kappa must be positive");
    FractionalScheme s;
    s.alpha = alpha;
    s.tau = tau;
    s.kappa = kappa;
    s.n_steps = n_steps;
    s.weights = caputo_weights(alpha, tau, n_steps);
    return s;
}

double FractionalScheme::theta() const {
    return 1.0 / (tau * tau * gamma(2.0 - alpha));
}

HelmholtzCoefficients helmholtz_coefficients(const FractionalScheme& scheme) {
    HelmholtzCoefficients c;
    c.b = -scheme.weights[0] * scheme.theta();
    c.k_wave = std::sqrt(-c.b / scheme.kappa);
    return c;
}

std::vector<double> rhs_f(const FractionalScheme& scheme, const SolutionHistory& history,
                          int n, const std::vector<double>& g_mid) {
    if (n < 1 || n > scheme.n_steps)
        throw std::invalid_argument("rhs_f: step index out of range");
    if (history.steps_completed() < n - 1)
        throw std::invalid_argument("rhs_f: history is missing steps before n");

    const auto& a = scheme.weights;
    const double theta = scheme.theta();
    const std::size_t n_nodes = history.u[0].size();
    if (g_mid.size() != n_nodes || history.psi.size() != n_nodes)
        throw std::invalid_argument("rhs_f: nodal vector size mismatch");

    std::vector<double> f(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        double bracket = a[0] * history.u[n - 1][i];
        for (int l = 1; l <= n - 1; ++l)
            bracket += (a[n - l - 1] - a[n - l]) * (history.u[l][i] - history.u[l - 1][i]);
        bracket += scheme.tau * a[n - 1] * history.psi[i];
        f[i] = -theta * bracket - g_mid[i];
    }
    return f;
}

double scheme_residual(const FractionalScheme& scheme, int n,
                       const std::function<double(double)>& u_of_t,
                       const std::function<double(double)>& lap_u_of_t,
                       const std::function<double(double)>& g_of_t, double psi) {
    if (n < 1 || n > scheme.n_steps)
        throw std::invalid_argument("scheme_residual: step index out of range");
    const auto& a = scheme.weights;
    const double tau = scheme.tau;

    const auto xi = [&](int k) {
        return (u_of_t(k * tau) - u_of_t((k - 1) * tau)) / tau;
    };
    double p = a[0] * xi(n);
    for (int k = 1; k <= n - 1; ++k)
        p -= (a[n - k - 1] - a[n - k]) * xi(k);
    p -= a[n - 1] * psi;
    const double lhs = p / (tau * gamma(2.0 - scheme.alpha));
    const double t_mid = (n - 0.5) * tau;
    return lhs - scheme.kappa * lap_u_of_t(n * tau) - g_of_t(t_mid);
}

} // namespace fracbem
