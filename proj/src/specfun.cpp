#include "fracbem/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracbem {

namespace {

// Lanczos approximation, g = 7, 9 terms. Valid for x > 0 (no reflection
// branch is needed here).
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeff = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Chebyshev coefficients of sqrt(x) e^x K_nu(x) as a function of
// t = 4/x - 1, x in [2, inf). Truncation error is below 2e-18, so the
// large-argument branch is accurate to double rounding.
constexpr std::array<double, 26> k0_cheb = {
    2.4403030820659554547,    -0.031448101311964500543,
    0.0015698838857300533749, -0.00012849549581627802638,
    1.3949813718876499364e-5, -1.8317555227191194848e-6,
    2.7668136394450150761e-7, -4.6604898976879476656e-8,
    8.5740340174142260858e-9, -1.6975345093890615156e-9,
    3.5773972814003284472e-10, -7.9574892444773970377e-11,
    1.855949114954926555e-11, -4.5145978833745191751e-12,
    1.1403405882073442347e-12, -2.9800969231481783548e-13,
    8.0328907750683743694e-14, -2.2275133267462963604e-14,
    6.3400764762766459661e-15, -1.8485933779209071694e-15,
    5.5120559994043333649e-16, -1.6782311257549006383e-16,
    5.2103917776435541125e-17, -1.6475805939842632815e-17,
    5.3004337711773357703e-18, -1.7331712005821000263e-18,
};
constexpr std::array<double, 26> k1_cheb = {
    2.7206261904844426694,    0.10392373657681723844,
    -0.0028578168596227793868, 0.00019521551847135163111,
    -1.93619797416608296e-5,  2.4064849478372171171e-6,
    -3.5019606030878125421e-7, 5.7410841254500492923e-8,
    -1.0345762465678097027e-8, 2.0150497551970346161e-9,
    -4.1903547593419255842e-10, 9.2183151876053141258e-11,
    -2.1299678384277910216e-11, 5.1396396734823435404e-12,
    -1.2891739609498229352e-12, 3.3484196660522431201e-13,
    -8.9767051820101460692e-14, 2.4771544242195986813e-14,
    -7.0198370892147688513e-15, 2.0387031662398608799e-15,
    -6.0570472706430178228e-16, 1.8380935752430454256e-16,
    -5.6894628491936483742e-17, 1.7940510478863572914e-17,
    -5.7567444820733024496e-18, 1.8778651901623267386e-18,
};

// Clenshaw recurrence; the c[0] term enters halved.
template <std::size_t N>
double chebyshev_eval(const std::array<double, N>& c, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = N - 1; k >= 1; --k) {
        const double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + 0.5 * c[0];
}

double k_large(const std::array<double, 26>& c, double x) {
    const double t = 4.0 / x - 1.0;
    return chebyshev_eval(c, t) * std::exp(-x) / std::sqrt(x);
}

// Ascending series coupled with I0 (DLMF 10.31.2):
//   K0(x) = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2.
double k0_series(double x) {
    const double q = 0.25 * x * x;
    double i0 = 1.0, term = 1.0, harmonic = 0.0, sum = 0.0;
    for (int k = 1; k <= 30; ++k) {
        term *= q / (static_cast<double>(k) * k);
        i0 += term;
        harmonic += 1.0 / k;
        sum += term * harmonic;
    }
    return -(std::log(0.5 * x) + euler_gamma) * i0 + sum;
}

//   K1(x) = 1/x + ln(x/2) I1(x)
//           - (x/4) sum_{k>=0} [psi(k+1) + psi(k+2)] (x^2/4)^k / (k!(k+1)!).
double k1_series(double x) {
    const double q = 0.25 * x * x;
    double i1 = 1.0, term = 1.0;
    double psi_sum = -2.0 * euler_gamma + 1.0; // psi(1) + psi(2)
    double total = psi_sum;
    double hk = 0.0, hk1 = 1.0;
    for (int k = 1; k <= 30; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        i1 += term;
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1);
        total += term * (-2.0 * euler_gamma + hk + hk1);
    }
    i1 *= 0.5 * x;
    return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * total;
}

void require_positive(double x, const char* fn) {
    if (!(x > 0.0))
        throw std::domain_error(std::string(fn) + ": argument must be positive, got " +
                                std::to_string(x));
}

} // namespace

double gamma(double x) {
    require_positive(x, "gamma");
    // Lanczos: Gamma(x) = sqrt(2 pi) t^(x-1/2) e^(-t) A(x), t = x + g - 1/2.
    const double z = x - 1.0;
    double a = lanczos_coeff[0];
    for (std::size_t i = 1; i < lanczos_coeff.size(); ++i)
        a += lanczos_coeff[i] / (z + static_cast<double>(i));
    const double t = z + lanczos_g + 0.5;
    constexpr double sqrt_two_pi = 2.5066282746310005024;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double bessel_k0(double x) {
    require_positive(x, "bessel_k0");
    return x <= 2.0 ? k0_series(x) : k_large(k0_cheb, x);
}

double bessel_k1(double x) {
    require_positive(x, "bessel_k1");
    return x <= 2.0 ? k1_series(x) : k_large(k1_cheb, x);
}

double log_element_integral(double length) {
    if (!(length > 0.0))
        throw std::domain_error("log_element_integral: length must be positive");
    return length * (std::log(0.5 * length) - 1.0);
}

} // namespace fracbem
