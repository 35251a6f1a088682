#include "polarbound/angular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polarbound {

SymmetricTridiagonal build_even_matrix(double xi, std::size_t n) {
    if (!(xi >= 0.0))
        throw std::domain_error("build_even_matrix: xi must be >= 0 (xi < 0 maps to xi > 0 via theta -> theta + pi)");
    if (n < 3) throw std::invalid_argument("build_even_matrix: n must be >= 3");
    SymmetricTridiagonal T;
    T.diag.resize(n);
    T.offdiag.resize(n - 1, xi);
    for (std::size_t j = 0; j < n; ++j) T.diag[j] = static_cast<double>(j * j);
    T.offdiag[0] = std::sqrt(2.0) * xi;
    return T;
}

SymmetricTridiagonal build_odd_matrix(double xi, std::size_t n) {
    if (!(xi >= 0.0))
        throw std::domain_error("build_odd_matrix: xi must be >= 0 (xi < 0 maps to xi > 0 via theta -> theta + pi)");
    if (n < 3) throw std::invalid_argument("build_odd_matrix: n must be >= 3");
    SymmetricTridiagonal T;
    T.diag.resize(n);
    T.offdiag.resize(n - 1, xi);
    for (std::size_t j = 0; j < n; ++j) T.diag[j] = static_cast<double>((j + 1) * (j + 1));
    return T;
}

std::vector<AngularLevel> angular_spectrum(double xi, int count, double tol) {
    if (count < 1) throw std::invalid_argument("angular_spectrum: count must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("angular_spectrum: tol must be > 0");
    const std::size_t n0 = std::max<std::size_t>(16, static_cast<std::size_t>(count) + 8);

    auto [even_vals, even_rep] = solve_adaptive(
        [xi](std::size_t n) { return build_even_matrix(xi, n); }, count, tol, n0);
    auto [odd_vals, odd_rep] = solve_adaptive(
        [xi](std::size_t n) { return build_odd_matrix(xi, n); }, count, tol, n0);

    std::vector<AngularLevel> levels;
    levels.reserve(even_vals.size() + odd_vals.size());
    for (double v : even_vals)
        levels.push_back({0, Parity::Even, v / 2.0, v, even_rep});
    for (double v : odd_vals)
        levels.push_back({0, Parity::Odd, v / 2.0, v, odd_rep});

    std::stable_sort(levels.begin(), levels.end(),
                     [](const AngularLevel& a, const AngularLevel& b) {
                         return a.two_lambda < b.two_lambda;
                     });
    // Degenerate pairs: even listed before odd. The tie window sits well
    // below the closest genuine near-degeneracy (~1e-6 in the tables).
    const double tie = std::max(64.0 * std::min(tol * 1e-2, 1e-12), 1e-13);
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        if (levels[i].parity == Parity::Odd && levels[i + 1].parity == Parity::Even &&
            std::abs(levels[i].two_lambda - levels[i + 1].two_lambda) <= tie)
            std::swap(levels[i], levels[i + 1]);
    }

    levels.resize(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < levels.size(); ++i) levels[i].m = static_cast<int>(i);
    return levels;
}

double termination_determinant(double lambda, double xi, std::size_t n, Parity parity) {
    if (!std::isfinite(lambda) || !std::isfinite(xi))
        throw std::invalid_argument("termination_determinant: non-finite input");
    if (n < 3) throw std::invalid_argument("termination_determinant: n must be >= 3");
    const double x = 2.0 * lambda;
    const double xi2 = xi * xi;
    // Work with t_k = xi^k a_k (even) or xi^(k-1) b_k (odd): polynomial in
    // lambda, no divisions, same zeros as the terminal coefficient.
    double prev, cur;
    std::size_t k;
    if (parity == Parity::Even) {
        prev = x;                              // t_1
        cur = (x - 1.0) * prev - 2.0 * xi2;    // t_2 (doubled coupling to a_0)
        k = 2;
    } else {
        prev = 1.0;               // t_1 (b_0 = 0)
        cur = (x - 1.0) * prev;   // t_2
        k = 2;
    }
    for (; k < n; ++k) {
        double next = (x - static_cast<double>(k * k)) * cur - xi2 * prev;
        prev = cur;
        cur = next;
        double scale = std::max(std::abs(cur), std::abs(prev));
        if (scale > 1e100) {
            cur /= scale;
            prev /= scale;
        }
    }
    return cur;
}

namespace {

// Number of angular eigenvalues below zero at coupling xi (both parities).
int negative_level_count(double xi, std::size_t n) {
    return sturm_count(build_even_matrix(xi, n), 0.0) +
           sturm_count(build_odd_matrix(xi, n), 0.0);
}

}  // namespace

double critical_xi(int m, double tol) {
    if (m < 0) throw std::invalid_argument("critical_xi: m must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("critical_xi: tol must be > 0");
    if (m == 0) return 0.0;

    const double hi0 = 50.0 * static_cast<double>((m + 1) * (m + 1));
    // Basis large enough that levels near zero are converged at the top of
    // the search range (coefficients decay once j^2 >> 2 xi).
    const std::size_t n = std::max<std::size_t>(
        64, static_cast<std::size_t>(4.0 * std::sqrt(hi0)) + 32);

    if (negative_level_count(hi0, n) < m + 1)
        throw std::runtime_error("critical_xi: no bracket in the default search range");

    double lo = 0.0, hi = hi0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (negative_level_count(mid, n) < m + 1)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double asymptotic_lambda(int m, double xi) {
    if (!(xi > 0.0)) throw std::domain_error("asymptotic_lambda: xi must be > 0");
    return -xi + std::sqrt(xi) * (static_cast<double>(m) + 0.5);
}

FourierCoefficients fourier_coefficients(double xi, const AngularLevel& level) {
    const std::size_t n = level.report.final_size > 0 ? level.report.final_size : 64;
    SymmetricTridiagonal T = level.parity == Parity::Even ? build_even_matrix(xi, n)
                                                          : build_odd_matrix(xi, n);
    std::vector<double> v = eigenvector(T, level.two_lambda);
    // L2 norm of g over [0, 2pi) equals sqrt(pi) * |v| in the symmetrized
    // basis (the constant mode is already rescaled by sqrt(2)).
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::acos(-1.0));
    for (double& c : v) c *= inv_sqrt_pi;
    if (level.parity == Parity::Even) v[0] /= std::sqrt(2.0);
    return {level.parity, std::move(v)};
}

}  // namespace polarbound
