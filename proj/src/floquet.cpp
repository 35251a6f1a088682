#include "polarbound/floquet.hpp"

#include <cmath>
#include <stdexcept>

namespace polarbound {

double wrap_nu(double nu) {
    if (!std::isfinite(nu)) throw std::invalid_argument("wrap_nu: non-finite nu");
    double t = std::fmod(nu, 2.0);
    if (t < 0.0) t += 2.0;
    return t;
}

SymmetricTridiagonal build_floquet_matrix(double nu, double q, std::size_t half_width) {
    if (!std::isfinite(nu) || !std::isfinite(q))
        throw std::invalid_argument("build_floquet_matrix: non-finite input");
    if (half_width < 2)
        throw std::invalid_argument("build_floquet_matrix: half_width must be >= 2");
    const std::size_t n = 2 * half_width + 1;
    SymmetricTridiagonal T;
    T.diag.resize(n);
    T.offdiag.resize(n - 1, q);
    for (std::size_t i = 0; i < n; ++i) {
        double j = static_cast<double>(i) - static_cast<double>(half_width);
        double d = nu + 2.0 * j;
        T.diag[i] = d * d;
    }
    return T;
}

std::vector<FloquetPoint> characteristic_values(double nu, double q, int count, double tol) {
    if (count < 1) throw std::invalid_argument("characteristic_values: count must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("characteristic_values: tol must be > 0");
    const double nu_w = wrap_nu(nu);
    const std::size_t n0 = std::max<std::size_t>(17, 2 * static_cast<std::size_t>(count) + 9);
    auto builder = [nu_w, q](std::size_t n) {
        // Requested size n maps to the symmetric window of half width n/2.
        return build_floquet_matrix(nu_w, q, std::max<std::size_t>(2, n / 2));
    };
    auto [vals, report] = solve_adaptive(builder, count, tol, n0);
    std::vector<FloquetPoint> out;
    out.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        out.push_back({nu, q, static_cast<int>(i), vals[i], report});
    return out;
}

std::vector<double> lambda_band(double nu, double xi, int count, double tol) {
    std::vector<FloquetPoint> pts = characteristic_values(nu, 4.0 * xi, count, tol);
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = pts[i].a / 8.0;
    return out;
}

std::vector<BandSweepRow> band_sweep(const std::vector<double>& nu_grid, double xi,
                                     int count, double tol) {
    if (nu_grid.empty()) throw std::invalid_argument("band_sweep: empty nu grid");
    for (double nu : nu_grid)
        if (!(nu >= 0.0 && nu <= 2.0))
            throw std::invalid_argument("band_sweep: nu values must lie in [0, 2]");
    std::vector<BandSweepRow> rows;
    rows.reserve(nu_grid.size() * static_cast<std::size_t>(count));
    for (double nu : nu_grid) {
        std::vector<double> lam = lambda_band(nu, xi, count, tol);
        for (std::size_t b = 0; b < lam.size(); ++b)
            rows.push_back({nu, static_cast<int>(b), lam[b]});
    }
    return rows;
}

}  // namespace polarbound
