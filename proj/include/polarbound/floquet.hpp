#pragma once

#include <vector>

#include "polarbound/tridiag.hpp"

namespace polarbound {

// Canonical Mathieu form y'' + (a - 2 q cos 2z) y = 0.
enum class MathieuConvention { StandardTwoQ };

// One characteristic value a(nu, q) with its band index.
struct FloquetPoint {
    double nu = 0.0;
    double q = 0.0;
    int band = 0;
    double a = 0.0;
    TruncationReport report;
};

struct BandSweepRow {
    double nu = 0.0;
    int band = 0;
    double lambda = 0.0;
};

// Reduces nu to [0, 2) using a(nu) = a(nu + 2) = a(-nu).
double wrap_nu(double nu);

// Shifted-Fourier matrix in the basis e^{2ijz}, j = -half_width..half_width:
// diagonal (nu + 2j)^2, off-diagonal q. Eigenvalues are characteristic
// values a.
SymmetricTridiagonal build_floquet_matrix(double nu, double q, std::size_t half_width);

// The count lowest characteristic values, ascending, bands indexed by
// sorted order.
std::vector<FloquetPoint> characteristic_values(double nu, double q, int count,
                                                double tol = 1e-10);

// Angular bands lambda_m(nu) = a(nu, 4*xi)/8 (from theta = 2z in the
// pendulum equation: a = 8*lambda, 2q = 8*xi).
std::vector<double> lambda_band(double nu, double xi, int count, double tol = 1e-10);

// Band values over a nu grid; bands labeled by sorted order at each point.
std::vector<BandSweepRow> band_sweep(const std::vector<double>& nu_grid, double xi,
                                     int count, double tol = 1e-10);

}  // namespace polarbound
