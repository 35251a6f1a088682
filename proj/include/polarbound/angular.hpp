#pragma once

#include <vector>

#include "polarbound/tridiag.hpp"

namespace polarbound {

// Even levels come from the cosine series, odd levels from the sine series.
enum class Parity { Even, Odd };

// One level of the periodic pendulum operator -1/2 d^2/dth^2 + xi cos(th).
struct AngularLevel {
    int m = 0;  // global index, lambda_0 < lambda_1 <= ...
    Parity parity = Parity::Even;
    double lambda = 0.0;
    double two_lambda = 0.0;  // table convention; equals 2*lambda exactly
    TruncationReport report;
};

// Fourier coefficients of one eigenfunction, L2-normalized over [0, 2*pi).
// Even: a_j, j from 0. Odd: b_j, j from 1.
struct FourierCoefficients {
    Parity parity = Parity::Even;
    std::vector<double> coeffs;
};

// CC's coupling convention, gp = 2*xi.
inline double gp_from_xi(double xi) { return 2.0 * xi; }

// Symmetrized cosine-series matrix; eigenvalues are 2*lambda.
// Diagonal j^2 (j = 0..n-1); first coupling sqrt(2)*xi from the rescaled
// constant mode, then xi. Rejects xi < 0 (equivalent to xi > 0 with
// theta -> theta + pi).
SymmetricTridiagonal build_even_matrix(double xi, std::size_t n);

// Sine-series matrix: diagonal j^2 (j = 1..n), couplings xi.
SymmetricTridiagonal build_odd_matrix(double xi, std::size_t n);

// The count lowest levels of both parities merged and globally indexed.
// Equal values are ordered even before odd.
std::vector<AngularLevel> angular_spectrum(double xi, int count, double tol = 1e-10);

// Scaled terminal coefficient a_n (or b_n) of the three-term recurrence as a
// function of lambda; its sign changes bracket the eigenvalues. Renormalized
// every step, so only sign and zero location are meaningful. Accepts any
// real xi (the xi -> -xi symmetry is a test property at this level).
double termination_determinant(double lambda, double xi, std::size_t n, Parity parity);

// Coupling xi_m at which lambda_m crosses zero; m = 0 returns 0 exactly.
double critical_xi(int m, double tol = 1e-10);

// Large-xi estimate -xi + sqrt(xi)*(m + 1/2); O(1) absolute error.
double asymptotic_lambda(int m, double xi);

// Coefficients of one converged level (recomputed at the level's final
// basis size by inverse iteration).
FourierCoefficients fourier_coefficients(double xi, const AngularLevel& level);

}  // namespace polarbound
