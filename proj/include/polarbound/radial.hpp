#pragma once

#include <stdexcept>
#include <vector>

#include "polarbound/tridiag.hpp"

namespace polarbound {

// Radial grids are log-spaced in rho: the substitution x = ln(rho) keeps the
// transformed solution smooth through the 1/rho^2 region, where a uniform
// grid stalls at O(1) energy error for small lambda.
struct RadialGrid {
    double rho_min = 1e-8;
    double rho_max = 40.0;
    std::size_t points = 4000;
};

struct RadialProblem {
    double lambda = 0.0;  // angular eigenvalue, must be >= 0
    double A = 0.0;       // Gaussian cap height
    double a = 1.0;       // inverse Gaussian width
    RadialGrid grid;
};

struct RadialLevel {
    int n = 0;  // radial quantum number = node count of u on (0, inf)
    double energy = 0.0;
    bool grid_converged = false;
};

// One level together with its sampled wavefunction u(rho) (u = f * sqrt(rho)).
struct RadialMode {
    RadialLevel level;
    std::vector<double> rho;
    std::vector<double> u;
};

// lambda < 0 makes the operator not essentially self-adjoint (spectrum
// continuous and unbounded below); a boundary condition at rho = 0 would
// have to be chosen, which this solver does not support.
class SelfAdjointExtensionRequired : public std::domain_error {
  public:
    explicit SelfAdjointExtensionRequired(const std::string& msg)
        : std::domain_error(msg) {}
};

// Coefficient of u in u'' = (V_u(rho) - 2E) u:
// V_u = -2/rho + 2 A exp(-a^2 rho^2) + (2 lambda - 1/4)/rho^2.
double radial_potential_u(double rho, const RadialProblem& p);

// The count lowest bound states (E < 0). The outer radius is auto-extended
// until the shallowest level's tail is below 1e-12 at rho_max, and the grid
// is refined until each energy drifts by less than tol between resolutions.
// Returns fewer than count levels when the potential supports fewer.
std::vector<RadialLevel> bound_states(const RadialProblem& p, int count, double tol = 1e-6);

// Same computation, also returning the wavefunctions.
std::vector<RadialMode> bound_modes(const RadialProblem& p, int count, double tol = 1e-6);

}  // namespace polarbound
