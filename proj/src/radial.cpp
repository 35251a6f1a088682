#include "polarbound/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polarbound {

double radial_potential_u(double rho, const RadialProblem& p) {
    if (!(rho > 0.0)) throw std::domain_error("radial_potential_u: rho must be > 0");
    const double g = std::exp(-p.a * p.a * rho * rho);
    return -2.0 / rho + 2.0 * p.A * g + (2.0 * p.lambda - 0.25) / (rho * rho);
}

namespace {

void validate_problem(const RadialProblem& p) {
    if (!std::isfinite(p.lambda) || !std::isfinite(p.A) || !std::isfinite(p.a))
        throw std::invalid_argument("radial: non-finite parameters");
    if (p.lambda < 0.0)
        throw SelfAdjointExtensionRequired(
            "radial: lambda < 0 requires a self-adjoint extension (boundary "
            "condition at rho = 0); not supported");
    if (!(p.grid.rho_min > 0.0) || !(p.grid.rho_min < p.grid.rho_max))
        throw std::invalid_argument("radial: need 0 < rho_min < rho_max");
    if (p.grid.points < 100) throw std::invalid_argument("radial: need at least 100 grid points");
}

struct Discretization {
    SymmetricTridiagonal A;          // interior operator in w = u / sqrt(rho), x = ln rho
    std::vector<double> weight;      // e^{2x} measure
    std::vector<double> x;           // interior nodes
    double h = 0.0;
};

// -w'' + [2 lambda - 2 e^x + 2 A e^{2x} exp(-a^2 e^{2x})] w = 2 E e^{2x} w,
// with the left boundary matched to the regular branch w ~ e^{sqrt(2 lambda) x}.
Discretization discretize(const RadialProblem& p, double rho_max, std::size_t points) {
    Discretization d;
    const double x0 = std::log(p.grid.rho_min);
    const double x1 = std::log(rho_max);
    d.h = (x1 - x0) / static_cast<double>(points - 1);
    const std::size_t m = points - 2;
    d.A.diag.resize(m);
    d.A.offdiag.assign(m - 1, -1.0 / (d.h * d.h));
    d.weight.resize(m);
    d.x.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = x0 + d.h * static_cast<double>(i + 1);
        const double r = std::exp(x);
        const double pot = 2.0 * p.lambda - 2.0 * r +
                           2.0 * p.A * r * r * std::exp(-p.a * p.a * r * r);
        d.A.diag[i] = 2.0 / (d.h * d.h) + pot;
        d.weight[i] = r * r;
        d.x[i] = x;
    }
    const double s = std::sqrt(2.0 * p.lambda);
    d.A.diag[0] = (2.0 - std::exp(-s * d.h)) / (d.h * d.h) + (d.A.diag[0] - 2.0 / (d.h * d.h));
    return d;
}

std::vector<double> negative_pencil_eigenvalues(const Discretization& d, int count,
                                                double mu_tol) {
    const int below_zero = sturm_count_weighted(d.A, d.weight, 0.0);
    const int k = std::min(count, below_zero);
    if (k < 1) return {};
    return lowest_eigenvalues_weighted(d.A, d.weight, k, mu_tol);
}

int count_nodes(const std::vector<double>& v) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    const double cut = 1e-9 * vmax;
    int nodes = 0;
    double last = 0.0;
    for (double x : v) {
        if (std::abs(x) < cut) continue;
        if (last != 0.0 && x * last < 0.0) ++nodes;
        last = x;
    }
    return nodes;
}

}  // namespace

std::vector<RadialMode> bound_modes(const RadialProblem& p, int count, double tol) {
    validate_problem(p);
    if (count < 1) throw std::invalid_argument("bound_modes: count must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("bound_modes: tol must be > 0");

    const double mu_tol = std::min(tol * 1e-2, 1e-10);
    double rho_max = p.grid.rho_max;
    std::size_t points = p.grid.points;

    // Extend the box until the shallowest requested level has a negligible
    // tail at rho_max: exp(-sqrt(-2E) rho_max) < 1e-12.
    const double tail_log = -std::log(1e-12);
    std::vector<double> mu;
    for (int pass = 0; pass < 8; ++pass) {
        mu = negative_pencil_eigenvalues(discretize(p, rho_max, points), count, mu_tol);
        if (mu.empty()) return {};
        const double kappa = std::sqrt(-mu.back());  // sqrt(-2E) of the shallowest level
        const double needed = tail_log / kappa;
        if (needed <= rho_max || rho_max >= 5000.0) break;
        const double old_span = std::log(rho_max / p.grid.rho_min);
        rho_max = std::min(needed * 1.1, 5000.0);
        const double new_span = std::log(rho_max / p.grid.rho_min);
        points = static_cast<std::size_t>(std::ceil(static_cast<double>(points) *
                                                    new_span / old_span));
    }

    // Richardson-style refinement: halve the spacing until every energy
    // drifts by less than tol.
    std::vector<double> drift(mu.size(), std::numeric_limits<double>::infinity());
    for (int pass = 0; pass < 6; ++pass) {
        const std::size_t finer = points * 2;
        std::vector<double> mu2 =
            negative_pencil_eigenvalues(discretize(p, rho_max, finer), count, mu_tol);
        if (mu2.size() < mu.size()) mu.resize(mu2.size());
        if (mu.empty()) return {};
        bool ok = true;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            drift[i] = 0.5 * std::abs(mu2[i] - mu[i]);  // drift in E = mu / 2
            if (drift[i] >= tol) ok = false;
        }
        mu = std::move(mu2);
        points = finer;
        if (ok) break;
    }

    const Discretization d = discretize(p, rho_max, points);
    std::vector<RadialMode> out;
    out.reserve(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        std::vector<double> w = eigenvector_weighted(d.A, d.weight, mu[i]);
        RadialMode mode;
        mode.level.n = count_nodes(w);
        mode.level.energy = mu[i] / 2.0;
        mode.level.grid_converged = drift[i] < tol;
        mode.rho.resize(w.size());
        mode.u.resize(w.size());
        double norm2 = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) norm2 += w[j] * w[j] * d.weight[j] * d.h;
        const double scale = 1.0 / std::sqrt(norm2);
        for (std::size_t j = 0; j < w.size(); ++j) {
            mode.rho[j] = std::exp(d.x[j]);
            mode.u[j] = scale * w[j] * std::sqrt(mode.rho[j]);
        }
        out.push_back(std::move(mode));
    }
    return out;
}

std::vector<RadialLevel> bound_states(const RadialProblem& p, int count, double tol) {
    std::vector<RadialMode> modes = bound_modes(p, count, tol);
    std::vector<RadialLevel> out;
    out.reserve(modes.size());
    for (const RadialMode& m : modes) out.push_back(m.level);
    return out;
}

}  // namespace polarbound
