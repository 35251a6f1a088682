#include "polarbound/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polarbound {

void SymmetricTridiagonal::validate() const {
    if (diag.empty())
        throw std::invalid_argument("tridiagonal: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("tridiagonal: offdiag length must be diag length - 1");
    for (double v : diag)
        if (!std::isfinite(v)) throw std::invalid_argument("tridiagonal: non-finite diagonal entry");
    for (double v : offdiag)
        if (!std::isfinite(v)) throw std::invalid_argument("tridiagonal: non-finite offdiagonal entry");
}

int sturm_count(const SymmetricTridiagonal& T, double x, double zero_guard) {
    T.validate();
    if (!std::isfinite(x)) throw std::invalid_argument("sturm_count: non-finite x");
    int count = 0;
    double t = 1.0;  // previous pivot; first iteration has no coupling term
    for (std::size_t i = 0; i < T.size(); ++i) {
        double coup = (i == 0) ? 0.0 : T.offdiag[i - 1] * T.offdiag[i - 1] / t;
        t = (T.diag[i] - x) - coup;
        // +tiny keeps the count strict: an eigenvalue exactly at x is not
        // "below x".
        if (t == 0.0) t = zero_guard;
        if (t < 0.0) ++count;
    }
    return count;
}

namespace {

// Gershgorin bounds for the standard problem.
std::pair<double, double> gershgorin(const SymmetricTridiagonal& T) {
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    const std::size_t n = T.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    return {lo, hi};
}

// Bisects for the i-th eigenvalue (0-based) given a counting predicate.
template <class CountFn>
double bisect_index(CountFn&& count_below, int index, double lo, double hi, double tol) {
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        if (count_below(mid) <= index)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& T, int k, double tol) {
    T.validate();
    if (k < 1 || static_cast<std::size_t>(k) > T.size())
        throw std::invalid_argument("lowest_eigenvalues: k out of range");
    if (!(tol > 0.0)) throw std::invalid_argument("lowest_eigenvalues: tol must be > 0");
    auto [lo, hi] = gershgorin(T);
    hi += tol;  // make the upper end strictly above every eigenvalue
    std::vector<double> out(static_cast<std::size_t>(k));
    auto counter = [&T](double x) { return sturm_count(T, x); };
    double lower = lo;
    for (int i = 0; i < k; ++i) {
        out[static_cast<std::size_t>(i)] = bisect_index(counter, i, lower, hi, tol);
        lower = out[static_cast<std::size_t>(i)] - tol;  // eigenvalues are ordered
    }
    std::sort(out.begin(), out.end());
    return out;
}

int sturm_count_weighted(const SymmetricTridiagonal& A, const std::vector<double>& bdiag,
                         double mu, double zero_guard) {
    A.validate();
    if (bdiag.size() != A.size())
        throw std::invalid_argument("sturm_count_weighted: weight length mismatch");
    if (!std::isfinite(mu)) throw std::invalid_argument("sturm_count_weighted: non-finite mu");
    int count = 0;
    double t = 1.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (!(bdiag[i] > 0.0))
            throw std::invalid_argument("sturm_count_weighted: weight must be positive");
        double coup = (i == 0) ? 0.0 : A.offdiag[i - 1] * A.offdiag[i - 1] / t;
        t = (A.diag[i] - mu * bdiag[i]) - coup;
        if (t == 0.0) t = zero_guard;
        if (t < 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues_weighted(const SymmetricTridiagonal& A,
                                                const std::vector<double>& bdiag, int k,
                                                double tol) {
    A.validate();
    if (bdiag.size() != A.size())
        throw std::invalid_argument("lowest_eigenvalues_weighted: weight length mismatch");
    if (k < 1 || static_cast<std::size_t>(k) > A.size())
        throw std::invalid_argument("lowest_eigenvalues_weighted: k out of range");
    if (!(tol > 0.0)) throw std::invalid_argument("lowest_eigenvalues_weighted: tol must be > 0");
    // Gershgorin-style bounds for the pencil: mu within (a_ii +- r_i)/b_i.
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(A.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(A.offdiag[i]);
        lo = std::min(lo, (A.diag[i] - r) / bdiag[i]);
        hi = std::max(hi, (A.diag[i] + r) / bdiag[i]);
    }
    hi += tol;
    auto counter = [&](double mu) { return sturm_count_weighted(A, bdiag, mu); };
    std::vector<double> out(static_cast<std::size_t>(k));
    double lower = lo;
    for (int i = 0; i < k; ++i) {
        out[static_cast<std::size_t>(i)] = bisect_index(counter, i, lower, hi, tol);
        lower = out[static_cast<std::size_t>(i)] - tol;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<double>, TruncationReport>
solve_adaptive(const MatrixBuilder& builder, int k, double tol, std::size_t n0,
               std::size_t max_size) {
    if (k < 1) throw std::invalid_argument("solve_adaptive: k must be >= 1");
    if (n0 < static_cast<std::size_t>(k) + 2)
        throw std::invalid_argument("solve_adaptive: n0 must be >= k + 2");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_adaptive: tol must be > 0");

    // Bracket eigenvalues tighter than the convergence tolerance so the
    // doubling test measures truncation, not bisection noise.
    const double eig_tol = std::min(tol * 1e-2, 1e-12);

    std::vector<double> prev = lowest_eigenvalues(builder(n0), k, eig_tol);
    TruncationReport report;
    for (std::size_t n = n0 * 2; n <= max_size; n *= 2) {
        std::vector<double> cur = lowest_eigenvalues(builder(n), k, eig_tol);
        double shift = 0.0;
        for (int i = 0; i < k; ++i)
            shift = std::max(shift, std::abs(cur[static_cast<std::size_t>(i)] -
                                             prev[static_cast<std::size_t>(i)]));
        report.final_size = n;
        report.eigenvalue_shift_at_last_doubling = shift;
        if (shift <= tol) {
            report.converged = true;
            return {cur, report};
        }
        prev = std::move(cur);
    }
    report.converged = false;
    throw ConvergenceError("solve_adaptive: eigenvalues did not settle below max size", report);
}

namespace {

// LU solve of (T - lambda I) x = b with partial pivoting (bandwidth-2 upper).
// Singular pivots are nudged; good enough for inverse iteration.
std::vector<double> shifted_solve(const SymmetricTridiagonal& T, double lambda,
                                  std::vector<double> b) {
    const std::size_t n = T.size();
    std::vector<double> d(n), du(n > 1 ? n - 1 : 0), du2(n > 2 ? n - 2 : 0, 0.0),
        dl(n > 1 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = T.diag[i] - lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) du[i] = dl[i] = T.offdiag[i];

    const double tiny = 1e-300;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(dl[i]) > std::abs(d[i])) {
            std::swap(d[i], dl[i]);
            std::swap(du[i], d[i + 1]);
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = 0.0;
            }
            std::swap(b[i], b[i + 1]);
        }
        if (d[i] == 0.0) d[i] = tiny;
        double m = dl[i] / d[i];
        d[i + 1] -= m * du[i];
        if (i + 2 < n) du[i + 1] -= m * du2[i];
        b[i + 1] -= m * b[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = tiny;
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        if (ii + 1 < n) s -= du[ii] * x[ii + 1];
        if (ii + 2 < n) s -= du2[ii] * x[ii + 2];
        x[ii] = s / d[ii];
    }
    return x;
}

void normalize_signed(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    double s = (v[imax] < 0.0 ? -1.0 : 1.0) / norm;
    for (double& x : v) x *= s;
}

}  // namespace

std::vector<double> eigenvector(const SymmetricTridiagonal& T, double lambda) {
    T.validate();
    std::vector<double> v(T.size(), 1.0);
    normalize_signed(v);
    for (int iter = 0; iter < 3; ++iter) {
        v = shifted_solve(T, lambda, std::move(v));
        normalize_signed(v);
    }
    return v;
}

std::vector<double> eigenvector_weighted(const SymmetricTridiagonal& A,
                                         const std::vector<double>& bdiag, double mu) {
    A.validate();
    if (bdiag.size() != A.size())
        throw std::invalid_argument("eigenvector_weighted: weight length mismatch");
    SymmetricTridiagonal shifted = A;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted.diag[i] -= mu * bdiag[i];
    std::vector<double> v(A.size(), 1.0);
    normalize_signed(v);
    for (int iter = 0; iter < 3; ++iter) {
        std::vector<double> rhs(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = bdiag[i] * v[i];
        v = shifted_solve(shifted, 0.0, std::move(rhs));
        normalize_signed(v);
    }
    return v;
}

}  // namespace polarbound
