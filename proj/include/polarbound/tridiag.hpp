#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polarbound {

// Real symmetric tridiagonal matrix. offdiag has one entry fewer than diag.
struct SymmetricTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }

    // Throws std::invalid_argument on shape mismatch or non-finite entries.
    void validate() const;
};

// Diagnostics from adaptive basis-size doubling.
struct TruncationReport {
    std::size_t final_size = 0;
    double eigenvalue_shift_at_last_doubling = 0.0;
    bool converged = false;
};

// Thrown when size doubling hits the cap before the eigenvalues settle.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& msg, TruncationReport rep)
        : std::runtime_error(msg), report(rep) {}
    TruncationReport report;
};

// Number of eigenvalues of T strictly below x (Sturm sequence sign count).
// Zero pivots are replaced by +zero_guard to keep the count well-defined
// and strict.
int sturm_count(const SymmetricTridiagonal& T, double x, double zero_guard = 1e-300);

// The k smallest eigenvalues, ascending, each bracketed by bisection to
// width <= tol inside the Gershgorin interval. Deterministic.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& T, int k,
                                       double tol = 1e-12);

// Generalized problem A v = mu B v with B a positive diagonal weight.
// Same Sturm/bisection machinery applied to the pencil A - mu B.
int sturm_count_weighted(const SymmetricTridiagonal& A, const std::vector<double>& bdiag,
                         double mu, double zero_guard = 1e-300);
std::vector<double> lowest_eigenvalues_weighted(const SymmetricTridiagonal& A,
                                                const std::vector<double>& bdiag, int k,
                                                double tol = 1e-12);

using MatrixBuilder = std::function<SymmetricTridiagonal(std::size_t)>;

// Doubles the matrix size starting from n0 until each of the k lowest
// eigenvalues moves by less than tol between consecutive sizes.
// Throws ConvergenceError (carrying the last report) past max_size.
std::pair<std::vector<double>, TruncationReport>
solve_adaptive(const MatrixBuilder& builder, int k, double tol, std::size_t n0,
               std::size_t max_size = std::size_t{1} << 14);

// Inverse-iteration eigenvector at a converged eigenvalue estimate,
// normalized to unit 2-norm with the largest-magnitude entry positive.
std::vector<double> eigenvector(const SymmetricTridiagonal& T, double lambda);

// Same, for the pencil A - mu B.
std::vector<double> eigenvector_weighted(const SymmetricTridiagonal& A,
                                         const std::vector<double>& bdiag, double mu);

}  // namespace polarbound
