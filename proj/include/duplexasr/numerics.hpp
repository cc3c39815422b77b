#pragma once

#include <functional>
#include <string>
#include <vector>

namespace duplexasr {

struct NewtonConfig {
    double alpha = 0.01;      // Armijo constant, in (0, 0.5)
    double beta = 0.5;        // backtracking shrink factor, in (0, 1)
    double tol_delta = 1e-8;  // residual tolerance: stop when sum f_i^2 < delta^2
    int max_iters = 100;

    void validate() const;
};

struct SolverReport {
    bool converged = false;
    int iterations = 0;
    double final_residual = 0.0;  // l2 norm of the residual vector
    std::string notes;
};

using VectorFn = std::function<std::vector<double>(const std::vector<double>&)>;
// Row-major n x n Jacobian of the residual vector.
using JacobianFn = std::function<std::vector<double>(const std::vector<double>&)>;
// Optional feasibility projection applied after each accepted step.
using ProjectFn = std::function<void(std::vector<double>&)>;

struct NewtonResult {
    std::vector<double> x;
    SolverReport report;
};

/// Damped Newton root finder: solves the linearized system for the step, then
/// backtracks t <- beta*t under the Armijo condition on the squared-residual
/// merit. t is reset to 1 at every outer iteration (a deliberate change from
/// the once-per-run step bookkeeping in some write-ups, which can stall).
/// Throws std::runtime_error with a condition diagnostic on a singular
/// linearized system; reports converged=false with the best iterate on
/// non-convergence.
NewtonResult newton_backtracking(const VectorFn& residuals, const JacobianFn& jacobian,
                                 std::vector<double> x0, const NewtonConfig& cfg,
                                 const ProjectFn& project = {});

/// Bisection for a monotone g with a sign change on [lo, hi]. Stops when
/// |g| < tol or the interval width hits the machine-relative floor. Throws
/// std::invalid_argument when g(lo) and g(hi) have the same sign, telling the
/// caller to expand the bracket.
double bisection(const std::function<double(double)>& g, double lo, double hi, double tol);

struct GridPoint {
    double x = 0.0;
    double value = 0.0;       // objective (or |residual|) at x
    std::size_t evaluations = 0;
};

/// Scans a, a+step, ..., b and returns the point minimizing f. Near-ties
/// (within ~1e-12 relative) keep the smaller abscissa, so the result is
/// insensitive to last-ulp noise and to the scan direction.
GridPoint grid_search_min(const std::function<double(double)>& f, double a, double b,
                          double step);

/// Central finite differences, (f(x + h e_i) - f(x - h e_i)) / (2h).
std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x,
    double h);

}  // namespace duplexasr
