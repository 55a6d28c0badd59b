#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace memchan {

/// Thrown when an iterative solver or adaptive quadrature exhausts its
/// budget before reaching the requested tolerance. The message carries the
/// bracket / error-estimate diagnostics at the point of failure.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Legendre quadrature of f on [a, b] with absolute
/// tolerance abs_tol. Panels are bisected until the local error estimate
/// (difference between one 15-point panel and its two halves) drops below
/// the panel's share of the tolerance. Throws NonConvergence if the
/// subdivision budget is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

/// Brent root finder on [a, b]; f(a) and f(b) must have opposite signs.
/// Converges to |b - a| <= xtol + machine slack around the root.
double find_root_brent(const std::function<double(double)>& f, double a, double b,
                       double xtol);

/// Solves budget(L) = target for a continuous strictly decreasing budget
/// with budget(0+) = +inf and budget(inf) = 0+. Starts from an initial
/// guess, expands the bracket by halving/doubling, then bisects until the
/// budget residual is within residual_tol or the bracket collapses to
/// machine precision (NonConvergence if the residual still exceeds the
/// tolerance at that point).
double solve_decreasing_for_target(const std::function<double(double)>& budget,
                                   double target, double initial_guess,
                                   double residual_tol);

}  // namespace memchan
