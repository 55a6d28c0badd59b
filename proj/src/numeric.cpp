#include "memchan/numeric.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace memchan {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1], positive half.
constexpr int kHalfNodes = 8;
constexpr double kNodes[kHalfNodes] = {
    0.0,
    0.20119409399743451,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.937273392400706,
    0.9879925180204854,
};
constexpr double kWeights[kHalfNodes] = {
    0.2025782419255609,
    0.19843148532711125,
    0.18616100001556188,
    0.16626920581699378,
    0.1395706779261539,
    0.10715922046717177,
    0.07036604748810807,
    0.030753241996118647,
};

double gauss15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = kWeights[0] * f(mid);
    for (int i = 1; i < kHalfNodes; ++i) {
        sum += kWeights[i] * (f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]));
    }
    return half * sum;
}

struct PanelBudget {
    long remaining;
};

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       double whole, double tol, int depth, PanelBudget& budget) {
    const double mid = 0.5 * (a + b);
    const double left = gauss15(f, a, mid);
    const double right = gauss15(f, mid, b);
    const double refined = left + right;
    const double err = std::abs(refined - whole);
    if (err <= tol || b - a <= std::abs(mid) * 4e-16) {
        return refined;
    }
    if (depth > 60 || --budget.remaining <= 0) {
        std::ostringstream msg;
        msg << "adaptive quadrature: panel [" << a << ", " << b
            << "] error estimate " << err << " exceeds local tolerance " << tol
            << " with subdivision budget exhausted";
        throw NonConvergence(msg.str());
    }
    return integrate_panel(f, a, mid, left, 0.5 * tol, depth + 1, budget) +
           integrate_panel(f, mid, b, right, 0.5 * tol, depth + 1, budget);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
    if (!(abs_tol > 0)) throw std::invalid_argument("integrate_adaptive: abs_tol must be > 0");
    if (a == b) return 0.0;
    PanelBudget budget{1 << 18};
    return integrate_panel(f, a, b, gauss15(f, a, b), abs_tol, 0, budget);
}

double find_root_brent(const std::function<double(double)>& f, double a, double b,
                       double xtol) {
    const double eps = std::numeric_limits<double>::epsilon();
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) {
        std::ostringstream msg;
        msg << "find_root_brent: no sign change on [" << a << ", " << b << "], f = ("
            << fa << ", " << fb << ")";
        throw std::invalid_argument(msg.str());
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double xm = 0.5 * (c - b);
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * xtol;
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) < tol1 || std::abs(fa) <= std::abs(fb)) {
            d = xm;
            e = d;
        } else {
            double p, q;
            const double s = fb / fa;
            if (a != c) {
                q = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            } else {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
    }
    throw NonConvergence("find_root_brent: iteration limit reached");
}

double solve_decreasing_for_target(const std::function<double(double)>& budget,
                                   double target, double initial_guess,
                                   double residual_tol) {
    double lo = initial_guess > 0 ? initial_guess : 1.0;
    double hi = lo;
    // budget is decreasing: move lo down until budget(lo) >= target
    int guard = 0;
    while (budget(lo) < target) {
        lo *= 0.5;
        if (++guard > 1200 || lo < 1e-300) {
            throw NonConvergence("lagrange solve: lower bracket expansion failed");
        }
    }
    guard = 0;
    while (budget(hi) > target) {
        hi *= 2.0;
        if (++guard > 1200 || hi > 1e300) {
            throw NonConvergence("lagrange solve: upper bracket expansion failed");
        }
    }
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 240; ++iter) {
        mid = 0.5 * (lo + hi);
        const double value = budget(mid);
        if (std::abs(value - target) <= residual_tol) return mid;
        if (value > target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4e-16 * hi) break;
    }
    const double residual = std::abs(budget(mid) - target);
    if (residual <= residual_tol) return mid;
    std::ostringstream msg;
    msg << "lagrange solve: bracket [" << lo << ", " << hi
        << "] collapsed with budget residual " << residual << " > tolerance "
        << residual_tol;
    throw NonConvergence(msg.str());
}

}  // namespace memchan
