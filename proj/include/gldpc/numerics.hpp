#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace gldpc {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

/// ln C(n, k); -inf outside 0 <= k <= n.
inline double lchoose(double n, double k) {
    if (k < 0 || k > n) return neg_inf;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Adaptive Simpson quadrature with absolute tolerance.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int depth = 40) {
    auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    struct Rec {
        double a, b, fa, fm, fb, whole;
        int depth;
    };
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(a, b, fa, fm, fb);

    // explicit stack to avoid deep recursion
    std::vector<Rec> stack{{a, b, fa, fm, fb, whole, depth}};
    double total = 0.0;
    while (!stack.empty()) {
        Rec r = stack.back();
        stack.pop_back();
        double m = 0.5 * (r.a + r.b);
        double lm = 0.5 * (r.a + m), rm = 0.5 * (m + r.b);
        double flm = f(lm), frm = f(rm);
        double left = simpson(r.a, m, r.fa, flm, r.fm);
        double right = simpson(m, r.b, r.fm, frm, r.fb);
        double delta = left + right - r.whole;
        if (r.depth <= 0 || std::abs(delta) <= 15.0 * tol) {
            total += left + right + delta / 15.0;
        } else {
            stack.push_back({r.a, m, r.fa, flm, r.fm, left, r.depth - 1});
            stack.push_back({m, r.b, r.fm, frm, r.fb, right, r.depth - 1});
        }
    }
    return total;
}

/// Golden-section minimization of a unimodal function on [a, b].
template <typename F>
double golden_min(F&& f, double a, double b, double xtol) {
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace gldpc
