#include "als/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "als/error.hpp"

namespace als {

namespace {

struct Panel {
    double lo, mid, hi;
    double f_lo, f_mid, f_hi;
    double whole;
};

class Simpson {
public:
    Simpson(const std::function<double(double)>& f, const SimpsonOptions& opts) : f_(f), opts_(opts) {}

    double eval(double x) const {
        const double y = f_(x);
        if (!std::isfinite(y)) throw DomainError("quadrature: integrand is not finite");
        return y;
    }

    double recurse(const Panel& p, double abs_tol, int depth) const {
        const double lm = 0.5 * (p.lo + p.mid);
        const double rm = 0.5 * (p.mid + p.hi);
        const double f_lm = eval(lm);
        const double f_rm = eval(rm);
        const double left = (p.mid - p.lo) / 6.0 * (p.f_lo + 4.0 * f_lm + p.f_mid);
        const double right = (p.hi - p.mid) / 6.0 * (p.f_mid + 4.0 * f_rm + p.f_hi);
        const double refined = left + right;
        const double delta = refined - p.whole;

        const double tol = std::max(abs_tol, opts_.rel_tol * std::abs(refined));
        if (depth >= opts_.min_depth && std::abs(delta) <= 15.0 * tol) {
            return refined + delta / 15.0;
        }
        if (depth >= opts_.max_depth) {
            throw DomainError("quadrature: recursion depth exhausted (integrand diverges, gap collapse?)");
        }
        return recurse({p.lo, lm, p.mid, p.f_lo, f_lm, p.f_mid, left}, 0.5 * abs_tol, depth + 1) +
               recurse({p.mid, rm, p.hi, p.f_mid, f_rm, p.f_hi, right}, 0.5 * abs_tol, depth + 1);
    }

private:
    const std::function<double(double)>& f_;
    SimpsonOptions opts_;
};

}  // namespace

double integrate_adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  const SimpsonOptions& opts) {
    if (!(lo <= hi)) throw DomainError("quadrature: lo must not exceed hi");
    if (lo == hi) return 0.0;
    const Simpson simpson(f, opts);
    const double mid = 0.5 * (lo + hi);
    const double f_lo = simpson.eval(lo);
    const double f_mid = simpson.eval(mid);
    const double f_hi = simpson.eval(hi);
    const double whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
    return simpson.recurse({lo, mid, hi, f_lo, f_mid, f_hi, whole}, opts.abs_tol, 0);
}

double integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                           std::span<const double> breakpoints, const SimpsonOptions& opts) {
    if (!(lo <= hi)) throw DomainError("quadrature: lo must not exceed hi");
    std::vector<double> pts{lo};
    for (double b : breakpoints) {
        if (b > lo && b < hi) pts.push_back(b);
    }
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        total += integrate_adaptive_simpson(f, pts[i], pts[i + 1], opts);
    }
    return total;
}

}  // namespace als
