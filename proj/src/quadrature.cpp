#include "rfso/quadrature.hpp"
#include "rfso/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace rfso {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double lo, hi, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double resk = 0.0, resg = 0.0, resabs = 0.0;
    for (int j = 0; j < 8; ++j) {
        if (j == 7) {
            const double fc = f(c);
            resk += kWgk[7] * fc;
            resg += kWg[3] * fc;
            resabs += kWgk[7] * std::abs(fc);
            continue;
        }
        const double f1 = f(c - h * kXgk[j]);
        const double f2 = f(c + h * kXgk[j]);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    double err = std::abs(resk - resg) * h;
    // QUADPACK-style sharpening of the raw error estimate
    const double scale = resabs * h;
    if (scale > 0.0 && err > 0.0)
        err = scale * std::min(1.0, std::pow(200.0 * err / scale, 1.5));
    return {lo, hi, resk * h, err};
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double lo,
                     double hi, const QuadOptions& opt) {
    QuadResult res;
    if (!(lo < hi)) {
        res.converged = true;
        return res;
    }
    std::priority_queue<Interval> heap;
    Interval whole = gk15(f, lo, hi);
    res.evaluations = 15;
    double total = whole.value, toterr = whole.error;
    heap.push(whole);
    int used = 1;
    while (used < opt.max_intervals) {
        const double goal =
            std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (toterr <= goal || heap.empty()) break;
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) continue; // denormal width
        Interval a = gk15(f, worst.lo, mid);
        Interval b = gk15(f, mid, worst.hi);
        res.evaluations += 30;
        total += a.value + b.value - worst.value;
        toterr += a.error + b.error - worst.error;
        heap.push(a);
        heap.push(b);
        ++used;
    }
    res.value = total;
    res.abs_error = toterr;
    res.converged =
        toterr <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) ||
        toterr == 0.0;
    return res;
}

QuadResult integrate_positive_axis(const std::function<double(double)>& f,
                                   double scale, const QuadOptions& opt) {
    if (!(scale > 0.0)) scale = 1.0;
    const double u0 = std::log(scale);
    auto g = [&f](double u) {
        const double x = std::exp(u);
        const double fx = f(x);
        return std::isfinite(fx) ? fx * x : 0.0;
    };
    // expand the window in u until both tails are negligible relative to the
    // accumulated magnitude
    double lo = u0 - 4.0, hi = u0 + 4.0;
    QuadOptions piece = opt;
    piece.max_intervals = std::max(200, opt.max_intervals / 8);
    QuadResult core = integrate(g, lo, hi, piece);
    double total = core.value, toterr = core.abs_error;
    int evals = core.evaluations;
    const double step = 4.0;
    for (int side = 0; side < 2; ++side) {
        for (int k = 0; k < 64; ++k) {
            double a, b;
            if (side == 0) {
                a = lo - step;
                b = lo;
                lo = a;
            } else {
                a = hi;
                b = hi + step;
                hi = b;
            }
            QuadResult piece_res = integrate(g, a, b, piece);
            total += piece_res.value;
            toterr += piece_res.abs_error;
            evals += piece_res.evaluations;
            const double mag = std::abs(total);
            if (std::abs(piece_res.value) <=
                std::max(opt.abs_tol, 1e-3 * opt.rel_tol * mag) + 1e-300)
                break;
        }
    }
    QuadResult res;
    res.value = total;
    res.abs_error = toterr;
    res.evaluations = evals;
    res.converged =
        toterr <= std::max(opt.abs_tol, 4.0 * opt.rel_tol * std::abs(total)) ||
        total == 0.0;
    return res;
}

} // namespace rfso
