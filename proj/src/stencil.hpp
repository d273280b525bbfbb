#pragma once

// Finite-difference first derivatives on a closed interval [lo, hi].

namespace maxaccel::detail {

template <class F>
double central2(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Fourth order; falls back to fourth-order one-sided stencils when the
/// centered one would leave [lo, hi].
template <class F>
double derivative4(F&& f, double x, double h, double lo, double hi) {
    if (x - 2.0 * h >= lo && x + 2.0 * h <= hi) {
        return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
    }
    if (x - 4.0 * h >= lo) {
        return (25.0 * f(x) - 48.0 * f(x - h) + 36.0 * f(x - 2.0 * h) - 16.0 * f(x - 3.0 * h) +
                3.0 * f(x - 4.0 * h)) /
               (12.0 * h);
    }
    return (-25.0 * f(x) + 48.0 * f(x + h) - 36.0 * f(x + 2.0 * h) + 16.0 * f(x + 3.0 * h) -
            3.0 * f(x + 4.0 * h)) /
           (12.0 * h);
}

}  // namespace maxaccel::detail
