#include "cavgrover/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "cavgrover/errors.hpp"

namespace cavgrover {

namespace {

// Dormand-Prince RK5(4)7M tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// 4th-order embedded weights (the 7th stage is the FSAL evaluation at y_new).
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

double error_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0,
                  const Eigen::VectorXcd& y1, double abs_tol, double rel_tol) {
    double acc = 0.0;
    const auto n = err.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double scale = abs_tol + rel_tol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double r = std::abs(err(i)) / scale;
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(n));
}

} // namespace

IntegratorStats integrate_adaptive(const OdeRhs& rhs, Eigen::VectorXcd& y, double t0, double t1,
                                   const IntegratorOptions& opts, double sample_dt,
                                   const SampleObserver& observer) {
    IntegratorStats stats;
    if (t1 < t0) {
        throw InvalidSizeError("integrate_adaptive requires t1 >= t0");
    }
    const bool sampling = observer && sample_dt > 0.0;
    if (sampling) observer(t0, y);
    if (t1 == t0) return stats;

    const auto n = y.size();
    Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);

    const double span = t1 - t0;
    double h = opts.initial_step > 0.0 ? opts.initial_step : span / 100.0;
    if (opts.max_step > 0.0) h = std::min(h, opts.max_step);

    // Output boundaries: the sample grid t0 + k*dt with the last grid point
    // merged into t1 when it falls within half an interval of it, so no
    // sliver steps arise from inexact division of the horizon.
    long sample_index = 1;
    auto next_boundary = [&]() -> double {
        if (!sampling) return t1;
        const double tk = t0 + sample_dt * static_cast<double>(sample_index);
        return (tk > t1 - 0.49 * sample_dt) ? t1 : tk;
    };

    rhs(t0, y, k1);
    const double h_floor = span * 1e-15;
    double t = t0;

    while (t < t1) {
        const double boundary = next_boundary();
        bool hit_boundary = false;
        double step = h;
        if (t + step >= boundary) {
            step = boundary - t;
            hit_boundary = true;
        }
        if (step <= h_floor) {
            throw IntegrationError("step size underflow in adaptive integrator", t, step);
        }

        ytmp = y + step * (a21 * k1);
        rhs(t + c2 * step, ytmp, k2);
        ytmp = y + step * (a31 * k1 + a32 * k2);
        rhs(t + c3 * step, ytmp, k3);
        ytmp = y + step * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * step, ytmp, k4);
        ytmp = y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * step, ytmp, k5);
        ytmp = y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + step, ytmp, k6);
        ynew = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + step, ynew, k7);
        err = ynew - (y + step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));

        const double enorm = error_norm(err, y, ynew, opts.abs_tol, opts.rel_tol);
        if (enorm <= 1.0) {
            ++stats.accepted;
            if (stats.accepted + stats.rejected > opts.max_steps) {
                throw IntegrationError("step budget exhausted", t, step);
            }
            y.swap(ynew);
            k1.swap(k7); // FSAL
            if (hit_boundary) {
                t = boundary;
                if (sampling) observer(boundary, y);
                if (boundary < t1) ++sample_index;
            } else {
                t += step;
            }
        } else {
            ++stats.rejected;
        }

        double factor = 0.9 * std::pow(std::max(enorm, 1e-10), -0.2);
        factor = std::clamp(factor, 0.2, 5.0);
        h = step * factor;
        if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
    }

    return stats;
}

} // namespace cavgrover
