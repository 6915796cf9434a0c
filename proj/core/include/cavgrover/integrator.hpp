#pragma once

#include <Eigen/Dense>
#include <functional>

namespace cavgrover {

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;       // 0 = unlimited
    double initial_step = 0.0;   // 0 = derive from the interval
    long max_steps = 50'000'000;
};

struct IntegratorStats {
    long accepted = 0;
    long rejected = 0;
};

/// d/dt y = f(t, y), written into dydt. dydt is pre-sized to y.size().
using OdeRhs = std::function<void(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt)>;

/// Called after every accepted step that lands on a sample time.
using SampleObserver = std::function<void(double t, const Eigen::VectorXcd& y)>;

/// Adaptive Dormand-Prince 5(4) propagation of y from t0 to t1 in place.
/// When sample_dt > 0, steps are clipped so the observer fires exactly at
/// t0, t0 + sample_dt, ..., and at t1. Throws IntegrationError on step-size
/// underflow.
IntegratorStats integrate_adaptive(const OdeRhs& rhs, Eigen::VectorXcd& y, double t0, double t1,
                                   const IntegratorOptions& opts = {}, double sample_dt = 0.0,
                                   const SampleObserver& observer = nullptr);

} // namespace cavgrover
