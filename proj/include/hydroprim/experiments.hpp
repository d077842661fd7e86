#pragma once

#include "hydroprim/config.hpp"

namespace hydroprim {

// Large-scale steady solution of the inviscid equations:
//   psi = a sin(4 pi x / Lx) cos(2 pi y / Ly),  u = perp-grad psi,  w = 0.
// z-independent and divergence-free by construction; its modes are (2, 1) in
// scaled wavenumbers.  Throws if the grid does not resolve them in the
// dealiased band.
State exact_solution_state(const GridSpec& grid, double amplitude = 1.0);

struct ExactCheckResult {
    double drift = 0.0;           // relative drift at dt
    double drift_half = 0.0;      // relative drift at dt/2
    double drift_negative = 0.0;  // drift with the damping filter (1,1)
    double c_time = 0.0;          // drift / dt^2 calibration
    double tol = 0.0;             // drift threshold applied at dt
    bool pass_drift = false;      // drift <= tol
    bool pass_order = false;      // drift / drift_half >= 2^2.5
    bool pass_negative = false;   // drift_negative >= 100 x drift
    bool pass = false;
};

// Runs the Remark-2 state under PartialViscosity at dt and dt/2, plus a
// negative control with filter (1,1) that damps the solution's modes.
// drift_tol is the absolute threshold on the dt run.
ExactCheckResult run_exact_check(const RunConfig& cfg, double drift_tol = 1e-6);

struct ConvergencePoint {
    double mu_delta = 0.0;
    double nu_delta = 0.0;
    double err_l2_sup = 0.0;   // sup over sampled times of |u^d - u|_L2
    double err_h1_l2t = 0.0;   // (int |u^d - u|_H1^2 dt)^(1/2)
};

struct ConvergenceResult {
    std::vector<ConvergencePoint> points;  // sorted by decreasing mu_delta + nu_delta
    double slope = 0.0;                    // log-log fit of err_l2_sup vs (mu_delta + nu_delta)
    std::string baseline;                  // reference-run descriptor
    bool monotone = false;
    bool pass_envelope = false;  // err <= C_fit sqrt(mu_delta + nu_delta), C_fit at coarsest
    bool pass_slope = false;     // slope >= 0.45
    bool pass = false;
};

// Baseline Classical run (mu_delta = nu_delta = 0) against SpectralEddy runs
// with mu_delta = nu_delta from sweep.mu_delta, shared initial data/forcing.
// Sweep members run concurrently, capped by HYDROPRIM_THREADS.
ConvergenceResult run_convergence_study(const RunConfig& cfg);

struct SplitConsistencyResult {
    double max_dev_barotropic = 0.0;  // relative
    double max_dev_baroclinic = 0.0;
    int steps = 0;
    bool pass = false;
};

// Checks avg(tendency) == barotropic_tendency and deviation == baroclinic
// tendency along a short trajectory; tolerance 1e-10 relative.
SplitConsistencyResult run_split_consistency(const RunConfig& cfg, int steps = 20);

// HYDROPRIM_THREADS (positive integer) or hardware concurrency.
int max_threads();

}  // namespace hydroprim
