#pragma once

#include <functional>

#include "hydroprim/dynamics.hpp"

namespace hydroprim {

enum class Scheme { RK3IF, EulerIF };

struct StepperConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::RK3IF;
    double t_end = 1.0;
    double cfl_safety = 0.9;

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("StepperConfig: dt must be positive");
        if (t_end < 0.0) throw std::invalid_argument("StepperConfig: t_end must be nonnegative");
        if (!(cfl_safety > 0.0) || cfl_safety > 1.0)
            throw std::invalid_argument("StepperConfig: cfl_safety must be in (0,1]");
    }
};

// Raised when a run blows up or produces non-finite coefficients.
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Advective CFL limit from the most recent grid speeds; +inf for a state at
// rest (caller caps at the configured dt).
double cfl_dt(const State& state, DynamicsWorkspace& ws, double cfl_safety = 1.0);

// Explicit low-storage RK3 (Williamson) for advection + Coriolis + forcing
// with the pressure projection inside every stage; the diagonal viscous
// symbol integrates exactly via per-mode factors exp(-lambda dc dt).
class Stepper {
  public:
    Stepper(const ModelConfig& model, const GridSpec& grid, const StepperConfig& cfg);

    State step(const State& state, const Forcing& forcing, DynamicsWorkspace& ws);

    bool cfl_violated() const { return cfl_violated_; }
    const ModelConfig& model() const { return model_; }
    const StepperConfig& config() const { return cfg_; }

  private:
    void apply_factor(State& s, const std::vector<double>& e) const;
    void check_cfl(DynamicsWorkspace& ws);

    ModelConfig model_;
    StepperConfig cfg_;
    GridSpec grid_;
    std::vector<double> lambda_;              // viscous symbol per mode
    std::vector<std::vector<double>> efac_;   // exp(-lambda dc_i dt) per stage
    bool cfl_violated_ = false;
};

// Per-step sinks; either may be empty.
struct RunSinks {
    // called with (step index, state, per-step energy-budget residual,
    // forcing power at the new state)
    std::function<void(long, const State&, double, double)> on_record;
    std::function<void(long, const State&)> on_snapshot;
    long record_every = 0;    // steps; 0 disables
    long snapshot_every = 0;  // steps; 0 disables
};

// Advance from `initial` to t_end in whole dt steps.  Deterministic given the
// inputs; aborts via SimulationError on blow-up or non-finite coefficients.
State run(const State& initial, const ModelConfig& model, const Forcing& forcing,
          const StepperConfig& cfg, const RunSinks& sinks, DynamicsWorkspace& ws);

}  // namespace hydroprim
