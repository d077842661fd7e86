#pragma once

#include <string>

#include "hydroprim/timestepper.hpp"

namespace hydroprim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class InitKind { Remark2, RandomLow, RandomBanded, File };
enum class ForcingKind { Zero, Modal };

// Flat `section.key = value` run configuration with `#` comments.  Unknown
// keys, type mismatches, and constraint violations are hard errors with line
// numbers.  Defaults are the desk-scale setup.
struct RunConfig {
    GridSpec grid{};  // 32 x 32 x 9 on (0,2pi)^2 x (-pi, 0)

    ModelKind model_kind = ModelKind::Classical;
    double mu = 1e-2, nu = 1e-2;
    double mu_delta = 0.0, nu_delta = 0.0;
    double f = 1.0;
    double rho0 = 1000.0;
    double g = 9.81;

    FilterSpec filter{4, 2};

    double dt = 1e-3;
    double t_end = 1.0;
    Scheme scheme = Scheme::RK3IF;

    InitKind init_kind = InitKind::RandomBanded;
    std::uint64_t seed = 12345;
    std::string init_path;  // for init.kind = file

    ForcingKind forcing_kind = ForcingKind::Zero;

    std::string output_dir = "out";
    long snapshot_every = 0;  // steps, 0 = disabled
    long csv_every = 1;       // steps, 0 = disabled

    std::vector<double> sweep_mu_delta;  // `converge` sweep points

    ModelConfig model() const {
        ModelConfig m;
        m.kind = model_kind;
        m.mu = mu;
        m.nu = nu;
        m.mu_delta = mu_delta;
        m.nu_delta = nu_delta;
        m.f = f;
        m.rho0 = rho0;
        m.g = g;
        m.filter = filter;
        return m;
    }
    StepperConfig stepper() const {
        StepperConfig s;
        s.dt = dt;
        s.t_end = t_end;
        s.scheme = scheme;
        return s;
    }
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

// Build the initial state / forcing described by the config.
State make_initial_state(const RunConfig& cfg);
Forcing make_forcing(const RunConfig& cfg);

}  // namespace hydroprim
