#include "hydroprim/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

#include "hydroprim/diagnostics.hpp"

namespace hydroprim {

namespace {
// Williamson low-storage RK3.
constexpr double kA[3] = {0.0, -5.0 / 9.0, -153.0 / 128.0};
constexpr double kB[3] = {1.0 / 3.0, 15.0 / 16.0, 8.0 / 15.0};
// Stage-output times c' = (1/3, 3/4, 1); dc = increments between them.
constexpr double kDc[3] = {1.0 / 3.0, 3.0 / 4.0 - 1.0 / 3.0, 1.0 - 3.0 / 4.0};

constexpr double kBlowupFactor = 1e6;
}  // namespace

double cfl_dt(const State& state, DynamicsWorkspace& ws, double cfl_safety) {
    Transforms& tr = ws.transforms();
    PhysField& buf = ws.scratch(0);
    tr.inverse(state.u, buf);
    const double mu = buf.max_abs();
    tr.inverse(state.v, buf);
    const double mv = buf.max_abs();
    SpectralField div = dx(state.u);
    div += dy(state.v);
    tr.inverse(integral_z_to_0(div), buf);
    const double mw = buf.max_abs();

    const GridSpec& g = state.grid();
    const double dx_ = g.lx / tr.nxp();
    const double dy_ = g.ly / tr.nyp();
    const double dz_ = g.h / tr.nzp();
    double limit = std::numeric_limits<double>::infinity();
    if (mu > 0.0) limit = std::min(limit, dx_ / mu);
    if (mv > 0.0) limit = std::min(limit, dy_ / mv);
    if (mw > 0.0) limit = std::min(limit, dz_ / mw);
    return cfl_safety * limit;
}

Stepper::Stepper(const ModelConfig& model, const GridSpec& grid, const StepperConfig& cfg)
    : model_(model), cfg_(cfg), grid_(grid) {
    model_.validate();
    cfg_.validate();
    model_.filter.validate_against(grid_);
    lambda_.resize(grid_.num_modes());
    for (int n = 0; n < grid_.nz; ++n)
        for (int m2 = 0; m2 < grid_.ny; ++m2)
            for (int m1 = 0; m1 < grid_.nx; ++m1)
                lambda_[(static_cast<std::size_t>(n) * grid_.ny + m2) * grid_.nx + m1] =
                    viscous_symbol(model_, grid_, m1, m2, n);
    const int nstage = cfg_.scheme == Scheme::RK3IF ? 3 : 1;
    efac_.assign(nstage, std::vector<double>(lambda_.size()));
    for (int s = 0; s < nstage; ++s) {
        const double dc = cfg_.scheme == Scheme::RK3IF ? kDc[s] : 1.0;
        for (std::size_t i = 0; i < lambda_.size(); ++i)
            efac_[s][i] = std::exp(-lambda_[i] * dc * cfg_.dt);
    }
}

void Stepper::apply_factor(State& s, const std::vector<double>& e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
        s.u.data()[i] *= e[i];
        s.v.data()[i] *= e[i];
    }
}

void Stepper::check_cfl(DynamicsWorkspace& ws) {
    if (cfl_violated_) return;
    const GridSpec& g = grid_;
    double limit = std::numeric_limits<double>::infinity();
    if (ws.last_max_u > 0.0) limit = std::min(limit, g.lx / g.nxp() / ws.last_max_u);
    if (ws.last_max_v > 0.0) limit = std::min(limit, g.ly / g.nyp() / ws.last_max_v);
    if (ws.last_max_w > 0.0) limit = std::min(limit, g.h / g.nzp() / ws.last_max_w);
    if (cfg_.dt > cfg_.cfl_safety * limit) {
        cfl_violated_ = true;
        std::cerr << "hydroprim: warning: dt = " << cfg_.dt
                  << " exceeds advective CFL limit " << cfg_.cfl_safety * limit << "\n";
    }
}

State Stepper::step(const State& state, const Forcing& forcing, DynamicsWorkspace& ws) {
    State s = state;
    if (cfg_.scheme == Scheme::EulerIF) {
        FieldPair t = explicit_tendency(model_, s, forcing, ws);
        s.u.axpy(cfg_.dt, t.u);
        s.v.axpy(cfg_.dt, t.v);
        apply_factor(s, efac_[0]);
        s.time = state.time + cfg_.dt;
        check_cfl(ws);
        return s;
    }
    // q <- E_i (A_i q + dt F(u));  u <- E_i u + B_i q
    FieldPair q(grid_);
    for (int stage = 0; stage < 3; ++stage) {
        FieldPair t = explicit_tendency(model_, s, forcing, ws);
        q.u *= kA[stage];
        q.u.axpy(cfg_.dt, t.u);
        q.v *= kA[stage];
        q.v.axpy(cfg_.dt, t.v);
        const std::vector<double>& e = efac_[stage];
        for (std::size_t i = 0; i < e.size(); ++i) {
            q.u.data()[i] *= e[i];
            q.v.data()[i] *= e[i];
            s.u.data()[i] = e[i] * s.u.data()[i] + kB[stage] * q.u.data()[i];
            s.v.data()[i] = e[i] * s.v.data()[i] + kB[stage] * q.v.data()[i];
        }
        if (stage == 0) check_cfl(ws);
    }
    s.time = state.time + cfg_.dt;
    return s;
}

State run(const State& initial, const ModelConfig& model, const Forcing& forcing,
          const StepperConfig& cfg, const RunSinks& sinks, DynamicsWorkspace& ws) {
    cfg.validate();
    Stepper stepper(model, initial.grid(), cfg);

    State state = initial;
    const long nsteps = static_cast<long>(std::llround(cfg.t_end / cfg.dt));
    double init_linf = 0.0;
    {
        PhysField& buf = ws.scratch(0);
        ws.transforms().inverse(state.u, buf);
        init_linf = buf.max_abs();
        ws.transforms().inverse(state.v, buf);
        init_linf = std::max(init_linf, buf.max_abs());
    }

    if (sinks.on_record && sinks.record_every > 0)
        sinks.on_record(0, state, 0.0, forcing_power(forcing, state));
    if (sinks.on_snapshot && sinks.snapshot_every > 0) sinks.on_snapshot(0, state);

    for (long k = 1; k <= nsteps; ++k) {
        State next = stepper.step(state, forcing, ws);

        double coeff_max = 0.0;
        for (const cplx& c : next.u.data()) {
            const double a = std::abs(c);
            if (!std::isfinite(a)) coeff_max = std::numeric_limits<double>::infinity();
            coeff_max = std::max(coeff_max, a);
        }
        for (const cplx& c : next.v.data()) {
            const double a = std::abs(c);
            if (!std::isfinite(a)) coeff_max = std::numeric_limits<double>::infinity();
            coeff_max = std::max(coeff_max, a);
        }
        if (!std::isfinite(coeff_max))
            throw SimulationError("run: non-finite coefficients at t = " + std::to_string(next.time));
        const double linf = std::max({ws.last_max_u, ws.last_max_v});
        if (init_linf > 0.0 && linf > kBlowupFactor * init_linf)
            throw SimulationError("run: blow-up detected at t = " + std::to_string(next.time) +
                                  " (|u|_inf exceeded 1e6 x initial)");

        if (sinks.on_record && sinks.record_every > 0 && (k % sinks.record_every == 0 || k == nsteps)) {
            const double resid = energy_budget(state, next, model, forcing, cfg.dt);
            sinks.on_record(k, next, resid, forcing_power(forcing, next));
        }
        if (sinks.on_snapshot && sinks.snapshot_every > 0 &&
            (k % sinks.snapshot_every == 0 || k == nsteps))
            sinks.on_snapshot(k, next);

        state = std::move(next);
    }
    return state;
}

}  // namespace hydroprim
