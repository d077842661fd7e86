#pragma once

#include "hydroprim/fields.hpp"

namespace hydroprim {

enum class ModelKind { Classical, PartialViscosity, SpectralEddy };

// Physical parameters and filter cutoffs for the three model kinds:
//   Classical:        mu Lap u + nu d2/dz2 u on all modes, no eddy terms
//   PartialViscosity: mu, nu act on (I - P_{M,N}) u only
//   SpectralEddy:     classical viscosity plus mu_delta, nu_delta on (I - P) u
struct ModelConfig {
    ModelKind kind = ModelKind::Classical;
    double mu = 1e-2;
    double nu = 1e-2;
    double mu_delta = 0.0;
    double nu_delta = 0.0;
    double f = 1.0;       // Coriolis parameter (f-plane)
    double rho0 = 1000.0;
    double g = 9.81;
    FilterSpec filter{4, 2};

    void validate() const {
        if (mu < 0.0 || nu < 0.0 || mu_delta < 0.0 || nu_delta < 0.0)
            throw std::invalid_argument("ModelConfig: viscosities must be nonnegative");
        if (kind != ModelKind::SpectralEddy && (mu_delta != 0.0 || nu_delta != 0.0))
            throw std::invalid_argument("ModelConfig: eddy viscosities require kind = spectral_eddy");
        if (!(rho0 > 0.0))
            throw std::invalid_argument("ModelConfig: rho0 must be positive");
    }
};

struct FieldPair {
    SpectralField u, v;

    FieldPair() = default;
    explicit FieldPair(const GridSpec& grid)
        : u(grid, Parity::CosZ), v(grid, Parity::CosZ) {}
    FieldPair(SpectralField uu, SpectralField vv) : u(std::move(uu)), v(std::move(vv)) {}
};

struct PlanePair {
    PlaneField u, v;
};

// Steady mean-zero volume forcing.
struct Forcing {
    FieldPair f;
    bool zero = true;

    static Forcing none(const GridSpec& grid) { return Forcing{FieldPair(grid), true}; }
    static Forcing of(FieldPair pair) { return Forcing{std::move(pair), false}; }
};

// Scratch buffers + transforms for pseudo-spectral tendency evaluation.  One
// workspace per concurrently-running simulation.
class DynamicsWorkspace {
  public:
    explicit DynamicsWorkspace(const GridSpec& grid, int qfactor = 1)
        : tr_(grid, qfactor) {}

    Transforms& transforms() { return tr_; }
    const GridSpec& grid() const { return tr_.grid(); }

    // Grid max speeds seen by the most recent advection evaluation.
    double last_max_u = 0.0;
    double last_max_v = 0.0;
    double last_max_w = 0.0;

    PhysField& scratch(int i);

  private:
    Transforms tr_;
    std::vector<PhysField> bufs_;
};

// Per-mode dissipation rate lambda >= 0 of the viscous operator (slot indices).
double viscous_symbol(const ModelConfig& model, const GridSpec& grid, int m1, int m2, int n);

// f k x u = (-f v, f u); enters the momentum equation with a minus sign.
FieldPair coriolis_tendency(const State& state, double f);

// (u.grad)u + w(u) du/dz, evaluated pseudo-spectrally on the padded grid and
// dealiased (2/3 rule).  Requires a dealiased state.
FieldPair advection_tendency(const State& state, DynamicsWorkspace& ws);

// Trilinear advection pairing b(a, b, c) = <(a.grad)b + w(a) db/dz, c> by
// padded-grid quadrature.  usharp may be any CosZ pair.
double trilinear_b(const FieldPair& advecting, const FieldPair& advected,
                   const FieldPair& usharp, DynamicsWorkspace& ws);

// b(up, up, |up|^4 up) with the weight formed pointwise on the workspace grid
// (use a qfactor >= 2 workspace to keep the quadrature aliasing small).
double trilinear_b_weighted(const FieldPair& uprime, DynamicsWorkspace& ws);

// Full tendency of the closed equation:
//   -advection - coriolis - grad(p0)/rho0 + viscous + forcing,
// with the pressure gradient realized by the barotropic Leray projection of
// the assembled explicit part.  Optionally returns p0/rho0.
FieldPair tendency(const ModelConfig& model, const State& state, const Forcing& forcing,
                   DynamicsWorkspace& ws, PlaneField* p0_over_rho0 = nullptr);

// Explicit part only (advection + Coriolis + forcing, projected); the viscous
// symbol is handled exactly by the integrating factor in the time stepper.
FieldPair explicit_tendency(const ModelConfig& model, const State& state, const Forcing& forcing,
                            DynamicsWorkspace& ws, PlaneField* p0_over_rho0 = nullptr);

// Averaged (barotropic) and deviation (baroclinic) tendencies; cross-validation
// surface for the closed equation.
PlanePair barotropic_tendency(const ModeSplit& split, const ModelConfig& model,
                              const Forcing& forcing, DynamicsWorkspace& ws,
                              PlaneField* p0_over_rho0 = nullptr);
FieldPair baroclinic_tendency(const ModeSplit& split, const ModelConfig& model,
                              const Forcing& forcing, DynamicsWorkspace& ws);

// sum over modes of lambda(m,n) w(m,n) |u_hat|^2  (viscous energy drain).
double dissipation_rate(const ModelConfig& model, const State& state);
// <F, u>.
double forcing_power(const Forcing& forcing, const State& state);

// Apply the viscous symbol: out -= lambda .* field (per mode), both components.
void add_viscous_tendency(const ModelConfig& model, const State& state, FieldPair& out);

PlaneField leray_project_plane(PlaneField& u, PlaneField& v);

}  // namespace hydroprim
