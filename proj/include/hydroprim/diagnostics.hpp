#pragma once

#include <array>
#include <string>
#include <vector>

#include "hydroprim/dynamics.hpp"

namespace hydroprim {

// One time-stamped row of norms, budget terms and estimate LHS quantities.
// grad/dz entries appear twice under the names used by the different estimate
// chains they feed; the values coincide.
struct DiagnosticsRecord {
    double time = 0.0;
    double l2_sq = 0.0;         // |u|^2
    double grad_sq = 0.0;       // |grad u|^2 (horizontal)
    double dz_sq = 0.0;         // |du/dz|^2
    double high_grad_sq = 0.0;  // |grad (I-P)u|^2
    double high_dz_sq = 0.0;
    double l6_prime = 0.0;      // |u'|_L6
    double grad_ubar_sq = 0.0;  // |grad ubar|^2 over M
    double dz_u_sq = 0.0;
    double grad_u_sq = 0.0;
    double mixed_sq = 0.0;      // |grad du/dz|^2
    double lap_sq = 0.0;        // |Lap u|^2
    double dzz_sq = 0.0;        // |d2u/dz2|^2
    double energy_residual = 0.0;
    double forcing_power = 0.0;

    static const std::vector<std::string>& column_names();
    std::vector<double> values() const;
};

// All entries spectral (Parseval) except the L6 norm, which uses padded-grid
// quadrature.  energy_residual and forcing_power are filled by the caller.
DiagnosticsRecord norms(const State& state, const FilterSpec& filter, DynamicsWorkspace& ws);

// 1/lambda_min over the grid's nonzero modes; equality attained on the
// minimizing mode.  |u|^2 <= C (|grad u|^2 + |du/dz|^2) for mean-zero fields.
double poincare_constant(const GridSpec& grid);

// Per-step energy-budget residual dE/dt - midpoint of (<F,u> - dissipation).
double energy_budget(const State& prev, const State& next, const ModelConfig& model,
                     const Forcing& forcing, double dt);

// ---------------------------------------------------------------------------
// Seeded random fields (probe ensembles, banded initial data).

struct EnsembleSpec {
    std::uint64_t seed = 12345;
    double spectrum_exponent = 1.5;  // |c| ~ (1 + |kappa|^2)^(-s)
    double amplitude = 1.0;
    int m_max = -1;  // horizontal band limit; -1 = dealias band
    int n_max = -1;  // vertical band limit; -1 = dealias band
};

// Random band-limited scalar with conjugate symmetry, zero mean, and the
// documented spectrum envelope.
SpectralField random_field(const GridSpec& grid, Parity parity, const EnsembleSpec& spec,
                           std::uint64_t stream);

// Random valid State: mean-zero, dealiased, divergence-free barotropic mode.
State random_state(const GridSpec& grid, const EnsembleSpec& spec, std::uint64_t stream);

PlaneField random_plane(const GridSpec& grid, const EnsembleSpec& spec, std::uint64_t stream);

// ---------------------------------------------------------------------------
// Inequality and identity probes.

struct ProbeReport {
    std::string id;
    int samples = 0;
    double max_ratio = 0.0;      // LHS / constant-free RHS
    std::string extremal;        // descriptor of the extremal sample
    bool constant_free = false;  // a1, a6: ratio must be <= 1 + 1e-10
};

// id in {a1, a2, a3, a4, a5, a6, vint}.  qfactor refines the quadrature grid
// (used for the resolution-doubling stability contract).
ProbeReport probe_inequality(const std::string& id, const GridSpec& grid,
                             const EnsembleSpec& spec, int count, int qfactor = 1);

struct IdentityReport {
    std::string id;
    double max_violation = 0.0;  // relative
    double tolerance = 0.0;
    bool pass = false;
};

// Evaluates every identity invoked in the estimates on a seeded ensemble:
// b skew-symmetry, b(u,u,u) = 0, weighted b(u',u',|u'|^4 u') = 0, Coriolis and
// pressure orthogonality, mean-free primes, averaged vertical diffusion,
// projection/averaging commutation.
std::vector<IdentityReport> probe_identities(const GridSpec& grid, const EnsembleSpec& spec,
                                             int count);

// Quadrature L^p norm of the pointwise magnitude of a CosZ pair.
double lp_norm_pair(const FieldPair& f, double p, Transforms& tr);
// Quadrature L^p norm of a scalar field.
double lp_norm(const SpectralField& f, double p, Transforms& tr);
// 2D quadrature L^p norm of a plane.
double lp_norm_plane(const PlaneField& f, double p, Transforms& tr);
// Spectral Sobolev norm |f|_{H^k} (Bessel weights (1 + |kappa|^2)^k).
double hk_norm(const SpectralField& f, int k);
double hk_norm_plane(const PlaneField& f, int k);

}  // namespace hydroprim
