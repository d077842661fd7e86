#pragma once

#include "hydroprim/transforms.hpp"

namespace hydroprim {

// Prognostic horizontal velocity u = (u, v), CosZ parity, plus simulation
// time.  Valid states are real (conjugate-symmetric), have zero average over
// the domain (coefficient (0,0,0) = 0), and a divergence-free barotropic mode.
struct State {
    SpectralField u;
    SpectralField v;
    double time = 0.0;

    State() = default;
    explicit State(const GridSpec& grid, double t = 0.0)
        : u(grid, Parity::CosZ), v(grid, Parity::CosZ), time(t) {}

    const GridSpec& grid() const { return u.grid(); }
};

// Barotropic (vertical-average) and baroclinic (deviation) decomposition.
struct ModeSplit {
    PlaneField ubar, vbar;
    SpectralField uprime, vprime;
};

// Hydrostatic pressure p(x,y,z) = p0(x,y) - rho0 g z, exact affine-in-z.
struct HydrostaticPressure {
    PlaneField p0;
    double rho0 = 0.0;
    double g = 0.0;

    // dp/dz + rho0 g = 0 identically for this representation.
    double hydrostatic_residual() const { return 0.0; }
    PlaneField at_z(double z) const {
        PlaneField p = p0;
        p.at(0, 0) += -rho0 * g * z;
        return p;
    }
};

// Diagnostic variables derived from a State.
struct DiagnosedFields {
    SpectralField w;  // SinZ, vanishes at z = 0, -H
    HydrostaticPressure p;
};

// w = div int_z^0 u dxi.  For states with a divergence-free barotropic mode
// the linear-in-z part cancels to round-off; it is kept on the result so the
// cancellation is observable.
SpectralField diagnose_w(const State& state);

// ubar = vertical average (the n = 0 cosine plane), uprime = u - ubar.
// Reconstruction is exact and the vertical mean of the primes is zero.
ModeSplit split_modes(const State& state);

// Replace the barotropic (n = 0) part of the pair by its divergence-free
// Helmholtz projection; returns the removed scalar potential as p0/rho0
// (gradient part = grad of the returned plane).  Baroclinic part untouched.
PlaneField leray_project_barotropic(SpectralField& u, SpectralField& v);

HydrostaticPressure diagnose_pressure(const PlaneField& p0, double rho0, double g);

// Zero the (0,0,0) coefficient of both components; idempotent.
State remove_mean(State state);

// Barotropic divergence magnitude |div ubar| (L2 over M) of a pair.
double barotropic_divergence_l2(const SpectralField& u, const SpectralField& v);

// Broadcast a plane to the n = 0 plane of a 3D CosZ field.
SpectralField broadcast_plane(const PlaneField& p);
// The n = 0 plane of a CosZ field (its vertical average).
PlaneField vertical_average(const SpectralField& f);

}  // namespace hydroprim
