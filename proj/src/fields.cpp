#include "hydroprim/fields.hpp"

namespace hydroprim {

SpectralField diagnose_w(const State& state) {
    SpectralField div = dx(state.u);
    div += dy(state.v);
    return integral_z_to_0(div);
}

ModeSplit split_modes(const State& state) {
    ModeSplit s;
    s.ubar = vertical_average(state.u);
    s.vbar = vertical_average(state.v);
    s.uprime = state.u;
    s.vprime = state.v;
    const GridSpec& g = state.grid();
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1) {
            s.uprime.at(m1, m2, 0) = cplx{0.0, 0.0};
            s.vprime.at(m1, m2, 0) = cplx{0.0, 0.0};
        }
    return s;
}

PlaneField leray_project_barotropic(SpectralField& u, SpectralField& v) {
    const GridSpec& g = u.grid();
    u.check_compatible(v);
    PlaneField q0(g);
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1) {
            if (m1 == 0 && m2 == 0) continue;
            const double kx = g.kx(m1), ky = g.ky(m2);
            const double k2 = kx * kx + ky * ky;
            const cplx du = u.at(m1, m2, 0), dv = v.at(m1, m2, 0);
            const cplx proj = (kx * du + ky * dv) / k2;
            u.at(m1, m2, 0) = du - kx * proj;
            v.at(m1, m2, 0) = dv - ky * proj;
            // Removed part is grad(q0): i k q0_hat = k proj  =>  q0_hat = -i proj.
            q0.at(m1, m2) = cplx{0.0, -1.0} * proj;
        }
    return q0;
}

HydrostaticPressure diagnose_pressure(const PlaneField& p0, double rho0, double g) {
    return HydrostaticPressure{p0, rho0, g};
}

State remove_mean(State state) {
    state.u.at(0, 0, 0) = cplx{0.0, 0.0};
    state.v.at(0, 0, 0) = cplx{0.0, 0.0};
    return state;
}

double barotropic_divergence_l2(const SpectralField& u, const SpectralField& v) {
    const GridSpec& g = u.grid();
    PlaneField div(g);
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1)
            div.at(m1, m2) = cplx{0.0, g.kx(m1)} * u.at(m1, m2, 0) +
                             cplx{0.0, g.ky(m2)} * v.at(m1, m2, 0);
    return std::sqrt(l2_sq_plane(div));
}

SpectralField broadcast_plane(const PlaneField& p) {
    SpectralField out(p.grid(), Parity::CosZ);
    const GridSpec& g = p.grid();
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1)
            out.at(m1, m2, 0) = p.at(m1, m2);
    return out;
}

PlaneField vertical_average(const SpectralField& f) {
    if (f.parity() != Parity::CosZ)
        throw std::invalid_argument("vertical_average: requires CosZ parity");
    const GridSpec& g = f.grid();
    PlaneField out(g);
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1)
            out.at(m1, m2) = f.at(m1, m2, 0);
    return out;
}

}  // namespace hydroprim
