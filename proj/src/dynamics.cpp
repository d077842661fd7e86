#include "hydroprim/dynamics.hpp"

#include <string>

namespace hydroprim {

PhysField& DynamicsWorkspace::scratch(int i) {
    while (static_cast<int>(bufs_.size()) <= i)
        bufs_.emplace_back(tr_.nxp(), tr_.nyp(), tr_.nzp());
    return bufs_[i];
}

double viscous_symbol(const ModelConfig& model, const GridSpec& grid, int m1, int m2, int n) {
    const double kx = grid.kx(m1), ky = grid.ky(m2), kz = grid.kz(n);
    const double kh2 = kx * kx + ky * ky;
    const double kv2 = kz * kz;
    const double classical = model.mu * kh2 + model.nu * kv2;
    const bool retained = model.filter.retains(grid.freq_x(m1), grid.freq_y(m2), n);
    switch (model.kind) {
        case ModelKind::Classical:
            return classical;
        case ModelKind::PartialViscosity:
            return retained ? 0.0 : classical;
        case ModelKind::SpectralEddy:
            return classical + (retained ? 0.0 : model.mu_delta * kh2 + model.nu_delta * kv2);
    }
    return 0.0;
}

FieldPair coriolis_tendency(const State& state, double f) {
    FieldPair out(state.grid());
    out.u = state.v;
    out.u *= -f;
    out.v = state.u;
    out.v *= f;
    return out;
}

namespace {

void check_dealiased(const SpectralField& f, const char* who) {
    const GridSpec& g = f.grid();
    for (int n = 0; n < g.nz; ++n)
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                if (!in_dealias_band(g, g.freq_x(m1), g.freq_y(m2), n) &&
                    f.at(m1, m2, n) != cplx{0.0, 0.0})
                    throw std::invalid_argument(std::string(who) + ": field not dealiased");
}

// Physical-grid evaluation of (a.grad)b + w(a) db/dz into (out_u, out_v).
// Records max grid speeds of the advecting pair on the workspace.
void eval_advection_grid(const FieldPair& a, const FieldPair& b, DynamicsWorkspace& ws,
                         PhysField& out_u, PhysField& out_v) {
    Transforms& tr = ws.transforms();

    SpectralField div = dx(a.u);
    div += dy(a.v);
    const SpectralField w_spec = integral_z_to_0(div);

    PhysField& ua = ws.scratch(0);
    PhysField& va = ws.scratch(1);
    PhysField& wa = ws.scratch(2);
    PhysField& gx = ws.scratch(3);
    PhysField& gy = ws.scratch(4);
    PhysField& gz = ws.scratch(5);

    tr.inverse(a.u, ua);
    tr.inverse(a.v, va);
    tr.inverse(w_spec, wa);
    ws.last_max_u = ua.max_abs();
    ws.last_max_v = va.max_abs();
    ws.last_max_w = wa.max_abs();

    const std::size_t total = ua.data().size();
    tr.inverse(dx(b.u), gx);
    tr.inverse(dy(b.u), gy);
    tr.inverse(dz(b.u), gz);
    for (std::size_t p = 0; p < total; ++p)
        out_u.data()[p] = ua.data()[p] * gx.data()[p] + va.data()[p] * gy.data()[p] +
                          wa.data()[p] * gz.data()[p];

    tr.inverse(dx(b.v), gx);
    tr.inverse(dy(b.v), gy);
    tr.inverse(dz(b.v), gz);
    for (std::size_t p = 0; p < total; ++p)
        out_v.data()[p] = ua.data()[p] * gx.data()[p] + va.data()[p] * gy.data()[p] +
                          wa.data()[p] * gz.data()[p];
}

}  // namespace

FieldPair advection_tendency(const State& state, DynamicsWorkspace& ws) {
    check_dealiased(state.u, "advection_tendency");
    check_dealiased(state.v, "advection_tendency");
    Transforms& tr = ws.transforms();
    PhysField& pu = ws.scratch(6);
    PhysField& pv = ws.scratch(7);
    const FieldPair pair{state.u, state.v};
    eval_advection_grid(pair, pair, ws, pu, pv);
    return FieldPair{dealias(tr.forward(pu, Parity::CosZ)), dealias(tr.forward(pv, Parity::CosZ))};
}

double trilinear_b(const FieldPair& advecting, const FieldPair& advected,
                   const FieldPair& usharp, DynamicsWorkspace& ws) {
    check_dealiased(advecting.u, "trilinear_b");
    check_dealiased(advecting.v, "trilinear_b");
    check_dealiased(advected.u, "trilinear_b");
    check_dealiased(advected.v, "trilinear_b");
    Transforms& tr = ws.transforms();
    PhysField& pu = ws.scratch(6);
    PhysField& pv = ws.scratch(7);
    eval_advection_grid(advecting, advected, ws, pu, pv);
    PhysField& su = ws.scratch(8);
    PhysField& sv = ws.scratch(9);
    tr.inverse(usharp.u, su);
    tr.inverse(usharp.v, sv);
    const double wq = tr.quad_weight();
    double acc = 0.0;
    for (std::size_t p = 0; p < pu.data().size(); ++p)
        acc += pu.data()[p] * su.data()[p] + pv.data()[p] * sv.data()[p];
    return wq * acc;
}

double trilinear_b_weighted(const FieldPair& uprime, DynamicsWorkspace& ws) {
    Transforms& tr = ws.transforms();
    PhysField& pu = ws.scratch(6);
    PhysField& pv = ws.scratch(7);
    eval_advection_grid(uprime, uprime, ws, pu, pv);
    PhysField& su = ws.scratch(8);
    PhysField& sv = ws.scratch(9);
    tr.inverse(uprime.u, su);
    tr.inverse(uprime.v, sv);
    const double wq = tr.quad_weight();
    double acc = 0.0;
    for (std::size_t p = 0; p < pu.data().size(); ++p) {
        const double uu = su.data()[p], vv = sv.data()[p];
        const double m2 = uu * uu + vv * vv;
        const double wgt = m2 * m2;  // |u'|^4 pointwise
        acc += wgt * (pu.data()[p] * uu + pv.data()[p] * vv);
    }
    return wq * acc;
}

PlaneField leray_project_plane(PlaneField& u, PlaneField& v) {
    const GridSpec& g = u.grid();
    PlaneField q0(g);
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1) {
            if (m1 == 0 && m2 == 0) continue;
            const double kx = g.kx(m1), ky = g.ky(m2);
            const double k2 = kx * kx + ky * ky;
            const cplx proj = (kx * u.at(m1, m2) + ky * v.at(m1, m2)) / k2;
            u.at(m1, m2) -= kx * proj;
            v.at(m1, m2) -= ky * proj;
            q0.at(m1, m2) = cplx{0.0, -1.0} * proj;
        }
    return q0;
}

namespace {
FieldPair assemble_explicit(const State& state, double f, const Forcing& forcing,
                            DynamicsWorkspace& ws, PlaneField* p0_over_rho0) {
    FieldPair out = advection_tendency(state, ws);
    out.u *= -1.0;
    out.v *= -1.0;
    // -f k x u = (f v, -f u)
    out.u.axpy(f, state.v);
    out.v.axpy(-f, state.u);
    if (!forcing.zero) {
        out.u += forcing.f.u;
        out.v += forcing.f.v;
    }
    PlaneField q0 = leray_project_barotropic(out.u, out.v);
    if (p0_over_rho0) *p0_over_rho0 = std::move(q0);
    return out;
}
}  // namespace

FieldPair explicit_tendency(const ModelConfig& model, const State& state, const Forcing& forcing,
                            DynamicsWorkspace& ws, PlaneField* p0_over_rho0) {
    return assemble_explicit(state, model.f, forcing, ws, p0_over_rho0);
}

FieldPair tendency(const ModelConfig& model, const State& state, const Forcing& forcing,
                   DynamicsWorkspace& ws, PlaneField* p0_over_rho0) {
    FieldPair out = assemble_explicit(state, model.f, forcing, ws, p0_over_rho0);
    add_viscous_tendency(model, state, out);
    return out;
}

PlanePair barotropic_tendency(const ModeSplit& split, const ModelConfig& model,
                              const Forcing& forcing, DynamicsWorkspace& ws,
                              PlaneField* p0_over_rho0) {
    const GridSpec& g = split.uprime.grid();
    Transforms& tr = ws.transforms();

    // (ubar.grad)ubar via the 3D machinery on broadcast planes.
    const FieldPair bar{broadcast_plane(split.ubar), broadcast_plane(split.vbar)};
    PhysField& pu = ws.scratch(6);
    PhysField& pv = ws.scratch(7);
    eval_advection_grid(bar, bar, ws, pu, pv);
    SpectralField adv_u = dealias(tr.forward(pu, Parity::CosZ));
    SpectralField adv_v = dealias(tr.forward(pv, Parity::CosZ));

    // Averaged interaction terms avg[(u'.grad)u' + (div u')u']: products
    // formed pointwise, vertical average = n = 0 plane of the transform.
    PhysField& iu = ws.scratch(8);
    PhysField& iv = ws.scratch(9);
    {
        PhysField& up = ws.scratch(0);
        PhysField& vp = ws.scratch(1);
        PhysField& ux = ws.scratch(2);
        PhysField& uy = ws.scratch(3);
        PhysField& vx = ws.scratch(4);
        PhysField& vy = ws.scratch(5);
        tr.inverse(split.uprime, up);
        tr.inverse(split.vprime, vp);
        tr.inverse(dx(split.uprime), ux);
        tr.inverse(dy(split.uprime), uy);
        tr.inverse(dx(split.vprime), vx);
        tr.inverse(dy(split.vprime), vy);
        for (std::size_t p = 0; p < iu.data().size(); ++p) {
            const double div = ux.data()[p] + vy.data()[p];
            iu.data()[p] = up.data()[p] * ux.data()[p] + vp.data()[p] * uy.data()[p] +
                           div * up.data()[p];
            iv.data()[p] = up.data()[p] * vx.data()[p] + vp.data()[p] * vy.data()[p] +
                           div * vp.data()[p];
        }
    }
    PlaneField avg_iu = vertical_average(dealias(tr.forward(iu, Parity::CosZ)));
    PlaneField avg_iv = vertical_average(dealias(tr.forward(iv, Parity::CosZ)));

    PlanePair out{PlaneField(g), PlaneField(g)};
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1) {
            const double lam = viscous_symbol(model, g, m1, m2, 0);
            const cplx ub = split.ubar.at(m1, m2), vb = split.vbar.at(m1, m2);
            cplx fu{0.0, 0.0}, fv{0.0, 0.0};
            if (!forcing.zero) {
                fu = forcing.f.u.at(m1, m2, 0);
                fv = forcing.f.v.at(m1, m2, 0);
            }
            out.u.at(m1, m2) = -adv_u.at(m1, m2, 0) - avg_iu.at(m1, m2) + model.f * vb -
                               lam * ub + fu;
            out.v.at(m1, m2) = -adv_v.at(m1, m2, 0) - avg_iv.at(m1, m2) - model.f * ub -
                               lam * vb + fv;
        }
    PlaneField q0 = leray_project_plane(out.u, out.v);
    if (p0_over_rho0) *p0_over_rho0 = std::move(q0);
    return out;
}

FieldPair baroclinic_tendency(const ModeSplit& split, const ModelConfig& model,
                              const Forcing& forcing, DynamicsWorkspace& ws) {
    const GridSpec& g = split.uprime.grid();
    Transforms& tr = ws.transforms();
    const FieldPair prime{split.uprime, split.vprime};
    const FieldPair bar{broadcast_plane(split.ubar), broadcast_plane(split.vbar)};

    // (u'.grad)u' + w(u') d_z u'
    PhysField& pu = ws.scratch(6);
    PhysField& pv = ws.scratch(7);
    eval_advection_grid(prime, prime, ws, pu, pv);
    // + (u'.grad)ubar  (w term vanishes: d_z ubar = 0)
    PhysField& qu = ws.scratch(8);
    PhysField& qv = ws.scratch(9);
    eval_advection_grid(prime, bar, ws, qu, qv);
    for (std::size_t p = 0; p < pu.data().size(); ++p) {
        pu.data()[p] += qu.data()[p];
        pv.data()[p] += qv.data()[p];
    }
    // + (ubar.grad)u'
    eval_advection_grid(bar, prime, ws, qu, qv);
    for (std::size_t p = 0; p < pu.data().size(); ++p) {
        pu.data()[p] += qu.data()[p];
        pv.data()[p] += qv.data()[p];
    }
    SpectralField adv_u = dealias(tr.forward(pu, Parity::CosZ));
    SpectralField adv_v = dealias(tr.forward(pv, Parity::CosZ));

    // The vertical average of the assembled advection equals the averaged
    // interaction terms (the cross terms average to zero), so zeroing the
    // n = 0 plane implements the subtraction and keeps the tendency mean-free.
    FieldPair out(g);
    for (int n = 0; n < g.nz; ++n)
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1) {
                const double lam = viscous_symbol(model, g, m1, m2, n);
                cplx au = adv_u.at(m1, m2, n), av = adv_v.at(m1, m2, n);
                if (n == 0) {
                    au = cplx{0.0, 0.0};  // removing the averaged interaction
                    av = cplx{0.0, 0.0};
                }
                const cplx up = split.uprime.at(m1, m2, n), vp = split.vprime.at(m1, m2, n);
                cplx fu{0.0, 0.0}, fv{0.0, 0.0};
                if (!forcing.zero && n > 0) {
                    fu = forcing.f.u.at(m1, m2, n);
                    fv = forcing.f.v.at(m1, m2, n);
                }
                out.u.at(m1, m2, n) = -au + model.f * vp - lam * up + fu;
                out.v.at(m1, m2, n) = -av - model.f * up - lam * vp + fv;
            }
    return out;
}

void add_viscous_tendency(const ModelConfig& model, const State& state, FieldPair& out) {
    const GridSpec& g = state.grid();
    for (int n = 0; n < g.nz; ++n)
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1) {
                const double lam = viscous_symbol(model, g, m1, m2, n);
                out.u.at(m1, m2, n) -= lam * state.u.at(m1, m2, n);
                out.v.at(m1, m2, n) -= lam * state.v.at(m1, m2, n);
            }
}

double dissipation_rate(const ModelConfig& model, const State& state) {
    const GridSpec& g = state.grid();
    double acc = 0.0;
    for (int n = 0; n < g.nz; ++n) {
        const double w = mode_weight(g, Parity::CosZ, n);
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1) {
                const double lam = viscous_symbol(model, g, m1, m2, n);
                acc += lam * w * (std::norm(state.u.at(m1, m2, n)) + std::norm(state.v.at(m1, m2, n)));
            }
    }
    return acc;
}

double forcing_power(const Forcing& forcing, const State& state) {
    if (forcing.zero) return 0.0;
    return inner(forcing.f.u, state.u) + inner(forcing.f.v, state.v);
}

}  // namespace hydroprim
