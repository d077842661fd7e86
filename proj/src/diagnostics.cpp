#include "hydroprim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace hydroprim {

const std::vector<std::string>& DiagnosticsRecord::column_names() {
    static const std::vector<std::string> cols = {
        "time",      "l2_sq",      "grad_sq",  "dz_sq",     "high_grad_sq",
        "high_dz_sq", "l6_prime",  "grad_ubar_sq", "dz_u_sq", "grad_u_sq",
        "mixed_sq",  "lap_sq",     "dzz_sq",   "energy_residual", "forcing_power"};
    return cols;
}

std::vector<double> DiagnosticsRecord::values() const {
    return {time,    l2_sq,   grad_sq,      dz_sq,   high_grad_sq,
            high_dz_sq, l6_prime, grad_ubar_sq, dz_u_sq, grad_u_sq,
            mixed_sq, lap_sq,  dzz_sq,       energy_residual, forcing_power};
}

namespace {

double kh2_of(const GridSpec& g, int m1, int m2) {
    const double kx = g.kx(m1), ky = g.ky(m2);
    return kx * kx + ky * ky;
}

}  // namespace

DiagnosticsRecord norms(const State& state, const FilterSpec& filter, DynamicsWorkspace& ws) {
    const GridSpec& g = state.grid();
    DiagnosticsRecord r;
    r.time = state.time;

    auto pair_sum = [&](auto&& factor) {
        return spectral_sum(state.u, factor) + spectral_sum(state.v, factor);
    };
    r.l2_sq = pair_sum([&](int, int, int) { return 1.0; });
    r.grad_sq = pair_sum([&](int m1, int m2, int) { return kh2_of(g, m1, m2); });
    r.dz_sq = pair_sum([&](int, int, int n) { return g.kz(n) * g.kz(n); });
    r.high_grad_sq = pair_sum([&](int m1, int m2, int n) {
        return filter.retains(g.freq_x(m1), g.freq_y(m2), n) ? 0.0 : kh2_of(g, m1, m2);
    });
    r.high_dz_sq = pair_sum([&](int m1, int m2, int n) {
        return filter.retains(g.freq_x(m1), g.freq_y(m2), n) ? 0.0 : g.kz(n) * g.kz(n);
    });
    r.mixed_sq = pair_sum([&](int m1, int m2, int n) {
        return kh2_of(g, m1, m2) * g.kz(n) * g.kz(n);
    });
    r.lap_sq = pair_sum([&](int m1, int m2, int) {
        const double k2 = kh2_of(g, m1, m2);
        return k2 * k2;
    });
    r.dzz_sq = pair_sum([&](int, int, int n) {
        const double kz2 = g.kz(n) * g.kz(n);
        return kz2 * kz2;
    });
    r.dz_u_sq = r.dz_sq;
    r.grad_u_sq = r.grad_sq;

    const ModeSplit split = split_modes(state);
    r.grad_ubar_sq = 0.0;
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1)
            r.grad_ubar_sq += g.lx * g.ly * kh2_of(g, m1, m2) *
                              (std::norm(split.ubar.at(m1, m2)) + std::norm(split.vbar.at(m1, m2)));

    r.l6_prime = lp_norm_pair({split.uprime, split.vprime}, 6.0, ws.transforms());
    return r;
}

double poincare_constant(const GridSpec& grid) {
    double lam_min = std::numeric_limits<double>::infinity();
    for (int n = 0; n < grid.nz; ++n)
        for (int m2 = 0; m2 < grid.ny; ++m2)
            for (int m1 = 0; m1 < grid.nx; ++m1) {
                if (m1 == 0 && m2 == 0 && n == 0) continue;
                if (grid.freq_x(m1) == -grid.nx / 2 || grid.freq_y(m2) == -grid.ny / 2)
                    continue;  // Nyquist lines carry no content
                const double lam = kh2_of(grid, m1, m2) + grid.kz(n) * grid.kz(n);
                lam_min = std::min(lam_min, lam);
            }
    return 1.0 / lam_min;
}

double energy_budget(const State& prev, const State& next, const ModelConfig& model,
                     const Forcing& forcing, double dt) {
    const double e_prev = 0.5 * (l2_sq(prev.u) + l2_sq(prev.v));
    const double e_next = 0.5 * (l2_sq(next.u) + l2_sq(next.v));
    const double rhs_prev = forcing_power(forcing, prev) - dissipation_rate(model, prev);
    const double rhs_next = forcing_power(forcing, next) - dissipation_rate(model, next);
    return (e_next - e_prev) / dt - 0.5 * (rhs_prev + rhs_next);
}

// ---------------------------------------------------------------------------

namespace {

// Deterministic uniforms/gaussians independent of the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }
    double gauss() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace

SpectralField random_field(const GridSpec& grid, Parity parity, const EnsembleSpec& spec,
                           std::uint64_t stream) {
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + stream);
    SpectralField f(grid, parity);
    const int mx_max = spec.m_max >= 0 ? spec.m_max : grid.nx / 3;
    const int my_max = spec.m_max >= 0 ? spec.m_max : grid.ny / 3;
    const int n_max = spec.n_max >= 0 ? spec.n_max : 2 * grid.nz / 3;
    const int n_lo = parity == Parity::SinZ ? 1 : 0;
    for (int n = n_lo; n <= std::min(n_max, grid.nz - 1); ++n)
        for (int my = -my_max; my <= my_max; ++my)
            for (int mx = -mx_max; mx <= mx_max; ++mx) {
                // fill a half-space; mirror the conjugate
                if (mx < 0) continue;
                if (mx == 0 && my < 0) continue;
                const double re = rng.gauss(), im = rng.gauss();
                const double env = spec.amplitude *
                                   std::pow(one_plus_k2(grid, grid.slot_x(mx), grid.slot_y(my), n),
                                            -spec.spectrum_exponent);
                cplx c = env * cplx{re, im};
                if (mx == 0 && my == 0) c = cplx{c.real(), 0.0};
                f.at_freq(mx, my, n) = c;
                if (!(mx == 0 && my == 0)) f.at_freq(-mx, -my, n) = std::conj(c);
            }
    f.at(0, 0, 0) = cplx{0.0, 0.0};  // zero average over the domain
    return f;
}

State random_state(const GridSpec& grid, const EnsembleSpec& spec, std::uint64_t stream) {
    State s(grid);
    s.u = random_field(grid, Parity::CosZ, spec, 2 * stream);
    s.v = random_field(grid, Parity::CosZ, spec, 2 * stream + 1);
    leray_project_barotropic(s.u, s.v);
    return s;
}

PlaneField random_plane(const GridSpec& grid, const EnsembleSpec& spec, std::uint64_t stream) {
    const SpectralField f = random_field(grid, Parity::CosZ, spec, stream);
    return vertical_average(f);
}

// ---------------------------------------------------------------------------

double lp_norm_pair(const FieldPair& f, double p, Transforms& tr) {
    PhysField gu = tr.inverse(f.u);
    PhysField gv = tr.inverse(f.v);
    const double wq = tr.quad_weight();
    double acc = 0.0;
    for (std::size_t i = 0; i < gu.data().size(); ++i) {
        const double m2 = gu.data()[i] * gu.data()[i] + gv.data()[i] * gv.data()[i];
        acc += std::pow(m2, 0.5 * p);
    }
    return std::pow(wq * acc, 1.0 / p);
}

double lp_norm(const SpectralField& f, double p, Transforms& tr) {
    PhysField g = tr.inverse(f);
    const double wq = tr.quad_weight();
    double acc = 0.0;
    for (double v : g.data()) acc += std::pow(std::abs(v), p);
    return std::pow(wq * acc, 1.0 / p);
}

double lp_norm_plane(const PlaneField& f, double p, Transforms& tr) {
    const std::vector<double> g = tr.inverse_plane(f);
    const double wq = tr.quad_weight_2d();
    double acc = 0.0;
    for (double v : g) acc += std::pow(std::abs(v), p);
    return std::pow(wq * acc, 1.0 / p);
}

double hk_norm(const SpectralField& f, int k) {
    const GridSpec& g = f.grid();
    return std::sqrt(spectral_sum(f, [&](int m1, int m2, int n) {
        return std::pow(one_plus_k2(g, m1, m2, n), k);
    }));
}

double hk_norm_plane(const PlaneField& f, int k) {
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1) {
            const double b = 1.0 + kh2_of(g, m1, m2);
            acc += g.lx * g.ly * std::pow(b, k) * std::norm(f.at(m1, m2));
        }
    return std::sqrt(acc);
}

// ---------------------------------------------------------------------------

namespace {

struct RatioTracker {
    double best = 0.0;
    std::string extremal;
    void consider(double ratio, const std::string& desc) {
        if (ratio > best) {
            best = ratio;
            extremal = desc;
        }
    }
};

}  // namespace

ProbeReport probe_inequality(const std::string& id, const GridSpec& grid,
                             const EnsembleSpec& spec, int count, int qfactor) {
    Transforms tr(grid, qfactor);
    ProbeReport rep;
    rep.id = id;
    rep.samples = count;
    rep.constant_free = (id == "a1" || id == "a6");
    RatioTracker track;

    for (int s = 0; s < count; ++s) {
        const std::string desc = "sample " + std::to_string(s);
        if (id == "a1") {
            // |u|_Lp <= |u|_Lp1^s1 |u|_Lp2^s2 with p = 10/3, p1 = 2, p2 = 6.
            const SpectralField f = random_field(grid, Parity::CosZ, spec, 100 + s);
            const double p = 10.0 / 3.0, p1 = 2.0, p2 = 6.0;
            const double s1 = (p1 / p) * (p2 - p) / (p2 - p1);
            const double s2 = (p2 / p) * (p - p1) / (p2 - p1);
            const double lhs = lp_norm(f, p, tr);
            const double rhs = std::pow(lp_norm(f, p1, tr), s1) * std::pow(lp_norm(f, p2, tr), s2);
            if (rhs > 0.0) track.consider(lhs / rhs, desc);
        } else if (id == "a2" || id == "a3") {
            const PlaneField f = random_plane(grid, spec, 200 + s);
            double lhs, rhs;
            if (id == "a2") {
                lhs = lp_norm_plane(f, 4.0, tr);
                rhs = std::sqrt(lp_norm_plane(f, 2.0, tr)) * std::sqrt(hk_norm_plane(f, 1));
            } else {
                lhs = lp_norm_plane(f, 8.0, tr);
                rhs = std::pow(lp_norm_plane(f, 6.0, tr), 0.75) * std::pow(hk_norm_plane(f, 1), 0.25);
            }
            if (rhs > 0.0) track.consider(lhs / rhs, desc);
        } else if (id == "a4" || id == "a5") {
            const SpectralField f = random_field(grid, Parity::CosZ, spec, 300 + s);
            double lhs, rhs;
            if (id == "a4") {
                lhs = lp_norm(f, 3.0, tr);
                rhs = std::sqrt(lp_norm(f, 2.0, tr)) * std::sqrt(hk_norm(f, 1));
            } else {
                lhs = lp_norm(f, 6.0, tr);
                rhs = hk_norm(f, 1);
            }
            if (rhs > 0.0) track.consider(lhs / rhs, desc);
        } else if (id == "a6") {
            // Minkowski with p = 2: the z-integral inside the M-norm.
            const SpectralField f = random_field(grid, Parity::CosZ, spec, 400 + s);
            PhysField g = tr.inverse(f);
            const int nxp = tr.nxp(), nyp = tr.nyp(), nzp = tr.nzp();
            const double dz = grid.h / nzp;
            const double da = grid.lx * grid.ly / (static_cast<double>(nxp) * nyp);
            double lhs_sq = 0.0;
            for (int j = 0; j < nyp; ++j)
                for (int i = 0; i < nxp; ++i) {
                    double col = 0.0;
                    for (int k = 0; k < nzp; ++k) col += std::abs(g.at(i, j, k)) * dz;
                    lhs_sq += col * col * da;
                }
            double rhs = 0.0;
            for (int k = 0; k < nzp; ++k) {
                double sheet = 0.0;
                for (int j = 0; j < nyp; ++j)
                    for (int i = 0; i < nxp; ++i) {
                        const double v = std::abs(g.at(i, j, k));
                        sheet += v * v * da;
                    }
                rhs += std::sqrt(sheet) * dz;
            }
            if (rhs > 0.0) track.consider(std::sqrt(lhs_sq) / rhs, desc);
        } else if (id == "vint") {
            // int_Omega (int_-H^0 |grad u| dz) |f||g| <=
            //   C |f|_L2 |u|_H1^1/2 |u|_H2^1/2 |g|_L2^1/2 |g|_H1^1/2
            const SpectralField uu = random_field(grid, Parity::CosZ, spec, 500 + s);
            const SpectralField vv = random_field(grid, Parity::CosZ, spec, 600 + s);
            const SpectralField ff = random_field(grid, Parity::CosZ, spec, 700 + s);
            const SpectralField gg = random_field(grid, Parity::CosZ, spec, 800 + s);
            PhysField ux = tr.inverse(dx(uu)), uy = tr.inverse(dy(uu));
            PhysField vx = tr.inverse(dx(vv)), vy = tr.inverse(dy(vv));
            PhysField fg = tr.inverse(ff), gl = tr.inverse(gg);
            const int nxp = tr.nxp(), nyp = tr.nyp(), nzp = tr.nzp();
            const double dz = grid.h / nzp;
            const double da = grid.lx * grid.ly / (static_cast<double>(nxp) * nyp);
            double lhs = 0.0;
            for (int j = 0; j < nyp; ++j)
                for (int i = 0; i < nxp; ++i) {
                    double col = 0.0;
                    for (int k = 0; k < nzp; ++k) {
                        const double gu2 = ux.at(i, j, k) * ux.at(i, j, k) +
                                           uy.at(i, j, k) * uy.at(i, j, k) +
                                           vx.at(i, j, k) * vx.at(i, j, k) +
                                           vy.at(i, j, k) * vy.at(i, j, k);
                        col += std::sqrt(gu2) * dz;
                    }
                    double fgcol = 0.0;
                    for (int k = 0; k < nzp; ++k)
                        fgcol += std::abs(fg.at(i, j, k)) * std::abs(gl.at(i, j, k)) * dz;
                    lhs += col * fgcol * da;
                }
            const double hu1 = std::sqrt(hk_norm(uu, 1) * hk_norm(uu, 1) +
                                         hk_norm(vv, 1) * hk_norm(vv, 1));
            const double hu2 = std::sqrt(hk_norm(uu, 2) * hk_norm(uu, 2) +
                                         hk_norm(vv, 2) * hk_norm(vv, 2));
            const double rhs = std::sqrt(l2_sq(ff)) * std::sqrt(hu1) * std::sqrt(hu2) *
                               std::sqrt(std::sqrt(l2_sq(gg))) * std::sqrt(hk_norm(gg, 1));
            if (rhs > 0.0) track.consider(lhs / rhs, desc);
        } else {
            throw std::invalid_argument("probe_inequality: unknown id " + id);
        }
    }
    rep.max_ratio = track.best;
    rep.extremal = track.extremal;
    return rep;
}

std::vector<IdentityReport> probe_identities(const GridSpec& grid, const EnsembleSpec& spec,
                                             int count) {
    DynamicsWorkspace ws(grid);
    DynamicsWorkspace ws2(grid, 2);
    ModelConfig model;  // f = 1 default; filter used for commutation checks
    model.filter.validate_against(grid);

    IdentityReport b_zero{"b(u,u,u)=0", 0.0, 1e-10, false};
    IdentityReport b_skew{"b skew-symmetry", 0.0, 1e-10, false};
    IdentityReport b_weighted{"b(u',u',|u'|^4u')=0", 0.0, 1e-6, false};
    IdentityReport coriolis{"(f k x u, u)=0", 0.0, 1e-12, false};
    IdentityReport pressure{"(grad p0, u)=0", 0.0, 1e-12, false};
    IdentityReport prime_mean{"mean(u')=0", 0.0, 1e-14, false};
    IdentityReport dzz_avg{"avg(d2u/dz2)=0", 0.0, 1e-12, false};
    IdentityReport commute{"avg(Lap P u)=Lap P avg(u)", 0.0, 0.0, false};

    for (int s = 0; s < count; ++s) {
        const State a = random_state(grid, spec, 1000 + 4 * s);
        const State b = random_state(grid, spec, 1001 + 4 * s);
        const State c = random_state(grid, spec, 1002 + 4 * s);
        const FieldPair pa{a.u, a.v}, pb{b.u, b.v}, pc{c.u, c.v};
        const double scale_u = std::sqrt(l2_sq(a.u) + l2_sq(a.v));

        // b(u,u,u) = 0; scale by the L1 size of the integrand.
        {
            const double val = trilinear_b(pa, pa, pa, ws);
            FieldPair adv = advection_tendency(a, ws);
            const double mag = std::sqrt((l2_sq(adv.u) + l2_sq(adv.v))) * scale_u + 1e-300;
            b_zero.max_violation = std::max(b_zero.max_violation, std::abs(val) / mag);
        }
        // b(a,b,c) + b(a,c,b) = 0
        {
            const double v1 = trilinear_b(pa, pb, pc, ws);
            const double v2 = trilinear_b(pa, pc, pb, ws);
            const double mag = std::abs(v1) + std::abs(v2) + 1e-300;
            b_skew.max_violation = std::max(b_skew.max_violation, std::abs(v1 + v2) / mag);
        }
        // weighted identity on the baroclinic part, refined quadrature
        {
            const ModeSplit sp = split_modes(a);
            const FieldPair prime{sp.uprime, sp.vprime};
            const double val = trilinear_b_weighted(prime, ws2);
            const double l6 = lp_norm_pair(prime, 6.0, ws2.transforms());
            const double h1 = std::sqrt(hk_norm(sp.uprime, 1) * hk_norm(sp.uprime, 1) +
                                        hk_norm(sp.vprime, 1) * hk_norm(sp.vprime, 1));
            const double mag = std::pow(l6, 5.0) * h1 + 1e-300;
            b_weighted.max_violation = std::max(b_weighted.max_violation, std::abs(val) / mag);
        }
        // Coriolis orthogonality
        {
            const FieldPair cor = coriolis_tendency(a, model.f);
            const double val = inner(cor.u, a.u) + inner(cor.v, a.v);
            const double mag = model.f * (l2_sq(a.u) + l2_sq(a.v)) + 1e-300;
            coriolis.max_violation = std::max(coriolis.max_violation, std::abs(val) / mag);
        }
        // pressure-gradient orthogonality: <grad q0, u> = H (grad q0, ubar)
        {
            State st = a;
            PlaneField q0(grid);
            FieldPair t = tendency(model, st, Forcing::none(grid), ws, &q0);
            (void)t;
            PlaneField gx(grid), gy(grid);
            for (int m2 = 0; m2 < grid.ny; ++m2)
                for (int m1 = 0; m1 < grid.nx; ++m1) {
                    gx.at(m1, m2) = cplx{0.0, grid.kx(m1)} * q0.at(m1, m2);
                    gy.at(m1, m2) = cplx{0.0, grid.ky(m2)} * q0.at(m1, m2);
                }
            const ModeSplit sp = split_modes(a);
            const double val =
                grid.h * (inner_plane(gx, sp.ubar) + inner_plane(gy, sp.vbar));
            const double mag = grid.h * (std::sqrt(l2_sq_plane(gx) + l2_sq_plane(gy)) *
                                             std::sqrt(l2_sq_plane(sp.ubar) + l2_sq_plane(sp.vbar)) +
                                         1e-300);
            pressure.max_violation = std::max(pressure.max_violation, std::abs(val) / mag);
        }
        // mean of the baroclinic mode
        {
            const ModeSplit sp = split_modes(a);
            double worst = 0.0;
            for (int m2 = 0; m2 < grid.ny; ++m2)
                for (int m1 = 0; m1 < grid.nx; ++m1)
                    worst = std::max({worst, std::abs(sp.uprime.at(m1, m2, 0)),
                                      std::abs(sp.vprime.at(m1, m2, 0))});
            prime_mean.max_violation =
                std::max(prime_mean.max_violation, worst / (a.u.max_abs() + 1e-300));
        }
        // averaged vertical diffusion vanishes (free-slip): grid-quadrature oracle
        {
            PhysField gz = ws.transforms().inverse(dzz(a.u));
            const int nxp = ws.transforms().nxp(), nyp = ws.transforms().nyp(),
                      nzp = ws.transforms().nzp();
            double worst = 0.0;
            for (int j = 0; j < nyp; ++j)
                for (int i = 0; i < nxp; ++i) {
                    double col = 0.0;
                    for (int k = 0; k < nzp; ++k) col += gz.at(i, j, k);
                    worst = std::max(worst, std::abs(col) / nzp);
                }
            dzz_avg.max_violation =
                std::max(dzz_avg.max_violation, worst / (gz.max_abs() + 1e-300));
        }
        // projection/averaging commutation, coefficient-wise exact
        {
            const SpectralField lp = laplacian_h(project_low(a.u, model.filter));
            const PlaneField left = vertical_average(lp);
            PlaneField right = vertical_average(a.u);
            for (int m2 = 0; m2 < grid.ny; ++m2)
                for (int m1 = 0; m1 < grid.nx; ++m1) {
                    const bool keep = model.filter.retains(grid.freq_x(m1), grid.freq_y(m2), 0);
                    const double kx = grid.kx(m1), ky = grid.ky(m2);
                    right.at(m1, m2) *= keep ? -(kx * kx + ky * ky) : 0.0;
                }
            double worst = 0.0;
            for (int m2 = 0; m2 < grid.ny; ++m2)
                for (int m1 = 0; m1 < grid.nx; ++m1)
                    worst = std::max(worst, std::abs(left.at(m1, m2) - right.at(m1, m2)));
            commute.max_violation = std::max(commute.max_violation, worst);
        }
    }

    auto finish = [](IdentityReport& r) { r.pass = r.max_violation <= r.tolerance; };
    std::vector<IdentityReport> out{b_zero, b_skew, b_weighted, coriolis,
                                    pressure, prime_mean, dzz_avg, commute};
    for (auto& r : out) finish(r);
    return out;
}

}  // namespace hydroprim
