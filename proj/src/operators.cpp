#include "hydroprim/transforms.hpp"

#include <string>

namespace hydroprim {

namespace {

template <class Fn>
SpectralField map_modes(const SpectralField& f, Parity out_parity, Fn&& factor) {
    SpectralField out(f.grid(), out_parity);
    const GridSpec& g = f.grid();
    for (int n = 0; n < g.nz; ++n)
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                out.at(m1, m2, n) = factor(m1, m2, n) * f.at(m1, m2, n);
    return out;
}

}  // namespace

SpectralField dx(const SpectralField& f) {
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, f.parity(), [&](int m1, int, int) { return cplx{0.0, g.kx(m1)}; });
    if (f.has_linz()) {
        auto& l = out.linz();
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                l[out.idx(m1, m2, 0)] = cplx{0.0, g.kx(m1)} * f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

SpectralField dy(const SpectralField& f) {
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, f.parity(), [&](int, int m2, int) { return cplx{0.0, g.ky(m2)}; });
    if (f.has_linz()) {
        auto& l = out.linz();
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                l[out.idx(m1, m2, 0)] = cplx{0.0, g.ky(m2)} * f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

SpectralField dz(const SpectralField& f) {
    const GridSpec& g = f.grid();
    if (f.parity() == Parity::CosZ) {
        // d/dz cos(n z') = -(n pi/H) sin(n z')
        return map_modes(f, Parity::SinZ, [&](int, int, int n) { return -g.kz(n); });
    }
    // d/dz sin(n z') = +(n pi/H) cos(n z'); d/dz [linz (-z)] = -linz.
    SpectralField out = map_modes(f, Parity::CosZ, [&](int, int, int n) { return g.kz(n); });
    if (f.has_linz()) {
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                out.at(m1, m2, 0) -= f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

SpectralField dzz(const SpectralField& f) {
    const GridSpec& g = f.grid();
    return map_modes(f, f.parity(), [&](int, int, int n) { return -g.kz(n) * g.kz(n); });
}

SpectralField laplacian_h(const SpectralField& f) {
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, f.parity(), [&](int m1, int m2, int) {
        return -(g.kx(m1) * g.kx(m1) + g.ky(m2) * g.ky(m2));
    });
    if (f.has_linz()) {
        auto& l = out.linz();
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                l[out.idx(m1, m2, 0)] = -(g.kx(m1) * g.kx(m1) + g.ky(m2) * g.ky(m2)) *
                                        f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

// Per-mode antiderivative of int_z^0 f dxi.  cos(n z') integrates to
// -(H/(n pi)) sin(n z') for n >= 1; the n = 0 plane becomes the exact
// linear-in-z component stored separately (physical value c0 * (-z)).
SpectralField integral_z_to_0(const SpectralField& f) {
    if (f.parity() != Parity::CosZ)
        throw std::invalid_argument("integral_z_to_0: requires CosZ parity");
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, Parity::SinZ,
                                  [&](int, int, int n) { return n == 0 ? 0.0 : -1.0 / g.kz(n); });
    auto& l = out.linz();
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1)
            l[out.idx(m1, m2, 0)] = f.at(m1, m2, 0);
    return out;
}

SpectralField project_low(const SpectralField& f, const FilterSpec& filter) {
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, f.parity(), [&](int m1, int m2, int n) {
        return filter.retains(g.freq_x(m1), g.freq_y(m2), n) ? 1.0 : 0.0;
    });
    if (f.has_linz()) {
        auto& l = out.linz();
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                if (filter.retains(g.freq_x(m1), g.freq_y(m2), 0))
                    l[out.idx(m1, m2, 0)] = f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

SpectralField project_high(const SpectralField& f, const FilterSpec& filter) {
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, f.parity(), [&](int m1, int m2, int n) {
        return filter.retains(g.freq_x(m1), g.freq_y(m2), n) ? 0.0 : 1.0;
    });
    if (f.has_linz()) {
        auto& l = out.linz();
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                if (!filter.retains(g.freq_x(m1), g.freq_y(m2), 0))
                    l[out.idx(m1, m2, 0)] = f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

bool in_dealias_band(const GridSpec& g, int mx, int my, int n) {
    return 3 * std::abs(mx) <= g.nx && 3 * std::abs(my) <= g.ny && 3 * n <= 2 * g.nz;
}

SpectralField dealias(const SpectralField& f) {
    const GridSpec& g = f.grid();
    SpectralField out = map_modes(f, f.parity(), [&](int m1, int m2, int n) {
        return in_dealias_band(g, g.freq_x(m1), g.freq_y(m2), n) ? 1.0 : 0.0;
    });
    if (f.has_linz()) {
        auto& l = out.linz();
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                if (in_dealias_band(g, g.freq_x(m1), g.freq_y(m2), 0))
                    l[out.idx(m1, m2, 0)] = f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

double one_plus_k2(const GridSpec& g, int m1, int m2, int n) {
    const double kx = g.kx(m1), ky = g.ky(m2), kz = g.kz(n);
    return 1.0 + kx * kx + ky * ky + kz * kz;
}

double filter_norm_constant(const FilterSpec& filter, int k, const GridSpec& grid) {
    if (k < 0 || k > 2)
        throw std::invalid_argument("filter_norm_constant: k must be in {0,1,2}");
    filter.validate_against(grid);
    double best = 0.0;
    for (int n = 0; n <= filter.n_cut; ++n)
        for (int my = -filter.m_cut; my <= filter.m_cut; ++my)
            for (int mx = -filter.m_cut; mx <= filter.m_cut; ++mx) {
                const double v = one_plus_k2(grid, grid.slot_x(mx), grid.slot_y(my), n);
                best = std::max(best, std::pow(v, 0.5 * k));
            }
    return best;
}

double mode_weight(const GridSpec& g, Parity parity, int n) {
    const double vol = g.lx * g.ly * g.h;
    if (parity == Parity::SinZ) return n == 0 ? 0.0 : 0.5 * vol;
    return n == 0 ? vol : 0.5 * vol;
}

namespace {
void reject_linz(const SpectralField& f, const char* who) {
    if (f.has_linz() && f.max_abs_linz() > 1e-9 * (f.max_abs() + 1e-300))
        throw std::invalid_argument(std::string(who) + ": field carries a linear-z component");
}
}  // namespace

double inner(const SpectralField& a, const SpectralField& b) {
    a.check_compatible(b);
    reject_linz(a, "inner");
    reject_linz(b, "inner");
    const GridSpec& g = a.grid();
    double acc = 0.0;
    for (int n = 0; n < g.nz; ++n) {
        const double w = mode_weight(g, a.parity(), n);
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                acc += w * (std::conj(a.at(m1, m2, n)) * b.at(m1, m2, n)).real();
    }
    return acc;
}

double l2_sq(const SpectralField& f) {
    reject_linz(f, "l2_sq");
    return spectral_sum(f, [](int, int, int) { return 1.0; });
}

double inner_plane(const PlaneField& a, const PlaneField& b) {
    const GridSpec& g = a.grid();
    const double w = g.lx * g.ly;
    double acc = 0.0;
    for (int m2 = 0; m2 < g.ny; ++m2)
        for (int m1 = 0; m1 < g.nx; ++m1)
            acc += w * (std::conj(a.at(m1, m2)) * b.at(m1, m2)).real();
    return acc;
}

double l2_sq_plane(const PlaneField& f) { return inner_plane(f, f); }

PlaneField eval_at_z(const SpectralField& f, double z) {
    const GridSpec& g = f.grid();
    const double zp = std::numbers::pi * z / g.h;
    PlaneField out(g);
    for (int n = 0; n < g.nz; ++n) {
        const double b = (f.parity() == Parity::CosZ) ? std::cos(n * zp) : std::sin(n * zp);
        if (b == 0.0) continue;
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                out.at(m1, m2) += b * f.at(m1, m2, n);
    }
    if (f.has_linz()) {
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                out.at(m1, m2) += -z * f.linz()[f.idx(m1, m2, 0)];
    }
    return out;
}

double conj_symmetry_defect(const SpectralField& f) {
    const GridSpec& g = f.grid();
    double worst = 0.0;
    for (int n = 0; n < g.nz; ++n)
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1) {
                const int mx = g.freq_x(m1), my = g.freq_y(m2);
                if (mx == -g.nx / 2 || my == -g.ny / 2) {
                    // Nyquist lines have no mirror slot; they must vanish.
                    worst = std::max(worst, std::abs(f.at(m1, m2, n)));
                    continue;
                }
                const cplx mirror = f.at_freq(-mx, -my, n);
                worst = std::max(worst, std::abs(mirror - std::conj(f.at(m1, m2, n))));
            }
    return worst;
}

}  // namespace hydroprim
