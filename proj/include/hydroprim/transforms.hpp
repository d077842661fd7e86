#pragma once

#include <memory>
#include <vector>

#include "hydroprim/spectral_field.hpp"

struct fftw_plan_s;

namespace hydroprim {

// Forward/inverse transforms between spectral coefficients and the padded
// collocation grid.  Horizontal directions use FFTW complex transforms;
// the vertical cosine/sine analysis and synthesis use exact precomputed
// basis matrices (nz and nzp are small).
//
// qfactor > 1 builds an evaluator on a qfactor-times-refined physical grid,
// used where quadrature of higher-degree products must stay exact.
//
// One Transforms instance owns its FFTW plans and scratch; instances are not
// thread-safe internally, but independent instances may run concurrently.
class Transforms {
  public:
    explicit Transforms(const GridSpec& grid, int qfactor = 1);
    ~Transforms();
    Transforms(const Transforms&) = delete;
    Transforms& operator=(const Transforms&) = delete;

    const GridSpec& grid() const { return grid_; }
    int nxp() const { return nxp_; }
    int nyp() const { return nyp_; }
    int nzp() const { return nzp_; }

    // Quadrature weight of one 3D (resp. 2D) collocation point.
    double quad_weight() const { return grid_.lx * grid_.ly * grid_.h / (static_cast<double>(nxp_) * nyp_ * nzp_); }
    double quad_weight_2d() const { return grid_.lx * grid_.ly / (static_cast<double>(nxp_) * nyp_); }

    double z_point(int k) const { return -(k + 0.5) * grid_.h / nzp_; }

    // Spectral -> padded physical grid.  Rejects fields whose conjugate
    // symmetry is broken beyond round-off.
    PhysField inverse(const SpectralField& f);
    void inverse(const SpectralField& f, PhysField& out);

    // Padded physical grid -> spectral.  Rejects dimension mismatches.
    SpectralField forward(const PhysField& p, Parity parity);

    // 2D versions for barotropic planes; physical layout (j, i), i fastest.
    std::vector<double> inverse_plane(const PlaneField& f);
    PlaneField forward_plane(const std::vector<double>& phys);

  private:
    void fft_backward_into(const cplx* modes, int nx, int ny, std::vector<double>& out_plane);

    GridSpec grid_;
    int nxp_, nyp_, nzp_;
    fftw_plan_s* plan_fwd_ = nullptr;
    fftw_plan_s* plan_bwd_ = nullptr;
    cplx* buf_ = nullptr;                 // nxp*nyp FFTW-aligned scratch
    std::vector<double> mcos_;            // [k*nz + n] = cos(n z'_k)
    std::vector<double> msin_;            // [k*nz + n] = sin(n z'_k)
    std::vector<std::vector<double>> rbuf_;  // nz horizontal planes of nxp*nyp
    std::vector<double> rlin_;            // linz plane scratch
};

// Spectral-basis module operations (mode-diagonal, pure).
SpectralField dx(const SpectralField& f);
SpectralField dy(const SpectralField& f);
SpectralField dz(const SpectralField& f);
SpectralField dzz(const SpectralField& f);
SpectralField laplacian_h(const SpectralField& f);
SpectralField integral_z_to_0(const SpectralField& f);
SpectralField project_low(const SpectralField& f, const FilterSpec& filter);
SpectralField project_high(const SpectralField& f, const FilterSpec& filter);
SpectralField dealias(const SpectralField& f);
bool in_dealias_band(const GridSpec& g, int mx, int my, int n);

// Sharp discrete constant C_k with |P_{M,N} u|_{H^k} <= C_k |u|_{L^2},
// attained on the extremal retained mode.  k in {0,1,2}.
double filter_norm_constant(const FilterSpec& filter, int k, const GridSpec& grid);

// Parseval weight of mode (m1, m2, n) (slot indices); |f|^2 = sum w |c|^2.
double mode_weight(const GridSpec& g, Parity parity, int n);
// (1 + |kappa|^2) for mode (slot indices), |kappa|^2 = kx^2 + ky^2 + kz^2.
double one_plus_k2(const GridSpec& g, int m1, int m2, int n);

// Discrete L^2 inner product and norms in coefficient space (fixed summation
// order).  Fields carrying a non-negligible linear-z component are rejected.
double inner(const SpectralField& a, const SpectralField& b);
double l2_sq(const SpectralField& f);
double inner_plane(const PlaneField& a, const PlaneField& b);
double l2_sq_plane(const PlaneField& f);

// sum over modes of w(m,n) * factor(m1,m2,n) * |c|^2.
template <class Fn>
double spectral_sum(const SpectralField& f, Fn&& factor) {
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int n = 0; n < g.nz; ++n) {
        const double w = mode_weight(g, f.parity(), n);
        for (int m2 = 0; m2 < g.ny; ++m2)
            for (int m1 = 0; m1 < g.nx; ++m1)
                acc += w * factor(m1, m2, n) * std::norm(f.at(m1, m2, n));
    }
    return acc;
}

// Exact evaluation of the vertical series at height z (includes linz part).
PlaneField eval_at_z(const SpectralField& f, double z);

// Max |c(-m) - conj(c(m))| over modes (conjugate-symmetry defect).
double conj_symmetry_defect(const SpectralField& f);

}  // namespace hydroprim
