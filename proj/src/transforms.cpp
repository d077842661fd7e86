#include "hydroprim/transforms.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace hydroprim {

namespace {
// FFTW planning is not thread-safe; execution is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Transforms::Transforms(const GridSpec& grid, int qfactor) : grid_(grid) {
    grid_.validate();
    if (qfactor < 1) throw std::invalid_argument("Transforms: qfactor must be >= 1");
    nxp_ = qfactor * grid_.nxp();
    nyp_ = qfactor * grid_.nyp();
    nzp_ = qfactor * grid_.nzp();

    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        buf_ = reinterpret_cast<cplx*>(fftw_alloc_complex(static_cast<std::size_t>(nxp_) * nyp_));
        auto* b = reinterpret_cast<fftw_complex*>(buf_);
        // FFTW_ESTIMATE keeps plan selection deterministic across runs.
        plan_fwd_ = fftw_plan_dft_2d(nyp_, nxp_, b, b, FFTW_FORWARD, FFTW_ESTIMATE);
        plan_bwd_ = fftw_plan_dft_2d(nyp_, nxp_, b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    mcos_.resize(static_cast<std::size_t>(nzp_) * grid_.nz);
    msin_.resize(static_cast<std::size_t>(nzp_) * grid_.nz);
    for (int k = 0; k < nzp_; ++k) {
        const double zp = std::numbers::pi * z_point(k) / grid_.h;  // z'_k in (-pi, 0)
        for (int n = 0; n < grid_.nz; ++n) {
            mcos_[static_cast<std::size_t>(k) * grid_.nz + n] = std::cos(n * zp);
            msin_[static_cast<std::size_t>(k) * grid_.nz + n] = std::sin(n * zp);
        }
    }
    rbuf_.assign(grid_.nz, std::vector<double>(static_cast<std::size_t>(nxp_) * nyp_, 0.0));
    rlin_.assign(static_cast<std::size_t>(nxp_) * nyp_, 0.0);
}

Transforms::~Transforms() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    if (plan_fwd_) fftw_destroy_plan(plan_fwd_);
    if (plan_bwd_) fftw_destroy_plan(plan_bwd_);
    if (buf_) fftw_free(reinterpret_cast<fftw_complex*>(buf_));
}

// Scatter nx x ny modes into the padded plane, run the backward FFT, and keep
// real parts.
void Transforms::fft_backward_into(const cplx* modes, int nx, int ny, std::vector<double>& out_plane) {
    std::memset(buf_, 0, sizeof(cplx) * static_cast<std::size_t>(nxp_) * nyp_);
    for (int m2 = 0; m2 < ny; ++m2) {
        const int fy = m2 < ny / 2 ? m2 : m2 - ny;
        const int j = fy >= 0 ? fy : fy + nyp_;
        for (int m1 = 0; m1 < nx; ++m1) {
            const int fx = m1 < nx / 2 ? m1 : m1 - nx;
            const int i = fx >= 0 ? fx : fx + nxp_;
            buf_[static_cast<std::size_t>(j) * nxp_ + i] = modes[static_cast<std::size_t>(m2) * nx + m1];
        }
    }
    fftw_execute(plan_bwd_);
    for (std::size_t p = 0; p < out_plane.size(); ++p) out_plane[p] = buf_[p].real();
}

PhysField Transforms::inverse(const SpectralField& f) {
    PhysField out(nxp_, nyp_, nzp_);
    inverse(f, out);
    return out;
}

void Transforms::inverse(const SpectralField& f, PhysField& out) {
    if (!(f.grid() == grid_))
        throw std::invalid_argument("Transforms::inverse: field grid mismatch");
    if (out.nxp() != nxp_ || out.nyp() != nyp_ || out.nzp() != nzp_)
        throw std::invalid_argument("Transforms::inverse: output dimension mismatch");
    const double defect = conj_symmetry_defect(f);
    if (defect > 1e-12 * (f.max_abs() + 1e-300))
        throw std::invalid_argument("Transforms::inverse: broken conjugate symmetry");

    const int nz = grid_.nz;
    for (int n = 0; n < nz; ++n)
        fft_backward_into(f.data().data() + f.idx(0, 0, n), grid_.nx, grid_.ny, rbuf_[n]);

    const bool lin = f.has_linz() && f.max_abs_linz() > 0.0;
    if (lin) fft_backward_into(f.linz().data(), grid_.nx, grid_.ny, rlin_);

    const double* basis = (f.parity() == Parity::CosZ) ? mcos_.data() : msin_.data();
    const std::size_t plane = static_cast<std::size_t>(nxp_) * nyp_;
    for (int k = 0; k < nzp_; ++k) {
        double* dst = out.data().data() + static_cast<std::size_t>(k) * plane;
        std::memset(dst, 0, sizeof(double) * plane);
        for (int n = 0; n < nz; ++n) {
            const double b = basis[static_cast<std::size_t>(k) * nz + n];
            if (b == 0.0) continue;
            const double* src = rbuf_[n].data();
            for (std::size_t p = 0; p < plane; ++p) dst[p] += b * src[p];
        }
        if (lin) {
            const double mz = -z_point(k);
            for (std::size_t p = 0; p < plane; ++p) dst[p] += mz * rlin_[p];
        }
    }
}

SpectralField Transforms::forward(const PhysField& p, Parity parity) {
    if (p.nxp() != nxp_ || p.nyp() != nyp_ || p.nzp() != nzp_)
        throw std::invalid_argument("Transforms::forward: physical dimension mismatch with grid");

    const int nz = grid_.nz;
    const std::size_t plane = static_cast<std::size_t>(nxp_) * nyp_;
    const double* basis = (parity == Parity::CosZ) ? mcos_.data() : msin_.data();

    // Vertical analysis: exact midpoint-grid orthogonality.
    for (int n = 0; n < nz; ++n) {
        double* dst = rbuf_[n].data();
        std::memset(dst, 0, sizeof(double) * plane);
        if (parity == Parity::SinZ && n == 0) continue;
        const double scale = ((parity == Parity::CosZ && n == 0) ? 1.0 : 2.0) / nzp_;
        for (int k = 0; k < nzp_; ++k) {
            const double a = scale * basis[static_cast<std::size_t>(k) * nz + n];
            if (a == 0.0) continue;
            const double* src = p.data().data() + static_cast<std::size_t>(k) * plane;
            for (std::size_t q = 0; q < plane; ++q) dst[q] += a * src[q];
        }
    }

    SpectralField out(grid_, parity);
    const double norm = 1.0 / (static_cast<double>(nxp_) * nyp_);
    for (int n = 0; n < nz; ++n) {
        for (std::size_t q = 0; q < plane; ++q) buf_[q] = cplx{rbuf_[n][q], 0.0};
        fftw_execute(plan_fwd_);
        for (int m2 = 0; m2 < grid_.ny; ++m2) {
            const int fy = grid_.freq_y(m2);
            const int j = fy >= 0 ? fy : fy + nyp_;
            for (int m1 = 0; m1 < grid_.nx; ++m1) {
                const int fx = grid_.freq_x(m1);
                const int i = fx >= 0 ? fx : fx + nxp_;
                // Nyquist lines stay zero so conjugate symmetry is exact.
                if (fx == -grid_.nx / 2 || fy == -grid_.ny / 2) continue;
                out.at(m1, m2, n) = norm * buf_[static_cast<std::size_t>(j) * nxp_ + i];
            }
        }
    }
    return out;
}

std::vector<double> Transforms::inverse_plane(const PlaneField& f) {
    if (!(f.grid() == grid_))
        throw std::invalid_argument("Transforms::inverse_plane: grid mismatch");
    std::vector<double> out(static_cast<std::size_t>(nxp_) * nyp_, 0.0);
    fft_backward_into(f.data().data(), grid_.nx, grid_.ny, out);
    return out;
}

PlaneField Transforms::forward_plane(const std::vector<double>& phys) {
    const std::size_t plane = static_cast<std::size_t>(nxp_) * nyp_;
    if (phys.size() != plane)
        throw std::invalid_argument("Transforms::forward_plane: dimension mismatch");
    for (std::size_t q = 0; q < plane; ++q) buf_[q] = cplx{phys[q], 0.0};
    fftw_execute(plan_fwd_);
    PlaneField out(grid_);
    const double norm = 1.0 / (static_cast<double>(nxp_) * nyp_);
    for (int m2 = 0; m2 < grid_.ny; ++m2) {
        const int fy = grid_.freq_y(m2);
        const int j = fy >= 0 ? fy : fy + nyp_;
        for (int m1 = 0; m1 < grid_.nx; ++m1) {
            const int fx = grid_.freq_x(m1);
            const int i = fx >= 0 ? fx : fx + nxp_;
            if (fx == -grid_.nx / 2 || fy == -grid_.ny / 2) continue;
            out.at(m1, m2) = norm * buf_[static_cast<std::size_t>(j) * nxp_ + i];
        }
    }
    return out;
}

}  // namespace hydroprim
