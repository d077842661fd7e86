#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace hydroprim {

// Rectangular channel domain (0,Lx) x (0,Ly) x (-H,0): periodic in x and y,
// cosine/sine half-range expansions in z.  Mode counts are spectral sizes;
// physical grids are padded to 3/2 of the mode counts so quadratic products
// evaluate alias-free.
struct GridSpec {
    double lx = 2.0 * std::numbers::pi;
    double ly = 2.0 * std::numbers::pi;
    double h = std::numbers::pi;
    int nx = 32;  // Fourier modes in x, FFT frequency ordering, even
    int ny = 32;  // Fourier modes in y
    int nz = 9;   // vertical modes n = 0..nz-1

    GridSpec() = default;
    GridSpec(double lx_, double ly_, double h_, int nx_, int ny_, int nz_)
        : lx(lx_), ly(ly_), h(h_), nx(nx_), ny(ny_), nz(nz_) {
        validate();
    }

    void validate() const {
        if (!(lx > 0.0) || !(ly > 0.0) || !(h > 0.0))
            throw std::invalid_argument("GridSpec: domain lengths must be positive");
        if (nx < 4 || ny < 4 || nz < 4)
            throw std::invalid_argument("GridSpec: nx, ny, nz must be >= 4");
        if (nx % 2 != 0 || ny % 2 != 0)
            throw std::invalid_argument("GridSpec: nx, ny must be even");
    }

    // Padded physical sizes (3/2 rule, vertical rounded up).
    int nxp() const { return 3 * nx / 2; }
    int nyp() const { return 3 * ny / 2; }
    int nzp() const { return (3 * nz + 1) / 2; }

    std::size_t num_modes() const {
        return static_cast<std::size_t>(nx) * ny * nz;
    }

    // Signed integer frequency for FFT slot index.
    int freq_x(int i) const { return i < nx / 2 ? i : i - nx; }
    int freq_y(int j) const { return j < ny / 2 ? j : j - ny; }
    // FFT slot for a signed frequency.
    int slot_x(int m) const { return m >= 0 ? m : m + nx; }
    int slot_y(int m) const { return m >= 0 ? m : m + ny; }

    // Physical wavenumbers.
    double kx(int i) const { return 2.0 * std::numbers::pi * freq_x(i) / lx; }
    double ky(int j) const { return 2.0 * std::numbers::pi * freq_y(j) / ly; }
    double kz(int n) const { return std::numbers::pi * n / h; }

    // Vertical collocation points z_k, midpoints of (-H,0) descending from the
    // surface: z_k = -(k+1/2) H / nzp.
    double z_point(int k) const { return -(k + 0.5) * h / nzp(); }
    double z_point(int k, int nzp_override) const {
        return -(k + 0.5) * h / nzp_override;
    }

    bool operator==(const GridSpec&) const = default;
};

// Spectral low-pass cutoffs of P_{M,N}: horizontal |m|_sup <= m_cut and
// vertical n <= n_cut.
struct FilterSpec {
    int m_cut = 4;
    int n_cut = 2;

    FilterSpec() = default;
    FilterSpec(int m, int n) : m_cut(m), n_cut(n) {
        if (m_cut < 0 || n_cut < 0)
            throw std::invalid_argument("FilterSpec: cutoffs must be nonnegative");
    }

    void validate_against(const GridSpec& grid) const {
        if (m_cut >= grid.nx / 2 || m_cut >= grid.ny / 2)
            throw std::invalid_argument("FilterSpec: m_cut must be < nx/2 and < ny/2");
        if (n_cut >= grid.nz)
            throw std::invalid_argument("FilterSpec: n_cut must be < nz");
    }

    bool retains(int mx, int my, int n) const {
        int sup = std::abs(mx) > std::abs(my) ? std::abs(mx) : std::abs(my);
        return sup <= m_cut && n <= n_cut;
    }

    bool operator==(const FilterSpec&) const = default;
};

}  // namespace hydroprim
