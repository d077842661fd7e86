#pragma once

#include <complex>
#include <vector>

#include "hydroprim/grid.hpp"

namespace hydroprim {

using cplx = std::complex<double>;

enum class Parity { CosZ, SinZ };

// One scalar component expanded as
//   f(x,y,z) = sum_{m,n} c_{m,n} e^{i m.x'} b_n(z')        (x' = 2pi(x/Lx,y/Ly), z' = pi z/H)
// with b_n = cos(n z') for CosZ and b_n = sin(n z') for SinZ.  Coefficients are
// stored full-complex in FFT frequency ordering, index (n, m2, m1) with m1
// fastest; conjugate symmetry across m <-> -m keeps the physical field real.
// For SinZ the n = 0 plane is identically zero; an optional extra plane `linz`
// carries an exact linear-in-z component, linz_m * (-z) e^{i m.x'}, produced by
// the vertical antiderivative of a CosZ n = 0 plane.
class SpectralField {
  public:
    SpectralField() = default;
    SpectralField(const GridSpec& grid, Parity parity)
        : grid_(grid), parity_(parity), c_(grid.num_modes(), cplx{0.0, 0.0}) {}

    const GridSpec& grid() const { return grid_; }
    Parity parity() const { return parity_; }

    std::size_t idx(int m1, int m2, int n) const {
        return (static_cast<std::size_t>(n) * grid_.ny + m2) * grid_.nx + m1;
    }
    cplx& at(int m1, int m2, int n) { return c_[idx(m1, m2, n)]; }
    const cplx& at(int m1, int m2, int n) const { return c_[idx(m1, m2, n)]; }

    // Access by signed frequency.
    cplx& at_freq(int mx, int my, int n) {
        return at(grid_.slot_x(mx), grid_.slot_y(my), n);
    }
    const cplx& at_freq(int mx, int my, int n) const {
        return at(grid_.slot_x(mx), grid_.slot_y(my), n);
    }

    std::vector<cplx>& data() { return c_; }
    const std::vector<cplx>& data() const { return c_; }

    bool has_linz() const { return !linz_.empty(); }
    std::vector<cplx>& linz() {
        if (linz_.empty()) linz_.assign(static_cast<std::size_t>(grid_.nx) * grid_.ny, cplx{0.0, 0.0});
        return linz_;
    }
    const std::vector<cplx>& linz() const { return linz_; }
    void drop_linz() { linz_.clear(); }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : c_) m = std::max(m, std::abs(v));
        for (const cplx& v : linz_) m = std::max(m, std::abs(v));
        return m;
    }
    double max_abs_linz() const {
        double m = 0.0;
        for (const cplx& v : linz_) m = std::max(m, std::abs(v));
        return m;
    }

    SpectralField& operator+=(const SpectralField& o) { return axpy(1.0, o); }
    SpectralField& operator-=(const SpectralField& o) { return axpy(-1.0, o); }
    SpectralField& operator*=(double a) {
        for (cplx& v : c_) v *= a;
        for (cplx& v : linz_) v *= a;
        return *this;
    }
    SpectralField& axpy(double a, const SpectralField& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += a * o.c_[i];
        if (o.has_linz()) {
            auto& l = linz();
            for (std::size_t i = 0; i < l.size(); ++i) l[i] += a * o.linz_[i];
        }
        return *this;
    }

    void check_compatible(const SpectralField& o) const {
        if (!(grid_ == o.grid_) || parity_ != o.parity_)
            throw std::invalid_argument("SpectralField: incompatible grid or parity");
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

  private:
    GridSpec grid_{};
    Parity parity_ = Parity::CosZ;
    std::vector<cplx> c_;
    std::vector<cplx> linz_;  // empty unless a linear-in-z part exists
};

// 2D complex spectral field on the horizontal cross-section M (barotropic
// quantities, surface pressure).  Same FFT frequency ordering as SpectralField.
class PlaneField {
  public:
    PlaneField() = default;
    explicit PlaneField(const GridSpec& grid)
        : grid_(grid), c_(static_cast<std::size_t>(grid.nx) * grid.ny, cplx{0.0, 0.0}) {}

    const GridSpec& grid() const { return grid_; }
    std::size_t idx(int m1, int m2) const {
        return static_cast<std::size_t>(m2) * grid_.nx + m1;
    }
    cplx& at(int m1, int m2) { return c_[idx(m1, m2)]; }
    const cplx& at(int m1, int m2) const { return c_[idx(m1, m2)]; }
    cplx& at_freq(int mx, int my) { return at(grid_.slot_x(mx), grid_.slot_y(my)); }
    const cplx& at_freq(int mx, int my) const { return at(grid_.slot_x(mx), grid_.slot_y(my)); }

    std::vector<cplx>& data() { return c_; }
    const std::vector<cplx>& data() const { return c_; }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    PlaneField& operator+=(const PlaneField& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PlaneField& operator-=(const PlaneField& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    PlaneField& operator*=(double a) {
        for (cplx& v : c_) v *= a;
        return *this;
    }

  private:
    GridSpec grid_{};
    std::vector<cplx> c_;
};

// Real values on the padded collocation grid, index (k, j, i) with i fastest:
// x_i = i Lx/nxp, y_j = j Ly/nyp, z_k = -(k+1/2) H/nzp.
class PhysField {
  public:
    PhysField() = default;
    PhysField(int nxp, int nyp, int nzp)
        : nxp_(nxp), nyp_(nyp), nzp_(nzp),
          v_(static_cast<std::size_t>(nxp) * nyp * nzp, 0.0) {}

    int nxp() const { return nxp_; }
    int nyp() const { return nyp_; }
    int nzp() const { return nzp_; }

    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * nyp_ + j) * nxp_ + i;
    }
    double& at(int i, int j, int k) { return v_[idx(i, j, k)]; }
    double at(int i, int j, int k) const { return v_[idx(i, j, k)]; }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

  private:
    int nxp_ = 0, nyp_ = 0, nzp_ = 0;
    std::vector<double> v_;
};

}  // namespace hydroprim
