#ifndef SOBNULL_GRID_HPP
#define SOBNULL_GRID_HPP

#include <complex>
#include <memory>
#include <vector>

namespace sobnull::capacity {

// Truncated periodic discretization of the line: N points on [-L, L),
// frequencies xi_k = pi k / L, diagonal symbol (1 + xi_k^2)^s. The quadratic
// form Q(u) = sum_k (1+xi_k^2)^s |u_hat_k|^2 d_xi discretizes the squared
// H^{s,2} norm and is applied in O(N log N).
class SpectralGrid {
public:
    SpectralGrid(double L, std::size_t N, double s);
    ~SpectralGrid();
    SpectralGrid(const SpectralGrid&) = delete;
    SpectralGrid& operator=(const SpectralGrid&) = delete;

    double L() const { return L_; }
    std::size_t N() const { return N_; }
    double s() const { return s_; }
    double dx() const { return 2.0 * L_ / static_cast<double>(N_); }
    double x(std::size_t i) const { return -L_ + dx() * static_cast<double>(i); }
    double symbol(std::size_t k) const { return symbol_[k]; } // FFT index order
    double symbol_max() const { return symbol_max_; }

    // A u with A = dx * F^{-1} diag(symbol) F; Q(u) = u . (A u) * ... see apply_Q.
    void apply(const std::vector<double>& u, std::vector<double>& out) const;
    // A^{-1} u (symbol inverted); exact inverse of apply.
    void apply_inverse(const std::vector<double>& u, std::vector<double>& out) const;
    double quadratic_form(const std::vector<double>& u) const; // Q(u) = u^T A u

    // grid indices with x in [lo, hi]
    std::vector<std::size_t> indices_in(double lo, double hi) const;

private:
    void transform_with_weights(const std::vector<double>& u, const std::vector<double>& w,
                                std::vector<double>& out) const;

    double L_;
    std::size_t N_;
    double s_;
    std::vector<double> symbol_, inv_symbol_;
    double symbol_max_;
    struct FftState;
    std::unique_ptr<FftState> fft_;
};

} // namespace sobnull::capacity

#endif
