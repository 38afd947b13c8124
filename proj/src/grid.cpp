#include "sobnull/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace sobnull::capacity {

namespace {
std::mutex fftw_plan_mutex; // FFTW planning is not thread-safe
}

struct SpectralGrid::FftState {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr, bwd = nullptr;
    std::size_t n = 0;
    mutable std::mutex exec; // buffer is shared per grid; serialize transforms

    explicit FftState(std::size_t N) : n(N) {
        buf = fftw_alloc_complex(N);
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fwd = fftw_plan_dft_1d(static_cast<int>(N), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(static_cast<int>(N), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
    }
    ~FftState() {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (buf) fftw_free(buf);
    }
};

SpectralGrid::SpectralGrid(double L, std::size_t N, double s) : L_(L), N_(N), s_(s) {
    if (!(L > 0)) throw std::invalid_argument("SpectralGrid: L must be positive");
    if (N < 16 || (N & (N - 1)) != 0)
        throw std::invalid_argument("SpectralGrid: N must be a power of two, >= 16");
    symbol_.resize(N);
    inv_symbol_.resize(N);
    symbol_max_ = 0;
    for (std::size_t k = 0; k < N; ++k) {
        // FFT ordering: frequencies 0..N/2-1, then -N/2..-1
        const double kk = k < N / 2 ? static_cast<double>(k)
                                    : static_cast<double>(k) - static_cast<double>(N);
        const double xi = M_PI * kk / L;
        const double w = std::pow(1.0 + xi * xi, s);
        symbol_[k] = w;
        inv_symbol_[k] = 1.0 / w;
        symbol_max_ = std::max(symbol_max_, w);
    }
    fft_ = std::make_unique<FftState>(N);
}

SpectralGrid::~SpectralGrid() = default;

void SpectralGrid::transform_with_weights(const std::vector<double>& u,
                                          const std::vector<double>& w,
                                          std::vector<double>& out) const {
    if (u.size() != N_) throw std::invalid_argument("SpectralGrid: size mismatch");
    out.resize(N_);
    std::lock_guard<std::mutex> lock(fft_->exec);
    for (std::size_t i = 0; i < N_; ++i) {
        fft_->buf[i][0] = u[i];
        fft_->buf[i][1] = 0.0;
    }
    fftw_execute(fft_->fwd);
    for (std::size_t k = 0; k < N_; ++k) {
        fft_->buf[k][0] *= w[k];
        fft_->buf[k][1] *= w[k];
    }
    fftw_execute(fft_->bwd);
    const double scale = dx() / static_cast<double>(N_); // dx * (1/N from inverse FFT)
    for (std::size_t i = 0; i < N_; ++i) out[i] = fft_->buf[i][0] * scale;
}

void SpectralGrid::apply(const std::vector<double>& u, std::vector<double>& out) const {
    transform_with_weights(u, symbol_, out);
}

void SpectralGrid::apply_inverse(const std::vector<double>& u, std::vector<double>& out) const {
    transform_with_weights(u, inv_symbol_, out);
    const double d2 = dx() * dx();
    for (auto& v : out) v /= d2; // undo the dx baked into the forward operator
}

double SpectralGrid::quadratic_form(const std::vector<double>& u) const {
    std::vector<double> au;
    apply(u, au);
    double acc = 0, c = 0;
    for (std::size_t i = 0; i < N_; ++i) {
        double y = u[i] * au[i] - c;
        double t = acc + y;
        c = (t - acc) - y;
        acc = t;
    }
    return acc;
}

std::vector<std::size_t> SpectralGrid::indices_in(double lo, double hi) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < N_; ++i) {
        double xi = x(i);
        if (xi >= lo && xi <= hi) idx.push_back(i);
    }
    return idx;
}

} // namespace sobnull::capacity
