#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pointlev {

// In-place iterative radix-2 FFT. All transform sizes in this project are
// powers of two (padded log grids), so this keeps the library self-contained.
// Convention: fft computes X_k = sum_j x_j exp(-2 pi i j k / n).

inline void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
        if (!inverse) ang = -ang;
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        double inv = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv;
    }
}

inline void fft(std::vector<std::complex<double>>& a) { fft_radix2(a, false); }
inline void ifft(std::vector<std::complex<double>>& a) { fft_radix2(a, true); }

// FFT bin frequencies for spacing d: 2 pi k / (n d) with the upper half
// wrapped to negative values, matching the usual DFT layout.
inline std::vector<double> fft_freqs(std::size_t n, double d) {
    std::vector<double> tau(n);
    for (std::size_t k = 0; k < n; ++k) {
        double f = static_cast<double>(k);
        if (k >= (n + 1) / 2) f -= static_cast<double>(n);
        tau[k] = 2.0 * std::numbers::pi * f / (static_cast<double>(n) * d);
    }
    return tau;
}

} // namespace pointlev
