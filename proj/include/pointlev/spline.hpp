#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pointlev {

// Not-a-knot cubic spline on a uniform grid, templated on the value type so
// complex samples work directly. Stored via moments (second derivatives).
template <class V>
class UniformSpline {
  public:
    UniformSpline() = default;

    UniformSpline(double x0, double h, std::vector<V> y)
        : x0_(x0), h_(h), y_(std::move(y)) {
        const std::size_t n = y_.size();
        if (n < 4) throw std::invalid_argument("spline needs at least 4 points");
        m_.assign(n, V{});
        // Third-derivative continuity at the first and last interior knots
        // pins the adjacent moments to plain second differences; the rest is
        // a standard tridiagonal solve (Thomas algorithm).
        m_[1] = (y_[2] - 2.0 * y_[1] + y_[0]) / (h_ * h_);
        m_[n - 2] = (y_[n - 1] - 2.0 * y_[n - 2] + y_[n - 3]) / (h_ * h_);
        if (n > 4) {
            const std::size_t k = n - 4;   // unknowns m_[2..n-3]
            std::vector<double> c(k, 0.0);
            std::vector<V> d(k);
            for (std::size_t j = 0; j < k; ++j) {
                std::size_t i = j + 2;
                d[j] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (h_ * h_);
                if (j == 0) d[j] -= m_[1];
                if (j == k - 1) d[j] -= m_[n - 2];
            }
            double beta = 4.0;
            c[0] = 1.0 / beta;
            d[0] = d[0] / beta;
            for (std::size_t j = 1; j < k; ++j) {
                beta = 4.0 - c[j - 1];
                c[j] = 1.0 / beta;
                d[j] = (d[j] - d[j - 1]) / beta;
            }
            for (std::size_t j = k; j-- > 0;) {
                m_[j + 2] = d[j];
                if (j + 1 < k) m_[j + 2] -= c[j] * m_[j + 3];
            }
        }
        m_[0] = 2.0 * m_[1] - m_[2];
        m_[n - 1] = 2.0 * m_[n - 2] - m_[n - 3];
    }

    V operator()(double x) const {
        const std::size_t n = y_.size();
        double u = (x - x0_) / h_;
        if (u < 0.0) u = 0.0;
        if (u > static_cast<double>(n - 1)) u = static_cast<double>(n - 1);
        std::size_t i = static_cast<std::size_t>(u);
        if (i >= n - 1) i = n - 2;
        double a = u - static_cast<double>(i);     // in [0, 1]
        double b = 1.0 - a;
        double h2 = h_ * h_ / 6.0;
        return b * y_[i] + a * y_[i + 1]
             + h2 * ((b * b * b - b) * m_[i] + (a * a * a - a) * m_[i + 1]);
    }

  private:
    double x0_ = 0, h_ = 1;
    std::vector<V> y_;
    std::vector<V> m_;
};

} // namespace pointlev
