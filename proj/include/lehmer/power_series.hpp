#ifndef LEHMER_POWER_SERIES_HPP
#define LEHMER_POWER_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lehmer {

/// Formal power series truncated at x^order (coefficients 0..order-1).
///
/// Coefficients below the truncation order are exact whenever T is an exact
/// field (e.g. Rational); log/exp/pow use the standard derivative recurrences.
template <typename T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order, T(0)) {}
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

    template <typename Gen>
    static TruncatedSeries generate(std::size_t order, Gen gen)
    {
        TruncatedSeries s(order);
        for (std::size_t j = 0; j < order; ++j) {
            s.coeffs_[j] = gen(j);
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }
    const T& operator[](std::size_t j) const { return coeffs_[j]; }
    T& operator[](std::size_t j) { return coeffs_[j]; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(common_order(a, b));
        for (std::size_t j = 0; j < r.order(); ++j) {
            r.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = common_order(a, b);
        TruncatedSeries r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const T& s, TruncatedSeries a)
    {
        for (auto& c : a.coeffs_) {
            c *= s;
        }
        return a;
    }

    TruncatedSeries derivative() const
    {
        TruncatedSeries r(order());
        for (std::size_t j = 1; j < order(); ++j) {
            r.coeffs_[j - 1] = coeffs_[j] * T(static_cast<long>(j));
        }
        return r;
    }

    /// Multiplicative inverse; requires a non-zero constant term.
    TruncatedSeries inverse() const
    {
        require_order();
        if (coeffs_[0] == 0) {
            throw std::domain_error("TruncatedSeries::inverse: zero constant term");
        }
        TruncatedSeries r(order());
        r.coeffs_[0] = T(1) / coeffs_[0];
        for (std::size_t n = 1; n < order(); ++n) {
            T acc(0);
            for (std::size_t i = 1; i <= n; ++i) {
                acc += coeffs_[i] * r.coeffs_[n - i];
            }
            r.coeffs_[n] = -acc * r.coeffs_[0];
        }
        return r;
    }

    /// log(p) for p(0) = 1, via log(p)' = p'/p.
    TruncatedSeries log() const
    {
        require_order();
        if (coeffs_[0] != 1) {
            throw std::domain_error("TruncatedSeries::log: constant term must be 1");
        }
        const TruncatedSeries q = derivative() * inverse();
        TruncatedSeries r(order());
        for (std::size_t j = 1; j < order(); ++j) {
            r.coeffs_[j] = q.coeffs_[j - 1] / T(static_cast<long>(j));
        }
        return r;
    }

    /// exp(p) for p(0) = 0, via n e_n = sum_{i=1}^{n} i p_i e_{n-i}.
    TruncatedSeries exp() const
    {
        require_order();
        if (coeffs_[0] != 0) {
            throw std::domain_error("TruncatedSeries::exp: constant term must be 0");
        }
        TruncatedSeries r(order());
        r.coeffs_[0] = T(1);
        for (std::size_t n = 1; n < order(); ++n) {
            T acc(0);
            for (std::size_t i = 1; i <= n; ++i) {
                acc += T(static_cast<long>(i)) * coeffs_[i] * r.coeffs_[n - i];
            }
            r.coeffs_[n] = acc / T(static_cast<long>(n));
        }
        return r;
    }

    /// p^sigma = exp(sigma log p) for p(0) = 1.
    TruncatedSeries pow(const T& sigma) const { return (sigma * log()).exp(); }

private:
    static std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.order() < b.order() ? a.order() : b.order();
    }

    void require_order() const
    {
        if (coeffs_.empty()) {
            throw std::domain_error("TruncatedSeries: empty series");
        }
    }

    std::vector<T> coeffs_;
};

} // namespace lehmer

#endif
