#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "igl/errors.hpp"

namespace igl {

/// A sorted sample of reals with right-continuous CDF evaluation.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;

    explicit EmpiricalDistribution(std::vector<double> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end());
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const noexcept { return values_; }

    /// Fraction of the sample <= x.
    double cdf(double x) const noexcept {
        if (values_.empty()) return 0.0;
        const auto it = std::upper_bound(values_.begin(), values_.end(), x);
        return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
    }

    /// Fraction of the sample exactly equal to x.
    double mass_at(double x) const noexcept {
        if (values_.empty()) return 0.0;
        const auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), x);
        return static_cast<double>(hi - lo) / static_cast<double>(values_.size());
    }

    /// Smallest sample value v with cdf(v) >= p.
    double quantile(double p) const {
        if (values_.empty()) throw domain_error("quantile of an empty distribution");
        p = std::clamp(p, 0.0, 1.0);
        const auto n = values_.size();
        auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
        if (k == 0) k = 1;
        return values_[std::min(k, n) - 1];
    }

    double mean() const {
        if (values_.empty()) throw domain_error("mean of an empty distribution");
        double s = 0.0;
        for (double v : values_) s += v;
        return s / static_cast<double>(values_.size());
    }

    /// Sample variance with the n-1 denominator.
    double variance() const {
        if (values_.size() < 2) return 0.0;
        const double m = mean();
        double s = 0.0;
        for (double v : values_) s += (v - m) * (v - m);
        return s / static_cast<double>(values_.size() - 1);
    }

    /// Kolmogorov-Smirnov distance sup |F_n - F| to a continuous CDF.
    template <class Cdf>
    double ks_distance(Cdf&& F) const {
        if (values_.empty()) throw domain_error("KS distance of an empty distribution");
        const auto n = static_cast<double>(values_.size());
        double d = 0.0;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            const double f = F(values_[i]);
            d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
        }
        return d;
    }

    /// Fraction of the sample falling in [lo, hi).
    double mass_in(double lo, double hi) const noexcept {
        if (values_.empty()) return 0.0;
        const auto a = std::lower_bound(values_.begin(), values_.end(), lo);
        const auto b = std::lower_bound(values_.begin(), values_.end(), hi);
        return static_cast<double>(b - a) / static_cast<double>(values_.size());
    }

private:
    std::vector<double> values_;
};

/// Streaming accumulator (Welford).
class RunningStats {
public:
    void push(double x) noexcept {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }

    std::size_t count() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stderr_of_mean() const noexcept {
        return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace igl
