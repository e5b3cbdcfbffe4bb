#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "igl/errors.hpp"
#include "igl/interval.hpp"

namespace igl {

struct CurvePoint {
    double t = 0.0;
    double a = 0.0;  // left endpoint
    double b = 0.0;  // right endpoint
};

/// Piecewise-linear curve t -> [a(t), b(t)] in S with both coordinates weakly
/// increasing. Control parameters t must be strictly increasing.
class MonotoneCurve {
public:
    explicit MonotoneCurve(std::vector<CurvePoint> points) : points_(std::move(points)) {
        if (points_.empty()) throw parameter_error("curve needs at least one control point");
        for (std::size_t k = 0; k < points_.size(); ++k) {
            const auto& p = points_[k];
            if (!is_valid(Interval{p.a, p.b})) {
                throw parameter_error("curve point " + std::to_string(k) + " is not in S");
            }
            if (k > 0) {
                const auto& q = points_[k - 1];
                if (!(q.t < p.t)) throw parameter_error("curve parameters must strictly increase");
                if (p.a < q.a || p.b < q.b) {
                    throw parameter_error("curve coordinates must be weakly increasing");
                }
            }
        }
    }

    const std::vector<CurvePoint>& points() const noexcept { return points_; }
    double t_min() const noexcept { return points_.front().t; }
    double t_max() const noexcept { return points_.back().t; }

    Interval at(double t) const noexcept {
        if (t <= points_.front().t) return {points_.front().a, points_.front().b};
        if (t >= points_.back().t) return {points_.back().a, points_.back().b};
        const auto hi = std::upper_bound(points_.begin(), points_.end(), t,
                                         [](double v, const CurvePoint& p) { return v < p.t; });
        const auto& p1 = *hi;
        const auto& p0 = *(hi - 1);
        const double f = (t - p0.t) / (p1.t - p0.t);
        double a = p0.a + f * (p1.a - p0.a);
        double b = p0.b + f * (p1.b - p0.b);
        a = std::clamp(a, p0.a, p1.a);
        b = std::clamp(b, p0.b, p1.b);
        return {std::min(a, b), b};
    }

private:
    std::vector<CurvePoint> points_;
};

}  // namespace igl
