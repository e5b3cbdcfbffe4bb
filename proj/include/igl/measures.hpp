#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "igl/curve.hpp"
#include "igl/errors.hpp"
#include "igl/interval.hpp"
#include "igl/random.hpp"
#include "igl/stats.hpp"

namespace igl {

// Measure kinds. Each is a probability law on S = {[a,b] : 0 <= a <= b <= 1}.
namespace kind {

/// Uniform on S (density 2 on the triangle).
struct UniformTriangle {};

/// Intervals [x-rho, x+rho], x ~ U(0,1), rho ~ U(0,r), rescaled affinely
/// by t -> (t+r)/(1+2r) so the support rectangle sits inside S.
struct TiltedRectangle {
    double r = 0.0;
};

/// Uniform on the line {x = a*y}: intervals [aU, U].
struct Line {
    double a = 0.0;
};

/// Finite mixture of Line(a_k) with weights w_k.
struct LineMixture {
    std::vector<double> weights;
    std::vector<double> a_values;
};

/// Uniform on {(x, x+r) : 0 <= x <= 1-r}.
struct FixedLength {
    double r = 0.0;
};

/// [U, 1].
struct CompleteL {};

/// [0, U].
struct CompleteR {};

/// L ~ U(0,1); R is the right end of the block (b_{i-1}, b_i] containing L,
/// where consecutive blocks have lengths p_1, ..., p_m.
struct BlockUnion {
    std::vector<double> p;
};

/// Uniform resampling from a stored interval list.
struct Empirical {
    std::vector<Interval> support;
};

/// gamma(T), T uniform on the curve's parameter range.
struct CurveSupported {
    MonotoneCurve curve;
};

}  // namespace kind

/// A sampleable probability law on S.
class MeasureModel {
public:
    using Kind = std::variant<kind::UniformTriangle, kind::TiltedRectangle, kind::Line,
                              kind::LineMixture, kind::FixedLength, kind::CompleteL,
                              kind::CompleteR, kind::BlockUnion, kind::Empirical,
                              kind::CurveSupported>;

    MeasureModel(Kind k) : kind_(std::move(k)) { validate_and_prepare(); }  // NOLINT

    static MeasureModel uniform_triangle() { return {kind::UniformTriangle{}}; }
    static MeasureModel tilted_rectangle(double r) { return {kind::TiltedRectangle{r}}; }
    static MeasureModel line(double a) { return {kind::Line{a}}; }
    static MeasureModel line_mixture(std::vector<double> w, std::vector<double> a) {
        return {kind::LineMixture{std::move(w), std::move(a)}};
    }
    static MeasureModel fixed_length(double r) { return {kind::FixedLength{r}}; }
    static MeasureModel complete_l() { return {kind::CompleteL{}}; }
    static MeasureModel complete_r() { return {kind::CompleteR{}}; }
    static MeasureModel block_union(std::vector<double> p) { return {kind::BlockUnion{std::move(p)}}; }
    static MeasureModel empirical(std::vector<Interval> support) {
        return {kind::Empirical{std::move(support)}};
    }
    static MeasureModel curve_supported(MonotoneCurve c) { return {kind::CurveSupported{std::move(c)}}; }

    const Kind& kind() const noexcept { return kind_; }

    template <class K>
    bool is() const noexcept {
        return std::holds_alternative<K>(kind_);
    }

    /// One draw from the law.
    Interval operator()(Rng& rng) const {
        return std::visit([&](const auto& k) { return draw(k, rng); }, kind_);
    }

    /// Short human-readable identifier, e.g. "line:0.3".
    std::string describe() const;

private:
    void validate_and_prepare();

    static Interval draw(const kind::UniformTriangle&, Rng& rng) {
        const double u = rng.uniform();
        const double v = rng.uniform();
        return u <= v ? Interval{u, v} : Interval{v, u};
    }

    static Interval draw(const kind::TiltedRectangle& k, Rng& rng) {
        const double x = rng.uniform();
        const double rho = k.r * rng.uniform();
        const double scale = 1.0 + 2.0 * k.r;
        const double lo = std::clamp((x - rho + k.r) / scale, 0.0, 1.0);
        const double hi = std::clamp((x + rho + k.r) / scale, 0.0, 1.0);
        return {lo, std::max(lo, hi)};
    }

    static Interval draw(const kind::Line& k, Rng& rng) {
        const double u = rng.uniform();
        return {k.a * u, u};
    }

    Interval draw(const kind::LineMixture& k, Rng& rng) const {
        const double u = rng.uniform();
        const double a = k.a_values[pick(cumulative_, u)];
        const double y = rng.uniform();
        return {a * y, y};
    }

    static Interval draw(const kind::FixedLength& k, Rng& rng) {
        const double x = (1.0 - k.r) * rng.uniform();
        return {x, std::min(x + k.r, 1.0)};
    }

    static Interval draw(const kind::CompleteL&, Rng& rng) { return {rng.uniform(), 1.0}; }
    static Interval draw(const kind::CompleteR&, Rng& rng) { return {0.0, rng.uniform()}; }

    Interval draw(const kind::BlockUnion&, Rng& rng) const {
        const double left = rng.uniform();
        return {left, cumulative_[pick(cumulative_, left)]};
    }

    static Interval draw(const kind::Empirical& k, Rng& rng) {
        return k.support[rng.below(k.support.size())];
    }

    static Interval draw(const kind::CurveSupported& k, Rng& rng) {
        return k.curve.at(rng.uniform(k.curve.t_min(), k.curve.t_max()));
    }

    /// First index with cumulative[i] >= u (blocks are half-open on the left).
    static std::size_t pick(const std::vector<double>& cumulative, double u) noexcept {
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        return std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
    }

    Kind kind_;
    std::vector<double> cumulative_;  // BlockUnion block ends / LineMixture weight CDF
};

namespace detail {

inline std::vector<double> checked_cumulative(const std::vector<double>& w, const char* what) {
    if (w.empty()) throw parameter_error(std::string(what) + ": no weights");
    std::vector<double> c(w.size());
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
            throw parameter_error(std::string(what) + ": weights must be positive");
        }
        s += w[i];
        c[i] = s;
    }
    if (std::abs(s - 1.0) > 1e-9) throw parameter_error(std::string(what) + ": weights must sum to 1");
    c.back() = 1.0;
    return c;
}

inline std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace detail

inline void MeasureModel::validate_and_prepare() {
    std::visit(
        [&](auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, kind::TiltedRectangle>) {
                if (!(k.r > 0.0) || !std::isfinite(k.r)) throw parameter_error("tilted: r must be > 0");
            } else if constexpr (std::is_same_v<K, kind::Line>) {
                if (!(k.a >= 0.0 && k.a <= 1.0)) throw parameter_error("line: a must be in [0,1]");
            } else if constexpr (std::is_same_v<K, kind::LineMixture>) {
                if (k.weights.size() != k.a_values.size()) {
                    throw parameter_error("mixture: weights and a-values differ in length");
                }
                for (double a : k.a_values) {
                    if (!(a >= 0.0 && a <= 1.0)) throw parameter_error("mixture: a-values must be in [0,1]");
                }
                cumulative_ = detail::checked_cumulative(k.weights, "mixture");
            } else if constexpr (std::is_same_v<K, kind::FixedLength>) {
                if (!(k.r > 0.0 && k.r <= 1.0)) throw parameter_error("fixed: r must be in (0,1]");
            } else if constexpr (std::is_same_v<K, kind::BlockUnion>) {
                cumulative_ = detail::checked_cumulative(k.p, "block");
            } else if constexpr (std::is_same_v<K, kind::Empirical>) {
                if (k.support.empty()) throw parameter_error("empirical: empty support");
                for (const auto& I : k.support) {
                    if (!is_valid(I)) throw parameter_error("empirical: interval outside S");
                }
            }
        },
        kind_);
}

inline std::string MeasureModel::describe() const {
    using detail::fmt_param;
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, kind::UniformTriangle>) {
                return "uniform";
            } else if constexpr (std::is_same_v<K, kind::TiltedRectangle>) {
                return "tilted:" + fmt_param(k.r);
            } else if constexpr (std::is_same_v<K, kind::Line>) {
                return "line:" + fmt_param(k.a);
            } else if constexpr (std::is_same_v<K, kind::LineMixture>) {
                std::string s = "mixture:";
                for (std::size_t i = 0; i < k.weights.size(); ++i) {
                    if (i) s += ',';
                    s += fmt_param(k.weights[i]) + '@' + fmt_param(k.a_values[i]);
                }
                return s;
            } else if constexpr (std::is_same_v<K, kind::FixedLength>) {
                return "fixed:" + fmt_param(k.r);
            } else if constexpr (std::is_same_v<K, kind::CompleteL>) {
                return "complete-l";
            } else if constexpr (std::is_same_v<K, kind::CompleteR>) {
                return "complete-r";
            } else if constexpr (std::is_same_v<K, kind::BlockUnion>) {
                std::string s = "block:";
                for (std::size_t i = 0; i < k.p.size(); ++i) {
                    if (i) s += ',';
                    s += fmt_param(k.p[i]);
                }
                return s;
            } else if constexpr (std::is_same_v<K, kind::Empirical>) {
                return "empirical[" + std::to_string(k.support.size()) + "]";
            } else {
                return "curve[" + std::to_string(k.curve.points().size()) + "]";
            }
        },
        kind_);
}

/// Anything callable as Interval(Rng&) (or another object type for the
/// non-interval kernels).
template <class S>
concept Sampler = requires(const S& s, Rng& rng) { s(rng); };

/// n i.i.d. draws; deterministic given seed.
template <Sampler S>
auto sample(const S& model, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    using Obj = std::decay_t<decltype(model(rng))>;
    std::vector<Obj> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(model(rng));
    return out;
}

/// Sampler adapter drawing from the reflected law [a,b] -> [1-b,1-a].
template <Sampler S>
struct Reflected {
    S inner;
    Interval operator()(Rng& rng) const { return reflect(inner(rng)); }
};

template <Sampler S>
Reflected(S) -> Reflected<S>;

// ---------------------------------------------------------------------------
// Marginals and the common-atom diagnostic.

struct CommonAtom {
    double location = 0.0;
    double left_mass = 0.0;
    double right_mass = 0.0;
};

struct MarginalReport {
    EmpiricalDistribution left_cdf;
    EmpiricalDistribution right_cdf;
    std::vector<CommonAtom> common_atoms;

    /// No common atom: the map mu -> Gamma_mu is continuous at this measure.
    bool continuity_point() const noexcept { return common_atoms.empty(); }
};

/// Empirical endpoint marginals. A common atom is a value whose exact
/// multiplicity gives mass > atom_tol in both the left and right marginals.
inline MarginalReport marginals(std::span<const Interval> s, double atom_tol) {
    if (s.empty()) throw domain_error("marginals of an empty sample");
    if (!(atom_tol >= 0.0)) throw parameter_error("atom_tol must be >= 0");
    std::vector<double> lefts;
    std::vector<double> rights;
    lefts.reserve(s.size());
    rights.reserve(s.size());
    for (const auto& I : s) {
        lefts.push_back(I.left);
        rights.push_back(I.right);
    }
    MarginalReport rep{EmpiricalDistribution(std::move(lefts)), EmpiricalDistribution(std::move(rights)), {}};

    const auto L = rep.left_cdf.values();
    const auto R = rep.right_cdf.values();
    const auto n = static_cast<double>(s.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < L.size() && j < R.size()) {
        if (L[i] < R[j]) {
            ++i;
        } else if (R[j] < L[i]) {
            ++j;
        } else {
            const double x = L[i];
            std::size_t ci = 0;
            std::size_t cj = 0;
            while (i < L.size() && L[i] == x) ++i, ++ci;
            while (j < R.size() && R[j] == x) ++j, ++cj;
            const double ml = static_cast<double>(ci) / n;
            const double mr = static_cast<double>(cj) / n;
            if (ml > atom_tol && mr > atom_tol) rep.common_atoms.push_back({x, ml, mr});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Normalizations and reflection.

enum class NormalMode { L, R, m };

namespace detail {

struct Knot {
    double value;
    double target;
};

/// Piecewise-linear interpolation through (0,0), the knots and (1,1).
/// `upper` selects the tie side for a query equal to a knot value: the last
/// knot of the tied group (true) or the first (false).
inline double through_knots(const std::vector<Knot>& knots, double y, bool upper) {
    if (upper) {
        auto it = std::upper_bound(knots.begin(), knots.end(), y,
                                   [](double v, const Knot& k) { return v < k.value; });
        if (it != knots.begin() && (it - 1)->value == y) return (it - 1)->target;
        const Knot lo = it == knots.begin() ? Knot{0.0, 0.0} : *(it - 1);
        const Knot hi = it == knots.end() ? Knot{1.0, 1.0} : *it;
        double v = lo.target + (y - lo.value) / (hi.value - lo.value) * (hi.target - lo.target);
        // Must stay strictly below the next knot so no false touch appears.
        if (it != knots.end() && v >= hi.target) v = std::nextafter(hi.target, 0.0);
        return std::max(v, lo.target);
    }
    auto it = std::lower_bound(knots.begin(), knots.end(), y,
                               [](const Knot& k, double v) { return k.value < v; });
    if (it != knots.end() && it->value == y) return it->target;
    const Knot lo = it == knots.begin() ? Knot{0.0, 0.0} : *(it - 1);
    const Knot hi = it == knots.end() ? Knot{1.0, 1.0} : *it;
    double v = lo.target + (y - lo.value) / (hi.value - lo.value) * (hi.target - lo.target);
    if (it != knots.begin() && v <= lo.target) v = std::nextafter(lo.target, 1.0);
    return std::min(v, hi.target);
}

inline double grid_point(std::size_t j, std::size_t n) {
    return (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(n));
}

}  // namespace detail

/// Rank transform making the chosen empirical marginal uniform on the grid
/// {(2j+1)/(2N)}: N = n for L and R, N = 2n pooled endpoints for m.
///
/// Ties among knot endpoints are split by (value, index); in mode m left
/// endpoints precede right endpoints at equal value. The non-knot endpoints
/// of L/R follow a monotone piecewise-linear map through the knots, so the
/// intersection graph is preserved edge for edge.
inline std::vector<Interval> normalize(std::span<const Interval> s, NormalMode mode) {
    if (s.empty()) throw domain_error("normalize of an empty sample");
    const std::size_t n = s.size();
    std::vector<Interval> out(n);

    if (mode == NormalMode::m) {
        struct Ev {
            double value;
            int side;  // 0 left, 1 right
            std::size_t index;
        };
        std::vector<Ev> ev;
        ev.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            ev.push_back({s[i].left, 0, i});
            ev.push_back({s[i].right, 1, i});
        }
        std::sort(ev.begin(), ev.end(), [](const Ev& x, const Ev& y) {
            if (x.value != y.value) return x.value < y.value;
            if (x.side != y.side) return x.side < y.side;
            return x.index < y.index;
        });
        for (std::size_t j = 0; j < ev.size(); ++j) {
            const double g = detail::grid_point(j, 2 * n);
            (ev[j].side == 0 ? out[ev[j].index].left : out[ev[j].index].right) = g;
        }
        return out;
    }

    const bool on_left = mode == NormalMode::L;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [&](std::size_t i) { return on_left ? s[i].left : s[i].right; };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (key(x) != key(y)) return key(x) < key(y);
        return x < y;
    });
    std::vector<detail::Knot> knots(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i = order[j];
        const double g = detail::grid_point(j, n);
        knots[j] = {key(i), g};
        (on_left ? out[i].left : out[i].right) = g;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (on_left) {
            out[i].right = detail::through_knots(knots, s[i].right, /*upper=*/true);
        } else {
            out[i].left = detail::through_knots(knots, s[i].left, /*upper=*/false);
        }
    }
    return out;
}

inline std::vector<Interval> reflect(std::span<const Interval> s) {
    std::vector<Interval> out;
    out.reserve(s.size());
    for (const auto& I : s) out.push_back(reflect(I));
    return out;
}

}  // namespace igl
