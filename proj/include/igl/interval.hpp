#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igl/errors.hpp"

namespace igl {

/// A closed subinterval [left, right] of [0,1]; a point of the triangle S.
/// Length-zero intervals are allowed.
struct Interval {
    double left = 0.0;
    double right = 0.0;

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

constexpr bool is_valid(const Interval& I) noexcept {
    return 0.0 <= I.left && I.left <= I.right && I.right <= 1.0;
}

/// Checked constructor.
inline Interval make_interval(double left, double right) {
    Interval I{left, right};
    if (!is_valid(I)) {
        throw parameter_error("interval [" + std::to_string(left) + "," + std::to_string(right) +
                              "] is not inside 0 <= left <= right <= 1");
    }
    return I;
}

/// The intersection kernel W(I,J) = 1{I and J meet}. Shared endpoints meet.
constexpr bool intersects(const Interval& I, const Interval& J) noexcept {
    return std::max(I.left, J.left) <= std::min(I.right, J.right);
}

/// [a,b] -> [1-b, 1-a].
constexpr Interval reflect(const Interval& I) noexcept { return {1.0 - I.right, 1.0 - I.left}; }

/// Functor form of the interval kernel, for the estimators that take a kernel.
struct IntervalKernel {
    constexpr bool operator()(const Interval& I, const Interval& J) const noexcept {
        return intersects(I, J);
    }
};

// Two-column text format shared by intervals, arcs, chords and segments:
// one object per line as two decimal literals, '#' starts a comment.

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view tok, std::size_t line_no) {
    double v = 0.0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw format_error("line " + std::to_string(line_no) + ": not a number: '" +
                           std::string(tok) + "'");
    }
    return v;
}

/// Shortest form is not needed; 17 significant digits round-trip any double.
inline std::string format_double(double v) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace detail

inline std::vector<std::pair<double, double>> read_pair_list(std::istream& in) {
    std::vector<std::pair<double, double>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = line;
        if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = detail::trim(s);
        if (s.empty()) continue;
        const auto sep = s.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw format_error("line " + std::to_string(line_no) + ": expected two numbers");
        }
        const auto first = s.substr(0, sep);
        const auto second = detail::trim(s.substr(sep));
        if (second.find_first_of(" \t") != std::string_view::npos) {
            throw format_error("line " + std::to_string(line_no) + ": expected two numbers");
        }
        out.emplace_back(detail::parse_double(first, line_no),
                         detail::parse_double(second, line_no));
    }
    return out;
}

inline void write_pair_list(std::ostream& out, std::span<const std::pair<double, double>> rows) {
    for (const auto& [a, b] : rows) {
        out << detail::format_double(a) << ' ' << detail::format_double(b) << '\n';
    }
}

inline std::vector<Interval> read_intervals(std::istream& in) {
    std::vector<Interval> out;
    for (const auto& [a, b] : read_pair_list(in)) {
        if (!is_valid(Interval{a, b})) {
            throw format_error("interval " + detail::format_double(a) + " " +
                               detail::format_double(b) + " is outside the triangle S");
        }
        out.push_back({a, b});
    }
    return out;
}

inline void write_intervals(std::ostream& out, std::span<const Interval> intervals) {
    for (const auto& I : intervals) {
        out << detail::format_double(I.left) << ' ' << detail::format_double(I.right) << '\n';
    }
}

}  // namespace igl
