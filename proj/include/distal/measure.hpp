#pragma once

#include <functional>
#include <set>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace distal {

using Point = std::vector<Rational>;

// Finite weighted point set with total mass exactly 1. The desk-scale
// generically stable measure; counting measures are the uniform special case.
struct AtomicMeasure {
    int dim = 1;
    std::vector<Point> points;
    std::vector<Rational> weights;

    void validate() const {
        if (points.size() != weights.size() || points.empty())
            throw input_error("atomic measure: points/weights mismatch");
        Rational total(0);
        std::set<Point> seen;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (static_cast<int>(points[i].size()) != dim)
                throw input_error("atomic measure: point dimension mismatch");
            if (weights[i] <= 0) throw input_error("atomic measure: weights must be positive");
            if (!seen.insert(points[i]).second)
                throw input_error("atomic measure: support points must be distinct");
            total += weights[i];
        }
        if (total != 1) throw input_error("atomic measure: weights must sum to 1");
    }

    std::size_t size() const { return points.size(); }

    Rational mass_of(const std::function<bool(const Point&)>& pred) const {
        Rational m(0);
        for (std::size_t i = 0; i < points.size(); ++i)
            if (pred(points[i])) m += weights[i];
        return m;
    }

    Rational mass_of_indices(const std::vector<std::size_t>& idx) const {
        Rational m(0);
        for (auto i : idx) m += weights.at(i);
        return m;
    }

    static AtomicMeasure uniform(std::vector<Point> pts) {
        AtomicMeasure m;
        if (pts.empty()) throw input_error("uniform measure on empty support");
        m.dim = static_cast<int>(pts[0].size());
        Rational w(1, static_cast<long>(pts.size()));
        m.weights.assign(pts.size(), w);
        m.points = std::move(pts);
        return m;
    }

    // Uniform counting measure on the integers {lo, lo+1, ..., hi} (1D).
    static AtomicMeasure uniform_ints(long lo, long hi) {
        std::vector<Point> pts;
        for (long v = lo; v <= hi; ++v) pts.push_back({Rational(v)});
        return uniform(std::move(pts));
    }
};

// mu localized to A: mu_A(X) = mu(A and X) / mu(A).
inline AtomicMeasure localize(const AtomicMeasure& m, const std::vector<std::size_t>& keep) {
    AtomicMeasure out;
    out.dim = m.dim;
    Rational total(0);
    for (auto i : keep) total += m.weights.at(i);
    if (total <= 0) throw input_error("localize: zero-mass localization set");
    for (auto i : keep) {
        out.points.push_back(m.points[i]);
        out.weights.push_back(m.weights[i] / total);
    }
    return out;
}

inline AtomicMeasure localize(const AtomicMeasure& m,
                              const std::function<bool(const Point&)>& pred) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.points.size(); ++i)
        if (pred(m.points[i])) keep.push_back(i);
    if (keep.empty()) throw input_error("localize: zero-mass localization set");
    return localize(m, keep);
}

// 1D measure with piecewise constant density; total mass exactly 1.
// Singletons carry mass 0.
struct PiecewiseUniform1D {
    std::vector<Rational> breakpoints;  // strictly increasing, densities.size()+1 entries
    std::vector<Rational> densities;    // nonnegative

    void validate() const {
        if (breakpoints.size() != densities.size() + 1 || densities.empty())
            throw input_error("piecewise measure: breakpoints/densities mismatch");
        Rational total(0);
        for (std::size_t i = 0; i < densities.size(); ++i) {
            if (breakpoints[i] >= breakpoints[i + 1])
                throw input_error("piecewise measure: breakpoints must increase");
            if (densities[i] < 0) throw input_error("piecewise measure: negative density");
            total += densities[i] * (breakpoints[i + 1] - breakpoints[i]);
        }
        if (total != 1) throw input_error("piecewise measure: total mass must be 1");
    }

    // Mass of the interval between the rational endpoints (open/closed alike).
    Rational interval_mass(const Rational& lo, const Rational& hi) const {
        if (lo >= hi) return Rational(0);
        Rational m(0);
        for (std::size_t i = 0; i < densities.size(); ++i) {
            Rational a = std::max(lo, breakpoints[i]);
            Rational b = std::min(hi, breakpoints[i + 1]);
            if (a < b) m += densities[i] * (b - a);
        }
        return m;
    }

    Rational mass_below(const Rational& x) const { return interval_mass(breakpoints.front(), x); }

    static PiecewiseUniform1D uniform(const Rational& lo, const Rational& hi) {
        if (lo >= hi) throw input_error("uniform interval measure needs lo < hi");
        PiecewiseUniform1D m;
        m.breakpoints = {lo, hi};
        m.densities = {Rational(1) / (hi - lo)};
        return m;
    }
};

using CoordMeasure = std::variant<AtomicMeasure, PiecewiseUniform1D>;

inline int coord_dim(const CoordMeasure& m) {
    if (std::holds_alternative<AtomicMeasure>(m)) return std::get<AtomicMeasure>(m).dim;
    return 1;
}

// Product of coordinate measures; the measure of a rectangle is the product
// of the coordinate masses.
struct ProductMeasure {
    std::vector<CoordMeasure> factors;

    void validate() const {
        if (factors.empty()) throw input_error("product measure: no factors");
        for (const auto& f : factors)
            std::visit([](const auto& m) { m.validate(); }, f);
    }

    int total_dim() const {
        int d = 0;
        for (const auto& f : factors) d += coord_dim(f);
        return d;
    }
};

}  // namespace distal
