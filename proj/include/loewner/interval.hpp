#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace loewner {

/// A real interval with possibly infinite endpoints.  Openness flags matter
/// only at finite endpoints; infinite ends are always open.
struct Interval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool lower_open = true;
    bool upper_open = true;

    Interval() = default;
    Interval(double lo, double hi, bool lo_open = true, bool hi_open = true)
        : lower(lo), upper(hi), lower_open(lo_open), upper_open(hi_open) {
        if (!(lower < upper))
            throw std::invalid_argument("Interval: lower must be < upper");
    }

    static Interval positive_halfline() { return {0.0, std::numeric_limits<double>::infinity()}; }
    static Interval unit() { return {0.0, 1.0}; }
    static Interval real_line() { return {}; }

    bool lower_infinite() const { return std::isinf(lower); }
    bool upper_infinite() const { return std::isinf(upper); }
    double length() const { return upper - lower; }

    bool contains(double t) const {
        if (t < lower || (lower_open && t == lower)) return false;
        if (t > upper || (upper_open && t == upper)) return false;
        return true;
    }

    Interval intersect(const Interval& o) const {
        double lo = std::max(lower, o.lower);
        double hi = std::min(upper, o.upper);
        bool lo_open = (lo == lower && lower_open) || (lo == o.lower && o.lower_open);
        bool hi_open = (hi == upper && upper_open) || (hi == o.upper && o.upper_open);
        if (!(lo < hi)) throw std::invalid_argument("Interval::intersect: empty intersection");
        return {lo, hi, lo_open, hi_open};
    }

    std::string str() const {
        auto fmt = [](double v) {
            if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
            return std::to_string(v);
        };
        return (lower_open ? "(" : "[") + fmt(lower) + "," + fmt(upper) + (upper_open ? ")" : "]");
    }
};

}  // namespace loewner
