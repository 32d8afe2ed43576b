#ifndef REALSAMPLE_INTERVAL_HPP
#define REALSAMPLE_INTERVAL_HPP

#include <realsample/polycore/polynomial.hpp>

#include <algorithm>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace realsample {

/// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
    Rational lo = 0;
    Rational hi = 0;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }
    static Interval point(const Rational& q) { return Interval(q, q); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool excludes_zero() const { return !contains_zero(); }
    bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }

    friend Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
    friend Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
    }
    friend Interval operator*(const Rational& c, const Interval& a) {
        return c >= 0 ? Interval(c * a.lo, c * a.hi) : Interval(c * a.hi, c * a.lo);
    }
    /// Requires b not to contain zero.
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
        Rational inv_lo = 1 / b.hi, inv_hi = 1 / b.lo;
        return a * Interval(std::move(inv_lo), std::move(inv_hi));
    }
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << "[" << a.lo << ", " << a.hi << "]"; }
};

/// a^e, tight for even powers of intervals straddling zero.
inline Interval pow(const Interval& a, unsigned e) {
    if (e == 0) return Interval::point(1);
    Rational lo = 1, hi = 1;
    for (unsigned k = 0; k < e; ++k) {
        lo *= a.lo;
        hi *= a.hi;
    }
    if (e % 2 == 1) return Interval(lo, hi);
    if (a.lo >= 0) return Interval(lo, hi);
    if (a.hi <= 0) return Interval(hi, lo);
    return Interval(0, std::max(lo, hi));
}

/// Naive interval extension of f over a box (one interval per ring variable).
inline Interval evaluate(const Polynomial& f, std::span<const Interval> box) {
    if (box.size() != f.ring().size()) throw std::invalid_argument("interval evaluate: box has wrong dimension");
    Interval sum = Interval::point(0);
    for (const auto& t : f.terms()) {
        Interval prod = Interval::point(t.coeff);
        for (std::size_t v = 0; v < box.size(); ++v)
            if (t.mono[v] != 0) prod = prod * pow(box[v], t.mono[v]);
        sum = sum + prod;
    }
    return sum;
}

using Box = std::vector<Interval>;

inline Rational box_width(const Box& b) {
    Rational w = 0;
    for (const auto& iv : b) w = std::max(w, iv.width());
    return w;
}

inline bool boxes_intersect(const Box& a, const Box& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].intersects(b[i])) return false;
    return true;
}

}  // namespace realsample

#endif
