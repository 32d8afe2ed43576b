#ifndef REALSAMPLE_SAMPLER_UNIVARIATE_HPP
#define REALSAMPLE_SAMPLER_UNIVARIATE_HPP

#include <realsample/interval.hpp>
#include <realsample/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

/// Dense univariate polynomial over Q, coefficient i of T^i; no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(const Rational& a) { return UPoly(std::vector<Rational>{a}); }
    /// T - a
    static UPoly linear_root(const Rational& a) { return UPoly(std::vector<Rational>{-a, Rational(1)}); }
    static UPoly monomial(std::size_t deg, const Rational& a = 1) {
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = a;
        return UPoly(std::move(c));
    }

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Interval Horner evaluation; exact for a degenerate interval.
    Interval evaluate(const Interval& x) const {
        if (x.is_point()) return Interval::point(evaluate(x.lo));
        Interval acc = Interval::point(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Interval::point(c_[i]);
        return acc;
    }

    UPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (c_.empty()) return *this;
        Rational l = c_.back();
        std::vector<Rational> d;
        for (const auto& a : c_) d.push_back(a / l);
        return UPoly(std::move(d));
    }

    /// Positive rescaling so the leading coefficient has absolute value 1.
    UPoly normalized_abs() const {
        if (c_.empty()) return *this;
        Rational l = abs(c_.back());
        std::vector<Rational> d;
        for (const auto& a : c_) d.push_back(a / l);
        return UPoly(std::move(d));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<Rational> r;
        for (const auto& x : a.c_) r.push_back(-x);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const Rational& s, const UPoly& a) { return UPoly::constant(s) * a; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder of a by b (b nonzero).
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("univariate division by zero");
        std::vector<Rational> r = a.c_;
        const long db = b.degree();
        if (a.degree() < db) return {UPoly(), a};
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
        for (long k = a.degree(); k >= db; --k) {
            Rational t = r[static_cast<std::size_t>(k)] / b.c_.back();
            if (t == 0) continue;
            q[static_cast<std::size_t>(k - db)] = t;
            for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.c_[static_cast<std::size_t>(j)];
        }
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

    std::string to_string(const std::string& var = "T") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            bool neg = a < 0;
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            Rational m = abs(a);
            if (i == 0 || m != 1) out += realsample::to_string(m) + (i ? "*" : "");
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = r.normalized_abs();
    }
    return a.monic();
}

/// s with s*a = 1 mod m; requires gcd(a, m) = 1.
inline UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = a % m, s0, s1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = UPoly::divmod(r0, r1);
        UPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
    return (UPoly::constant(1 / r0.lead()) * s0) % m;
}

/// f / gcd(f, f'), monic.
inline UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

inline std::vector<UPoly> sturm_sequence(const UPoly& f) {
    std::vector<UPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        UPoly r = seq[seq.size() - 2] % seq.back();
        seq.push_back((-r).normalized_abs());
        if (r.is_zero()) break;
    }
    while (!seq.empty() && seq.back().is_zero()) seq.pop_back();
    return seq;
}

/// Sign variations of the sequence at x, zeros skipped.
inline int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(p.evaluate(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Strict bound on the absolute value of every root, a power of two.
inline Rational root_bound(const UPoly& f) {
    Rational m = 0;
    for (long i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f[static_cast<std::size_t>(i)] / f.lead())));
    Rational b = 1;
    while (b <= m + 1) b *= 2;
    return b;
}

/// Disjoint isolating intervals for the distinct real roots of f, sorted,
/// each of width below `width`. Endpoints of non-degenerate intervals are
/// never roots; exact rational roots met by bisection come back as points.
inline std::vector<Interval> isolate_real_roots(const UPoly& f, const Rational& width) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (width <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
    UPoly g = squarefree_part(f);
    std::vector<Interval> out;
    if (g.degree() <= 0) return out;
    if (g.degree() == 1) {
        out.push_back(Interval::point(-g[0] / g[1]));
        return out;
    }
    const auto sturm = sturm_sequence(g);
    // Roots in the half-open (lo, hi]; lo must not be a root.
    auto count = [&](const Rational& lo, const Rational& hi) {
        return sign_variations(sturm, lo) - sign_variations(sturm, hi);
    };
    struct Task {
        Rational a, b;  // neither endpoint is a root
        int roots;
    };
    Rational m = root_bound(g);
    std::vector<Task> stack{{-m, m, count(-m, m)}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.roots == 0) continue;
        if (t.roots == 1 && t.b - t.a < width) {
            out.push_back(Interval(t.a, t.b));
            continue;
        }
        Rational mid = (t.a + t.b) / 2;
        if (g.evaluate(mid) != 0) {
            stack.push_back({mid, t.b, count(mid, t.b)});
            stack.push_back({t.a, mid, count(t.a, mid)});
            continue;
        }
        // Exact root: report it and cut a root-free gap on each side.
        out.push_back(Interval::point(mid));
        Rational left = (t.a + mid) / 2, right = (mid + t.b) / 2;
        while (g.evaluate(left) == 0 || count(left, mid) != 1) left = (left + mid) / 2;
        while (g.evaluate(right) == 0 || count(mid, right) != 0) right = (mid + right) / 2;
        stack.push_back({right, t.b, count(right, t.b)});
        stack.push_back({t.a, left, count(t.a, left)});
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

/// Halves an isolating interval of a root of the squarefree polynomial g.
inline Interval bisect_root(const UPoly& g, const Interval& iv) {
    if (iv.is_point()) return iv;
    Rational mid = iv.midpoint();
    int sm = sgn(g.evaluate(mid));
    if (sm == 0) return Interval::point(mid);
    int sa = sgn(g.evaluate(iv.lo));
    return sm == sa ? Interval(mid, iv.hi) : Interval(iv.lo, mid);
}

}  // namespace realsample

#endif
