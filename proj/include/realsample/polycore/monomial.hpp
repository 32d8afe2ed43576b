#ifndef REALSAMPLE_POLYCORE_MONOMIAL_HPP
#define REALSAMPLE_POLYCORE_MONOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace realsample {

/// Dense exponent vector, one slot per ring variable. Total degree is cached.
class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<exponent_type> e) : exps_(e) { recompute(); }
    explicit Monomial(std::vector<exponent_type> e) : exps_(std::move(e)) { recompute(); }

    static Monomial unit(std::size_t nvars, std::size_t var, exponent_type power = 1) {
        Monomial m(nvars);
        m.exps_[var] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    exponent_type operator[](std::size_t i) const { return exps_[i]; }
    std::span<const exponent_type> exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, exponent_type e) {
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = e;
    }

    /// Degree restricted to the variables flagged in `mask`.
    std::uint64_t degree_in(const std::vector<bool>& mask) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (mask[i]) d += exps_[i];
        return d;
    }

    bool divides(const Monomial& other) const {
        assert(size() == other.size());
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Bit i set iff variable i occurs. Rings have at most 64 variables.
    std::uint64_t support_mask() const {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0) mask |= (std::uint64_t{1} << i);
        return mask;
    }

    bool coprime_with(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.size() == b.size());
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// a / b, requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        assert(b.divides(a));
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.recompute();
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    /// Lexicographic on the raw vector; only for use as a container key.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
        return h;
    }

private:
    void recompute() {
        degree_ = 0;
        for (auto e : exps_) degree_ += e;
    }

    std::vector<exponent_type> exps_;
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded reverse lexicographic comparison: negative, zero, positive.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline int lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace realsample

#endif
