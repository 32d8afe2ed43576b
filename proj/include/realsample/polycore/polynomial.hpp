#ifndef REALSAMPLE_POLYCORE_POLYNOMIAL_HPP
#define REALSAMPLE_POLYCORE_POLYNOMIAL_HPP

#include <realsample/polycore/monomial.hpp>
#include <realsample/rational.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

/// Ordered list of variable names. Cheap to copy; two rings are equal iff the
/// name lists are equal.
class Ring {
public:
    Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Ring(std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name '" + names[i] + "'");
        if (names.size() > 64) throw std::invalid_argument("rings are limited to 64 variables");
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    std::size_t size() const noexcept { return names_->size(); }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }

    std::size_t require_index(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return *i;
    }

    /// A new ring with the given names appended.
    Ring extended(const std::vector<std::string>& extra) const {
        auto all = names();
        all.insert(all.end(), extra.begin(), extra.end());
        return Ring(std::move(all));
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted by decreasing grevlex
/// order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(const Ring& ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({Monomial(ring.size()), c});
        return p;
    }

    static Polynomial variable(const Ring& ring, std::size_t index) {
        if (index >= ring.size()) throw std::out_of_range("variable index out of range");
        Polynomial p(ring);
        p.terms_.push_back({Monomial::unit(ring.size(), index), Rational(1)});
        return p;
    }

    static Polynomial variable(const Ring& ring, std::string_view name) {
        return variable(ring, ring.require_index(name));
    }

    static Polynomial monomial(const Ring& ring, Monomial m, const Rational& c = 1) {
        if (m.size() != ring.size()) throw std::invalid_argument("monomial width does not match ring");
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }

    /// Builds from arbitrary terms: combines duplicates and drops zeros.
    static Polynomial from_terms(const Ring& ring, std::vector<Term> terms) {
        Polynomial p(ring);
        for (const auto& t : terms)
            if (t.mono.size() != ring.size()) throw std::invalid_argument("monomial width does not match ring");
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Rational constant_term() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
        return 0;
    }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.mono.degree()));
        return d;
    }

    long degree_in(std::size_t var) const {
        long d = -1;
        for (const auto& t : terms_) d = std::max<long>(d, t.mono[var]);
        return d;
    }

    bool involves(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono[var] != 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        std::map<Monomial, Rational> acc;
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) out.push_back({m, c});
        Polynomial r(a.ring_);
        r.terms_ = std::move(out);
        r.sort_terms();
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        if (c == 0) return Polynomial(a.ring_);
        Polynomial r = a;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(ring_, 1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    Polynomial derivative(std::size_t var) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            auto e = t.mono[var];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.set(var, e - 1);
            out.push_back({std::move(m), t.coeff * e});
        }
        return from_terms(ring_, std::move(out));
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != ring_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
        Rational sum = 0;
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (Monomial::exponent_type k = 0; k < t.mono[i]; ++k) v *= point[i];
            sum += v;
        }
        return sum;
    }

    /// Substitutes each variable i by images[i] (all in one target ring).
    Polynomial compose(const Ring& target, std::span<const Polynomial> images) const {
        if (images.size() != ring_.size()) throw std::invalid_argument("compose: need one image per variable");
        for (const auto& im : images)
            if (!(im.ring() == target)) throw std::invalid_argument("compose: image outside target ring");
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
            auto& cache = powers[var];
            if (cache.empty()) cache.push_back(constant(target, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
            return cache[e];
        };
        Polynomial sum(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (std::size_t i = 0; i < ring_.size(); ++i)
                if (t.mono[i]) prod *= power_of(i, t.mono[i]);
            sum += prod;
        }
        return sum;
    }

    /// Substitutes one variable by a polynomial of the same ring.
    Polynomial substitute(std::size_t var, const Polynomial& value) const {
        std::vector<Polynomial> images;
        images.reserve(ring_.size());
        for (std::size_t i = 0; i < ring_.size(); ++i)
            images.push_back(i == var ? value : variable(ring_, i));
        return compose(ring_, images);
    }

    /// Re-expresses the polynomial in another ring, matching variables by name.
    /// Variables of `target` absent here get exponent 0; every variable that
    /// occurs here must exist in `target`.
    Polynomial map_to(const Ring& target) const {
        std::vector<std::optional<std::size_t>> where(ring_.size());
        for (std::size_t i = 0; i < ring_.size(); ++i) where[i] = target.index_of(ring_.name(i));
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(target.size());
            for (std::size_t i = 0; i < ring_.size(); ++i) {
                if (t.mono[i] == 0) continue;
                if (!where[i]) throw std::invalid_argument("variable '" + ring_.name(i) + "' not in target ring");
                m.set(*where[i], t.mono[i]);
            }
            out.push_back({std::move(m), t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    /// Scales so that the leading (grevlex) coefficient is 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return Rational(1) / terms_.front().coeff * (*this);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            bool wrote = false;
            if (c != 1 || t.mono.is_one()) {
                os << c.get_str();
                wrote = true;
            }
            for (std::size_t i = 0; i < t.mono.size(); ++i) {
                if (t.mono[i] == 0) continue;
                if (wrote) os << '*';
                os << ring_.name(i);
                if (t.mono[i] > 1) os << '^' << t.mono[i];
                wrote = true;
            }
        }
        return os.str();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (!(a.ring_ == b.ring_)) throw std::invalid_argument("polynomials live in different rings");
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, int sgn_b) {
        check_same_ring(a, b);
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i == a.terms_.size()) c = -1;
            else if (j == b.terms_.size()) c = 1;
            else c = grevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                Term t = b.terms_[j++];
                if (sgn_b < 0) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                Rational s = sgn_b > 0 ? Rational(a.terms_[i].coeff + b.terms_[j].coeff) : Rational(a.terms_[i].coeff - b.terms_[j].coeff);
                if (s != 0) r.terms_.push_back({a.terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        return r;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_compare(x.mono, y.mono) > 0; });
    }

    void normalize() {
        sort_terms();
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
            else out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
        terms_ = std::move(out);
    }

    Ring ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator+(const Polynomial& a, const Rational& c) { return a + Polynomial::constant(a.ring(), c); }
inline Polynomial operator-(const Polynomial& a, const Rational& c) { return a - Polynomial::constant(a.ring(), c); }

}  // namespace realsample

#endif
