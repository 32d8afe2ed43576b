#ifndef REALSAMPLE_GROEBNER_ORDER_HPP
#define REALSAMPLE_GROEBNER_ORDER_HPP

#include <realsample/polycore/polynomial.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

/// Monomial order on a fixed ring: graded reverse lex, lex, or a block order
/// that eliminates a first block of variables (degrevlex inside each block).
class MonomialOrder {
public:
    enum class Kind { degrevlex, lex, block_elimination };

    static MonomialOrder degrevlex(const Ring& ring) { return MonomialOrder(Kind::degrevlex, ring, {}); }
    static MonomialOrder lex(const Ring& ring) { return MonomialOrder(Kind::lex, ring, {}); }

    /// Every monomial involving a `first_block` variable is larger than every
    /// monomial free of them.
    static MonomialOrder block_elimination(const Ring& ring, const std::vector<std::string>& first_block) {
        return MonomialOrder(Kind::block_elimination, ring, first_block);
    }

    Kind kind() const noexcept { return kind_; }
    const Ring& ring() const noexcept { return ring_; }
    const std::vector<bool>& first_block_mask() const noexcept { return in_block_; }

    std::vector<std::string> first_block() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ring_.size(); ++i)
            if (in_block_[i]) out.push_back(ring_.name(i));
        return out;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::degrevlex:
            return grevlex_compare(a, b);
        case Kind::lex:
            return lex_compare(a, b);
        case Kind::block_elimination:
            break;
        }
        if (int c = block_compare(a, b, true)) return c;
        return block_compare(a, b, false);
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.ring_ == b.ring_ && a.in_block_ == b.in_block_;
    }

private:
    MonomialOrder(Kind kind, Ring ring, const std::vector<std::string>& first_block)
        : kind_(kind), ring_(std::move(ring)), in_block_(ring_.size(), false) {
        for (const auto& v : first_block) in_block_[ring_.require_index(v)] = true;
    }

    // degrevlex restricted to the variables with in_block_ == inside.
    int block_compare(const Monomial& a, const Monomial& b, bool inside) const {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (in_block_[i] == inside) {
                da += a[i];
                db += b[i];
            }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (in_block_[i] != inside) continue;
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    Kind kind_;
    Ring ring_;
    std::vector<bool> in_block_;
};

/// Leading monomial of a nonzero polynomial under `order`.
inline Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw std::invalid_argument("leading monomial of zero");
    const Monomial* best = &f.terms()[0].mono;
    for (const auto& t : f.terms())
        if (order.greater(t.mono, *best)) best = &t.mono;
    return *best;
}

inline Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
    Monomial lm = leading_monomial(f, order);
    for (const auto& t : f.terms())
        if (t.mono == lm) return t.coeff;
    return 0;
}

}  // namespace realsample

#endif
