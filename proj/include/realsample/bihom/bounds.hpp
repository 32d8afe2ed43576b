#ifndef REALSAMPLE_BIHOM_BOUNDS_HPP
#define REALSAMPLE_BIHOM_BOUNDS_HPP

#include <realsample/errors.hpp>
#include <realsample/polycore/blocks.hpp>
#include <realsample/rational.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

struct BoundInputs {
    long n = 0;
    long k = 0;
    std::vector<BiDegree> bidegrees;

    /// Throws HypothesisViolation unless at most n entries have beta = 0 and
    /// at most k entries have alpha = 0.
    void check() const {
        if (n < 0 || k < 0) throw std::invalid_argument("bound inputs: negative block size");
        long zero_beta = 0, zero_alpha = 0;
        for (const auto& b : bidegrees) {
            if (b.alpha < 0 || b.beta < 0) throw std::invalid_argument("bound inputs: negative bi-degree");
            zero_beta += b.beta == 0;
            zero_alpha += b.alpha == 0;
        }
        if (zero_beta > n)
            throw HypothesisViolation("bezout bound: " + std::to_string(zero_beta) + " polynomials of l-degree 0 but n = " +
                                      std::to_string(n));
        if (zero_alpha > k)
            throw HypothesisViolation("bezout bound: " + std::to_string(zero_alpha) +
                                      " polynomials of X-degree 0 but k = " + std::to_string(k));
        if (static_cast<long>(bidegrees.size()) > n + k)
            throw HypothesisViolation("bezout bound: more polynomials than n + k");
    }
};

/// Sum over splittings {1..s} = I u J with |I| <= n, |J| <= k of
/// prod_{i in I} alpha_i * prod_{j in J} beta_j.
inline Integer bezout_bound(const BoundInputs& in) {
    in.check();
    const std::size_t s = in.bidegrees.size();
    if (s > 30) throw std::invalid_argument("bezout bound: too many polynomials to enumerate");
    Integer total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        long in_i = std::popcount(mask);
        if (in_i > in.n || static_cast<long>(s) - in_i > in.k) continue;
        Integer prod = 1;
        for (std::size_t t = 0; t < s; ++t)
            prod *= (mask >> t & 1) ? in.bidegrees[t].alpha : in.bidegrees[t].beta;
        total += prod;
    }
    return total;
}

namespace detail {

inline void check_degrees(const std::vector<long>& degrees, long n, const char* who) {
    const long s = static_cast<long>(degrees.size());
    if (s < 1 || s > n - 1)
        throw std::invalid_argument(std::string(who) + ": need 1 <= s <= n-1, got s = " + std::to_string(s) +
                                    ", n = " + std::to_string(n));
    for (long d : degrees)
        if (d < 1) throw std::invalid_argument(std::string(who) + ": degrees must be positive");
}

inline Integer degree_product(const std::vector<long>& degrees) {
    Integer p = 1;
    for (long d : degrees) p *= d;
    return p;
}

}  // namespace detail

/// D_1...D_s (D-1)^(n-s) binom(n, n-s), or binom(n-1, n-s) for a regular
/// sequence; D = max D_i.
inline Integer critical_bound(const std::vector<long>& degrees, long n, bool regular) {
    detail::check_degrees(degrees, n, "critical_bound");
    const long s = static_cast<long>(degrees.size());
    const long dmax = *std::max_element(degrees.begin(), degrees.end());
    return detail::degree_product(degrees) * ipow(Integer(dmax - 1), n - s) * binomial(regular ? n - 1 : n, n - s);
}

/// Bound on the number of points produced by the sampler (the sum of the
/// critical bounds over all fiber depths). `d` is the dimension of the
/// variety and only matters in the non-regular case.
inline Integer betti_bound(const std::vector<long>& degrees, long n, long d, bool regular) {
    detail::check_degrees(degrees, n, "betti_bound");
    const long s = static_cast<long>(degrees.size());
    const long dmax = *std::max_element(degrees.begin(), degrees.end());
    const long last = regular ? n - s : d;
    if (last < 0) throw std::invalid_argument("betti_bound: negative dimension");
    Integer sum = 0;
    for (long i = 0; i <= last; ++i) {
        if (n - s - i < 0) continue;  // binomial vanishes
        sum += ipow(Integer(dmax - 1), n - s - i) * binomial(regular ? n - 1 - i : n - i, n - i - s);
    }
    return detail::degree_product(degrees) * sum;
}

inline Integer thom_milnor_bound(long D, long n) {
    if (D < 1 || n < 1) throw std::invalid_argument("thom_milnor_bound: need D >= 1 and n >= 1");
    return Integer(D) * ipow(Integer(2 * D - 1), n - 1);
}

}  // namespace realsample

#endif
