#pragma once

// Brill-Noether combinatorics: the Brill-Noether number, counts of linear
// series on a general curve, theta-characteristic counts, and binomials with
// the zero-on-out-of-range convention the degeneracy sums rely on.

#include <stdexcept>
#include <string>
#include <vector>

#include "spindiv/rational.hpp"
#include "spindiv/space.hpp"

namespace spindiv {

inline long rho(long g, long r, long d) { return brill_noether_rho(g, r, d); }

// binom(n, m) with binom(n, m) = 0 whenever m < 0 or m > n.
inline Integer binom(long n, long m) {
    if (m < 0 || n < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    Integer out = 1;
    for (long i = 1; i <= m; ++i) {
        out *= n - m + i;
        out /= i;
    }
    return out;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Integer out = 1;
    for (long i = 2; i <= n; ++i) out *= i;
    return out;
}

// n! / (parts_0! parts_1! ...), requiring the parts to sum to n.
inline Integer multinomial(long n, const std::vector<long>& parts) {
    long sum = 0;
    Integer den = 1;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial with negative part");
        sum += p;
        den *= factorial(p);
    }
    if (sum != n) throw std::invalid_argument("multinomial parts must sum to n");
    return factorial(n) / den;
}

// Number of linear series g^r_d on a general genus-g curve when rho = 0:
//   N = g! prod_{i=0}^{r} i! / (g-d+r+i)!
inline Integer linear_series_count(long g, long r, long d) {
    if (rho(g, r, d) != 0) {
        throw std::invalid_argument("count defined only for rho=0, got rho(" + std::to_string(g) +
                                    "," + std::to_string(r) + "," + std::to_string(d) +
                                    ")=" + std::to_string(rho(g, r, d)));
    }
    Rational n = Rational(factorial(g));
    for (long i = 0; i <= r; ++i) {
        n *= Rational(factorial(i), factorial(g - d + r + i));
    }
    if (denominator(n) != 1) throw std::logic_error("linear series count is not integral");
    return numerator(n);
}

// Number of pencils of degree k on a general curve of genus 2k-2, the
// Catalan number (2k-2)! / (k! (k-1)!).
inline Integer catalan_pencils(long k) {
    if (k < 2) throw std::invalid_argument("catalan_pencils requires k >= 2");
    return factorial(2 * k - 2) / (factorial(k) * factorial(k - 1));
}

struct ThetaCounts {
    Integer odd;   // 2^{g-1} (2^g - 1)
    Integer even;  // 2^{g-1} (2^g + 1)
};

inline ThetaCounts theta_counts(long g) {
    if (g < 1) throw std::invalid_argument("theta_counts requires g >= 1");
    const Integer half = Integer(1) << static_cast<unsigned>(g - 1);
    const Integer full = Integer(1) << static_cast<unsigned>(g);
    return {half * (full - 1), half * (full + 1)};
}

}  // namespace spindiv
