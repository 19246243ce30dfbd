#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wilf/semigroup.hpp"

namespace wilf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k) for n, k >= 0; throws std::overflow_error past int64 range.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// min(C(n, k), cap + 1) without overflow; usable for threshold searches.
std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t cap);

/// The unique degree-i representation a = C(a_i, i) + ... + C(a_1, 1) with
/// a_i > a_{i-1} > ... > a_1 >= 0. Zero contributions use the forced tail
/// a_j = j - 1 (in particular a = 0 is represented by the all-zero tail).
struct BinomialRep {
    std::int64_t degree = 1;
    std::vector<std::int64_t> coeffs;  // coeffs[j-1] = a_j, ascending j

    std::int64_t value() const;
    std::string to_string() const;  // "C(5,3)+C(1,2)+C(0,1)"
};

/// Greedy maximal representation; requires a >= 0 and i >= 1.
BinomialRep binomial_representation(std::int64_t a, std::int64_t i);

/// The Macaulay upper step a^<i> = C(a_i + 1, i + 1) + ... + C(a_1 + 1, 2):
/// the largest admissible value in degree i+1 after a in degree i.
std::int64_t macaulay_step(std::int64_t a, std::int64_t i);

/// C(x, i) = x(x-1)...(x-i+1)/i! for rational x (1 when i = 0).
Rational binomial_real(const Rational& x, std::int64_t i);

/// Bracketed solution of C(x, i) = a on the increasing branch x >= i - 1.
/// Either exact (lo == hi) or C(lo, i) < a < C(hi, i) with
/// hi - lo <= 2^-40.
struct BinomialInverse {
    std::int64_t a = 0;
    std::int64_t degree = 1;
    Rational lo;
    Rational hi;
    bool exact = false;
};

/// Requires a >= 0, i >= 1. Integer solutions are detected exactly before
/// any bisection; otherwise the unit bracket is bisected 40 times with
/// exact rational arithmetic.
BinomialInverse binomial_inverse(std::int64_t a, std::int64_t i);

/// Hilbert-style counting sequence h_i = |iA| (i-fold sumsets of A,
/// 0A = {0}) for i = 0..n, together with its source generators.
struct HilbertSequence {
    std::vector<std::int64_t> values;  // h_0 .. h_n
    ElementSet generators;
};

/// Requires A nonempty, strictly increasing, positive; n >= 1.
HilbertSequence hilbert_from_sumsets(const ElementSet& A, std::int64_t n);

/// Macaulay growth test: h_{i+1} <= h_i^<i> for all consecutive entries.
/// Requires h_0 = 1 and nonnegative entries.
bool macaulay_growth_ok(const HilbertSequence& h);

/// Safe integer bounds on the neighbours of h_r in an admissible sequence:
/// h_{r-1} >= lower_prev and h_{r+1} <= upper_next, evaluated on the exact
/// bracket for x solving C(x, r) = h_r (ceil at the lower end of the
/// bracket, floor at the upper end, so both bounds are always valid).
struct CondensedBounds {
    std::int64_t lower_prev = 0;
    std::int64_t upper_next = 0;
};

CondensedBounds condensed_bounds(std::int64_t h_r, std::int64_t r);

/// Averaging bound q h_q <= h_1 (1 + h_1 + ... + h_{q-1}).
/// Requires 1 <= q and h_0..h_q present.
bool averaging_bound_ok(const HilbertSequence& h, std::int64_t q);

/// For a semigroup with q = 3 and profile (k, 0): the dimension triple
/// (|X_1|, |2X_1 ∩ X_2|, |3X_1 ∩ X_3|) of the associated graded quotient,
/// computed directly from the Apéry levels.
struct QuotientDims {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t d3 = 0;
};

QuotientDims quotient_dims(const NumericalSemigroup& s);

}  // namespace wilf
