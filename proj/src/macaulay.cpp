#include "wilf/macaulay.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "wilf/bitvec.hpp"
#include "wilf/invariants.hpp"

namespace wilf {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("binomial sum exceeds 64-bit range");
    return r;
}

// Largest n with C(n, k) <= cap (k >= 1, cap >= 0). The prefix values
// C(n-k+t, t) are nondecreasing in t for n >= k, so binomial_capped can cut
// out early and the doubling search below never overflows.
std::int64_t max_n_with_binomial_at_most(std::int64_t k, std::int64_t cap) {
    std::int64_t lo = k - 1;  // C(k-1, k) = 0 <= cap
    std::int64_t hi = k;
    while (binomial_capped(hi, k, cap) <= cap) {
        lo = hi;
        if (hi > (kInt64Max - 1) / 2) throw std::overflow_error("binomial search range");
        hi = hi * 2 + 1;
    }
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (binomial_capped(mid, k, cap) <= cap)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

BigInt factorial(std::int64_t n) {
    BigInt f = 1;
    for (std::int64_t t = 2; t <= n; ++t) f *= t;
    return f;
}

BigInt floor_rational(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);  // truncates toward zero
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

BigInt ceil_rational(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);
    if (x > 0 && q * denominator(x) != numerator(x)) ++q;
    return q;
}

std::int64_t to_int64(const BigInt& v, const char* what) {
    if (v > kInt64Max || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

}  // namespace

std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
    if (k < 0 || n < 0) throw std::invalid_argument("binomial needs n, k >= 0");
    if (cap < 0) return cap + 1;
    if (k > n) return 0;
    k = std::min(k, n - k);
    __int128 c = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        c = c * (n - k + t) / t;  // exact: the prefix is C(n-k+t, t)
        if (c > cap) return cap + 1;
    }
    return static_cast<std::int64_t>(c);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    const std::int64_t v = binomial_capped(n, k, kInt64Max - 1);
    if (v == kInt64Max) throw std::overflow_error("binomial exceeds 64-bit range");
    return v;
}

std::int64_t BinomialRep::value() const {
    std::int64_t v = 0;
    for (std::int64_t j = 1; j <= degree; ++j)
        v = checked_add(v, binomial(coeffs[j - 1], j));
    return v;
}

std::string BinomialRep::to_string() const {
    std::string out;
    for (std::int64_t j = degree; j >= 1; --j) {
        if (!out.empty()) out += '+';
        out += "C(" + std::to_string(coeffs[j - 1]) + "," + std::to_string(j) + ")";
    }
    return out;
}

BinomialRep binomial_representation(std::int64_t a, std::int64_t i) {
    if (a < 0 || i < 1)
        throw std::invalid_argument("binomial representation needs a >= 0, i >= 1");
    BinomialRep rep;
    rep.degree = i;
    rep.coeffs.assign(static_cast<std::size_t>(i), 0);
    std::int64_t rem = a;
    std::int64_t prev = kInt64Max;
    for (std::int64_t j = i; j >= 1; --j) {
        const std::int64_t n = max_n_with_binomial_at_most(j, rem);
        if (n >= prev) throw std::logic_error("greedy binomial coefficients not descending");
        rep.coeffs[j - 1] = n;
        rem -= binomial_capped(n, j, kInt64Max - 1);
        prev = n;
    }
    if (rem != 0) throw std::logic_error("greedy binomial representation incomplete");
    return rep;
}

std::int64_t macaulay_step(std::int64_t a, std::int64_t i) {
    const BinomialRep rep = binomial_representation(a, i);
    std::int64_t v = 0;
    for (std::int64_t j = 1; j <= i; ++j)
        v = checked_add(v, binomial(rep.coeffs[j - 1] + 1, j + 1));
    return v;
}

Rational binomial_real(const Rational& x, std::int64_t i) {
    if (i < 0) throw std::invalid_argument("binomial_real needs i >= 0");
    Rational num = 1;
    for (std::int64_t t = 0; t < i; ++t) num *= (x - t);
    return num / Rational(factorial(i));
}

BinomialInverse binomial_inverse(std::int64_t a, std::int64_t i) {
    if (a < 0 || i < 1)
        throw std::invalid_argument("binomial inverse needs a >= 0, i >= 1");
    BinomialInverse inv;
    inv.a = a;
    inv.degree = i;
    const std::int64_t n = max_n_with_binomial_at_most(i, a);
    if (binomial_capped(n, i, a) == a) {
        inv.lo = inv.hi = n;
        inv.exact = true;
        return inv;
    }
    // C(n, i) < a < C(n+1, i): bisect the unit bracket with exact rationals.
    Rational lo = n;
    Rational hi = n + 1;
    for (int step = 0; step < 40; ++step) {
        const Rational mid = (lo + hi) / 2;
        const Rational v = binomial_real(mid, i);
        if (v == a) {
            inv.lo = inv.hi = mid;
            inv.exact = true;
            return inv;
        }
        (v < a ? lo : hi) = mid;
    }
    inv.lo = lo;
    inv.hi = hi;
    inv.exact = false;
    return inv;
}

HilbertSequence hilbert_from_sumsets(const ElementSet& A, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sumset sequence needs n >= 1");
    if (A.empty()) throw std::invalid_argument("sumset generators are empty");
    for (std::size_t t = 0; t < A.size(); ++t) {
        if (A[t] < 1)
            throw std::invalid_argument("sumset generator " + std::to_string(A[t]) +
                                        " is not positive");
        if (t > 0 && A[t] <= A[t - 1])
            throw std::invalid_argument("sumset generators must be strictly increasing");
    }
    HilbertSequence h;
    h.generators = A;
    h.values.reserve(static_cast<std::size_t>(n) + 1);
    h.values.push_back(1);
    const std::int64_t width = n * A.back() + 1;
    BitVec cur(width);
    cur.set(0);
    for (std::int64_t i = 1; i <= n; ++i) {
        BitVec next(width);
        for (auto a : A) next.or_shifted(cur, a);
        cur = std::move(next);
        h.values.push_back(cur.count_range(0, width));
    }
    return h;
}

bool macaulay_growth_ok(const HilbertSequence& h) {
    if (h.values.empty() || h.values[0] != 1)
        throw std::invalid_argument("sequence must start with h_0 = 1");
    for (auto v : h.values)
        if (v < 0) throw std::invalid_argument("sequence entries must be nonnegative");
    for (std::size_t i = 1; i + 1 < h.values.size(); ++i)
        if (h.values[i + 1] > macaulay_step(h.values[i], static_cast<std::int64_t>(i)))
            return false;
    return true;
}

CondensedBounds condensed_bounds(std::int64_t h_r, std::int64_t r) {
    if (h_r < 0 || r < 1)
        throw std::invalid_argument("condensed bounds need h_r >= 0, r >= 1");
    const BinomialInverse inv = binomial_inverse(h_r, r);
    // C(., r-1) and C(., r+1) are increasing where evaluated (the bracket
    // stays in x >= r-1), so the lower bracket end bounds the lower
    // neighbour and the upper end bounds the upper neighbour.
    CondensedBounds out;
    out.lower_prev =
        to_int64(ceil_rational(binomial_real(inv.lo - 1, r - 1)), "lower bound");
    out.upper_next =
        to_int64(floor_rational(binomial_real(inv.hi + 1, r + 1)), "upper bound");
    return out;
}

bool averaging_bound_ok(const HilbertSequence& h, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("averaging bound needs q >= 1");
    if (static_cast<std::int64_t>(h.values.size()) < q + 1)
        throw std::invalid_argument("sequence too short for the requested q");
    if (h.values[0] != 1)
        throw std::invalid_argument("sequence must start with h_0 = 1");
    std::int64_t partial = 1;  // 1 + h_1 + ... + h_{q-1}
    for (std::int64_t t = 1; t < q; ++t) partial = checked_add(partial, h.values[t]);
    const __int128 lhs = static_cast<__int128>(q) * h.values[q];
    const __int128 rhs = static_cast<__int128>(h.values[1]) * partial;
    return lhs <= rhs;
}

QuotientDims quotient_dims(const NumericalSemigroup& s) {
    const LevelDecomposition d = decompose(s);
    if (d.q != 3) throw std::invalid_argument("quotient dimensions need q = 3");
    const auto p = profile(s);
    if (p[1] != 0)
        throw std::invalid_argument("quotient dimensions need profile (k, 0)");
    const ElementSet& x1 = d.apery_levels[1];
    auto intersect_count = [](const ElementSet& a, const ElementSet& b) {
        std::int64_t n = 0;
        auto it = b.begin();
        for (auto v : a) {
            while (it != b.end() && *it < v) ++it;
            if (it != b.end() && *it == v) ++n;
        }
        return n;
    };
    auto sum2 = [](const ElementSet& a, const ElementSet& b) {
        std::set<std::int64_t> out;
        for (auto x : a)
            for (auto y : b) out.insert(x + y);
        return ElementSet(out.begin(), out.end());
    };
    const ElementSet xx = sum2(x1, x1);
    const ElementSet xxx = sum2(xx, x1);
    QuotientDims out;
    out.d1 = static_cast<std::int64_t>(x1.size());
    out.d2 = intersect_count(xx, d.apery_levels[2]);
    out.d3 = intersect_count(xxx, d.apery_levels[3]);
    return out;
}

}  // namespace wilf
