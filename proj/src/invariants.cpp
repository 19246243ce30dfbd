#include "wilf/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace wilf {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("invariant violated: ") + what);
}

std::int64_t count_primitive(const NumericalSemigroup& s, const ElementSet& xs) {
    std::int64_t n = 0;
    for (auto x : xs)
        if (!s.is_decomposable(x)) ++n;
    return n;
}

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
    std::set<std::int64_t> out;
    for (auto x : a)
        for (auto y : b) out.insert(x + y);
    return ElementSet(out.begin(), out.end());
}

std::vector<std::int64_t> profile_from(const NumericalSemigroup& s,
                                       const LevelDecomposition& d) {
    std::vector<std::int64_t> p;
    for (std::int64_t j = 1; j < d.q; ++j)
        p.push_back(count_primitive(s, d.levels[j]));
    require(p.empty() || p.front() >= 1, "p_1 >= 1");
    return p;
}

}  // namespace

LevelDecomposition decompose(const NumericalSemigroup& s) {
    const std::int64_t m = s.multiplicity();
    const std::int64_t c = s.conductor();
    LevelDecomposition d;
    d.q = (c + m - 1) / m;
    d.rho = d.q * m - c;
    d.levels.assign(d.q + 1, {});
    d.apery_levels.assign(d.q + 1, {});
    for (auto x : s.members_in(0, s.window_end())) {
        const std::int64_t j = (x + d.rho) / m;
        d.levels[j].push_back(x);
        if (x < m || !s.contains(x - m)) d.apery_levels[j].push_back(x);
    }
    d.alpha.assign(d.q + 1, 0);
    for (std::int64_t j = 0; j < d.q; ++j)
        d.alpha[j] = static_cast<std::int64_t>(d.apery_levels[j].size());
    for (auto x : d.apery_levels[d.q])
        if (s.is_decomposable(x)) ++d.alpha[d.q];

    require(d.levels[0] == ElementSet{0}, "S_0 = {0}");
    require(static_cast<std::int64_t>(d.levels[d.q].size()) == m,
            "top level is the full interval [c, c+m)");
    for (std::int64_t j = 0; j <= d.q; ++j)
        require(s.contains(j * m), "j*m is a member for 0 <= j <= q");
    for (std::int64_t j = 0; j + 1 < d.q; ++j)
        require(d.levels[j].size() <= d.levels[j + 1].size(),
                "|S_j| is nondecreasing below the top level");
    require(d.alpha[0] == 1, "alpha_0 = 1");
    // Apéry elements of the top level are exactly the right primitives plus
    // the alpha_q decomposables, except at q = 1 where the multiplicity is a
    // primitive that is never an Apéry element; hence the +1 there.
    const std::int64_t p_q = count_primitive(s, d.levels[d.q]);
    const std::int64_t alpha_sum = std::accumulate(d.alpha.begin(), d.alpha.end(),
                                                   std::int64_t{0});
    require(alpha_sum + p_q == m + (d.q == 1 ? 1 : 0), "alpha sums to m - p_q");
    return d;
}

std::vector<std::int64_t> profile(const NumericalSemigroup& s) {
    return profile_from(s, decompose(s));
}

WilfReport wilf_report(const NumericalSemigroup& s) {
    const LevelDecomposition d = decompose(s);
    WilfReport r;
    r.m = s.multiplicity();
    r.c = s.conductor();
    r.frobenius = s.frobenius();
    r.genus = s.genus();
    r.q = d.q;
    r.rho = d.rho;
    r.e = static_cast<std::int64_t>(s.primitives().size());
    r.left_size = static_cast<std::int64_t>(s.left_part().size());
    r.profile = profile_from(s, d);
    r.p_q = count_primitive(s, d.levels[d.q]);
    r.d_q = static_cast<std::int64_t>(d.levels[d.q].size()) - r.p_q;
    r.W = r.e * r.left_size - r.c;
    const std::int64_t left_prims = r.e - r.p_q;
    r.W0 = left_prims * r.left_size - r.q * r.d_q + r.rho;

    require(r.left_size == r.c - r.genus, "|L| = c - g");
    require(r.p_q + r.d_q == r.m, "p_q + d_q = m");
    require(left_prims ==
                std::accumulate(r.profile.begin(), r.profile.end(), std::int64_t{0}),
            "|P ∩ L| is the profile sum");
    require(r.W == r.p_q * (r.left_size - r.q) + r.W0, "W = p_q(|L| - q) + W0");
    // Apéry counting identities. The d_q identity needs the top-level Apéry
    // elements to be right primitives or alpha_q-decomposables; at q = 1 the
    // multiplicity is a primitive outside the Apéry set, shifting it by one.
    const std::int64_t alpha_sum =
        std::accumulate(d.alpha.begin(), d.alpha.end(), std::int64_t{0});
    require(r.d_q == alpha_sum - (r.q == 1 ? 1 : 0), "d_q = sum of alpha");
    std::int64_t weighted = 0;
    for (std::int64_t i = 0; i < d.q; ++i) weighted += (d.q - i) * d.alpha[i];
    require(r.left_size == weighted, "|L| = sum (q - i) alpha_i");
    return r;
}

GradingCheck check_weak_grading(const NumericalSemigroup& s) {
    const LevelDecomposition d = decompose(s);
    const std::int64_t m = s.multiplicity();
    GradingCheck out;
    out.weak_grading_ok = true;
    for (std::int64_t i = 1; i <= d.q; ++i) {
        for (std::int64_t j = i; i + j <= d.q; ++j) {
            LevelPairCounts pc;
            pc.i = i;
            pc.j = j;
            bool confined = true;
            for (auto z : sumset(d.levels[i], d.levels[j])) {
                // Level index of z in the notional extension of the interval
                // ladder past the window; no table lookup needed, members at
                // or past c are implicit.
                const std::int64_t k = (z + d.rho) / m;
                if (k == i + j - 1) ++pc.below;
                if (k == i + j + 1) ++pc.above;
                const bool allowed =
                    (k == i + j) || (k == i + j + 1) || (i >= 2 && k == i + j - 1);
                if (!allowed) confined = false;
            }
            if (!confined || pc.below > d.rho || pc.above > m - d.rho - 1)
                out.weak_grading_ok = false;
            out.intersections.push_back(pc);
        }
    }
    out.true_grading_ok = check_true_grading(s);
    return out;
}

bool check_true_grading(const NumericalSemigroup& s) {
    const LevelDecomposition d = decompose(s);
    for (std::int64_t i = 1; i <= d.q - 1; ++i)
        for (std::int64_t j = i; i + j <= d.q - 1; ++j)
            if (sumset(d.levels[i], d.levels[j]) != d.levels[i + j]) return false;
    return true;
}

bool confined_left_primitives(const NumericalSemigroup& s) {
    const LevelDecomposition d = decompose(s);
    if (d.q < 4)
        throw std::invalid_argument("confined-primitive test needs q >= 4");
    const std::int64_t m = s.multiplicity();
    for (auto x : s.primitives()) {
        if (x >= s.conductor()) break;
        if ((x - m) * (d.q - 1) >= m - d.rho) return false;
    }
    return true;
}

LeftGcdCheck check_left_gcd(const NumericalSemigroup& s) {
    if (s.conductor() == 1)
        throw std::invalid_argument("left-gcd test is undefined for S = ℕ");
    LeftGcdCheck out;
    for (auto x : s.left_part())
        if (x > 0) out.gcd = std::gcd(out.gcd, x);
    out.e_at_least_half_m =
        2 * static_cast<std::int64_t>(s.primitives().size()) >= s.multiplicity();
    return out;
}

}  // namespace wilf
