#pragma once

#include <cstdint>
#include <vector>

#include "wilf/semigroup.hpp"

namespace wilf {

/// Partition of the window [0, c+m) into the m-point intervals
/// I_j = [jm - rho, (j+1)m - rho) for j = 0..q, where q = ceil(c/m) and
/// rho = qm - c. levels[j] = S ∩ I_j, apery_levels[j] = (Apéry set) ∩ I_j.
/// alpha[j] = |apery_levels[j]| for j < q; alpha[q] counts only the
/// decomposable Apéry elements of the top level.
struct LevelDecomposition {
    std::int64_t q = 1;
    std::int64_t rho = 0;
    std::vector<ElementSet> levels;
    std::vector<ElementSet> apery_levels;
    std::vector<std::int64_t> alpha;
};

LevelDecomposition decompose(const NumericalSemigroup& s);

/// Primitive counts per level below the top: (p_1, ..., p_{q-1}).
/// Empty when q = 1.
std::vector<std::int64_t> profile(const NumericalSemigroup& s);

/// All first-order invariants of one semigroup, including the Wilf number
/// W = e|L| - c and the graded lower bound W0 = |P∩L||L| - q d_q + rho.
struct WilfReport {
    std::int64_t m = 0;
    std::int64_t c = 0;
    std::int64_t frobenius = 0;
    std::int64_t genus = 0;
    std::int64_t q = 0;
    std::int64_t rho = 0;
    std::int64_t e = 0;          // number of primitives
    std::int64_t left_size = 0;  // |L| = members below c
    std::vector<std::int64_t> profile;
    std::int64_t p_q = 0;  // primitives in the top level [c, c+m)
    std::int64_t d_q = 0;  // decomposables in the top level
    std::int64_t W = 0;
    std::int64_t W0 = 0;
};

/// Computes the report and cross-checks the counting identities
/// (W = p_q(|L|-q) + W0, p_q + d_q = m, the alpha sums) on every call,
/// throwing std::logic_error if any fails.
WilfReport wilf_report(const NumericalSemigroup& s);

/// Measured sumset spill for one level pair: how much of S_i + S_j lands one
/// level below i+j ("below", at most rho) and one level above ("above", at
/// most m - rho - 1).
struct LevelPairCounts {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t below = 0;
    std::int64_t above = 0;
};

struct GradingCheck {
    bool weak_grading_ok = false;
    bool true_grading_ok = false;
    std::vector<LevelPairCounts> intersections;
};

/// Verifies, for every 1 <= i <= j with i+j <= q, that S_i + S_j stays
/// within the admissible neighbouring levels (S_{i+j} and S_{i+j+1} when
/// i = 1; additionally S_{i+j-1} when i,j >= 2) and that the spill counts
/// respect the rho / m-rho-1 bounds.
GradingCheck check_weak_grading(const NumericalSemigroup& s);

/// True iff S_i + S_j = S_{i+j} for all i, j >= 1 with i + j <= q - 1.
bool check_true_grading(const NumericalSemigroup& s);

/// True iff every primitive below the conductor lies in
/// [m, m + (m - rho)/(q - 1)), checked by exact cross-multiplication.
/// Requires q >= 4 (throws std::invalid_argument otherwise). Semigroups
/// passing this test are true-graded, hence satisfy W0 >= rho >= 0.
bool confined_left_primitives(const NumericalSemigroup& s);

struct LeftGcdCheck {
    std::int64_t gcd = 0;  // gcd of the nonzero left part; 0 when L = {0}
    bool e_at_least_half_m = false;
};

/// Gcd of the left part (equivalently of the left primitives) together with
/// the embedding-dimension bound 2e >= m that must accompany gcd >= 2.
/// Throws std::invalid_argument for S = ℕ.
LeftGcdCheck check_left_gcd(const NumericalSemigroup& s);

}  // namespace wilf
