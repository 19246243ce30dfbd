#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wilf/semigroup.hpp"

namespace wilf {

/// Per-(genus, q) visit counts for one enumeration run.
class CensusTable {
public:
    void record(std::int64_t genus, std::int64_t q);
    std::int64_t cell(std::int64_t genus, std::int64_t q) const;
    std::int64_t row_total(std::int64_t genus) const;
    /// Largest genus with a recorded row (-1 when empty).
    std::int64_t genus_max() const;
    /// Largest q with a nonzero cell in the given row (0 when none).
    std::int64_t row_max_q(std::int64_t genus) const;
    void merge(const CensusTable& other);

    bool operator==(const CensusTable&) const = default;

private:
    std::vector<std::vector<std::int64_t>> rows_;  // rows_[g][q], index 0 unused
};

/// Children of S in the genus tree: S \ {x} for each right primitive x,
/// ordered by increasing removed element. Empty iff p_q = 0.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s);

struct EnumerationOptions {
    std::int64_t genus_max = 0;
    int workers = 1;
    /// Parallel runs hand whole subtrees rooted at this genus to workers.
    std::int64_t split_depth = 8;
    /// Refuse plainly infeasible runs.
    std::int64_t safety_limit = 40;
};

using Visitor = std::function<void(const NumericalSemigroup&)>;

/// Depth-first walk from ℕ visiting every numerical semigroup of genus
/// <= genus_max exactly once. The visitor (when given) runs on every node;
/// with workers > 1 it is called concurrently and must be thread-safe.
/// The returned census does not depend on the worker count.
CensusTable enumerate(const EnumerationOptions& opts, const Visitor& visitor = {});
CensusTable enumerate(std::int64_t genus_max, const Visitor& visitor = {});

struct ScanHit {
    std::string spec_text;  // canonical "primitives:conductor" reconstruction
    std::int64_t m = 0;
    std::int64_t genus = 0;
    std::int64_t W = 0;
    std::int64_t W0 = 0;
    std::int64_t q = 0;
    std::int64_t rho = 0;
    std::vector<std::int64_t> profile;
    std::vector<std::int64_t> generators;
    std::int64_t cap = 0;
};

enum class ScanMetric { W0, W };

/// Enumerates genus <= genus_max and reports every semigroup whose selected
/// statistic (W0 by default) is strictly below the threshold, sorted by
/// (genus, m, generator list).
std::vector<ScanHit> scan_w0(std::int64_t genus_max, std::int64_t threshold,
                             ScanMetric metric = ScanMetric::W0, int workers = 1);

/// True iff the subtree rooted at S is finite, i.e. gcd of the nonzero left
/// part equals 1. ℕ and the hook semigroups {0} ∪ [m, ∞) root infinite
/// subtrees and return false.
bool subtree_is_finite(const NumericalSemigroup& s);

}  // namespace wilf
