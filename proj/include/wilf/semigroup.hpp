#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wilf/bitvec.hpp"

namespace wilf {

/// Sorted, duplicate-free list of nonnegative integers. Carrier type for the
/// element sets handed out by the queries below (primitives, Apéry set, ...).
using ElementSet = std::vector<std::int64_t>;

/// Generator data for a numerical semigroup: a strictly increasing list A of
/// positive integers, optionally capped so the described set is
/// <A> ∪ [cap, ∞) instead of <A> alone.
struct GeneratorSpec {
    std::vector<std::int64_t> generators;
    std::optional<std::int64_t> cap;

    /// Parses "a1,a2,...[:cap]", e.g. "14,22,23:56".
    /// Throws std::invalid_argument naming the offending token.
    static GeneratorSpec parse(std::string_view text);

    std::string to_string() const;

    /// Throws std::invalid_argument unless the spec is well-formed: nonempty,
    /// positive, strictly increasing, generators within the supported range,
    /// gcd 1 when uncapped, cap >= least generator when capped.
    void validate() const;
};

/// A numerical semigroup S ⊆ ℕ: 0 ∈ S, closed under addition, finite
/// complement. Membership and decomposability are stored as dense bit tables
/// on the window [0, c+m); every integer >= conductor c is a member
/// implicitly. Immutable after construction, safe to share across threads.
class NumericalSemigroup {
public:
    static NumericalSemigroup build(const GeneratorSpec& spec);
    static NumericalSemigroup from_text(std::string_view text);

    std::int64_t multiplicity() const { return m_; }
    std::int64_t conductor() const { return c_; }
    /// Largest gap, or -1 for S = ℕ (no gaps).
    std::int64_t frobenius() const { return c_ > 1 ? c_ - 1 : -1; }
    std::int64_t genus() const { return g_; }
    std::int64_t window_end() const { return c_ + m_; }

    /// Membership test for any x >= 0; throws std::domain_error on x < 0.
    bool contains(std::int64_t x) const;
    /// True iff x is a sum of two nonzero members. Defined for any x >= 0
    /// (everything at or past c+m is decomposable).
    bool is_decomposable(std::int64_t x) const;

    /// Minimal generating set: nonzero members that are not sums of two
    /// nonzero members. Always within [m, c+m).
    ElementSet primitives() const;
    /// Decomposable members in [lo, hi); requires 0 <= lo <= hi <= c+m.
    ElementSet decomposables_in(std::int64_t lo, std::int64_t hi) const;
    /// Least member of each residue class mod m. Always m elements.
    ElementSet apery_set() const;
    /// Members strictly below the conductor.
    ElementSet left_part() const;
    /// Members in [lo, hi); requires 0 <= lo <= hi <= c+m.
    ElementSet members_in(std::int64_t lo, std::int64_t hi) const;

    /// The semigroup S \ {x} for a right primitive x (primitive with
    /// x >= c): the unique tree child whose Frobenius number is x.
    NumericalSemigroup without(std::int64_t x) const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.m_ == b.m_ && a.c_ == b.c_ && a.g_ == b.g_ && a.members_ == b.members_;
    }

private:
    NumericalSemigroup(BitVec members, std::int64_t m, std::int64_t c, std::int64_t g);
    static NumericalSemigroup from_closure(BitVec bits);
    void build_decomposables();

    BitVec members_;
    BitVec decomp_;
    std::int64_t m_ = 1;
    std::int64_t c_ = 1;
    std::int64_t g_ = 0;
};

}  // namespace wilf
