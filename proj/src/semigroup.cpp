#include "wilf/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace wilf {

namespace {

// Generators (and caps) are kept well below the 64-bit range so window
// arithmetic and the invariant formulas never overflow.
constexpr std::int64_t kMaxGenerator = std::int64_t{1} << 31;
// Hard stop for membership windows; anything beyond this is not desk scale.
constexpr std::int64_t kMaxWindowBits = std::int64_t{1} << 33;

std::int64_t parse_int(std::string_view tok, const char* what) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || tok.empty())
        throw std::invalid_argument(std::string("bad ") + what + " token '" +
                                    std::string(tok) + "'");
    return v;
}

// Closes bits under +a by doubling shifts: after shifting by a, 2a, 4a, ...
// the set contains every x + k*a that fits in the window.
void close_under(BitVec& bits, std::int64_t a) {
    for (std::int64_t step = a; step < bits.size(); step *= 2)
        bits.or_shifted(bits, step);
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
    GeneratorSpec spec;
    std::string_view gens = text;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        gens = text.substr(0, colon);
        std::string_view cap_tok = text.substr(colon + 1);
        if (cap_tok.find(':') != std::string_view::npos)
            throw std::invalid_argument("bad cap token '" + std::string(cap_tok) + "'");
        spec.cap = parse_int(cap_tok, "cap");
    }
    while (!gens.empty()) {
        auto comma = gens.find(',');
        std::string_view tok = gens.substr(0, comma);
        spec.generators.push_back(parse_int(tok, "generator"));
        if (comma == std::string_view::npos) break;
        gens.remove_prefix(comma + 1);
        if (gens.empty())
            throw std::invalid_argument("bad generator token '' (trailing comma)");
    }
    spec.validate();
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(generators[i]);
    }
    if (cap) {
        out += ':';
        out += std::to_string(*cap);
    }
    return out;
}

void GeneratorSpec::validate() const {
    if (generators.empty())
        throw std::invalid_argument("generator list is empty");
    for (auto a : generators) {
        if (a < 1)
            throw std::invalid_argument("generator " + std::to_string(a) +
                                        " is not positive");
        if (a > kMaxGenerator)
            throw std::invalid_argument("generator " + std::to_string(a) +
                                        " exceeds the supported range");
    }
    for (std::size_t i = 1; i < generators.size(); ++i)
        if (generators[i] <= generators[i - 1])
            throw std::invalid_argument("generators must be strictly increasing at '" +
                                        std::to_string(generators[i]) + "'");
    if (cap) {
        if (*cap < generators.front())
            throw std::invalid_argument("cap " + std::to_string(*cap) +
                                        " is below the least generator");
        if (*cap > kMaxGenerator)
            throw std::invalid_argument("cap " + std::to_string(*cap) +
                                        " exceeds the supported range");
    } else {
        std::int64_t g = 0;
        for (auto a : generators) g = std::gcd(g, a);
        if (g != 1)
            throw std::invalid_argument("generators have gcd " + std::to_string(g) +
                                        "; the complement is infinite (add a cap)");
    }
}

NumericalSemigroup NumericalSemigroup::build(const GeneratorSpec& spec) {
    spec.validate();
    const auto& gens = spec.generators;
    if (spec.cap) {
        const std::int64_t limit = *spec.cap + gens.back();
        BitVec bits(limit);
        bits.set(0);
        for (auto a : gens) close_under(bits, a);
        bits.set_range(std::min(*spec.cap, limit), limit);
        return from_closure(std::move(bits));
    }
    // Uncapped: grow the window until m consecutive members appear; from
    // there on everything is a member, which pins the conductor. The initial
    // size covers the two-generator case exactly.
    const std::int64_t m = gens.front();
    std::int64_t limit =
        std::max((gens.front() - 1) * (gens.back() - 1) + gens.front() + 1, 2 * m + 2);
    for (;;) {
        if (limit > kMaxWindowBits)
            throw std::length_error("semigroup window too large");
        BitVec bits(limit);
        bits.set(0);
        for (auto a : gens) close_under(bits, a);
        if (bits.first_ones_run(m) >= 0) return from_closure(std::move(bits));
        limit *= 2;
    }
}

NumericalSemigroup NumericalSemigroup::from_text(std::string_view text) {
    return build(GeneratorSpec::parse(text));
}

NumericalSemigroup NumericalSemigroup::from_closure(BitVec bits) {
    const std::int64_t frob = bits.last_zero();
    const std::int64_t c = frob < 0 ? 1 : frob + 1;  // no gaps: S = ℕ, c = 1
    const std::int64_t m = bits.next_set(1);
    assert(m >= 1 && c + m <= bits.size());
    const std::int64_t g = c - bits.count_range(0, c);
    bits.resize(c + m);
    return NumericalSemigroup(std::move(bits), m, c, g);
}

NumericalSemigroup::NumericalSemigroup(BitVec members, std::int64_t m, std::int64_t c,
                                       std::int64_t g)
    : members_(std::move(members)), m_(m), c_(c), g_(g) {
    assert(members_.size() == c_ + m_);
    build_decomposables();
}

// Ascending sweep: the first undecorated member is primitive; marking
// p + S* for each discovered primitive p covers every decomposable element
// in the window, since any decomposable x is p + s with p primitive,
// p <= x - m, s in S*.
void NumericalSemigroup::build_decomposables() {
    decomp_ = BitVec(members_.size());
    BitVec star = members_;
    star.reset(0);
    for (std::int64_t x = members_.next_set(m_); x >= 0; x = members_.next_set(x + 1))
        if (!decomp_.test(x)) decomp_.or_shifted(star, x);
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0) throw std::domain_error("membership query for negative value");
    return x >= c_ || members_.test(x);
}

bool NumericalSemigroup::is_decomposable(std::int64_t x) const {
    if (x < 0) throw std::domain_error("decomposability query for negative value");
    return x >= window_end() || decomp_.test(x);
}

ElementSet NumericalSemigroup::primitives() const {
    ElementSet out;
    for (std::int64_t x = members_.next_set(m_); x >= 0; x = members_.next_set(x + 1))
        if (!decomp_.test(x)) out.push_back(x);
    return out;
}

ElementSet NumericalSemigroup::members_in(std::int64_t lo, std::int64_t hi) const {
    if (lo < 0 || lo > hi || hi > window_end())
        throw std::out_of_range("range outside the membership window");
    ElementSet out;
    for (std::int64_t x = members_.next_set(lo); x >= 0 && x < hi;
         x = members_.next_set(x + 1))
        out.push_back(x);
    return out;
}

ElementSet NumericalSemigroup::decomposables_in(std::int64_t lo, std::int64_t hi) const {
    if (lo < 0 || lo > hi || hi > window_end())
        throw std::out_of_range("range outside the membership window");
    ElementSet out;
    for (std::int64_t x = members_.next_set(lo); x >= 0 && x < hi;
         x = members_.next_set(x + 1))
        if (decomp_.test(x)) out.push_back(x);
    return out;
}

ElementSet NumericalSemigroup::apery_set() const {
    ElementSet out;
    for (std::int64_t x = members_.next_set(0); x >= 0; x = members_.next_set(x + 1))
        if (x < m_ || !members_.test(x - m_)) out.push_back(x);
    return out;
}

ElementSet NumericalSemigroup::left_part() const { return members_in(0, c_); }

NumericalSemigroup NumericalSemigroup::without(std::int64_t x) const {
    if (x < c_ || x >= window_end() || decomp_.test(x))
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " is not a right primitive");
    // Removing the multiplicity only happens for S = {0} ∪ [m, ∞), where the
    // child's multiplicity moves up to m+1.
    const std::int64_t nm = (x == m_) ? m_ + 1 : m_;
    const std::int64_t nc = x + 1;
    BitVec bits = members_;
    bits.resize(nc + nm);
    bits.set_range(c_, nc + nm);
    bits.reset(x);
    return NumericalSemigroup(std::move(bits), nm, nc, g_ + 1);
}

}  // namespace wilf
