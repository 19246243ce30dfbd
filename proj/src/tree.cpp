#include "wilf/tree.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "wilf/invariants.hpp"

namespace wilf {

namespace {

std::int64_t q_of(const NumericalSemigroup& s) {
    return (s.conductor() + s.multiplicity() - 1) / s.multiplicity();
}

void dfs(const NumericalSemigroup& s, std::int64_t genus_max, CensusTable& census,
         const Visitor& visitor) {
    census.record(s.genus(), q_of(s));
    if (visitor) visitor(s);
    if (s.genus() >= genus_max) return;
    for (const auto& child : children(s)) dfs(child, genus_max, census, visitor);
}

void collect_frontier(const NumericalSemigroup& s, std::int64_t depth,
                      CensusTable& census, const Visitor& visitor,
                      std::vector<NumericalSemigroup>& frontier) {
    if (s.genus() == depth) {
        frontier.push_back(s);
        return;
    }
    census.record(s.genus(), q_of(s));
    if (visitor) visitor(s);
    for (const auto& child : children(s)) {
        collect_frontier(child, depth, census, visitor, frontier);
    }
}

}  // namespace

void CensusTable::record(std::int64_t genus, std::int64_t q) {
    if (static_cast<std::int64_t>(rows_.size()) <= genus)
        rows_.resize(static_cast<std::size_t>(genus) + 1);
    auto& row = rows_[static_cast<std::size_t>(genus)];
    if (static_cast<std::int64_t>(row.size()) <= q)
        row.resize(static_cast<std::size_t>(q) + 1, 0);
    ++row[static_cast<std::size_t>(q)];
}

std::int64_t CensusTable::cell(std::int64_t genus, std::int64_t q) const {
    if (genus < 0 || genus >= static_cast<std::int64_t>(rows_.size())) return 0;
    const auto& row = rows_[static_cast<std::size_t>(genus)];
    if (q < 0 || q >= static_cast<std::int64_t>(row.size())) return 0;
    return row[static_cast<std::size_t>(q)];
}

std::int64_t CensusTable::row_total(std::int64_t genus) const {
    if (genus < 0 || genus >= static_cast<std::int64_t>(rows_.size())) return 0;
    const auto& row = rows_[static_cast<std::size_t>(genus)];
    return std::accumulate(row.begin(), row.end(), std::int64_t{0});
}

std::int64_t CensusTable::genus_max() const {
    return static_cast<std::int64_t>(rows_.size()) - 1;
}

std::int64_t CensusTable::row_max_q(std::int64_t genus) const {
    if (genus < 0 || genus >= static_cast<std::int64_t>(rows_.size())) return 0;
    const auto& row = rows_[static_cast<std::size_t>(genus)];
    for (std::size_t q = row.size(); q-- > 0;)
        if (row[q] != 0) return static_cast<std::int64_t>(q);
    return 0;
}

void CensusTable::merge(const CensusTable& other) {
    if (rows_.size() < other.rows_.size()) rows_.resize(other.rows_.size());
    for (std::size_t g = 0; g < other.rows_.size(); ++g) {
        const auto& src = other.rows_[g];
        auto& dst = rows_[g];
        if (dst.size() < src.size()) dst.resize(src.size(), 0);
        for (std::size_t q = 0; q < src.size(); ++q) dst[q] += src[q];
    }
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s) {
    std::vector<NumericalSemigroup> out;
    for (auto x : s.primitives())
        if (x >= s.conductor()) out.push_back(s.without(x));
    return out;
}

CensusTable enumerate(const EnumerationOptions& opts, const Visitor& visitor) {
    if (opts.genus_max < 0)
        throw std::invalid_argument("genus bound must be nonnegative");
    if (opts.genus_max > opts.safety_limit)
        throw std::invalid_argument("genus bound " + std::to_string(opts.genus_max) +
                                    " exceeds the safety limit " +
                                    std::to_string(opts.safety_limit));
    const NumericalSemigroup root = NumericalSemigroup::from_text("1");
    CensusTable census;
    if (opts.workers <= 1 || opts.genus_max <= opts.split_depth) {
        dfs(root, opts.genus_max, census, visitor);
        return census;
    }
    // Nodes above the split depth are walked serially; each frontier node
    // hands its whole subtree to whichever worker grabs it next.
    std::vector<NumericalSemigroup> frontier;
    collect_frontier(root, opts.split_depth, census, visitor, frontier);
    std::vector<CensusTable> parts(static_cast<std::size_t>(opts.workers));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < opts.workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= frontier.size()) break;
                    dfs(frontier[idx], opts.genus_max,
                        parts[static_cast<std::size_t>(w)], visitor);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& part : parts) census.merge(part);
    return census;
}

CensusTable enumerate(std::int64_t genus_max, const Visitor& visitor) {
    EnumerationOptions opts;
    opts.genus_max = genus_max;
    return enumerate(opts, visitor);
}

std::vector<ScanHit> scan_w0(std::int64_t genus_max, std::int64_t threshold,
                             ScanMetric metric, int workers) {
    std::vector<ScanHit> hits;
    std::mutex hits_mutex;
    EnumerationOptions opts;
    opts.genus_max = genus_max;
    opts.workers = workers;
    enumerate(opts, [&](const NumericalSemigroup& s) {
        const WilfReport r = wilf_report(s);
        const std::int64_t value = metric == ScanMetric::W0 ? r.W0 : r.W;
        if (value >= threshold) return;
        ScanHit hit;
        hit.generators = s.primitives();
        hit.cap = s.conductor();
        hit.spec_text = GeneratorSpec{hit.generators, hit.cap}.to_string();
        hit.m = r.m;
        hit.genus = r.genus;
        hit.W = r.W;
        hit.W0 = r.W0;
        hit.q = r.q;
        hit.rho = r.rho;
        hit.profile = r.profile;
        std::lock_guard<std::mutex> lock(hits_mutex);
        hits.push_back(std::move(hit));
    });
    std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
        if (a.genus != b.genus) return a.genus < b.genus;
        if (a.m != b.m) return a.m < b.m;
        return a.generators < b.generators;
    });
    return hits;
}

bool subtree_is_finite(const NumericalSemigroup& s) {
    std::int64_t g = 0;
    for (auto x : s.left_part())
        if (x > 0) g = std::gcd(g, x);
    return g == 1;
}

}  // namespace wilf
