#include "wilf/io.hpp"

#include <algorithm>
#include <sstream>

namespace wilf {

namespace {

std::string join(const std::vector<std::int64_t>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

Json semigroup_json(const NumericalSemigroup& s) {
    Json j;
    j["generators"] = s.primitives();
    j["cap"] = s.conductor();
    j["m"] = s.multiplicity();
    j["c"] = s.conductor();
    j["frobenius"] = s.frobenius();
    j["genus"] = s.genus();
    return j;
}

Json report_json(const WilfReport& r) {
    Json j;
    j["m"] = r.m;
    j["c"] = r.c;
    j["frobenius"] = r.frobenius;
    j["genus"] = r.genus;
    j["q"] = r.q;
    j["rho"] = r.rho;
    j["e"] = r.e;
    j["L_size"] = r.left_size;
    j["profile"] = r.profile;
    j["p_q"] = r.p_q;
    j["d_q"] = r.d_q;
    j["W"] = r.W;
    j["W0"] = r.W0;
    return j;
}

std::string report_csv_header() {
    return "m,c,frobenius,genus,q,rho,e,L_size,profile,p_q,d_q,W,W0";
}

std::string report_csv_row(const WilfReport& r) {
    std::string row;
    row += std::to_string(r.m) + ',' + std::to_string(r.c) + ',';
    row += std::to_string(r.frobenius) + ',' + std::to_string(r.genus) + ',';
    row += std::to_string(r.q) + ',' + std::to_string(r.rho) + ',';
    row += std::to_string(r.e) + ',' + std::to_string(r.left_size) + ',';
    row += '"' + join(r.profile) + '"' + ',';
    row += std::to_string(r.p_q) + ',' + std::to_string(r.d_q) + ',';
    row += std::to_string(r.W) + ',' + std::to_string(r.W0);
    return row;
}

Json decomposition_json(const LevelDecomposition& d) {
    Json j;
    j["q"] = d.q;
    j["rho"] = d.rho;
    Json sizes = Json::array();
    for (const auto& level : d.levels) sizes.push_back(level.size());
    j["level_sizes"] = sizes;
    j["levels"] = d.levels;
    j["apery_levels"] = d.apery_levels;
    j["alpha"] = d.alpha;
    return j;
}

Json grading_json(const GradingCheck& g) {
    Json j;
    j["weak_grading_ok"] = g.weak_grading_ok;
    j["true_grading_ok"] = g.true_grading_ok;
    Json pairs = Json::array();
    for (const auto& pc : g.intersections) {
        Json p;
        p["i"] = pc.i;
        p["j"] = pc.j;
        p["below"] = pc.below;
        p["above"] = pc.above;
        pairs.push_back(p);
    }
    j["intersections"] = pairs;
    return j;
}

Json analyze_json(const NumericalSemigroup& s, const WilfReport& r,
                  const LevelDecomposition& d, const GradingCheck& g) {
    Json j;
    j["semigroup"] = semigroup_json(s);
    j["report"] = report_json(r);
    j["decomposition"] = decomposition_json(d);
    j["grading"] = grading_json(g);
    return j;
}

std::string analyze_text(const NumericalSemigroup& s, const WilfReport& r,
                         const LevelDecomposition& d, const GradingCheck& g) {
    std::ostringstream out;
    const auto prims = s.primitives();
    ElementSet left_prims, right_prims;
    for (auto x : prims) (x < r.c ? left_prims : right_prims).push_back(x);
    out << "semigroup <" << join(prims) << "> cap " << r.c << '\n';
    out << "m=" << r.m << " c=" << r.c << " frobenius=" << r.frobenius
        << " genus=" << r.genus << " q=" << r.q << " rho=" << r.rho << '\n';
    out << "e=" << r.e << " |L|=" << r.left_size << " p_q=" << r.p_q
        << " d_q=" << r.d_q << '\n';
    out << "profile=(" << join(r.profile) << ")\n";
    out << "alpha=(" << join(d.alpha) << ")\n";
    std::string level_sizes;
    for (std::size_t i = 0; i < d.levels.size(); ++i) {
        if (i) level_sizes += ',';
        level_sizes += std::to_string(d.levels[i].size());
    }
    out << "level sizes=(" << level_sizes << ")\n";
    out << "left primitives=" << (left_prims.empty() ? "-" : join(left_prims)) << '\n';
    out << "right primitives=" << (right_prims.empty() ? "-" : join(right_prims))
        << '\n';
    out << "weak grading: " << (g.weak_grading_ok ? "ok" : "VIOLATED") << '\n';
    out << "true grading: " << (g.true_grading_ok ? "yes" : "no") << '\n';
    out << "W=" << r.W << '\n';
    out << "W0=" << r.W0 << '\n';
    return out.str();
}

std::string census_csv(const CensusTable& t) {
    std::string out = "genus,q,count\n";
    for (std::int64_t g = 0; g <= t.genus_max(); ++g)
        for (std::int64_t q = 1; q <= t.row_max_q(g); ++q)
            if (t.cell(g, q) != 0)
                out += std::to_string(g) + ',' + std::to_string(q) + ',' +
                       std::to_string(t.cell(g, q)) + '\n';
    return out;
}

std::string census_table_text(const CensusTable& t) {
    std::int64_t qmax = 1;
    for (std::int64_t g = 0; g <= t.genus_max(); ++g)
        qmax = std::max(qmax, t.row_max_q(g));
    std::vector<std::size_t> width(static_cast<std::size_t>(qmax) + 1, 1);
    std::size_t total_width = 5;
    for (std::int64_t q = 1; q <= qmax; ++q) {
        std::size_t w = std::to_string(q).size();
        for (std::int64_t g = 0; g <= t.genus_max(); ++g)
            w = std::max(w, std::to_string(t.cell(g, q)).size());
        width[static_cast<std::size_t>(q)] = w;
    }
    for (std::int64_t g = 0; g <= t.genus_max(); ++g)
        total_width = std::max(total_width, std::to_string(t.row_total(g)).size());
    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) {
        out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
    };
    pad("g\\q", 5);
    for (std::int64_t q = 1; q <= qmax; ++q) {
        out << "  ";
        pad(std::to_string(q), width[static_cast<std::size_t>(q)]);
    }
    out << "  ";
    pad("total", total_width);
    out << '\n';
    for (std::int64_t g = 0; g <= t.genus_max(); ++g) {
        pad(std::to_string(g), 5);
        for (std::int64_t q = 1; q <= qmax; ++q) {
            out << "  ";
            const std::int64_t v = t.cell(g, q);
            pad(v == 0 ? "." : std::to_string(v), width[static_cast<std::size_t>(q)]);
        }
        out << "  ";
        pad(std::to_string(t.row_total(g)), total_width);
        out << '\n';
    }
    return out.str();
}

Json census_json(const CensusTable& t) {
    Json j;
    j["genus_max"] = t.genus_max();
    Json cells = Json::array();
    Json totals = Json::array();
    for (std::int64_t g = 0; g <= t.genus_max(); ++g) {
        for (std::int64_t q = 1; q <= t.row_max_q(g); ++q)
            if (t.cell(g, q) != 0) {
                Json cell;
                cell["genus"] = g;
                cell["q"] = q;
                cell["count"] = t.cell(g, q);
                cells.push_back(cell);
            }
        Json row;
        row["genus"] = g;
        row["total"] = t.row_total(g);
        totals.push_back(row);
    }
    j["cells"] = cells;
    j["row_totals"] = totals;
    return j;
}

Json scan_hit_json(const ScanHit& h) {
    Json j;
    j["spec"] = h.spec_text;
    j["m"] = h.m;
    j["genus"] = h.genus;
    j["W"] = h.W;
    j["W0"] = h.W0;
    j["q"] = h.q;
    j["rho"] = h.rho;
    j["profile"] = h.profile;
    return j;
}

std::string scan_hit_text(const ScanHit& h) {
    std::string out;
    out += "genus=" + std::to_string(h.genus) + " m=" + std::to_string(h.m);
    out += " W0=" + std::to_string(h.W0) + " W=" + std::to_string(h.W);
    out += " q=" + std::to_string(h.q) + " rho=" + std::to_string(h.rho);
    out += " profile=(" + join(h.profile) + ")";
    out += " spec=" + h.spec_text;
    return out;
}

}  // namespace wilf
