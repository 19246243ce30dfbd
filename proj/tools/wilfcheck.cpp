// wilfcheck: numerical semigroup invariants, genus-tree census, W0 scans and
// binomial (Macaulay) calculus from the command line.
//
// Exit codes: 0 success, 2 usage or input error, 3 Wilf violation found
// (some reported W is negative).

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "wilf/invariants.hpp"
#include "wilf/io.hpp"
#include "wilf/macaulay.hpp"
#include "wilf/semigroup.hpp"
#include "wilf/tree.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kWilfViolation = 3;

int run_analyze(const std::string& spec_text, const std::string& format) {
    const auto s = wilf::NumericalSemigroup::from_text(spec_text);
    const auto report = wilf::wilf_report(s);
    const auto dec = wilf::decompose(s);
    const auto grading = wilf::check_weak_grading(s);
    if (format == "json") {
        std::cout << wilf::analyze_json(s, report, dec, grading).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << wilf::report_csv_header() << '\n'
                  << wilf::report_csv_row(report) << '\n';
    } else {
        std::cout << wilf::analyze_text(s, report, dec, grading);
    }
    return report.W >= 0 ? kOk : kWilfViolation;
}

int run_census(std::int64_t genus_max, int workers, const std::string& format) {
    wilf::EnumerationOptions opts;
    opts.genus_max = genus_max;
    opts.workers = workers;
    const auto table = wilf::enumerate(opts);
    if (format == "json")
        std::cout << wilf::census_json(table).dump(2) << '\n';
    else if (format == "csv")
        std::cout << wilf::census_csv(table);
    else
        std::cout << wilf::census_table_text(table);
    return kOk;
}

int run_scan(std::int64_t genus_max, std::int64_t threshold, const std::string& metric,
             int workers, const std::string& format) {
    const auto hits = wilf::scan_w0(
        genus_max, threshold,
        metric == "w" ? wilf::ScanMetric::W : wilf::ScanMetric::W0, workers);
    bool violation = false;
    for (const auto& hit : hits) {
        if (format == "json")
            std::cout << wilf::scan_hit_json(hit).dump() << '\n';
        else
            std::cout << wilf::scan_hit_text(hit) << '\n';
        violation = violation || hit.W < 0;
    }
    return violation ? kWilfViolation : kOk;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const std::int64_t v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer token '" + tok + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup invariants and genus-tree tools"};
    app.require_subcommand(1);

    std::string spec_text;
    std::string format = "text";
    std::int64_t genus_max = 0;
    std::int64_t threshold = 0;
    std::string metric = "w0";
    int workers = 1;
    std::int64_t arg_a = 0, arg_i = 1, arg_hr = 0, arg_r = 1, arg_n = 1;
    std::string gens_text;

    auto* analyze = app.add_subcommand("analyze", "full report for one semigroup");
    analyze->add_option("spec", spec_text, "generators, e.g. 14,22,23:56")->required();
    analyze->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* census = app.add_subcommand("census", "per-(genus,q) census of the tree");
    census->add_option("genus_max", genus_max)->required();
    census->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    census->add_option("--workers", workers)->check(CLI::Range(1, 256));

    auto* scan = app.add_subcommand("scan-w0", "list semigroups with W0 (or W) below a threshold");
    scan->add_option("genus_max", genus_max)->required();
    scan->add_option("--threshold", threshold);
    scan->add_option("--metric", metric)->check(CLI::IsMember({"w0", "w"}));
    scan->add_option("--workers", workers)->check(CLI::Range(1, 256));
    scan->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* mac = app.add_subcommand("macaulay", "binomial calculus helpers");
    mac->require_subcommand(1);
    auto* rep = mac->add_subcommand("rep", "degree-i binomial representation of a");
    rep->add_option("a", arg_a)->required();
    rep->add_option("i", arg_i)->required();
    rep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* step = mac->add_subcommand("step", "Macaulay bound on the next entry");
    step->add_option("a", arg_a)->required();
    step->add_option("i", arg_i)->required();
    step->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* bounds = mac->add_subcommand("bounds", "neighbour bounds from one entry");
    bounds->add_option("h_r", arg_hr)->required();
    bounds->add_option("r", arg_r)->required();
    bounds->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* hilbert = mac->add_subcommand("hilbert", "sumset counting sequence of A");
    hilbert->add_option("generators", gens_text, "e.g. 10,15")->required();
    hilbert->add_option("n", arg_n)->required();
    hilbert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*analyze) return run_analyze(spec_text, format);
        if (*census) return run_census(genus_max, workers, format);
        if (*scan) return run_scan(genus_max, threshold, metric, workers, format);
        if (*rep) {
            const auto r = wilf::binomial_representation(arg_a, arg_i);
            if (format == "json") {
                wilf::Json j;
                j["a"] = arg_a;
                j["i"] = arg_i;
                wilf::Json terms = wilf::Json::array();
                for (std::int64_t k = arg_i; k >= 1; --k) {
                    wilf::Json term;
                    term["n"] = r.coeffs[static_cast<std::size_t>(k - 1)];
                    term["k"] = k;
                    terms.push_back(term);
                }
                j["terms"] = terms;
                j["text"] = r.to_string();
                std::cout << j.dump() << '\n';
            } else {
                std::cout << r.to_string() << '\n';
            }
            return kOk;
        }
        if (*step) {
            const auto v = wilf::macaulay_step(arg_a, arg_i);
            if (format == "json") {
                wilf::Json j;
                j["a"] = arg_a;
                j["i"] = arg_i;
                j["step"] = v;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << v << '\n';
            }
            return kOk;
        }
        if (*bounds) {
            const auto b = wilf::condensed_bounds(arg_hr, arg_r);
            if (format == "json") {
                wilf::Json j;
                j["h_r"] = arg_hr;
                j["r"] = arg_r;
                j["lower_prev"] = b.lower_prev;
                j["upper_next"] = b.upper_next;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "lower_prev=" << b.lower_prev
                          << " upper_next=" << b.upper_next << '\n';
            }
            return kOk;
        }
        if (*hilbert) {
            const auto h = wilf::hilbert_from_sumsets(parse_int_list(gens_text), arg_n);
            if (format == "json") {
                wilf::Json j;
                j["generators"] = h.generators;
                j["n"] = arg_n;
                j["values"] = h.values;
                std::cout << j.dump() << '\n';
            } else {
                std::string out;
                for (std::size_t t = 0; t < h.values.size(); ++t) {
                    if (t) out += ',';
                    out += std::to_string(h.values[t]);
                }
                std::cout << out << '\n';
            }
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    // Internal invariant failures (plain logic_error) propagate and abort.
    return kUsage;
}
