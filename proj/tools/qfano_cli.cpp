// Command-line front end: construct, verify and transform the designs.
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfano/design_io.hpp"
#include "qfano/verify.hpp"

using nlohmann::json;
using namespace qfano;

namespace {

int default_workers() {
    if (const char* env = std::getenv("QFANO_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)std::min(hw, 8u) : 1;
}

json coverage_json(const CoverageReport& rep) {
    json hist = json::object();
    for (const auto& [mult, cnt] : rep.hist) hist[std::to_string(mult)] = cnt;
    json offenders = json::array();
    for (const Subspace& s : rep.offenders) offenders.push_back(to_string(s));
    return {{"total", rep.total}, {"histogram", hist}, {"offenders", offenders}};
}

void print_coverage(const CoverageReport& rep) {
    std::cout << "2-subspaces of F_q^" << rep.n << ": " << rep.total << "\n";
    for (const auto& [mult, cnt] : rep.hist)
        std::cout << "  multiplicity " << mult << ": " << cnt << "\n";
    for (const Subspace& s : rep.offenders)
        std::cout << "  offending 2-subspace: " << to_string(s) << "\n";
}

std::map<char, long long> tag_sizes(const Design& d) {
    std::map<char, long long> out;
    for (const Block& b : d.blocks) ++out[(char)b.tag];
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"residual q-Fano plane construction and verification"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --workers/--format after the subcommand

    int workers = default_workers();
    std::string format = "text";
    app.add_option("--workers", workers, "worker thread count for coverage checks");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build the derived and residual designs");
    int q = 2;
    std::string par_file, perm_spec, out_derived, out_residual;
    cmd_construct->add_option("--q", q, "field size")->required();
    cmd_construct->add_option("--parallelism", par_file, "parallelism file to use instead of the search");
    cmd_construct->add_option("--perm", perm_spec,
                              "comma-separated permutation of 1..q+1 matching expansions to coset parts");
    cmd_construct->add_option("--out-derived", out_derived, "output file for the derived design")->required();
    cmd_construct->add_option("--out-residual", out_residual, "output file for the residual design")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check the derived/residual contract");
    std::string derived_file, residual_file;
    cmd_verify->add_option("--derived", derived_file, "derived design file")->required();
    cmd_verify->add_option("--residual", residual_file, "residual design file")->required();

    // parallelism
    auto* cmd_par = app.add_subcommand("parallelism", "search a parallelism of F_q^4");
    int par_q = 2;
    std::string par_out;
    cmd_par->add_option("--q", par_q, "field size")->required();
    cmd_par->add_option("--out", par_out, "output file")->required();

    // punct
    auto* cmd_punct = app.add_subcommand("punct", "puncture a design at the last coordinate");
    std::string punct_in, punct_part, punct_out;
    cmd_punct->add_option("--in", punct_in, "input design file")->required();
    cmd_punct->add_option("--part", punct_part, "which part to keep")
        ->required()
        ->check(CLI::IsMember({"der", "res"}));
    cmd_punct->add_option("--out", punct_out, "output file")->required();

    // dual
    auto* cmd_dual = app.add_subcommand("dual", "replace blocks by orthogonal complements");
    std::string dual_in, dual_out;
    cmd_dual->add_option("--in", dual_in, "input design file")->required();
    cmd_dual->add_option("--out", dual_out, "output file")->required();

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "print design counts and per-tag sizes");
    std::string stats_in;
    cmd_stats->add_option("--in", stats_in, "input design file")->required();

    // check-divisibility
    auto* cmd_div = app.add_subcommand("check-divisibility",
                                       "necessary conditions for a q-Steiner system");
    int dt = 0, dk = 0, dn = 0;
    long long dq = 0;
    cmd_div->add_option("--t", dt)->required();
    cmd_div->add_option("--k", dk)->required();
    cmd_div->add_option("--n", dn)->required();
    cmd_div->add_option("--q", dq)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_construct) {
            Field f = field_from_q(q);
            ConstructionOptions opts;
            if (!par_file.empty()) {
                opts.parallelism = parse_parallelism(f, read_file(par_file));
            }
            if (!perm_spec.empty()) {
                for (size_t pos = 0; pos < perm_spec.size();) {
                    size_t next = perm_spec.find(',', pos);
                    if (next == std::string::npos) next = perm_spec.size();
                    opts.perm.push_back(std::stoi(perm_spec.substr(pos, next - pos)) - 1);
                    pos = next + 1;
                }
            }
            ConstructionResult r = construct(f, opts);
            write_file(out_derived, emit_design(f, r.derived));
            write_file(out_residual, emit_design(f, r.residual));
            if (format == "structured") {
                std::cout << json{{"derived", r.derived.blocks.size()},
                                  {"residual", r.residual.blocks.size()}}
                          << "\n";
            } else {
                std::cout << "derived: " << r.derived.blocks.size() << " blocks, residual: "
                          << r.residual.blocks.size() << " blocks\n";
            }
        } else if (*cmd_verify) {
            ParsedDesign der = parse_design(read_file(derived_file));
            ParsedDesign res = parse_design(read_file(residual_file));
            if (!(der.field == res.field))
                throw std::runtime_error("derived and residual use different fields");
            VerifyResult v = verify_pair(der.field, der.design, res.design, workers);
            if (format == "structured") {
                std::cout << json{{"pass", v.ok},
                                  {"reason", v.reason},
                                  {"coverage", coverage_json(v.report)}}
                          << "\n";
            } else {
                std::cout << (v.ok ? "PASS" : "FAIL: " + v.reason) << "\n";
                print_coverage(v.report);
            }
            return v.ok ? 0 : 1;
        } else if (*cmd_par) {
            Field f = field_from_q(par_q);
            Parallelism p = find_parallelism(f);
            std::string diag;
            if (!verify_parallelism(f, p, &diag))
                throw std::runtime_error("search produced an invalid parallelism: " + diag);
            write_file(par_out, emit_parallelism(p));
            std::cout << p.size() << " spreads\n";
        } else if (*cmd_punct) {
            ParsedDesign in = parse_design(read_file(punct_in));
            Design out = punct_part == "der" ? punct_der(in.field, in.design)
                                             : punct_res(in.field, in.design);
            write_file(punct_out, emit_design(in.field, out));
            std::cout << out.blocks.size() << " blocks\n";
        } else if (*cmd_dual) {
            ParsedDesign in = parse_design(read_file(dual_in));
            write_file(dual_out, emit_design(in.field, dual(in.field, in.design)));
        } else if (*cmd_stats) {
            ParsedDesign in = parse_design(read_file(stats_in));
            if (format == "structured") {
                json tags = json::object();
                for (const auto& [tag, cnt] : tag_sizes(in.design))
                    tags[std::string(1, tag)] = cnt;
                std::cout << json{{"q", in.design.q},
                                  {"n", in.design.n},
                                  {"k", in.design.k},
                                  {"blocks", in.design.blocks.size()},
                                  {"tags", tags}}
                          << "\n";
            } else {
                std::cout << "q=" << in.design.q << " n=" << in.design.n << " k=" << in.design.k
                          << " blocks=" << in.design.blocks.size() << "\n";
                for (const auto& [tag, cnt] : tag_sizes(in.design))
                    std::cout << "  tag " << tag << ": " << cnt << "\n";
            }
        } else if (*cmd_div) {
            DivisibilityResult r = divisibility(dt, dk, dn, dq);
            if (format == "structured") {
                json ratios = json::array();
                for (const auto& ra : r.ratios)
                    ratios.push_back(
                        {{"num", ra.num}, {"den", ra.den}, {"integral", ra.integral}});
                std::cout << json{{"pass", r.ok}, {"ratios", ratios}} << "\n";
            } else {
                for (const auto& ra : r.ratios) {
                    std::cout << ra.num << "/" << ra.den;
                    if (ra.integral)
                        std::cout << " = " << ra.num / ra.den;
                    else
                        std::cout << " (not integral)";
                    std::cout << "\n";
                }
                std::cout << (r.ok ? "PASS" : "FAIL") << "\n";
            }
            return r.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
