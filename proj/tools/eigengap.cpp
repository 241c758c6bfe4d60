// eigengap command line: certified spectral enclosures and bound checks for
// small graphs.
//
//   spectrum       print certified enclosures of mu and mu_min
//   check          run one bound check; exit 0 Holds/skip, 2 Fails, 3 Undecided
//   construct      build an extremal family instance and validate its claims
//   sweep          run checks over an enumeration tier / corpus / random batch
//   bipartization  exact minimum edge deletions to make the graph bipartite
//
// Graphs come in as a graph6 positional argument or --file (edge-list or
// graph6 depending on --format).  Machine-readable output (--out) uses the
// same JSON-lines record format the sweep reports use.

#include "eigengap/harness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace eigengap;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

unsigned env_precision_cap() {
    if (const char* s = std::getenv("EIGENGAP_MAX_PRECISION_BITS")) {
        long v = std::atol(s);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 8192;
}

Graph load_graph(const std::string& g6_arg, const std::string& file, const std::string& format) {
    if (!g6_arg.empty() && !file.empty())
        throw Error("give either a graph6 argument or --file, not both");
    if (!g6_arg.empty()) return graph6_decode(g6_arg);
    if (file.empty()) throw Error("no input graph: pass a graph6 string or --file");
    std::ifstream in(file);
    if (!in) throw Error("cannot open input file: " + file);
    if (format == "edges") return parse_edge_list(in);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) return graph6_decode(line);
    }
    throw Error("input file holds no graph line: " + file);
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::holds:
        case Verdict::skipped: return kExitHolds;
        case Verdict::fails: return kExitFails;
        case Verdict::undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

int worst_exit(int a, int b) {
    auto rank = [](int e) { return e == kExitFails ? 2 : (e == kExitUndecided ? 1 : 0); };
    return rank(a) >= rank(b) ? a : b;
}

void write_records(const std::vector<RunRecord>& records, const std::string& out_path,
                   bool include_timing) {
    if (out_path.empty()) return;
    emit_report(records, out_path, "", include_timing);
}

void print_verdict(const BoundVerdict& v, const std::string& id) {
    std::cout << v.check_id << " on " << id << ": " << verdict_name(v.verdict) << "\n";
    if (v.verdict != Verdict::skipped) {
        std::cout << "  lhs " << v.lhs.to_string(12) << "\n  rhs " << v.rhs.to_string(12) << "\n";
    }
    if (!v.notes.empty()) std::cout << "  notes: " << v.notes << "\n";
    for (const auto& [h, ok] : v.hypotheses)
        std::cout << "  hypothesis " << h << ": " << (ok ? "holds" : "fails") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified enclosures of extreme adjacency eigenvalues and bound verification"};
    app.require_subcommand(1);

    std::string g6_arg, file, format = "graph6", out_path;
    double tol = 1e-9;
    unsigned max_prec = env_precision_cap();
    bool exact_only = false;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("graph6", g6_arg, "graph6 string");
        cmd->add_option("--file", file, "read the graph from a file");
        cmd->add_option("--format", format, "file format: graph6 | edges")
            ->check(CLI::IsMember({"graph6", "edges"}));
        cmd->add_option("--out", out_path, "write machine-readable records (JSON lines)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "certified enclosures of mu and mu_min");
    add_graph_opts(spectrum);
    spectrum->add_option("--tol", tol, "enclosure width target (spectrum printing only)");
    spectrum->add_option("--max-precision-bits", max_prec, "precision cap");
    spectrum->add_flag("--exact-only", exact_only, "skip interval stages, exact arithmetic only");

    std::string check_id;
    std::string subgraph_g6;
    std::string edge_arg;
    auto* check = app.add_subcommand("check", "run one bound check");
    add_graph_opts(check);
    check->add_option("--id", check_id, "T1 T1a_strong T2 T11 T21 T4 CGN P1 P2 WALK DIST_LEMMA SIGNCUT SACHS")
        ->required();
    check->add_option("--subgraph", subgraph_g6, "graph6 of the subgraph H (T1/T11); defaults to all single-edge deletions");
    check->add_option("--edge", edge_arg, "edge u,v for DIST_LEMMA; defaults to all edges");

    std::string family;
    int con_k = 0, con_D = 0, con_n = 0;
    std::string eps_str;
    auto* construct = app.add_subcommand("construct", "build and validate an extremal family instance");
    construct->add_option("--family", family, "thm2 | thm3")->required();
    construct->add_option("--k", con_k, "K_{k,k} side (thm2)");
    construct->add_option("--D", con_D, "target diameter (thm2)");
    construct->add_option("--n", con_n, "order (thm3)");
    construct->add_option("--eps", eps_str, "epsilon as a fraction, e.g. 1/20 (thm3)");
    construct->add_option("--out", out_path, "write validation records (JSON lines)");

    int sweep_n = 0, random_count = 0, random_max_n = 30;
    unsigned long seed = 1;
    int threads = 1;
    std::string corpus_file, checks_csv = "T1", summary_path, cex_path;
    bool no_timing = false, full_lattice = false;
    auto* sweep = app.add_subcommand("sweep", "run checks over many graphs");
    sweep->add_option("--enumerate", sweep_n, "all labeled connected graphs on n vertices (n <= 7)");
    sweep->add_option("--file", corpus_file, "newline-delimited graph6 corpus");
    sweep->add_option("--random", random_count, "number of seeded random connected graphs");
    sweep->add_option("--max-n", random_max_n, "max order for --random");
    sweep->add_option("--seed", seed, "random corpus seed");
    sweep->add_option("--checks", checks_csv, "comma-separated check ids");
    sweep->add_option("--threads", threads, "parallel workers over the mask space");
    sweep->add_option("--out", out_path, "detail records (JSON lines)");
    sweep->add_option("--summary", summary_path, "summary CSV");
    sweep->add_option("--counterexamples", cex_path, "graph6 witnesses of Fails-certified records");
    sweep->add_flag("--no-timing", no_timing, "exclude wall_time fields (determinism runs)");
    sweep->add_flag("--full-lattice", full_lattice, "T1 over every proper edge subset (n <= 5)");

    auto* bip = app.add_subcommand("bipartization", "exact minimum deletions to bipartite");
    add_graph_opts(bip);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        SpectralOptions sopts;
        sopts.max_precision_bits = max_prec;
        sopts.exact_only = exact_only;
        TolerancePolicy policy;
        policy.max_precision_bits = max_prec;

        if (*spectrum) {
            Graph g = load_graph(g6_arg, file, format);
            SpectralEngine eng(g, sopts);
            SpectralSummary s = eng.extremes(tol);
            std::cout << "n = " << g.order() << ", m = " << g.edge_count() << "\n";
            std::cout << "mu     in " << s.mu.to_string(17) << "\n";
            std::cout << "mu_min in " << s.mu_min.to_string(17) << "\n";
            std::cout << "method = " << (s.method == Method::sturm_exact ? "sturm_exact" : "interval_ldl")
                      << ", precision_bits = " << s.precision_bits
                      << ", width_met = " << (s.width_met ? "yes" : "no") << "\n";
            if (!out_path.empty()) {
                BoundVerdict v;
                v.check_id = "SPECTRUM";
                v.lhs = s.mu;
                v.rhs = s.mu_min;
                v.verdict = s.width_met ? Verdict::holds : Verdict::undecided;
                v.precision_bits = s.precision_bits;
                v.notes = "lhs = mu enclosure, rhs = mu_min enclosure";
                write_records({make_record(graph6_encode(g), v, 0.0)}, out_path, false);
            }
            return s.width_met ? kExitHolds : kExitUndecided;
        }

        if (*check) {
            Graph g = load_graph(g6_arg, file, format);
            std::string id = graph6_encode(g);
            SpectralEngine eng(g, sopts);
            std::vector<BoundVerdict> results;

            if (check_id == "T1" || check_id == "T1a_strong" || check_id == "T11") {
                std::vector<Graph> subgraphs;
                std::vector<std::string> tags;
                if (!subgraph_g6.empty()) {
                    subgraphs.push_back(graph6_decode(subgraph_g6));
                    tags.push_back("H=" + subgraph_g6);
                } else {
                    for (auto [u, v] : g.edges()) {
                        subgraphs.push_back(delete_edge_copy(g, u, v));
                        tags.push_back("e=(" + std::to_string(u) + "," + std::to_string(v) + ")");
                    }
                }
                for (size_t i = 0; i < subgraphs.size(); ++i) {
                    std::vector<BoundVerdict> vs =
                        (check_id == "T11")
                            ? check_regular_variants(eng, &subgraphs[i], policy)
                            : check_subgraph_gap(eng, subgraphs[i], policy);
                    for (auto& v : vs)
                        if (v.check_id == check_id) {
                            v.notes = tags[i] + (v.notes.empty() ? "" : "; " + v.notes);
                            results.push_back(v);
                        }
                }
            } else if (check_id == "T2") {
                results.push_back(check_nonbipartite_gap(eng, policy));
            } else if (check_id == "T21") {
                for (auto& v : check_regular_variants(eng, nullptr, policy))
                    if (v.check_id == "T21") results.push_back(v);
            } else if (check_id == "T4" || check_id == "CGN") {
                for (auto& v : check_theorem4(eng, policy))
                    if (v.check_id == check_id) results.push_back(v);
            } else if (check_id == "P1") {
                results.push_back(check_eigenvector_ratio(eng, policy));
            } else if (check_id == "P2" || check_id == "WALK") {
                for (auto& v : check_diameter_power(eng, policy))
                    if (v.check_id == check_id) results.push_back(v);
            } else if (check_id == "DIST_LEMMA") {
                std::vector<std::pair<int, int>> es;
                if (!edge_arg.empty()) {
                    auto comma = edge_arg.find(',');
                    if (comma == std::string::npos) throw Error("--edge expects u,v");
                    es.emplace_back(std::stoi(edge_arg.substr(0, comma)),
                                    std::stoi(edge_arg.substr(comma + 1)));
                } else {
                    es = g.edges();
                }
                for (auto [u, v] : es) results.push_back(edge_deletion_distance_lemma(g, u, v));
            } else if (check_id == "SIGNCUT") {
                SignCutResult sc = sign_cut_subgraph(eng, tol);
                std::cout << "sign-cut subgraph: " << graph6_encode(sc.h) << "\n";
                results.push_back(sc.record);
            } else if (check_id == "SACHS") {
                SweepOptions so;
                so.checks = {"SACHS"};
                so.policy = policy;
                CollectSink cs;
                run_sweep_corpus({g}, so, cs);
                BoundVerdict v;
                v.check_id = "SACHS";
                v.verdict = cs.records.front().verdict == "Holds-certified" ? Verdict::holds
                            : cs.records.front().verdict == "Fails-certified"
                                ? Verdict::fails
                                : (cs.records.front().verdict == "Undecided" ? Verdict::undecided
                                                                             : Verdict::skipped);
                v.notes = cs.records.front().notes;
                results.push_back(v);
            } else {
                throw Error("unknown check id: " + check_id);
            }

            int code = kExitHolds;
            std::vector<RunRecord> records;
            for (const auto& v : results) {
                print_verdict(v, id);
                records.push_back(make_record(id, v, 0.0));
                code = worst_exit(code, exit_for(v.verdict));
            }
            write_records(records, out_path, false);
            return code;
        }

        if (*construct) {
            ConstructionReport rep;
            if (family == "thm2") {
                if (con_k == 0 || con_D == 0) throw Error("construct thm2 needs --k and --D");
                rep = build_theorem2_construction(con_k, con_D, policy);
            } else if (family == "thm3") {
                if (con_n == 0 || eps_str.empty()) throw Error("construct thm3 needs --n and --eps");
                mpq_class eps;
                if (eps.set_str(eps_str, 10) != 0) throw Error("cannot parse --eps: " + eps_str);
                eps.canonicalize();
                rep = build_theorem3_construction(con_n, eps, policy);
            } else {
                throw Error("unknown family: " + family);
            }
            std::cout << rep.params << "\n" << graph6_encode(rep.graph) << "\n";
            int code = kExitHolds;
            std::vector<RunRecord> records;
            for (const auto& c : rep.claims) {
                std::cout << "  " << c.name << ": " << verdict_name(c.verdict) << "  (" << c.detail
                          << ")\n";
                BoundVerdict v;
                v.check_id = "CONSTRUCT_" + c.name;
                v.verdict = c.verdict;
                v.notes = c.detail;
                v.precision_bits = rep.precision_bits;
                records.push_back(make_record(rep.params, v, 0.0));
                code = worst_exit(code, exit_for(c.verdict));
            }
            write_records(records, out_path, false);
            return code;
        }

        if (*sweep) {
            SweepOptions so;
            so.policy = policy;
            so.threads = threads;
            so.full_subgraph_lattice = full_lattice;
            so.counterexample_path = cex_path;
            so.checks.clear();
            std::stringstream ss(checks_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) so.checks.push_back(tok);
            if (so.checks.empty()) throw Error("--checks must name at least one check");

            CollectSink cs;
            int sources = (sweep_n > 0) + !corpus_file.empty() + (random_count > 0);
            if (sources != 1) throw Error("choose exactly one of --enumerate, --file, --random");
            if (sweep_n > 0) {
                run_sweep_enumerate(sweep_n, so, cs);
            } else if (!corpus_file.empty()) {
                run_sweep_corpus_file(corpus_file, so, cs);
            } else {
                std::mt19937_64 rng(seed);
                std::vector<Graph> graphs;
                for (int i = 0; i < random_count; ++i) {
                    int order = 2 + static_cast<int>(rng() % static_cast<unsigned long>(
                                                               std::max(1, random_max_n - 1)));
                    graphs.push_back(random_connected_graph(order, 0.3, rng));
                }
                run_sweep_corpus(graphs, so, cs);
            }
            emit_report(cs.records, out_path, summary_path, !no_timing);

            long holds = 0, fails = 0, undecided = 0, skipped = 0;
            for (const auto& r : cs.records) {
                if (r.verdict == "Holds-certified") ++holds;
                else if (r.verdict == "Fails-certified") ++fails;
                else if (r.verdict == "Undecided") ++undecided;
                else ++skipped;
            }
            std::cout << "records=" << cs.records.size() << " holds=" << holds << " fails=" << fails
                      << " undecided=" << undecided << " skipped=" << skipped << "\n";
            if (fails > 0) return kExitFails;
            if (undecided > 0) return kExitUndecided;
            return kExitHolds;
        }

        if (*bip) {
            Graph g = load_graph(g6_arg, file, format);
            long value = min_bipartization(g);
            std::cout << value << "\n";
            if (!out_path.empty()) {
                BoundVerdict v;
                v.check_id = "MIN_BIPARTIZATION";
                v.lhs = Interval::of_long(value);
                v.rhs = Interval::of_long(0);
                v.verdict = Verdict::holds;
                v.notes = "exact brute-force over 2^(n-1) cuts";
                write_records({make_record(graph6_encode(g), v, 0.0)}, out_path, false);
            }
            return kExitHolds;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitUsage;
}
