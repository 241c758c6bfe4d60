// Sweep driver: runs a set of checks over an enumeration tier, a graph6
// corpus, or a construction grid, streaming one record per (graph, check
// instance).  Reports are a JSON-lines detail file plus a CSV summary;
// records are emitted in input order so identical runs produce identical
// bytes (timing fields excluded on request).  Every Fails-certified record
// dumps its graph6 witness to the counterexample file.

#pragma once

#include "eigengap/checks.hpp"
#include "eigengap/constructions.hpp"
#include "eigengap/enumerate.hpp"
#include "eigengap/graph6.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

namespace eigengap {

struct RunRecord {
    std::string graph_id;
    std::string check_id;
    std::string lhs_lo, lhs_hi, rhs_lo, rhs_hi;
    std::string verdict;
    std::string hypothesis_report;
    unsigned precision_bits = 0;
    double wall_time_ms = 0.0;
    std::string notes;
    double margin = 0.0;  // lhs.lo - rhs.hi, the certification slack
};

inline RunRecord make_record(const std::string& graph_id, const BoundVerdict& v, double ms,
                             bool render_intervals = true) {
    RunRecord r;
    r.graph_id = graph_id;
    r.check_id = v.check_id;
    if (v.verdict != Verdict::skipped) {
        if (render_intervals) {
            r.lhs_lo = v.lhs.lo().to_decimal(17, MPFR_RNDD);
            r.lhs_hi = v.lhs.hi().to_decimal(17, MPFR_RNDU);
            r.rhs_lo = v.rhs.lo().to_decimal(17, MPFR_RNDD);
            r.rhs_hi = v.rhs.hi().to_decimal(17, MPFR_RNDU);
        }
        BigFloat m(64);
        mpfr_sub(m.raw(), v.lhs.lo().raw(), v.rhs.hi().raw(), MPFR_RNDN);
        r.margin = m.to_double();
    }
    r.verdict = verdict_name(v.verdict);
    std::ostringstream hyp;
    for (size_t i = 0; i < v.hypotheses.size(); ++i) {
        if (i) hyp << ";";
        hyp << v.hypotheses[i].first << "=" << (v.hypotheses[i].second ? 1 : 0);
    }
    r.hypothesis_report = hyp.str();
    r.precision_bits = v.precision_bits;
    r.wall_time_ms = ms;
    r.notes = v.notes;
    return r;
}

class RecordSink {
public:
    virtual ~RecordSink() = default;
    virtual void on_record(const RunRecord& r, const std::string& graph6_witness) = 0;
    // Aggregating sinks can skip the decimal rendering of interval endpoints.
    virtual bool wants_detail() const { return true; }
};

class CollectSink : public RecordSink {
public:
    void on_record(const RunRecord& r, const std::string&) override { records.push_back(r); }
    std::vector<RunRecord> records;
};

struct SummaryRow {
    long holds = 0, fails = 0, undecided = 0, skipped = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    unsigned max_precision_bits = 0;
};

// Counts-only sink for the large exhaustive tiers.
class AggregateSink : public RecordSink {
public:
    bool wants_detail() const override { return false; }
    void on_record(const RunRecord& r, const std::string& witness) override {
        SummaryRow& row = rows[r.check_id];
        if (r.verdict == "Holds-certified") {
            ++row.holds;
            row.min_margin = std::min(row.min_margin, r.margin);
        } else if (r.verdict == "Fails-certified") {
            ++row.fails;
            if (static_cast<long>(fail_witnesses.size()) < max_witnesses)
                fail_witnesses.emplace_back(r.check_id, witness);
        } else if (r.verdict == "Undecided") {
            ++row.undecided;
        } else {
            ++row.skipped;
        }
        row.max_precision_bits = std::max(row.max_precision_bits, r.precision_bits);
        ++total;
    }
    std::map<std::string, SummaryRow> rows;
    std::vector<std::pair<std::string, std::string>> fail_witnesses;
    long max_witnesses = 64;
    long total = 0;
};

struct SweepOptions {
    std::vector<std::string> checks{"T1"};
    TolerancePolicy policy;
    int threads = 1;
    bool full_subgraph_lattice = false;  // T1 over every proper edge subset (n <= 5 only)
    std::string counterexample_path;     // graph6 lines of Fails-certified witnesses
    double perron_tol = 1e-9;
};

namespace detail {

inline bool wants(const SweepOptions& o, const std::string& id) {
    for (const auto& c : o.checks)
        if (c == id) return true;
    return false;
}

class CounterexampleWriter {
public:
    explicit CounterexampleWriter(const std::string& path) : path_(path) {}
    void add(const std::string& g6) {
        if (path_.empty()) return;
        if (!out_.is_open()) {
            out_.open(path_);
            if (!out_) throw Error("cannot open counterexample file: " + path_);
        }
        out_ << g6 << "\n";
    }

private:
    std::string path_;
    std::ofstream out_;
};

// All requested checks applied to one graph; records stream to the sink.
inline void apply_checks(const std::string& graph_id, const std::string& g6, const Graph& g,
                         const SweepOptions& opts, RecordSink& sink, CounterexampleWriter& cex) {
    using clock = std::chrono::steady_clock;
    GraphStats st = structure_flags(g);
    SpectralEngine eng(g, engine_opts(opts.policy));

    auto emit = [&](const BoundVerdict& v, double ms) {
        RunRecord r = make_record(graph_id, v, ms, sink.wants_detail());
        sink.on_record(r, g6);
        if (v.verdict == Verdict::fails) cex.add(g6);
    };
    auto timed = [&](auto&& fn) {
        auto t0 = clock::now();
        auto vs = fn();
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        return std::make_pair(std::move(vs), ms);
    };

    bool want_t1 = wants(opts, "T1") || wants(opts, "T1a_strong");
    if (want_t1) {
        auto run_subgraph = [&](const Graph& h, const std::string& tag) {
            auto t0 = clock::now();
            auto vs = check_subgraph_gap(eng, h, opts.policy, &st);
            double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            for (auto& v : vs) {
                if (!wants(opts, v.check_id)) continue;
                v.notes = v.notes.empty() ? tag : (tag + "; " + v.notes);
                emit(v, ms / vs.size());
            }
        };
        if (opts.full_subgraph_lattice) {
            if (g.order() > 5) throw Error("full subgraph lattice sweeps are capped at n <= 5");
            auto es = g.edges();
            const int m = static_cast<int>(es.size());
            for (std::uint32_t keep = 0; keep + 1 < (1u << m); ++keep) {
                Graph h(g.order());
                for (int i = 0; i < m; ++i)
                    if ((keep >> i) & 1u) h.add_edge(es[static_cast<size_t>(i)].first,
                                                     es[static_cast<size_t>(i)].second);
                run_subgraph(h, "subset=" + std::to_string(keep));
            }
        } else {
            for (auto [u, v] : g.edges())
                run_subgraph(delete_edge_copy(g, u, v),
                             "e=(" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }

    if (wants(opts, "T2")) {
        auto [v, ms] = timed([&] { return check_nonbipartite_gap(eng, opts.policy, &st); });
        emit(v, ms);
    }

    if (wants(opts, "T11") || wants(opts, "T21")) {
        if (st.is_regular && st.is_connected && wants(opts, "T11")) {
            for (auto [u, v] : g.edges()) {
                Graph h = delete_edge_copy(g, u, v);
                auto t0 = clock::now();
                auto vs = check_regular_variants(eng, &h, opts.policy, &st);
                double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                for (auto& bv : vs)
                    if (bv.check_id == "T11" && wants(opts, "T11")) {
                        bv.notes = "e=(" + std::to_string(u) + "," + std::to_string(v) + ")";
                        emit(bv, ms);
                    }
            }
        }
        auto [vs, ms] = timed([&] { return check_regular_variants(eng, nullptr, opts.policy, &st); });
        for (auto& bv : vs)
            if (wants(opts, bv.check_id)) emit(bv, ms / vs.size());
    }

    if (wants(opts, "T4") || wants(opts, "CGN")) {
        auto [vs, ms] = timed([&] { return check_theorem4(eng, opts.policy, &st); });
        for (auto& bv : vs)
            if (wants(opts, bv.check_id)) emit(bv, ms / vs.size());
    }

    if (wants(opts, "P1")) {
        auto [v, ms] = timed([&] { return check_eigenvector_ratio(eng, opts.policy, &st); });
        emit(v, ms);
    }

    if (wants(opts, "P2") || wants(opts, "WALK")) {
        auto [vs, ms] = timed([&] { return check_diameter_power(eng, opts.policy, &st); });
        for (auto& bv : vs)
            if (wants(opts, bv.check_id)) emit(bv, ms / vs.size());
    }

    if (wants(opts, "DIST_LEMMA")) {
        for (auto [u, v] : g.edges()) {
            auto t0 = clock::now();
            BoundVerdict bv = edge_deletion_distance_lemma(g, u, v, &st);
            double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            bv.notes = "e=(" + std::to_string(u) + "," + std::to_string(v) + "); " + bv.notes;
            emit(bv, ms);
        }
    }

    if (wants(opts, "SIGNCUT")) {
        auto t0 = clock::now();
        SignCutResult sc = sign_cut_subgraph(eng, opts.perron_tol, &st);
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        emit(sc.record, ms);
    }

    if (wants(opts, "SACHS")) {
        auto t0 = clock::now();
        BoundVerdict v;
        v.check_id = "SACHS";
        v.hypotheses = {{"G connected", st.is_connected}};
        if (!st.is_connected) {
            v.verdict = Verdict::skipped;
            v.notes = "disconnected";
        } else if (st.is_bipartite) {
            mpfr_prec_t prec = 128;
            Interval sum = iadd(eng.mu(1e-10), eng.mu_min(1e-10), prec);
            v.lhs = sum;
            v.rhs = Interval::of_long(0);
            v.verdict = sum.contains_zero() ? Verdict::holds : Verdict::fails;
            v.notes = "bipartite: enclosure of mu+mu_min must contain 0";
        } else {
            Interval sum;
            Verdict verdict = Verdict::undecided;
            for (double tol : {1e-6, 1e-10, 1e-13}) {
                sum = iadd(eng.mu(tol), eng.mu_min(tol), 128);
                if (sum.is_positive()) {
                    verdict = Verdict::holds;
                    break;
                }
                if (sum.is_negative()) {
                    verdict = Verdict::fails;
                    break;
                }
            }
            v.lhs = sum;
            v.rhs = Interval::of_long(0);
            v.verdict = verdict;
            v.notes = "nonbipartite: certified mu+mu_min > 0";
        }
        v.precision_bits = eng.precision_bits_used();
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        emit(v, ms);
    }
}

}  // namespace detail

// Sweep over every labeled connected graph on n vertices.  Work is
// partitioned over the edge-mask space; records are merged in mask order, so
// output is deterministic for any thread count.
inline void run_sweep_enumerate(int n, const SweepOptions& opts, RecordSink& sink) {
    detail::CounterexampleWriter cex(opts.counterexample_path);
    const int m = n * (n - 1) / 2;
    const std::uint32_t total = 1u << m;
    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        enumerate_connected_range(n, 0, total, [&](std::uint32_t mask, const Graph& g) {
            std::string g6 = graph6_encode(g);
            detail::apply_checks(g6, g6, g, opts, sink, cex);
            (void)mask;
        });
        return;
    }
    // chunked parallel execution with in-order merge
    const std::uint32_t chunk = std::max<std::uint32_t>(1024, total / (64u * threads));
    std::uint32_t next_begin = 0;
    while (next_begin < total) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;
        for (int t = 0; t < threads && next_begin < total; ++t) {
            std::uint32_t end = (total - next_begin > chunk) ? next_begin + chunk : total;
            ranges.emplace_back(next_begin, end);
            next_begin = end;
        }
        std::vector<CollectSink> locals(ranges.size());
        std::vector<std::vector<std::string>> local_wit(ranges.size());
        std::vector<std::thread> pool;
        for (size_t i = 0; i < ranges.size(); ++i) {
            pool.emplace_back([&, i] {
                detail::CounterexampleWriter none("");
                enumerate_connected_range(n, ranges[i].first, ranges[i].second,
                                          [&](std::uint32_t, const Graph& g) {
                                              std::string g6 = graph6_encode(g);
                                              size_t before = locals[i].records.size();
                                              detail::apply_checks(g6, g6, g, opts, locals[i], none);
                                              for (size_t k = before; k < locals[i].records.size(); ++k)
                                                  local_wit[i].push_back(g6);
                                          });
            });
        }
        for (auto& th : pool) th.join();
        for (size_t i = 0; i < ranges.size(); ++i)
            for (size_t k = 0; k < locals[i].records.size(); ++k) {
                const RunRecord& r = locals[i].records[k];
                sink.on_record(r, local_wit[i][k]);
                if (r.verdict == "Fails-certified") cex.add(local_wit[i][k]);
            }
    }
}

inline void run_sweep_corpus(const std::vector<Graph>& graphs, const SweepOptions& opts,
                             RecordSink& sink) {
    detail::CounterexampleWriter cex(opts.counterexample_path);
    for (const Graph& g : graphs) {
        std::string g6 = graph6_encode(g);
        detail::apply_checks(g6, g6, g, opts, sink, cex);
    }
}

inline void run_sweep_corpus_file(const std::string& path, const SweepOptions& opts,
                                  RecordSink& sink) {
    run_sweep_corpus(read_graph6_file(path), opts, sink);
}

// Construction-grid sweep: one record per validation claim per instance.
inline void run_thm2_grid(const std::vector<std::pair<int, int>>& grid, const SweepOptions& opts,
                          RecordSink& sink) {
    detail::CounterexampleWriter cex(opts.counterexample_path);
    using clock = std::chrono::steady_clock;
    for (auto [k, D] : grid) {
        auto t0 = clock::now();
        ConstructionReport rep = build_theorem2_construction(k, D, opts.policy);
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        std::string g6 = graph6_encode(rep.graph);
        for (const auto& c : rep.claims) {
            BoundVerdict v;
            v.check_id = "THM2_" + c.name;
            v.verdict = c.verdict;
            v.lhs = rep.extreme_sum;
            v.rhs = rep.mu;
            v.notes = c.detail;
            v.precision_bits = rep.precision_bits;
            RunRecord r = make_record(rep.params, v, ms / rep.claims.size());
            r.lhs_lo.clear();
            r.lhs_hi.clear();
            r.rhs_lo.clear();
            r.rhs_hi.clear();
            r.margin = 0.0;
            sink.on_record(r, g6);
            if (c.verdict == Verdict::fails) cex.add(g6);
        }
    }
}

inline void run_thm3_instance(int n, const mpq_class& eps, const SweepOptions& opts,
                              RecordSink& sink) {
    detail::CounterexampleWriter cex(opts.counterexample_path);
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    ConstructionReport rep = build_theorem3_construction(n, eps, opts.policy);
    double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    std::string g6 = graph6_encode(rep.graph);
    for (const auto& c : rep.claims) {
        BoundVerdict v;
        v.check_id = "THM3_" + c.name;
        v.verdict = c.verdict;
        v.notes = c.detail;
        v.precision_bits = rep.precision_bits;
        RunRecord r = make_record(rep.params, v, ms / rep.claims.size());
        r.lhs_lo.clear();
        r.lhs_hi.clear();
        r.rhs_lo.clear();
        r.rhs_hi.clear();
        r.margin = 0.0;
        sink.on_record(r, g6);
        if (c.verdict == Verdict::fails) cex.add(g6);
    }
}

// --- reports -----------------------------------------------------------------

namespace detail {
inline void json_escape(std::ostream& out, const std::string& s) {
    out << '"';
    for (char c : s) {
        switch (c) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            case '\t': out << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out << buf;
                } else {
                    out << c;
                }
        }
    }
    out << '"';
}
}  // namespace detail

// JSON-lines detail file plus CSV summary.  Timing fields are excluded when
// include_timing is false so byte-level determinism can be checked.
inline void emit_report(const std::vector<RunRecord>& records, const std::string& detail_path,
                        const std::string& summary_csv_path, bool include_timing = true) {
    if (!detail_path.empty()) {
        std::ofstream out(detail_path);
        if (!out) throw Error("cannot open report file: " + detail_path);
        for (const RunRecord& r : records) {
            out << "{\"graph_id\":";
            detail::json_escape(out, r.graph_id);
            out << ",\"check_id\":";
            detail::json_escape(out, r.check_id);
            out << ",\"lhs_lo\":";
            detail::json_escape(out, r.lhs_lo);
            out << ",\"lhs_hi\":";
            detail::json_escape(out, r.lhs_hi);
            out << ",\"rhs_lo\":";
            detail::json_escape(out, r.rhs_lo);
            out << ",\"rhs_hi\":";
            detail::json_escape(out, r.rhs_hi);
            out << ",\"verdict\":";
            detail::json_escape(out, r.verdict);
            out << ",\"hypothesis_report\":";
            detail::json_escape(out, r.hypothesis_report);
            out << ",\"precision_bits\":" << r.precision_bits;
            if (include_timing) out << ",\"wall_time_ms\":" << r.wall_time_ms;
            out << ",\"notes\":";
            detail::json_escape(out, r.notes);
            out << "}\n";
        }
        if (!out) throw Error("write failure: " + detail_path);
    }
    if (!summary_csv_path.empty()) {
        std::map<std::string, SummaryRow> rows;
        for (const RunRecord& r : records) {
            SummaryRow& row = rows[r.check_id];
            if (r.verdict == "Holds-certified") {
                ++row.holds;
                row.min_margin = std::min(row.min_margin, r.margin);
            } else if (r.verdict == "Fails-certified") {
                ++row.fails;
            } else if (r.verdict == "Undecided") {
                ++row.undecided;
            } else {
                ++row.skipped;
            }
            row.max_precision_bits = std::max(row.max_precision_bits, r.precision_bits);
        }
        std::ofstream out(summary_csv_path);
        if (!out) throw Error("cannot open summary file: " + summary_csv_path);
        out << "check_id,holds,fails,undecided,skipped,min_margin,max_precision_bits\n";
        for (const auto& [id, row] : rows) {
            out << id << "," << row.holds << "," << row.fails << "," << row.undecided << ","
                << row.skipped << ",";
            if (row.holds > 0) out << row.min_margin;
            out << "," << row.max_precision_bits << "\n";
        }
        if (!out) throw Error("write failure: " + summary_csv_path);
    }
}

}  // namespace eigengap
