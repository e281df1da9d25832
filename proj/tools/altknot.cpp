#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "altknot/serialize.hpp"
#include "altknot/table.hpp"

using namespace altknot;

namespace {

enum Exit { Ok = 0, Usage = 1, BadInput = 2, Budget = 3 };

struct InputFlags {
    std::string pd, dt, table_name, table_file;
};

void add_input(CLI::App* cmd, InputFlags& in, bool with_table) {
    auto* pd = cmd->add_option("--pd", in.pd, "PD code, e.g. \"[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\"");
    auto* dt = cmd->add_option("--dt", in.dt, "DT code, e.g. \"4 6 2\"");
    pd->excludes(dt);
    if (with_table) {
        auto* t = cmd->add_option("--table", in.table_name, "knot name from the table, e.g. 3_1");
        t->excludes(pd)->excludes(dt);
        cmd->add_option("--table-file", in.table_file, "knot table (default: bundled)");
    }
}

struct Input {
    std::string name;
    Diagram diagram;
};

Input read_input(const InputFlags& in) {
    if (!in.pd.empty()) return {"pd", from_pd_string(in.pd)};
    if (!in.dt.empty()) return {"dt", from_dt_string(in.dt)};
    if (!in.table_name.empty()) {
        auto table = load_table(in.table_file.empty() ? default_table_path() : in.table_file);
        const TableEntry* e = find_entry(table, in.table_name);
        if (!e) throw TableError("no knot named " + in.table_name);
        return {e->name, e->diagram()};
    }
    throw CLI::RequiredError("--pd, --dt or --table");
}

std::string sign_word(int s) { return s > 0 ? "+" : "-"; }

Json analysis_json(const std::string& name, const Diagram& d, const UnknottingReport& r, double ms,
                   const std::optional<std::set<int>>& sweep) {
    Json j = r;
    j["name"] = name;
    j["input"] = d;
    j["crossing_count"] = d.crossing_count();
    j["time_ms"] = ms;
    if (sweep) {
        std::set<int> got;
        for (const auto& c : r.crossings) got.insert(c.crossing);
        j["oracle"] = {{"sweep", *sweep}, {"agree", got == *sweep}};
    }
    return j;
}

void print_analysis(std::ostream& os, const std::string& name, const Diagram& d, const UnknottingReport& r,
                    double ms, const std::optional<std::set<int>>& sweep, bool list_embeddings) {
    os << "knot " << name << ": " << d.crossing_count() << " crossings, det " << r.determinant << ", signature "
       << r.signature << "\n";
    os << "embeddings: " << r.embeddings.size() << " (mirror " << r.mirror_embeddings.size() << ")"
       << (r.budget_exhausted ? ", search budget exhausted" : "") << "\n";
    if (list_embeddings) {
        for (bool m : {false, true})
            for (const auto& e : m ? r.mirror_embeddings : r.embeddings) os << "  " << (m ? "mirror " : "") << Json(e).dump() << "\n";
    }
    os << "u=1: " << to_string(r.verdict) << "\n";
    for (const auto& c : r.crossings) {
        os << "  crossing " << c.crossing << " sign " << sign_word(c.sign) << (c.via_mirror ? " (via mirror)" : "");
        if (!c.certificate.moves.empty())
            os << ", certificate " << c.certificate.moves.size() << " moves to C_" << c.certificate.terminal_m;
        os << "\n";
    }
    for (const auto& f : r.failures) os << "  failure: " << f << "\n";
    if (sweep) {
        std::set<int> got;
        for (const auto& c : r.crossings) got.insert(c.crossing);
        os << "oracle sweep: {";
        bool first = true;
        for (int c : *sweep) os << (first ? "" : ",") << c, first = false;
        os << "} " << (got == *sweep ? "agrees" : "DISAGREES") << "\n";
    }
    os << "time " << ms << " ms\n";
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alternating knots with unknotting number one: change-maker lattices, marked crossings, certificates"};
    app.require_subcommand(1);

    InputFlags ain;
    bool json = false, oracle = false, list_embeddings = false;
    long long budget = 20000000;
    auto* analyze = app.add_subcommand("analyze", "decide u=1 for a reduced alternating diagram");
    add_input(analyze, ain, true);
    analyze->add_flag("--json", json, "JSON report");
    analyze->add_flag("--oracle", oracle, "compare with the brute-force crossing-change sweep");
    analyze->add_option("--budget", budget, "embedding search node budget per side");
    analyze->add_flag("--all-embeddings", list_embeddings, "print every embedding found");

    std::string batch_file;
    int min_c = 0, max_c = 1000;
    auto* batch = app.add_subcommand("batch", "analyze every alternating knot of a table");
    batch->add_option("table", batch_file, "table file (default: bundled)");
    batch->add_option("--min-crossings", min_c);
    batch->add_option("--max-crossings", max_c);
    batch->add_flag("--json", json, "one JSON report per line, then a summary line");
    batch->add_flag("--oracle", oracle, "compare with the brute-force crossing-change sweep");
    batch->add_option("--budget", budget, "embedding search node budget per side");

    InputFlags cin_;
    std::string replay_file;
    auto* certify = app.add_subcommand("certify", "reduce an almost-alternating unknot diagram to C_m");
    add_input(certify, cin_, false);
    certify->add_flag("--json", json, "certificate bundle as JSON");
    certify->add_option("--replay", replay_file, "replay a certificate bundle or analyze report");
    certify->add_option("--budget", budget, "embedding search node budget per side");

    InputFlags tin;
    int tower_crossing = 0, tower_n = 1;
    bool promote = false;
    auto* tower = app.add_subcommand("tower", "iterated twirl tower and its minor recurrences");
    add_input(tower, tin, true);
    tower->add_option("--crossing", tower_crossing, "crossing id")->required();
    tower->add_option("-n", tower_n, "number of twirls")->check(CLI::Range(0, 64));
    tower->add_flag("--promote", promote, "make the crossing a marked crossing through the tower");
    tower->add_flag("--json", json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    DecideOptions opts;
    opts.node_budget = budget;
    try {
        if (*analyze) {
            Input in = read_input(ain);
            auto t0 = std::chrono::steady_clock::now();
            UnknottingReport r = decide_unknotting(in.diagram, opts);
            double ms = since(t0);
            std::optional<std::set<int>> sweep;
            if (oracle) sweep = crossing_change_sweep(in.diagram);
            if (json) std::cout << analysis_json(in.name, in.diagram, r, ms, sweep).dump(2) << "\n";
            else print_analysis(std::cout, in.name, in.diagram, r, ms, sweep, list_embeddings);
            return r.verdict == Verdict::Inconclusive ? Budget : Ok;
        }
        if (*batch) {
            auto table = load_table(batch_file.empty() ? default_table_path() : batch_file);
            int total = 0, compared = 0, agree = 0, inconclusive = 0, skipped = 0, oracle_agree = 0;
            for (const auto& e : table) {
                if (e.crossings() == 0 || e.crossings() < min_c || e.crossings() > max_c) continue;
                Diagram d = e.diagram();
                auto t0 = std::chrono::steady_clock::now();
                UnknottingReport r;
                try {
                    r = decide_unknotting(d, opts);
                } catch (const NotAlternating& ex) {
                    ++skipped;
                    if (json) std::cout << Json{{"name", e.name}, {"skipped", ex.what()}}.dump() << "\n";
                    else std::cout << e.name << ": skipped (" << ex.what() << ")\n";
                    continue;
                }
                double ms = since(t0);
                ++total;
                if (r.verdict == Verdict::Inconclusive) ++inconclusive;
                std::optional<std::set<int>> sweep;
                if (oracle) {
                    sweep = crossing_change_sweep(d);
                    std::set<int> got;
                    for (const auto& c : r.crossings) got.insert(c.crossing);
                    oracle_agree += got == *sweep;
                }
                std::string ref = "-";
                bool match = true;
                if (auto one = e.unknotting_one(); one && r.verdict != Verdict::Inconclusive) {
                    ++compared;
                    match = *one == (r.verdict == Verdict::Yes);
                    agree += match;
                    ref = *e.u;
                }
                if (json) {
                    Json j = analysis_json(e.name, d, r, ms, sweep);
                    j["reference_u"] = ref;
                    std::cout << j.dump() << "\n";
                } else {
                    int pos = 0, neg = 0;
                    for (const auto& c : r.crossings) (c.sign > 0 ? pos : neg)++;
                    std::cout << e.name << ": u=1 " << to_string(r.verdict) << " (reference u=" << ref << ")"
                              << (match ? "" : " MISMATCH") << ", crossings +" << pos << "/-" << neg;
                    if (sweep) {
                        std::set<int> got;
                        for (const auto& c : r.crossings) got.insert(c.crossing);
                        std::cout << ", oracle " << (got == *sweep ? "ok" : "differs");
                    }
                    std::cout << "\n";
                }
            }
            Json summary{{"knots", total}, {"compared", compared}, {"agree", agree},
                         {"inconclusive", inconclusive}, {"skipped", skipped}};
            if (oracle) summary["oracle_agree"] = oracle_agree;
            if (json) std::cout << Json{{"summary", summary}}.dump() << "\n";
            else std::cout << "summary: " << total << " knots, " << agree << "/" << compared << " agree with reference, "
                           << inconclusive << " inconclusive, " << skipped << " skipped"
                           << (oracle ? ", oracle agrees on " + std::to_string(oracle_agree) : "") << "\n";
            return inconclusive ? Budget : Ok;
        }
        if (*certify) {
            if (!replay_file.empty()) {
                std::ifstream f(replay_file);
                if (!f) throw std::invalid_argument("cannot open " + replay_file);
                Json j = Json::parse(f);
                Diagram input = j.at("input").get<Diagram>();
                std::vector<Certificate> certs;
                if (j.contains("certificate")) certs.push_back(j.at("certificate").get<Certificate>());
                if (j.contains("crossings"))
                    for (const auto& c : j.at("crossings")) certs.push_back(c.at("certificate").get<Certificate>());
                bool all = !certs.empty();
                for (const auto& c : certs) {
                    ReplayResult rr = replay(input, c);
                    std::cout << "replay " << c.moves.size() << " moves: "
                              << (rr.ok ? "reaches C_" + std::to_string(rr.m) : "FAILED " + rr.error) << "\n";
                    all = all && rr.ok;
                }
                return all ? Ok : BadInput;
            }
            Input in = read_input(cin_);
            auto cert = certify_almost_alternating_unknot(in.diagram, opts);
            if (!cert) {
                std::cout << (json ? Json{{"schema_version", kSchemaVersion}, {"certificate", nullptr}}.dump(2)
                                   : "no certificate: the alternating parent has no embedding marking the crossing")
                          << "\n";
                return Ok;
            }
            if (json) {
                std::cout << certificate_bundle(in.diagram, *cert).dump(2) << "\n";
            } else {
                std::cout << "certificate (" << cert->moves.size() << " moves, start "
                          << (cert->from_mirror ? "mirror" : "input") << ") to C_" << cert->terminal_m << "\n";
                for (const auto& m : cert->moves) std::cout << "  " << Json(m).dump() << "\n";
            }
            return Ok;
        }
        if (*tower) {
            Input in = read_input(tin);
            TwirlTower t = twirl_tower(in.diagram, tower_crossing, tower_n);
            Json j = t;
            if (promote) {
                Promotion p = promote_unknotting_crossing(in.diagram, tower_crossing, budget);
                j["promotion"] = {{"ok", p.ok}, {"n", p.n}, {"via_mirror", p.via_mirror}, {"error", p.error}};
                if (p.ok) j["promotion"]["embedding"] = p.embedding;
            }
            if (json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "D^(" << tower_n << "): " << t.top().diagram.crossing_count() << " crossings, signature "
                          << t.signature << ", new crossing " << t.top().crossing << "\n";
                std::cout << "minors d_-1..d_n:";
                for (auto m : t.minors) std::cout << " " << m;
                std::cout << "\nrecurrences " << (t.recurrence_holds ? "hold" : "FAIL") << "\n";
                if (promote) std::cout << "promotion: " << j["promotion"].dump() << "\n";
            }
            return Ok;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    }
    return Usage;
}
