// Command line front end: generate instances, reduce codegrees, run the
// semi-random coloring pipeline, verify colorings, aggregate traces.
//
// Exit codes: 0 ok, 2 input error, 3 algorithmic failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nibble/completion.hpp"
#include "nibble/instances.hpp"
#include "nibble/json_io.hpp"
#include "nibble/nibble.hpp"
#include "nibble/params.hpp"
#include "nibble/reduction.hpp"
#include "nibble/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;

std::size_t default_threads() {
    if (const char* env = std::getenv("NIBBLE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 1;
}

struct GenerateArgs {
    std::size_t n = 0, k = 3, m = 0, lists_size = 0;
    std::uint64_t seed = 0;
    bool triangle_free = false, linear = false;
    std::string out, lists_out;
};

int cmd_generate(const GenerateArgs& a) {
    nibble::Hypergraph h =
        a.linear ? [&] {
            auto res = nibble::instances::gen_linear(a.n, a.k, a.m, a.seed);
            if (!res.reached_target) {
                std::cerr << "generate: linear packing reached only " << res.h.num_edges()
                          << " of " << a.m << " edges\n";
                throw nibble::InputError("linear target unreachable");
            }
            return res.h;
        }()
                 : nibble::instances::gen_uniform(a.n, a.k, a.m, a.seed);
    if (a.triangle_free) h = nibble::instances::make_triangle_free(h, a.seed);
    nibble::save_json_file(a.out, nibble::instance_to_json(h));
    std::cerr << "generate: wrote " << h.num_edges() << " edges to " << a.out << "\n";
    if (a.lists_size > 0) {
        std::string path = a.lists_out.empty() ? a.out + ".lists.json" : a.lists_out;
        auto lists = nibble::make_shared_lists(h.num_vertices(), a.lists_size);
        nibble::save_json_file(path, nibble::lists_to_json(lists));
        std::cerr << "generate: wrote lists to " << path << "\n";
    }
    return kExitOk;
}

struct ReduceArgs {
    std::string instance, policy, out, trace;
    bool balanced = false;
    bool allow_dup = false;
};

int cmd_reduce(const ReduceArgs& a) {
    nibble::Hypergraph h =
        nibble::instance_from_json(nibble::load_json_file(a.instance), a.allow_dup);
    json trace_json;
    nibble::Hypergraph out = h;
    if (a.balanced) {
        auto result = nibble::reduction::balanced_reduce(h);
        trace_json = result.trace.to_json();
        trace_json["balanced_delta"] = result.delta;
        json lambdas = json::object();
        for (std::size_t s = 2; s < result.lambdas.size(); ++s)
            lambdas[std::to_string(s)] = result.lambdas[s];
        trace_json["lambdas"] = std::move(lambdas);
        out = std::move(result.h);
    } else {
        auto policy = nibble::reduction::ReductionPolicy::from_json(
            nibble::load_json_file(a.policy));
        auto trace = nibble::reduction::f_reduce(h, policy);
        out = nibble::reduction::reduced_hypergraph(h, trace);
        trace_json = trace.to_json();
    }
    nibble::save_json_file(a.out, nibble::instance_to_json(out));
    if (!a.trace.empty()) nibble::save_json_file(a.trace, trace_json);
    std::cerr << "reduce: " << h.num_edges() << " -> " << out.num_edges() << " edges\n";
    return kExitOk;
}

struct ColorArgs {
    std::string instance, lists, out, trace, trace_globals;
    std::uint64_t seed = 0;
    bool relax = false;
    double phi1 = 0.0, phi2 = 0.0, delta = 0.0;
    std::size_t colors = 0;
    std::size_t max_rounds = 10000;
    bool deterministic_tiebreak = false;
    std::size_t threads = default_threads();
    std::string q_method = "auto";
    std::size_t q_samples = 10000;
    std::size_t max_resamples = 100000;
    std::string fallback = "greedy";
};

int cmd_color(const ColorArgs& a) {
    auto h = std::make_shared<nibble::Hypergraph>(
        nibble::instance_from_json(nibble::load_json_file(a.instance), false));

    std::shared_ptr<nibble::ListAssignment> lists;
    std::size_t colors = a.colors;
    if (!a.lists.empty()) {
        lists = std::make_shared<nibble::ListAssignment>(
            nibble::lists_from_json(nibble::load_json_file(a.lists), h->num_vertices()));
        if (colors == 0) {
            colors = SIZE_MAX;
            for (const auto& lst : lists->lists) colors = std::min(colors, lst.size());
        }
    } else {
        if (colors == 0)
            throw nibble::InputError("without a lists file, pass --colors to size the shared lists");
        lists = std::make_shared<nibble::ListAssignment>(
            nibble::make_shared_lists(h->num_vertices(), colors));
    }

    nibble::RelaxOverrides relax;
    double delta = a.delta;
    if (a.relax) {
        relax.colors = colors;
        relax.phi1 = a.phi1 > 0.0 ? a.phi1 : 36.0 / static_cast<double>(colors);
        relax.phi2 = a.phi2 > 0.0 ? a.phi2 : 0.2;
        if (delta <= 0.0)
            delta = nibble::derive_relaxed_delta(*h, *lists, *relax.phi1, colors);
    } else {
        if (a.phi1 > 0.0 || a.phi2 > 0.0)
            throw nibble::InputError("phi overrides need --relax");
        if (delta <= 0.0)
            throw nibble::InputError("strict mode needs an explicit --delta");
    }
    nibble::Params params(h->rank(), delta, relax);

    nibble::RunConfig cfg;
    cfg.q_samples = a.q_samples;
    cfg.deterministic_tiebreak = a.deterministic_tiebreak;
    cfg.threads = a.threads;
    if (a.q_method == "exact")
        cfg.q_method = nibble::QMethod::Exact;
    else if (a.q_method == "mc")
        cfg.q_method = nibble::QMethod::MonteCarlo;
    else if (a.q_method == "auto")
        cfg.q_method = nibble::QMethod::Auto;
    else
        throw nibble::InputError("q-method must be exact, mc or auto");

    nibble::NibbleState state = nibble::init_state(h, lists, params, a.seed);
    nibble::RunResult run = nibble::run_to_termination(state, a.max_rounds, cfg);
    if (!run.reached_termination)
        std::cerr << "color: warning: stopped at max-rounds before the zeta threshold\n";
    std::cerr << "color: " << run.traces.size() << " rounds, "
              << state.partial.colored_count() << " vertices colored by rounds, "
              << state.uncolored.size() << " left, " << state.deferred.size()
              << " deferred\n";

    if (!a.trace.empty()) {
        nibble::write_trace_csv(run.traces, a.trace);
        std::string gpath = a.trace_globals.empty() ? a.trace + ".globals.json" : a.trace_globals;
        nibble::save_json_file(gpath, nibble::globals_to_json(run.traces, state.params));
    }

    nibble::CompletionConfig ccfg;
    ccfg.max_resample_rounds = a.max_resamples;
    ccfg.fallback = a.fallback == "fail" ? nibble::CompletionConfig::Fallback::Fail
                                         : nibble::CompletionConfig::Fallback::Greedy;
    nibble::CompletionResult completion = nibble::complete(state, ccfg);
    if (!a.out.empty())
        nibble::save_json_file(a.out,
                               nibble::coloring_to_json(completion.coloring, lists->table));
    if (!completion.success) {
        json report;
        report["reason"] = completion.failure_reason;
        report["failed_vertices"] = completion.failed_vertices;
        report["deferred"] = state.deferred;
        std::cerr << "color: completion failed: " << report.dump() << "\n";
        return kExitFailure;
    }
    std::cerr << "color: completion done after " << completion.resamples << " resamples"
              << (completion.used_greedy ? " (greedy fallback)" : "") << "\n";

    auto rep = nibble::verify::verify_list(*h, *lists, completion.coloring);
    if (!rep.clean()) {
        std::cerr << "color: verification failed: " << rep.to_json(*h).dump() << "\n";
        return kExitFailure;
    }
    std::cerr << "color: verified proper list coloring\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string instance, coloring, lists, codegree_bounds, out;
    bool triangle_free = false;
    bool allow_dup = false;
};

int cmd_verify(const VerifyArgs& a) {
    nibble::Hypergraph h =
        nibble::instance_from_json(nibble::load_json_file(a.instance), a.allow_dup);
    json report;
    bool clean = true;

    json coloring_json = nibble::load_json_file(a.coloring);
    std::shared_ptr<nibble::ListAssignment> lists;
    nibble::ColorTable table;
    if (!a.lists.empty()) {
        lists = std::make_shared<nibble::ListAssignment>(
            nibble::lists_from_json(nibble::load_json_file(a.lists), h.num_vertices()));
        table = lists->table;
    } else {
        std::vector<std::string> names;
        for (const auto& [key, value] : coloring_json.at("colors").items())
            names.push_back(value.get<std::string>());
        table = nibble::ColorTable(std::move(names));
    }
    nibble::Coloring coloring =
        nibble::coloring_from_json(coloring_json, table, h.num_vertices());

    if (lists) {
        auto rep = nibble::verify::verify_list(h, *lists, coloring);
        report["coloring"] = rep.to_json(h);
        clean = clean && rep.clean();
    } else {
        auto rep = nibble::verify::verify_proper(h, coloring);
        report["coloring"] = rep.to_json(h);
        clean = clean && rep.clean();
    }

    if (a.triangle_free) {
        auto wit = h.find_triangle();
        report["triangle_free"] = !wit.has_value();
        if (wit) {
            report["triangle"] = {{"e", wit->e}, {"f", wit->f}, {"g", wit->g},
                                  {"u", wit->u}, {"v", wit->v}, {"w", wit->w}};
            clean = false;
        }
    }

    if (!a.codegree_bounds.empty()) {
        auto policy = nibble::reduction::ReductionPolicy::from_json(
            nibble::load_json_file(a.codegree_bounds));
        json violations = json::array();
        // brute recount per distinct subset of an edge
        for (std::size_t ell = 3; ell <= h.rank(); ++ell) {
            for (std::size_t s = 2; s < ell; ++s) {
                std::set<nibble::Edge> seen;
                for (const nibble::Edge& e : h.edges()) {
                    if (e.size() != ell) continue;
                    std::vector<std::size_t> pick(s);
                    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
                    while (true) {
                        nibble::Edge sub(s);
                        for (std::size_t i = 0; i < s; ++i) sub[i] = e[pick[i]];
                        if (seen.insert(sub).second) {
                            std::size_t deg = nibble::verify::brute_codegree(h, sub, ell);
                            if (static_cast<double>(deg) > policy.threshold(s, ell))
                                violations.push_back(
                                    {{"set", sub}, {"ell", ell}, {"degree", deg}});
                        }
                        std::size_t i = s;
                        bool done = false;
                        while (i > 0) {
                            --i;
                            if (pick[i] != i + e.size() - s) break;
                            if (i == 0) done = true;
                        }
                        if (done) break;
                        ++pick[i];
                        for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                    }
                }
            }
        }
        report["codegree_violations"] = violations;
        clean = clean && violations.empty();
    }

    report["clean"] = clean;
    if (!a.out.empty())
        nibble::save_json_file(a.out, report);
    else
        std::cout << report.dump(2) << "\n";
    return clean ? kExitOk : kExitFailure;
}

struct StatsArgs {
    std::string trace, globals, out;
};

struct CsvRow {
    std::size_t round, vertex, palette_size;
    double lambda, avg_degree, balance;
};

int cmd_stats(const StatsArgs& a) {
    std::ifstream in(a.trace);
    if (!in) throw nibble::InputError("cannot open trace: " + a.trace);
    std::string line;
    if (!std::getline(in, line)) throw nibble::InputError("empty trace file");
    if (line.rfind("round,vertex,palette_size,lambda,Lambda,D", 0) != 0)
        throw nibble::InputError("unexpected trace header: " + line);
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CsvRow row;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        if (!(ss >> row.round >> row.vertex >> row.palette_size >> row.lambda >>
              row.avg_degree >> row.balance))
            throw nibble::InputError("bad trace row: " + line);
        rows.push_back(row);
    }

    json globals = nibble::load_json_file(a.globals);
    const json& pjson = globals.at("params");
    const double eps = pjson.at("eps").get<double>();
    const double step = pjson.at("beta").get<double>() * pjson.at("phi2").get<double>() /
                        (24.0 * pjson.at("phi1").get<double>());

    json per_round = json::array();
    double zeta_first = 0.0;
    bool zeta_ok = true;
    std::size_t idx = 0;
    for (const json& ground : globals.at("rounds")) {
        std::size_t round = ground.at("round").get<std::size_t>();
        double zeta = ground.at("zeta").get<double>();
        if (idx == 0) zeta_first = zeta;
        double expected = zeta_first - static_cast<double>(idx) * step;
        if (std::abs(zeta - expected) > 1e-9 * std::max(std::abs(zeta_first), 1.0))
            zeta_ok = false;
        ++idx;

        std::vector<double> balances;
        std::vector<std::size_t> palettes;
        std::size_t within = 0, large = 0;
        const double t_prime = ground.at("t_prime").get<double>();
        const double p_prime = ground.at("p_prime").get<double>();
        const double floor_frac =
            (1.0 - std::pow(1.0 + eps, static_cast<double>(round)) / 2.0) * p_prime;
        for (const CsvRow& row : rows) {
            if (row.round != round) continue;
            if (row.palette_size == 0 && row.balance == 0.0) continue;  // colored
            balances.push_back(row.balance);
            palettes.push_back(row.palette_size);
            if (row.balance <= t_prime) ++within;
            if (static_cast<double>(row.palette_size) >= floor_frac) ++large;
        }
        json entry;
        entry["round"] = round;
        entry["zeta"] = zeta;
        entry["uncolored"] = balances.size();
        if (!balances.empty()) {
            double sum = 0.0, mx = balances.front();
            for (double b : balances) {
                sum += b;
                mx = std::max(mx, b);
            }
            entry["balance_mean"] = sum / static_cast<double>(balances.size());
            entry["balance_max"] = mx;
            std::sort(palettes.begin(), palettes.end());
            auto quant = [&](double q) {
                return palettes[static_cast<std::size_t>(q * static_cast<double>(palettes.size() - 1))];
            };
            entry["palette_quantiles"] = {{"min", palettes.front()},
                                          {"p25", quant(0.25)},
                                          {"median", quant(0.5)},
                                          {"p75", quant(0.75)},
                                          {"max", palettes.back()}};
            entry["frac_balance_within"] =
                static_cast<double>(within) / static_cast<double>(balances.size());
            entry["frac_palette_large"] =
                static_cast<double>(large) / static_cast<double>(balances.size());
        }
        per_round.push_back(std::move(entry));
    }

    json out;
    out["rounds"] = std::move(per_round);
    out["zeta_progression_ok"] = zeta_ok;
    if (!a.out.empty())
        nibble::save_json_file(a.out, out);
    else
        std::cout << out.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-random list coloring of rank-k hypergraphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* sgen = app.add_subcommand("generate", "generate a test instance");
    sgen->add_option("--n", gen.n, "vertex count")->required();
    sgen->add_option("--k", gen.k, "edge size / rank")->required();
    sgen->add_option("--m", gen.m, "edge count")->required();
    sgen->add_option("--seed", gen.seed, "random seed");
    sgen->add_flag("--triangle-free", gen.triangle_free, "delete edges until triangle-free");
    sgen->add_flag("--linear", gen.linear, "pairwise edge intersections at most 1");
    sgen->add_option("--lists-size", gen.lists_size, "also write shared color lists of this size");
    sgen->add_option("--out", gen.out, "instance output path")->required();
    sgen->add_option("--lists-out", gen.lists_out, "lists output path (default <out>.lists.json)");

    ReduceArgs red;
    auto* sred = app.add_subcommand("reduce", "run the codegree reduction");
    sred->add_option("--instance", red.instance, "instance path")->required();
    sred->add_option("--policy", red.policy, "threshold table JSON");
    sred->add_flag("--balanced", red.balanced, "adaptive thresholds fitted per round");
    sred->add_option("--out", red.out, "reduced instance path")->required();
    sred->add_option("--trace", red.trace, "contraction trace path");
    sred->add_flag("--allow-dup", red.allow_dup, "dedup duplicate input edges silently");

    ColorArgs col;
    auto* scol = app.add_subcommand("color", "run the semi-random coloring pipeline");
    scol->add_option("--instance", col.instance, "instance path")->required();
    scol->add_option("--lists", col.lists, "lists path (default: shared lists of --colors colors)");
    scol->add_option("--out", col.out, "coloring output path");
    scol->add_option("--seed", col.seed, "random seed");
    scol->add_flag("--relax", col.relax, "accept user constants for desk-scale runs");
    scol->add_option("--phi1", col.phi1, "palette scale constant (relax mode)");
    scol->add_option("--phi2", col.phi2, "activation scale constant (relax mode)");
    scol->add_option("--colors", col.colors, "palette size C");
    scol->add_option("--delta", col.delta, "degree scale (defaults from the instance in relax mode)");
    scol->add_option("--max-rounds", col.max_rounds, "round cap");
    scol->add_flag("--deterministic-tiebreak", col.deterministic_tiebreak,
                   "pick the smallest color id instead of a random one");
    scol->add_option("--trace", col.trace, "per-round per-vertex CSV path");
    scol->add_option("--trace-globals", col.trace_globals,
                     "per-round globals JSON path (default <trace>.globals.json)");
    scol->add_option("--threads", col.threads, "worker threads (env NIBBLE_THREADS)");
    scol->add_option("--q-method", col.q_method, "q estimation: exact, mc or auto");
    scol->add_option("--q-samples", col.q_samples, "Monte Carlo sample count");
    scol->add_option("--max-resamples", col.max_resamples, "completion resample budget");
    scol->add_option("--fallback", col.fallback, "completion fallback: greedy or fail");

    VerifyArgs ver;
    auto* sver = app.add_subcommand("verify", "check a coloring and instance properties");
    sver->add_option("--instance", ver.instance, "instance path")->required();
    sver->add_option("--coloring", ver.coloring, "coloring path")->required();
    sver->add_option("--lists", ver.lists, "lists path, enables the list check");
    sver->add_flag("--triangle-free", ver.triangle_free, "require a triangle-free instance");
    sver->add_option("--codegree-bounds", ver.codegree_bounds,
                     "policy JSON with codegree thresholds to enforce");
    sver->add_option("--out", ver.out, "report path (default stdout)");
    sver->add_flag("--allow-dup", ver.allow_dup, "dedup duplicate input edges silently");

    StatsArgs st;
    auto* sst = app.add_subcommand("stats", "aggregate a trace CSV");
    sst->add_option("--trace", st.trace, "trace CSV path")->required();
    sst->add_option("--globals", st.globals, "globals JSON path")->required();
    sst->add_option("--out", st.out, "stats output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (sgen->parsed()) return cmd_generate(gen);
        if (sred->parsed()) return cmd_reduce(red);
        if (scol->parsed()) return cmd_color(col);
        if (sver->parsed()) return cmd_verify(ver);
        if (sst->parsed()) return cmd_stats(st);
    } catch (const nibble::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInput;
}
