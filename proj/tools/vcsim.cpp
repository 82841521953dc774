#include "vcsim/config.hpp"
#include "vcsim/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace vcsim;

void print_summary(const ExperimentConfig& cfg, const std::vector<GridResult>& results) {
    std::printf("%-10s %-8s %-7s %-6s %-5s %-14s %-12s %-10s %-12s\n", "embedder", "scheme",
                "oversub", "load", "seed", "mean_slots_sum", "mean_bw_sum", "acceptance",
                "revenue");
    for (const auto& r : results) {
        const auto total = r.report.accepted + r.report.rejected;
        const double acc = total > 0 ? double(r.report.accepted) / double(total) : 0.0;
        std::printf("%-10s %-8s %-7s %-6g %-5llu %-14.2f %-12.2f %-10.4f %-12.2f\n",
                    to_string(r.arm.embedder).c_str(), to_string(r.arm.scheme).c_str(),
                    to_string(r.oversub).c_str(), r.load,
                    static_cast<unsigned long long>(r.seed), r.report.mean_slots_sum,
                    r.report.mean_bw_sum, acc, r.report.revenue);
    }
    // Pairwise relative differences of mean resource sums, averaged over
    // cells, against the first arm as baseline.
    if (cfg.arms.size() < 2) return;
    std::map<std::pair<std::string, std::string>, std::pair<double, int>> agg;
    std::map<std::tuple<std::string, double, std::uint64_t>,
             std::map<std::pair<std::string, std::string>, double>>
        by_cell;
    for (const auto& r : results)
        by_cell[{to_string(r.oversub), r.load, r.seed}]
               [{to_string(r.arm.embedder), to_string(r.arm.scheme)}] = r.report.mean_slots_sum;
    const auto base_key = std::make_pair(to_string(cfg.arms.front().embedder),
                                         to_string(cfg.arms.front().scheme));
    for (const auto& [cell, arms] : by_cell) {
        const auto base_it = arms.find(base_key);
        if (base_it == arms.end() || base_it->second == 0.0) continue;
        for (const auto& [key, v] : arms) {
            if (key == base_key) continue;
            auto& [sum, cnt] = agg[key];
            sum += (v - base_it->second) / base_it->second;
            cnt += 1;
        }
    }
    for (const auto& [key, sc] : agg) {
        std::printf("%s+%s vs %s+%s: %+.1f%% mean slots sum\n", key.first.c_str(),
                    key.second.c_str(), base_key.first.c_str(), base_key.second.c_str(),
                    100.0 * sc.first / sc.second);
    }
}

int cmd_simulate(const std::string& config_arg, int requests, int warmup,
                 const std::string& out_dir, const std::string& replay,
                 const std::vector<std::string>& oversub, const std::vector<double>& loads,
                 const std::vector<std::uint64_t>& seeds, unsigned threads) {
    ExperimentConfig cfg = resolve_config(config_arg);
    if (requests > 0) cfg.base.workload.total_requests = requests;
    if (warmup >= 0) cfg.base.workload.warmup_requests = warmup;
    if (!oversub.empty()) {
        cfg.oversub_factors.clear();
        for (const auto& s : oversub) cfg.oversub_factors.push_back(parse_rational(s));
    }
    if (!loads.empty()) cfg.loads = loads;
    if (!seeds.empty()) cfg.seeds = seeds;
    if (!cfg.base.workload.valid())
        throw std::runtime_error("invalid workload parameters (check --requests/--warmup)");

    std::vector<GridResult> results;
    if (!replay.empty()) {
        std::ifstream in(replay);
        if (!in) throw std::runtime_error("cannot open replay file '" + replay + "'");
        const auto stream = load_stream(in);
        std::filesystem::create_directories(out_dir);
        for (const Arm& arm : cfg.arms) {
            Scenario s = cfg.base;
            s.embedder = arm.embedder;
            s.scheme = arm.scheme;
            results.push_back({arm, s.tree_spec.oversub_tor_agg, s.workload.target_load,
                               s.workload.seed, run(s, stream)});
        }
        for (const auto& r : results)
            write_timeseries_csv(r.report, std::filesystem::path(out_dir) / timeseries_filename(r));
        write_summary_csv(cfg, results, std::filesystem::path(out_dir) / "summary.csv");
    } else {
        results = run_and_write(cfg, out_dir, threads);
    }
    print_summary(cfg, results);
    std::printf("wrote %zu time-series CSVs + summary.csv to %s\n", results.size(),
                out_dir.c_str());
    return 0;
}

int cmd_price(int n, const std::string& c, const std::string& b, const std::string& scheme,
              const std::string& pc, const std::string& pb, const std::string& lc,
              const std::string& lb, const std::vector<std::string>& templates) {
    VCRequest req;
    req.n = n;
    req.c = parse_rational(c);
    req.b = parse_rational(b);
    if (!req.valid()) throw std::runtime_error("invalid request: need n>=1 and c,b in (0,1]");
    UnitPrices prices{parse_rational(pc), parse_rational(pb)};

    PriceQuote quote;
    if (scheme == "ideal") {
        quote = price_ideal(req, prices);
    } else if (scheme == "drp") {
        std::vector<Rational> tvals;
        for (const auto& t : templates) tvals.push_back(parse_rational(t));
        const TemplateSet tset =
            tvals.empty() ? TemplateSet::paper_defaults() : TemplateSet(tvals);
        const auto q = price_drp(req, prices, tset);
        if (!q) throw std::runtime_error("request exceeds the largest DRP template");
        quote = *q;
    } else if (scheme == "dsp") {
        LambdaParams lambdas{parse_rational(lc), parse_rational(lb)};
        quote = price_dsp(req, prices, lambdas);
    } else {
        throw std::runtime_error("unknown scheme '" + scheme + "'");
    }
    std::cout << "base " << to_string(quote.base) << "  skew_fee " << to_string(quote.skew_fee)
              << "  total " << to_string(quote.total()) << "\n";
    return 0;
}

int cmd_calibrate(const std::string& n_vms, const std::string& ec, const std::string& eb,
                  const std::string& delta, const std::string& pc, const std::string& pb,
                  const std::string& direction) {
    CalibrationInput input{parse_rational(n_vms), parse_rational(ec), parse_rational(eb),
                           parse_rational(delta)};
    UnitPrices prices{parse_rational(pc), parse_rational(pb)};
    const Rational lambda = direction == "c" ? calibrate_lambda_c(input, prices)
                                             : calibrate_lambda_b(input, prices);
    std::cout << "lambda_" << direction << " = " << to_string(lambda) << " ("
              << to_double(lambda) << ")\n";
    return 0;
}

int cmd_gen(const std::string& config_arg, const std::string& out_path) {
    const ExperimentConfig cfg = resolve_config(config_arg);
    const auto stream = generate(cfg.base.workload, cfg.base.tree_spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    dump_stream(stream, out);
    std::printf("wrote %zu requests to %s\n", stream.size(), out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual-cluster embedding and pricing simulator"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run an experiment grid");
    std::string config_arg = "desk_scale";
    int requests = -1, warmup = -1;
    std::string out_dir = "out", replay;
    std::vector<std::string> oversub;
    std::vector<double> loads;
    std::vector<std::uint64_t> seeds;
    unsigned threads = 0;
    sim->add_option("--config", config_arg, "preset name (paper_defaults, desk_scale) or JSON file");
    sim->add_option("--requests", requests, "override total request count");
    sim->add_option("--warmup", warmup, "override warmup request count");
    sim->add_option("--out", out_dir, "output directory");
    sim->add_option("--replay", replay, "replay a workload stream file instead of generating");
    sim->add_option("--oversub", oversub, "oversubscription factors to sweep")->delimiter(',');
    sim->add_option("--loads", loads, "target loads to sweep")->delimiter(',');
    sim->add_option("--seeds", seeds, "RNG seeds")->delimiter(',');
    sim->add_option("--threads", threads, "parallel grid cells (default: VCSIM_THREADS or all cores)");

    // price
    auto* price = app.add_subcommand("price", "quote one request under one scheme");
    int n = 1;
    std::string c = "1/8", b = "1/8", scheme = "dsp", pc = "1", pb = "1", lc = "0", lb = "0";
    std::vector<std::string> templates;
    price->add_option("--n", n, "VM count")->required();
    price->add_option("--c", c, "per-VM compute fraction")->required();
    price->add_option("--b", b, "per-VM bandwidth fraction")->required();
    price->add_option("--scheme", scheme, "ideal | drp | dsp")->required();
    price->add_option("--pc", pc, "unit compute price");
    price->add_option("--pb", pb, "unit bandwidth price");
    price->add_option("--lambda-c", lc, "DSP weighing factor lambda_c");
    price->add_option("--lambda-b", lb, "DSP weighing factor lambda_b");
    price->add_option("--templates", templates, "DRP template values")->delimiter(',');

    // calibrate
    auto* cal = app.add_subcommand("calibrate", "solve the lambda calibration equation");
    std::string n_vms, ec, eb, delta, cpc = "1", cpb = "1", direction = "b";
    cal->add_option("--N", n_vms, "expected VM count in skewed requests")->required();
    cal->add_option("--ec", ec, "E[c]")->required();
    cal->add_option("--eb", eb, "E[b]")->required();
    cal->add_option("--delta", delta, "DRP-vs-ideal profit difference")->required();
    cal->add_option("--pc", cpc, "unit compute price");
    cal->add_option("--pb", cpb, "unit bandwidth price");
    cal->add_option("--direction", direction, "b (c>b requests) or c (b>c requests)");

    // gen
    auto* gen = app.add_subcommand("gen", "dump a workload stream for replay");
    std::string gen_config = "desk_scale", gen_out = "stream.txt";
    gen->add_option("--config", gen_config, "preset name or JSON file");
    gen->add_option("--out", gen_out, "output stream file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return cmd_simulate(config_arg, requests, warmup, out_dir, replay, oversub, loads,
                                seeds, threads);
        if (price->parsed())
            return cmd_price(n, c, b, scheme, pc, pb, lc, lb, templates);
        if (cal->parsed()) return cmd_calibrate(n_vms, ec, eb, delta, cpc, cpb, direction);
        if (gen->parsed()) return cmd_gen(gen_config, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
