#include "vcsim/config.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace vcsim {
namespace {

using nlohmann::json;

Rational rational_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::runtime_error("expected integer or \"num/den\" string, got " + j.dump());
}

std::vector<Rational> rational_list(const json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from(v));
    return out;
}

EmbedAlgo embedder_from(const std::string& s) {
    if (s == "oktopus") return EmbedAlgo::oktopus;
    if (s == "tetris") return EmbedAlgo::tetris;
    throw std::runtime_error("unknown embedder '" + s + "'");
}

PricingScheme scheme_from(const std::string& s) {
    if (s == "ideal") return PricingScheme::ideal;
    if (s == "drp") return PricingScheme::drp;
    if (s == "dsp") return PricingScheme::dsp;
    throw std::runtime_error("unknown pricing scheme '" + s + "'");
}

}  // namespace

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.base.prices = {Rational(8), Rational(8)};
    cfg.base.lambdas = {Rational(1, 6), Rational(1, 6)};
    if (name == "paper_defaults") {
        cfg.base.tree_spec = {10, 40, 40, Rational(1), Rational(1), Rational(4), Rational(1)};
        cfg.base.workload.mean_n = 49.0;
        cfg.base.workload.total_requests = 80000;
        cfg.base.workload.warmup_requests = 10000;
    } else if (name == "desk_scale") {
        cfg.base.tree_spec = {2, 4, 8, Rational(1), Rational(1), Rational(4), Rational(1)};
        cfg.base.workload.mean_n = 12.0;
        cfg.base.workload.total_requests = 4000;
        cfg.base.workload.warmup_requests = 500;
    } else {
        throw std::runtime_error("unknown preset '" + name + "'");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed config '" + path + "': " + e.what());
    }

    ExperimentConfig cfg;
    cfg.name = j.value("name", std::filesystem::path(path).stem().string());

    if (j.contains("tree")) {
        const auto& t = j["tree"];
        FatTreeSpec& spec = cfg.base.tree_spec;
        spec.pods = t.value("pods", spec.pods);
        spec.racks_per_pod = t.value("racks_per_pod", spec.racks_per_pod);
        spec.hosts_per_rack = t.value("hosts_per_rack", spec.hosts_per_rack);
        if (t.contains("host_compute_capacity"))
            spec.host_compute_capacity = rational_from(t["host_compute_capacity"]);
        if (t.contains("host_link_capacity"))
            spec.host_link_capacity = rational_from(t["host_link_capacity"]);
        if (t.contains("oversub_tor_agg")) spec.oversub_tor_agg = rational_from(t["oversub_tor_agg"]);
        if (t.contains("oversub_agg_core"))
            spec.oversub_agg_core = rational_from(t["oversub_agg_core"]);
        if (!spec.valid()) throw std::runtime_error("invalid tree spec in '" + path + "'");
    }

    if (j.contains("workload")) {
        const auto& w = j["workload"];
        WorkloadConfig& wl = cfg.base.workload;
        wl.mean_n = w.value("mean_n", wl.mean_n);
        if (w.contains("demand_values")) wl.demand_values = rational_list(w["demand_values"]);
        wl.target_load = w.value("target_load", wl.target_load);
        wl.mean_duration = w.value("mean_duration", wl.mean_duration);
        wl.total_requests = w.value("total_requests", wl.total_requests);
        wl.warmup_requests = w.value("warmup_requests", wl.warmup_requests);
        wl.seed = w.value("seed", wl.seed);
        if (!wl.valid()) throw std::runtime_error("invalid workload config in '" + path + "'");
        for (const auto& v : wl.demand_values)
            if (v <= Rational(0) || v > Rational(1))
                throw std::runtime_error("demand value out of (0,1] in '" + path + "'");
    }

    if (j.contains("prices")) {
        cfg.base.prices.p_c = rational_from(j["prices"].value("p_c", json("1")));
        cfg.base.prices.p_b = rational_from(j["prices"].value("p_b", json("1")));
    }
    if (j.contains("lambdas")) {
        cfg.base.lambdas.lambda_c = rational_from(j["lambdas"].value("lambda_c", json("0")));
        cfg.base.lambdas.lambda_b = rational_from(j["lambdas"].value("lambda_b", json("0")));
    }
    if (j.contains("templates")) cfg.base.templates = TemplateSet(rational_list(j["templates"]));

    if (j.contains("arms")) {
        cfg.arms.clear();
        for (const auto& a : j["arms"])
            cfg.arms.push_back({embedder_from(a.at("embedder").get<std::string>()),
                                scheme_from(a.at("scheme").get<std::string>())});
    }
    if (j.contains("oversub_factors")) cfg.oversub_factors = rational_list(j["oversub_factors"]);
    if (j.contains("loads")) cfg.loads = j["loads"].get<std::vector<double>>();
    if (j.contains("seeds")) cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (!cfg.valid()) throw std::runtime_error("invalid experiment config in '" + path + "'");
    return cfg;
}

ExperimentConfig resolve_config(const std::string& name_or_path) {
    if (name_or_path == "paper_defaults" || name_or_path == "desk_scale")
        return preset(name_or_path);
    return load_config(name_or_path);
}

}  // namespace vcsim
