#include "sarima/run_config.hpp"

#include <set>

#include <json.hpp>

#include "sarima/csv_io.hpp"
#include "sarima/errors.hpp"
#include "sarima/transform.hpp"

namespace sarima {

using nlohmann::json;

std::optional<double> RunConfig::resolve_lambda(const TimeSeries& train) const {
    if (transform_policy == "none") return std::nullopt;
    if (transform_policy == "log") return 0.0;
    if (transform_policy == "fixed") {
        if (!lambda) throw ArgumentError("transform policy 'fixed' needs a lambda value");
        return *lambda;
    }
    if (transform_policy == "auto") {
        if (lambda) return *lambda;  // explicit flag wins over estimation
        return estimate_lambda(train);
    }
    throw ArgumentError("unknown transform policy '" + transform_policy + "'");
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ArgumentError("config: unknown key '" + where + it.key() + "'");
        }
    }
}

std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ArgumentError("config: " + where + " must be a list");
    std::vector<int> v;
    for (const json& e : j) {
        if (!e.is_number_integer()) {
            throw ArgumentError("config: " + where + " must hold integers");
        }
        v.push_back(e.get<int>());
    }
    return v;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ArgumentError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ArgumentError(origin + ": config must be a JSON object");

    RunConfig cfg;
    reject_unknown(j, {"input", "model", "out", "seed", "split", "transform", "spec",
                       "grid", "forecast", "tests"},
                   "");

    try {
        if (j.contains("input")) cfg.input = j.at("input").get<std::string>();
        if (j.contains("model")) cfg.model_path = j.at("model").get<std::string>();
        if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();

        if (j.contains("split")) {
            const json& sp = j.at("split");
            if (sp.is_number_integer()) {
                cfg.split_count = sp.get<int>();
            } else if (sp.is_string()) {
                cfg.split_date = YearMonth::parse(sp.get<std::string>());
            } else {
                throw ArgumentError("config: split must be a count or 'YYYY-MM'");
            }
        }

        if (j.contains("transform")) {
            const json& tr = j.at("transform");
            reject_unknown(tr, {"policy", "lambda"}, "transform.");
            if (tr.contains("policy")) cfg.transform_policy = tr.at("policy").get<std::string>();
            if (tr.contains("lambda")) cfg.lambda = tr.at("lambda").get<double>();
        }

        if (j.contains("spec")) {
            const json& sp = j.at("spec");
            reject_unknown(sp, {"p", "d", "q", "P", "D", "Q", "s"}, "spec.");
            ModelSpec m;
            m.p = sp.value("p", 0);
            m.d = sp.value("d", 0);
            m.q = sp.value("q", 0);
            m.P = sp.value("P", 0);
            m.D = sp.value("D", 0);
            m.Q = sp.value("Q", 0);
            m.s = sp.value("s", 12);
            m.validate();
            cfg.spec = m;
            cfg.spec_given = true;
        }

        if (j.contains("grid")) {
            const json& g = j.at("grid");
            reject_unknown(g, {"p", "q", "P", "Q", "d", "D", "s"}, "grid.");
            OrderGrid grid;
            if (g.contains("p")) grid.p = int_list(g.at("p"), "grid.p");
            if (g.contains("q")) grid.q = int_list(g.at("q"), "grid.q");
            if (g.contains("P")) grid.P = int_list(g.at("P"), "grid.P");
            if (g.contains("Q")) grid.Q = int_list(g.at("Q"), "grid.Q");
            grid.d = g.value("d", 0);
            grid.D = g.value("D", 0);
            grid.s = g.value("s", 12);
            cfg.grid = grid;
            cfg.grid_given = true;
        }

        if (j.contains("forecast")) {
            const json& f = j.at("forecast");
            reject_unknown(f, {"h", "level"}, "forecast.");
            if (f.contains("h")) cfg.horizon = f.at("h").get<int>();
            if (f.contains("level")) cfg.level = f.at("level").get<double>();
        }

        if (j.contains("tests")) {
            const json& t = j.at("tests");
            reject_unknown(t, {"adf_variant", "adf_lags", "lb_h", "alpha", "lb_alpha"},
                           "tests.");
            if (t.contains("adf_variant")) {
                std::string v = t.at("adf_variant").get<std::string>();
                if (v == "none") cfg.adf_variant = AdfRegression::none;
                else if (v == "drift") cfg.adf_variant = AdfRegression::drift;
                else if (v == "trend") cfg.adf_variant = AdfRegression::trend;
                else throw ArgumentError("config: unknown adf_variant '" + v + "'");
            }
            if (t.contains("adf_lags")) cfg.adf_lags = t.at("adf_lags").get<int>();
            if (t.contains("lb_h")) cfg.lb_h = t.at("lb_h").get<int>();
            if (t.contains("alpha")) cfg.alpha = t.at("alpha").get<double>();
            if (t.contains("lb_alpha")) cfg.lb_alpha = t.at("lb_alpha").get<double>();
        }
    } catch (const json::exception& e) {
        throw ArgumentError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    return parse_config(read_text_file(path), path);
}

}  // namespace sarima
