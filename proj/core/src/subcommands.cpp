#include "sarima/subcommands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include <json.hpp>

#include "sarima/correlogram.hpp"
#include "sarima/csv_io.hpp"
#include "sarima/errors.hpp"
#include "sarima/fit.hpp"
#include "sarima/forecast.hpp"
#include "sarima/hypothesis_tests.hpp"
#include "sarima/model_io.hpp"
#include "sarima/report.hpp"
#include "sarima/transform.hpp"

namespace sarima {

using nlohmann::json;

namespace {

TimeSeries load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ArgumentError("an input CSV is required (--input)");
    return read_series_csv(cfg.input).first;
}

TimeSeries training_part(const RunConfig& cfg, const TimeSeries& s) {
    if (cfg.split_count) return split_by_count(s, *cfg.split_count).first;
    if (cfg.split_date) return split_by_date(s, *cfg.split_date).first;
    return s;
}

FittedModel load_model_for(const RunConfig& cfg) {
    if (cfg.model_path.empty()) {
        throw ArgumentError("a fitted-model JSON is required (--model)");
    }
    return load_model(cfg.model_path);
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
    write_text_file(out_path(cfg, name), content);
}

json test_to_json(const TestReport& rep) {
    json j{{"name", rep.name},
           {"statistic", rep.statistic},
           {"p_value", rep.p_value},
           {"p_text", rep.p_text()}};
    for (const auto& [k, v] : rep.details) j[k] = v;
    return j;
}

json correlogram_to_json(const Correlogram& c) {
    return json{{"kind", c.kind == Correlogram::Kind::acf ? "acf" : "pacf"},
                {"n", c.n},
                {"level", c.level},
                {"band", c.band},
                {"clipped", c.clipped},
                {"values", c.values}};
}

int correlogram_max_lag(const RunConfig& cfg, std::size_t n) {
    int want = (cfg.lb_h > 0) ? cfg.lb_h : 2 * cfg.spec.s;
    return std::max(1, std::min<int>(want, static_cast<int>(n) - 1));
}

std::string transform_line(const RunConfig& cfg, std::optional<double> lambda) {
    if (!lambda) return "transform: none\n";
    char buf[96];
    const char* how = (cfg.transform_policy == "auto" && !cfg.lambda)
                          ? "profile likelihood"
                          : cfg.transform_policy.c_str();
    std::snprintf(buf, sizeof(buf), "transform: Box-Cox lambda = %.2f (%s)\n", *lambda,
                  how);
    return buf;
}

}  // namespace

int run_identify(const RunConfig& cfg) {
    TimeSeries series = load_input(cfg);
    TimeSeries train = training_part(cfg, series);
    std::optional<double> lambda = cfg.resolve_lambda(train);

    TimeSeries z = lambda ? box_cox(train, *lambda) : train;
    TestReport adf_level = adf_test(z, cfg.adf_variant, cfg.adf_lags);
    auto [w, record] = apply_transform(train, lambda, cfg.spec.d, cfg.spec.D, cfg.spec.s);
    TestReport adf_diff = adf_test(w, cfg.adf_variant, cfg.adf_lags);

    int max_lag = correlogram_max_lag(cfg, w.size());
    Correlogram a = acf(w, max_lag, cfg.level);
    Correlogram p = pacf(w, max_lag, cfg.level);

    char buf[256];
    std::string text = "series: " + cfg.input + "\n";
    std::snprintf(buf, sizeof(buf), "observations: %zu (%s to %s)\n", train.size(),
                  train.start().str().c_str(), train.end().str().c_str());
    text += buf;
    text += transform_line(cfg, lambda);
    std::snprintf(buf, sizeof(buf), "differencing: d=%d, D=%d, s=%d -> %zu observations\n\n",
                  cfg.spec.d, cfg.spec.D, cfg.spec.s, w.size());
    text += buf;
    text += render_test_table({{"unit root, transformed", adf_level},
                               {"unit root, differenced", adf_diff}});
    int a_spikes = 0, p_spikes = 0;
    for (int k = 1; k <= max_lag; ++k) {
        if (std::abs(a.at(k)) > a.band) ++a_spikes;
        if (std::abs(p.at(k)) > p.band) ++p_spikes;
    }
    std::snprintf(buf, sizeof(buf),
                  "\ncorrelogram of the differenced series (lags 1..%d, band %.4f):\n"
                  "  ACF spikes outside band: %d\n  PACF spikes outside band: %d\n",
                  max_lag, a.band, a_spikes, p_spikes);
    text += buf;

    emit(cfg, "identify.txt", text);
    emit(cfg, "acf.csv", correlogram_csv(a));
    emit(cfg, "pacf.csv", correlogram_csv(p));
    emit(cfg, "acf.svg", correlogram_svg(a, "ACF of differenced series"));
    emit(cfg, "pacf.svg", correlogram_svg(p, "PACF of differenced series"));

    json j{{"command", "identify"},
           {"input", cfg.input},
           {"n_train", train.size()},
           {"lambda", lambda ? json(*lambda) : json()},
           {"n_level", z.size()},
           {"n_differenced", w.size()},
           {"adf_level", test_to_json(adf_level)},
           {"adf_differenced", test_to_json(adf_diff)},
           {"acf", correlogram_to_json(a)},
           {"pacf", correlogram_to_json(p)}};
    emit(cfg, "identify.json", j.dump(2) + "\n");

    std::cout << text;
    return 0;
}

int run_fit(const RunConfig& cfg) {
    TimeSeries series = load_input(cfg);
    TimeSeries train = training_part(cfg, series);
    std::optional<double> lambda = cfg.resolve_lambda(train);

    FittedModel model = fit(train, cfg.spec, lambda);
    save_model(model, out_path(cfg, "model.json"));

    char buf[160];
    std::string text = "model: " + model.spec.str() + "\n";
    std::snprintf(buf, sizeof(buf), "training observations: %zu (%s to %s)\n",
                  train.size(), train.start().str().c_str(), train.end().str().c_str());
    text += buf;
    text += transform_line(cfg, lambda);
    text += "\n" + render_coefficient_table(model);
    std::snprintf(buf, sizeof(buf), "\nsigma2 = %.6f   log-likelihood = %.4f   AIC = %.2f\n",
                  model.coef.sigma2, model.loglik, model.aic);
    text += buf;
    emit(cfg, "fit.txt", text);

    // coefficient table twin
    std::string csv = "term,estimate,std_error,z,p\n";
    auto names = CoefficientSet::names(model.spec);
    auto est = model.coef.flat();
    for (std::size_t i = 0; i < est.size(); ++i) {
        if (model.std_errors) {
            std::snprintf(buf, sizeof(buf), "%s,%.6f,%.6f,%.6f,%.6g\n", names[i].c_str(),
                          est[i], (*model.std_errors)[i], model.z_values[i],
                          model.p_values[i]);
        } else {
            std::snprintf(buf, sizeof(buf), "%s,%.6f,,,\n", names[i].c_str(), est[i]);
        }
        csv += buf;
    }
    emit(cfg, "coefficients.csv", csv);

    json j{{"command", "fit"},
           {"input", cfg.input},
           {"spec", model.spec.str()},
           {"lambda", lambda ? json(*lambda) : json()},
           {"loglik", model.loglik},
           {"aic", model.aic},
           {"sigma2", model.coef.sigma2},
           {"model_path", out_path(cfg, "model.json")}};
    emit(cfg, "fit.json", j.dump(2) + "\n");

    std::cout << text;
    return 0;
}

int run_diagnose(const RunConfig& cfg) {
    FittedModel model = load_model_for(cfg);
    std::vector<double> resid = model.innovations();

    TimeSeries z = model.transform.lambda ? box_cox(model.train, *model.transform.lambda)
                                          : model.train;
    TimeSeries w = z;
    for (const auto& stage : model.transform.diffs) {
        w = difference(w, stage.lag, 1).first;
    }

    TestReport adf_level = adf_test(z, cfg.adf_variant, cfg.adf_lags);
    TestReport adf_diff = adf_test(w, cfg.adf_variant, cfg.adf_lags);
    int h = (cfg.lb_h > 0) ? cfg.lb_h : 2 * model.spec.s;
    TestReport lb = ljung_box(resid, h, model.spec.n_coef());
    TestReport sw = shapiro_wilk(resid);

    int max_lag = std::max(1, std::min<int>(h, static_cast<int>(resid.size()) - 1));
    Correlogram a = acf(resid, max_lag, cfg.level);
    Correlogram p = pacf(resid, max_lag, cfg.level);
    int a_spikes = 0, p_spikes = 0;
    for (int k = 1; k <= max_lag; ++k) {
        if (std::abs(a.at(k)) > a.band) ++a_spikes;
        if (std::abs(p.at(k)) > p.band) ++p_spikes;
    }

    std::string text = "model: " + model.spec.str() + "\n\n";
    text += render_test_table({{"unit root, transformed", adf_level},
                               {"unit root, differenced", adf_diff},
                               {"residual autocorrelation", lb},
                               {"residual normality", sw}});
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "\nresidual correlogram (lags 1..%d, band %.4f): %d ACF / %d PACF "
                  "spikes outside band\n",
                  max_lag, a.band, a_spikes, p_spikes);
    text += buf;

    emit(cfg, "diagnose.txt", text);
    emit(cfg, "residual_acf.csv", correlogram_csv(a));
    emit(cfg, "residual_pacf.csv", correlogram_csv(p));
    emit(cfg, "residual_acf.svg", correlogram_svg(a, "Residual ACF"));
    emit(cfg, "residual_pacf.svg", correlogram_svg(p, "Residual PACF"));

    json j{{"command", "diagnose"},
           {"model", cfg.model_path},
           {"spec", model.spec.str()},
           {"adf_level", test_to_json(adf_level)},
           {"adf_differenced", test_to_json(adf_diff)},
           {"ljung_box", test_to_json(lb)},
           {"shapiro_wilk", test_to_json(sw)},
           {"residual_acf", correlogram_to_json(a)},
           {"residual_pacf", correlogram_to_json(p)}};
    emit(cfg, "diagnose.json", j.dump(2) + "\n");

    std::cout << text;
    return 0;
}

int run_forecast(const RunConfig& cfg) {
    FittedModel model = load_model_for(cfg);
    ForecastSet fc = forecast(model, cfg.horizon, cfg.level);

    std::string text = "model: " + model.spec.str() + "\n";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "forecast origin: %s, horizon %d, level %.0f%%\n\n",
                  fc.origin.str().c_str(), fc.horizon, 100.0 * fc.level);
    text += buf;
    text += render_forecast_table(fc);

    emit(cfg, "forecast.txt", text);
    emit(cfg, "forecast.csv", forecast_csv(fc));

    json rows = json::array();
    for (int jx = 0; jx < fc.horizon; ++jx) {
        rows.push_back({{"date", fc.origin.plus(jx).str()},
                        {"forecast", fc.point[jx]},
                        {"lower", fc.lower[jx]},
                        {"upper", fc.upper[jx]}});
    }
    json j{{"command", "forecast"},
           {"model", cfg.model_path},
           {"spec", model.spec.str()},
           {"level", fc.level},
           {"rows", rows}};
    emit(cfg, "forecast.json", j.dump(2) + "\n");

    std::cout << text;
    return 0;
}

int run_evaluate(const RunConfig& cfg) {
    FittedModel model = load_model_for(cfg);
    TimeSeries series = load_input(cfg);

    int offset = model.train.end().plus(1).ordinal() - series.start().ordinal();
    if (offset < 0 || static_cast<std::size_t>(offset) >= series.size()) {
        throw DataError("evaluate: input has no observations after training end " +
                        model.train.end().str());
    }
    TimeSeries test = series.tail_from(static_cast<std::size_t>(offset));

    HoldoutLedger ledger = one_step_holdout(model, test);
    std::vector<double> errors;
    errors.reserve(ledger.rows.size());
    for (const auto& r : ledger.rows) errors.push_back(r.error);
    TestReport sw = shapiro_wilk(errors);

    std::string text = "model: " + model.spec.str() + "\n";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "holdout: %zu observations from %s\n\n", test.size(),
                  test.start().str().c_str());
    text += buf;
    text += render_ledger_table(ledger);
    text += "\n" + render_test_table({{"forecast error normality", sw}});

    emit(cfg, "evaluate.txt", text);
    emit(cfg, "ledger.csv", ledger_csv(ledger));

    json rows = json::array();
    for (const auto& r : ledger.rows) {
        rows.push_back({{"date", r.month.str()},
                        {"actual", r.actual},
                        {"forecast", r.forecast},
                        {"error", r.error}});
    }
    json j{{"command", "evaluate"},
           {"model", cfg.model_path},
           {"spec", model.spec.str()},
           {"mape_percent", ledger.mape},
           {"shapiro_wilk", test_to_json(sw)},
           {"rows", rows}};
    emit(cfg, "evaluate.json", j.dump(2) + "\n");

    std::cout << text;
    return 0;
}

int run_select(const RunConfig& cfg) {
    TimeSeries series = load_input(cfg);
    TimeSeries train = training_part(cfg, series);
    std::optional<double> lambda = cfg.resolve_lambda(train);

    GateConfig gates;
    gates.alpha_sig = cfg.alpha;
    gates.lb_h = cfg.lb_h;
    gates.lb_alpha = cfg.lb_alpha;

    SelectionOutcome outcome = run_selection(train, cfg.grid, lambda, gates);
    const CandidateResult& best = outcome.candidates[outcome.selected];

    save_model(*best.model, out_path(cfg, "model.json"));

    std::string text;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "candidates tried: %zu\n",
                  outcome.candidates.size());
    text += buf;
    text += transform_line(cfg, lambda);
    text += "selected: " + best.spec.str() + "\n\n";
    text += render_ranking_table(outcome);
    text += "\n" + render_coefficient_table(*best.model);

    emit(cfg, "select.txt", text);
    emit(cfg, "ranking.csv", ranking_csv(outcome));

    json cands = json::array();
    for (const auto& c : outcome.candidates) {
        json e{{"spec", c.spec.str()},
               {"verdict", verdict_name(c.verdict)},
               {"note", c.reason}};
        if (c.model) e["aic"] = c.aic;
        cands.push_back(e);
    }
    json j{{"command", "select"},
           {"input", cfg.input},
           {"lambda", lambda ? json(*lambda) : json()},
           {"selected", best.spec.str()},
           {"model_path", out_path(cfg, "model.json")},
           {"candidates", cands}};
    emit(cfg, "select.json", j.dump(2) + "\n");

    std::cout << text;
    return 0;
}

}  // namespace sarima
