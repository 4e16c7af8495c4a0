// Batch front end: identify | fit | diagnose | forecast | evaluate | select.
// Options may come from a JSON config (--config); explicit flags win.
// Exit codes: 0 ok, 2 usage, 3 data, 4 numerics, 5 no admissible model.

#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sarima/errors.hpp"
#include "sarima/run_config.hpp"
#include "sarima/subcommands.hpp"

namespace {

struct FlagValues {
    std::string input, config, out, model, split, spec;
    std::optional<double> lambda;
    std::optional<double> level;
    std::optional<int> horizon;
    std::optional<std::uint64_t> seed;
};

sarima::ModelSpec parse_spec_flag(const std::string& text) {
    sarima::ModelSpec s;
    int n = std::sscanf(text.c_str(), "%d,%d,%d,%d,%d,%d,%d", &s.p, &s.d, &s.q, &s.P,
                        &s.D, &s.Q, &s.s);
    if (n != 7) {
        throw sarima::ArgumentError("--spec expects p,d,q,P,D,Q,s (7 integers)");
    }
    s.validate();
    return s;
}

sarima::RunConfig build_config(const FlagValues& f) {
    sarima::RunConfig cfg;
    if (!f.config.empty()) cfg = sarima::load_config(f.config);

    if (!f.input.empty()) cfg.input = f.input;
    if (!f.out.empty()) cfg.out_dir = f.out;
    if (!f.model.empty()) cfg.model_path = f.model;
    if (f.seed) cfg.seed = *f.seed;
    if (f.lambda) {
        cfg.lambda = *f.lambda;
        cfg.transform_policy = "fixed";
    }
    if (f.level) cfg.level = *f.level;
    if (f.horizon) cfg.horizon = *f.horizon;
    if (!f.split.empty()) {
        cfg.split_count.reset();
        cfg.split_date.reset();
        char* endp = nullptr;
        long count = std::strtol(f.split.c_str(), &endp, 10);
        if (endp && *endp == '\0') {
            cfg.split_count = static_cast<int>(count);
        } else {
            cfg.split_date = sarima::YearMonth::parse(f.split);
        }
    }
    if (!f.spec.empty()) {
        cfg.spec = parse_spec_flag(f.spec);
        cfg.spec_given = true;
    }
    return cfg;
}

void add_common(CLI::App* cmd, FlagValues& f) {
    cmd->add_option("-i,--input", f.input, "series CSV (date,value)");
    cmd->add_option("-c,--config", f.config, "JSON config file");
    cmd->add_option("-o,--out", f.out, "output directory");
    cmd->add_option("--model", f.model, "fitted-model JSON");
    cmd->add_option("--split", f.split, "holdout count or last training month YYYY-MM");
    cmd->add_option("--spec", f.spec, "orders p,d,q,P,D,Q,s");
    cmd->add_option("--lambda", f.lambda, "fixed Box-Cox lambda");
    cmd->add_option("--level", f.level, "interval / band level in (0,1)");
    cmd->add_option("--horizon", f.horizon, "forecast horizon (months)");
    cmd->add_option("--seed", f.seed, "random seed recorded with the run");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seasonal ARIMA batch modelling"};
    app.require_subcommand(1);

    FlagValues flags;
    std::function<int(const sarima::RunConfig&)> action;

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const sarima::RunConfig&);
    };
    const Cmd cmds[] = {
        {"identify", "stationarity checks and correlograms", sarima::run_identify},
        {"fit", "estimate a model with fixed orders", sarima::run_fit},
        {"diagnose", "residual diagnostics for a fitted model", sarima::run_diagnose},
        {"forecast", "forecasts with intervals from a fitted model", sarima::run_forecast},
        {"evaluate", "one-step holdout evaluation", sarima::run_evaluate},
        {"select", "grid search with diagnostic gates", sarima::run_select},
    };
    for (const Cmd& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, flags);
        sub->callback([&action, fn = c.fn] { action = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help exits 0, parse errors exit 2
    }

    try {
        return action(build_config(flags));
    } catch (const sarima::ArgumentError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const sarima::DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const sarima::NoAdmissibleModelError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    } catch (const sarima::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
