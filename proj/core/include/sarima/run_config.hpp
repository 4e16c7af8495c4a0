#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sarima/hypothesis_tests.hpp"
#include "sarima/model.hpp"
#include "sarima/selection.hpp"

namespace sarima {

// Everything a batch run needs.  Values come from a JSON config file first,
// then command-line flags override field by field.
struct RunConfig {
    std::string input;       // series CSV path
    std::string model_path;  // fitted-model JSON (diagnose/forecast/evaluate)
    std::string out_dir = ".";
    std::uint64_t seed = 1;

    // train/test split: a holdout count or the last training month
    std::optional<int> split_count;
    std::optional<YearMonth> split_date;

    // variance stabilization: "auto" estimates lambda on the training data,
    // "fixed" uses `lambda`, "log" pins 0, "none" skips the transform
    std::string transform_policy = "auto";
    std::optional<double> lambda;

    ModelSpec spec{0, 1, 0, 0, 0, 0, 12};
    bool spec_given = false;

    OrderGrid grid;
    bool grid_given = false;

    int horizon = 24;
    double level = 0.95;

    AdfRegression adf_variant = AdfRegression::drift;
    int adf_lags = -1;  // Schwert rule when negative
    int lb_h = -1;      // 2 * period when negative
    double alpha = 0.05;
    double lb_alpha = 0.05;

    // Resolves the transform for a training series per the policy.
    std::optional<double> resolve_lambda(const TimeSeries& train) const;
};

// Parses the JSON config.  Any key the schema does not define is an error
// naming the key, so typos cannot silently change a run.
RunConfig parse_config(const std::string& json_text, const std::string& origin);
RunConfig load_config(const std::string& path);

}  // namespace sarima
