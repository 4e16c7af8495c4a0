#pragma once

#include "sarima/run_config.hpp"

namespace sarima {

// Batch-run entry points, one per CLI subcommand.  Each reads what it needs
// per the config, writes its text/CSV/JSON/SVG artifacts into the output
// directory, echoes the text report to stdout and returns 0.  Failures are
// reported by throwing; the CLI maps the error taxonomy to exit codes.
int run_identify(const RunConfig& cfg);
int run_fit(const RunConfig& cfg);
int run_diagnose(const RunConfig& cfg);
int run_forecast(const RunConfig& cfg);
int run_evaluate(const RunConfig& cfg);
int run_select(const RunConfig& cfg);

}  // namespace sarima
