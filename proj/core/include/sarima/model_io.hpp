#pragma once

#include <string>

#include "sarima/model.hpp"

namespace sarima {

// JSON round-trip for a fitted model.  The document carries everything a
// later `forecast` or `evaluate` run needs: spec, coefficients, standard
// errors, likelihood, transform stages and the training series itself, so
// no refitting happens downstream.
std::string model_to_json(const FittedModel& model);
FittedModel model_from_json(const std::string& json_text);

void save_model(const FittedModel& model, const std::string& path);
FittedModel load_model(const std::string& path);

}  // namespace sarima
