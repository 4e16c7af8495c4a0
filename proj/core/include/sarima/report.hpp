#pragma once

#include <string>
#include <vector>

#include "sarima/correlogram.hpp"
#include "sarima/forecast.hpp"
#include "sarima/hypothesis_tests.hpp"
#include "sarima/model.hpp"
#include "sarima/selection.hpp"

namespace sarima {

// Number renderers shared by every table so the same quantity always prints
// the same way: currency-scale values get 3 decimals, coefficients 4, and
// p-values below 0.01 collapse to "<0.01".
std::string format_currency(double v);
std::string format_coef(double v);
std::string format_p(double p, int clamp = 0);
std::string format_stat(double v);

// Fixed-width text table; column widths fit the widest cell, numbers are
// right-aligned (alignment per column: 'l' or 'r').
std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::string& align);

// One statistic/p-value pair per row, mirroring the two-column layout used
// for unit-root, portmanteau and normality summaries.
std::string render_test_table(const std::vector<std::pair<std::string, TestReport>>& tests);

// Coefficient table: estimate, standard error, z, p per coefficient.
std::string render_coefficient_table(const FittedModel& model);

// Candidate ranking with AIC and verdicts.
std::string render_ranking_table(const SelectionOutcome& outcome);

// Forecast table with interval bounds.
std::string render_forecast_table(const ForecastSet& fc);

// Holdout ledger with the MAPE line underneath.
std::string render_ledger_table(const HoldoutLedger& ledger);

// Stem plot of a correlogram as a self-contained SVG document: one vertical
// line per lag plus dashed horizontal band lines.
std::string correlogram_svg(const Correlogram& c, const std::string& title);

// Machine-readable twins.
std::string correlogram_csv(const Correlogram& c);
std::string forecast_csv(const ForecastSet& fc);
std::string ledger_csv(const HoldoutLedger& ledger);
std::string ranking_csv(const SelectionOutcome& outcome);

}  // namespace sarima
