#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sarima/model.hpp"

namespace sarima {

// Candidate orders: the cartesian product of the listed p, q, P, Q values
// with fixed differencing orders and period.
struct OrderGrid {
    std::vector<int> p{0, 1, 2};
    std::vector<int> q{0, 1, 2};
    std::vector<int> P{0, 1};
    std::vector<int> Q{0, 1};
    int d = 0;
    int D = 0;
    int s = 12;
};

struct GateConfig {
    double alpha_sig = 0.05;   // every coefficient must beat this p-value
    int lb_h = -1;             // Ljung-Box lags, default 2*s
    double lb_alpha = 0.05;    // reject when residual LB p <= this
    int spike_max_lag = -1;    // correlogram span for the spike count, default 2*s
    double band_level = 0.95;
    double var_alpha = 0.05;   // squared-residual LB at lag s (variance stability)
};

enum class Verdict {
    selected,
    rejected_insignificant,  // a coefficient failed the significance gate
    rejected_diagnostics,    // residuals failed a whiteness/stability gate
    rejected_aic_rank,       // sound, but ranked below the selected model
    failed,                  // estimation threw
};

std::string verdict_name(Verdict v);

struct CandidateResult {
    ModelSpec spec;
    std::optional<FittedModel> model;  // absent when estimation failed
    double aic = 0.0;
    Verdict verdict = Verdict::failed;
    std::string reason;  // failure or rejection explanation
};

struct SelectionOutcome {
    std::vector<CandidateResult> candidates;  // in final AIC rank order
    std::size_t selected = 0;                 // index into candidates
};

// Expands the grid in lexicographic (p,q,P,Q) order, dropping the all-zero
// spec when d == D == 0.  Throws ArgumentError when more than 400 candidates
// survive, naming the count.
std::vector<ModelSpec> enumerate_candidates(const OrderGrid& grid);

// Sorts: successful fits by ascending AIC, ties by fewer coefficients, then
// lexicographic spec order; failures go last.  Throws NoAdmissibleModelError
// when every fit failed.
void rank_by_aic(std::vector<CandidateResult>& results);

// Walks the ranked list and stops at the first candidate that passes the
// significance gate and the residual-whiteness gates (Ljung-Box, correlogram
// spike count, squared-residual Ljung-Box).  Earlier candidates keep their
// rejection verdicts, later ones are marked rejected_aic_rank.  Throws
// NoAdmissibleModelError listing the rejection reasons when nothing passes.
SelectionOutcome apply_gates(std::vector<CandidateResult> ranked, const GateConfig& cfg);

// Full pipeline on a training series: fit every candidate (in parallel,
// results reduced in candidate order so runs are reproducible), rank, gate.
SelectionOutcome run_selection(const TimeSeries& train, const OrderGrid& grid,
                               std::optional<double> lambda, const GateConfig& cfg);

}  // namespace sarima
