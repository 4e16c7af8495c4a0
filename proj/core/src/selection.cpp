#include "sarima/selection.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "sarima/correlogram.hpp"
#include "sarima/errors.hpp"
#include "sarima/fit.hpp"
#include "sarima/hypothesis_tests.hpp"

namespace sarima {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::selected: return "selected";
        case Verdict::rejected_insignificant: return "rejected_insignificant";
        case Verdict::rejected_diagnostics: return "rejected_diagnostics";
        case Verdict::rejected_aic_rank: return "rejected_aic_rank";
        case Verdict::failed: return "failed";
    }
    return "unknown";
}

std::vector<ModelSpec> enumerate_candidates(const OrderGrid& grid) {
    auto clean = [](std::vector<int> v, const char* axis) {
        if (v.empty()) throw ArgumentError(std::string("grid: no values for ") + axis);
        for (int x : v) {
            if (x < 0) throw ArgumentError(std::string("grid: negative order for ") + axis);
        }
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    std::vector<int> ps = clean(grid.p, "p");
    std::vector<int> qs = clean(grid.q, "q");
    std::vector<int> Ps = clean(grid.P, "P");
    std::vector<int> Qs = clean(grid.Q, "Q");

    std::vector<ModelSpec> specs;
    for (int p : ps) {
        for (int q : qs) {
            for (int P : Ps) {
                for (int Q : Qs) {
                    if (p + q + P + Q == 0 && grid.d == 0 && grid.D == 0) continue;
                    ModelSpec spec{p, grid.d, q, P, grid.D, Q, grid.s};
                    spec.validate();
                    specs.push_back(spec);
                }
            }
        }
    }
    if (specs.empty()) throw ArgumentError("grid: no candidates to try");
    if (specs.size() > 400) {
        throw ArgumentError("grid: " + std::to_string(specs.size()) +
                            " candidates exceed the limit of 400");
    }
    return specs;
}

void rank_by_aic(std::vector<CandidateResult>& results) {
    bool any_ok = std::any_of(results.begin(), results.end(),
                              [](const CandidateResult& c) { return c.model.has_value(); });
    if (!any_ok) {
        throw NoAdmissibleModelError("selection: every candidate fit failed");
    }
    std::stable_sort(results.begin(), results.end(),
                     [](const CandidateResult& a, const CandidateResult& b) {
                         if (a.model.has_value() != b.model.has_value()) {
                             return a.model.has_value();
                         }
                         if (!a.model.has_value()) return a.spec < b.spec;
                         if (a.aic != b.aic) return a.aic < b.aic;
                         if (a.spec.n_coef() != b.spec.n_coef()) {
                             return a.spec.n_coef() < b.spec.n_coef();
                         }
                         return a.spec < b.spec;
                     });
}

namespace {

// Empty reason means the candidate passed every gate.
std::string gate_reason(const FittedModel& m, const GateConfig& cfg) {
    const int s = m.spec.s;
    const int lb_h = (cfg.lb_h > 0) ? cfg.lb_h : 2 * s;
    const int spike_lag = (cfg.spike_max_lag > 0) ? cfg.spike_max_lag : 2 * s;

    // significance of every coefficient
    if (m.spec.n_coef() > 0) {
        if (!m.std_errors) {
            return "standard errors unavailable, significance not establishable";
        }
        auto names = CoefficientSet::names(m.spec);
        for (std::size_t i = 0; i < m.p_values.size(); ++i) {
            if (!(m.p_values[i] < cfg.alpha_sig)) {
                char buf[96];
                std::snprintf(buf, sizeof(buf), "%s insignificant (p=%.4f)",
                              names[i].c_str(), m.p_values[i]);
                return buf;
            }
        }
    }

    std::vector<double> resid = m.innovations();

    // residual autocorrelation: portmanteau test
    TestReport lb = ljung_box(resid, lb_h, m.spec.n_coef());
    if (!(lb.p_value > cfg.lb_alpha)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "residual autocorrelation (Ljung-Box p=%.4f)",
                      lb.p_value);
        return buf;
    }

    // residual autocorrelation: correlogram spikes beyond the band
    const int allowed = static_cast<int>(std::ceil(0.05 * spike_lag));
    Correlogram ra = acf(resid, spike_lag, cfg.band_level);
    Correlogram rp = pacf(resid, spike_lag, cfg.band_level);
    int acf_spikes = 0, pacf_spikes = 0;
    for (int k = 1; k <= spike_lag; ++k) {
        if (std::abs(ra.at(k)) > ra.band) ++acf_spikes;
        if (std::abs(rp.at(k)) > rp.band) ++pacf_spikes;
    }
    if (acf_spikes > allowed || pacf_spikes > allowed) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%d ACF / %d PACF residual spikes exceed %d allowed",
                      acf_spikes, pacf_spikes, allowed);
        return buf;
    }

    // residual variance stability: portmanteau test on squared residuals
    std::vector<double> sq(resid);
    for (double& v : sq) v *= v;
    TestReport ml = ljung_box(sq, s, 0);
    if (!(ml.p_value > cfg.var_alpha)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "residual variance instability (squared-residual LB p=%.4f)",
                      ml.p_value);
        return buf;
    }
    return "";
}

}  // namespace

SelectionOutcome apply_gates(std::vector<CandidateResult> ranked, const GateConfig& cfg) {
    SelectionOutcome out;
    bool found = false;
    std::size_t selected = 0;

    for (std::size_t i = 0; i < ranked.size(); ++i) {
        CandidateResult& c = ranked[i];
        if (!c.model) {
            c.verdict = Verdict::failed;
            continue;
        }
        if (found) {
            c.verdict = Verdict::rejected_aic_rank;
            c.reason = "ranked below the selected model";
            continue;
        }
        std::string reason = gate_reason(*c.model, cfg);
        if (reason.empty()) {
            c.verdict = Verdict::selected;
            c.reason.clear();
            found = true;
            selected = i;
        } else {
            c.verdict = reason.find("insignificant") != std::string::npos ||
                                reason.find("significance") != std::string::npos
                            ? Verdict::rejected_insignificant
                            : Verdict::rejected_diagnostics;
            c.reason = std::move(reason);
        }
    }

    if (!found) {
        std::string msg = "selection: no candidate passed the gates;";
        for (const CandidateResult& c : ranked) {
            msg += " " + c.spec.str() + ": " + (c.reason.empty() ? "fit failed" : c.reason) + ";";
        }
        throw NoAdmissibleModelError(msg);
    }
    out.candidates = std::move(ranked);
    out.selected = selected;
    return out;
}

SelectionOutcome run_selection(const TimeSeries& train, const OrderGrid& grid,
                               std::optional<double> lambda, const GateConfig& cfg) {
    std::vector<ModelSpec> specs = enumerate_candidates(grid);

    auto fit_one = [&](const ModelSpec& spec) {
        CandidateResult c;
        c.spec = spec;
        try {
            FittedModel m = fit(train, spec, lambda);
            c.aic = m.aic;
            c.model = std::move(m);
        } catch (const std::exception& e) {
            c.verdict = Verdict::failed;
            c.reason = e.what();
        }
        return c;
    };

    // Fan out in fixed-size waves; results land at their candidate's index,
    // so the reduction is identical however the threads interleave.
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<CandidateResult> results(specs.size());
    for (std::size_t base = 0; base < specs.size(); base += workers) {
        std::size_t top = std::min(specs.size(), base + workers);
        std::vector<std::future<CandidateResult>> wave;
        wave.reserve(top - base);
        for (std::size_t i = base; i < top; ++i) {
            wave.push_back(std::async(std::launch::async, fit_one, specs[i]));
        }
        for (std::size_t i = base; i < top; ++i) {
            results[i] = wave[i - base].get();
        }
    }

    rank_by_aic(results);
    return apply_gates(std::move(results), cfg);
}

}  // namespace sarima
