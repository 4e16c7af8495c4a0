#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sarima/errors.hpp"
#include "sarima/report.hpp"
#include "sarima/selection.hpp"
#include "sarima/simulate.hpp"
#include "test_helpers.hpp"
#include "reference_data.hpp"

using namespace sarima;

namespace {

ModelSpec spec_of(int p, int d, int q, int P, int D, int Q, int s) {
  ModelSpec sp;
  sp.p = p; sp.d = d; sp.q = q; sp.P = P; sp.D = D; sp.Q = Q; sp.s = s;
  return sp;
}

// Candidate stub with hand-chosen AIC, p-values and residual stream, taking
// the role of a finished fit inside the gate walk.
CandidateResult stub_candidate(const ModelSpec& spec, double aic,
                               std::vector<double> p_values,
                               std::vector<double> innovations) {
  FittedModel m;
  m.spec = spec;
  m.coef = CoefficientSet::from_flat(spec, std::vector<double>(spec.n_coef(), 0.3), 1.0);
  m.std_errors = std::vector<double>(spec.n_coef(), 0.1);
  m.z_values.assign(spec.n_coef(), 3.0);
  m.p_values = std::move(p_values);
  m.aic = aic;
  m.residuals.assign(static_cast<std::size_t>(spec.d + spec.D * spec.s), 0.0);
  m.residuals.insert(m.residuals.end(), innovations.begin(), innovations.end());

  CandidateResult c;
  c.spec = spec;
  c.aic = aic;
  c.model = std::move(m);
  return c;
}

std::vector<double> white_innovations(std::uint64_t seed, std::size_t n) {
  return testutil::gaussian_draws(seed, n);
}

// White noise with variance growing along the sample: level autocorrelation
// stays flat while the squared series trends, the funnel signature.
std::vector<double> funnel_innovations(std::uint64_t seed, std::size_t n) {
  auto e = testutil::gaussian_draws(seed, n);
  for (std::size_t i = 0; i < n; ++i)
    e[i] *= 1.0 + 3.0 * static_cast<double>(i) / static_cast<double>(n);
  return e;
}

}  // namespace

TEST_CASE("grid enumeration walks lexicographically and validates") {
  OrderGrid grid;
  grid.p = {1, 2};
  grid.q = {0, 1};
  grid.P = {0, 1};
  grid.Q = {0, 2};
  grid.d = 1;
  grid.s = 12;
  auto specs = enumerate_candidates(grid);
  REQUIRE(specs.size() == 16);
  CHECK(specs.front().str() == "(1,1,0)(0,0,0)[12]");
  CHECK(specs.back().str() == "(2,1,1)(1,0,2)[12]");
  CHECK(std::is_sorted(specs.begin(), specs.end(),
                       [](const ModelSpec& a, const ModelSpec& b) { return a < b; }));
  // Contains the reference configuration.
  CHECK(std::count(specs.begin(), specs.end(), spec_of(2, 1, 0, 0, 0, 2, 12)) == 1);
}

TEST_CASE("the all-zero candidate is dropped only without differencing") {
  OrderGrid grid;
  grid.p = {0, 1};
  grid.q = {0};
  grid.P = {0};
  grid.Q = {0};
  grid.d = 0;
  auto specs = enumerate_candidates(grid);
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].p == 1);

  grid.d = 1;
  auto with_rw = enumerate_candidates(grid);
  CHECK(with_rw.size() == 2);  // the random walk stays in
}

TEST_CASE("oversized grids are refused with the offending count") {
  OrderGrid grid;
  grid.p = {0, 1, 2, 3, 4, 5};
  grid.q = {0, 1, 2, 3, 4, 5};
  grid.P = {0, 1, 2};
  grid.Q = {0, 1, 2, 3};
  // 6*6*3*4 = 432 combinations minus the dropped all-zero spec.
  CHECK_THROWS_WITH_AS(enumerate_candidates(grid), doctest::Contains("431"),
                       ArgumentError);
}

TEST_CASE("grid values are deduplicated and checked") {
  OrderGrid grid;
  grid.p = {1, 1, 0};
  grid.q = {0};
  grid.P = {0};
  grid.Q = {0};
  CHECK(enumerate_candidates(grid).size() == 1);

  OrderGrid bad;
  bad.p = {};
  CHECK_THROWS_AS(enumerate_candidates(bad), ArgumentError);
  OrderGrid neg;
  neg.q = {-1};
  CHECK_THROWS_AS(enumerate_candidates(neg), ArgumentError);
}

TEST_CASE("ranking sorts by aic with deterministic tie-breaks") {
  std::vector<CandidateResult> results;
  results.push_back(stub_candidate(spec_of(2, 0, 1, 0, 0, 0, 12), -100.0,
                                   {0.01, 0.01, 0.01}, white_innovations(1, 80)));
  results.push_back(stub_candidate(spec_of(1, 0, 0, 0, 0, 0, 12), -100.0,
                                   {0.01}, white_innovations(2, 80)));
  results.push_back(stub_candidate(spec_of(0, 0, 1, 0, 0, 0, 12), -120.0,
                                   {0.01}, white_innovations(3, 80)));
  CandidateResult failed;
  failed.spec = spec_of(3, 0, 0, 0, 0, 0, 12);
  failed.reason = "did not converge";
  results.push_back(failed);

  rank_by_aic(results);
  CHECK(results[0].spec.q == 1);               // aic -120 first
  CHECK(results[1].spec.p == 1);               // tie broken by fewer coefficients
  CHECK(results[2].spec.p == 2);
  CHECK_FALSE(results[3].model.has_value());   // failures sink to the bottom

  std::vector<CandidateResult> all_failed(2);
  all_failed[0].spec = spec_of(1, 0, 0, 0, 0, 0, 12);
  all_failed[1].spec = spec_of(2, 0, 0, 0, 0, 0, 12);
  CHECK_THROWS_AS(rank_by_aic(all_failed), NoAdmissibleModelError);
}

TEST_CASE("significance gate fires before residual gates") {
  auto good = stub_candidate(spec_of(1, 0, 0, 0, 0, 0, 12), -50.0, {0.001},
                             white_innovations(101, 120));
  auto weak = stub_candidate(spec_of(2, 0, 0, 0, 0, 0, 12), -60.0, {0.001, 0.27},
                             white_innovations(102, 120));
  std::vector<CandidateResult> ranked = {weak, good};

  auto outcome = apply_gates(ranked, GateConfig{});
  CHECK(outcome.selected == 1);
  CHECK(outcome.candidates[0].verdict == Verdict::rejected_insignificant);
  CHECK(outcome.candidates[0].reason.find("ar2") != std::string::npos);
  CHECK(outcome.candidates[0].reason.find("0.27") != std::string::npos);
  CHECK(outcome.candidates[1].verdict == Verdict::selected);
}

TEST_CASE("missing standard errors count as failed significance") {
  auto no_se = stub_candidate(spec_of(1, 0, 0, 0, 0, 0, 12), -80.0, {0.001},
                              white_innovations(103, 120));
  no_se.model->std_errors.reset();
  auto fallback = stub_candidate(spec_of(0, 0, 1, 0, 0, 0, 12), -70.0, {0.001},
                                 white_innovations(104, 120));
  auto outcome = apply_gates({no_se, fallback}, GateConfig{});
  CHECK(outcome.candidates[0].verdict == Verdict::rejected_insignificant);
  CHECK(outcome.selected == 1);
}

TEST_CASE("autocorrelated residuals are rejected by the portmanteau gate") {
  // Residuals that are themselves an AR(1) path.
  ModelSpec ar1 = spec_of(1, 0, 0, 0, 0, 0, 12);
  CoefficientSet c;
  c.ar = {0.75};
  auto bad_resid = simulate(ar1, c, 150, 7).values();
  auto bad = stub_candidate(spec_of(1, 0, 1, 0, 0, 0, 12), -90.0, {0.001, 0.001},
                            bad_resid);
  auto clean = stub_candidate(spec_of(1, 0, 0, 0, 0, 0, 12), -85.0, {0.001},
                              white_innovations(21, 150));
  auto outcome = apply_gates({bad, clean}, GateConfig{});
  CHECK(outcome.candidates[0].verdict == Verdict::rejected_diagnostics);
  CHECK(outcome.candidates[0].reason.find("Ljung-Box") != std::string::npos);
  CHECK(outcome.selected == 1);
}

TEST_CASE("variance funnelling is rejected by the squared-residual gate") {
  auto funnel = stub_candidate(spec_of(2, 1, 0, 1, 0, 0, 12), -120.0,
                               {0.001, 0.001, 0.001}, funnel_innovations(8, 150));
  auto clean = stub_candidate(spec_of(2, 1, 0, 0, 0, 2, 12), -110.0,
                              {0.001, 0.001, 0.001, 0.001},
                              white_innovations(26, 150));
  auto outcome = apply_gates({funnel, clean}, GateConfig{});
  CHECK(outcome.candidates[0].verdict == Verdict::rejected_diagnostics);
  CHECK(outcome.candidates[0].reason.find("variance instability") != std::string::npos);
  CHECK(outcome.selected == 1);
}

TEST_CASE("candidates after the winner are marked by rank") {
  auto first = stub_candidate(spec_of(1, 0, 0, 0, 0, 0, 12), -200.0, {0.001},
                              white_innovations(107, 150));
  auto second = stub_candidate(spec_of(0, 0, 1, 0, 0, 0, 12), -150.0, {0.001},
                               white_innovations(108, 150));
  auto outcome = apply_gates({first, second}, GateConfig{});
  CHECK(outcome.selected == 0);
  CHECK(outcome.candidates[1].verdict == Verdict::rejected_aic_rank);
  CHECK(outcome.candidates[1].reason.find("ranked below") != std::string::npos);
}

TEST_CASE("gate walk throws when nothing passes, listing every reason") {
  auto a = stub_candidate(spec_of(1, 0, 0, 0, 0, 0, 12), -50.0, {0.8},
                          white_innovations(109, 150));
  auto b = stub_candidate(spec_of(0, 0, 1, 0, 0, 0, 12), -40.0, {0.9},
                          white_innovations(110, 150));
  CHECK_THROWS_WITH_AS(apply_gates({a, b}, GateConfig{}),
                       doctest::Contains("insignificant"), NoAdmissibleModelError);
}

TEST_CASE("replay of the published four-way comparison") {
  // Four candidates with their published AIC values.  The AIC winner shows
  // funnelling in its residuals, the runner-up carries an insignificant
  // coefficient, so the third-ranked configuration is the one selected.
  auto aic_best = stub_candidate(spec_of(2, 1, 0, 1, 0, 0, 12), -327.35,
                                 {0.001, 0.001, 0.001}, funnel_innovations(8, 95));
  auto runner_up = stub_candidate(spec_of(1, 1, 1, 1, 0, 0, 12), -323.07,
                                  {0.001, 0.27, 0.001}, white_innovations(62, 95));
  auto chosen = stub_candidate(spec_of(2, 1, 0, 0, 0, 2, 12), -315.01,
                               {0.001, 0.001, 0.001, 0.001},
                               white_innovations(12, 95));
  auto last = stub_candidate(spec_of(1, 1, 1, 0, 0, 2, 12), -314.86,
                             {0.001, 0.001, 0.001, 0.001},
                             white_innovations(64, 95));

  std::vector<CandidateResult> results = {chosen, last, aic_best, runner_up};
  rank_by_aic(results);
  CHECK(results[0].aic == doctest::Approx(-327.35));
  CHECK(results[1].aic == doctest::Approx(-323.07));
  CHECK(results[2].aic == doctest::Approx(-315.01));
  CHECK(results[3].aic == doctest::Approx(-314.86));

  auto outcome = apply_gates(results, GateConfig{});
  CHECK(outcome.selected == 2);
  CHECK(outcome.candidates[2].spec == spec_of(2, 1, 0, 0, 0, 2, 12));
  CHECK(outcome.candidates[0].verdict == Verdict::rejected_diagnostics);
  CHECK(outcome.candidates[0].reason.find("variance instability") != std::string::npos);
  CHECK(outcome.candidates[1].verdict == Verdict::rejected_insignificant);
  CHECK(outcome.candidates[3].verdict == Verdict::rejected_aic_rank);
}

TEST_CASE("full pipeline on simulated data is coherent and reproducible") {
  ModelSpec truth = spec_of(1, 0, 0, 0, 0, 0, 12);
  CoefficientSet c;
  c.ar = {0.7};
  auto train = simulate(truth, c, 400, 55);

  OrderGrid grid;
  grid.p = {0, 1, 2};
  grid.q = {0, 1};
  grid.P = {0};
  grid.Q = {0};
  grid.d = 0;
  grid.s = 12;

  auto a = run_selection(train, grid, std::nullopt, GateConfig{});
  auto b = run_selection(train, grid, std::nullopt, GateConfig{});
  CHECK(ranking_csv(a) == ranking_csv(b));

  REQUIRE(a.selected < a.candidates.size());
  const auto& sel = a.candidates[a.selected];
  CHECK(sel.verdict == Verdict::selected);
  REQUIRE(sel.model.has_value());
  CHECK(sel.spec.p + sel.spec.q >= 1);
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    if (i < a.selected) {
      CHECK(a.candidates[i].verdict != Verdict::selected);
      CHECK(a.candidates[i].verdict != Verdict::rejected_aic_rank);
    }
    if (i > a.selected && a.candidates[i].model.has_value()) {
      CHECK(a.candidates[i].verdict == Verdict::rejected_aic_rank);
    }
  }
}
