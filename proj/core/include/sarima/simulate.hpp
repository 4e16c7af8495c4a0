#pragma once

#include <cstdint>
#include <random>

#include "sarima/model.hpp"

namespace sarima {

// Deterministic standard-normal stream: Marsaglia polar method over a seeded
// mt19937_64.  The distribution adaptors in <random> are not pinned down by
// the standard, so draws are generated by hand to stay identical everywhere.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}
    double operator()();

private:
    double uniform();  // in [0, 1)

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Draws a realization of the model: the ARMA part is recursed on the
// differenced scale after a burn-in (default 10x the largest lag), then
// integrated d times at lag 1 and D times at lag s from zero initial values.
// The result has exactly n observations starting at `start`.  Throws
// NumericError when the coefficients fail stationarity or invertibility.
TimeSeries simulate(const ModelSpec& spec, const CoefficientSet& coef, int n,
                    std::uint64_t seed, int burn_in = -1,
                    YearMonth start = YearMonth{2000, 1});

}  // namespace sarima
