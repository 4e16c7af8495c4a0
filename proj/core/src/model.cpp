#include "sarima/model.hpp"

#include <cmath>
#include <cstdio>
#include <tuple>

#include "sarima/errors.hpp"

namespace sarima {

void ModelSpec::validate() const {
    if (p < 0 || d < 0 || q < 0 || P < 0 || D < 0 || Q < 0) {
        throw ArgumentError("model spec: orders must be nonnegative");
    }
    if (s < 1) throw ArgumentError("model spec: period must be >= 1");
    if ((P > 0 || D > 0 || Q > 0) && s < 2) {
        throw ArgumentError("model spec: seasonal orders need a period >= 2");
    }
}

std::string ModelSpec::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%d,%d,%d)(%d,%d,%d)[%d]", p, d, q, P, D, Q, s);
    return buf;
}

bool ModelSpec::operator==(const ModelSpec& o) const {
    return p == o.p && d == o.d && q == o.q && P == o.P && D == o.D && Q == o.Q && s == o.s;
}

bool ModelSpec::operator<(const ModelSpec& o) const {
    return std::tie(p, d, q, P, D, Q, s) < std::tie(o.p, o.d, o.q, o.P, o.D, o.Q, o.s);
}

std::vector<double> CoefficientSet::flat() const {
    std::vector<double> v;
    v.reserve(ar.size() + ma.size() + sar.size() + sma.size());
    v.insert(v.end(), ar.begin(), ar.end());
    v.insert(v.end(), ma.begin(), ma.end());
    v.insert(v.end(), sar.begin(), sar.end());
    v.insert(v.end(), sma.begin(), sma.end());
    return v;
}

CoefficientSet CoefficientSet::from_flat(const ModelSpec& spec, const std::vector<double>& v,
                                         double sigma2) {
    if (v.size() != static_cast<std::size_t>(spec.n_coef())) {
        throw ArgumentError("coefficients: expected " + std::to_string(spec.n_coef()) +
                            " values, got " + std::to_string(v.size()));
    }
    CoefficientSet c;
    auto it = v.begin();
    c.ar.assign(it, it + spec.p); it += spec.p;
    c.ma.assign(it, it + spec.q); it += spec.q;
    c.sar.assign(it, it + spec.P); it += spec.P;
    c.sma.assign(it, it + spec.Q);
    c.sigma2 = sigma2;
    return c;
}

std::vector<std::string> CoefficientSet::names(const ModelSpec& spec) {
    std::vector<std::string> out;
    for (int i = 1; i <= spec.p; ++i) out.push_back("ar" + std::to_string(i));
    for (int i = 1; i <= spec.q; ++i) out.push_back("ma" + std::to_string(i));
    for (int i = 1; i <= spec.P; ++i) out.push_back("sar" + std::to_string(i));
    for (int i = 1; i <= spec.Q; ++i) out.push_back("sma" + std::to_string(i));
    return out;
}

namespace {

// Convolution of full polynomials given as coefficient vectors on B^0..B^k.
std::vector<double> conv(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// (1 - sum a_i B^i) as a full coefficient vector.
std::vector<double> minus_poly(const std::vector<double>& a, int stride = 1) {
    std::vector<double> p(a.size() * stride + 1, 0.0);
    p[0] = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) p[(i + 1) * stride] = -a[i];
    return p;
}

// (1 + sum a_i B^i).
std::vector<double> plus_poly(const std::vector<double>& a, int stride = 1) {
    std::vector<double> p(a.size() * stride + 1, 0.0);
    p[0] = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) p[(i + 1) * stride] = a[i];
    return p;
}

}  // namespace

ExpandedPolynomials expand_polynomials(const ModelSpec& spec, const CoefficientSet& coef) {
    spec.validate();
    if (coef.ar.size() != static_cast<std::size_t>(spec.p) ||
        coef.ma.size() != static_cast<std::size_t>(spec.q) ||
        coef.sar.size() != static_cast<std::size_t>(spec.P) ||
        coef.sma.size() != static_cast<std::size_t>(spec.Q)) {
        throw ArgumentError("expand_polynomials: coefficient lengths disagree with spec");
    }

    ExpandedPolynomials out;
    std::vector<double> arp = conv(minus_poly(coef.ar), minus_poly(coef.sar, spec.s));
    std::vector<double> map = conv(plus_poly(coef.ma), plus_poly(coef.sma, spec.s));
    // Strip the leading 1 and restore the sign conventions.
    out.ar.resize(arp.size() - 1);
    for (std::size_t i = 1; i < arp.size(); ++i) out.ar[i - 1] = -arp[i];
    out.ma.resize(map.size() - 1);
    for (std::size_t i = 1; i < map.size(); ++i) out.ma[i - 1] = map[i];
    return out;
}

std::vector<double> pacf_to_ar(const std::vector<double>& pacf) {
    const std::size_t k = pacf.size();
    for (double r : pacf) {
        if (!(std::abs(r) < 1.0)) {
            throw ArgumentError("pacf_to_ar: partial correlations must lie in (-1, 1)");
        }
    }
    std::vector<double> a(pacf);
    std::vector<double> tmp(k);
    for (std::size_t j = 1; j < k; ++j) {
        double rj = pacf[j];
        for (std::size_t i = 0; i < j; ++i) tmp[i] = a[i] - rj * a[j - 1 - i];
        std::copy(tmp.begin(), tmp.begin() + j, a.begin());
    }
    return a;
}

std::vector<double> ar_to_pacf(const std::vector<double>& ar) {
    std::vector<double> a(ar);
    const std::size_t k = a.size();
    std::vector<double> pacf(k);
    std::vector<double> tmp(k);
    for (std::size_t j = k; j-- > 0;) {
        double rj = a[j];
        pacf[j] = rj;
        double denom = 1.0 - rj * rj;
        if (denom <= 0.0) {
            throw NumericError("ar_to_pacf: polynomial is not stationary");
        }
        for (std::size_t i = 0; i < j; ++i) {
            tmp[i] = (a[i] + rj * a[j - 1 - i]) / denom;
        }
        std::copy(tmp.begin(), tmp.begin() + j, a.begin());
    }
    return pacf;
}

bool stationary(const std::vector<double>& ar) {
    if (ar.empty()) return true;
    try {
        std::vector<double> pacf = ar_to_pacf(ar);
        for (double r : pacf) {
            if (std::abs(r) > 1.0 - 1e-8) return false;
        }
    } catch (const NumericError&) {
        return false;
    }
    return true;
}

CoefficientValidity check_coefficients(const ModelSpec& spec, const CoefficientSet& coef) {
    CoefficientValidity v;
    if (coef.ar.size() != static_cast<std::size_t>(spec.p) ||
        coef.ma.size() != static_cast<std::size_t>(spec.q) ||
        coef.sar.size() != static_cast<std::size_t>(spec.P) ||
        coef.sma.size() != static_cast<std::size_t>(spec.Q)) {
        return {false, "coefficient vector lengths disagree with the orders"};
    }
    if (!(coef.sigma2 > 0.0)) {
        return {false, "sigma2 must be positive"};
    }
    if (!stationary(coef.ar)) return {false, "nonseasonal AR factor is not stationary"};
    if (!stationary(coef.sar)) return {false, "seasonal AR factor is not stationary"};
    // MA(B) = 1 + sum theta B: invertible iff the dual 1 - sum(-theta) B is stationary.
    auto neg = [](std::vector<double> t) {
        for (double& x : t) x = -x;
        return t;
    };
    if (!stationary(neg(coef.ma))) return {false, "nonseasonal MA factor is not invertible"};
    if (!stationary(neg(coef.sma))) return {false, "seasonal MA factor is not invertible"};
    return v;
}

int FittedModel::n_diff() const { return spec.d + spec.D * spec.s; }

std::vector<double> FittedModel::innovations() const {
    const std::size_t skip = static_cast<std::size_t>(n_diff());
    if (skip >= residuals.size()) return {};
    return std::vector<double>(residuals.begin() + skip, residuals.end());
}

}  // namespace sarima
