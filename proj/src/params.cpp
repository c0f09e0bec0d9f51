#include "cauchyem/params.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchyem/errors.hpp"

namespace cauchyem {

namespace {
constexpr double kTwoOverPi = 0.63661977236758134308;
}

std::string to_string(ParamForm form) {
    return form == ParamForm::S0 ? "S0" : "S1";
}

ParamForm param_form_from_string(const std::string& name) {
    if (name == "S0" || name == "s0") return ParamForm::S0;
    if (name == "S1" || name == "s1") return ParamForm::S1;
    throw std::invalid_argument("unknown parameterization form: " + name);
}

void validate(const CauchyParams& params) {
    if (!(std::abs(params.beta) <= 1.0))
        throw std::invalid_argument("skewness beta must lie in [-1, 1]");
    if (!(params.sigma > 0.0) || !std::isfinite(params.sigma))
        throw std::invalid_argument("scale sigma must be positive and finite");
    if (!std::isfinite(params.mu))
        throw std::invalid_argument("location mu must be finite");
}

void validate(const InternalParams& theta) {
    if (!(theta.eta >= 0.0) || !std::isfinite(theta.eta))
        throw std::invalid_argument("eta must be nonnegative and finite");
    if (!std::isfinite(theta.lambda) || !std::isfinite(theta.delta))
        throw std::invalid_argument("lambda and delta must be finite");
    if (theta.eta + std::abs(theta.lambda) <= 0.0)
        throw DegenerateScaleError("total scale eta + |lambda| must be positive");
}

double xlogabsx(double x) {
    return x == 0.0 ? 0.0 : x * std::log(std::abs(x));
}

std::complex<double> chf_eval(double t, const CauchyParams& params) {
    validate(params);
    if (!std::isfinite(t))
        throw std::invalid_argument("chf argument t must be finite");
    if (t == 0.0) return {1.0, 0.0};

    const double abs_st = std::abs(params.sigma * t);
    const double sgn_t = t > 0.0 ? 1.0 : -1.0;
    const double log_term =
        params.form == ParamForm::S1 ? std::log(std::abs(t)) : std::log(abs_st);
    const double phase =
        -kTwoOverPi * params.beta * sgn_t * abs_st * log_term + params.mu * t;
    return std::polar(std::exp(-abs_st), phase);
}

CauchyParams convert_form(const CauchyParams& params, ParamForm target_form) {
    validate(params);
    if (params.form == target_form) return params;
    const double shift =
        kTwoOverPi * params.beta * params.sigma * std::log(params.sigma);
    CauchyParams out = params;
    out.form = target_form;
    // S1 -> S0 adds the shift; S0 -> S1 removes it.
    out.mu = target_form == ParamForm::S0 ? params.mu + shift : params.mu - shift;
    return out;
}

InternalParams internal_from_user(const CauchyParams& params) {
    validate(params);
    if (params.form != ParamForm::S1)
        throw std::invalid_argument(
            "internal_from_user expects S1 parameters; convert_form first");
    InternalParams theta;
    theta.eta = params.sigma * (1.0 - std::abs(params.beta));
    theta.lambda = params.sigma * params.beta;
    theta.delta = params.mu + kTwoOverPi * xlogabsx(theta.lambda);
    return theta;
}

CauchyParams user_from_internal(const InternalParams& theta) {
    validate(theta);
    const double sigma = theta.eta + std::abs(theta.lambda);
    if (sigma <= 0.0)
        throw DegenerateScaleError("cannot invert a zero-scale parameter triple");
    CauchyParams params;
    params.sigma = sigma;
    params.beta = theta.lambda / sigma;
    params.mu = theta.delta - kTwoOverPi * xlogabsx(theta.lambda);
    params.form = ParamForm::S1;
    return params;
}

}  // namespace cauchyem
