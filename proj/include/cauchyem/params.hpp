#pragma once

#include <complex>
#include <string>

namespace cauchyem {

// Location conventions for the skewed Cauchy law. The two forms describe the
// same family; their location parameters differ by (2/pi)*beta*sigma*log(sigma),
// so they coincide when beta = 0 or sigma = 1.
enum class ParamForm { S0, S1 };

std::string to_string(ParamForm form);
ParamForm param_form_from_string(const std::string& name);

// User-facing parameter triple: skewness beta in [-1,1], scale sigma > 0,
// location mu, plus the form tag saying which location convention mu uses.
struct CauchyParams {
    double beta = 0.0;
    double sigma = 1.0;
    double mu = 0.0;
    ParamForm form = ParamForm::S1;
};

// Throws std::invalid_argument when a field is out of range or non-finite.
void validate(const CauchyParams& params);

// EM working triple: eta = sigma*(1-|beta|) >= 0, lambda = sigma*beta,
// delta = mu + (2/pi)*lambda*log|lambda| (with lambda*log|lambda| := 0 at
// lambda = 0). Total scale eta + |lambda| must stay positive.
struct InternalParams {
    double eta = 1.0;
    double lambda = 0.0;
    double delta = 0.0;
};

void validate(const InternalParams& theta);

// Characteristic function E exp(i*t*Y) of the law described by params.
// Modulus is exp(-sigma*|t|) for either form.
std::complex<double> chf_eval(double t, const CauchyParams& params);

// Re-expresses params in target_form without changing the distribution.
// Round trip is the identity up to rounding.
CauchyParams convert_form(const CauchyParams& params, ParamForm target_form);

// Proposition-style reparameterization. Input must be in S1 form; convert
// first when holding S0 parameters.
InternalParams internal_from_user(const CauchyParams& params);

// Closed-form inverse: sigma = eta + |lambda|, beta = lambda/sigma,
// mu = delta - (2/pi)*lambda*log|lambda|. Result carries the S1 tag.
// Throws DegenerateScaleError when eta + |lambda| = 0.
CauchyParams user_from_internal(const InternalParams& theta);

// x*log|x| extended continuously by 0 at x = 0.
double xlogabsx(double x);

}  // namespace cauchyem
