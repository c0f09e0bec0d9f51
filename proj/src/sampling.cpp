#include "cauchyem/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchyem/errors.hpp"
#include "cauchyem/rng.hpp"

namespace cauchyem {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// Chambers-Mallows-Stuck, alpha = 1, skewness +1: U uniform on (-pi/2, pi/2),
// W unit exponential.
double cms_skewed_unit(double u_angle, double u_exp) {
    const double U = kPi * (u_angle - 0.5);
    const double W = -std::log(u_exp);
    const double shifted = kHalfPi + U;
    return (2.0 / kPi) *
           (shifted * std::tan(U) - std::log((kHalfPi * W * std::cos(U)) / shifted));
}

}  // namespace

std::vector<double> sample_standard_skewed(std::uint64_t pool_seed, std::size_t n) {
    if (n == 0) throw EmptyRequestError("sample_standard_skewed: n must be >= 1");
    std::vector<double> out(n);
    const std::uint64_t stream = rng::derive_stream(pool_seed, 0x706f6f6cULL);  // "pool"
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = rng::uniform_open(stream, 2 * i);
        const double u2 = rng::uniform_open(stream, 2 * i + 1);
        out[i] = cms_skewed_unit(u1, u2);
    }
    return out;
}

std::vector<double> sample_cauchy(const CauchyParams& params, std::uint64_t seed,
                                  std::size_t n) {
    validate(params);
    if (n == 0) throw EmptyRequestError("sample_cauchy: n must be >= 1");
    const CauchyParams s1 =
        params.form == ParamForm::S1 ? params : convert_form(params, ParamForm::S1);
    const InternalParams theta = internal_from_user(s1);

    std::vector<double> out(n);
    const std::uint64_t stream = rng::derive_stream(seed, 0x64617461ULL);  // "data"
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = rng::uniform_open(stream, 4 * i);
        const double u2 = rng::uniform_open(stream, 4 * i + 1);
        const double u3 = rng::uniform_open(stream, 4 * i + 2);
        const double u4 = rng::uniform_open(stream, 4 * i + 3);
        const auto nz = rng::normal_pair(u1, u2);
        const double p = cms_skewed_unit(u3, u4);
        out[i] = theta.eta * (nz.first / nz.second) + theta.lambda * p + theta.delta;
    }
    return out;
}

double density_mc(double y, const InternalParams& theta, const MonteCarloPool& pool) {
    validate(theta);
    if (!(theta.eta > 0.0))
        throw DegenerateScaleError("density_mc requires eta > 0");

    const double inv_eta = 1.0 / theta.eta;
    if (theta.lambda == 0.0) {
        // Integrand is constant in p: closed form, independent of the pool.
        const double q = (y - theta.delta) * inv_eta;
        return inv_eta / (kPi * (1.0 + q * q));
    }

    double acc = 0.0;
    for (const double p : pool.samples()) {
        const double q = (y - theta.lambda * p - theta.delta) * inv_eta;
        acc += 1.0 / (1.0 + q * q);
    }
    return acc * inv_eta / (kPi * static_cast<double>(pool.size()));
}

}  // namespace cauchyem
