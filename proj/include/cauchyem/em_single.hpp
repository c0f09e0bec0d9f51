#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cauchyem/params.hpp"
#include "cauchyem/sampling.hpp"

namespace cauchyem {

// Self-normalized Monte-Carlo estimates of E(Z^2 P^r | y, theta), r = 0,1,2.
// When the symmetric guard is active (|lambda| below the threshold) the
// moments carry the closed-form m0 with m1 = m2 = 0 and the flag set, and
// the M-step keeps lambda frozen at zero.
struct ConditionalMoments {
    double m0 = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    bool symmetric = false;
};

struct EmConfig {
    long iterations = 1000;      // T
    long burn_in = 500;          // B, averaging uses iterations B+1..T
    std::size_t mc_size = 3000;  // M
    std::uint64_t seed = 0;
    double eps_eta = 1e-8;       // floor for eta
    double eps_lambda = 1e-4;    // symmetric-mode threshold on |lambda|/(eta+|lambda|)
    bool ml_compare = false;
};

void validate(const EmConfig& config);

struct FitDiagnostics {
    long eta_clamps = 0;            // variance-update radicand hit the floor
    long symmetric_iterations = 0;  // iterations spent with lambda frozen at 0
};

struct FitResult {
    std::vector<InternalParams> trace;  // trace[t] holds theta after iteration t+1
    InternalParams averaged_internal;
    CauchyParams averaged_user;
    std::vector<double> loglik_trace;   // log-likelihood of trace[t]
    EmConfig config_echo;
    std::size_t data_size = 0;
    FitDiagnostics diagnostics;
};

// Whether theta sits in the symmetric guard regime for the given threshold.
bool symmetric_guard(const InternalParams& theta, double eps_lambda);

ConditionalMoments estep_moments(double y, const InternalParams& theta,
                                 const MonteCarloPool& pool, double eps_eta = 1e-8,
                                 double eps_lambda = 1e-4);

// One M-step: eta from (delta_t, lambda_t), lambda from delta_t, delta from
// the updated lambda. The eta update is floored at eps_eta; *eta_clamped
// reports when the floor was hit.
InternalParams mstep_update(std::span<const double> data,
                            std::span<const ConditionalMoments> moments,
                            const InternalParams& theta_t, double eps_eta = 1e-8,
                            bool* eta_clamped = nullptr);

// Observed-data log-likelihood using the pool density.
double loglik(std::span<const double> data, const InternalParams& theta,
              const MonteCarloPool& pool);

// Monte-Carlo EM fit: T iterations from internal_from_user(init), averaged
// estimates over the post-burn-in window. Deterministic given config.seed.
FitResult fit_cauchy(std::span<const double> data, const CauchyParams& init,
                     const EmConfig& config);

struct MlFit {
    CauchyParams params;
    double loglik = 0.0;
    bool sigma_pinned = false;  // scale driven to its lower bound
    long restarts = 0;
};

// Maximum-likelihood baseline: derivative-free simplex search over
// (beta, sigma, mu) on the inversion density, started from init. The
// returned point never scores below init.
MlFit ml_fit(std::span<const double> data, const CauchyParams& init);

namespace detail {

// Weighted M-step shared by the single and mixture estimators. With unit
// weights it performs, operation for operation, the same arithmetic as
// mstep_update, which is what makes the one-component mixture reduce to the
// single fit bit-for-bit.
InternalParams mstep_weighted(std::span<const double> data,
                              std::span<const ConditionalMoments> moments,
                              std::span<const double> tau,
                              const InternalParams& theta_t, double eps_eta,
                              bool* eta_clamped);

// E-step moments together with the pool density of the same observation,
// computed from one pass over the pool.
struct EStepEval {
    ConditionalMoments moments;
    double mc_density = 0.0;
};

EStepEval estep_eval(double y, const InternalParams& theta, const MonteCarloPool& pool,
                     double eps_eta, double eps_lambda);

}  // namespace detail
}  // namespace cauchyem
