#pragma once

#include <cstdint>
#include <vector>

#include "cauchyem/params.hpp"

namespace cauchyem {

// n i.i.d. draws from the standard totally right-skewed Cauchy C0(1,1,0),
// by the Chambers-Mallows-Stuck transform of a uniform on (-pi/2, pi/2) and
// a unit exponential. Deterministic given the seed; draw i depends only on
// (seed, i). Throws EmptyRequestError for n = 0.
std::vector<double> sample_standard_skewed(std::uint64_t pool_seed, std::size_t n);

// n draws from the law described by params, composed from two standard
// normal variates and one standard skewed-Cauchy variate per draw.
// Deterministic given the seed.
std::vector<double> sample_cauchy(const CauchyParams& params, std::uint64_t seed,
                                  std::size_t n);

// Seeded, reusable set of M draws from C0(1,1,0) approximating the E-step
// integrals. Regeneration from the same seed is bit-for-bit identical.
class MonteCarloPool {
public:
    MonteCarloPool(std::uint64_t seed, std::size_t size)
        : seed_(seed), samples_(sample_standard_skewed(seed, size)) {}

    std::uint64_t seed() const { return seed_; }
    std::size_t size() const { return samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }

private:
    std::uint64_t seed_;
    std::vector<double> samples_;
};

// Pool-average density: mean over the pool of 1/(pi*eta) * [1 + q_j^2]^{-1}
// with q_j = (y - lambda*p_j - delta)/eta. Strictly positive for finite q;
// converges to density_eval as the pool grows. Requires eta > 0.
double density_mc(double y, const InternalParams& theta, const MonteCarloPool& pool);

}  // namespace cauchyem
