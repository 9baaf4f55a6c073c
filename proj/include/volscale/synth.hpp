#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace volscale {

/// Deterministic child seed for a numbered stream (splitmix-style mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Stationary Gaussian noise whose autocovariance is that of fractional
/// Gaussian noise with the given Hurst parameter, generated by exact
/// circulant embedding of the covariance. Bitwise reproducible per seed.
/// Requires 0 < hurst < 1 and length >= 1024.
std::vector<double> gen_fgn(double hurst, std::size_t length, std::uint64_t seed);

/// Theoretical fGn autocovariance at an integer lag (unit variance).
double fgn_autocovariance(double hurst, std::int64_t lag);

/// I.i.d. standard normal sequence.
std::vector<double> gen_iid_normal(std::size_t length, std::uint64_t seed);

/// Binomial multiplicative measure of length 2^levels: starting from 1,
/// each value splits into children scaled by 2p and 2(1-p). Deterministic
/// left/right order by default; `randomize` swaps children per node using
/// the seed. Requires 0 < p < 1 and 8 <= levels <= 24.
std::vector<double> gen_cascade(double p, int levels, std::uint64_t seed = 0,
                                bool randomize = false);

/// Reference mass exponent of the binomial measure: -log2(p^q + (1-p)^q).
double cascade_tau_ref(double p, double q);

/// Reference generalized Hurst exponent (1 + tau)/q, continuous at q = 0.
double cascade_h_ref(double p, double q);

/// Reference singularity strength alpha(q) = d tau / d q.
double cascade_alpha_ref(double p, double q);

/// Reference spectrum width alpha(q_min) - alpha(q_max).
double cascade_width_ref(double p, double q_min, double q_max);

/// Uniform random permutation; preserves the multiset of values exactly.
std::vector<double> shuffled(std::vector<double> series, std::uint64_t seed);

/// Cross-sectional test universe: instrument j holds i.i.d. volumes of
/// mean mu_j (log-spaced across the mean range) and standard deviation
/// mu_j^beta, floored at 1e-9 (clips counted).
struct UniverseSpec {
    double beta = 0.75;
    int n_instruments = 50;
    std::size_t length = 1 << 14;
    double mean_min = 1e2;
    double mean_max = 1e4;
    std::uint64_t seed = 1;
};

struct UniverseInstrument {
    std::string id;
    double planted_mean = 0.0;
    double planted_sd = 0.0;
    std::vector<double> values;
    std::size_t clipped = 0;
};

std::vector<UniverseInstrument> gen_taylor_universe(const UniverseSpec& spec);

} // namespace volscale
