#include "volscale/synth.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <random>

#include "volscale/errors.hpp"

namespace volscale {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over the combined state
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// Deterministic across platforms: mt19937_64 is fully specified and the
// Gaussian transform is spelled out instead of std::normal_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // (0, 1]: never zero, so logs are safe
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::mutex fftw_plan_mutex;

// in-place complex DFT (FFTW plan creation is not thread-safe)
void dft(std::vector<std::complex<double>>& data) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
}

} // namespace

double fgn_autocovariance(double hurst, std::int64_t lag) {
    const double k = static_cast<double>(lag < 0 ? -lag : lag);
    const double e = 2.0 * hurst;
    return 0.5 * (std::pow(k + 1.0, e) - 2.0 * std::pow(k, e) +
                  std::pow(std::abs(k - 1.0), e));
}

std::vector<double> gen_fgn(double hurst, std::size_t length, std::uint64_t seed) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw ConfigError("fgn: hurst must be in (0, 1)");
    if (length < 1024) throw ConfigError("fgn: length must be at least 1024");

    std::size_t m = 1;
    while (m < length) m *= 2;
    const std::size_t n_emb = 2 * m;

    // eigenvalues of the circulant embedding of the covariance
    std::vector<std::complex<double>> buf(n_emb);
    for (std::size_t k = 0; k <= m; ++k)
        buf[k] = fgn_autocovariance(hurst, static_cast<std::int64_t>(k));
    for (std::size_t k = 1; k < m; ++k) buf[n_emb - k] = buf[k];
    dft(buf);

    std::vector<double> lambda(n_emb);
    double lam_max = 0.0, lam_min = 0.0;
    for (std::size_t k = 0; k < n_emb; ++k) {
        lambda[k] = buf[k].real();
        lam_max = std::max(lam_max, lambda[k]);
        lam_min = std::min(lam_min, lambda[k]);
    }
    if (lam_min < -1e-8 * lam_max)
        throw Error("fgn: circulant embedding not nonnegative definite");
    for (auto& l : lambda) l = std::max(l, 0.0);

    Rng rng(seed);
    buf[0] = std::sqrt(lambda[0]) * rng.gaussian();
    buf[m] = std::sqrt(lambda[m]) * rng.gaussian();
    for (std::size_t k = 1; k < m; ++k) {
        const double g1 = rng.gaussian();
        const double g2 = rng.gaussian();
        const double r = std::sqrt(0.5 * lambda[k]);
        buf[k] = std::complex<double>(r * g1, r * g2);
        buf[n_emb - k] = std::conj(buf[k]);
    }
    dft(buf);

    const double scale = 1.0 / std::sqrt(static_cast<double>(n_emb));
    std::vector<double> out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = buf[i].real() * scale;
    return out;
}

std::vector<double> gen_iid_normal(std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(length);
    for (auto& v : out) v = rng.gaussian();
    return out;
}

std::vector<double> gen_cascade(double p, int levels, std::uint64_t seed,
                                bool randomize) {
    if (!(p > 0.0 && p < 1.0)) throw ConfigError("cascade: p must be in (0, 1)");
    if (levels < 8 || levels > 24)
        throw ConfigError("cascade: levels must be in [8, 24]");

    Rng rng(seed);
    std::vector<double> values{1.0};
    std::vector<double> next;
    for (int level = 0; level < levels; ++level) {
        next.resize(2 * values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            double left = values[i] * 2.0 * p;
            double right = values[i] * 2.0 * (1.0 - p);
            if (randomize && (rng.next_u64() & 1ULL)) std::swap(left, right);
            next[2 * i] = left;
            next[2 * i + 1] = right;
        }
        values.swap(next);
    }
    return values;
}

double cascade_tau_ref(double p, double q) {
    return -std::log2(std::pow(p, q) + std::pow(1.0 - p, q));
}

double cascade_h_ref(double p, double q) {
    if (std::abs(q) < 1e-9)
        return -(std::log(p) + std::log(1.0 - p)) / (2.0 * std::numbers::ln2);
    return (1.0 + cascade_tau_ref(p, q)) / q;
}

double cascade_alpha_ref(double p, double q) {
    const double a = std::pow(p, q);
    const double b = std::pow(1.0 - p, q);
    return -(a * std::log(p) + b * std::log(1.0 - p)) /
           ((a + b) * std::numbers::ln2);
}

double cascade_width_ref(double p, double q_min, double q_max) {
    return cascade_alpha_ref(p, q_min) - cascade_alpha_ref(p, q_max);
}

std::vector<double> shuffled(std::vector<double> series, std::uint64_t seed) {
    if (series.empty()) throw DataError("shuffle: empty series");
    Rng rng(seed);
    for (std::size_t i = series.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(series[i], series[j]);
    }
    return series;
}

std::vector<UniverseInstrument> gen_taylor_universe(const UniverseSpec& spec) {
    if (spec.n_instruments < 1) throw ConfigError("universe: need instruments");
    if (!(spec.mean_min > 0.0 && spec.mean_max > spec.mean_min))
        throw ConfigError("universe: need 0 < mean_min < mean_max");
    if (spec.length == 0) throw ConfigError("universe: zero length");

    std::vector<UniverseInstrument> out;
    out.reserve(spec.n_instruments);
    const double l0 = std::log10(spec.mean_min);
    const double l1 = std::log10(spec.mean_max);
    for (int j = 0; j < spec.n_instruments; ++j) {
        UniverseInstrument inst;
        char name[32];
        std::snprintf(name, sizeof name, "inst%03d", j);
        inst.id = name;
        const double t = spec.n_instruments == 1
                             ? 0.0
                             : static_cast<double>(j) / (spec.n_instruments - 1);
        inst.planted_mean = std::pow(10.0, l0 + t * (l1 - l0));
        inst.planted_sd = std::pow(inst.planted_mean, spec.beta);
        Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(j)));
        inst.values.resize(spec.length);
        for (auto& v : inst.values) {
            v = inst.planted_mean + inst.planted_sd * rng.gaussian();
            if (v < 1e-9) {
                v = 1e-9;
                ++inst.clipped;
            }
        }
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace volscale
