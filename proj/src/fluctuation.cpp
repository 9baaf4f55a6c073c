#include "volscale/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "volscale/errors.hpp"

namespace volscale {

std::vector<double> ScaleGrid::as_doubles() const {
    return std::vector<double>(scales.begin(), scales.end());
}

std::vector<double> FluctuationSurface::row(std::size_t qi) const {
    return std::vector<double>(F.begin() + qi * grid.size(),
                               F.begin() + (qi + 1) * grid.size());
}

std::vector<double> default_q_grid() {
    std::vector<double> q;
    for (int i = -16; i <= 16; ++i) q.push_back(i * 0.25);
    return q;
}

ScaleGrid make_scale_grid(std::size_t series_length, int s_min, int s_max,
                          int n_scales) {
    const auto M = static_cast<long long>(series_length);
    if (s_max == 0) s_max = static_cast<int>(M / 4);
    if (s_min < 4) throw ConfigError("scale grid: s_min must be at least 4");
    if (M < 4LL * s_min)
        throw DataError("scale grid: series too short (length " +
                        std::to_string(M) + " gives s_max below s_min " +
                        std::to_string(s_min) + ")");
    if (s_max < s_min)
        throw ConfigError("scale grid: s_max " + std::to_string(s_max) +
                          " < s_min " + std::to_string(s_min));
    if (4LL * s_max > M)
        throw ConfigError("scale grid: s_max " + std::to_string(s_max) +
                          " exceeds length/4");
    if (n_scales < 2) throw ConfigError("scale grid: need at least 2 scales");

    ScaleGrid grid;
    const double la = std::log(static_cast<double>(s_min));
    const double lb = std::log(static_cast<double>(s_max));
    for (int i = 0; i < n_scales; ++i) {
        const double t = n_scales == 1 ? 0.0
                                       : static_cast<double>(i) / (n_scales - 1);
        const int s = static_cast<int>(std::lround(std::exp(la + t * (lb - la))));
        if (grid.scales.empty() || s > grid.scales.back())
            grid.scales.push_back(s);
    }
    grid.scales.front() = s_min;
    grid.scales.back() = s_max;
    return grid;
}

namespace {

// Least-squares polynomial detrend shared across all windows of one scale:
// the Gram matrix of the basis depends only on the window length, so its
// Cholesky factor is computed once.
class WindowDetrender {
public:
    WindowDetrender(int window, int order)
        : s_(window), m_(order + 1), u_(window), basis_(m_ * window), chol_(m_ * m_) {
        for (int t = 0; t < s_; ++t)
            u_[t] = s_ == 1 ? 0.0 : 2.0 * t / (s_ - 1) - 1.0;
        for (int t = 0; t < s_; ++t) {
            double p = 1.0;
            for (int j = 0; j < m_; ++j) {
                basis_[j * s_ + t] = p;
                p *= u_[t];
            }
        }
        std::vector<double> gram(m_ * m_, 0.0);
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b <= a; ++b) {
                double g = 0.0;
                for (int t = 0; t < s_; ++t) g += basis_[a * s_ + t] * basis_[b * s_ + t];
                gram[a * m_ + b] = gram[b * m_ + a] = g;
            }
        cholesky(gram);
    }

    // Mean squared residual after removing the fitted polynomial, plus the
    // mean square of the window itself (used to classify numerically zero
    // residual variance).
    void detrend(const double* y, double& mean_sq_residual, double& mean_sq_signal) const {
        std::vector<double> rhs(m_, 0.0);
        for (int j = 0; j < m_; ++j) {
            double b = 0.0;
            for (int t = 0; t < s_; ++t) b += basis_[j * s_ + t] * y[t];
            rhs[j] = b;
        }
        solve(rhs);
        double ssr = 0.0, ssy = 0.0;
        for (int t = 0; t < s_; ++t) {
            double fitted = 0.0;
            for (int j = 0; j < m_; ++j) fitted += rhs[j] * basis_[j * s_ + t];
            const double r = y[t] - fitted;
            ssr += r * r;
            ssy += y[t] * y[t];
        }
        mean_sq_residual = ssr / s_;
        mean_sq_signal = ssy / s_;
    }

private:
    void cholesky(const std::vector<double>& a) {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j <= i; ++j) {
                double sum = a[i * m_ + j];
                for (int k = 0; k < j; ++k) sum -= chol_[i * m_ + k] * chol_[j * m_ + k];
                if (i == j) {
                    if (sum <= 0.0)
                        throw DataError("detrend: singular basis (window too short for order)");
                    chol_[i * m_ + i] = std::sqrt(sum);
                } else {
                    chol_[i * m_ + j] = sum / chol_[j * m_ + j];
                }
            }
        }
    }

    void solve(std::vector<double>& b) const {
        for (int i = 0; i < m_; ++i) {
            double sum = b[i];
            for (int k = 0; k < i; ++k) sum -= chol_[i * m_ + k] * b[k];
            b[i] = sum / chol_[i * m_ + i];
        }
        for (int i = m_ - 1; i >= 0; --i) {
            double sum = b[i];
            for (int k = i + 1; k < m_; ++k) sum -= chol_[k * m_ + i] * b[k];
            b[i] = sum / chol_[i * m_ + i];
        }
    }

    int s_;
    int m_;
    std::vector<double> u_;
    std::vector<double> basis_; // basis_[j*s + t] = u_t^j
    std::vector<double> chol_;
};

// Residual variance at or below this fraction of the window's own power is
// numerically zero (OLS rounding alone leaves ~1e-32 of the signal).
constexpr double kZeroVarianceRel = 1e-24;

} // namespace

FluctuationSurface fluctuation_surface(std::span<const double> series,
                                       std::vector<double> q_grid,
                                       const ScaleGrid& grid, int detrend_order) {
    const std::size_t M = series.size();
    if (q_grid.empty()) throw ConfigError("fluctuation: empty q grid");
    for (std::size_t i = 1; i < q_grid.size(); ++i)
        if (!(q_grid[i] > q_grid[i - 1]))
            throw ConfigError("fluctuation: q grid must be strictly increasing");
    if (detrend_order < 0) throw ConfigError("fluctuation: negative detrend order");
    if (grid.s_min() < detrend_order + 2)
        throw ConfigError("fluctuation: s_min must be at least detrend_order + 2");
    if (M < 4 * static_cast<std::size_t>(grid.s_min()))
        throw DataError("fluctuation: series too short for the scale grid");
    if (4 * static_cast<std::size_t>(grid.s_max()) > M)
        throw ConfigError("fluctuation: s_max exceeds length/4");

    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(M);
    double var = 0.0;
    for (double v : series) var += (v - mean) * (v - mean);
    if (var == 0.0) throw DataError("fluctuation: degenerate input (zero variance)");

    std::vector<double> profile(M);
    double acc = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        acc += series[i] - mean;
        profile[i] = acc;
    }

    FluctuationSurface surf;
    surf.q = std::move(q_grid);
    surf.grid = grid;
    surf.detrend_order = detrend_order;
    surf.F.assign(surf.q.size() * grid.size(), 0.0);

    std::vector<double> log_f2; // per window, positive windows only
    std::vector<double> scratch;

    for (std::size_t si = 0; si < grid.size(); ++si) {
        const int s = grid.scales[si];
        const std::size_t ns = M / static_cast<std::size_t>(s);
        const std::size_t n_windows = 2 * ns;
        WindowDetrender detrender(s, detrend_order);

        log_f2.clear();
        std::size_t zero_windows = 0;
        auto add_window = [&](const double* y) {
            double f2 = 0.0, power = 0.0;
            detrender.detrend(y, f2, power);
            if (f2 <= kZeroVarianceRel * power || f2 == 0.0)
                ++zero_windows;
            else
                log_f2.push_back(std::log(f2));
        };
        for (std::size_t v = 0; v < ns; ++v)
            add_window(profile.data() + v * static_cast<std::size_t>(s));
        for (std::size_t v = 0; v < ns; ++v)
            add_window(profile.data() + (M - (v + 1) * static_cast<std::size_t>(s)));
        surf.zero_variance_windows += zero_windows;

        if (log_f2.empty())
            throw DataError("fluctuation: every window degenerate at scale " +
                            std::to_string(s));

        for (std::size_t qi = 0; qi < surf.q.size(); ++qi) {
            const double q = surf.q[qi];
            double F;
            if (std::abs(q) < 1e-12) {
                double sum = 0.0;
                for (double l : log_f2) sum += l;
                F = std::exp(0.5 * sum / static_cast<double>(log_f2.size()));
            } else {
                // log-sum-exp keeps extreme moments finite
                scratch.resize(log_f2.size());
                double amax = -std::numeric_limits<double>::infinity();
                for (std::size_t w = 0; w < log_f2.size(); ++w) {
                    scratch[w] = 0.5 * q * log_f2[w];
                    amax = std::max(amax, scratch[w]);
                }
                double sum = 0.0;
                for (double a : scratch) sum += std::exp(a - amax);
                // zero-variance windows are included as zeros for q > 0 and
                // excluded for q < 0
                const double denom = q > 0 ? static_cast<double>(n_windows)
                                           : static_cast<double>(log_f2.size());
                F = std::exp((amax + std::log(sum / denom)) / q);
            }
            surf.F[qi * grid.size() + si] = F;
        }
    }
    return surf;
}

namespace {

// First derivative on a possibly non-uniform grid: second-order centered
// differences inside, one-sided at the ends.
std::vector<double> gradient(const std::vector<double>& y, const std::vector<double>& x) {
    const std::size_t n = y.size();
    std::vector<double> g(n, 0.0);
    if (n < 2) return g;
    g[0] = (y[1] - y[0]) / (x[1] - x[0]);
    g[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double d0 = x[i] - x[i - 1];
        const double d1 = x[i + 1] - x[i];
        g[i] = (y[i + 1] * d0 * d0 - y[i - 1] * d1 * d1 + y[i] * (d1 * d1 - d0 * d0)) /
               (d0 * d1 * (d0 + d1));
    }
    return g;
}

} // namespace

MultifractalResult multifractal_analysis(const FluctuationSurface& surface) {
    const std::size_t nq = surface.q.size();
    if (nq < 3) throw ConfigError("multifractal: q grid needs at least 3 points");

    MultifractalResult res;
    res.q = surface.q;
    res.scales = surface.grid.scales;
    res.zero_variance_windows = surface.zero_variance_windows;

    const auto sv = surface.grid.as_doubles();
    res.h.resize(nq);
    res.h_se.resize(nq);
    res.h_r2.resize(nq);
    res.tau.resize(nq);
    for (std::size_t qi = 0; qi < nq; ++qi) {
        const auto fit = loglog_fit(sv, surface.row(qi));
        res.h[qi] = fit.slope;
        res.h_se[qi] = fit.slope_se;
        res.h_r2[qi] = fit.r2;
        res.tau[qi] = surface.q[qi] * fit.slope - 1.0;
    }

    const auto hp = gradient(res.h, res.q);
    res.alpha.resize(nq);
    res.f_alpha.resize(nq);
    for (std::size_t qi = 0; qi < nq; ++qi) {
        res.alpha[qi] = res.h[qi] + res.q[qi] * hp[qi];
        res.f_alpha[qi] = res.q[qi] * (res.alpha[qi] - res.h[qi]) + 1.0;
    }

    res.delta_h = *std::max_element(res.h.begin(), res.h.end()) -
                  *std::min_element(res.h.begin(), res.h.end());
    res.delta_alpha = *std::max_element(res.alpha.begin(), res.alpha.end()) -
                      *std::min_element(res.alpha.begin(), res.alpha.end());

    for (std::size_t qi = 1; qi < nq; ++qi)
        if (res.alpha[qi] > res.alpha[qi - 1] + 1e-12) res.alpha_non_monotone = true;

    // Hurst index = h at q = 2, interpolated when 2 is between grid points.
    res.hurst = std::numeric_limits<double>::quiet_NaN();
    res.hurst_se = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t qi = 0; qi < nq; ++qi) {
        if (std::abs(res.q[qi] - 2.0) < 1e-9) {
            res.hurst = res.h[qi];
            res.hurst_se = res.h_se[qi];
            break;
        }
        if (qi + 1 < nq && res.q[qi] < 2.0 && res.q[qi + 1] > 2.0) {
            const double t = (2.0 - res.q[qi]) / (res.q[qi + 1] - res.q[qi]);
            res.hurst = res.h[qi] + t * (res.h[qi + 1] - res.h[qi]);
            res.hurst_se = res.h_se[qi] + t * (res.h_se[qi + 1] - res.h_se[qi]);
            break;
        }
    }
    return res;
}

DfaResult dfa_hurst(std::span<const double> series, const ScaleGrid& grid,
                    int detrend_order) {
    const auto surf = fluctuation_surface(series, {2.0}, grid, detrend_order);
    DfaResult res;
    res.grid = grid;
    res.f2 = surf.row(0);
    res.fit = loglog_fit(grid.as_doubles(), res.f2);
    return res;
}

} // namespace volscale
