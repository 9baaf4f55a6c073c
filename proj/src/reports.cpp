#include "volscale/reports.hpp"

#include <cmath>
#include <fstream>

#include "volscale/errors.hpp"
#include "volscale/io.hpp"

namespace volscale {

json to_json(const LinearFit& fit) {
    return json{{"slope", fit.slope},
                {"intercept", fit.intercept},
                {"slope_stderr", fit.slope_se},
                {"r2", fit.r2},
                {"n", fit.n}};
}

json to_json(const ScalingFit& fit) {
    json j{{"kind", fit.kind},
           {"exponent", fit.exponent},
           {"intercept", fit.intercept},
           {"stderr", fit.se},
           {"r2", fit.r2},
           {"n", fit.n}};
    if (fit.dt_minutes > 0.0) j["dt_minutes"] = fit.dt_minutes;
    if (fit.n_excluded > 0) j["excluded_zero_sd"] = fit.n_excluded;
    return j;
}

json to_json(const MultifractalResult& r) {
    return json{{"q", r.q},
                {"h", r.h},
                {"h_stderr", r.h_se},
                {"h_r2", r.h_r2},
                {"tau", r.tau},
                {"alpha", r.alpha},
                {"f_alpha", r.f_alpha},
                {"hurst", r.hurst},
                {"hurst_stderr", r.hurst_se},
                {"delta_h", r.delta_h},
                {"delta_alpha", r.delta_alpha},
                {"scales", r.scales},
                {"warnings",
                 {{"alpha_non_monotone", r.alpha_non_monotone},
                  {"zero_variance_windows", r.zero_variance_windows}}}};
}

json to_json(const DfaResult& r) {
    return json{{"hurst", r.fit.slope},
                {"stderr", r.fit.slope_se},
                {"intercept", r.fit.intercept},
                {"r2", r.fit.r2},
                {"scales", r.grid.scales},
                {"f2", r.f2}};
}

json to_json(const GammaReport& rep) {
    json comparisons = json::array();
    for (const auto& c : rep.comparisons)
        comparisons.push_back({{"label", c.label},
                               {"gamma_hurst", c.gamma_hurst},
                               {"gamma_hurst_stderr", c.gamma_hurst_se},
                               {"discrepancy", c.discrepancy},
                               {"z", c.z}});
    return json{{"beta_trend", to_json(rep.beta_trend)},
                {"comparisons", comparisons}};
}

void write_json(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw Error("write failed for " + path.string());
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    return doc;
}

void write_fq_table(const std::filesystem::path& path, const FluctuationSurface& surface,
                    int precision) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << "log10_s";
    for (double q : surface.q) out << ",q=" << format_sig(q, 4);
    out << '\n';
    for (std::size_t si = 0; si < surface.grid.size(); ++si) {
        out << format_sig(std::log10(surface.grid.scales[si]), precision);
        for (std::size_t qi = 0; qi < surface.q.size(); ++qi)
            out << ',' << format_sig(std::log10(surface.at(qi, si)), precision);
        out << '\n';
    }
}

void write_f2_table(const std::filesystem::path& path, const DfaResult& result,
                    int precision) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << "log10_s,log10_F2\n";
    for (std::size_t si = 0; si < result.grid.size(); ++si)
        out << format_sig(std::log10(result.grid.scales[si]), precision) << ','
            << format_sig(std::log10(result.f2[si]), precision) << '\n';
}

void write_tau_table(const std::filesystem::path& path, const MultifractalResult& r,
                     int precision) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << "q,tau\n";
    for (std::size_t i = 0; i < r.q.size(); ++i)
        out << format_sig(r.q[i], precision) << ',' << format_sig(r.tau[i], precision)
            << '\n';
}

void write_spectrum_table(const std::filesystem::path& path, const MultifractalResult& r,
                          int precision) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << "alpha,f_alpha\n";
    for (std::size_t i = 0; i < r.alpha.size(); ++i)
        out << format_sig(r.alpha[i], precision) << ','
            << format_sig(r.f_alpha[i], precision) << '\n';
}

void write_instrument_table(const std::filesystem::path& csv_path,
                            const std::filesystem::path& json_path,
                            const std::vector<InstrumentRow>& rows, int precision) {
    std::ofstream out(csv_path);
    if (!out) throw Error("cannot write " + csv_path.string());
    out << "instrument,H_orig,H_adj,delta_h_orig,delta_h_adj,"
           "delta_alpha_orig,delta_alpha_adj\n";
    for (const auto& r : rows)
        out << r.id << ',' << format_sig(r.hurst_orig, precision) << ','
            << format_sig(r.hurst_adj, precision) << ','
            << format_sig(r.delta_h_orig, precision) << ','
            << format_sig(r.delta_h_adj, precision) << ','
            << format_sig(r.delta_alpha_orig, precision) << ','
            << format_sig(r.delta_alpha_adj, precision) << '\n';

    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"instrument", r.id},
                       {"hurst_orig", r.hurst_orig},
                       {"hurst_adj", r.hurst_adj},
                       {"hurst_orig_stderr", r.hurst_orig_se},
                       {"hurst_adj_stderr", r.hurst_adj_se},
                       {"delta_h_orig", r.delta_h_orig},
                       {"delta_h_adj", r.delta_h_adj},
                       {"delta_alpha_orig", r.delta_alpha_orig},
                       {"delta_alpha_adj", r.delta_alpha_adj}});
    write_json(json_path, json{{"instruments", arr}});
}

} // namespace volscale
