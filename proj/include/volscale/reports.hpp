#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "volscale/fluctuation.hpp"
#include "volscale/scaling.hpp"

namespace volscale {

using json = nlohmann::json;

json to_json(const LinearFit& fit);
json to_json(const ScalingFit& fit);
json to_json(const MultifractalResult& result);
json to_json(const DfaResult& result);
json to_json(const GammaReport& report);

void write_json(const std::filesystem::path& path, const json& doc);
json read_json(const std::filesystem::path& path);

/// (log10 s, log10 F_q(s)) table, one column per q.
void write_fq_table(const std::filesystem::path& path, const FluctuationSurface& surface,
                    int precision = 6);

/// (log10 s, log10 F_2) table from a plain DFA run.
void write_f2_table(const std::filesystem::path& path, const DfaResult& result,
                    int precision = 6);

/// (q, tau) table.
void write_tau_table(const std::filesystem::path& path, const MultifractalResult& result,
                     int precision = 6);

/// (alpha, f_alpha) table.
void write_spectrum_table(const std::filesystem::path& path,
                          const MultifractalResult& result, int precision = 6);

/// One row per instrument: Hurst and width measures for the original and
/// adjusted series side by side.
struct InstrumentRow {
    std::string id;
    double hurst_orig = 0.0, hurst_adj = 0.0;
    double hurst_orig_se = 0.0, hurst_adj_se = 0.0;
    double delta_h_orig = 0.0, delta_h_adj = 0.0;
    double delta_alpha_orig = 0.0, delta_alpha_adj = 0.0;
};

void write_instrument_table(const std::filesystem::path& csv_path,
                            const std::filesystem::path& json_path,
                            const std::vector<InstrumentRow>& rows, int precision = 6);

} // namespace volscale
