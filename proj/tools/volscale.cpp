// volscale command line: synthetic generation, tick ingestion, intraday
// patterns, DFA/MF-DFA and cross-sectional scaling fits, all emitting
// delimited tables plus JSON result documents and a run manifest.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "volscale/errors.hpp"
#include "volscale/fluctuation.hpp"
#include "volscale/ingest.hpp"
#include "volscale/intraday.hpp"
#include "volscale/io.hpp"
#include "volscale/reports.hpp"
#include "volscale/scaling.hpp"
#include "volscale/series.hpp"
#include "volscale/session.hpp"
#include "volscale/synth.hpp"
#include "volscale/version.hpp"

namespace fs = std::filesystem;
using volscale::json;

namespace {

struct Failure {
    std::string instrument;
    std::string stage;
    std::string message;
};

struct RunContext {
    std::string command;
    fs::path out_dir;
    json config = json::object();
    std::vector<std::string> inputs;
    std::vector<Failure> failures;

    void fail(const std::string& instrument, const std::string& stage,
              const std::string& message) {
        failures.push_back({instrument, stage, message});
        std::cerr << "volscale: " << instrument << " [" << stage << "]: " << message
                  << "\n";
    }
};

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const RunContext& ctx) {
    json failures = json::array();
    for (const auto& f : ctx.failures)
        failures.push_back({{"instrument", f.instrument},
                            {"stage", f.stage},
                            {"error", f.message}});
    const json manifest{{"command", ctx.command},
                        {"config", ctx.config},
                        {"inputs", ctx.inputs},
                        {"failures", failures},
                        {"versions",
                         {{"volscale", volscale::kVersion},
                          {"volume_series_format", 1},
                          {"pattern_format", 1}}},
                        {"timestamp", iso_timestamp()}};
    volscale::write_json(ctx.out_dir / "manifest.json", manifest);
}

// Analysis knobs shared by dfa/mfdfa/taylor.
struct AnalysisOptions {
    double q_min = -4.0, q_max = 4.0, q_step = 0.25;
    int s_min = 20, s_max = 0, n_scales = 30;
    int detrend_order = 1;
    int precision = 6;

    void attach(CLI::App* cmd, bool with_q = true) {
        if (with_q) {
            cmd->add_option("--qmin", q_min, "Smallest moment order");
            cmd->add_option("--qmax", q_max, "Largest moment order");
            cmd->add_option("--qstep", q_step, "Moment grid step");
        }
        cmd->add_option("--smin", s_min, "Smallest window size");
        cmd->add_option("--smax", s_max, "Largest window size (0 = length/4)");
        cmd->add_option("--nscales", n_scales, "Number of log-spaced window sizes");
        cmd->add_option("--detrend-order", detrend_order, "Detrending polynomial order");
        cmd->add_option("--precision", precision, "Significant digits in tables")
            ->envname("VOLSCALE_PRECISION");
    }

    std::vector<double> q_grid() const {
        if (!(q_step > 0.0) || !(q_max > q_min))
            throw volscale::ConfigError("bad q grid: need qmin < qmax, qstep > 0");
        std::vector<double> q;
        for (double v = q_min; v <= q_max + 1e-9; v += q_step) q.push_back(v);
        return q;
    }

    json to_json() const {
        return json{{"qmin", q_min},     {"qmax", q_max},
                    {"qstep", q_step},   {"smin", s_min},
                    {"smax", s_max},     {"nscales", n_scales},
                    {"detrend_order", detrend_order},
                    {"precision", precision}};
    }
};

std::string instrument_id(const fs::path& input) { return input.stem().string(); }

// --- synth ---------------------------------------------------------------

int run_synth(RunContext& ctx, const std::string& kind, double hurst,
              std::size_t length, double p, int levels, bool randomize, double beta,
              int instruments, double mean_min, double mean_max, std::uint64_t seed,
              const volscale::SessionSpec& session) {
    json report{{"kind", kind}, {"seed", seed}};
    if (kind == "fgn" || kind == "iid") {
        auto values = kind == "fgn" ? volscale::gen_fgn(hurst, length, seed)
                                    : volscale::gen_iid_normal(length, seed);
        if (kind == "fgn") report["hurst"] = hurst;
        report["length"] = length;
        const auto series = volscale::wrap_sequence(std::move(values), session);
        volscale::write_volume_series(ctx.out_dir / (kind + ".csv"), series);
    } else if (kind == "cascade") {
        auto values = volscale::gen_cascade(p, levels, seed, randomize);
        report["p"] = p;
        report["levels"] = levels;
        report["randomize"] = randomize;
        json tau_ref = json::array();
        for (double q = -4.0; q <= 4.0 + 1e-9; q += 0.25)
            tau_ref.push_back({{"q", q},
                               {"tau", volscale::cascade_tau_ref(p, q)},
                               {"h", volscale::cascade_h_ref(p, q)},
                               {"alpha", volscale::cascade_alpha_ref(p, q)}});
        report["reference_spectrum"] = tau_ref;
        const auto series = volscale::wrap_sequence(std::move(values), session);
        volscale::write_volume_series(ctx.out_dir / "cascade.csv", series);
    } else if (kind == "universe") {
        volscale::UniverseSpec spec;
        spec.beta = beta;
        spec.n_instruments = instruments;
        spec.length = length;
        spec.mean_min = mean_min;
        spec.mean_max = mean_max;
        spec.seed = seed;
        auto insts = volscale::gen_taylor_universe(spec);
        report["beta"] = beta;
        report["instruments"] = instruments;
        report["length"] = length;
        json per = json::array();
        for (const auto& inst : insts) {
            const auto series = volscale::wrap_sequence(inst.values, session);
            volscale::write_volume_series(ctx.out_dir / (inst.id + ".csv"), series);
            per.push_back({{"id", inst.id},
                           {"planted_mean", inst.planted_mean},
                           {"planted_sd", inst.planted_sd},
                           {"clipped", inst.clipped}});
        }
        report["per_instrument"] = per;
    } else {
        throw volscale::ConfigError("unknown generator kind '" + kind + "'");
    }
    volscale::write_json(ctx.out_dir / "synth_report.json", report);
    return 0;
}

// --- ingest ---------------------------------------------------------------

int run_ingest(RunContext& ctx, const std::vector<std::string>& inputs,
               const volscale::TradeFormat& fmt, const std::vector<std::string>& dts,
               const volscale::SessionSpec& session) {
    json report = json::object();
    for (const auto& input : inputs) {
        const std::string id = instrument_id(input);
        try {
            std::ifstream in(input);
            if (!in) throw volscale::Error("cannot read " + input);
            volscale::ParseReport parse_rep;
            const auto trades = volscale::parse_trades(in, fmt, &parse_rep);
            json issues = json::array();
            for (const auto& iss : parse_rep.issues)
                issues.push_back({{"line", iss.line}, {"reason", iss.reason}});
            json inst_rep{{"lines", parse_rep.lines_total},
                          {"records", parse_rep.records},
                          {"malformed", parse_rep.malformed},
                          {"header_skipped", parse_rep.header_skipped},
                          {"empty_input", parse_rep.empty_input},
                          {"issues", issues}};
            if (parse_rep.empty_input)
                std::cerr << "volscale: " << id << ": empty input\n";

            json per_dt = json::object();
            for (const auto& dt_text : dts) {
                const auto dt = volscale::Scale::parse(dt_text);
                volscale::AggregationReport agg;
                const auto series = volscale::aggregate_volume(trades, dt, session, &agg);
                volscale::write_volume_series(
                    ctx.out_dir / (id + "_dt" + dt.to_string() + ".csv"), series);
                if (agg.no_session_trades)
                    std::cerr << "volscale: " << id << ": no trades inside the session\n";
                per_dt[dt.to_string()] = {
                    {"bins", series.size()},
                    {"trades_in_session", agg.trades_in_session},
                    {"discarded_out_of_session", agg.discarded_out_of_session},
                    {"partial_tail_days", agg.partial_tail_days},
                    {"no_session_trades", agg.no_session_trades}};
            }
            inst_rep["aggregation"] = per_dt;
            report[id] = inst_rep;
        } catch (const volscale::Error& e) {
            ctx.fail(id, "ingest", e.what());
        }
    }
    volscale::write_json(ctx.out_dir / "ingest_report.json", report);
    return ctx.failures.empty() ? 0 : 1;
}

// --- pattern ---------------------------------------------------------------

int run_pattern(RunContext& ctx, const std::vector<std::string>& inputs, int precision) {
    std::vector<volscale::IntradayPattern> patterns;
    for (const auto& input : inputs) {
        const std::string id = instrument_id(input);
        try {
            const auto series = volscale::read_volume_series(input);
            auto pattern = volscale::compute_pattern(series);
            volscale::write_pattern(ctx.out_dir / (id + "_pattern.csv"), pattern,
                                    precision);
            patterns.push_back(std::move(pattern));
        } catch (const volscale::Error& e) {
            ctx.fail(id, "pattern", e.what());
        }
    }
    if (patterns.size() > 1)
        volscale::write_pattern(ctx.out_dir / "average_pattern.csv",
                                volscale::average_patterns(patterns), precision);
    return ctx.failures.empty() ? 0 : 1;
}

// --- dfa / mfdfa ------------------------------------------------------------

struct Variant {
    std::string name; // "orig" or "adj"
    volscale::VolumeSeries series;
};

std::vector<Variant> make_variants(RunContext& ctx, const std::string& id,
                                   const volscale::VolumeSeries& series) {
    std::vector<Variant> variants;
    variants.push_back({"orig", series});
    try {
        const auto pattern = volscale::compute_pattern(series);
        variants.push_back({"adj", volscale::deseasonalize(series, pattern)});
    } catch (const volscale::Error& e) {
        ctx.fail(id, "deseasonalize", e.what());
    }
    return variants;
}

int run_dfa(RunContext& ctx, const std::vector<std::string>& inputs,
            const AnalysisOptions& opt, bool full_q) {
    struct SummaryRow {
        std::string id;
        std::map<std::string, volscale::MultifractalResult> mf;
        std::map<std::string, volscale::DfaResult> dfa;
    };
    std::vector<SummaryRow> rows;

    for (const auto& input : inputs) {
        const std::string id = instrument_id(input);
        SummaryRow row;
        row.id = id;
        try {
            const auto series = volscale::read_volume_series(input);
            const auto grid = volscale::make_scale_grid(series.size(), opt.s_min,
                                                        opt.s_max, opt.n_scales);
            for (auto& variant : make_variants(ctx, id, series)) {
                const std::string tag = id + "_" + variant.name;
                try {
                    if (full_q) {
                        const auto surface = volscale::fluctuation_surface(
                            variant.series.values, opt.q_grid(), grid,
                            opt.detrend_order);
                        auto result = volscale::multifractal_analysis(surface);
                        json doc = volscale::to_json(result);
                        doc["instrument"] = id;
                        doc["variant"] = variant.name;
                        doc["detrend_order"] = opt.detrend_order;
                        volscale::write_json(ctx.out_dir / (tag + "_mfdfa.json"), doc);
                        volscale::write_fq_table(ctx.out_dir / (tag + "_fq.csv"),
                                                 surface, opt.precision);
                        volscale::write_tau_table(ctx.out_dir / (tag + "_tau.csv"),
                                                  result, opt.precision);
                        volscale::write_spectrum_table(
                            ctx.out_dir / (tag + "_spectrum.csv"), result, opt.precision);
                        row.mf.emplace(variant.name, std::move(result));
                    } else {
                        auto result = volscale::dfa_hurst(variant.series.values, grid,
                                                          opt.detrend_order);
                        json doc = volscale::to_json(result);
                        doc["instrument"] = id;
                        doc["variant"] = variant.name;
                        doc["detrend_order"] = opt.detrend_order;
                        volscale::write_json(ctx.out_dir / (tag + "_dfa.json"), doc);
                        volscale::write_f2_table(ctx.out_dir / (tag + "_f2.csv"), result,
                                                 opt.precision);
                        row.dfa.emplace(variant.name, std::move(result));
                    }
                } catch (const volscale::Error& e) {
                    ctx.fail(id, variant.name, e.what());
                }
            }
            rows.push_back(std::move(row));
        } catch (const volscale::Error& e) {
            ctx.fail(id, "load", e.what());
        }
    }

    // cross-instrument summary: adjusted against original, where both exist
    const fs::path summary_path =
        ctx.out_dir / (full_q ? "mfdfa_summary.csv" : "dfa_summary.csv");
    std::ofstream summary(summary_path);
    if (full_q) {
        summary << "instrument,H_orig,H_adj,delta_h_orig,delta_h_adj,"
                   "delta_alpha_orig,delta_alpha_adj\n";
        for (const auto& row : rows) {
            if (!row.mf.count("orig")) continue;
            const auto& o = row.mf.at("orig");
            const bool both = row.mf.count("adj") > 0;
            const auto* a = both ? &row.mf.at("adj") : nullptr;
            summary << row.id << ',' << volscale::format_sig(o.hurst, opt.precision)
                    << ',' << (both ? volscale::format_sig(a->hurst, opt.precision) : "")
                    << ',' << volscale::format_sig(o.delta_h, opt.precision) << ','
                    << (both ? volscale::format_sig(a->delta_h, opt.precision) : "")
                    << ',' << volscale::format_sig(o.delta_alpha, opt.precision) << ','
                    << (both ? volscale::format_sig(a->delta_alpha, opt.precision) : "")
                    << '\n';
        }
    } else {
        summary << "instrument,H_orig,H_orig_stderr,H_adj,H_adj_stderr\n";
        for (const auto& row : rows) {
            if (!row.dfa.count("orig")) continue;
            const auto& o = row.dfa.at("orig");
            const bool both = row.dfa.count("adj") > 0;
            const auto* a = both ? &row.dfa.at("adj") : nullptr;
            summary << row.id << ','
                    << volscale::format_sig(o.fit.slope, opt.precision) << ','
                    << volscale::format_sig(o.fit.slope_se, opt.precision) << ','
                    << (both ? volscale::format_sig(a->fit.slope, opt.precision) : "")
                    << ','
                    << (both ? volscale::format_sig(a->fit.slope_se, opt.precision) : "")
                    << '\n';
        }
    }
    return ctx.failures.empty() ? 0 : 1;
}

// --- taylor -----------------------------------------------------------------

int run_taylor(RunContext& ctx, const std::vector<std::string>& inputs,
               const std::vector<std::string>& dts, const AnalysisOptions& opt) {
    struct Inst {
        std::string id;
        volscale::VolumeSeries one_minute;
    };
    std::vector<Inst> instruments;
    for (const auto& input : inputs) {
        const std::string id = instrument_id(input);
        try {
            auto series = volscale::read_volume_series(input);
            if (!(series.dt == volscale::Scale::minutes(1)))
                throw volscale::ConfigError("taylor expects 1-minute input series");
            instruments.push_back({id, std::move(series)});
        } catch (const volscale::Error& e) {
            ctx.fail(id, "load", e.what());
        }
    }
    if (instruments.size() < 3)
        throw volscale::DataError("taylor: need at least 3 instrument series");

    const int mpd = instruments.front().one_minute.minutes_per_day;

    // mean-variance scaling per dt, on the original series only
    std::vector<volscale::ScalingFit> taylor_fits;
    std::ofstream fits_csv(ctx.out_dir / "taylor_fits.csv");
    fits_csv << "dt,dt_minutes,log10_dt,beta,stderr,r2,n\n";
    for (const auto& dt_text : dts) {
        const auto dt = volscale::Scale::parse(dt_text);
        std::vector<volscale::InstrumentSummary> summaries;
        for (const auto& inst : instruments) {
            volscale::CoarsenReport crep;
            auto series = dt == volscale::Scale::minutes(1)
                              ? inst.one_minute
                              : volscale::coarsen(inst.one_minute, dt, &crep);
            // a short trailing bin would distort the cross-bin moments
            if (crep.partial_tail_days > 0 && !series.empty()) {
                series.values.pop_back();
                series.day.pop_back();
                series.minute.pop_back();
            }
            summaries.push_back(volscale::summarize(series, inst.id));
        }
        std::ofstream pts(ctx.out_dir / ("taylor_points_" + dt.to_string() + ".csv"));
        pts << "instrument,mean,sd,log10_mean,log10_sd\n";
        for (const auto& s : summaries)
            pts << s.id << ',' << volscale::format_sig(s.mean_volume, opt.precision)
                << ',' << volscale::format_sig(s.sd_volume, opt.precision) << ','
                << volscale::format_sig(std::log10(s.mean_volume), opt.precision) << ','
                << (s.sd_volume > 0
                        ? volscale::format_sig(std::log10(s.sd_volume), opt.precision)
                        : "")
                << '\n';
        try {
            auto fit = volscale::fit_taylor(summaries);
            fit.dt_minutes = dt.trading_minutes(mpd);
            fits_csv << dt.to_string() << ',' << fit.dt_minutes << ','
                     << volscale::format_sig(std::log10(fit.dt_minutes), opt.precision)
                     << ',' << volscale::format_sig(fit.exponent, opt.precision) << ','
                     << volscale::format_sig(fit.se, opt.precision) << ','
                     << volscale::format_sig(fit.r2, opt.precision) << ',' << fit.n
                     << '\n';
            taylor_fits.push_back(std::move(fit));
        } catch (const volscale::Error& e) {
            ctx.fail(dt.to_string(), "taylor-fit", e.what());
        }
    }

    const auto beta_trend = volscale::fit_beta_trend(taylor_fits);

    // Hurst per instrument (original and adjusted) against mean volume
    const auto grid_for = [&](std::size_t n) {
        return volscale::make_scale_grid(n, opt.s_min, opt.s_max, opt.n_scales);
    };
    std::vector<std::pair<double, double>> h_orig, h_adj;
    std::ofstream hv(ctx.out_dir / "hurst_vs_volume.csv");
    hv << "instrument,log10_mean,H_orig,H_adj\n";
    for (const auto& inst : instruments) {
        try {
            const auto summary = volscale::summarize(inst.one_minute, inst.id);
            const auto grid = grid_for(inst.one_minute.size());
            const auto orig =
                volscale::dfa_hurst(inst.one_minute.values, grid, opt.detrend_order);
            h_orig.push_back({orig.fit.slope, summary.mean_volume});
            std::string adj_text;
            for (auto& variant : make_variants(ctx, inst.id, inst.one_minute)) {
                if (variant.name != "adj") continue;
                const auto adj =
                    volscale::dfa_hurst(variant.series.values, grid, opt.detrend_order);
                h_adj.push_back({adj.fit.slope, summary.mean_volume});
                adj_text = volscale::format_sig(adj.fit.slope, opt.precision);
            }
            hv << inst.id << ','
               << volscale::format_sig(std::log10(summary.mean_volume), opt.precision)
               << ',' << volscale::format_sig(orig.fit.slope, opt.precision) << ','
               << adj_text << '\n';
        } catch (const volscale::Error& e) {
            ctx.fail(inst.id, "hurst", e.what());
        }
    }

    std::vector<volscale::ScalingFit> hurst_fits;
    if (h_orig.size() >= 3)
        hurst_fits.push_back(volscale::fit_hurst_vs_volume(h_orig, "hurst-vs-volume-orig"));
    if (h_adj.size() >= 3)
        hurst_fits.push_back(volscale::fit_hurst_vs_volume(h_adj, "hurst-vs-volume-adj"));

    const auto gamma = volscale::gamma_consistency(beta_trend, hurst_fits);
    volscale::write_json(ctx.out_dir / "gamma_report.json", volscale::to_json(gamma));
    return ctx.failures.empty() ? 0 : 1;
}

// --- report -----------------------------------------------------------------

int run_report(RunContext& ctx, const std::string& input_dir, int precision) {
    std::vector<volscale::InstrumentRow> rows;
    std::vector<fs::path> orig_docs;
    for (const auto& entry : fs::directory_iterator(input_dir)) {
        const auto name = entry.path().filename().string();
        if (name.size() > 16 && name.ends_with("_orig_mfdfa.json"))
            orig_docs.push_back(entry.path());
    }
    std::sort(orig_docs.begin(), orig_docs.end());
    if (orig_docs.empty())
        throw volscale::DataError("report: no *_orig_mfdfa.json documents in " +
                                  input_dir);

    for (const auto& orig_path : orig_docs) {
        const auto orig = volscale::read_json(orig_path);
        const std::string id = orig.value("instrument", std::string{});
        volscale::InstrumentRow row;
        row.id = id;
        row.hurst_orig = orig.value("hurst", 0.0);
        row.hurst_orig_se = orig.value("hurst_stderr", 0.0);
        row.delta_h_orig = orig.value("delta_h", 0.0);
        row.delta_alpha_orig = orig.value("delta_alpha", 0.0);
        auto adj_path = orig_path;
        adj_path.replace_filename(id + "_adj_mfdfa.json");
        if (fs::exists(adj_path)) {
            const auto adj = volscale::read_json(adj_path);
            row.hurst_adj = adj.value("hurst", 0.0);
            row.hurst_adj_se = adj.value("hurst_stderr", 0.0);
            row.delta_h_adj = adj.value("delta_h", 0.0);
            row.delta_alpha_adj = adj.value("delta_alpha", 0.0);
        } else {
            ctx.fail(id, "report", "missing adjusted document " + adj_path.string());
        }
        rows.push_back(std::move(row));
    }
    volscale::write_instrument_table(ctx.out_dir / "instrument_table.csv",
                                     ctx.out_dir / "instrument_table.json", rows,
                                     precision);
    return ctx.failures.empty() ? 0 : 1;
}

const char* error_type(const std::exception& e) {
    if (dynamic_cast<const volscale::ConfigError*>(&e)) return "config";
    if (dynamic_cast<const volscale::DataError*>(&e)) return "data";
    return "runtime";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trading-volume scaling analysis: tick aggregation, intraday "
                 "patterns, DFA/MF-DFA and fluctuation-scaling fits"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string out_dir;
    std::string session_text = "09:30-11:30,13:00-15:00";
    std::uint64_t seed = 1;

    // synth
    auto* synth = app.add_subcommand("synth", "Generate synthetic series");
    std::string kind = "fgn";
    double hurst = 0.8, p = 0.3, beta = 0.75, mean_min = 1e2, mean_max = 1e4;
    std::size_t length = 1 << 16;
    int levels = 16, instruments = 50;
    bool randomize = false;
    synth->add_option("--kind", kind, "fgn | cascade | iid | universe")
        ->check(CLI::IsMember({"fgn", "cascade", "iid", "universe"}));
    synth->add_option("--hurst", hurst, "Hurst parameter (fgn)");
    synth->add_option("--length", length, "Series length (fgn/iid/universe)");
    synth->add_option("--p", p, "Cascade multiplier");
    synth->add_option("--levels", levels, "Cascade levels (length 2^levels)");
    synth->add_flag("--randomize", randomize, "Randomize cascade child order");
    synth->add_option("--beta", beta, "Planted fluctuation-scaling exponent");
    synth->add_option("--instruments", instruments, "Universe size");
    synth->add_option("--mean-min", mean_min, "Smallest planted mean");
    synth->add_option("--mean-max", mean_max, "Largest planted mean");

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Aggregate tick files into volume series");
    std::vector<std::string> ingest_inputs;
    std::string delimiter = ",", time_format = "%Y-%m-%d %H:%M:%S", header = "auto";
    int time_col = 0, size_col = 1;
    std::vector<std::string> ingest_dts{"1m"};
    ingest->add_option("--input", ingest_inputs, "Trade files (one per instrument)")
        ->required();
    ingest->add_option("--delimiter", delimiter, "Column delimiter");
    ingest->add_option("--time-format", time_format, "Timestamp format (strptime)");
    ingest->add_option("--time-col", time_col, "Timestamp column index");
    ingest->add_option("--size-col", size_col, "Size column index");
    ingest->add_option("--header", header, "Header row: auto | yes | no")
        ->check(CLI::IsMember({"auto", "yes", "no"}));
    ingest->add_option("--dt", ingest_dts, "Scales to emit, e.g. 1m 5m 1d 20d");

    // pattern
    auto* pattern = app.add_subcommand("pattern", "Intraday volume patterns");
    std::vector<std::string> pattern_inputs;
    int pattern_precision = 6;
    pattern->add_option("--input", pattern_inputs, "Volume series files")->required();
    pattern->add_option("--precision", pattern_precision, "Significant digits")
        ->envname("VOLSCALE_PRECISION");

    // dfa / mfdfa
    auto* dfa = app.add_subcommand("dfa", "Hurst index of original and adjusted series");
    auto* mfdfa = app.add_subcommand("mfdfa", "Multifractal analysis of original and "
                                              "adjusted series");
    std::vector<std::string> dfa_inputs, mfdfa_inputs;
    AnalysisOptions dfa_opt, mfdfa_opt;
    dfa->add_option("--input", dfa_inputs, "Volume series files")->required();
    dfa_opt.attach(dfa, false);
    mfdfa->add_option("--input", mfdfa_inputs, "Volume series files")->required();
    mfdfa_opt.attach(mfdfa, true);

    // taylor
    auto* taylor = app.add_subcommand("taylor", "Mean-variance scaling across "
                                                "instruments and time scales");
    std::vector<std::string> taylor_inputs;
    std::vector<std::string> taylor_dts{"1m", "2m", "5m", "10m", "30m", "60m",
                                        "120m", "1d", "5d", "20d"};
    AnalysisOptions taylor_opt;
    taylor->add_option("--input", taylor_inputs, "1-minute volume series files")
        ->required();
    taylor->add_option("--dt", taylor_dts, "Scale grid for the exponent trend");
    taylor_opt.attach(taylor, false);

    // report
    auto* report = app.add_subcommand("report", "Consolidated per-instrument table");
    std::string report_input;
    int report_precision = 6;
    report->add_option("--input", report_input, "Directory of mfdfa documents")
        ->required();
    report->add_option("--precision", report_precision, "Significant digits")
        ->envname("VOLSCALE_PRECISION");

    for (auto* cmd : {synth, ingest, pattern, dfa, mfdfa, taylor, report}) {
        cmd->add_option("--out", out_dir, "Output directory")
            ->required()
            ->envname("VOLSCALE_OUT");
        cmd->add_option("--session", session_text, "Trading windows, HH:MM-HH:MM[,...]")
            ->envname("VOLSCALE_SESSION");
    }
    for (auto* cmd : {synth, ingest, pattern, dfa, mfdfa, taylor})
        cmd->add_option("--seed", seed, "Generator seed")->envname("VOLSCALE_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunContext ctx;
    int status = 0;
    try {
        const auto session = volscale::SessionSpec::parse(session_text);
        ctx.out_dir = out_dir;
        fs::create_directories(ctx.out_dir);
        ctx.config["session"] = session_text;
        ctx.config["out"] = out_dir;

        if (app.got_subcommand(synth)) {
            ctx.command = "synth";
            ctx.config["kind"] = kind;
            ctx.config["seed"] = seed;
            ctx.config["length"] = length;
            ctx.config["hurst"] = hurst;
            ctx.config["p"] = p;
            ctx.config["levels"] = levels;
            ctx.config["randomize"] = randomize;
            ctx.config["beta"] = beta;
            ctx.config["instruments"] = instruments;
            ctx.config["mean_min"] = mean_min;
            ctx.config["mean_max"] = mean_max;
            status = run_synth(ctx, kind, hurst, length, p, levels, randomize, beta,
                               instruments, mean_min, mean_max, seed, session);
        } else if (app.got_subcommand(ingest)) {
            ctx.command = "ingest";
            ctx.inputs = ingest_inputs;
            volscale::TradeFormat fmt;
            if (delimiter.size() != 1)
                throw volscale::ConfigError("delimiter must be one character");
            fmt.delimiter = delimiter[0];
            fmt.time_format = time_format;
            fmt.time_column = time_col;
            fmt.size_column = size_col;
            fmt.header = header == "yes"  ? volscale::TradeFormat::Header::yes
                         : header == "no" ? volscale::TradeFormat::Header::no
                                          : volscale::TradeFormat::Header::automatic;
            ctx.config["delimiter"] = delimiter;
            ctx.config["time_format"] = time_format;
            ctx.config["time_col"] = time_col;
            ctx.config["size_col"] = size_col;
            ctx.config["header"] = header;
            ctx.config["dt"] = ingest_dts;
            status = run_ingest(ctx, ingest_inputs, fmt, ingest_dts, session);
        } else if (app.got_subcommand(pattern)) {
            ctx.command = "pattern";
            ctx.inputs = pattern_inputs;
            ctx.config["precision"] = pattern_precision;
            status = run_pattern(ctx, pattern_inputs, pattern_precision);
        } else if (app.got_subcommand(dfa)) {
            ctx.command = "dfa";
            ctx.inputs = dfa_inputs;
            ctx.config.update(dfa_opt.to_json());
            status = run_dfa(ctx, dfa_inputs, dfa_opt, false);
        } else if (app.got_subcommand(mfdfa)) {
            ctx.command = "mfdfa";
            ctx.inputs = mfdfa_inputs;
            ctx.config.update(mfdfa_opt.to_json());
            status = run_dfa(ctx, mfdfa_inputs, mfdfa_opt, true);
        } else if (app.got_subcommand(taylor)) {
            ctx.command = "taylor";
            ctx.inputs = taylor_inputs;
            ctx.config["dt"] = taylor_dts;
            ctx.config.update(taylor_opt.to_json());
            status = run_taylor(ctx, taylor_inputs, taylor_dts, taylor_opt);
        } else if (app.got_subcommand(report)) {
            ctx.command = "report";
            ctx.inputs = {report_input};
            ctx.config["precision"] = report_precision;
            status = run_report(ctx, report_input, report_precision);
        }
        write_manifest(ctx);
    } catch (const std::exception& e) {
        const json doc{{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
        std::cerr << doc.dump() << "\n";
        if (!ctx.out_dir.empty() && fs::exists(ctx.out_dir)) {
            try {
                volscale::write_json(ctx.out_dir / "error.json", doc);
                write_manifest(ctx);
            } catch (...) {
            }
        }
        return 1;
    }
    return status;
}
