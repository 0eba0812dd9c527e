// Command-line front end for the well-log interpretation pipeline.

#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wli/pipeline.hpp"

namespace {

using namespace wli;

pipeline::PipelineConfig config_or_default(const std::string& path) {
    if (path.empty()) return pipeline::PipelineConfig{};
    return pipeline::load_config(path);
}

int run_stage(const std::string& stage, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "wli " << stage << ": error: " << e.what() << "\n";
        return 1;
    }
}

void check_model_config(const std::string& fst_path,
                        const pipeline::PipelineConfig& config) {
    auto stored_path =
        std::filesystem::path(fst_path).parent_path() / "config.json";
    if (!std::filesystem::exists(stored_path)) return;
    pipeline::PipelineConfig stored = pipeline::load_config(stored_path);
    if (stored.cut_points.t1 != config.cut_points.t1 ||
        stored.cut_points.t2 != config.cut_points.t2 ||
        stored.cut_points.t3 != config.cut_points.t3 ||
        stored.gr_min != config.gr_min || stored.gr_max != config.gr_max) {
        throw std::invalid_argument(
            "config does not match the one the models were trained with (" +
            stored_path.string() + ")");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gamma-ray well-log depositional environment interpreter"};
    app.require_subcommand(1);

    std::string log_path, vsh_path, segments_path, symbols_path, units_path;
    std::string anchors_path, attrs_path, team_path, fst_path, target_path;
    std::string config_path, spec_path, out_path, out_dir = ".";
    std::string stats_path, labels_path, svg_path;
    double start_depth = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int runs = 0;
    bool reference_plan = false;

    auto* convert = app.add_subcommand("convert", "GR log to Vsh series");
    convert->add_option("--log", log_path)->required();
    convert->add_option("--config", config_path);
    convert->add_option("--out", out_path)->required();

    auto* seg = app.add_subcommand("segment", "Vsh series to segments");
    seg->add_option("--vsh", vsh_path)->required();
    seg->add_option("--anchors", anchors_path);
    seg->add_option("--out", out_path)->required();
    seg->add_option("--units-out", units_path);

    auto* sym = app.add_subcommand("symbolize", "segments to fuzzy symbols");
    sym->add_option("--segments", segments_path)->required();
    sym->add_option("--config", config_path);
    sym->add_option("--out", out_path)->required();

    auto* att = app.add_subcommand("attrs", "per-unit attribute table");
    att->add_option("--symbols", symbols_path)->required();
    att->add_option("--units", units_path)->required();
    att->add_option("--out", out_path)->required();
    att->add_option("--target-out", target_path);

    auto* tc = app.add_subcommand("train-classifiers",
                                  "co-evolve the five-rule team");
    tc->add_option("--attrs", attrs_path)->required();
    tc->add_option("--config", config_path);
    tc->add_option("--runs", runs);
    tc->add_option("--seed", seed)->each([&](const std::string&) {
        seed_given = true;
    });
    tc->add_option("--out", out_path)->required();
    tc->add_option("--stats", stats_path);

    auto* tf = app.add_subcommand("train-fst", "evolve the transducer");
    tf->add_option("--symbols", symbols_path)->required();
    tf->add_option("--team", team_path)->required();
    tf->add_option("--target", target_path)->required();
    tf->add_option("--config", config_path);
    tf->add_option("--seed", seed)->each([&](const std::string&) {
        seed_given = true;
    });
    tf->add_option("--out", out_path)->required();
    tf->add_option("--stats", stats_path);

    auto* interp = app.add_subcommand("interpret",
                                      "label a symbol series or raw log");
    interp->add_option("--symbols", symbols_path);
    interp->add_option("--log", log_path);
    interp->add_option("--team", team_path)->required();
    interp->add_option("--fst", fst_path)->required();
    interp->add_option("--config", config_path);
    interp->add_option("--start-depth", start_depth);
    interp->add_option("--out", out_path)->required();

    auto* synth = app.add_subcommand("synth", "generate a synthetic log");
    synth->add_option("--spec", spec_path);
    synth->add_flag("--reference-plan", reference_plan,
                    "use the built-in 50-unit plan");
    synth->add_option("--seed", seed);
    synth->add_option("--out-dir", out_dir);

    auto* train = app.add_subcommand("train", "full training pipeline");
    train->add_option("--log", log_path)->required();
    train->add_option("--anchors", anchors_path)->required();
    train->add_option("--config", config_path);
    train->add_option("--out-dir", out_dir);

    auto* rep = app.add_subcommand("report", "team classification report");
    rep->add_option("--attrs", attrs_path)->required();
    rep->add_option("--team", team_path)->required();
    rep->add_option("--out", out_path)->required();
    rep->add_option("--svg", svg_path);
    rep->add_option("--log", log_path);
    rep->add_option("--segments", segments_path);
    rep->add_option("--labels", labels_path);

    CLI11_PARSE(app, argc, argv);

    if (convert->parsed()) {
        return run_stage("convert", [&] {
            auto config = config_or_default(config_path);
            WellLog log = io::load_log(log_path);
            VshSeries vsh = vsh_convert(log, config.gr_min, config.gr_max);
            io::save_vsh(vsh, log.depths.front(), out_path);
        });
    }
    if (seg->parsed()) {
        return run_stage("segment", [&] {
            double depth0 = 0.0;
            VshSeries vsh = io::load_vsh(vsh_path, depth0);
            SegmentationResult result = segment(vsh);
            if (!anchors_path.empty()) {
                auto anchors = io::load_anchors(anchors_path, depth0,
                                                vsh.interval, vsh.size());
                AlignmentResult aligned = align_labels(result, anchors, vsh);
                io::save_segments(aligned.segmentation, out_path);
                if (!units_path.empty()) {
                    io::save_units(aligned.units, units_path);
                }
            } else {
                io::save_segments(result, out_path);
            }
        });
    }
    if (sym->parsed()) {
        return run_stage("symbolize", [&] {
            auto config = config_or_default(config_path);
            SegmentationResult segments = io::load_segments(segments_path);
            MFBank bank = build_mfs(config.cut_points);
            SymbolSeries symbols = symbolize_series(bank, segments);
            std::vector<double> means;
            for (const Segment& s : segments.segments) {
                means.push_back(s.mean);
            }
            io::save_symbols(symbols, means, out_path);
        });
    }
    if (att->parsed()) {
        return run_stage("attrs", [&] {
            SymbolSeries symbols = io::load_symbols(symbols_path);
            auto spans = io::load_units(units_path);
            auto units = materialize_units(spans, symbols);
            gp::TrainingSet training;
            for (const LabeledUnit& u : units) {
                training.push_back({compute_attributes(u), u.label});
            }
            io::save_training(training, out_path);
            if (!target_path.empty()) {
                io::save_target(fst::build_target(symbols, units),
                                target_path);
            }
        });
    }
    if (tc->parsed()) {
        return run_stage("train-classifiers", [&] {
            auto config = config_or_default(config_path);
            gp::CoevolutionConfig gp_cfg = config.gp;
            if (runs > 0) gp_cfg.runs = runs;
            gp_cfg.rng_seed = seed_given
                                  ? seed
                                  : Rng::substream(config.seed, {1}).next();
            gp::TrainingSet training = io::load_training(attrs_path);
            gp::MultiRunResult result = gp::coevolve_runs(training, gp_cfg);
            io::save_team(result.best.best_team, out_path);
            if (!stats_path.empty()) {
                io::save_gp_stats(result.best.stats, stats_path);
            }
            std::cout << "best team accuracy "
                      << result.best.best_accuracy << " (run "
                      << result.best_run << ")\n";
        });
    }
    if (tf->parsed()) {
        return run_stage("train-fst", [&] {
            auto config = config_or_default(config_path);
            fst::GaConfig ga_cfg = config.ga;
            ga_cfg.rng_seed = seed_given
                                  ? seed
                                  : Rng::substream(config.seed, {2}).next();
            SymbolSeries symbols = io::load_symbols(symbols_path);
            gp::ClassifierTeam team = io::load_team(team_path);
            fst::TargetSequence target = io::load_target(target_path);
            fst::EvolveFstResult result = fst::evolve_fst(
                symbols, fst::team_oracle(team), target, ga_cfg);
            io::save_transducer(result.best, out_path);
            if (!stats_path.empty()) {
                io::save_fst_stats(result.stats, stats_path);
            }
            std::cout << "best transducer: "
                      << result.best_fitness.mismatches << " mismatches over "
                      << symbols.size() << " symbols\n";
        });
    }
    if (interp->parsed()) {
        return run_stage("interpret", [&] {
            // Without an explicit config, adopt the one stored beside the
            // model; with one, insist it matches what the model was
            // trained with.
            auto stored_path =
                std::filesystem::path(fst_path).parent_path() / "config.json";
            pipeline::PipelineConfig config;
            if (config_path.empty() && std::filesystem::exists(stored_path)) {
                config = pipeline::load_config(stored_path);
            } else {
                config = config_or_default(config_path);
                check_model_config(fst_path, config);
            }
            gp::ClassifierTeam team = io::load_team(team_path);
            fst::Transducer transducer = io::load_transducer(fst_path);
            std::vector<pipeline::InterpretedRow> rows;
            if (!symbols_path.empty()) {
                SymbolSeries symbols = io::load_symbols(symbols_path);
                rows = pipeline::interpret_symbols(symbols, start_depth, team,
                                                   transducer);
            } else if (!log_path.empty()) {
                WellLog log = io::load_log(log_path);
                rows = pipeline::interpret_log(log, team, transducer, config);
            } else {
                throw std::invalid_argument("need --symbols or --log");
            }
            pipeline::save_labels(rows, out_path);
        });
    }
    if (synth->parsed()) {
        return run_stage("synth", [&] {
            pipeline::SynthSpec spec;
            if (reference_plan) {
                spec = pipeline::reference_plan(seed);
            } else if (!spec_path.empty()) {
                spec = pipeline::load_synth_spec(spec_path);
            } else {
                throw std::invalid_argument(
                    "need --spec or --reference-plan");
            }
            std::filesystem::create_directories(out_dir);
            auto [log, anchors] = pipeline::synth_log(spec);
            auto dir = std::filesystem::path(out_dir);
            io::save_log(log, dir / "log.csv");
            io::save_anchors(anchors, log.depths.front(), log.interval,
                             dir / "anchors.csv");
            pipeline::save_synth_spec(spec, dir / "synth_spec.json");
        });
    }
    if (train->parsed()) {
        return run_stage("train", [&] {
            auto config = config_or_default(config_path);
            WellLog log = io::load_log(log_path);
            auto anchors = io::load_anchors(anchors_path, log.depths.front(),
                                            log.interval, log.size());
            pipeline::TrainResult result =
                pipeline::train_pipeline(log, anchors, config, out_dir);
            std::cout << "team accuracy " << result.team_accuracy
                      << ", transducer mismatches "
                      << result.fst_fitness.mismatches << "/"
                      << result.symbols.size() << "\n";
        });
    }
    if (rep->parsed()) {
        return run_stage("report", [&] {
            gp::TrainingSet training = io::load_training(attrs_path);
            gp::ClassifierTeam team = io::load_team(team_path);
            io::write_file(out_path, pipeline::render_report(team, training));
            if (!svg_path.empty()) {
                if (log_path.empty() || segments_path.empty() ||
                    labels_path.empty()) {
                    throw std::invalid_argument(
                        "--svg needs --log, --segments and --labels");
                }
                WellLog log = io::load_log(log_path);
                SegmentationResult segments =
                    io::load_segments(segments_path);
                // Re-derive row depth ranges from the labels file.
                auto rows_csv = io::read_file(labels_path);
                (void)rows_csv;
                SymbolSeries symbols;
                std::vector<pipeline::InterpretedRow> rows;
                {
                    // labels.csv: index,symbol,top_depth,bottom_depth,label
                    std::istringstream in(io::read_file(labels_path));
                    std::string line;
                    std::getline(in, line);
                    while (std::getline(in, line)) {
                        if (line.empty()) continue;
                        pipeline::InterpretedRow r;
                        std::size_t p0 = line.find(',');
                        std::size_t p1 = line.find(',', p0 + 1);
                        std::size_t p2 = line.find(',', p1 + 1);
                        std::size_t p3 = line.find(',', p2 + 1);
                        r.index = std::stoul(line.substr(0, p0));
                        r.symbol = parse_symbol(
                            line.substr(p0 + 1, p1 - p0 - 1));
                        r.top_depth =
                            std::stod(line.substr(p1 + 1, p2 - p1 - 1));
                        r.bottom_depth =
                            std::stod(line.substr(p2 + 1, p3 - p2 - 1));
                        r.label = parse_label(line.substr(p3 + 1));
                        rows.push_back(r);
                    }
                }
                io::write_file(
                    svg_path,
                    pipeline::render_track_svg(log, segments, rows));
            }
        });
    }
    return 0;
}
