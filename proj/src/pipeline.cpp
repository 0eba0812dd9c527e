#include "wli/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace wli::pipeline {

namespace {

using nlohmann::json;

json gp_to_json(const gp::CoevolutionConfig& c) {
    return json{{"population_size", c.population_size},
                {"max_generations", c.max_generations},
                {"tournament_size", c.tournament_size},
                {"elitism", c.elitism},
                {"max_init_depth", c.max_init_depth},
                {"size_penalty_threshold", c.size_penalty_threshold},
                {"op_rates", c.op_rates},
                {"runs", c.runs},
                {"early_stop_accuracy", c.early_stop_accuracy}};
}

void gp_from_json(const json& j, gp::CoevolutionConfig& c) {
    j.at("population_size").get_to(c.population_size);
    j.at("max_generations").get_to(c.max_generations);
    j.at("tournament_size").get_to(c.tournament_size);
    j.at("elitism").get_to(c.elitism);
    j.at("max_init_depth").get_to(c.max_init_depth);
    j.at("size_penalty_threshold").get_to(c.size_penalty_threshold);
    j.at("op_rates").get_to(c.op_rates);
    j.at("runs").get_to(c.runs);
    j.at("early_stop_accuracy").get_to(c.early_stop_accuracy);
}

json ga_to_json(const fst::GaConfig& c) {
    return json{{"population_size", c.population_size},
                {"max_generations", c.max_generations},
                {"tournament_size", c.tournament_size},
                {"elitism", c.elitism},
                {"mutation_rate", c.mutation_rate},
                {"n_states", c.n_states}};
}

void ga_from_json(const json& j, fst::GaConfig& c) {
    j.at("population_size").get_to(c.population_size);
    j.at("max_generations").get_to(c.max_generations);
    j.at("tournament_size").get_to(c.tournament_size);
    j.at("elitism").get_to(c.elitism);
    j.at("mutation_rate").get_to(c.mutation_rate);
    j.at("n_states").get_to(c.n_states);
}

}  // namespace

std::string render_config(const PipelineConfig& c) {
    json j;
    j["gr_min"] = c.gr_min ? json(*c.gr_min) : json(nullptr);
    j["gr_max"] = c.gr_max ? json(*c.gr_max) : json(nullptr);
    j["cut_points"] = {c.cut_points.t1, c.cut_points.t2, c.cut_points.t3};
    j["interval"] = c.interval;
    j["seed"] = c.seed;
    j["gp"] = gp_to_json(c.gp);
    j["ga"] = ga_to_json(c.ga);
    return j.dump(2) + "\n";
}

PipelineConfig parse_config(const std::string& text) {
    json j = json::parse(text);
    PipelineConfig c;
    if (j.contains("gr_min") && !j["gr_min"].is_null()) {
        c.gr_min = j["gr_min"].get<double>();
    }
    if (j.contains("gr_max") && !j["gr_max"].is_null()) {
        c.gr_max = j["gr_max"].get<double>();
    }
    if (j.contains("cut_points")) {
        auto cuts = j["cut_points"].get<std::array<double, 3>>();
        c.cut_points = {cuts[0], cuts[1], cuts[2]};
    }
    if (j.contains("interval")) j["interval"].get_to(c.interval);
    if (j.contains("seed")) j["seed"].get_to(c.seed);
    if (j.contains("gp")) gp_from_json(j["gp"], c.gp);
    if (j.contains("ga")) ga_from_json(j["ga"], c.ga);
    return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    return parse_config(io::read_file(path));
}

void save_config(const PipelineConfig& config,
                 const std::filesystem::path& path) {
    io::write_file(path, render_config(config));
}

SynthSpec load_synth_spec(const std::filesystem::path& path) {
    json j = json::parse(io::read_file(path));
    SynthSpec spec;
    for (const auto& u : j.at("units")) {
        SynthUnit unit;
        unit.label = parse_label(u.at("label").get<std::string>());
        u.at("thickness").get_to(unit.thickness);
        if (!(unit.thickness > 0.0)) {
            throw std::invalid_argument("unit thickness must be positive");
        }
        spec.units.push_back(unit);
    }
    if (j.contains("start_depth")) j["start_depth"].get_to(spec.start_depth);
    if (j.contains("interval")) j["interval"].get_to(spec.interval);
    if (j.contains("noise")) j["noise"].get_to(spec.noise);
    if (j.contains("seed")) j["seed"].get_to(spec.seed);
    return spec;
}

void save_synth_spec(const SynthSpec& spec,
                     const std::filesystem::path& path) {
    json j;
    j["units"] = json::array();
    for (const SynthUnit& u : spec.units) {
        j["units"].push_back({{"label", std::string(to_string(u.label))},
                              {"thickness", u.thickness}});
    }
    j["start_depth"] = spec.start_depth;
    j["interval"] = spec.interval;
    j["noise"] = spec.noise;
    j["seed"] = spec.seed;
    io::write_file(path, j.dump(2) + "\n");
}

namespace {

// Per-label signal model: candidate block levels (API), block length, and a
// noise multiplier. Levels are chosen so the Vsh means land in distinct
// symbol regions under the (0,150) bounds and default cut points.
struct LabelSignal {
    std::vector<double> levels;
    double block_feet;
    double noise_scale;
    bool alternate;  // cycle the levels instead of drawing at random
};

const LabelSignal& signal_for(DepositionLabel l) {
    static const LabelSignal a{{12.0, 15.0, 18.0}, 15.0, 1.0, false};
    static const LabelSignal oa{{40.0, 55.0}, 12.0, 1.5, false};
    static const LabelSignal m{{70.0, 120.0}, 12.0, 2.0, true};
    static const LabelSignal ob{{110.0, 120.0, 130.0}, 12.0, 2.5, false};
    static const LabelSignal mtc{{30.0, 100.0, 140.0}, 10.0, 3.0, false};
    switch (l) {
        case DepositionLabel::A: return a;
        case DepositionLabel::OA: return oa;
        case DepositionLabel::M: return m;
        case DepositionLabel::OB: return ob;
        case DepositionLabel::MTC: return mtc;
        default: throw std::invalid_argument("null has no signal model");
    }
}

double gaussian(Rng& rng) {
    // Box-Muller; one draw per call keeps the stream simple.
    double u1 = 1.0 - rng.real();
    double u2 = rng.real();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace

std::pair<WellLog, std::vector<LabelAnchor>> synth_log(const SynthSpec& spec) {
    if (spec.units.empty()) {
        throw std::invalid_argument("synthetic plan has no units");
    }
    Rng rng = Rng::substream(spec.seed, {0xb10c});
    WellLog log;
    log.interval = spec.interval;
    std::vector<LabelAnchor> anchors;

    for (const SynthUnit& unit : spec.units) {
        const LabelSignal& sig = signal_for(unit.label);
        auto samples = static_cast<std::size_t>(
            std::llround(unit.thickness / spec.interval));
        if (samples == 0) samples = 1;
        auto block = static_cast<std::size_t>(
            std::llround(sig.block_feet / spec.interval));
        if (block == 0) block = 1;
        std::size_t produced = 0;
        std::size_t level_idx = rng.index(sig.levels.size());
        while (produced < samples) {
            double level = sig.levels[level_idx];
            if (sig.alternate) {
                level_idx = (level_idx + 1) % sig.levels.size();
            } else {
                level_idx = rng.index(sig.levels.size());
            }
            std::size_t len = std::min(block, samples - produced);
            // Avoid a trailing sliver shorter than half a block.
            if (samples - produced - len < block / 2) {
                len = samples - produced;
            }
            for (std::size_t i = 0; i < len; ++i) {
                double gr =
                    level + spec.noise * sig.noise_scale * gaussian(rng);
                log.readings.push_back(std::clamp(gr, 0.0, 150.0));
            }
            produced += len;
        }
        anchors.push_back(
            {log.readings.size() - 1, unit.label});
    }
    log.depths.resize(log.readings.size());
    for (std::size_t i = 0; i < log.depths.size(); ++i) {
        log.depths[i] = spec.start_depth + i * spec.interval;
    }
    return {std::move(log), std::move(anchors)};
}

SynthSpec reference_plan(std::uint64_t seed) {
    SynthSpec spec;
    spec.seed = seed;
    std::vector<DepositionLabel> labels;
    auto add = [&](DepositionLabel l, int count) {
        for (int i = 0; i < count; ++i) labels.push_back(l);
    };
    add(DepositionLabel::A, 4);
    add(DepositionLabel::OA, 9);
    add(DepositionLabel::M, 14);
    add(DepositionLabel::OB, 19);
    add(DepositionLabel::MTC, 4);
    Rng rng = Rng::substream(seed, {0x91a2});
    for (std::size_t i = labels.size() - 1; i > 0; --i) {
        std::swap(labels[i], labels[rng.index(i + 1)]);
    }
    for (DepositionLabel l : labels) {
        spec.units.push_back({l, 24.0 + 2.0 * rng.index(9)});  // 24-40 ft
    }
    return spec;
}

TrainResult train_pipeline(const WellLog& log,
                           const std::vector<LabelAnchor>& anchors,
                           const PipelineConfig& config,
                           const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    log.validate();

    TrainResult result;
    double start_depth = log.depths.front();

    // Steps 1-2: normalize and segment.
    VshSeries vsh = vsh_convert(log, config.gr_min, config.gr_max);
    io::save_vsh(vsh, start_depth, out_dir / "vsh.csv");
    SegmentationResult raw = segment(vsh);

    // Step 3: align human labels with the machine boundaries.
    AlignmentResult aligned = align_labels(raw, anchors, vsh);
    io::save_segments(aligned.segmentation, out_dir / "segments.csv");
    io::save_units(aligned.units, out_dir / "units.csv");

    // Step 4: fuzzy symbolization.
    result.bank = build_mfs(config.cut_points);
    result.symbols = symbolize_series(result.bank, aligned.segmentation);
    std::vector<double> means;
    for (const Segment& s : aligned.segmentation.segments) {
        means.push_back(s.mean);
    }
    io::save_symbols(result.symbols, means, out_dir / "symbols.csv");

    // Step 5: per-unit attributes.
    std::vector<LabeledUnit> units =
        materialize_units(aligned.units, result.symbols);
    for (const LabeledUnit& u : units) {
        result.training.push_back({compute_attributes(u), u.label});
    }
    io::save_training(result.training, out_dir / "attrs.csv");

    // Step 6: co-evolve the classifier team.
    gp::CoevolutionConfig gp_cfg = config.gp;
    gp_cfg.rng_seed = Rng::substream(config.seed, {1}).next();
    gp::MultiRunResult gp_result = gp::coevolve_runs(result.training, gp_cfg);
    result.team = gp_result.best.best_team.clone();
    result.team_accuracy = gp_result.best.best_accuracy;
    io::save_team(result.team, out_dir / "team.txt");
    io::save_gp_stats(gp_result.best.stats, out_dir / "gp_stats.csv");

    // Step 7: evolve the transducer against the aligned target.
    result.target = fst::build_target(result.symbols, units);
    io::save_target(result.target, out_dir / "target.csv");
    fst::GaConfig ga_cfg = config.ga;
    ga_cfg.rng_seed = Rng::substream(config.seed, {2}).next();
    fst::EvolveFstResult fst_result = fst::evolve_fst(
        result.symbols, fst::team_oracle(result.team), result.target, ga_cfg);
    result.transducer = fst_result.best;
    result.fst_fitness = fst_result.best_fitness;
    io::save_transducer(result.transducer, out_dir / "fst.txt");
    io::save_fst_stats(fst_result.stats, out_dir / "fst_stats.csv");

    // Final artifacts: interpreted labels, report, depth track, config echo.
    std::vector<InterpretedRow> rows = interpret_symbols(
        result.symbols, start_depth, result.team, result.transducer);
    save_labels(rows, out_dir / "labels.csv");
    io::write_file(out_dir / "report.csv",
                   render_report(result.team, result.training));
    io::write_file(out_dir / "track.svg",
                   render_track_svg(log, aligned.segmentation, rows));
    save_config(config, out_dir / "config.json");
    return result;
}

std::vector<InterpretedRow> interpret_symbols(const SymbolSeries& symbols,
                                              double start_depth,
                                              const gp::ClassifierTeam& team,
                                              const fst::Transducer& t) {
    fst::TransducerRun run =
        fst::fst_run(t, symbols, fst::team_oracle(team));
    std::vector<InterpretedRow> rows;
    double depth = start_depth;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        InterpretedRow row;
        row.index = i;
        row.symbol = symbols.items[i].symbol;
        row.top_depth = depth;
        depth += symbols.items[i].thickness;
        row.bottom_depth = depth;
        row.label = run.outputs[i];
        rows.push_back(row);
    }
    return rows;
}

std::vector<InterpretedRow> interpret_log(const WellLog& log,
                                          const gp::ClassifierTeam& team,
                                          const fst::Transducer& transducer,
                                          const PipelineConfig& config) {
    log.validate();
    VshSeries vsh = vsh_convert(log, config.gr_min, config.gr_max);
    SegmentationResult segments = segment(vsh);
    MFBank bank = build_mfs(config.cut_points);
    SymbolSeries symbols = symbolize_series(bank, segments);
    return interpret_symbols(symbols, log.depths.front(), team, transducer);
}

void save_labels(const std::vector<InterpretedRow>& rows,
                 const std::filesystem::path& path) {
    std::string out = "index,symbol,top_depth,bottom_depth,label\n";
    for (const InterpretedRow& r : rows) {
        out += std::to_string(r.index) + ',' +
               std::string(to_string(r.symbol)) + ',' +
               io::format_double(r.top_depth) + ',' +
               io::format_double(r.bottom_depth) + ',' +
               std::string(to_string(r.label)) + '\n';
    }
    io::write_file(path, out);
}

std::string render_report(const gp::ClassifierTeam& team,
                          const gp::TrainingSet& training) {
    // Confusion counts, actual label per row, plus row percentages.
    int counts[kLabelCount][kLabelCount] = {};
    for (const auto& ex : training) {
        DepositionLabel predicted = gp::team_classify(team, ex.attrs);
        counts[label_index(ex.label)][label_index(predicted)]++;
    }
    std::string out = "label";
    for (DepositionLabel l : all_labels()) {
        out += ',';
        out += to_string(l);
    }
    for (DepositionLabel l : all_labels()) {
        out += ',';
        out += to_string(l);
        out += '%';
    }
    out += '\n';
    for (int a = 0; a < kLabelCount; ++a) {
        int total = 0;
        for (int p = 0; p < kLabelCount; ++p) total += counts[a][p];
        out += to_string(static_cast<DepositionLabel>(a));
        for (int p = 0; p < kLabelCount; ++p) {
            out += ',' + std::to_string(counts[a][p]);
        }
        for (int p = 0; p < kLabelCount; ++p) {
            double pct =
                total > 0 ? 100.0 * counts[a][p] / total : 0.0;
            out += ',' + io::format_double(pct);
        }
        out += '\n';
    }
    return out;
}

namespace {

const char* label_color(DepositionLabel l) {
    switch (l) {
        case DepositionLabel::A: return "#e6b800";
        case DepositionLabel::OA: return "#d98e04";
        case DepositionLabel::M: return "#8c6d31";
        case DepositionLabel::OB: return "#6b8e23";
        case DepositionLabel::MTC: return "#a0522d";
        default: return "#dddddd";
    }
}

}  // namespace

std::string render_track_svg(const WellLog& log,
                             const SegmentationResult& segments,
                             const std::vector<InterpretedRow>& rows) {
    const double width = 420.0;
    const double curve_width = 300.0;
    const double band_x = 320.0;
    const double band_width = 60.0;
    const double height = 800.0;
    const double top = log.depths.front();
    const double bottom = log.depths.back();
    auto y_of = [&](double depth) {
        return (depth - top) / (bottom - top) * height;
    };
    auto x_of = [&](double gr) {
        return std::clamp(gr, 0.0, 150.0) / 150.0 * curve_width;
    };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
        io::format_double(width) + "\" height=\"" + io::format_double(height) +
        "\">\n";
    for (const InterpretedRow& r : rows) {
        if (r.label == DepositionLabel::Null) continue;
        svg += "<rect x=\"" + io::format_double(band_x) + "\" y=\"" +
               io::format_double(y_of(r.top_depth)) + "\" width=\"" +
               io::format_double(band_width) + "\" height=\"" +
               io::format_double(y_of(r.bottom_depth) - y_of(r.top_depth)) +
               "\" fill=\"" + label_color(r.label) + "\"/>\n";
    }
    for (const Segment& s : segments.segments) {
        double depth = top + (s.end_index + 1) * log.interval;
        svg += "<line x1=\"0\" y1=\"" + io::format_double(y_of(depth)) +
               "\" x2=\"" + io::format_double(curve_width) + "\" y2=\"" +
               io::format_double(y_of(depth)) +
               "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\" "
           "points=\"";
    for (std::size_t i = 0; i < log.size(); ++i) {
        if (i) svg += ' ';
        svg += io::format_double(x_of(log.readings[i])) + ',' +
               io::format_double(y_of(log.depths[i]));
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace wli::pipeline
