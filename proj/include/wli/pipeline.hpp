#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wli/fst/transducer.hpp"
#include "wli/fuzzysym.hpp"
#include "wli/gp/coevolve.hpp"
#include "wli/io.hpp"
#include "wli/segmenter.hpp"

namespace wli::pipeline {

struct PipelineConfig {
    std::optional<double> gr_min;
    std::optional<double> gr_max;
    CutPoints cut_points;
    double interval = 0.5;
    std::uint64_t seed = 1;
    gp::CoevolutionConfig gp;
    fst::GaConfig ga;
};

PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const PipelineConfig& config,
                 const std::filesystem::path& path);
std::string render_config(const PipelineConfig& config);
PipelineConfig parse_config(const std::string& json_text);

// --- synthetic log generation ------------------------------------------

struct SynthUnit {
    DepositionLabel label = DepositionLabel::A;
    double thickness = 30.0;  // feet
};

struct SynthSpec {
    std::vector<SynthUnit> units;
    double start_depth = 4200.0;
    double interval = 0.5;
    double noise = 1.0;  // API standard deviation
    std::uint64_t seed = 0;
};

SynthSpec load_synth_spec(const std::filesystem::path& path);
void save_synth_spec(const SynthSpec& spec,
                     const std::filesystem::path& path);

// Deterministic piecewise-blocky GR generator keyed to the per-label
// signatures (A low and blocky, OA weakly blocky, M high serrated, OB
// irregular high, MTC chaotic). Anchors mark unit ends.
std::pair<WellLog, std::vector<LabelAnchor>> synth_log(const SynthSpec& spec);

// A 50-unit plan with the 4/9/14/19/4 class balance.
SynthSpec reference_plan(std::uint64_t seed);

// --- orchestration -----------------------------------------------------

struct TrainResult {
    MFBank bank;
    gp::ClassifierTeam team;
    fst::Transducer transducer;
    double team_accuracy = 0.0;
    fst::FstFitness fst_fitness;
    gp::TrainingSet training;
    SymbolSeries symbols;
    fst::TargetSequence target;
};

// Steps 1-7 end to end; every intermediate artifact and both models are
// written under out_dir.
TrainResult train_pipeline(const WellLog& log,
                           const std::vector<LabelAnchor>& anchors,
                           const PipelineConfig& config,
                           const std::filesystem::path& out_dir);

struct InterpretedRow {
    std::size_t index = 0;
    VshSymbol symbol = VshSymbol::a;
    double top_depth = 0.0;
    double bottom_depth = 0.0;
    DepositionLabel label = DepositionLabel::Null;
};

// New-log path: steps 1, 2, 4 (no anchor alignment), then a transducer run.
std::vector<InterpretedRow> interpret_log(const WellLog& log,
                                          const gp::ClassifierTeam& team,
                                          const fst::Transducer& transducer,
                                          const PipelineConfig& config);

std::vector<InterpretedRow> interpret_symbols(const SymbolSeries& symbols,
                                              double start_depth,
                                              const gp::ClassifierTeam& team,
                                              const fst::Transducer& t);

void save_labels(const std::vector<InterpretedRow>& rows,
                 const std::filesystem::path& path);

// Per-class confusion counts and percentages for the team on a training set.
std::string render_report(const gp::ClassifierTeam& team,
                          const gp::TrainingSet& training);

// Single-file depth track: GR curve, segment boundaries, label bands.
std::string render_track_svg(const WellLog& log,
                             const SegmentationResult& segments,
                             const std::vector<InterpretedRow>& rows);

}  // namespace wli::pipeline
