#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wli/fst/transducer.hpp"
#include "wli/fuzzysym.hpp"
#include "wli/gp/coevolve.hpp"
#include "wli/segmenter.hpp"

namespace wli::io {

// Shortest round-trip decimal rendering, used by every writer so artifacts
// are byte-stable.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

// --- log + series CSV -------------------------------------------------

// `depth,gr` rows.
WellLog load_log(const std::filesystem::path& path);
void save_log(const WellLog& log, const std::filesystem::path& path);

// `depth,vsh` rows.
VshSeries load_vsh(const std::filesystem::path& path, double& start_depth);
void save_vsh(const VshSeries& series, double start_depth,
              const std::filesystem::path& path);

// `start_index,end_index,mean,thickness` rows.
SegmentationResult load_segments(const std::filesystem::path& path);
void save_segments(const SegmentationResult& result,
                   const std::filesystem::path& path);

// `depth,label` rows; depths are mapped onto the log's sample grid.
std::vector<LabelAnchor> load_anchors(const std::filesystem::path& path,
                                      double start_depth, double interval,
                                      std::size_t n_samples);
void save_anchors(const std::vector<LabelAnchor>& anchors, double start_depth,
                  double interval, const std::filesystem::path& path);

// `index,symbol,thickness,mean` rows (mean is informational).
SymbolSeries load_symbols(const std::filesystem::path& path);
void save_symbols(const SymbolSeries& symbols,
                  const std::vector<double>& means,
                  const std::filesystem::path& path);

// `unit,label,first_segment,last_segment` rows.
std::vector<UnitSpan> load_units(const std::filesystem::path& path);
void save_units(const std::vector<UnitSpan>& units,
                const std::filesystem::path& path);

// 33 attribute columns plus `label`.
gp::TrainingSet load_training(const std::filesystem::path& path);
void save_training(const gp::TrainingSet& training,
                   const std::filesystem::path& path);

// `index,label` rows, null allowed.
fst::TargetSequence load_target(const std::filesystem::path& path);
void save_target(const fst::TargetSequence& target,
                 const std::filesystem::path& path);

// --- model files -------------------------------------------------------

// Order line followed by one rule per label, prefix notation.
gp::ClassifierTeam load_team(const std::filesystem::path& path);
void save_team(const gp::ClassifierTeam& team,
               const std::filesystem::path& path);

fst::Transducer load_transducer(const std::filesystem::path& path);
void save_transducer(const fst::Transducer& t,
                     const std::filesystem::path& path);

// `gen,pop,avg_fitness,best_fitness,order,team_accuracy` rows.
void save_gp_stats(const std::vector<gp::GenerationStats>& stats,
                   const std::filesystem::path& path);
void save_fst_stats(const std::vector<fst::FstGenerationStats>& stats,
                    const std::filesystem::path& path);

}  // namespace wli::io
