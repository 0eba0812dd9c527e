#include "wli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wli::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t at = line.find(sep, start);
        if (at == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, at - start));
        start = at + 1;
    }
    return cells;
}

double parse_double(const std::string& cell) {
    double v = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw std::invalid_argument("bad number: '" + cell + "'");
    }
    return v;
}

std::size_t parse_index(const std::string& cell) {
    std::size_t v = 0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw std::invalid_argument("bad index: '" + cell + "'");
    }
    return v;
}

// Reads a CSV file, validates the header, returns data rows split to cells.
std::vector<std::vector<std::string>> read_csv(
    const std::filesystem::path& path, const std::string& header,
    std::size_t columns) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument(path.string() + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header) {
        throw std::invalid_argument(path.string() + ": expected header '" +
                                    header + "', got '" + line + "'");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != columns) {
            throw std::invalid_argument(path.string() + ": bad row '" + line +
                                        "'");
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

WellLog load_log(const std::filesystem::path& path) {
    auto rows = read_csv(path, "depth,gr", 2);
    WellLog log;
    for (const auto& row : rows) {
        log.depths.push_back(parse_double(row[0]));
        log.readings.push_back(parse_double(row[1]));
    }
    if (log.depths.size() >= 2) {
        log.interval = log.depths[1] - log.depths[0];
    }
    log.validate();
    return log;
}

void save_log(const WellLog& log, const std::filesystem::path& path) {
    std::string out = "depth,gr\n";
    for (std::size_t i = 0; i < log.size(); ++i) {
        out += format_double(log.depths[i]) + ',' +
               format_double(log.readings[i]) + '\n';
    }
    write_file(path, out);
}

VshSeries load_vsh(const std::filesystem::path& path, double& start_depth) {
    auto rows = read_csv(path, "depth,vsh", 2);
    if (rows.size() < 2) {
        throw std::invalid_argument(path.string() + ": needs >= 2 samples");
    }
    VshSeries series;
    start_depth = parse_double(rows[0][0]);
    series.interval = parse_double(rows[1][0]) - start_depth;
    for (const auto& row : rows) {
        series.values.push_back(parse_double(row[1]));
    }
    return series;
}

void save_vsh(const VshSeries& series, double start_depth,
              const std::filesystem::path& path) {
    std::string out = "depth,vsh\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_double(start_depth + i * series.interval) + ',' +
               format_double(series.values[i]) + '\n';
    }
    write_file(path, out);
}

SegmentationResult load_segments(const std::filesystem::path& path) {
    auto rows = read_csv(path, "start_index,end_index,mean,thickness", 4);
    SegmentationResult result;
    for (const auto& row : rows) {
        Segment s;
        s.start_index = parse_index(row[0]);
        s.end_index = parse_index(row[1]);
        s.mean = parse_double(row[2]);
        s.thickness = parse_double(row[3]);
        result.segments.push_back(s);
    }
    result.f_value = static_cast<double>(result.segments.size());
    return result;
}

void save_segments(const SegmentationResult& result,
                   const std::filesystem::path& path) {
    std::string out = "start_index,end_index,mean,thickness\n";
    for (const Segment& s : result.segments) {
        out += std::to_string(s.start_index) + ',' +
               std::to_string(s.end_index) + ',' + format_double(s.mean) +
               ',' + format_double(s.thickness) + '\n';
    }
    write_file(path, out);
}

std::vector<LabelAnchor> load_anchors(const std::filesystem::path& path,
                                      double start_depth, double interval,
                                      std::size_t n_samples) {
    auto rows = read_csv(path, "depth,label", 2);
    std::vector<LabelAnchor> anchors;
    for (const auto& row : rows) {
        double depth = parse_double(row[0]);
        double pos = (depth - start_depth) / interval;
        long idx = std::lround(pos);
        if (idx < 0 || static_cast<std::size_t>(idx) >= n_samples) {
            throw std::invalid_argument("anchor depth outside log: " + row[0]);
        }
        anchors.push_back(
            {static_cast<std::size_t>(idx), parse_label(row[1])});
    }
    return anchors;
}

void save_anchors(const std::vector<LabelAnchor>& anchors, double start_depth,
                  double interval, const std::filesystem::path& path) {
    std::string out = "depth,label\n";
    for (const LabelAnchor& a : anchors) {
        out += format_double(start_depth + a.position * interval) + ',' +
               std::string(to_string(a.label)) + '\n';
    }
    write_file(path, out);
}

SymbolSeries load_symbols(const std::filesystem::path& path) {
    auto rows = read_csv(path, "index,symbol,thickness,mean", 4);
    SymbolSeries series;
    for (const auto& row : rows) {
        series.items.push_back({parse_symbol(row[1]), parse_double(row[2])});
    }
    return series;
}

void save_symbols(const SymbolSeries& symbols, const std::vector<double>& means,
                  const std::filesystem::path& path) {
    std::string out = "index,symbol,thickness,mean\n";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        out += std::to_string(i) + ',' +
               std::string(to_string(symbols.items[i].symbol)) + ',' +
               format_double(symbols.items[i].thickness) + ',' +
               (i < means.size() ? format_double(means[i]) : "0") + '\n';
    }
    write_file(path, out);
}

std::vector<UnitSpan> load_units(const std::filesystem::path& path) {
    auto rows = read_csv(path, "unit,label,first_segment,last_segment", 4);
    std::vector<UnitSpan> units;
    for (const auto& row : rows) {
        units.push_back(
            {parse_label(row[1]), parse_index(row[2]), parse_index(row[3])});
    }
    return units;
}

void save_units(const std::vector<UnitSpan>& units,
                const std::filesystem::path& path) {
    std::string out = "unit,label,first_segment,last_segment\n";
    for (std::size_t i = 0; i < units.size(); ++i) {
        out += std::to_string(i) + ',' +
               std::string(to_string(units[i].label)) + ',' +
               std::to_string(units[i].first_segment) + ',' +
               std::to_string(units[i].last_segment) + '\n';
    }
    write_file(path, out);
}

namespace {

std::string training_header() {
    std::string h;
    for (int i = 0; i < kAttributeCount; ++i) {
        h += std::string(attribute_name(i)) + ',';
    }
    h += "label";
    return h;
}

}  // namespace

gp::TrainingSet load_training(const std::filesystem::path& path) {
    auto rows = read_csv(path, training_header(), kAttributeCount + 1);
    gp::TrainingSet training;
    for (const auto& row : rows) {
        gp::TrainingExample ex;
        for (int s = 0; s < kSymbolCount; ++s) {
            ex.attrs.pct[s] = parse_double(row[s]);
            ex.attrs.thickness[s] = parse_double(row[10 + s]);
            ex.attrs.max[s] = parse_double(row[20 + s]);
        }
        ex.attrs.variation = parse_double(row[30]);
        ex.attrs.total_thickness = parse_double(row[31]);
        ex.attrs.no_segments = static_cast<int>(parse_double(row[32]));
        ex.label = parse_label(row[33]);
        training.push_back(std::move(ex));
    }
    return training;
}

void save_training(const gp::TrainingSet& training,
                   const std::filesystem::path& path) {
    std::string out = training_header() + '\n';
    for (const auto& ex : training) {
        for (int i = 0; i < kAttributeCount; ++i) {
            out += format_double(attribute_value(ex.attrs, i)) + ',';
        }
        out += std::string(to_string(ex.label)) + '\n';
    }
    write_file(path, out);
}

fst::TargetSequence load_target(const std::filesystem::path& path) {
    auto rows = read_csv(path, "index,label", 2);
    fst::TargetSequence target;
    for (const auto& row : rows) {
        target.labels.push_back(parse_label(row[1]));
    }
    return target;
}

void save_target(const fst::TargetSequence& target,
                 const std::filesystem::path& path) {
    std::string out = "index,label\n";
    for (std::size_t i = 0; i < target.labels.size(); ++i) {
        out += std::to_string(i) + ',' +
               std::string(to_string(target.labels[i])) + '\n';
    }
    write_file(path, out);
}

gp::ClassifierTeam load_team(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    gp::ClassifierTeam team;
    bool have_order = false;
    std::array<bool, kLabelCount> have_rule{};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("bad team line: " + line);
        }
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        while (!value.empty() && value.front() == ' ') value.erase(0, 1);
        if (key == "order") {
            std::istringstream vs(value);
            std::string tok;
            int i = 0;
            while (vs >> tok) {
                if (i >= kLabelCount) {
                    throw std::invalid_argument("order has too many labels");
                }
                team.order[i++] = parse_label(tok);
            }
            if (i != kLabelCount) {
                throw std::invalid_argument("order needs 5 labels");
            }
            have_order = true;
        } else {
            DepositionLabel l = parse_label(key);
            team.rules[label_index(l)] = gp::parse_rule(value);
            have_rule[label_index(l)] = true;
        }
    }
    if (!have_order) throw std::invalid_argument("team file missing order");
    for (int i = 0; i < kLabelCount; ++i) {
        if (!have_rule[i]) {
            throw std::invalid_argument(
                "team file missing rule for " +
                std::string(to_string(static_cast<DepositionLabel>(i))));
        }
    }
    return team;
}

void save_team(const gp::ClassifierTeam& team,
               const std::filesystem::path& path) {
    std::string out = "order:";
    for (DepositionLabel l : team.order) {
        out += ' ';
        out += to_string(l);
    }
    out += '\n';
    for (DepositionLabel l : all_labels()) {
        out += std::string(to_string(l)) + ": " +
               gp::render_rule(team.rules[label_index(l)]) + '\n';
    }
    write_file(path, out);
}

fst::Transducer load_transducer(const std::filesystem::path& path) {
    return fst::parse_transducer(read_file(path));
}

void save_transducer(const fst::Transducer& t,
                     const std::filesystem::path& path) {
    write_file(path, fst::render_transducer(t));
}

void save_gp_stats(const std::vector<gp::GenerationStats>& stats,
                   const std::filesystem::path& path) {
    std::string out = "gen,pop,avg_fitness,best_fitness,order,team_accuracy\n";
    for (const auto& g : stats) {
        std::string order;
        for (DepositionLabel l : g.order) {
            if (!order.empty()) order += ' ';
            order += to_string(l);
        }
        for (int p = 0; p < kLabelCount; ++p) {
            out += std::to_string(g.generation) + ',' +
                   std::string(to_string(static_cast<DepositionLabel>(p))) +
                   ',' + format_double(g.avg_fitness[p]) + ',' +
                   format_double(g.best_fitness[p]) + ',' + order + ',' +
                   format_double(g.team_accuracy) + '\n';
        }
    }
    write_file(path, out);
}

void save_fst_stats(const std::vector<fst::FstGenerationStats>& stats,
                    const std::filesystem::path& path) {
    std::string out = "gen,avg_mismatches,best_mismatches,best_so_far\n";
    for (const auto& g : stats) {
        out += std::to_string(g.generation) + ',' +
               format_double(g.avg_mismatches) + ',' +
               std::to_string(g.best_mismatches) + ',' +
               std::to_string(g.best_so_far) + '\n';
    }
    write_file(path, out);
}

}  // namespace wli::io
