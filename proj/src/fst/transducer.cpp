#include "wli/fst/transducer.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace wli::fst {

Transducer random_transducer(int n_states, Rng& rng) {
    Transducer t;
    t.n_states = n_states;
    t.transition.resize(n_states * kSymbolCount);
    t.output.resize(n_states * kSymbolCount);
    for (auto& e : t.transition) {
        e = static_cast<std::uint16_t>(rng.index(n_states));
    }
    for (auto& e : t.output) {
        e = static_cast<std::uint8_t>(rng.index(kLabelCount));
    }
    return t;
}

RuleOracle team_oracle(const gp::ClassifierTeam& team) {
    // The team is cloned into the closure so the oracle owns its rules.
    auto shared = std::make_shared<gp::ClassifierTeam>(team.clone());
    return [shared](DepositionLabel rule, const AttributeVector& attrs) {
        return gp::eval_rule(shared->rules[label_index(rule)], attrs);
    };
}

StepResult fst_step(const Transducer& t, int state, VshSymbol symbol,
                    double thickness, AttributeAccumulator& buffer,
                    const RuleOracle& rules) {
    if (state < 0 || state >= t.n_states) {
        throw std::invalid_argument("state out of range");
    }
    buffer.add(symbol, thickness);
    DepositionLabel proposed = t.rule_name(state, symbol);
    StepResult result;
    result.next_state = t.next_state(state, symbol);
    if (rules(proposed, buffer.attributes())) {
        result.label = proposed;
        buffer.clear();
    } else {
        result.label = DepositionLabel::Null;
    }
    return result;
}

TransducerRun fst_run(const Transducer& t, const SymbolSeries& inputs,
                      const RuleOracle& rules) {
    TransducerRun run;
    run.states.push_back(0);
    AttributeAccumulator buffer;
    int state = 0;
    for (const SymbolSpan& in : inputs.items) {
        StepResult step =
            fst_step(t, state, in.symbol, in.thickness, buffer, rules);
        run.outputs.push_back(step.label);
        run.states.push_back(step.next_state);
        state = step.next_state;
    }
    run.residual_thickness = buffer.total_thickness();
    return run;
}

TargetSequence build_target(const SymbolSeries& symbols,
                            const std::vector<LabeledUnit>& units) {
    std::size_t total = 0;
    for (const LabeledUnit& u : units) total += u.symbols.size();
    if (total != symbols.size()) {
        throw std::invalid_argument("units do not tile the symbol sequence");
    }
    TargetSequence target;
    target.labels.assign(symbols.size(), DepositionLabel::Null);
    std::size_t pos = 0;
    for (const LabeledUnit& u : units) {
        if (u.symbols.empty() || u.label == DepositionLabel::Null) {
            throw std::invalid_argument("invalid depositional unit");
        }
        pos += u.symbols.size();
        target.labels[pos - 1] = u.label;
    }
    return target;
}

FstFitness fst_fitness(const TransducerRun& run,
                       const TargetSequence& target) {
    if (run.outputs.size() != target.labels.size()) {
        throw std::invalid_argument("output/target length mismatch");
    }
    FstFitness f;
    for (std::size_t i = 0; i < run.outputs.size(); ++i) {
        DepositionLabel got = run.outputs[i];
        DepositionLabel want = target.labels[i];
        if (got == want) continue;
        f.mismatches++;
        if (got == DepositionLabel::Null || want == DepositionLabel::Null) {
            f.distance_error += kMaxLabelDistance;
        } else {
            f.distance_error += label_distance(got, want);
        }
    }
    return f;
}

FstFitness evaluate_fst(const Transducer& t, const SymbolSeries& inputs,
                        const RuleOracle& rules,
                        const TargetSequence& target) {
    return fst_fitness(fst_run(t, inputs, rules), target);
}

Transducer mutate_fst(const Transducer& t, Rng& rng) {
    Transducer out = t;
    const std::size_t cells = out.transition.size();
    bool pick_transition = rng.index(2) == 0;
    std::size_t forced = rng.index(cells);
    if (pick_transition) {
        out.transition[forced] = static_cast<std::uint16_t>(
            rng.index_excluding(out.n_states, out.transition[forced]));
    } else {
        out.output[forced] = static_cast<std::uint8_t>(
            rng.index_excluding(kLabelCount, out.output[forced]));
    }
    // Sweep of both tables at 1/(N_Q * N_I), skipping the forced entry.
    double p = 1.0 / static_cast<double>(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        if (!(pick_transition && i == forced) && rng.chance(p)) {
            out.transition[i] = static_cast<std::uint16_t>(
                rng.index_excluding(out.n_states, out.transition[i]));
        }
    }
    for (std::size_t i = 0; i < cells; ++i) {
        if (!(!pick_transition && i == forced) && rng.chance(p)) {
            out.output[i] = static_cast<std::uint8_t>(
                rng.index_excluding(kLabelCount, out.output[i]));
        }
    }
    return out;
}

EvolveFstResult evolve_fst(const SymbolSeries& inputs, const RuleOracle& rules,
                           const TargetSequence& target,
                           const GaConfig& config) {
    if (inputs.items.empty()) {
        throw std::invalid_argument("empty input sequence");
    }
    struct Scored {
        Transducer t;
        FstFitness f;
    };
    auto beats = [](const FstFitness& a, const FstFitness& b) {
        if (a.mismatches != b.mismatches) return a.mismatches < b.mismatches;
        return a.distance_error < b.distance_error;
    };

    Rng init_rng = Rng::substream(config.rng_seed, {0});
    std::vector<Scored> pop;
    pop.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i) {
        Transducer t = random_transducer(config.n_states, init_rng);
        FstFitness f = evaluate_fst(t, inputs, rules, target);
        pop.push_back({std::move(t), f});
    }

    EvolveFstResult result;
    bool have_best = false;
    for (int gen = 0; gen < config.max_generations; ++gen) {
        std::size_t best_idx = 0;
        double sum = 0.0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            sum += pop[i].f.mismatches;
            if (beats(pop[i].f, pop[best_idx].f)) best_idx = i;
        }
        if (!have_best || beats(pop[best_idx].f, result.best_fitness)) {
            result.best = pop[best_idx].t;
            result.best_fitness = pop[best_idx].f;
            have_best = true;
        }
        result.stats.push_back({gen, sum / pop.size(),
                                pop[best_idx].f.mismatches,
                                result.best_fitness.mismatches});
        if (result.best_fitness.mismatches == 0 &&
            result.best_fitness.distance_error == 0.0) {
            break;
        }
        if (gen + 1 == config.max_generations) break;

        Rng rng = Rng::substream(config.rng_seed, {1, (std::uint64_t)gen});
        std::vector<Scored> next;
        next.reserve(pop.size());
        for (int e = 0; e < config.elitism; ++e) {
            next.push_back(pop[best_idx]);
        }
        auto select = [&]() -> const Scored& {
            std::size_t w = rng.index(pop.size());
            for (int t = 1; t < config.tournament_size; ++t) {
                std::size_t c = rng.index(pop.size());
                if (beats(pop[c].f, pop[w].f)) w = c;
            }
            return pop[w];
        };
        while (next.size() < pop.size()) {
            const Scored& parent = select();
            if (rng.chance(config.mutation_rate)) {
                Transducer child = mutate_fst(parent.t, rng);
                FstFitness f = evaluate_fst(child, inputs, rules, target);
                next.push_back({std::move(child), f});
            } else {
                next.push_back(parent);
            }
        }
        pop = std::move(next);
    }
    return result;
}

std::string render_transducer(const Transducer& t) {
    std::string out = "n_states," + std::to_string(t.n_states) + "\n";
    auto header = [&]() {
        out += "state";
        for (auto s : all_symbols()) {
            out += ',';
            out += to_string(s);
        }
        out += '\n';
    };
    out += "transition\n";
    header();
    for (int q = 0; q < t.n_states; ++q) {
        out += 'S' + std::to_string(q);
        for (int i = 0; i < kSymbolCount; ++i) {
            out += ",S" + std::to_string(t.transition[q * kSymbolCount + i]);
        }
        out += '\n';
    }
    out += "output\n";
    header();
    for (int q = 0; q < t.n_states; ++q) {
        out += 'S' + std::to_string(q);
        for (int i = 0; i < kSymbolCount; ++i) {
            out += ',';
            out += to_string(
                static_cast<DepositionLabel>(t.output[q * kSymbolCount + i]));
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

int parse_state(const std::string& cell, int n_states) {
    if (cell.empty() || cell[0] != 'S') {
        throw std::invalid_argument("bad state name: " + cell);
    }
    int q = std::stoi(cell.substr(1));
    if (q < 0 || q >= n_states) {
        throw std::invalid_argument("state out of range: " + cell);
    }
    return q;
}

}  // namespace

Transducer parse_transducer(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line)) {
            throw std::invalid_argument("truncated transducer file");
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };

    next_line();
    auto head = split_csv(line);
    if (head.size() != 2 || head[0] != "n_states") {
        throw std::invalid_argument("expected n_states header");
    }
    Transducer t;
    t.n_states = std::stoi(head[1]);
    if (t.n_states < 1) throw std::invalid_argument("n_states must be >= 1");
    t.transition.resize(t.n_states * kSymbolCount);
    t.output.resize(t.n_states * kSymbolCount);

    for (int table = 0; table < 2; ++table) {
        next_line();
        if (line != (table == 0 ? "transition" : "output")) {
            throw std::invalid_argument("unexpected section: " + line);
        }
        next_line();  // column header
        for (int q = 0; q < t.n_states; ++q) {
            next_line();
            auto cells = split_csv(line);
            if (static_cast<int>(cells.size()) != kSymbolCount + 1) {
                throw std::invalid_argument("bad table row: " + line);
            }
            if (parse_state(cells[0], t.n_states) != q) {
                throw std::invalid_argument("rows out of order: " + line);
            }
            for (int i = 0; i < kSymbolCount; ++i) {
                if (table == 0) {
                    t.transition[q * kSymbolCount + i] =
                        static_cast<std::uint16_t>(
                            parse_state(cells[i + 1], t.n_states));
                } else {
                    DepositionLabel l = parse_label(cells[i + 1]);
                    if (l == DepositionLabel::Null) {
                        throw std::invalid_argument(
                            "output table entries must name a rule");
                    }
                    t.output[q * kSymbolCount + i] =
                        static_cast<std::uint8_t>(label_index(l));
                }
            }
        }
    }
    return t;
}

}  // namespace wli::fst
