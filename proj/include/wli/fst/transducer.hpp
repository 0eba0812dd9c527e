#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wli/attributes.hpp"
#include "wli/gp/coevolve.hpp"

namespace wli::fst {

// Table-driven finite state transducer: for every (state, input symbol) the
// transition table names the next state and the output table names the
// classification rule to fire.
struct Transducer {
    int n_states = 20;
    std::vector<std::uint16_t> transition;  // n_states * 10, row per state
    std::vector<std::uint8_t> output;       // n_states * 10, label index

    int next_state(int state, VshSymbol sym) const {
        return transition[state * kSymbolCount + symbol_index(sym)];
    }
    DepositionLabel rule_name(int state, VshSymbol sym) const {
        return static_cast<DepositionLabel>(
            output[state * kSymbolCount + symbol_index(sym)]);
    }

    bool operator==(const Transducer&) const = default;
};

Transducer random_transducer(int n_states, Rng& rng);

// Answers whether the named rule accepts the accumulated attributes.
using RuleOracle =
    std::function<bool(DepositionLabel rule, const AttributeVector& attrs)>;

RuleOracle team_oracle(const gp::ClassifierTeam& team);

struct TransducerRun {
    std::vector<DepositionLabel> outputs;  // one per input, null allowed
    std::vector<int> states;  // length inputs+1, starting at state 0
    double residual_thickness = 0.0;  // buffer left unlabeled at the end
};

struct StepResult {
    DepositionLabel label = DepositionLabel::Null;
    int next_state = 0;
};

// One transducer step: extend the buffer, fire the selected rule against the
// buffered attributes, emit its label (clearing the buffer) on true or null
// (keeping it) on false, then transition.
StepResult fst_step(const Transducer& t, int state, VshSymbol symbol,
                    double thickness, AttributeAccumulator& buffer,
                    const RuleOracle& rules);

TransducerRun fst_run(const Transducer& t, const SymbolSeries& inputs,
                      const RuleOracle& rules);

struct TargetSequence {
    std::vector<DepositionLabel> labels;  // one per symbol position
};

// Places each unit's label at its last symbol position, null elsewhere.
// Throws if the units do not tile the symbol sequence.
TargetSequence build_target(const SymbolSeries& symbols,
                            const std::vector<LabeledUnit>& units);

struct FstFitness {
    int mismatches = 0;
    double distance_error = 0.0;
};

// Position-wise mismatch count; the secondary distance error counts label
// jumps between differing non-null labels and the maximum jump (4) when one
// side is null.
FstFitness fst_fitness(const TransducerRun& run, const TargetSequence& target);

FstFitness evaluate_fst(const Transducer& t, const SymbolSeries& inputs,
                        const RuleOracle& rules, const TargetSequence& target);

// One forced change in a coin-chosen table, then a sweep of every remaining
// entry of both tables at probability 1/(n_states*10).
Transducer mutate_fst(const Transducer& t, Rng& rng);

struct GaConfig {
    int population_size = 50;
    int max_generations = 1000;
    int tournament_size = 2;
    int elitism = 1;
    double mutation_rate = 0.02;  // per-offspring chance of mutate_fst
    int n_states = 20;
    std::uint64_t rng_seed = 0;
};

struct FstGenerationStats {
    int generation = 0;
    double avg_mismatches = 0.0;
    int best_mismatches = 0;
    int best_so_far = 0;
};

struct EvolveFstResult {
    Transducer best;
    FstFitness best_fitness;
    std::vector<FstGenerationStats> stats;
};

EvolveFstResult evolve_fst(const SymbolSeries& inputs, const RuleOracle& rules,
                           const TargetSequence& target,
                           const GaConfig& config);

// Plain-text table serialization mirroring the two-table layout.
std::string render_transducer(const Transducer& t);
Transducer parse_transducer(const std::string& text);

}  // namespace wli::fst
