#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wli/gp/rule_tree.hpp"

namespace wli::gp {

// Five rules indexed by label, fired in `order`; the last label in the order
// is the unconditional fallback.
struct ClassifierTeam {
    std::array<RuleTree, kLabelCount> rules;
    std::array<DepositionLabel, kLabelCount> order;

    ClassifierTeam clone() const;
};

DepositionLabel team_classify(const ClassifierTeam& team,
                              const AttributeVector& attrs);

struct TrainingExample {
    AttributeVector attrs;
    DepositionLabel label = DepositionLabel::Null;
};

using TrainingSet = std::vector<TrainingExample>;

struct CoevolutionConfig {
    int population_size = 100;
    int max_generations = 200;
    int tournament_size = 2;
    int elitism = 1;
    int max_init_depth = 6;
    int size_penalty_threshold = 150;
    // Sequential operator cascade, fresh draw per branch:
    // homologous, mutation, or-crossover, and-crossover, else copy.
    std::array<double, 4> op_rates = {0.3, 0.3, 0.3, 0.3};
    int runs = 1;
    std::uint64_t rng_seed = 0;
    double early_stop_accuracy = 1.0;  // stop a run once reached
};

struct FitnessResult {
    double fitness = 0.0;        // hits/N minus the oversize penalty
    double distance_error = 0.0; // summed label distance of the misses
    int hits = 0;
};

// Team fitness of `candidate` standing in for its slot among the bests.
FitnessResult rule_fitness(const RuleTree& candidate, DepositionLabel slot,
                           const std::array<RuleTree, kLabelCount>& bests,
                           const std::array<DepositionLabel, kLabelCount>& order,
                           const TrainingSet& training,
                           int size_penalty_threshold = 150);

// Swaps two distinct uniformly chosen positions.
std::array<DepositionLabel, kLabelCount> mutate_order(
    const std::array<DepositionLabel, kLabelCount>& order, Rng& rng);

struct GenerationStats {
    int generation = 0;
    std::array<double, kLabelCount> avg_fitness{};
    std::array<double, kLabelCount> best_fitness{};
    std::array<DepositionLabel, kLabelCount> order{};
    double team_accuracy = 0.0;
    double best_so_far_accuracy = 0.0;
};

struct CoevolveResult {
    ClassifierTeam best_team;
    double best_accuracy = 0.0;
    double best_distance_error = 0.0;
    std::vector<GenerationStats> stats;
};

// Five populations co-evolved against each other's current bests, with the
// firing order hill-climbed once per generation.
CoevolveResult coevolve(const TrainingSet& training,
                        const CoevolutionConfig& config);

// Repeats coevolve over config.runs seeds (rng_seed + run index) and keeps
// the best team across runs.
struct MultiRunResult {
    CoevolveResult best;
    int best_run = 0;
    std::vector<double> run_accuracies;
};
MultiRunResult coevolve_runs(const TrainingSet& training,
                             const CoevolutionConfig& config);

}  // namespace wli::gp
