#include "wli/gp/coevolve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wli::gp {

namespace {

double size_penalty(int size, int threshold) {
    if (size <= threshold) return 0.0;
    double r = static_cast<double>(size - threshold) / size;
    return r * r;
}

struct Scored {
    RuleTree tree;
    double fitness = 0.0;
    double distance_error = 0.0;
};

// (fitness desc, distance error asc); the paper's tie rule.
bool beats(const Scored& a, const Scored& b) {
    if (a.fitness != b.fitness) return a.fitness > b.fitness;
    return a.distance_error < b.distance_error;
}

using FiredMatrix = std::array<std::vector<char>, kLabelCount>;

FiredMatrix fire_bests(const std::array<RuleTree, kLabelCount>& bests,
                       const TrainingSet& training) {
    FiredMatrix fired;
    for (int p = 0; p < kLabelCount; ++p) {
        fired[p].resize(training.size());
        for (std::size_t u = 0; u < training.size(); ++u) {
            fired[p][u] = eval_rule(bests[p], training[u].attrs) ? 1 : 0;
        }
    }
    return fired;
}

DepositionLabel classify_fired(
    const std::array<DepositionLabel, kLabelCount>& order,
    const FiredMatrix& fired, std::size_t u, int candidate_pop = -1,
    bool candidate_fired = false) {
    for (int s = 0; s < kLabelCount - 1; ++s) {
        DepositionLabel l = order[s];
        int p = label_index(l);
        bool f = (p == candidate_pop) ? candidate_fired
                                      : fired[p][u] != 0;
        if (f) return l;
    }
    return order[kLabelCount - 1];
}

struct TeamScore {
    double accuracy = 0.0;
    double distance_error = 0.0;
    int hits = 0;
};

TeamScore score_order(const std::array<DepositionLabel, kLabelCount>& order,
                      const FiredMatrix& fired, const TrainingSet& training) {
    TeamScore s;
    for (std::size_t u = 0; u < training.size(); ++u) {
        DepositionLabel predicted = classify_fired(order, fired, u);
        if (predicted == training[u].label) {
            s.hits++;
        } else {
            s.distance_error += label_distance(training[u].label, predicted);
        }
    }
    s.accuracy = static_cast<double>(s.hits) / training.size();
    return s;
}

std::array<DepositionLabel, kLabelCount> random_order(Rng& rng) {
    auto order = all_labels();
    for (int i = kLabelCount - 1; i > 0; --i) {
        std::swap(order[i], order[rng.index(i + 1)]);
    }
    return order;
}

}  // namespace

ClassifierTeam ClassifierTeam::clone() const {
    ClassifierTeam t;
    for (int i = 0; i < kLabelCount; ++i) t.rules[i] = rules[i].clone();
    t.order = order;
    return t;
}

DepositionLabel team_classify(const ClassifierTeam& team,
                              const AttributeVector& attrs) {
    for (int s = 0; s < kLabelCount - 1; ++s) {
        DepositionLabel l = team.order[s];
        if (eval_rule(team.rules[label_index(l)], attrs)) return l;
    }
    return team.order[kLabelCount - 1];
}

FitnessResult rule_fitness(const RuleTree& candidate, DepositionLabel slot,
                           const std::array<RuleTree, kLabelCount>& bests,
                           const std::array<DepositionLabel, kLabelCount>& order,
                           const TrainingSet& training,
                           int size_penalty_threshold) {
    if (training.empty()) {
        throw std::invalid_argument("training set is empty");
    }
    int slot_pop = label_index(slot);
    FiredMatrix fired = fire_bests(bests, training);
    FitnessResult result;
    for (std::size_t u = 0; u < training.size(); ++u) {
        bool cf = eval_rule(candidate, training[u].attrs);
        DepositionLabel predicted =
            classify_fired(order, fired, u, slot_pop, cf);
        if (predicted == training[u].label) {
            result.hits++;
        } else {
            result.distance_error +=
                label_distance(training[u].label, predicted);
        }
    }
    result.fitness =
        static_cast<double>(result.hits) / training.size() -
        size_penalty(candidate.size(), size_penalty_threshold);
    return result;
}

std::array<DepositionLabel, kLabelCount> mutate_order(
    const std::array<DepositionLabel, kLabelCount>& order, Rng& rng) {
    auto out = order;
    std::size_t i = rng.index(kLabelCount);
    std::size_t j = rng.index_excluding(kLabelCount, i);
    std::swap(out[i], out[j]);
    return out;
}

CoevolveResult coevolve(const TrainingSet& training,
                        const CoevolutionConfig& config) {
    if (training.empty()) {
        throw std::invalid_argument("training set is empty");
    }
    std::set<DepositionLabel> labels;
    for (const auto& ex : training) {
        if (ex.label == DepositionLabel::Null) {
            throw std::invalid_argument("training label may not be null");
        }
        labels.insert(ex.label);
    }
    if (labels.size() < 2) {
        throw std::invalid_argument("training must cover at least 2 labels");
    }

    const int pop_size = config.population_size;
    const std::size_t n = training.size();

    std::array<std::vector<Scored>, kLabelCount> pops;
    for (int p = 0; p < kLabelCount; ++p) {
        Rng rng = Rng::substream(config.rng_seed, {0, (std::uint64_t)p});
        pops[p].reserve(pop_size);
        for (int i = 0; i < pop_size; ++i) {
            pops[p].push_back({init_tree(rng, config.max_init_depth)});
        }
    }

    // Generation 0 has no evaluated bests yet; pick at random.
    std::array<RuleTree, kLabelCount> bests;
    for (int p = 0; p < kLabelCount; ++p) {
        Rng rng = Rng::substream(config.rng_seed, {1, (std::uint64_t)p});
        bests[p] = pops[p][rng.index(pop_size)].tree.clone();
    }
    Rng order_rng = Rng::substream(config.rng_seed, {2});
    auto order = random_order(order_rng);

    CoevolveResult result;
    result.best_accuracy = -1.0;

    for (int gen = 0; gen < config.max_generations; ++gen) {
        FiredMatrix fired = fire_bests(bests, training);

        GenerationStats stats;
        stats.generation = gen;
        std::array<int, kLabelCount> best_idx{};
        for (int p = 0; p < kLabelCount; ++p) {
            double sum = 0.0;
            for (int i = 0; i < pop_size; ++i) {
                Scored& ind = pops[p][i];
                int hits = 0;
                double dist = 0.0;
                for (std::size_t u = 0; u < n; ++u) {
                    bool cf = eval_rule(ind.tree, training[u].attrs);
                    DepositionLabel predicted =
                        classify_fired(order, fired, u, p, cf);
                    if (predicted == training[u].label) {
                        ++hits;
                    } else {
                        dist += label_distance(training[u].label, predicted);
                    }
                }
                ind.fitness =
                    static_cast<double>(hits) / n -
                    size_penalty(ind.tree.size(),
                                 config.size_penalty_threshold);
                ind.distance_error = dist;
                sum += ind.fitness;
                if (beats(ind, pops[p][best_idx[p]])) best_idx[p] = i;
            }
            stats.avg_fitness[p] = sum / pop_size;
            stats.best_fitness[p] = pops[p][best_idx[p]].fitness;
        }

        for (int p = 0; p < kLabelCount; ++p) {
            bests[p] = pops[p][best_idx[p]].tree.clone();
        }
        fired = fire_bests(bests, training);
        TeamScore team = score_order(order, fired, training);

        // Hill-climb the firing order: adopt on better-or-equal accuracy.
        auto proposal = mutate_order(order, order_rng);
        TeamScore proposed = score_order(proposal, fired, training);
        if (proposed.accuracy >= team.accuracy) {
            order = proposal;
            team = proposed;
        }

        if (team.accuracy > result.best_accuracy ||
            (team.accuracy == result.best_accuracy &&
             team.distance_error < result.best_distance_error)) {
            result.best_accuracy = team.accuracy;
            result.best_distance_error = team.distance_error;
            result.best_team.order = order;
            for (int p = 0; p < kLabelCount; ++p) {
                result.best_team.rules[p] = bests[p].clone();
            }
        }

        stats.order = order;
        stats.team_accuracy = team.accuracy;
        stats.best_so_far_accuracy = result.best_accuracy;
        result.stats.push_back(stats);

        if (result.best_accuracy >= config.early_stop_accuracy) break;
        if (gen + 1 == config.max_generations) break;

        // Reproduce: elite plus the operator cascade.
        for (int p = 0; p < kLabelCount; ++p) {
            Rng rng = Rng::substream(config.rng_seed,
                                     {3, (std::uint64_t)gen, (std::uint64_t)p});
            std::vector<Scored> next;
            next.reserve(pop_size);
            for (int e = 0; e < config.elitism && e < pop_size; ++e) {
                next.push_back({pops[p][best_idx[p]].tree.clone()});
            }
            auto select = [&]() -> const Scored& {
                std::size_t w = rng.index(pop_size);
                for (int t = 1; t < config.tournament_size; ++t) {
                    std::size_t c = rng.index(pop_size);
                    if (beats(pops[p][c], pops[p][w])) w = c;
                }
                return pops[p][w];
            };
            while (static_cast<int>(next.size()) < pop_size) {
                const Scored& a = select();
                if (rng.chance(config.op_rates[0])) {
                    const Scored& b = select();
                    auto [c1, c2] = homologous_crossover(a.tree, b.tree, rng);
                    next.push_back({std::move(c1)});
                    if (static_cast<int>(next.size()) < pop_size) {
                        next.push_back({std::move(c2)});
                    }
                } else if (rng.chance(config.op_rates[1])) {
                    next.push_back({mutate_tree(a.tree, rng)});
                } else if (rng.chance(config.op_rates[2])) {
                    const Scored& b = select();
                    next.push_back({or_crossover(a.tree, b.tree)});
                } else if (rng.chance(config.op_rates[3])) {
                    const Scored& b = select();
                    next.push_back({and_crossover(a.tree, b.tree)});
                } else {
                    next.push_back({a.tree.clone()});
                }
            }
            pops[p] = std::move(next);
        }
    }
    return result;
}

MultiRunResult coevolve_runs(const TrainingSet& training,
                             const CoevolutionConfig& config) {
    if (config.runs < 1) {
        throw std::invalid_argument("need at least one run");
    }
    MultiRunResult out;
    bool have = false;
    for (int run = 0; run < config.runs; ++run) {
        CoevolutionConfig c = config;
        c.rng_seed = config.rng_seed + run;
        CoevolveResult r = coevolve(training, c);
        out.run_accuracies.push_back(r.best_accuracy);
        if (!have || r.best_accuracy > out.best.best_accuracy ||
            (r.best_accuracy == out.best.best_accuracy &&
             r.best_distance_error < out.best.best_distance_error)) {
            out.best = std::move(r);
            out.best_run = run;
            have = true;
        }
    }
    return out;
}

}  // namespace wli::gp
