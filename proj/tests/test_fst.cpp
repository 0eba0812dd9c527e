#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "golden_fst.hpp"
#include "wli/fst/transducer.hpp"

using namespace wli;
using namespace wli::fst;

namespace {

RuleOracle always_true() {
    return [](DepositionLabel, const AttributeVector&) { return true; };
}

SymbolSeries series(std::vector<SymbolSpan> items) {
    SymbolSeries s;
    s.items = std::move(items);
    return s;
}

}  // namespace

TEST_CASE("the published 20-state machine follows its golden trace") {
    Transducer t = parse_transducer(kGoldenFstText);
    REQUIRE(t.n_states == 20);

    // Scripted rule outcomes for the three steps.
    int call = 0;
    bool script[] = {true, false, true};
    RuleOracle oracle = [&](DepositionLabel, const AttributeVector&) {
        REQUIRE(call < 3);
        return script[call++];
    };

    SymbolSeries in = series({{VshSymbol::d, 96.0},
                              {VshSymbol::d, 3.0},
                              {VshSymbol::cb, 12.5}});
    TransducerRun run = fst_run(t, in, oracle);

    REQUIRE(run.states.size() == 4);
    CHECK(run.states[0] == 0);
    CHECK(run.states[1] == 18);
    CHECK(run.states[2] == 10);
    CHECK(run.states[3] == 7);
    REQUIRE(run.outputs.size() == 3);
    CHECK(run.outputs[0] == DepositionLabel::OB);
    CHECK(run.outputs[1] == DepositionLabel::Null);
    CHECK(run.outputs[2] == DepositionLabel::A);
    // The second step's thickness stayed buffered until step three fired.
    CHECK(run.residual_thickness == doctest::Approx(0.0));
    CHECK(call == 3);
}

TEST_CASE("fst_step buffers on a miss and clears on a hit") {
    Transducer t = parse_transducer(kGoldenFstText);
    AttributeAccumulator buffer;
    bool fire = false;
    RuleOracle oracle = [&](DepositionLabel, const AttributeVector&) {
        return fire;
    };
    StepResult miss = fst_step(t, 0, VshSymbol::a, 2.0, buffer, oracle);
    CHECK(miss.label == DepositionLabel::Null);
    CHECK(buffer.total_thickness() == doctest::Approx(2.0));
    fire = true;
    StepResult hit = fst_step(t, miss.next_state, VshSymbol::a, 1.0, buffer,
                              oracle);
    CHECK(hit.label != DepositionLabel::Null);
    CHECK(buffer.empty());
    CHECK_THROWS_AS(fst_step(t, 99, VshSymbol::a, 1.0, buffer, oracle),
                    std::invalid_argument);
}

TEST_CASE("build_target pins each unit label to its last symbol") {
    SymbolSeries symbols = series({{VshSymbol::a, 1.0},
                                   {VshSymbol::b, 1.0},
                                   {VshSymbol::d, 1.0},
                                   {VshSymbol::c, 1.0}});
    std::vector<LabeledUnit> units = {
        {DepositionLabel::A, {{VshSymbol::a, 1.0}, {VshSymbol::b, 1.0}}},
        {DepositionLabel::M, {{VshSymbol::d, 1.0}, {VshSymbol::c, 1.0}}}};
    TargetSequence target = build_target(symbols, units);
    REQUIRE(target.labels.size() == 4);
    CHECK(target.labels[0] == DepositionLabel::Null);
    CHECK(target.labels[1] == DepositionLabel::A);
    CHECK(target.labels[2] == DepositionLabel::Null);
    CHECK(target.labels[3] == DepositionLabel::M);

    std::vector<LabeledUnit> short_units = {
        {DepositionLabel::A, {{VshSymbol::a, 1.0}}}};
    CHECK_THROWS_AS(build_target(symbols, short_units),
                    std::invalid_argument);
}

TEST_CASE("fst_fitness counts mismatches and label distances") {
    TransducerRun run;
    run.outputs = {DepositionLabel::Null, DepositionLabel::A,
                   DepositionLabel::OB, DepositionLabel::M};
    TargetSequence target;
    target.labels = {DepositionLabel::Null, DepositionLabel::A,
                     DepositionLabel::OA, DepositionLabel::Null};
    FstFitness f = fst_fitness(run, target);
    CHECK(f.mismatches == 2);
    // OB vs OA is 2 jumps; M vs null costs the maximum 4.
    CHECK(f.distance_error == doctest::Approx(6.0));

    run.outputs.pop_back();
    CHECK_THROWS_AS(fst_fitness(run, target), std::invalid_argument);
}

TEST_CASE("mutate_fst forces at least one change, a few on average") {
    Rng rng(2024);
    Transducer t = random_transducer(20, rng);
    int total_changes = 0;
    const int trials = 400;
    for (int i = 0; i < trials; ++i) {
        Transducer m = mutate_fst(t, rng);
        int changes = 0;
        for (std::size_t k = 0; k < t.transition.size(); ++k) {
            if (m.transition[k] != t.transition[k]) ++changes;
        }
        for (std::size_t k = 0; k < t.output.size(); ++k) {
            if (m.output[k] != t.output[k]) ++changes;
        }
        CHECK(changes >= 1);
        total_changes += changes;
        CHECK(m.n_states == t.n_states);
    }
    // 1 forced + ~2 expected sweep changes over both tables.
    double mean = static_cast<double>(total_changes) / trials;
    CHECK(mean > 2.0);
    CHECK(mean < 4.0);
}

TEST_CASE("transducers round-trip through the table text form") {
    Rng rng(8);
    Transducer t = random_transducer(7, rng);
    std::string text = render_transducer(t);
    Transducer back = parse_transducer(text);
    CHECK(back == t);
    CHECK(render_transducer(back) == text);
    CHECK_THROWS_AS(parse_transducer("garbage"), std::invalid_argument);
}

TEST_CASE("fst_run output length and state trace are consistent") {
    Rng rng(55);
    Transducer t = random_transducer(20, rng);
    std::vector<SymbolSpan> items;
    for (int i = 0; i < 64; ++i) {
        items.push_back({all_symbols()[rng.index(kSymbolCount)], 1.0});
    }
    SymbolSeries in = series(items);
    TransducerRun run = fst_run(t, in, always_true());
    CHECK(run.outputs.size() == in.size());
    CHECK(run.states.size() == in.size() + 1);
    for (std::size_t i = 0; i < in.size(); ++i) {
        CHECK(run.states[i + 1] ==
              t.next_state(run.states[i], in.items[i].symbol));
        // Always-true rules fire at every step.
        CHECK(run.outputs[i] ==
              t.rule_name(run.states[i], in.items[i].symbol));
    }
    CHECK(run.residual_thickness == doctest::Approx(0.0));

    // Determinism: the identical run reproduces itself.
    TransducerRun again = fst_run(t, in, always_true());
    CHECK(again.outputs == run.outputs);
    CHECK(again.states == run.states);
}

TEST_CASE("buffered thickness is conserved between emissions") {
    Rng rng(91);
    Transducer t = random_transducer(6, rng);
    std::vector<SymbolSpan> items;
    double total = 0.0;
    for (int i = 0; i < 40; ++i) {
        double th = 0.5 + rng.real() * 3.0;
        items.push_back({all_symbols()[rng.index(kSymbolCount)], th});
        total += th;
    }
    // Fire every third step.
    int step = 0;
    double emitted = 0.0;
    AttributeAccumulator buffer;
    int state = 0;
    for (const SymbolSpan& in : items) {
        double before = buffer.total_thickness();
        StepResult r = fst_step(t, state, in.symbol, in.thickness, buffer,
                                [&](DepositionLabel, const AttributeVector&) {
                                    return ++step % 3 == 0;
                                });
        if (r.label != DepositionLabel::Null) {
            emitted += before + in.thickness;
        }
        state = r.next_state;
    }
    CHECK(emitted + buffer.total_thickness() == doctest::Approx(total));
}

TEST_CASE("evolve_fst solves a small transduction task") {
    // Target produced by a known machine, so a 0-mismatch solution exists.
    Rng rng(12);
    Transducer truth = random_transducer(3, rng);
    std::vector<SymbolSpan> items;
    for (int i = 0; i < 24; ++i) {
        items.push_back({all_symbols()[rng.index(3)], 1.0});
    }
    SymbolSeries in = series(items);
    TransducerRun run = fst_run(truth, in, always_true());
    TargetSequence target;
    target.labels = run.outputs;

    GaConfig config;
    config.n_states = 3;
    config.max_generations = 1000;
    config.mutation_rate = 0.2;  // the default 2% explores far too slowly here
    config.rng_seed = 5;
    EvolveFstResult result = evolve_fst(in, always_true(), target, config);
    CHECK(result.best_fitness.mismatches == 0);
    // Best-so-far mismatches never regress.
    int last = result.stats.front().best_so_far;
    for (const FstGenerationStats& g : result.stats) {
        CHECK(g.best_so_far <= last);
        last = g.best_so_far;
    }
}
