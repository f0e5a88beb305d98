#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "micro3d/genome.hpp"
#include "micro3d/nsga2_types.hpp"
#include "micro3d/rng.hpp"

namespace micro3d {

struct Individual {
    Genome genome;
    std::optional<ObjectiveVector> objectives;
    int rank = -1;           // front index, assigned by the sort
    double crowding = 0.0;   // +infinity on front boundaries
};

struct EAConfig {
    int pop_size = 50;       // even, >= 4
    int generations = 74;    // generational steps; history has generations + 1 entries
    double p_crossover = 0.9;
    double p_mutation = 0.05;  // per bit
    std::uint64_t seed = 1;
};

// Deb's fast non-dominated sort: partitions indexes into fronts F0, F1, ...
// and assigns ranks. Throws std::invalid_argument on unevaluated individuals.
std::vector<std::vector<int>> fast_nondominated_sort(std::vector<Individual>& pop);

// Standard crowding distance over one front: boundary individuals get
// +infinity, interior ones accumulate normalized neighbor gaps; an objective
// with zero range contributes nothing.
void crowding_distance(std::vector<Individual>& pop, const std::vector<int>& front);

// Lower rank wins, then larger crowding; full ties resolve by a coin flip
// from the shared stream.
const Individual& crowded_tournament(const Individual& a, const Individual& b, Rng& rng);

// Deterministic segment swap over [cut1, cut2).
std::pair<Genome, Genome> two_point_crossover_at(const Genome& a, const Genome& b, int cut1,
                              int cut2);

// With probability p_crossover, swap a uniformly chosen middle segment
// 0 <= i < j <= 226; otherwise return copies.
std::pair<Genome, Genome> two_point_crossover(const Genome& a, const Genome& b,
                                              double p_crossover, Rng& rng);

// Independent per-bit flips.
Genome bit_flip_mutation(Genome g, double p_mutation, Rng& rng);

using EvalFn = std::function<ObjectiveVector(const Genome&)>;

struct GenerationRecord {
    std::vector<Individual> population;  // evaluated, ranked, crowded
    std::vector<int> front0;
};

using EvolutionHistory = std::vector<GenerationRecord>;

// Canonical elitist NSGA-II loop: binary crowded tournaments, two-point
// crossover, bit-flip mutation, merged (mu + lambda) survivor selection by
// rank then crowding. Generation g of the returned history is the evaluated
// population after g steps (entry 0 is the random initial population), so a
// run with `generations` steps yields fronts indexed 0..generations.
// Deterministic per seed; eval_fn must be pure. eval_threads <= 1 runs
// evaluations serially, otherwise they fan out across threads.
EvolutionHistory evolve(const EAConfig& cfg, const EvalFn& eval_fn, int eval_threads = 1);

} // namespace micro3d
