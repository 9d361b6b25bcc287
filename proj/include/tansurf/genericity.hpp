#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tansurf/classify.hpp"
#include "tansurf/curve.hpp"

namespace tansurf {

/// Monte Carlo sampling family: random polynomial pairs (c, u) with gamma
/// recovered by exact polynomial integration of gamma' = c u.
struct PerturbationSpec {
    std::uint64_t seed = 1;
    int dim = 3;
    int degree = 4;            // polynomial degree bound for u
    double amplitude = 1.0;    // coefficient amplitude for u and c
    int curves = 100;
    int samples_per_curve = 8; // random t samples per curve
    double t_min = -1.0;
    double t_max = 1.0;
    std::string connection_preset = "flat";
    std::uint64_t connection_seed = 1;
    double connection_amplitude = 0.1;
};

struct RandomDirectedCurve {
    DirectedCurve curve;
    int factor_order = 0;          // planted order of c at factor_root
    double factor_root = 0.0;      // only meaningful when factor_order > 0
};

/// Deterministic per-index draw: u polynomial bounded away from zero on the
/// domain (resampled otherwise), c with an order-1 root planted at a random
/// t* in half of the draws.
RandomDirectedCurve random_directed_curve(const PerturbationSpec& spec, int index);

struct SampleRecord {
    int curve_index = 0;
    double t = 0.0;
    NablaType type;
    SingularityClass verdict = SingularityClass::NonGeneric;
    double rank_margin = 0.0; // smallest accepted sigma ratio over rel_tol
    bool at_root = false;     // located by root-finding rather than sampling
};

struct TypeHistogram {
    std::map<std::vector<int>, int> counts; // determinate types only
    int undetermined = 0;
    int nongeneric_class = 0;
    int near_degenerate = 0; // rank margin within 10x tolerance
    std::vector<SampleRecord> samples;
    double worst_margin = 0.0;
    std::string rng_algorithm = "splitmix64";
};

TypeHistogram montecarlo_types(const PerturbationSpec& spec,
                               const ClassifyOptions& opts = {});

} // namespace tansurf
