#pragma once

#include <ramsey/graph.hpp>
#include <ramsey/sampling.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

enum class Family { copies, kap, schur };
std::string_view to_string(Family family) noexcept;
Family family_from_string(std::string_view name);

struct FamilySpec {
    Family family = Family::schur;
    Vertex size = 0;                   // n for copies, N otherwise
    int r = 2;
    int k = 3;                         // progression length for kap
    Graph pattern = atlas::complete(3); // H for copies
};

UniformHypergraph build_family(const FamilySpec & spec);

/// Exponent a in p ~ size^{-1/a}: m_2(H), k - 1 or 2.
double family_exponent(const FamilySpec & spec);

struct CurvePoint {
    double p = 0.0;
    MonteCarloResult result;
};

struct ThresholdCurve {
    std::vector<CurvePoint> points;
    std::vector<double> isotonic; // weighted least-squares non-decreasing fit of the raw frequencies
    std::optional<double> p_hat;  // 1/2-crossing of the fit; empty when censored
    std::optional<double> p10;
    std::optional<double> p90;
    std::optional<double> width;  // p90 - p10
    double exponent = 1.0;
    std::optional<double> scaled; // p_hat * size^{1/exponent}
};

/// Pool adjacent violators, weights > 0.
std::vector<double> isotonic_fit(const std::vector<double> & values, const std::vector<double> & weights);

/// Linear interpolation of the first crossing of `level` by a non-decreasing fit.
/// Empty when the fit does not bracket the level (starts at or above it, or never reaches it).
std::optional<double> crossing(const std::vector<double> & grid, const std::vector<double> & fit, double level);

/// Pr(H[V_p] not r-colourable) over the grid. Grid point g uses trial indices
/// g * trials .. g * trials + trials - 1 of the seed. The grid must be strictly
/// increasing inside [0, 1].
ThresholdCurve threshold_curve(const FamilySpec & family, const std::vector<double> & grid, std::uint64_t trials,
    std::uint64_t seed, unsigned workers = 1, SearchLimits limits = {});

/// Experiment description read from flat "key = value" text ('#' comments).
/// Keys: family, size, r, k, graph, grid, trials, seed. grid is either a comma
/// list or start:stop:count (count evenly spaced points, both ends included).
struct ExperimentConfig {
    FamilySpec family;
    std::vector<double> grid;
    std::uint64_t trials = 100;
    std::optional<std::uint64_t> seed;
};

ExperimentConfig read_experiment_config(std::istream & in);
std::vector<double> parse_grid(std::string_view text);

/// Columns p, successes, trials, freq, wilson_lo, wilson_hi.
void write_curve_csv(std::ostream & out, const ThresholdCurve & curve);

/// Shortest decimal that round-trips.
std::string format_double(double x);

} // namespace ramsey
