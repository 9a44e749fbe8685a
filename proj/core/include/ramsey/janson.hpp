#pragma once

#include <ramsey/common.hpp>

#include <cstdint>
#include <vector>

namespace ramsey {

struct JansonInput {
    Vertex ground = 0;                     // ground set 0..ground-1
    std::vector<std::vector<Vertex>> sets; // B_i, repeats allowed
    double p = 0.0;
    double t = 0.0;
};

struct JansonResult {
    double mu = 0.0;        // sum_i p^{|B_i|}
    double var_prime = 0.0; // sum over ordered (i, j), B_i ∩ B_j nonempty, of p^{|B_i ∪ B_j|}
    double bound = 1.0;     // exp(-t^2 / (2 Var'))
};

/// Throws std::invalid_argument unless 0 <= t <= mu (with 1e-12 relative slack at mu).
JansonResult janson_bound(const JansonInput & input);

struct LowerTailEstimate {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0; // trials with X <= mu - t
    double frequency = 0.0;
    double sigma = 0.0;     // sqrt(bound (1 - bound) / trials)
    JansonResult janson;
    bool within = true;     // frequency <= bound + 3 sigma
};

/// Samples R ~ ground_p and counts how often X = #{i : B_i ⊆ R} is at most mu - t.
LowerTailEstimate janson_monte_carlo(const JansonInput & input, std::uint64_t trials, std::uint64_t seed,
    unsigned workers = 1);

struct CoarsenessReport {
    int k = 0;                 // largest set size
    double mu_p = 0.0;         // Monte Carlo Pr(some B ⊆ V_p)
    double mu_cp = 0.0;        // the same at cp, sharing the uniforms so V_cp ⊆ V_p
    double lower = 0.0;        // c^K mu_p
    double sigma = 0.0;
    bool holds = true;         // mu_cp + 3 sigma >= lower
};

/// Checks mu(cp) >= c^K mu(p) by Monte Carlo, c in (0, 1].
CoarsenessReport local_coarseness_check(const std::vector<std::vector<Vertex>> & family, Vertex ground, double p,
    double c, std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

} // namespace ramsey
