#pragma once

#include <oddom/graph.hpp>
#include <oddom/solvers.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oddom {

/// H(t) = -t log2 t - (1-t) log2 (1-t), with H(0) = H(1) = 0.
/// Throws std::invalid_argument outside [0, 1].
double binary_entropy(double t);

/// Parameters of the local-lemma weight inequality: target fraction c,
/// set density d, weight parameter r and order n.
struct LLLParams
{
    double n;
    double c;
    double d;
    double r;
};

/// Checks 0 < c < 1, 0 < d <= 1-c (up to rounding), r >= 2 and n >= 1.
void validate(const LLLParams & p);

/// (1-d)[H(c/(1-d)) - 1] + H(d) + 4(1-c)/r + log2(r)/n.
/// A value <= 0 means the inequality holds at these parameters.
double lll_condition(const LLLParams & p);

/// The r, n -> infinity limit: (1-d)[H(c/(1-d)) - 1] + H(d).
double lll_asymptotic_condition(double c, double d);

/// d grid used by the feasibility sweep: step, 2*step, ..., up to 1-c, with
/// 1-c itself always included.
std::vector<double> density_grid(double c, double grid_step);

/// True when lll_asymptotic_condition(c, d) <= 0 for every d on density_grid(c, grid_step).
bool asymptotically_feasible(double c, double grid_step);

/// Smallest c = k*grid_step (k = 1, 2, ...) that is asymptotically feasible.
/// Throws std::invalid_argument unless 0 < grid_step <= 1e-3.
double min_feasible_c(double grid_step);

/// (1/4)^(2(1-c)n/r) with r = 4 ln2 (1-c) n^2, which simplifies to exp(-1/n).
double probability_lower_bound(int n, double c);

/// Seed of trial `index`: splitmix64 applied to base_seed + (index+1) * 0x9e3779b97f4a7c15.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t index);

struct TrialReport
{
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::string graph6;
    int kappa = 0;
    int kappa_prime = 0;
    int kappa_q = 0;
    double ratio = 0.0;
    VertexSet kappa_witness;
    VertexSet kappa_prime_witness;
    double elapsed_ms = 0.0;
};

/// Draws random_graph(n, trial_seed(base_seed, i)) for i < trials and solves
/// each exactly. Trials run on options.threads workers (each solve is itself
/// single-threaded); the result is in trial order either way.
/// Throws CapExceeded when n > options.cap.
std::vector<TrialReport> sample_and_measure(int n, std::uint64_t trials, std::uint64_t base_seed,
                                            const SolverOptions & options = {});

struct TrialSummary
{
    std::uint64_t count = 0;
    std::uint64_t below_threshold = 0;
    double threshold_ratio = 0.0;
    double fraction_below = 0.0;
    double min_ratio = 0.0;
    double median_ratio = 0.0;
    double max_ratio = 0.0;
};

/// Counts trials with kappa_q < threshold_ratio * n; ratios are kappa_q / n.
TrialSummary summarise(const std::vector<TrialReport> & reports, double threshold_ratio);

} // namespace oddom
