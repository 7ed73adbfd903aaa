#include <oddom/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace oddom {

namespace {

constexpr double slack = 1e-12;

void check_fraction_pair(double c, double d)
{
    if (! (c > 0.0 && c < 1.0))
        throw std::invalid_argument("c must lie in (0, 1), got " + std::to_string(c));
    if (! (d > 0.0 && d <= 1.0 - c + slack))
        throw std::invalid_argument("d must lie in (0, 1-c], got d = " + std::to_string(d) +
                                    " with c = " + std::to_string(c));
}

// c/(1-d), snapped to 1 when d sits on the 1-c endpoint up to rounding.
double entropy_argument(double c, double d)
{
    const double t = c / (1.0 - d);
    if (t > 1.0 + slack)
        throw std::invalid_argument("c/(1-d) exceeds 1");
    return std::min(t, 1.0);
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

double binary_entropy(double t)
{
    if (! (t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("binary entropy argument must lie in [0, 1], got " + std::to_string(t));
    if (t == 0.0 || t == 1.0)
        return 0.0;
    return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

void validate(const LLLParams & p)
{
    check_fraction_pair(p.c, p.d);
    if (! (p.r >= 2.0))
        throw std::invalid_argument("r must be at least 2, got " + std::to_string(p.r));
    if (! (p.n >= 1.0))
        throw std::invalid_argument("n must be at least 1, got " + std::to_string(p.n));
}

double lll_asymptotic_condition(double c, double d)
{
    check_fraction_pair(c, d);
    return (1.0 - d) * (binary_entropy(entropy_argument(c, d)) - 1.0) + binary_entropy(d);
}

double lll_condition(const LLLParams & p)
{
    validate(p);
    return lll_asymptotic_condition(p.c, p.d) + 4.0 * (1.0 - p.c) / p.r + std::log2(p.r) / p.n;
}

std::vector<double> density_grid(double c, double grid_step)
{
    const double top = 1.0 - c;
    std::vector<double> grid;
    for (long k = 1;; ++k) {
        const double d = static_cast<double>(k) * grid_step;
        if (d >= top - slack)
            break;
        grid.push_back(d);
    }
    grid.push_back(top);
    return grid;
}

bool asymptotically_feasible(double c, double grid_step)
{
    for (double d : density_grid(c, grid_step))
        if (lll_asymptotic_condition(c, d) > 0.0)
            return false;
    return true;
}

double min_feasible_c(double grid_step)
{
    if (! (grid_step > 0.0 && grid_step <= 1e-3))
        throw std::invalid_argument("grid step must lie in (0, 1e-3], got " + std::to_string(grid_step));
    for (long k = 1;; ++k) {
        const double c = static_cast<double>(k) * grid_step;
        if (c >= 1.0)
            break;
        if (asymptotically_feasible(c, grid_step))
            return c;
    }
    throw std::logic_error("no feasible c below 1 on this grid");
}

double probability_lower_bound(int n, double c)
{
    if (n < 1)
        throw std::invalid_argument("probability bound needs n >= 1");
    if (! (c > 0.0 && c < 1.0))
        throw std::invalid_argument("c must lie in (0, 1)");
    const double nn = static_cast<double>(n);
    const double r = 4.0 * std::numbers::ln2 * (1.0 - c) * nn * nn;
    return std::pow(0.25, 2.0 * (1.0 - c) * nn / r);
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t index)
{
    return splitmix64(base_seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

std::vector<TrialReport> sample_and_measure(int n, std::uint64_t trials, std::uint64_t base_seed,
                                            const SolverOptions & options)
{
    if (n < 1)
        throw std::invalid_argument("sampling needs n >= 1");
    if (n > options.cap)
        throw CapExceeded(n, options.cap);

    std::vector<TrialReport> reports(trials);
    SolverOptions per_trial = options;
    per_trial.threads = 1;

    auto run_trial = [&](std::uint64_t i) {
        const auto start = std::chrono::steady_clock::now();
        TrialReport & r = reports[i];
        r.index = i;
        r.seed = trial_seed(base_seed, i);
        r.n = n;
        const auto g = random_graph(n, r.seed);
        r.graph6 = write_graph6(g);
        const auto q = kappa_q(g, per_trial);
        r.kappa = q.kappa;
        r.kappa_prime = q.kappa_prime;
        r.kappa_q = q.value;
        r.ratio = static_cast<double>(q.value) / n;
        r.kappa_witness = q.witness;
        r.kappa_prime_witness = q.secondary_witness;
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    unsigned workers = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    if (workers <= 1 || trials <= 1) {
        for (std::uint64_t i = 0; i < trials; ++i)
            run_trial(i);
        return reports;
    }
    std::atomic<std::uint64_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t i = next++; i < trials; i = next++)
                    run_trial(i);
            });
    }
    return reports;
}

TrialSummary summarise(const std::vector<TrialReport> & reports, double threshold_ratio)
{
    TrialSummary s;
    s.count = reports.size();
    s.threshold_ratio = threshold_ratio;
    if (reports.empty())
        return s;
    std::vector<double> ratios;
    ratios.reserve(reports.size());
    for (const auto & r : reports) {
        ratios.push_back(r.ratio);
        if (static_cast<double>(r.kappa_q) < threshold_ratio * r.n)
            ++s.below_threshold;
    }
    std::sort(ratios.begin(), ratios.end());
    s.fraction_below = static_cast<double>(s.below_threshold) / static_cast<double>(s.count);
    s.min_ratio = ratios.front();
    s.max_ratio = ratios.back();
    const std::size_t mid = ratios.size() / 2;
    s.median_ratio = ratios.size() % 2 == 1 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
    return s;
}

} // namespace oddom
