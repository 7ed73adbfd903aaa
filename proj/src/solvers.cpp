#include <oddom/solvers.hpp>
#include <oddom/wod.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace oddom {

namespace {

constexpr std::uint64_t poll_interval = 1U << 12;

void check_searchable(const Graph & g, const SolverOptions & options)
{
    if (g.order() < 1)
        throw std::invalid_argument("exact solvers need a graph with at least one vertex");
    if (g.order() > options.cap)
        throw CapExceeded(g.order(), options.cap);
}

unsigned worker_count(const SolverOptions & options)
{
    if (options.threads == 0)
        return std::max(1U, std::thread::hardware_concurrency());
    return options.threads;
}

template <typename Fn>
void run_workers(unsigned workers, Fn && fn)
{
    if (workers <= 1) {
        fn(0U);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&fn, w] { fn(w); });
}

struct Best
{
    int score = std::numeric_limits<int>::min();
    Mask arg = 0;

    // Higher score wins; ties go to the smaller mask.
    void offer(int s, Mask m)
    {
        if (s > score || (s == score && m < arg)) {
            score = s;
            arg = m;
        }
    }
};

// Maximises score(C, Odd(C)) over every C in 2^V with a Gray-code walk, so each
// step costs one row xor. The top bits of C select a chunk; chunks are handed to
// workers and merged in a fixed way, so the outcome does not depend on the
// thread count. If `stop_at` is reached the search stops early and the returned
// mask is only some maximiser, not necessarily the smallest.
template <typename Score>
Best gray_maximise(const Graph & g, unsigned workers, int stop_at, Score score)
{
    const int n = g.order();
    int chunk_bits = 0;
    if (workers > 1)
        chunk_bits = std::min(n, static_cast<int>(std::bit_width(workers - 1U)) + 4);
    const int low_bits = n - chunk_bits;
    const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
    const std::uint64_t steps = std::uint64_t{1} << low_bits;

    std::vector<Best> per_worker(workers);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> done{false};

    run_workers(workers, [&](unsigned w) {
        Best local;
        for (std::uint64_t chunk = next_chunk++; chunk < chunks && ! done.load(std::memory_order_relaxed);
             chunk = next_chunk++) {
            Mask c = static_cast<Mask>(chunk) << low_bits;
            Mask odd = odd_neighbourhood(g, c);
            local.offer(score(c, odd), c);
            for (std::uint64_t s = 1; s < steps; ++s) {
                const int v = std::countr_zero(s);
                c ^= bit(v);
                odd ^= g.row(v);
                local.offer(score(c, odd), c);
                if (local.score >= stop_at) {
                    done = true;
                    break;
                }
                if ((s & (poll_interval - 1)) == 0 && done.load(std::memory_order_relaxed))
                    break;
            }
            if (local.score >= stop_at)
                done = true;
        }
        per_worker[w] = local;
    });

    Best merged;
    for (const auto & b : per_worker)
        if (b.score != std::numeric_limits<int>::min())
            merged.offer(b.score, b.arg);
    return merged;
}

// Smallest mask C (by value) with score(C, Odd(C)) == target, walking masks in
// increasing order and updating Odd incrementally.
template <typename Score>
std::optional<Mask> first_ascending(const Graph & g, int target, Score score)
{
    const std::uint64_t count = std::uint64_t{1} << g.order();
    Mask odd = 0;
    Mask prev = 0;
    for (std::uint64_t m = 0; m < count; ++m) {
        for (Mask changed = prev ^ m; changed != 0; changed &= changed - 1)
            odd ^= g.row(std::countr_zero(changed));
        prev = m;
        if (score(m, odd) == target)
            return m;
    }
    return std::nullopt;
}

Mask next_combination(Mask m)
{
    const Mask lowest = m & (~m + 1);
    const Mask ripple = m + lowest;
    return (((ripple ^ m) >> 2) / lowest) | ripple;
}

// Calls visit(D, Odd(D)) for every D of the given size inside the low `width`
// bits, in increasing mask order, until visit returns false.
template <typename Visit>
void for_each_combination(const Graph & g, int width, int size, Mask fixed, Mask fixed_odd, Visit visit)
{
    if (size > width)
        return;
    if (size == 0) {
        visit(fixed, fixed_odd);
        return;
    }
    const Mask limit = full_mask(width);
    Mask m = full_mask(size);
    Mask odd = fixed_odd ^ odd_neighbourhood(g, m);
    while (true) {
        if (! visit(m | fixed, odd))
            return;
        if (m == (limit & ~full_mask(width - size)))
            return;
        const Mask next = next_combination(m);
        for (Mask changed = m ^ next; changed != 0; changed &= changed - 1)
            odd ^= g.row(std::countr_zero(changed));
        m = next;
    }
}

int prime_score(Mask d, Mask odd)
{
    return std::popcount(d | odd);
}

} // namespace

CapExceeded::CapExceeded(int order, int cap) :
    std::runtime_error("graph order " + std::to_string(order) + " exceeds the exact-search cap of " +
                       std::to_string(cap) + "; raise the cap explicitly to proceed"),
    order_(order),
    cap_(cap)
{
}

const char * to_string(Quantity q)
{
    switch (q) {
    case Quantity::kappa:
        return "kappa";
    case Quantity::kappa_prime:
        return "kappa_prime";
    case Quantity::kappa_q:
        return "kappa_q";
    }
    return "unknown";
}

Bounds kappa_bounds(const Graph & g)
{
    const int n = g.order();
    const int delta = g.max_degree();
    return {delta, n * delta / (delta + 1)};
}

Bounds kappa_prime_bounds(const Graph & g)
{
    const int n = g.order();
    const int delta = g.min_degree();
    const int gap = n - delta;
    return {(n + gap - 1) / gap, delta + 1};
}

VertexSet kappa_wod_set(const Graph & g, const VertexSet & c)
{
    return odd_neighbourhood(g, c) - c;
}

VertexSet kappa_prime_non_wod_set(const Graph & g, const VertexSet & d)
{
    return odd_neighbourhood(g, d) | d;
}

ExtremalResult kappa(const Graph & g, const SolverOptions & options)
{
    check_searchable(g, options);
    const auto bounds = kappa_bounds(g);
    auto score = [](Mask c, Mask odd) { return std::popcount(odd & ~c); };

    int value = bounds.upper;
    std::optional<Mask> witness;
    if (bounds.width() > 0) {
        const auto best = gray_maximise(g, worker_count(options), bounds.upper, score);
        value = best.score;
        // A full walk already yields the smallest maximiser.
        if (value < bounds.upper)
            witness = best.arg;
    }
    if (! witness)
        witness = first_ascending(g, value, score);
    if (! witness)
        throw std::logic_error("kappa: no set attains the computed value " + std::to_string(value));

    ExtremalResult r{Quantity::kappa, value, VertexSet(g.order(), *witness), VertexSet::none(g.order()), bounds};
    r.kappa = value;
    return r;
}

ExtremalResult kappa_prime(const Graph & g, const SolverOptions & options)
{
    check_searchable(g, options);
    const int n = g.order();
    const auto bounds = kappa_prime_bounds(g);
    const unsigned workers = worker_count(options);

    // Phase 1: the value. Sizes go up in odd steps; a D of size s scores at
    // least s, so once s reaches the incumbent nothing can improve on it.
    int best = n + 1;
    for (int size = 1; size <= n && size < best && best > bounds.lower; size += 2) {
        // Split by the highest member of D.
        std::atomic<int> next_top{size - 1};
        std::atomic<int> shared_best{best};
        run_workers(workers, [&](unsigned) {
            for (int top = next_top++; top < n; top = next_top++) {
                if (shared_best.load(std::memory_order_relaxed) <= bounds.lower)
                    return;
                int local = shared_best.load(std::memory_order_relaxed);
                for_each_combination(g, top, size - 1, bit(top), g.row(top), [&](Mask d, Mask odd) {
                    local = std::min(local, prime_score(d, odd));
                    return local > bounds.lower;
                });
                int seen = shared_best.load();
                while (local < seen && ! shared_best.compare_exchange_weak(seen, local)) {
                }
            }
        });
        best = shared_best.load();
    }
    const int value = best;

    // Phase 2: the smallest optimal D. Any optimal D has |D| <= value.
    std::optional<Mask> witness;
    for (int size = 1; size <= value; size += 2) {
        if (witness && full_mask(size) >= *witness)
            break;
        for_each_combination(g, n, size, 0, 0, [&](Mask d, Mask odd) {
            if (witness && d >= *witness)
                return false;
            if (prime_score(d, odd) == value) {
                witness = d;
                return false;
            }
            return true;
        });
    }
    if (! witness)
        throw std::logic_error("kappa_prime: no odd set attains the computed value " + std::to_string(value));

    ExtremalResult r{Quantity::kappa_prime, value, VertexSet(n, *witness), VertexSet::none(n), bounds};
    r.kappa_prime = value;
    return r;
}

ExtremalResult kappa_q(const Graph & g, const SolverOptions & options)
{
    const auto k = kappa(g, options);
    const auto kp = kappa_prime(g, options);
    const int n = g.order();
    ExtremalResult r{Quantity::kappa_q,
                     std::max(k.value, n - kp.value),
                     k.witness,
                     kp.witness,
                     {std::max(k.bounds.lower, n - kp.bounds.upper), std::max(k.bounds.upper, n - kp.bounds.lower)}};
    r.kappa = k.value;
    r.kappa_prime = kp.value;
    return r;
}

bool verify_extremal(const Graph & g, const ExtremalResult & result)
{
    const int n = g.order();
    auto kappa_ok = [&](const VertexSet & c, int value) {
        if (c.universe() != n)
            return false;
        const auto b = kappa_wod_set(g, c);
        return b.size() == value && verify_wod_certificate(g, b, c);
    };
    auto prime_ok = [&](const VertexSet & d, int value) {
        if (d.universe() != n)
            return false;
        const auto b = kappa_prime_non_wod_set(g, d);
        return b.size() == value && verify_non_wod_certificate(g, b, d);
    };
    switch (result.quantity) {
    case Quantity::kappa:
        return kappa_ok(result.witness, result.value);
    case Quantity::kappa_prime:
        return prime_ok(result.witness, result.value);
    case Quantity::kappa_q:
        return kappa_ok(result.witness, result.kappa) && prime_ok(result.secondary_witness, result.kappa_prime) &&
               result.value == std::max(result.kappa, n - result.kappa_prime);
    }
    return false;
}

ClosedForm gpq_closed_form(int p, int q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("closed form needs p >= 1 and q >= 1");
    const int n = p * q;
    if (q % 2 == 1)
        return {n - p, q};
    // Even q: the value p+q-1 is the one the construction and the matching
    // lower-bound argument establish; p+q+1 would already exceed n for K2.
    return {std::max(n - p, n - q), p + q - 1};
}

bool check_threshold_condition(const Graph & g, int k, const SolverOptions & options)
{
    if (g.order() > options.cap)
        throw CapExceeded(g.order(), options.cap);
    const int n = g.order();
    const Mask all = full_mask(n);
    const int limit = n - k;
    if (n == 0)
        return true;
    // Score 1 marks a non-empty D that breaks one of the two inequalities.
    auto violation = [&](Mask d, Mask odd) {
        if (d == 0)
            return 0;
        const bool first = std::popcount(d | odd) > limit;
        const bool second = std::popcount(d | (all & ~odd)) > limit;
        return first && second ? 0 : 1;
    };
    return gray_maximise(g, worker_count(options), 1, violation).score == 0;
}

} // namespace oddom
