#pragma once

#include <oddom/graph.hpp>

#include <stdexcept>
#include <utility>

namespace oddom {

/// Raised when an exact search is asked to enumerate past its order cap.
class CapExceeded : public std::runtime_error
{
public:
    CapExceeded(int order, int cap);
    int order() const { return order_; }
    int cap() const { return cap_; }

private:
    int order_;
    int cap_;
};

inline constexpr int default_enumeration_cap = 30;

struct SolverOptions
{
    /// Largest order the exponential searches will accept.
    int cap = default_enumeration_cap;
    /// Worker threads; results do not depend on this.
    unsigned threads = 1;
};

enum class Quantity
{
    kappa,
    kappa_prime,
    kappa_q
};

struct Bounds
{
    int lower = 0;
    int upper = 0;

    int width() const { return upper - lower; }
    friend bool operator==(const Bounds &, const Bounds &) = default;
};

/// Value of an extremal quantity together with the set that attains it.
///
/// For kappa the witness is C, and the WOD set it certifies is Odd(C)\C.
/// For kappa_prime the witness is an odd D, and D u Odd(D) is the non-WOD set.
/// For kappa_q both witnesses are filled in.
struct ExtremalResult
{
    Quantity quantity;
    int value = 0;
    VertexSet witness;
    /// Only meaningful for kappa_q: the kappa_prime witness D.
    VertexSet secondary_witness;
    Bounds bounds;
    int kappa = 0;
    int kappa_prime = 0;
};

/// (Delta, floor(n*Delta/(Delta+1))); (0, 0) for an edgeless graph.
Bounds kappa_bounds(const Graph & g);
/// (ceil(n/(n-delta)), delta+1).
Bounds kappa_prime_bounds(const Graph & g);

/// max over C of |Odd(C)\C|; witness is the smallest such C by mask value.
ExtremalResult kappa(const Graph & g, const SolverOptions & options = {});

/// min over odd D of |D u Odd(D)|; witness is the smallest such D by mask value.
ExtremalResult kappa_prime(const Graph & g, const SolverOptions & options = {});

/// max(kappa, n - kappa_prime), carrying both witnesses.
ExtremalResult kappa_q(const Graph & g, const SolverOptions & options = {});

/// Set dominated by a kappa witness: Odd(C)\C.
VertexSet kappa_wod_set(const Graph & g, const VertexSet & c);
/// Non-WOD set built from a kappa_prime witness: D u Odd(D).
VertexSet kappa_prime_non_wod_set(const Graph & g, const VertexSet & d);

/// Checks an ExtremalResult's witnesses against its values without searching.
bool verify_extremal(const Graph & g, const ExtremalResult & result);

struct ClosedForm
{
    int kappa;
    int kappa_prime;
    friend bool operator==(const ClosedForm &, const ClosedForm &) = default;
};

/// Values of kappa and kappa_prime on complete_multipartite(p, q).
///
/// Odd q: (n-p, q). Even q: (max(n-p, n-q), p+q-1).
ClosedForm gpq_closed_form(int p, int q);

/// True when every non-empty D has |D u Odd(D)| > n-k and |D u (V\Odd(D))| > n-k,
/// which is sufficient for kappa_q(G) < k.
bool check_threshold_condition(const Graph & g, int k, const SolverOptions & options = {});

const char * to_string(Quantity q);

} // namespace oddom
