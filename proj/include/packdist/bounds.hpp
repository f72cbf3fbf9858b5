// bounds.hpp — lower-bound machinery: exhaustive colorability search on
// finite windows, maximum-density window search, the affine single-class
// density law, and the exact-rational density aggregator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "packdist/core.hpp"

namespace packdist {

using BigRational = boost::rational<boost::multiprecision::cpp_int>;

struct BudgetExceeded : std::runtime_error {
    std::string checkpoint;
    BudgetExceeded(const std::string& what, std::string cp)
        : std::runtime_error(what), checkpoint(std::move(cp)) {}
};
struct NotAffine : std::runtime_error {
    std::vector<long long> raw_values;
    NotAffine(const std::string& what, std::vector<long long> raw)
        : std::runtime_error(what), raw_values(std::move(raw)) {}
};
struct RuleRangeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DistanceMode {
    FullGraph,  // distances in D(k,t), shortest paths may leave the window
    Induced,    // distances in the subgraph induced by the window
};

// Colorability of the window {1..p} of D(k,t) with colors 1..c.
struct SearchProblem {
    GraphSpec spec;
    int window = 0;     // p
    int max_color = 0;  // c
    std::map<int, int> precoloring;  // vertex (1-based) -> color
    DistanceMode mode = DistanceMode::FullGraph;
};

enum class SearchStatus { Sat, Unsat, Timeout };

struct SearchStats {
    long long nodes = 0;
    int max_depth = 0;
    double seconds = 0.0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Timeout;
    std::optional<std::vector<int>> witness;  // colors of vertices 1..p
    SearchStats stats;
    std::string checkpoint;  // resumable state when status == Timeout
};

struct Budget {
    long long max_nodes = 0;   // 0 = unlimited
    double max_seconds = 0.0;  // 0 = unlimited
};

// Exhaustive DFS (vertices left to right, colors ascending, incremental
// feasible-color bitmasks). UNSAT only after exhausting the tree; SAT
// witnesses are re-verified by an all-pairs check before being reported.
// jobs > 1 splits the first free vertex's color branches across OpenMP
// workers (checkpointing requires jobs = 1).
SearchOutcome search_colorability(const SearchProblem& problem, Budget budget = {},
                                  int jobs = 1, const std::string& resume = "");

// Same engine over an arbitrary finite metric (symmetric, zero diagonal).
SearchOutcome search_finite_graph(const std::vector<std::vector<int>>& distance,
                                  int max_color,
                                  const std::map<int, int>& precoloring = {},
                                  Budget budget = {}, int jobs = 1);

// Pairwise distance matrix of an a x b grid graph (for the square-lattice
// lower-bound instance).
std::vector<std::vector<int>> grid_distance_matrix(int rows, int cols);

// Maximum vertices of a window of length w colorable with colors 1..q.
struct DensityBound {
    int q = 0;
    long long window = 0;
    long long count_max = 0;

    BigRational bound() const { return {count_max, window}; }
};

DensityBound density_window_bound(const GraphSpec& spec, int q, long long window,
                                  Budget budget = {}, int jobs = 1,
                                  const std::string& resume = "");

// d(i) = 1/(t*i - alpha) for i >= i_min.
struct AlphaRule {
    GraphSpec spec;
    long long alpha = 0;
    int i_min = 0;
};

// Fits t*i - alpha to max_window_with_diameter over [i_lo, i_hi]; throws
// NotAffine (carrying the raw values) when no constant alpha works.
AlphaRule fit_alpha(const GraphSpec& spec, int i_lo, int i_hi);

// Largest c >= q with b + sum_{i=q+1}^{c} 1/(t*i - alpha) < 1; the result
// is c + 1, a lower bound on the packing chromatic number. Empty when
// b >= 1. Exact rational arithmetic throughout.
std::optional<int> density_lower_bound(const GraphSpec& spec, int q,
                                       const BigRational& b, const AlphaRule& rule);

// The partial sum b + sum_{i=q+1}^{c} 1/(t*i - alpha), exact.
BigRational density_partial_sum(const GraphSpec& spec, int q, const BigRational& b,
                                const AlphaRule& rule, int c);

}  // namespace packdist
