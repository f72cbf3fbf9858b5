// core.hpp — the two-step integer distance graph D(k,t): connectivity,
// normalization, exact graph distance, band coordinates and distance balls.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace packdist {

using Vertex = long long;

struct UnreachableVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCoprime : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The pair (k,t) with 0 < k < t. Vertices are all integers; u ~ v iff
// |u - v| is k or t.
struct GraphSpec {
    int k = 0;
    int t = 0;

    GraphSpec(int k_, int t_) : k(k_), t(t_) {
        if (!(0 < k && k < t))
            throw std::invalid_argument("GraphSpec requires 0 < k < t");
    }

    bool connected() const;
    bool coprime() const { return connected(); }

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

// v = m*k + j*t with m the unique residue in [0,t).
struct BandCoordinate {
    int band_index = 0;   // m
    long long spoke_index = 0;  // j

    friend bool operator==(const BandCoordinate&, const BandCoordinate&) = default;
};

// All nonzero offsets delta with dist(0, delta) <= radius. Symmetric.
struct OffsetBall {
    int radius = 0;
    std::vector<long long> offsets;  // sorted ascending

    bool contains(long long delta) const;
};

// (k/g, t/g) and the factor g = gcd(k,t).
std::pair<GraphSpec, int> normalize(const GraphSpec& spec);

bool is_connected(const GraphSpec& spec);

// min { |a| + |b| : a*k + b*t = delta }. Requires a coprime spec unless
// gcd(k,t) divides delta.
long long vertex_distance(const GraphSpec& spec, long long delta);

// Cached per (k,t,i). Requires coprime spec, i >= 1.
const OffsetBall& offset_ball(const GraphSpec& spec, int radius);

// Largest n <= search_limit such that every pair inside a window of n
// consecutive integers is at graph distance <= i. Throws LimitExceeded if
// the answer exceeds search_limit.
long long max_window_with_diameter(const GraphSpec& spec, int i,
                                   long long search_limit);

// Unique (m, j) with v = m*k + j*t and 0 <= m < t. Requires coprime spec.
BandCoordinate coordinates(const GraphSpec& spec, Vertex v);

namespace detail {
// Extended Euclid: returns (g, x, y) with x*a + y*b = g.
struct Egcd { long long g, x, y; };
Egcd egcd(long long a, long long b);
}  // namespace detail

}  // namespace packdist
