#include "packdist/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace packdist {

namespace detail {

Egcd egcd(long long a, long long b) {
    if (b == 0) return {a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.y, e.x - (a / b) * e.y};
}

}  // namespace detail

bool GraphSpec::connected() const { return std::gcd(k, t) == 1; }

bool is_connected(const GraphSpec& spec) { return spec.connected(); }

std::pair<GraphSpec, int> normalize(const GraphSpec& spec) {
    int g = std::gcd(spec.k, spec.t);
    return {GraphSpec(spec.k / g, spec.t / g), g};
}

bool OffsetBall::contains(long long delta) const {
    return std::binary_search(offsets.begin(), offsets.end(), delta);
}

long long vertex_distance(const GraphSpec& spec, long long delta) {
    long long g = std::gcd(spec.k, spec.t);
    if (delta % g != 0)
        throw UnreachableVertex("delta not a multiple of gcd(k,t)");
    long long k = spec.k / g, t = spec.t / g;
    delta /= g;
    if (delta == 0) return 0;

    // Solutions of a*k + b*t = delta form a one-parameter family
    //   a = a0 - t*n,  b = b0 + k*n.
    // |a| + |b| is convex in n; scan around the two breakpoints.
    auto e = detail::egcd(k, t);  // e.x*k + e.y*t = 1
    long long a0 = e.x * delta, b0 = e.y * delta;
    long long n1 = a0 / t, n2 = -b0 / k;
    long long lo = std::min(n1, n2) - 2, hi = std::max(n1, n2) + 2;
    long long best = -1;
    for (long long n = lo; n <= hi; ++n) {
        long long v = std::llabs(a0 - t * n) + std::llabs(b0 + k * n);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

const OffsetBall& offset_ball(const GraphSpec& spec, int radius) {
    if (!spec.coprime()) throw NotCoprime("offset_ball requires gcd(k,t)=1");
    if (radius < 1) throw std::invalid_argument("offset_ball radius >= 1");

    static std::map<std::tuple<int, int, int>, OffsetBall> cache;
    static std::mutex cache_mutex;
    std::lock_guard lock(cache_mutex);

    auto key = std::make_tuple(spec.k, spec.t, radius);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // {a*k + b*t : |a|+|b| <= radius} \ {0}; every such delta has
    // dist(delta) <= |a|+|b| and conversely a shortest walk realizes it.
    std::set<long long> deltas;
    for (int a = -radius; a <= radius; ++a) {
        int rem = radius - std::abs(a);
        for (int b = -rem; b <= rem; ++b) {
            long long d = (long long)a * spec.k + (long long)b * spec.t;
            if (d != 0) deltas.insert(d);
        }
    }
    OffsetBall ball;
    ball.radius = radius;
    ball.offsets.assign(deltas.begin(), deltas.end());
    return cache.emplace(key, std::move(ball)).first->second;
}

long long max_window_with_diameter(const GraphSpec& spec, int i,
                                   long long search_limit) {
    if (!spec.coprime())
        throw NotCoprime("max_window_with_diameter requires gcd(k,t)=1");
    // A window of n consecutive integers has pairwise gaps 1..n-1, so the
    // answer is the smallest delta whose distance exceeds i.
    for (long long delta = 1; delta <= search_limit; ++delta)
        if (vertex_distance(spec, delta) > i) return delta;
    throw LimitExceeded("max_window_with_diameter: answer exceeds limit");
}

BandCoordinate coordinates(const GraphSpec& spec, Vertex v) {
    if (!spec.coprime()) throw NotCoprime("coordinates requires gcd(k,t)=1");
    auto e = detail::egcd(spec.k, spec.t);
    // m = v * k^{-1} mod t
    long long kinv = ((e.x % spec.t) + spec.t) % spec.t;
    long long m = ((v % spec.t) * kinv % spec.t + spec.t) % spec.t;
    long long j = (v - m * spec.k) / spec.t;
    return {static_cast<int>(m), j};
}

}  // namespace packdist
