#include "packdist/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace packdist {

// 24x24 strip pattern over {1..15, 22, 23}; rows are consecutive bands,
// columns are steps of t along a band. Also shipped as
// data/strip_pattern_24x24.txt.
const StripPattern& strip_pattern() {
    static const StripPattern grid = {{
        {1, 2, 1, 3, 1, 2, 1, 10, 1, 4, 1, 9, 1, 2, 1, 3, 1, 2, 1, 5, 1, 4, 1, 14},
        {7, 1, 5, 1, 6, 1, 3, 1, 2, 1, 3, 1, 8, 1, 5, 1, 4, 1, 3, 1, 2, 1, 3, 1},
        {1, 3, 1, 2, 1, 4, 1, 7, 1, 5, 1, 2, 1, 3, 1, 2, 1, 11, 1, 6, 1, 10, 1, 2},
        {4, 1, 9, 1, 3, 1, 2, 1, 3, 1, 6, 1, 4, 1, 7, 1, 3, 1, 2, 1, 3, 1, 5, 1},
        {1, 2, 1, 15, 1, 5, 1, 11, 1, 2, 1, 3, 1, 2, 1, 23, 1, 5, 1, 4, 1, 2, 1, 3},
        {6, 1, 3, 1, 2, 1, 3, 1, 4, 1, 14, 1, 5, 1, 3, 1, 2, 1, 3, 1, 7, 1, 8, 1},
        {1, 5, 1, 4, 1, 22, 1, 2, 1, 3, 1, 2, 1, 10, 1, 4, 1, 13, 1, 2, 1, 3, 1, 2},
        {3, 1, 2, 1, 3, 1, 6, 1, 5, 1, 7, 1, 3, 1, 2, 1, 3, 1, 9, 1, 5, 1, 4, 1},
        {1, 7, 1, 10, 1, 2, 1, 3, 1, 2, 1, 4, 1, 6, 1, 5, 1, 2, 1, 3, 1, 2, 1, 11},
        {2, 1, 3, 1, 5, 1, 4, 1, 8, 1, 3, 1, 2, 1, 3, 1, 7, 1, 4, 1, 6, 1, 3, 1},
        {1, 4, 1, 2, 1, 3, 1, 2, 1, 9, 1, 5, 1, 11, 1, 2, 1, 3, 1, 2, 1, 12, 1, 5},
        {3, 1, 6, 1, 13, 1, 7, 1, 3, 1, 2, 1, 3, 1, 4, 1, 8, 1, 5, 1, 3, 1, 2, 1},
        {1, 2, 1, 3, 1, 2, 1, 5, 1, 4, 1, 15, 1, 2, 1, 3, 1, 2, 1, 10, 1, 4, 1, 9},
        {8, 1, 5, 1, 4, 1, 3, 1, 2, 1, 3, 1, 7, 1, 5, 1, 6, 1, 3, 1, 2, 1, 3, 1},
        {1, 3, 1, 2, 1, 11, 1, 6, 1, 10, 1, 2, 1, 3, 1, 2, 1, 4, 1, 7, 1, 5, 1, 2},
        {4, 1, 7, 1, 3, 1, 2, 1, 3, 1, 5, 1, 4, 1, 9, 1, 3, 1, 2, 1, 3, 1, 6, 1},
        {1, 2, 1, 23, 1, 5, 1, 4, 1, 2, 1, 3, 1, 2, 1, 14, 1, 5, 1, 11, 1, 2, 1, 3},
        {5, 1, 3, 1, 2, 1, 3, 1, 7, 1, 8, 1, 6, 1, 3, 1, 2, 1, 3, 1, 4, 1, 15, 1},
        {1, 10, 1, 4, 1, 9, 1, 2, 1, 3, 1, 2, 1, 5, 1, 4, 1, 22, 1, 2, 1, 3, 1, 2},
        {3, 1, 2, 1, 3, 1, 12, 1, 5, 1, 4, 1, 3, 1, 2, 1, 3, 1, 6, 1, 5, 1, 7, 1},
        {1, 6, 1, 5, 1, 2, 1, 3, 1, 2, 1, 11, 1, 7, 1, 10, 1, 2, 1, 3, 1, 2, 1, 4},
        {2, 1, 3, 1, 7, 1, 4, 1, 6, 1, 3, 1, 2, 1, 3, 1, 5, 1, 4, 1, 8, 1, 3, 1},
        {1, 11, 1, 2, 1, 3, 1, 2, 1, 13, 1, 5, 1, 4, 1, 2, 1, 3, 1, 2, 1, 9, 1, 5},
        {3, 1, 4, 1, 8, 1, 5, 1, 3, 1, 2, 1, 3, 1, 6, 1, 12, 1, 7, 1, 3, 1, 2, 1},
    }};
    return grid;
}

// Period-144 word over {1, 16..21, 24..30} coloring two bands 25 apart.
// Also shipped as data/band_pattern_144.txt.
const BandPattern& band_pattern() {
    static const BandPattern word = {
        1, 16, 1, 19, 1, 24, 1, 17, 1, 26, 1, 25, 1, 18, 1, 20, 1, 21, 1, 16, 1, 27, 1, 19,
        1, 17, 1, 28, 1, 29, 1, 24, 1, 18, 1, 30, 1, 16, 1, 20, 1, 21, 1, 17, 1, 19, 1, 25,
        1, 26, 1, 27, 1, 18, 1, 16, 1, 24, 1, 28, 1, 17, 1, 20, 1, 19, 1, 21, 1, 29, 1, 30,
        1, 16, 1, 18, 1, 25, 1, 17, 1, 26, 1, 24, 1, 19, 1, 20, 1, 21, 1, 16, 1, 27, 1, 18,
        1, 17, 1, 28, 1, 29, 1, 25, 1, 19, 1, 30, 1, 16, 1, 20, 1, 21, 1, 17, 1, 18, 1, 24,
        1, 26, 1, 27, 1, 19, 1, 16, 1, 25, 1, 28, 1, 17, 1, 20, 1, 18, 1, 21, 1, 29, 1, 30,
    };
    return word;
}

namespace {

long long cyclic_gap(long long a, long long b, long long period) {
    long long d = ((a - b) % period + period) % period;
    return std::min(d, period - d);
}

// One attempt of the randomized cyclic sieve: colors ascending, each color
// sweeps the circle from a random start taking free slots whose cyclic
// distance to its previous placements exceeds the color.
bool sieve_attempt(long long period, int lo, int hi, std::uint32_t seed,
                   std::vector<int>& out) {
    std::mt19937 rng(seed);
    out.assign(static_cast<std::size_t>(period), 0);
    long long filled = 0;
    std::vector<long long> placed;
    for (int c = lo; c <= hi && filled < period; ++c) {
        placed.clear();
        long long start = rng() % period;
        for (long long step = 0; step < period; ++step) {
            long long q = (start + step) % period;
            if (out[static_cast<std::size_t>(q)] != 0) continue;
            bool ok = true;
            for (long long x : placed)
                if (cyclic_gap(q, x, period) <= c) { ok = false; break; }
            if (ok) {
                out[static_cast<std::size_t>(q)] = c;
                placed.push_back(q);
                ++filled;
            }
        }
    }
    return filled == period;
}

std::vector<long long> default_period_ladder(int l) {
    std::vector<long long> periods;
    long long base = 3LL * l + 3;
    for (int m = 1; m <= 12; ++m) periods.push_back(m * base);
    for (long long p : {144LL, 288LL, 432LL}) periods.push_back(p);
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    return periods;
}

bool capacity_admits(long long period, int lo, int hi) {
    long long cap = 0;
    for (int c = lo; c <= hi; ++c) cap += period / (c + 1);
    return cap >= period;
}

}  // namespace

PeriodicColoring goddard_word(int l, const std::vector<long long>& period_candidates) {
    if (l < 1) throw std::invalid_argument("goddard_word requires l >= 1");
    const int lo = l, hi = 3 * l + 2;

    static std::map<std::pair<int, std::vector<long long>>, PeriodicColoring> cache;
    static std::mutex cache_mutex;
    std::lock_guard lock(cache_mutex);
    auto key = std::make_pair(l, period_candidates);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<long long> periods =
        period_candidates.empty() ? default_period_ladder(l) : period_candidates;

    std::vector<int> word;
    for (long long period : periods) {
        if (period < hi + 1 || !capacity_admits(period, lo, hi)) continue;
        for (std::uint32_t seed = 0; seed < 1500; ++seed) {
            if (sieve_attempt(period, lo, hi, seed * 2654435761u + l, word)) {
                PeriodicColoring col{std::move(word), 0};
                if (!verify_path_pattern(col).valid())
                    throw SearchExhausted("goddard_word: sieve produced invalid word");
                cache.emplace(std::move(key), col);
                return col;
            }
        }
    }
    throw SearchExhausted("goddard_word: no valid periodic word found");
}

std::vector<int> remap_for_band(std::vector<int> word) {
    for (int& c : word) {
        if (c == 22) c = 16;
        else if (c == 23) c = 17;
    }
    return word;
}

namespace {

constexpr int kDpLo = 6, kDpHi = 25;

bool in_dp(long long d) {
    long long a = std::llabs(d);
    return a >= kDpLo && a <= kDpHi;
}

// Candidate j values around prev with the required parity and difference in
// D_p, ordered by magnitude (positive first on ties).
std::vector<long long> j_candidates(long long prev, int parity) {
    std::vector<long long> out;
    for (long long d = -kDpHi; d <= kDpHi; ++d) {
        if (!in_dp(d)) continue;
        long long j = prev + d;
        if (((j % 2) + 2) % 2 != parity) continue;
        out.push_back(j);
    }
    std::sort(out.begin(), out.end(), [](long long a, long long b) {
        if (std::llabs(a) != std::llabs(b)) return std::llabs(a) < std::llabs(b);
        return a > b;
    });
    return out;
}

// Smallest-magnitude feasible assignment of j_1..j_n. wrap_k >= 0 enables
// the closing constraint |j_n - j_1 + k| (mod 144) in D_p (layout 1, s = r).
bool assign_band_offsets(int n, long long wrap_k, std::vector<long long>& out) {
    out.assign(n, 0);
    // j_1 = 0 (even, as required for i = 1)
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) {
            if (wrap_k >= 0 && n > 1) {
                long long v = std::llabs(out[n - 1] - out[0] + wrap_k) % 144;
                if (!(v >= kDpLo && v <= kDpHi) && !(144 - v >= kDpLo && 144 - v <= kDpHi))
                    return false;
            }
            return true;
        }
        int parity = i % 2;  // j_i odd for even i (1-based), even for odd i
        for (long long j : j_candidates(out[i - 1], parity)) {
            out[i] = j;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(1);
}

int reduced_step(int k) {
    int km = k % 24;
    return std::min(km, (24 - km) % 24);
}

// Minimal admissible r with r == t (mod 24), lo <= r <= hi, and the strip
// budget s >= r. strict: require k1 < r rather than k1 <= r.
int pick_r(int t, int k1, int hi, bool strict, int extra_strips) {
    for (int r = t % 24; r <= hi; r += 24) {
        if (r < 1) continue;
        if (strict ? (k1 >= r) : (k1 > r)) continue;
        int s = (t - r) / 24 - extra_strips;
        if (s >= r) return r;
    }
    return -1;
}

}  // namespace

LayoutPlan plan_layout(const GraphSpec& spec) {
    if (!spec.coprime()) throw NotCoprime("plan_layout requires gcd(k,t)=1");
    const long long k = spec.k, t = spec.t;
    if (t <= 24) throw NotApplicable("t must exceed 24 (strips are 24 bands)");

    LayoutPlan plan{spec};
    plan.k1 = reduced_step(spec.k);
    const int k1 = plan.k1;
    const bool k_odd = spec.k % 2, t_odd = spec.t % 2;
    const bool k1_matches_k = (spec.k % 24 == k1);
    const long long dir = k1_matches_k ? -1 : +1;  // sign of the k1*t shifts

    if (k_odd && t_odd) {
        // layout 1: t = 24s + r, r odd, k1 <= r <= 33
        plan.theorem_id = 1;
        int r = pick_r(spec.t, k1, 33, /*strict=*/false, 0);
        if (r < 0) throw NotApplicable("no admissible (r, s) split for odd k, odd t");
        int s = (spec.t - r) / 24;
        plan.r = r;
        plan.s = s;

        for (int i = 1; i <= r; ++i) {
            long long shift;
            if (i >= r - k1 + 2)      shift = dir * (i - r + k1 - 1);  // k1 != 1 tail
            else if (i % 2 == 1)      shift = 0;
            else                      shift = -1;
            plan.segments.push_back({SegmentKind::Strip, 25 * (i - 1),
                                     25LL * (i - 1) * k + shift * t});
        }
        for (int i = r + 1; i <= s; ++i)
            plan.segments.push_back({SegmentKind::Strip, 24 * (i - 1) + r,
                                     24LL * (i - 1) * k + r * k + dir * k1 * t});

        // the closing constraint couples the last band to the first only
        // when several bands wrap around (s = r, r > 1)
        long long wrap_k = (s == r && r > 1) ? k : -1;
        if (!assign_band_offsets(r, wrap_k, plan.band_offsets))
            throw AssemblyInfeasible("no feasible band offsets j_i");
        for (int i = 1; i <= r; ++i)
            plan.segments.push_back({SegmentKind::BandWord, 25 * i - 1,
                                     24LL * i * k + (i - 1) * k +
                                         plan.band_offsets[i - 1] * t});
        return plan;
    }

    // layouts 2-3: one band is colored by the generated path word
    plan.theorem_id = t_odd ? 3 : 2;

    if (plan.theorem_id == 3 && k1 == 0 && spec.t % 24 == 1) {
        // t = 24s + 1, k1 = 0: s strips and a single high-color band
        int s = (spec.t - 1) / 24;
        plan.r = 1;
        plan.s = s;
        for (int i = 0; i < s; ++i)
            plan.segments.push_back({SegmentKind::Strip, 24 * i, 24LL * i * k});
        plan.segments.push_back({SegmentKind::BandGoddard, spec.t - 1, (t - 1) * k});
        return plan;
    }

    // t = 24(s + 2) + r, r == t (mod 2), k1 < r <= 34 (t even) / 35 (t odd)
    int r = pick_r(spec.t, k1, t_odd ? 35 : 34, /*strict=*/true, 2);
    if (r < 0) throw NotApplicable("no admissible (r, s) split");
    int s = (spec.t - r) / 24 - 2;
    plan.r = r;
    plan.s = s;

    plan.segments.push_back({SegmentKind::Strip, 0, 0});
    for (int i = 1; i <= r; ++i) {
        long long shift;
        if (i >= r - k1 + 1)      shift = dir * (i - r + k1);
        else if (i % 2 == 1)      shift = 0;
        else                      shift = -1;
        plan.segments.push_back({SegmentKind::Strip, 24 * i + i - 1,
                                 24LL * i * k + (i - 1) * k + shift * t});
    }
    for (int i = r + 1; i <= s + 1; ++i)
        plan.segments.push_back({SegmentKind::Strip, 24 * i + r - 1,
                                 24LL * i * k + (r - 1) * k + dir * k1 * t});

    if (!assign_band_offsets(r - 1, -1, plan.band_offsets))
        throw AssemblyInfeasible("no feasible band offsets j_i");
    for (int i = 1; i <= r - 1; ++i)
        plan.segments.push_back({SegmentKind::BandWord, 24 * (i + 1) + i - 1,
                                 24LL * (i + 1) * k + (i - 1) * k +
                                     plan.band_offsets[i - 1] * t});
    plan.segments.push_back({SegmentKind::BandGoddard, spec.t - 1, (t - 1) * k});
    return plan;
}

PeriodicColoring assemble(const LayoutPlan& plan) {
    const GraphSpec& spec = plan.spec;
    const long long t = spec.t;

    bool has_goddard = false;
    for (const auto& seg : plan.segments)
        if (seg.kind == SegmentKind::BandGoddard) has_goddard = true;

    std::vector<int> gword;
    long long gperiod = 1;
    if (has_goddard) {
        // periods compatible with the 144-word and 24-column strip tiling
        PeriodicColoring g = goddard_word(18, {144, 288, 432});
        gword = remap_for_band(g.word);
        gperiod = g.period();
    }
    const long long word_period = std::lcm(144LL, gperiod);
    const long long L = word_period * t;

    // segment lookup and column origin per covered band
    std::vector<const LayoutSegment*> seg_of_band(static_cast<std::size_t>(t), nullptr);
    std::vector<long long> anchor_spoke(static_cast<std::size_t>(t), 0);
    for (const auto& seg : plan.segments) {
        BandCoordinate bc = coordinates(spec, seg.anchor);
        if (bc.band_index != seg.start_band)
            throw AssemblyInfeasible("segment anchor lies outside its first band");
        int width = seg.kind == SegmentKind::Strip ? 24 : 1;
        for (int d = 0; d < width; ++d) {
            std::size_t b = static_cast<std::size_t>(seg.start_band + d);
            if (b >= static_cast<std::size_t>(t) || seg_of_band[b])
                throw AssemblyInfeasible("segments do not tile the band range");
            seg_of_band[b] = &seg;
            anchor_spoke[b] = bc.spoke_index;
        }
    }
    for (auto* p : seg_of_band)
        if (!p) throw AssemblyInfeasible("uncovered band index");

    const StripPattern& grid = strip_pattern();
    const BandPattern& band = band_pattern();

    PeriodicColoring out;
    out.anchor = 0;
    out.word.assign(static_cast<std::size_t>(L), 0);
#pragma omp parallel for schedule(static)
    for (long long v = 0; v < L; ++v) {
        BandCoordinate bc = coordinates(spec, v);
        std::size_t m = static_cast<std::size_t>(bc.band_index);
        const LayoutSegment& seg = *seg_of_band[m];
        long long col = bc.spoke_index - anchor_spoke[m];
        int color = 0;
        switch (seg.kind) {
            case SegmentKind::Strip: {
                int row = bc.band_index - seg.start_band;
                long long c24 = ((col % 24) + 24) % 24;
                color = grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(c24)];
                break;
            }
            case SegmentKind::BandWord: {
                long long c144 = ((col % 144) + 144) % 144;
                color = band[static_cast<std::size_t>(c144)];
                break;
            }
            case SegmentKind::BandGoddard: {
                long long cg = ((col % gperiod) + gperiod) % gperiod;
                color = gword[static_cast<std::size_t>(cg)];
                break;
            }
        }
        out.word[static_cast<std::size_t>(v)] = color;
    }
    return out;
}

}  // namespace packdist
