// constructions.hpp — explicit periodic packing colorings of D(k,t) built
// from a 24x24 strip pattern, a period-144 two-band word, and a generated
// path word over a high color range; plus the strip/band layout planner.
#pragma once

#include <array>
#include <vector>

#include "packdist/core.hpp"
#include "packdist/verifier.hpp"

namespace packdist {

struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AssemblyInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using StripPattern = std::array<std::array<int, 24>, 24>;
using BandPattern = std::array<int, 144>;

// 24x24 grid over {1..15, 22, 23}; tiles a strip (24 consecutive bands).
const StripPattern& strip_pattern();

// Period-144 word over {1, 16..21, 24..30}; colors two bands 25 apart.
const BandPattern& band_pattern();

// Periodic path word over colors {l..3l+2} with every same-color spacing
// greater than the color. period_candidates restricts the periods tried
// (empty = default ladder). Deterministic; cached per argument set.
PeriodicColoring goddard_word(int l,
                              const std::vector<long long>& period_candidates = {});

// 22 -> 16 and 23 -> 17; everything else unchanged.
std::vector<int> remap_for_band(std::vector<int> word);

enum class SegmentKind { Strip, BandWord, BandGoddard };

struct LayoutSegment {
    SegmentKind kind;
    int start_band;        // first band index covered (strips cover 24)
    long long anchor;      // vertex where the segment's pattern starts
};

struct LayoutPlan {
    GraphSpec spec;
    int theorem_id = 0;    // 1, 2 or 3
    int r = 0;             // band count
    int s = 0;             // strip count parameter
    int k1 = 0;            // min(k mod 24, 24 - k mod 24)
    std::vector<LayoutSegment> segments;
    std::vector<long long> band_offsets;  // j_i for the pattern-(*) bands
};

// Chooses the layout branch and computes strip/band positions, anchors and
// a feasible j_i assignment (parity constraints, consecutive differences in
// {-25..-6, 6..25}). Throws NotApplicable / NotCoprime.
LayoutPlan plan_layout(const GraphSpec& spec);

// Realizes the plan as a single periodic coloring of D(k,t); max color 30
// for layout 1, 56 for layouts 2-3.
PeriodicColoring assemble(const LayoutPlan& plan);

}  // namespace packdist
