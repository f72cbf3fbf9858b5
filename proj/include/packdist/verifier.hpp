// verifier.hpp — decides whether a periodic color word is a valid packing
// coloring of D(k,t), and measures same-color spacings on the path.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "packdist/core.hpp"

namespace packdist {

// color(v) = word[(v - anchor) mod L] for every integer v.
struct PeriodicColoring {
    std::vector<int> word;
    long long anchor = 0;

    long long period() const { return static_cast<long long>(word.size()); }
    int color_at(long long v) const {
        long long L = period();
        long long r = (v - anchor) % L;
        if (r < 0) r += L;
        return word[static_cast<std::size_t>(r)];
    }
    int max_color() const;
};

struct ViolationWitness {
    int color = 0;
    long long u = 0, v = 0;
    long long distance = 0;

    friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

struct VerifyResult {
    std::optional<ViolationWitness> violation;  // empty == valid

    bool valid() const { return !violation.has_value(); }
};

struct ColorAbsent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Packing check in the full graph D(k,t). Complete by periodicity: a
// violation exists in Z iff one exists with u in [anchor, anchor+L).
// Reports the lexicographically smallest (color, u, delta) violation.
// The parallel kernel partitions the period across OpenMP threads with a
// min-reduction, so the verdict matches the serial reference exactly.
VerifyResult verify(const GraphSpec& spec, const PeriodicColoring& coloring);
VerifyResult verify_serial(const GraphSpec& spec, const PeriodicColoring& coloring);

// Minimum |u - v| over distinct same-color positions of the periodic word
// viewed as a coloring of the infinite path (unit steps).
long long min_same_color_distance_on_path(const PeriodicColoring& word, int color);

// Valid iff every color c that occurs satisfies
// min_same_color_distance_on_path(word, c) > c.
VerifyResult verify_path_pattern(const PeriodicColoring& word);

// --- pattern file format ---
// line 1: "period L"; line 2 optional "anchor A"; then L colors separated
// by whitespace and/or commas.
PeriodicColoring read_pattern(std::istream& in);
PeriodicColoring read_pattern_file(const std::string& path);
void write_pattern(std::ostream& out, const PeriodicColoring& coloring);
void write_pattern_file(const std::string& path, const PeriodicColoring& coloring);

// 2D pattern file: line 1 "rows R cols C", then R lines of C colors.
std::vector<std::vector<int>> read_grid_pattern(std::istream& in);

}  // namespace packdist
