#include "packdist/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace packdist {

int PeriodicColoring::max_color() const {
    return *std::max_element(word.begin(), word.end());
}

namespace {

bool witness_less(const ViolationWitness& a, const ViolationWitness& b) {
    if (a.color != b.color) return a.color < b.color;
    if (a.u != b.u) return a.u < b.u;
    return (a.v - a.u) < (b.v - b.u);
}

// Best (lexicographically smallest) violation with u in [anchor+lo, anchor+hi).
std::optional<ViolationWitness> scan_range(const GraphSpec& spec,
                                           const PeriodicColoring& col,
                                           long long lo, long long hi) {
    std::optional<ViolationWitness> best;
    const long long L = col.period();
    for (long long r = lo; r < hi; ++r) {
        long long u = col.anchor + r;
        int c = col.word[static_cast<std::size_t>(r % L)];
        const OffsetBall& ball = offset_ball(spec, c);
        for (long long delta : ball.offsets) {
            if (delta <= 0) continue;  // (u, u+delta) with delta > 0 covers all pairs
            if (col.color_at(u + delta) != c) continue;
            ViolationWitness w{c, u, u + delta, vertex_distance(spec, delta)};
            if (!best || witness_less(w, *best)) best = w;
        }
    }
    return best;
}

}  // namespace

VerifyResult verify_serial(const GraphSpec& spec, const PeriodicColoring& col) {
    if (!spec.coprime()) throw NotCoprime("verify requires gcd(k,t)=1");
    if (col.word.empty()) throw std::invalid_argument("empty pattern");
    return {scan_range(spec, col, 0, col.period())};
}

VerifyResult verify(const GraphSpec& spec, const PeriodicColoring& col) {
    if (!spec.coprime()) throw NotCoprime("verify requires gcd(k,t)=1");
    if (col.word.empty()) throw std::invalid_argument("empty pattern");
    const long long L = col.period();

    // Warm the offset-ball cache before the parallel region.
    for (int c : col.word) (void)offset_ball(spec, c);

    std::optional<ViolationWitness> best;
#pragma omp parallel
    {
        std::optional<ViolationWitness> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long r = 0; r < L; ++r) {
            auto w = scan_range(spec, col, r, r + 1);
            if (w && (!local || witness_less(*w, *local))) local = w;
        }
#pragma omp critical(packdist_verify_reduce)
        {
            if (local && (!best || witness_less(*local, *best))) best = local;
        }
    }
    return {best};
}

long long min_same_color_distance_on_path(const PeriodicColoring& col, int color) {
    const long long L = col.period();
    std::vector<long long> pos;
    for (long long i = 0; i < L; ++i)
        if (col.word[static_cast<std::size_t>(i)] == color) pos.push_back(i);
    if (pos.empty()) throw ColorAbsent("color does not occur in the word");
    if (pos.size() == 1) return L;  // nearest repeat is one period away
    long long best = std::numeric_limits<long long>::max();
    for (std::size_t i = 1; i < pos.size(); ++i)
        best = std::min(best, pos[i] - pos[i - 1]);
    best = std::min(best, pos.front() + L - pos.back());
    return best;
}

VerifyResult verify_path_pattern(const PeriodicColoring& col) {
    if (col.word.empty()) throw std::invalid_argument("empty pattern");
    std::vector<int> colors(col.word.begin(), col.word.end());
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    std::optional<ViolationWitness> best;
    for (int c : colors) {
        long long d = min_same_color_distance_on_path(col, c);
        if (d > c) continue;
        // locate the lexicographically smallest offending pair for this color
        const long long L = col.period();
        for (long long u = 0; u < L && !best; ++u) {
            if (col.word[static_cast<std::size_t>(u)] != c) continue;
            for (long long delta = 1; delta <= c; ++delta) {
                if (col.color_at(col.anchor + u + delta) == c) {
                    best = ViolationWitness{c, col.anchor + u,
                                            col.anchor + u + delta, delta};
                    break;
                }
            }
        }
        if (best) break;  // colors scanned ascending: first hit is minimal
    }
    return {best};
}

// --- pattern I/O ---

namespace {

std::vector<int> read_colors(std::istream& in, std::size_t n) {
    std::vector<int> out;
    out.reserve(n);
    std::string tok;
    while (out.size() < n && in >> tok) {
        std::replace(tok.begin(), tok.end(), ',', ' ');
        std::istringstream ss(tok);
        int c;
        while (ss >> c) {
            if (c < 1) throw std::runtime_error("pattern colors must be >= 1");
            out.push_back(c);
        }
    }
    if (out.size() != n) throw std::runtime_error("pattern file truncated");
    return out;
}

}  // namespace

PeriodicColoring read_pattern(std::istream& in) {
    std::string kw;
    long long L = 0;
    if (!(in >> kw >> L) || kw != "period" || L < 1)
        throw std::runtime_error("pattern file: expected 'period L'");
    PeriodicColoring col;
    std::streampos mark = in.tellg();
    if (in >> kw && kw == "anchor") {
        if (!(in >> col.anchor)) throw std::runtime_error("pattern file: bad anchor");
    } else {
        in.clear();
        in.seekg(mark);
    }
    col.word = read_colors(in, static_cast<std::size_t>(L));
    return col;
}

PeriodicColoring read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    return read_pattern(in);
}

void write_pattern(std::ostream& out, const PeriodicColoring& col) {
    out << "period " << col.period() << "\n";
    if (col.anchor != 0) out << "anchor " << col.anchor << "\n";
    for (std::size_t i = 0; i < col.word.size(); ++i) {
        out << col.word[i];
        out << ((i % 24 == 23 || i + 1 == col.word.size()) ? '\n' : ' ');
    }
}

void write_pattern_file(const std::string& path, const PeriodicColoring& col) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_pattern(out, col);
}

std::vector<std::vector<int>> read_grid_pattern(std::istream& in) {
    std::string kw1, kw2;
    std::size_t rows = 0, cols = 0;
    if (!(in >> kw1 >> rows >> kw2 >> cols) || kw1 != "rows" || kw2 != "cols")
        throw std::runtime_error("grid file: expected 'rows R cols C'");
    std::vector<std::vector<int>> grid(rows);
    for (auto& row : grid) row = read_colors(in, cols);
    return grid;
}

}  // namespace packdist
