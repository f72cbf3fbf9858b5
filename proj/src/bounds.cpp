#include "packdist/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <sstream>

namespace packdist {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Pairwise distances of window vertices. Full-graph mode measures in all of
// D(k,t) (shortest paths may route outside the window); induced mode runs a
// breadth-first search inside the window.
std::vector<std::vector<int>> window_distances(const GraphSpec& spec, int p,
                                               DistanceMode mode) {
    std::vector<std::vector<int>> dist(p, std::vector<int>(p, 0));
    if (mode == DistanceMode::FullGraph) {
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v)
                dist[u][v] = dist[v][u] =
                    static_cast<int>(vertex_distance(spec, v - u));
        return dist;
    }
    const int far = p + 1;  // unreachable marker, larger than any real distance
    for (int src = 0; src < p; ++src) {
        std::vector<int>& d = dist[src];
        std::fill(d.begin(), d.end(), far);
        d[src] = 0;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int step : {spec.k, -spec.k, spec.t, -spec.t}) {
                int v = u + step;
                if (v < 0 || v >= p || d[v] <= d[u] + 1) continue;
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

struct TimeoutSignal {};

constexpr const char* kCheckpointTag = "packdist-dfs 1";

// Exhaustive packing-colorability DFS over an explicit distance matrix.
class ColorSearch {
  public:
    ColorSearch(const std::vector<std::vector<int>>& dist, int max_color,
                const std::map<int, int>& precoloring, Budget budget)
        : dist_(dist), n_(static_cast<int>(dist.size())), c_(max_color),
          budget_(budget), start_(Clock::now()) {
        if (c_ < 1 || c_ > 62)
            throw std::invalid_argument("max color must be in 1..62");
        conflicts_.assign(c_, {});
        for (int x = 1; x <= c_; ++x) {
            conflicts_[x - 1].assign(n_, {});
            for (int u = 0; u < n_; ++u)
                for (int v = 0; v < n_; ++v)
                    if (u != v && dist_[u][v] <= x)
                        conflicts_[x - 1][u].push_back(v);
        }
        color_of_.assign(n_, 0);
        avail_.assign(n_, (c_ == 62 ? ~0ULL >> 2 : (1ULL << c_) - 1));
        precolor_ok_ = true;
        for (auto [v1, x] : precoloring) {
            int v = v1 - 1;
            if (v < 0 || v >= n_ || x < 1 || x > c_)
                throw std::invalid_argument("precoloring out of range");
            if (!((avail_[v] >> (x - 1)) & 1) || color_of_[v] != 0) {
                precolor_ok_ = false;
                return;
            }
            color_of_[v] = x;
            if (!propagate(v, x)) {
                precolor_ok_ = false;
                return;
            }
        }
        for (int v = 0; v < n_; ++v)
            if (color_of_[v] == 0) free_.push_back(v);
        path_.assign(free_.size(), 0);
    }

    SearchOutcome run(const std::vector<int>& resume_path) {
        SearchOutcome out;
        resume_ = resume_path;
        on_path_ = !resume_.empty();
        bool sat = false;
        if (precolor_ok_) {
            try {
                sat = dfs(0);
            } catch (TimeoutSignal&) {
                out.status = SearchStatus::Timeout;
                out.checkpoint = make_checkpoint();
                out.stats = stats();
                return out;
            }
        }
        out.stats = stats();
        if (sat) {
            out.status = SearchStatus::Sat;
            std::vector<int> witness(color_of_.begin(), color_of_.end());
            check_witness(witness);
            out.witness = std::move(witness);
        } else {
            out.status = SearchStatus::Unsat;
        }
        return out;
    }

    SearchStats stats() const {
        return {nodes_, max_depth_, elapsed_seconds(start_)};
    }

  private:
    bool propagate(int v, int x) {
        bool ok = true;
        for (int u : conflicts_[x - 1][v]) {
            if (color_of_[u] == x) ok = false;
            if (color_of_[u] != 0) continue;
            std::uint64_t bit = 1ULL << (x - 1);
            if (avail_[u] & bit) {
                trail_.emplace_back(u, avail_[u]);
                avail_[u] &= ~bit;
                if (avail_[u] == 0) ok = false;
            }
        }
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [u, prev] = trail_.back();
            trail_.pop_back();
            avail_[u] = prev;
        }
    }

    bool dfs(std::size_t fi) {
        if (fi == free_.size()) return true;
        depth_ = fi;
        max_depth_ = std::max<int>(max_depth_, static_cast<int>(fi) + 1);
        int v = free_[fi];
        int first = 1;
        if (on_path_ && fi < resume_.size()) first = resume_[fi];
        for (int x = first; x <= c_; ++x) {
            if (on_path_ && (fi >= resume_.size() || x != resume_[fi]))
                on_path_ = false;
            if (!((avail_[v] >> (x - 1)) & 1)) continue;
            if ((++nodes_ & 0xfff) == 0) check_budget();
            path_[fi] = x;
            std::size_t mark = trail_.size();
            color_of_[v] = x;
            if (propagate(v, x) && dfs(fi + 1)) return true;
            color_of_[v] = 0;
            undo_to(mark);
            depth_ = fi;
        }
        return false;
    }

    void check_budget() {
        if (budget_.max_nodes > 0 && nodes_ >= budget_.max_nodes) throw TimeoutSignal{};
        if (budget_.max_seconds > 0 && elapsed_seconds(start_) >= budget_.max_seconds)
            throw TimeoutSignal{};
    }

    std::string make_checkpoint() const {
        std::ostringstream os;
        os << kCheckpointTag << "\n";
        for (std::size_t i = 0; i <= depth_ && i < path_.size(); ++i)
            os << path_[i] << (i == depth_ ? "" : " ");
        os << "\n";
        return os.str();
    }

    void check_witness(const std::vector<int>& colors) const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (colors[u] == colors[v] && dist_[u][v] <= colors[u])
                    throw std::logic_error("search produced an invalid witness");
    }

    const std::vector<std::vector<int>>& dist_;
    int n_, c_;
    Budget budget_;
    Clock::time_point start_;
    std::vector<std::vector<std::vector<int>>> conflicts_;
    std::vector<int> color_of_, free_, path_, resume_;
    std::vector<std::uint64_t> avail_;
    std::vector<std::pair<int, std::uint64_t>> trail_;
    bool precolor_ok_ = false, on_path_ = false;
    long long nodes_ = 0;
    int max_depth_ = 0;
    std::size_t depth_ = 0;
};

std::vector<int> parse_checkpoint(const std::string& text) {
    if (text.empty()) return {};
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (line != kCheckpointTag)
        throw std::invalid_argument("unrecognized checkpoint header");
    std::vector<int> path;
    int x;
    while (in >> x) path.push_back(x);
    return path;
}

SearchOutcome run_search(const std::vector<std::vector<int>>& dist, int max_color,
                         const std::map<int, int>& precoloring, Budget budget,
                         int jobs, const std::string& resume) {
    if (jobs <= 1 || !resume.empty()) {
        ColorSearch search(dist, max_color, precoloring, budget);
        return search.run(parse_checkpoint(resume));
    }

    // Split the first free vertex's color branches across workers. All
    // branches are completed, so the outcome (including the witness, the
    // smallest-first-color one) does not depend on the worker count.
    int first_free = -1;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
        if (!precoloring.count(v + 1)) { first_free = v; break; }
    if (first_free < 0) {
        ColorSearch search(dist, max_color, precoloring, budget);
        return search.run({});
    }

    std::vector<SearchOutcome> branch(max_color);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int x = 1; x <= max_color; ++x) {
        auto pre = precoloring;
        pre[first_free + 1] = x;
        try {
            ColorSearch search(dist, max_color, pre, budget);
            branch[x - 1] = search.run({});
        } catch (...) {
            branch[x - 1].status = SearchStatus::Timeout;
        }
    }

    SearchOutcome out;
    out.status = SearchStatus::Unsat;
    for (auto& b : branch) {
        out.stats.nodes += b.stats.nodes;
        out.stats.max_depth = std::max(out.stats.max_depth, b.stats.max_depth);
        out.stats.seconds = std::max(out.stats.seconds, b.stats.seconds);
        if (b.status == SearchStatus::Sat && out.status != SearchStatus::Sat) {
            out.status = SearchStatus::Sat;
            out.witness = b.witness;
        } else if (b.status == SearchStatus::Timeout &&
                   out.status == SearchStatus::Unsat) {
            out.status = SearchStatus::Timeout;
        }
    }
    return out;
}

}  // namespace

SearchOutcome search_colorability(const SearchProblem& problem, Budget budget,
                                  int jobs, const std::string& resume) {
    auto [spec, factor] = normalize(problem.spec);
    if (factor != 1)
        throw NotCoprime("search_colorability requires a normalized spec");
    if (problem.window < 1) throw std::invalid_argument("window must be >= 1");
    auto dist = window_distances(spec, problem.window, problem.mode);
    return run_search(dist, problem.max_color, problem.precoloring, budget, jobs,
                      resume);
}

SearchOutcome search_finite_graph(const std::vector<std::vector<int>>& distance,
                                  int max_color,
                                  const std::map<int, int>& precoloring,
                                  Budget budget, int jobs) {
    const std::size_t n = distance.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (distance[u].size() != n || distance[u][u] != 0)
            throw std::invalid_argument("distance matrix must be square with zero diagonal");
        for (std::size_t v = 0; v < n; ++v)
            if (distance[u][v] != distance[v][u])
                throw std::invalid_argument("distance matrix must be symmetric");
    }
    return run_search(distance, max_color, precoloring, budget, jobs, "");
}

std::vector<std::vector<int>> grid_distance_matrix(int rows, int cols) {
    int n = rows * cols;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            dist[a][b] = std::abs(a / cols - b / cols) + std::abs(a % cols - b % cols);
    return dist;
}

// --- density window search ---

namespace {

constexpr const char* kDensityTag = "packdist-density 1";

// Maximum colorable vertices per window length, built incrementally so each
// completed length serves as the suffix bound for the next.
class DensitySearch {
  public:
    DensitySearch(const GraphSpec& spec, int q, long long window, Budget budget)
        : q_(q), w_(window), budget_(budget), start_(Clock::now()) {
        offsets_.assign(q_ + 1, {});
        for (int x = 1; x <= q_; ++x)
            for (long long d : offset_ball(spec, x).offsets)
                if (d > 0 && d < window) offsets_[x].push_back(d);
    }

    long long run(const std::string& resume) {
        std::vector<long long> done;
        if (!resume.empty()) {
            std::istringstream in(resume);
            std::string line;
            std::getline(in, line);
            if (line != kDensityTag)
                throw std::invalid_argument("unrecognized density checkpoint");
            long long v;
            while (in >> v) done.push_back(v);
        }
        suffix_max_ = {0};  // length 0
        for (long long v : done) suffix_max_.push_back(v);
        for (long long n = static_cast<long long>(suffix_max_.size()); n <= w_; ++n) {
            colors_.assign(static_cast<std::size_t>(n), 0);
            best_ = suffix_max_[static_cast<std::size_t>(n - 1)];  // leave one uncolored
            try {
                dfs(0, 0, n);
            } catch (TimeoutSignal&) {
                throw BudgetExceeded("density search budget exhausted",
                                     make_checkpoint());
            }
            suffix_max_.push_back(best_);
        }
        return suffix_max_.back();
    }

    long long nodes() const { return nodes_; }

  private:
    void dfs(long long v, long long count, long long n) {
        if (v == n) {
            best_ = std::max(best_, count);
            return;
        }
        if (v > 0 && count + suffix_max_[static_cast<std::size_t>(n - v)] <= best_)
            return;
        if ((++nodes_ & 0xfff) == 0) {
            if (budget_.max_nodes > 0 && nodes_ >= budget_.max_nodes)
                throw TimeoutSignal{};
            if (budget_.max_seconds > 0 &&
                elapsed_seconds(start_) >= budget_.max_seconds)
                throw TimeoutSignal{};
        }
        for (int x = 1; x <= q_; ++x) {
            bool ok = true;
            for (long long d : offsets_[x]) {
                long long u = v - d;
                if (u >= 0 && colors_[static_cast<std::size_t>(u)] == x) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colors_[static_cast<std::size_t>(v)] = x;
            dfs(v + 1, count + 1, n);
            colors_[static_cast<std::size_t>(v)] = 0;
        }
        dfs(v + 1, count, n);  // leave v uncolored
    }

    std::string make_checkpoint() const {
        std::ostringstream os;
        os << kDensityTag << "\n";
        for (std::size_t i = 1; i < suffix_max_.size(); ++i)
            os << suffix_max_[i] << (i + 1 == suffix_max_.size() ? "" : " ");
        os << "\n";
        return os.str();
    }

    int q_;
    long long w_;
    Budget budget_;
    Clock::time_point start_;
    std::vector<std::vector<long long>> offsets_;
    std::vector<long long> suffix_max_;
    std::vector<int> colors_;
    long long best_ = 0, nodes_ = 0;
};

}  // namespace

DensityBound density_window_bound(const GraphSpec& spec, int q, long long window,
                                  Budget budget, int jobs,
                                  const std::string& resume) {
    if (!spec.coprime()) throw NotCoprime("density_window_bound requires gcd(k,t)=1");
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    (void)jobs;  // the suffix-bound recurrence is inherently sequential
    if (q == 0) return {0, window, 0};
    DensitySearch search(spec, q, window, budget);
    long long count_max = search.run(resume);
    return {q, window, count_max};
}

AlphaRule fit_alpha(const GraphSpec& spec, int i_lo, int i_hi) {
    if (i_lo < 1 || i_hi < i_lo) throw std::invalid_argument("bad i range");
    std::vector<long long> values;
    for (int i = i_lo; i <= i_hi; ++i)
        values.push_back(
            max_window_with_diameter(spec, i, (long long)spec.t * (i + 2) + 100));
    long long alpha = (long long)spec.t * i_lo - values.front();
    for (int i = i_lo; i <= i_hi; ++i)
        if ((long long)spec.t * i - values[static_cast<std::size_t>(i - i_lo)] != alpha)
            throw NotAffine("window sizes are not affine in i", values);
    return {spec, alpha, i_lo};
}

BigRational density_partial_sum(const GraphSpec& spec, int q, const BigRational& b,
                                const AlphaRule& rule, int c) {
    BigRational sum = b;
    for (int i = q + 1; i <= c; ++i) {
        long long denom = (long long)spec.t * i - rule.alpha;
        if (denom <= 0) throw std::invalid_argument("nonpositive class window");
        sum += BigRational(1, denom);
    }
    return sum;
}

std::optional<int> density_lower_bound(const GraphSpec& spec, int q,
                                       const BigRational& b, const AlphaRule& rule) {
    if (q + 1 < rule.i_min)
        throw RuleRangeMismatch("alpha rule does not cover colors above q");
    const BigRational one(1, 1);
    if (b >= one) return std::nullopt;
    BigRational sum = b;
    // the tail sum is harmonic, so it always crosses 1
    for (int c = q + 1;; ++c) {
        long long denom = (long long)spec.t * c - rule.alpha;
        if (denom <= 0) throw std::invalid_argument("nonpositive class window");
        sum += BigRational(1, denom);
        if (sum >= one) return c;  // largest sum-below-1 level was c-1; bound c-1+1
    }
}

}  // namespace packdist
