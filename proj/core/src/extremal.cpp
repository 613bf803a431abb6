#include "rainbowlab/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <string>
#include <thread>

#include "edge_masks.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/matching.hpp"
#include "rainbowlab/rainbow.hpp"

namespace rainbowlab {

using detail::Mask;

const char* to_string(ExtMethod method) {
    return method == ExtMethod::cover_based ? "cover_based" : "branch_and_bound";
}

namespace {

ExtResult ext_by_cover(const Graph& g, int m) {
    const int n = g.vertex_count();
    const int size = std::min(m - 1, n);
    ExtResult best{-1, {}, ExtMethod::cover_based};

    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        pick[static_cast<std::size_t>(i)] = i;
    }
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    while (true) {
        std::fill(in.begin(), in.end(), 0);
        for (int v : pick) {
            in[static_cast<std::size_t>(v)] = 1;
        }
        std::vector<EdgeId> covered;
        for (EdgeId e = 1; e <= g.edge_count(); ++e) {
            if (in[static_cast<std::size_t>(g.edge(e).u)] || in[static_cast<std::size_t>(g.edge(e).v)]) {
                covered.push_back(e);
            }
        }
        if (static_cast<int>(covered.size()) > best.value) {
            best.value = static_cast<int>(covered.size());
            best.witness_edges = std::move(covered);
        }
        // Next combination in lexicographic order.
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return best;
}

class ExtBranchAndBound {
public:
    ExtBranchAndBound(const Graph& g, int m) : table_(g), edges_(g.edge_count()), m_(m) {}

    ExtResult run() {
        search(0, 0);
        ExtResult out{detail::popcount(best_mask_), {}, ExtMethod::branch_and_bound};
        for (int i = 0; i < edges_; ++i) {
            if (best_mask_ & detail::bit(i)) {
                out.witness_edges.push_back(i + 1);
            }
        }
        return out;
    }

private:
    void search(int at, Mask chosen) {
        const int size = detail::popcount(chosen);
        if (size + (edges_ - at) <= best_size_) {
            return;
        }
        if (at == edges_) {
            best_size_ = size;
            best_mask_ = chosen;
            return;
        }
        const Mask with = chosen | detail::bit(at);
        if (!detail::has_matching(table_, with, m_)) {
            search(at + 1, with);
        }
        search(at + 1, chosen);
    }

    detail::ConflictTable table_;
    int edges_;
    int m_;
    int best_size_ = -1;
    Mask best_mask_ = 0;
};

}  // namespace

ExtResult ext_exact(const Graph& g, int m) {
    if (m < 1) {
        throw PreconditionError("ext_exact: m must be >= 1 (the empty matching is always present)");
    }
    if (m == 1) {
        return {0, {}, g.is_bipartite() ? ExtMethod::cover_based : ExtMethod::branch_and_bound};
    }
    ExtResult result;
    if (g.is_bipartite()) {
        result = ext_by_cover(g, m);
        std::vector<Edge> kept;
        for (EdgeId e : result.witness_edges) {
            kept.push_back(g.edge(e));
        }
        if (maximum_matching(Graph(g.vertex_count(), std::move(kept), g.sides())).size() >= m) {
            throw std::logic_error("ext_exact: cover witness contains an m-matching");
        }
        return result;
    }
    if (g.edge_count() > 18) {
        throw BudgetExceeded("ext_exact: non-bipartite graphs are limited to 18 edges, got " +
                             std::to_string(g.edge_count()));
    }
    return ExtBranchAndBound(g, m).run();
}

int ext_formula_regular(int n, int k, int m) {
    if (m < 2) {
        throw PreconditionError("ext_formula_regular: requires m >= 2");
    }
    if (m > n) {
        throw PreconditionError("ext_formula_regular: requires m <= n");
    }
    if (k < 1 || k > n) {
        throw PreconditionError("ext_formula_regular: requires 1 <= k <= n");
    }
    return k * (m - 1);
}

namespace {

// Restricted-growth enumeration of colorings with the rainbow-mK2 check done
// incrementally: when edge i gets color c, any new rainbow mK2 must use edge
// i, so it suffices to look for a rainbow (m-1)-matching among earlier edges
// that avoids edge i's endpoints and color c.
class ColoringSearch {
public:
    ColoringSearch(const detail::ConflictTable& table, int m)
        : table_(table),
          edges_(table.edge_count),
          m_(m),
          color_of_(static_cast<std::size_t>(edges_), 0),
          class_of_(static_cast<std::size_t>(edges_) + 1, 0) {}

    // Assigns color c (0-based) to edge i unless that creates a rainbow mK2.
    bool try_assign(int i, int c) {
        ++nodes_;
        const Mask candidates = detail::prefix_mask(i) & ~table_.conflict[static_cast<std::size_t>(i)] &
                                ~class_of_[static_cast<std::size_t>(c)];
        if (detail::has_rainbow_matching(table_, color_of_, std::span<const Mask>(class_of_.data(), used_), candidates,
                                         m_ - 1)) {
            return false;
        }
        color_of_[static_cast<std::size_t>(i)] = c;
        class_of_[static_cast<std::size_t>(c)] |= detail::bit(i);
        if (c == used_) {
            ++used_;
        }
        return true;
    }

    void unassign(int i) {
        const int c = color_of_[static_cast<std::size_t>(i)];
        class_of_[static_cast<std::size_t>(c)] &= ~detail::bit(i);
        if (c == used_ - 1 && class_of_[static_cast<std::size_t>(c)] == 0) {
            --used_;
        }
    }

    bool load(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!try_assign(static_cast<int>(i), prefix[i])) {
                return false;
            }
        }
        return true;
    }

    std::vector<int> snapshot(int depth) const {
        return {color_of_.begin(), color_of_.begin() + depth};
    }

    int used() const { return used_; }
    int edges() const { return edges_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    const detail::ConflictTable& table_;
    int edges_;
    int m_;
    std::vector<int> color_of_;
    std::vector<Mask> class_of_;
    int used_ = 0;
    std::uint64_t nodes_ = 0;
};

class Deadline {
public:
    explicit Deadline(std::optional<std::chrono::milliseconds> limit)
        : limit_(limit), start_(std::chrono::steady_clock::now()) {}

    // Cheap enough to call every few thousand nodes.
    bool passed() {
        if (expired_.load(std::memory_order_relaxed)) {
            return true;
        }
        if (limit_ && std::chrono::steady_clock::now() - start_ > *limit_) {
            expired_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool expired() const { return expired_.load(std::memory_order_relaxed); }

    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    std::optional<std::chrono::milliseconds> limit_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<bool> expired_{false};
};

constexpr std::uint64_t kDeadlineStride = 1u << 12;

void atomic_max(std::atomic<int>& target, int value) {
    int cur = target.load();
    while (value > cur && !target.compare_exchange_weak(cur, value)) {
    }
}

void atomic_min(std::atomic<int>& target, int value) {
    int cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

template <typename Task>
void run_tasks(int workers, std::size_t count, Task task) {
    std::atomic<std::size_t> next{0};
    auto body = [&](int worker) {
        for (std::size_t i = next++; i < count; i = next++) {
            task(worker, i);
        }
    };
    if (workers <= 1) {
        body(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(body, w);
    }
}

class RbSolver {
public:
    RbSolver(const Graph& g, int m, const SearchLimits& limits)
        : table_(g), m_(m), workers_(std::max(1, limits.workers)), deadline_(limits.timeout) {}

    RbResult solve() {
        make_prefixes();
        const int f = maximize();
        std::vector<int> witness = first_attaining(f);
        RbResult out;
        out.f_value = f;
        out.rb_value = f + 1;
        std::vector<Color> colors;
        for (int c : witness) {
            colors.push_back(c + 1);
        }
        out.extremal_coloring = Coloring(std::move(colors));
        out.colorings_examined = nodes_.load();
        out.elapsed = deadline_.elapsed();
        return out;
    }

private:
    // Splits the tree at the shallowest depth giving a few tasks per worker;
    // prefixes come out in lexicographic order.
    void make_prefixes() {
        const int edges = table_.edge_count;
        const std::size_t wanted = workers_ == 1 ? 1 : static_cast<std::size_t>(8 * workers_);
        std::vector<std::vector<int>> level{{}};
        int depth = 0;
        while (level.size() < wanted && depth < edges) {
            std::vector<std::vector<int>> deeper;
            for (const auto& prefix : level) {
                ColoringSearch s(table_, m_);
                s.load(prefix);
                for (int c = 0; c <= s.used(); ++c) {
                    if (s.try_assign(depth, c)) {
                        deeper.push_back(s.snapshot(depth + 1));
                        s.unassign(depth);
                    }
                }
                nodes_ += s.nodes();
            }
            level = std::move(deeper);
            ++depth;
        }
        prefixes_ = std::move(level);
    }

    int maximize() {
        std::atomic<int> best{0};
        run_tasks(workers_, prefixes_.size(), [&](int, std::size_t i) {
            if (deadline_.expired()) {
                return;
            }
            ColoringSearch s(table_, m_);
            s.load(prefixes_[i]);
            const int depth = static_cast<int>(prefixes_[i].size());
            std::uint64_t ticks = 0;
            maximize_from(s, depth, best, ticks);
            nodes_ += s.nodes();
        });
        throw_if_expired();
        return best.load();
    }

    void maximize_from(ColoringSearch& s, int depth, std::atomic<int>& best, std::uint64_t& ticks) {
        if (s.used() + (s.edges() - depth) <= best.load(std::memory_order_relaxed)) {
            return;
        }
        if (depth == s.edges()) {
            atomic_max(best, s.used());
            return;
        }
        if (++ticks % kDeadlineStride == 0 && deadline_.passed()) {
            return;
        }
        // A fresh color first: good colorings are found early and the bound
        // starts cutting sooner.
        for (int c = s.used(); c >= 0; --c) {
            if (s.try_assign(depth, c)) {
                maximize_from(s, depth + 1, best, ticks);
                s.unassign(depth);
                if (deadline_.expired()) {
                    return;
                }
            }
        }
    }

    std::vector<int> first_attaining(int target) {
        std::atomic<int> found{INT_MAX};
        std::vector<std::vector<int>> hits(prefixes_.size());
        run_tasks(workers_, prefixes_.size(), [&](int, std::size_t i) {
            if (static_cast<int>(i) > found.load() || deadline_.expired()) {
                return;
            }
            ColoringSearch s(table_, m_);
            s.load(prefixes_[i]);
            std::uint64_t ticks = 0;
            if (first_from(s, static_cast<int>(prefixes_[i].size()), target, hits[i], ticks)) {
                atomic_min(found, static_cast<int>(i));
            }
            nodes_ += s.nodes();
        });
        throw_if_expired();
        if (found.load() == INT_MAX) {
            throw std::logic_error("rb_exact: no coloring attains the maximum found");
        }
        return hits[static_cast<std::size_t>(found.load())];
    }

    bool first_from(ColoringSearch& s, int depth, int target, std::vector<int>& hit, std::uint64_t& ticks) {
        if (s.used() + (s.edges() - depth) < target) {
            return false;
        }
        if (depth == s.edges()) {
            hit = s.snapshot(depth);
            return s.used() == target;
        }
        if (++ticks % kDeadlineStride == 0 && deadline_.passed()) {
            return false;
        }
        for (int c = 0; c <= s.used(); ++c) {
            if (s.try_assign(depth, c)) {
                const bool ok = first_from(s, depth + 1, target, hit, ticks);
                s.unassign(depth);
                if (ok) {
                    return true;
                }
                if (deadline_.expired()) {
                    return false;
                }
            }
        }
        return false;
    }

    void throw_if_expired() const {
        if (deadline_.expired()) {
            throw BudgetExceeded("rb_exact: timeout exceeded after " + std::to_string(nodes_.load()) +
                                 " partial colorings");
        }
    }

    detail::ConflictTable table_;
    int m_;
    int workers_;
    Deadline deadline_;
    std::vector<std::vector<int>> prefixes_;
    std::atomic<std::uint64_t> nodes_{0};
};

}  // namespace

RbResult rb_exact(const Graph& g, int m, const SearchLimits& limits) {
    if (m < 1) {
        throw PreconditionError("rb_exact: m must be >= 1");
    }
    const int edges = g.edge_count();
    if (edges > limits.max_edges) {
        throw BudgetExceeded("rb_exact: graph has " + std::to_string(edges) + " edges, budget is " +
                             std::to_string(limits.max_edges));
    }
    if (edges > detail::kMaxMaskEdges) {
        throw BudgetExceeded("rb_exact: at most 64 edges are supported");
    }
    const int nu = matching_number(g);
    if (m > nu) {
        throw PreconditionError("rb_exact: m = " + std::to_string(m) + " exceeds the matching number " +
                                std::to_string(nu) + "; no coloring has a rainbow matching of that size");
    }
    if (m == 1) {
        return RbResult{0, 1, std::nullopt, 0, std::chrono::milliseconds{0}};
    }

    RbResult result = RbSolver(g, m, limits).solve();
    if (find_rainbow_matching(g, *result.extremal_coloring, m)) {
        throw std::logic_error("rb_exact: extremal coloring failed re-verification");
    }
    return result;
}

Bounds rb_bounds_regular(int n, int k, int m) {
    if (m == 1) {
        throw PreconditionError("rb_bounds_regular: m = 1 is the special case rb(G, 1K2) = 1");
    }
    if (m < 2 || m > n) {
        throw PreconditionError("rb_bounds_regular: requires 2 <= m <= n");
    }
    if (k < 1 || k > n) {
        throw PreconditionError("rb_bounds_regular: requires 1 <= k <= n");
    }
    return {k * (m - 2) + 2, k * (m - 1) + 1};
}

std::optional<int> rb_formula_regular(int n, int k, int m) {
    if (m < 2 || m > n) {
        throw PreconditionError("rb_formula_regular: requires 2 <= m <= n");
    }
    if (k < 1 || k > n) {
        throw PreconditionError("rb_formula_regular: requires 1 <= k <= n");
    }
    if (k < 3 || n <= 3 * (m - 1)) {
        return std::nullopt;
    }
    return k * (m - 2) + 2;
}

int rb_formula_path(int n, int m) {
    if (n < 1) {
        throw PreconditionError("rb_formula_path: requires n >= 1");
    }
    if (m < 2 || m > (n + 1) / 2) {
        throw PreconditionError("rb_formula_path: requires 2 <= m <= ceil(n/2)");
    }
    return n <= 3 * m - 3 ? 2 * m - 1 : 2 * m - 2;
}

CycleFormula rb_formula_cycle(int n, int m) {
    if (n < 3) {
        throw PreconditionError("rb_formula_cycle: requires n >= 3");
    }
    if (m < 2 || m > n / 2) {
        throw PreconditionError("rb_formula_cycle: requires 2 <= m <= floor(n/2)");
    }
    CycleFormula out{n <= 3 * m - 3 ? 2 * m - 1 : 2 * m - 2, false, {}};
    if (n == 4 && m == 2) {
        out.disputed = true;
        out.note = "exhaustive search gives 3: opposite edges of C4 colored alike leave no rainbow 2K2";
    }
    return out;
}

int rb_formula_complete_bipartite(int n, int m) {
    if (n < 3) {
        throw PreconditionError("rb_formula_complete_bipartite: requires n >= 3");
    }
    if (m < 2 || m > n) {
        throw PreconditionError("rb_formula_complete_bipartite: requires 2 <= m <= n");
    }
    return n * (m - 2) + 2;
}

}  // namespace rainbowlab
