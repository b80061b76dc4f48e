#include "rainbow/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace rainbow {

namespace {

struct StateKey {
    std::uint64_t visited;
    int current;

    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.visited * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(k.current) + (h >> 29);
        return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
    }
};

constexpr std::size_t kMemoCapacity = std::size_t{1} << 22;

class Search {
public:
    Search(const EdgeColoredGraph& g, const OracleOptions& options)
        : g_(g),
          n_(g.vertex_count()),
          c_(g.color_count()),
          budget_(options.node_budget),
          use_dominance_(options.dominance && options.threads <= 1 && n_ <= 64 &&
                         c_ <= std::min(options.dominance_width, 64)) {}

    // Pass 1: optimal length (and an incumbent witness for the inexact case).
    void find_length(int threads) {
        if (threads <= 1) {
            Context ctx(n_, c_);
            for (int start = 0; start < n_ && !exhausted_; ++start) explore_root(ctx, start);
            return;
        }
        std::atomic<int> next_start{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            workers.emplace_back([this, &next_start] {
                Context ctx(n_, c_);
                for (;;) {
                    const int start = next_start.fetch_add(1, std::memory_order_relaxed);
                    if (start >= n_ || exhausted_.load(std::memory_order_relaxed)) break;
                    explore_root(ctx, start);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    // Pass 2: lexicographically smallest witness of the known optimal length.
    // DFS in ascending vertex order finds full sequences in lexicographic
    // order, so the first hit is the answer.
    std::vector<int> find_witness(int target) {
        Context ctx(n_, c_);
        std::vector<int> found;
        for (int start = 0; start < n_ && found.empty() && !exhausted_; ++start) {
            ctx.enter(start);
            witness_dfs(ctx, target, found);
            ctx.leave(start);
        }
        return found;
    }

    bool exhausted() const { return exhausted_; }
    int best_len() const { return best_len_.load(); }
    std::vector<int> incumbent() const { return incumbent_; }
    std::uint64_t nodes() const { return nodes_.load(); }
    std::uint64_t bound_prunes() const { return bound_prunes_.load(); }
    std::uint64_t dominance_prunes() const { return dominance_prunes_.load(); }

private:
    struct Context {
        std::vector<int> trail;
        std::vector<char> visited;
        std::vector<char> used;
        std::uint64_t visited_mask = 0;
        std::uint64_t used_mask = 0;

        Context(int n, int c) : visited(static_cast<std::size_t>(n), 0),
                                used(static_cast<std::size_t>(c), 0) {
            trail.reserve(static_cast<std::size_t>(n));
        }

        void enter(int v) {
            trail.push_back(v);
            visited[static_cast<std::size_t>(v)] = 1;
            visited_mask |= std::uint64_t{1} << (v & 63);
        }
        void leave(int v) {
            trail.pop_back();
            visited[static_cast<std::size_t>(v)] = 0;
            visited_mask &= ~(std::uint64_t{1} << (v & 63));
        }
        void take(int color) {
            used[static_cast<std::size_t>(color)] = 1;
            used_mask |= std::uint64_t{1} << (color & 63);
        }
        void release(int color) {
            used[static_cast<std::size_t>(color)] = 0;
            used_mask &= ~(std::uint64_t{1} << (color & 63));
        }
    };

    void explore_root(Context& ctx, int start) {
        ctx.enter(start);
        dfs(ctx);
        ctx.leave(start);
    }

    bool count_node() {
        const std::uint64_t seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen > budget_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void record(const Context& ctx, int len) {
        int cur = best_len_.load(std::memory_order_relaxed);
        while (len > cur && !best_len_.compare_exchange_weak(cur, len, std::memory_order_relaxed)) {
        }
        if (len > incumbent_len_.load(std::memory_order_relaxed)) {
            std::lock_guard lock(incumbent_mutex_);
            if (len > incumbent_len_.load(std::memory_order_relaxed)) {
                incumbent_ = ctx.trail;
                incumbent_len_.store(len, std::memory_order_relaxed);
            }
        }
    }

    bool dominated(const Context& ctx) {
        const StateKey key{ctx.visited_mask, ctx.trail.back()};
        auto [it, inserted] = memo_.try_emplace(key);
        auto& masks = it->second;
        for (std::uint64_t m : masks) {
            if ((m & ~ctx.used_mask) == 0) {
                dominance_prunes_.fetch_add(1, std::memory_order_relaxed);
                return true;
            }
        }
        if (memo_.size() <= kMemoCapacity) {
            std::erase_if(masks, [&](std::uint64_t m) { return (ctx.used_mask & ~m) == 0; });
            masks.push_back(ctx.used_mask);
        }
        return false;
    }

    void dfs(Context& ctx) {
        if (!count_node()) return;

        const int len = static_cast<int>(ctx.trail.size()) - 1;
        record(ctx, len);

        const int unvisited = n_ - static_cast<int>(ctx.trail.size());
        const int unused_colors = c_ - len;
        const int potential = std::min(unvisited, unused_colors);
        if (len + potential <= best_len_.load(std::memory_order_relaxed)) {
            bound_prunes_.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        if (use_dominance_ && dominated(ctx)) return;

        for (const auto& nb : g_.neighbors(ctx.trail.back())) {
            if (ctx.visited[static_cast<std::size_t>(nb.vertex)]) continue;
            if (ctx.used[static_cast<std::size_t>(nb.color)]) continue;
            ctx.enter(nb.vertex);
            ctx.take(nb.color);
            dfs(ctx);
            ctx.release(nb.color);
            ctx.leave(nb.vertex);
            if (exhausted_.load(std::memory_order_relaxed)) return;
        }
    }

    void witness_dfs(Context& ctx, int target, std::vector<int>& found) {
        if (!found.empty()) return;
        if (!count_node()) return;

        const int len = static_cast<int>(ctx.trail.size()) - 1;
        record(ctx, len);
        if (len == target) {
            found = ctx.trail;
            return;
        }

        const int unvisited = n_ - static_cast<int>(ctx.trail.size());
        const int potential = std::min(unvisited, c_ - len);
        if (len + potential < target) {
            bound_prunes_.fetch_add(1, std::memory_order_relaxed);
            return;
        }

        for (const auto& nb : g_.neighbors(ctx.trail.back())) {
            if (ctx.visited[static_cast<std::size_t>(nb.vertex)]) continue;
            if (ctx.used[static_cast<std::size_t>(nb.color)]) continue;
            ctx.enter(nb.vertex);
            ctx.take(nb.color);
            witness_dfs(ctx, target, found);
            ctx.release(nb.color);
            ctx.leave(nb.vertex);
            if (!found.empty() || exhausted_.load(std::memory_order_relaxed)) return;
        }
    }

    const EdgeColoredGraph& g_;
    const int n_;
    const int c_;
    const std::uint64_t budget_;
    const bool use_dominance_;

    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> bound_prunes_{0};
    std::atomic<std::uint64_t> dominance_prunes_{0};
    std::atomic<bool> exhausted_{false};
    std::atomic<int> best_len_{0};

    std::mutex incumbent_mutex_;
    std::vector<int> incumbent_;
    std::atomic<int> incumbent_len_{-1};

    std::unordered_map<StateKey, std::vector<std::uint64_t>, StateKeyHash> memo_;
};

}  // namespace

OracleResult longest_hetero_path(const EdgeColoredGraph& g, const OracleOptions& options) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("longest_hetero_path: empty graph");
    if (options.node_budget == 0)
        throw std::invalid_argument("longest_hetero_path: zero node budget");
    if (options.threads < 1)
        throw std::invalid_argument("longest_hetero_path: thread count must be >= 1");

    Search search(g, options);
    search.find_length(options.threads);

    std::vector<int> witness;
    if (!search.exhausted()) witness = search.find_witness(search.best_len());
    if (witness.empty()) witness = search.incumbent();  // budget ran out

    return OracleResult{
        .path = HeteroPath::from_sequence(g, std::move(witness)),
        .nodes = search.nodes(),
        .exact = !search.exhausted(),
        .bound_prunes = search.bound_prunes(),
        .dominance_prunes = search.dominance_prunes(),
    };
}

HeteroPath exhaustive_longest(const EdgeColoredGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("exhaustive_longest: empty graph");
    if (n > 10) throw std::invalid_argument("exhaustive_longest: refuses graphs with n > 10");

    std::vector<int> trail;
    std::vector<char> on_trail(static_cast<std::size_t>(n), 0);
    std::vector<int> best;
    trail.reserve(static_cast<std::size_t>(n));

    // Enumerates every simple path (all colors admitted); each sequence is
    // tested with the validator, nothing else is shared with the
    // branch-and-bound route.
    auto enumerate = [&](auto&& self, int current) -> void {
        if (is_heterochromatic(g, trail) &&
            static_cast<int>(trail.size()) > static_cast<int>(best.size())) {
            best = trail;
        }
        for (const auto& nb : g.neighbors(current)) {
            if (on_trail[static_cast<std::size_t>(nb.vertex)]) continue;
            trail.push_back(nb.vertex);
            on_trail[static_cast<std::size_t>(nb.vertex)] = 1;
            self(self, nb.vertex);
            on_trail[static_cast<std::size_t>(nb.vertex)] = 0;
            trail.pop_back();
        }
    };

    for (int start = 0; start < n; ++start) {
        trail.push_back(start);
        on_trail[static_cast<std::size_t>(start)] = 1;
        enumerate(enumerate, start);
        on_trail[static_cast<std::size_t>(start)] = 0;
        trail.pop_back();
    }
    return HeteroPath::from_sequence(g, std::move(best));
}

}  // namespace rainbow
