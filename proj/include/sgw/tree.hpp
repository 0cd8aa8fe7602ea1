#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <cstring>
#include <deque>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "sgw/semigroup.hpp"

namespace sgw {

// Exhaustive enumeration over the semigroup tree: the root is N, and the
// children of a node are obtained by removing one minimal generator larger
// than the Frobenius number, so every numerical semigroup of genus <= G is
// visited exactly once at depth == genus.

inline constexpr int kMaxTreeGenus = 48;

namespace detail {

inline constexpr int kTabCap = 3 * kMaxTreeGenus + 4;

// Hot-loop node state: fixed-width, no heap. tab[i] classifies i as a gap (0),
// a minimal generator (1) or a decomposable member (2); valid on
// [0, window_hi()]. Effective generators live in [window_lo(), window_hi()].
struct NodeState {
    uint8_t tab[kTabCap];
    int16_t frobenius;
    int16_t multiplicity;
    int16_t genus;

    int conductor() const { return frobenius + 1; }
    int window_lo() const { return std::max(conductor(), 1); }
    int window_hi() const { return window_lo() + multiplicity - 1; }
    bool member(int x) const {
        if (x < 0) return false;
        if (x > window_hi()) return true;
        return tab[x] != 0;
    }
};

inline void init_root(NodeState& n) {
    std::memset(n.tab, 2, sizeof n.tab);
    n.tab[1] = 1;  // 1 is the sole minimal generator of N
    n.frobenius = -1;
    n.multiplicity = 1;
    n.genus = 0;
}

// Child obtained by removing generator x (parent.tab[x] == 1, x > frobenius).
// Minimal generators below x carry over; entries in (x, x + m'] are
// reclassified against the generators discovered so far.
inline void make_child(const NodeState& parent, int x, NodeState& child) {
    child.frobenius = static_cast<int16_t>(x);
    child.genus = static_cast<int16_t>(parent.genus + 1);
    // removing the multiplicity only happens on {0} u [m, inf), where the next
    // member is m+1
    child.multiplicity = static_cast<int16_t>(
        x == parent.multiplicity ? parent.multiplicity + 1 : parent.multiplicity);

    int16_t gens[kMaxTreeGenus + 2];
    int gen_count = 0;
    for (int i = 0; i < x; ++i) {
        const uint8_t v = parent.tab[i];
        child.tab[i] = v;
        if (v == 1) gens[gen_count++] = static_cast<int16_t>(i);
    }
    child.tab[x] = 0;

    const int hi = x + child.multiplicity;  // == child.window_hi()
    const int parent_hi = parent.window_hi();
    for (int i = x + 1; i <= hi; ++i) {
        const uint8_t v = i <= parent_hi ? parent.tab[i] : uint8_t{2};
        if (v == 1) {
            child.tab[i] = 1;
            gens[gen_count++] = static_cast<int16_t>(i);
            continue;
        }
        // was decomposable in the parent; check whether every decomposition
        // passed through x
        bool decomposable = false;
        for (int j = 0; j < gen_count; ++j) {
            if (child.tab[i - gens[j]] != 0) {
                decomposable = true;
                break;
            }
        }
        if (decomposable) {
            child.tab[i] = 2;
        } else {
            child.tab[i] = 1;
            gens[gen_count++] = static_cast<int16_t>(i);
        }
    }
}

} // namespace detail

// Read-only view of one enumerated node, valid only inside the visitor call.
class TreeNode {
public:
    explicit TreeNode(const detail::NodeState& s) : s_(&s) {}

    int genus() const { return s_->genus; }
    int frobenius() const { return s_->frobenius; }
    int conductor() const { return s_->conductor(); }
    int multiplicity() const { return s_->multiplicity; }
    bool contains(int x) const { return s_->member(x); }

    // minimal generators above the Frobenius number (the removable ones)
    std::vector<int> effective_generators() const {
        std::vector<int> out;
        for (int i = s_->window_lo(); i <= s_->window_hi(); ++i)
            if (s_->tab[i] == 1) out.push_back(i);
        return out;
    }

    std::vector<int> gap_list() const {
        std::vector<int> out;
        for (int i = 1; i <= s_->frobenius; ++i)
            if (s_->tab[i] == 0) out.push_back(i);
        return out;
    }

    Semigroup semigroup() const { return Semigroup::from_gaps(gap_list()); }

private:
    const detail::NodeState* s_;
};

struct EnumerationStats {
    std::vector<uint64_t> per_genus;                    // visited, index = genus
    std::vector<int> gammas;                            // requested gamma values
    std::vector<std::vector<uint64_t>> gamma_per_genus; // [gamma index][genus]
    uint64_t total_nodes = 0;                           // tree nodes explored
    double wall_seconds = 0.0;
    double nodes_per_second = 0.0;
    int threads = 1;
    int split_depth = 0;
};

struct EnumerateOptions {
    int genus_max = 0;
    int threads = 1;
    int split_depth = 6;     // initial subtree-task frontier for the worker pool
    std::vector<int> count_gammas;  // per-genus gamma-hyperelliptic tallies

    // When gamma_filter >= 0, visit only genus == genus_max nodes carrying an
    // affirmative gamma certificate, with sound subtree pruning.
    int gamma_filter = -1;
};

namespace detail {

bool state_certifies(const NodeState& s, int gamma);

// Sound pruning for the gamma filter: true when no descendant (including the
// node itself) can be gamma-hyperelliptic. Membership below the conductor is
// frozen along every tree path, which is what makes these cuts safe.
bool gamma_subtree_dead(const NodeState& s, int gamma);

struct LocalStats {
    std::vector<uint64_t> per_genus;
    std::vector<std::vector<uint64_t>> gamma_per_genus;
    uint64_t nodes = 0;

    LocalStats(int genus_max, size_t n_gammas)
        : per_genus(static_cast<size_t>(genus_max) + 1, 0),
          gamma_per_genus(n_gammas,
                          std::vector<uint64_t>(static_cast<size_t>(genus_max) + 1, 0)) {}
};

template <class Visit>
void record_visit(const NodeState& s, const EnumerateOptions& opt, LocalStats& stats,
                  Visit& visit) {
    if (opt.gamma_filter >= 0) {
        if (s.genus == opt.genus_max && state_certifies(s, opt.gamma_filter)) {
            stats.per_genus[static_cast<size_t>(s.genus)] += 1;
            visit(TreeNode(s));
        }
        return;
    }
    stats.per_genus[static_cast<size_t>(s.genus)] += 1;
    for (size_t gi = 0; gi < opt.count_gammas.size(); ++gi)
        if (state_certifies(s, opt.count_gammas[gi]))
            stats.gamma_per_genus[gi][static_cast<size_t>(s.genus)] += 1;
    visit(TreeNode(s));
}

// Work pool for the parallel phase. The semigroup tree is heavily skewed (one
// shallow subtree holds nearly all nodes), so fixed-depth task lists cannot
// balance it; instead a busy worker donates the shallowest unexplored subtree
// of its stack whenever the queue runs low.
struct WorkQueue {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<NodeState> tasks;
    long long outstanding = 0;  // queued + running, guarded by mu
    std::atomic<size_t> approx_size{0};
    size_t refill_target = 0;

    bool wants_more() const {
        return approx_size.load(std::memory_order_relaxed) < refill_target;
    }

    void push(NodeState&& s) {
        {
            std::lock_guard<std::mutex> lock(mu);
            tasks.push_back(std::move(s));
            ++outstanding;
            approx_size.store(tasks.size(), std::memory_order_relaxed);
        }
        cv.notify_one();
    }

    // Blocks for the next task; false means all work is finished.
    bool pop(NodeState& out) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return !tasks.empty() || outstanding == 0; });
        if (tasks.empty()) return false;
        out = tasks.front();
        tasks.pop_front();
        approx_size.store(tasks.size(), std::memory_order_relaxed);
        return true;
    }

    void finish_one() {
        std::lock_guard<std::mutex> lock(mu);
        if (--outstanding == 0) cv.notify_all();
    }
};

// Depth-first walk of the subtree rooted at `root` (the root itself is
// visited). `genus_limit` bounds the descent; when `frontier` is non-null,
// nodes reaching `frontier_genus` are collected there instead of recursed.
// A non-null `donor` lets the walk shed unexplored subtrees when other
// workers starve.
template <class Visit>
void dfs(const NodeState& root, const EnumerateOptions& opt, int genus_limit,
         int frontier_genus, std::vector<NodeState>* frontier, LocalStats& stats,
         Visit& visit, WorkQueue* donor = nullptr) {
    struct Frame {
        NodeState state;
        int16_t next;  // window scan position
    };
    static thread_local std::vector<Frame> stack;
    stack.resize(static_cast<size_t>(std::max(genus_limit, 0)) + 2);

    const bool filtered = opt.gamma_filter >= 0;
    int sp = 0;
    stack[0].state = root;
    stack[0].next = static_cast<int16_t>(root.window_lo());
    stats.nodes += 1;
    record_visit(root, opt, stats, visit);

    // Donations hand whole subtrees to starving workers, always shedding the
    // shallowest unexplored child (the largest chunk on this stack). Attempts
    // are rate-limited so the queue traffic never dominates the walk; the
    // subtree sizes are wildly skewed, so any depth-based cutoff either
    // strands huge chunks or floods the queue with leaves.
    constexpr uint64_t kDonationInterval = 256;
    uint64_t steps_since_donation = 0;
    int donate_scan = 0;  // frames below this index are exhausted
    const auto donate_one = [&] {
        donate_scan = std::min(donate_scan, sp);
        while (donate_scan <= sp) {
            Frame& fr = stack[static_cast<size_t>(donate_scan)];
            if (fr.state.genus >= genus_limit) {
                ++donate_scan;
                continue;
            }
            int x = fr.next;
            const int fhi = fr.state.window_hi();
            while (x <= fhi && fr.state.tab[x] != 1) ++x;
            if (x > fhi) {
                ++donate_scan;
                continue;
            }
            fr.next = static_cast<int16_t>(x + 1);
            NodeState child;
            make_child(fr.state, x, child);
            if (filtered && gamma_subtree_dead(child, opt.gamma_filter)) return;
            donor->push(std::move(child));
            return;
        }
    };

    while (sp >= 0) {
        if (donor && ++steps_since_donation >= kDonationInterval && donor->wants_more()) {
            steps_since_donation = 0;
            donate_one();
        }
        Frame& f = stack[static_cast<size_t>(sp)];
        if (f.state.genus >= genus_limit) {
            --sp;
            continue;
        }
        int x = f.next;
        const int hi = f.state.window_hi();
        while (x <= hi && f.state.tab[x] != 1) ++x;
        if (x > hi) {
            --sp;
            continue;
        }
        f.next = static_cast<int16_t>(x + 1);

        Frame& kid = stack[static_cast<size_t>(sp + 1)];
        make_child(f.state, x, kid.state);
        if (filtered && gamma_subtree_dead(kid.state, opt.gamma_filter)) continue;
        if (frontier && kid.state.genus == frontier_genus) {
            frontier->push_back(kid.state);  // counted when its task runs
            continue;
        }
        stats.nodes += 1;
        record_visit(kid.state, opt, stats, visit);
        kid.next = static_cast<int16_t>(kid.state.window_lo());
        ++sp;
    }
}

void finalize_stats(EnumerationStats& out, const EnumerateOptions& opt,
                    std::vector<LocalStats>&& locals, double seconds);

} // namespace detail

// Parallel enumeration with a local/merge reduction. `make_local()` builds an
// accumulator, `visit(local, node)` folds one semigroup into it, and
// `merge(std::move(local), slot)` runs on the calling thread, slot 0 (the
// serial prefix) first and then one slot per worker in index order. With one
// worker the whole enumeration folds into slot 0 in depth-first order. With
// several workers the node partition across slots depends on scheduling, so
// fold state must be order-free (counts, extrema) or canonically sorted after
// the merge; per-genus counts in the returned stats are always deterministic.
template <class MakeLocal, class VisitLocal, class MergeLocal>
EnumerationStats enumerate_reduce(const EnumerateOptions& opt, MakeLocal make_local,
                                  VisitLocal visit, MergeLocal merge) {
    if (opt.genus_max < 0 || opt.genus_max > kMaxTreeGenus)
        fail(errc::invalid_argument,
             "enumerate: genus_max must lie in 0.." + std::to_string(kMaxTreeGenus));
    if (opt.threads < 1 || opt.split_depth < 1)
        fail(errc::invalid_argument, "enumerate: threads and split_depth must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    using Local = decltype(make_local());

    detail::NodeState root;
    detail::init_root(root);

    const int frontier_genus = std::min(opt.split_depth, opt.genus_max + 1);
    std::vector<detail::NodeState> frontier;

    detail::LocalStats prefix_stats(opt.genus_max, opt.count_gammas.size());
    Local prefix_local = make_local();
    {
        auto visit_prefix = [&](const TreeNode& n) { visit(prefix_local, n); };
        if (opt.gamma_filter >= 0 && detail::gamma_subtree_dead(root, opt.gamma_filter)) {
            // nothing reachable
        } else {
            detail::dfs(root, opt, opt.genus_max, frontier_genus, &frontier, prefix_stats,
                        visit_prefix);
        }
    }

    const int workers = std::max(1, std::min<int>(opt.threads, 256));
    std::vector<detail::LocalStats> stats_slots;
    std::vector<Local> local_slots;

    if (workers == 1 || frontier.empty()) {
        // keeps global depth-first order: frontier roots in discovery order
        for (const auto& task : frontier) {
            auto visit_seq = [&](const TreeNode& n) { visit(prefix_local, n); };
            detail::dfs(task, opt, opt.genus_max, -1, nullptr, prefix_stats, visit_seq);
        }
    } else {
        detail::WorkQueue queue;
        queue.refill_target = 2 * static_cast<size_t>(workers);
        {
            std::lock_guard<std::mutex> lock(queue.mu);
            for (auto& task : frontier) queue.tasks.push_back(task);
            queue.outstanding = static_cast<long long>(frontier.size());
            queue.approx_size.store(queue.tasks.size(), std::memory_order_relaxed);
        }

        stats_slots.reserve(static_cast<size_t>(workers));
        local_slots.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            stats_slots.emplace_back(opt.genus_max, opt.count_gammas.size());
            local_slots.push_back(make_local());
        }

        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                // worker-private accumulators; stored into the slots once
                detail::LocalStats st(opt.genus_max, opt.count_gammas.size());
                Local local = make_local();
                auto visit_worker = [&](const TreeNode& n) { visit(local, n); };
                detail::NodeState task;
                while (queue.pop(task)) {
                    detail::dfs(task, opt, opt.genus_max, -1, nullptr, st, visit_worker,
                                &queue);
                    queue.finish_one();
                }
                stats_slots[static_cast<size_t>(w)] = std::move(st);
                local_slots[static_cast<size_t>(w)] = std::move(local);
            });
        }
        for (auto& th : pool) th.join();
    }

    merge(std::move(prefix_local), 0);
    for (size_t w = 0; w < local_slots.size(); ++w)
        merge(std::move(local_slots[w]), static_cast<int>(w) + 1);

    stats_slots.push_back(std::move(prefix_stats));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EnumerationStats out;
    detail::finalize_stats(out, opt, std::move(stats_slots), seconds);
    return out;
}

// Visit every numerical semigroup of genus <= opt.genus_max (or, with a gamma
// filter, every gamma-hyperelliptic semigroup of genus == opt.genus_max).
// With several workers the visitor runs concurrently on disjoint subtrees.
template <class Visit>
EnumerationStats enumerate(const EnumerateOptions& opt, Visit&& visit) {
    struct Nothing {};
    return enumerate_reduce(
        opt, [] { return Nothing{}; },
        [&](Nothing&, const TreeNode& n) { visit(n); }, [](Nothing&&, int) {});
}

EnumerationStats enumerate(int genus_max, const std::function<void(const TreeNode&)>& visit);

// Independent oracle: all gap sets of the given genus as subsets of
// [1, 2*genus-1], validated by closure, in lexicographic order. genus <= 12.
std::vector<Semigroup> brute_force_enumerate(int genus);

// Tree enumeration restricted to the genus-`genus` gamma-hyperelliptic
// population, with certificate pruning.
EnumerationStats enumerate_gamma_hyperelliptic(
    int gamma, int genus, const std::function<void(const TreeNode&)>& visit,
    int threads = 1, int split_depth = 6);

// Minimal generating set (elements that are not sums of two nonzero members).
std::vector<int> minimal_generators(const Semigroup& s);

} // namespace sgw
