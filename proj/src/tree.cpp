#include "sgw/tree.hpp"

#include <string>

namespace sgw {

namespace detail {

bool state_certifies(const NodeState& s, int gamma) {
    // condition 1: exactly gamma even members in [2, 4*gamma]
    int evens = 0;
    for (int x = 2; x <= 4 * gamma; x += 2) {
        if (s.member(x) && ++evens > gamma) return false;
    }
    if (evens != gamma) return false;
    // condition 2: (gamma+1)st positive member is 4*gamma+2, i.e. exactly
    // gamma members in [1, 4*gamma+1] and 4*gamma+2 itself a member
    int below = 0;
    for (int x = 1; x <= 4 * gamma + 1; ++x)
        if (s.member(x)) ++below;
    return below == gamma && s.member(4 * gamma + 2);
}

bool gamma_subtree_dead(const NodeState& s, int gamma) {
    const int c = s.conductor();  // membership below c is frozen in descendants
    // a frozen odd member <= 4*gamma+1 contradicts the pivot in every descendant
    for (int x = 1; x < std::min(4 * gamma + 2, c); x += 2)
        if (s.tab[x] != 0) return true;
    // window evens: frozen ones persist, the rest may or may not survive
    int frozen = 0;
    for (int x = 2; x < std::min(4 * gamma + 1, c); x += 2)
        if (s.tab[x] != 0) ++frozen;
    if (frozen > gamma) return true;
    int removable = 0;
    for (int x = std::max(c + (c & 1), 2); x <= 4 * gamma; x += 2) ++removable;
    if (frozen + removable < gamma) return true;
    // the pivot element itself already removed
    if (4 * gamma + 2 < c && s.tab[4 * gamma + 2] == 0) return true;
    return false;
}

void finalize_stats(EnumerationStats& out, const EnumerateOptions& opt,
                    std::vector<LocalStats>&& locals, double seconds) {
    out.per_genus.assign(static_cast<size_t>(opt.genus_max) + 1, 0);
    out.gammas = opt.count_gammas;
    out.gamma_per_genus.assign(
        opt.count_gammas.size(),
        std::vector<uint64_t>(static_cast<size_t>(opt.genus_max) + 1, 0));
    for (const auto& local : locals) {
        out.total_nodes += local.nodes;
        for (size_t g = 0; g < local.per_genus.size(); ++g)
            out.per_genus[g] += local.per_genus[g];
        for (size_t gi = 0; gi < local.gamma_per_genus.size(); ++gi)
            for (size_t g = 0; g < local.gamma_per_genus[gi].size(); ++g)
                out.gamma_per_genus[gi][g] += local.gamma_per_genus[gi][g];
    }
    out.wall_seconds = seconds;
    out.nodes_per_second = seconds > 0 ? static_cast<double>(out.total_nodes) / seconds : 0.0;
    out.threads = opt.threads;
    out.split_depth = opt.split_depth;
}

} // namespace detail

EnumerationStats enumerate(int genus_max, const std::function<void(const TreeNode&)>& visit) {
    EnumerateOptions opt;
    opt.genus_max = genus_max;
    return enumerate(opt, [&](const TreeNode& n) { visit(n); });
}

EnumerationStats enumerate_gamma_hyperelliptic(
    int gamma, int genus, const std::function<void(const TreeNode&)>& visit, int threads,
    int split_depth) {
    if (gamma < 0) fail(errc::invalid_argument, "enumerate_gamma_hyperelliptic: gamma >= 0");
    EnumerateOptions opt;
    opt.genus_max = genus;
    opt.threads = threads;
    opt.split_depth = split_depth;
    opt.gamma_filter = gamma;
    return enumerate(opt, [&](const TreeNode& n) { visit(n); });
}

std::vector<Semigroup> brute_force_enumerate(int genus) {
    if (genus < 0 || genus > 12)
        fail(errc::invalid_argument, "brute_force_enumerate: genus must lie in 0..12");
    std::vector<Semigroup> out;
    if (genus == 0) {
        out.push_back(Semigroup::naturals());
        return out;
    }
    // lexicographic genus-subsets of [1, 2*genus-1]
    std::vector<int> comb(static_cast<size_t>(genus));
    for (int i = 0; i < genus; ++i) comb[static_cast<size_t>(i)] = i + 1;
    const int n = 2 * genus - 1;
    for (;;) {
        if (gaps_form_semigroup(comb)) out.push_back(Semigroup::from_gaps(comb));
        int i = genus - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - (genus - 1 - i)) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < genus; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<int> minimal_generators(const Semigroup& s) {
    const int hi = std::max(s.conductor(), 1) + s.multiplicity() - 1;
    std::vector<int> out;
    for (int x = 1; x <= hi; ++x) {
        if (!s.contains(x)) continue;
        bool decomposable = false;
        for (int a = s.multiplicity(); 2 * a <= x; ++a) {
            if (s.contains(a) && s.contains(x - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(x);
    }
    return out;
}

} // namespace sgw
