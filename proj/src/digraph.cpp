#include "hsm/digraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hsm/errors.hpp"
#include "hsm/matrix.hpp"

namespace hsm {

void ArcMultiDigraph::add_arc(int from, int to, long long multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("add_arc: multiplicity must be >= 1");
    arcs_[{from, to}] += multiplicity;
    out_[from] += multiplicity;
    in_[to] += multiplicity;
    total_ += multiplicity;
}

long long ArcMultiDigraph::arc_multiplicity(int from, int to) const {
    auto it = arcs_.find({from, to});
    return it == arcs_.end() ? 0 : it->second;
}

long long ArcMultiDigraph::out_degree(int v) const {
    auto it = out_.find(v);
    return it == out_.end() ? 0 : it->second;
}

long long ArcMultiDigraph::in_degree(int v) const {
    auto it = in_.find(v);
    return it == in_.end() ? 0 : it->second;
}

std::vector<int> ArcMultiDigraph::support() const {
    std::set<int> verts;
    for (const auto& [arc, mult] : arcs_) {
        verts.insert(arc.first);
        verts.insert(arc.second);
    }
    return {verts.begin(), verts.end()};
}

bool ArcMultiDigraph::is_balanced() const {
    for (const auto& [v, deg] : out_)
        if (deg != in_degree(v)) return false;
    for (const auto& [v, deg] : in_)
        if (deg != out_degree(v)) return false;
    return true;
}

bool ArcMultiDigraph::is_connected() const {
    const auto verts = support();
    if (verts.empty()) return true;
    std::set<int> seen = {verts[0]};
    std::vector<int> stack = {verts[0]};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [arc, mult] : arcs_) {
            int next = -1;
            if (arc.first == v) next = arc.second;
            else if (arc.second == v) next = arc.first;
            else continue;
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return seen.size() == verts.size();
}

bool ArcMultiDigraph::is_eulerian() const {
    return total_ > 0 && is_balanced() && is_connected();
}

BigInt b_of_f(const ArcMultiDigraph& d) {
    BigInt product = 1;
    for (const auto& [arc, mult] : d.arcs()) product *= factorial(mult);
    return product;
}

BigInt c_of_f(const ArcMultiDigraph& d) {
    BigInt product = 1;
    for (int v : d.support()) product *= factorial(d.out_degree(v));
    return product;
}

BigInt count_arborescences(const ArcMultiDigraph& d, int root) {
    const auto verts = d.support();
    if (verts.empty()) return 1;
    const auto root_pos = std::find(verts.begin(), verts.end(), root);
    if (root_pos == verts.end()) throw std::invalid_argument("count_arborescences: root not in support");
    const int n = static_cast<int>(verts.size());
    std::vector<int> index(n);
    // dense index, skipping the root row/column
    std::vector<std::vector<BigInt>> lap(n - 1, std::vector<BigInt>(n - 1, BigInt(0)));
    std::vector<int> pos(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (verts[i] == root) continue;
        pos[i] = next++;
    }
    auto vert_index = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const auto& [arc, mult] : d.arcs()) {
        const auto [u, v] = arc;
        if (u == v) continue;  // loops cancel on the Laplacian diagonal
        const int pu = pos[vert_index(u)];
        const int pv = pos[vert_index(v)];
        if (pu >= 0) lap[pu][pu] += mult;
        if (pu >= 0 && pv >= 0) lap[pu][pv] -= mult;
    }
    return det_bareiss(std::move(lap));
}

BigInt count_eulerian_circuits_best(const ArcMultiDigraph& d) {
    if (!d.is_eulerian()) return 0;
    const auto verts = d.support();
    BigInt circuits = count_arborescences(d, verts.front());
    for (int v : verts) circuits *= factorial(d.out_degree(v) - 1);
    return circuits;
}

BigInt count_closed_walks(const ArcMultiDigraph& d) {
    const BigInt circuits = count_eulerian_circuits_best(d);
    if (circuits == 0) return 0;
    const BigInt scaled = circuits * d.total_arcs();
    const BigInt b = b_of_f(d);
    if (scaled % b != 0) throw std::logic_error("count_closed_walks: non-integer walk count");
    return scaled / b;
}

namespace {

struct WalkSearch {
    std::vector<std::vector<std::pair<int, long long>>> remaining;  // per-vertex out arcs
    long long arcs_left = 0;
    int start = 0;
    BigInt count = 0;

    void dfs(int at) {
        if (arcs_left == 0) {
            if (at == start) ++count;
            return;
        }
        for (auto& [to, mult] : remaining[at]) {
            if (mult == 0) continue;
            --mult;
            --arcs_left;
            dfs(to);
            ++mult;
            ++arcs_left;
        }
    }
};

}  // namespace

BigInt count_closed_walks_backtrack(const ArcMultiDigraph& d, long long arc_budget) {
    if (d.total_arcs() > arc_budget)
        throw BudgetError("count_closed_walks_backtrack: arc multiset too large",
                          std::to_string(d.total_arcs()));
    if (d.total_arcs() == 0) return 0;
    if (!d.is_balanced() || !d.is_connected()) return 0;
    const auto verts = d.support();
    std::vector<int> pos(verts.size());
    auto vert_index = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    WalkSearch search;
    search.remaining.assign(verts.size(), {});
    for (const auto& [arc, mult] : d.arcs())
        search.remaining[vert_index(arc.first)].emplace_back(vert_index(arc.second), mult);
    search.arcs_left = d.total_arcs();
    BigInt total = 0;
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (d.out_degree(verts[s]) == 0) continue;
        search.start = static_cast<int>(s);
        search.count = 0;
        search.dfs(static_cast<int>(s));
        total += search.count;
    }
    return total;
}

}  // namespace hsm
