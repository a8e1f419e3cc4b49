#include <colrec/core.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace colrec {

void CollisionGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
}

bool CollisionGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) > 0;
}

Ordering canonicalize_ordering(const Ordering& seq) {
    Ordering rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
}

OrderingTimeline canonicalize_timeline(const OrderingTimeline& timeline) {
    if (timeline.empty()) return timeline;
    const Ordering& last = timeline.back();
    Ordering rev(last.rbegin(), last.rend());
    if (last <= rev) return timeline;
    OrderingTimeline flipped;
    flipped.reserve(timeline.size());
    for (const Ordering& p : timeline) flipped.emplace_back(p.rbegin(), p.rend());
    return flipped;
}

CollisionGraph underlying_graph(const OrderedHistory& h) {
    CollisionGraph g;
    g.n = h.n;
    for (const CollisionEvent& e : h.events) g.add_edge(e.u, e.v);
    return g;
}

bool is_connected(const CollisionGraph& g) {
    if (g.n <= 0) throw std::invalid_argument("empty graph");
    return connected_components(g).size() == 1;
}

bool timeline_matches_history(const OrderedHistory& h, const OrderingTimeline& timeline) {
    if (timeline.size() != h.events.size() + 1) return false;
    for (const Ordering& p : timeline)
        if (static_cast<int>(p.size()) != h.n) return false;
    for (std::size_t k = 0; k < h.events.size(); ++k) {
        const Ordering& prev = timeline[k];
        const Ordering& next = timeline[k + 1];
        int mismatch_lo = -1, mismatch_hi = -1;
        for (int i = 0; i < h.n; ++i) {
            if (prev[i] != next[i]) {
                if (mismatch_lo < 0)
                    mismatch_lo = i;
                else
                    mismatch_hi = i;
            }
        }
        if (mismatch_lo < 0 || mismatch_hi != mismatch_lo + 1) return false;
        if (prev[mismatch_lo] != next[mismatch_hi] || prev[mismatch_hi] != next[mismatch_lo]) return false;
        int a = prev[mismatch_lo], b = prev[mismatch_hi];
        int eu = h.events[k].u, ev = h.events[k].v;
        if (!((a == eu && b == ev) || (a == ev && b == eu))) return false;
    }
    return true;
}

std::vector<std::vector<char>> adjacency_matrix(const CollisionGraph& g) {
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges) {
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    return adj;
}

std::vector<std::vector<int>> adjacency_lists(const CollisionGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> connected_components(const CollisionGraph& g) {
    auto adj = adjacency_lists(g);
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

CollisionGraph complement_graph(const CollisionGraph& g) {
    CollisionGraph c;
    c.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

std::pair<CollisionGraph, std::vector<int>> induced_subgraph(const CollisionGraph& g,
                                                             const std::vector<int>& verts) {
    std::vector<int> old_ids(verts);
    std::sort(old_ids.begin(), old_ids.end());
    std::vector<int> new_id(g.n, -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
    CollisionGraph sub;
    sub.n = static_cast<int>(old_ids.size());
    for (auto [u, v] : g.edges)
        if (new_id[u] >= 0 && new_id[v] >= 0) sub.add_edge(new_id[u], new_id[v]);
    return {std::move(sub), std::move(old_ids)};
}

bool is_clique(const CollisionGraph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

LayerDecomposition LayerDecomposition::canonical() const {
    LayerDecomposition out = *this;
    for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
    for (auto& u : out.stage_universals) std::sort(u.begin(), u.end());
    std::vector<std::vector<int>> rev(out.layers.rbegin(), out.layers.rend());
    if (rev < out.layers) {
        out.layers = std::move(rev);
        out.stage_universals.assign(stage_universals.rbegin(), stage_universals.rend());
        for (auto& u : out.stage_universals) std::sort(u.begin(), u.end());
    }
    return out;
}

}  // namespace colrec
