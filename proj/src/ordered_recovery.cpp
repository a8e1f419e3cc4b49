#include <colrec/ordered_recovery.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include <colrec/errors.hpp>

namespace colrec {

namespace {

// Sequences kept as orientation-free doubly linked lists: each vertex stores
// its (at most two) neighbors, a component is read by walking from an end.
// Flip and concatenation are O(1); there is no direction to maintain.
class SequenceForest {
  public:
    explicit SequenceForest(int n) : nbr_(n, {-1, -1}), parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool same_component(int u, int v) { return find(u) == find(v); }

    bool adjacent(int u, int v) const {
        return nbr_[u][0] == v || nbr_[u][1] == v;
    }

    bool is_end(int v) const { return nbr_[v][0] < 0 || nbr_[v][1] < 0; }

    void link_ends(int u, int v) {
        attach(u, v);
        attach(v, u);
        parent_[find(u)] = find(v);
    }

    // u,v adjacent; afterwards they occupy each other's positions.
    void swap_adjacent(int u, int v) {
        int a = other_neighbor(u, v);
        int b = other_neighbor(v, u);
        set_neighbors(u, v, b);
        set_neighbors(v, u, a);
        if (a >= 0) replace(a, u, v);
        if (b >= 0) replace(b, v, u);
    }

    std::vector<std::vector<int>> sequences() {
        int n = static_cast<int>(nbr_.size());
        std::vector<std::vector<int>> by_root(n);
        for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
        std::vector<std::vector<int>> out;
        for (int r = 0; r < n; ++r) {
            if (by_root[r].empty()) continue;
            int start = -1;
            for (int v : by_root[r])
                if (is_end(v)) {
                    start = std::min(start < 0 ? v : start, v);
                }
            std::vector<int> seq;
            int prev = -1, cur = start;
            while (cur >= 0) {
                seq.push_back(cur);
                int next = (nbr_[cur][0] == prev) ? nbr_[cur][1] : nbr_[cur][0];
                prev = cur;
                cur = next;
            }
            out.push_back(std::move(seq));
        }
        return out;
    }

  private:
    void attach(int v, int to) {
        if (nbr_[v][0] < 0)
            nbr_[v][0] = to;
        else
            nbr_[v][1] = to;
    }
    int other_neighbor(int v, int not_this) const {
        return nbr_[v][0] == not_this ? nbr_[v][1] : nbr_[v][0];
    }
    void set_neighbors(int v, int a, int b) { nbr_[v] = {a, b}; }
    void replace(int v, int from, int to) {
        if (nbr_[v][0] == from)
            nbr_[v][0] = to;
        else
            nbr_[v][1] = to;
    }

    std::vector<std::array<int, 2>> nbr_;
    std::vector<int> parent_;
};

SequenceForest run_forward(const OrderedHistory& h) {
    SequenceForest forest(h.n);
    for (const CollisionEvent& e : h.events) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= h.n || e.v >= h.n)
            throw InvalidHistory("event endpoints out of range");
        if (forest.same_component(e.u, e.v)) {
            if (!forest.adjacent(e.u, e.v))
                throw InvalidHistory("collision between non-adjacent objects");
            forest.swap_adjacent(e.u, e.v);
        } else {
            // The lemma's merge case: both endpoints must be extremal.
            if (!forest.is_end(e.u) || !forest.is_end(e.v))
                throw InvalidHistory("cross-component collision with interior endpoint");
            forest.link_ends(e.u, e.v);
            forest.swap_adjacent(e.u, e.v);
        }
    }
    return forest;
}

}  // namespace

ComponentOrdering recover_end_position(const OrderedHistory& h) {
    SequenceForest forest = run_forward(h);
    ComponentOrdering out;
    for (auto& seq : forest.sequences()) out.components.push_back(canonicalize_ordering(seq));
    std::sort(out.components.begin(), out.components.end(),
              [](const Ordering& a, const Ordering& b) { return a.front() < b.front(); });
    return out;
}

OrderingTimeline recover_timeline(const OrderedHistory& h) {
    if (!is_connected(underlying_graph(h)))
        throw NotConnected("timeline is only unique for connected histories");
    ComponentOrdering end = recover_end_position(h);
    Ordering cur = end.components.front();
    std::vector<int> pos(h.n);
    for (int i = 0; i < h.n; ++i) pos[cur[i]] = i;

    const std::size_t m = h.events.size();
    OrderingTimeline timeline(m + 1);
    timeline[m] = cur;
    for (std::size_t k = m; k > 0; --k) {
        int u = h.events[k - 1].u, v = h.events[k - 1].v;
        if (std::abs(pos[u] - pos[v]) != 1)
            throw InvalidHistory("undo reached a non-adjacent pair");
        std::swap(cur[pos[u]], cur[pos[v]]);
        std::swap(pos[u], pos[v]);
        timeline[k - 1] = cur;
    }
    return canonicalize_timeline(timeline);
}

std::pair<OrderedHistory, SwapRecord> swap_transform(const OrderedHistory& h) {
    OrderedHistory out = h;
    SwapRecord record;
    record.swaps.reserve(out.events.size());
    for (std::size_t k = 0; k < out.events.size(); ++k) {
        int u = out.events[k].u, v = out.events[k].v;
        record.swaps.push_back({static_cast<int>(k), {u, v}});
        for (std::size_t j = k + 1; j < out.events.size(); ++j) {
            auto relabel = [&](int x) { return x == u ? v : (x == v ? u : x); };
            out.events[j].u = relabel(out.events[j].u);
            out.events[j].v = relabel(out.events[j].v);
        }
    }
    return {std::move(out), std::move(record)};
}

OrderingTimeline recover_timeline_by_swapping(const OrderedHistory& h) {
    CollisionGraph g = underlying_graph(h);
    if (!is_connected(g)) throw NotConnected("timeline is only unique for connected histories");
    if (h.n == 1) return {Ordering{0}};

    auto [transformed, record] = swap_transform(h);
    CollisionGraph path = underlying_graph(transformed);

    // Non-crossing trajectories collide only with spatial neighbors.
    auto adj = adjacency_lists(path);
    if (path.edge_count() != static_cast<std::size_t>(h.n) - 1)
        throw InvalidHistory("transformed history is not a path");
    int start = -1;
    for (int v = 0; v < h.n; ++v) {
        if (adj[v].size() > 2) throw InvalidHistory("transformed history is not a path");
        if (adj[v].size() == 1 && start < 0) start = v;
    }
    if (start < 0) throw InvalidHistory("transformed history is not a path");
    Ordering path_order;
    path_order.reserve(h.n);
    int prev = -1, cur = start;
    while (cur >= 0) {
        path_order.push_back(cur);
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(path_order.size()) != h.n)
        throw InvalidHistory("transformed history is not a path");

    // p_j = mu_j o q where mu_j composes the first j recorded transpositions.
    const std::size_t m = h.events.size();
    std::vector<int> mu(h.n);
    std::iota(mu.begin(), mu.end(), 0);
    OrderingTimeline timeline(m + 1);
    auto emit = [&](std::size_t j) {
        Ordering p(h.n);
        for (int i = 0; i < h.n; ++i) p[i] = mu[path_order[i]];
        timeline[j] = std::move(p);
    };
    emit(0);
    for (std::size_t j = 1; j <= m; ++j) {
        auto [u, v] = record.swaps[j - 1].second;
        std::swap(mu[u], mu[v]);
        emit(j);
    }
    if (!timeline_matches_history(h, timeline))
        throw InvalidHistory("history admits no realization");
    return canonicalize_timeline(timeline);
}

}  // namespace colrec
