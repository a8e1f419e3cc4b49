#pragma once

#include <set>
#include <utility>
#include <vector>

namespace colrec {

/// Bottom-to-top ordering of object ids along the line.
using Ordering = std::vector<int>;

/// p_0, p_1, ..., p_m: one ordering per prefix of the history.
using OrderingTimeline = std::vector<Ordering>;

struct CollisionEvent {
    int u = 0;
    int v = 0;
    double time = 0.0;  // strictly inside (0,1); only the order of times matters
};

/// Time-sorted sequence of collisions among n objects.
struct OrderedHistory {
    int n = 0;
    std::vector<CollisionEvent> events;  // strictly increasing times
};

/// Simple unlabeled graph over dense ids [0,n).
struct CollisionGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // normalized u < v

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::size_t edge_count() const { return edges.size(); }
};

/// Ordered pairs (u,v) meaning u stays strictly above v for all time.
using DominanceRelation = std::set<std::pair<int, int>>;

/// Ordered partition of the vertex set produced by repeated Max-peeling.
struct LayerDecomposition {
    std::vector<std::vector<int>> layers;            // members sorted within each layer
    std::vector<std::vector<int>> stage_universals;  // universal vertices absorbed per stage

    /// Lexicographically smaller of (layers, reversed layers).
    LayerDecomposition canonical() const;
};

/// Contraction of layers to single vertices; edges follow an interval pattern.
struct ContractionResult {
    std::set<std::pair<int, int>> contraction_edges;  // 1-based layer indices, i < j
    std::vector<int> right_reach;                     // right_reach[i-1] = i* (1-based)
};

Ordering canonicalize_ordering(const Ordering& seq);

/// Flips every ordering iff that makes the final ordering canonical.
OrderingTimeline canonicalize_timeline(const OrderingTimeline& timeline);

/// Drops times and duplicate collisions.
CollisionGraph underlying_graph(const OrderedHistory& h);

bool is_connected(const CollisionGraph& g);

/// True iff consecutive orderings differ by the adjacent transposition of
/// the corresponding event's endpoints.
bool timeline_matches_history(const OrderedHistory& h, const OrderingTimeline& timeline);

// Graph plumbing shared by the recovery modules.

std::vector<std::vector<char>> adjacency_matrix(const CollisionGraph& g);
std::vector<std::vector<int>> adjacency_lists(const CollisionGraph& g);

/// Components sorted by smallest member; members sorted.
std::vector<std::vector<int>> connected_components(const CollisionGraph& g);

CollisionGraph complement_graph(const CollisionGraph& g);

/// Subgraph on `verts` relabeled to dense ids; second result maps new id -> old id.
std::pair<CollisionGraph, std::vector<int>> induced_subgraph(const CollisionGraph& g,
                                                             const std::vector<int>& verts);

bool is_clique(const CollisionGraph& g, const std::vector<int>& verts);

}  // namespace colrec
