#pragma once

#include <optional>
#include <vector>

#include <colrec/core.hpp>

namespace colrec {

/// Transitive orientation of the complement of the input graph. Edge (a,b)
/// reads "a above b".
struct OrientationCertificate {
    std::vector<std::pair<int, int>> edges;
};

/// Disjoint family of modules of size > 1 plus the vertex -> representative map
/// (identity outside reported modules).
struct ModuleReport {
    std::vector<std::vector<int>> modules;
    std::vector<int> representative;
};

/// Result of contracting modules to representatives until the quotient is prime.
struct ModuleContraction {
    CollisionGraph quotient;           // dense ids over rep_vertices
    std::vector<int> representative;   // original vertex -> representative (fixpoint)
    std::vector<int> rep_vertices;     // quotient id -> original vertex
};

/// Nested chain W_0 c W_1 c ... c W_k with bn(W_k) empty, plus the unreached set.
struct BoundedExpansion {
    std::vector<std::vector<int>> chain;
    std::vector<int> unreached;  // W*
};

/// Certificate iff the complement admits a transitive orientation; the
/// certificate is re-verified transitive before return.
std::optional<OrientationCertificate> recognize_function_graph(const CollisionGraph& g);

bool is_module(const CollisionGraph& g, const std::vector<int>& s);

ModuleReport find_modules(const CollisionGraph& g);

ModuleContraction contract_modules(const CollisionGraph& g);

/// Vertices adjacent to every other vertex.
std::vector<int> universal_vertices(const CollisionGraph& g);

/// bn(S): outside vertices v with a witness u in S, w outside, where uv is an
/// edge and uw, vw are non-edges.
std::vector<int> bounded_neighborhood(const CollisionGraph& g, const std::vector<int>& s);

BoundedExpansion bounded_expansion(const CollisionGraph& g, const std::vector<int>& seed);

/// One side of the exterior of a greedily grown maximal clique; a one-sided
/// bound suitable as the seed for layers_from_lower_bound. Throws
/// EmptyExterior when every seed clique dominates the graph.
std::vector<int> find_lower_bound(const CollisionGraph& g);

/// Peels layers from a one-sided bound via bounded expansions, absorbing each
/// stage's universal vertices and emitting a residual clique as the final
/// layer. Canonical output.
LayerDecomposition layers_from_lower_bound(const CollisionGraph& g, const std::vector<int>& s);

/// Full pipeline per connected component: recognize, contract modules, peel
/// layers, re-expand members into their representative's layer. Components
/// sorted by smallest member; cross-component order is not identifiable.
std::vector<LayerDecomposition> layer_decomposition(const CollisionGraph& g);

/// Independent route: dominance taken from the orientation certificate, then
/// Max peeled directly. Canonical output.
LayerDecomposition layers_via_orientation(const CollisionGraph& g);

/// Contracts layers to single vertices and verifies the consecutive interval
/// pattern i <= j <= i*.
ContractionResult contraction_graph(const CollisionGraph& g, const LayerDecomposition& d);

}  // namespace colrec
