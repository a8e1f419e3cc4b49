#include <colrec/funcgraph.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include <colrec/errors.hpp>

namespace colrec {

namespace {

std::vector<char> make_mask(int n, const std::vector<int>& verts) {
    std::vector<char> mask(n, 0);
    for (int v : verts) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        mask[v] = 1;
    }
    return mask;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_complete(const CollisionGraph& g) {
    return g.edge_count() == static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
}

// Smallest module containing {u,v}: grow by absorbing splitters.
std::vector<int> module_closure(const std::vector<std::vector<char>>& adj, int n, int u, int v) {
    std::vector<char> in(n, 0);
    in[u] = in[v] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n && !grew; ++x) {
            if (in[x]) continue;
            bool some = false, all = true;
            for (int w = 0; w < n; ++w) {
                if (!in[w]) continue;
                if (adj[x][w])
                    some = true;
                else
                    all = false;
            }
            if (some && !all) {
                in[x] = 1;
                grew = true;
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

// Universal vertices of the subgraph induced on `verts`.
std::vector<int> universal_in(const std::vector<std::vector<char>>& adj, const std::vector<int>& verts) {
    std::vector<int> out;
    for (int v : verts) {
        bool universal = true;
        for (int u : verts)
            if (u != v && !adj[u][v]) {
                universal = false;
                break;
            }
        if (universal) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> stage_universals_for(const CollisionGraph& g,
                                                   const std::vector<std::vector<int>>& layers) {
    auto adj = adjacency_matrix(g);
    std::vector<std::vector<int>> out;
    std::vector<int> residual;
    for (const auto& layer : layers) residual = sorted_union(residual, layer);
    for (const auto& layer : layers) {
        auto universals = universal_in(adj, residual);
        std::vector<int> absorbed;
        for (int v : universals)
            if (std::binary_search(layer.begin(), layer.end(), v)) absorbed.push_back(v);
        out.push_back(std::move(absorbed));
        residual = sorted_difference(residual, layer);
    }
    return out;
}

// Layers stay in peel order: reversing a peel is only a valid peel when the
// mirrored realization happens to produce it, so normalization is done by
// choosing between the two realizable peels, never by reversing lists.
LayerDecomposition make_decomposition(const CollisionGraph& g,
                                      std::vector<std::vector<int>> layers) {
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    LayerDecomposition d;
    d.layers = std::move(layers);
    d.stage_universals = stage_universals_for(g, d.layers);
    return d;
}

}  // namespace

std::optional<OrientationCertificate> recognize_function_graph(const CollisionGraph& g) {
    const int n = g.n;
    // Work on the complement; orient implication classes one at a time on the
    // remaining edge set, then verify the union is transitive.
    std::vector<std::vector<char>> active(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) active[u][v] = active[v][u] = 1;

    std::vector<std::vector<char>> dir(n, std::vector<char>(n, 0));  // dir[a][b]: a -> b committed

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!active[a][b]) continue;
            // Explore the implication class seeded a -> b.
            std::vector<std::pair<int, int>> cls;
            std::vector<std::vector<char>> in_cls(n, std::vector<char>(n, 0));
            std::deque<std::pair<int, int>> queue{{a, b}};
            in_cls[a][b] = 1;
            bool contradiction = false;
            auto force = [&](int x, int y) {
                if (in_cls[y][x]) {
                    contradiction = true;
                    return;
                }
                if (!in_cls[x][y]) {
                    in_cls[x][y] = 1;
                    queue.push_back({x, y});
                }
            };
            while (!queue.empty() && !contradiction) {
                auto [x, y] = queue.front();
                queue.pop_front();
                cls.push_back({x, y});
                for (int z = 0; z < n && !contradiction; ++z) {
                    if (z == x || z == y) continue;
                    if (active[x][z] && !active[y][z]) force(x, z);
                    if (active[z][y] && !active[x][z]) force(z, y);
                }
            }
            if (contradiction) return std::nullopt;
            for (auto [x, y] : cls) {
                dir[x][y] = 1;
                active[x][y] = active[y][x] = 0;
            }
        }
    }

    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!dir[u][v]) continue;
            for (int w = 0; w < n; ++w)
                if (dir[v][w] && !dir[u][w]) return std::nullopt;
        }

    OrientationCertificate cert;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (dir[u][v]) cert.edges.push_back({u, v});
    std::sort(cert.edges.begin(), cert.edges.end());
    return cert;
}

bool is_module(const CollisionGraph& g, const std::vector<int>& s) {
    auto mask = make_mask(g.n, s);
    for (int u = 0; u < g.n; ++u) {
        if (mask[u]) continue;
        int hits = 0, total = 0;
        for (int v : s) {
            ++total;
            if (g.has_edge(u, v)) ++hits;
        }
        if (hits != 0 && hits != total) return false;
    }
    return true;
}

ModuleReport find_modules(const CollisionGraph& g) {
    const int n = g.n;
    ModuleReport report;
    report.representative.resize(n);
    std::iota(report.representative.begin(), report.representative.end(), 0);
    if (n <= 1) return report;

    auto adj = adjacency_matrix(g);
    std::set<std::vector<int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto m = module_closure(adj, n, u, v);
            if (static_cast<int>(m.size()) < n) candidates.insert(std::move(m));
        }

    if (candidates.empty()) {
        // Only for a clique does contracting the whole vertex set lose nothing.
        if (is_complete(g) && n >= 2) {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            report.modules.push_back(all);
            for (int v = 0; v < n; ++v) report.representative[v] = 0;
        }
        return report;
    }

    // Merge overlapping candidates while the union stays proper; unions of
    // overlapping modules are modules again.
    std::vector<std::vector<int>> pool(candidates.begin(), candidates.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pool.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
                std::vector<int> common;
                std::set_intersection(pool[i].begin(), pool[i].end(), pool[j].begin(),
                                      pool[j].end(), std::back_inserter(common));
                if (common.empty()) continue;
                if (std::includes(pool[i].begin(), pool[i].end(), pool[j].begin(), pool[j].end())) {
                    pool.erase(pool.begin() + j);
                    changed = true;
                    break;
                }
                if (std::includes(pool[j].begin(), pool[j].end(), pool[i].begin(), pool[i].end())) {
                    pool.erase(pool.begin() + i);
                    changed = true;
                    break;
                }
                auto merged = sorted_union(pool[i], pool[j]);
                if (static_cast<int>(merged.size()) < n && is_module(g, merged)) {
                    pool.erase(pool.begin() + j);
                    pool[i] = std::move(merged);
                    changed = true;
                }
            }
        }
    }

    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<char> taken(n, 0);
    for (const auto& m : pool) {
        bool clash = false;
        for (int v : m)
            if (taken[v]) {
                clash = true;
                break;
            }
        if (clash) continue;
        for (int v : m) taken[v] = 1;
        int rep = m.front();
        for (int v : m) report.representative[v] = rep;
        report.modules.push_back(m);
    }
    std::sort(report.modules.begin(), report.modules.end());
    return report;
}

ModuleContraction contract_modules(const CollisionGraph& g) {
    ModuleContraction mc;
    mc.representative.resize(g.n);
    std::iota(mc.representative.begin(), mc.representative.end(), 0);
    CollisionGraph cur = g;
    std::vector<int> cur_ids(g.n);
    std::iota(cur_ids.begin(), cur_ids.end(), 0);

    while (true) {
        ModuleReport r = find_modules(cur);
        if (r.modules.empty()) break;
        std::vector<int> keep;
        for (int v = 0; v < cur.n; ++v) {
            if (r.representative[v] == v)
                keep.push_back(v);
            else
                mc.representative[cur_ids[v]] = cur_ids[r.representative[v]];
        }
        auto [sub, kept] = induced_subgraph(cur, keep);
        std::vector<int> next_ids(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) next_ids[i] = cur_ids[kept[i]];
        cur = std::move(sub);
        cur_ids = std::move(next_ids);
    }

    for (int v = 0; v < g.n; ++v) {
        int r = v;
        while (mc.representative[r] != r) r = mc.representative[r];
        mc.representative[v] = r;
    }
    mc.quotient = std::move(cur);
    mc.rep_vertices = std::move(cur_ids);
    return mc;
}

std::vector<int> universal_vertices(const CollisionGraph& g) {
    std::vector<int> degree(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (degree[v] == g.n - 1) out.push_back(v);
    return out;
}

std::vector<int> bounded_neighborhood(const CollisionGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("bounded_neighborhood needs a nonempty set");
    auto mask = make_mask(g.n, s);
    auto adj = adjacency_matrix(g);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v) {
        if (mask[v]) continue;
        bool witnessed = false;
        for (int u : s) {
            if (!adj[u][v]) continue;
            for (int w = 0; w < g.n && !witnessed; ++w) {
                if (mask[w] || w == v || w == u) continue;
                if (!adj[u][w] && !adj[v][w]) witnessed = true;
            }
            if (witnessed) break;
        }
        if (witnessed) out.push_back(v);
    }
    return out;
}

BoundedExpansion bounded_expansion(const CollisionGraph& g, const std::vector<int>& seed) {
    if (seed.empty()) throw std::invalid_argument("bounded_expansion needs a nonempty seed");
    std::vector<int> w(seed);
    std::sort(w.begin(), w.end());
    BoundedExpansion be;
    be.chain.push_back(w);
    while (true) {
        auto bn = bounded_neighborhood(g, w);
        if (bn.empty()) break;
        w = sorted_union(w, bn);
        be.chain.push_back(w);
    }
    for (int v = 0; v < g.n; ++v)
        if (!std::binary_search(w.begin(), w.end(), v)) be.unreached.push_back(v);
    return be;
}

std::vector<int> find_lower_bound(const CollisionGraph& g) {
    const int n = g.n;
    auto adj = adjacency_matrix(g);
    for (int seed = 0; seed < n; ++seed) {
        // Greedy maximal clique grown from the seed in id order.
        std::vector<int> clique{seed};
        for (int u = 0; u < n; ++u) {
            if (u == seed) continue;
            bool joins = true;
            for (int c : clique)
                if (!adj[u][c]) {
                    joins = false;
                    break;
                }
            if (joins) clique.push_back(u);
        }
        std::sort(clique.begin(), clique.end());

        std::vector<char> in_clique = make_mask(n, clique);
        std::vector<char> in_nbhd(n, 0);
        for (int v = 0; v < n; ++v) {
            if (in_clique[v]) continue;
            for (int c : clique)
                if (adj[v][c]) {
                    in_nbhd[v] = 1;
                    break;
                }
        }
        std::vector<int> exterior;
        for (int v = 0; v < n; ++v)
            if (!in_clique[v] && !in_nbhd[v]) exterior.push_back(v);
        if (exterior.empty()) continue;

        auto [sub, ids] = induced_subgraph(g, exterior);
        auto comps = connected_components(sub);
        const int r = static_cast<int>(comps.size());

        // Components on the same side share a neighbor of the clique.
        auto shares = [&](int i, int j) {
            for (int w = 0; w < n; ++w) {
                if (!in_nbhd[w]) continue;
                bool hit_i = false, hit_j = false;
                for (int v : comps[i])
                    if (adj[w][ids[v]]) {
                        hit_i = true;
                        break;
                    }
                for (int v : comps[j])
                    if (adj[w][ids[v]]) {
                        hit_j = true;
                        break;
                    }
                if (hit_i && hit_j) return true;
            }
            return false;
        };

        std::vector<int> side(r, -1);
        int classes = 0;
        for (int i = 0; i < r; ++i) {
            if (side[i] >= 0) continue;
            if (classes >= 2) throw InconsistentSides("more than two sides");
            int label = classes++;
            side[i] = label;
            std::deque<int> queue{i};
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (int y = 0; y < r; ++y)
                    if (side[y] < 0 && shares(x, y)) {
                        side[y] = label;
                        queue.push_back(y);
                    }
            }
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (side[i] == side[j] && !shares(i, j))
                    throw InconsistentSides("side relation is not pairwise consistent");

        std::vector<int> bound;
        for (int i = 0; i < r; ++i)
            if (side[i] == side[0])
                for (int v : comps[i]) bound.push_back(ids[v]);
        std::sort(bound.begin(), bound.end());
        return bound;
    }
    throw EmptyExterior("every seed clique dominates the graph");
}

namespace {

// One full peel from a one-sided bound, in peel order. Throws LayerFailure
// when a stage's result is not a maximal clique of the residual; this happens
// when a residual violates the no-universal-vertex assumption badly enough
// that bounded expansions lose the ordering information.
std::vector<std::vector<int>> peel_from_bound(const CollisionGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("empty bound");
    make_mask(g.n, s);  // range check
    auto adj = adjacency_matrix(g);

    std::vector<int> current(g.n);
    std::iota(current.begin(), current.end(), 0);
    std::vector<int> bound(s);
    std::sort(bound.begin(), bound.end());

    std::vector<std::vector<int>> layers;
    while (!current.empty()) {
        auto [sub, ids] = induced_subgraph(g, current);
        if (is_complete(sub)) {
            layers.push_back(current);
            break;
        }
        std::vector<int> stage_u;
        for (int v : universal_vertices(sub)) stage_u.push_back(ids[v]);
        std::vector<int> stripped = sorted_difference(current, stage_u);
        auto [core_g, core_ids] = induced_subgraph(g, stripped);
        std::vector<int> to_core(g.n, -1);
        for (std::size_t i = 0; i < core_ids.size(); ++i) to_core[core_ids[i]] = static_cast<int>(i);

        std::vector<int> seed;
        for (int v : bound)
            if (to_core[v] >= 0) seed.push_back(to_core[v]);
        if (seed.empty()) throw LayerFailure("stage seed vanished");

        std::vector<int> core_layer;
        for (int v : bounded_expansion(core_g, seed).unreached) core_layer.push_back(core_ids[v]);
        std::vector<int> layer = sorted_union(core_layer, stage_u);
        if (layer.empty()) throw LayerFailure("empty stage layer");

        // Every layer must be a maximal clique of the residual graph.
        if (!is_clique(g, layer)) throw LayerFailure("stage layer is not a clique");
        for (int w : current) {
            if (std::binary_search(layer.begin(), layer.end(), w)) continue;
            bool joins_all = true;
            for (int x : layer)
                if (!adj[w][x]) {
                    joins_all = false;
                    break;
                }
            if (joins_all) throw LayerFailure("stage layer is not a maximal clique");
        }
        layers.push_back(layer);

        std::vector<int> core_seed;
        for (int v : core_layer) core_seed.push_back(to_core[v]);
        std::vector<int> next_bound;
        if (!core_seed.empty())
            for (int v : bounded_expansion(core_g, core_seed).unreached)
                next_bound.push_back(core_ids[v]);
        current = sorted_difference(current, layer);
        if (!current.empty() && next_bound.empty()) {
            auto [rest, rest_ids] = induced_subgraph(g, current);
            if (!is_complete(rest)) throw LayerFailure("no bound for the next stage");
        }
        bound = std::move(next_bound);
    }
    return layers;
}

std::vector<std::vector<int>> with_sorted_members(std::vector<std::vector<int>> layers) {
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    return layers;
}

}  // namespace

LayerDecomposition layers_from_lower_bound(const CollisionGraph& g, const std::vector<int>& s) {
    return make_decomposition(g, peel_from_bound(g, s));
}

namespace {

// Peel one connected component, in original vertex ids.
std::vector<std::vector<int>> decompose_set(const CollisionGraph& g, const std::vector<int>& comp);

std::vector<std::vector<int>> decompose_connected(const CollisionGraph& g,
                                                  const std::vector<int>& verts) {
    auto [sub, ids] = induced_subgraph(g, verts);
    ModuleContraction mc = contract_modules(sub);
    auto expand = [&](int quotient_vertex) {
        std::vector<int> members;
        int rep = mc.rep_vertices[quotient_vertex];
        for (int v = 0; v < sub.n; ++v)
            if (mc.representative[v] == rep) members.push_back(ids[v]);
        return members;
    };
    if (mc.quotient.n == 1) return {expand(0)};

    auto expand_all = [&](const std::vector<std::vector<int>>& quotient_layers) {
        std::vector<std::vector<int>> layers;
        for (const auto& ql : quotient_layers) {
            std::vector<int> layer;
            for (int q : ql) layer = sorted_union(layer, expand(q));
            layers.push_back(std::move(layer));
        }
        return layers;
    };

    // The graph fixes the decomposition only up to the flip of the line, and
    // the two flips are not list reversals of each other in general. Peel from
    // both ends and keep the lexicographically smaller reading.
    try {
        auto raw = peel_from_bound(mc.quotient, find_lower_bound(mc.quotient));
        auto mirror = peel_from_bound(mc.quotient, raw.front());
        return std::min(with_sorted_members(expand_all(raw)),
                        with_sorted_members(expand_all(mirror)));
    } catch (const EmptyExterior&) {
    } catch (const LayerFailure&) {
        // A residual violated the no-universal-vertex assumption in a way the
        // expansions cannot see past; the forced orientation still carries the
        // full ordering.
    }
    return expand_all(layers_via_orientation(mc.quotient).layers);
}

std::vector<std::vector<int>> decompose_set(const CollisionGraph& g, const std::vector<int>& comp) {
    auto [sub, ids] = induced_subgraph(g, comp);
    if (is_complete(sub)) return {comp};

    std::vector<int> stage_u;
    for (int v : universal_vertices(sub)) stage_u.push_back(ids[v]);
    std::vector<int> rest = sorted_difference(comp, stage_u);

    auto [rest_g, rest_ids] = induced_subgraph(g, rest);
    auto subcomps = connected_components(rest_g);

    std::vector<std::vector<int>> layers;
    if (subcomps.size() > 1) {
        // Stripping universals disconnected the component. The pieces stack in
        // some total order we cannot identify; concatenate by smallest member.
        for (const auto& sc : subcomps) {
            std::vector<int> sc_orig;
            for (int v : sc) sc_orig.push_back(rest_ids[v]);
            auto part = decompose_set(g, sc_orig);
            layers.insert(layers.end(), part.begin(), part.end());
        }
    } else {
        layers = decompose_connected(g, rest);
    }
    layers.front() = sorted_union(layers.front(), stage_u);
    return layers;
}

}  // namespace

std::vector<LayerDecomposition> layer_decomposition(const CollisionGraph& g) {
    if (!recognize_function_graph(g))
        throw NotFunctionGraph("complement admits no transitive orientation");
    std::vector<LayerDecomposition> out;
    for (const auto& comp : connected_components(g))
        out.push_back(make_decomposition(g, decompose_set(g, comp)));
    return out;
}

LayerDecomposition layers_via_orientation(const CollisionGraph& g) {
    auto cert = recognize_function_graph(g);
    if (!cert) throw NotFunctionGraph("complement admits no transitive orientation");
    std::vector<std::vector<char>> above(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : cert->edges) above[u][v] = 1;

    std::vector<int> universals = universal_vertices(g);
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> rest = sorted_difference(all, universals);

    std::vector<std::vector<int>> layers;
    if (rest.empty()) {
        layers = {universals};
    } else {
        auto peel = [&](bool flipped) {
            std::vector<int> remaining = rest;
            std::vector<std::vector<int>> out;
            while (!remaining.empty()) {
                std::vector<int> layer;
                for (int v : remaining) {
                    bool dominated = false;
                    for (int u : remaining) {
                        if (u == v) continue;
                        if (flipped ? above[v][u] : above[u][v]) {
                            dominated = true;
                            break;
                        }
                    }
                    if (!dominated) layer.push_back(v);
                }
                if (layer.empty()) throw LayerFailure("orientation peel stalled");
                remaining = sorted_difference(remaining, layer);
                out.push_back(std::move(layer));
            }
            return out;
        };
        // Same flip ambiguity as the expansion route; same deterministic pick.
        layers = std::min(with_sorted_members(peel(false)), with_sorted_members(peel(true)));
        if (!universals.empty()) layers.front() = sorted_union(layers.front(), universals);
    }
    return make_decomposition(g, std::move(layers));
}

ContractionResult contraction_graph(const CollisionGraph& g, const LayerDecomposition& d) {
    const int k = static_cast<int>(d.layers.size());
    std::vector<int> layer_of(g.n, -1);
    for (int i = 0; i < k; ++i)
        for (int v : d.layers[i]) {
            if (v < 0 || v >= g.n || layer_of[v] >= 0)
                throw std::invalid_argument("layers do not partition the vertex set");
            layer_of[v] = i;
        }

    ContractionResult result;
    for (auto [u, v] : g.edges) {
        int i = layer_of[u], j = layer_of[v];
        if (i < 0 || j < 0) continue;  // decomposition may cover a subset (one component)
        if (i == j) continue;
        result.contraction_edges.insert({std::min(i, j) + 1, std::max(i, j) + 1});
    }
    result.right_reach.resize(k);
    for (int i = 1; i <= k; ++i) {
        int reach = i;
        for (int j = i + 1; j <= k; ++j)
            if (result.contraction_edges.count({i, j})) reach = j;
        result.right_reach[i - 1] = reach;
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            bool edge = result.contraction_edges.count({i, j}) > 0;
            bool expected = j <= result.right_reach[i - 1];
            if (edge != expected)
                throw IntervalViolation("contraction edges break the interval pattern");
        }
    return result;
}

}  // namespace colrec
