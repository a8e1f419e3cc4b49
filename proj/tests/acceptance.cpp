// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <colrec/completion.hpp>
#include <colrec/core.hpp>
#include <colrec/errors.hpp>
#include <colrec/funcgraph.hpp>
#include <colrec/ordered_recovery.hpp>
#include <colrec/simulate.hpp>

#include "support/oracles.hpp"

using namespace colrec;

namespace {

struct Budget {
    double seconds;
};

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Samples a generic instance whose underlying history graph is connected.
TrajectorySet connected_instance(std::uint64_t& seed, int n_lo, int n_hi, int seg_lo, int seg_hi) {
    for (;; ++seed) {
        int n = n_lo + static_cast<int>(seed % (n_hi - n_lo + 1));
        int segments = seg_lo + static_cast<int>((seed / 7) % (seg_hi - seg_lo + 1));
        TrajectorySet ts = generate_trajectories(n, segments, seed);
        if (is_connected(underlying_graph(extract_history(ts)))) {
            ++seed;
            return ts;
        }
    }
}

Outcome criterion1_ordered_roundtrip() {
    const int kInstances = 1000;
    std::uint64_t seed = 1;
    int failures = 0;
    for (int i = 0; i < kInstances; ++i) {
        TrajectorySet ts = connected_instance(seed, 2, 12, 2, 6);
        OrderedHistory h = extract_history(ts);
        OrderingTimeline recovered = recover_timeline(h);
        OrderingTimeline expected = canonicalize_timeline(ordering_timeline_oracle(ts));
        if (recovered != expected) ++failures;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d instances, %d failures", kInstances, failures);
    return {failures == 0, buf};
}

Outcome criterion2_disconnected() {
    const int kInstances = 200;
    int failures = 0;
    for (int i = 0; i < kInstances; ++i) {
        std::uint64_t seed = 40000 + 3 * i;
        int n1 = 1 + i % 5, n2 = 1 + (i / 5) % 5;
        TrajectorySet ts = testsupport::disconnected_bands(seed, n1, n2, 2 + i % 3);
        OrderedHistory h = extract_history(ts);
        CollisionGraph g = underlying_graph(h);

        bool raised = false;
        try {
            recover_timeline(h);
        } catch (const NotConnected&) {
            raised = true;
        }
        if (!raised) {
            ++failures;
            continue;
        }

        Ordering final_order = ordering_timeline_oracle(ts).back();
        ComponentOrdering recovered = recover_end_position(h);
        std::map<std::vector<int>, Ordering> by_members;
        for (const Ordering& comp : recovered.components) {
            std::vector<int> members(comp);
            std::sort(members.begin(), members.end());
            by_members[members] = comp;
        }
        for (const auto& comp : connected_components(g)) {
            Ordering restricted;
            for (int v : final_order)
                if (std::binary_search(comp.begin(), comp.end(), v)) restricted.push_back(v);
            auto it = by_members.find(comp);
            if (it == by_members.end() ||
                canonicalize_ordering(restricted) != canonicalize_ordering(it->second)) {
                ++failures;
                break;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d instances, %d failures", kInstances, failures);
    return {failures == 0, buf};
}

Outcome criterion3_swapping() {
    const int kInstances = 500;
    std::uint64_t seed = 70000;
    int failures = 0;
    for (int i = 0; i < kInstances; ++i) {
        TrajectorySet ts = connected_instance(seed, 2, 12, 2, 6);
        OrderedHistory h = extract_history(ts);
        auto [transformed, record] = swap_transform(h);
        CollisionGraph path = underlying_graph(transformed);
        bool is_path = path.edge_count() == static_cast<std::size_t>(h.n) - 1 ||
                       (h.n == 1 && path.edge_count() == 0);
        auto adj = adjacency_lists(path);
        int ends = 0;
        for (int v = 0; v < h.n; ++v) {
            if (adj[v].size() > 2) is_path = false;
            if (adj[v].size() == 1) ++ends;
        }
        if (h.n >= 2 && ends != 2) is_path = false;
        if (!is_connected(path)) is_path = false;
        if (!is_path || recover_timeline_by_swapping(h) != recover_timeline(h)) ++failures;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d instances, %d failures", kInstances, failures);
    return {failures == 0, buf};
}

bool layer_checks(const CollisionGraph& g, const LayerDecomposition& d) {
    // Every layer is a maximal clique of the residual graph.
    std::vector<int> residual(g.n);
    std::iota(residual.begin(), residual.end(), 0);
    for (const auto& layer : d.layers) {
        if (!is_clique(g, layer)) return false;
        for (int w : residual) {
            if (std::binary_search(layer.begin(), layer.end(), w)) continue;
            bool joins_all = true;
            for (int x : layer)
                if (!g.has_edge(w, x)) joins_all = false;
            if (joins_all) return false;
        }
        std::vector<int> next;
        for (int v : residual)
            if (!std::binary_search(layer.begin(), layer.end(), v)) next.push_back(v);
        residual = std::move(next);
    }
    // Spanning edges see every intermediate layer from their earlier endpoint.
    std::vector<int> layer_of(g.n, -1);
    for (std::size_t i = 0; i < d.layers.size(); ++i)
        for (int v : d.layers[i]) layer_of[v] = static_cast<int>(i);
    for (auto [u, v] : g.edges) {
        int lo = std::min(layer_of[u], layer_of[v]);
        int hi = std::max(layer_of[u], layer_of[v]);
        int lower_endpoint = layer_of[u] == lo ? u : v;
        for (int mid = lo + 1; mid < hi; ++mid) {
            bool touched = false;
            for (int w : d.layers[mid])
                if (g.has_edge(lower_endpoint, w)) touched = true;
            if (!touched) return false;
        }
    }
    return true;
}

struct LayerRunResult {
    Outcome outcome;
    std::vector<std::pair<CollisionGraph, LayerDecomposition>> decompositions;
};

LayerRunResult criterion4_layers() {
    const int kInstances = 500;
    LayerRunResult result;
    int failures = 0, found = 0;
    std::uint64_t seed = 1;
    while (found < kInstances && seed < 4000000) {
        int n = 4 + static_cast<int>(seed % 9);
        int segments = 2 + static_cast<int>((seed / 11) % 2);
        auto sim = testsupport::try_simulated_prime(seed++, n, segments);
        if (!sim) continue;
        ++found;
        auto expected = testsupport::expected_layers(sim->ts);
        bool ok = true;
        try {
            auto decomposition = layer_decomposition(sim->g);
            ok = decomposition.size() == 1 && decomposition[0].layers == expected &&
                 layers_via_orientation(sim->g).layers == expected &&
                 layer_checks(sim->g, decomposition[0]);
            if (ok) result.decompositions.push_back({sim->g, decomposition[0]});
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) ++failures;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d prime instances, %d failures", found, failures);
    result.outcome = {failures == 0 && found == kInstances, buf};
    return result;
}

Outcome criterion5_intervals(const std::vector<std::pair<CollisionGraph, LayerDecomposition>>& runs) {
    int violations = 0;
    for (const auto& [g, d] : runs) {
        try {
            contraction_graph(g, d);
        } catch (const std::exception&) {
            ++violations;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu decompositions, %d violations", runs.size(), violations);
    return {violations == 0 && !runs.empty(), buf};
}

Outcome criterion6_recognition() {
    // All graphs up to isomorphism for n <= 6, via canonical edge masks.
    const int expected_counts[7] = {0, 1, 2, 4, 11, 34, 156};
    int disagreements = 0, total = 0;
    bool counts_ok = true;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        const int pairs = n * (n - 1) / 2;
        auto pair_index = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            return u * n - u * (u + 1) / 2 + (v - u - 1);
        };
        // For each permutation, where each edge bit moves.
        std::vector<std::vector<int>> bit_map(perms.size(), std::vector<int>(pairs));
        for (std::size_t p = 0; p < perms.size(); ++p)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    bit_map[p][pair_index(u, v)] = pair_index(perms[p][u], perms[p][v]);

        std::unordered_set<std::uint32_t> canonical;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
            std::uint32_t best = mask;
            for (std::size_t p = 0; p < perms.size(); ++p) {
                std::uint32_t mapped = 0;
                for (int b = 0; b < pairs; ++b)
                    if (mask & (std::uint32_t{1} << b)) mapped |= std::uint32_t{1} << bit_map[p][b];
                best = std::min(best, mapped);
            }
            canonical.insert(best);
        }
        if (static_cast<int>(canonical.size()) != expected_counts[n]) counts_ok = false;

        for (std::uint32_t mask : canonical) {
            CollisionGraph g;
            g.n = n;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (mask & (std::uint32_t{1} << pair_index(u, v))) g.add_edge(u, v);
            ++total;
            auto cert = recognize_function_graph(g);
            bool oracle = testsupport::oracle_is_function_graph(g);
            if (cert.has_value() != oracle) ++disagreements;
            if (cert && !testsupport::certificate_is_valid(g, *cert)) ++disagreements;
        }
    }

    // Soundness on simulator output.
    int rejected_simulated = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        TrajectorySet ts = generate_trajectories(2 + seed % 9, 2 + seed % 4, seed);
        auto cert = recognize_function_graph(collision_graph_of(ts));
        if (!cert || !testsupport::certificate_is_valid(collision_graph_of(ts), *cert))
            ++rejected_simulated;
    }

    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d non-isomorphic graphs, %d disagreements; %d/200 simulated graphs rejected",
                  total, disagreements, rejected_simulated);
    return {disagreements == 0 && counts_ok && rejected_simulated == 0 && total == 208, buf};
}

Outcome criterion7_shrinking() {
    const int kInstances = 200;
    int failures = 0, built = 0;
    std::uint64_t seed = 5;
    while (built < kInstances && seed < 100000) {
        int base_n = 3 + static_cast<int>(seed % 6);
        int segments = 2 + static_cast<int>(seed % 3);
        int clones = 1 + static_cast<int>((seed / 3) % 3);
        auto planted = testsupport::try_planted_module(seed++, base_n, segments, clones);
        if (!planted) continue;
        ++built;
        CollisionGraph before = collision_graph_of(planted->ts);
        bool ok = false;
        double eps = 0.5;
        for (int tries = 0; tries < 20 && !ok; ++tries, eps /= 2) {
            try {
                TrajectorySet out =
                    shrink_module(planted->ts, planted->module, planted->representative, eps);
                ok = collision_graph_of(out).edges == before.edges;
                if (ok) {
                    TrajectorySet half = shrink_module(planted->ts, planted->module,
                                                       planted->representative, eps / 2);
                    ok = collision_graph_of(half).edges == before.edges;
                }
            } catch (const EpsilonTooLarge&) {
            }
        }
        if (!ok) ++failures;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d planted instances, %d failures", built, failures);
    return {failures == 0 && built == kInstances, buf};
}

Outcome criterion8_interleaving() {
    const int kInstances = 10000;
    std::mt19937_64 rng(88);
    int failures = 0;
    for (int i = 0; i < kInstances; ++i) {
        InterleavingInstance inst = testsupport::random_instance(rng, 12, 4);
        InterleavingSolution fast = solve_interleaving(inst);
        InterleavingSolution slow = brute_force_interleaving(inst);
        bool ok = fast.achieved == slow.achieved;
        bool seen = false;
        for (int b = 1; b <= inst.k + inst.l + 1 && ok; ++b) {
            bool f = feasible(inst, b).has_value();
            if (seen && !f) ok = false;
            if (f) seen = true;
        }
        if (!(inst.intervals_x.empty() && inst.intervals_y.empty()) && !seen) ok = false;
        if (!ok) ++failures;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d instances, %d disagreements", kInstances, failures);
    return {failures == 0, buf};
}

Outcome criterion9_sandwich() {
    int violations = 0, connected_graphs = 0;
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
            CollisionGraph g;
            g.n = n;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (std::uint32_t{1} << bit)) g.add_edge(u, v);
            if (!is_connected(g)) continue;
            ++connected_graphs;
            if (!check_sandwich(g)) ++violations;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d connected graphs (n <= 5), %d violations",
                  connected_graphs, violations);
    return {violations == 0, buf};
}

int report(int id, const char* name, const Outcome& outcome, double elapsed, Budget budget) {
    bool in_budget = elapsed < budget.seconds;
    bool pass = outcome.pass && in_budget;
    std::printf("[%s] criterion %d: %s (%s, %.1fs%s)\n", pass ? "PASS" : "FAIL", id, name,
                outcome.detail.c_str(), elapsed, in_budget ? "" : " OVER BUDGET");
    std::fflush(stdout);
    return pass ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;

    auto timed = [&](int id, const char* name, Budget budget, auto&& fn) {
        auto start = Clock::now();
        Outcome outcome = fn();
        failures += report(id, name, outcome, seconds_since(start), budget);
    };

    timed(1, "ordered recovery round-trip", {10.0}, criterion1_ordered_roundtrip);
    timed(2, "connectivity iff uniqueness", {60.0}, criterion2_disconnected);
    timed(3, "swapping construction", {60.0}, criterion3_swapping);

    auto start4 = Clock::now();
    LayerRunResult layers = criterion4_layers();
    failures += report(4, "layer decomposition correctness", layers.outcome,
                       seconds_since(start4), {30.0});

    timed(5, "interval contraction", {60.0},
          [&] { return criterion5_intervals(layers.decompositions); });
    timed(6, "recognition soundness and completeness", {120.0}, criterion6_recognition);
    timed(7, "module shrinking", {120.0}, criterion7_shrinking);
    timed(8, "interleaving optimality", {60.0}, criterion8_interleaving);
    timed(9, "bandwidth sandwich", {300.0}, criterion9_sandwich);

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
