#include <colrec/completion.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <colrec/errors.hpp>
#include <colrec/funcgraph.hpp>

namespace colrec {

namespace {

void validate_instance(const InterleavingInstance& inst) {
    if (inst.k < 0 || inst.l < 0) throw std::invalid_argument("negative sequence length");
    for (auto [i, j] : inst.intervals_x)
        if (i < 0 || j < i || j > inst.k) throw std::invalid_argument("bad X interval");
    for (auto [i, j] : inst.intervals_y)
        if (i < 0 || j < i || j > inst.l) throw std::invalid_argument("bad Y interval");
}

int max_own_length(const InterleavingInstance& inst) {
    int len = 0;
    for (auto [i, j] : inst.intervals_x) len = std::max(len, j - i + 1);
    for (auto [i, j] : inst.intervals_y) len = std::max(len, j - i + 1);
    return len;
}

bool witness_fits(const InterleavingInstance& inst, const std::vector<int>& p, int b) {
    for (auto iv : inst.intervals_x)
        if (merged_length(inst, p, iv, SeqSide::X) > b) return false;
    for (auto iv : inst.intervals_y)
        if (merged_length(inst, p, iv, SeqSide::Y) > b) return false;
    return true;
}

}  // namespace

int merged_length(const InterleavingInstance& inst, const std::vector<int>& positions,
                  std::pair<int, int> interval, SeqSide side) {
    validate_instance(inst);
    if (static_cast<int>(positions.size()) != inst.k)
        throw std::invalid_argument("positions must have one entry per x_1..x_k");
    auto pos = [&](int i) { return i == 0 ? 0 : positions[i - 1]; };
    auto [a, b] = interval;
    if (side == SeqSide::X) {
        if (a < 0 || b < a || b > inst.k) throw std::invalid_argument("interval out of range");
        return (b - a + 1) + (pos(b) - pos(a));
    }
    if (a < 0 || b < a || b > inst.l) throw std::invalid_argument("interval out of range");
    int inside = 0;
    for (int i = 1; i <= inst.k; ++i)
        if (a <= pos(i) && pos(i) <= b - 1) ++inside;
    return (b - a + 1) + inside;
}

std::optional<std::vector<int>> feasible(const InterleavingInstance& inst, int b) {
    validate_instance(inst);
    if (b < 1) throw std::invalid_argument("b must be at least 1");
    const int k = inst.k, l = inst.l;
    if (max_own_length(inst) > b) return std::nullopt;

    // Intervals anchored at the shared head cap positions from above since
    // p_{x_0|Y} is fixed at 0.
    std::vector<int> cap(k + 1, l);
    for (auto [i, j] : inst.intervals_x) {
        if (i != 0 || j == 0) continue;
        cap[j] = std::min(cap[j], b - (j + 1));
        if (cap[j] < 0) return std::nullopt;
    }

    // Backward updates propagate through chained intervals when processed by
    // decreasing right endpoint.
    std::vector<std::pair<int, int>> chained;
    for (auto iv : inst.intervals_x)
        if (iv.first >= 1) chained.push_back(iv);
    std::sort(chained.begin(), chained.end(),
              [](auto a, auto c) { return a.second > c.second; });

    std::vector<int> low(k + 1, 0);
    std::vector<int> p(k + 1, 0);
    const int max_rounds = k * l + 1;
    for (int round = 0; round <= max_rounds; ++round) {
        // Forward: minimal slots satisfying monotonicity and the Y intervals.
        for (int i = 1; i <= k; ++i) {
            int slot = std::max(low[i], p[i - 1]);
            while (true) {
                bool ok = true;
                for (auto [a, c] : inst.intervals_y) {
                    if (!(a <= slot && slot <= c - 1)) continue;
                    int room = b - (c - a + 1);
                    int occupied = 0;
                    for (int t = 1; t < i; ++t)
                        if (a <= p[t] && p[t] <= c - 1) ++occupied;
                    if (occupied + 1 > room) {
                        ok = false;
                        break;
                    }
                }
                if (ok) break;
                ++slot;
                if (slot > l) return std::nullopt;
            }
            if (slot > cap[i]) return std::nullopt;
            p[i] = slot;
        }

        // Backward: raise lower bounds until the X intervals fit.
        bool settled = true;
        std::vector<int> q = p;
        for (auto [i, j] : chained) {
            int need = q[j] - (b - (j - i + 1));
            if (q[i] < need) {
                settled = false;
                q[i] = need;
                low[i] = std::max(low[i], need);
                if (low[i] > l) return std::nullopt;
            }
        }
        if (settled) {
            std::vector<int> witness(p.begin() + 1, p.end());
            if (!witness_fits(inst, witness, b))
                throw std::logic_error("interleaving witness failed verification");
            return witness;
        }
    }
    return std::nullopt;  // alternation budget exhausted; treated as infeasible
}

InterleavingSolution solve_interleaving(const InterleavingInstance& inst) {
    validate_instance(inst);
    InterleavingSolution sol;
    sol.positions.assign(inst.k, 0);
    if (inst.intervals_x.empty() && inst.intervals_y.empty()) {
        sol.achieved = 0;
        return sol;
    }
    int lo = std::max(1, max_own_length(inst));
    int hi = inst.k + inst.l + 1;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (feasible(inst, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    auto witness = feasible(inst, lo);
    if (!witness) throw std::logic_error("binary search ended on an infeasible value");
    sol.positions = std::move(*witness);
    sol.achieved = lo;
    return sol;
}

InterleavingSolution brute_force_interleaving(const InterleavingInstance& inst) {
    validate_instance(inst);
    if (inst.k + inst.l > 14) throw InstanceTooLarge("brute force bounded to k + l <= 14");

    InterleavingSolution best;
    bool found = false;
    std::vector<int> p(inst.k, 0);
    auto evaluate = [&]() {
        int worst = 0;
        for (auto iv : inst.intervals_x)
            worst = std::max(worst, merged_length(inst, p, iv, SeqSide::X));
        for (auto iv : inst.intervals_y)
            worst = std::max(worst, merged_length(inst, p, iv, SeqSide::Y));
        if (!found || worst < best.achieved) {
            found = true;
            best.achieved = worst;
            best.positions = p;
        }
    };
    // Non-decreasing position vectors in lexicographic order.
    auto recurse = [&](auto&& self, int idx, int floor) -> void {
        if (idx == inst.k) {
            evaluate();
            return;
        }
        for (int slot = floor; slot <= inst.l; ++slot) {
            p[idx] = slot;
            self(self, idx + 1, slot);
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

BandwidthResult bandwidth_bruteforce(const CollisionGraph& g) {
    if (g.n > 10) throw InstanceTooLarge("bandwidth enumeration bounded to n <= 10");
    if (g.n < 1) throw std::invalid_argument("empty graph");

    std::vector<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    std::vector<int> arrangement(g.n);
    std::iota(arrangement.begin(), arrangement.end(), 0);
    std::vector<int> pos(g.n);

    BandwidthResult best;
    best.value = g.n;  // above any achievable stretch
    do {
        for (int i = 0; i < g.n; ++i) pos[arrangement[i]] = i;
        int stretch = 0;
        for (auto [u, v] : edges) {
            stretch = std::max(stretch, std::abs(pos[u] - pos[v]));
            if (stretch >= best.value) break;
        }
        if (stretch < best.value) {
            best.value = stretch;
            best.witness = pos;
        }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return best;
}

int bf_bruteforce(const CollisionGraph& g) {
    if (g.n > 6) throw InstanceTooLarge("completion enumeration bounded to n <= 6");
    if (g.n < 1) throw std::invalid_argument("empty graph");

    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) missing.push_back({u, v});

    const int m = static_cast<int>(missing.size());
    std::vector<std::pair<int, std::uint32_t>> by_degree;  // (max degree, edge mask)
    by_degree.reserve(std::size_t{1} << m);
    std::vector<int> degree(g.n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::fill(degree.begin(), degree.end(), 0);
        for (auto [u, v] : g.edges) {
            ++degree[u];
            ++degree[v];
        }
        for (int e = 0; e < m; ++e)
            if (mask & (std::uint32_t{1} << e)) {
                ++degree[missing[e].first];
                ++degree[missing[e].second];
            }
        by_degree.push_back({*std::max_element(degree.begin(), degree.end()), mask});
    }
    std::sort(by_degree.begin(), by_degree.end());

    for (auto [max_degree, mask] : by_degree) {
        CollisionGraph candidate = g;
        for (int e = 0; e < m; ++e)
            if (mask & (std::uint32_t{1} << e)) candidate.add_edge(missing[e].first, missing[e].second);
        if (recognize_function_graph(candidate)) return max_degree;
    }
    throw std::logic_error("complete graph is always a function graph");
}

bool check_sandwich(const CollisionGraph& g) {
    int bandwidth = bandwidth_bruteforce(g).value;
    int completion = bf_bruteforce(g);
    return bandwidth <= 2 * completion && completion <= 2 * bandwidth;
}

}  // namespace colrec
