#include <colrec/simulate.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <colrec/errors.hpp>
#include <colrec/funcgraph.hpp>

namespace colrec {

namespace {

// Minimum separation treated as "distinct" for values and crossing times.
constexpr double kSeparation = 1e-9;
constexpr int kMaxRetries = 100;

// Canonical double in [0,1); independent of distribution implementations.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Crossing {
    int u, v;
    double time;
};

void require_breakpoint_distinctness(const TrajectorySet& ts) {
    const int n = ts.size();
    const int m = static_cast<int>(ts.breakpoints.size());
    for (int b = 0; b < m; ++b) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(ts.objects[i][b] - ts.objects[j][b]) < kSeparation)
                    throw DegenerateInput("objects tie at a breakpoint");
    }
}

// All transversal crossings, unsorted. Assumes breakpoint distinctness, which
// rules out tangencies and crossings at grid points.
std::vector<Crossing> enumerate_crossings(const TrajectorySet& ts) {
    std::vector<Crossing> out;
    const int n = ts.size();
    for (int s = 0; s < ts.segments(); ++s) {
        double ta = ts.breakpoints[s], tb = ts.breakpoints[s + 1];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double da = ts.objects[i][s] - ts.objects[j][s];
                double db = ts.objects[i][s + 1] - ts.objects[j][s + 1];
                if ((da < 0) != (db < 0)) {
                    double t = ta + (tb - ta) * (da / (da - db));
                    out.push_back({i, j, t});
                }
            }
        }
    }
    return out;
}

bool crossing_times_distinct(std::vector<Crossing>& crossings) {
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.time < b.time; });
    for (std::size_t i = 1; i < crossings.size(); ++i)
        if (crossings[i].time - crossings[i - 1].time < kSeparation) return false;
    return true;
}

bool values_distinct(const TrajectorySet& ts) {
    const int n = ts.size();
    for (std::size_t b = 0; b < ts.breakpoints.size(); ++b)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(ts.objects[i][b] - ts.objects[j][b]) < kSeparation) return false;
    return true;
}

}  // namespace

double TrajectorySet::value_at(int id, double t) const {
    const auto& bp = breakpoints;
    if (t <= bp.front()) return objects[id].front();
    if (t >= bp.back()) return objects[id].back();
    auto it = std::upper_bound(bp.begin(), bp.end(), t);
    std::size_t s = static_cast<std::size_t>(it - bp.begin()) - 1;
    double w = (t - bp[s]) / (bp[s + 1] - bp[s]);
    return objects[id][s] + w * (objects[id][s + 1] - objects[id][s]);
}

TrajectorySet generate_trajectories(int n, int segments, std::uint64_t seed) {
    if (n < 1 || segments < 1) throw std::invalid_argument("n and segments must be positive");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        TrajectorySet ts;
        ts.breakpoints.resize(segments + 1);
        for (int b = 0; b <= segments; ++b)
            ts.breakpoints[b] = static_cast<double>(b) / segments;
        ts.objects.assign(n, std::vector<double>(segments + 1));
        for (int i = 0; i < n; ++i)
            for (int b = 0; b <= segments; ++b) ts.objects[i][b] = unit_draw(rng);
        if (!values_distinct(ts)) continue;
        auto crossings = enumerate_crossings(ts);
        if (!crossing_times_distinct(crossings)) continue;
        return ts;
    }
    throw DegenerateInput("could not draw a generic trajectory set");
}

OrderedHistory extract_history(const TrajectorySet& ts) {
    require_breakpoint_distinctness(ts);
    auto crossings = enumerate_crossings(ts);
    if (!crossing_times_distinct(crossings))
        throw DegenerateInput("simultaneous crossing times");
    OrderedHistory h;
    h.n = ts.size();
    h.events.reserve(crossings.size());
    for (const Crossing& c : crossings) h.events.push_back({c.u, c.v, c.time});
    return h;
}

CollisionGraph collision_graph_of(const TrajectorySet& ts) {
    require_breakpoint_distinctness(ts);
    CollisionGraph g;
    g.n = ts.size();
    for (const Crossing& c : enumerate_crossings(ts)) g.add_edge(c.u, c.v);
    return g;
}

OrderingTimeline ordering_timeline_oracle(const TrajectorySet& ts) {
    OrderedHistory h = extract_history(ts);
    const int n = ts.size();
    std::vector<double> samples;
    samples.push_back(0.0);
    for (std::size_t k = 0; k < h.events.size(); ++k) {
        double lo = h.events[k].time;
        double hi = (k + 1 < h.events.size()) ? h.events[k + 1].time : 1.0;
        samples.push_back(0.5 * (lo + hi));
    }
    OrderingTimeline timeline;
    timeline.reserve(samples.size());
    for (double t : samples) {
        Ordering p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        std::sort(p.begin(), p.end(),
                  [&](int a, int b) { return ts.value_at(a, t) < ts.value_at(b, t); });
        timeline.push_back(std::move(p));
    }
    return timeline;
}

DominanceRelation dominance_oracle(const TrajectorySet& ts) {
    CollisionGraph g = collision_graph_of(ts);
    DominanceRelation dom;
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            if (i == j || g.has_edge(i, j)) continue;
            // Continuity: one sample decides the constant sign.
            if (ts.objects[i][0] > ts.objects[j][0]) dom.insert({i, j});
        }
    }
    return dom;
}

LayerDecomposition layers_oracle(const TrajectorySet& ts) {
    DominanceRelation dom = dominance_oracle(ts);
    CollisionGraph g = collision_graph_of(ts);
    auto adj = adjacency_matrix(g);
    std::vector<int> remaining(ts.size());
    for (int i = 0; i < ts.size(); ++i) remaining[i] = i;
    LayerDecomposition d;
    while (!remaining.empty()) {
        std::vector<int> layer;
        for (int v : remaining) {
            bool dominated = false;
            for (int u : remaining)
                if (u != v && dom.count({u, v})) {
                    dominated = true;
                    break;
                }
            if (!dominated) layer.push_back(v);
        }
        std::vector<int> universals;
        for (int v : layer) {
            bool universal = true;
            for (int u : remaining)
                if (u != v && !adj[u][v]) {
                    universal = false;
                    break;
                }
            if (universal) universals.push_back(v);
        }
        std::vector<int> next;
        for (int v : remaining)
            if (std::find(layer.begin(), layer.end(), v) == layer.end()) next.push_back(v);
        d.layers.push_back(std::move(layer));
        d.stage_universals.push_back(std::move(universals));
        remaining = std::move(next);
    }
    return d;
}

TrajectorySet shrink_module(const TrajectorySet& ts, const std::vector<int>& module,
                            int representative, double epsilon) {
    if (module.size() < 1) throw std::invalid_argument("empty module");
    if (std::find(module.begin(), module.end(), representative) == module.end())
        throw std::invalid_argument("representative not in module");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    CollisionGraph before = collision_graph_of(ts);
    if (module.size() > 1 && !is_module(before, module))
        throw std::invalid_argument("set is not a module of the collision graph");

    TrajectorySet out = ts;
    const std::size_t m = ts.breakpoints.size();
    for (int i : module)
        for (std::size_t b = 0; b < m; ++b)
            out.objects[i][b] = epsilon * ts.objects[i][b] + ts.objects[representative][b];

    CollisionGraph after;
    try {
        after = collision_graph_of(out);
    } catch (const DegenerateInput&) {
        throw EpsilonTooLarge("shrunken set degenerate; retry with a smaller epsilon");
    }
    if (!(after.edges == before.edges))
        throw EpsilonTooLarge("collision graph changed; retry with a smaller epsilon");
    return out;
}

}  // namespace colrec
