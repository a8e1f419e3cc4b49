#pragma once

#include <cstdint>
#include <vector>

#include <colrec/core.hpp>

namespace colrec {

/// Piecewise-linear trajectories of n objects over a shared breakpoint grid
/// on [0,1]. Generic position: pairwise-distinct values at every breakpoint,
/// transversal crossings only, pairwise-distinct crossing times.
struct TrajectorySet {
    std::vector<double> breakpoints;           // t_0 = 0 < ... < t_m = 1
    std::vector<std::vector<double>> objects;  // objects[id][breakpoint index]

    int size() const { return static_cast<int>(objects.size()); }
    int segments() const { return static_cast<int>(breakpoints.size()) - 1; }
    double value_at(int id, double t) const;
};

/// Deterministic in seed; resamples on degenerate draws (bounded retries).
TrajectorySet generate_trajectories(int n, int segments, std::uint64_t seed);

/// One event per transversal crossing, sorted by crossing time.
OrderedHistory extract_history(const TrajectorySet& ts);

/// Colliding-pair graph via per-segment sign flips; needs only breakpoint
/// distinctness, not distinct crossing times.
CollisionGraph collision_graph_of(const TrajectorySet& ts);

/// p_0 at t=0, then one ordering sampled between consecutive crossings.
OrderingTimeline ordering_timeline_oracle(const TrajectorySet& ts);

/// (u,v) present iff u,v never collide and u sits above v.
DominanceRelation dominance_oracle(const TrajectorySet& ts);

/// Repeatedly peels Max under dominance; raw peel order (top layer first).
LayerDecomposition layers_oracle(const TrajectorySet& ts);

/// Replaces every trajectory i in `module` by epsilon*v_i + v_rep. Fails with
/// EpsilonTooLarge when the collision graph changes.
TrajectorySet shrink_module(const TrajectorySet& ts, const std::vector<int>& module,
                            int representative, double epsilon);

}  // namespace colrec
