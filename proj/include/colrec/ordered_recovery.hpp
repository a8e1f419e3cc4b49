#pragma once

#include <utility>
#include <vector>

#include <colrec/core.hpp>

namespace colrec {

/// End-position of every connected component, each canonical up to reversal,
/// sorted by smallest member.
struct ComponentOrdering {
    std::vector<Ordering> components;
};

/// One relabeling per event, in event order: the endpoint pair whose future
/// occurrences were exchanged.
struct SwapRecord {
    std::vector<std::pair<int, std::pair<int, int>>> swaps;  // (event index, (u,v))
};

/// Processes events in time order, maintaining one sequence per component;
/// cross-component collisions flip/concatenate so the endpoints meet.
/// Throws InvalidHistory when no realization exists.
ComponentOrdering recover_end_position(const OrderedHistory& h);

/// Full p_0..p_m from the end-position by undoing collisions in reverse.
/// Throws NotConnected when the underlying graph is disconnected.
OrderingTimeline recover_timeline(const OrderedHistory& h);

/// Sequentially exchanges the future endpoints of each collision. A connected
/// history transforms into one whose underlying graph is a path.
std::pair<OrderedHistory, SwapRecord> swap_transform(const OrderedHistory& h);

/// Reads positions off the transformed path, then undoes the swaps in reverse.
/// Agrees with recover_timeline after canonicalization.
OrderingTimeline recover_timeline_by_swapping(const OrderedHistory& h);

}  // namespace colrec
