#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <colrec/core.hpp>

namespace colrec {

/// Two sequences X = x_0..x_k, Y = y_0..y_l sharing the head x_0 = y_0, with
/// intervals given as index pairs on each sequence.
struct InterleavingInstance {
    int k = 0;
    int l = 0;
    std::vector<std::pair<int, int>> intervals_x;  // 0 <= i <= j <= k
    std::vector<std::pair<int, int>> intervals_y;  // 0 <= i <= j <= l
};

/// positions[i-1] = p_{x_i|Y} in [0,l], non-decreasing; x_i sits between
/// y_{p} and y_{p+1}. achieved = B(X,Y).
struct InterleavingSolution {
    std::vector<int> positions;
    int achieved = 0;
};

struct BandwidthResult {
    int value = 0;
    std::vector<int> witness;  // witness[v] = layout position of v
};

enum class SeqSide { X, Y };

/// Inclusive element count of `interval` in the merged sequence under the
/// given positions. The shared head element counts once.
int merged_length(const InterleavingInstance& inst, const std::vector<int>& positions,
                  std::pair<int, int> interval, SeqSide side);

/// Alternating forward/backward passes; witness verified via merged_length
/// before return. nullopt when no order-preserving interleaving fits b.
std::optional<std::vector<int>> feasible(const InterleavingInstance& inst, int b);

/// Binary search over b; achieved = 0 when both interval sets are empty.
InterleavingSolution solve_interleaving(const InterleavingInstance& inst);

/// Exhaustive merge enumeration; requires k + l <= 14.
InterleavingSolution brute_force_interleaving(const InterleavingInstance& inst);

/// Exact bandwidth by layout enumeration; requires n <= 10.
BandwidthResult bandwidth_bruteforce(const CollisionGraph& g);

/// Minimum max-degree over function-graph completions; requires n <= 6.
int bf_bruteforce(const CollisionGraph& g);

/// B(G)/2 <= B_f(G) <= 2 B(G), checked without division.
bool check_sandwich(const CollisionGraph& g);

}  // namespace colrec
