#pragma once

#include <string>

#include <json.hpp>

#include <colrec/core.hpp>
#include <colrec/completion.hpp>
#include <colrec/simulate.hpp>

namespace colrec {

// Field names are part of the wire format: graph {"n":..,"edges":[[u,v],..]},
// history {"n":..,"events":[{"u":..,"v":..,"t":..},..]}, trajectories
// {"breakpoints":[..],"objects":[{"id":..,"values":[..]},..]}, interleaving
// {"k":..,"l":..,"ix":[[i,j],..],"iy":[[i,j],..]}.

nlohmann::json to_json(const CollisionGraph& g);
nlohmann::json to_json(const OrderedHistory& h);
nlohmann::json to_json(const TrajectorySet& ts);
nlohmann::json to_json(const InterleavingInstance& inst);

CollisionGraph graph_from_json(const nlohmann::json& j);
OrderedHistory history_from_json(const nlohmann::json& j);
TrajectorySet trajectories_from_json(const nlohmann::json& j);
InterleavingInstance instance_from_json(const nlohmann::json& j);

/// Plain text: "n <count>" header, then one "u v" line per edge.
CollisionGraph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const CollisionGraph& g);

/// Reads a graph file, sniffing JSON (leading '{') vs edge-list text.
CollisionGraph load_graph(const std::string& path);
OrderedHistory load_history(const std::string& path);
TrajectorySet load_trajectories(const std::string& path);
InterleavingInstance load_instance(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

std::string graph_to_dot(const CollisionGraph& g);
std::string contraction_to_dot(const ContractionResult& c);

}  // namespace colrec
