#include <colrec/io.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <colrec/errors.hpp>

namespace colrec {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

json to_json(const CollisionGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

json to_json(const OrderedHistory& h) {
    json events = json::array();
    for (const CollisionEvent& e : h.events)
        events.push_back({{"u", e.u}, {"v", e.v}, {"t", e.time}});
    return {{"n", h.n}, {"events", events}};
}

json to_json(const TrajectorySet& ts) {
    json objects = json::array();
    for (int i = 0; i < ts.size(); ++i)
        objects.push_back({{"id", i}, {"values", ts.objects[i]}});
    return {{"breakpoints", ts.breakpoints}, {"objects", objects}};
}

json to_json(const InterleavingInstance& inst) {
    json ix = json::array(), iy = json::array();
    for (auto [i, j] : inst.intervals_x) ix.push_back({i, j});
    for (auto [i, j] : inst.intervals_y) iy.push_back({i, j});
    return {{"k", inst.k}, {"l", inst.l}, {"ix", ix}, {"iy", iy}};
}

CollisionGraph graph_from_json(const json& j) {
    CollisionGraph g;
    g.n = int_field(j, "n");
    if (g.n < 0) throw ParseError("n must be non-negative");
    for (const json& e : member(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw ParseError("edge endpoints must be distinct ids below n");
        g.add_edge(u, v);
    }
    return g;
}

OrderedHistory history_from_json(const json& j) {
    OrderedHistory h;
    h.n = int_field(j, "n");
    if (h.n < 1) throw ParseError("n must be positive");
    double prev = 0.0;
    for (const json& e : member(j, "events")) {
        CollisionEvent ev{int_field(e, "u"), int_field(e, "v"), member(e, "t").get<double>()};
        if (ev.u < 0 || ev.v < 0 || ev.u >= h.n || ev.v >= h.n || ev.u == ev.v)
            throw ParseError("event endpoints must be distinct ids below n");
        if (!(ev.time > 0.0 && ev.time < 1.0))
            throw ParseError("event times must lie strictly inside (0,1)");
        if (!h.events.empty() && !(ev.time > prev))
            throw ParseError("event times must be strictly increasing");
        prev = ev.time;
        h.events.push_back(ev);
    }
    return h;
}

TrajectorySet trajectories_from_json(const json& j) {
    TrajectorySet ts;
    ts.breakpoints = member(j, "breakpoints").get<std::vector<double>>();
    if (ts.breakpoints.size() < 2) throw ParseError("need at least two breakpoints");
    for (std::size_t b = 1; b < ts.breakpoints.size(); ++b)
        if (!(ts.breakpoints[b] > ts.breakpoints[b - 1]))
            throw ParseError("breakpoints must be strictly increasing");
    const json& objects = member(j, "objects");
    ts.objects.resize(objects.size());
    for (const json& o : objects) {
        int id = int_field(o, "id");
        if (id < 0 || id >= static_cast<int>(objects.size()))
            throw ParseError("object ids must be dense in [0,n)");
        auto values = member(o, "values").get<std::vector<double>>();
        if (values.size() != ts.breakpoints.size())
            throw ParseError("each object needs one value per breakpoint");
        if (!ts.objects[id].empty()) throw ParseError("duplicate object id");
        ts.objects[id] = std::move(values);
    }
    for (const auto& values : ts.objects)
        if (values.empty()) throw ParseError("object ids must be dense in [0,n)");
    return ts;
}

InterleavingInstance instance_from_json(const json& j) {
    InterleavingInstance inst;
    inst.k = int_field(j, "k");
    inst.l = int_field(j, "l");
    if (inst.k < 0 || inst.l < 0) throw ParseError("k and l must be non-negative");
    auto read_intervals = [&](const char* key, int limit) {
        std::vector<std::pair<int, int>> out;
        for (const json& e : member(j, key)) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each interval must be a pair");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 0 || b < a || b > limit) throw ParseError("interval endpoints out of range");
            out.push_back({a, b});
        }
        return out;
    };
    inst.intervals_x = read_intervals("ix", inst.k);
    inst.intervals_y = read_intervals("iy", inst.l);
    return inst;
}

CollisionGraph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    if (!(in >> tag) || tag != "n") throw ParseError("edge list must start with an \"n <count>\" header");
    CollisionGraph g;
    if (!(in >> g.n) || g.n < 0) throw ParseError("bad vertex count");
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("dangling edge endpoint");
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw ParseError("edge endpoints must be distinct ids below n");
        g.add_edge(u, v);
    }
    return g;
}

std::string graph_to_edge_list(const CollisionGraph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

}  // namespace

CollisionGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_json(text)) return graph_from_json(parse_json(text));
    return graph_from_edge_list(text);
}

OrderedHistory load_history(const std::string& path) {
    json j = parse_json(read_file(path));
    // Trajectory JSON is accepted too so that `simulate` pipes into `recover`.
    if (j.contains("objects") && j.contains("breakpoints"))
        return extract_history(trajectories_from_json(j));
    return history_from_json(j);
}

TrajectorySet load_trajectories(const std::string& path) {
    return trajectories_from_json(parse_json(read_file(path)));
}

InterleavingInstance load_instance(const std::string& path) {
    return instance_from_json(parse_json(read_file(path)));
}

std::string graph_to_dot(const CollisionGraph& g) {
    std::ostringstream out;
    out << "graph collisions {\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string contraction_to_dot(const ContractionResult& c) {
    std::ostringstream out;
    out << "graph contraction {\n";
    for (std::size_t i = 0; i < c.right_reach.size(); ++i)
        out << "  L" << (i + 1) << " [label=\"V" << (i + 1) << " [" << (i + 1) << ","
            << c.right_reach[i] << "]\"];\n";
    for (auto [i, j] : c.contraction_edges) out << "  L" << i << " -- L" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace colrec
