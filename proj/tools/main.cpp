#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <colrec/completion.hpp>
#include <colrec/core.hpp>
#include <colrec/errors.hpp>
#include <colrec/funcgraph.hpp>
#include <colrec/io.hpp>
#include <colrec/ordered_recovery.hpp>
#include <colrec/simulate.hpp>

namespace {

using nlohmann::json;

// Exit codes: 0 ok, 1 usage, 2 invalid input or history,
// 3 structural failure, 4 instance too large.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalidInput = 2;
constexpr int kStructural = 3;
constexpr int kTooLarge = 4;

struct Options {
    bool pretty = false;
};

void emit(const json& payload, const Options& opt) {
    std::cout << (opt.pretty ? payload.dump(2) : payload.dump()) << "\n";
}

json timeline_to_json(const colrec::OrderingTimeline& timeline) {
    json out = json::array();
    for (const auto& p : timeline) out.push_back(p);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Recovers positional information of objects on a line from collision data"};
    app.require_subcommand(1);
    Options opt;

    auto* simulate = app.add_subcommand("simulate", "Generate piecewise-linear trajectories");
    int sim_n = 0, sim_segments = 0;
    std::uint64_t sim_seed = 0;
    std::string sim_out;
    simulate->add_option("--n", sim_n, "Object count")->required();
    simulate->add_option("--segments", sim_segments, "Segments per trajectory")->required();
    simulate->add_option("--seed", sim_seed, "RNG seed")->required();
    simulate->add_option("--out", sim_out, "Also write the JSON to this file");
    simulate->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* recover = app.add_subcommand("recover", "Recover orderings from a timed history");
    std::string recover_history;
    bool recover_timeline_flag = false;
    recover->add_option("--history", recover_history, "History JSON file")->required();
    recover->add_flag("--timeline", recover_timeline_flag, "Emit the full ordering timeline");
    recover->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* layers = app.add_subcommand("layers", "Layer decomposition of a collision graph");
    std::string layers_graph, layers_dot;
    layers->add_option("--graph", layers_graph, "Graph file (JSON or edge list)")->required();
    layers->add_option("--dot", layers_dot, "Write the contraction interval graph as DOT");
    layers->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is a function graph");
    std::string recognize_graph, recognize_dot;
    recognize->add_option("--graph", recognize_graph, "Graph file (JSON or edge list)")->required();
    recognize->add_option("--dot", recognize_dot, "Write the input graph as DOT");
    recognize->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* interleave = app.add_subcommand("interleave", "Optimal order-preserving interleaving");
    std::string interleave_instance;
    bool interleave_oracle = false;
    interleave->add_option("--instance", interleave_instance, "Instance JSON file")->required();
    interleave->add_flag("--oracle", interleave_oracle, "Also run the exhaustive oracle");
    interleave->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* bandwidth = app.add_subcommand("bandwidth", "Exact graph bandwidth (exhaustive)");
    std::string bandwidth_graph;
    bandwidth->add_option("--graph", bandwidth_graph, "Graph file (JSON or edge list)")->required();
    bandwidth->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* bf = app.add_subcommand("bf", "Minimum max-degree function-graph completion (exhaustive)");
    std::string bf_graph;
    bf->add_option("--graph", bf_graph, "Graph file (JSON or edge list)")->required();
    bf->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    auto* sandwich = app.add_subcommand("sandwich", "Check B(G)/2 <= B_f(G) <= 2B(G)");
    std::string sandwich_graph;
    sandwich->add_option("--graph", sandwich_graph, "Graph file (JSON or edge list)")->required();
    sandwich->add_flag("--pretty", opt.pretty, "Indent the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    if (simulate->parsed()) {
        colrec::TrajectorySet ts = colrec::generate_trajectories(sim_n, sim_segments, sim_seed);
        json payload = colrec::to_json(ts);
        if (!sim_out.empty()) colrec::write_file(sim_out, payload.dump());
        emit(payload, opt);
        return kOk;
    }
    if (recover->parsed()) {
        colrec::OrderedHistory h = colrec::load_history(recover_history);
        if (recover_timeline_flag) {
            emit({{"timeline", timeline_to_json(colrec::recover_timeline(h))}}, opt);
        } else {
            colrec::ComponentOrdering result = colrec::recover_end_position(h);
            json comps = json::array();
            for (const auto& c : result.components) comps.push_back(c);
            emit({{"components", comps}}, opt);
        }
        return kOk;
    }
    if (layers->parsed()) {
        colrec::CollisionGraph g = colrec::load_graph(layers_graph);
        json comps = json::array();
        std::string dot;
        for (const auto& d : colrec::layer_decomposition(g)) {
            colrec::ContractionResult contraction = colrec::contraction_graph(g, d);
            json intervals = json::array();
            for (std::size_t i = 0; i < contraction.right_reach.size(); ++i)
                intervals.push_back({static_cast<int>(i) + 1, contraction.right_reach[i]});
            json layers_json = json::array();
            for (const auto& layer : d.layers) layers_json.push_back(layer);
            comps.push_back({{"layers", layers_json}, {"intervals", intervals}});
            dot += colrec::contraction_to_dot(contraction);
        }
        if (!layers_dot.empty()) colrec::write_file(layers_dot, dot);
        emit({{"components", comps}}, opt);
        return kOk;
    }
    if (recognize->parsed()) {
        colrec::CollisionGraph g = colrec::load_graph(recognize_graph);
        if (!recognize_dot.empty()) colrec::write_file(recognize_dot, colrec::graph_to_dot(g));
        auto cert = colrec::recognize_function_graph(g);
        json orientation = json::array();
        if (cert)
            for (auto [u, v] : cert->edges) orientation.push_back({u, v});
        emit({{"function_graph", cert.has_value()}, {"orientation", orientation}}, opt);
        return kOk;
    }
    if (interleave->parsed()) {
        colrec::InterleavingInstance inst = colrec::load_instance(interleave_instance);
        colrec::InterleavingSolution sol = colrec::solve_interleaving(inst);
        json payload = {{"B", sol.achieved}, {"positions", sol.positions}};
        if (interleave_oracle)
            payload["oracle_B"] = colrec::brute_force_interleaving(inst).achieved;
        emit(payload, opt);
        return kOk;
    }
    if (bandwidth->parsed()) {
        colrec::BandwidthResult result = colrec::bandwidth_bruteforce(colrec::load_graph(bandwidth_graph));
        emit({{"B", result.value}, {"sigma", result.witness}}, opt);
        return kOk;
    }
    if (bf->parsed()) {
        emit({{"Bf", colrec::bf_bruteforce(colrec::load_graph(bf_graph))}}, opt);
        return kOk;
    }
    if (sandwich->parsed()) {
        colrec::CollisionGraph g = colrec::load_graph(sandwich_graph);
        int b = colrec::bandwidth_bruteforce(g).value;
        int bfv = colrec::bf_bruteforce(g);
        bool ok = b <= 2 * bfv && bfv <= 2 * b;
        emit({{"B", b}, {"Bf", bfv}, {"sandwich", ok}}, opt);
        return kOk;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const colrec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const colrec::InvalidHistory& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const colrec::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const colrec::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kTooLarge;
    } catch (const colrec::NotConnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStructural;
    } catch (const colrec::NotFunctionGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStructural;
    } catch (const colrec::LayerFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStructural;
    } catch (const colrec::IntervalViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStructural;
    } catch (const colrec::InconsistentSides& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStructural;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
