#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "curv/builders.hpp"
#include "curv/geodesy.hpp"
#include "curv/io.hpp"
#include "curv/lp.hpp"
#include "curv/topology.hpp"

namespace curv::cli {

// Exit codes: 64 usage, 65 bad input data, 3 budget exhausted; `verify` maps
// its boolean to 0/1 and `search` uses 0 positive / 2 nonpositive-within-pool.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitBudget = 3;

namespace detail {

inline long long env_budget(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

inline void emit(const Json& j, const std::string& out_path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) write_text_file(out_path, text);
    out << text;
}

inline GraphDocument load_graph_file(const std::string& path) {
    return load_graph(read_json_file(path));
}

}  // namespace detail

/// Runs one subcommand; every report carries schema_version and numbers stay
/// exact (integers or "p/q" strings).
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"discrete curvature toolkit for finite simple graphs"};
    app.require_subcommand(1);
    unsigned default_threads = std::max(1u, std::thread::hardware_concurrency());

    // build
    auto* build = app.add_subcommand("build", "construct a named graph and write it as JSON");
    std::string build_kind, build_in, build_in2, build_out;
    int build_n = 0, build_d = 0;
    build->add_option("--kind", build_kind, "cycle|wheel|cross|icosa|rp2|barycentric|product")
        ->required();
    build->add_option("--n", build_n, "cycle/wheel size");
    build->add_option("--d", build_d, "cross-polytope dimension");
    build->add_option("--in", build_in, "input graph (barycentric, product)");
    build->add_option("--in2", build_in2, "second input graph (product)");
    build->add_option("--out", build_out, "output path");

    // chi
    auto* chi = app.add_subcommand("chi", "Euler characteristic of the clique complex");
    std::string chi_graph;
    chi->add_option("graph", chi_graph, "graph JSON file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "recursive sphere / d-graph recognition");
    std::string verify_kind, verify_graph;
    int verify_dim = 2;
    bool verify_exhaustive = false;
    verify->add_option("--kind", verify_kind, "sphere|dgraph|contractible")->required();
    verify->add_option("--dim", verify_dim, "dimension d");
    verify->add_flag("--exhaustive-puncture", verify_exhaustive,
                     "try every puncture vertex instead of the first");
    verify->add_option("graph", verify_graph, "graph JSON file")->required();

    // curvature
    auto* curvature = app.add_subcommand("curvature", "index-expectation or Levitt curvature");
    std::string curv_graph, curv_measure;
    bool curv_uniform = false, curv_levitt = false;
    long long curv_samples = 0;
    uint64_t curv_seed = 1;
    curvature->add_option("--measure", curv_measure, "measure JSON file");
    curvature->add_flag("--uniform", curv_uniform, "uniform index expectation (exact when small)");
    curvature->add_flag("--levitt", curv_levitt, "combinatorial curvature from sphere f-vectors");
    curvature->add_option("--sample", curv_samples, "Monte Carlo sample count (uniform mode)");
    curvature->add_option("--seed", curv_seed, "sampling seed");
    curvature->add_option("graph", curv_graph, "graph JSON file")->required();

    // indices
    auto* indices = app.add_subcommand("indices", "Poincare-Hopf indices of a coloring");
    std::string idx_graph, idx_coloring;
    bool idx_symmetric = false;
    indices->add_option("--coloring", idx_coloring, "coloring JSON file")->required();
    indices->add_flag("--symmetric", idx_symmetric, "also report symmetric indices");
    indices->add_option("graph", idx_graph, "graph JSON file")->required();

    // wheels
    auto* wheels = app.add_subcommand("wheels", "enumerate geodesic wheels at a vertex");
    std::string wheels_graph, wheels_vertex, wheels_mode = "existential";
    int wheels_max = 10000;
    wheels->add_option("--vertex", wheels_vertex, "center vertex id")->required();
    wheels->add_option("--mode", wheels_mode, "existential|universal");
    wheels->add_option("--max", wheels_max, "max wheels reported");
    wheels->add_option("graph", wheels_graph, "graph JSON file")->required();

    // distance
    auto* distance = app.add_subcommand("distance", "Crofton pseudo-distance under a signed measure");
    std::string dist_graph, dist_measure, dist_from, dist_to;
    distance->add_option("--measure", dist_measure, "signed measure JSON file")->required();
    distance->add_option("--from", dist_from, "source vertex id")->required();
    distance->add_option("--to", dist_to, "target vertex id")->required();
    distance->add_option("graph", dist_graph, "graph JSON file")->required();

    // search
    auto* search = app.add_subcommand("search", "positive-curvature measure search (exact LP)");
    std::string search_graph, search_mode = "euler", search_out;
    int search_rounds = 24, search_restarts = 8, search_wheels_per_vertex = 4,
        search_random_pool = 32;
    uint64_t search_seed = 1;
    long long search_pivots = detail::env_budget("CURV_PIVOT_BUDGET", 2000000);
    unsigned search_threads = default_threads;
    search->add_option("--mode", search_mode, "euler|sectional");
    search->add_option("--rounds", search_rounds, "column generation rounds");
    search->add_option("--seed", search_seed, "root seed");
    search->add_option("--restarts", search_restarts, "pricing restarts per round");
    search->add_option("--random-pool", search_random_pool, "random seed colorings");
    search->add_option("--wheels-per-vertex", search_wheels_per_vertex,
                       "sectional sites kept per vertex");
    search->add_option("--pivot-budget", search_pivots, "simplex pivot budget");
    search->add_option("--threads", search_threads, "pricing worker threads");
    search->add_option("--out", search_out, "report output path");
    search->add_option("graph", search_graph, "graph JSON file")->required();

    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*build) {
            GraphDocument doc;
            if (build_kind == "cycle")
                doc = identity_document(cycle(build_n));
            else if (build_kind == "wheel")
                doc = identity_document(wheel(build_n));
            else if (build_kind == "cross")
                doc = identity_document(cross_polytope(build_d));
            else if (build_kind == "icosa")
                doc = identity_document(icosahedron());
            else if (build_kind == "rp2")
                doc = identity_document(projective_plane());
            else if (build_kind == "barycentric")
                doc = identity_document(barycentric(detail::load_graph_file(build_in).graph));
            else if (build_kind == "product")
                doc = identity_document(
                    kuenneth_product(detail::load_graph_file(build_in).graph,
                                     detail::load_graph_file(build_in2).graph));
            else {
                err << "unknown build kind '" << build_kind << "'\n";
                return kExitUsage;
            }
            detail::emit(save_graph(doc), build_out, out);
            return 0;
        }

        if (*chi) {
            GraphDocument doc = detail::load_graph_file(chi_graph);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["chi"] = euler_characteristic(doc.graph);
            detail::emit(j, "", out);
            return 0;
        }

        if (*verify) {
            GraphDocument doc = detail::load_graph_file(verify_graph);
            TopologyOptions opt;
            opt.node_budget = detail::env_budget("CURV_NODE_BUDGET", opt.node_budget);
            opt.puncture =
                verify_exhaustive ? PunctureMode::AnyVertex : PunctureMode::FirstVertex;
            TopologyReport r;
            if (verify_kind == "sphere")
                r = check_dsphere(doc.graph, verify_dim, opt);
            else if (verify_kind == "dgraph")
                r = check_dgraph(doc.graph, verify_dim, opt);
            else if (verify_kind == "contractible")
                r = check_contractible(doc.graph, opt);
            else {
                err << "unknown verify kind '" << verify_kind << "'\n";
                return kExitUsage;
            }
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["kind"] = verify_kind;
            if (verify_kind != "contractible") j["dim"] = verify_dim;
            j["holds"] = r.holds;
            j["nodes_used"] = r.nodes_used;
            if (!r.collapse_order.empty()) {
                Json w = Json::array();
                for (int v : r.collapse_order) w.push_back(label_to_json_id(doc.labels[v]));
                j["collapse_order"] = w;
            }
            if (r.failing_vertex >= 0)
                j["failing_vertex"] = label_to_json_id(doc.labels[r.failing_vertex]);
            detail::emit(j, "", out);
            return r.holds ? 0 : 1;
        }

        if (*curvature) {
            GraphDocument doc = detail::load_graph_file(curv_graph);
            Json j;
            j["schema_version"] = kSchemaVersion;
            if (curv_levitt) {
                j["method"] = "levitt";
                j["curvature"] = save_curvature(levitt_vector(doc.graph), doc);
            } else if (curv_uniform) {
                UniformOptions uo;
                uo.seed = curv_seed;
                if (curv_samples > 0) {
                    uo.allow_sampling = true;
                    uo.samples = curv_samples;
                }
                UniformCurvature u = uniform_curvature(doc.graph, uo);
                j["method"] = u.exact ? "uniform-exact" : "uniform-sampled";
                j["curvature"] = save_curvature(u.values, doc);
                if (!u.exact) {
                    j["samples"] = u.samples;
                    double worst = 0;
                    for (const auto& [v, se] : u.std_error) worst = std::max(worst, se);
                    j["max_std_error"] = worst;
                }
            } else if (!curv_measure.empty()) {
                Measure m = load_measure(read_json_file(curv_measure), doc);
                CurvatureVector k = expectation_curvature(doc.graph, m);
                j["method"] = "expectation";
                j["curvature"] = save_curvature(k, doc);
                GaussBonnetResult gb = gauss_bonnet_check(doc.graph, k);
                j["gauss_bonnet_ok"] = gb.ok;
                j["gauss_bonnet_residual"] = rational_to_json(gb.residual);
            } else {
                err << "curvature needs --measure, --uniform or --levitt\n";
                return kExitUsage;
            }
            detail::emit(j, "", out);
            return 0;
        }

        if (*indices) {
            GraphDocument doc = detail::load_graph_file(idx_graph);
            Coloring f = load_coloring(read_json_file(idx_coloring), doc);
            IndexVector iv = index_vector(doc.graph, f);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["indices"] = save_index_vector(iv, doc)["indices"];
            j["sum"] = iv.sum();
            if (idx_symmetric) {
                Json sym = Json::object();
                for (int v : doc.graph.vertices())
                    sym[doc.labels[v]] = rational_to_json(symmetric_index(doc.graph, f, v));
                j["symmetric"] = sym;
            }
            detail::emit(j, "", out);
            return 0;
        }

        if (*wheels) {
            GraphDocument doc = detail::load_graph_file(wheels_graph);
            WheelMode mode;
            if (wheels_mode == "existential")
                mode = WheelMode::Existential;
            else if (wheels_mode == "universal")
                mode = WheelMode::Universal;
            else {
                err << "unknown wheel mode '" << wheels_mode << "'\n";
                return kExitUsage;
            }
            int center = doc.id_of(wheels_vertex);
            long long budget = detail::env_budget("CURV_WHEEL_CAP", 1000000);
            WheelEnumeration we =
                enumerate_geodesic_wheels(doc.graph, center, wheels_max, mode, budget);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["vertex"] = label_to_json_id(doc.labels[center]);
            j["mode"] = wheels_mode;
            j["truncated"] = we.truncated;
            j["cycles_examined"] = we.cycles_examined;
            Json list = Json::array();
            for (const auto& w : we.wheels) {
                Json b = Json::array();
                for (int v : w.boundary) b.push_back(label_to_json_id(doc.labels[v]));
                list.push_back(Json{{"center", label_to_json_id(doc.labels[w.center])},
                                    {"boundary", b}});
            }
            j["wheels"] = list;
            detail::emit(j, "", out);
            return 0;
        }

        if (*distance) {
            GraphDocument doc = detail::load_graph_file(dist_graph);
            Measure m = load_measure(read_json_file(dist_measure), doc);
            auto d = crofton_distance(doc.graph, m, doc.id_of(dist_from), doc.id_of(dist_to));
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["from"] = dist_from;
            j["to"] = dist_to;
            j["distance"] = d ? rational_to_json(*d) : Json("inf");
            detail::emit(j, "", out);
            return 0;
        }

        if (*search) {
            GraphDocument doc = detail::load_graph_file(search_graph);
            SearchOptions opt;
            if (search_mode == "euler")
                opt.mode = CurvatureMode::Euler;
            else if (search_mode == "sectional")
                opt.mode = CurvatureMode::Sectional;
            else {
                err << "unknown search mode '" << search_mode << "'\n";
                return kExitUsage;
            }
            opt.seed = search_seed;
            opt.rounds = search_rounds;
            opt.random_pool = search_random_pool;
            opt.pivot_budget = search_pivots;
            opt.wheels_per_vertex = search_wheels_per_vertex;
            opt.pricing.restarts =
                static_cast<int>(detail::env_budget("CURV_RESTARTS", search_restarts));
            opt.pricing.threads = static_cast<int>(search_threads);
            SearchReport r = positive_curvature_search(doc.graph, opt);

            Json j;
            j["schema_version"] = kSchemaVersion;
            j["mode"] = search_mode;
            j["status"] = r.status == SearchStatus::Positive ? "positive"
                          : r.status == SearchStatus::NonpositiveWithinPool
                              ? "nonpositive-within-pool"
                              : "budget-exhausted";
            j["note"] = r.note;
            j["t_star"] = rational_to_json(r.t_star);
            j["pool_size"] = r.pool_size;
            j["rounds_used"] = r.rounds_used;
            j["total_pivots"] = r.total_pivots;
            j["certificate_verified"] = r.certificate_ok;
            if (r.has_ceiling) j["gauss_bonnet_ceiling"] = rational_to_json(r.ceiling);
            if (r.certificate_ok) {
                j["measure"] = save_measure(r.measure, doc);
                Json cert;
                cert["sites"] = r.matrix.sites;
                Json w = Json::array(), y = Json::array();
                for (const Rational& x : r.solution.weights) w.push_back(rational_to_json(x));
                for (const Rational& x : r.solution.dual) y.push_back(rational_to_json(x));
                cert["weights"] = w;
                cert["dual"] = y;
                j["certificate"] = cert;
            }
            if (opt.mode == CurvatureMode::Sectional) j["wheel_sites"] = r.wheels.size();
            detail::emit(j, search_out, out);
            if (r.status == SearchStatus::Positive) return 0;
            if (r.status == SearchStatus::NonpositiveWithinPool) return 2;
            return kExitBudget;
        }
    } catch (const json_parse_error& e) {
        err << e.what() << "\n";
        return kExitData;
    } catch (const budget_exceeded& e) {
        err << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

inline int dispatch_argv(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(std::move(args), out, err);
}

}  // namespace curv::cli
