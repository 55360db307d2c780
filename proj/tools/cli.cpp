#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "edgeslide/euler_ops.hpp"
#include "edgeslide/graph.hpp"
#include "edgeslide/moves.hpp"
#include "edgeslide/oracle.hpp"
#include "edgeslide/prescribe.hpp"
#include "edgeslide/regularize.hpp"

namespace edgeslide::cli {

namespace {

namespace fs = std::filesystem;

// Unreadable or malformed input: exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Replay or isomorphism check failed: exit code 1.
struct VerificationError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class Parse>
auto parse_file(const std::string& path, Parse parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& ex) {
        throw InputError(path + ": " + ex.what());
    } catch (const PreconditionError& ex) {
        throw InputError(path + ": " + ex.what());
    }
}

Graph load_graph(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return parse_graph(t); });
}

ScriptDocument load_script(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return parse_script(t); });
}

VertexBijection load_bijection(const std::string& path, int n) {
    if (path.empty()) return VertexBijection::identity(n);
    return parse_file(path, [n](const std::string& t) { return parse_bijection(t, n); });
}

// Temp file next to the target, then rename over it.
void write_atomically(const std::string& path, const std::string& content) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) throw InputError("cannot write '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InputError("cannot replace '" + path + "': " + ec.message());
    }
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-")
        out << content;
    else
        write_atomically(path, content);
}

void require_connected(const Graph& g, const std::string& path) {
    if (!is_connected(g)) throw InputError(path + ": graph is disconnected");
}

// Full replay of a freshly generated script; the certificate is only written
// if this passes.
Graph self_check(const Graph& start, const MoveScript& script) {
    try {
        return replay(start, script, CheckLevel::full);
    } catch (const RejectedMove& ex) {
        throw VerificationError(std::string("generated script failed self-check: ") + ex.what());
    }
}

struct Options {
    std::string gamma, sigma, graph, script, bijection, output, expect, result, map_out;
    std::string check = "full";
    int max_n = 4;
};

int do_transform(const Options& o, std::ostream& out) {
    const Graph gamma = load_graph(o.gamma);
    const Graph sigma = load_graph(o.sigma);
    require_connected(gamma, o.gamma);
    require_connected(sigma, o.sigma);
    if (gamma.order() != sigma.order() || gamma.size() != sigma.size())
        throw InputError("graphs differ in vertex or edge count");
    const VertexBijection psi = load_bijection(o.bijection, gamma.order());
    const TransformPlan plan = transform(gamma, sigma, psi);
    if (!is_isomorphic_under(self_check(gamma, plan.script), sigma, psi))
        throw VerificationError("generated script does not reach the target");
    emit(o.output, serialize_script(plan.script), out);
    return kOk;
}

int do_regularize(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    require_connected(g, o.graph);
    const RegularizeResult r = regularize_traced(g);
    const Graph final_graph = self_check(g, r.script);
    if (!(final_graph == r.final_graph)) throw VerificationError("replay disagrees with the declared result");
    if (!o.result.empty()) write_atomically(o.result, serialize_graph(final_graph));
    emit(o.output, serialize_script(r.script), out);
    return kOk;
}

int do_euler_transform(const Options& o, std::ostream& out) {
    const Graph gamma = load_graph(o.gamma);
    const Graph sigma = load_graph(o.sigma);
    require_connected(gamma, o.gamma);
    require_connected(sigma, o.sigma);
    if (euler_characteristic(gamma) != euler_characteristic(sigma))
        throw InputError("Euler characteristics differ");
    const EulerPlan plan = transform_euler(gamma, sigma);
    if (!is_isomorphic_under(self_check(gamma, plan.script), sigma, plan.map))
        throw VerificationError("generated plan does not reach the target");
    if (!o.map_out.empty()) write_atomically(o.map_out, serialize_bijection(plan.map));
    emit(o.output, serialize_script(plan.script), out);
    return kOk;
}

Graph replay_document(const Graph& g, const ScriptDocument& doc, CheckLevel level) {
    try {
        return replay(g, doc.script, level);
    } catch (const RejectedMove& ex) {
        throw VerificationError("line " + std::to_string(doc.lines.at(ex.index())) + ": " + ex.what());
    }
}

int do_verify(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    require_connected(g, o.graph);
    const ScriptDocument doc = load_script(o.script);
    const Graph result = replay_document(g, doc, CheckLevel::full);
    if (!o.expect.empty()) {
        const Graph want = load_graph(o.expect);
        if (want.order() != result.order())
            throw VerificationError("result has " + std::to_string(result.order()) + " vertices, expected " +
                                    std::to_string(want.order()));
        const VertexBijection psi = load_bijection(o.bijection, result.order());
        if (!is_isomorphic_under(result, want, psi))
            throw VerificationError("result is not isomorphic to the expected graph under the bijection");
    }
    out << "ok: " << doc.script.size() << " moves verified\n";
    return kOk;
}

int do_replay(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const CheckLevel level = o.check == "fast" ? CheckLevel::fast : CheckLevel::full;
    if (level == CheckLevel::full) require_connected(g, o.graph);
    const ScriptDocument doc = load_script(o.script);
    emit(o.output, serialize_graph(replay_document(g, doc, level)), out);
    return kOk;
}

int do_oracle(const Options& o, std::ostream& out) {
    if (o.max_n < 1 || o.max_n > oracle::kCensusCap)
        throw InputError("--max-n must be in 1.." + std::to_string(oracle::kCensusCap));
    std::vector<oracle::Census> rows;
    bool single_class = true;
    for (int n = 1; n <= o.max_n; ++n)
        for (int e = n - 1; e <= n * (n - 1) / 2; ++e) {
            rows.push_back(oracle::reachability_census(n, e));
            single_class = single_class && rows.back().classes == 1;
        }
    emit(o.output, oracle::format_census(rows), out);
    if (!single_class) throw VerificationError("some (n, e) splits into several slide classes");
    return kOk;
}

int do_stats(const Options& o, std::ostream& out) {
    out << to_string(stats(load_graph(o.graph))) << '\n';
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-slide graph transformations with replayable move certificates", "edgeslide"};
    app.require_subcommand(1);
    Options o;

    auto* transform_cmd = app.add_subcommand("transform", "Slide GAMMA onto SIGMA under a vertex bijection");
    transform_cmd->add_option("gamma", o.gamma, "initial graph (.elist)")->required();
    transform_cmd->add_option("sigma", o.sigma, "target graph (.elist)")->required();
    transform_cmd->add_option("--bijection", o.bijection, "lines 'm <src> <dst>'; identity if omitted");
    transform_cmd->add_option("-o,--output", o.output, "output .moves (stdout if omitted)");

    auto* regularize_cmd = app.add_subcommand("regularize", "Slide a graph to an almost regular one");
    regularize_cmd->add_option("graph", o.graph, "input graph (.elist)")->required();
    regularize_cmd->add_option("-o,--output", o.output, "output .moves (stdout if omitted)");
    regularize_cmd->add_option("--result", o.result, "also write the final graph (.elist)");

    auto* euler_cmd = app.add_subcommand("euler-transform", "Expand or collapse GAMMA onto SIGMA (equal chi)");
    euler_cmd->add_option("gamma", o.gamma, "initial graph (.elist)")->required();
    euler_cmd->add_option("sigma", o.sigma, "target graph (.elist)")->required();
    euler_cmd->add_option("-o,--output", o.output, "output .moves (stdout if omitted)");
    euler_cmd->add_option("--map-out", o.map_out, "write the result->sigma bijection here");

    auto* verify_cmd = app.add_subcommand("verify", "Replay a script with full checks");
    verify_cmd->add_option("graph", o.graph, "start graph (.elist)")->required();
    verify_cmd->add_option("script", o.script, "script (.moves)")->required();
    verify_cmd->add_option("--expect", o.expect, "graph the result must match (.elist)");
    verify_cmd->add_option("--bijection", o.bijection, "result->expected bijection; identity if omitted");

    auto* replay_cmd = app.add_subcommand("replay", "Replay a script and print the resulting graph");
    replay_cmd->add_option("graph", o.graph, "start graph (.elist)")->required();
    replay_cmd->add_option("script", o.script, "script (.moves)")->required();
    replay_cmd->add_option("--check", o.check, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    replay_cmd->add_option("-o,--output", o.output, "output .elist (stdout if omitted)");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive slide-reachability census");
    oracle_cmd->add_option("--max-n", o.max_n, "largest vertex count (<= 5)");
    oracle_cmd->add_option("-o,--output", o.output, "output table (stdout if omitted)");

    auto* stats_cmd = app.add_subcommand("stats", "Degree, energy, Euler characteristic and curvature sum");
    stats_cmd->add_option("graph", o.graph, "input graph (.elist)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << ex.what() << '\n' << app.help();
        return kBadInput;
    }

    try {
        if (transform_cmd->parsed()) return do_transform(o, out);
        if (regularize_cmd->parsed()) return do_regularize(o, out);
        if (euler_cmd->parsed()) return do_euler_transform(o, out);
        if (verify_cmd->parsed()) return do_verify(o, out);
        if (replay_cmd->parsed()) return do_replay(o, out);
        if (oracle_cmd->parsed()) return do_oracle(o, out);
        if (stats_cmd->parsed()) return do_stats(o, out);
    } catch (const VerificationError& ex) {
        err << "verification failed: " << ex.what() << '\n';
        return kVerificationFailed;
    } catch (const InvariantViolation& ex) {
        err << "internal check failed: " << ex.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace edgeslide::cli
