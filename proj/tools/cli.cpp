#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/generators.hpp"
#include "incdfs/io.hpp"
#include "incdfs/maintainer.hpp"
#include "incdfs/oracle.hpp"
#include "incdfs/query_engine.hpp"
#include "incdfs/rebuilder.hpp"

namespace incdfs::cli {

namespace {

// Carries an exit code out of a subcommand.
struct Failure {
    int code;
};

template <class Read>
auto read_file(const std::string& path, std::ostream& err, Read read) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << '\n';
        throw Failure{kBadInput};
    }
    try {
        return read(in);
    } catch (const io::ParseError& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        throw Failure{kBadInput};
    }
}

Graph load_graph(const std::string& path, std::ostream& err) {
    return read_file(path, err, [](std::istream& in) { return io::read_graph(in); });
}

std::vector<Update> load_updates(const std::string& path, std::ostream& err) {
    if (path.empty()) {
        return {};
    }
    return read_file(path, err, [](std::istream& in) { return io::read_updates(in); });
}

std::string describe(const Update& up) {
    if (up.kind == UpdateKind::vertex) {
        return "V";
    }
    return "E " + std::to_string(up.u) + " " + std::to_string(up.v);
}

std::optional<EngineKind> engine_option(const std::string& name) {
    return name == "auto" ? std::nullopt : parse_engine_kind(name);
}

// Batch of `updates` over `base` vertices; rejects the first invalid one.
UpdateBatch to_batch(std::size_t base, const std::vector<Update>& updates, std::ostream& err) {
    UpdateBatch batch;
    std::size_t current = base;
    for (std::size_t i = 0; i < updates.size(); ++i) {
        const Update& up = updates[i];
        if (up.kind == UpdateKind::vertex) {
            ++current;
        } else if (up.u == up.v || up.u >= current || up.v >= current) {
            err << "error: update " << i + 1 << " (" << describe(up)
                << ") is invalid: vertices must be distinct and below " << current << '\n';
            throw Failure{kInvalidUpdate};
        }
        batch.push(up);
    }
    return batch;
}

struct BatchArgs {
    std::string graph;
    std::string updates;
    std::string engine = "auto";
    std::string emit = "parents";
};

int cmd_batch(const BatchArgs& args, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(args.graph, err);
    auto updates = load_updates(args.updates, err);
    UpdateBatch batch = to_batch(g.vertex_count(), updates, err);
    DfsTree t = static_dfs(g);
    const EngineKind kind = engine_option(args.engine).value_or(
        preferred_engine(g.vertex_count(), g.edge_count()));
    auto engine = make_engine(kind, g, t);
    DfsTree result = batch_insert(g, t, *engine, batch);
    if (args.emit == "hash") {
        out << io::format_digest(io::tree_digest(result)) << '\n';
    } else {
        io::write_tree(out, result);
    }
    return kOk;
}

struct StreamArgs {
    std::string graph;
    std::string updates;
    std::string engine = "auto";
    std::string metrics;
    bool check = false;
};

void write_metrics_header(std::ostream& csv) {
    csv << "version,update,report_work,rebuild_work,engine_work,build_work,total_work,"
           "queries_3b,cascade_queries,cascade_work,table_lookups,buffer_size,phase,engine,"
           "swapped,forced_finish\n";
}

void write_metrics_row(std::ostream& csv, const UpdateMetrics& m) {
    csv << kMetricsVersion << ',' << m.index << ',' << m.report_work << ',' << m.rebuild_work << ','
        << m.engine_work << ',' << m.build_work << ',' << m.total_work() << ',' << m.queries_3b
        << ',' << m.cascade_queries << ',' << m.cascade_work << ',' << m.table_lookups << ','
        << m.buffer_size << ',' << m.phase << ',' << to_string(m.engine) << ','
        << (m.swapped ? 1 : 0) << ',' << (m.forced_finish ? 1 : 0) << '\n';
}

int cmd_stream(const StreamArgs& args, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(args.graph, err);
    auto updates = load_updates(args.updates, err);
    std::ofstream csv;
    if (!args.metrics.empty()) {
        csv.open(args.metrics);
        if (!csv) {
            err << "error: cannot write " << args.metrics << '\n';
            return kBadInput;
        }
        write_metrics_header(csv);
    }
    Maintainer m(std::move(g), MaintainerOptions{engine_option(args.engine)});
    for (std::size_t i = 0; i < updates.size(); ++i) {
        try {
            m.insert(updates[i]);
        } catch (const InvalidUpdate& e) {
            err << "error: update " << i + 1 << " (" << describe(updates[i])
                << ") is invalid: " << e.what() << '\n';
            return kInvalidUpdate;
        }
        out << io::format_digest(io::tree_digest(m.tree())) << '\n';
        if (csv.is_open()) {
            write_metrics_row(csv, m.last_metrics());
        }
        if (args.check) {
            if (auto bad = oracle::find_dfs_violation(m.graph(), m.tree().parents())) {
                err << "error: tree after update " << i + 1 << " is not a DFS tree: "
                    << bad->message << '\n';
                return kStreamInvalid;
            }
        }
    }
    return kOk;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    double p = 0.1;
    bool anchor = false;
    std::string graph_out;
    std::string updates_out;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
    gen::Workload w;
    try {
        if (args.kind == "chain") {
            w = gen::chain(args.n);
        } else if (args.kind == "broom") {
            w = gen::broom(args.n, args.anchor);
        } else {
            w = gen::random(args.n, args.p, args.seed);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    auto emit = [&](const std::string& path, auto write) {
        if (path.empty()) {
            write(out);
            return true;
        }
        std::ofstream file(path);
        if (!file) {
            err << "error: cannot write " << path << '\n';
            return false;
        }
        write(file);
        return true;
    };
    if (!emit(args.graph_out, [&](std::ostream& s) { io::write_graph(s, w.graph); })) {
        return kBadInput;
    }
    if (args.graph_out.empty() && args.updates_out.empty()) {
        out << "# updates\n";
    }
    if (!emit(args.updates_out, [&](std::ostream& s) { io::write_updates(s, w.updates); })) {
        return kBadInput;
    }
    return kOk;
}

struct CheckArgs {
    std::string graph;
    std::string tree;
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(args.graph, err);
    auto parents = read_file(args.tree, err, [](std::istream& in) { return io::read_tree(in); });
    if (auto bad = oracle::find_dfs_violation(g, parents)) {
        out << "invalid: " << bad->message << '\n';
        return kCheckFailed;
    }
    out << "ok\n";
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Incremental DFS tree maintenance", "incdfs"};
    app.require_subcommand(1);
    const std::vector<std::string> engines{"auto", "brute", "dense", "range", "hybrid"};

    BatchArgs batch;
    auto* batch_cmd = app.add_subcommand("batch", "Insert all updates at once and print the tree");
    batch_cmd->add_option("--graph", batch.graph, "Graph file")->required();
    batch_cmd->add_option("--updates", batch.updates, "Update file (default: none)");
    batch_cmd->add_option("--engine", batch.engine, "Query engine")
        ->check(CLI::IsMember(engines))
        ->capture_default_str();
    batch_cmd->add_option("--emit", batch.emit, "Print parents or a digest")
        ->check(CLI::IsMember({"parents", "hash"}))
        ->capture_default_str();

    StreamArgs stream;
    auto* stream_cmd = app.add_subcommand("stream", "Insert updates one at a time, printing digests");
    stream_cmd->add_option("--graph", stream.graph, "Graph file")->required();
    stream_cmd->add_option("--updates", stream.updates, "Update file")->required();
    stream_cmd->add_option("--engine", stream.engine, "Query engine for every generation")
        ->check(CLI::IsMember(engines))
        ->capture_default_str();
    stream_cmd->add_option("--metrics", stream.metrics, "Write per-update counters as CSV");
    stream_cmd->add_flag("--check", stream.check, "Validate the tree after every update");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph and an update sequence");
    gen_cmd->add_option("--gen", gen_args.kind, "Workload family")
        ->required()
        ->check(CLI::IsMember({"chain", "broom", "random"}));
    gen_cmd->add_option("--n", gen_args.n, "Vertex count")->required();
    gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--p", gen_args.p, "Edge density for random graphs")->capture_default_str();
    gen_cmd->add_flag("--anchor", gen_args.anchor,
                      "Broom: add an isolated vertex 0 so the update re-roots the broom");
    gen_cmd->add_option("--graph-out", gen_args.graph_out, "Write the graph here instead of stdout");
    gen_cmd->add_option("--updates-out", gen_args.updates_out,
                        "Write the updates here instead of stdout");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Validate a tree file against a graph");
    check_cmd->add_option("--graph", check.graph, "Graph file")->required();
    check_cmd->add_option("--tree", check.tree, "Tree file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*batch_cmd) {
            return cmd_batch(batch, out, err);
        }
        if (*stream_cmd) {
            return cmd_stream(stream, out, err);
        }
        if (*gen_cmd) {
            return cmd_gen(gen_args, out, err);
        }
        return cmd_check(check, out, err);
    } catch (const Failure& f) {
        return f.code;
    }
}

}  // namespace incdfs::cli
