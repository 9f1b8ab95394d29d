#include "incdfs/maintainer.hpp"

#include <cmath>
#include <string>

namespace incdfs {

struct Maintainer::Generation {
    Graph graph;
    std::shared_ptr<const DfsTree> tree;
    std::unique_ptr<QueryEngine> engine;
    EngineKind kind = EngineKind::brute;
};

namespace {

std::uint64_t ceil_sqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) {
        ++r;
    }
    while (r > 0 && (r - 1) * (r - 1) >= x) {
        --r;
    }
    return r;
}

}  // namespace

Maintainer::Maintainer(Graph g, MaintainerOptions options)
    : options_(options), graph_(std::move(g)) {
    const std::size_t n = graph_.vertex_count();
    const std::size_t m = graph_.edge_count();
    auto tree = std::make_shared<const DfsTree>(static_dfs(graph_));
    init_work_ += n + 2 * m + 1;

    current_ = std::make_unique<Generation>();
    current_->graph = graph_;
    current_->tree = tree;
    current_->kind = choose_engine(n, m);
    init_work_ += n + m;
    init_work_ += make_engine_task(current_->kind, current_->graph, *tree, current_->engine).finish();
    report_ = tree;

    // The first phase starts from a finished generation, so nothing is
    // built in the background until it ends.
    f_ = f_of(n, m);
    phase_len_ = std::max<std::uint64_t>(1, ceil_sqrt(f_));
    phase_ = 1;
}

Maintainer::~Maintainer() = default;

std::uint64_t Maintainer::f_of(std::uint64_t n, std::uint64_t m) {
    return std::min(m * ceil_log2(n), n * n) + n;
}

EngineKind Maintainer::choose_engine(std::uint64_t n, std::uint64_t m) const {
    if (options_.engine) {
        return *options_.engine;
    }
    return preferred_engine(n, m);
}

EngineKind Maintainer::current_engine() const noexcept { return current_->kind; }

BuildTask Maintainer::build_generation(const Graph& source, std::size_t n, std::size_t m,
                                       Generation& out) {
    for (auto sub = Graph::copy_prefix(source, n, m, out.graph); !sub.done();) {
        co_yield sub.step();
    }
    for (auto sub = make_engine_task(out.kind, out.graph, *out.tree, out.engine); !sub.done();) {
        co_yield sub.step();
    }
}

void Maintainer::start_phase() {
    const std::size_t n = graph_.vertex_count();
    const std::size_t m = graph_.edge_count();
    f_ = f_of(n, m);
    phase_len_ = std::max<std::uint64_t>(1, ceil_sqrt(f_));
    in_phase_ = 0;
    ++phase_;
    phase_updates_ = UpdateBatch{};

    next_ = std::make_unique<Generation>();
    next_->tree = report_;
    next_->kind = choose_engine(n, m);
    next_task_ = build_generation(graph_, n, m, *next_);
    const std::uint64_t work = engine_build_bound(next_->kind, n, m) + n + m + 2;
    quota_ = (work + phase_len_ - 1) / phase_len_;
}

const DfsTree& Maintainer::insert(const Update& update) {
    const std::size_t n = graph_.vertex_count();
    if (update.kind == UpdateKind::edge) {
        if (update.u >= n || update.v >= n) {
            throw InvalidUpdate("edge (" + std::to_string(update.u) + ", " +
                                std::to_string(update.v) + ") references a vertex outside 0.." +
                                std::to_string(n));
        }
        if (update.u == update.v) {
            throw InvalidUpdate("self-loop at vertex " + std::to_string(update.u));
        }
        graph_.add_edge(update.u, update.v);
    } else {
        graph_.add_vertex();
    }
    buffer_.push(update);
    phase_updates_.push(update);

    UpdateMetrics metrics;
    metrics.index = ++updates_;
    metrics.phase = phase_;
    metrics.engine = current_->kind;
    metrics.buffer_size = buffer_.size();

    RebuildStats stats;
    report_ = std::make_shared<const DfsTree>(
        batch_insert(current_->graph, *current_->tree, *current_->engine, buffer_, &stats));
    metrics.rebuild_work = stats.work;
    metrics.engine_work = stats.engine.work;
    metrics.report_work = stats.work + stats.engine.work;
    metrics.queries_3b = stats.engine.queries_3b;
    metrics.cascade_queries = stats.engine.cascade_queries;
    metrics.cascade_work = stats.engine.cascade_work;
    metrics.table_lookups = stats.engine.table_lookups;

    if (next_) {
        metrics.build_work = next_task_.advance(quota_);
    }
    if (++in_phase_ >= phase_len_) {
        if (next_) {
            if (!next_task_.done()) {
                metrics.forced_finish = true;
                metrics.build_work += next_task_.finish();
            }
            current_ = std::move(next_);
            next_task_ = BuildTask{};
            buffer_ = phase_updates_;
            metrics.swapped = true;
        }
        start_phase();
    }
    last_ = metrics;
    return *report_;
}

}  // namespace incdfs
