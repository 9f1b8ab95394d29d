#ifndef incdfs_maintainer_hpp
#define incdfs_maintainer_hpp

#include <cstdint>
#include <memory>
#include <optional>

#include "incdfs/build_task.hpp"
#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/query_engine.hpp"
#include "incdfs/rebuilder.hpp"
#include "incdfs/update.hpp"

namespace incdfs {

struct MaintainerOptions {
    // Engine for every generation; empty picks dense when n^2 <= m * ceil_log2(n)
    // at phase start and hybrid otherwise.
    std::optional<EngineKind> engine;
};

// Work spent by one insert call, in the same units as the structures report.
struct UpdateMetrics {
    std::uint64_t index = 0;         // 1-based position in the update stream
    std::uint64_t report_work = 0;   // rebuild_work + engine_work
    std::uint64_t rebuild_work = 0;
    std::uint64_t engine_work = 0;
    std::uint64_t build_work = 0;    // background construction advanced by this call
    std::uint64_t queries_3b = 0;
    std::uint64_t cascade_queries = 0;
    std::uint64_t cascade_work = 0;
    std::uint64_t table_lookups = 0;
    std::uint64_t buffer_size = 0;   // buffered updates the report was rebuilt from
    std::uint64_t phase = 0;
    EngineKind engine = EngineKind::brute;
    bool swapped = false;            // a new generation took over after this update
    bool forced_finish = false;      // the background build missed its deadline

    std::uint64_t total_work() const noexcept { return report_work + build_work; }
};

/*
 * Reports a DFS tree after every single insertion.
 *
 * A generation is a graph snapshot, its DFS tree and an engine over both.
 * Each report is one batch insertion of the updates buffered since the
 * current generation's snapshot. Time is cut into phases of
 * ceil(sqrt(f)) updates, f = min(m * ceil_log2(n), n^2) + n measured at
 * phase start. At the start of a phase the next generation begins building
 * over the current graph and the latest reported tree, advanced by a fixed
 * quota per update; at the end of the phase it replaces the current one and
 * the buffer shrinks to that phase's updates. The buffer therefore never
 * holds more than two phases' worth of updates.
 */
class Maintainer {
public:
    explicit Maintainer(Graph g, MaintainerOptions options = {});
    ~Maintainer();
    Maintainer(const Maintainer&) = delete;
    Maintainer& operator=(const Maintainer&) = delete;

    // Throws InvalidUpdate, leaving the state unchanged, on a self-loop or an
    // endpoint outside the current graph.
    const DfsTree& insert(const Update& update);

    const Graph& graph() const noexcept { return graph_; }
    const DfsTree& tree() const noexcept { return *report_; }
    std::shared_ptr<const DfsTree> shared_tree() const noexcept { return report_; }

    const UpdateMetrics& last_metrics() const noexcept { return last_; }
    std::uint64_t init_work() const noexcept { return init_work_; }
    std::uint64_t phase() const noexcept { return phase_; }
    std::uint64_t phase_length() const noexcept { return phase_len_; }
    std::uint64_t quota() const noexcept { return quota_; }
    std::uint64_t f_value() const noexcept { return f_; }
    std::size_t buffer_size() const noexcept { return buffer_.size(); }
    EngineKind current_engine() const noexcept;
    std::uint64_t updates() const noexcept { return updates_; }

    static std::uint64_t f_of(std::uint64_t n, std::uint64_t m);
    EngineKind choose_engine(std::uint64_t n, std::uint64_t m) const;

private:
    struct Generation;

    static BuildTask build_generation(const Graph& source, std::size_t n, std::size_t m,
                                      Generation& out);
    void start_phase();

    MaintainerOptions options_;
    Graph graph_;
    std::shared_ptr<const DfsTree> report_;
    std::unique_ptr<Generation> current_;
    std::unique_ptr<Generation> next_;
    BuildTask next_task_;

    UpdateBatch buffer_;         // updates since the current generation's snapshot
    UpdateBatch phase_updates_;  // updates since the phase began
    std::uint64_t phase_ = 0;
    std::uint64_t phase_len_ = 1;
    std::uint64_t in_phase_ = 0;
    std::uint64_t quota_ = 0;
    std::uint64_t f_ = 0;
    std::uint64_t updates_ = 0;
    std::uint64_t init_work_ = 0;
    UpdateMetrics last_;
};

}  // namespace incdfs

#endif /* incdfs_maintainer_hpp */
