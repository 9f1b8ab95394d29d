#ifndef incdfs_rebuilder_hpp
#define incdfs_rebuilder_hpp

#include <cstdint>
#include <span>
#include <vector>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/query_engine.hpp"
#include "incdfs/update.hpp"

namespace incdfs {

struct RebuildStats {
    std::uint64_t work = 0;          // rebuilder steps, engine internals excluded
    std::uint64_t paths = 0;         // tree paths entered
    std::uint64_t longest_path = 0;  // vertices on the longest of them
    std::uint64_t list_entries = 0;  // total size of the reduced adjacency lists
    EngineStats engine;
};

/*
 * One batch insertion: a DFS tree of g + batch, derived from the DFS tree t
 * of g and a query engine built over (g, t).
 *
 * Inserted vertices hang from the super root; inserted edges seed the
 * reduced adjacency lists L of both endpoints. Entering a vertex v climbs to
 * its highest unvisited ancestor u, reverses path(u, v) into the new tree,
 * asks the engine for the highest edge from every subtree hanging off the
 * path, and records each answer (y, z) as z in L(y). The path is then walked
 * from u down to v; every vertex w scans L(w) (query answers first, inserted
 * edges after) and enters each unvisited entry as a child of w.
 *
 * The traversal keeps an explicit frame stack, so deep trees do not recurse.
 */
class Rebuilder {
public:
    Rebuilder(const Graph& g, const DfsTree& t, const QueryEngine& engine, const UpdateBatch& batch);

    // Enters the old component roots in ascending id, then the inserted
    // vertices, each unvisited one as a child of the super root.
    void traverse_root();

    // Full traversal from v, which must be unvisited; its parent in the new
    // tree must already be set.
    void dfs_enter(VertexId v);

    bool visited(VertexId v) const { return visited_[v]; }
    std::size_t vertex_count() const noexcept { return total_; }
    const RebuildStats& stats() const noexcept { return stats_; }

    // Tree over base + new vertices; super root at index vertex_count().
    DfsTree result();

private:
    struct Frame {
        std::size_t path_begin;
        std::size_t path_size;
        std::size_t index = 0;  // path position being scanned
        int list = 0;           // 0: query answers, 1: inserted edges
        std::size_t entry = 0;
    };

    VertexId tree_parent(VertexId x) const;
    void open_path(VertexId v);
    void run();

    const Graph& graph_;
    const DfsTree& tree_;
    const QueryEngine& engine_;
    std::size_t base_;
    std::size_t total_;
    VertexId root_;

    std::vector<bool> visited_;
    std::vector<VertexId> parent_;
    std::vector<std::size_t> inserted_begin_;
    std::vector<VertexId> inserted_;
    std::vector<std::size_t> answer_begin_;
    std::vector<std::size_t> answer_end_;
    std::vector<VertexId> answers_;

    std::vector<Frame> frames_;
    std::vector<VertexId> path_stack_;
    std::vector<VertexId> hanging_;
    std::vector<QueryAnswer> replies_;
    std::vector<std::uint32_t> slot_count_;

    RebuildStats stats_;
};

// Throws InvalidUpdate on a malformed batch and InvalidGraph if the engine
// was not built over (g, t).
DfsTree batch_insert(const Graph& g, const DfsTree& t, const QueryEngine& engine,
                     const UpdateBatch& batch, RebuildStats* stats = nullptr);

}  // namespace incdfs

#endif /* incdfs_rebuilder_hpp */
