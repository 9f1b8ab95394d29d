#ifndef incdfs_update_hpp
#define incdfs_update_hpp

#include <cstddef>
#include <utility>
#include <vector>

#include "incdfs/types.hpp"

namespace incdfs {

enum class UpdateKind { edge, vertex };

// One online insertion. A vertex insertion appends id = current vertex count.
struct Update {
    UpdateKind kind = UpdateKind::vertex;
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;

    static Update edge(VertexId a, VertexId b) noexcept { return {UpdateKind::edge, a, b}; }
    static Update vertex() noexcept { return {}; }

    friend bool operator==(const Update&, const Update&) = default;
};

// A set of insertions applied at once to a graph with `base` vertices. New
// vertices take ids base, base+1, ...; edges may reference them.
struct UpdateBatch {
    std::size_t new_vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> new_edges;

    std::size_t size() const noexcept { return new_vertices + new_edges.size(); }
    bool empty() const noexcept { return size() == 0; }

    void push(const Update& update);
};

// Throws InvalidUpdate on a self-loop or an endpoint outside the graph that
// results from applying the batch to `base_vertices` vertices.
void check_batch(std::size_t base_vertices, const UpdateBatch& batch);

}  // namespace incdfs

#endif /* incdfs_update_hpp */
