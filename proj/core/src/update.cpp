#include "incdfs/update.hpp"

#include <string>

namespace incdfs {

void UpdateBatch::push(const Update& update) {
    if (update.kind == UpdateKind::vertex) {
        ++new_vertices;
    } else {
        new_edges.emplace_back(update.u, update.v);
    }
}

void check_batch(std::size_t base_vertices, const UpdateBatch& batch) {
    const std::size_t total = base_vertices + batch.new_vertices;
    for (auto [a, b] : batch.new_edges) {
        if (a >= total || b >= total) {
            throw InvalidUpdate("inserted edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") references a vertex outside 0.." + std::to_string(total) + ")");
        }
        if (a == b) {
            throw InvalidUpdate("inserted edge is a self-loop at vertex " + std::to_string(a));
        }
    }
}

}  // namespace incdfs
