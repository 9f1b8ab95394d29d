#include "incdfs/tree_partition.hpp"

#include <stdexcept>
#include <string>

namespace incdfs {

namespace {

void check_parameter(const DfsTree& t, std::uint32_t k) {
    if (k < 2 || k > t.vertex_count()) {
        throw std::invalid_argument("compute_partition: k = " + std::to_string(k) +
                                    " outside [2, " + std::to_string(t.vertex_count()) + "]");
    }
}

}  // namespace

Partition compute_partition(const DfsTree& t, std::uint32_t k) {
    check_parameter(t, k);
    Partition p;
    compute_partition_into(t, k, p).finish();
    return p;
}

// Bottom-up greedy: a vertex whose pending piece would exceed k vertices is
// marked, which closes off more than k vertices per mark.
BuildTask compute_partition_into(const DfsTree& t, std::uint32_t k, Partition& out) {
    check_parameter(t, k);
    constexpr std::size_t kChunk = 64;
    const std::size_t n = t.vertex_count();
    const VertexId root = t.root();
    auto order = t.order();

    out.k = k;
    out.marked.clear();
    out.comp_of.assign(n, 0);
    out.component_count = 0;

    std::vector<std::uint32_t> pending(n, 1);
    std::vector<bool> marked(n, false);
    for (std::size_t i = n; i >= 1; --i) {
        VertexId v = order[i];
        if (pending[v] > k) {
            marked[v] = true;
            pending[v] = 0;
        }
        VertexId p = t.parent(v);
        if (p != root) {
            pending[p] += pending[v];
        }
        if (i % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield n % kChunk;

    for (std::size_t i = 1; i <= n; ++i) {
        VertexId v = order[i];
        VertexId p = t.parent(v);
        if (marked[v]) {
            out.comp_of[v] = Partition::kRemoved;
        } else if (p == root || marked[p]) {
            out.comp_of[v] = out.component_count++;
        } else {
            out.comp_of[v] = out.comp_of[p];
        }
        if (i % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield n % kChunk;

    for (std::size_t v = 0; v < n; ++v) {
        if (marked[v]) {
            out.marked.push_back(static_cast<VertexId>(v));
        }
        if ((v + 1) % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield n % kChunk;
}

}  // namespace incdfs
