#include "incdfs/rebuilder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace incdfs {

Rebuilder::Rebuilder(const Graph& g, const DfsTree& t, const QueryEngine& engine,
                     const UpdateBatch& batch)
    : graph_(g), tree_(t), engine_(engine), base_(g.vertex_count()) {
    if (t.vertex_count() != base_ || &engine.graph() != &g || &engine.tree() != &t) {
        throw InvalidGraph("batch_insert: engine, tree and graph do not belong together");
    }
    check_batch(base_, batch);
    total_ = base_ + batch.new_vertices;
    root_ = static_cast<VertexId>(total_);

    visited_.assign(total_ + 1, false);
    visited_[root_] = true;
    parent_.assign(total_ + 1, kNoVertex);
    answer_begin_.assign(total_, 0);
    answer_end_.assign(total_, 0);

    inserted_begin_.assign(total_ + 1, 0);
    for (auto [a, b] : batch.new_edges) {
        ++inserted_begin_[a + 1];
        ++inserted_begin_[b + 1];
    }
    for (std::size_t v = 0; v < total_; ++v) {
        inserted_begin_[v + 1] += inserted_begin_[v];
    }
    inserted_.resize(inserted_begin_[total_]);
    std::vector<std::size_t> fill(inserted_begin_.begin(), inserted_begin_.end() - 1);
    for (auto [a, b] : batch.new_edges) {
        inserted_[fill[a]++] = b;
        inserted_[fill[b]++] = a;
    }
    stats_.work += 2 * total_ + 2 * batch.new_edges.size();
    stats_.list_entries += inserted_.size();
}

VertexId Rebuilder::tree_parent(VertexId x) const {
    if (x >= base_) {
        return root_;
    }
    const VertexId p = tree_.parent(x);
    return p == tree_.root() ? root_ : p;
}

void Rebuilder::traverse_root() {
    auto visit = [&](VertexId x) {
        ++stats_.work;
        if (!visited_[x]) {
            parent_[x] = root_;
            dfs_enter(x);
        }
    };
    if (base_ > 0) {
        for (VertexId x : tree_.children(tree_.root())) {
            visit(x);
        }
    }
    for (std::size_t x = base_; x < total_; ++x) {
        visit(static_cast<VertexId>(x));
    }
}

void Rebuilder::dfs_enter(VertexId v) {
    if (v >= total_ || visited_[v]) {
        throw std::logic_error("dfs_enter: vertex " + std::to_string(v) + " is not enterable");
    }
    open_path(v);
    run();
}

// Climbs from v, installs the reversed path and fills L for its vertices.
void Rebuilder::open_path(VertexId v) {
    const std::size_t begin = path_stack_.size();
    path_stack_.push_back(v);
    VertexId u = v;
    while (!visited_[tree_parent(u)]) {
        u = tree_parent(u);
        path_stack_.push_back(u);
    }
    std::reverse(path_stack_.begin() + static_cast<std::ptrdiff_t>(begin), path_stack_.end());
    const std::size_t len = path_stack_.size() - begin;
    std::span<const VertexId> path(path_stack_.data() + begin, len);
    for (std::size_t i = 0; i < len; ++i) {
        visited_[path[i]] = true;
        if (i + 1 < len) {
            parent_[path[i]] = path[i + 1];
        }
    }
    stats_.work += 2 * len;
    ++stats_.paths;
    stats_.longest_path = std::max<std::uint64_t>(stats_.longest_path, len);

    if (u < base_) {
        hanging_.clear();
        for (std::size_t i = 0; i < len; ++i) {
            for (VertexId c : tree_.children(path[i])) {
                ++stats_.work;
                if ((i + 1 < len && c == path[i + 1]) || visited_[c]) {
                    continue;
                }
                hanging_.push_back(c);
            }
        }
        replies_.assign(hanging_.size(), std::nullopt);
        if (!hanging_.empty()) {
            engine_.batched_path_query(path, hanging_, replies_, stats_.engine);
        }

        // Group the answers by their path vertex, keeping enumeration order.
        slot_count_.assign(len + 1, 0);
        const std::uint32_t top = tree_.depth(u);
        std::size_t found = 0;
        for (const auto& r : replies_) {
            if (!r) {
                continue;
            }
            const std::size_t idx = tree_.depth(r->hi) - top;
            if (tree_.depth(r->hi) < top || idx >= len || path[idx] != r->hi) {
                throw std::logic_error("batch_insert: engine answered with an edge off the path");
            }
            ++slot_count_[idx + 1];
            ++found;
        }
        for (std::size_t i = 0; i < len; ++i) {
            slot_count_[i + 1] += slot_count_[i];
        }
        const std::size_t at = answers_.size();
        answers_.resize(at + found);
        for (std::size_t i = 0; i < len; ++i) {
            answer_begin_[path[i]] = at + slot_count_[i];
            answer_end_[path[i]] = at + slot_count_[i];
        }
        for (const auto& r : replies_) {
            if (r) {
                answers_[answer_end_[r->hi]++] = r->lo;
            }
        }
        stats_.work += found;
        stats_.list_entries += found;
    }
    frames_.push_back(Frame{begin, len});
}

void Rebuilder::run() {
    while (!frames_.empty()) {
        Frame& f = frames_.back();
        if (f.index == f.path_size) {
            path_stack_.resize(f.path_begin);
            frames_.pop_back();
            continue;
        }
        const VertexId w = path_stack_[f.path_begin + f.index];
        const std::size_t size = f.list == 0 ? answer_end_[w] - answer_begin_[w]
                                             : inserted_begin_[w + 1] - inserted_begin_[w];
        if (f.entry == size) {
            f.entry = 0;
            if (f.list == 0) {
                f.list = 1;
            } else {
                f.list = 0;
                ++f.index;
            }
            continue;
        }
        const VertexId x = f.list == 0 ? answers_[answer_begin_[w] + f.entry]
                                       : inserted_[inserted_begin_[w] + f.entry];
        ++f.entry;
        ++stats_.work;
        if (!visited_[x]) {
            parent_[x] = w;
            open_path(x);
        }
    }
}

DfsTree Rebuilder::result() {
    stats_.work += total_ + 1;
    return DfsTree::from_parents(parent_);
}

DfsTree batch_insert(const Graph& g, const DfsTree& t, const QueryEngine& engine,
                     const UpdateBatch& batch, RebuildStats* stats) {
    Rebuilder rebuilder(g, t, engine, batch);
    rebuilder.traverse_root();
    DfsTree out = rebuilder.result();
    if (stats) {
        *stats = rebuilder.stats();
    }
    return out;
}

}  // namespace incdfs
