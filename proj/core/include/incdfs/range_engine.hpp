#ifndef incdfs_range_engine_hpp
#define incdfs_range_engine_hpp

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/query_engine.hpp"
#include "incdfs/wavelet_tree.hpp"

namespace incdfs {

/*
 * Every edge (a, b) contributes the points (first(a), first(b)) and
 * (first(b), first(a)). Points are sorted by (x, y) and the y sequence is
 * indexed by a wavelet tree.
 *
 * Because the point set is symmetric under transposition, the minimum-x
 * point of X x Y is the transpose of the minimum-y point among the points
 * with x in Y and y in X. The latter is one range-minimum descent over the
 * contiguous block of points whose x lies in Y.
 */
class RangeIndex {
public:
    struct Point {
        std::uint32_t x = 0;
        std::uint32_t y = 0;
        friend bool operator==(const Point&, const Point&) = default;
    };

    RangeIndex() = default;
    RangeIndex(const Graph& g, const DfsTree& t);

    static BuildTask build_into(const Graph& g, const DfsTree& t, RangeIndex& out);

    const std::vector<Point>& points() const noexcept { return points_; }
    const WaveletTree& wavelet() const noexcept { return wavelet_; }

    // Point of the rectangle [x_lo, x_hi] x [y_lo, y_hi] with minimum x, ties
    // to minimum y.
    std::optional<Point> min_point(std::uint32_t x_lo, std::uint32_t x_hi, std::uint32_t y_lo,
                                   std::uint32_t y_hi, std::uint64_t* visits = nullptr) const;

private:
    std::vector<Point> points_;
    std::vector<std::uint32_t> x_begin_;  // points with x = c occupy [x_begin_[c], x_begin_[c+1])
    WaveletTree wavelet_;
};

inline RangeIndex build_range_index(const Graph& g, const DfsTree& t) { return RangeIndex(g, t); }

// Q(T(w), x, par(w)) as the minimum-x point of
// [first(x), first(w) - 1] x [first(w), last(w)]. Throws InvalidQuery unless
// x is a real proper ancestor of w.
QueryAnswer range_query(const RangeIndex& idx, const DfsTree& t, VertexId w, VertexId x,
                        std::uint64_t* visits = nullptr);

// Q(T(w), x, y) has the same answer as Q(T(w), x, par(w)); returns (w, x).
// Throws InvalidQuery unless x is an ancestor of y and T(w) hangs from
// path(x, y).
std::pair<VertexId, VertexId> reduce_query(const DfsTree& t, VertexId w, VertexId x, VertexId y);

class RangeEngine final : public QueryEngine {
public:
    RangeEngine(const Graph& g, const DfsTree& t) : QueryEngine(g, t) {}
    EngineKind kind() const noexcept override { return EngineKind::range; }

    const RangeIndex& index() const noexcept { return index_; }

    static BuildTask build(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out);
    static std::uint64_t build_bound(std::uint64_t n, std::uint64_t m);

protected:
    QueryAnswer answer(VertexId w, VertexId x, EngineStats& stats) const override;

private:
    RangeIndex index_;
};

}  // namespace incdfs

#endif /* incdfs_range_engine_hpp */
