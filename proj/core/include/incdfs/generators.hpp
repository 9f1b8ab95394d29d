#ifndef incdfs_generators_hpp
#define incdfs_generators_hpp

#include <cstddef>
#include <cstdint>
#include <vector>

#include "incdfs/graph.hpp"
#include "incdfs/update.hpp"

namespace incdfs::gen {

struct Workload {
    Graph graph;
    std::vector<Update> updates;
};

// Path 0 - 1 - ... - (n-1) and the single update joining its ends. Requires
// n >= 2.
Workload chain(std::size_t n);

/*
 * Handle 0 .. h-1 with h = n/2, and leaves h .. n-1 attached to the handle's
 * bottom r' = h-1, each with a back edge to 0. The update is (0, r').
 *
 * With `anchored`, vertex 0 is an extra isolated vertex and the broom takes
 * ids 1 .. n-1 (handle 1 .. h, back edges to 1); the update (0, r') then
 * makes the traversal enter the broom at r' and walk the handle upwards.
 * Requires n >= 4.
 */
Workload broom(std::size_t n, bool anchored = false);

/*
 * Every pair joined independently with probability p, then ceil(sqrt(n))
 * updates: one in eight appends a vertex, the rest join two distinct
 * current vertices. Deterministic per seed. Requires n >= 2 and p in [0, 1].
 */
Workload random(std::size_t n, double p, std::uint64_t seed);

}  // namespace incdfs::gen

#endif /* incdfs_generators_hpp */
