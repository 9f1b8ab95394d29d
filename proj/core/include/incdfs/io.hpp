#ifndef incdfs_io_hpp
#define incdfs_io_hpp

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/update.hpp"

// Line-oriented text formats. Blank lines and lines starting with '#' are
// skipped by every parser.
//
//   graph:   "n m", then m lines "u v" (0-based ids)
//   updates: one per line, "E u v" or "V"
//   tree:    one line "v p" per vertex, p = -1 under the super root
namespace incdfs::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Graph read_graph(std::istream& in);
std::vector<Update> read_updates(std::istream& in);
// Parent array with n+1 entries, super root last.
std::vector<VertexId> read_tree(std::istream& in);

void write_graph(std::ostream& out, const Graph& g);
void write_updates(std::ostream& out, std::span<const Update> updates);
void write_tree(std::ostream& out, std::span<const VertexId> parents);
inline void write_tree(std::ostream& out, const DfsTree& t) { write_tree(out, t.parents()); }

/*
 * FNV-1a over the parents of vertices 0..n-1, each as a signed 64-bit
 * little-endian integer (-1 for the super root). Offset basis
 * 0xcbf29ce484222325, prime 0x100000001b3.
 */
std::uint64_t tree_digest(std::span<const VertexId> parents);
inline std::uint64_t tree_digest(const DfsTree& t) { return tree_digest(t.parents()); }

// 16 lowercase hex digits.
std::string format_digest(std::uint64_t digest);

}  // namespace incdfs::io

#endif /* incdfs_io_hpp */
