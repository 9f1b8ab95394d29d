#include "incdfs/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace incdfs::io {

namespace {

// Yields the whitespace-separated tokens of each meaningful line.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            std::istringstream fields(line);
            tokens.clear();
            for (std::string tok; fields >> tok;) {
                tokens.push_back(std::move(tok));
            }
            if (tokens.empty() || tokens.front().front() == '#') {
                continue;
            }
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

template <class Int>
Int to_int(const std::string& tok, std::size_t line, const char* what) {
    Int value{};
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    }
    return value;
}

VertexId to_vertex(const std::string& tok, std::size_t line) {
    auto v = to_int<std::uint64_t>(tok, line, "vertex id");
    if (v >= kNoVertex) {
        throw ParseError(line, "vertex id '" + tok + "' out of range");
    }
    return static_cast<VertexId>(v);
}

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok)) {
        throw ParseError(reader.line(), "missing header 'n m'");
    }
    if (tok.size() != 2) {
        throw ParseError(reader.line(), "header must be 'n m'");
    }
    const auto n = to_int<std::uint64_t>(tok[0], reader.line(), "vertex count");
    const auto m = to_int<std::uint64_t>(tok[1], reader.line(), "edge count");
    if (n >= kNoVertex) {
        throw ParseError(reader.line(), "vertex count too large");
    }
    Graph g(n);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!reader.next(tok)) {
            throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " +
                                                std::to_string(i));
        }
        if (tok.size() != 2) {
            throw ParseError(reader.line(), "edge line must be 'u v'");
        }
        const VertexId u = to_vertex(tok[0], reader.line());
        const VertexId v = to_vertex(tok[1], reader.line());
        if (u >= n || v >= n) {
            throw ParseError(reader.line(), "edge endpoint outside 0.." + std::to_string(n));
        }
        if (u == v) {
            throw ParseError(reader.line(), "self-loop at vertex " + std::to_string(u));
        }
        g.add_edge(u, v);
    }
    if (reader.next(tok)) {
        throw ParseError(reader.line(), "more edge lines than the header declares");
    }
    return g;
}

std::vector<Update> read_updates(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;
    std::vector<Update> out;
    while (reader.next(tok)) {
        if (tok[0] == "V" && tok.size() == 1) {
            out.push_back(Update::vertex());
        } else if (tok[0] == "E" && tok.size() == 3) {
            out.push_back(Update::edge(to_vertex(tok[1], reader.line()),
                                       to_vertex(tok[2], reader.line())));
        } else {
            throw ParseError(reader.line(), "update must be 'E u v' or 'V'");
        }
    }
    return out;
}

std::vector<VertexId> read_tree(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;
    std::vector<std::pair<VertexId, std::int64_t>> rows;
    std::vector<std::size_t> lines;
    while (reader.next(tok)) {
        if (tok.size() != 2) {
            throw ParseError(reader.line(), "tree line must be 'v p'");
        }
        rows.emplace_back(to_vertex(tok[0], reader.line()),
                          to_int<std::int64_t>(tok[1], reader.line(), "parent id"));
        lines.push_back(reader.line());
    }
    const std::size_t n = rows.size();
    std::vector<VertexId> parents(n + 1, kNoVertex);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto [v, p] = rows[i];
        if (v >= n || seen[v]) {
            throw ParseError(lines[i], "vertex " + std::to_string(v) +
                                           " repeated or outside 0.." + std::to_string(n));
        }
        if (p < -1 || p >= static_cast<std::int64_t>(n)) {
            throw ParseError(lines[i], "parent " + std::to_string(p) + " out of range");
        }
        seen[v] = true;
        parents[v] = p == -1 ? static_cast<VertexId>(n) : static_cast<VertexId>(p);
    }
    return parents;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_updates(std::ostream& out, std::span<const Update> updates) {
    for (const Update& up : updates) {
        if (up.kind == UpdateKind::vertex) {
            out << "V\n";
        } else {
            out << "E " << up.u << ' ' << up.v << '\n';
        }
    }
}

void write_tree(std::ostream& out, std::span<const VertexId> parents) {
    const std::size_t n = parents.empty() ? 0 : parents.size() - 1;
    for (std::size_t v = 0; v < n; ++v) {
        out << v << ' ';
        if (parents[v] == n) {
            out << "-1";
        } else {
            out << parents[v];
        }
        out << '\n';
    }
}

std::uint64_t tree_digest(std::span<const VertexId> parents) {
    const std::size_t n = parents.empty() ? 0 : parents.size() - 1;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t v = 0; v < n; ++v) {
        const std::int64_t p = parents[v] == n ? -1 : static_cast<std::int64_t>(parents[v]);
        auto bits = static_cast<std::uint64_t>(p);
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (bits >> (8 * byte)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

std::string format_digest(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

}  // namespace incdfs::io
