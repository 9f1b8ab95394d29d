#include "incdfs/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace incdfs::gen {

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

VertexId below(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<VertexId>(rng() % bound);
}

}  // namespace

Workload chain(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("chain: n must be at least 2");
    }
    Workload w{Graph(n), {}};
    for (std::size_t v = 0; v + 1 < n; ++v) {
        w.graph.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(v + 1));
    }
    w.updates.push_back(Update::edge(0, static_cast<VertexId>(n - 1)));
    return w;
}

Workload broom(std::size_t n, bool anchored) {
    if (n < 4) {
        throw std::invalid_argument("broom: n must be at least 4");
    }
    Workload w{Graph(n), {}};
    const auto first = static_cast<VertexId>(anchored ? 1 : 0);
    const auto bottom = static_cast<VertexId>(first + n / 2 - 1);
    for (VertexId v = first; v < bottom; ++v) {
        w.graph.add_edge(v, v + 1);
    }
    for (auto leaf = static_cast<VertexId>(bottom + 1); leaf < n; ++leaf) {
        w.graph.add_edge(bottom, leaf);
        w.graph.add_edge(leaf, first);
    }
    w.updates.push_back(Update::edge(0, bottom));
    return w;
}

Workload random(std::size_t n, double p, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("random: n must be at least 2");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("random: p must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    Workload w{Graph(n), {}};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (unit(rng) < p) {
                w.graph.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
            }
        }
    }
    const auto count = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::size_t current = n;
    for (std::size_t i = 0; i < count; ++i) {
        if (rng() % 8 == 0) {
            w.updates.push_back(Update::vertex());
            ++current;
            continue;
        }
        VertexId a = below(rng, current);
        VertexId b = below(rng, current - 1);
        if (b >= a) {
            ++b;
        }
        w.updates.push_back(Update::edge(a, b));
    }
    return w;
}

}  // namespace incdfs::gen
