#include "incdfs/wavelet_tree.hpp"

#include <algorithm>
#include <bit>

namespace incdfs {

WaveletTree::WaveletTree(std::vector<std::uint32_t> values) {
    build_into(std::move(values), *this).finish();
}

BuildTask WaveletTree::build_into(std::vector<std::uint32_t> values, WaveletTree& out) {
    constexpr std::uint64_t kChunk = 64;
    const std::size_t n = values.size();
    std::uint64_t pending = 0;
    std::uint32_t max_value = 0;
    out.leaf_origin_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        max_value = std::max(max_value, values[i]);
        out.leaf_origin_[i] = static_cast<std::uint32_t>(i);
        if (++pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }
    out.size_ = n;
    out.depth_ = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::bit_width(max_value)));
    out.ones_.assign(out.depth_, {});

    std::vector<std::uint32_t> next(n);
    std::vector<std::uint32_t> next_origin(n);
    std::vector<std::size_t> node_begin;
    for (std::uint32_t level = 0; level < out.depth_; ++level) {
        const std::uint32_t bit = out.depth_ - 1 - level;
        auto& ones = out.ones_[level];
        ones.assign(n + 1, 0);
        node_begin.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == 0 || (values[i] >> bit >> 1) != (values[i - 1] >> bit >> 1)) {
                node_begin.push_back(i);
            }
            ones[i + 1] = ones[i] + ((values[i] >> bit) & 1u);
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        node_begin.push_back(n);
        for (std::size_t s = 0; s + 1 < node_begin.size(); ++s) {
            const std::size_t b = node_begin[s];
            const std::size_t e = node_begin[s + 1];
            std::size_t z = b;
            std::size_t o = b + (e - b) - (ones[e] - ones[b]);
            for (std::size_t i = b; i < e; ++i) {
                if ((values[i] >> bit) & 1u) {
                    next[o] = values[i];
                    next_origin[o++] = out.leaf_origin_[i];
                } else {
                    next[z] = values[i];
                    next_origin[z++] = out.leaf_origin_[i];
                }
                if (++pending >= kChunk) {
                    co_yield pending;
                    pending = 0;
                }
            }
        }
        values.swap(next);
        out.leaf_origin_.swap(next_origin);
        ++pending;
    }
    co_yield pending;
}

std::uint32_t WaveletTree::access(std::size_t i) const {
    std::size_t b = 0;
    std::size_t e = size_;
    std::uint32_t value = 0;
    for (std::uint32_t level = 0; level < depth_; ++level) {
        const auto& ones = ones_[level];
        const std::size_t zeros = (e - b) - (ones[e] - ones[b]);
        const bool one = ones[i + 1] != ones[i];
        value = (value << 1) | (one ? 1u : 0u);
        if (one) {
            i = b + zeros + (ones[i] - ones[b]);
            b += zeros;
        } else {
            i = b + (i - b) - (ones[i] - ones[b]);
            e = b + zeros;
        }
    }
    return value;
}

std::vector<std::uint32_t> WaveletTree::reconstruct() const {
    std::vector<std::uint32_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out[i] = access(i);
    }
    return out;
}

std::optional<WaveletTree::Hit> WaveletTree::range_min_value(std::size_t l, std::size_t r,
                                                             std::uint32_t lo, std::uint32_t hi,
                                                             std::uint64_t* visits) const {
    std::uint64_t count = 0;
    std::optional<Hit> hit;
    if (l < r && r <= size_ && lo <= hi) {
        hit = descend(0, 0, size_, l, r, 0, lo, hi, count);
    }
    if (visits) {
        *visits += count;
    }
    return hit;
}

std::optional<WaveletTree::Hit> WaveletTree::descend(std::uint32_t level, std::size_t b,
                                                     std::size_t e, std::size_t l, std::size_t r,
                                                     std::uint64_t prefix, std::uint32_t lo,
                                                     std::uint32_t hi, std::uint64_t& visits) const {
    if (l >= r) {
        return std::nullopt;
    }
    const std::uint32_t shift = depth_ - level;
    const std::uint64_t node_lo = prefix << shift;
    const std::uint64_t node_hi = ((prefix + 1) << shift) - 1;
    if (node_hi < lo || node_lo > hi) {
        return std::nullopt;
    }
    if (level == depth_) {
        return Hit{leaf_origin_[l], static_cast<std::uint32_t>(prefix)};
    }
    ++visits;
    const auto& ones = ones_[level];
    const std::size_t zeros = (e - b) - (ones[e] - ones[b]);
    const std::size_t zl = (l - b) - (ones[l] - ones[b]);
    const std::size_t zr = (r - b) - (ones[r] - ones[b]);
    if (auto left = descend(level + 1, b, b + zeros, b + zl, b + zr, prefix << 1, lo, hi, visits)) {
        return left;
    }
    const std::size_t mid = b + zeros;
    return descend(level + 1, mid, e, mid + (ones[l] - ones[b]), mid + (ones[r] - ones[b]),
                   (prefix << 1) | 1u, lo, hi, visits);
}

}  // namespace incdfs
