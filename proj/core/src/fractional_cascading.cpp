#include "incdfs/fractional_cascading.hpp"

#include <stdexcept>
#include <string>

namespace incdfs {

CascadeFamily::CascadeFamily(std::vector<std::vector<Key>> arrays) {
    build_into(std::move(arrays), *this).finish();
}

std::span<const CascadeFamily::Key> CascadeFamily::array(std::size_t i) const {
    return {keys_.data() + array_begin_[i], keys_.data() + array_begin_[i + 1]};
}

std::span<const CascadeFamily::Entry> CascadeFamily::augmented(std::size_t i) const {
    return {entries_.data() + list_begin_[i], entries_.data() + list_begin_[i + 1]};
}

// Every loop reports its elements in chunks so that a driver can interleave
// the build with other work at fine granularity.
BuildTask CascadeFamily::build_into(std::vector<std::vector<Key>> arrays, CascadeFamily& out) {
    constexpr std::uint64_t kChunk = 64;
    const std::size_t k = arrays.size();
    std::uint64_t pending = 0;

    out.keys_.clear();
    out.array_begin_.assign(1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = arrays[i];
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j > 0 && a[j] < a[j - 1]) {
                throw std::invalid_argument("build_cascade: array " + std::to_string(i) +
                                            " is not sorted");
            }
            out.keys_.push_back(a[j]);
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        out.array_begin_.push_back(out.keys_.size());
        ++pending;
    }

    // Lists are built back to front, then laid out front to back.
    std::vector<std::vector<Entry>> lists(k);
    for (std::size_t i = k; i-- > 0;) {
        const auto& orig = arrays[i];
        const std::vector<Entry>* next = i + 1 < k ? &lists[i + 1] : nullptr;
        const std::size_t next_real = next ? next->size() - 1 : 0;
        auto& list = lists[i];
        list.reserve(orig.size() + next_real / 2 + 1);

        // Merge orig with the odd positions of the next list; ties take the
        // original element first. lb and d are running lower bounds of the
        // current key in orig and in the next list.
        std::size_t a = 0;
        std::size_t s = 1;
        std::size_t lb = 0;
        std::size_t d = 0;
        while (a < orig.size() || s < next_real) {
            Key key;
            if (s >= next_real || (a < orig.size() && orig[a] <= (*next)[s].key)) {
                key = orig[a++];
            } else {
                key = (*next)[s].key;
                s += 2;
            }
            while (lb < orig.size() && orig[lb] < key) {
                ++lb;
            }
            while (d < next_real && (*next)[d].key < key) {
                ++d;
            }
            list.push_back(Entry{key, static_cast<std::uint32_t>(lb), static_cast<std::uint32_t>(d)});
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        list.push_back(Entry{kInfinity, static_cast<std::uint32_t>(orig.size()),
                             static_cast<std::uint32_t>(next_real)});
        ++pending;
    }

    out.entries_.clear();
    out.list_begin_.assign(1, 0);
    for (auto& list : lists) {
        for (const Entry& e : list) {
            out.entries_.push_back(e);
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        out.list_begin_.push_back(out.entries_.size());
    }
    co_yield pending;
}

void CascadeFamily::successor_positions(Key x, std::span<std::uint32_t> out,
                                        std::uint64_t* comparisons) const {
    const std::size_t k = array_count();
    if (k == 0) {
        return;
    }
    std::uint64_t cmp = 0;

    auto first = augmented(0);
    std::size_t lo = 0;
    std::size_t hi = first.size() - 1;  // sentinel position
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        ++cmp;
        if (first[mid].key < x) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    std::size_t p = lo;
    out[0] = first[p].orig;

    for (std::size_t i = 1; i < k; ++i) {
        auto prev = augmented(i - 1);
        auto cur = augmented(i);
        std::size_t q = prev[p].down;
        if (q > 0) {
            ++cmp;
            if (cur[q - 1].key >= x) {
                --q;
            }
        }
        p = q;
        out[i] = cur[p].orig;
    }
    if (comparisons) {
        *comparisons += cmp;
    }
}

std::vector<std::optional<CascadeFamily::Key>> CascadeFamily::query_all_successors(
    Key x, std::uint64_t* comparisons) const {
    const std::size_t k = array_count();
    std::vector<std::uint32_t> pos(k);
    successor_positions(x, pos, comparisons);
    std::vector<std::optional<Key>> result(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto a = array(i);
        if (pos[i] < a.size()) {
            result[i] = a[pos[i]];
        }
    }
    return result;
}

}  // namespace incdfs
