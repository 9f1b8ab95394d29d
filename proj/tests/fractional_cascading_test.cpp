#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "incdfs/fractional_cascading.hpp"

namespace incdfs {
namespace {

using Key = CascadeFamily::Key;
using testing::Rng;

std::vector<std::vector<Key>> random_family(Rng& rng) {
    const std::size_t k = testing::uniform(rng, 1, 12);
    const std::size_t span = testing::uniform(rng, 1, 200);
    std::vector<std::vector<Key>> arrays(k);
    for (auto& a : arrays) {
        a.resize(testing::uniform(rng, 0, 40));
        for (auto& x : a) {
            x = static_cast<Key>(testing::uniform(rng, 0, span));
        }
        std::sort(a.begin(), a.end());
    }
    return arrays;
}

std::size_t total_size(const std::vector<std::vector<Key>>& arrays) {
    std::size_t m = 0;
    for (const auto& a : arrays) {
        m += a.size();
    }
    return m;
}

TEST(Cascade, SmallExample) {
    auto f = build_cascade({{1, 5, 9}, {2, 3, 7}});
    EXPECT_LE(f.augmented_size(), 12u);
    EXPECT_EQ(f.original_size(), 6u);
    auto hit = f.query_all_successors(4);
    ASSERT_EQ(hit.size(), 2u);
    EXPECT_EQ(hit[0], Key{5});
    EXPECT_EQ(hit[1], Key{7});
    auto miss = f.query_all_successors(10);
    EXPECT_FALSE(miss[0].has_value());
    EXPECT_FALSE(miss[1].has_value());
    auto low = f.query_all_successors(-3);
    EXPECT_EQ(low[0], Key{1});
    EXPECT_EQ(low[1], Key{2});
}

TEST(Cascade, EmptyArray) {
    auto f = build_cascade({{}});
    EXPECT_EQ(f.array_count(), 1u);
    EXPECT_EQ(f.augmented_size(), 0u);
    auto hit = f.query_all_successors(0);
    ASSERT_EQ(hit.size(), 1u);
    EXPECT_FALSE(hit[0].has_value());
}

TEST(Cascade, NoArrays) {
    CascadeFamily f = build_cascade({});
    EXPECT_EQ(f.array_count(), 0u);
    EXPECT_TRUE(f.query_all_successors(1).empty());
}

TEST(Cascade, RejectsUnsorted) {
    EXPECT_THROW(build_cascade({{1, 2}, {3, 1}}), std::invalid_argument);
}

TEST(Cascade, DuplicatesKeepFirstPosition) {
    auto f = build_cascade({{2, 2, 2}, {1, 2, 2, 3}});
    std::vector<std::uint32_t> pos(2);
    f.successor_positions(2, pos);
    EXPECT_EQ(pos[0], 0u);
    EXPECT_EQ(pos[1], 1u);
}

TEST(Cascade, BridgeInvariants) {
    Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        auto arrays = random_family(rng);
        auto f = build_cascade(arrays);
        ASSERT_EQ(f.array_count(), arrays.size());
        ASSERT_LE(f.augmented_size(), 2 * total_size(arrays));
        for (std::size_t i = 0; i < arrays.size(); ++i) {
            ASSERT_TRUE(std::ranges::equal(f.array(i), arrays[i]));
            auto list = f.augmented(i);
            ASSERT_FALSE(list.empty());
            ASSERT_EQ(list.back().key, CascadeFamily::kInfinity);
            for (std::size_t p = 0; p < list.size(); ++p) {
                const auto& e = list[p];
                if (p > 0) {
                    ASSERT_LE(list[p - 1].key, e.key);
                }
                if (e.key == CascadeFamily::kInfinity) {
                    ASSERT_EQ(e.orig, arrays[i].size());
                    continue;
                }
                auto lb = std::lower_bound(arrays[i].begin(), arrays[i].end(), e.key);
                ASSERT_EQ(e.orig, static_cast<std::uint32_t>(lb - arrays[i].begin()));
                if (i + 1 < arrays.size()) {
                    auto next = f.augmented(i + 1);
                    auto d = std::partition_point(next.begin(), next.end(),
                                                  [&](const auto& x) { return x.key < e.key; });
                    ASSERT_EQ(e.down, static_cast<std::uint32_t>(d - next.begin()));
                }
            }
        }
    }
}

TEST(Cascade, MatchesBinarySearchWithinComparisonBound) {
    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        auto arrays = random_family(rng);
        auto f = build_cascade(arrays);
        const std::size_t m = total_size(arrays);
        const std::uint64_t bound = 4 * (arrays.size() + ceil_log2(m + 2));
        for (int q = 0; q < 10; ++q) {
            const auto x = static_cast<Key>(testing::uniform(rng, 0, 220)) - 10;
            std::uint64_t comparisons = 0;
            auto got = f.query_all_successors(x, &comparisons);
            ASSERT_LE(comparisons, bound);
            for (std::size_t i = 0; i < arrays.size(); ++i) {
                auto lb = std::lower_bound(arrays[i].begin(), arrays[i].end(), x);
                std::optional<Key> expected;
                if (lb != arrays[i].end()) {
                    expected = *lb;
                }
                ASSERT_EQ(got[i], expected) << "trial " << trial << " array " << i;
            }
        }
    }
}

TEST(Cascade, ResumableBuildMatchesEager) {
    Rng rng(43);
    auto arrays = random_family(rng);
    CascadeFamily out;
    auto task = CascadeFamily::build_into(arrays, out);
    task.finish();
    auto eager = build_cascade(arrays);
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        auto a = out.augmented(i);
        auto b = eager.augmented(i);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t p = 0; p < a.size(); ++p) {
            ASSERT_EQ(a[p].key, b[p].key);
            ASSERT_EQ(a[p].down, b[p].down);
        }
    }
}

}  // namespace
}  // namespace incdfs
