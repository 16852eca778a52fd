#include <gtest/gtest.h>

#include <thread>

#include "paircount/counting.hpp"
#include "paircount/oracle.hpp"

using namespace paircount;

TEST(Concurrency, SharedCacheMatchesIsolatedEvaluation) {
    std::vector<Count> expected;
    for (int n = 20; n < 60; ++n) expected.push_back(z_auto(n, n / 4, n / 5));

    MemoCache shared;
    std::vector<std::vector<Count>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (int n = 20; n < 60; ++n) {
                results[static_cast<std::size_t>(t)].push_back(t % 2 == 0 ? z_recur_split(n, n / 4, n / 5, shared)
                                                                           : z_recur_firstone(n, n / 4, n / 5, shared));
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& r : results) EXPECT_EQ(r, expected);
}

TEST(Concurrency, HistogramsBuiltOnceAcrossThreads) {
    std::vector<std::shared_ptr<const ProfileHistogram>> seen(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) {
        threads.emplace_back([&, t] { seen[t] = linear_histogram(17); });
    }
    for (auto& th : threads) th.join();
    for (const auto& h : seen) {
        EXPECT_EQ(h.get(), seen.front().get());
        EXPECT_EQ(h->total(), 1ULL << 16);
    }
}
