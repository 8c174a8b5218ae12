#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace permfib {

template <class Pred>
std::size_t count_permutations(int n, Pred pred, bool allow_large) {
    auto all = enumerate_symmetric_group(n, allow_large);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (n <= 1 || workers == 1) {
        std::size_t count = 0;
        for (const Permutation& p : all)
            if (pred(p)) ++count;
        return count;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    std::vector<std::size_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            // Worker w takes first letters w+1, w+1+workers, ...
            for (int first = static_cast<int>(w) + 1; first <= n; first += static_cast<int>(workers))
                for (const Permutation& p : SymmetricGroup(n, first))
                    if (pred(p)) ++partial[w];
        });
    }
    for (auto& t : pool) t.join();
    std::size_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

} // namespace permfib
