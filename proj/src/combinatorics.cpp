#include "polydom/combinatorics.hpp"

#include <limits>

namespace polydom {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<int> unrank_combination(int n, int t, std::uint64_t r) {
    std::vector<int> idx(t);
    int next = 0;
    for (int slot = 0; slot < t; ++slot) {
        for (int v = next;; ++v) {
            std::uint64_t block = binomial(n - 1 - v, t - 1 - slot);
            if (r < block) {
                idx[slot] = v;
                next = v + 1;
                break;
            }
            r -= block;
        }
    }
    return idx;
}

bool next_combination(std::vector<int>& idx, int n) {
    const int t = static_cast<int>(idx.size());
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

}  // namespace polydom
