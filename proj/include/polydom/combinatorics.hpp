#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace polydom {

// Binomial coefficient, saturating at UINT64_MAX on overflow.
std::uint64_t binomial(int n, int k);

// Visit t-subsets of {0..n-1} as sorted index vectors in lexicographic
// order. The callback returns false to stop early.
template <typename Fn>
void for_each_combination(int n, int t, Fn&& fn) {
    if (t < 0 || t > n) return;
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    if (t == 0) {
        fn(idx);
        return;
    }
    while (true) {
        if (!fn(idx)) return;
        int i = t - 1;
        while (i >= 0 && idx[i] == n - t + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// The combination of rank `r` (lexicographic) among t-subsets of {0..n-1}.
std::vector<int> unrank_combination(int n, int t, std::uint64_t r);

// Advance a sorted combination to its lexicographic successor; false at end.
bool next_combination(std::vector<int>& idx, int n);

}  // namespace polydom
