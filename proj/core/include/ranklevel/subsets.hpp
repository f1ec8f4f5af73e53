#pragma once

#include <vector>

namespace ranklevel {

// k-subsets of {0, ..., n-1} in lexicographic order via combinatorial
// succession; calls f(subset) for each.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = i;
    while (true) {
        f(static_cast<const std::vector<int>&>(s));
        int i = k - 1;
        while (i >= 0 && s[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++s[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
    }
}

inline std::vector<int> complement_in(int n, const std::vector<int>& s) {
    std::vector<bool> in(static_cast<size_t>(n), false);
    for (int x : s) in[static_cast<size_t>(x)] = true;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - s.size());
    for (int x = 0; x < n; ++x)
        if (!in[static_cast<size_t>(x)]) out.push_back(x);
    return out;
}

inline unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<unsigned long long>(n - k + i) / i;
    return b;
}

}  // namespace ranklevel
