// Brute-force oracles, deliberately independent of the library code paths
// they are used to check.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Every word of a N's and b E's whose interior points satisfy b*y > a*x,
// by filtering all step arrangements.
inline std::vector<std::string> brute_paths(long a, long b) {
    std::string word(a, 'N');
    word.append(b, 'E');
    std::sort(word.begin(), word.end());  // 'E' < 'N', next_permutation order
    std::vector<std::string> out;
    do {
        long x = 0, y = 0;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < word.size() && ok; ++i) {
            if (word[i] == 'N')
                ++y;
            else
                ++x;
            if (b * y <= a * x) ok = false;
        }
        if (ok) out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

// Number of maximal blocks of consecutive N's.
inline long runs_of_word(const std::string& w) {
    long runs = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 'N' && (i == 0 || w[i - 1] != 'N')) ++runs;
    return runs;
}

// Histogram of N-run lengths in front of each E step.
inline std::vector<long> runtype_of_word(const std::string& w, long a) {
    std::vector<long> counts(a + 1, 0);
    long run = 0;
    for (char c : w) {
        if (c == 'N') {
            ++run;
        } else {
            ++counts[run];
            run = 0;
        }
    }
    return counts;
}

// Gaussian binomial by the subset statistic: sum over k-subsets S of
// {0..m-1} of q^(sum_i (S_i - i)).
inline std::vector<long> gauss_binomial_coeffs(long m, long k) {
    std::vector<long> coeffs(std::max(1L, k * (m - k) + 1), 0);
    std::vector<int> idx(k);
    for (long i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
        long stat = 0;
        for (long i = 0; i < k; ++i) stat += idx[i] - i;
        coeffs[stat] += 1;
        long j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (long l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

// Crossing test straight from the definition: i < j < k < l with i ~ k in
// one block and j ~ l in another.
inline bool noncrossing_blocks(const std::vector<std::vector<int>>& blocks, long m) {
    std::vector<int> id(m + 1, -1);
    for (std::size_t t = 0; t < blocks.size(); ++t)
        for (int e : blocks[t]) id[e] = static_cast<int>(t);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l)
                    if (id[i] == id[k] && id[j] == id[l] && id[i] != id[j]) return true;
    return false;
}

// All perfect matchings of [2n], crossing ones included.
inline void matchings_rec(std::vector<int>& rest, std::vector<std::vector<int>>& cur,
                          std::vector<std::vector<std::vector<int>>>& out) {
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    int first = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
        std::vector<int> next;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
        cur.push_back({first, rest[i]});
        matchings_rec(next, cur, out);
        cur.pop_back();
    }
}

inline std::set<std::vector<std::vector<int>>> noncrossing_matchings(long n2) {
    std::vector<int> all;
    for (long i = 1; i <= n2; ++i) all.push_back(static_cast<int>(i));
    std::vector<std::vector<std::vector<int>>> raw;
    std::vector<std::vector<int>> cur;
    matchings_rec(all, cur, raw);
    std::set<std::vector<std::vector<int>>> out;
    for (auto& m : raw)
        if (!noncrossing_blocks(m, n2)) {
            for (auto& b : m) std::sort(b.begin(), b.end());
            std::sort(m.begin(), m.end());
            out.insert(m);
        }
    return out;
}

// All set partitions of [n] via restricted growth strings, crossing ones
// filtered out; blocks canonically sorted.
inline std::set<std::vector<std::vector<int>>> noncrossing_partitions(long n) {
    std::set<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(n, 0);
    std::function<void(long, int)> rec = [&](long i, int maxb) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(maxb + 1);
            for (long j = 0; j < n; ++j) blocks[rgs[j]].push_back(static_cast<int>(j) + 1);
            if (!noncrossing_blocks(blocks, n)) {
                std::sort(blocks.begin(), blocks.end());
                out.insert(blocks);
            }
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    rec(0, -1);
    return out;
}

}  // namespace oracle
