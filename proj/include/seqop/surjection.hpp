#pragma once
#include <vector>
#include <string>
#include <optional>
#include <algorithm>
#include <cctype>
#include "seqop/formal.hpp"

// Basis elements of the sequence operad: finite sequences f = (f(1)..f(n))
// with values in {1..k}.  A sequence is a basis element (nondegenerate) when
// it is surjective onto {1..k} and has no two equal adjacent entries.
// arity(f) = k, degree(f) = n - k.

namespace seqop {

using Seq = std::vector<int>;
using OpSum = Sum<Seq>;

inline int arity(const Seq& f) {
    int k = 0;
    for (int v : f) k = std::max(k, v);
    return k;
}

inline int degree(const Seq& f) { return (int)f.size() - arity(f); }

// nondegeneracy; pass k to also require surjectivity onto {1..k}.
// The empty sequence is the nondegenerate element of arity 0.
inline bool is_nondeg(const Seq& f, int k = -1) {
    if (k < 0) k = arity(f);
    if (f.empty()) return k == 0;
    std::vector<char> seen(k + 1, 0);
    for (size_t q = 0; q < f.size(); ++q) {
        if (f[q] < 1 || f[q] > k) return false;
        if (q > 0 && f[q] == f[q - 1]) return false;
        seen[f[q]] = 1;
    }
    for (int v = 1; v <= k; ++v)
        if (!seen[v]) return false;
    return true;
}

// occurrence counts: fib[v-1] = |f^{-1}(v)|
inline std::vector<int> fiber_sizes(const Seq& f, int k = -1) {
    if (k < 0) k = arity(f);
    std::vector<int> fib(k, 0);
    for (int v : f)
        if (v >= 1 && v <= k) fib[v - 1]++;
    return fib;
}

// positions (0-based) of value v
inline std::vector<int> fiber(const Seq& f, int v) {
    std::vector<int> pos;
    for (int q = 0; q < (int)f.size(); ++q)
        if (f[q] == v) pos.push_back(q);
    return pos;
}

// max over value pairs (u,v) of the number of alternations in the
// {u,v}-subsequence; (12) -> 1, (121) -> 2, (1212) -> 3
inline int complexity(const Seq& f) {
    int k = arity(f);
    int best = 0;
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) {
            int alt = 0, prev = 0;
            for (int x : f)
                if (x == u || x == v) {
                    if (prev != 0 && x != prev) alt++;
                    prev = x;
                }
            best = std::max(best, alt);
        }
    return best;
}

// all nondegenerate sequences of arity k with m entries
inline std::vector<Seq> all_nondeg(int k, int m) {
    std::vector<Seq> out;
    if (m < k) return out;
    Seq cur;
    std::function<void(int)> rec = [&](int depth) {
        if (depth == m) {
            if (is_nondeg(cur, k)) out.push_back(cur);
            return;
        }
        for (int v = 1; v <= k; ++v) {
            if (!cur.empty() && cur.back() == v) continue;
            cur.push_back(v);
            rec(depth + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// "(1 2 1 3 1)"; single-digit sequences may also be written "(12131)"
inline std::string show_seq(const Seq& f) {
    std::string s = "(";
    bool compact = true;
    for (int v : f)
        if (v > 9) compact = false;
    for (size_t q = 0; q < f.size(); ++q) {
        if (q && !compact) s += " ";
        s += std::to_string(f[q]);
    }
    return s + ")";
}

inline std::optional<Seq> parse_seq(const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && isspace((unsigned char)text[i])) i++; };
    skip();
    bool paren = (i < n && text[i] == '(');
    if (paren) i++;
    std::vector<int> nums;
    bool spaced = false;
    skip();
    size_t start = i;
    while (i < n && text[i] != ')') {
        if (isspace((unsigned char)text[i]) || text[i] == ',') {
            spaced = true;
            i++;
            continue;
        }
        if (!isdigit((unsigned char)text[i])) return std::nullopt;
        size_t j = i;
        while (j < n && isdigit((unsigned char)text[j])) j++;
        nums.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
    }
    if (paren) {
        if (i >= n || text[i] != ')') return std::nullopt;
        i++;
    }
    skip();
    if (i != n) return std::nullopt;
    if (nums.empty()) return std::nullopt;
    if (!spaced && nums.size() == 1 && text.size() - start > 1) {
        // compact digit form
        Seq f;
        for (size_t q = start; q < n && text[q] != ')'; ++q) {
            if (!isdigit((unsigned char)text[q])) return std::nullopt;
            f.push_back(text[q] - '0');
        }
        return f;
    }
    Seq f;
    for (int v : nums) {
        if (v < 1) return std::nullopt;
        f.push_back(v);
    }
    return f;
}

inline std::string show_opsum(const OpSum& a) {
    return show_sum<Seq>(a, [](const Seq& f) { return show_seq(f); });
}

}  // namespace seqop
