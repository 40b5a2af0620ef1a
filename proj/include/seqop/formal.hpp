#pragma once
#include <map>
#include <string>
#include <sstream>
#include <functional>

// Sparse formal sums with integer coefficients over an arbitrary ordered
// basis key.  All algebra in this library is computed over Z; working mod p
// is done by reducing coefficients afterwards, so a single representation
// serves both rings.

namespace seqop {

template <class K>
using Sum = std::map<K, long long>;

template <class K>
inline void add_term(Sum<K>& a, const K& k, long long c) {
    if (c == 0) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

template <class K>
inline void add(Sum<K>& a, const Sum<K>& b, long long scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : b) add_term(a, k, scale * c);
}

template <class K>
inline Sum<K> scaled(const Sum<K>& a, long long scale) {
    Sum<K> r;
    add(r, a, scale);
    return r;
}

// apply a basis-wise linear map K -> Sum<K2>
template <class K2, class K, class F>
inline Sum<K2> mapped(const Sum<K>& a, F op) {
    Sum<K2> r;
    for (const auto& [k, c] : a) add(r, op(k), c);
    return r;
}

inline long long mod(long long c, long long p) {
    if (p == 0) return c;
    c %= p;
    if (c < 0) c += p;
    return c;
}

template <class K>
inline Sum<K> reduced(const Sum<K>& a, long long p) {
    if (p == 0) return a;
    Sum<K> r;
    for (const auto& [k, c] : a) add_term(r, k, mod(c, p));
    return r;
}

// equality of sums as elements over Z (p = 0) or Z/p
template <class K>
inline bool eq_mod(const Sum<K>& a, const Sum<K>& b, long long p = 0) {
    if (p == 0) return a == b;
    Sum<K> d = a;
    add(d, b, -1);
    for (const auto& [k, c] : d)
        if (mod(c, p) != 0) return false;
    return true;
}

template <class K>
inline bool is_zero(const Sum<K>& a, long long p = 0) {
    return eq_mod(a, Sum<K>{}, p);
}

inline long long sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// render "c1*key1 + c2*key2"; show(key) supplies the basis notation
template <class K>
inline std::string show_sum(const Sum<K>& a,
                            const std::function<std::string(const K&)>& show) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a) {
        long long v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (v != 1) os << v << "*";
        os << show(k);
        first = false;
    }
    return os.str();
}

}  // namespace seqop
