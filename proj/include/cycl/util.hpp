#pragma once

#include <map>

namespace cycl {

inline int parity(int d) { return ((d % 2) + 2) % 2; }

// Accumulate into a map-backed linear combination, dropping zeros.
template <class K, class F>
void add_term(std::map<K, F>& acc, const K& key, const F& val) {
    if (val.is_zero()) return;
    auto it = acc.find(key);
    if (it == acc.end()) {
        acc.emplace(key, val);
        return;
    }
    it->second += val;
    if (it->second.is_zero()) acc.erase(it);
}

template <class K, class F>
void add_scaled(std::map<K, F>& acc, const std::map<K, F>& src, const F& scale) {
    if (scale.is_zero()) return;
    for (const auto& [k, v] : src) add_term(acc, k, v * scale);
}

}  // namespace cycl
