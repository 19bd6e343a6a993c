// Enumeration of cyclically composable words: the finite carrier for the
// Hochschild and Connes complexes.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cycl/category.hpp"

namespace cycl {

struct WordBounds {
    int max_length = 1;
    int deg_lo = 0, deg_hi = 0;      // inclusive suspended-degree window
    std::size_t cap = 2'000'000;     // explosion guard
};

template <class F>
struct WordSpace {
    WordBounds bounds;
    std::map<int, std::vector<Word>> words_by_degree;  // ordered by (length, lex)
    std::size_t total = 0;

    const std::vector<Word>& at(int deg) const {
        static const std::vector<Word> empty;
        auto it = words_by_degree.find(deg);
        return it == words_by_degree.end() ? empty : it->second;
    }
};

namespace detail {

template <class F, class Sink>
void enumerate_cyclic_words(const AInftyData<F>& data, int exact_length,
                            std::size_t cap, std::size_t& explored, Sink&& sink) {
    Word cur;
    auto recurse = [&](auto&& self) -> void {
        if (++explored > cap)
            throw ExplosionGuard("word enumeration exceeded cap of " + std::to_string(cap));
        if (static_cast<int>(cur.size()) == exact_length) {
            if (data.gen(cur.back()).tgt == data.gen(cur.front()).src) sink(cur);
            return;
        }
        ObjectId from = data.gen(cur.back()).tgt;
        for (GenId g = 0; g < data.basis().size(); ++g) {
            if (data.gen(g).src != from) continue;
            cur.push_back(g);
            self(self);
            cur.pop_back();
        }
    };
    for (GenId g = 0; g < data.basis().size(); ++g) {
        cur.assign(1, g);
        if (exact_length == 1) {
            if (data.gen(g).tgt == data.gen(g).src) sink(cur);
            ++explored;
        } else {
            recurse(recurse);
        }
    }
}

}  // namespace detail

// Every cyclically composable word with length <= max_length and suspended
// degree inside the window, each exactly once, in deterministic order.
template <class F>
WordSpace<F> enumerate_words(const AInftyData<F>& data, const WordBounds& bounds) {
    if (bounds.max_length < 1) throw std::runtime_error("max_length must be >= 1");
    WordSpace<F> space;
    space.bounds = bounds;
    std::size_t explored = 0;
    for (int len = 1; len <= bounds.max_length; ++len) {
        detail::enumerate_cyclic_words(data, len, bounds.cap, explored, [&](const Word& w) {
            int d = data.word_sdeg(w);
            if (d < bounds.deg_lo || d > bounds.deg_hi) return;
            space.words_by_degree[d].push_back(w);
            if (++space.total > bounds.cap)
                throw ExplosionGuard("word space exceeded cap of " + std::to_string(bounds.cap));
        });
    }
    return space;
}

// Degrees that see any word of the given exact length inside the window;
// used for truncation-reliability probes.
template <class F>
std::map<int, std::size_t> degree_census_at_length(const AInftyData<F>& data, int length,
                                                   int deg_lo, int deg_hi,
                                                   std::size_t cap = 8'000'000) {
    std::map<int, std::size_t> censo;
    std::size_t explored = 0;
    detail::enumerate_cyclic_words(data, length, cap, explored, [&](const Word& w) {
        int d = data.word_sdeg(w);
        if (d < deg_lo || d > deg_hi) return;
        ++censo[d];
    });
    return censo;
}

}  // namespace cycl
