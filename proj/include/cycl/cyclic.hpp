// The signed cyclic operator on suspended words, canonical rotation classes,
// the norm operator N, and the Connes cyclic complex (coinvariants of the
// Hochschild carrier) with its truncated homology.

#pragma once

#include <map>
#include <vector>

#include "cycl/hochschild.hpp"

namespace cycl {

// tbar moves the last letter to the front; the sign is the Koszul sign of
// carrying it past the rest.
template <class F>
std::pair<Word, int> t_bar(const AInftyData<F>& data, const Word& w) {
    Word r;
    r.reserve(w.size());
    r.push_back(w.back());
    r.insert(r.end(), w.begin(), w.end() - 1);
    int rest = data.word_sdeg(w) - data.gen(w.back()).sdeg();
    int sgn = (parity(data.gen(w.back()).sdeg()) * parity(rest)) % 2 ? -1 : 1;
    return {r, sgn};
}

// Unsuspended cyclic operator t_n with the (-1)^n factor (boundary
// convention; the internal representation never uses it).
template <class F>
std::pair<Word, int> t_unsuspended(const AInftyData<F>& data, const Word& w) {
    Word r;
    r.push_back(w.back());
    r.insert(r.end(), w.begin(), w.end() - 1);
    int n = static_cast<int>(w.size()) - 1;
    int rest = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) rest += data.gen(w[i]).deg;
    int e = n + data.gen(w.back()).deg * rest;
    return {r, parity(e) ? -1 : 1};
}

// Sign of the identification V^{x(n+1)} -> (Sigma V)^{x(n+1)},
// (-1)^{n|a_0| + (n-1)|a_1| + ... + |a_{n-1}|}.
template <class F>
int id_map_sign(const AInftyData<F>& data, const Word& w) {
    int n = static_cast<int>(w.size()) - 1;
    int e = 0;
    for (int i = 0; i < n; ++i) e += (n - i) * data.gen(w[i]).deg;
    return parity(e) ? -1 : 1;
}

struct CyclicClass {
    Word representative;       // lexicographically minimal rotation
    int sign_to_rep = 1;       // [w] = sign_to_rep * [representative]
    bool vanishes = false;     // some rotation maps the word to minus itself
    int stabilizer = 1;        // rotations fixing the word (all with sign +1)
};

template <class F>
CyclicClass canonicalize(const AInftyData<F>& data, const Word& w) {
    CyclicClass cls;
    std::map<Word, int> seen;
    Word cur = w;
    int sgn = 1;
    int stab = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto it = seen.find(cur);
        if (it != seen.end() && it->second != sgn) {
            cls.vanishes = true;
            cls.representative = w;
            return cls;
        }
        if (cur == w) ++stab;
        seen.emplace(cur, sgn);
        auto [next, s] = t_bar(data, cur);
        cur = std::move(next);
        sgn *= s;
    }
    if (cur == w && sgn == -1) {  // full cycle returned with sign -1
        cls.vanishes = true;
        cls.representative = w;
        return cls;
    }
    auto best = seen.begin();
    cls.representative = best->first;
    cls.sign_to_rep = best->second;
    cls.stabilizer = stab;
    return cls;
}

// N = 1 + tbar + ... + tbar^{L-1}; (1 - tbar) N = 0 identically.
template <class F>
WordSum<F> norm_N(const AInftyData<F>& data, const Word& w) {
    WordSum<F> out;
    Word cur = w;
    int sgn = 1;
    for (std::size_t k = 0; k < w.size(); ++k) {
        add_term(out, cur, sign_of<F>(sgn == -1 ? 1 : 0));
        auto [next, s] = t_bar(data, cur);
        cur = std::move(next);
        sgn *= s;
    }
    return out;
}

// Linear combination of classes, keyed by canonical representative.
template <class F>
using ClassSum = std::map<Word, F>;

template <class F>
void add_class_term(const AInftyData<F>& data, ClassSum<F>& acc, const Word& w, const F& c) {
    if (c.is_zero()) return;
    CyclicClass cls = canonicalize(data, w);
    if (cls.vanishes) return;
    add_term(acc, cls.representative, cls.sign_to_rep == 1 ? c : -c);
}

template <class F>
ClassSum<F> class_project(const AInftyData<F>& data, const WordSum<F>& ws) {
    ClassSum<F> out;
    for (const auto& [w, c] : ws) add_class_term(data, out, w, c);
    return out;
}

// The Connes cyclic complex on canonical classes, with the induced b.
template <class F>
struct ConnesComplex {
    WordBounds bounds;
    std::map<int, std::vector<Word>> classes_by_degree;       // representatives
    std::map<Word, std::pair<int, std::size_t>> index;        // rep -> (deg, position)
    std::map<Word, int> stabilizer;                           // rep -> order
    ChainComplexSlice<F> slice;

    bool has_class(const Word& rep) const { return index.count(rep) != 0; }
};

template <class F>
ConnesComplex<F> build_connes(const AInftyData<F>& data, const WordBounds& bounds,
                              bool parallel = true, bool check_well_defined = true) {
    WordSpace<F> space = enumerate_words(data, bounds);
    ConnesComplex<F> cx;
    cx.bounds = bounds;
    cx.slice.deg_lo = bounds.deg_lo;
    cx.slice.deg_hi = bounds.deg_hi;
    for (const auto& [d, words] : space.words_by_degree) {
        auto& reps = cx.classes_by_degree[d];
        for (const Word& w : words) {
            CyclicClass cls = canonicalize(data, w);
            if (cls.vanishes || cls.representative != w) continue;  // keep each rep once
            cx.index[w] = {d, reps.size()};
            cx.stabilizer[w] = cls.stabilizer;
            reps.push_back(w);
        }
        cx.slice.basis_sizes[d] = reps.size();
    }
    if (check_well_defined) {
        for (const auto& [d, words] : space.words_by_degree) {
            for (const Word& w : words) {
                ClassSum<F> bw = class_project(data, b_apply(data, w));
                auto [tw, s] = t_bar(data, w);
                ClassSum<F> btw = class_project(data, b_apply(data, tw));
                for (auto& [k, v] : btw) v *= sign_of<F>(s == -1 ? 1 : 0);
                if (bw != btw)
                    throw NotWellDefinedOnClasses("b does not descend at degree " +
                                                  std::to_string(d));
            }
        }
    }
    for (const auto& [d, reps] : cx.classes_by_degree) {
        std::map<Word, std::size_t> tgt;
        auto it = cx.classes_by_degree.find(d - 1);
        if (it != cx.classes_by_degree.end())
            for (std::size_t i = 0; i < it->second.size(); ++i) tgt[it->second[i]] = i;
        cx.slice.differentials[d] = detail::assemble_differential<F>(
            reps, tgt,
            [&](const Word& w, std::map<std::size_t, F>& col) {
                for (const auto& [u, c] : class_project(data, b_apply(data, w))) {
                    auto jt = tgt.find(u);
                    if (jt != tgt.end()) add_term(col, jt->second, c);
                }
            },
            parallel);
    }
    return cx;
}

template <class F>
HomologyTable connes_homology(const AInftyData<F>& data, const WordBounds& bounds,
                              bool parallel = true) {
    ConnesComplex<F> cx = build_connes(data, bounds, parallel);
    HomologyTable table;
    table.dims = homology_dims(cx.slice);
    auto probe = degree_census_at_length(data, bounds.max_length + 1, bounds.deg_lo,
                                         bounds.deg_hi);
    for (auto& [d, entry] : table.dims) {
        for (int e = d - 1; e <= d + 1; ++e)
            if (probe.count(e)) entry.reliable = false;
    }
    return table;
}

// True iff the functional takes equal values along every signed tbar orbit
// in the space.
template <class F>
bool cochain_is_cyclic(const AInftyData<F>& data, const WordSum<F>& f,
                       const WordSpace<F>& space) {
    auto value = [&](const Word& w) {
        auto it = f.find(w);
        return it == f.end() ? F::zero() : it->second;
    };
    for (const auto& [d, words] : space.words_by_degree) {
        for (const Word& w : words) {
            auto [tw, s] = t_bar(data, w);
            F rhs = value(tw) * sign_of<F>(s == -1 ? 1 : 0);
            if (!(value(w) == rhs)) return false;
        }
    }
    return true;
}

}  // namespace cycl
