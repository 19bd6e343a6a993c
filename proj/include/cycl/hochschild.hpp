// The Hochschild differential b on cyclically composable suspended words and
// the truncated Hochschild homology.
//
// b applies mbar to every cyclically consecutive block. A block that stays
// inside the linear order contributes the Koszul sign of the letters before
// it; a block that wraps around is first rotated to the front, contributing
// the Koszul sign of that rotation, and the output letter lands in front of
// the surviving middle segment. Length never grows, so a length cutoff is an
// honest subcomplex; reliability flags account for words just above it.

#pragma once

#include <map>
#include <vector>

#include "cycl/bar.hpp"
#include "cycl/category.hpp"
#include "cycl/exactlin.hpp"
#include "cycl/word.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cycl {

template <class F>
WordSum<F> b_apply(const AInftyData<F>& data, const Word& w) {
    if (!data.cyclically_composable(w)) throw NotComposable("b_apply needs a cyclic word");
    WordSum<F> out;
    const int n = static_cast<int>(w.size());
    std::vector<int> prefix(n + 1, 0);  // prefix[i] = sdeg of w[0..i)
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + data.gen(w[i]).sdeg();
    Word block, res;
    // interior blocks
    for (int s = 0; s < n; ++s) {
        F sgn = sign_of<F>(prefix[s]);
        block.clear();
        for (int k = 1; s + k <= n && k <= data.max_arity; ++k) {
            block.push_back(w[s + k - 1]);
            for (const auto& [y, c] : data.mbar(block)) {
                res.clear();
                res.insert(res.end(), w.begin(), w.begin() + s);
                res.push_back(y);
                res.insert(res.end(), w.begin() + s + k, w.end());
                add_term(out, res, c * sgn);
            }
        }
    }
    // wrap-around blocks: (w_s..w_{n-1}, w_0..w_e) with e < s
    for (int s = 1; s < n; ++s) {
        int tail = prefix[n] - prefix[s];
        F rot = sign_of<F>(parity(tail) * parity(prefix[s]));
        block.assign(w.begin() + s, w.end());
        for (int e = 0; e < s; ++e) {
            block.push_back(w[e]);
            if (static_cast<int>(block.size()) > data.max_arity) break;
            for (const auto& [y, c] : data.mbar(block)) {
                res.clear();
                res.push_back(y);
                res.insert(res.end(), w.begin() + e + 1, w.begin() + s);
                add_term(out, res, c * rot);
            }
        }
    }
    return out;
}

struct HomologyTable {
    std::map<int, HomologyEntry> dims;
};

namespace detail {

// Columns of a degree-lowering differential, evaluated independently per
// basis word and merged in index order; the OpenMP and serial paths produce
// identical matrices.
template <class F, class Apply>
SparseMatrix<F> assemble_differential(const std::vector<Word>& domain,
                                      const std::map<Word, std::size_t>& codomain_index,
                                      Apply&& apply, bool parallel) {
    SparseMatrix<F> m(codomain_index.size(), domain.size());
    std::vector<std::vector<std::pair<std::size_t, F>>> cols(domain.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long j = 0; j < static_cast<long>(domain.size()); ++j) {
        std::map<std::size_t, F> col;
        apply(domain[j], col);
        cols[j].assign(col.begin(), col.end());
    }
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j]) m.entries[{i, j}] = v;
    return m;
}

}  // namespace detail

// Truncated Hochschild homology on the enumerated word space. A degree is
// reliable only when no word of length max_length + 1 exists in it or in the
// adjacent degrees (probed explicitly), and it is interior to the window.
template <class F>
HomologyTable hochschild_homology(const AInftyData<F>& data, const WordBounds& bounds,
                                  bool parallel = true) {
    WordSpace<F> space = enumerate_words(data, bounds);
    // b^2 = 0 word-by-word (exhaustive on the carrier)
    for (const auto& [d, words] : space.words_by_degree) {
        for (const Word& w : words) {
            WordSum<F> bb;
            for (const auto& [u, c] : b_apply(data, w))
                add_scaled(bb, b_apply(data, u), c);
            if (!bb.empty()) throw NotAComplex("b(b(w)) != 0 on a word of degree " +
                                               std::to_string(d));
        }
    }
    ChainComplexSlice<F> slice;
    slice.deg_lo = bounds.deg_lo;
    slice.deg_hi = bounds.deg_hi;
    std::map<int, std::map<Word, std::size_t>> index;
    for (const auto& [d, words] : space.words_by_degree) {
        slice.basis_sizes[d] = words.size();
        auto& ix = index[d];
        for (std::size_t i = 0; i < words.size(); ++i) ix[words[i]] = i;
    }
    for (const auto& [d, words] : space.words_by_degree) {
        auto target = index.find(d - 1);
        static const std::map<Word, std::size_t> no_target;
        const auto& tgt = target == index.end() ? no_target : target->second;
        slice.differentials[d] = detail::assemble_differential<F>(
            words, tgt,
            [&](const Word& w, std::map<std::size_t, F>& col) {
                for (const auto& [u, c] : b_apply(data, w)) {
                    auto it = tgt.find(u);
                    if (it != tgt.end()) add_term(col, it->second, c);
                }
            },
            parallel);
    }
    HomologyTable table;
    table.dims = homology_dims(slice);
    auto probe = degree_census_at_length(data, bounds.max_length + 1, bounds.deg_lo,
                                         bounds.deg_hi);
    for (auto& [d, entry] : table.dims) {
        for (int e = d - 1; e <= d + 1; ++e)
            if (probe.count(e)) entry.reliable = false;
    }
    return table;
}

}  // namespace cycl
