// Bar-construction operations: the suspension sign dictionary between m_i and
// mbar_i, the coderivation extension of mbar to tensor words, and the
// A-infinity relation verifier.
//
// Suspended form of the relations: for every composable tuple,
//   sum over blocks  (-1)^{|a_1|+...+|a_s|} mbar(prefix, mbar(block), suffix) = 0
// with suspended degrees in the exponent; no other signs appear.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cycl/category.hpp"
#include "cycl/report.hpp"
#include "cycl/util.hpp"

namespace cycl {

template <class F>
using WordSum = std::map<Word, F>;

// Sign exponent (i-1)|a_1| + (i-2)|a_2| + ... + |a_{i-1}| relating m_i and
// mbar_i, with suspended degrees. Applying it twice is the identity.
template <class F>
int desuspension_exponent(const AInftyData<F>& data, const Word& inputs) {
    int e = 0;
    int i = static_cast<int>(inputs.size());
    for (int j = 0; j + 1 < i; ++j) e += (i - 1 - j) * data.gen(inputs[j]).sdeg();
    return e;
}

// Converts one raw coefficient of m_i into the suspended convention.
// pre: the raw coefficient is degree homogeneous for |m_i| = i - 2.
template <class F>
F desuspend_convert(const AInftyData<F>& data, const Word& inputs, GenId output,
                    const F& raw_coeff) {
    int in_deg = 0;
    for (GenId g : inputs) in_deg += data.gen(g).deg;
    int arity = static_cast<int>(inputs.size());
    if (data.gen(output).deg != in_deg + arity - 2)
        throw DegreeMismatch(data.describe(inputs, output));
    return sign_of<F>(desuspension_exponent(data, inputs)) * raw_coeff;
}

// Coderivation extension of mbar to a composable (non-cyclic) word: apply
// each stored operation to every consecutive block, Koszul sign from the
// letters passed over.
template <class F>
WordSum<F> bar_apply(const AInftyData<F>& data, const Word& w) {
    if (!data.composable(w)) throw NotComposable("bar_apply on non-composable word");
    WordSum<F> out;
    const std::size_t n = w.size();
    int prefix_sdeg = 0;
    Word block;
    for (std::size_t s = 0; s < n; ++s) {
        F sgn = sign_of<F>(prefix_sdeg);
        block.clear();
        for (std::size_t k = 1; s + k <= n && static_cast<int>(k) <= data.max_arity; ++k) {
            block.push_back(w[s + k - 1]);
            for (const auto& [y, c] : data.mbar(block)) {
                Word res;
                res.reserve(n - k + 1);
                res.insert(res.end(), w.begin(), w.begin() + s);
                res.push_back(y);
                res.insert(res.end(), w.begin() + s + k, w.end());
                add_term(out, res, c * sgn);
            }
        }
        prefix_sdeg += data.gen(w[s]).sdeg();
    }
    return out;
}

template <class F>
void check_tuple(const AInftyData<F>& data, const Word& w, VerificationReport& rep) {
    const std::size_t n = w.size();
    std::map<GenId, F> residual;
    int prefix_sdeg = 0;
    for (std::size_t s = 0; s < n; ++s) {
        F sgn = sign_of<F>(prefix_sdeg);
        Word block;
        for (std::size_t k = 1; s + k <= n && static_cast<int>(k) <= data.max_arity; ++k) {
            block.push_back(w[s + k - 1]);
            for (const auto& [y, c] : data.mbar(block)) {
                Word outer;
                outer.reserve(n - k + 1);
                outer.insert(outer.end(), w.begin(), w.begin() + s);
                outer.push_back(y);
                outer.insert(outer.end(), w.begin() + s + k, w.end());
                if (static_cast<int>(outer.size()) > data.max_arity) continue;
                for (const auto& [z, c2] : data.mbar(outer))
                    add_term(residual, z, c * c2 * sgn);
            }
        }
        prefix_sdeg += data.gen(w[s]).sdeg();
    }
    rep.count();
    for (const auto& [z, r] : residual) {
        std::string where = "(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) where += ",";
            where += data.gen(w[i]).name;
        }
        where += ") -> " + data.gen(z).name;
        rep.fail("ainfty-relation", where, r.str());
    }
}

// Checks the suspended A-infinity relations on all composable tuples with
// length <= max_word_arity. Failures carry the offending tuple and the
// residual scalar per output generator.
template <class F>
VerificationReport verify_ainfty(const AInftyData<F>& data, int max_word_arity) {
    VerificationReport rep;
    Word cur;
    std::function<void(int)> recurse = [&](int remaining) {
        if (!cur.empty()) {
            check_tuple(data, cur, rep);
            if (remaining == 0) return;
        }
        for (GenId g = 0; g < data.basis().size(); ++g) {
            if (!cur.empty() && data.gen(g).src != data.gen(cur.back()).tgt) continue;
            cur.push_back(g);
            recurse(remaining - 1);
            cur.pop_back();
        }
    };
    recurse(max_word_arity);
    return rep;
}

}  // namespace cycl
