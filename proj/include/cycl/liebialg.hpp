// The Lie bracket and cobracket on cyclic cochains of a Calabi-Yau
// A-infinity category, the cochain differential, and the exhaustive axiom
// suite.
//
// Cochains live in the coinvariant model: a cochain is a finite linear
// combination of canonical cyclic classes, identified with the N-symmetrized
// functionals of the same label. Operations act on representatives and
// re-canonicalize; they are manifestly equivariant under the signed cyclic
// operator.
//
// Sign conventions (frozen here, enforced exhaustively by axiom_suite):
//   - contraction kernel: the raw pairing value <a_i, b_j>;
//   - bracket term: Koszul sign of rotating each word so the contracted
//     letter leads, Koszul sign of moving b_j past the rest of a, and a
//     global twist (-1)^{n * D(a)} (n = CY degree, D = word degree);
//   - cobracket term (ordered letter pairs i != j): rotation sign to bring
//     i in front, Koszul sign of moving w_j past the inner segment, factors
//     emitted as (inner) x (outer);
//   - differential on cochains: stabilizer-weighted dual of the class-level
//     Hochschild b, (bhat f)(c) = f(b c).
// The reported cochain degree uses the dual orientation D(f) = -worddeg, so
// that D([f,g]) = D(f) + D(g) + (n-2) holds on the nose.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycl/calabi_yau.hpp"
#include "cycl/cyclic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cycl {

template <class F>
struct CyclicCochain {
    ClassSum<F> support;  // canonical representative -> coefficient

    bool empty() const { return support.empty(); }

    friend bool operator==(const CyclicCochain& a, const CyclicCochain& b) {
        return a.support == b.support;
    }
};

template <class F>
using TensorSum = std::map<std::pair<Word, Word>, F>;

template <class F>
class LieBialgebra {
  public:
    LieBialgebra(const AInftyData<F>& data, const SymplecticForm<F>& form,
                 bool adjoin_unit = false)
        : data_(data), form_(form), n_(form.cy_degree), adjoin_unit_(adjoin_unit) {}

    const AInftyData<F>& data() const { return data_; }
    int cy_degree() const { return n_; }

    // Word degree of a homogeneous cochain; MixedDegrees otherwise.
    int word_degree(const CyclicCochain<F>& f) const {
        bool first = true;
        int d = 0;
        for (const auto& [w, c] : f.support) {
            int wd = data_.word_sdeg(w);
            if (first) {
                d = wd;
                first = false;
            } else if (wd != d) {
                throw MixedDegrees("cochain has components in degrees " + std::to_string(d) +
                                   " and " + std::to_string(wd));
            }
        }
        return d;
    }

    // Reported (dual-oriented) cochain degree.
    int cochain_degree(const CyclicCochain<F>& f) const { return -word_degree(f); }

    int shifted_parity(const Word& w) const { return parity(data_.word_sdeg(w) + n_); }

    CyclicCochain<F> bracket(const CyclicCochain<F>& alpha,
                             const CyclicCochain<F>& beta) const {
        (void)word_degree(alpha);
        (void)word_degree(beta);
        CyclicCochain<F> out;
        for (const auto& [a, ca] : alpha.support)
            for (const auto& [b, cb] : beta.support)
                bracket_words(a, b, ca * cb, out.support);
        return out;
    }

    TensorSum<F> cobracket(const CyclicCochain<F>& alpha) const {
        (void)word_degree(alpha);
        TensorSum<F> out;
        for (const auto& [w, c] : alpha.support) cobracket_word(w, c, out);
        return out;
    }

    // Dual differential: (diff f)(c) = f(b c), with the stabilizer weight
    // that matches the N-symmetrized labels.
    CyclicCochain<F> diff(const CyclicCochain<F>& f) const {
        CyclicCochain<F> out;
        for (const auto& [c, fc] : f.support) {
            if (c.empty()) continue;  // the adjoined unit class is closed
            const auto& rows = adjoint_rows(static_cast<int>(c.size()));
            auto it = rows.find(c);
            if (it == rows.end()) continue;
            F weight = fc * scalar_from_rational<F>(Rational(stab_of(c)));
            for (const auto& [cp, e] : it->second) add_term(out.support, cp, weight * e);
        }
        return out;
    }

    // Induced b on a class, as a combination of classes (cached).
    const ClassSum<F>& b_column(const Word& rep) const {
        auto it = b_cache_.find(rep);
        if (it != b_cache_.end()) return it->second;
        ClassSum<F> col = class_project(data_, b_apply(data_, rep));
        return b_cache_.emplace(rep, std::move(col)).first->second;
    }

    // All non-vanishing canonical classes of the exact word length.
    const std::vector<Word>& classes_of_length(int len) const {
        auto it = class_cache_.find(len);
        if (it != class_cache_.end()) return it->second;
        std::vector<Word> reps;
        std::size_t explored = 0;
        detail::enumerate_cyclic_words(data_, len, cap_, explored, [&](const Word& w) {
            CyclicClass cls = canonicalize(data_, w);
            if (!cls.vanishes && cls.representative == w) reps.push_back(w);
        });
        return class_cache_.emplace(len, std::move(reps)).first->second;
    }

    int stab_of(const Word& rep) const {
        auto it = stab_cache_.find(rep);
        if (it != stab_cache_.end()) return it->second;
        int s = canonicalize(data_, rep).stabilizer;
        stab_cache_.emplace(rep, s);
        return s;
    }

    // For target classes of exact length len: the dual entries
    // (source class cp, value of b(cp) at the target / stab(cp)).
    const std::map<Word, std::vector<std::pair<Word, F>>>& adjoint_rows(int len) const {
        auto it = adjoint_cache_.find(len);
        if (it != adjoint_cache_.end()) return it->second;
        std::map<Word, std::vector<std::pair<Word, F>>> rows;
        for (int k = 1; k <= data_.max_arity; ++k) {
            for (const Word& cp : classes_of_length(len + k - 1)) {
                F inv_stab = scalar_from_rational<F>(Rational(1, stab_of(cp)));
                for (const auto& [c, coeff] : b_column(cp)) {
                    if (static_cast<int>(c.size()) != len) continue;
                    rows[c].emplace_back(cp, coeff * inv_stab);
                }
            }
        }
        return adjoint_cache_.emplace(len, std::move(rows)).first->second;
    }

  private:
    void bracket_words(const Word& a, const Word& b, const F& scale,
                       ClassSum<F>& out) const {
        const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
        F twist = sign_of<F>(parity(n_) * parity(data_.word_sdeg(a)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                F k = form_.kernel(a[i], b[j]);
                if (k.is_zero()) continue;
                auto [ra, sa] = rotate_front(a, i);
                auto [rb, sb] = rotate_front(b, j);
                Word word(ra.begin() + 1, ra.end());
                int tail_a = data_.word_sdeg(a) - data_.gen(a[i]).sdeg();
                word.insert(word.end(), rb.begin() + 1, rb.end());
                F move = sign_of<F>(parity(data_.gen(b[j]).sdeg()) * parity(tail_a));
                F coeff = scale * k * twist * move * sign_of<F>(sa) * sign_of<F>(sb);
                if (word.empty()) {
                    if (adjoin_unit_) add_term(out, word, coeff);
                    continue;
                }
                add_class_term(data_, out, word, coeff);
            }
        }
    }

    void cobracket_word(const Word& w, const F& scale, TensorSum<F>& out) const {
        const int L = static_cast<int>(w.size());
        for (int i = 0; i < L; ++i) {
            for (int j = 0; j < L; ++j) {
                if (i == j) continue;
                F k = form_.kernel(w[i], w[j]);
                if (k.is_zero()) continue;
                auto [rw, sr] = rotate_front(w, i);
                int p = ((j - i) % L + L) % L;
                Word inner(rw.begin() + 1, rw.begin() + p);
                Word outer(rw.begin() + p + 1, rw.end());
                if (!adjoin_unit_ && (inner.empty() || outer.empty())) continue;
                int inner_deg = data_.word_sdeg(inner);
                F move = sign_of<F>(parity(data_.gen(w[j]).sdeg()) * parity(inner_deg));
                F coeff = scale * k * move * sign_of<F>(sr);
                CyclicClass ci = inner.empty() ? CyclicClass{inner, 1, false, 1}
                                               : canonicalize(data_, inner);
                CyclicClass co = outer.empty() ? CyclicClass{outer, 1, false, 1}
                                               : canonicalize(data_, outer);
                if (ci.vanishes || co.vanishes) continue;
                F sgn = sign_of<F>((ci.sign_to_rep == -1) + (co.sign_to_rep == -1));
                add_term(out, {ci.representative, co.representative}, coeff * sgn);
            }
        }
    }

    // Bring position i to the front; returns the rotated word and the
    // exponent parity (0 or 1) of the accumulated Koszul sign.
    std::pair<Word, int> rotate_front(const Word& w, int i) const {
        const int L = static_cast<int>(w.size());
        Word r;
        r.reserve(L);
        for (int k = 0; k < L; ++k) r.push_back(w[(i + k) % L]);
        int pre = 0;
        for (int k = 0; k < i; ++k) pre += data_.gen(w[k]).sdeg();
        int post = data_.word_sdeg(w) - pre;
        return {r, (parity(pre) * parity(post)) % 2};
    }

    const AInftyData<F>& data_;
    const SymplecticForm<F>& form_;
    int n_;
    bool adjoin_unit_;
    std::size_t cap_ = 8'000'000;
    mutable std::map<int, std::vector<Word>> class_cache_;
    mutable std::map<Word, int> stab_cache_;
    mutable std::map<Word, ClassSum<F>> b_cache_;
    mutable std::map<int, std::map<Word, std::vector<std::pair<Word, F>>>> adjoint_cache_;
};

}  // namespace cycl
