// Noncommutative differential forms on a free graded algebra, de Rham
// classes, Lie derivative and contraction, constant symplectic forms, and
// the Poisson Lie bialgebra on noncommutative 0-forms.
//
// Representation: the form algebra is the free algebra on letters (g, plain)
// and (g, marked); a marked letter is dg with degree |g| - 1. d marks one
// letter at a time with the Koszul sign of the prefix; products concatenate.
// De Rham classes are cyclic words of letters modulo signed rotation, with
// the same canonicalization discipline as cyclic cochains.
//
// This module deliberately re-implements the necklace bracket/cobracket on
// its own letter model; agreement with the cyclic-cochain implementation is
// what quillen_compare certifies.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cycl/exactlin.hpp"
#include "cycl/report.hpp"
#include "cycl/util.hpp"

namespace cycl {

struct GeneratorSet {
    std::vector<std::string> names;
    std::vector<int> degrees;

    std::size_t size() const { return names.size(); }
    int degree(std::size_t g) const { return degrees.at(g); }
};

struct MLetter {
    std::uint32_t gen = 0;
    bool marked = false;

    friend bool operator<(const MLetter& a, const MLetter& b) {
        return std::tie(a.gen, a.marked) < std::tie(b.gen, b.marked);
    }
    friend bool operator==(const MLetter& a, const MLetter& b) {
        return a.gen == b.gen && a.marked == b.marked;
    }
};

using MWord = std::vector<MLetter>;

template <class F>
using FormSum = std::map<MWord, F>;  // linear forms (elements of Omega)

inline int letter_degree(const GeneratorSet& gens, const MLetter& l) {
    return gens.degree(l.gen) - (l.marked ? 1 : 0);
}

inline int mword_degree(const GeneratorSet& gens, const MWord& w) {
    int d = 0;
    for (const MLetter& l : w) d += letter_degree(gens, l);
    return d;
}

inline int mword_marks(const MWord& w) {
    int n = 0;
    for (const MLetter& l : w) n += l.marked ? 1 : 0;
    return n;
}

// --- linear operations on Omega ------------------------------------------

// d: mark each unmarked letter, odd operator passing the prefix.
template <class F>
FormSum<F> d_apply(const GeneratorSet& gens, const FormSum<F>& f) {
    FormSum<F> out;
    for (const auto& [w, c] : f) {
        int prefix = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w[i].marked) {
                MWord r = w;
                r[i].marked = true;
                add_term(out, r, c * sign_of<F>(prefix));
            }
            prefix += letter_degree(gens, w[i]);
        }
    }
    return out;
}

template <class F>
struct VectorField {
    // value on each generator: an unmarked word sum in T(V*)
    std::map<std::uint32_t, FormSum<F>> values;
    int degree = 0;  // homogeneous operator degree

    const FormSum<F>& value(std::uint32_t g) const {
        static const FormSum<F> zero;
        auto it = values.find(g);
        return it == values.end() ? zero : it->second;
    }
};

namespace ncdetail {

// Generic derivation: replaces one letter at a time by `image(letter)`,
// passing the prefix with the operator parity.
template <class F, class Image>
FormSum<F> derive(const GeneratorSet& gens, const FormSum<F>& f, int op_parity,
                  Image&& image) {
    FormSum<F> out;
    for (const auto& [w, c] : f) {
        int prefix = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            FormSum<F> repl = image(w[i]);
            if (!repl.empty()) {
                F s = c * sign_of<F>(op_parity * parity(prefix));
                for (const auto& [rw, rc] : repl) {
                    MWord r;
                    r.reserve(w.size() - 1 + rw.size());
                    r.insert(r.end(), w.begin(), w.begin() + i);
                    r.insert(r.end(), rw.begin(), rw.end());
                    r.insert(r.end(), w.begin() + i + 1, w.end());
                    add_term(out, r, s * rc);
                }
            }
            prefix += letter_degree(gens, w[i]);
        }
    }
    return out;
}

}  // namespace ncdetail

// iota_xi: plain letters to zero, marked letters to xi(g); parity |xi| + 1.
template <class F>
FormSum<F> contraction(const GeneratorSet& gens, const VectorField<F>& xi,
                       const FormSum<F>& f) {
    return ncdetail::derive(gens, f, parity(xi.degree + 1), [&](const MLetter& l) {
        if (!l.marked) return FormSum<F>{};
        return xi.value(l.gen);
    });
}

// L_xi: plain g to xi(g), marked dg to (-1)^{|xi|} d(xi(g)); parity |xi|.
template <class F>
FormSum<F> lie_derivative(const GeneratorSet& gens, const VectorField<F>& xi,
                          const FormSum<F>& f) {
    return ncdetail::derive(gens, f, parity(xi.degree), [&](const MLetter& l) {
        if (!l.marked) return xi.value(l.gen);
        FormSum<F> d = d_apply(gens, xi.value(l.gen));
        if (parity(xi.degree)) {
            for (auto& [w, c] : d) c = -c;
        }
        return d;
    });
}

// --- de Rham classes -------------------------------------------------------

struct DRClassResult {
    MWord representative;
    int sign = 1;
    bool vanishes = false;
    int stabilizer = 1;
};

inline std::pair<MWord, int> mword_rotate(const GeneratorSet& gens, const MWord& w) {
    MWord r;
    r.reserve(w.size());
    r.push_back(w.back());
    r.insert(r.end(), w.begin(), w.end() - 1);
    int rest = mword_degree(gens, w) - letter_degree(gens, w.back());
    int sgn = (parity(letter_degree(gens, w.back())) * parity(rest)) % 2 ? -1 : 1;
    return {r, sgn};
}

inline DRClassResult dr_canonicalize(const GeneratorSet& gens, const MWord& w) {
    DRClassResult cls;
    if (w.empty()) {
        cls.representative = w;
        return cls;
    }
    std::map<MWord, int> seen;
    MWord cur = w;
    int sgn = 1, stab = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto it = seen.find(cur);
        if (it != seen.end() && it->second != sgn) {
            cls.vanishes = true;
            cls.representative = w;
            return cls;
        }
        if (cur == w) ++stab;
        seen.emplace(cur, sgn);
        auto [next, s] = mword_rotate(gens, cur);
        cur = std::move(next);
        sgn *= s;
    }
    auto best = seen.begin();
    cls.representative = best->first;
    cls.sign = best->second;
    cls.stabilizer = stab;
    return cls;
}

template <class F>
using DRSum = std::map<MWord, F>;  // classes keyed by canonical representative

template <class F>
DRSum<F> dr_project(const GeneratorSet& gens, const FormSum<F>& f) {
    DRSum<F> out;
    for (const auto& [w, c] : f) {
        DRClassResult cls = dr_canonicalize(gens, w);
        if (cls.vanishes) continue;
        add_term(out, cls.representative, cls.sign == 1 ? c : -c);
    }
    return out;
}

// N-symmetrized expansion of a class representative (all signed rotations).
template <class F>
FormSum<F> dr_expand(const GeneratorSet& gens, const MWord& rep, const F& coeff) {
    FormSum<F> out;
    if (rep.empty()) {
        out[rep] = coeff;
        return out;
    }
    MWord cur = rep;
    int sgn = 1;
    for (std::size_t k = 0; k < rep.size(); ++k) {
        add_term(out, cur, sgn == 1 ? coeff : -coeff);
        auto [next, s] = mword_rotate(gens, cur);
        cur = std::move(next);
        sgn *= s;
    }
    return out;
}

// --- constant symplectic forms --------------------------------------------

template <class F>
struct ConstantSymplectic {
    int support_degree = 0;                       // |g| + |h| on the support
    std::map<std::pair<std::uint32_t, std::uint32_t>, F> kernel;  // ordered pairs

    F at(std::uint32_t g, std::uint32_t h) const {
        auto it = kernel.find({g, h});
        return it == kernel.end() ? F::zero() : it->second;
    }
    int necklace_degree() const { return support_degree + 2; }  // plays the CY role
};

struct SymplecticCertificate {
    bool symplectic = false;
    bool closed = false;
    bool constant = false;
    bool nondegenerate = false;
    std::string detail;
};

// Extracts the kernel of a constant 2-form class: the coefficient of each
// ordered (dg, dh) monomial in the N-symmetrized expansion.
template <class F>
ConstantSymplectic<F> extract_constant_form(const GeneratorSet& gens,
                                            const DRSum<F>& omega) {
    ConstantSymplectic<F> k;
    bool have_degree = false;
    for (const auto& [rep, c] : omega) {
        if (rep.size() != 2 || !rep[0].marked || !rep[1].marked)
            throw NonConstantForm("2-form has a non-constant term");
        for (const auto& [w, cc] : dr_expand(gens, rep, c)) {
            auto key = std::make_pair(w[0].gen, w[1].gen);
            add_term(k.kernel, key, cc);
            int d = gens.degree(w[0].gen) + gens.degree(w[1].gen);
            if (!have_degree) {
                k.support_degree = d;
                have_degree = true;
            } else if (k.support_degree != d) {
                throw NonConstantForm("2-form is not homogeneous");
            }
        }
    }
    return k;
}

// Closedness plus invertibility of the contraction pairing on generators.
template <class F>
SymplecticCertificate is_symplectic(const GeneratorSet& gens, const DRSum<F>& omega) {
    SymplecticCertificate cert;
    // closed: d of every representative projects to zero
    FormSum<F> lift;
    for (const auto& [rep, c] : omega) add_term(lift, rep, c);
    cert.closed = dr_project(gens, d_apply(gens, lift)).empty();
    ConstantSymplectic<F> k;
    try {
        k = extract_constant_form(gens, omega);
        cert.constant = true;
    } catch (const NonConstantForm& e) {
        cert.detail = e.what();
        cert.symplectic = false;
        return cert;
    }
    // nondegeneracy through the contraction machinery: the field dg -> delta
    // sends omega to a 1-form whose dg-coordinates are rows of the kernel.
    std::size_t n = gens.size();
    SparseMatrix<F> m(n, n);
    for (std::uint32_t g = 0; g < n; ++g) {
        VectorField<F> unit;
        unit.values[g] = FormSum<F>{{MWord{}, F::one()}};
        unit.degree = -gens.degree(g);
        DRSum<F> image = dr_project(gens, contraction(gens, unit, lift));
        for (const auto& [rep, c] : image) {
            if (rep.size() != 1 || !rep[0].marked)
                throw NonConstantForm("contraction did not yield a constant 1-form");
            m.add(g, rep[0].gen, c);
        }
    }
    cert.nondegenerate = rank(m) == n;
    if (!cert.nondegenerate) cert.detail = "generator pairing matrix is singular";
    cert.symplectic = cert.closed && cert.constant && cert.nondegenerate;
    return cert;
}

// --- the Poisson Lie bialgebra on DR^0 -------------------------------------

// 0-form classes are unmarked cyclic words; same necklace formulas as the
// cyclic-cochain side, written independently on this letter model.
template <class F>
class PoissonDR0 {
  public:
    PoissonDR0(const GeneratorSet& gens, const ConstantSymplectic<F>& omega,
               bool adjoin_unit = false)
        : gens_(gens), omega_(omega), adjoin_unit_(adjoin_unit) {}

    DRSum<F> bracket(const MWord& a, const MWord& b) const {
        DRSum<F> out;
        const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
        int npar = parity(omega_.necklace_degree());
        F twist = sign_of<F>(npar * parity(mword_degree(gens_, a)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                F k = omega_.at(a[i].gen, b[j].gen);
                if (k.is_zero()) continue;
                auto [ra, sa] = rotate_front(a, i);
                auto [rb, sb] = rotate_front(b, j);
                MWord word(ra.begin() + 1, ra.end());
                int tail_a = mword_degree(gens_, a) - letter_degree(gens_, a[i]);
                word.insert(word.end(), rb.begin() + 1, rb.end());
                F move = sign_of<F>(parity(letter_degree(gens_, b[j])) * parity(tail_a));
                F coeff = k * twist * move * sign_of<F>(sa) * sign_of<F>(sb);
                if (word.empty()) {
                    if (adjoin_unit_) add_term(out, word, coeff);
                    continue;
                }
                DRClassResult cls = dr_canonicalize(gens_, word);
                if (cls.vanishes) continue;
                add_term(out, cls.representative, cls.sign == 1 ? coeff : -coeff);
            }
        }
        return out;
    }

    std::map<std::pair<MWord, MWord>, F> cobracket(const MWord& w) const {
        std::map<std::pair<MWord, MWord>, F> out;
        const int L = static_cast<int>(w.size());
        for (int i = 0; i < L; ++i) {
            for (int j = 0; j < L; ++j) {
                if (i == j) continue;
                F k = omega_.at(w[i].gen, w[j].gen);
                if (k.is_zero()) continue;
                auto [rw, sr] = rotate_front(w, i);
                int p = ((j - i) % L + L) % L;
                MWord inner(rw.begin() + 1, rw.begin() + p);
                MWord outer(rw.begin() + p + 1, rw.end());
                if (!adjoin_unit_ && (inner.empty() || outer.empty())) continue;
                F move = sign_of<F>(parity(letter_degree(gens_, w[j])) *
                                    parity(mword_degree(gens_, inner)));
                F coeff = k * move * sign_of<F>(sr);
                DRClassResult ci = dr_canonicalize(gens_, inner);
                DRClassResult co = dr_canonicalize(gens_, outer);
                if (ci.vanishes || co.vanishes) continue;
                F sgn = sign_of<F>((ci.sign == -1) + (co.sign == -1));
                add_term(out, {ci.representative, co.representative}, coeff * sgn);
            }
        }
        return out;
    }

  private:
    std::pair<MWord, int> rotate_front(const MWord& w, int i) const {
        const int L = static_cast<int>(w.size());
        MWord r;
        r.reserve(L);
        for (int k = 0; k < L; ++k) r.push_back(w[(i + k) % L]);
        int pre = 0;
        for (int k = 0; k < i; ++k) pre += letter_degree(gens_, w[k]);
        int post = mword_degree(gens_, w) - pre;
        return {r, (parity(pre) * parity(post)) % 2};
    }

    const GeneratorSet& gens_;
    const ConstantSymplectic<F>& omega_;
    bool adjoin_unit_;
};

}  // namespace cycl
