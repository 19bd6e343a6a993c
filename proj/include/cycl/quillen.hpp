// Comparison of the two Lie bialgebra realizations: cyclic cochains of a
// cyclic A-infinity algebra versus noncommutative 0-forms on the suspended
// morphism space with the induced constant symplectic form. The dictionary
// is letter-for-letter; agreement must be exact, bracket and cobracket both.

#pragma once

#include <string>

#include "cycl/axioms.hpp"
#include "cycl/liebialg.hpp"
#include "cycl/ncsymp.hpp"

namespace cycl {

namespace detail {

inline MWord to_mword(const Word& w) {
    MWord m;
    m.reserve(w.size());
    for (GenId g : w) m.push_back({g, false});
    return m;
}

}  // namespace detail

template <class F>
GeneratorSet suspended_generators(const AInftyData<F>& data) {
    GeneratorSet gens;
    for (const BasisElement& b : data.basis()) {
        gens.names.push_back(b.name);
        gens.degrees.push_back(b.sdeg());
    }
    return gens;
}

// The 2-form (1/2) sum K_pq dp dq as a de Rham class; its constant-form
// extraction returns exactly K.
template <class F>
DRSum<F> pairing_two_form(const AInftyData<F>& data, const GeneratorSet& gens) {
    FormSum<F> lift;
    F half = scalar_from_rational<F>(Rational(1, 2));
    for (const auto& [pq, v] : data.pairing->entries) {
        if (v.is_zero()) continue;
        MWord w{{pq.first, true}, {pq.second, true}};
        add_term(lift, w, v * half);
    }
    return dr_project(gens, lift);
}

template <class F>
VerificationReport quillen_compare(const AInftyData<F>& data, int max_length) {
    if (data.num_objects() != 1)
        throw MultiObjectUnsupported("the comparison is stated for one object");
    if (!data.pairing) throw DegeneratePairing("no pairing present");
    VerificationReport rep;

    SymplecticForm<F> form = induced_omega(data, *data.pairing);
    LieBialgebra<F> lb(data, form);
    GeneratorSet gens = suspended_generators(data);

    DRSum<F> omega_class = pairing_two_form(data, gens);
    SymplecticCertificate cert = is_symplectic(gens, omega_class);
    rep.count();
    if (!cert.symplectic)
        rep.fail("pairing-two-form-symplectic", cert.detail,
                 cert.closed ? "nondegenerate?" : "not closed");
    ConstantSymplectic<F> k = extract_constant_form(gens, omega_class);
    // extraction must reproduce the pairing on the nose
    for (const auto& [pq, v] : data.pairing->entries) {
        rep.count();
        if (!(k.at(pq.first, pq.second) == v))
            rep.fail("kernel-extraction",
                     data.gen(pq.first).name + "," + data.gen(pq.second).name,
                     (k.at(pq.first, pq.second) - v).str());
    }
    PoissonDR0<F> poisson(gens, k);

    std::vector<Word> basis;
    for (int len = 1; len <= max_length; ++len)
        for (const Word& w : lb.classes_of_length(len)) basis.push_back(w);

    // canonical representatives must agree letterwise
    for (const Word& w : basis) {
        rep.count();
        DRClassResult cls = dr_canonicalize(gens, detail::to_mword(w));
        if (cls.vanishes || cls.representative != detail::to_mword(w) || cls.sign != 1)
            rep.fail("canonical-rep-mismatch", "", "");
    }

    auto word_str = [&](const Word& w) {
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "|";
            s += data.gen(w[i]).name;
        }
        return s + "]";
    };

    for (const Word& a : basis) {
        CyclicCochain<F> fa;
        fa.support[a] = F::one();
        // cobracket comparison
        TensorSum<F> lhs = lb.cobracket(fa);
        auto rhs = poisson.cobracket(detail::to_mword(a));
        std::map<std::pair<Word, Word>, F> diff = lhs;
        for (const auto& [uv, c] : rhs) {
            Word u, v;
            for (const MLetter& l : uv.first) u.push_back(l.gen);
            for (const MLetter& l : uv.second) v.push_back(l.gen);
            add_term(diff, {u, v}, -c);
        }
        rep.count();
        if (!diff.empty())
            rep.fail("cobracket-mismatch", word_str(a),
                     diff.begin()->second.str());
        for (const Word& b : basis) {
            CyclicCochain<F> fb;
            fb.support[b] = F::one();
            ClassSum<F> l = lb.bracket(fa, fb).support;
            DRSum<F> r = poisson.bracket(detail::to_mword(a), detail::to_mword(b));
            ClassSum<F> d = l;
            for (const auto& [mw, c] : r) {
                Word u;
                for (const MLetter& letter : mw) u.push_back(letter.gen);
                add_term(d, u, -c);
            }
            rep.count();
            if (!d.empty())
                rep.fail("bracket-mismatch", word_str(a) + "," + word_str(b),
                         d.begin()->second.str());
        }
    }
    return rep;
}

}  // namespace cycl
