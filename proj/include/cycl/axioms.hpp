// Exhaustive verifier for the Lie bialgebra axioms on truncated cochain
// bases: antisymmetry, Jacobi, cobracket flip antisymmetry, co-Jacobi,
// Drinfeld compatibility, involutivity, both chain-compatibility identities,
// and the degree law. Residuals are exact scalars; a check fails only on a
// nonzero residual.
//
// Tuple sweeps run under OpenMP with results merged in index order, so the
// parallel and serial paths give identical reports.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cycl/liebialg.hpp"

namespace cycl {

struct AxiomCheck {
    std::string name;
    std::size_t tuples = 0;
    std::size_t failures = 0;
    std::string sample;  // first failing tuple, empty when clean

    bool ok() const { return failures == 0; }
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

namespace detail {

template <class F>
CyclicCochain<F> unit_cochain(const Word& w) {
    CyclicCochain<F> f;
    f.support[w] = F::one();
    return f;
}

template <class F>
void tensor_add(TensorSum<F>& acc, const std::pair<Word, Word>& k, const F& v) {
    add_term(acc, k, v);
}

// Runs `body(index, fail_sink)` over [0, count) and fills an AxiomCheck.
template <class Body>
AxiomCheck sweep(const std::string& name, std::size_t count, bool parallel, Body&& body) {
    std::vector<std::pair<std::size_t, std::string>> fails;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<std::pair<std::size_t, std::string>> local;
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            std::string msg;
            body(static_cast<std::size_t>(i), msg);
            if (!msg.empty()) local.emplace_back(i, msg);
        }
#pragma omp critical
        fails.insert(fails.end(), local.begin(), local.end());
    }
#else
    for (std::size_t i = 0; i < count; ++i) {
        std::string msg;
        body(i, msg);
        if (!msg.empty()) fails.emplace_back(i, msg);
    }
#endif
    std::sort(fails.begin(), fails.end());
    AxiomCheck check;
    check.name = name;
    check.tuples = count;
    check.failures = fails.size();
    if (!fails.empty()) check.sample = fails.front().second;
    return check;
}

}  // namespace detail

template <class F>
class AxiomSuite {
  public:
    AxiomSuite(const LieBialgebra<F>& lb, int max_length, bool parallel = true)
        : lb_(lb), parallel_(parallel) {
        for (int len = 1; len <= max_length; ++len)
            for (const Word& rep : lb.classes_of_length(len)) basis_.push_back(rep);
    }

    const std::vector<Word>& basis() const { return basis_; }

    AxiomReport run() const {
        AxiomReport rep;
        rep.checks.push_back(check_antisymmetry());
        rep.checks.push_back(check_jacobi());
        rep.checks.push_back(check_flip());
        rep.checks.push_back(check_cojacobi());
        rep.checks.push_back(check_drinfeld());
        rep.checks.push_back(check_involutivity());
        rep.checks.push_back(check_compat_bracket());
        rep.checks.push_back(check_compat_cobracket());
        rep.checks.push_back(check_degree_law());
        return rep;
    }

    AxiomCheck check_antisymmetry() const {
        std::size_t n = basis_.size();
        return detail::sweep("antisymmetry", n * n, parallel_, [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t / n];
            const Word& b = basis_[t % n];
            auto ab = lb_.bracket(one(a), one(b));
            auto ba = lb_.bracket(one(b), one(a));
            int e = lb_.shifted_parity(a) * lb_.shifted_parity(b);
            ClassSum<F> res = ab.support;
            add_scaled(res, ba.support, sign_of<F>(e));
            if (!res.empty()) msg = describe_pair(a, b) + " residual " + first_residual(res);
        });
    }

    AxiomCheck check_jacobi() const {
        std::size_t n = basis_.size();
        return detail::sweep("jacobi", n * n * n, parallel_, [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t / (n * n)];
            const Word& b = basis_[(t / n) % n];
            const Word& c = basis_[t % n];
            int pa = lb_.shifted_parity(a), pb = lb_.shifted_parity(b),
                pc = lb_.shifted_parity(c);
            ClassSum<F> res;
            add_scaled(res, lb_.bracket(lb_.bracket(one(a), one(b)), one(c)).support,
                       sign_of<F>(pa * pc));
            add_scaled(res, lb_.bracket(lb_.bracket(one(b), one(c)), one(a)).support,
                       sign_of<F>(pb * pa));
            add_scaled(res, lb_.bracket(lb_.bracket(one(c), one(a)), one(b)).support,
                       sign_of<F>(pc * pb));
            if (!res.empty())
                msg = describe_pair(a, b) + "," + word_str(c) + " residual " +
                      first_residual(res);
        });
    }

    AxiomCheck check_flip() const {
        return detail::sweep("co-antisymmetry", basis_.size(), parallel_,
                             [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t];
            TensorSum<F> d = lb_.cobracket(one(a));
            TensorSum<F> res = d;
            for (const auto& [uv, c] : d) {
                int e = shifted(uv.first) * shifted(uv.second);
                detail::tensor_add(res, {uv.second, uv.first}, c * sign_of<F>(e));
            }
            if (!res.empty()) msg = word_str(a);
        });
    }

    AxiomCheck check_cojacobi() const {
        return detail::sweep("co-jacobi", basis_.size(), parallel_,
                             [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t];
            // triples from (id x delta) delta, then cyclic symmetrization
            std::map<std::tuple<Word, Word, Word>, F> acc, total;
            for (const auto& [uv, c] : lb_.cobracket(one(a))) {
                for (const auto& [xy, c2] : lb_.cobracket(one_word(uv.second))) {
                    auto key = std::make_tuple(uv.first, xy.first, xy.second);
                    add_term(acc, key, c * c2);
                }
            }
            for (const auto& [xyz, c] : acc) {
                const auto& [x, y, z] = xyz;
                int px = shifted(x), py = shifted(y), pz = shifted(z);
                add_term(total, std::make_tuple(x, y, z), c);
                add_term(total, std::make_tuple(z, x, y), c * sign_of<F>(pz * (px + py)));
                add_term(total, std::make_tuple(y, z, x), c * sign_of<F>((py + pz) * px));
            }
            if (!total.empty()) msg = word_str(a);
        });
    }

    AxiomCheck check_drinfeld() const {
        std::size_t n = basis_.size();
        return detail::sweep("drinfeld", n * n, parallel_, [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t / n];
            const Word& b = basis_[t % n];
            int pa = lb_.shifted_parity(a), pb = lb_.shifted_parity(b);
            TensorSum<F> res;
            for (const auto& [w, c] : lb_.bracket(one(a), one(b)).support)
                for (const auto& [uv, c2] : lb_.cobracket(one_word(w)))
                    detail::tensor_add(res, uv, c * c2);
            for (const auto& [uv, c] : lb_.cobracket(one(a))) {
                const auto& [u, v] = uv;
                F s1 = sign_of<F>(shifted(v) * pb);
                for (const auto& [k, w] : lb_.bracket(one_word(u), one(b)).support)
                    detail::tensor_add(res, {k, v}, -c * w * s1);
                for (const auto& [k, w] : lb_.bracket(one_word(v), one(b)).support)
                    detail::tensor_add(res, {u, k}, -c * w);
            }
            for (const auto& [uv, c] : lb_.cobracket(one(b))) {
                const auto& [u, v] = uv;
                for (const auto& [k, w] : lb_.bracket(one(a), one_word(u)).support)
                    detail::tensor_add(res, {k, v}, -c * w);
                F s4 = sign_of<F>(pa * shifted(u));
                for (const auto& [k, w] : lb_.bracket(one(a), one_word(v)).support)
                    detail::tensor_add(res, {u, k}, -c * w * s4);
            }
            if (!res.empty()) msg = describe_pair(a, b);
        });
    }

    AxiomCheck check_involutivity() const {
        return detail::sweep("involutivity", basis_.size(), parallel_,
                             [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t];
            ClassSum<F> res;
            for (const auto& [uv, c] : lb_.cobracket(one(a)))
                add_scaled(res, lb_.bracket(one_word(uv.first), one_word(uv.second)).support,
                           c);
            if (!res.empty()) msg = word_str(a) + " residual " + first_residual(res);
        });
    }

    AxiomCheck check_compat_bracket() const {
        std::size_t n = basis_.size();
        return detail::sweep("d-compat-bracket", n * n, parallel_,
                             [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t / n];
            const Word& b = basis_[t % n];
            ClassSum<F> res = lb_.diff(lb_.bracket(one(a), one(b))).support;
            add_scaled(res, lb_.bracket(lb_.diff(one(a)), one(b)).support, -F::one());
            add_scaled(res, lb_.bracket(one(a), lb_.diff(one(b))).support,
                       -sign_of<F>(lb_.shifted_parity(a)));
            if (!res.empty()) msg = describe_pair(a, b) + " residual " + first_residual(res);
        });
    }

    AxiomCheck check_compat_cobracket() const {
        return detail::sweep("d-compat-cobracket", basis_.size(), parallel_,
                             [&](std::size_t t, std::string& msg) {
            const Word& a = basis_[t];
            TensorSum<F> res = lb_.cobracket(lb_.diff(one(a)));
            for (const auto& [uv, c] : lb_.cobracket(one(a))) {
                const auto& [u, v] = uv;
                for (const auto& [k, w] : lb_.diff(one_word(u)).support)
                    detail::tensor_add(res, {k, v}, -c * w);
                F s = sign_of<F>(shifted(u));
                for (const auto& [k, w] : lb_.diff(one_word(v)).support)
                    detail::tensor_add(res, {u, k}, -c * w * s);
            }
            if (!res.empty()) msg = word_str(a);
        });
    }

    // D(out) = D(in1) + D(in2) + (n-2) in the dual orientation, for every
    // nonzero bracket output and cobracket factor pair.
    AxiomCheck check_degree_law() const {
        std::size_t n = basis_.size();
        int shift = lb_.cy_degree() - 2;
        return detail::sweep("degree-law", n * n + n, parallel_,
                             [&](std::size_t t, std::string& msg) {
            if (t < n * n) {
                const Word& a = basis_[t / n];
                const Word& b = basis_[t % n];
                auto out = lb_.bracket(one(a), one(b));
                if (out.empty()) return;
                int da = -wdeg(a), db = -wdeg(b), dout = -wdeg_of(out);
                if (dout != da + db + shift)
                    msg = describe_pair(a, b) + " degree " + std::to_string(dout) +
                          " != " + std::to_string(da + db + shift);
            } else {
                const Word& a = basis_[t - n * n];
                int da = -wdeg(a);
                for (const auto& [uv, c] : lb_.cobracket(one(a))) {
                    (void)c;
                    int dsum = -wdeg(uv.first) - wdeg(uv.second);
                    if (dsum != da + shift) {
                        msg = word_str(a) + " cobracket factors break the degree law";
                        break;
                    }
                }
            }
        });
    }

  private:
    CyclicCochain<F> one(const Word& w) const { return detail::unit_cochain<F>(w); }
    CyclicCochain<F> one_word(const Word& w) const { return detail::unit_cochain<F>(w); }

    int shifted(const Word& w) const {
        return parity(lb_.data().word_sdeg(w) + lb_.cy_degree());
    }
    int wdeg(const Word& w) const { return lb_.data().word_sdeg(w); }
    int wdeg_of(const CyclicCochain<F>& f) const {
        return lb_.data().word_sdeg(f.support.begin()->first);
    }

    std::string word_str(const Word& w) const {
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "|";
            s += lb_.data().gen(w[i]).name;
        }
        return s + "]";
    }
    std::string describe_pair(const Word& a, const Word& b) const {
        return word_str(a) + "," + word_str(b);
    }
    template <class K>
    std::string first_residual(const std::map<K, F>& res) const {
        return res.begin()->second.str();
    }

    const LieBialgebra<F>& lb_;
    bool parallel_;
    std::vector<Word> basis_;
};

template <class F>
AxiomReport axiom_suite(const LieBialgebra<F>& lb, int max_length, bool parallel = true) {
    return AxiomSuite<F>(lb, max_length, parallel).run();
}

}  // namespace cycl
