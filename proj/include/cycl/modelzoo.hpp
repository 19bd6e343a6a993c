// Fixture generators: Frobenius cohomology models (spheres, complex
// projective spaces, exterior algebras), directed categories, strong
// exceptional collections, and single-coefficient perturbations for
// mutation testing. Every generator verifies its output before returning.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "cycl/bar.hpp"
#include "cycl/calabi_yau.hpp"
#include "cycl/category.hpp"

namespace cycl {

namespace detail {

template <class F>
void add_product(AInftyData<F>& data, GenId a, GenId b, GenId out, const F& raw) {
    // m_2 coefficient in suspended form: sign (-1)^{|abar|}
    data.add_mbar({a, b}, out, sign_of<F>(data.gen(a).sdeg()) * raw);
}

template <class F>
void require_valid(const AInftyData<F>& data, int arity_check) {
    VerificationReport rep = verify_ainfty(data, arity_check);
    if (!rep.ok())
        throw std::runtime_error("fixture fails A-infinity relations: " +
                                 rep.failures.front().where);
    if (data.pairing) {
        VerificationReport cy = verify_cy(data, *data.pairing, data.max_arity);
        if (!cy.ok())
            throw std::runtime_error("fixture fails CY verification: " +
                                     cy.failures.front().check + " " +
                                     cy.failures.front().where);
    }
}

}  // namespace detail

// H^*(S^d): basis {1, v}, v^2 = 0, <1,v> = 1, CY degree d.
template <class F>
AInftyData<F> sphere_fixture(int d) {
    if (d < 1) throw std::runtime_error("sphere dimension must be >= 1");
    AInftyData<F> data;
    data.max_arity = 2;
    ObjectId pt = data.add_object("pt");
    GenId one = data.add_gen(pt, pt, "1", 0);
    GenId v = data.add_gen(pt, pt, "v", d);
    detail::add_product(data, one, one, one, F::one());
    detail::add_product(data, one, v, v, F::one());
    detail::add_product(data, v, one, v, F::one());
    PairingData<F> p;
    p.degree = d;
    p.entries[{one, v}] = F::one();
    p.entries[{v, one}] = sign_of<F>(0 * d);
    data.pairing = p;
    detail::require_valid(data, 3);
    return data;
}

// H^*(CP^d): truncated polynomial algebra on h of degree 2, CY degree 2d.
template <class F>
AInftyData<F> projective_fixture(int d) {
    if (d < 1) throw std::runtime_error("projective dimension must be >= 1");
    AInftyData<F> data;
    data.max_arity = 2;
    ObjectId pt = data.add_object("pt");
    std::vector<GenId> h(d + 1);
    for (int i = 0; i <= d; ++i)
        h[i] = data.add_gen(pt, pt, i == 0 ? "1" : "h" + std::to_string(i), 2 * i);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j + i <= d; ++j)
            detail::add_product(data, h[i], h[j], h[i + j], F::one());
    PairingData<F> p;
    p.degree = 2 * d;
    for (int i = 0; i <= d; ++i) p.entries[{h[i], h[d - i]}] = F::one();
    data.pairing = p;
    detail::require_valid(data, 3);
    return data;
}

namespace detail {

inline int merge_sign(const std::vector<int>& s, const std::vector<int>& t) {
    int inv = 0;
    for (int a : s)
        for (int b : t)
            if (a > b) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace detail

// Exterior algebra on g degree-1 generators with the Berezin trace pairing;
// CY degree g. exterior_fixture(1) is the Lambda(x) model.
template <class F>
AInftyData<F> exterior_fixture(int g) {
    if (g < 1) throw std::runtime_error("exterior rank must be >= 1");
    AInftyData<F> data;
    data.max_arity = 2;
    ObjectId pt = data.add_object("pt");
    int nsub = 1 << g;
    std::vector<GenId> gen(nsub);
    std::vector<std::vector<int>> subset(nsub);
    for (int s = 0; s < nsub; ++s) {
        std::string name;
        for (int i = 0; i < g; ++i)
            if (s & (1 << i)) {
                subset[s].push_back(i);
                name += name.empty() ? "x" : "^x";
                name += std::to_string(i + 1);
            }
        if (name.empty()) name = "1";
        gen[s] = data.add_gen(pt, pt, name, static_cast<int>(subset[s].size()));
    }
    for (int s = 0; s < nsub; ++s) {
        for (int t = 0; t < nsub; ++t) {
            if (s & t) continue;
            int sg = detail::merge_sign(subset[s], subset[t]);
            detail::add_product(data, gen[s], gen[t], gen[s | t],
                                sg == 1 ? F::one() : -F::one());
        }
    }
    PairingData<F> p;
    p.degree = g;
    int full = nsub - 1;
    for (int s = 0; s < nsub; ++s) {
        int t = full & ~s;
        int sg = detail::merge_sign(subset[s], subset[t]);
        p.entries[{gen[s], gen[t]}] = sg == 1 ? F::one() : -F::one();
    }
    data.pairing = p;
    detail::require_valid(data, 3);
    return data;
}

template <class F>
AInftyData<F> frobenius_cohomology(const std::string& model, int param) {
    if (model == "sphere") return sphere_fixture<F>(param);
    if (model == "complex-projective") return projective_fixture<F>(param);
    if (model == "exterior") return exterior_fixture<F>(param);
    throw std::runtime_error("unknown frobenius model " + model);
}

// Takes strictly upper-triangular hom data (objects already added, every
// generator with src < tgt) and closes it into a directed category by
// adjoining identity morphisms with unital diagonal product.
template <class F>
AInftyData<F> directed_category(AInftyData<F> upper, int verify_arity = 4) {
    for (const BasisElement& g : upper.basis())
        if (g.src >= g.tgt)
            throw NotUpperTriangular("generator " + g.name + " violates src < tgt");
    for (const auto& [inputs, terms] : upper.mbar_table()) {
        (void)terms;
        for (GenId g : inputs)
            if (upper.gen(g).src >= upper.gen(g).tgt)
                throw NotUpperTriangular("operation touches a non-upper generator");
    }
    for (ObjectId i = 0; i < upper.num_objects(); ++i) {
        GenId id = upper.add_gen(i, i, "id", 0);
        upper.add_mbar({id, id}, id, -F::one());  // m_2(id,id) = id, suspended sign
    }
    detail::require_valid(upper, verify_arity);
    return upper;
}

// Random path-algebra shaped directed data: edges go strictly upward, homs
// are spanned by paths, composition is concatenation. Deterministic in seed.
template <class F>
AInftyData<F> random_directed(int r, std::uint64_t seed, bool degree_zero = false) {
    if (r < 1) throw std::runtime_error("need at least one object");
    std::mt19937_64 rng(seed);
    AInftyData<F> data;
    data.max_arity = 2;
    for (int i = 0; i < r; ++i) data.add_object("L" + std::to_string(i + 1));
    // edges with multiplicity 0..2 and degree in [-1, 2]
    struct Edge {
        int from, to, deg;
        std::string name;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            int mult = static_cast<int>(rng() % 3);
            for (int m = 0; m < mult; ++m) {
                int deg = degree_zero ? 0 : static_cast<int>(rng() % 4) - 1;
                edges.push_back({i, j, deg,
                                 "e" + std::to_string(i + 1) + std::to_string(j + 1) +
                                     static_cast<char>('a' + m)});
            }
        }
    }
    // paths between each pair, indexed by edge sequences
    struct Path {
        std::vector<int> edge_ids;
        int from, to, deg;
        std::string name;
    };
    std::vector<Path> paths;
    std::vector<std::vector<int>> paths_from(r);
    for (std::size_t e = 0; e < edges.size(); ++e)
        paths.push_back({{static_cast<int>(e)}, edges[e].from, edges[e].to, edges[e].deg,
                         edges[e].name});
    for (std::size_t p = 0; p < paths.size(); ++p) {  // grows as longer paths appended
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].from != paths[p].to) continue;
            Path q = paths[p];
            q.edge_ids.push_back(static_cast<int>(e));
            q.to = edges[e].to;
            q.deg += edges[e].deg;
            q.name += "." + edges[e].name;
            paths.push_back(std::move(q));
        }
    }
    std::map<std::vector<int>, GenId> by_edges;
    for (const Path& p : paths)
        by_edges[p.edge_ids] = data.add_gen(p.from, p.to, p.name, p.deg);
    for (const Path& a : paths) {
        for (const Path& b : paths) {
            if (a.to != b.from) continue;
            std::vector<int> cat = a.edge_ids;
            cat.insert(cat.end(), b.edge_ids.begin(), b.edge_ids.end());
            detail::add_product(data, by_edges.at(a.edge_ids), by_edges.at(b.edge_ids),
                                by_edges.at(cat), F::one());
        }
    }
    return directed_category(std::move(data));
}

// Strong exceptional collection shape: directed with all morphisms in
// degree zero (only shift 0 may be nonzero).
template <class F>
AInftyData<F> exceptional_endomorphism(AInftyData<F> upper, int verify_arity = 4) {
    for (const BasisElement& g : upper.basis()) {
        if (g.src == g.tgt)
            throw ViolatesExceptionality("diagonal hom must be exactly k*id");
        if (g.deg != 0)
            throw ViolatesExceptionality("Hom(E_i, E_j[k]) nonzero for k = " +
                                         std::to_string(g.deg));
    }
    return directed_category(std::move(upper), verify_arity);
}

template <class F>
AInftyData<F> random_exceptional(int size, std::uint64_t seed) {
    return random_directed<F>(size, seed, /*degree_zero=*/true);
}

// Single-coefficient rescaling; metadata preserved, everything else equal.
struct PerturbTarget {
    enum class Kind { operation, pairing } kind = Kind::operation;
    CoeffAddress op;                    // when kind == operation
    std::pair<GenId, GenId> pair{0, 0};  // when kind == pairing
};

template <class F>
AInftyData<F> perturb(const AInftyData<F>& data, const PerturbTarget& target,
                      const F& factor) {
    AInftyData<F> out = data;
    if (target.kind == PerturbTarget::Kind::operation) {
        out.scale_coefficient(target.op, factor);
    } else {
        if (!out.pairing) throw NoSuchCoefficient("no pairing present");
        auto it = out.pairing->entries.find(target.pair);
        if (it == out.pairing->entries.end())
            throw NoSuchCoefficient("no pairing entry at the given address");
        it->second *= factor;
        if (it->second.is_zero()) out.pairing->entries.erase(it);
    }
    return out;
}

}  // namespace cycl
