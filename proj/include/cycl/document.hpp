// The category document text format: a line-oriented description of a finite
// A-infinity category with optional pairing. See docs/FORMAT.md for the
// grammar. Parsing and emission are deterministic; load(save(x)) == x on
// canonical documents.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycl/bar.hpp"
#include "cycl/category.hpp"

namespace cycl {

struct CategoryDocument {
    std::string field = "q";       // "q" or "fp"
    std::uint64_t fp_modulus = 0;  // when field == "fp"
    int max_arity = 1;
    std::optional<int> cy_degree;
    std::vector<std::string> objects;

    struct Gen {
        std::string src, tgt, name;
        int deg = 0;
    };
    std::vector<Gen> gens;

    struct Op {
        bool suspended = true;             // mbar vs m coefficient
        std::vector<std::string> chain;    // objects A_0 .. A_k
        std::vector<std::string> inputs;   // names, inputs[i] in Hom(A_i, A_{i+1})
        std::string output;                // in Hom(A_0, A_k)
        std::string coeff;                 // exact rational literal
    };
    std::vector<Op> ops;

    struct Pair {
        std::string obj_a, name_a, obj_b, name_b;  // a in Hom(A,B), b in Hom(B,A)
        std::string coeff;
    };
    std::vector<Pair> pairs;

    std::vector<std::pair<std::string, std::string>> meta;
};

CategoryDocument parse_document(const std::string& text);
std::string emit_document(const CategoryDocument& doc);

// Instantiates the document over the field F, enforcing all invariants.
template <class F>
AInftyData<F> to_ainfty(const CategoryDocument& doc);

// Canonical document from data (coefficients in suspended convention).
template <class F>
CategoryDocument from_ainfty(const AInftyData<F>& data, const std::string& field,
                             std::uint64_t fp_modulus = 0);

// --- template implementations ----------------------------------------------

template <class F>
AInftyData<F> to_ainfty(const CategoryDocument& doc) {
    AInftyData<F> data;
    data.max_arity = doc.max_arity;
    std::map<std::string, ObjectId> obj;
    for (const std::string& o : doc.objects) {
        if (obj.count(o)) throw ParseError("duplicate object " + o);
        obj[o] = data.add_object(o);
    }
    auto object_of = [&](const std::string& o) {
        auto it = obj.find(o);
        if (it == obj.end()) throw ParseError("unknown object " + o);
        return it->second;
    };
    for (const auto& g : doc.gens) data.add_gen(object_of(g.src), object_of(g.tgt), g.name, g.deg);
    auto gen_of = [&](const std::string& src, const std::string& tgt, const std::string& n) {
        auto g = data.find_gen(object_of(src), object_of(tgt), n);
        if (!g) throw ParseError("unknown generator " + src + "->" + tgt + ":" + n);
        return *g;
    };
    for (const auto& op : doc.ops) {
        if (op.chain.size() != op.inputs.size() + 1)
            throw ParseError("operation chain does not match its inputs");
        Word in;
        for (std::size_t i = 0; i < op.inputs.size(); ++i)
            in.push_back(gen_of(op.chain[i], op.chain[i + 1], op.inputs[i]));
        GenId out = gen_of(op.chain.front(), op.chain.back(), op.output);
        F c = scalar_from_rational<F>(Rational::parse(op.coeff));
        if (!op.suspended) c = desuspend_convert(data, in, out, c);
        data.add_mbar(in, out, c);
    }
    if (!doc.pairs.empty() || doc.cy_degree) {
        if (!doc.cy_degree) throw ParseError("pairing entries given without a cy line");
        PairingData<F> p;
        p.degree = *doc.cy_degree;
        for (const auto& pr : doc.pairs) {
            GenId a = gen_of(pr.obj_a, pr.obj_b, pr.name_a);
            GenId b = gen_of(pr.obj_b, pr.obj_a, pr.name_b);
            p.entries[{a, b}] = scalar_from_rational<F>(Rational::parse(pr.coeff));
        }
        data.pairing = std::move(p);
    }
    return data;
}

template <class F>
CategoryDocument from_ainfty(const AInftyData<F>& data, const std::string& field,
                             std::uint64_t fp_modulus) {
    CategoryDocument doc;
    doc.field = field;
    doc.fp_modulus = fp_modulus;
    doc.max_arity = data.max_arity;
    doc.objects = data.objects();
    for (const BasisElement& g : data.basis())
        doc.gens.push_back({data.objects()[g.src], data.objects()[g.tgt], g.name, g.deg});
    for (const auto& [in, terms] : data.mbar_table()) {
        for (const auto& [out, c] : terms) {
            CategoryDocument::Op op;
            op.suspended = true;
            op.chain.push_back(data.objects()[data.gen(in.front()).src]);
            for (GenId g : in) {
                op.inputs.push_back(data.gen(g).name);
                op.chain.push_back(data.objects()[data.gen(g).tgt]);
            }
            op.output = data.gen(out).name;
            op.coeff = c.str();
            doc.ops.push_back(std::move(op));
        }
    }
    if (data.pairing) {
        doc.cy_degree = data.pairing->degree;
        for (const auto& [ab, v] : data.pairing->entries) {
            if (v.is_zero()) continue;
            const BasisElement& a = data.gen(ab.first);
            const BasisElement& b = data.gen(ab.second);
            doc.pairs.push_back({data.objects()[a.src], a.name, data.objects()[b.src],
                                 b.name, v.str()});
        }
    }
    return doc;
}

}  // namespace cycl
