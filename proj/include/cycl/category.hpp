// Finite A-infinity category data in suspended (bar) form.
//
// Basis elements are flattened into one table; a word is a vector of basis
// ids. Structure coefficients are stored for the suspended operations mbar_i,
// which have degree -1: every sign downstream is then a Koszul sign.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycl/errors.hpp"
#include "cycl/scalar.hpp"

namespace cycl {

using ObjectId = std::uint32_t;
using GenId = std::uint32_t;
using Word = std::vector<GenId>;  // basis ids, composable left to right

struct BasisElement {
    ObjectId src = 0, tgt = 0;
    std::string name;
    int deg = 0;  // unsuspended degree |a|
    int sdeg() const { return deg - 1; }
};

// Address of one structure coefficient: mbar(inputs) -> coeff * output.
struct CoeffAddress {
    Word inputs;
    GenId output = 0;
    friend bool operator<(const CoeffAddress& a, const CoeffAddress& b) {
        return std::tie(a.inputs, a.output) < std::tie(b.inputs, b.output);
    }
    friend bool operator==(const CoeffAddress& a, const CoeffAddress& b) {
        return a.inputs == b.inputs && a.output == b.output;
    }
};

template <class F>
struct PairingData {
    int degree = 0;                       // CY degree n
    std::map<std::pair<GenId, GenId>, F> entries;  // <a,b>, a in Hom(B,A), b in Hom(A,B)

    F get(GenId a, GenId b) const {
        auto it = entries.find({a, b});
        return it == entries.end() ? F::zero() : it->second;
    }
};

template <class F>
class AInftyData {
  public:
    int max_arity = 1;

    ObjectId add_object(const std::string& name) {
        objects_.push_back(name);
        return static_cast<ObjectId>(objects_.size() - 1);
    }

    GenId add_gen(ObjectId src, ObjectId tgt, const std::string& name, int deg) {
        if (src >= objects_.size() || tgt >= objects_.size())
            throw std::runtime_error("add_gen: object out of range");
        for (GenId g : hom(src, tgt))
            if (basis_[g].name == name)
                throw std::runtime_error("duplicate generator name " + name + " in hom(" +
                                         objects_[src] + "," + objects_[tgt] + ")");
        basis_.push_back({src, tgt, name, deg});
        GenId id = static_cast<GenId>(basis_.size() - 1);
        hom_[{src, tgt}].push_back(id);
        return id;
    }

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& gen(GenId g) const { return basis_.at(g); }
    std::size_t num_objects() const { return objects_.size(); }

    const Word& hom(ObjectId a, ObjectId b) const {
        static const Word empty;
        auto it = hom_.find({a, b});
        return it == hom_.end() ? empty : it->second;
    }

    std::optional<GenId> find_gen(ObjectId src, ObjectId tgt, const std::string& name) const {
        for (GenId g : hom(src, tgt))
            if (basis_[g].name == name) return g;
        return std::nullopt;
    }

    bool composable(const Word& w) const {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (basis_[w[i]].tgt != basis_[w[i + 1]].src) return false;
        return true;
    }

    bool cyclically_composable(const Word& w) const {
        if (w.empty()) return false;
        return composable(w) && basis_[w.back()].tgt == basis_[w.front()].src;
    }

    int word_sdeg(const Word& w) const {
        int d = 0;
        for (GenId g : w) d += basis_[g].sdeg();
        return d;
    }

    // Inserts one suspended coefficient; enforces composability and the
    // degree -1 homogeneity of mbar.
    void add_mbar(const Word& inputs, GenId output, const F& coeff) {
        if (coeff.is_zero()) return;
        if (inputs.empty() || static_cast<int>(inputs.size()) > max_arity)
            throw DegreeMismatch("arity " + std::to_string(inputs.size()) +
                                 " outside 1.." + std::to_string(max_arity));
        if (!composable(inputs)) throw NotComposable(describe(inputs, output));
        if (basis_[inputs.front()].src != basis_[output].src ||
            basis_[inputs.back()].tgt != basis_[output].tgt)
            throw NotComposable(describe(inputs, output));
        if (word_sdeg(inputs) - 1 != basis_[output].sdeg())
            throw DegreeMismatch(describe(inputs, output));
        auto& terms = mbar_[inputs];
        for (auto& [out, c] : terms) {
            if (out == output) {
                c += coeff;
                if (c.is_zero()) prune(inputs, output);
                return;
            }
        }
        terms.emplace_back(output, coeff);
    }

    // Terms of mbar applied to a composable block, empty if none stored.
    const std::vector<std::pair<GenId, F>>& mbar(const Word& block) const {
        static const std::vector<std::pair<GenId, F>> empty;
        auto it = mbar_.find(block);
        return it == mbar_.end() ? empty : it->second;
    }

    const std::map<Word, std::vector<std::pair<GenId, F>>>& mbar_table() const { return mbar_; }

    std::vector<CoeffAddress> coefficient_addresses() const {
        std::vector<CoeffAddress> out;
        for (const auto& [in, terms] : mbar_)
            for (const auto& [g, c] : terms) out.push_back({in, g});
        return out;
    }

    void scale_coefficient(const CoeffAddress& addr, const F& factor) {
        auto it = mbar_.find(addr.inputs);
        if (it == mbar_.end()) throw NoSuchCoefficient(describe(addr.inputs, addr.output));
        for (auto& [out, c] : it->second) {
            if (out == addr.output) {
                c *= factor;
                if (c.is_zero()) prune(addr.inputs, addr.output);
                return;
            }
        }
        throw NoSuchCoefficient(describe(addr.inputs, addr.output));
    }

    std::string describe(const Word& inputs, GenId output) const {
        std::string s = "mbar_" + std::to_string(inputs.size()) + "(";
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (i) s += ",";
            s += basis_[inputs[i]].name;
        }
        s += ") -> " + basis_[output].name;
        return s;
    }

    std::optional<PairingData<F>> pairing;

  private:
    void prune(const Word& inputs, GenId output) {
        auto it = mbar_.find(inputs);
        auto& terms = it->second;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].first == output && terms[i].second.is_zero()) {
                terms.erase(terms.begin() + i);
                break;
            }
        }
        if (terms.empty()) mbar_.erase(it);
    }

    std::vector<std::string> objects_;
    std::vector<BasisElement> basis_;
    std::map<std::pair<ObjectId, ObjectId>, Word> hom_;
    std::map<Word, std::vector<std::pair<GenId, F>>> mbar_;
};

}  // namespace cycl
