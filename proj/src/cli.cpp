#include "cycl/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cycl/axioms.hpp"
#include "cycl/document.hpp"
#include "cycl/modelzoo.hpp"
#include "cycl/quillen.hpp"

namespace cycl {

namespace {

struct Options {
    std::string command;
    std::string input;
    int max_len = 5;
    std::optional<int> deg_min, deg_max;
    std::string field;  // "", "q", or "fp:P"
    std::string convention = "chain";
    std::string format = "table";
    std::string alpha, beta;
    std::string kind;
    int param = 2;
    std::uint64_t seed = 1;
    bool serial = false;
};

Options parse_options(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw ParseError("no command given");
    o.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                throw ParseError(std::string("flag ") + flag + " needs a value");
            return args[++i];
        };
        if (a == "--input") o.input = value("--input");
        else if (a == "--max-len") o.max_len = std::stoi(value("--max-len"));
        else if (a == "--degree-min") o.deg_min = std::stoi(value("--degree-min"));
        else if (a == "--degree-max") o.deg_max = std::stoi(value("--degree-max"));
        else if (a == "--field") o.field = value("--field");
        else if (a == "--convention") o.convention = value("--convention");
        else if (a == "--format") o.format = value("--format");
        else if (a == "--alpha") o.alpha = value("--alpha");
        else if (a == "--beta") o.beta = value("--beta");
        else if (a == "--kind") o.kind = value("--kind");
        else if (a == "--param") o.param = std::stoi(value("--param"));
        else if (a == "--seed") o.seed = std::stoull(value("--seed"));
        else if (a == "--serial") o.serial = true;
        else throw ParseError("unknown flag " + a);
    }
    if (o.convention != "chain" && o.convention != "cochain")
        throw ParseError("--convention must be chain or cochain");
    if (o.format != "table" && o.format != "csv")
        throw ParseError("--format must be table or csv");
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

template <class F>
Word parse_class_literal(const AInftyData<F>& data, const std::string& lit) {
    std::string s = lit;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("class literal must look like [A.f|B.g]");
    s = s.substr(1, s.size() - 2);
    std::vector<std::pair<std::string, std::string>> letters;  // (src, name)
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '|')) {
        auto dot = tok.find('.');
        if (dot == std::string::npos)
            throw ParseError("class letter must be OBJ.NAME, got '" + tok + "'");
        letters.emplace_back(tok.substr(0, dot), tok.substr(dot + 1));
    }
    if (letters.empty()) throw ParseError("empty class literal");
    auto object_of = [&](const std::string& name) -> ObjectId {
        for (ObjectId i = 0; i < data.num_objects(); ++i)
            if (data.objects()[i] == name) return i;
        throw ParseError("unknown object " + name);
    };
    Word w;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        ObjectId src = object_of(letters[i].first);
        ObjectId tgt = object_of(letters[(i + 1) % letters.size()].first);
        auto g = data.find_gen(src, tgt, letters[i].second);
        if (!g)
            throw ParseError("no generator " + letters[i].second + " in Hom(" +
                             letters[i].first + "," +
                             letters[(i + 1) % letters.size()].first + ")");
        w.push_back(*g);
    }
    return w;
}

template <class F>
std::string class_str(const AInftyData<F>& data, const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "|";
        s += data.objects()[data.gen(w[i]).src] + "." + data.gen(w[i]).name;
    }
    return s + "]";
}

template <class F>
void print_cochain(std::ostream& out, const AInftyData<F>& data,
                   const ClassSum<F>& support) {
    if (support.empty()) {
        out << "0\n";
        return;
    }
    for (const auto& [w, c] : support)
        out << c.str() << " * " << class_str(data, w) << "\n";
}

struct TableWriter {
    std::ostream& out;
    bool csv;
    void header(const std::vector<std::string>& cols) {
        if (csv) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                out << (i ? "," : "") << cols[i];
            out << "\n";
        } else {
            for (std::size_t i = 0; i < cols.size(); ++i)
                out << (i ? "\t" : "") << cols[i];
            out << "\n";
        }
    }
    void row(const std::vector<std::string>& cells) { header(cells); }
};

template <class F>
WordBounds resolve_bounds(const AInftyData<F>& data, const Options& o) {
    WordBounds b;
    b.max_length = o.max_len;
    int lo = 0, hi = 0;
    bool first = true;
    for (const BasisElement& g : data.basis()) {
        int s = g.sdeg();
        if (first) {
            lo = hi = s;
            first = false;
        }
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    int auto_lo = std::min(lo, lo * o.max_len) - 1;
    int auto_hi = std::max(hi, hi * o.max_len) + 1;
    b.deg_lo = o.deg_min.value_or(auto_lo);
    b.deg_hi = o.deg_max.value_or(auto_hi);
    return b;
}

int report_failures(std::ostream& out, const VerificationReport& rep,
                    const std::string& what, int fail_code) {
    out << what << ": " << rep.summary() << "\n";
    for (const auto& f : rep.failures) {
        out << "  FAIL " << f.check << " " << f.where;
        if (!f.residual.empty()) out << " residual " << f.residual;
        out << "\n";
    }
    return rep.ok() ? 0 : fail_code;
}

template <class F>
int emit_homology(std::ostream& out, const HomologyTable& table, const Options& o) {
    TableWriter tw{out, o.format == "csv"};
    tw.header({"degree", "dim", "reliable"});
    int sign = o.convention == "cochain" ? -1 : 1;
    std::map<int, HomologyEntry> rows;
    for (const auto& [d, e] : table.dims) rows[sign * d] = e;
    bool unreliable_requested = false;
    for (const auto& [d, e] : rows) {
        tw.row({std::to_string(d), std::to_string(e.dim), e.reliable ? "yes" : "no"});
        if (!e.reliable) unreliable_requested = true;
    }
    // exit 5 only when the user explicitly constrained degrees
    if ((o.deg_min || o.deg_max) && unreliable_requested) return 5;
    return 0;
}

template <class F>
int run_typed(const Options& o, const std::string& field_name, std::uint64_t fp_mod,
              std::ostream& out, std::ostream& err) {
    if (o.command == "fixture") {
        AInftyData<F> data = [&]() {
            if (o.kind == "sphere" || o.kind == "complex-projective" || o.kind == "exterior")
                return frobenius_cohomology<F>(o.kind, o.param);
            if (o.kind == "directed") return random_directed<F>(o.param, o.seed);
            if (o.kind == "exceptional") return random_exceptional<F>(o.param, o.seed);
            throw ParseError("unknown fixture kind " + o.kind);
        }();
        out << emit_document(from_ainfty(data, field_name, fp_mod));
        return 0;
    }

    if (o.input.empty()) throw ParseError("--input is required");
    CategoryDocument doc = parse_document(read_file(o.input));
    AInftyData<F> data = to_ainfty<F>(doc);

    if (o.command == "verify") {
        VerificationReport rep = verify_ainfty(data, o.max_len);
        int rc = report_failures(out, rep, "ainfty-relations", 3);
        if (data.pairing) {
            VerificationReport cy = verify_cy(data, *data.pairing, data.max_arity);
            int rc2 = report_failures(out, cy, "calabi-yau", 3);
            rc = rc ? rc : rc2;
        }
        return rc;
    }
    if (o.command == "hh") {
        HomologyTable t = hochschild_homology(data, resolve_bounds(data, o), !o.serial);
        return emit_homology<F>(out, t, o);
    }
    if (o.command == "ch") {
        HomologyTable t = connes_homology(data, resolve_bounds(data, o), !o.serial);
        return emit_homology<F>(out, t, o);
    }
    if (o.command == "bracket" || o.command == "cobracket") {
        if (!data.pairing) throw DegeneratePairing("input has no pairing");
        SymplecticForm<F> form = induced_omega(data, *data.pairing);
        LieBialgebra<F> lb(data, form);
        CyclicCochain<F> alpha;
        Word wa = parse_class_literal(data, o.alpha);
        CyclicClass ca = canonicalize(data, wa);
        if (ca.vanishes) {
            out << "alpha is a vanishing class\n0\n";
            return 0;
        }
        alpha.support[ca.representative] = sign_of<F>(ca.sign_to_rep == -1 ? 1 : 0);
        if (o.command == "bracket") {
            CyclicCochain<F> beta;
            Word wb = parse_class_literal(data, o.beta);
            CyclicClass cb = canonicalize(data, wb);
            if (cb.vanishes) {
                out << "beta is a vanishing class\n0\n";
                return 0;
            }
            beta.support[cb.representative] = sign_of<F>(cb.sign_to_rep == -1 ? 1 : 0);
            print_cochain(out, data, lb.bracket(alpha, beta).support);
        } else {
            TensorSum<F> d = lb.cobracket(alpha);
            if (d.empty()) {
                out << "0\n";
            } else {
                for (const auto& [uv, c] : d)
                    out << c.str() << " * " << class_str(data, uv.first) << " (x) "
                        << class_str(data, uv.second) << "\n";
            }
        }
        return 0;
    }
    if (o.command == "axioms") {
        if (!data.pairing) throw DegeneratePairing("input has no pairing");
        VerificationReport cy = verify_cy(data, *data.pairing, data.max_arity);
        if (!cy.ok()) return report_failures(out, cy, "calabi-yau", 3);
        SymplecticForm<F> form = induced_omega(data, *data.pairing);
        LieBialgebra<F> lb(data, form);
        AxiomReport rep = axiom_suite(lb, o.max_len, !o.serial);
        TableWriter tw{out, o.format == "csv"};
        tw.header({"axiom", "tuples", "failures", "sample"});
        for (const auto& c : rep.checks)
            tw.row({c.name, std::to_string(c.tuples), std::to_string(c.failures),
                    c.sample.empty() ? "-" : c.sample});
        return rep.ok() ? 0 : 4;
    }
    if (o.command == "ncsymp-compare") {
        VerificationReport rep = quillen_compare(data, o.max_len);
        return report_failures(out, rep, "quillen-comparison", 4);
    }
    (void)err;
    throw ParseError("unknown command " + o.command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Options o = parse_options(args);
        // session field: flag wins, else the document's field line, else Q
        std::string field = o.field;
        if (field.empty() && !o.input.empty() && o.command != "fixture") {
            CategoryDocument peek = parse_document(read_file(o.input));
            field = peek.field == "fp" ? "fp:" + std::to_string(peek.fp_modulus) : "q";
        }
        if (field.empty()) field = "q";
        if (field == "q") return run_typed<Rational>(o, "q", 0, out, err);
        if (field.rfind("fp:", 0) == 0) {
            std::uint64_t p = std::stoull(field.substr(3));
            Fp::set_modulus(p);
            if (p <= static_cast<std::uint64_t>(o.max_len) + 1)
                err << "warning: p = " << p << " <= max word length + 1; the norm "
                    << "operator and coinvariants need invertible word lengths\n";
            return run_typed<Fp>(o, "fp", p, out, err);
        }
        throw ParseError("--field must be q or fp:P");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.cls);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace cycl
