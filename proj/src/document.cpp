#include "cycl/document.hpp"

#include <algorithm>
#include <sstream>

namespace cycl {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

int parse_int(const std::string& s, int lineno, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + s + "'");
    }
}

// name@deg token
std::pair<std::string, int> parse_gen_token(const std::string& t, int lineno) {
    auto at = t.rfind('@');
    if (at == std::string::npos || at == 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected name@degree, got '" +
                         t + "'");
    return {t.substr(0, at), parse_int(t.substr(at + 1), lineno, "degree")};
}

}  // namespace

CategoryDocument parse_document(const std::string& text) {
    CategoryDocument doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_end = false;
    auto need = [&](bool cond, const std::string& msg) {
        if (!cond) throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        need(!saw_end, "content after end");
        const std::string& kw = toks[0];
        if (!saw_header) {
            need(kw == "aincat" && toks.size() == 2 && toks[1] == "v1",
                 "document must start with 'aincat v1'");
            saw_header = true;
            continue;
        }
        if (kw == "field") {
            need(toks.size() >= 2, "field needs an argument");
            if (toks[1] == "q") {
                doc.field = "q";
            } else if (toks[1] == "fp") {
                need(toks.size() == 3, "field fp needs a modulus");
                doc.field = "fp";
                doc.fp_modulus = std::stoull(toks[2]);
            } else {
                need(false, "field must be q or fp");
            }
        } else if (kw == "maxarity") {
            need(toks.size() == 2, "maxarity needs one integer");
            doc.max_arity = parse_int(toks[1], lineno, "maxarity");
        } else if (kw == "cy") {
            need(toks.size() == 2, "cy needs one integer");
            doc.cy_degree = parse_int(toks[1], lineno, "cy degree");
        } else if (kw == "objects") {
            need(toks.size() >= 2, "objects needs at least one name");
            doc.objects.assign(toks.begin() + 1, toks.end());
        } else if (kw == "hom") {
            need(toks.size() >= 4 && toks[3] == ":", "hom SRC TGT : gen@deg ...");
            for (std::size_t i = 4; i < toks.size(); ++i) {
                auto [name, deg] = parse_gen_token(toks[i], lineno);
                doc.gens.push_back({toks[1], toks[2], name, deg});
            }
        } else if (kw == "op") {
            need(toks.size() >= 7, "op m|mbar ARITY OBJ (NAME OBJ)+ -> NAME COEFF");
            CategoryDocument::Op op;
            need(toks[1] == "m" || toks[1] == "mbar", "op flavor must be m or mbar");
            op.suspended = toks[1] == "mbar";
            int arity = parse_int(toks[2], lineno, "arity");
            std::size_t pos = 3;
            need(static_cast<int>(toks.size()) == 3 + 2 * arity + 1 + 3,
                 "op token count does not match arity");
            op.chain.push_back(toks[pos++]);
            for (int i = 0; i < arity; ++i) {
                op.inputs.push_back(toks[pos++]);
                op.chain.push_back(toks[pos++]);
            }
            need(toks[pos] == "->", "expected '->'");
            ++pos;
            op.output = toks[pos++];
            op.coeff = toks[pos++];
            doc.ops.push_back(std::move(op));
        } else if (kw == "pair") {
            need(toks.size() == 6, "pair OBJ NAME OBJ NAME COEFF");
            doc.pairs.push_back({toks[1], toks[2], toks[3], toks[4], toks[5]});
        } else if (kw == "meta") {
            need(toks.size() >= 3, "meta KEY VALUE");
            std::string val = toks[2];
            for (std::size_t i = 3; i < toks.size(); ++i) val += " " + toks[i];
            doc.meta.emplace_back(toks[1], val);
        } else if (kw == "end") {
            saw_end = true;
        } else {
            need(false, "unknown keyword '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError("empty document (missing 'aincat v1')");
    if (!saw_end) throw ParseError("truncated document (missing 'end')");
    if (doc.objects.empty()) throw ParseError("document has no objects");
    return doc;
}

std::string emit_document(const CategoryDocument& doc) {
    std::ostringstream os;
    os << "aincat v1\n";
    os << "field " << doc.field;
    if (doc.field == "fp") os << " " << doc.fp_modulus;
    os << "\n";
    os << "maxarity " << doc.max_arity << "\n";
    if (doc.cy_degree) os << "cy " << *doc.cy_degree << "\n";
    os << "objects";
    for (const auto& o : doc.objects) os << " " << o;
    os << "\n";
    // group generators by (src, tgt) in object order
    for (const auto& src : doc.objects) {
        for (const auto& tgt : doc.objects) {
            std::string line;
            for (const auto& g : doc.gens)
                if (g.src == src && g.tgt == tgt)
                    line += " " + g.name + "@" + std::to_string(g.deg);
            if (!line.empty()) os << "hom " << src << " " << tgt << " :" << line << "\n";
        }
    }
    auto ops = doc.ops;
    std::sort(ops.begin(), ops.end(), [](const auto& a, const auto& b) {
        return std::tie(a.chain, a.inputs, a.output, a.coeff) <
               std::tie(b.chain, b.inputs, b.output, b.coeff);
    });
    for (const auto& op : ops) {
        os << "op " << (op.suspended ? "mbar" : "m") << " " << op.inputs.size();
        for (std::size_t i = 0; i < op.inputs.size(); ++i)
            os << " " << op.chain[i] << " " << op.inputs[i];
        os << " " << op.chain.back() << " -> " << op.output << " " << op.coeff << "\n";
    }
    auto pairs = doc.pairs;
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.obj_a, a.name_a, a.obj_b, a.name_b) <
               std::tie(b.obj_a, b.name_a, b.obj_b, b.name_b);
    });
    for (const auto& p : pairs)
        os << "pair " << p.obj_a << " " << p.name_a << " " << p.obj_b << " " << p.name_b
           << " " << p.coeff << "\n";
    for (const auto& [k, v] : doc.meta) os << "meta " << k << " " << v << "\n";
    os << "end\n";
    return os.str();
}

}  // namespace cycl
