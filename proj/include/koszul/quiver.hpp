#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/scalar.hpp"

namespace koszul {

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return int(vertices.size()); }
    int num_arrows() const { return int(arrows.size()); }

    int vertex_index(const std::string& label) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertices[i] == label) return i;
        return -1;
    }
    int arrow_index(const std::string& name) const {
        for (int i = 0; i < num_arrows(); ++i)
            if (arrows[i].name == name) return i;
        return -1;
    }
    int add_vertex(const std::string& label) {
        if (vertex_index(label) >= 0) throw std::invalid_argument("duplicate vertex " + label);
        vertices.push_back(label);
        return num_vertices() - 1;
    }
    void add_arrow(const std::string& name, int src, int tgt) {
        if (arrow_index(name) >= 0) throw std::invalid_argument("duplicate arrow " + name);
        arrows.push_back({name, src, tgt});
    }
    std::vector<int> arrows_from(int v) const {
        std::vector<int> r;
        for (int i = 0; i < num_arrows(); ++i)
            if (arrows[i].src == v) r.push_back(i);
        return r;
    }
    std::vector<int> arrows_into(int v) const {
        std::vector<int> r;
        for (int i = 0; i < num_arrows(); ++i)
            if (arrows[i].tgt == v) r.push_back(i);
        return r;
    }
};

enum class FieldKind { Q, Fp };

// A homogeneous relation: a linear combination of equal-length paths sharing
// one (source, target) pair. Paths are written composition-style: path[0] is
// applied last, path.back() first, so source = src(path.back()).
template <class F>
struct Relation {
    struct Term {
        F coeff;
        std::vector<int> path;  // arrow indices, leftmost applied last
    };
    std::vector<Term> terms;
    int src = -1, tgt = -1, degree = 0;
};

template <class F>
struct Presentation {
    Quiver quiver;
    std::vector<Relation<F>> relations;
    int bound = 8;
    FieldKind field = FieldKind::Q;
    long prime = 0;

    bool is_quadratic() const {
        for (const auto& r : relations)
            if (r.degree != 2) return false;
        return true;
    }
    bool is_monomial() const {
        for (const auto& r : relations)
            if (r.terms.size() != 1) return false;
        return true;
    }

    void validate() const {
        for (const auto& r : relations) {
            if (r.terms.empty()) throw std::invalid_argument("empty relation");
            if (r.degree < 2) throw std::invalid_argument("relation of degree < 2");
            for (const auto& t : r.terms) {
                if (int(t.path.size()) != r.degree)
                    throw std::invalid_argument("inhomogeneous relation");
                for (size_t i = 0; i + 1 < t.path.size(); ++i)
                    if (quiver.arrows[t.path[i]].src != quiver.arrows[t.path[i + 1]].tgt)
                        throw std::invalid_argument("non-composable path in relation");
                if (quiver.arrows[t.path.back()].src != r.src ||
                    quiver.arrows[t.path.front()].tgt != r.tgt)
                    throw std::invalid_argument("relation terms disagree on source/target");
            }
        }
    }

    Presentation opposite() const {
        Presentation op;
        op.bound = bound;
        op.field = field;
        op.prime = prime;
        op.quiver.vertices = quiver.vertices;
        for (const auto& a : quiver.arrows) op.quiver.add_arrow(a.name, a.tgt, a.src);
        for (const auto& r : relations) {
            Relation<F> ro;
            ro.src = r.tgt;
            ro.tgt = r.src;
            ro.degree = r.degree;
            for (const auto& t : r.terms) {
                typename Relation<F>::Term to;
                to.coeff = t.coeff;
                to.path.assign(t.path.rbegin(), t.path.rend());
                ro.terms.push_back(std::move(to));
            }
            op.relations.push_back(std::move(ro));
        }
        return op;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

// Splits a path expression like "f∘g" / "fog" into arrow names. The UTF-8
// ring operator is preferred; a plain 'o' separator is accepted when every
// resulting piece is a declared arrow, with a greedy longest-match fallback
// for names that themselves contain 'o'.
inline std::vector<std::string> split_path(const std::string& expr, const Quiver& q, int line_no) {
    static const std::string kRing = "\xe2\x88\x98";
    std::vector<std::string> parts;
    if (expr.find(kRing) != std::string::npos) {
        size_t pos = 0;
        while (true) {
            size_t k = expr.find(kRing, pos);
            if (k == std::string::npos) {
                parts.push_back(expr.substr(pos));
                break;
            }
            parts.push_back(expr.substr(pos, k - pos));
            pos = k + kRing.size();
        }
        return parts;
    }
    if (q.arrow_index(expr) >= 0) return {expr};
    // try 'o' as a separator
    {
        std::vector<std::string> cand;
        size_t pos = 0;
        bool ok = true;
        while (pos <= expr.size()) {
            size_t k = expr.find('o', pos);
            std::string piece = (k == std::string::npos) ? expr.substr(pos) : expr.substr(pos, k - pos);
            cand.push_back(piece);
            if (q.arrow_index(piece) < 0) { ok = false; break; }
            if (k == std::string::npos) break;
            pos = k + 1;
        }
        if (ok && cand.size() >= 1) return cand;
    }
    // greedy longest-match
    std::vector<std::string> names;
    for (const auto& a : q.arrows) names.push_back(a.name);
    std::sort(names.begin(), names.end(),
              [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos < expr.size()) {
        if (!out.empty() && expr[pos] == 'o') ++pos;
        bool matched = false;
        for (const auto& n : names) {
            if (expr.compare(pos, n.size(), n) == 0) {
                out.push_back(n);
                pos += n.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": cannot parse path expression '" + expr + "'");
    }
    return out;
}

}  // namespace detail

// Peeks at the `field` line so a caller can choose the scalar type before the
// typed parse. Defaults to Q.
inline std::pair<FieldKind, long> parse_field_choice(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto words = detail::split_ws(line);
        if (words.empty()) continue;
        if (words[0] == "field") {
            if (words.size() >= 2 && words[1] == "Q") return {FieldKind::Q, 0};
            if (words.size() >= 3 && words[1] == "F") return {FieldKind::Fp, std::stol(words[2])};
            throw std::invalid_argument("bad field line: " + line);
        }
    }
    return {FieldKind::Q, 0};
}

template <class F>
Presentation<F> parse_presentation(const std::string& text) {
    Presentation<F> p;
    auto [fk, prime] = parse_field_choice(text);
    p.field = fk;
    p.prime = prime;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto words = detail::split_ws(line);
        if (words.empty()) continue;
        const std::string& key = words[0];
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
        };
        if (key == "field") {
            continue;  // handled in the pre-scan
        } else if (key == "vertex") {
            if (words.size() != 2) fail("vertex needs one label");
            p.quiver.add_vertex(words[1]);
        } else if (key == "arrow") {
            if (words.size() != 4) fail("arrow needs name, source, target");
            int s = p.quiver.vertex_index(words[2]);
            int t = p.quiver.vertex_index(words[3]);
            if (s < 0) fail("unknown vertex " + words[2]);
            if (t < 0) fail("unknown vertex " + words[3]);
            p.quiver.add_arrow(words[1], s, t);
        } else if (key == "relation") {
            Relation<F> rel;
            F sign(1);
            for (size_t w = 1; w < words.size(); ++w) {
                if (words[w] == "+") { sign = F(1); continue; }
                if (words[w] == "-") { sign = F(-1); continue; }
                std::string term = words[w];
                std::string coeff = "1";
                auto star = term.find('*');
                if (star != std::string::npos) {
                    coeff = term.substr(0, star);
                    term = term.substr(star + 1);
                }
                typename Relation<F>::Term t;
                try {
                    t.coeff = sign * parse_scalar<F>(coeff);
                } catch (const std::exception&) {
                    fail("bad coefficient '" + coeff + "'");
                }
                for (const auto& name : detail::split_path(term, p.quiver, line_no)) {
                    int a = p.quiver.arrow_index(name);
                    if (a < 0) fail("unknown arrow '" + name + "'");
                    t.path.push_back(a);
                }
                if (t.path.size() < 2) fail("relation path must have length >= 2");
                rel.terms.push_back(std::move(t));
                sign = F(1);
            }
            if (rel.terms.empty()) fail("empty relation");
            rel.degree = int(rel.terms[0].path.size());
            rel.src = p.quiver.arrows[rel.terms[0].path.back()].src;
            rel.tgt = p.quiver.arrows[rel.terms[0].path.front()].tgt;
            p.relations.push_back(std::move(rel));
        } else if (key == "bound") {
            if (words.size() != 2) fail("bound needs one integer");
            p.bound = std::stoi(words[1]);
            if (p.bound < 2) fail("bound must be >= 2");
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    p.validate();
    return p;
}

template <class F>
std::string serialize_presentation(const Presentation<F>& p) {
    std::ostringstream out;
    if (p.field == FieldKind::Q)
        out << "field Q\n";
    else
        out << "field F " << p.prime << "\n";
    for (const auto& v : p.quiver.vertices) out << "vertex " << v << "\n";
    for (const auto& a : p.quiver.arrows)
        out << "arrow " << a.name << " " << p.quiver.vertices[a.src] << " "
            << p.quiver.vertices[a.tgt] << "\n";
    for (const auto& r : p.relations) {
        out << "relation";
        for (size_t i = 0; i < r.terms.size(); ++i) {
            out << (i ? " + " : " ") << r.terms[i].coeff.str() << "*";
            for (size_t k = 0; k < r.terms[i].path.size(); ++k) {
                if (k) out << "\xe2\x88\x98";
                out << p.quiver.arrows[r.terms[i].path[k]].name;
            }
        }
        out << "\n";
    }
    out << "bound " << p.bound << "\n";
    return out.str();
}

}  // namespace koszul
