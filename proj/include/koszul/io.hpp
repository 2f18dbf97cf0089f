#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/linear_complex.hpp"
#include "koszul/module.hpp"
#include "koszul/quiver.hpp"

namespace koszul {

namespace detail {

inline std::vector<std::vector<std::string>> tokenized_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> out;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto words = split_ws(line);
        out.push_back(std::move(words));  // empty rows kept so indices = line numbers
    }
    return out;
}

template <class F>
Matrix<F> parse_matrix_tokens(const std::vector<std::string>& words, size_t start, int line_no) {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };
    if (start >= words.size()) fail("missing matrix shape");
    auto x = words[start].find('x');
    if (x == std::string::npos) fail("matrix shape must look like RxC");
    int r = std::stoi(words[start].substr(0, x));
    int c = std::stoi(words[start].substr(x + 1));
    if (r < 0 || c < 0) fail("negative matrix shape");
    if (words.size() - start - 1 != size_t(r) * size_t(c)) fail("matrix entry count mismatch");
    Matrix<F> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = parse_scalar<F>(words[start + 1 + i * c + j]);
    return m;
}

template <class F>
void print_matrix_tokens(std::ostream& out, const Matrix<F>& m) {
    out << m.rows() << "x" << m.cols();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out << " " << m.at(i, j).str();
}

}  // namespace detail

// Returns the presentation-file reference of a `module over <file>` or
// `lc over <file>` header, so the caller can load the algebra first.
inline std::string over_reference(const std::string& text) {
    for (const auto& words : detail::tokenized_lines(text)) {
        if (words.empty()) continue;
        if (words.size() == 3 && (words[0] == "module" || words[0] == "lc") && words[1] == "over")
            return words[2];
        throw std::invalid_argument("first line must be 'module over <file>' or 'lc over <file>'");
    }
    throw std::invalid_argument("empty module/lc file");
}

// ---- graded-module text format ------------------------------------------
//   module over <presentation-file>
//   window <lo> <hi>
//   dim <vertex> <degree> <n>
//   map <arrow> <degree> RxC <entries row-major>
// Unlisted dims are zero; unlisted maps are zero.

template <class F>
GradedModule<F> parse_module(const std::string& text, typename GradedAlgebra<F>::Ptr A) {
    const Quiver& q = A->quiver();
    int lo = 0, hi = 0;
    bool have_window = false;
    auto lines = detail::tokenized_lines(text);
    auto fail = [](int n, const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(n) + ": " + msg);
    };
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& w = lines[i];
        if (w.empty()) continue;
        if (w[0] == "window") {
            if (w.size() != 3) fail(int(i + 1), "window needs lo and hi");
            lo = std::stoi(w[1]);
            hi = std::stoi(w[2]);
            if (hi < lo) fail(int(i + 1), "window hi below lo");
            have_window = true;
        }
    }
    if (!have_window) {
        // infer the window from the dim lines
        bool any = false;
        for (size_t i = 0; i < lines.size(); ++i) {
            const auto& w = lines[i];
            if (w.empty() || w[0] != "dim") continue;
            if (w.size() != 4) fail(int(i + 1), "dim needs vertex, degree, dimension");
            int d = std::stoi(w[2]);
            if (!any) lo = hi = d;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            any = true;
        }
    }
    std::vector<std::vector<int>> dims(q.num_vertices(), std::vector<int>(hi - lo + 1, 0));
    std::vector<std::vector<Matrix<F>>> act(q.num_arrows());
    std::vector<std::vector<bool>> seen(q.num_arrows(),
                                        std::vector<bool>(std::max(hi - lo, 0), false));
    std::vector<std::tuple<int, int, Matrix<F>>> maps;  // arrow, degree, matrix
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& w = lines[i];
        if (w.empty()) continue;
        int ln = int(i + 1);
        if (w[0] == "module" || w[0] == "window") continue;
        if (w[0] == "dim") {
            if (w.size() != 4) fail(ln, "dim needs vertex, degree, dimension");
            int v = q.vertex_index(w[1]);
            if (v < 0) fail(ln, "unknown vertex " + w[1]);
            int d = std::stoi(w[2]);
            if (d < lo || d > hi) fail(ln, "degree outside the window");
            int n = std::stoi(w[3]);
            if (n < 0) fail(ln, "negative dimension");
            dims[v][d - lo] = n;
        } else if (w[0] == "map") {
            if (w.size() < 4) fail(ln, "map needs arrow, degree, matrix");
            int a = q.arrow_index(w[1]);
            if (a < 0) fail(ln, "unknown arrow " + w[1]);
            int d = std::stoi(w[2]);
            if (d < lo || d >= hi) fail(ln, "map degree outside the window");
            maps.emplace_back(a, d, detail::parse_matrix_tokens<F>(w, 3, ln));
        } else {
            fail(ln, "unknown directive '" + w[0] + "'");
        }
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int d = lo; d < hi; ++d)
            act[a].push_back(Matrix<F>(dims[t][d + 1 - lo], dims[s][d - lo]));
    }
    for (auto& [a, d, m] : maps) {
        if (seen[a][d - lo]) throw std::invalid_argument("duplicate map for arrow " +
                                                         q.arrows[a].name + " at degree " +
                                                         std::to_string(d));
        seen[a][d - lo] = true;
        act[a][d - lo] = std::move(m);
    }
    auto M = GradedModule<F>::make(A, lo, hi, std::move(dims), std::move(act));
    if (!M.check()) throw std::invalid_argument("module violates the algebra relations");
    return M;
}

template <class F>
std::string serialize_module(const GradedModule<F>& M, const std::string& over) {
    const Quiver& q = M.algebra()->quiver();
    std::ostringstream out;
    out << "module over " << over << "\n";
    out << "window " << M.lo() << " " << M.hi() << "\n";
    for (int v = 0; v < q.num_vertices(); ++v)
        for (int d = M.lo(); d <= M.hi(); ++d)
            if (M.dim(v, d) > 0)
                out << "dim " << q.vertices[v] << " " << d << " " << M.dim(v, d) << "\n";
    for (int a = 0; a < q.num_arrows(); ++a)
        for (int d = M.lo(); d < M.hi(); ++d) {
            Matrix<F> m = M.action(a, d);
            if (m.is_zero()) continue;
            out << "map " << q.arrows[a].name << " " << d << " ";
            detail::print_matrix_tokens(out, m);
            out << "\n";
        }
    return out.str();
}

// ---- linear-complex text format -----------------------------------------
//   lc over <presentation-file>
//   summand <position> <vertex> <count>
//   block <position> <fromvertex> <tovertex> <row> <col> <coeff*arrow [+ ...]>
// The block element lives in the degree-one hom space from <tovertex> to
// <fromvertex> (right multiplication by it maps the projective at
// <fromvertex> into the one at <tovertex>).

template <class F>
LinearComplex<F> parse_linear_complex(const std::string& text, typename GradedAlgebra<F>::Ptr A) {
    const Quiver& q = A->quiver();
    auto lines = detail::tokenized_lines(text);
    auto fail = [](int n, const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(n) + ": " + msg);
    };
    int plo = 0, phi = 0;
    bool any = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& w = lines[i];
        if (w.empty() || w[0] != "summand") continue;
        if (w.size() != 4) fail(int(i + 1), "summand needs position, vertex, count");
        int p = std::stoi(w[1]);
        if (!any) plo = phi = p;
        plo = std::min(plo, p);
        phi = std::max(phi, p);
        any = true;
    }
    LinearComplex<F> L = LinearComplex<F>::zero(A, plo, phi);
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& w = lines[i];
        if (w.empty()) continue;
        int ln = int(i + 1);
        if (w[0] == "lc") continue;
        if (w[0] == "summand") {
            int p = std::stoi(w[1]);
            int v = q.vertex_index(w[2]);
            if (v < 0) fail(ln, "unknown vertex " + w[2]);
            int c = std::stoi(w[3]);
            if (c < 0) fail(ln, "negative multiplicity");
            L.m_ref(v, p) = c;
        } else if (w[0] != "block") {
            fail(ln, "unknown directive '" + w[0] + "'");
        }
    }
    L.normalize_shapes();
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& w = lines[i];
        if (w.empty() || w[0] != "block") continue;
        int ln = int(i + 1);
        if (w.size() < 7) fail(ln, "block needs position, from, to, row, col, element");
        int p = std::stoi(w[1]);
        int lam = q.vertex_index(w[2]);
        int mu = q.vertex_index(w[3]);
        if (lam < 0) fail(ln, "unknown vertex " + w[2]);
        if (mu < 0) fail(ln, "unknown vertex " + w[3]);
        if (p < plo || p >= phi) fail(ln, "block position outside the complex");
        int row = std::stoi(w[4]);
        int col = std::stoi(w[5]);
        if (row < 0 || row >= L.m(mu, p + 1)) fail(ln, "block row outside the target summand");
        if (col < 0 || col >= L.m(lam, p)) fail(ln, "block column outside the source summand");
        F sign(1);
        for (size_t t = 6; t < w.size(); ++t) {
            if (w[t] == "+") { sign = F(1); continue; }
            if (w[t] == "-") { sign = F(-1); continue; }
            std::string term = w[t];
            std::string coeff = "1";
            auto star = term.find('*');
            if (star != std::string::npos) {
                coeff = term.substr(0, star);
                term = term.substr(star + 1);
            }
            int a = q.arrow_index(term);
            if (a < 0) fail(ln, "unknown arrow '" + term + "'");
            if (q.arrows[a].src != mu || q.arrows[a].tgt != lam)
                fail(ln, "arrow " + term + " does not run from " + w[3] + " to " + w[2]);
            int k = A->arrow_local_index(a);
            L.block_ref(p, mu, lam, k).at(row, col) += sign * parse_scalar<F>(coeff);
            sign = F(1);
        }
    }
    return L;
}

template <class F>
std::string serialize_linear_complex(const LinearComplex<F>& L, const std::string& over) {
    const auto& A = L.algebra();
    const Quiver& q = A->quiver();
    std::ostringstream out;
    out << "lc over " << over << "\n";
    for (int p = L.plo(); p <= L.phi(); ++p)
        for (int v = 0; v < q.num_vertices(); ++v)
            if (L.m(v, p) > 0)
                out << "summand " << p << " " << q.vertices[v] << " " << L.m(v, p) << "\n";
    for (int p = L.plo(); p < L.phi(); ++p)
        for (int mu = 0; mu < q.num_vertices(); ++mu)
            for (int lam = 0; lam < q.num_vertices(); ++lam) {
                int rows = L.m(mu, p + 1), cols = L.m(lam, p);
                if (rows == 0 || cols == 0) continue;
                // arrows mu -> lam in local-index order
                std::vector<int> arrows(size_t(A->dim(1, mu, lam)), -1);
                for (int a = 0; a < q.num_arrows(); ++a)
                    if (q.arrows[a].src == mu && q.arrows[a].tgt == lam)
                        arrows[A->arrow_local_index(a)] = a;
                for (int r = 0; r < rows; ++r)
                    for (int c = 0; c < cols; ++c) {
                        std::ostringstream elem;
                        bool nz = false;
                        for (size_t k = 0; k < arrows.size(); ++k) {
                            const F& x = L.block(p, mu, lam, int(k)).at(r, c);
                            if (x.is_zero()) continue;
                            if (nz) elem << " + ";
                            elem << x.str() << "*" << q.arrows[arrows[k]].name;
                            nz = true;
                        }
                        if (!nz) continue;
                        out << "block " << p << " " << q.vertices[lam] << " " << q.vertices[mu]
                            << " " << r << " " << c << " " << elem.str() << "\n";
                    }
            }
    return out.str();
}

// ---- flat key = value report --------------------------------------------

class Report {
  public:
    Report(const std::string& subcommand, unsigned seed) {
        add("report", subcommand);
        add("seed", long(seed));
    }
    void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    std::string str() const {
        std::ostringstream out;
        for (const auto& [k, v] : lines_) out << k << " = " << v << "\n";
        return out.str();
    }

  private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace koszul
