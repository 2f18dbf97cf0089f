// Command-line front end for the koszul library: quadratic duals, minimal
// resolutions, Ext tables, linear complexes of projectives, the duality
// functors, Koszulity verdicts, and the random property harnesses.
//
// All reports are flat `key = value` lines with the seed in the header.
// Presentation / module / linear-complex payloads use the same text formats
// the library parses, prefixed by `#` report comments, so every emission can
// be fed back into another subcommand.

#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "koszul/dual.hpp"
#include "koszul/functors.hpp"
#include "koszul/io.hpp"
#include "koszul/random_gen.hpp"

namespace fs = std::filesystem;
using namespace koszul;

namespace {

struct Options {
    std::string command;
    std::string file;          // presentation file (most subcommands)
    std::string input;         // module / lc input file
    std::string corpus;        // directory of module files
    std::string vertex;        // vertex label
    std::string lambda_csv;    // comma-separated vertex labels
    std::string direction = "k";
    int positions = 4;
    int bound = -1;            // -1: use the file's bound
    int window = INT_MIN;      // INT_MIN: automatic
    int random_n = 0;
    int max_vertices = 4;
    int max_arrows = 6;
    double density = 0.5;
    unsigned seed = 0;
    bool cross_check = false;
    bool verify = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Resolves `name` relative to the directory of `from` when it is not found
// directly.
std::string resolve_path(const std::string& name, const std::string& from) {
    if (fs::exists(name)) return name;
    fs::path p = fs::path(from).parent_path() / name;
    if (fs::exists(p)) return p.string();
    throw std::runtime_error("cannot find presentation file " + name);
}

int vertex_index_checked(const Quiver& q, const std::string& label) {
    int v = q.vertex_index(label);
    if (v < 0) throw std::runtime_error("unknown vertex '" + label + "'");
    return v;
}

template <class F>
std::string summand_list(const GradedAlgebra<F>& A, const std::vector<ProjectiveSummand<F>>& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << " + ";
        out << "P(" << A.quiver().vertices[s[i].vertex] << ")<" << s[i].shift << ">";
    }
    if (s.empty()) out << "0";
    return out.str();
}

template <class F>
void emit_complex_report(Report& rep, const GradedComplex<F>& Z) {
    rep.add("positions", std::to_string(Z.plo) + ".." + std::to_string(Z.phi));
    const Quiver& q = Z.A->quiver();
    for (int n = Z.plo; n <= Z.phi; ++n) {
        const auto& T = Z.term(n);
        for (int v = 0; v < q.num_vertices(); ++v)
            for (int d = T.lo(); d <= T.hi(); ++d)
                if (T.dim(v, d) > 0)
                    rep.add("dim_" + std::to_string(n) + "_" + q.vertices[v] + "_" +
                                std::to_string(d),
                            T.dim(v, d));
    }
    rep.add("differential_squares_to_zero", Z.check());
}

// Loads a module file: `module over X.quiver` is a module over the algebra of
// X.quiver; `module over X.quiver!` is a module over its quadratic dual.
template <class F>
struct ModuleContext {
    Presentation<F> pres;          // primal presentation
    typename GradedAlgebra<F>::Ptr A, Adual;
    GradedModule<F> M;
    bool over_dual = false;
};

template <class F>
ModuleContext<F> load_module_file(const std::string& path, int bound) {
    ModuleContext<F> ctx;
    std::string text = read_file(path);
    std::string over = over_reference(text);
    ctx.over_dual = !over.empty() && over.back() == '!';
    std::string base = ctx.over_dual ? over.substr(0, over.size() - 1) : over;
    ctx.pres = parse_presentation<F>(read_file(resolve_path(base, path)));
    if (bound > 0) ctx.pres.bound = bound;
    ctx.A = GradedAlgebra<F>::build_quadratic(ctx.pres);
    auto dp = quadratic_dual(ctx.pres).first;
    dp.bound = ctx.pres.bound;
    ctx.Adual = GradedAlgebra<F>::build_quadratic(dp);
    ctx.M = parse_module<F>(text, ctx.over_dual ? ctx.Adual : ctx.A);
    return ctx;
}

template <class F>
int run(const Options& opt) {
    auto load_pres = [&]() {
        auto p = parse_presentation<F>(read_file(opt.file));
        if (opt.bound > 0) p.bound = opt.bound;
        return p;
    };

    if (opt.command == "dual") {
        auto p = load_pres();
        auto d = quadratic_dual(p).first;
        std::cout << "# report = dual\n# seed = " << opt.seed << "\n"
                  << serialize_presentation(d);
        return 0;
    }

    if (opt.command == "info") {
        auto p = load_pres();
        auto A = p.is_quadratic() ? GradedAlgebra<F>::build_quadratic(p)
                                  : GradedAlgebra<F>::build_monomial(p);
        Report rep("info", opt.seed);
        rep.add("field", F::field_name());
        rep.add("vertices", p.quiver.num_vertices());
        rep.add("arrows", p.quiver.num_arrows());
        rep.add("relations", long(p.relations.size()));
        rep.add("quadratic", p.is_quadratic());
        rep.add("bound", p.bound);
        std::ostringstream h;
        auto hs = A->hilbert();
        for (size_t i = 0; i < hs.size(); ++i) h << (i ? "," : "") << hs[i];
        rep.add("hilbert", h.str());
        rep.add("top_degree", A->top_degree());
        rep.add("finite_within_bound", A->finite_within_bound());
        rep.add("degree_one_generated", A->degree_one_generated());
        std::cout << rep.str();
        return 0;
    }

    if (opt.command == "random-gen") {
        RandomPresentationSpec spec;
        spec.max_vertices = opt.max_vertices;
        spec.max_arrows = opt.max_arrows;
        spec.density = opt.density;
        spec.seed = opt.seed;
        auto p = generate_random<F>(spec);
        if (opt.bound > 0) p.bound = opt.bound;
        std::cout << "# report = random-gen\n# seed = " << opt.seed << "\n"
                  << serialize_presentation(p);
        return 0;
    }

    if (opt.command == "resolve") {
        auto p = load_pres();
        auto A = p.is_quadratic() ? GradedAlgebra<F>::build_quadratic(p)
                                  : GradedAlgebra<F>::build_monomial(p);
        int lam = vertex_index_checked(p.quiver, opt.vertex);
        auto R = minimal_projective_resolution(GradedModule<F>::simple(A, lam), opt.positions,
                                               opt.window);
        Report rep("resolve", opt.seed);
        rep.add("simple", opt.vertex);
        rep.add("positions", opt.positions);
        bool linear = true;
        for (size_t i = 0; i < R.summands.size(); ++i) {
            rep.add("step_" + std::to_string(i), summand_list(*A, R.summands[i]));
            for (const auto& s : R.summands[i])
                if (s.shift != -int(i)) linear = false;
        }
        rep.add("verified_exact", R.verify(GradedModule<F>::simple(A, lam)));
        rep.add("linear", linear);
        std::cout << rep.str();
        return 0;
    }

    if (opt.command == "ext-table") {
        auto p = load_pres();
        auto A = GradedAlgebra<F>::build_quadratic(p);
        auto dp = quadratic_dual(p).first;
        dp.bound = p.bound;
        auto D = GradedAlgebra<F>::build_quadratic(dp);
        int k = opt.positions;
        Report rep("ext-table", opt.seed);
        rep.add("positions", k);
        bool match = true;
        for (int lam = 0; lam < p.quiver.num_vertices(); ++lam) {
            auto R = minimal_projective_resolution(GradedModule<F>::simple(A, lam), k, opt.window);
            for (int i = 0; i <= k; ++i)
                for (int mu = 0; mu < p.quiver.num_vertices(); ++mu) {
                    int e = ext_dim(R, i, mu, -i);
                    if (e > 0)
                        rep.add("ext_" + std::to_string(i) + "_" + p.quiver.vertices[lam] + "_" +
                                    p.quiver.vertices[mu],
                                e);
                    int dd = (i <= D->bound()) ? D->dim(i, mu, lam) : 0;
                    if (e != dd) match = false;
                }
        }
        rep.add("matches_dual_dimensions", match);
        std::cout << rep.str();
        return match ? 0 : 1;
    }

    if (opt.command == "lc-injective" || opt.command == "lc-projective") {
        auto p = load_pres();
        auto A = GradedAlgebra<F>::build_quadratic(p);
        int lam = vertex_index_checked(p.quiver, opt.vertex);
        LinearComplex<F> L = (opt.command == "lc-injective")
                                 ? lc_injective<F>(A, lam, opt.positions, opt.window)
                                 : lc_projective<F>(A, A->opposite(), lam, opt.positions,
                                                    opt.window);
        std::cout << "# report = " << opt.command << "\n# seed = " << opt.seed << "\n"
                  << serialize_linear_complex(L, opt.file);
        return 0;
    }

    if (opt.command == "eps-inv") {
        // module over the dual -> its linear complex of projectives
        auto ctx = load_module_file<F>(opt.input, opt.bound);
        if (!ctx.over_dual)
            throw std::runtime_error("eps-inv expects a module over a dual algebra "
                                     "(header `module over <file>!`)");
        auto L = epsilon_inverse<F>(ctx.A, ctx.M);
        std::string base = over_reference(read_file(opt.input));
        base.pop_back();
        std::cout << "# report = eps-inv\n# seed = " << opt.seed << "\n"
                  << serialize_linear_complex(L, base);
        return 0;
    }

    if (opt.command == "eps") {
        // linear complex over the primal algebra -> module over the dual
        std::string text = read_file(opt.input);
        std::string over = over_reference(text);
        auto p = parse_presentation<F>(read_file(resolve_path(over, opt.input)));
        if (opt.bound > 0) p.bound = opt.bound;
        auto A = GradedAlgebra<F>::build_quadratic(p);
        auto dp = quadratic_dual(p).first;
        dp.bound = p.bound;
        auto D = GradedAlgebra<F>::build_quadratic(dp);
        auto L = parse_linear_complex<F>(text, A);
        if (!L.check()) throw std::runtime_error("input complex does not square to zero");
        auto M = epsilon<F>(D, L);
        std::cout << "# report = eps\n# seed = " << opt.seed << "\n"
                  << serialize_module(M, over + "!");
        return 0;
    }

    if (opt.command == "kfunctor") {
        auto ctx = load_module_file<F>(opt.input, opt.bound);
        Report rep("kfunctor", opt.seed);
        rep.add("direction", opt.direction);
        GradedComplex<F> Z;
        if (opt.direction == "k") {
            if (ctx.over_dual)
                throw std::runtime_error("direction k expects a module over the primal algebra");
            Z = kfunctor<F>(ctx.Adual, GradedComplex<F>::concentrated(ctx.M, 0));
        } else if (opt.direction == "kprime") {
            if (!ctx.over_dual)
                throw std::runtime_error(
                    "direction kprime expects a module over the dual algebra "
                    "(header `module over <file>!`)");
            int hi = (opt.window == INT_MIN) ? ctx.pres.bound : opt.window;
            Z = kprime<F>(ctx.A, GradedComplex<F>::concentrated(ctx.M, 0), hi);
        } else {
            throw std::runtime_error("--direction must be k or kprime");
        }
        emit_complex_report(rep, Z);
        bool ok = Z.check();
        std::cout << rep.str();
        return ok ? 0 : 1;
    }

    if (opt.command == "koszul-check") {
        auto p = load_pres();
        auto A = p.is_quadratic() ? GradedAlgebra<F>::build_quadratic(p)
                                  : GradedAlgebra<F>::build_monomial(p);
        int k = (opt.bound > 0) ? opt.bound : p.bound;
        auto v = koszulity_check<F>(A, k, opt.window);
        Report rep("koszul-check", opt.seed);
        rep.add("bound", k);
        rep.add("koszul", v.koszul);
        if (v.koszul) {
            rep.add("verdict", "KOSZUL up to " + std::to_string(k));
        } else {
            std::ostringstream w;
            w << "NOT KOSZUL, witness lambda=" << p.quiver.vertices[v.witness_vertex]
              << " position " << v.witness_position << " shift " << v.witness_shift;
            rep.add("verdict", w.str());
        }
        bool cross_ok = true;
        if (opt.cross_check) {
            if (!p.is_quadratic()) {
                rep.add("cross_check", "not applicable (non-quadratic presentation)");
            } else {
                auto dp = quadratic_dual(p).first;
                dp.bound = p.bound;
                auto D = GradedAlgebra<F>::build_quadratic(dp);
                if (!D->finite_within_bound()) {
                    rep.add("cross_check",
                            "skipped (dual algebra does not vanish below its bound)");
                } else {
                    int hi = (opt.window == INT_MIN) ? A->top_degree() * 2 : opt.window;
                    for (int lam = 0; lam < p.quiver.num_vertices(); ++lam) {
                        bool ok = koszulity_cross_check<F>(A, D, lam, hi);
                        rep.add("cross_check_" + p.quiver.vertices[lam], ok);
                        if (ok != v.koszul) cross_ok = false;
                    }
                    rep.add("cross_check_consistent", cross_ok);
                }
            }
        }
        std::cout << rep.str();
        return cross_ok ? 0 : 1;
    }

    if (opt.command == "roundtrip") {
        Report rep("roundtrip", opt.seed);
        bool all = true;
        int count = 0;
        auto run_one = [&](const std::string& path) {
            auto ctx = load_module_file<F>(path, opt.bound);
            int hi = (opt.window == INT_MIN) ? ctx.pres.bound : opt.window;
            bool ok = ctx.over_dual
                          ? roundtrip_through_projectives<F>(ctx.A, ctx.Adual, ctx.M, hi)
                          : roundtrip_through_dual<F>(ctx.A, ctx.Adual, ctx.M, hi);
            rep.add("roundtrip_" + fs::path(path).filename().string(), ok);
            all = all && ok;
            ++count;
        };
        std::vector<std::string> files;
        for (const auto& e : fs::directory_iterator(opt.corpus))
            if (e.is_regular_file()) files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) run_one(f);
        rep.add("corpus_size", count);
        rep.add("all_roundtrips_identity", all);
        std::cout << rep.str();
        return all ? 0 : 1;
    }

    if (opt.command == "koszul-complex") {
        Report rep("koszul-complex", opt.seed);
        bool ok = true;
        if (opt.verify) {
            auto p = load_pres();
            auto A = GradedAlgebra<F>::build_quadratic(p);
            auto dp = quadratic_dual(p).first;
            dp.bound = p.bound;
            auto D = GradedAlgebra<F>::build_quadratic(dp);
            int w = (opt.window == INT_MIN) ? std::min(4, p.bound) : opt.window;
            auto P = build_P_complex<F>(A, A->opposite(), D, w, w);
            bool d2 = P.complex.delta_squared_zero();
            bool bimod = bigraded_bimodule_check(P);
            rep.add("delta_squared_zero", d2);
            rep.add("bimodule_compatible", bimod);
            ok = ok && d2 && bimod;
        }
        if (opt.random_n > 0) {
            auto r = delta_property_harness<F>(opt.random_n, opt.seed, std::min(opt.random_n, 20));
            rep.add("random_instances", r.tested);
            rep.add("random_rejected_oversize", r.rejected);
            rep.add("random_ok", r.ok);
            rep.add("random_detail", r.detail);
            ok = ok && r.ok;
        }
        std::cout << rep.str();
        return ok ? 0 : 1;
    }

    if (opt.command == "subquot-check") {
        Report rep("subquot-check", opt.seed);
        bool ok = true;
        if (!opt.lambda_csv.empty()) {
            auto p = load_pres();
            std::vector<int> Lambda;
            std::stringstream ss(opt.lambda_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                Lambda.push_back(vertex_index_checked(p.quiver, item));
            auto r = subquotient_duality_check(p, Lambda);
            rep.add("applicable", r.applicable);
            rep.add("ok", r.ok);
            rep.add("detail", r.detail);
            ok = !r.applicable || r.ok;
        }
        if (opt.random_n > 0) {
            auto r = subquotient_property_harness<F>(opt.random_n, opt.seed);
            rep.add("random_instances", r.tested);
            rep.add("random_rejected", r.rejected);
            rep.add("random_ok", r.ok);
            rep.add("random_detail", r.detail);
            ok = ok && r.ok;
        }
        std::cout << rep.str();
        return ok ? 0 : 1;
    }

    throw std::runtime_error("unhandled subcommand " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with graded quiver algebras and their quadratic duals"};
    app.require_subcommand(1);
    Options opt;
    std::string field;
    if (const char* env = std::getenv("KOSZUL_FIELD")) field = env;
    app.add_option("--field", field, "field override: Q or a prime p (default from KOSZUL_FIELD)");

    auto add_common = [&](CLI::App* c, bool needs_file) {
        if (needs_file) c->add_option("file", opt.file, "presentation file")->required();
        c->add_option("--seed", opt.seed, "seed recorded in the report");
        c->add_option("--bound", opt.bound, "override the presentation's degree bound");
        c->add_option("--window", opt.window, "degree window cap for resolutions/realizations");
        return c;
    };

    add_common(app.add_subcommand("dual", "quadratic dual presentation"), true);
    add_common(app.add_subcommand("info", "presentation and algebra summary"), true);
    {
        auto* c = add_common(app.add_subcommand("resolve", "minimal resolution of a simple"), true);
        c->add_option("--simple", opt.vertex, "vertex label of the simple")->required();
        c->add_option("--positions", opt.positions, "number of resolution steps");
    }
    {
        auto* c = add_common(app.add_subcommand("ext-table", "graded Ext dimensions vs dual"), true);
        c->add_option("--positions", opt.positions, "table depth");
    }
    for (const char* name : {"lc-injective", "lc-projective"}) {
        auto* c = add_common(app.add_subcommand(name, "linear complex attached to a vertex"), true);
        c->add_option("--vertex", opt.vertex, "vertex label")->required();
        c->add_option("--positions", opt.positions, "number of positions");
    }
    {
        auto* c = app.add_subcommand("eps", "realize a linear complex as a dual module");
        c->add_option("--lc", opt.input, "linear-complex file")->required();
        add_common(c, false);
    }
    {
        auto* c = app.add_subcommand("eps-inv", "linear complex of a dual module");
        c->add_option("--module", opt.input, "module file over a dual algebra")->required();
        add_common(c, false);
    }
    {
        auto* c = app.add_subcommand("kfunctor", "apply a duality functor to a module");
        c->add_option("--input", opt.input, "module file")->required();
        c->add_option("--direction", opt.direction, "k (to the dual) or kprime (from the dual)");
        add_common(c, false);
    }
    {
        auto* c = add_common(app.add_subcommand("koszul-check", "linearity of all simples"), true);
        c->add_flag("--cross-check", opt.cross_check, "also test projectives through the functor");
    }
    {
        auto* c = app.add_subcommand("roundtrip", "mutual inverse check on a module corpus");
        c->add_option("--corpus", opt.corpus, "directory of module files")->required();
        add_common(c, false);
    }
    {
        auto* c = add_common(app.add_subcommand("koszul-complex", "pairing complex checks"), true);
        c->add_flag("--verify", opt.verify, "verify the bimodule pairing complex of the file");
        c->add_option("--random", opt.random_n, "number of random property instances");
    }
    {
        auto* c = add_common(app.add_subcommand("subquot-check", "subcategory/quotient duality"),
                             true);
        c->add_option("--lambda", opt.lambda_csv, "comma-separated vertex labels");
        c->add_option("--random", opt.random_n, "number of random (presentation, subset) pairs");
    }
    {
        auto* c = app.add_subcommand("random-gen", "generate a random quadratic presentation");
        c->add_option("--max-vertices", opt.max_vertices, "vertex cap");
        c->add_option("--max-arrows", opt.max_arrows, "arrow cap");
        c->add_option("--density", opt.density, "relation density in [0, 1]");
        c->add_option("--seed", opt.seed, "generator seed");
        c->add_option("--bound", opt.bound, "degree bound of the emitted presentation");
    }

    CLI11_PARSE(app, argc, argv);
    opt.command = app.get_subcommands().front()->get_name();

    try {
        // the field comes from the presentation file unless overridden
        FieldKind kind = FieldKind::Q;
        long prime = 0;
        if (!field.empty() && field != "Q") {
            kind = FieldKind::Fp;
            prime = std::stol(field);
        } else if (field.empty() && !opt.file.empty() && fs::exists(opt.file)) {
            std::tie(kind, prime) = parse_field_choice(read_file(opt.file));
        } else if (field.empty() && !opt.input.empty() && fs::exists(opt.input)) {
            std::string over = over_reference(read_file(opt.input));
            if (!over.empty() && over.back() == '!') over.pop_back();
            std::tie(kind, prime) = parse_field_choice(read_file(resolve_path(over, opt.input)));
        }
        if (kind == FieldKind::Fp) {
            Fp::set_modulus(prime);
            return run<Fp>(opt);
        }
        return run<Rational>(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
