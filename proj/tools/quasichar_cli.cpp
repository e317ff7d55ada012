// Command-line front end: characteristic quasi-polynomials of integral
// arrangements over Z and quadratic orders.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <quasichar.hpp>

using namespace quasichar;

namespace {

constexpr int exit_input = 2;
constexpr int exit_budget = 3;
constexpr int exit_internal = 4;

struct Options {
    std::string file;
    std::string path = "auto";
    bool json = false;
    std::string ideal;
    std::string kappa;
    std::string dot;
    Int max_norm = 0;
    Int max_points = 1'000'000;
    std::string invert;
    std::string system;
    bool rs_constituents = false;
    bool rs_verify = false;
    unsigned threads = 0;
};

// FILE is a JSON path, or "builtin:H2" / "builtin:H3" / "builtin:H4".
Arrangement open_arrangement(const std::string& file) {
    const std::string prefix = "builtin:";
    if (file.rfind(prefix, 0) == 0) return builtin(file.substr(prefix.size())).arrangement;
    return load_arrangement(file);
}

ConstituentOptions constituent_options(const Options& o) {
    ConstituentOptions c;
    c.threads = o.threads;
    if (o.path == "subset") c.path = ConstituentPath::subset_sum;
    else if (o.path == "layers") c.path = ConstituentPath::layer_poset;
    else if (o.path != "auto") throw ParseError("--path: expected auto, subset or layers");
    return c;
}

std::string ideal_line(const Ideal& x) { return factored_string(x) + " " + x.hnf_string(); }

void print_quasi(const QuasiPolynomial& q) {
    std::cout << "period " << ideal_line(q.period()) << "\n";
    for (const auto& [k, p] : q.constituents()) std::cout << "  " << ideal_line(k) << ": " << p.to_string() << "\n";
}

void print_quasi_json(const QuasiPolynomial& q, double ms) {
    Json j = quasi_to_json(q);
    j["timing_ms"] = static_cast<Int>(ms);
    std::cout << j.dump(2) << "\n";
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_period(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    PeriodData pd = period_data(a, o.threads);
    std::cout << "period " << ideal_line(pd.period) << "\n";
    for (std::size_t r = 1; r < pd.by_rank.size(); ++r)
        if (pd.by_rank[r]) std::cout << "  rank " << r << ": " << ideal_line(*pd.by_rank[r]) << "\n";
    return 0;
}

int cmd_constituents(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    auto t0 = std::chrono::steady_clock::now();
    QuasiPolynomial q = constituents(a, constituent_options(o));
    if (o.json) print_quasi_json(q, since(t0));
    else print_quasi(q);
    return 0;
}

int cmd_eval(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    Ideal x = parse_ideal(a.ring(), o.ideal);
    std::cout << evaluate(a, x, constituent_options(o)) << "\n";
    return 0;
}

int cmd_layers(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    LayerOptions lo;
    lo.threads = o.threads;
    LayerPoset p(a, lo);
    std::optional<Ideal> kappa;
    if (!o.kappa.empty()) kappa = parse_ideal(a.ring(), o.kappa);

    std::vector<std::size_t> ids;
    if (kappa) ids = kappa_torsion_subposet(p, *kappa);
    else
        for (const auto& z : p.layers()) ids.push_back(z.id);

    std::cout << "period " << ideal_line(p.period()) << "\n";
    std::cout << "flats " << p.flats().size() << " layers " << ids.size() << "\n";
    for (auto id : ids) {
        const Layer& z = p.layers()[id];
        std::cout << "  L" << z.id << " " << p.point_string(z) << " dim " << z.dim << " mu " << z.mobius << " tau "
                  << factored_string(z.tau) << " below";
        for (auto c : z.covers) std::cout << " L" << c;
        std::cout << "\n";
    }
    if (kappa) std::cout << "chi " << kappa_characteristic_polynomial(p, *kappa).to_string() << "\n";
    if (!o.dot.empty()) {
        std::string dot = hasse_dot(p, kappa);
        if (o.dot == "-") std::cout << dot;
        else {
            std::ofstream out(o.dot);
            if (!out) throw ParseError(o.dot + ": cannot write");
            out << dot;
        }
    }
    return 0;
}

int cmd_verify(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    QuasiPolynomial q = constituents(a, constituent_options(o));

    // Default sweep: every ideal whose residue space (O/a)^l fits the point budget.
    Int max_norm = o.max_norm;
    if (max_norm <= 0) {
        max_norm = 1;
        while (true) {
            Int pts = 1;
            bool fits = true;
            for (std::size_t k = 0; k < a.ell() && fits; ++k) {
                if (pts > o.max_points / (max_norm + 1)) fits = false;
                else pts *= max_norm + 1;
            }
            if (!fits) break;
            ++max_norm;
        }
    }
    OracleBudget budget{o.max_points};
    std::size_t checked = 0, bad = 0;
    for (const auto& x : ideals_up_to_norm(a.ring(), max_norm)) {
        Int fast = qp_evaluate(q, x);
        Int slow = brute_count_complement(a, x, budget, o.threads);
        ++checked;
        if (fast != slow) {
            ++bad;
            std::cout << "mismatch at " << ideal_line(x) << ": " << fast << " vs " << slow << "\n";
        }
    }
    if (bad) {
        std::cerr << "verify: " << bad << " of " << checked << " ideals disagree\n";
        return exit_internal;
    }
    std::cout << "all " << checked << " ideals agree (norm <= " << max_norm << ")\n";
    return 0;
}

int cmd_minimality(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    MinimalityCertificate c = minimality_certificate(a, constituent_options(o));
    std::cout << "period " << ideal_line(c.period) << "\n";
    for (std::size_t d = 0; d < c.rho_by_dim.size(); ++d)
        if (c.rho_by_dim[d]) std::cout << "  dim " << d << ": " << ideal_line(*c.rho_by_dim[d]) << "\n";
    std::cout << "minimum period " << ideal_line(c.minimum) << "\n";
    for (const auto& w : c.witnesses)
        std::cout << "  prime " << ideal_line(w.prime) << ": f^" << factored_string(w.kappa1) << " = " << w.f1.to_string()
                  << " differs from f^" << factored_string(w.kappa2) << " = " << w.f2.to_string() << "\n";
    std::cout << "period is minimal\n";
    return 0;
}

int cmd_localize(const Options& o) {
    Arrangement a = open_arrangement(o.file);
    auto s = elements_from_json(a.ring(), parse_json_text(o.invert, "--invert"), "--invert");
    Localization loc = localize(a, s, constituent_options(o));
    std::cout << "inverted primes";
    if (loc.inverted_primes.empty()) std::cout << " (none)";
    for (const auto& p : loc.inverted_primes) std::cout << " " << ideal_line(p);
    std::cout << "\n";
    print_quasi(loc.quasi);
    return 0;
}

int cmd_rootsystem(const Options& o) {
    RootSystemData rs = builtin(o.system);
    std::cout << rs.name << ": rank " << rs.rank << ", " << rs.positive_roots << " positive roots, Coxeter number "
              << rs.coxeter_number << ", exponents";
    for (auto e : rs.exponents) std::cout << " " << e;
    std::cout << "\n";
    if (!o.rs_constituents && !o.rs_verify) return 0;

    auto t0 = std::chrono::steady_clock::now();
    QuasiPolynomial q = constituents(rs.arrangement, constituent_options(o));
    if (o.rs_constituents) {
        if (o.json) print_quasi_json(q, since(t0));
        else print_quasi(q);
    }
    if (!o.rs_verify) return 0;

    bool ok = true;
    Polynomial whitney = whitney_characteristic_polynomial(intersection_lattice(rs.arrangement, o.threads), rs.rank);
    bool w = whitney == q.constituent(Ideal::unit(q.ring()));
    std::cout << "whitney " << (w ? "ok" : "FAILED") << "\n";
    ok = ok && w;

    const Int h = rs.coxeter_number;
    std::size_t positivity_bad = 0;
    const auto ideals = ideals_up_to_norm(q.ring(), 40);
    for (const auto& x : ideals)
        if ((qp_evaluate(q, x) > 0) != (x.norm() >= h)) ++positivity_bad;
    std::cout << "positivity (" << ideals.size() << " ideals, norm <= 40) " << (positivity_bad ? "FAILED" : "ok") << "\n";
    ok = ok && positivity_bad == 0;

    Ideal two = Ideal::of_integer(q.ring(), 2);
    for (const auto& [k, f] : q.constituents()) {
        Polynomial dual = f.reflect(h);
        if (rs.rank % 2 == 1) dual = -dual;
        bool holds = dual == f;
        bool odd = !two.contains(k);
        std::cout << "duality " << factored_string(k) << (odd ? " (odd) " : " (even) ") << (holds ? "holds" : "fails") << "\n";
        if (odd && !holds) ok = false;
    }
    if (!ok) {
        std::cerr << "rootsystem: verification failed\n";
        return exit_internal;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic quasi-polynomials of integral arrangements over Z and quadratic orders"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

    auto file_arg = [&](CLI::App* c) { c->add_option("file", o.file, "Arrangement JSON file or builtin:H2|H3|H4")->required(); };
    auto path_opt = [&](CLI::App* c) { c->add_option("--path", o.path, "auto, subset or layers"); };

    auto* period = app.add_subcommand("period", "LCM period and its per-rank parts");
    file_arg(period);

    auto* cons = app.add_subcommand("constituents", "All constituents f^k for k dividing the period");
    file_arg(cons);
    path_opt(cons);
    cons->add_flag("--json", o.json, "Machine-readable output");

    auto* ev = app.add_subcommand("eval", "Evaluate at an ideal");
    file_arg(ev);
    path_opt(ev);
    ev->add_option("--ideal", o.ideal, "Generators, e.g. \"[[2,0],[1,-1]]\"")->required();

    auto* lay = app.add_subcommand("layers", "Layer poset of the torsion arrangement");
    file_arg(lay);
    lay->add_option("--kappa", o.kappa, "Restrict to the k-torsion subposet");
    lay->add_option("--dot", o.dot, "Write the Hasse diagram in DOT format ('-' for stdout)");

    auto* ver = app.add_subcommand("verify", "Compare evaluation against brute-force counting");
    file_arg(ver);
    path_opt(ver);
    ver->add_option("--max-norm", o.max_norm, "Largest norm to sweep");
    ver->add_option("--max-points", o.max_points, "Largest residue space the counter may enumerate");

    auto* mini = app.add_subcommand("minimality", "Certificate that the LCM period is the minimum period");
    file_arg(mini);
    path_opt(mini);

    auto* loc = app.add_subcommand("localize", "Constituents after inverting elements");
    file_arg(loc);
    path_opt(loc);
    loc->add_option("--invert", o.invert, "Elements to invert, e.g. \"[[2,0]]\"")->required();

    auto* rs = app.add_subcommand("rootsystem", "Built-in root systems H2, H3, H4");
    rs->add_option("name", o.system, "H2, H3 or H4")->required();
    rs->add_flag("--constituents", o.rs_constituents, "Print the constituents");
    rs->add_flag("--verify", o.rs_verify, "Check Whitney agreement, positivity and duality");
    rs->add_flag("--json", o.json, "Machine-readable constituents");
    path_opt(rs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        if (*period) return cmd_period(o);
        if (*cons) return cmd_constituents(o);
        if (*ev) return cmd_eval(o);
        if (*lay) return cmd_layers(o);
        if (*ver) return cmd_verify(o);
        if (*mini) return cmd_minimality(o);
        if (*loc) return cmd_localize(o);
        if (*rs) return cmd_rootsystem(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::input: return exit_input;
        case ErrorKind::budget: return exit_budget;
        case ErrorKind::internal: return exit_internal;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_input;
}
