#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"
#include "swob/segre.hpp"

namespace swob::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

template <class F>
auto parse_arg(F&& f, const std::string& what) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad " + what + ": " + e.what());
    }
}

Mod2Poly input_poly(const std::optional<std::string>& poly, const std::optional<std::string>& schur) {
    if (poly.has_value() == schur.has_value()) throw UsageError("give exactly one of --poly and --schur");
    if (poly) return parse_arg([&] { return parse_poly<WVar>(*poly); }, "polynomial");
    return schur_to_poly(parse_arg([&] { return parse_schur(*schur); }, "Schur combination"));
}

std::string case_subscript(long n) { return std::to_string(n) + "_" + classify_case(n).letter; }

std::string yesno(bool b) { return b ? "1" : "0"; }

// "t2+(t3+t1*t2)+..." over degrees [lo, hi]
template <class Var>
std::string graded_line(const GradedPoly<Var>& p, int lo, int hi) {
    std::string s;
    for (int d = lo; d <= hi; ++d) {
        if (d > lo) s += '+';
        const auto q = p.part(d);
        if (q.is_zero()) s += '0';
        else if (q.size() == 1) s += q.str();
        else s += '(' + q.str() + ')';
    }
    return s;
}

// ---- bounds ----

struct BoundsOpts {
    std::optional<int> n;
    std::optional<std::string> space;
    std::string sing;
    bool witnesses = false;
    bool json = false;
};

int cmd_bounds(const BoundsOpts& o, std::ostream& out) {
    if (o.n.has_value() == o.space.has_value()) throw UsageError("give exactly one of --n and --space");
    const SingularityFamily f = parse_arg([&] { return parse_family(o.sing); }, "singularity");
    const ManifoldModel m = o.n ? rp(*o.n) : parse_arg([&] { return parse_space(*o.space); }, "space");
    const BoundReport r = bounds(m, f);
    if (o.json) {
        print_json(out, r);
        return 0;
    }
    out << "manifold: " << r.manifold << '\n' << "family: " << r.family.name() << '\n';
    if (r.case_label) {
        const auto& c = *r.case_label;
        out << "case: " << c.letter << " (t=" << c.t << ", p=" << c.p;
        if (c.letter == 'd') out << ", a=" << c.a << ", u=" << c.u << ", b=" << c.b;
        out << ")\n";
    }
    out << "tau: " << r.tau << '\n' << "kappa: " << r.kappa_bruteforce << '\n';
    if (r.kappa_closed) out << "kappa_closed: " << *r.kappa_closed << '\n';
    for (const auto& w : r.witnesses) {
        out << "level " << w.level << ": tp " << (w.thom_nonzero ? "nonzero" : "0") << "; " << w.nonzero.size()
            << " nonzero basis elements";
        if (o.witnesses && !w.nonzero.empty()) out << ':';
        if (o.witnesses)
            for (const auto& p : w.nonzero) out << ' ' << to_string(p);
        out << '\n';
    }
    return 0;
}

// ---- table ----

struct TableOpts {
    std::optional<int> min, max;
    std::string sing = "a2";
    std::optional<std::string> seed_file;
    bool csv = false;
    bool json = false;
};

std::vector<int> read_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read seed file " + path);
    std::vector<int> ns;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<int> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            cell.erase(cell.find_last_not_of(" \t\r") + 1);
            if (cell.empty()) continue;
            try {
                std::size_t used = 0;
                cells.push_back(std::stoi(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw UsageError("bad seed file entry: " + cell);
            }
        }
        if (cells.empty()) continue;
        if (cells.size() == 1) ns.push_back(cells[0]);
        else if (cells.size() == 2) for (int n = cells[0]; n <= cells[1]; ++n) ns.push_back(n);
        else throw UsageError("seed file rows hold n or min,max");
    }
    return ns;
}

int cmd_table(const TableOpts& o, std::ostream& out) {
    if (o.csv && o.json) throw UsageError("--csv and --json are exclusive");
    std::vector<int> ns;
    if (o.seed_file) {
        if (o.min || o.max) throw UsageError("--seed-file replaces --min/--max");
        ns = read_seed_file(*o.seed_file);
    } else {
        if (!o.min || !o.max) throw UsageError("table needs --min and --max (or --seed-file)");
        for (int n = *o.min; n <= *o.max; ++n) ns.push_back(n);
    }
    for (int n : ns)
        if (n < 1) throw UsageError("n must be >= 1");
    const SingularityFamily f = parse_arg([&] { return parse_family(o.sing); }, "singularity");
    struct Row { int n; char c; int tau; int kappa; };
    std::vector<Row> rows;
    for (int n : ns) {
        const ManifoldModel m = rp(n);
        rows.push_back({n, classify_case(n).letter, tau_bound(m, f), kappa_bruteforce(m, f)});
    }
    if (o.json) {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"n", r.n}, {"case", std::string(1, r.c)}, {"tau", r.tau}, {"kappa", r.kappa}});
        print_json(out, {{"family", f.name()}, {"rows", j}});
        return 0;
    }
    if (o.csv) {
        out << "n,case,tau,kappa\n";
        for (const auto& r : rows) out << r.n << ',' << r.c << ',' << r.tau << ',' << r.kappa << '\n';
        return 0;
    }
    std::vector<std::string> head{"n"}, tau{"tau(RP^n," + f.name() + ")"}, kap{"kappa(RP^n," + f.name() + ")"};
    for (const auto& r : rows) {
        head.push_back(std::to_string(r.n) + "_" + r.c + (r.tau != r.kappa ? "*" : ""));
        tau.push_back(std::to_string(r.tau));
        kap.push_back(std::to_string(r.kappa));
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t k = 0; k < head.size(); ++k)
        width[k] = std::max({head[k].size(), tau[k].size(), kap[k].size()});
    for (const auto* line : {&head, &tau, &kap}) {
        for (std::size_t k = 0; k < line->size(); ++k) {
            if (k) out << "  ";
            out << std::setw(static_cast<int>(width[k])) << (k ? std::right : std::left) << (*line)[k];
        }
        out << '\n';
    }
    out << "(* marks columns where the two bounds differ)\n";
    return 0;
}

// ---- ssw-sigma ----

struct SswOpts {
    int r = 1, l = 0, max_degree = 0;
    bool closed = false, schur = false, poly = false, json = false;
};

int cmd_ssw(const SswOpts& o, std::ostream& out) {
    if (o.schur && o.poly) throw UsageError("--schur and --poly are exclusive");
    const GradedSchurSeries s = ssw_sigma(o.r, o.l, o.max_degree, o.closed);
    if (o.json) {
        json j = {{"r", o.r}, {"l", o.l}, {"closed", o.closed}, {"series", s}};
        if (o.poly) j["poly"] = s.to_poly();
        print_json(out, j);
        return 0;
    }
    if (s.is_zero()) out << "0\n";
    for (const auto& [d, part] : s.by_degree())
        out << d << ": " << (o.poly ? schur_to_poly(part).str() : part.str()) << '\n';
    return 0;
}

// ---- eval ----

struct EvalOpts {
    std::string space;
    std::optional<std::string> schur, poly;
    std::string at = "wbar";
    bool json = false;
};

int cmd_eval(const EvalOpts& o, std::ostream& out) {
    const ManifoldModel m = parse_arg([&] { return parse_space(o.space); }, "space");
    if (o.at != "wbar" && o.at != "w") throw UsageError("--at takes w or wbar");
    const auto a = ClassAssignment::from_total(o.at == "w" ? m.w() : m.wbar());
    RingElement v;
    if (o.schur && !o.poly) v = evaluate(parse_arg([&] { return parse_schur(*o.schur); }, "Schur combination"), a);
    else v = evaluate(input_poly(o.poly, o.schur), a);
    if (o.json) print_json(out, {{"space", m.name()}, {"at", o.at}, {"value", v}});
    else out << v.str() << '\n';
    return 0;
}

// ---- euler ----

struct EulerOpts {
    int n = 0;
    std::optional<int> l;
    std::string sing = "sigma2";
    bool closed = false, slices = false, json = false;
};

int cmd_euler(const EulerOpts& o, std::ostream& out) {
    const SingularityFamily f = parse_arg([&] { return parse_family(o.sing); }, "singularity");
    if (f.kind != FamilyKind::sigma) throw UsageError("euler takes sigma1, sigma2, ...");
    LocusReport r;
    if (!o.l) {
        if (f.rank != 2) throw UsageError("--l is required unless --sing sigma2");
        r = euler_sigma2_case_a(o.n);
    } else {
        const ManifoldModel m = rp(o.n);
        const std::string label = f.name() + "(" + std::to_string(*o.l) + ") " + (o.closed ? "closed" : "open");
        r = analyze(m, ssw_sigma(f.rank, *o.l, o.n, o.closed), label, *o.l, f.rank * (f.rank + *o.l));
    }
    if (!o.slices) r.slices.clear();
    if (o.json) {
        print_json(out, r);
        return 0;
    }
    out << "manifold: " << r.manifold << '\n'
        << "series: " << r.series << '\n'
        << "ssw: " << r.ssw_value.str() << '\n'
        << "sw: " << r.sw_value.str() << '\n'
        << "chi2 (parity of Euler characteristic): " << yesno(r.chi2) << '\n';
    if (r.expected_dim) {
        out << "expected dimension: " << *r.expected_dim;
        if (*r.expected_dim < 0) out << " (empty expected)";
        out << '\n';
    }
    if (o.slices) {
        out << "slices (i: chi2):";
        for (auto [i, v] : r.slices) out << ' ' << i << ':' << yesno(v);
        out << '\n';
    }
    return 0;
}

// ---- chi-series ----

struct ChiOpts {
    std::optional<std::string> sing;
    std::optional<std::string> closure;
    int max_degree = 6;
    bool reduce = false, allow_partial = false, json = false;
};

int cmd_chi(const ChiOpts& o, std::ostream& out) {
    if (o.sing.has_value() == o.closure.has_value()) throw UsageError("give exactly one of --sing and --closure");
    if (o.closure) {
        std::vector<std::string> names;
        std::stringstream ss(*o.closure);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
        for (const auto& n : names) parse_arg([&] { return catalog_entry(n); }, "stratum");
        const TauSeries s = closure_series(names, o.max_degree, o.allow_partial);
        if (o.json) {
            print_json(out, {{"closure", names}, {"chi", s}});
            return 0;
        }
        int lo = o.max_degree;
        for (const auto& n : names) lo = std::min(lo, catalog_entry(n).lowest_degree);
        out << "chi: " << s.line(lo, o.max_degree) << '\n';
        if (s.catalog_incomplete()) out << "warning: catalog incomplete in this degree range\n";
        return 0;
    }
    const CatalogEntry& e = parse_arg([&] { return catalog_entry(*o.sing); }, "singularity");
    if (o.max_degree > e.truncation)
        throw std::domain_error(e.display + " is known only through degree " + std::to_string(e.truncation));
    const TangentPoly hw = hat_w(e.ssw, o.max_degree);
    TauSeries chi = chi_series(hw, o.max_degree);
    if (o.reduce) chi = dold_reduce(chi);
    if (o.json) {
        print_json(out, {{"singularity", e.display},
                         {"provenance", e.provenance},
                         {"ssw", e.ssw.truncated(o.max_degree)},
                         {"hat_w", hw.str()},
                         {"chi", chi},
                         {"reduced", o.reduce}});
        return 0;
    }
    const int lo = e.lowest_degree;
    out << "ssw: " << graded_line(e.ssw, lo, o.max_degree) << '\n'
        << "hat_w: " << graded_line(hw, lo, o.max_degree) << '\n'
        << "chi" << (o.reduce ? " (reduced)" : "") << ": " << chi.line(lo, o.max_degree) << '\n';
    if (!chi.unreduced_degrees().empty()) {
        out << "warning: no relations tabulated in degrees";
        for (int d : chi.unreduced_degrees()) out << ' ' << d;
        out << '\n';
    }
    return 0;
}

// ---- lower / sq ----

struct PolyOpOpts {
    std::optional<std::string> poly, schur;
    int k = 0;
    bool json = false;
};

int emit_poly_result(const Mod2Poly& r, bool as_json, std::ostream& out) {
    if (as_json) print_json(out, {{"poly", r}, {"text", r.str()}, {"schur", poly_to_schur(r)}});
    else out << "poly: " << r.str() << '\n' << "schur: " << poly_to_schur(r).str() << '\n';
    return 0;
}

int cmd_lower(const PolyOpOpts& o, std::ostream& out) {
    if (o.k < 0) throw UsageError("--j must be >= 0");
    return emit_poly_result(lowering(input_poly(o.poly, o.schur), o.k), o.json, out);
}

int cmd_sq(const PolyOpOpts& o, std::ostream& out) {
    if (o.k < 0) throw UsageError("--k must be >= 0");
    return emit_poly_result(steenrod_sq(o.k, input_poly(o.poly, o.schur)), o.json, out);
}

// ---- aluffi ----

int cmd_aluffi(int n, bool as_json, std::ostream& out) {
    if (n < 0) throw UsageError("--n must be >= 0");
    const AluffiTransform t = aluffi_matrix(n);
    if (as_json) {
        print_json(out, t);
        return 0;
    }
    out << "rows: slice dimension i; columns: codimension k of [RP^(n-k)]\n";
    out << "det: " << yesno(t.forward.det()) << '\n' << "forward:\n";
    for (std::size_t r = 0; r < t.forward.rows(); ++r) {
        for (std::size_t c = 0; c < t.forward.cols(); ++c) out << (t.forward.get(r, c) ? '1' : '0');
        out << '\n';
    }
    out << "inverse:\n";
    for (std::size_t r = 0; r < t.inverse.rows(); ++r) {
        for (std::size_t c = 0; c < t.inverse.cols(); ++c) out << (t.inverse.get(r, c) ? '1' : '0');
        out << '\n';
    }
    return 0;
}

// ---- restriction-demo ----

int cmd_restriction(bool as_json, std::ostream& out) {
    const RestrictionDemo d = solve_s3_A2();
    if (as_json) {
        print_json(out, d);
        return 0;
    }
    out << "s3(A2) = A c1^3 + B c1c2 + C c3\n";
    for (std::size_t r = 0; r < d.system.matrix.size(); ++r) {
        const auto& row = d.system.matrix[r];
        out << "restriction to " << d.system.equation_labels[r] << ": ";
        const char* names[] = {"A", "B", "C"};
        for (std::size_t k = 0; k < row.size(); ++k) {
            const Rational& q = row[k];
            if (k) out << (q < 0 ? " - " : " + ");
            else if (q < 0) out << '-';
            const Rational a = q < 0 ? Rational(-q) : q;
            if (a != 1) out << a;
            out << names[k];
        }
        out << " = " << d.system.rhs[r] << '\n';
    }
    out << "solution: A=" << d.A << " B=" << d.B << " C=" << d.C << '\n'
        << "s^SM(A2) through degree 3: " << d.answer << '\n'
        << "mod 2: " << d.mod2_degree2.str() << " + " << d.mod2_degree3.str() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mod-2 characteristic-class obstructions to singularity-avoiding maps", "swob"};
    app.require_subcommand(1);

    BoundsOpts bo;
    auto* bounds_cmd = app.add_subcommand("bounds", "tau and kappa bounds for Sigma^i / A2");
    bounds_cmd->add_option("--n", bo.n, "dimension of RP^n");
    bounds_cmd->add_option("--space", bo.space, "space descriptor (rp:N, rp:A,rp:B, wu)");
    bounds_cmd->add_option("--sing", bo.sing, "a2 | sigma1 | sigma2 | ...")->required();
    bounds_cmd->add_flag("--witnesses", bo.witnesses, "list the nonzero basis elements at each level");
    bounds_cmd->add_flag("--json", bo.json);

    TableOpts to;
    auto* table_cmd = app.add_subcommand("table", "tau/kappa table over a range of RP^n");
    table_cmd->add_option("--min", to.min);
    table_cmd->add_option("--max", to.max);
    table_cmd->add_option("--sing", to.sing, "a2 | sigma2 | ...");
    table_cmd->add_option("--seed-file", to.seed_file, "CSV rows: n or min,max");
    table_cmd->add_flag("--csv", to.csv);
    table_cmd->add_flag("--json", to.json);

    SswOpts so;
    auto* ssw_cmd = app.add_subcommand("ssw-sigma", "Segre-SW series of Sigma^r(l)");
    ssw_cmd->add_option("--r", so.r)->required();
    ssw_cmd->add_option("--l", so.l)->required();
    ssw_cmd->add_option("--max-degree", so.max_degree)->required();
    ssw_cmd->add_flag("--closed", so.closed);
    ssw_cmd->add_flag("--schur", so.schur, "Schur basis (default)");
    ssw_cmd->add_flag("--poly", so.poly, "monomial basis");
    ssw_cmd->add_flag("--json", so.json);

    EvalOpts eo;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a class at wbar (or w) of a space");
    eval_cmd->add_option("--space", eo.space)->required();
    eval_cmd->add_option("--schur", eo.schur);
    eval_cmd->add_option("--poly", eo.poly);
    eval_cmd->add_option("--at", eo.at, "w or wbar");
    eval_cmd->add_flag("--json", eo.json);

    EulerOpts uo;
    auto* euler_cmd = app.add_subcommand("euler", "SW class and Euler parity of a Sigma^r locus on RP^n");
    euler_cmd->add_option("--n", uo.n)->required();
    euler_cmd->add_option("--l", uo.l, "level; for sigma2 defaults to the case-a level");
    euler_cmd->add_option("--sing", uo.sing, "sigma1 | sigma2");
    euler_cmd->add_flag("--closed", uo.closed);
    euler_cmd->add_flag("--slices", uo.slices);
    euler_cmd->add_flag("--json", uo.json);

    ChiOpts co;
    auto* chi_cmd = app.add_subcommand("chi-series", "characteristic series of catalog singularities");
    chi_cmd->add_option("--sing", co.sing, "A2 | A3 | A4 | A5 | I22 | sigma1 | sigma2");
    chi_cmd->add_option("--closure", co.closure, "comma separated strata, e.g. A2,A3,A4,A5,I22");
    chi_cmd->add_option("--max-degree", co.max_degree);
    chi_cmd->add_flag("--reduce", co.reduce);
    chi_cmd->add_flag("--allow-partial", co.allow_partial, "closure sums past the complete degree");
    chi_cmd->add_flag("--json", co.json);

    PolyOpOpts lo;
    auto* lower_cmd = app.add_subcommand("lower", "lowering operator");
    lower_cmd->add_option("--poly", lo.poly);
    lower_cmd->add_option("--schur", lo.schur);
    lower_cmd->add_option("--j", lo.k)->required();
    lower_cmd->add_flag("--json", lo.json);

    PolyOpOpts qo;
    auto* sq_cmd = app.add_subcommand("sq", "Steenrod square Sq^k");
    sq_cmd->add_option("--poly", qo.poly);
    sq_cmd->add_option("--schur", qo.schur);
    sq_cmd->add_option("--k", qo.k)->required();
    sq_cmd->add_flag("--json", qo.json);

    int aluffi_n = 0;
    bool aluffi_json = false;
    auto* aluffi_cmd = app.add_subcommand("aluffi", "Ohmoto-Aluffi transform on RP^n");
    aluffi_cmd->add_option("--n", aluffi_n)->required();
    aluffi_cmd->add_flag("--json", aluffi_json);

    bool restr_json = false;
    auto* restr_cmd = app.add_subcommand("restriction-demo", "restriction equations for s3(A2)");
    restr_cmd->add_flag("--json", restr_json);

    std::vector<std::string> argv_store{"swob"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(bo, out);
        if (table_cmd->parsed()) return cmd_table(to, out);
        if (ssw_cmd->parsed()) return cmd_ssw(so, out);
        if (eval_cmd->parsed()) return cmd_eval(eo, out);
        if (euler_cmd->parsed()) return cmd_euler(uo, out);
        if (chi_cmd->parsed()) return cmd_chi(co, out);
        if (lower_cmd->parsed()) return cmd_lower(lo, out);
        if (sq_cmd->parsed()) return cmd_sq(qo, out);
        if (aluffi_cmd->parsed()) return cmd_aluffi(aluffi_n, aluffi_json, out);
        if (restr_cmd->parsed()) return cmd_restriction(restr_json, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace swob::cli
