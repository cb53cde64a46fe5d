#include "json_io.hpp"

namespace swob {

void to_json(json& j, const Partition& p) { j = p.parts(); }
void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const SchurCombo& c) {
    j = json::array();
    for (const auto& p : c.partitions()) j.push_back(p);
}
void from_json(const json& j, SchurCombo& c) {
    c = SchurCombo();
    for (const auto& p : j) c.toggle(p.get<Partition>());
}

namespace {

template <class Var>
json poly_json(const GradedPoly<Var>& p) {
    json out = json::array();
    for (const auto& m : p.terms()) {
        json e = json::object();
        for (auto [i, k] : m.exponents()) e[std::to_string(i)] = k;
        out.push_back(e);
    }
    return out;
}

template <class Var>
GradedPoly<Var> poly_from(const json& j) {
    GradedPoly<Var> p;
    for (const auto& e : j) {
        std::vector<int> idx;
        for (auto it = e.begin(); it != e.end(); ++it)
            idx.insert(idx.end(), static_cast<std::size_t>(it.value().get<int>()), std::stoi(it.key()));
        p.toggle(Monomial<Var>(idx));
    }
    return p;
}

}  // namespace

void to_json(json& j, const Mod2Poly& p) { j = poly_json(p); }
void from_json(const json& j, Mod2Poly& p) { p = poly_from<WVar>(j); }

void to_json(json& j, const GradedSchurSeries& s) {
    json deg = json::object();
    for (const auto& [d, part] : s.by_degree()) deg[std::to_string(d)] = part;
    j = {{"max_degree", s.max_degree()}, {"by_degree", deg}};
}
void from_json(const json& j, GradedSchurSeries& s) {
    s = GradedSchurSeries(j.at("max_degree").get<int>());
    for (const auto& [d, part] : j.at("by_degree").items()) s.add(part.get<SchurCombo>());
}

void to_json(json& j, const TauSeries& s) {
    json deg = json::object();
    for (const auto& [d, part] : s.by_degree()) {
        json terms = json::array();
        for (const auto& m : part.terms()) terms.push_back(m.indices());
        deg[std::to_string(d)] = terms;
    }
    j = {{"max_degree", s.max_degree()},
         {"by_degree", deg},
         {"unreduced_degrees", s.unreduced_degrees()},
         {"catalog_incomplete", s.catalog_incomplete()}};
}
void from_json(const json& j, TauSeries& s) {
    TauPoly p;
    for (const auto& [d, terms] : j.at("by_degree").items())
        for (const auto& m : terms) p.toggle(TauMonomial(m.get<std::vector<int>>()));
    s = TauSeries(p, j.at("max_degree").get<int>());
    for (int d : j.at("unreduced_degrees")) s.mark_unreduced(d);
    if (j.at("catalog_incomplete").get<bool>()) s.mark_incomplete();
}

void to_json(json& j, const RingElement& e) {
    json gens = json::array();
    for (const auto& g : e.spec()->generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"nilpotency", g.nilpotency}});
    json terms = json::array();
    for (auto k : e.support())
        terms.push_back({{"monomial", e.spec()->monomial_str(k)},
                         {"exponents", e.spec()->exponents(k)},
                         {"degree", e.spec()->degree(k)}});
    j = {{"ring", gens}, {"terms", terms}, {"text", e.str()}};
}
void from_json(const json& j, RingElement& e) {
    std::vector<Generator> gens;
    for (const auto& g : j.at("ring"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(), g.at("nilpotency").get<int>()});
    auto spec = std::make_shared<const RingSpec>(gens);
    e = RingElement(spec);
    for (const auto& t : j.at("terms")) e.toggle(spec->index(t.at("exponents").get<std::vector<int>>()));
}

void to_json(json& j, const CaseLabel& c) {
    j = {{"case", std::string(1, c.letter)}, {"t", c.t}, {"p", c.p}};
    if (c.letter == 'd') j["decomposition"] = {{"a", c.a}, {"u", c.u}, {"b", c.b}};
}
void from_json(const json& j, CaseLabel& c) {
    c = CaseLabel();
    c.letter = j.at("case").get<std::string>().at(0);
    c.t = j.at("t").get<int>();
    c.p = j.at("p").get<int>();
    if (j.contains("decomposition")) {
        c.a = j["decomposition"].at("a").get<long>();
        c.u = j["decomposition"].at("u").get<int>();
        c.b = j["decomposition"].at("b").get<long>();
    }
}

void to_json(json& j, const BoundReport& r) {
    json wit = json::array();
    for (const auto& w : r.witnesses)
        wit.push_back({{"level", w.level}, {"thom_nonzero", w.thom_nonzero}, {"nonzero", w.nonzero}});
    j = {{"n", r.n},
         {"manifold", r.manifold},
         {"family", r.family.name()},
         {"tau", r.tau},
         {"kappa", r.kappa_bruteforce},
         {"kappa_closed", r.kappa_closed ? json(*r.kappa_closed) : json(nullptr)},
         {"case", r.case_label ? json(*r.case_label) : json(nullptr)},
         {"witnesses", wit}};
}
void from_json(const json& j, BoundReport& r) {
    r = BoundReport();
    r.n = j.at("n").get<int>();
    r.manifold = j.at("manifold").get<std::string>();
    r.family = parse_family(j.at("family").get<std::string>());
    r.tau = j.at("tau").get<int>();
    r.kappa_bruteforce = j.at("kappa").get<int>();
    if (!j.at("kappa_closed").is_null()) r.kappa_closed = j["kappa_closed"].get<int>();
    if (!j.at("case").is_null()) r.case_label = j["case"].get<CaseLabel>();
    for (const auto& w : j.at("witnesses"))
        r.witnesses.push_back({w.at("level").get<int>(), w.at("nonzero").get<std::vector<Partition>>(),
                               w.at("thom_nonzero").get<bool>()});
}

void to_json(json& j, const LocusReport& r) {
    json slices = json::object();
    for (auto [i, v] : r.slices) slices[std::to_string(i)] = v ? 1 : 0;
    j = {{"manifold", r.manifold},
         {"level", r.level},
         {"series", r.series},
         {"ssw", r.ssw_value},
         {"sw", r.sw_value},
         {"chi2", r.chi2 ? 1 : 0},
         {"slices", slices},
         {"expected_dim", r.expected_dim ? json(*r.expected_dim) : json(nullptr)}};
    if (r.expected_dim && *r.expected_dim < 0) j["remark"] = "empty expected";
}
void from_json(const json& j, LocusReport& r) {
    r = LocusReport();
    r.manifold = j.at("manifold").get<std::string>();
    r.level = j.at("level").get<int>();
    r.series = j.at("series").get<std::string>();
    r.ssw_value = j.at("ssw").get<RingElement>();
    r.sw_value = j.at("sw").get<RingElement>();
    r.chi2 = j.at("chi2").get<int>() != 0;
    for (const auto& [i, v] : j.at("slices").items()) r.slices[std::stoi(i)] = v.get<int>() != 0;
    if (!j.at("expected_dim").is_null()) r.expected_dim = j["expected_dim"].get<int>();
}

void to_json(json& j, const F2Matrix& m) {
    j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string row;
        for (std::size_t c = 0; c < m.cols(); ++c) row += m.get(r, c) ? '1' : '0';
        j.push_back(row);
    }
}
void from_json(const json& j, F2Matrix& m) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].get<std::string>().size() : 0;
    m = F2Matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto s = j[r].get<std::string>();
        if (s.size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, s[c] == '1');
    }
}

void to_json(json& j, const AluffiTransform& t) {
    j = {{"n", static_cast<int>(t.forward.rows()) - 1},
         {"det", t.forward.det() ? 1 : 0},
         {"forward", t.forward},
         {"inverse", t.inverse}};
}
void from_json(const json& j, AluffiTransform& t) {
    t.forward = j.at("forward").get<F2Matrix>();
    t.inverse = j.at("inverse").get<F2Matrix>();
}

namespace {

json rational(const Rational& q) { return q.str(); }
Rational rational_from(const json& j) { return Rational(j.get<std::string>()); }

}  // namespace

void to_json(json& j, const RestrictionDemo& d) {
    json rows = json::array();
    for (std::size_t r = 0; r < d.system.matrix.size(); ++r) {
        json coeffs = json::array();
        for (const auto& q : d.system.matrix[r]) coeffs.push_back(rational(q));
        rows.push_back({{"label", d.system.equation_labels[r]}, {"coefficients", coeffs}, {"rhs", rational(d.system.rhs[r])}});
    }
    j = {{"unknowns", d.system.unknowns},
         {"equations", rows},
         {"solution", {{"A", rational(d.A)}, {"B", rational(d.B)}, {"C", rational(d.C)}}},
         {"answer", d.answer},
         {"mod2", {{"degree2", d.mod2_degree2}, {"degree3", d.mod2_degree3}}}};
}
void from_json(const json& j, RestrictionDemo& d) {
    d = RestrictionDemo();
    d.system.unknowns = j.at("unknowns").get<std::vector<std::string>>();
    for (const auto& row : j.at("equations")) {
        std::vector<Rational> coeffs;
        for (const auto& q : row.at("coefficients")) coeffs.push_back(rational_from(q));
        d.system.matrix.push_back(coeffs);
        d.system.rhs.push_back(rational_from(row.at("rhs")));
        d.system.equation_labels.push_back(row.at("label").get<std::string>());
    }
    d.A = rational_from(j.at("solution").at("A"));
    d.B = rational_from(j.at("solution").at("B"));
    d.C = rational_from(j.at("solution").at("C"));
    d.answer = j.at("answer").get<std::string>();
    d.mod2_degree2 = j.at("mod2").at("degree2").get<Mod2Poly>();
    d.mod2_degree3 = j.at("mod2").at("degree3").get<Mod2Poly>();
}

}  // namespace swob
