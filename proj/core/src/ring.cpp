#include "swob/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "swob/f2.hpp"

namespace swob {

RingSpec::RingSpec(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.degree < 1) throw std::invalid_argument("generator degree must be >= 1");
        if (g.nilpotency < 2) throw std::invalid_argument("nilpotency exponent must be >= 2");
        if (g.name.empty() || !names.insert(g.name).second)
            throw std::invalid_argument("generator names must be nonempty and distinct");
    }
    for (const auto& g : gens_) {
        stride_.push_back(count_);
        count_ *= static_cast<std::size_t>(g.nilpotency);
        if (count_ > (std::size_t{1} << 24)) throw std::invalid_argument("ring too large");
        dim_ += g.degree * (g.nilpotency - 1);
    }
    deg_.resize(count_);
    for (std::size_t k = 0; k < count_; ++k) {
        int d = 0;
        auto e = exponents(k);
        for (std::size_t g = 0; g < gens_.size(); ++g) d += e[g] * gens_[g].degree;
        deg_[k] = d;
    }
    // the all-maximal monomial is the only one of degree dim_
    if (std::count(deg_.begin(), deg_.end(), dim_) != 1)
        throw std::logic_error("top degree is not one-dimensional");
}

std::vector<int> RingSpec::exponents(std::size_t index) const {
    std::vector<int> e(gens_.size());
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        e[g] = static_cast<int>(index % static_cast<std::size_t>(gens_[g].nilpotency));
        index /= static_cast<std::size_t>(gens_[g].nilpotency);
    }
    return e;
}

std::size_t RingSpec::index(const std::vector<int>& e) const {
    if (e.size() != gens_.size()) throw std::invalid_argument("exponent vector has wrong length");
    std::size_t k = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (e[g] < 0 || e[g] >= gens_[g].nilpotency) throw std::invalid_argument("exponent out of range");
        k += static_cast<std::size_t>(e[g]) * stride_[g];
    }
    return k;
}

std::optional<std::size_t> RingSpec::multiply(std::size_t a, std::size_t b) const {
    std::size_t k = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        const auto n = static_cast<std::size_t>(gens_[g].nilpotency);
        const std::size_t s = a % n + b % n;
        if (s >= n) return std::nullopt;
        k += s * stride_[g];
        a /= n;
        b /= n;
    }
    return k;
}

std::optional<std::size_t> RingSpec::generator_index(const std::string& name) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return g;
    return std::nullopt;
}

std::string RingSpec::monomial_str(std::size_t index) const {
    auto e = exponents(index);
    std::string s;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (e[g] == 0) continue;
        if (!s.empty()) s += '*';
        s += gens_[g].name;
        if (e[g] > 1) s += '^' + std::to_string(e[g]);
    }
    return s.empty() ? "1" : s;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.gens_.size() != b.gens_.size()) return false;
    for (std::size_t g = 0; g < a.gens_.size(); ++g) {
        const auto &x = a.gens_[g], &y = b.gens_[g];
        if (x.name != y.name || x.degree != y.degree || x.nilpotency != y.nilpotency) return false;
    }
    return true;
}

RingElement::RingElement(RingSpecPtr spec) : spec_(std::move(spec)) {
    if (!spec_) throw std::invalid_argument("RingElement needs a ring");
    coef_.assign(spec_->monomial_count(), 0);
}

RingElement RingElement::one(RingSpecPtr spec) {
    RingElement e(std::move(spec));
    e.coef_[0] = 1;
    return e;
}

RingElement RingElement::monomial(RingSpecPtr spec, const std::vector<int>& exponents) {
    RingElement e(std::move(spec));
    e.coef_[e.spec_->index(exponents)] = 1;
    return e;
}

RingElement RingElement::generator(RingSpecPtr spec, const std::string& name) {
    auto g = spec->generator_index(name);
    if (!g) throw std::invalid_argument("unknown generator: " + name);
    std::vector<int> e(spec->generators().size(), 0);
    e[*g] = 1;
    return monomial(std::move(spec), e);
}

bool RingElement::is_zero() const noexcept {
    return std::none_of(coef_.begin(), coef_.end(), [](auto c) { return c != 0; });
}

bool RingElement::is_one() const {
    if (!spec_ || coef_[0] == 0) return false;
    return std::none_of(coef_.begin() + 1, coef_.end(), [](auto c) { return c != 0; });
}

std::vector<std::size_t> RingElement::support() const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < coef_.size(); ++k)
        if (coef_[k]) s.push_back(k);
    std::sort(s.begin(), s.end(), [this](std::size_t a, std::size_t b) {
        const int da = spec_->degree(a), db = spec_->degree(b);
        if (da != db) return da < db;
        return spec_->exponents(a) > spec_->exponents(b);
    });
    return s;
}

RingElement RingElement::part(int d) const {
    RingElement r(spec_);
    for (std::size_t k = 0; k < coef_.size(); ++k)
        if (coef_[k] && spec_->degree(k) == d) r.coef_[k] = 1;
    return r;
}

RingElement RingElement::truncated(int max_degree) const {
    RingElement r(spec_);
    for (std::size_t k = 0; k < coef_.size(); ++k)
        if (coef_[k] && spec_->degree(k) <= max_degree) r.coef_[k] = 1;
    return r;
}

int RingElement::max_degree() const {
    int d = -1;
    for (std::size_t k = 0; k < coef_.size(); ++k)
        if (coef_[k]) d = std::max(d, spec_->degree(k));
    return d;
}

int RingElement::min_degree() const {
    int d = -1;
    for (std::size_t k = 0; k < coef_.size(); ++k)
        if (coef_[k] && (d < 0 || spec_->degree(k) < d)) d = spec_->degree(k);
    return d;
}

void RingElement::check_same(const RingElement& o) const {
    if (!spec_ || !o.spec_) throw std::invalid_argument("operation on ringless element");
    if (spec_ != o.spec_ && !(*spec_ == *o.spec_))
        throw std::invalid_argument("elements of different rings");
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same(o);
    for (std::size_t k = 0; k < coef_.size(); ++k) coef_[k] ^= o.coef_[k];
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same(b);
    RingElement r(a.spec_);
    std::vector<std::size_t> sb;
    for (std::size_t k = 0; k < b.coef_.size(); ++k)
        if (b.coef_[k]) sb.push_back(k);
    if (sb.empty()) return r;
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
        if (!a.coef_[i]) continue;
        for (std::size_t j : sb)
            if (auto k = a.spec_->multiply(i, j)) r.coef_[*k] ^= 1u;
    }
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
    if (!a.spec_ || !b.spec_) return a.spec_ == b.spec_;
    if (a.spec_ != b.spec_ && !(*a.spec_ == *b.spec_)) return false;
    return a.coef_ == b.coef_;
}

RingElement RingElement::pow(unsigned k) const {
    RingElement r = one(spec_), base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::string RingElement::str() const {
    auto s = support();
    if (s.empty()) return "0";
    std::string out;
    for (auto k : s) {
        if (!out.empty()) out += '+';
        out += spec_->monomial_str(k);
    }
    return out;
}

RingElement inverse(const RingElement& e) {
    const auto& spec = e.spec();
    if (!spec) throw std::invalid_argument("inverse of ringless element");
    if (!e.coefficient(0)) throw std::invalid_argument("inverse: constant term must be 1");
    const int dim = spec->dimension();
    // supports by degree
    std::vector<std::vector<std::size_t>> ed(static_cast<std::size_t>(dim + 1));
    for (std::size_t k = 0; k < spec->monomial_count(); ++k)
        if (e.coefficient(k)) ed[static_cast<std::size_t>(spec->degree(k))].push_back(k);
    // inv_d = sum_{i>=1} e_i inv_{d-i} (char 2, e_0 = 1)
    RingElement inv(spec);
    inv.toggle(0);
    std::vector<std::vector<std::size_t>> vd(static_cast<std::size_t>(dim + 1));
    vd[0].push_back(0);
    for (int d = 1; d <= dim; ++d) {
        std::vector<std::uint8_t> acc(spec->monomial_count(), 0);
        for (int i = 1; i <= d; ++i)
            for (std::size_t a : ed[static_cast<std::size_t>(i)])
                for (std::size_t b : vd[static_cast<std::size_t>(d - i)])
                    if (auto k = spec->multiply(a, b)) acc[*k] ^= 1u;
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (acc[k]) {
                inv.toggle(k);
                vd[static_cast<std::size_t>(d)].push_back(k);
            }
        }
    }
    return inv;
}

bool integrate(const RingElement& e) { return e.coefficient(e.spec()->top_index()); }

ManifoldModel::ManifoldModel(std::string name, RingSpecPtr ring, RingElement w)
    : name_(std::move(name)), ring_(std::move(ring)), w_(std::move(w)) {
    if (!(*w_.spec() == *ring_)) throw std::invalid_argument("w lives in a different ring");
    if (!w_.coefficient(0)) throw std::invalid_argument("w must have constant term 1");
    wbar_ = inverse(w_);
    if (!(w_ * wbar_).is_one()) throw std::logic_error("w * wbar != 1");
}

RingElement ManifoldModel::fundamental() const {
    RingElement f(ring_);
    f.toggle(ring_->top_index());
    return f;
}

bool ManifoldModel::is_projective_space() const noexcept {
    return ring_->generators().size() == 1 && ring_->generators()[0].degree == 1;
}

ManifoldModel rp(int n, const std::string& generator) {
    if (n < 1) throw std::invalid_argument("rp: n must be >= 1");
    if (n > 4096) throw std::invalid_argument("rp: n too large");
    auto spec = std::make_shared<const RingSpec>(std::vector<Generator>{{generator, 1, n + 1}});
    // (1+x)^{n+1}, coefficients by Lucas
    RingElement w(spec);
    for (int k = 0; k <= n; ++k)
        if (lucas_binom(n + 1, k)) w.toggle(static_cast<std::size_t>(k));
    return ManifoldModel("rp:" + std::to_string(n), spec, w);
}

ManifoldModel product(const ManifoldModel& a, const ManifoldModel& b) {
    std::vector<Generator> gens = a.ring()->generators();
    for (const auto& g : b.ring()->generators()) gens.push_back(g);
    auto spec = std::make_shared<const RingSpec>(gens);  // rejects name clashes
    const std::size_t na = a.ring()->generators().size();
    auto embed = [&](const RingElement& e, bool first) {
        RingElement r(spec);
        const auto& src = *e.spec();
        for (std::size_t k = 0; k < src.monomial_count(); ++k) {
            if (!e.coefficient(k)) continue;
            std::vector<int> full(gens.size(), 0);
            auto ex = src.exponents(k);
            std::copy(ex.begin(), ex.end(), full.begin() + (first ? 0 : static_cast<long>(na)));
            r.toggle(spec->index(full));
        }
        return r;
    };
    return ManifoldModel(a.name() + "," + b.name(), spec, embed(a.w(), true) * embed(b.w(), false));
}

ManifoldModel wu_manifold() {
    auto spec = std::make_shared<const RingSpec>(std::vector<Generator>{{"u", 2, 2}, {"v", 3, 2}});
    RingElement w = RingElement::one(spec) + RingElement::generator(spec, "u") + RingElement::generator(spec, "v");
    return ManifoldModel("wu", spec, w);
}

ManifoldModel parse_space(const std::string& descriptor) {
    if (descriptor == "wu") return wu_manifold();
    static const char* names[] = {"x", "y", "z", "a", "b", "c", "d", "e"};
    std::vector<int> ns;
    std::stringstream ss(descriptor);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("rp:", 0) != 0) throw std::invalid_argument("bad space descriptor: " + descriptor);
        try {
            std::size_t used = 0;
            int n = std::stoi(item.substr(3), &used);
            if (used != item.size() - 3) throw std::invalid_argument("");
            ns.push_back(n);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad space descriptor: " + descriptor);
        }
    }
    if (ns.empty() || ns.size() > std::size(names)) throw std::invalid_argument("bad space descriptor: " + descriptor);
    ManifoldModel m = rp(ns[0], names[0]);
    for (std::size_t k = 1; k < ns.size(); ++k) m = product(m, rp(ns[k], names[k]));
    return m;
}

ClassAssignment::ClassAssignment(RingSpecPtr ring, std::vector<RingElement> images)
    : ring_(std::move(ring)), img_(std::move(images)) {
    graded_ = true;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (!(*img_[i].spec() == *ring_)) throw std::invalid_argument("assignment image in wrong ring");
        const auto& e = img_[i];
        if (!e.is_zero() && !(e.is_homogeneous() && e.min_degree() == static_cast<int>(i + 1))) graded_ = false;
    }
    if (graded_) {
        RingElement total = RingElement::one(ring_);
        for (const auto& e : img_) total += e;
        RingElement inv = inverse(total);
        for (int i = 1; i <= ring_->dimension(); ++i) dual_.push_back(inv.part(i));
        if (ring_->generators().size() == 1) {
            const int g = ring_->generators()[0].degree;
            table_.assign(img_.size() + 1, 0);
            table_[0] = 1;
            for (std::size_t i = 1; i <= img_.size(); ++i)
                if (static_cast<int>(i) % g == 0)
                    table_[i] = img_[i - 1].coefficient(i / static_cast<std::size_t>(g));
        }
    }
}

bool ClassAssignment::coefficient_table(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= table_.size()) return false;
    return table_[static_cast<std::size_t>(i)] != 0;
}

ClassAssignment ClassAssignment::from_total(const RingElement& total) {
    std::vector<RingElement> img;
    for (int i = 1; i <= total.spec()->dimension(); ++i) img.push_back(total.part(i));
    return ClassAssignment(total.spec(), std::move(img));
}

RingElement ClassAssignment::image(int i) const {
    if (i < 0) return RingElement(ring_);
    if (i == 0) return RingElement::one(ring_);
    if (static_cast<std::size_t>(i) > img_.size()) return RingElement(ring_);
    return img_[static_cast<std::size_t>(i - 1)];
}

RingElement ClassAssignment::dual_image(int i) const {
    if (!graded_) throw std::logic_error("dual images need a graded assignment");
    if (i < 0) return RingElement(ring_);
    if (i == 0) return RingElement::one(ring_);
    if (static_cast<std::size_t>(i) > dual_.size()) return RingElement(ring_);
    return dual_[static_cast<std::size_t>(i - 1)];
}

RingElement evaluate(const Mod2Poly& p, const ClassAssignment& a) {
    RingElement r(a.ring());
    const int dim = a.ring()->dimension();
    for (const auto& m : p.terms()) {
        if (a.graded() && m.degree() > dim) break;
        RingElement t = RingElement::one(a.ring());
        for (int i : m.indices()) {
            t = t * a.image(i);
            if (t.is_zero()) break;
        }
        r += t;
    }
    return r;
}

RingElement evaluate_schur_generic(const Partition& lambda, const ClassAssignment& a) {
    return det_char2<RingElement>(
        lambda.length(), [&](int i, int j) { return a.image(lambda[static_cast<std::size_t>(i)] + j - i); },
        RingElement::one(a.ring()));
}

RingElement evaluate(const Partition& lambda, const ClassAssignment& a) {
    const auto& spec = a.ring();
    if (!a.graded()) return evaluate_schur_generic(lambda, a);
    if (lambda.weight() > spec->dimension()) return RingElement(spec);
    const auto& gens = spec->generators();
    if (gens.size() == 1) {
        // every image is c_i x^{i/deg}; the determinant is det(c) x^{|lambda|/deg}
        const int g = gens[0].degree;
        if (lambda.weight() % g != 0) return RingElement(spec);
        const auto k = static_cast<std::size_t>(lambda.length());
        F2Matrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const int idx = lambda[i] + static_cast<int>(j) - static_cast<int>(i);
                m.set(i, j, a.coefficient_table(idx));
            }
        RingElement r(spec);
        if (m.det()) r.toggle(static_cast<std::size_t>(lambda.weight() / g));
        return r;
    }
    // the conjugate form det(e_{lambda'_i+j-i}) is smaller when lambda is tall
    const Partition dual = transpose(lambda);
    if (dual.length() < lambda.length()) {
        return det_char2<RingElement>(
            dual.length(), [&](int i, int j) { return a.dual_image(dual[static_cast<std::size_t>(i)] + j - i); },
            RingElement::one(spec));
    }
    return evaluate_schur_generic(lambda, a);
}

RingElement evaluate(const SchurCombo& c, const ClassAssignment& a) {
    RingElement r(a.ring());
    for (const auto& p : c.partitions()) r += evaluate(p, a);
    return r;
}

RingElement evaluate(const GradedSchurSeries& s, const ClassAssignment& a) {
    RingElement r(a.ring());
    const int dim = a.ring()->dimension();
    for (const auto& [d, part] : s.by_degree()) {
        if (a.graded() && d > dim) break;
        r += evaluate(part, a);
    }
    return r;
}

}  // namespace swob
