#include "swob/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace swob {

template <class Var>
Monomial<Var>::Monomial(std::vector<int> indices) : idx_(std::move(indices)) {
    for (int i : idx_) {
        if (i < 1) throw std::invalid_argument("variable index must be >= 1");
        deg_ += i;
    }
    std::sort(idx_.begin(), idx_.end(), std::greater<>());
}

template <class Var>
Monomial<Var> Monomial<Var>::var(int i, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    return Monomial(std::vector<int>(static_cast<std::size_t>(exponent), i));
}

template <class Var>
int Monomial<Var>::exponent(int i) const noexcept {
    return static_cast<int>(std::count(idx_.begin(), idx_.end(), i));
}

template <class Var>
std::map<int, int> Monomial<Var>::exponents() const {
    std::map<int, int> e;
    for (int i : idx_) ++e[i];
    return e;
}

template <class Var>
Monomial<Var> Monomial<Var>::times(const Monomial& b) const {
    Monomial r;
    r.idx_.resize(idx_.size() + b.idx_.size());
    std::merge(idx_.begin(), idx_.end(), b.idx_.begin(), b.idx_.end(), r.idx_.begin(),
               std::greater<>());
    r.deg_ = deg_ + b.deg_;
    return r;
}

template <class Var>
std::string Monomial<Var>::str() const {
    if (idx_.empty()) return "1";
    std::string s;
    for (auto [i, e] : exponents()) {
        if (!s.empty()) s += '*';
        s += Var::prefix;
        s += std::to_string(i);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

template <class Var>
void GradedPoly<Var>::toggle(const monomial_type& m) {
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
}

template <class Var>
GradedPoly<Var> GradedPoly<Var>::part(int d) const {
    GradedPoly r;
    for (const auto& m : terms_)
        if (m.degree() == d) r.terms_.insert(r.terms_.end(), m);
    return r;
}

template <class Var>
GradedPoly<Var> GradedPoly<Var>::truncated(int max_degree) const {
    GradedPoly r;
    for (const auto& m : terms_) {
        if (m.degree() > max_degree) break;
        r.terms_.insert(r.terms_.end(), m);
    }
    return r;
}

template <class Var>
GradedPoly<Var>& GradedPoly<Var>::operator+=(const GradedPoly& o) {
    for (const auto& m : o.terms_) toggle(m);
    return *this;
}

template <class Var>
GradedPoly<Var> GradedPoly<Var>::multiply(const GradedPoly& a, const GradedPoly& b, int max_degree) {
    GradedPoly r;
    for (const auto& x : a.terms_) {
        if (max_degree >= 0 && x.degree() > max_degree) break;
        for (const auto& y : b.terms_) {
            if (max_degree >= 0 && x.degree() + y.degree() > max_degree) break;
            r.toggle(x * y);
        }
    }
    return r;
}

template <class Var>
std::string GradedPoly<Var>::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& m : terms_) {
        if (!s.empty()) s += '+';
        s += m.str();
    }
    return s;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad polynomial text: " + std::string(whole));
    return v;
}

}  // namespace

template <class Var>
GradedPoly<Var> parse_poly(std::string_view text) {
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    if (body.empty()) throw std::invalid_argument("empty polynomial text");
    GradedPoly<Var> p;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto plus = body.find('+', pos);
        if (plus == std::string::npos) plus = body.size();
        std::string_view term(body.data() + pos, plus - pos);
        if (term.empty()) throw std::invalid_argument("bad polynomial text: " + std::string(text));
        if (term == "0") {
            // zero term
        } else if (term == "1") {
            p.toggle(Monomial<Var>());
        } else {
            std::vector<int> idx;
            std::size_t fpos = 0;
            while (fpos <= term.size()) {
                auto star = term.find('*', fpos);
                if (star == std::string_view::npos) star = term.size();
                std::string_view f = term.substr(fpos, star - fpos);
                std::string_view pre = Var::prefix;
                if (f.substr(0, pre.size()) == pre) f.remove_prefix(pre.size());
                else if (pre == "tau" && !f.empty() && f.front() == 't') f.remove_prefix(1);
                else throw std::invalid_argument("bad variable in: " + std::string(text));
                if (!f.empty() && f.front() == '_') f.remove_prefix(1);
                int e = 1;
                if (auto caret = f.find('^'); caret != std::string_view::npos) {
                    e = parse_int(f.substr(caret + 1), text);
                    f = f.substr(0, caret);
                }
                const int i = parse_int(f, text);
                if (i < 1 || e < 0) throw std::invalid_argument("bad monomial in: " + std::string(text));
                idx.insert(idx.end(), static_cast<std::size_t>(e), i);
                fpos = star + 1;
            }
            p.toggle(Monomial<Var>(std::move(idx)));
        }
        pos = plus + 1;
    }
    return p;
}

template class Monomial<WVar>;
template class Monomial<TVar>;
template class Monomial<TauVar>;
template class GradedPoly<WVar>;
template class GradedPoly<TVar>;
template class GradedPoly<TauVar>;
template GradedPoly<WVar> parse_poly<WVar>(std::string_view);
template GradedPoly<TVar> parse_poly<TVar>(std::string_view);
template GradedPoly<TauVar> parse_poly<TauVar>(std::string_view);

}  // namespace swob
