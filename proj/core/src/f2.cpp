#include "swob/f2.hpp"

#include <bit>
#include <stdexcept>

namespace swob {

bool BitRow::any() const noexcept {
    for (auto w : words_)
        if (w) return true;
    return false;
}

long BitRow::first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return static_cast<long>(k * 64 + std::countr_zero(words_[k]));
    return -1;
}

long BitRow::last() const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;)
        if (words_[k]) return static_cast<long>(k * 64 + 63 - std::countl_zero(words_[k]));
    return -1;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("F2Matrix: shape mismatch");
    F2Matrix r(rows(), o.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(i, k)) r.rows_[i] ^= o.rows_[k];
    return r;
}

BitRow F2Matrix::apply(const BitRow& v) const {
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix: vector size mismatch");
    BitRow out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        bool acc = false;
        for (std::size_t k = 0; k < cols_; ++k) acc ^= get(i, k) && v.get(k);
        out.set(i, acc);
    }
    return out;
}

std::size_t F2Matrix::rank() const {
    F2Echelon e;
    for (const auto& r : rows_) e.insert(r);
    return e.rank();
}

bool F2Matrix::det() const {
    if (rows() != cols_) throw std::invalid_argument("F2Matrix: det of non-square matrix");
    return rank() == cols_;
}

std::optional<F2Matrix> F2Matrix::inverse() const {
    if (rows() != cols_) throw std::invalid_argument("F2Matrix: inverse of non-square matrix");
    const std::size_t n = cols_;
    std::vector<BitRow> a = rows_;
    std::vector<BitRow> b = identity(n).rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a[p].get(c)) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && a[r].get(c)) {
                a[r] ^= a[c];
                b[r] ^= b[c];
            }
        }
    }
    F2Matrix inv(n, n);
    inv.rows_ = std::move(b);
    return inv;
}

BitRow F2Echelon::reduce(BitRow v) const {
    // rows are kept fully reduced against each other, so one pass suffices
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (v.get(static_cast<std::size_t>(piv_[k]))) v ^= rows_[k];
    return v;
}

bool F2Echelon::insert(BitRow v) {
    v = reduce(v);
    if (!v.any()) return false;
    const long p = pivot_of(v);
    for (auto& r : rows_)
        if (r.get(static_cast<std::size_t>(p))) r ^= v;
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

}  // namespace swob
