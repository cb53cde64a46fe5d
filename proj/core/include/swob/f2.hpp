#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace swob {

// Dense row of F2 entries packed into 64-bit words.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    BitRow& operator^=(const BitRow& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    bool any() const noexcept;
    // index of lowest / highest set bit, or -1
    long first() const noexcept;
    long last() const noexcept;
    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitRow(cols)) {}
    static F2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) noexcept { rows_[r].set(c, v); }
    const BitRow& row(std::size_t r) const noexcept { return rows_[r]; }

    F2Matrix operator*(const F2Matrix& o) const;
    BitRow apply(const BitRow& v) const;  // M v
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    bool det() const;
    std::size_t rank() const;
    std::optional<F2Matrix> inverse() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitRow> rows_;
};

// Incremental echelon basis. Each stored row has a distinct pivot; `pivot_high`
// picks the highest set index as pivot, otherwise the lowest.
class F2Echelon {
public:
    explicit F2Echelon(bool pivot_high = false) : high_(pivot_high) {}

    // reduces v against the basis; returns true if v was independent (and adds it)
    bool insert(BitRow v);
    BitRow reduce(BitRow v) const;
    bool in_span(const BitRow& v) const { return !reduce(v).any(); }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<BitRow>& rows() const noexcept { return rows_; }
    const std::vector<long>& pivots() const noexcept { return piv_; }

private:
    long pivot_of(const BitRow& v) const noexcept { return high_ ? v.last() : v.first(); }
    bool high_;
    std::vector<BitRow> rows_;
    std::vector<long> piv_;
};

// Determinant (= permanent) of an n x n matrix over a commutative ring of
// characteristic 2, expanded row by row over the reachable sets of used columns.
// Zero entries are skipped, so banded Jacobi-Trudi matrices stay cheap.
//   T needs: copy, T*T, T+=T, bool is_zero().
template <class T, class Entry>
T det_char2(int n, const Entry& entry, const T& one) {
    if (n == 0) return one;
    if (n > 64) throw std::length_error("det_char2: matrix larger than 64");
    std::vector<std::vector<T>> cache(static_cast<std::size_t>(n));
    std::vector<std::vector<bool>> nz(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            T e = entry(i, j);
            nz[i].push_back(!e.is_zero());
            cache[i].push_back(std::move(e));
        }
    }
    std::unordered_map<std::uint64_t, T> layer{{0, one}};
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, T> next;
        for (auto& [mask, acc] : layer) {
            for (int j = 0; j < n; ++j) {
                if ((mask >> j) & 1u || !nz[i][j]) continue;
                T term = acc * cache[i][j];
                if (term.is_zero()) continue;
                const std::uint64_t m2 = mask | (std::uint64_t{1} << j);
                auto it = next.find(m2);
                if (it == next.end()) next.emplace(m2, std::move(term));
                else it->second += term;
            }
        }
        layer.clear();
        for (auto& [m, v] : next)
            if (!v.is_zero()) layer.emplace(m, std::move(v));
        if (layer.empty()) break;
    }
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto it = layer.find(full);
    if (it == layer.end()) {
        T z = one;
        z += one;
        return z;
    }
    return it->second;
}

}  // namespace swob
