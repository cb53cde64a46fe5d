#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swob {

// Weakly decreasing list of positive integers. Immutable once built.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // trailing zeros are dropped, anything else must already be a partition
    static Partition from_padded(const std::vector<int>& parts);
    static Partition rectangle(int width, int height);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // 0-based; missing parts read as 0
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    // weight ascending, then lexicographic descending
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Partition transpose(const Partition& lambda);

// true iff mu_i <= lambda_i for all i
bool contains(const Partition& lambda, const Partition& mu);

// every lambda with |lambda| <= max_weight and rectangle inside lambda, sorted
std::vector<Partition> enumerate(int max_weight, const Partition& rectangle,
                                 std::optional<int> max_length = std::nullopt);

// all partitions of exactly `weight`, sorted
std::vector<Partition> partitions_of(int weight, std::optional<int> max_length = std::nullopt);

// ((s+l)+mu_1, ..., (s+l)+mu_s, transpose(nu))
Partition prepend_rectangle(int s, int l, const Partition& mu, const Partition& nu);

// "(a,b,c)"; the empty partition prints as "()"
std::string to_string(const Partition& lambda);

// accepts "(a,b)", "[a,b]", "a,b" and the empty forms; throws std::invalid_argument
Partition parse_partition(std::string_view text);

}  // namespace swob
