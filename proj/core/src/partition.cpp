#include "swob/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace swob {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_padded(const std::vector<int>& parts) {
    std::vector<int> p = parts;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

Partition Partition::rectangle(int width, int height) {
    if (width < 0 || height < 0) throw std::invalid_argument("negative rectangle side");
    if (width == 0 || height == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    // larger lexicographic comes first
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

Partition transpose(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(lambda.parts().front()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

namespace {

// Depth-first over parts: position i takes a value in [floor_i, cap], cap = previous part.
void dfs(std::vector<int>& cur, int remaining, int cap, const Partition& rect,
         std::optional<int> max_length, std::vector<Partition>& out, bool exact) {
    const auto i = cur.size();
    const int floor_i = rect[i];
    const bool can_stop = floor_i == 0;  // rectangle rows are exhausted
    if (can_stop && (!exact || remaining == 0)) out.emplace_back(cur);
    if (max_length && static_cast<int>(i) >= *max_length) return;
    const int lo = std::max(1, floor_i);
    // the rows still required by the rectangle need at least this much weight
    int needed_after = 0;
    for (int k = static_cast<int>(i) + 1; k < rect.length(); ++k) needed_after += rect[k];
    for (int v = lo; v <= std::min(cap, remaining - needed_after); ++v) {
        cur.push_back(v);
        dfs(cur, remaining - v, v, rect, max_length, out, exact);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(int max_weight, const Partition& rectangle,
                                 std::optional<int> max_length) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
    std::vector<Partition> out;
    if (rectangle.weight() > max_weight) return out;
    if (max_length && rectangle.length() > *max_length) return out;
    std::vector<int> cur;
    dfs(cur, max_weight, max_weight, rectangle, max_length, out, false);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(int weight, std::optional<int> max_length) {
    if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    dfs(cur, weight, weight, Partition(), max_length, out, true);
    std::sort(out.begin(), out.end());
    return out;
}

Partition prepend_rectangle(int s, int l, const Partition& mu, const Partition& nu) {
    if (s < 1) throw std::invalid_argument("prepend_rectangle: s must be >= 1");
    if (l < 0) throw std::invalid_argument("prepend_rectangle: l must be >= 0");
    if (mu.length() > s || nu.length() > s)
        throw std::invalid_argument("prepend_rectangle: mu and nu must have length <= s");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(s + nu.weight()));
    for (int i = 0; i < s; ++i) parts.push_back(s + l + mu[i]);
    const Partition nu_t = transpose(nu);
    for (int p : nu_t.parts()) parts.push_back(p);
    // the Partition constructor rejects anything not weakly decreasing
    return Partition(std::move(parts));
}

std::string to_string(const Partition& lambda) {
    std::string s = "(";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda[i]);
    }
    return s + ")";
}

Partition parse_partition(std::string_view text) {
    std::string body;
    for (char c : text)
        if (c != ' ' && c != '\t') body += c;
    if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
        const char close = body.front() == '(' ? ')' : ']';
        if (body.size() < 2 || body.back() != close)
            throw std::invalid_argument("unbalanced partition text: " + std::string(text));
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    if (body.empty()) return {};
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        int v = 0;
        const char* first = body.data() + pos;
        const char* last = body.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            throw std::invalid_argument("bad partition text: " + std::string(text));
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition::from_padded(parts);
}

}  // namespace swob
