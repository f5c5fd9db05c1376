#ifndef ELLCOB_PARTITION_HPP
#define ELLCOB_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ellcob
{

// Integer partition with parts stored in weakly decreasing order.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p <= 0) {
                throw std::invalid_argument("partition parts must be positive");
            }
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>{});
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int> &parts() const
    {
        return parts_;
    }
    int weight() const
    {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    std::size_t length() const
    {
        return parts_.size();
    }
    bool empty() const
    {
        return parts_.empty();
    }

    // Multiset union: the monomial product x_lambda * x_mu.
    friend Partition operator*(const Partition &a, const Partition &b)
    {
        std::vector<int> merged;
        merged.reserve(a.parts_.size() + b.parts_.size());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(), std::back_inserter(merged),
                   std::greater<>{});
        Partition r;
        r.parts_ = std::move(merged);
        return r;
    }

    friend bool operator==(const Partition &, const Partition &) = default;

    // "[2,1,1]"
    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                s += ",";
            }
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    static Partition parse(std::string_view text)
    {
        std::string s;
        for (char c : text) {
            if (c != ' ' && c != '\t') {
                s += c;
            }
        }
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
            throw std::invalid_argument("malformed partition key: '" + std::string(text) + "'");
        }
        s = s.substr(1, s.size() - 2);
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("malformed partition key: '" + std::string(text) + "'");
            }
            parts.push_back(std::stoi(tok));
            if (next == std::string::npos) {
                break;
            }
            pos = next + 1;
            if (pos == s.size()) {
                throw std::invalid_argument("malformed partition key: '" + std::string(text) + "'");
            }
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

// Weight ascending, then reverse lexicographic within a weight:
// [6] < [5,1] < [4,2] < [4,1,1] < ... < [1,1,1,1,1,1].
struct PartitionOrder {
    bool operator()(const Partition &a, const Partition &b) const
    {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) {
            return wa < wb;
        }
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
    }
};

namespace detail
{

inline void partitions_rec(int remaining, int max_part, std::vector<int> &cur, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All partitions of k in decreasing lexicographic order.
inline std::vector<Partition> partitions(int k)
{
    if (k < 0) {
        throw std::invalid_argument("partitions of a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(k, k, cur, out);
    return out;
}

} // namespace ellcob

#endif
