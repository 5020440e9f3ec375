#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genera {

/// Integer partition [i1 >= i2 >= ...] of positive parts, indexing the
/// Pontryagin monomial p_{i1} p_{i2} ...  The empty partition indexes the
/// constant monomial 1.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Ordered by weight, then by parts with larger leading parts first,
    /// so e.g. [2] precedes [1,1].
    friend bool operator<(const Partition& a, const Partition& b) {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                            a.parts_.begin(), a.parts_.end());
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /// "[2,1,1]"; the empty partition is "[]".
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ']';
        return s;
    }

    /// Parses the serialized form; parts must already be sorted non-increasing.
    static Partition parse(std::string_view text) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw std::invalid_argument("malformed partition: \"" + std::string(text) + '"');
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<int> parts;
        while (!body.empty()) {
            const auto comma = body.find(',');
            std::string_view piece = body.substr(0, comma);
            if (piece.empty())
                throw std::invalid_argument("malformed partition: \"" + std::string(text) + '"');
            int value = 0;
            for (char c : piece) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("malformed partition: \"" + std::string(text) + '"');
                value = value * 10 + (c - '0');
            }
            if (value <= 0)
                throw std::invalid_argument("malformed partition: \"" + std::string(text) + '"');
            parts.push_back(value);
            body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        }
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1])
                throw std::invalid_argument("partition not sorted non-increasing: \"" +
                                            std::string(text) + '"');
        return Partition(std::move(parts));
    }

    /// All partitions of weight w, in library order.
    static std::vector<Partition> all_of_weight(int w) {
        std::vector<Partition> out;
        std::vector<int> cur;
        enumerate(w, w, cur, out);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static void enumerate(int remaining, int max_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            enumerate(remaining - p, p, cur, out);
            cur.pop_back();
        }
    }

    std::vector<int> parts_;
};

}  // namespace genera
