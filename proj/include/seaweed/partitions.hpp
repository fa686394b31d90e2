#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seaweed/integer.hpp"

namespace seaweed {

using Part = std::uint32_t;

// Ordered sequence of positive parts. Seaweed types are pairs of these.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
        for (Part p : parts_) {
            if (p == 0)
                throw std::invalid_argument("composition parts must be positive");
            weight_ += p;
        }
    }
    Composition(std::initializer_list<Part> parts) : Composition(std::vector<Part>(parts)) {}

    // 1^n
    static Composition ones(std::uint64_t n) { return Composition(std::vector<Part>(n, 1)); }
    // the single-block composition (n); empty for n = 0
    static Composition single(std::uint64_t n) {
        return n == 0 ? Composition() : Composition(std::vector<Part>{static_cast<Part>(n)});
    }

    std::span<const Part> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint64_t weight() const { return weight_; }
    Part operator[](std::size_t i) const { return parts_[i]; }

    std::size_t odd_count() const {
        return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](Part p) { return p % 2 == 1; }));
    }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<Part> parts_;
    std::uint64_t weight_ = 0;
};

// Weakly decreasing sequence of positive parts with cached weight and odd-part count.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            weight_ += parts_[i];
            op_count_ += parts_[i] % 2;
        }
    }
    Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

    std::span<const Part> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint64_t weight() const { return weight_; }
    // op(lambda): number of odd parts
    std::size_t op_count() const { return op_count_; }
    Part operator[](std::size_t i) const { return parts_[i]; }

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    friend class PartitionStream;

    void push(Part p) {
        parts_.push_back(p);
        weight_ += p;
        op_count_ += p % 2;
    }
    void pop() {
        Part p = parts_.back();
        parts_.pop_back();
        weight_ -= p;
        op_count_ -= p % 2;
    }

    std::vector<Part> parts_;
    std::uint64_t weight_ = 0;
    std::size_t op_count_ = 0;
};

// Which partitions belong to a set S. Every class except Distinct is a per-part test;
// Distinct additionally caps multiplicities at one.
class PartitionClass {
public:
    enum class Kind { All, Distinct, OddParts, OddModFourD, NoOnes, Predicate };
    using PartTest = std::function<bool(Part)>;

    static PartitionClass all() { return PartitionClass(Kind::All); }
    static PartitionClass distinct() { return PartitionClass(Kind::Distinct); }
    static PartitionClass odd_parts() { return PartitionClass(Kind::OddParts); }
    static PartitionClass odd_mod_four_d(std::uint32_t d) {
        if (d == 0)
            throw std::invalid_argument("OddModFourD requires d >= 1");
        PartitionClass c(Kind::OddModFourD);
        c.d_ = d;
        return c;
    }
    static PartitionClass no_ones() { return PartitionClass(Kind::NoOnes); }
    static PartitionClass predicate(std::string label, PartTest test) {
        PartitionClass c(Kind::Predicate);
        c.label_ = std::move(label);
        c.extra_ = std::make_shared<PartTest>(std::move(test));
        return c;
    }

    // Narrow this class by an additional per-part test, e.g. no_ones().and_parts(...).
    PartitionClass and_parts(std::string label, PartTest test) const {
        PartitionClass c = *this;
        auto prev = extra_;
        c.label_ = this->name() + "&" + label;
        c.extra_ = std::make_shared<PartTest>([prev, t = std::move(test)](Part p) { return (!prev || (*prev)(p)) && t(p); });
        return c;
    }

    Kind kind() const { return kind_; }
    std::uint32_t d() const { return d_; }
    bool distinct_parts() const { return kind_ == Kind::Distinct; }

    bool accepts(Part p) const {
        if (p == 0)
            return false;
        bool ok = true;
        switch (kind_) {
        case Kind::All:
        case Kind::Distinct:
        case Kind::Predicate:
            break;
        case Kind::OddParts:
            ok = p % 2 == 1;
            break;
        case Kind::OddModFourD: {
            std::uint64_t m = 4ull * d_;
            std::uint64_t r = p % m;
            ok = r == 1 || r == m - 1;
            break;
        }
        case Kind::NoOnes:
            ok = p != 1;
            break;
        }
        return ok && (!extra_ || (*extra_)(p));
    }

    // Admissible part sizes <= n, largest first.
    std::vector<Part> admissible_parts(std::uint64_t n) const {
        std::vector<Part> out;
        for (std::uint64_t p = n; p >= 1; --p)
            if (accepts(static_cast<Part>(p)))
                out.push_back(static_cast<Part>(p));
        return out;
    }

    bool contains(const Partition& lambda) const {
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (!accepts(lambda[i]))
                return false;
            if (distinct_parts() && i > 0 && lambda[i] == lambda[i - 1])
                return false;
        }
        return true;
    }

    std::string name() const {
        if (!label_.empty())
            return label_;
        switch (kind_) {
        case Kind::All: return "P";
        case Kind::Distinct: return "D";
        case Kind::OddParts: return "O";
        case Kind::OddModFourD: return "Od(" + std::to_string(d_) + ")";
        case Kind::NoOnes: return "NoOnes";
        case Kind::Predicate: return "custom";
        }
        return "?";
    }

private:
    explicit PartitionClass(Kind k) : kind_(k) {}

    Kind kind_;
    std::uint32_t d_ = 0;
    std::string label_;
    std::shared_ptr<const PartTest> extra_;
};

// Restartable stream over the partitions of n in a class, in decreasing
// lexicographic order. Working state is O(n): the current partition plus the
// admissible part list.
class PartitionStream {
public:
    PartitionStream(std::uint64_t n, const PartitionClass& cls)
        : n_(n), allowed_(cls.admissible_parts(n)), distinct_(cls.distinct_parts()) {
        if (distinct_) {
            suffix_.assign(allowed_.size() + 1, 0);
            for (std::size_t j = allowed_.size(); j-- > 0;)
                suffix_[j] = suffix_[j + 1] + allowed_[j];
        }
        reset();
    }

    void reset() {
        current_ = Partition();
        stack_.clear();
        rem_ = n_;
        started_ = false;
        done_ = false;
    }

    // Advances to the next partition; false once exhausted.
    bool next() {
        if (done_)
            return false;
        bool ok = started_ ? (advance_top() && complete()) : complete();
        started_ = true;
        if (!ok)
            done_ = true;
        return ok;
    }

    const Partition& current() const { return current_; }
    std::uint64_t weight() const { return n_; }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        explicit iterator(PartitionStream* s) : s_(s) {
            if (s_ && !s_->next())
                s_ = nullptr;
        }
        reference operator*() const { return s_->current(); }
        pointer operator->() const { return &s_->current(); }
        iterator& operator++() {
            if (!s_->next())
                s_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.s_ == b.s_; }

    private:
        PartitionStream* s_ = nullptr;
    };

    // Restarts the stream.
    iterator begin() {
        reset();
        return iterator(this);
    }
    iterator end() { return iterator(); }

private:
    std::size_t min_index() const {
        if (stack_.empty())
            return 0;
        return stack_.back() + (distinct_ ? 1 : 0);
    }

    void push(std::size_t j) {
        stack_.push_back(j);
        rem_ -= allowed_[j];
        current_.push(allowed_[j]);
    }

    // Replace the last part by the next smaller admissible one, popping as needed.
    bool advance_top() {
        while (!stack_.empty()) {
            std::size_t i = stack_.back();
            stack_.pop_back();
            rem_ += allowed_[i];
            current_.pop();
            if (i + 1 < allowed_.size()) {
                push(i + 1);
                return true;
            }
        }
        return false;
    }

    // Greedily fill the remainder with the largest admissible parts, backtracking on dead ends.
    bool complete() {
        while (rem_ > 0) {
            std::size_t lo = min_index();
            // allowed_ is descending: first index with allowed_[j] <= rem_
            auto it = std::lower_bound(allowed_.begin() + static_cast<std::ptrdiff_t>(std::min(lo, allowed_.size())),
                                       allowed_.end(), rem_, [](Part a, std::uint64_t r) { return a > r; });
            std::size_t j = static_cast<std::size_t>(it - allowed_.begin());
            bool dead = j >= allowed_.size() || (distinct_ && suffix_[j] < rem_);
            if (!dead) {
                push(j);
                continue;
            }
            if (!advance_top())
                return false;
        }
        return true;
    }

    std::uint64_t n_;
    std::vector<Part> allowed_;
    bool distinct_;
    std::vector<std::uint64_t> suffix_;
    Partition current_;
    std::vector<std::size_t> stack_;
    std::uint64_t rem_ = 0;
    bool started_ = false;
    bool done_ = false;
};

inline PartitionStream enumerate(std::uint64_t n, const PartitionClass& cls) { return PartitionStream(n, cls); }

// Materialized enumeration; only for small n.
inline std::vector<Partition> enumerate_all(std::uint64_t n, const PartitionClass& cls) {
    std::vector<Partition> out;
    PartitionStream s(n, cls);
    while (s.next())
        out.push_back(s.current());
    return out;
}

// Counts partitions of n in the class by a knapsack recurrence, without enumerating.
inline Integer count_partitions(std::uint64_t n, const PartitionClass& cls) {
    std::vector<Integer> ways(n + 1);
    ways[0] = 1;
    for (Part p : cls.admissible_parts(n)) {
        if (cls.distinct_parts()) {
            for (std::uint64_t w = n; w >= p; --w)
                ways[w] += ways[w - p];
        } else {
            for (std::uint64_t w = p; w <= n; ++w)
                ways[w] += ways[w - p];
        }
    }
    return ways[n];
}

// part size -> multiplicity (f_i)
inline std::map<Part, std::uint32_t> frequency_vector(const Partition& lambda) {
    std::map<Part, std::uint32_t> f;
    for (Part p : lambda.parts())
        ++f[p];
    return f;
}

namespace detail {

inline std::vector<Part> parse_parts(std::string_view text) {
    std::vector<Part> parts;
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.empty())
        return parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find_first_of(",|", pos);
        std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        while (!tok.empty() && is_space(tok.front()))
            tok.remove_prefix(1);
        while (!tok.empty() && is_space(tok.back()))
            tok.remove_suffix(1);
        if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed part '" + std::string(tok) + "' in '" + std::string(text) + "'");
        Part v = static_cast<Part>(std::stoul(std::string(tok)));
        if (v == 0)
            throw std::invalid_argument("parts must be positive in '" + std::string(text) + "'");
        parts.push_back(v);
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    return parts;
}

}  // namespace detail

// Accepts "3,2,1,1" and the block notation "3|2|1|1"; "" is the empty sequence.
inline Composition parse_composition(std::string_view text) { return Composition(detail::parse_parts(text)); }

inline Partition parse_partition(std::string_view text) { return Partition(detail::parse_parts(text)); }

template <typename Seq>
std::string format_parts(const Seq& s, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace seaweed
