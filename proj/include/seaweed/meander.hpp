#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/partitions.hpp"

namespace seaweed {

class weight_mismatch : public std::invalid_argument {
public:
    weight_mismatch(std::uint64_t top, std::uint64_t bottom)
        : std::invalid_argument("weight mismatch: top composition has weight " + std::to_string(top) +
                                " but bottom composition has weight " + std::to_string(bottom)),
          top_(top), bottom_(bottom) {}
    std::uint64_t top_weight() const { return top_; }
    std::uint64_t bottom_weight() const { return bottom_; }

private:
    std::uint64_t top_, bottom_;
};

using Vertex = std::uint32_t;

// Meander of a seaweed of type top/bottom: n vertices in a row, with top arcs
// from the blocks of the top composition and bottom arcs from the bottom one.
// Storage is 0-based; all text output is 1-based.
class Meander {
public:
    Meander() = default;

    std::size_t size() const { return top_.size(); }
    const std::optional<Vertex>& top_partner(Vertex v) const { return top_[v]; }
    const std::optional<Vertex>& bottom_partner(Vertex v) const { return bottom_[v]; }

    unsigned degree(Vertex v) const { return (top_[v] ? 1u : 0u) + (bottom_[v] ? 1u : 0u); }

    // (u, v) pairs with u < v, 0-based, left to right.
    std::vector<std::pair<Vertex, Vertex>> top_edges() const { return edges(top_); }
    std::vector<std::pair<Vertex, Vertex>> bottom_edges() const { return edges(bottom_); }

    friend Meander build_meander(const Composition& top, const Composition& bottom);

private:
    static void pair_blocks(const Composition& c, std::vector<std::optional<Vertex>>& side) {
        Vertex start = 0;
        for (Part len : c.parts()) {
            for (Vertex j = 0; j < len / 2; ++j) {
                Vertex a = start + j;
                Vertex b = start + len - 1 - j;
                side[a] = b;
                side[b] = a;
            }
            start += len;
        }
    }

    static std::vector<std::pair<Vertex, Vertex>> edges(const std::vector<std::optional<Vertex>>& side) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex v = 0; v < side.size(); ++v)
            if (side[v] && v < *side[v])
                out.emplace_back(v, *side[v]);
        return out;
    }

    std::vector<std::optional<Vertex>> top_;
    std::vector<std::optional<Vertex>> bottom_;
};

inline Meander build_meander(const Composition& top, const Composition& bottom) {
    if (top.weight() != bottom.weight())
        throw weight_mismatch(top.weight(), bottom.weight());
    Meander m;
    m.top_.resize(top.weight());
    m.bottom_.resize(top.weight());
    Meander::pair_blocks(top, m.top_);
    Meander::pair_blocks(bottom, m.bottom_);
    return m;
}

struct ComponentCount {
    std::uint64_t cycles = 0;
    std::uint64_t paths = 0;
    friend bool operator==(const ComponentCount&, const ComponentCount&) = default;
};

// Every vertex has at most one top and one bottom edge, so each component is an
// alternating path (possibly a single vertex) or an alternating cycle. Paths are
// exhausted from their endpoints first; whatever is left lies on cycles.
inline ComponentCount count_components(const Meander& m) {
    const std::size_t n = m.size();
    std::vector<bool> seen(n, false);
    ComponentCount cc;

    auto walk = [&](Vertex start, bool use_top) {
        Vertex v = start;
        seen[v] = true;
        while (true) {
            const auto& next = use_top ? m.top_partner(v) : m.bottom_partner(v);
            if (!next || seen[*next])
                break;
            v = *next;
            seen[v] = true;
            use_top = !use_top;
        }
    };

    for (Vertex v = 0; v < n; ++v) {
        if (seen[v] || m.degree(v) > 1)
            continue;
        ++cc.paths;
        walk(v, m.top_partner(v).has_value());
    }
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v])
            continue;
        ++cc.cycles;
        walk(v, true);
    }
    return cc;
}

// 2C + P - 1; the empty seaweed has index -1.
inline std::int64_t seaweed_index(const Composition& top, const Composition& bottom) {
    ComponentCount cc = count_components(build_meander(top, bottom));
    return 2 * static_cast<std::int64_t>(cc.cycles) + static_cast<std::int64_t>(cc.paths) - 1;
}

namespace detail {
inline void require_same_positive_weight(const Composition& top, const Composition& bottom) {
    if (top.weight() != bottom.weight())
        throw weight_mismatch(top.weight(), bottom.weight());
    if (top.weight() == 0)
        throw std::invalid_argument("closed-form path count needs weight >= 1");
}
}  // namespace detail

// P = (op(top) + op(bottom)) / 2 without building the graph.
inline std::int64_t path_count_formula(const Composition& top, const Composition& bottom) {
    detail::require_same_positive_weight(top, bottom);
    return static_cast<std::int64_t>(top.odd_count() + bottom.odd_count()) / 2;
}

// Parity of the index from the odd-part counts alone.
inline int index_parity(const Composition& top, const Composition& bottom) {
    detail::require_same_positive_weight(top, bottom);
    std::int64_t p = static_cast<std::int64_t>(top.odd_count() + bottom.odd_count()) / 2;
    return static_cast<int>(((p - 1) % 2 + 2) % 2);
}

}  // namespace seaweed
