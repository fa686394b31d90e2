#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seaweed/meander.hpp"

namespace seaweed {

enum class RenderFormat { Svg, Tikz };

inline RenderFormat parse_render_format(std::string_view s) {
    if (s == "svg")
        return RenderFormat::Svg;
    if (s == "tikz" || s == "tex")
        return RenderFormat::Tikz;
    throw std::invalid_argument("unknown render format '" + std::string(s) + "' (expected svg or tikz)");
}

namespace detail {

inline std::string render_svg(const Meander& m) {
    constexpr int spacing = 40;
    constexpr int margin = 20;
    const std::size_t n = m.size();

    std::size_t max_span = 1;
    for (auto [u, v] : m.top_edges())
        max_span = std::max<std::size_t>(max_span, v - u);
    for (auto [u, v] : m.bottom_edges())
        max_span = std::max<std::size_t>(max_span, v - u);

    // arc height = 0.4 * horizontal span
    const int half_height = static_cast<int>(max_span * spacing * 2 / 5) + margin;
    const int width = 2 * margin + static_cast<int>(n > 0 ? (n - 1) * spacing : 0);
    const int height = 2 * half_height;
    const int base = half_height;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    auto arc = [&](Vertex u, Vertex v, bool above) {
        int x1 = margin + static_cast<int>(u) * spacing;
        int x2 = margin + static_cast<int>(v) * spacing;
        int rx = (x2 - x1) / 2;
        int ry = (x2 - x1) * 2 / 5;
        os << "<path class=\"" << (above ? "top" : "bottom") << "\" d=\"M " << x1 << ' ' << base << " A " << rx << ' '
           << ry << " 0 0 " << (above ? 1 : 0) << ' ' << x2 << ' ' << base << "\"/>\n";
    };
    for (auto [u, v] : m.top_edges())
        arc(u, v, true);
    for (auto [u, v] : m.bottom_edges())
        arc(u, v, false);
    os << "</g>\n";
    for (Vertex v = 0; v < n; ++v)
        os << "<circle class=\"vertex\" cx=\"" << margin + static_cast<int>(v) * spacing << "\" cy=\"" << base
           << "\" r=\"3\" fill=\"black\"><title>v" << v + 1 << "</title></circle>\n";
    os << "</svg>\n";
    return os.str();
}

inline std::string render_tikz(const Meander& m) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    for (Vertex v = 0; v < m.size(); ++v)
        os << "\\filldraw (" << v << ",0) circle (.5mm); % v" << v + 1 << "\n";
    for (auto [u, v] : m.top_edges())
        os << "\\draw (" << u << ",0) to[out=90,in=90] (" << v << ",0);\n";
    for (auto [u, v] : m.bottom_edges())
        os << "\\draw (" << u << ",0) to[out=-90,in=-90] (" << v << ",0);\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace detail

// Vertices equally spaced on a line, top arcs above and bottom arcs below.
// Output is standalone and deterministic.
inline std::string render_meander(const Meander& m, RenderFormat fmt) {
    return fmt == RenderFormat::Svg ? detail::render_svg(m) : detail::render_tikz(m);
}

}  // namespace seaweed
