#pragma once

#include <algorithm>
#include <set>
#include <vector>

namespace majcolor {

namespace detail {
inline int distinct_count(const std::vector<int>& colors) {
    std::set<int> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
}
}  // namespace detail

/// Total map vertex id -> color (0-based). palette = number of distinct colors present.
struct VertexColoring {
    std::vector<int> colors;
    int palette = 0;

    VertexColoring() = default;
    explicit VertexColoring(std::vector<int> c) : colors(std::move(c)), palette(detail::distinct_count(colors)) {}

    bool operator==(const VertexColoring& o) const { return colors == o.colors; }
};

/// Total map edge id -> color (0-based).
struct EdgeColoring {
    std::vector<int> colors;
    int palette = 0;

    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<int> c) : colors(std::move(c)), palette(detail::distinct_count(colors)) {}

    bool operator==(const EdgeColoring& o) const { return colors == o.colors; }
};

}  // namespace majcolor
