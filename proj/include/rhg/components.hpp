#pragma once

#include <cstdint>
#include <vector>

#include "rhg/graph.hpp"

namespace rhg {

// connected components, largest first (ties broken by smallest member id)
struct Components {
    std::size_t n_vertices = 0;
    // component c owns members[member_offsets[c] .. member_offsets[c+1])
    std::vector<std::size_t> member_offsets;
    std::vector<std::uint32_t> members; // ascending within a component
    std::vector<std::uint32_t> deepest; // per component: max-t member, ties to min id

    std::size_t count() const { return member_offsets.empty() ? 0 : member_offsets.size() - 1; }
    std::size_t size_of(std::size_t c) const { return member_offsets[c + 1] - member_offsets[c]; }
    // sizes of the largest and second largest component (0 when absent)
    std::size_t largest() const { return count() > 0 ? size_of(0) : 0; }
    std::size_t second_largest() const { return count() > 1 ? size_of(1) : 0; }
};

Components connected_components(const GeometricGraph& g);

// union-find over vertex ids, usable on vertex subsets as well
class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::uint32_t find(std::uint32_t v);
    void unite(std::uint32_t a, std::uint32_t b);

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> rank_;
};

} // namespace rhg
