#include "rhg/components.hpp"

#include <algorithm>
#include <numeric>

namespace rhg {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t v) {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

void UnionFind::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
}

Components connected_components(const GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    UnionFind uf(n);
    for (const Edge& e : g.edges) uf.unite(e.first, e.second);

    std::vector<std::uint32_t> root(n);
    std::vector<std::size_t> size_of_root(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        root[v] = uf.find(static_cast<std::uint32_t>(v));
        ++size_of_root[root[v]];
    }

    // representative roots in output order: size descending, then smallest
    // member id; since ids ascend, the first member seen per root is minimal
    std::vector<std::uint32_t> reps;
    std::vector<std::uint32_t> min_member(n, 0);
    {
        std::vector<char> seen(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            std::uint32_t r = root[v];
            if (!seen[r]) {
                seen[r] = 1;
                min_member[r] = static_cast<std::uint32_t>(v);
                reps.push_back(r);
            }
        }
    }
    std::sort(reps.begin(), reps.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (size_of_root[a] != size_of_root[b]) return size_of_root[a] > size_of_root[b];
        return min_member[a] < min_member[b];
    });

    Components out;
    out.n_vertices = n;
    out.member_offsets.assign(reps.size() + 1, 0);
    std::vector<std::size_t> slot_of_root(n, 0);
    for (std::size_t c = 0; c < reps.size(); ++c) {
        slot_of_root[reps[c]] = c;
        out.member_offsets[c + 1] = out.member_offsets[c] + size_of_root[reps[c]];
    }
    out.members.resize(n);
    std::vector<std::size_t> cursor(out.member_offsets.begin(), out.member_offsets.end() - 1);
    for (std::size_t v = 0; v < n; ++v)
        out.members[cursor[slot_of_root[root[v]]]++] = static_cast<std::uint32_t>(v);

    out.deepest.resize(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
        std::uint32_t best = out.members[out.member_offsets[c]];
        for (std::size_t i = out.member_offsets[c]; i < out.member_offsets[c + 1]; ++i) {
            std::uint32_t v = out.members[i];
            if (g.points[v].t > g.points[best].t) best = v;
        }
        out.deepest[c] = best;
    }
    return out;
}

} // namespace rhg
