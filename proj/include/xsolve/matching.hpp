#pragma once

#include <vector>

namespace xsolve {

// Maximum matching in a general graph (blossom shrinking), O(V^3).
// Vertices are 0..n-1; parallel edges and self loops are ignored.
class Matching {
public:
    explicit Matching(int n);

    void addEdge(int u, int v);
    int maximize(); // returns the number of matched pairs
    const std::vector<int>& mate() const { return mate_; } // -1 if unmatched

private:
    int lca(int a, int b);
    void markPath(int v, int b, int child);
    bool augmentFrom(int root);

    int n_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace xsolve
