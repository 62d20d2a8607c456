#include "xsolve/matching.hpp"

#include <queue>
#include <stdexcept>

namespace xsolve {

Matching::Matching(int n) : n_(n), adj_(n, std::vector<char>(n, 0)), mate_(n, -1) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
}

void Matching::addEdge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        return;
    adj_[u][v] = adj_[v][u] = 1;
}

int Matching::lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
        a = base_[a];
        seen[a] = 1;
        if (mate_[a] < 0)
            break;
        a = parent_[mate_[a]];
    }
    for (;;) {
        b = base_[b];
        if (seen[b])
            return b;
        b = parent_[mate_[b]];
    }
}

void Matching::markPath(int v, int b, int child) {
    while (base_[v] != b) {
        blossom_[base_[v]] = 1;
        blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

bool Matching::augmentFrom(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i)
        base_[i] = i;

    used_[root] = 1;
    std::queue<int> q;
    q.push(root);

    int finish = -1;
    while (!q.empty() && finish < 0) {
        int v = q.front();
        q.pop();
        for (int to = 0; to < n_ && finish < 0; ++to) {
            if (!adj_[v][to])
                continue;
            if (base_[v] == base_[to] || mate_[v] == to)
                continue;
            if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
                // odd cycle: shrink the blossom
                int b = lca(v, to);
                blossom_.assign(n_, 0);
                markPath(v, b, to);
                markPath(to, b, v);
                for (int i = 0; i < n_; ++i)
                    if (blossom_[base_[i]]) {
                        base_[i] = b;
                        if (!used_[i]) {
                            used_[i] = 1;
                            q.push(i);
                        }
                    }
            } else if (parent_[to] < 0) {
                parent_[to] = v;
                if (mate_[to] < 0) {
                    finish = to;
                } else {
                    used_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
    }

    if (finish < 0)
        return false;

    // flip matched/unmatched along the alternating path
    int v = finish;
    while (v >= 0) {
        int pv = parent_[v];
        int ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
    }
    return true;
}

int Matching::maximize() {
    int pairs = 0;
    // greedy warm start
    for (int v = 0; v < n_; ++v)
        if (mate_[v] < 0)
            for (int to = 0; to < n_; ++to)
                if (adj_[v][to] && mate_[to] < 0) {
                    mate_[v] = to;
                    mate_[to] = v;
                    ++pairs;
                    break;
                }
    for (int v = 0; v < n_; ++v)
        if (mate_[v] < 0 && augmentFrom(v))
            ++pairs;
    return pairs;
}

} // namespace xsolve
