#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "scx/error.hpp"
#include "scx/intmath.hpp"

namespace scx {

/// A pure simplicial complex of dimension d-1: a family of d-element
/// subsets (facets) of the vertex set [0, n). Facets keep their insertion
/// order; equality and the file format treat them as a set.
class PureComplex {
public:
    PureComplex(int d, int n, std::vector<std::vector<int>> facets)
        : d_(d), n_(n), facets_(std::move(facets)) {
        if (d_ < 1) fail(errc::bad_argument, "facet size d must be >= 1");
        if (n_ < 0) fail(errc::bad_argument, "vertex count n must be >= 0");
        std::set<std::vector<int>> seen;
        for (const auto& f : facets_) {
            if (static_cast<int>(f.size()) != d_)
                fail(errc::facet_size_mismatch, "facet has " + std::to_string(f.size()) +
                                                    " vertices, expected " + std::to_string(d_));
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] < 0 || f[i] >= n_)
                    fail(errc::vertex_out_of_range,
                         "vertex " + std::to_string(f[i]) + " outside [0, " + std::to_string(n_) + ")");
                if (i > 0 && f[i] <= f[i - 1])
                    fail(errc::facet_size_mismatch, "facet vertices must be strictly increasing");
            }
            if (!seen.insert(f).second) fail(errc::duplicate_facet, "duplicate facet");
        }
    }

    int facet_size() const { return d_; }
    int ambient_vertices() const { return n_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    const std::vector<int>& facet(int i) const {
        if (i < 0 || i >= facet_count()) fail(errc::index_out_of_range, "facet index " + std::to_string(i));
        return facets_[static_cast<std::size_t>(i)];
    }

    std::vector<int> used_vertices() const {
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        for (const auto& f : facets_)
            for (int v : f) used[static_cast<std::size_t>(v)] = true;
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (used[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    int used_vertex_count() const { return static_cast<int>(used_vertices().size()); }

    /// Set-semantics equality: same d, same ambient n, same facet set.
    friend bool operator==(const PureComplex& a, const PureComplex& b) {
        if (a.d_ != b.d_ || a.n_ != b.n_ || a.facets_.size() != b.facets_.size()) return false;
        auto fa = a.facets_, fb = b.facets_;
        std::sort(fa.begin(), fa.end());
        std::sort(fb.begin(), fb.end());
        return fa == fb;
    }

private:
    int d_;
    int n_;
    std::vector<std::vector<int>> facets_;
};

using Ridge = std::vector<int>;

/// Map from each ridge ((d-1)-subset of a facet, sorted) to the sorted
/// list of indices of facets containing it.
using RidgeIndex = std::map<Ridge, std::vector<int>>;

inline RidgeIndex ridge_index(const PureComplex& c) {
    RidgeIndex index;
    for (int i = 0; i < c.facet_count(); ++i) {
        const auto& f = c.facet(i);
        Ridge r(f.begin() + 1, f.end());
        for (int drop = 0;; ++drop) {
            index[r].push_back(i);
            if (drop == c.facet_size() - 1) break;
            r[static_cast<std::size_t>(drop)] = f[static_cast<std::size_t>(drop)];
        }
    }
    return index;
}

struct DualGraph {
    int nodes = 0;
    std::vector<std::vector<int>> adj;

    long long edge_count() const {
        long long twice = 0;
        for (const auto& a : adj) twice += static_cast<long long>(a.size());
        return twice / 2;
    }
};

/// Dual (adjacency) graph: nodes are facets, edges join facets sharing a
/// ridge, i.e. pairs with |F_i intersect F_j| = d - 1.
inline DualGraph dual_graph(const PureComplex& c) {
    DualGraph g;
    g.nodes = c.facet_count();
    g.adj.assign(static_cast<std::size_t>(g.nodes), {});
    for (const auto& [ridge, list] : ridge_index(c))
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                g.adj[static_cast<std::size_t>(list[i])].push_back(list[j]);
                g.adj[static_cast<std::size_t>(list[j])].push_back(list[i]);
            }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

enum class DualKind { Path, Cycle, OtherConnected, Disconnected };

inline const char* kind_name(DualKind k) {
    switch (k) {
        case DualKind::Path: return "path";
        case DualKind::Cycle: return "cycle";
        case DualKind::OtherConnected: return "connected";
        case DualKind::Disconnected: return "disconnected";
    }
    return "unknown";
}

struct DualClassification {
    DualKind kind = DualKind::Disconnected;
    std::vector<int> order;  // facet ordering along the path/cycle, else empty
};

namespace detail {

inline std::vector<int> bfs_dist(const DualGraph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.nodes), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

inline bool graph_connected(const DualGraph& g) {
    if (g.nodes == 0) return false;
    auto dist = bfs_dist(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace detail

inline DualClassification classify_dual(const DualGraph& g) {
    if (g.nodes == 0) fail(errc::empty_complex, "cannot classify the empty complex");
    DualClassification out;
    const bool connected = detail::graph_connected(g);
    if (!connected) {
        out.kind = DualKind::Disconnected;
        return out;
    }
    int max_deg = 0, deg_one = 0;
    for (const auto& a : g.adj) {
        max_deg = std::max(max_deg, static_cast<int>(a.size()));
        if (a.size() == 1) ++deg_one;
    }
    const long long edges = g.edge_count();

    auto walk = [&](int start, int next) {
        std::vector<int> order{start};
        std::vector<bool> seen(static_cast<std::size_t>(g.nodes), false);
        seen[static_cast<std::size_t>(start)] = true;
        int cur = next;
        int prev = start;
        while (cur != start && !seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            order.push_back(cur);
            const auto& nb = g.adj[static_cast<std::size_t>(cur)];
            int nxt = -1;
            for (int v : nb)
                if (v != prev && !seen[static_cast<std::size_t>(v)]) nxt = nxt < 0 ? v : nxt;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        return order;
    };

    if (g.nodes == 1) {
        out.kind = DualKind::Path;  // a single facet is a degenerate corridor
        out.order = {0};
        return out;
    }
    if (max_deg <= 2 && edges == g.nodes - 1) {
        out.kind = DualKind::Path;
        int start = -1;
        for (int v = 0; v < g.nodes; ++v)
            if (g.adj[static_cast<std::size_t>(v)].size() == 1) {
                start = v;
                break;
            }
        out.order = walk(start, g.adj[static_cast<std::size_t>(start)][0]);
        return out;
    }
    if (max_deg == 2 && deg_one == 0 && edges == g.nodes) {
        out.kind = DualKind::Cycle;
        out.order = walk(0, g.adj[0][0]);
        return out;
    }
    out.kind = DualKind::OtherConnected;
    return out;
}

inline DualClassification classify_dual(const PureComplex& c) { return classify_dual(dual_graph(c)); }

inline bool is_strongly_connected(const PureComplex& c) {
    if (c.facet_count() == 0) return false;
    return detail::graph_connected(dual_graph(c));
}

/// Pseudo-manifold without boundary: strongly connected and every ridge in
/// exactly two facets.
inline bool is_pseudo_manifold(const PureComplex& c) {
    if (!is_strongly_connected(c)) return false;
    for (const auto& [ridge, list] : ridge_index(c))
        if (list.size() != 2) return false;
    return true;
}

/// Semi-duoid: every ridge lies in an even number of facets.
inline bool is_semi_duoid(const PureComplex& c) {
    for (const auto& [ridge, list] : ridge_index(c))
        if (list.size() % 2 != 0) return false;
    return true;
}

constexpr int kNormalityGuard = 2000;

/// Normal complex: every facet pair (F1, F2) is joined by a dual path all
/// of whose facets contain F1 intersect F2 (BFS restricted to that star).
inline bool is_normal(const PureComplex& c) {
    const int m = c.facet_count();
    if (m > kNormalityGuard) fail(errc::too_large, "facet count exceeds the normality guard of 2000");
    if (m == 0) return true;
    const DualGraph g = dual_graph(c);
    const bool connected = detail::graph_connected(g);

    auto contains = [&](const std::vector<int>& facet, const std::vector<int>& sub) {
        return std::includes(facet.begin(), facet.end(), sub.begin(), sub.end());
    };

    std::vector<int> inter;
    std::vector<bool> visited;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            inter.clear();
            std::set_intersection(c.facet(i).begin(), c.facet(i).end(), c.facet(j).begin(),
                                  c.facet(j).end(), std::back_inserter(inter));
            if (inter.empty()) {
                if (!connected) return false;
                continue;  // every facet contains the empty face
            }
            visited.assign(static_cast<std::size_t>(m), false);
            std::queue<int> q;
            visited[static_cast<std::size_t>(i)] = true;
            q.push(i);
            bool reached = false;
            while (!q.empty() && !reached) {
                int u = q.front();
                q.pop();
                for (int v : g.adj[static_cast<std::size_t>(u)]) {
                    if (visited[static_cast<std::size_t>(v)]) continue;
                    if (!contains(c.facet(v), inter)) continue;
                    if (v == j) {
                        reached = true;
                        break;
                    }
                    visited[static_cast<std::size_t>(v)] = true;
                    q.push(v);
                }
            }
            if (!reached) return false;
        }
    }
    return true;
}

/// BFS eccentricity of every facet in the dual graph. Sources may be
/// processed by several threads; the result is schedule-independent.
inline std::vector<int> dual_eccentricities(const PureComplex& c, unsigned threads = 1) {
    const DualGraph g = dual_graph(c);
    const int m = g.nodes;
    if (m == 0) fail(errc::disconnected, "diameter undefined for the empty complex");
    std::vector<int> ecc(static_cast<std::size_t>(m), -1);
    std::atomic<bool> disconnected{false};

    auto work = [&](int lo, int hi) {
        for (int s = lo; s < hi; ++s) {
            auto dist = detail::bfs_dist(g, s);
            int e = 0;
            for (int dv : dist) {
                if (dv < 0) {
                    disconnected.store(true, std::memory_order_relaxed);
                    return;
                }
                e = std::max(e, dv);
            }
            ecc[static_cast<std::size_t>(s)] = e;
        }
    };

    threads = std::max(1u, std::min(threads, static_cast<unsigned>(m)));
    if (threads == 1) {
        work(0, m);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (m + static_cast<int>(threads) - 1) / static_cast<int>(threads);
        for (unsigned t = 0; t < threads; ++t) {
            int lo = static_cast<int>(t) * chunk;
            int hi = std::min(m, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    if (disconnected.load()) fail(errc::disconnected, "dual graph is not connected");
    return ecc;
}

/// Combinatorial diameter: graph diameter of the dual graph.
inline int diameter(const PureComplex& c, unsigned threads = 1) {
    auto ecc = dual_eccentricities(c, threads);
    return *std::max_element(ecc.begin(), ecc.end());
}

/// Ridge-counting upper bound floor(C(n, d-1) / (d-1)) on the diameter of
/// strongly connected pure (d-1)-complexes with n vertices.
inline u64 hirsch_upper_bound(u64 n, u64 d) {
    if (d < 2 || n < d) fail(errc::bad_argument, "hirsch_upper_bound requires n >= d >= 2");
    return binomial(n, d - 1) / (d - 1);
}

}  // namespace scx
