#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thetacover/errors.hpp"
#include "thetacover/rational.hpp"
#include "thetacover/varset.hpp"

namespace thetacover {

/// A clique given by its strictly increasing vertex list. Two cliques are
/// equal iff their lists are equal.
using Clique = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(n, std::vector<char>(n, 0)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    bool adjacent(int u, int v) const {
        return u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[u][v] != 0;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: vertex index out of range");
        if (adj_[u][v]) throw std::invalid_argument("Graph: duplicate edge");
        adj_[u][v] = adj_[v][u] = 1;
        ++m_;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u][v]) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_;
    std::vector<std::vector<char>> adj_;
    int m_ = 0;
};

/// Labeling of a K_i-p-hole: p blocks G_1..G_p (each a K_i), the K_{i-1}
/// shared[l] common to blocks l-1 and l (indices mod p), and per block the
/// i-2 facets lying in that block only.
struct HoleLabeling {
    int i = 0;
    int p = 0;
    std::vector<Clique> blocks;
    std::vector<Clique> shared;
    std::vector<std::vector<Clique>> lone;
};

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// All cliques of size exactly j, canonical, in lexicographic order.
/// Ordered extension: a clique is grown only by higher-indexed common
/// neighbors, so each clique is produced once and the output is sorted.
inline std::vector<Clique> enumerate_cliques(const Graph& g, int j) {
    if (j < 1) throw std::invalid_argument("enumerate_cliques: j must be >= 1");
    std::vector<Clique> out;
    Clique current;
    auto extend = [&](auto&& self, int next_min) -> void {
        if (static_cast<int>(current.size()) == j) {
            out.push_back(current);
            return;
        }
        for (int v = next_min; v < g.num_vertices(); ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

/// Hub-join member of the K_i-p-hole family: a hub clique K_{i-2} joined to a
/// cycle C_p. Blocks are hub + consecutive cycle pair; shared[l] = hub + v_l.
inline std::pair<Graph, HoleLabeling> wheel_hole(int i, int p) {
    if (i < 3) throw std::invalid_argument("wheel_hole: i must be >= 3");
    if (p < 3) throw std::invalid_argument("wheel_hole: p must be >= 3");
    const int hub = i - 2;
    Graph g(hub + p);
    for (int a = 0; a < hub; ++a)
        for (int b = a + 1; b < hub; ++b) g.add_edge(a, b);
    for (int a = 0; a < hub; ++a)
        for (int j = 0; j < p; ++j) g.add_edge(a, hub + j);
    for (int j = 0; j < p; ++j) {
        int u = hub + j, v = hub + (j + 1) % p;
        if (u > v) std::swap(u, v);
        g.add_edge(u, v);
    }

    HoleLabeling hl;
    hl.i = i;
    hl.p = p;
    Clique hub_set;
    for (int a = 0; a < hub; ++a) hub_set.push_back(a);
    for (int j = 0; j < p; ++j) {
        Clique block = hub_set;
        block.push_back(hub + j);
        block.push_back(hub + (j + 1) % p);
        hl.blocks.push_back(canonicalize(block));

        Clique sh = hub_set;
        sh.push_back(hub + j);
        hl.shared.push_back(canonicalize(sh));

        std::vector<Clique> lone;
        for (int a = 0; a < hub; ++a) {
            Clique f;
            for (int b = 0; b < hub; ++b)
                if (b != a) f.push_back(b);
            f.push_back(hub + j);
            f.push_back(hub + (j + 1) % p);
            lone.push_back(canonicalize(f));
        }
        hl.lone.push_back(std::move(lone));
    }
    return {g, hl};
}

/// Erdos-Renyi sample, reproducible bit-for-bit: pairs (u, v) are visited in
/// lexicographic order and one std::mt19937_64 draw r decides each edge via
/// the exact comparison r/2^64 < p.
inline Graph random_graph(int n, const Rational& edge_probability, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: n must be >= 1");
    if (edge_probability < 0 || edge_probability > 1)
        throw std::invalid_argument("random_graph: probability outside [0,1]");
    std::mt19937_64 gen(seed);
    const BigInt two64 = BigInt(1) << 64;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            BigInt r(gen());
            if (r * denominator(edge_probability) < numerator(edge_probability) * two64)
                g.add_edge(u, v);
        }
    return g;
}

/// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n,
/// single spaces, LF endings. Errors carry 1-based line numbers.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(1, "missing header");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError(lineno, "malformed header, expected 'n m'");
        if (n < 1 || m < 0) throw ParseError(lineno, "malformed header, need n >= 1 and m >= 0");
    }
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line()) throw ParseError(lineno + 1, "missing edge line");
        std::istringstream es(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError(lineno, "malformed edge, expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex index out of range");
        if (u >= v) throw ParseError(lineno, "edge must satisfy u < v");
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line() && !line.empty()) throw ParseError(lineno, "trailing content after edge list");
    return g;
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}
