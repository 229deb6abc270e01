#include "hypercore/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hypercore {

Hypergraph Hypergraph::create(int k, int n, std::vector<Edge> raw_edges) {
    if (k < 0) throw std::invalid_argument("Hypergraph: negative uniformity");
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (auto& e : raw_edges) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("Hypergraph: edge of wrong size");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("Hypergraph: repeated vertex in edge");
        if (!e.empty() && (e.front() < 0 || e.back() >= n))
            throw std::invalid_argument("Hypergraph: vertex id out of range");
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());

    Hypergraph g;
    g.k = k;
    g.n = n;
    g.edges = std::move(raw_edges);
    g.rebuild_incidence();
    return g;
}

void Hypergraph::rebuild_incidence() {
    incidence.assign(n, {});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        for (int v : edges[i]) incidence[v].push_back(i);
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges.begin(), edges.end(), sorted_edge);
}

std::optional<int> Hypergraph::edge_index(const Edge& sorted_edge) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), sorted_edge);
    if (it == edges.end() || *it != sorted_edge) return std::nullopt;
    return static_cast<int>(it - edges.begin());
}

int Hypergraph::vertex_degree(int v) const {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex_degree: vertex out of range");
    return static_cast<int>(incidence[v].size());
}

bool Hypergraph::is_isolated(int v) const { return vertex_degree(v) == 0; }

std::vector<int> Hypergraph::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (incidence[v].empty()) out.push_back(v);
    return out;
}

void for_each_subset(int n, int r, const std::function<void(const Edge&)>& fn) {
    if (r < 0 || r > n) return;
    Edge cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        fn(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
}

Hypergraph shadow(const Hypergraph& g, int j) {
    if (j < 0 || j > g.k) throw std::invalid_argument("shadow: j out of range");
    if (j == g.k) return g;
    std::set<Edge> out;
    Edge sub(j);
    for (const Edge& e : g.edges) {
        // walk all j-subsets of this edge
        std::vector<int> idx(j);
        for (int i = 0; i < j; ++i) idx[i] = i;
        while (true) {
            for (int i = 0; i < j; ++i) sub[i] = e[idx[i]];
            out.insert(sub);
            int i = j - 1;
            while (i >= 0 && idx[i] == g.k - j + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
        }
        if (j == 0) break; // a single empty edge regardless of |E|
    }
    return Hypergraph::create(j, g.n, std::vector<Edge>(out.begin(), out.end()));
}

Hypergraph link(const Hypergraph& g, const Edge& s) {
    Edge key = s;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
        throw std::invalid_argument("link: repeated vertex in S");
    if (static_cast<int>(key.size()) >= g.k && g.k > 0)
        throw std::invalid_argument("link: |S| must be smaller than k");
    for (int v : key)
        if (v < 0 || v >= g.n) throw std::invalid_argument("link: vertex out of range");

    std::vector<Edge> out;
    for (const Edge& e : g.edges) {
        if (!std::includes(e.begin(), e.end(), key.begin(), key.end())) continue;
        Edge rest;
        std::set_difference(e.begin(), e.end(), key.begin(), key.end(), std::back_inserter(rest));
        out.push_back(std::move(rest));
    }
    return Hypergraph::create(g.k - static_cast<int>(key.size()), g.n, std::move(out));
}

DegreeReport degree(const Hypergraph& g, const Edge& s) {
    Edge key = s;
    std::sort(key.begin(), key.end());
    if (static_cast<int>(key.size()) > g.k)
        throw std::invalid_argument("degree: |S| exceeds uniformity");
    long long count = 0;
    if (key.empty()) {
        count = g.edge_count();
    } else {
        // scan the incidence list of the least-degree member
        int best = key[0];
        for (int v : key) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("degree: vertex out of range");
            if (g.incidence[v].size() < g.incidence[best].size()) best = v;
        }
        for (int ei : g.incidence[best]) {
            const Edge& e = g.edges[ei];
            if (std::includes(e.begin(), e.end(), key.begin(), key.end())) ++count;
        }
    }
    DegreeReport rep;
    rep.subset = key;
    rep.count = count;
    const unsigned long long total = binomial(g.n - static_cast<int>(key.size()),
                                              g.k - static_cast<int>(key.size()));
    rep.relative = total == 0 ? Rat(0) : Rat(BigInt(count), BigInt(total));
    return rep;
}

DegreeReport min_degree(const Hypergraph& g, int ell) {
    if (ell < 0 || ell > g.k) throw std::invalid_argument("min_degree: ell out of range");
    bool have = false;
    DegreeReport best;
    for_each_subset(g.n, ell, [&](const Edge& s) {
        DegreeReport rep = degree(g, s);
        if (!have || rep.count < best.count) {
            best = rep;
            have = true;
        }
    });
    if (!have) throw std::invalid_argument("min_degree: no ell-subset exists");
    return best;
}

namespace {

int overlap_size(const Edge& a, const Edge& b) {
    int i = 0, j = 0, c = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] == b[j]) { ++c; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return c;
}

// Adjacency between edges that overlap in exactly k-1 vertices. Built once
// per traversal; at desk scale the quadratic scan is immaterial.
std::vector<std::vector<int>> tight_adjacency(const Hypergraph& g) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (overlap_size(g.edges[i], g.edges[j]) == g.k - 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

} // namespace

std::vector<std::vector<int>> tight_components(const Hypergraph& g) {
    const int m = static_cast<int>(g.edges.size());
    auto adj = tight_adjacency(g);
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            out[id].push_back(e);
            for (int f : adj[e])
                if (comp[f] == -1) {
                    comp[f] = id;
                    q.push(f);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::optional<std::vector<int>> tight_walk(const Hypergraph& g, int from_edge, int to_edge) {
    const int m = static_cast<int>(g.edges.size());
    if (from_edge < 0 || from_edge >= m || to_edge < 0 || to_edge >= m)
        throw std::invalid_argument("tight_walk: edge index out of range");
    auto adj = tight_adjacency(g);
    std::vector<int> prev(m, -2);
    std::queue<int> q;
    q.push(from_edge);
    prev[from_edge] = -1;
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        if (e == to_edge) break;
        for (int f : adj[e])
            if (prev[f] == -2) {
                prev[f] = e;
                q.push(f);
            }
    }
    if (prev[to_edge] == -2) return std::nullopt;
    std::vector<int> path;
    for (int e = to_edge; e != -1; e = prev[e]) path.push_back(e);
    std::reverse(path.begin(), path.end());
    return path;
}

PerturbedDegreeVerdict verify_perturbed_degree(const Hypergraph& g, int ell,
                                               const Rat& alpha, const Rat& delta) {
    if (ell < 0 || ell > g.k - 1)
        throw std::invalid_argument("verify_perturbed_degree: ell out of range");
    PerturbedDegreeVerdict verdict;
    verdict.ell = ell;
    verdict.alpha = alpha;
    verdict.delta = delta;

    Hypergraph below = shadow(g, 0);
    for (int j = 1; j <= ell; ++j) {
        Hypergraph cur = shadow(g, j);

        for (const Edge& s : cur.edges) {
            if (degree(g, s).relative < delta)
                verdict.violations.push_back({"P1", j, s});
        }

        const unsigned long long all_j = binomial(g.n, j);
        const Rat density = all_j == 0
            ? Rat(0)
            : Rat(BigInt(static_cast<long long>(all_j) - cur.edge_count()), BigInt(all_j));
        if (density > alpha) verdict.violations.push_back({"P2", j, {}});

        for (const Edge& s : below.edges) {
            long long missing = 0;
            Edge probe;
            for (int v = 0; v < g.n; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                probe = s;
                probe.insert(std::lower_bound(probe.begin(), probe.end(), v), v);
                if (!cur.has_edge(probe)) ++missing;
            }
            const Rat fraction(BigInt(missing), BigInt(g.n - j + 1));
            if (fraction >= alpha) verdict.violations.push_back({"P3", j, s});
        }
        below = std::move(cur);
    }
    verdict.holds = verdict.violations.empty();
    return verdict;
}

Hypergraph load_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int k = -1, n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long x;
        while (ls >> x) vals.push_back(x);
        if (!ls.eof()) throw std::runtime_error("graph text: junk on line " + std::to_string(lineno));
        if (vals.empty()) continue;
        if (k < 0) {
            if (vals.size() != 2) throw std::runtime_error("graph text: header must be 'k n'");
            k = static_cast<int>(vals[0]);
            n = static_cast<int>(vals[1]);
            if (k < 2) throw std::runtime_error("graph text: uniformity must be at least 2");
            if (n < 0) throw std::runtime_error("graph text: negative vertex count");
            continue;
        }
        if (static_cast<int>(vals.size()) != k)
            throw std::runtime_error("graph text: edge of wrong size on line " + std::to_string(lineno));
        Edge e;
        for (long long v : vals) e.push_back(static_cast<int>(v));
        edges.push_back(std::move(e));
    }
    if (k < 0) throw std::runtime_error("graph text: missing header");
    try {
        return Hypergraph::create(k, n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("graph text: ") + ex.what());
    }
}

std::string save_graph_text(const Hypergraph& g) {
    std::ostringstream out;
    out << g.k << ' ' << g.n << '\n';
    for (const Edge& e : g.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph load_graph_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& ex) {
        throw std::runtime_error(std::string("graph json: parse failure: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges"))
        throw std::runtime_error("graph json: requires keys k, n, edges");
    const int k = j.at("k").get<int>();
    if (k < 2) throw std::runtime_error("graph json: uniformity must be at least 2");
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) edges.push_back(je.get<Edge>());
    try {
        return Hypergraph::create(k, j.at("n").get<int>(), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("graph json: ") + ex.what());
    }
}

std::string save_graph_json(const Hypergraph& g) {
    nlohmann::ordered_json j;
    j["k"] = g.k;
    j["n"] = g.n;
    j["edges"] = g.edges;
    return j.dump();
}

} // namespace hypercore
