#include "embedder/absorb.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace embedder {

using hypercore::Edge;
using hypercore::Hypergraph;
using loosetree::LooseTree;

std::vector<std::vector<int>> Star::leaf_sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        std::vector<int> u;
        for (int v : e)
            if (v != centre) u.push_back(v);
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<int> AbsorbingTuple::centres() const {
    std::vector<int> out;
    out.reserve(stars.size());
    for (const Star& s : stars) out.push_back(s.centre);
    return out;
}

std::vector<int> AbsorbingTuple::vertices() const {
    std::vector<int> out;
    for (const Star& s : stars)
        for (const Edge& e : s.edges) out.insert(out.end(), e.begin(), e.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TupleVerdict verify_tuple(const Hypergraph& g, const AbsorbingTuple& t, int d) {
    TupleVerdict out;
    auto fail = [&out](std::string msg) {
        out.ok = false;
        out.violation = std::move(msg);
        return out;
    };
    if (d < 1) return fail("star size must be positive");
    if (static_cast<int>(t.stars.size()) != g.k - 1)
        return fail("expected " + std::to_string(g.k - 1) + " stars, got " +
                    std::to_string(t.stars.size()));
    for (std::size_t si = 0; si < t.stars.size(); ++si) {
        const Star& s = t.stars[si];
        const std::string tag = "star " + std::to_string(si);
        if (s.centre < 0 || s.centre >= g.n) return fail(tag + ": centre out of range");
        if (static_cast<int>(s.edges.size()) != d)
            return fail(tag + ": expected " + std::to_string(d) + " edges, got " +
                        std::to_string(s.edges.size()));
        for (std::size_t ei = 0; ei < s.edges.size(); ++ei) {
            const Edge& e = s.edges[ei];
            if (!g.has_edge(e))
                return fail(tag + ", edge " + std::to_string(ei) + ": not an edge of the graph");
            if (!std::binary_search(e.begin(), e.end(), s.centre))
                return fail(tag + ", edge " + std::to_string(ei) + ": centre missing");
        }
        // both edges contain the centre, so a size-1 intersection is exactly it
        for (std::size_t a = 0; a < s.edges.size(); ++a)
            for (std::size_t b = a + 1; b < s.edges.size(); ++b) {
                Edge inter;
                std::set_intersection(s.edges[a].begin(), s.edges[a].end(), s.edges[b].begin(),
                                      s.edges[b].end(), std::back_inserter(inter));
                if (inter.size() != 1)
                    return fail(tag + ": edges " + std::to_string(a) + " and " +
                                std::to_string(b) + " share more than the centre");
            }
    }
    std::vector<std::vector<int>> vsets;
    for (const Star& s : t.stars) {
        std::vector<int> vs;
        for (const Edge& e : s.edges) vs.insert(vs.end(), e.begin(), e.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        vsets.push_back(std::move(vs));
    }
    for (std::size_t a = 0; a < vsets.size(); ++a)
        for (std::size_t b = a + 1; b < vsets.size(); ++b) {
            Edge inter;
            std::set_intersection(vsets[a].begin(), vsets[a].end(), vsets[b].begin(),
                                  vsets[b].end(), std::back_inserter(inter));
            if (!inter.empty())
                return fail("stars " + std::to_string(a) + " and " + std::to_string(b) +
                            " overlap at vertex " + std::to_string(inter[0]));
        }
    return out;
}

namespace {

bool absorbs_target(const Hypergraph& g, const AbsorbingTuple& t, const int* target) {
    std::vector<int> cents;
    cents.reserve(t.stars.size());
    for (const Star& s : t.stars) cents.push_back(s.centre);
    if (std::find(cents.begin(), cents.end(), target[0]) != cents.end()) return false;
    Edge base = cents;
    base.push_back(target[0]);
    std::sort(base.begin(), base.end());
    if (!g.has_edge(base)) return false;
    for (int i = 1; i < g.k; ++i) {
        const Star& s = t.stars[i - 1];
        const int w = target[i];
        for (const Edge& e : s.edges) {
            Edge repl;
            bool clash = false;
            for (int v : e) {
                if (v == s.centre) continue;
                if (v == w) {
                    clash = true;
                    break;
                }
                repl.push_back(v);
            }
            if (clash) return false;
            repl.push_back(w);
            std::sort(repl.begin(), repl.end());
            if (!g.has_edge(repl)) return false;
        }
    }
    return true;
}

// All ordered k-tuples of distinct vertices, flattened with stride k, in
// lexicographic order.
std::vector<int> all_targets(int n, int k) {
    std::vector<int> flat;
    std::vector<int> cur;
    std::vector<char> in_use(n, 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == k) {
            flat.insert(flat.end(), cur.begin(), cur.end());
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (in_use[v]) continue;
            in_use[v] = 1;
            cur.push_back(v);
            rec();
            cur.pop_back();
            in_use[v] = 0;
        }
    };
    rec();
    return flat;
}

// Greedy assembly of a fresh tuple digesting the target, or nullopt once
// every base edge at target[0] is exhausted. The tuple stays clear of
// `blocked` and of the target itself.
std::optional<AbsorbingTuple> build_tuple(const Hypergraph& g, const std::vector<char>& blocked,
                                          const int* target, int d) {
    const int k = g.k;
    std::vector<char> avoid = blocked;
    for (int i = 0; i < k; ++i) avoid[target[i]] = 1;
    for (int base_idx : g.incidence[target[0]]) {
        const Edge& base = g.edges[base_idx];
        bool fresh = true;
        for (int v : base)
            if (v != target[0] && avoid[v]) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        // base is sorted, so centre j comes out ascending and serves target
        // slot j+1
        std::vector<int> centres;
        for (int v : base)
            if (v != target[0]) centres.push_back(v);
        std::vector<char> used = avoid;
        for (int c : centres) used[c] = 1;
        AbsorbingTuple tuple;
        bool built = true;
        for (int i = 1; i < k && built; ++i) {
            Star star;
            star.centre = centres[i - 1];
            for (int ei : g.incidence[star.centre]) {
                if (static_cast<int>(star.edges.size()) == d) break;
                const Edge& e = g.edges[ei];
                Edge repl;
                bool ok = true;
                for (int v : e) {
                    if (v == star.centre) continue;
                    if (used[v]) {
                        ok = false;
                        break;
                    }
                    repl.push_back(v);
                }
                if (!ok) continue;
                repl.push_back(target[i]);
                std::sort(repl.begin(), repl.end());
                if (!g.has_edge(repl)) continue;
                for (int v : e) used[v] = 1;
                star.edges.push_back(e);
            }
            if (static_cast<int>(star.edges.size()) < d)
                built = false;
            else
                tuple.stars.push_back(std::move(star));
        }
        if (built) return tuple;
    }
    return std::nullopt;
}

} // namespace

bool tuple_absorbs(const Hypergraph& g, const AbsorbingTuple& t, const std::vector<int>& target) {
    if (static_cast<int>(target.size()) != g.k) return false;
    return absorbs_target(g, t, target.data());
}

AbsorberReport find_absorbers(const Hypergraph& g, const std::vector<int>& forbidden, int d,
                              int p) {
    if (g.k < 2) throw std::invalid_argument("find_absorbers: uniformity must be at least 2");
    if (d < 1) throw std::invalid_argument("find_absorbers: star size must be positive");
    if (p < 0) throw std::invalid_argument("find_absorbers: coverage quota must be non-negative");
    std::vector<char> blocked(g.n, 0);
    for (int v : forbidden) {
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("find_absorbers: forbidden vertex out of range");
        blocked[v] = 1;
    }

    AbsorberReport report;
    report.d = d;
    report.p = p;
    const std::vector<int> flat = all_targets(g.n, g.k);
    const long long count = static_cast<long long>(flat.size()) / g.k;
    report.targets = count;
    std::vector<int> cov(count, 0);

    // One pass per coverage round is enough: a build blocked now stays
    // blocked, so revisiting a failed target within the round cannot help.
    for (int round = 1; round <= p; ++round) {
        for (long long ti = 0; ti < count; ++ti) {
            if (cov[ti] >= round) continue;
            auto built = build_tuple(g, blocked, &flat[ti * g.k], d);
            if (!built) continue;
            for (int v : built->vertices()) blocked[v] = 1;
            for (long long tj = 0; tj < count; ++tj)
                if (absorbs_target(g, *built, &flat[tj * g.k])) ++cov[tj];
            report.family.push_back(std::move(*built));
        }
    }

    report.min_coverage = p;
    for (long long ti = 0; ti < count; ++ti) {
        report.min_coverage = std::min<long long>(report.min_coverage, cov[ti]);
        if (cov[ti] >= p)
            ++report.covered;
        else
            report.uncovered.emplace_back(flat.begin() + ti * g.k, flat.begin() + (ti + 1) * g.k);
    }
    return report;
}

namespace {

// Unique loose path between two tree vertices as an edge-id sequence.
std::vector<int> tree_edge_path(const LooseTree& t, int from, int to) {
    if (from == to) return {};
    std::vector<int> prev_edge(t.n, -1), prev_vertex(t.n, -1);
    std::vector<char> seen(t.n, 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty() && !seen[to]) {
        const int v = q.front();
        q.pop();
        for (int ei : t.incidence[v])
            for (int w : t.edges[ei]) {
                if (seen[w]) continue;
                seen[w] = 1;
                prev_edge[w] = ei;
                prev_vertex[w] = v;
                q.push(w);
            }
    }
    if (!seen[to]) throw std::logic_error("tree_edge_path: vertices disconnected");
    std::vector<int> path;
    for (int cur = to; cur != from; cur = prev_vertex[cur]) path.push_back(prev_edge[cur]);
    std::reverse(path.begin(), path.end());
    return path;
}

int shared_vertex(const Edge& a, const Edge& b) {
    Edge inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (inter.size() != 1) throw std::logic_error("shared_vertex: edges do not link loosely");
    return inter[0];
}

} // namespace

ImmersionResult immerse(const Hypergraph& g, const LooseTree& t, int root_image,
                        const std::vector<AbsorbingTuple>& tuples,
                        const std::vector<int>& forbidden) {
    if (t.k != g.k) throw std::invalid_argument("immerse: uniformity mismatch");
    if (root_image < 0 || root_image >= g.n)
        throw std::invalid_argument("immerse: root image out of range");
    std::vector<char> allow(g.n, 1);
    for (int v : forbidden) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("immerse: forbidden vertex out of range");
        allow[v] = 0;
    }
    std::vector<char> reserved(g.n, 0);
    int d_max = 0;
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        const AbsorbingTuple& tup = tuples[ti];
        if (tup.stars.empty())
            throw std::invalid_argument("immerse: tuple " + std::to_string(ti) + " has no stars");
        const int d_t = static_cast<int>(tup.stars[0].edges.size());
        const TupleVerdict verdict = verify_tuple(g, tup, d_t);
        if (!verdict.ok)
            throw std::invalid_argument("immerse: tuple " + std::to_string(ti) + ": " +
                                        verdict.violation);
        d_max = std::max(d_max, d_t);
        for (int v : tup.vertices()) {
            if (reserved[v])
                throw std::invalid_argument("immerse: absorber tuples overlap at vertex " +
                                            std::to_string(v));
            reserved[v] = 1;
        }
    }
    if (!allow[root_image] || reserved[root_image])
        throw std::invalid_argument("immerse: root image is not available");
    if (!tuples.empty()) {
        const long long need =
            3LL * (static_cast<long long>(tuples.size()) + 1) * g.k * d_max;
        if (t.n < need)
            throw std::invalid_argument("immerse: tree too small for the splice demand (need " +
                                        std::to_string(need) + " vertices, have " +
                                        std::to_string(t.n) + ")");
    }

    const loosetree::TreeMetric dist = loosetree::metric(t);
    std::vector<int> psi(t.n, -1);
    std::vector<char> used(g.n, 0);
    std::vector<char> edge_done(t.edge_count(), 0);
    psi[t.root] = root_image;
    used[root_image] = 1;

    const auto fresh = [&](int v) { return !used[v] && allow[v] && !reserved[v]; };
    const auto put = [&](int tv, int gv) {
        if (psi[tv] != -1) {
            if (psi[tv] != gv) throw std::logic_error("immerse: conflicting images");
            return;
        }
        psi[tv] = gv;
        used[gv] = 1;
    };

    ImmersionResult result;
    result.star_anchor.resize(tuples.size());

    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        for (std::size_t si = 0; si < tuples[ti].stars.size(); ++si) {
            const Star& star = tuples[ti].stars[si];
            const int star_d = static_cast<int>(star.edges.size());
            const std::string where =
                "star " + std::to_string(si) + " of tuple " + std::to_string(ti);

            // Splice site: an unembedded vertex exactly three loose-path
            // edges beyond the embedded part, with tree degree fitting into
            // the star, reached from an embedded vertex whose first path
            // edge carries no other embedded vertex.
            int x = -1, z = -1;
            for (int cand = 0; cand < t.n && x == -1; ++cand) {
                if (psi[cand] != -1) continue;
                int dmin = t.n + 1;
                for (int e = 0; e < t.n; ++e)
                    if (psi[e] != -1) dmin = std::min(dmin, dist.vertex_vertex[cand][e]);
                if (dmin != 3) continue;
                if (t.vertex_degree(cand) > star_d) continue;
                for (int e = 0; e < t.n && x == -1; ++e) {
                    if (psi[e] == -1 || dist.vertex_vertex[cand][e] != 3) continue;
                    const int f1 = tree_edge_path(t, e, cand)[0];
                    bool clean = true;
                    for (int v : t.edges[f1])
                        if (v != e && psi[v] != -1) {
                            clean = false;
                            break;
                        }
                    if (clean) {
                        x = cand;
                        z = e;
                    }
                }
            }
            if (x == -1) throw std::runtime_error("immerse: no splice site for " + where);

            const std::vector<int> path = tree_edge_path(t, z, x);
            const Edge& f1 = t.edges[path[0]];
            const Edge& f2 = t.edges[path[1]];
            const Edge& f3 = t.edges[path[2]];
            const int s1 = shared_vertex(f1, f2);
            const int s2 = shared_vertex(f2, f3);

            int top_leaf = -1;
            for (int i = static_cast<int>(star.edges[0].size()) - 1; i >= 0; --i)
                if (star.edges[0][i] != star.centre) {
                    top_leaf = star.edges[0][i];
                    break;
                }

            // Connector: two fresh graph edges from psi(z) to the star's
            // top leaf, overlapping in a single new vertex.
            const int pz = psi[z];
            int c = -1;
            const Edge* g1 = nullptr;
            const Edge* g2 = nullptr;
            for (int g1i : g.incidence[pz]) {
                const Edge& e1 = g.edges[g1i];
                bool ok1 = true;
                for (int v : e1)
                    if (v != pz && !fresh(v)) {
                        ok1 = false;
                        break;
                    }
                if (!ok1) continue;
                for (int cand : e1) {
                    if (cand == pz) continue;
                    for (int g2i : g.incidence[cand]) {
                        const Edge& e2 = g.edges[g2i];
                        if (!std::binary_search(e2.begin(), e2.end(), top_leaf)) continue;
                        Edge inter;
                        std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                                              std::back_inserter(inter));
                        if (inter.size() != 1) continue;
                        bool ok2 = true;
                        for (int v : e2)
                            if (v != cand && v != top_leaf && !fresh(v)) {
                                ok2 = false;
                                break;
                            }
                        if (!ok2) continue;
                        c = cand;
                        g1 = &e1;
                        g2 = &e2;
                        break;
                    }
                    if (c != -1) break;
                }
                if (c != -1) break;
            }
            if (c == -1) throw std::runtime_error("immerse: no connecting path for " + where);

            const auto map_rest = [&](const Edge& te, std::vector<int> skip_t, const Edge& ge,
                                      std::vector<int> skip_g) {
                std::vector<int> ts, gs;
                for (int v : te)
                    if (std::find(skip_t.begin(), skip_t.end(), v) == skip_t.end())
                        ts.push_back(v);
                for (int v : ge)
                    if (std::find(skip_g.begin(), skip_g.end(), v) == skip_g.end())
                        gs.push_back(v);
                if (ts.size() != gs.size()) throw std::logic_error("immerse: splice size mismatch");
                for (std::size_t i = 0; i < ts.size(); ++i) put(ts[i], gs[i]);
            };

            put(s1, c);
            map_rest(f1, {z, s1}, *g1, {pz, c});
            put(s2, top_leaf);
            map_rest(f2, {s1, s2}, *g2, {c, top_leaf});
            put(x, star.centre);
            map_rest(f3, {s2, x}, star.edges[0], {top_leaf, star.centre});
            edge_done[path[0]] = edge_done[path[1]] = edge_done[path[2]] = 1;

            const std::vector<int> kids = t.child_edges(x);
            if (static_cast<int>(kids.size()) + 1 > star_d)
                throw std::logic_error("immerse: splice site outgrew its star");
            for (std::size_t j = 0; j < kids.size(); ++j) {
                map_rest(t.edges[kids[j]], {x}, star.edges[1 + j], {star.centre});
                edge_done[kids[j]] = 1;
            }
            result.star_anchor[ti].push_back(x);
        }
    }

    // Whatever the splices left over grows greedily outward. Every pending
    // edge eventually sees its unique closest-to-root vertex embedded, and
    // only that one, because embedded vertices always carry their full path
    // back to the root.
    int remaining = 0;
    for (char done : edge_done)
        if (!done) ++remaining;
    while (remaining > 0) {
        bool progress = false;
        for (int ei = 0; ei < t.edge_count(); ++ei) {
            if (edge_done[ei]) continue;
            const int top = t.top_vertex(ei);
            if (psi[top] == -1) continue;
            for (int v : t.edges[ei])
                if (v != top && psi[v] != -1)
                    throw std::logic_error("immerse: partially placed edge");
            const int iv = psi[top];
            const Edge* host = nullptr;
            for (int gi : g.incidence[iv]) {
                const Edge& h = g.edges[gi];
                bool ok = true;
                for (int v : h)
                    if (v != iv && !fresh(v)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    host = &h;
                    break;
                }
            }
            if (host == nullptr)
                throw std::runtime_error("immerse: no room extending tree edge " +
                                         std::to_string(ei));
            std::vector<int> bots, tails;
            for (int v : t.edges[ei])
                if (v != top) bots.push_back(v);
            for (int v : *host)
                if (v != iv) tails.push_back(v);
            for (std::size_t i = 0; i < bots.size(); ++i) put(bots[i], tails[i]);
            edge_done[ei] = 1;
            --remaining;
            progress = true;
        }
        if (!progress) throw std::logic_error("immerse: unreachable edges remain");
    }

    result.psi.kind = homomorphism::VertexMap::Kind::embedding;
    result.psi.image = psi;
    const homomorphism::MapVerdict verdict = homomorphism::verify_map(t, g, result.psi);
    if (!verdict.ok) throw std::logic_error("immerse: broken embedding: " + verdict.violation);
    return result;
}

PipelineState make_state(const Hypergraph& g, const LooseTree& t, const std::vector<int>& psi,
                         const std::vector<char>& edge_embedded,
                         const std::vector<AbsorbingTuple>& tuples) {
    if (t.k != g.k) throw std::invalid_argument("make_state: uniformity mismatch");
    if (static_cast<int>(psi.size()) != t.n)
        throw std::invalid_argument("make_state: image vector size mismatch");
    if (static_cast<int>(edge_embedded.size()) != t.edge_count())
        throw std::invalid_argument("make_state: edge flag size mismatch");
    for (int gv : psi)
        if (gv < -1 || gv >= g.n) throw std::invalid_argument("make_state: image out of range");
    PipelineState state{t, g, edge_embedded, psi, tuples,
                        std::vector<char>(tuples.size(), 0)};
    const homomorphism::MapVerdict verdict = verify_state(state);
    if (!verdict.ok) throw std::invalid_argument("make_state: " + verdict.violation);
    return state;
}

void extend_by_absorption(PipelineState& state, int tree_edge) {
    const LooseTree& t = state.tree;
    const Hypergraph& g = state.graph;
    if (tree_edge < 0 || tree_edge >= t.edge_count())
        throw std::invalid_argument("extend_by_absorption: edge index out of range");
    if (state.edge_embedded[tree_edge]) return;

    const Edge& te = t.edges[tree_edge];
    int x1 = -1;
    for (int v : te) {
        if (state.psi[v] == -1) continue;
        if (x1 != -1)
            throw std::invalid_argument("extend_by_absorption: edge has two placed vertices");
        x1 = v;
    }
    if (x1 == -1) throw std::invalid_argument("extend_by_absorption: edge has no placed vertex");
    const int u1 = state.psi[x1];

    std::vector<int> inv(g.n, -1);
    for (int v = 0; v < t.n; ++v) {
        if (state.psi[v] == -1) continue;
        if (inv[state.psi[v]] != -1)
            throw std::invalid_argument("extend_by_absorption: placed images collide");
        inv[state.psi[v]] = v;
    }

    for (std::size_t ti = 0; ti < state.tuples.size(); ++ti) {
        if (state.consumed[ti]) continue;
        const AbsorbingTuple& tup = state.tuples[ti];
        const std::vector<int> cents = tup.centres();
        if (std::find(cents.begin(), cents.end(), u1) != cents.end()) continue;
        Edge base = cents;
        base.push_back(u1);
        std::sort(base.begin(), base.end());
        if (!g.has_edge(base)) continue;

        // The tuple is usable only while its stars still sit immersed: each
        // centre carries a tree vertex all of whose realised edges land on
        // distinct edges of that star.
        bool fits = true;
        std::vector<int> anchors(tup.stars.size(), -1);
        for (std::size_t si = 0; si < tup.stars.size() && fits; ++si) {
            const Star& star = tup.stars[si];
            const int y = inv[star.centre];
            if (y == -1) {
                fits = false;
                break;
            }
            anchors[si] = y;
            std::set<std::size_t> taken_edges;
            for (int ei : t.incidence[y]) {
                if (!state.edge_embedded[ei]) {
                    fits = false;
                    break;
                }
                Edge img;
                for (int w : t.edges[ei]) {
                    if (state.psi[w] == -1) {
                        fits = false;
                        break;
                    }
                    img.push_back(state.psi[w]);
                }
                if (!fits) break;
                std::sort(img.begin(), img.end());
                std::size_t slot = star.edges.size();
                for (std::size_t j = 0; j < star.edges.size(); ++j)
                    if (star.edges[j] == img) {
                        slot = j;
                        break;
                    }
                if (slot == star.edges.size() || taken_edges.count(slot)) {
                    fits = false;
                    break;
                }
                taken_edges.insert(slot);
            }
        }
        if (!fits) continue;

        // Fresh replacement centres: each must continue every leaf set of
        // its star as an edge once it takes the anchor's place.
        std::vector<int> repl(tup.stars.size(), -1);
        std::vector<char> taken(g.n, 0);
        bool found_all = true;
        for (std::size_t si = 0; si < tup.stars.size() && found_all; ++si) {
            const auto leaves = tup.stars[si].leaf_sets();
            int pick = -1;
            for (int u = 0; u < g.n && pick == -1; ++u) {
                if (inv[u] != -1 || taken[u]) continue;
                bool good = true;
                for (const auto& leaf_set : leaves) {
                    if (std::find(leaf_set.begin(), leaf_set.end(), u) != leaf_set.end()) {
                        good = false;
                        break;
                    }
                    Edge moved = leaf_set;
                    moved.push_back(u);
                    std::sort(moved.begin(), moved.end());
                    if (!g.has_edge(moved)) {
                        good = false;
                        break;
                    }
                }
                if (good) pick = u;
            }
            if (pick == -1) {
                found_all = false;
                break;
            }
            taken[pick] = 1;
            repl[si] = pick;
        }
        if (!found_all) continue;

        for (std::size_t si = 0; si < tup.stars.size(); ++si)
            state.psi[anchors[si]] = repl[si];
        std::vector<int> fresh_tv;
        for (int v : te)
            if (v != x1) fresh_tv.push_back(v);
        std::vector<int> cs = cents;
        std::sort(cs.begin(), cs.end());
        for (std::size_t i = 0; i < fresh_tv.size(); ++i) state.psi[fresh_tv[i]] = cs[i];
        state.consumed[ti] = 1;
        state.edge_embedded[tree_edge] = 1;

        const homomorphism::MapVerdict verdict = verify_state(state);
        if (!verdict.ok)
            throw std::logic_error("extend_by_absorption: state broke: " + verdict.violation);
        return;
    }
    throw std::runtime_error("extend_by_absorption: absorption exhausted");
}

homomorphism::MapVerdict verify_state(const PipelineState& state) {
    homomorphism::MapVerdict out;
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(state.edge_embedded.size()); ++i)
        if (state.edge_embedded[i]) ids.push_back(i);
    if (ids.empty()) {
        const int r = state.psi.empty() ? -1 : state.psi[state.tree.root];
        if (r < 0 || r >= state.graph.n) {
            out.ok = false;
            out.violation = "root image missing";
        }
        return out;
    }
    loosetree::Subtree sub;
    try {
        sub = loosetree::edge_subtree(state.tree, ids, state.tree.root);
    } catch (const std::exception& e) {
        out.ok = false;
        out.violation = std::string("realised edges: ") + e.what();
        return out;
    }
    homomorphism::VertexMap m;
    m.kind = homomorphism::VertexMap::Kind::embedding;
    m.image.resize(sub.tree.n);
    for (int v = 0; v < sub.tree.n; ++v) {
        const int gv = state.psi[sub.orig[v]];
        if (gv < 0 || gv >= state.graph.n) {
            out.ok = false;
            out.violation = "vertex " + std::to_string(sub.orig[v]) + " lacks an image";
            return out;
        }
        m.image[v] = gv;
    }
    return homomorphism::verify_map(sub.tree, state.graph, m);
}

} // namespace embedder
