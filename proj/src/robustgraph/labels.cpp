#include "robustgraph/labels.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hypercore/hypergraph.hpp"

namespace robustgraph {

using hypercore::Edge;
using hypercore::Hypergraph;
using hypercore::Rat;

namespace {

std::string set_str(const Edge& a) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << '}';
    return os.str();
}

Edge merge_sorted(const Edge& a, const Edge& b) {
    Edge out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Edge remove_sorted(const Edge& a, const Edge& b) {
    Edge out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct MutualScan {
    bool ok = true;
    long long radius = 0;
    std::array<int, 2> witness{{-1, -1}};
};

// Checks that every two edges in ids reach each other, tracking the widest
// radius used. On failure the witness holds the first offending ordered pair.
MutualScan scan_mutual(const std::vector<int>& ids, const ReachMatrix& matrix) {
    MutualScan s;
    for (std::size_t i = 0; i < ids.size() && s.ok; ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const long long fwd = matrix.least[ids[j]][ids[i]];
            const long long bwd = matrix.least[ids[i]][ids[j]];
            if (fwd < 0 || bwd < 0) {
                s.ok = false;
                s.witness = {ids[i], ids[j]};
                break;
            }
            s.radius = std::max({s.radius, fwd, bwd});
        }
    }
    return s;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

} // namespace

LabelStructure build_labels(const RobustSubgraph& rs, const Rat& alpha,
                            const ReachMatrix& matrix) {
    const Hypergraph& g = rs.base;
    const int k = g.k;
    const int n = g.n;
    if (matrix.m != static_cast<int>(rs.gstar.edges.size()))
        throw std::invalid_argument("build_labels: matrix does not match gstar");

    LabelStructure ls;
    ls.alpha = alpha;

    const Rat width_bound = (Rat(1) / 2 + 3 * alpha) * n;
    const Rat isolated_bound = alpha * n;

    // Finds a pair of edges, one per plus list, sitting in the same mutual
    // class, and returns the radius their two directions used.
    const auto join_radius = [&](const std::vector<int>& pa, const std::vector<int>& pb) {
        for (int e : pa) {
            for (int f : pb) {
                if (matrix.scc[e] == matrix.scc[f])
                    return std::max(matrix.least[e][f], matrix.least[f][e]);
            }
        }
        return -1LL;
    };

    for (int ell = k - 2; ell >= 0; ell -= 2) {
        const Hypergraph sh = hypercore::shadow(g, ell);
        std::map<Edge, std::vector<Edge>> level_pairs;
        std::map<Edge, std::vector<int>> level_members;
        int width_shortfalls = 0;
        int isolated_excesses = 0;

        // Pass 1: the pair graph at each A.
        for (const Edge& a : sh.edges) {
            const std::vector<Edge> pairs_all = hypercore::shadow(hypercore::link(g, a), 2).edges;
            const std::vector<int> members = label_edge_set(rs, a);
            level_pairs[a] = pairs_all;
            level_members[a] = members;

            KGraph kg;
            kg.a = a;
            ACheck chk;
            chk.a = a;

            if (ell == k - 2) {
                kg.case_tag = 0;
                kg.full = true;
                kg.pairs = pairs_all;
                const MutualScan s = scan_mutual(members, matrix);
                chk.a4_ok = s.ok;
                chk.a4_radius = s.ok ? s.radius : -1;
                if (!s.ok)
                    ls.anomalies.push_back("structure: size " + std::to_string(ell) +
                                           " members not mutually reachable at A=" + set_str(a));
            } else {
                const MutualScan s = scan_mutual(members, matrix);
                if (s.ok) {
                    kg.case_tag = 1;
                    kg.full = true;
                    kg.pairs = pairs_all;
                    chk.a4_ok = true;
                    chk.a4_radius = s.radius;
                } else {
                    kg.case_tag = 2;
                    chk.a51_found = true;
                    chk.a51_witness = s.witness;

                    // Colour the 2-shadow pairs: p and q share a colour when
                    // some plus label above A+p and one above A+q sit in the
                    // same mutual-reachability class. The raw relation need
                    // not be transitive, so colours are its closure and a
                    // closure that actually merged anything is reported.
                    const int np = static_cast<int>(pairs_all.size());
                    std::vector<std::vector<int>> classes(np);
                    int empty_plus = 0;
                    for (int i = 0; i < np; ++i) {
                        const Edge ap = merge_sorted(a, pairs_all[i]);
                        const LabelSets& above = ls.labels.at(ap);
                        if (above.plus.empty()) ++empty_plus;
                        std::set<int> ids;
                        for (int e : above.plus) ids.insert(matrix.scc[e]);
                        classes[i].assign(ids.begin(), ids.end());
                    }
                    UnionFind uf(np);
                    for (int i = 0; i < np; ++i) {
                        for (int j = i + 1; j < np; ++j) {
                            if (!intersects(classes[i], classes[j])) continue;
                            uf.unite(i, j);
                            const Edge ai = merge_sorted(a, pairs_all[i]);
                            const Edge aj = merge_sorted(a, pairs_all[j]);
                            const long long r =
                                join_radius(ls.labels.at(ai).plus, ls.labels.at(aj).plus);
                            chk.phi_radius = std::max(chk.phi_radius, r);
                        }
                    }
                    // The raw relation is expected to be transitive already;
                    // a block pair with disjoint classes means the closure
                    // did real work, which is worth a report.
                    bool closure_used = false;
                    for (int i = 0; i < np && !closure_used; ++i)
                        for (int j = i + 1; j < np; ++j)
                            if (uf.find(i) == uf.find(j) && !classes[i].empty() &&
                                !classes[j].empty() && !intersects(classes[i], classes[j])) {
                                closure_used = true;
                                ls.anomalies.push_back(
                                    "structure: pair colour relation at A=" + set_str(a) +
                                    " is not transitive; " + set_str(pairs_all[i]) + " and " +
                                    set_str(pairs_all[j]) + " join only through intermediaries");
                                break;
                            }
                    if (empty_plus > 0)
                        ls.anomalies.push_back("structure: " + std::to_string(empty_plus) +
                                               " pairs at A=" + set_str(a) +
                                               " carry no plus labels and keep singleton colours");

                    std::vector<int> colour(np);
                    std::map<int, int> canon;
                    for (int i = 0; i < np; ++i) {
                        const int r = uf.find(i);
                        auto it = canon.find(r);
                        if (it == canon.end())
                            it = canon.emplace(r, static_cast<int>(canon.size())).first;
                        colour[i] = it->second;
                    }

                    ColouredPairs cp;
                    cp.n = n;
                    cp.pairs = pairs_all;
                    cp.colour = colour;
                    const ColouringAnalysis analysis = analyse_colouring(cp, alpha);
                    ls.colourings[a] = analysis;

                    if (analysis.components.size() >= 2) {
                        const std::vector<int>& h2 = analysis.components[1].vertices;
                        for (const Edge& p : pairs_all)
                            if (std::binary_search(h2.begin(), h2.end(), p[0]) &&
                                std::binary_search(h2.begin(), h2.end(), p[1]))
                                kg.pairs.push_back(p);
                        kg.full = kg.pairs.size() == pairs_all.size();
                        if (kg.full)
                            ls.anomalies.push_back(
                                "structure: narrowed pair graph at A=" + set_str(a) +
                                " still covers the whole 2-shadow");
                        const Rat h2_size(static_cast<long long>(h2.size()));
                        if (h2_size < width_bound || h2_size > (Rat(1) - 3 * alpha) * n)
                            ls.anomalies.push_back(
                                "regime: second component at A=" + set_str(a) + " has " +
                                std::to_string(h2.size()) + " vertices, outside the expected band");
                    } else {
                        ls.anomalies.push_back("structure: no second component at A=" + set_str(a) +
                                               ", keeping the whole 2-shadow");
                        kg.pairs = pairs_all;
                        kg.full = true;
                    }
                }
            }

            std::set<int> vs;
            for (const Edge& p : kg.pairs) {
                vs.insert(p[0]);
                vs.insert(p[1]);
            }
            kg.vertices.assign(vs.begin(), vs.end());
            chk.case_tag = kg.case_tag;
            chk.a3_ok = Rat(static_cast<long long>(kg.vertices.size())) >= width_bound;
            if (!chk.a3_ok) ++width_shortfalls;

            std::set<int> covered;
            for (const Edge& p : pairs_all) {
                covered.insert(p[0]);
                covered.insert(p[1]);
            }
            const long long isolated_at_a = static_cast<long long>(n) -
                                            static_cast<long long>(a.size()) -
                                            static_cast<long long>(covered.size());
            if (Rat(isolated_at_a) > isolated_bound) ++isolated_excesses;

            ls.K[a] = std::move(kg);
            ls.checks.push_back(std::move(chk));
            ls.a_family.push_back(a);
        }

        if (width_shortfalls > 0)
            ls.anomalies.push_back("regime: " + std::to_string(width_shortfalls) + " of " +
                                   std::to_string(sh.edges.size()) + " sets of size " +
                                   std::to_string(ell) + " have pair graphs narrower than (1/2+3a)n");
        if (isolated_excesses > 0)
            ls.anomalies.push_back("regime: " + std::to_string(isolated_excesses) + " of " +
                                   std::to_string(sh.edges.size()) + " sets of size " +
                                   std::to_string(ell) + " leave more than a*n vertices uncovered");

        // Pass 2: plus and minus labels. A pairing chain consumes the
        // vertices beyond the prefix two at a time; plus needs one chain made
        // of prefix-graph pairs throughout, minus needs one chain that steps
        // outside at least once.
        for (const Edge& a : sh.edges) {
            LabelSets lab;
            lab.members = level_members.at(a);

            std::function<bool(const Edge&, const Edge&)> clean_chain =
                [&](const Edge& prefix, const Edge& rest) -> bool {
                if (rest.empty()) return true;
                const KGraph& kp = ls.K.at(prefix);
                for (std::size_t i = 0; i < rest.size(); ++i)
                    for (std::size_t j = i + 1; j < rest.size(); ++j) {
                        const Edge pr{rest[i], rest[j]};
                        if (!std::binary_search(kp.pairs.begin(), kp.pairs.end(), pr)) continue;
                        if (clean_chain(merge_sorted(prefix, pr), remove_sorted(rest, pr)))
                            return true;
                    }
                return false;
            };
            std::function<bool(const Edge&, const Edge&)> all_clean =
                [&](const Edge& prefix, const Edge& rest) -> bool {
                if (rest.empty()) return true;
                const KGraph& kp = ls.K.at(prefix);
                for (std::size_t i = 0; i < rest.size(); ++i)
                    for (std::size_t j = i + 1; j < rest.size(); ++j) {
                        const Edge pr{rest[i], rest[j]};
                        if (!std::binary_search(kp.pairs.begin(), kp.pairs.end(), pr)) return false;
                        if (!all_clean(merge_sorted(prefix, pr), remove_sorted(rest, pr)))
                            return false;
                    }
                return true;
            };

            for (int e_id : lab.members) {
                const Edge rest = remove_sorted(rs.gstar.edges[e_id], a);
                if (clean_chain(a, rest)) lab.plus.push_back(e_id);
                if (!all_clean(a, rest)) lab.minus.push_back(e_id);
            }

            if (ell == k - 2) {
                if (lab.plus != lab.members)
                    ls.anomalies.push_back("structure: size " + std::to_string(ell) +
                                           " plus labels missed a member at A=" + set_str(a));
                if (!lab.minus.empty())
                    ls.anomalies.push_back("structure: size " + std::to_string(ell) +
                                           " minus labels should be empty at A=" + set_str(a));
            }

            std::vector<int> either;
            std::set_union(lab.plus.begin(), lab.plus.end(), lab.minus.begin(), lab.minus.end(),
                           std::back_inserter(either));
            if (either != lab.members)
                ls.anomalies.push_back("structure: a member at A=" + set_str(a) +
                                       " carries neither label");

            ls.labels[a] = std::move(lab);
        }

        // Pass 3: below the top level, labels must match the recursion on the
        // levels above; every mismatch names its first witness edge.
        if (ell < k - 2) {
            for (const Edge& a : sh.edges) {
                const KGraph& ka = ls.K.at(a);
                std::set<int> plus_rhs;
                std::set<int> minus_rhs;
                for (const Edge& p : level_pairs.at(a)) {
                    const LabelSets& above = ls.labels.at(merge_sorted(a, p));
                    if (std::binary_search(ka.pairs.begin(), ka.pairs.end(), p)) {
                        plus_rhs.insert(above.plus.begin(), above.plus.end());
                        minus_rhs.insert(above.minus.begin(), above.minus.end());
                    } else {
                        minus_rhs.insert(above.members.begin(), above.members.end());
                    }
                }
                const LabelSets& lab = ls.labels.at(a);
                const std::set<int> plus_lhs(lab.plus.begin(), lab.plus.end());
                const std::set<int> minus_lhs(lab.minus.begin(), lab.minus.end());
                if (plus_lhs != plus_rhs) {
                    std::vector<int> diff;
                    std::set_symmetric_difference(plus_lhs.begin(), plus_lhs.end(),
                                                  plus_rhs.begin(), plus_rhs.end(),
                                                  std::back_inserter(diff));
                    ls.anomalies.push_back("structure: plus recursion mismatch at A=" + set_str(a) +
                                           ", first differing edge " +
                                           set_str(rs.gstar.edges[diff.front()]));
                }
                if (minus_lhs != minus_rhs) {
                    std::vector<int> diff;
                    std::set_symmetric_difference(minus_lhs.begin(), minus_lhs.end(),
                                                  minus_rhs.begin(), minus_rhs.end(),
                                                  std::back_inserter(diff));
                    ls.anomalies.push_back("structure: minus recursion mismatch at A=" +
                                           set_str(a) + ", first differing edge " +
                                           set_str(rs.gstar.edges[diff.front()]));
                }
            }
        }

        // Narrowed-case reachability checks need this level's labels, so they
        // run after pass 2.
        for (ACheck& chk : ls.checks) {
            if (chk.case_tag != 2 || static_cast<int>(chk.a.size()) != ell || chk.a52_radius >= 0 ||
                chk.a53_radius >= 0 || chk.a52_ok || chk.a53_ok)
                continue;
            const LabelSets& lab = ls.labels.at(chk.a);
            const MutualScan s = scan_mutual(lab.plus, matrix);
            chk.a52_ok = s.ok;
            chk.a52_radius = s.ok ? s.radius : -1;
            if (!s.ok)
                ls.anomalies.push_back("structure: plus labels at A=" + set_str(chk.a) +
                                       " are not mutually reachable");
            bool ok53 = true;
            long long rad53 = 0;
            for (int t : lab.minus) {
                for (int src = 0; src < matrix.m && ok53; ++src) {
                    const long long r = matrix.least[t][src];
                    if (r < 0)
                        ok53 = false;
                    else
                        rad53 = std::max(rad53, r);
                }
                if (!ok53) break;
            }
            chk.a53_ok = ok53;
            chk.a53_radius = ok53 ? rad53 : -1;
            if (!ok53)
                ls.anomalies.push_back("structure: a minus label at A=" + set_str(chk.a) +
                                       " is not reachable from every edge");
        }
    }

    // Odd k: classes on the non-isolated gstar vertices, joined whenever the
    // plus labels above two vertices share a mutual-reachability class.
    if (k % 2 == 1) {
        ls.has_psi = true;
        ls.psi.assign(n, -1);
        std::vector<int> domain;
        for (int v = 0; v < n; ++v)
            if (!rs.gstar.is_isolated(v)) domain.push_back(v);

        const int nd = static_cast<int>(domain.size());
        std::vector<std::vector<int>> classes(nd);
        int empty_plus = 0;
        for (int i = 0; i < nd; ++i) {
            const LabelSets& lab = ls.labels.at(Edge{domain[i]});
            if (lab.plus.empty()) ++empty_plus;
            std::set<int> ids;
            for (int e : lab.plus) ids.insert(matrix.scc[e]);
            classes[i].assign(ids.begin(), ids.end());
        }
        UnionFind uf(nd);
        for (int i = 0; i < nd; ++i)
            for (int j = i + 1; j < nd; ++j)
                if (intersects(classes[i], classes[j])) uf.unite(i, j);
        bool closure_used = false;
        for (int i = 0; i < nd && !closure_used; ++i)
            for (int j = i + 1; j < nd; ++j)
                if (uf.find(i) == uf.find(j) && !classes[i].empty() && !classes[j].empty() &&
                    !intersects(classes[i], classes[j])) {
                    closure_used = true;
                    ls.anomalies.push_back(
                        "structure: vertex class relation is not transitive; vertices " +
                        std::to_string(domain[i]) + " and " + std::to_string(domain[j]) +
                        " join only through intermediaries");
                    break;
                }
        if (empty_plus > 0)
            ls.anomalies.push_back("structure: " + std::to_string(empty_plus) +
                                   " vertices carry no plus labels and keep singleton classes");

        std::map<int, int> canon;
        for (int i = 0; i < nd; ++i) {
            const int r = uf.find(i);
            auto it = canon.find(r);
            if (it == canon.end()) it = canon.emplace(r, static_cast<int>(canon.size())).first;
            ls.psi[domain[i]] = it->second;
        }
        ls.psi_analysis = analyse_vertex_colouring(n, ls.psi, alpha);
        if (!ls.psi_analysis.psi_two_classes)
            ls.anomalies.push_back("structure: vertex classes split into " +
                                   std::to_string(ls.psi_analysis.psi_classes) +
                                   " parts, more than two");
    }

    return ls;
}

} // namespace robustgraph
