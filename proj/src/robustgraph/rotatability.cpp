#include "robustgraph/rotatability.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homomorphism/algebra.hpp"
#include "homomorphism/perm.hpp"
#include "homomorphism/rotate.hpp"

namespace robustgraph {

using homomorphism::Perm;
using homomorphism::RotationWitness;
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

// k = 4: bounce generators. For each way to pin two vertices of e, walk the
// other two from (a,b) back to (b,a) inside the pair link, lift the walk to
// a tight walk, and transfer the free identity fact along it. The transfer
// lands on the sorted edge with the swap baked into the permutation.
std::vector<RotationWitness> bounce_generators(const Hypergraph& gstar, const Edge& e) {
    std::vector<RotationWitness> gens;
    for (int pi = 0; pi < 4; ++pi)
        for (int qi = pi + 1; qi < 4; ++qi) {
            const int p = e[pi];
            const int q = e[qi];
            Edge movers;
            for (int v : e)
                if (v != p && v != q) movers.push_back(v);
            const int a = movers[0];
            const int b = movers[1];
            const Hypergraph pl = hypercore::link(gstar, Edge{p, q});
            const auto pw = homomorphism::even_pair_walk(pl, a, b, b, a);
            if (!pw) continue;
            const std::vector<int> walk = homomorphism::interleave_pair_walk(p, q, *pw);
            RotationWitness seed;
            seed.rooted = {p, q, a, b};
            seed.mode = "bracket_star";
            seed.sigma = homomorphism::perm_id(4);
            seed.radius = 1;
            seed.method = "seed";
            gens.push_back(homomorphism::tight_walk_transfer(gstar, walk, seed, e));
        }
    return gens;
}

// k > 4: reduce to 4-uniform links. The edge is read in provenance order
// (witness pair first, then the witness set ascending); pinning all but four
// positions yields a link whose own gstar must contain the reduced edge, and
// transposition facts there lift to the full edge with the same radius. Each
// lift is re-verified on gstar before it may join the closure.
std::vector<RotationWitness> lifted_generators(const RobustSubgraph& rs, int edge_id,
                                               std::vector<std::string>& notes) {
    const Hypergraph& gstar = rs.gstar;
    const int k = gstar.k;
    const Edge& e = gstar.edges[edge_id];

    const ComponentChoice& comp = rs.components[rs.provenance[edge_id].front()];
    const Edge pair = remove_sorted(e, comp.a);
    std::vector<int> ordered;
    ordered.reserve(k);
    ordered.push_back(pair[0]);
    ordered.push_back(pair[1]);
    ordered.insert(ordered.end(), comp.a.begin(), comp.a.end());

    std::vector<RotationWitness> gens;
    for (int i = 3; i < k; ++i) {
        const std::vector<int> rooted4{ordered[0], ordered[1], ordered[2], ordered[i]};
        Edge core = rooted4;
        std::sort(core.begin(), core.end());
        const Edge rest = remove_sorted(e, core);

        const Hypergraph reduced = build_gstar(hypercore::link(rs.base, rest)).gstar;
        if (!reduced.has_edge(core)) {
            notes.push_back("link reduction at " + set_str(e) + ": reduced edge " +
                            set_str(core) + " missing from the link construction");
            continue;
        }
        bool contained = true;
        for (const Edge& f : reduced.edges)
            if (!gstar.has_edge(merge_sorted(f, rest))) {
                notes.push_back("link reduction at " + set_str(e) + ": link edge " + set_str(f) +
                                " does not extend into the construction, reduction skipped");
                contained = false;
                break;
            }
        if (!contained) continue;

        homomorphism::RotationContext ctx(reduced, rooted4);
        for (int s = 0; s < 4; ++s)
            for (int t = s + 1; t < 4; ++t) {
                const Perm tau = homomorphism::perm_swap(4, s, t);
                const auto r = ctx.least_bracket_star(tau);
                if (!r) continue;
                const std::array<int, 4> pos{{0, 1, 2, i}};
                RotationWitness w;
                w.rooted = ordered;
                w.mode = "bracket_star";
                w.sigma = homomorphism::perm_id(k);
                for (int j = 0; j < 4; ++j) w.sigma[pos[j]] = pos[tau[j]];
                w.radius = *r;
                w.method = "lift";
                if (homomorphism::verify_witness(gstar, w)) {
                    gens.push_back(std::move(w));
                } else {
                    notes.push_back("link reduction at " + set_str(e) +
                                    ": lifted swap of positions " + std::to_string(pos[s]) +
                                    " and " + std::to_string(pos[t]) +
                                    " failed re-verification and was dropped");
                }
            }
    }
    return gens;
}

} // namespace

RotatabilityReport build_rotatability(const RobustSubgraph& rs, bool cross_check) {
    const Hypergraph& gstar = rs.gstar;
    const int k = gstar.k;
    const int n = gstar.n;

    RotatabilityReport rep;
    rep.cap_coarse = homomorphism::rotation_cap_coarse(n, k);
    rep.cap_refined = homomorphism::rotation_cap_refined(n, k);
    rep.all_rotatable = true;

    for (int idx = 0; idx < static_cast<int>(gstar.edges.size()); ++idx) {
        const Edge& e = gstar.edges[idx];
        EdgeRotation er;
        er.edge = idx;

        if (k == 4) {
            const auto cl = homomorphism::generator_closure(4, bounce_generators(gstar, e));
            if (cl.complete) {
                er.rotatable = true;
                er.radius = cl.full_radius;
                er.method = "chain";
            }
        } else if (k > 4) {
            const auto gens = lifted_generators(rs, idx, rep.notes);
            const auto cl = homomorphism::generator_closure(k, gens);
            if (cl.complete) {
                er.rotatable = true;
                er.radius = cl.full_radius;
                er.method = "link-reduction";
            }
        }

        if (er.method.empty()) {
            homomorphism::RotationContext ctx(gstar, e);
            const auto r = ctx.least_full();
            er.rotatable = r.has_value();
            er.radius = r ? *r : -1;
            er.dp_radius = er.radius;
            er.method = "dp";
        } else if (cross_check && k <= 4) {
            homomorphism::RotationContext ctx(gstar, e);
            const auto r = ctx.least_full();
            if (!r || *r > er.radius)
                throw std::logic_error("build_rotatability: derived witness at " + set_str(e) +
                                       " disagrees with the fixpoint program");
            er.dp_radius = *r;
        }

        if (!er.rotatable) rep.all_rotatable = false;
        if (er.radius > rep.max_radius) rep.max_radius = er.radius;
        rep.per_edge.push_back(std::move(er));
    }

    rep.cap_exceeded = hypercore::BigInt(rep.max_radius) > rep.cap_coarse;
    return rep;
}

ManyMonReport many_mon(const RobustSubgraph& rs, int u, const Rat& alpha) {
    if (rs.base.k != 4)
        throw std::invalid_argument("many_mon: the component overlap count is a 4-graph question");
    if (u < 0 || u >= rs.base.n) throw std::invalid_argument("many_mon: vertex out of range");

    ManyMonReport rep;
    rep.u = u;
    rep.threshold = (Rat(1) / 2 - 2 * alpha) * rs.base.n;

    const auto pairs_of = [&](int v) -> const std::vector<Edge>* {
        Edge a{std::min(u, v), std::max(u, v)};
        const auto it = rs.component_index.find(a);
        if (it == rs.component_index.end()) return nullptr;
        return &rs.components[it->second].pairs;
    };

    for (int w = 0; w < rs.base.n; ++w) {
        if (w == u) continue;
        const std::vector<Edge>* cw = pairs_of(w);
        if (!cw) continue;
        long long count = 0;
        for (int v = 0; v < rs.base.n; ++v) {
            if (v == u) continue;
            const std::vector<Edge>* cv = pairs_of(v);
            if (!cv) continue;
            std::vector<Edge> shared;
            std::set_intersection(cw->begin(), cw->end(), cv->begin(), cv->end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) ++count;
        }
        if (count > rep.count) {
            rep.count = count;
            rep.w = w;
        }
    }
    rep.holds = Rat(rep.count) >= rep.threshold;
    return rep;
}

} // namespace robustgraph
