#include "robustgraph/certify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "homomorphism/gate.hpp"
#include "matching/chain.hpp"
#include "matching/fractional.hpp"

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

} // namespace

CertificationRun certify_robust(const Hypergraph& g, const Rat& eta, int omega_samples,
                                unsigned long long seed, const Rat& alpha, int workers) {
    homomorphism::require_gate();

    CertificationRun run;
    run.rs = build_gstar(g);
    run.matrix = reach_matrix(run.rs.gstar, workers);
    run.labels = build_labels(run.rs, alpha, run.matrix);

    RobustCertificate& cert = run.cert;
    cert.eta = eta;
    cert.alpha = alpha;

    cert.enumeration = build_enumeration(run.rs, run.labels, run.matrix);
    cert.r2_ok = cert.enumeration.verified || cert.enumeration.scc_verified;
    if (cert.enumeration.verified) {
        cert.c1 = cert.enumeration.max_radius;
    } else if (cert.enumeration.scc_verified) {
        cert.c1 = cert.enumeration.scc_max_radius;
        cert.notes.push_back("the " + cert.enumeration.basis +
                             " order failed verification; the class chain order stands in");
    }

    cert.rotation = build_rotatability(run.rs);
    cert.r3_ok = cert.rotation.all_rotatable;
    cert.c2 = cert.rotation.max_radius;

    // Weightings: all-ones first, seeded perturbations, then one weighting
    // that spends the whole slack budget. Every weighting is zeroed on the
    // vertices the construction isolates; if that pushes the total below the
    // budget the sample is infeasible and asserts nothing.
    const int n = g.n;
    const Rat required = (Rat(1) - eta) * n;
    const std::vector<int> isolated = run.rs.gstar.isolated_vertices();

    std::vector<std::pair<std::string, std::vector<Rat>>> samples;
    samples.emplace_back("uniform", std::vector<Rat>(n, Rat(1)));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < omega_samples - 2; ++i) {
        std::vector<Rat> omega(n);
        for (int v = 0; v < n; ++v) {
            const long long r = static_cast<long long>(rng() % 65);
            omega[v] = Rat(1) - eta * Rat(r) / 64;
        }
        samples.emplace_back("random-" + std::to_string(i + 1), std::move(omega));
    }
    if (omega_samples >= 2) {
        std::vector<Rat> omega(n, Rat(1));
        for (int v : isolated) omega[v] = 0;
        Rat surplus = -required;
        for (const Rat& w : omega) surplus += w;
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
            if (omega[v] > 0) order.push_back(v);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
        for (int v : order) {
            if (surplus <= 0) break;
            const Rat d = std::min(omega[v], surplus);
            omega[v] -= d;
            surplus -= d;
        }
        samples.emplace_back("tight-budget", std::move(omega));
    }

    cert.r1_ok = true;
    bool chain_done = false;
    int feasible_count = 0;
    for (auto& [name, omega] : samples) {
        for (int v : isolated) omega[v] = 0;
        OmegaEvidence ev;
        ev.name = name;
        ev.omega = omega;
        ev.total = 0;
        for (const Rat& w : omega) ev.total += w;
        ev.feasible = ev.total >= required;
        if (ev.feasible) {
            ++feasible_count;
            const auto fm = matching::max_fractional_matching(run.rs.gstar, omega);
            ev.perfect = fm.perfect;
            ev.size = fm.size;
            if (!fm.perfect && cert.r1_ok) {
                cert.r1_ok = false;
                cert.refutation = "weighting " + name +
                                  " admits no perfect fractional matching (size " +
                                  hypercore::rat_string(fm.size) + " of " +
                                  hypercore::rat_string(ev.total / g.k) + ")";
            }
            if (!chain_done) {
                chain_done = true;
                ev.chain_run = true;
                ev.chain_ok = matching::matching_chain(run.rs.gstar, g, omega, alpha, eta).ok;
            }
        }
        cert.matching_evidence.push_back(std::move(ev));
    }
    if (feasible_count == 0)
        cert.notes.push_back("every sampled weighting fell below the budget once isolated "
                             "vertices were zeroed; the matching requirement is vacuous here");

    if (cert.r1_ok && !cert.r2_ok) {
        const auto& [earlier, later] = cert.enumeration.refutation;
        cert.refutation = "no admissible enumeration: edge " +
                          set_str(run.rs.gstar.edges[later]) + " is not reachable from " +
                          set_str(run.rs.gstar.edges[earlier]) +
                          " and the mutual classes do not chain";
    }
    if (cert.r1_ok && cert.r2_ok && !cert.r3_ok) {
        for (const EdgeRotation& er : cert.rotation.per_edge)
            if (!er.rotatable) {
                cert.refutation =
                    "edge " + set_str(run.rs.gstar.edges[er.edge]) + " is not rotatable";
                break;
            }
    }

    if (!run.labels.anomalies.empty())
        cert.notes.push_back("label structure recorded " +
                             std::to_string(run.labels.anomalies.size()) + " anomalies");

    if (!cert.r1_ok || !cert.r2_ok || !cert.r3_ok)
        cert.status = "refuted";
    else if (cert.enumeration.cap_exceeded || cert.rotation.cap_exceeded)
        cert.status = "partial";
    else
        cert.status = "certified";
    return run;
}

std::string certificate_json(const CertificationRun& run) {
    nlohmann::json j;
    const RobustCertificate& cert = run.cert;
    j["eta"] = hypercore::rat_string(cert.eta);
    j["status"] = cert.status;
    j["C1"] = cert.c1;
    j["C2"] = cert.c2;
    j["enumeration"] = cert.enumeration.verified ? cert.enumeration.order
                                                 : cert.enumeration.scc_order;
    nlohmann::json rot = nlohmann::json::array();
    for (const EdgeRotation& er : cert.rotation.per_edge) {
        nlohmann::json r;
        r["edge"] = er.edge;
        r["rotatable"] = er.rotatable;
        r["radius"] = er.radius;
        r["method"] = er.method;
        r["dp_radius"] = er.dp_radius;
        rot.push_back(std::move(r));
    }
    j["per_edge_rotation"] = std::move(rot);
    nlohmann::json ev = nlohmann::json::array();
    for (const OmegaEvidence& e : cert.matching_evidence) {
        nlohmann::json r;
        r["name"] = e.name;
        r["total"] = hypercore::rat_string(e.total);
        r["feasible"] = e.feasible;
        r["perfect"] = e.perfect;
        r["size"] = hypercore::rat_string(e.size);
        r["chain_run"] = e.chain_run;
        r["chain_ok"] = e.chain_ok;
        ev.push_back(std::move(r));
    }
    j["r1_evidence"] = std::move(ev);
    return j.dump(2) + "\n";
}

} // namespace robustgraph
