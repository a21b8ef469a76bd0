#include "torrigid/lattice.hpp"
#include "torrigid/rigidity.hpp"

#include <algorithm>

namespace torrigid::rigidity {

using toric::Cone;
using toric::Fan;

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Rigid: return "Rigid";
    case Verdict::DerPartVanishes: return "DerPartVanishes";
    case Verdict::ConditionNotSatisfied: return "ConditionNotSatisfied";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Satisfied: return "satisfied";
    case Status::Failed: return "failed";
    case Status::Unknown: return "unknown";
    }
    return "?";
}

bool RigidityCertificate::all_satisfied() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.status == Status::Satisfied; });
}

namespace {

Status status_of(bool ok)
{
    return ok ? Status::Satisfied : Status::Failed;
}

void require_full_dimensional(const Cone& cone)
{
    if (!cone.is_full_dimensional())
        throw InputError("cone must be full-dimensional (rays span the lattice rationally)");
}

Hypothesis smooth_in_codim_2(Codimension c)
{
    return {"smooth in codimension 2", status_of(c.at_least(3)),
            "singular locus codimension " + c.to_string() + " (need >= 3)"};
}

Hypothesis simplicial_in_codim_3(Codimension c)
{
    return {"simplicial in codimension 3", status_of(c.at_least(4)),
            "non-simplicial locus codimension " + c.to_string() + " (need >= 4)"};
}

Hypothesis q_gorenstein_hypothesis(const Cone& cone)
{
    auto cert = toric::q_gorenstein(cone);
    if (!cert)
        return {"Q-Gorenstein", Status::Failed, "rays lie on no common affine hyperplane <u, .> = g"};
    return {"Q-Gorenstein", Status::Satisfied, "u0 = " + torrigid::to_string(cert->u0) + ", g = " + cert->g.get_str()};
}

std::string failed_names(const std::vector<Hypothesis>& hs)
{
    std::string out;
    for (const auto& h : hs)
        if (h.status != Status::Satisfied)
            out += (out.empty() ? "" : "; ") + h.name;
    return out;
}

void conclude(RigidityCertificate& c)
{
    if (c.all_satisfied()) {
        c.verdict = Verdict::Rigid;
    } else {
        c.verdict = Verdict::ConditionNotSatisfied;
        c.reason = "hypothesis not satisfied: " + failed_names(c.hypotheses);
    }
}

struct GammaScan {
    bool vanishes = true;
    bool bound_hit = false;
    std::optional<int> ray;
    std::optional<IndexSet> subset;
    std::optional<IntVector> witness;
};

GammaScan scan_patterns(const Cone& cone, const Graph& graph, long bound)
{
    GammaScan scan;
    const int m = cone.ray_count();
    const auto& rays = cone.rays();
    for (int i = 0; i < m; ++i) {
        const IndexSet others = cone.all() - IndexSet{i};
        // Iterate all subsets J of `others`.
        std::uint64_t mask = others.bits();
        std::uint64_t sub = 0;
        do {
            IndexSet j = IndexSet::from_bits(sub);
            if (!graph.induced_connected(j)) {
                lattice::AffineSystem sys;
                sys.variables = cone.ambient_rank();
                sys.add_equality(rays[i], -1);
                for (int k = 0; k < m; ++k) {
                    if (k == i)
                        continue;
                    if (j.contains(k))
                        sys.add_at_most(rays[k], -1);
                    else
                        sys.add_at_least(rays[k], 0);
                }
                auto result = lattice::integer_feasible(sys, bound);
                if (auto* w = std::get_if<lattice::Witness>(&result)) {
                    scan.vanishes = false;
                    scan.ray = i;
                    scan.subset = j;
                    scan.witness = w->point;
                    return scan;
                }
                if (std::holds_alternative<lattice::BoundExceeded>(result))
                    scan.bound_hit = true;
            }
            sub = (sub - mask) & mask;
        } while (sub != 0);
    }
    return scan;
}

} // namespace

RigidityCertificate der_vanishing_gamma(const Cone& cone, long search_bound, GammaGraph graph)
{
    require_full_dimensional(cone);
    if (search_bound < 1)
        throw InputError("search bound must be positive");
    if (cone.ray_count() > 20)
        throw UnsupportedError("connectivity criterion refused for more than 20 rays (2^m sign patterns); "
                               "use the Q-Gorenstein criterion or t1 with a bound instead");
    RigidityCertificate c;
    c.criterion = graph == GammaGraph::Faces ? "gamma" : "gamma-strict";
    c.search_bound = search_bound;
    const Codimension codim = toric::singular_codim(cone);
    c.hypotheses.push_back(smooth_in_codim_2(codim));
    c.hypotheses.back().detail += "; stated as smooth in codimension 2, the reduction needs codim Sing >= 3";
    if (!codim.at_least(3)) {
        c.verdict = Verdict::Inconclusive;
        c.reason = "codim: singular locus has codimension " + codim.to_string() + " < 3";
        return c;
    }

    const Graph faces_graph = toric::graph_gamma_f(cone);
    const Graph used = graph == GammaGraph::Faces ? faces_graph : toric::graph_gamma(Fan::smooth_faces(cone));
    GammaScan scan = scan_patterns(cone, used, search_bound);

    Hypothesis connected{"Gamma_i(u) connected for all u", Status::Satisfied, "all realisable patterns connected"};
    if (!scan.vanishes) {
        connected.status = Status::Failed;
        connected.detail = "ray " + std::to_string(*scan.ray + 1) + ", pattern " + scan.subset->to_string(1) +
                           " realised by u = " + torrigid::to_string(*scan.witness);
    } else if (scan.bound_hit) {
        connected.status = Status::Unknown;
        connected.detail = "some patterns undecided within search bound " + std::to_string(search_bound);
    }
    c.hypotheses.push_back(connected);

    if (graph == GammaGraph::SmoothSubfan) {
        // The face graph is a subgraph of the smooth-subfan graph, so a
        // vanishing verdict on faces must persist here.
        GammaScan coarse = scan_patterns(cone, faces_graph, search_bound);
        const bool agree = !(coarse.vanishes && !coarse.bound_hit) || (scan.vanishes && !scan.bound_hit);
        if (!agree)
            throw Error("Gamma^f verdict is not implied by the smooth-subfan verdict");
        c.hypotheses.push_back({"Gamma^f verdict consistent", Status::Satisfied,
                                coarse.vanishes ? (coarse.bound_hit ? "Gamma^f undecided" : "Gamma^f also vanishes")
                                                : "Gamma^f test fails; finer graph used"});
    }

    if (!scan.vanishes) {
        c.verdict = Verdict::ConditionNotSatisfied;
        c.reason = "disconnected pattern realised";
        c.ray = scan.ray;
        c.subset = scan.subset;
        c.witness = scan.witness;
    } else if (scan.bound_hit) {
        c.verdict = Verdict::Inconclusive;
        c.reason = "search bound " + std::to_string(search_bound) + " exceeded";
    } else {
        c.verdict = Verdict::DerPartVanishes;
    }
    return c;
}

RigidityCertificate qgorenstein_rigidity(const Cone& cone)
{
    require_full_dimensional(cone);
    RigidityCertificate c;
    c.criterion = "qgorenstein";
    c.hypotheses.push_back(q_gorenstein_hypothesis(cone));
    c.hypotheses.push_back(smooth_in_codim_2(toric::singular_codim(cone)));
    c.hypotheses.push_back(simplicial_in_codim_3(toric::simplicial_codim(cone)));
    conclude(c);
    return c;
}

RigidityCertificate quotient_rigidity(const Cone& cone)
{
    require_full_dimensional(cone);
    RigidityCertificate c;
    c.criterion = "quotient";
    c.hypotheses.push_back({"simplicial", status_of(toric::is_simplicial(cone)),
                            std::to_string(cone.ray_count()) + " rays, dimension " +
                                std::to_string(cone.dimension())});
    c.hypotheses.push_back(smooth_in_codim_2(toric::singular_codim(cone)));
    conclude(c);
    return c;
}

RigidityCertificate fano_rigidity(const Fan& fan)
{
    RigidityCertificate c;
    c.criterion = "fano";
    const bool complete = toric::is_complete(fan);
    c.hypotheses.push_back({"complete", status_of(complete), complete ? "" : "fan does not cover the space"});
    if (!complete) {
        c.verdict = Verdict::ConditionNotSatisfied;
        c.reason = "completeness";
        return c;
    }
    const bool fano = toric::is_fano(fan);
    c.hypotheses.push_back({"Fano", status_of(fano), fano ? "" : "fan is not the face fan of conv(rays)"});
    c.hypotheses.push_back(smooth_in_codim_2(toric::singular_codim(fan)));
    c.hypotheses.push_back(simplicial_in_codim_3(toric::simplicial_codim(fan)));
    for (IndexSet s : fan.max_cones()) {
        Cone sigma = fan.cone(s);
        for (auto h : qgorenstein_rigidity(sigma).hypotheses) {
            h.name = "cone " + s.to_string(1) + ": " + h.name;
            c.hypotheses.push_back(std::move(h));
        }
    }
    conclude(c);
    return c;
}

RigidityCertificate wps_rigidity(const toric::WeightSystem& q)
{
    RigidityCertificate c;
    c.criterion = "wps";
    const bool formed = toric::wps_well_formed(q);
    const toric::WeightSystem w = formed ? q : toric::wps_normalize(q);
    c.hypotheses.push_back({"well formed", Status::Satisfied,
                            formed ? q.to_string() : q.to_string() + " normalised to " + w.to_string()});
    auto bad = toric::wps_rigidity_counterexample(w);
    Hypothesis h{"no n-1 weights share a factor", status_of(!bad), ""};
    if (bad) {
        std::string weights;
        for (int i : bad->elements())
            weights += (weights.empty() ? "" : ",") + w.weights[i].get_str();
        h.detail = "weights {" + weights + "} at positions " + bad->to_string(1) + " share a prime factor";
        c.subset = bad;
    }
    c.hypotheses.push_back(h);
    conclude(c);
    return c;
}

} // namespace torrigid::rigidity
