#include "torrigid/cli.hpp"
#include "torrigid/localcoh.hpp"
#include "torrigid/rigidity.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace torrigid::cli {

namespace {

using rigidity::RigidityCertificate;
using rigidity::Verdict;

struct Options {
    std::string format = "text";
    std::optional<long> bound;
    std::string fan_file;
    std::string poly_file;
    std::string wps;
    std::string criterion = "all";
    int degree_index = -1;
    std::string p;
    bool oracle = false;
};

std::string join_args(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args)
        s += (s.empty() ? "" : " ") + a;
    return s;
}

Report start(const std::vector<std::string>& args, const std::vector<std::string>& inputs)
{
    Report r;
    r.command = join_args(args);
    std::string bytes;
    for (const auto& in : inputs)
        bytes += in + '\0';
    r.input_digest = fnv1a64(bytes + r.command);
    return r;
}

std::vector<long> parse_list(const std::string& s, const std::string& flag)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw InputError(flag + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty())
        throw InputError(flag + ": expected a comma separated list of integers");
    return out;
}

toric::Fan load_fan(const std::string& path, std::string& bytes)
{
    bytes = read_file(path);
    return toric::validate_fan(parse_fan(bytes, path));
}

std::vector<long> longs(const IntVector& v) { return to_long_vector(v); }

void add_hypotheses(Report& r, const std::vector<rigidity::Hypothesis>& hs, const std::string& prefix = {})
{
    for (const auto& h : hs)
        r.hypotheses.push_back({prefix + h.name, rigidity::to_string(h.status), h.detail});
}

Json part_json(const t1::PartResult& part)
{
    return Json{{"dimension", part.dimension},
                {"completeness", t1::to_string(part.completeness)},
                {"bound", part.bound},
                {"method", part.method}};
}

void add_contributions(Report& r, const t1::PartResult& part)
{
    for (const auto& c : part.contributions)
        r.contributions.push_back({c.part, longs(c.degree), c.dimension});
}

void fill_t1(Report& r, const t1::T1Report& rep)
{
    r.results["mode"] = t1::to_string(rep.mode);
    r.results["bound"] = rep.bound;
    r.results["der"] = rep.der ? part_json(*rep.der) : Json(nullptr);
    r.results["homq"] = rep.homq ? part_json(*rep.homq) : Json(nullptr);
    r.results["total"] = rep.total ? Json(*rep.total) : Json(nullptr);
    add_hypotheses(r, rep.hypotheses);
    if (rep.der)
        add_contributions(r, *rep.der);
    if (rep.homq)
        add_contributions(r, *rep.homq);
    if (rep.total)
        r.completeness = t1::to_string(rep.completeness);
    r.warnings.insert(r.warnings.end(), rep.warnings.begin(), rep.warnings.end());
}

Report cmd_t1(const std::vector<std::string>& args, const Options& o)
{
    std::string bytes = read_file(o.fan_file);
    Report r = start(args, {bytes});
    if (auto polygon = parse_polygon(bytes, o.fan_file)) {
        if (o.bound)
            r.warnings.push_back("--bound is ignored for polygon input");
        auto rep = t1::t1_polygon(*polygon);
        r.results["input"] = "polygon";
        r.results["vertices"] = rep.vertices;
        r.results["dimension"] = rep.dimension;
        r.results["minor_condition"] = rep.minor_condition;
        fill_t1(r, rep.lifted);
        add_hypotheses(r, rep.hypotheses);
        r.exit_code = Success;
        return r;
    }

    toric::Fan fan = toric::validate_fan(parse_fan(bytes, o.fan_file));
    if (!fan.is_affine())
        throw InputError(o.fan_file + ": t1 needs an affine fan (a single maximal cone containing every ray)");
    r.warnings = fan.warnings;
    r.results["input"] = fan.name().empty() ? "fan" : fan.name();
    auto rep = t1::t1_affine(fan.cone(fan.max_cones().front()), o.bound);
    fill_t1(r, rep);
    r.exit_code = rep.mode == t1::T1Mode::Unsupported ? Unsupported : Success;
    return r;
}

Json certificate_json(const RigidityCertificate& c)
{
    Json j;
    j["criterion"] = c.criterion;
    j["verdict"] = rigidity::to_string(c.verdict);
    j["reason"] = c.reason;
    if (c.search_bound)
        j["search_bound"] = *c.search_bound;
    if (c.ray)
        j["ray"] = *c.ray + 1;
    if (c.subset)
        j["subset"] = c.subset->to_string(1);
    if (c.witness)
        j["witness"] = longs(*c.witness);
    return j;
}

Report cmd_rigidity(const std::vector<std::string>& args, const Options& o)
{
    static const std::vector<std::string> known = {"all", "qgorenstein", "quotient", "fano", "gamma", "wps"};
    if (std::find(known.begin(), known.end(), o.criterion) == known.end())
        throw InputError("--criterion: unknown criterion '" + o.criterion + "'");
    if (o.fan_file.empty() == o.wps.empty())
        throw InputError("rigidity takes exactly one of a fan file or --wps");

    std::vector<RigidityCertificate> certs;
    Report r;
    auto wants = [&](const std::string& name) { return o.criterion == "all" || o.criterion == name; };

    if (!o.wps.empty()) {
        if (!wants("wps"))
            throw InputError("--wps only supports --criterion wps");
        auto q = toric::WeightSystem::from_longs(parse_list(o.wps, "--wps"));
        r = start(args, {});
        r.results["input"] = q.to_string();
        certs.push_back(rigidity::wps_rigidity(q));
    } else {
        if (o.criterion == "wps")
            throw InputError("--criterion wps needs --wps");
        std::string bytes;
        toric::Fan fan = load_fan(o.fan_file, bytes);
        r = start(args, {bytes});
        r.warnings = fan.warnings;
        r.results["input"] = fan.name().empty() ? "fan" : fan.name();
        if (fan.is_affine()) {
            if (o.criterion == "fano")
                throw InputError("--criterion fano needs a complete fan");
            toric::Cone cone = fan.cone(fan.max_cones().front());
            if (wants("qgorenstein"))
                certs.push_back(rigidity::qgorenstein_rigidity(cone));
            if (wants("quotient"))
                certs.push_back(rigidity::quotient_rigidity(cone));
            if (wants("gamma")) {
                if (cone.ray_count() > 20)
                    r.warnings.push_back("gamma criterion skipped: more than 20 rays");
                else
                    certs.push_back(rigidity::der_vanishing_gamma(cone, t1::default_bound(cone)));
            }
        } else {
            if (o.criterion != "all" && o.criterion != "fano")
                throw InputError("--criterion " + o.criterion + " needs an affine fan (one maximal cone)");
            certs.push_back(rigidity::fano_rigidity(fan));
        }
    }

    bool rigid = false;
    r.results["criteria"] = Json::array();
    for (const auto& c : certs) {
        r.results["criteria"].push_back(certificate_json(c));
        add_hypotheses(r, c.hypotheses, c.criterion + ": ");
        rigid = rigid || c.verdict == Verdict::Rigid;
    }
    r.results["rigid"] = rigid;
    r.exit_code = rigid ? Success : NoCertificate;
    return r;
}

Report cmd_localcoh(const std::vector<std::string>& args, const Options& o)
{
    std::string bytes;
    toric::Fan fan = load_fan(o.fan_file, bytes);
    Report r = start(args, {bytes});
    r.warnings = fan.warnings;

    const IntVector p = to_integer_vector(parse_list(o.p, "--p"));
    const int m = fan.ray_count();
    if (p.size() != static_cast<std::size_t>(m))
        throw InputError("--p has " + std::to_string(p.size()) + " entries, the fan has " + std::to_string(m) +
                         " rays");
    if (o.degree_index < 0 || o.degree_index > m)
        throw InputError("--i must lie in 0.." + std::to_string(m));

    if (fan.is_affine()) {
        fan = toric::Fan::smooth_faces(fan.cone(fan.max_cones().front()));
        r.warnings.push_back("affine fan: B is the irrelevant ideal of the subfan of smooth faces");
    }
    auto b = toric::irrelevant_ideal(fan);
    if (b.is_unit())
        throw UnsupportedError("the irrelevant ideal is the unit ideal (smooth affine cone); nothing to compute");

    localcoh::LocalCohomology lc(b);
    auto piece = lc.piece(o.degree_index, p);
    r.results["i"] = o.degree_index;
    r.results["p"] = longs(p);
    r.results["ideal"] = b.to_string();
    r.results["negative"] = piece.negative.to_string(1);
    Json gens = Json::array();
    for (IndexSet g : b.generators())
        gens.push_back(SquarefreeMonomialIdeal(m, {g}).to_string());
    r.results["generators"] = gens;
    r.results["t_complex"] = piece.complex.to_string(1);
    r.results["dimension"] = piece.dimension();

    std::optional<std::size_t> graph;
    if (o.degree_index == 2) {
        Json comps = Json::array();
        if (!piece.negative.empty())
            for (IndexSet c : toric::graph_gamma(fan).components(piece.negative))
                comps.push_back(c.to_string(1));
        r.results["gamma_components"] = comps;
        graph = localcoh::h2_via_graph(fan, p);
        r.results["h2_via_graph"] = *graph;
    }

    r.exit_code = Success;
    if (o.oracle) {
        std::size_t cech = localcoh::cech_piece(b, o.degree_index, p);
        bool agree = cech == piece.dimension() && (!graph || *graph == piece.dimension());
        r.results["oracle"] = Json{{"cech", cech}, {"agrees", agree}};
        if (!agree)
            r.exit_code = OracleMismatch;
    }
    return r;
}

Report cmd_cy(const std::vector<std::string>& args, const Options& o)
{
    std::string fan_bytes;
    toric::Fan fan = load_fan(o.fan_file, fan_bytes);
    std::string poly_bytes = read_file(o.poly_file);
    Report r = start(args, {fan_bytes, poly_bytes});
    r.warnings = fan.warnings;
    auto f = parse_polynomial(poly_bytes, o.poly_file);
    if (f.variables() != static_cast<std::size_t>(fan.ray_count()))
        throw InputError(o.poly_file + ": exponents have length " + std::to_string(f.variables()) + ", the fan has " +
                         std::to_string(fan.ray_count()) + " rays");

    auto rep = t1::cy_t1(fan, f);
    r.results["input"] = fan.name().empty() ? "fan" : fan.name();
    r.results["terms"] = f.terms.size();
    add_hypotheses(r, rep.hypotheses);
    if (rep.dimension) {
        r.results["dimension"] = *rep.dimension;
        r.results["monomials"] = rep.monomials;
        r.results["jacobian_rank"] = rep.rank;
        r.completeness = "guaranteed";
        r.exit_code = Success;
    } else {
        r.results["dimension"] = nullptr;
        r.results["failed_hypothesis"] = rep.failure;
        r.exit_code = Unsupported;
    }
    return r;
}

Report cmd_check_fan(const std::vector<std::string>& args, const Options& o)
{
    std::string bytes;
    toric::Fan fan = load_fan(o.fan_file, bytes);
    Report r = start(args, {bytes});
    r.warnings = fan.warnings;
    r.results["input"] = fan.name().empty() ? "fan" : fan.name();
    r.results["rank"] = fan.ambient_rank();
    r.results["rays"] = fan.ray_count();
    r.results["max_cones"] = fan.max_cones().size();
    r.results["affine"] = fan.is_affine();
    r.results["singular_codim"] = toric::singular_codim(fan).to_string();
    r.results["simplicial_codim"] = toric::simplicial_codim(fan).to_string();
    const bool complete = toric::is_complete(fan);
    r.results["complete"] = complete;
    r.results["fano"] = complete && toric::is_fano(fan);
    try {
        auto cox = toric::class_group(fan);
        Json torsion = Json::array();
        for (const auto& t : cox.torsion)
            torsion.push_back(t.get_str());
        r.results["class_group"] = Json{{"free_rank", cox.r}, {"torsion", torsion}};
    } catch (const UnsupportedError& e) {
        r.results["class_group"] = nullptr;
        r.warnings.push_back(e.what());
    }
    r.results["irrelevant_ideal"] = toric::irrelevant_ideal(fan).to_string();
    if (fan.is_affine()) {
        auto qg = toric::q_gorenstein(fan.cone(fan.max_cones().front()));
        r.results["q_gorenstein"] = qg ? Json{{"u0", longs(qg->u0)}, {"g", qg->g.get_str()}} : Json(nullptr);
    }
    r.exit_code = Success;
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Deformation invariants of toric varieties from fan data.\n"
                 "Fan files: {\"rays\": [[...]], \"max_cones\": [[...]]} with 0-based ray indices;\n"
                 "reports number rays and variables from 1."};
    app.name("torrigid");
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* t1 = app.add_subcommand("t1", "T^1 of an affine toric variety (fan file or {\"polygon\": ...})");
    t1->add_option("file", o.fan_file, "Fan or polygon file")->required();
    t1->add_option("--bound", o.bound, "Search window for fine degrees (default 2*max|coordinate|)")
        ->check(CLI::PositiveNumber);
    add_format(t1);

    auto* rig = app.add_subcommand("rigidity", "Rigidity certificates");
    rig->add_option("file", o.fan_file, "Fan file");
    rig->add_option("--wps", o.wps, "Weights q0,q1,... of a weighted projective space");
    rig->add_option("--criterion", o.criterion, "all|qgorenstein|quotient|fano|gamma|wps");
    add_format(rig);

    auto* lc = app.add_subcommand("localcoh", "Graded piece H^i_B(S)_p of local cohomology");
    lc->add_option("file", o.fan_file, "Fan file")->required();
    lc->add_option("--i", o.degree_index, "Cohomological degree")->required();
    lc->add_option("--p", o.p, "Fine degree, comma separated")->required()->allow_extra_args(false);
    lc->add_flag("--oracle", o.oracle, "Cross-check against the Cech complex");
    add_format(lc);

    auto* cy = app.add_subcommand("cy", "T^1 of an anticanonical Calabi-Yau hypersurface");
    cy->add_option("fan", o.fan_file, "Fan file")->required();
    cy->add_option("poly", o.poly_file, "Polynomial file")->required();
    add_format(cy);

    auto* check = app.add_subcommand("check-fan", "Validate a fan and print its invariants");
    check->add_option("file", o.fan_file, "Fan file")->required();
    add_format(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : InputFailure;
    }

    try {
        Report r;
        if (t1->parsed())
            r = cmd_t1(args, o);
        else if (rig->parsed())
            r = cmd_rigidity(args, o);
        else if (lc->parsed())
            r = cmd_localcoh(args, o);
        else if (cy->parsed())
            r = cmd_cy(args, o);
        else
            r = cmd_check_fan(args, o);
        if (o.format == "json")
            out << to_json(r).dump(2) << '\n';
        else
            out << to_text(r);
        return r.exit_code;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return InputFailure;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return Unsupported;
    } catch (const Error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return OracleMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InputFailure;
    }
}

} // namespace torrigid::cli
