// Command line front end: loads a JSON document, runs one computation or verification
// and writes a deterministic JSON report.
//
// Exit codes: 0 verified or success, 1 violation or obstruction (with witness),
// 2 inconclusive within the budget, input error or failed precondition.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "CLI11.hpp"

#include "hgt/algebras.hpp"
#include "hgt/deform.hpp"
#include "hgt/hga.hpp"
#include "hgt/io.hpp"
#include "hgt/twist.hpp"

using namespace hgt;
using io::InputError;
using io::Json;

namespace {

struct Options {
    std::string command;
    std::string mode;  // v1/v2 or quantize/trivialize
    std::string input;
    std::string output;
    std::string format = "json";
    std::size_t T = 6;
    std::size_t K = 3;
    std::size_t L = 3;
    std::size_t N = 3;
    std::optional<std::size_t> weight;
    std::size_t budget = 10000;
    std::uint64_t seed = 1;
    std::optional<std::size_t> m;
    int n = 0;
    std::size_t nmax = 7;
    std::size_t window = 6;
    bool relaxed = false;
    bool coaugmented = false;
};

struct Outcome {
    std::string verdict;
    int exit_code = 0;
    Json bounds = Json::object();
    Json body = Json::object();
};

/// Thrown when the input is well formed but a precondition of the operation fails.
struct Precondition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Outcome checked(bool ok)
{
    Outcome o;
    o.verdict = ok ? "verified" : "violation";
    o.exit_code = ok ? 0 : 1;
    return o;
}

Outcome from_verdict(Verdict v)
{
    Outcome o;
    o.verdict = to_string(v);
    o.exit_code = v == Verdict::success ? 0 : v == Verdict::obstructed ? 1 : 2;
    return o;
}

const Json& section(const Json& doc, const char* key)
{
    if (!doc.contains(key)) throw InputError(std::string("/") + key, std::string("missing section '") + key + "'");
    return doc[key];
}

DgAlgebra load_algebra(const Json& doc, bool require_axioms = true)
{
    auto a = io::parse_algebra(section(doc, "algebra"));
    if (require_axioms) {
        const auto r = validate_dga(a);
        if (!r.ok()) {
            const auto& v = r.violations().front();
            std::string w;
            for (const auto& s : v.witness) w += (w.empty() ? "" : ",") + s;
            throw InputError("/algebra", "not a dga: " + v.identity + " fails at (" + w + ")");
        }
    }
    return a;
}

DgCoalgebra load_coalgebra(const Json& doc, Json& body)
{
    if (doc.contains("coalgebra")) return io::parse_coalgebra(doc["coalgebra"]);
    body["coalgebra"] = "linear dual of the algebra";
    return dual_coalgebra(load_algebra(doc));
}

Json format_sum(const GradedBasis& b, const WordSum& s)
{
    Json out = Json::array();
    for (const auto& w : s.terms()) out.push_back(format_word(b, w));
    return out;
}

std::size_t weight_or(const Options& o, std::size_t fallback) { return o.weight.value_or(fallback); }

std::vector<int> cohomology_degrees(const GradedAlgebra& h)
{
    if (h.ungraded()) return {0};
    return {-2, -1, 0, 1};
}

Json check_json(const TwistCheck& c)
{
    Json j = {{"ok", c.ok}};
    if (c.failing) j["failing"] = *c.failing;
    return j;
}

Json check_json(const OrderCheck& c)
{
    Json j = {{"ok", c.ok}};
    if (c.failing_order) j["failing_order"] = *c.failing_order;
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

Json check_json(const AinfCheck& c)
{
    Json j = {{"ok", c.ok}};
    if (c.failing_arity) j["failing_arity"] = *c.failing_arity;
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

// Pads or trims gauge components to the weights of the twisting element.
GaugeV2 fit(const TwistCarrier& c, GaugeV2 g, std::size_t weights)
{
    while (g.g.size() < weights) {
        const auto bd = c.gauge_bidegree(g.g.size() + 1);
        g.g.emplace_back(bd.first, bd.second);
    }
    g.g.resize(weights);
    return g;
}

Json twist_out(const GradedAlgebra& h, const TwistV2& b, const io::TwistInput& in)
{
    return in.v1 ? io::to_json(h, regrade_v1(b), in.grading) : io::to_json(h, b, in.grading);
}

Json search_json(const GradedAlgebra& h, std::size_t evaluations, std::size_t backtracks,
                 const std::optional<ObstructionClass>& blocking, const std::vector<std::string>& trace)
{
    Json j = {{"evaluations", evaluations}, {"backtracks", backtracks}};
    if (blocking) j["blocking"] = io::to_json(h, *blocking);
    j["trace"] = trace;
    return j;
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const Options&, const Json& doc)
{
    io::validate_document(doc);
    Outcome o;
    o.verdict = "valid";
    Json keys = Json::array();
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    o.body["sections"] = keys;
    return o;
}

Outcome cmd_verify_dga(const Options&, const Json& doc)
{
    const auto a = load_algebra(doc, false);
    const auto r = validate_dga(a);
    auto o = checked(r.ok());
    o.body["dimension"] = a.dim();
    o.body["connected"] = is_connected(a);
    o.body["one_reduced"] = is_reduced(a, 1);
    o.body["checks"] = io::to_json(r);
    return o;
}

Outcome cmd_verify_dgc(const Options&, const Json& doc)
{
    Json body = Json::object();
    const auto c = doc.contains("coalgebra") ? io::parse_coalgebra(doc["coalgebra"]) : load_coalgebra(doc, body);
    const auto r = validate_dgc(c);
    auto o = checked(r.ok());
    o.body = body;
    o.body["dimension"] = c.dim();
    o.body["connected"] = c.is_connected();
    o.body["checks"] = io::to_json(r);
    return o;
}

Outcome cmd_bar(const Options& opt, const Json& doc)
{
    const auto a = load_algebra(doc);
    const auto b = bar(a, opt.L, opt.relaxed ? BarMode::relaxed : BarMode::reduced);
    const auto r = check_bar_square_zero(a, b);
    auto o = checked(r.ok());
    o.bounds = {{"L", opt.L}, {"relaxed", opt.relaxed}};
    Json words = Json::array();
    for (std::size_t i = 0; i < b.words.size(); ++i)
        words.push_back({{"word", format_word(a.basis(), b.words[i])},
                         {"degree", b.degrees[i]},
                         {"d", format_sum(a.basis(), b.differential[i])}});
    o.body["words"] = words;
    o.body["square_zero"] = io::to_json(r);
    return o;
}

Outcome cmd_cobar(const Options& opt, const Json& doc)
{
    Json body = Json::object();
    const auto c = load_coalgebra(doc, body);
    const auto om = cobar(c, opt.L, opt.coaugmented ? CobarMode::coaugmented : CobarMode::connected);
    const auto r = check_cobar_square_zero(c, om);
    auto o = checked(r.ok());
    o.body = body;
    o.bounds = {{"L", opt.L}, {"coaugmented", opt.coaugmented}};
    Json words = Json::array();
    for (std::size_t i = 0; i < om.words.size(); ++i)
        words.push_back({{"word", format_word(c.basis(), om.words[i])},
                         {"degree", om.degrees[i]},
                         {"d", format_sum(c.basis(), om.differential[i])}});
    o.body["words"] = words;
    o.body["overflow_terms"] = om.overflow_terms;
    o.body["square_zero"] = io::to_json(r);
    return o;
}

Outcome cmd_verify_brown(const Options& opt, const Json& doc)
{
    Report all;
    Json body = Json::object();
    if (doc.contains("algebra")) {
        const auto a = load_algebra(doc);
        const auto b = bar(a, opt.L, opt.relaxed ? BarMode::relaxed : BarMode::reduced);
        const auto r = check_brown(b.coalgebra(a.basis()), a, universal_bar_cochain(a, b));
        body["bar_side"] = io::to_json(r);
        all.merge(r);
    }
    if (doc.contains("coalgebra")) {
        const auto c = io::parse_coalgebra(doc["coalgebra"]);
        const auto om = cobar(c, opt.L, opt.coaugmented ? CobarMode::coaugmented : CobarMode::connected);
        const auto r = check_brown(c, om.algebra(c.basis()), universal_cobar_cochain(c, om));
        body["cobar_side"] = io::to_json(r);
        all.merge(r);
    }
    if (body.empty()) throw InputError("/", "needs an algebra or a coalgebra section");
    auto o = checked(all.ok());
    o.bounds = {{"L", opt.L}, {"relaxed", opt.relaxed}, {"coaugmented", opt.coaugmented}};
    o.body = body;
    return o;
}

Outcome cmd_verify_hga(const Options& opt, const Json& doc)
{
    const auto a = load_algebra(doc);
    const SweepWindow w{opt.K, weight_or(opt, 5)};
    const std::size_t low = std::min<std::size_t>(w.max_weight, 3);
    Report axioms, low_dim, degrees;
    if (doc.contains("braces")) {
        const auto t = io::parse_braces(a, doc["braces"]);
        degrees = t.check_degrees();
        axioms = verify_axioms(t, w);
        low_dim = verify_low_dim(t, low);
    } else {
        const GradedAlgebra h(a);
        const HochschildHga s(h);
        axioms = verify_axioms(s, w);
        low_dim = verify_low_dim(s, low);
    }
    auto o = checked(axioms.ok() && low_dim.ok() && degrees.ok());
    o.bounds = {{"K", w.max_brace}, {"total_arity", w.max_weight}, {"low_dim_weight", low}};
    o.body["carrier"] = doc.contains("braces") ? "brace table" : "Hochschild cochains";
    if (doc.contains("braces")) o.body["degree_law"] = io::to_json(degrees);
    o.body["axioms"] = io::to_json(axioms);
    o.body["low_dimensional_identities"] = io::to_json(low_dim);
    return o;
}

Outcome cmd_verify_lie(const Options& opt, const Json& doc)
{
    const auto a = load_algebra(doc);
    const GradedAlgebra h(a);
    const HochschildHga s(h);
    const auto w = weight_or(opt, 3);
    const auto lie = verify_lie(s, w);
    HochschildComplex c(h);
    const auto degs = cohomology_degrees(h);
    const auto hh = verify_lie_on_cohomology(c, 2, degs);
    auto o = checked(lie.ok() && hh.ok());
    o.bounds = {{"total_arity", w}, {"class_arity", 2}, {"internal_degrees", degs}};
    o.body["cochains"] = io::to_json(lie);
    o.body["cohomology"] = io::to_json(hh);
    return o;
}

Outcome cmd_bar_bialgebra(const Options& opt, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const HochschildHga s(h);
    const BarBialgebra<HochschildHga> b(s);
    const BarWindow w{opt.L, weight_or(opt, 3)};
    const auto r = check_bar_bialgebra(b, w);
    auto o = checked(r.ok());
    o.bounds = {{"L", w.max_length}, {"total_arity", w.max_weight}};
    o.body["checks"] = io::to_json(r);
    return o;
}

Outcome cmd_hochschild(const Options& opt, const Json& doc)
{
    if (!opt.m) throw InputError("--m", "the hochschild command needs --m");
    const GradedAlgebra h(load_algebra(doc));
    HochschildComplex c(h);
    const auto& g = c.cohomology(*opt.m, opt.n);
    Outcome o;
    o.verdict = "computed";
    o.bounds = {{"m", *opt.m}, {"n", opt.n}};
    o.body["dimension"] = g.dimension();
    o.body["cochain_dimension"] = g.space.dimension();
    o.body["cocycle_rank"] = g.quotient.cycle_rank();
    o.body["coboundary_rank"] = g.quotient.boundary_rank();
    Json reps = Json::array();
    for (const auto& z : g.class_basis()) reps.push_back(io::to_json(h, z));
    o.body["representatives"] = reps;
    return o;
}

Outcome cmd_check_twist(const Options& opt, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto in = io::parse_twist(h, section(doc, "twist"), "/twist");
    const TwistCarrier c(h, in.grading);
    Outcome o;
    if (opt.mode == "v1") {
        if (in.grading != Grading::internal) throw InputError("/twist/grading", "version 1 needs the internal grading");
        const auto m = in.v1 ? in.m : regrade_v1(in.b);
        const auto r = check_v1(c, m);
        o = checked(r.ok);
        o.bounds = {{"T", m.T}};
        o.body["check"] = check_json(r);
    } else {
        const auto r = check_v2(c, in.b);
        o = checked(r.ok);
        o.bounds = {{"weights", in.b.weights()}};
        o.body["check"] = check_json(r);
    }
    return o;
}

Outcome cmd_act(const Options&, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto b = io::parse_twist(h, section(doc, "twist"), "/twist");
    const auto g = io::parse_gauge(h, section(doc, "gauge"), "/gauge");
    if (g.grading != b.grading) throw InputError("/gauge/grading", "gauge and twisting element use different gradings");
    const TwistCarrier c(h, b.grading);
    if (!check_v2(c, b.b).ok) throw Precondition("the input is not a twisting element");
    const auto result = act_v2(c, fit(c, g.v2, b.b.weights()), b.b);
    const auto r = check_v2(c, result);
    auto o = checked(r.ok);
    o.bounds = {{"weights", b.b.weights()}};
    o.body["result"] = twist_out(h, result, b);
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_perturb(const Options&, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto b = io::parse_twist(h, section(doc, "twist"), "/twist");
    const auto& p = section(doc, "perturbation");
    const auto n = p.at("weight").get<std::size_t>();
    const auto gn = io::parse_cochain(h, p.at("cochain"), "/perturbation/cochain");
    const TwistCarrier c(h, b.grading);
    if (!check_v2(c, b.b).ok) throw Precondition("the input is not a twisting element");
    const auto result = perturb(c, b.b, n, gn);
    const auto r = check_v2(c, result);
    auto o = checked(r.ok);
    o.bounds = {{"weights", b.b.weights()}, {"perturbed_weight", n}};
    o.body["result"] = twist_out(h, result, b);
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_obstruct(const Options& opt, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto b = io::parse_twist(h, section(doc, "twist"), "/twist");
    const TwistCarrier c(h, b.grading);
    if (opt.mode == "quantize") {
        const auto w = b.b.weights() + 1;
        const auto ob = quantization_obstruction(c, b.b.b, w);
        Outcome o;
        o.verdict = ob.vanishes() ? "success" : "obstructed";
        o.exit_code = ob.vanishes() ? 0 : 1;
        o.bounds = {{"weight", w}};
        o.body["obstruction"] = io::to_json(h, ob);
        return o;
    }
    if (!check_v2(c, b.b).ok) throw Precondition("the input is not a twisting element");
    const auto r = triviality_reduce(c, b.b, opt.budget);
    auto o = from_verdict(r.verdict);
    o.bounds = {{"weights", r.weights}, {"budget", opt.budget}};
    o.body["search"] = search_json(h, r.evaluations, r.backtracks, r.blocking, r.trace);
    return o;
}

Outcome cmd_quantize(const Options& opt, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto& q = section(doc, "quantize");
    io::validate_document(Json{{"algebra", doc["algebra"]}, {"quantize", q}});
    const Grading grading = q.value("grading", std::string("t_adic")) == "internal" ? Grading::internal : Grading::t_adic;
    const TwistCarrier c(h, grading);
    std::vector<int> bits;
    for (const auto& x : q.at("class")) bits.push_back(x.get<int>());
    const auto bd = c.twist_bidegree(1);
    const auto dim = c.complex().cohomology(bd.first, bd.second).dimension();
    if (bits.size() != dim)
        throw InputError("/quantize/class", "class has " + std::to_string(bits.size()) + " coordinates, the group has dimension " +
                                                std::to_string(dim));
    std::size_t weights = 0;
    Json bounds;
    if (grading == Grading::internal) {
        if (opt.T < 3) throw InputError("--trunc-T", "T must be at least 3");
        weights = opt.T - 2;
        bounds = {{"T", opt.T}, {"weights", weights}, {"budget", opt.budget}};
    } else {
        weights = opt.N;
        bounds = {{"N", opt.N}, {"weights", weights}, {"budget", opt.budget}};
    }
    const auto r = quantize(c, F2Vector::from_bits(bits), weights, opt.budget);
    auto o = from_verdict(r.verdict);
    o.bounds = bounds;
    if (r.verdict == Verdict::success) {
        io::TwistInput shape;
        shape.v1 = grading == Grading::internal;
        shape.grading = grading;
        o.body["twist"] = twist_out(h, r.twist, shape);
    }
    o.body["search"] = search_json(h, r.evaluations, r.backtracks, r.blocking, r.trace);
    return o;
}

Outcome cmd_trivialize(const Options& opt, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto b = io::parse_twist(h, section(doc, "twist"), "/twist");
    const TwistCarrier c(h, b.grading);
    if (!check_v2(c, b.b).ok) throw Precondition("the input is not a twisting element");
    EquivalenceResult r;
    if (doc.contains("twist_target")) {
        const auto t = io::parse_twist(h, doc["twist_target"], "/twist_target");
        if (t.grading != b.grading || t.b.weights() != b.b.weights())
            throw InputError("/twist_target", "target has a different grading or truncation");
        if (!check_v2(c, t.b).ok) throw Precondition("the target is not a twisting element");
        r = equivalence(c, b.b, t.b, opt.budget);
    } else {
        r = triviality_reduce(c, b.b, opt.budget);
    }
    auto o = from_verdict(r.verdict);
    o.bounds = {{"weights", r.weights}, {"budget", opt.budget}};
    if (r.verdict == Verdict::success) o.body["gauge"] = io::to_json(h, r.gauge, b.grading);
    o.body["search"] = search_json(h, r.evaluations, r.backtracks, r.blocking, r.trace);
    return o;
}

Outcome cmd_check_star(const Options&, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto s = io::parse_star(h, section(doc, "star"), "/star");
    const auto r = check_star(h, s);
    auto o = checked(r.ok);
    o.bounds = {{"N", s.order()}};
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_check_gauge(const Options&, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto b = io::parse_star(h, section(doc, "star"), "/star");
    const auto bp = io::parse_star(h, section(doc, "star_target"), "/star_target");
    const auto g = io::parse_gauge_series(h, section(doc, "gauge_series"), "/gauge_series");
    const auto r = check_gauge(h, b, bp, g);
    auto o = checked(r.ok);
    o.bounds = {{"N", std::max({b.order(), bp.order(), g.order()})}};
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_star_to_twist(const Options&, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto s = io::parse_star(h, section(doc, "star"), "/star");
    const TwistCarrier c(h, Grading::t_adic);
    const auto t = star_to_twist(s);
    const auto r = check_v2(c, t);
    const auto direct = check_star(h, s);
    if (r.ok != direct.ok) throw InconsistentComplex("star associativity and the twisting condition disagree");
    auto o = checked(r.ok);
    o.bounds = {{"N", s.order()}};
    o.body["twist"] = io::to_json(h, t, Grading::t_adic);
    o.body["check"] = check_json(r);
    return o;
}

AinfAlgebra load_ainf(const Json& doc, const char* key)
{
    std::optional<DgAlgebra> a;
    if (doc.contains("algebra")) a = io::parse_algebra(doc["algebra"]);
    return io::parse_ainf(section(doc, key), a ? &a->basis() : nullptr, std::string("/") + key);
}

AinfAlgebra load_target(const Json& doc)
{
    if (doc.contains("ainf_target")) return load_ainf(doc, "ainf_target");
    return ainf_from_dga(load_algebra(doc));
}

Outcome cmd_check_ainf(const Options& opt, const Json& doc)
{
    const auto m = load_ainf(doc, "ainf");
    const auto typed = m.check_typed();
    if (!typed.ok()) throw InputError("/ainf/ops", "degree law fails");
    const auto r = check_ainf(m, opt.window);
    auto o = checked(r.ok);
    o.bounds = {{"window", opt.window}, {"max_arity", m.max_arity()}};
    o.body["minimal"] = m.minimal();
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_check_ainf_morphism(const Options& opt, const Json& doc)
{
    const auto m = load_ainf(doc, "ainf");
    const auto t = load_target(doc);
    const auto f = io::parse_morphism(m, t, section(doc, "morphism"), "/morphism");
    const auto r = check_ainf_morphism(f, m, t, opt.window);
    auto o = checked(r.ok);
    o.bounds = {{"window", opt.window}};
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_ainf_bar(const Options& opt, const Json& doc)
{
    const auto m = load_ainf(doc, "ainf");
    const auto b = ainf_bar(m, opt.L);
    auto o = checked(b.report.ok());
    o.bounds = {{"L", opt.L}};
    Json words = Json::array();
    for (std::size_t i = 0; i < b.words.size(); ++i)
        words.push_back({{"word", format_word(m.basis, b.words[i])}, {"d", format_sum(m.basis, b.differential[i])}});
    o.body["words"] = words;
    o.body["checks"] = io::to_json(b.report);
    return o;
}

Outcome cmd_classify_morphism(const Options&, const Json& doc)
{
    const auto m = load_ainf(doc, "ainf");
    const auto t = load_target(doc);
    const auto f = io::parse_morphism(m, t, section(doc, "morphism"), "/morphism");
    const auto k = classify_morphism(f, m, t);
    Outcome o;
    o.verdict = "computed";
    o.body["classification"] = to_string(k.kind);
    o.body["chain_map"] = k.chain_map;
    o.body["notes"] = k.notes;
    return o;
}

Outcome cmd_stasheff_to_twist(const Options&, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    const auto m = load_ainf(doc, "ainf");
    const auto t = stasheff_to_twist(h, m);
    const TwistCarrier c(h, Grading::internal);
    const auto r = check_v1(c, t);
    const auto direct = check_ainf(m, t.T + 1);
    if (r.ok != direct.ok) throw InconsistentComplex("A(infinity) relations and the twisting condition disagree");
    auto o = checked(r.ok);
    o.bounds = {{"T", t.T}, {"window", t.T + 1}};
    o.body["twist"] = io::to_json(h, t, Grading::internal);
    o.body["check"] = check_json(r);
    return o;
}

Outcome cmd_formality(const Options& opt, const Json& doc)
{
    HochschildComplex c{GradedAlgebra(load_algebra(doc))};
    const auto f = intrinsic_formality(c, opt.nmax);
    Outcome o;
    o.verdict = f.certified ? "certified" : "not_certified";
    o.bounds = {{"nmax", f.nmax}};
    Json dims = Json::array();
    for (const auto& [n, d] : f.dimensions) dims.push_back({{"n", n}, {"bidegree", Json::array({n, 2 - static_cast<int>(n)})}, {"dimension", d}});
    o.body["dimensions"] = dims;
    o.body["nonzero"] = f.nonzero;
    return o;
}

Outcome cmd_gerstenhaber(const Options& opt, const Json& doc)
{
    const GradedAlgebra h(load_algebra(doc));
    if (!h.ungraded()) throw Precondition("Gerstenhaber deformations need an ungraded algebra");
    const auto r = gerstenhaber_report(h, opt.N, opt.budget, 8, opt.seed);
    Outcome o;
    o.verdict = "computed";
    o.bounds = {{"N", r.order}, {"budget", opt.budget}, {"samples", 8}, {"seed", opt.seed}};
    o.body["HH2"] = r.hh2;
    o.body["HH3"] = r.hh3;
    o.body["integrability_certificate"] = r.integrability_certificate;
    o.body["rigidity_certificate"] = r.rigidity_certificate;
    bool inconclusive = false;
    auto runs = [&](const std::vector<GerstenhaberReport::Run>& v) {
        Json out = Json::array();
        for (const auto& x : v) {
            Json j = {{"subject", x.subject}, {"verdict", to_string(x.verdict)}, {"evaluations", x.evaluations}};
            if (x.blocking) j["blocking"] = io::to_json(h, *x.blocking);
            out.push_back(j);
            inconclusive = inconclusive || x.verdict == Verdict::inconclusive;
        }
        return out;
    };
    o.body["quantize_runs"] = runs(r.quantize_runs);
    o.body["triviality_runs"] = runs(r.triviality_runs);
    if (inconclusive) {
        o.verdict = "inconclusive";
        o.exit_code = 2;
    }
    return o;
}

using Handler = std::function<Outcome(const Options&, const Json&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> h = {
        {"validate", cmd_validate},
        {"verify-dga", cmd_verify_dga},
        {"verify-dgc", cmd_verify_dgc},
        {"bar", cmd_bar},
        {"cobar", cmd_cobar},
        {"verify-brown", cmd_verify_brown},
        {"verify-hga", cmd_verify_hga},
        {"verify-lie", cmd_verify_lie},
        {"bar-bialgebra", cmd_bar_bialgebra},
        {"hochschild", cmd_hochschild},
        {"check-twist", cmd_check_twist},
        {"act", cmd_act},
        {"perturb", cmd_perturb},
        {"obstruct", cmd_obstruct},
        {"quantize", cmd_quantize},
        {"trivialize", cmd_trivialize},
        {"check-star", cmd_check_star},
        {"check-gauge", cmd_check_gauge},
        {"star-to-twist", cmd_star_to_twist},
        {"check-ainf", cmd_check_ainf},
        {"check-ainf-morphism", cmd_check_ainf_morphism},
        {"ainf-bar", cmd_ainf_bar},
        {"classify-morphism", cmd_classify_morphism},
        {"stasheff-to-twist", cmd_stasheff_to_twist},
        {"formality", cmd_formality},
        {"gerstenhaber-report", cmd_gerstenhaber},
    };
    return h;
}

void write_atomically(const std::string& path, const std::string& text)
{
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

int run(const Options& opt)
{
    Json report;
    report["report_version"] = 1;
    report["command"] = opt.mode.empty() ? opt.command : opt.command + " " + opt.mode;
    report["input"] = opt.input;
    Outcome out;
    try {
        const Json doc = io::load_json(opt.input);
        io::validate_document(doc);
        out = handlers().at(opt.command)(opt, doc);
    } catch (const InputError& e) {
        out = {};
        out.verdict = "input_error";
        out.exit_code = 2;
        out.body["error"] = {{"path", e.path()}, {"message", e.message()}};
    } catch (const Precondition& e) {
        out = {};
        out.verdict = "precondition_failed";
        out.exit_code = 2;
        out.body["error"] = {{"message", e.what()}};
    } catch (const PreconditionError& e) {
        out = {};
        out.verdict = "precondition_failed";
        out.exit_code = 2;
        out.body["error"] = {{"message", e.what()}};
    } catch (const InconsistentComplex& e) {
        out = {};
        out.verdict = "internal_error";
        out.exit_code = 2;
        out.body["error"] = {{"message", e.what()}};
    }
    report["verdict"] = out.verdict;
    report["exit_code"] = out.exit_code;
    report["bounds"] = out.bounds;
    for (const auto& [k, v] : out.body.items()) report[k] = v;
    const std::string text = report.dump(2) + "\n";
    if (opt.output.empty()) std::cout << text;
    else write_atomically(opt.output, text);
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homotopy G-algebras, twisting elements and deformations over F2"};
    app.require_subcommand(1);
    Options opt;
    const std::map<std::string, std::string> help = {
        {"validate", "check the structure of an input document"},
        {"verify-dga", "check the dga axioms of the algebra"},
        {"verify-dgc", "check the dgc axioms of the coalgebra"},
        {"bar", "build the truncated bar construction and check d^2 = 0"},
        {"cobar", "build the truncated cobar construction and check d^2 = 0"},
        {"verify-brown", "check Brown's condition for the universal twisting cochains"},
        {"verify-hga", "sweep the hGa axioms and low-dimensional identities"},
        {"verify-lie", "check the Gerstenhaber bracket identities"},
        {"bar-bialgebra", "check the bar bialgebra of the Hochschild hGa"},
        {"hochschild", "dimension and basis of HH^{m,n}"},
        {"check-twist", "check the twisting condition of a v1 or v2 element"},
        {"act", "apply a gauge element to a twisting element"},
        {"perturb", "apply a single-weight perturbation"},
        {"obstruct", "obstruction class at the next weight"},
        {"quantize", "search for a twisting element with a given first class"},
        {"trivialize", "search for a gauge to zero or to twist_target"},
        {"check-star", "check associativity of a star product to order N"},
        {"check-gauge", "check a gauge equivalence of star products"},
        {"star-to-twist", "translate a star product to a t-adic twisting element"},
        {"check-ainf", "check the A(infinity) relations within a window"},
        {"check-ainf-morphism", "check the A(infinity) morphism relations within a window"},
        {"ainf-bar", "build the A(infinity) bar construction and check d^2 = 0"},
        {"classify-morphism", "classify an A(infinity) morphism"},
        {"stasheff-to-twist", "translate a minimal A(infinity) structure to a twisting element"},
        {"formality", "intrinsic formality certificate from HH^{n,2-n}"},
        {"gerstenhaber-report", "HH^2, HH^3 and sampled quantize and triviality runs"},
    };
    for (const auto& [name, handler] : handlers()) {
        const auto it = help.find(name);
        auto* sub = app.add_subcommand(name, it == help.end() ? "" : it->second);
        if (name == "check-twist")
            sub->add_option("version", opt.mode, "v1 or v2")->required()->check(CLI::IsMember({"v1", "v2"}));
        if (name == "obstruct")
            sub->add_option("problem", opt.mode, "quantize or trivialize")->required()->check(CLI::IsMember({"quantize", "trivialize"}));
        sub->add_option("--input", opt.input, "input JSON document")->required();
        sub->add_option("--output", opt.output, "report file (default: standard output)");
        sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json"}));
        sub->add_option("--trunc-T", opt.T, "truncation degree T")->check(CLI::Range(3, 64));
        sub->add_option("--arity-K", opt.K, "brace arity bound K")->check(CLI::Range(1, 8));
        sub->add_option("--bar-L", opt.L, "bar word length L")->check(CLI::Range(1, 16));
        sub->add_option("--order-N", opt.N, "deformation order N")->check(CLI::Range(1, 32));
        sub->add_option("--weight", opt.weight, "bound on the total arity of sampled tuples");
        sub->add_option("--budget", opt.budget, "lift evaluation budget of the searches");
        sub->add_option("--seed", opt.seed, "seed for sampled instances");
        sub->add_option("--window", opt.window, "arity window I_max for A(infinity) relations")->check(CLI::Range(1, 12));
        sub->add_option("--nmax", opt.nmax, "largest n for HH^{n,2-n}")->check(CLI::Range(3, 24));
        if (name == "hochschild") {
            sub->add_option("--m", opt.m, "Hochschild arity m")->required();
            sub->add_option("--n", opt.n, "internal degree n");
        }
        if (name == "bar" || name == "verify-brown") sub->add_flag("--relaxed", opt.relaxed, "allow algebras that are not 1-reduced");
        if (name == "cobar" || name == "verify-brown")
            sub->add_flag("--coaugmented", opt.coaugmented, "allow coaugmented coalgebras that are not connected");
        sub->callback([&opt, name] { opt.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
