#include "hgt/io.hpp"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "hgt/algebras.hpp"

namespace hgt::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw InputError(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(at(path, key), "missing field '" + key + "'");
    return *it;
}

const Json& array(const Json& j, const std::string& path)
{
    if (!j.is_array()) throw InputError(path, "expected an array");
    return j;
}

std::string string_of(const Json& j, const std::string& path)
{
    if (!j.is_string()) throw InputError(path, "expected a string");
    return j.get<std::string>();
}

long long integer(const Json& j, const std::string& path)
{
    if (!j.is_number_integer()) throw InputError(path, "expected an integer");
    return j.get<long long>();
}

std::size_t count(const Json& j, const std::string& path, std::size_t minimum)
{
    const auto v = integer(j, path);
    if (v < static_cast<long long>(minimum)) throw InputError(path, "must be at least " + std::to_string(minimum));
    return static_cast<std::size_t>(v);
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys)
{
    if (!j.is_object()) throw InputError(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) throw InputError(at(path, k), "unknown field '" + k + "'");
    }
}

std::size_t resolve(const GradedBasis& b, const Json& j, const std::string& path)
{
    const auto name = string_of(j, path);
    const auto i = b.find(name);
    if (!i) throw InputError(path, "unknown basis element '" + name + "'");
    return *i;
}

F2Vector terms(const GradedBasis& b, const Json& j, const std::string& path, std::optional<int> degree,
               const std::string& context)
{
    array(j, path);
    F2Vector v(b.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto k = resolve(b, j[i], at(path, i));
        if (degree && b.degree(k) != *degree)
            throw InputError(at(path, i), context + ": term " + b.name(k) + " has degree " + std::to_string(b.degree(k)) +
                                              ", expected " + std::to_string(*degree));
        v.flip(k);
    }
    return v;
}

Json names(const GradedBasis& b, Mask m)
{
    Json out = Json::array();
    for (; m; m &= m - 1) out.push_back(b.name(static_cast<std::size_t>(std::countr_zero(m))));
    return out;
}

// Dense table of an operation of the given arity and degree shift from [[tuple], [terms]].
std::vector<Mask> parse_table(const GradedBasis& in, const GradedBasis& out, const Json& j, std::size_t arity,
                              int shift, const std::string& path, const std::string& what)
{
    array(j, path);
    std::vector<Mask> table = zero_table(in.size(), arity);
    std::vector<bool> seen(table.size(), false);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string p = at(path, e);
        const auto& entry = array(j[e], p);
        if (entry.size() != 2) throw InputError(p, "expected [[tuple], [terms]]");
        const auto& tuple = array(entry[0], at(p, 0));
        if (tuple.size() != arity)
            throw InputError(at(p, 0), what + " takes " + std::to_string(arity) + " arguments, got " +
                                           std::to_string(tuple.size()));
        std::uint64_t row = 0;
        int deg = shift;
        std::string label;
        for (std::size_t t = 0; t < arity; ++t) {
            const auto k = resolve(in, tuple[t], at(at(p, 0), t));
            row = row * in.size() + k;
            deg += in.degree(k);
            label += (t ? "," : "") + in.name(k);
        }
        if (seen[row]) throw InputError(p, "duplicate entry for " + what + "(" + label + ")");
        seen[row] = true;
        const auto v = terms(out, entry[1], at(p, 1), deg, what + "(" + label + ")");
        Mask m = 0;
        for (auto i : v.support()) m |= Mask{1} << i;
        table[row] = m;
    }
    return table;
}

HCochain component(const GradedAlgebra& h, const Json& j, std::size_t arity, int degree, const std::string& path)
{
    if (j.is_array()) return parse_entries(h, j, arity, degree, path);
    only_keys(j, path, {"arity", "internal_degree", "entries"});
    if (j.contains("arity") && integer(j["arity"], at(path, "arity")) != static_cast<long long>(arity))
        throw InputError(at(path, "arity"), "expected arity " + std::to_string(arity));
    if (j.contains("internal_degree") && integer(j["internal_degree"], at(path, "internal_degree")) != degree)
        throw InputError(at(path, "internal_degree"), "expected internal degree " + std::to_string(degree));
    return parse_entries(h, field(j, "entries", path), arity, degree, at(path, "entries"));
}

Grading parse_grading(const Json& j, const std::string& path)
{
    const auto s = string_of(j, path);
    if (s == "internal") return Grading::internal;
    if (s == "t_adic") return Grading::t_adic;
    throw InputError(path, "grading must be \"internal\" or \"t_adic\"");
}

std::string grading_name(Grading g) { return g == Grading::internal ? "internal" : "t_adic"; }

template <class F>
void for_components(const Json& j, const std::string& path, std::size_t lo, std::size_t hi, F&& f)
{
    if (!j.is_object()) throw InputError(path, "expected an object keyed by degree");
    for (const auto& [k, v] : j.items()) {
        std::size_t key = 0;
        try {
            std::size_t used = 0;
            key = std::stoul(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            throw InputError(at(path, k), "component key must be an integer");
        }
        if (key < lo || key > hi)
            throw InputError(at(path, k), "component outside " + std::to_string(lo) + ".." + std::to_string(hi));
        f(key, v, at(path, k));
    }
}

}  // namespace

Json load_json(const std::string& file)
{
    std::ifstream in(file);
    if (!in) throw InputError("/", "cannot read " + file);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("/", std::string("malformed JSON: ") + e.what());
    }
}

GradedBasis parse_basis(const Json& j, const std::string& path)
{
    array(j, path);
    if (j.empty()) throw InputError(path, "basis is empty");
    if (j.size() > 64) throw InputError(path, "basis larger than 64 elements");
    std::vector<BasisElement> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = at(path, i);
        only_keys(j[i], p, {"name", "degree"});
        const auto name = string_of(field(j[i], "name", p), at(p, "name"));
        if (name.empty()) throw InputError(at(p, "name"), "empty name");
        if (!seen.insert(name).second) throw InputError(at(p, "name"), "duplicate basis element '" + name + "'");
        const auto deg = integer(field(j[i], "degree", p), at(p, "degree"));
        out.push_back({name, static_cast<int>(deg)});
    }
    return GradedBasis(std::move(out));
}

DgAlgebra parse_algebra(const Json& j, const std::string& path)
{
    only_keys(j, path, {"basis", "unit", "mult", "diff"});
    GradedBasis basis = parse_basis(field(j, "basis", path), at(path, "basis"));
    const auto n = basis.size();
    const auto u = resolve(basis, field(j, "unit", path), at(path, "unit"));
    if (basis.degree(u) != 0) throw InputError(at(path, "unit"), "unit must have degree 0");
    std::vector<std::vector<F2Vector>> mult(n, std::vector<F2Vector>(n, F2Vector(n)));
    for (std::size_t i = 0; i < n; ++i) {
        mult[u][i] = F2Vector::unit(n, i);
        mult[i][u] = F2Vector::unit(n, i);
    }
    if (j.contains("mult")) {
        const auto p = at(path, "mult");
        const auto& m = array(j["mult"], p);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < m.size(); ++e) {
            const auto q = at(p, e);
            if (!m[e].is_array() || m[e].size() != 3) throw InputError(q, "expected [a, b, [terms]]");
            const auto a = resolve(basis, m[e][0], at(q, 0));
            const auto b = resolve(basis, m[e][1], at(q, 1));
            if (!seen.insert({a, b}).second)
                throw InputError(q, "duplicate product " + basis.name(a) + "*" + basis.name(b));
            mult[a][b] = terms(basis, m[e][2], at(q, 2), basis.degree(a) + basis.degree(b),
                               "product " + basis.name(a) + "*" + basis.name(b));
        }
    }
    std::vector<F2Vector> diff(n, F2Vector(n));
    if (j.contains("diff")) {
        const auto p = at(path, "diff");
        const auto& d = array(j["diff"], p);
        std::set<std::size_t> seen;
        for (std::size_t e = 0; e < d.size(); ++e) {
            const auto q = at(p, e);
            if (!d[e].is_array() || d[e].size() != 2) throw InputError(q, "expected [a, [terms]]");
            const auto a = resolve(basis, d[e][0], at(q, 0));
            if (!seen.insert(a).second) throw InputError(q, "duplicate differential of " + basis.name(a));
            diff[a] = terms(basis, d[e][1], at(q, 1), basis.degree(a) + 1, "d(" + basis.name(a) + ")");
        }
    }
    return DgAlgebra(std::move(basis), u, std::move(mult), std::move(diff));
}

DgCoalgebra parse_coalgebra(const Json& j, const std::string& path)
{
    only_keys(j, path, {"basis", "counit", "comult", "diff"});
    GradedBasis basis = parse_basis(field(j, "basis", path), at(path, "basis"));
    const auto n = basis.size();
    const F2Vector counit = terms(basis, field(j, "counit", path), at(path, "counit"), 0, "counit");
    std::vector<F2Vector> comult(n, F2Vector(n * n));
    if (j.contains("comult")) {
        const auto p = at(path, "comult");
        const auto& m = array(j["comult"], p);
        std::set<std::size_t> seen;
        for (std::size_t e = 0; e < m.size(); ++e) {
            const auto q = at(p, e);
            if (!m[e].is_array() || m[e].size() != 2) throw InputError(q, "expected [c, [[a, b], ...]]");
            const auto c = resolve(basis, m[e][0], at(q, 0));
            if (!seen.insert(c).second) throw InputError(q, "duplicate coproduct of " + basis.name(c));
            const auto& pairs = array(m[e][1], at(q, 1));
            for (std::size_t t = 0; t < pairs.size(); ++t) {
                const auto r = at(at(q, 1), t);
                if (!pairs[t].is_array() || pairs[t].size() != 2) throw InputError(r, "expected [a, b]");
                const auto a = resolve(basis, pairs[t][0], at(r, 0));
                const auto b = resolve(basis, pairs[t][1], at(r, 1));
                if (basis.degree(a) + basis.degree(b) != basis.degree(c))
                    throw InputError(r, "coproduct of " + basis.name(c) + ": term " + basis.name(a) + "|" +
                                            basis.name(b) + " has the wrong degree");
                comult[c].flip(a * n + b);
            }
        }
    }
    std::vector<F2Vector> diff(n, F2Vector(n));
    if (j.contains("diff")) {
        const auto p = at(path, "diff");
        const auto& d = array(j["diff"], p);
        for (std::size_t e = 0; e < d.size(); ++e) {
            const auto q = at(p, e);
            if (!d[e].is_array() || d[e].size() != 2) throw InputError(q, "expected [c, [terms]]");
            const auto c = resolve(basis, d[e][0], at(q, 0));
            diff[c] = terms(basis, d[e][1], at(q, 1), basis.degree(c) + 1, "d(" + basis.name(c) + ")");
        }
    }
    return DgCoalgebra(std::move(basis), counit, std::move(comult), std::move(diff));
}

TableHga parse_braces(const DgAlgebra& a, const Json& j, const std::string& path)
{
    only_keys(j, path, {"max_brace", "entries"});
    const auto k_max = count(field(j, "max_brace", path), at(path, "max_brace"), 1);
    TableHga::BraceTable table;
    const auto p = at(path, "entries");
    const auto& e = array(field(j, "entries", path), p);
    const auto& basis = a.basis();
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto q = at(p, i);
        if (!e[i].is_array() || e[i].size() != 2) throw InputError(q, "expected [[a, b_1, ..], [terms]]");
        const auto& key = array(e[i][0], at(q, 0));
        if (key.size() < 2 || key.size() > k_max + 1)
            throw InputError(at(q, 0), "brace needs between 1 and " + std::to_string(k_max) + " inserted elements");
        std::vector<std::uint32_t> k;
        int deg = -static_cast<int>(key.size() - 1);
        for (std::size_t t = 0; t < key.size(); ++t) {
            const auto x = resolve(basis, key[t], at(at(q, 0), t));
            k.push_back(static_cast<std::uint32_t>(x));
            deg += basis.degree(x);
        }
        if (table.contains(k)) throw InputError(q, "duplicate brace entry");
        table[k] = terms(basis, e[i][1], at(q, 1), deg, "brace");
    }
    return TableHga(a, k_max, std::move(table));
}

HCochain parse_entries(const GradedAlgebra& h, const Json& j, std::size_t arity, int degree, const std::string& path)
{
    if (arity > h.arity_limit()) throw InputError(path, "arity " + std::to_string(arity) + " too large for this algebra");
    const auto table = parse_table(h.basis(), h.basis(), j, arity, degree, path, "cochain");
    std::vector<CochainEntry> e;
    for (std::uint64_t r = 0; r < table.size(); ++r)
        if (table[r]) e.push_back({r, table[r]});
    return HCochain(arity, degree, std::move(e));
}

HCochain parse_cochain(const GradedAlgebra& h, const Json& j, const std::string& path)
{
    only_keys(j, path, {"arity", "internal_degree", "entries"});
    const auto arity = count(field(j, "arity", path), at(path, "arity"), 0);
    const auto degree = static_cast<int>(integer(field(j, "internal_degree", path), at(path, "internal_degree")));
    return parse_entries(h, field(j, "entries", path), arity, degree, at(path, "entries"));
}

TwistInput parse_twist(const GradedAlgebra& h, const Json& j, const std::string& path)
{
    only_keys(j, path, {"version", "grading", "T", "weights", "components"});
    TwistInput out;
    const auto version = string_of(field(j, "version", path), at(path, "version"));
    if (version != "v1" && version != "v2") throw InputError(at(path, "version"), "version must be \"v1\" or \"v2\"");
    out.v1 = version == "v1";
    out.grading = j.contains("grading") ? parse_grading(j["grading"], at(path, "grading"))
                                        : out.v1 ? Grading::internal : Grading::t_adic;
    if (out.v1 && out.grading != Grading::internal)
        throw InputError(at(path, "grading"), "version-1 elements use the internal grading");
    const Json empty = Json::object();
    const Json& comps = j.contains("components") ? j["components"] : empty;
    if (out.v1) {
        out.m.T = count(field(j, "T", path), at(path, "T"), 3);
        for (std::size_t p = 3; p <= out.m.T; ++p) out.m.m.emplace_back(p, 2 - static_cast<int>(p));
        for_components(comps, at(path, "components"), 3, out.m.T, [&](std::size_t p, const Json& c, const std::string& q) {
            out.m.m[p - 3] = component(h, c, p, 2 - static_cast<int>(p), q);
        });
        out.b = regrade(out.m);
    } else {
        const auto w = count(field(j, "weights", path), at(path, "weights"), 1);
        for (std::size_t q = 1; q <= w; ++q)
            out.b.b.push_back(out.grading == Grading::internal ? HCochain(q + 2, -static_cast<int>(q)) : HCochain(2, 0));
        for_components(comps, at(path, "components"), 1, w, [&](std::size_t q, const Json& c, const std::string& p) {
            out.b.b[q - 1] = out.grading == Grading::internal ? component(h, c, q + 2, -static_cast<int>(q), p)
                                                              : component(h, c, 2, 0, p);
        });
    }
    return out;
}

GaugeInput parse_gauge(const GradedAlgebra& h, const Json& j, const std::string& path)
{
    only_keys(j, path, {"version", "grading", "T", "weights", "components"});
    GaugeInput out;
    const auto version = string_of(field(j, "version", path), at(path, "version"));
    if (version != "v1" && version != "v2") throw InputError(at(path, "version"), "version must be \"v1\" or \"v2\"");
    out.v1 = version == "v1";
    out.grading = j.contains("grading") ? parse_grading(j["grading"], at(path, "grading"))
                                        : out.v1 ? Grading::internal : Grading::t_adic;
    if (out.v1 && out.grading != Grading::internal)
        throw InputError(at(path, "grading"), "version-1 elements use the internal grading");
    const Json empty = Json::object();
    const Json& comps = j.contains("components") ? j["components"] : empty;
    if (out.v1) {
        out.g.T = count(field(j, "T", path), at(path, "T"), 2);
        for (std::size_t p = 2; p <= out.g.T; ++p) out.g.g.emplace_back(p, 1 - static_cast<int>(p));
        for_components(comps, at(path, "components"), 2, out.g.T, [&](std::size_t p, const Json& c, const std::string& q) {
            out.g.g[p - 2] = component(h, c, p, 1 - static_cast<int>(p), q);
        });
        out.v2 = regrade(out.g);
    } else {
        const auto w = count(field(j, "weights", path), at(path, "weights"), 1);
        for (std::size_t q = 1; q <= w; ++q)
            out.v2.g.push_back(out.grading == Grading::internal ? HCochain(q + 1, -static_cast<int>(q)) : HCochain(1, 0));
        for_components(comps, at(path, "components"), 1, w, [&](std::size_t q, const Json& c, const std::string& p) {
            out.v2.g[q - 1] = out.grading == Grading::internal ? component(h, c, q + 1, -static_cast<int>(q), p)
                                                               : component(h, c, 1, 0, p);
        });
    }
    return out;
}

StarProduct parse_star(const GradedAlgebra& h, const Json& j, const std::string& path)
{
    only_keys(j, path, {"B"});
    const auto p = at(path, "B");
    const auto& b = array(field(j, "B", path), p);
    if (b.empty()) throw InputError(p, "a star product needs at least B_1");
    StarProduct s;
    for (std::size_t i = 0; i < b.size(); ++i) s.B.push_back(parse_entries(h, b[i], 2, 0, at(p, i)));
    return s;
}

GaugeSeries parse_gauge_series(const GradedAlgebra& h, const Json& j, const std::string& path)
{
    only_keys(j, path, {"G"});
    const auto p = at(path, "G");
    const auto& g = array(field(j, "G", path), p);
    GaugeSeries s;
    for (std::size_t i = 0; i < g.size(); ++i) s.G.push_back(parse_entries(h, g[i], 1, 0, at(p, i)));
    return s;
}

AinfAlgebra parse_ainf(const Json& j, const GradedBasis* fallback, const std::string& path)
{
    only_keys(j, path, {"basis", "ops"});
    AinfAlgebra m;
    if (j.contains("basis")) m.basis = parse_basis(j["basis"], at(path, "basis"));
    else if (fallback) m.basis = *fallback;
    else throw InputError(at(path, "basis"), "missing field 'basis' and no algebra section to take it from");
    const auto p = at(path, "ops");
    const auto& ops = array(field(j, "ops", path), p);
    for (std::size_t i = 0; i < ops.size(); ++i)
        m.ops.push_back(parse_table(m.basis, m.basis, ops[i], i + 1, 1 - static_cast<int>(i), at(p, i),
                                    "m_" + std::to_string(i + 1)));
    return m;
}

AinfMorphism parse_morphism(const AinfAlgebra& source, const AinfAlgebra& target, const Json& j, const std::string& path)
{
    only_keys(j, path, {"maps"});
    const auto p = at(path, "maps");
    const auto& maps = array(field(j, "maps", path), p);
    AinfMorphism f;
    for (std::size_t i = 0; i < maps.size(); ++i)
        f.maps.push_back(parse_table(source.basis, target.basis, maps[i], i + 1, -static_cast<int>(i), at(p, i),
                                     "f_" + std::to_string(i + 1)));
    return f;
}

void validate_document(const Json& doc)
{
    only_keys(doc, "", {"description", "algebra", "coalgebra", "braces", "cochain", "twist", "twist_target", "gauge",
                        "perturbation", "quantize", "star", "star_target", "gauge_series", "ainf", "ainf_target",
                        "morphism"});
    if (doc.contains("description")) string_of(doc["description"], "/description");
    std::optional<GradedAlgebra> h;
    std::optional<DgAlgebra> a;
    if (doc.contains("algebra")) {
        a = parse_algebra(doc["algebra"]);
        h.emplace(*a);
    }
    if (doc.contains("coalgebra")) parse_coalgebra(doc["coalgebra"]);
    auto need = [&](const char* key) -> const GradedAlgebra& {
        if (!h) throw InputError(std::string("/") + key, "requires an algebra section");
        return *h;
    };
    if (doc.contains("braces")) parse_braces(need("braces").algebra(), doc["braces"]);
    if (doc.contains("cochain")) parse_cochain(need("cochain"), doc["cochain"]);
    for (const char* key : {"twist", "twist_target"})
        if (doc.contains(key)) parse_twist(need(key), doc[key], std::string("/") + key);
    if (doc.contains("gauge")) parse_gauge(need("gauge"), doc["gauge"], "/gauge");
    if (doc.contains("perturbation")) {
        const auto& p = doc["perturbation"];
        only_keys(p, "/perturbation", {"weight", "cochain"});
        count(field(p, "weight", "/perturbation"), "/perturbation/weight", 1);
        parse_cochain(need("perturbation"), field(p, "cochain", "/perturbation"), "/perturbation/cochain");
    }
    if (doc.contains("quantize")) {
        const auto& q = doc["quantize"];
        only_keys(q, "/quantize", {"grading", "class"});
        if (q.contains("grading")) parse_grading(q["grading"], "/quantize/grading");
        const auto& c = array(field(q, "class", "/quantize"), "/quantize/class");
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto v = integer(c[i], at("/quantize/class", i));
            if (v != 0 && v != 1) throw InputError(at("/quantize/class", i), "expected 0 or 1");
        }
    }
    for (const char* key : {"star", "star_target"})
        if (doc.contains(key)) parse_star(need(key), doc[key], std::string("/") + key);
    if (doc.contains("gauge_series")) parse_gauge_series(need("gauge_series"), doc["gauge_series"], "/gauge_series");
    const GradedBasis* fallback = a ? &a->basis() : nullptr;
    std::optional<AinfAlgebra> src, tgt;
    if (doc.contains("ainf")) src = parse_ainf(doc["ainf"], fallback, "/ainf");
    if (doc.contains("ainf_target")) tgt = parse_ainf(doc["ainf_target"], fallback, "/ainf_target");
    if (doc.contains("morphism")) {
        if (!src) throw InputError("/morphism", "requires an ainf section");
        parse_morphism(*src, tgt ? *tgt : a ? ainf_from_dga(*a) : *src, doc["morphism"], "/morphism");
    }
}

Json to_json(const GradedBasis& basis)
{
    Json out = Json::array();
    for (const auto& e : basis.elements()) out.push_back({{"name", e.name}, {"degree", e.degree}});
    return out;
}

Json entries_to_json(const GradedAlgebra& h, const HCochain& f)
{
    Json out = Json::array();
    for (const auto& e : f.entries()) {
        Json tuple = Json::array();
        for (auto t : h.decode(e.row, f.arity())) tuple.push_back(h.basis().name(t));
        out.push_back(Json::array({tuple, names(h.basis(), e.value)}));
    }
    return out;
}

Json to_json(const GradedAlgebra& h, const HCochain& f)
{
    return {{"arity", f.arity()}, {"internal_degree", f.degree()}, {"entries", entries_to_json(h, f)}};
}

Json to_json(const GradedAlgebra& h, const TwistV1& m, Grading)
{
    Json comps = Json::object();
    for (std::size_t i = 0; i < m.m.size(); ++i)
        if (!m.m[i].is_zero()) comps[std::to_string(i + 3)] = to_json(h, m.m[i]);
    return {{"version", "v1"}, {"grading", "internal"}, {"T", m.T}, {"components", comps}};
}

Json to_json(const GradedAlgebra& h, const TwistV2& b, Grading grading)
{
    Json comps = Json::object();
    for (std::size_t i = 0; i < b.b.size(); ++i)
        if (!b.b[i].is_zero()) comps[std::to_string(i + 1)] = to_json(h, b.b[i]);
    return {{"version", "v2"}, {"grading", grading_name(grading)}, {"weights", b.b.size()}, {"components", comps}};
}

Json to_json(const GradedAlgebra& h, const GaugeV2& g, Grading grading)
{
    Json comps = Json::object();
    for (std::size_t i = 0; i < g.g.size(); ++i)
        if (!g.g[i].is_zero()) comps[std::to_string(i + 1)] = to_json(h, g.g[i]);
    return {{"version", "v2"}, {"grading", grading_name(grading)}, {"weights", g.g.size()}, {"components", comps}};
}

Json to_json(const GradedAlgebra& h, const StarProduct& s)
{
    Json b = Json::array();
    for (const auto& c : s.B) b.push_back(entries_to_json(h, c));
    return {{"B", b}};
}

Json to_json(const AinfAlgebra& m)
{
    Json ops = Json::array();
    for (std::size_t i = 0; i < m.ops.size(); ++i) {
        Json entries = Json::array();
        const std::size_t n = m.dim(), arity = i + 1;
        for (std::uint64_t row = 0; row < m.ops[i].size(); ++row) {
            if (!m.ops[i][row]) continue;
            Json tuple = Json::array();
            std::vector<std::string> t(arity);
            std::uint64_t x = row;
            for (std::size_t p = arity; p-- > 0;) {
                t[p] = m.basis.name(x % n);
                x /= n;
            }
            for (auto& s : t) tuple.push_back(s);
            entries.push_back(Json::array({tuple, names(m.basis, m.ops[i][row])}));
        }
        ops.push_back(entries);
    }
    return {{"basis", to_json(m.basis)}, {"ops", ops}};
}

Json to_json(const Report& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations()) {
        Json o = {{"identity", x.identity}, {"witness", x.witness}};
        if (!x.detail.empty()) o["detail"] = x.detail;
        v.push_back(o);
    }
    return {{"ok", r.ok()}, {"checks", r.checks()}, {"violation_count", r.violation_count()},
            {"violations", v}, {"notes", r.notes()}};
}

Json to_json(const GradedAlgebra& h, const ObstructionClass& o)
{
    return {{"weight", o.weight},
            {"bidegree", Json::array({o.bidegree.first, o.bidegree.second})},
            {"vanishes", o.vanishes()},
            {"class", o.coordinates.to_string()},
            {"cochain", to_json(h, o.cochain)}};
}

}  // namespace hgt::io
