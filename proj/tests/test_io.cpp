#include "doctest.h"

#include <random>

#include "hgt/algebras.hpp"
#include "hgt/io.hpp"

using namespace hgt;
using io::InputError;
using io::Json;

namespace {
std::string fixture(const std::string& name) { return std::string(HGT_FIXTURES) + "/" + name; }

std::string error_path(const Json& doc)
{
    try {
        io::validate_document(doc);
    } catch (const InputError& e) {
        return e.path();
    }
    return "";
}

Json x2_doc()
{
    return Json::parse(R"({"algebra": {"basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
                                       "unit": "1", "mult": [["x", "x", []]]}})");
}
}  // namespace

TEST_CASE("bundled fixtures parse to the builders")
{
    CHECK(io::parse_algebra(io::load_json(fixture("x2.json"))["algebra"]).basis().size() == 2);
    const std::pair<const char*, DgAlgebra> cases[] = {{"x2.json", truncated_polynomial(2)},
                                                        {"x3.json", truncated_polynomial(3)},
                                                        {"upper_triangular.json", upper_triangular()},
                                                        {"exterior.json", truncated_polynomial(2, 1)}};
    for (const auto& [file, expected] : cases) {
        const auto doc = io::load_json(fixture(file));
        io::validate_document(doc);
        const auto a = io::parse_algebra(doc["algebra"]);
        REQUIRE(a.dim() == expected.dim());
        CHECK(a.unit() == expected.unit());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(a.basis().name(i) == expected.basis().name(i));
            CHECK(a.basis().degree(i) == expected.basis().degree(i));
            for (std::size_t j = 0; j < a.dim(); ++j) CHECK(a.product(i, j) == expected.product(i, j));
        }
    }
}

TEST_CASE("input errors name the location")
{
    CHECK(error_path(io::load_json(fixture("invalid/missing_unit.json"))) == "/algebra/unit");
    try {
        io::validate_document(io::load_json(fixture("invalid/bad_degree.json")));
        FAIL("accepted");
    } catch (const InputError& e) {
        CHECK(e.path() == "/algebra/mult/0/2/0");
        CHECK(e.message().find("x*x") != std::string::npos);
    }
    auto doc = x2_doc();
    doc["algebra"]["mult"].push_back(Json::array({"x", "y", Json::array()}));
    CHECK(error_path(doc) == "/algebra/mult/1/1");
    doc = x2_doc();
    doc["algebra"]["mult"].push_back(Json::array({"x", "x", Json::array()}));
    CHECK(error_path(doc) == "/algebra/mult/1");
    doc = x2_doc();
    doc["algebra"]["basis"][1]["name"] = "1";
    CHECK(error_path(doc) == "/algebra/basis/1/name");
    doc = x2_doc();
    doc["extra"] = 1;
    CHECK(error_path(doc) == "/extra");
    doc = x2_doc();
    doc["star"] = Json::parse(R"({"B": [[[["x"], ["1"]]]]})");
    CHECK(error_path(doc) == "/star/B/0/0/0");
    doc = x2_doc();
    doc["twist"] = Json::parse(R"({"version": "v2", "weights": 2, "components": {"3": []}})");
    CHECK(error_path(doc) == "/twist/components/3");
    doc = x2_doc();
    doc["twist"] = Json::parse(R"({"version": "v1", "grading": "t_adic", "T": 4})");
    CHECK(error_path(doc) == "/twist/grading");
    doc = Json::parse(R"({"cochain": {"arity": 1, "internal_degree": 0, "entries": []}})");
    CHECK(error_path(doc) == "/cochain");
    CHECK_THROWS_AS(io::load_json(fixture("does_not_exist.json")), InputError);
}

TEST_CASE("cochains, twisting elements and gauges round trip")
{
    GradedAlgebra h(truncated_polynomial(2, 1));
    TwistCarrier c(h, Grading::internal);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        const auto b = *random_twist(c, 4, rng);
        const auto m = regrade_v1(b);
        const auto v1 = io::parse_twist(h, io::to_json(h, m, Grading::internal), "/twist");
        CHECK(v1.v1);
        CHECK(v1.m.T == m.T);
        CHECK(v1.b.b == b.b);
        const auto v2 = io::parse_twist(h, io::to_json(h, b, Grading::internal), "/twist");
        CHECK_FALSE(v2.v1);
        CHECK(v2.b.b == b.b);
        const auto g = random_gauge(c, 4, rng);
        CHECK(io::parse_gauge(h, io::to_json(h, g, Grading::internal), "/gauge").v2.g == g.g);
        for (const auto& x : b.b) CHECK(io::parse_cochain(h, io::to_json(h, x)) == x);
    }
    GradedAlgebra k(upper_triangular());
    const auto s = random_star(k, 3, rng);
    CHECK(io::parse_star(k, io::to_json(k, s), "/star").B == s.B);
}

TEST_CASE("A(infinity) data round trips")
{
    GradedAlgebra h(truncated_polynomial(2, 1));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
        const auto m = random_deformation(h, 5, rng);
        const auto back = io::parse_ainf(io::to_json(m), nullptr, "/ainf");
        CHECK(back.ops == m.ops);
        CHECK(back.basis.elements().size() == m.basis.elements().size());
    }
    const auto doc = io::load_json(fixture("exterior_ainf.json"));
    io::validate_document(doc);
    const auto a = io::parse_algebra(doc["algebra"]);
    const auto m = io::parse_ainf(doc["ainf"], &a.basis(), "/ainf");
    CHECK(m.ops[1] == ainf_from_dga(a).ops[1]);
    const auto f = io::parse_morphism(m, m, doc["morphism"], "/morphism");
    CHECK(f.maps[0] == identity_morphism(m).maps[0]);
}

TEST_CASE("reports")
{
    Report r;
    r.count_check(3);
    r.add({"E10", {"a", "b"}, ""});
    const auto j = io::to_json(r);
    CHECK(j["ok"] == false);
    CHECK(j["checks"] == 3);
    CHECK(j["violations"][0]["witness"][1] == "b");
    CHECK(j.dump() == io::to_json(r).dump());
}
