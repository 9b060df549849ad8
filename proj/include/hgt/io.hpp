#pragma once

// JSON documents for algebras, coalgebras, cochains, twisting and gauge elements, star
// products and A(infinity) data, with structural validation that names the offending
// location, and the matching writers used by reports.
//
// A document is one JSON object whose optional sections are
//   algebra       {basis: [{name, degree}], unit, mult: [[a, b, [terms]]], diff: [[a, [terms]]]}
//   coalgebra     {basis, counit: [names], comult: [[c, [[a, b], ...]]], diff}
//   braces        {max_brace, entries: [[[a, b_1, .., b_k], [terms]]]}
//   cochain       {arity, internal_degree, entries: [[[tuple], [terms]]]}
//   twist, twist_target
//                 {version: "v1" | "v2", grading: "internal" | "t_adic", T | weights,
//                  components: {"<p or w>": cochain}}
//   gauge         same shape as twist
//   perturbation  {weight, cochain}
//   quantize      {grading, class: [bits]}
//   star, star_target  {B: [[entries of B_1], [entries of B_2], ...]}
//   gauge_series  {G: [[entries of G_1], ...]}
//   ainf, ainf_target  {basis (optional, defaults to the algebra basis), ops: [[entries of m_1], ...]}
//   morphism      {maps: [[entries of f_1], ...]}
// Terms are basis names; an empty list is zero.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hgt/deform.hpp"
#include "hgt/graded.hpp"
#include "hgt/hga.hpp"
#include "hgt/hochschild.hpp"
#include "hgt/twist.hpp"

namespace hgt::io {

using Json = nlohmann::ordered_json;

/// Schema violation at a JSON pointer.
class InputError : public std::runtime_error {
public:
    InputError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)), message_(message)
    {
    }
    const std::string& path() const { return path_; }
    const std::string& message() const { return message_; }

private:
    std::string path_;
    std::string message_;
};

/// Reads and parses a file; I/O and syntax errors become InputError at "/".
Json load_json(const std::string& file);

GradedBasis parse_basis(const Json& j, const std::string& path);
DgAlgebra parse_algebra(const Json& j, const std::string& path = "/algebra");
DgCoalgebra parse_coalgebra(const Json& j, const std::string& path = "/coalgebra");
TableHga parse_braces(const DgAlgebra& a, const Json& j, const std::string& path = "/braces");

/// Entries [[tuple], [terms]] as a cochain of the given bidegree; checks names, tuple
/// lengths, duplicates and the degree law.
HCochain parse_entries(const GradedAlgebra& h, const Json& j, std::size_t arity, int degree, const std::string& path);
HCochain parse_cochain(const GradedAlgebra& h, const Json& j, const std::string& path = "/cochain");

struct TwistInput {
    bool v1 = true;
    Grading grading = Grading::internal;
    TwistV1 m;   // when v1
    TwistV2 b;   // always, the regraded form when v1
};
struct GaugeInput {
    bool v1 = true;
    Grading grading = Grading::internal;
    GaugeV1 g;
    GaugeV2 v2;
};
TwistInput parse_twist(const GradedAlgebra& h, const Json& j, const std::string& path);
GaugeInput parse_gauge(const GradedAlgebra& h, const Json& j, const std::string& path);

StarProduct parse_star(const GradedAlgebra& h, const Json& j, const std::string& path);
GaugeSeries parse_gauge_series(const GradedAlgebra& h, const Json& j, const std::string& path);
AinfAlgebra parse_ainf(const Json& j, const GradedBasis* fallback, const std::string& path);
AinfMorphism parse_morphism(const AinfAlgebra& source, const AinfAlgebra& target, const Json& j,
                            const std::string& path);

/// Parses every section present, in dependency order, and rejects unknown keys.
void validate_document(const Json& doc);

Json to_json(const GradedBasis& basis);
Json entries_to_json(const GradedAlgebra& h, const HCochain& f);
Json to_json(const GradedAlgebra& h, const HCochain& f);
Json to_json(const GradedAlgebra& h, const TwistV1& m, Grading grading);
Json to_json(const GradedAlgebra& h, const TwistV2& b, Grading grading);
Json to_json(const GradedAlgebra& h, const GaugeV2& g, Grading grading);
Json to_json(const GradedAlgebra& h, const StarProduct& s);
Json to_json(const AinfAlgebra& m);
Json to_json(const Report& r);
Json to_json(const GradedAlgebra& h, const ObstructionClass& o);

}  // namespace hgt::io
