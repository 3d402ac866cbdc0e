#pragma once

#include <string>
#include <variant>

#include "ope/duality.hpp"

namespace ope {

struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    ParseError(std::string what, int line_, int col_)
        : std::runtime_error(std::move(what)), line(line_), column(col_) {}
};

enum class DocKind {
    TreeComplex,
    ThicketComplex,
    Opetope,
    Cardinal,
    HypergraphDoc,
    IotaMorphism,
    ComplexMorphism,
    FaceMorphism
};

std::string doc_kind_name(DocKind k);
DocKind doc_kind_from(const std::string& name);

struct ParsedDocument {
    DocKind kind;
    std::variant<Complex, Hypergraph, IotaMap, ComplexMorphism, FaceMap> value;
    std::string note;  // e.g. a declared-weaker-kind remark
};

/// Parses and validates any document; morphism endpoints given as file paths
/// are resolved against base_dir. Throws ParseError for syntax or reference
/// errors and std::invalid_argument for kind mismatches; validation failures
/// of the declared kind also throw std::invalid_argument with the report.
ParsedDocument parse_document(const std::string& text, const std::string& base_dir = "");

/// As above but insists on the expected kind.
ParsedDocument parse_document(const std::string& text, DocKind expected,
                              const std::string& base_dir = "");

/// Canonical serialization: sorted keys, sorted set-valued lists, 2-space
/// indent, trailing newline. Serializing twice gives identical bytes.
std::string serialize(const Complex& c);
std::string serialize(const Hypergraph& h);
std::string serialize(const IotaMap& m);
std::string serialize(const ComplexMorphism& m);
std::string serialize(const FaceMap& m);

/// One-line canonical form, for streamed records.
std::string serialize_compact(const Complex& c);
std::string serialize_compact(const Hypergraph& h);

}  // namespace ope
