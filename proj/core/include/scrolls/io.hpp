#ifndef SCROLLS_IO_HPP
#define SCROLLS_IO_HPP

// Text and JSON encodings of the library types. JSON conversions follow the
// nlohmann::json ADL convention, so `nlohmann::json j = value;` works.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "scrolls/cone.hpp"
#include "scrolls/graph.hpp"
#include "scrolls/scroll_type.hpp"
#include "scrolls/sequences.hpp"
#include "scrolls/series.hpp"
#include "scrolls/syzygy.hpp"

namespace scrolls {

/// Parses "4,5,6,9" into a scroll type; any malformation is Error(Parse).
ScrollType parse_scroll_type(const std::string& text);
MultiplicityMultiset parse_multiplicities(const std::string& text);

void to_json(nlohmann::json& j, const ScrollType& a);
void from_json(const nlohmann::json& j, ScrollType& a);
void to_json(nlohmann::json& j, const MultiplicityMultiset& m);
void from_json(const nlohmann::json& j, MultiplicityMultiset& m);

/// {"valid": bool, "violated": string|null, "v": int|null}
void to_json(nlohmann::json& j, const ValidityReport& r);
void from_json(const nlohmann::json& j, ValidityReport& r);

/// Coefficient array indexed by exponent.
void to_json(nlohmann::json& j, const IntPolynomial& p);
void from_json(const nlohmann::json& j, IntPolynomial& p);

/// {"codim": n, "nodes": [[...]], "edges": [{"from", "to", "generic"}]}
void to_json(nlohmann::json& j, const SpecializationGraph& g);
void from_json(const nlohmann::json& j, SpecializationGraph& g);

void to_json(nlohmann::json& j, const BinaryForm& f);
/// {"a": [...], "forms": ["0", "x^10", ...]}
void to_json(nlohmann::json& j, const SectionForm& f);
/// {"rows", "cols", "row_degrees", "col_degrees", "entries": row-major strings}
void to_json(nlohmann::json& j, const SyzygyMatrix& z);
void to_json(nlohmann::json& j, const SectionDecomposition& d);
void to_json(nlohmann::json& j, const ConeSectionResult& r);
void to_json(nlohmann::json& j, const ReducibleBucket& b);

SectionForm section_form_from_json(const nlohmann::json& j, const PrimeField& field);

/// Line format:
///   a: 4,5,6,9
///   f1: 0
///   f2: x^10
/// Blank lines and '#' comments are ignored. Text starting with '{' is read
/// as JSON instead.
std::string format_section_form(const SectionForm& form);
SectionForm parse_section_form(std::string_view text, const PrimeField& field);
/// Throws Error(Io) if the file cannot be read.
SectionForm read_section_form(const std::filesystem::path& path, const PrimeField& field);

}  // namespace scrolls

#endif  // SCROLLS_IO_HPP
