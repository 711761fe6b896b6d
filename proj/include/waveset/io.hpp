#pragma once

// Wire formats. Rationals travel as canonical "p/q" (or plain integer)
// strings so every document round-trips bit-exactly; no floating point on
// the wire.

#include "waveset/classify.hpp"
#include "waveset/h2_enum.hpp"
#include "waveset/interval_set.hpp"
#include "waveset/polygonal.hpp"
#include "waveset/tiling.hpp"

#include <json.hpp>

#include <string>

namespace waveset {

using Json = nlohmann::json;

struct SetDocument {
    Space space = Space::L2;
    IntervalSet set;
    Json metadata;  // optional free-form block (family tag, params, depth, tail)
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const Json& j, const std::string& where);

Json to_json(const Rational& r);
Json to_json(const IntervalSet& s);
Json to_json(const SetDocument& doc);
Json to_json(const Polygonal& p);
Json to_json(const ClassificationData& d);
Json to_json(const Verdict& v);
Json to_json(const H2Certificate& c, std::size_t interval_count);

SetDocument set_document_from_json(const Json& j);
Polygonal polygonal_from_json(const Json& j);
ClassificationData classification_from_json(const Json& j);

std::string enumerate_csv_header();
std::string enumerate_csv_row(CaseId c, const EnumRow& row);

// One "lo hi tag" line per interval.
std::string plotdata(const SetDocument& doc);

}  // namespace waveset
