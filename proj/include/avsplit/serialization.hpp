#pragma once

#include <json.hpp>

#include <string>

#include "avsplit/engine.hpp"
#include "avsplit/lie_model.hpp"
#include "avsplit/oracle.hpp"

namespace avsplit {

using Json = nlohmann::ordered_json;

// Descriptor schema: {"label","dim","type","e","d","e0","cm","end_Z","mult"}.
// Absent fields take the type-appropriate defaults.
FactorDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const FactorDescriptor& f);

// Context schema: {"char", "ordinary"}.
FieldContext context_from_json(const Json& j);
Json context_to_json(const FieldContext& ctx);

// Catalog: {"factors": [...], "context": {...}} or a bare factor array.
Catalog catalog_from_json(const Json& j);
Json catalog_to_json(const Catalog& c);

Json model_candidate_to_json(const GroupModelCandidate& m);
Json model_set_to_json(const ModelSet& ms);

Json verdict_to_json(const Verdict& v);

Json ribet_report_to_json(const std::string& fixture_name, const RibetReport& r);

// Parses a catalog from raw text, reporting JSON syntax errors with their
// byte position.
Catalog parse_catalog_text(const std::string& text);

}  // namespace avsplit
