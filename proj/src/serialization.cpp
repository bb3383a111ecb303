#include "avsplit/serialization.hpp"

#include <stdexcept>

namespace avsplit {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

FactorDescriptor descriptor_from_json(const Json& j) {
  require(j.is_object(), "factor descriptor must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "label" && key != "dim" && key != "type" && key != "e" && key != "d" &&
        key != "e0" && key != "cm" && key != "end_Z" && key != "mult")
      throw std::invalid_argument("unknown descriptor field \"" + key + "\"");
  }
  require(j.contains("label") && j["label"].is_string(), "descriptor needs a string \"label\"");
  require(j.contains("dim") && j["dim"].is_number_integer(), "descriptor needs an integer \"dim\"");
  require(j.contains("type") && j["type"].is_string(), "descriptor needs a \"type\" of I|II|III|IV");

  FactorDescriptor f;
  f.label = j["label"].get<std::string>();
  f.dimension = j["dim"].get<long long>();
  f.albert_type = albert_type_from_string(j["type"].get<std::string>());
  f.e = j.value("e", 1LL);
  f.d = j.value("d", f.albert_type == AlbertType::II || f.albert_type == AlbertType::III ? 2LL : 1LL);
  f.e0 = j.value("e0", f.albert_type == AlbertType::IV ? f.e / 2 : f.e);
  f.is_cm = j.value("cm", false);
  f.trivial_endomorphisms =
      j.value("end_Z", f.albert_type == AlbertType::I && f.e == 1 && f.d == 1);
  f.multiplicity = j.value("mult", 1LL);
  return f;
}

Json descriptor_to_json(const FactorDescriptor& f) {
  Json j;
  j["label"] = f.label;
  j["dim"] = f.dimension;
  j["type"] = to_string(f.albert_type);
  j["e"] = f.e;
  j["d"] = f.d;
  j["e0"] = f.e0;
  j["cm"] = f.is_cm;
  j["end_Z"] = f.trivial_endomorphisms;
  j["mult"] = f.multiplicity;
  return j;
}

FieldContext context_from_json(const Json& j) {
  require(j.is_object(), "field context must be a JSON object");
  FieldContext ctx;
  ctx.characteristic = j.value("char", 0LL);
  ctx.ordinary_reduction_dim1 = j.value("ordinary", false);
  return ctx;
}

Json context_to_json(const FieldContext& ctx) {
  Json j;
  j["char"] = ctx.characteristic;
  j["ordinary"] = ctx.ordinary_reduction_dim1;
  return j;
}

Catalog catalog_from_json(const Json& j) {
  Catalog c;
  const Json* factors = nullptr;
  if (j.is_array()) {
    factors = &j;
  } else if (j.is_object()) {
    require(j.contains("factors") && j["factors"].is_array(),
            "catalog needs a \"factors\" array");
    factors = &j["factors"];
    if (j.contains("context")) c.context = context_from_json(j["context"]);
  } else {
    throw std::invalid_argument("catalog must be a JSON object or array");
  }
  for (const auto& fj : *factors) c.factors.push_back(descriptor_from_json(fj));
  return c;
}

Json catalog_to_json(const Catalog& c) {
  Json j;
  j["factors"] = Json::array();
  for (const auto& f : c.factors) j["factors"].push_back(descriptor_to_json(f));
  j["context"] = context_to_json(c.context);
  return j;
}

Json model_candidate_to_json(const GroupModelCandidate& m) {
  Json j;
  j["center_rank"] = m.center_rank;
  j["factors"] = Json::array();
  for (const auto& fa : m.factors) {
    Json fj;
    fj["system"] = to_string(fa.system);
    fj["module"] = Json::array();
    for (const auto& [w, mult] : fa.module) fj["module"].push_back({to_string(w), mult});
    j["factors"].push_back(fj);
  }
  if (!m.tensor_blocks.empty()) {
    j["blocks"] = Json::array();
    for (const auto& b : m.tensor_blocks) {
      Json bj;
      bj["legs"] = Json::array();
      for (const auto& [idx, w] : b.legs) bj["legs"].push_back({idx, to_string(w)});
      bj["mult"] = b.multiplicity;
      j["blocks"].push_back(bj);
    }
  }
  if (m.q_simple_factor_count > 0) j["q_simple_factors"] = m.q_simple_factor_count;
  return j;
}

Json model_set_to_json(const ModelSet& ms) {
  Json j;
  j["classified"] = ms.classified;
  if (!ms.classified) j["reason"] = ms.unclassified_reason;
  j["candidates"] = Json::array();
  for (const auto& c : ms.candidates) j["candidates"].push_back(model_candidate_to_json(c));
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["splits"] = to_string(v.splits);
  j["mt"] = to_string(v.mt);
  j["blocks"] = v.blocks;
  j["trace"] = Json::array();
  for (const auto& f : v.trace) {
    Json fj;
    fj["rule"] = f.rule;
    fj["anchor"] = f.anchor;
    fj["details"] = f.details;
    if (!f.effect.empty()) fj["effect"] = f.effect;
    j["trace"].push_back(fj);
  }
  return j;
}

Json ribet_report_to_json(const std::string& fixture_name, const RibetReport& r) {
  Json j;
  j["fixture"] = fixture_name;
  j["projections_simple"] = r.projection_simple;
  j["preconditions_ok"] = r.preconditions_ok;

  auto pair_map = [](const std::map<std::pair<int, int>, bool>& m) {
    Json out = Json::object();
    for (const auto& [key, value] : m)
      out[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
    return out;
  };
  j["condition_a"] = Json{{"pairs", pair_map(r.condition_a_pairs)}, {"holds", r.condition_a}};
  Json b1 = Json{{"pairs", pair_map(r.condition_b1_pairs)}, {"holds", r.condition_b1}};
  Json dims = Json::object();
  for (const auto& [key, value] : r.intertwiner_dims)
    dims[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  b1["intertwiner_dims"] = dims;
  j["condition_b1"] = b1;
  j["condition_b2"] = r.condition_b2;
  j["conclusion"] = r.conclusion;
  j["implications"] =
      Json{{"b_implies_a", r.b_implies_a}, {"a_implies_conclusion", r.a_implies_conclusion}};
  return j;
}

Catalog parse_catalog_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("catalog parse error at byte " + std::to_string(e.byte) + ": " +
                                e.what());
  }
  return catalog_from_json(j);
}

}  // namespace avsplit
