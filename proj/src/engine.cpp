#include "avsplit/engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace avsplit {

std::string to_string(SplitsOutcome s) {
  switch (s) {
    case SplitsOutcome::yes: return "yes";
    case SplitsOutcome::no_hom_nonzero: return "no_hom_nonzero";
    case SplitsOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(MtOutcome m) {
  return m == MtOutcome::holds ? "holds" : "inconclusive";
}

std::pair<SplitsOutcome, MtOutcome> replay_trace(const std::vector<RuleFiring>& trace) {
  SplitsOutcome s = SplitsOutcome::inconclusive;
  MtOutcome m = MtOutcome::inconclusive;
  for (const auto& fir : trace) {
    if (fir.effect == "splits=yes") s = SplitsOutcome::yes;
    else if (fir.effect == "splits=no_hom_nonzero") s = SplitsOutcome::no_hom_nonzero;
    else if (fir.effect == "splits=inconclusive") s = SplitsOutcome::inconclusive;
    else if (fir.effect == "mt=holds") m = MtOutcome::holds;
    else if (fir.effect == "mt=inconclusive") m = MtOutcome::inconclusive;
  }
  return {s, m};
}

std::vector<std::string> validate_catalog(const Catalog& c) {
  std::vector<std::string> v = validate_context(c.context);
  if (c.factors.empty()) v.push_back("catalog has no factors");
  std::set<std::string> labels;
  for (const auto& f : c.factors) {
    if (!labels.insert(f.label).second) v.push_back("duplicate label \"" + f.label + "\"");
    for (const auto& msg : validate(f, c.context)) v.push_back("factor \"" + f.label + "\": " + msg);
  }
  return v;
}

bool rank_additivity_check(RankInterval whole, const std::vector<int>& part_ranks) {
  const int sum = std::accumulate(part_ranks.begin(), part_ranks.end(), 0);
  return whole.lo == whole.hi && whole.lo == sum;
}

namespace {

// Anchors name the mathematical results the rules encode.
constexpr const char* kAnchorTrivial = "single factor: nothing to split";
constexpr const char* kAnchorMultiplicity = "powers of a factor have the same monodromy group as the factor";
constexpr const char* kAnchorNonIsogeny = "declared pairwise non-isogeny excludes the Hom != 0 branch";
constexpr const char* kAnchorCmTimesRest = "CM factor times a variety with no type IV factor: centers and derived ranks add";
constexpr const char* kAnchorDsf = "disjoint simple Lie types force rank additivity (Ribet-style splitting)";
constexpr const char* kAnchorHazama = "Hazama criterion: componentwise minuscule actions through automorphism-stable weights";
constexpr const char* kAnchorHazamaP = "Hazama criterion in positive characteristic (no type IV factors)";
constexpr const char* kAnchorIchikawa = "Ichikawa criterion: odd relative dimensions split the non-IV factors off the type IV block";
constexpr const char* kAnchorIchikawaP = "Ichikawa criterion in positive characteristic (ordinary reduction in dimension 1)";
constexpr const char* kAnchorCmProducts = "products of CM varieties of dimension <= 2 split (nondegenerate CM Hodge groups)";
constexpr const char* kAnchorShioda = "Shioda: a CM threefold times a CM elliptic curve need not split";
constexpr const char* kAnchorCharPCm = "in positive characteristic CM monodromy degenerates; no splitting rule applies";
constexpr const char* kAnchorSerre = "Serre: Mumford-Tate holds for elliptic curves";
constexpr const char* kAnchorPrimeDim = "Tanke'ev, Ribet: Mumford-Tate holds in prime dimension";
constexpr const char* kAnchorMt4 = "simple fourfolds: Mumford-Tate holds unless the endomorphism ring is trivial";
constexpr const char* kAnchorMt4Disjunction = "trivial-endomorphism fourfolds: full symplectic group or a form of SL2^3";
constexpr const char* kAnchorCmMt = "Mumford-Tate holds for CM abelian varieties";
constexpr const char* kAnchorCmImpliesMt = "a CM factor never breaks Mumford-Tate: derived ranks are unchanged";
constexpr const char* kAnchorProductImpliesMt = "a split product of Mumford-Tate factors satisfies Mumford-Tate";
constexpr const char* kAnchorDimLe2 = "products of factors of dimension <= 2 split and satisfy Mumford-Tate";
constexpr const char* kAnchorMzFourfold = "non-IV fourfolds with extra endomorphisms are of general Lefschetz type";
constexpr const char* kAnchorIv11 = "type IV(1,1) fourfolds have no rank-1 simple factor";
constexpr const char* kAnchorIv21 = "type IV(2,1) fourfolds: Q-simple form of SL2^2 cannot surject onto a rank-1 group";
constexpr const char* kAnchorSl2Cubed = "SL2^3-form case: a Q-simple group of rank 3 cannot surject onto a rank-1 group";
constexpr const char* kAnchorRankAdd = "an inclusion of connected reductive groups with equal rank is an equality";
constexpr const char* kAnchorCase2 = "dimension 5 exception: trivial-endomorphism fourfold times an elliptic curve";

struct FactorInfo {
  const FactorDescriptor* f = nullptr;
  long long h = 0;
  ModelSet models;

  bool type_iv() const { return f->albert_type == AlbertType::IV; }
};

std::vector<FactorInfo> analyze(const std::vector<FactorDescriptor>& fs, const FieldContext& ctx) {
  std::vector<FactorInfo> out;
  for (const auto& f : fs) {
    FactorInfo info;
    info.f = &f;
    info.h = relative_dimension(f);
    info.models = build_model_set(f, ctx);
    out.push_back(std::move(info));
  }
  return out;
}

void fire(Verdict& v, std::string rule, std::string anchor, std::string details,
          std::string effect = "") {
  if (effect == "splits=yes") v.splits = SplitsOutcome::yes;
  else if (effect == "splits=no_hom_nonzero") v.splits = SplitsOutcome::no_hom_nonzero;
  else if (effect == "splits=inconclusive") v.splits = SplitsOutcome::inconclusive;
  else if (effect == "mt=holds") v.mt = MtOutcome::holds;
  else if (effect == "mt=inconclusive") v.mt = MtOutcome::inconclusive;
  v.trace.push_back({std::move(rule), std::move(anchor), std::move(details), std::move(effect)});
}

std::string label_list(const std::vector<FactorInfo>& infos, const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += ", ";
    s += infos[i].f->label;
  }
  return s;
}

bool all_classified(const std::vector<FactorInfo>& infos, const std::vector<int>& idx) {
  return std::all_of(idx.begin(), idx.end(),
                     [&](int i) { return infos[i].models.classified; });
}

// Hypotheses of the Hazama criterion over every candidate combination for
// the given factors (pairwise checks cover the within-model pairs too).
// Returns an empty string on success, else a description of the failure.
std::string global_hazama_failure(const std::vector<FactorInfo>& infos, const std::vector<int>& idx) {
  for (int i : idx)
    if (!infos[i].models.classified)
      return "no classified model for \"" + infos[i].f->label + "\"";
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      for (const auto& ca : infos[idx[a]].models.candidates)
        for (const auto& cb : infos[idx[b]].models.candidates) {
          HazamaReport rep = hazama_hypotheses_hold(ca, cb);
          if (!rep.ok())
            return "pair (" + infos[idx[a]].f->label + ", " + infos[idx[b]].f->label +
                   "): " + (rep.violations.empty() ? "hypotheses fail" : rep.violations.front());
        }
  return "";
}

std::set<SimpleRootSystem> candidate_types(const std::vector<FactorInfo>& infos,
                                           const std::vector<int>& idx) {
  std::set<SimpleRootSystem> types;
  for (int i : idx)
    for (const auto& t : candidate_system_types(infos[i].models)) types.insert(t);
  return types;
}

bool types_disjoint(const std::set<SimpleRootSystem>& a, const std::set<SimpleRootSystem>& b) {
  return std::none_of(a.begin(), a.end(), [&](const SimpleRootSystem& t) { return b.count(t) > 0; });
}

// ---------------------------------------------------------------------------
// decide_product

struct ProductState {
  const std::vector<FactorInfo>* infos;
  const FieldContext* ctx;
  Verdict* verdict;
  std::vector<std::vector<int>> blocks;
};

void emit_singletons(ProductState& st, const std::vector<int>& idx) {
  for (int i : idx) st.blocks.push_back({i});
}

void handle_cm_group(ProductState& st, const std::vector<int>& idx) {
  const auto& infos = *st.infos;
  if (idx.size() == 1) {
    st.blocks.push_back(idx);
    return;
  }
  const bool small = std::all_of(idx.begin(), idx.end(),
                                 [&](int i) { return infos[i].f->dimension <= 2; });
  if (st.ctx->characteristic == 0 && small) {
    fire(*st.verdict, "cm_products_low_dim", kAnchorCmProducts,
         "CM factors of dimension <= 2 split completely: " + label_list(infos, idx));
    emit_singletons(st, idx);
    return;
  }
  fire(*st.verdict, "cm_block_guard", st.ctx->characteristic == 0 ? kAnchorShioda : kAnchorCharPCm,
       "no rule licenses splitting the CM block {" + label_list(infos, idx) + "}");
  st.blocks.push_back(idx);
}

void handle_iv_block(ProductState& st, const std::vector<int>& idx) {
  const auto& infos = *st.infos;
  if (idx.size() == 1) {
    st.blocks.push_back(idx);
    return;
  }
  const bool all_cm = std::all_of(idx.begin(), idx.end(), [&](int i) { return infos[i].f->is_cm; });
  if (all_cm) {
    handle_cm_group(st, idx);
    return;
  }
  st.blocks.push_back(idx);
}

void handle_group(ProductState& st, std::vector<int> idx) {
  const auto& infos = *st.infos;
  const auto& ctx = *st.ctx;
  if (idx.empty()) return;
  if (idx.size() == 1) {
    st.blocks.push_back(idx);
    return;
  }

  const bool has_iv = std::any_of(idx.begin(), idx.end(),
                                  [&](int i) { return infos[i].type_iv(); });

  // Hazama-based full splitting of a type-IV-free group; valid in positive
  // characteristic as well because no type IV factor is present.
  if (!has_iv) {
    const std::string failure = global_hazama_failure(infos, idx);
    if (failure.empty()) {
      std::vector<int> ranks;
      for (int i : idx) ranks.push_back(infos[i].models.candidates.front().semisimple_rank());
      const int total = std::accumulate(ranks.begin(), ranks.end(), 0);
      fire(*st.verdict, ctx.positive_characteristic() ? "hazama_char_p" : "hazama",
           ctx.positive_characteristic() ? kAnchorHazamaP : kAnchorHazama,
           "full split of {" + label_list(infos, idx) + "}; rank additivity " +
               std::to_string(total) + " = sum of parts: " +
               (rank_additivity_check({total, total}, ranks) ? "checked" : "failed"));
      fire(*st.verdict, "non_isogeny_declared", kAnchorNonIsogeny,
           "Hom(A_i, A_j) = 0 taken from the catalog declaration");
      emit_singletons(st, idx);
      return;
    }
    fire(*st.verdict, "hazama_blocked", kAnchorHazama, failure);
  }

  // Ichikawa: all relative dimensions odd; in characteristic p the ordinary
  // reduction hypothesis is required.
  const bool all_odd = std::all_of(idx.begin(), idx.end(),
                                   [&](int i) { return infos[i].h % 2 == 1; });
  if (all_odd && (!ctx.positive_characteristic() || ctx.ordinary_reduction_dim1)) {
    std::vector<int> prime_side, iv_side;
    for (int i : idx) (infos[i].type_iv() ? iv_side : prime_side).push_back(i);
    fire(*st.verdict, ctx.positive_characteristic() ? "ichikawa_char_p" : "ichikawa",
         ctx.positive_characteristic() ? kAnchorIchikawaP : kAnchorIchikawa,
         "non-IV factors {" + label_list(infos, prime_side) + "} split off; type IV block {" +
             label_list(infos, iv_side) + "}");
    emit_singletons(st, prime_side);
    if (!iv_side.empty()) handle_iv_block(st, iv_side);
    return;
  }
  if (all_odd && ctx.positive_characteristic() && !ctx.ordinary_reduction_dim1)
    fire(*st.verdict, "ichikawa_blocked", kAnchorIchikawaP,
         "ordinary reduction in dimension 1 not declared");

  // Peel single factors whose simple types are disjoint from everything
  // else (characteristic zero).
  if (!ctx.positive_characteristic()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int i = idx[k];
      if (infos[i].type_iv() || !infos[i].models.classified) continue;
      std::vector<int> rest;
      for (int j : idx)
        if (j != i) rest.push_back(j);
      if (!all_classified(infos, rest)) continue;
      if (!types_disjoint(candidate_types(infos, {i}), candidate_types(infos, rest))) continue;
      fire(*st.verdict, "different_simple_factors", kAnchorDsf,
           "\"" + std::string(infos[i].f->label) + "\" shares no simple Lie type with {" +
               label_list(infos, rest) + "}");
      st.blocks.push_back({i});
      handle_group(st, rest);
      return;
    }
  }

  fire(*st.verdict, "no_further_rule", "no applicable splitting rule",
       "the block {" + label_list(infos, idx) + "} stays unresolved");
  st.blocks.push_back(idx);
}

std::vector<FactorDescriptor> multiplicity_one(const std::vector<FactorDescriptor>& fs) {
  std::vector<FactorDescriptor> out = fs;
  for (auto& f : out) f.multiplicity = 1;
  return out;
}

}  // namespace

Verdict decide_pair(const FactorDescriptor& f1, const FactorDescriptor& f2, const FieldContext& ctx) {
  Catalog c{{f1, f2}, ctx};
  {
    auto violations = validate_catalog(c);
    if (!violations.empty()) throw std::invalid_argument("decide_pair: " + violations.front());
  }

  Verdict v;
  const auto factors = multiplicity_one(c.factors);
  const auto infos = analyze(factors, ctx);
  const FactorInfo &a = infos[0], &b = infos[1];
  bool decided = false;

  auto conclude = [&](const std::string& rule, const std::string& anchor, const std::string& details) {
    fire(v, rule, anchor, decided ? details + " (audit)" : details, decided ? "" : "splits=yes");
    decided = true;
  };

  // R1: one factor CM, the other with no type IV simple factor.
  if (!ctx.positive_characteristic()) {
    const FactorInfo* cm = a.f->is_cm ? &a : (b.f->is_cm ? &b : nullptr);
    const FactorInfo* other = cm == &a ? &b : &a;
    if (cm && !other->type_iv())
      conclude("semisimple_times_cm", kAnchorCmTimesRest,
               "\"" + cm->f->label + "\" is CM and \"" + other->f->label + "\" has no type IV factor");
  }

  // R2: disjoint simple types across every candidate pair, one side
  // semisimple.
  if (!ctx.positive_characteristic() && a.models.classified && b.models.classified &&
      (!a.type_iv() || !b.type_iv()) &&
      types_disjoint(candidate_types(infos, {0}), candidate_types(infos, {1})))
    conclude("different_simple_factors", kAnchorDsf, "no common simple Lie type in any candidate pair");

  // R3 / R4: the Hazama criterion (characteristic p needs both factors
  // free of type IV).
  {
    const bool applicable = ctx.positive_characteristic() ? (!a.type_iv() && !b.type_iv()) : true;
    if (applicable && global_hazama_failure(infos, {0, 1}).empty()) {
      conclude(ctx.positive_characteristic() ? "hazama_char_p" : "hazama",
               ctx.positive_characteristic() ? kAnchorHazamaP : kAnchorHazama,
               "all candidate pairs satisfy the hypotheses");
      fire(v, "non_isogeny_declared", kAnchorNonIsogeny,
           "Hom(A_1, A_2) = 0 taken from the catalog declaration");
    }
  }

  // R5: two CM factors.
  if (a.f->is_cm && b.f->is_cm) {
    if (!ctx.positive_characteristic() && a.f->dimension <= 2 && b.f->dimension <= 2)
      conclude("cm_products_low_dim", kAnchorCmProducts, "both CM of dimension <= 2");
    else
      fire(v, "cm_pair_guard", ctx.positive_characteristic() ? kAnchorCharPCm : kAnchorShioda,
           "no splitting rule covers this CM pair");
  }

  if (!decided) fire(v, "no_applicable_rule", "no applicable splitting rule", "", "splits=inconclusive");
  v.blocks = decided ? std::vector<std::vector<std::string>>{{f1.label}, {f2.label}}
                     : std::vector<std::vector<std::string>>{{f1.label, f2.label}};
  return v;
}

Verdict decide_product(const Catalog& c) {
  {
    auto violations = validate_catalog(c);
    if (!violations.empty()) throw std::invalid_argument("decide_product: " + violations.front());
  }

  Verdict v;
  const bool had_multiplicities =
      std::any_of(c.factors.begin(), c.factors.end(),
                  [](const FactorDescriptor& f) { return f.multiplicity > 1; });
  if (had_multiplicities)
    fire(v, "multiplicity_reduction", kAnchorMultiplicity, "multiplicities reset to 1");

  const auto factors = multiplicity_one(c.factors);
  const auto infos = analyze(factors, c.context);

  ProductState st{&infos, &c.context, &v, {}};

  if (infos.size() == 1) {
    fire(v, "single_factor", kAnchorTrivial, "\"" + infos[0].f->label + "\"");
    st.blocks.push_back({0});
  } else {
    std::vector<int> cm, rest;
    for (int i = 0; i < static_cast<int>(infos.size()); ++i)
      (infos[i].f->is_cm ? cm : rest).push_back(i);

    const bool rest_has_iv = std::any_of(rest.begin(), rest.end(),
                                         [&](int i) { return infos[i].type_iv(); });

    if (!c.context.positive_characteristic() && !cm.empty() && rest.empty()) {
      handle_cm_group(st, cm);
    } else if (!c.context.positive_characteristic() && !cm.empty() && !rest_has_iv) {
      fire(v, "semisimple_times_cm", kAnchorCmTimesRest,
           "CM block {" + label_list(infos, cm) + "} splits off {" + label_list(infos, rest) + "}");
      handle_cm_group(st, cm);
      handle_group(st, rest);
    } else {
      std::vector<int> all(infos.size());
      std::iota(all.begin(), all.end(), 0);
      handle_group(st, all);
    }
  }

  const bool full = std::all_of(st.blocks.begin(), st.blocks.end(),
                                [](const std::vector<int>& b) { return b.size() == 1; });
  std::string partition;
  for (const auto& b : st.blocks) {
    if (!partition.empty()) partition += " | ";
    partition += "{" + label_list(infos, b) + "}";
  }
  fire(v, "split_summary", "finest provable splitting", partition,
       full ? "splits=yes" : "splits=inconclusive");

  std::sort(st.blocks.begin(), st.blocks.end());
  for (const auto& b : st.blocks) {
    std::vector<std::string> labels;
    for (int i : b) labels.push_back(infos[i].f->label);
    v.blocks.push_back(std::move(labels));
  }
  return v;
}

namespace {

// ---------------------------------------------------------------------------
// mt_verdict

struct MtResult {
  MtOutcome mt = MtOutcome::inconclusive;
  SplitsOutcome splits = SplitsOutcome::inconclusive;
};

// `as_whole` marks evaluation of a complete (sub)catalog, where the trivial
// single-factor splitting is recorded as an effect; per-factor audits inside
// a product evaluation must not touch the splits state.
MtResult mt_single(Verdict& v, const FactorInfo& info, bool as_whole = false) {
  MtResult r;
  r.splits = SplitsOutcome::yes;
  if (as_whole)
    fire(v, "single_factor", kAnchorTrivial, "\"" + info.f->label + "\"", "splits=yes");
  const auto& f = *info.f;
  if (f.is_cm) {
    fire(v, "cm_mt", kAnchorCmMt, "\"" + f.label + "\" is CM", "mt=holds");
    r.mt = MtOutcome::holds;
  } else if (f.dimension == 1) {
    fire(v, "serre_elliptic", kAnchorSerre, "\"" + f.label + "\"", "mt=holds");
    r.mt = MtOutcome::holds;
  } else if (f.dimension == 2 || f.dimension == 3 || f.dimension == 5) {
    fire(v, "prime_dimension", kAnchorPrimeDim, "\"" + f.label + "\" has prime dimension", "mt=holds");
    r.mt = MtOutcome::holds;
  } else if (f.dimension == 4) {
    if (f.trivial_endomorphisms) {
      fire(v, "fourfold_trivial_end", kAnchorMt4Disjunction,
           "\"" + f.label + "\": the SL2^3 branch is not known to satisfy Mumford-Tate",
           "mt=inconclusive");
      r.mt = MtOutcome::inconclusive;
    } else {
      fire(v, "fourfold_mt", kAnchorMt4, "\"" + f.label + "\" has nontrivial endomorphisms", "mt=holds");
      r.mt = MtOutcome::holds;
    }
  } else {
    throw std::logic_error("unexpected single factor dimension");
  }
  return r;
}

MtResult mt_eval(Verdict& v, const std::vector<FactorInfo>& infos, std::vector<int> idx,
                 const FieldContext& ctx);

// The four-or-five dimensional shapes without CM factors and with a factor
// of dimension >= 3; mirrors the low-dimension case analysis.
MtResult mt_noncm_big(Verdict& v, const std::vector<FactorInfo>& infos, const std::vector<int>& idx) {
  MtResult r;
  std::vector<int> order = idx;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return infos[a].f->dimension > infos[b].f->dimension; });
  const FactorInfo& big = infos[order.front()];

  if (big.f->dimension == 3) {
    const bool only_elliptic = std::all_of(order.begin() + 1, order.end(),
                                           [&](int i) { return infos[i].f->dimension == 1; });
    if (only_elliptic) {
      fire(v, "ichikawa", kAnchorIchikawa,
           "all relative dimensions odd: {" + label_list(infos, idx) + "}", "splits=yes");
      r.splits = SplitsOutcome::yes;
    } else {
      const FactorInfo& surface = infos[order[1]];
      if (surface.h == 1) {
        fire(v, "ichikawa", kAnchorIchikawa,
             "all relative dimensions odd: {" + label_list(infos, idx) + "}", "splits=yes");
        r.splits = SplitsOutcome::yes;
      } else if (!big.type_iv()) {
        fire(v, "product_surfaces", kAnchorDimLe2,
             "no type IV factor and each dimension is 2 or odd; Hazama hypotheses hold",
             "splits=yes");
        r.splits = SplitsOutcome::yes;
      } else {
        // Type IV threefold against a trivial-endomorphism surface: the
        // candidate types are disjoint (sl3-types vs sp4).
        const bool disjoint = types_disjoint(candidate_types(infos, {order.front()}),
                                             candidate_types(infos, {order[1]}));
        fire(v, "different_simple_factors", kAnchorDsf,
             std::string("type IV threefold vs trivial-endomorphism surface: ") +
                 (disjoint ? "no shared simple type" : "type check failed"),
             disjoint ? "splits=yes" : "splits=inconclusive");
        r.splits = disjoint ? SplitsOutcome::yes : SplitsOutcome::inconclusive;
      }
    }
    for (int i : order) mt_single(v, infos[i]);
    if (r.splits == SplitsOutcome::yes) {
      fire(v, "product_implies_mt", kAnchorProductImpliesMt,
           "every factor satisfies Mumford-Tate and the product splits", "mt=holds");
      r.mt = MtOutcome::holds;
    } else {
      fire(v, "mt_unresolved", kAnchorProductImpliesMt, "the product split is unresolved",
           "mt=inconclusive");
    }
    return r;
  }

  // Fourfold times an elliptic curve.
  const FactorInfo& elliptic = infos[order[1]];
  if (!big.type_iv() && !big.f->trivial_endomorphisms) {
    fire(v, "fourfold_lefschetz", kAnchorMzFourfold,
         "\"" + big.f->label + "\" is of general Lefschetz type without D4 factors");
    fire(v, "hazama", kAnchorHazama,
         "stable weight classes against \"" + elliptic.f->label + "\"", "splits=yes");
    fire(v, "non_isogeny_declared", kAnchorNonIsogeny,
         "Hom = 0 taken from the catalog declaration");
    r.splits = SplitsOutcome::yes;
    mt_single(v, big);
    mt_single(v, elliptic);
    fire(v, "product_implies_mt", kAnchorProductImpliesMt,
         "both factors satisfy Mumford-Tate and the product splits", "mt=holds");
    r.mt = MtOutcome::holds;
    return r;
  }

  if (big.f->trivial_endomorphisms) {
    // Both candidate groups split against the elliptic curve: Sp8 by
    // disjoint types, the SL2^3 form by the simple-prime rank argument.
    const auto elliptic_types = candidate_types(infos, {order[1]});
    bool all_candidates_split = true;
    for (const auto& cand : big.models.candidates) {
      std::set<SimpleRootSystem> types;
      for (const auto& fa : cand.factors) types.insert(fa.system);
      if (types_disjoint(types, elliptic_types)) {
        fire(v, "different_simple_factors", kAnchorDsf,
             "candidate Sp8: no simple type shared with the elliptic curve");
      } else if (cand.q_simple_factor_count > 0 && cand.q_simple_factor_count <= 3) {
        const int rank = cand.semisimple_rank();
        fire(v, "sl2cubed_simple_prime", kAnchorSl2Cubed,
             "rank interval [" + std::to_string(rank + 1) + "," + std::to_string(rank + 1) +
                 "] = " + std::to_string(rank) + "+1: " +
                 (rank_additivity_check({rank + 1, rank + 1}, {rank, 1}) ? "additivity holds"
                                                                         : "additivity fails"));
        fire(v, "rank_additivity", kAnchorRankAdd, "equal ranks force the inclusion to be an equality");
      } else {
        all_candidates_split = false;
      }
    }
    fire(v, "mt5_case2", kAnchorCase2,
         "splitting holds for every candidate; Mumford-Tate stays open for \"" + big.f->label + "\"",
         all_candidates_split ? "splits=yes" : "splits=inconclusive");
    r.splits = all_candidates_split ? SplitsOutcome::yes : SplitsOutcome::inconclusive;
    mt_single(v, big);  // records the inconclusive fourfold
    mt_single(v, elliptic);
    fire(v, "mt5_case2_mt", kAnchorCase2, "Mumford-Tate remains open", "mt=inconclusive");
    r.mt = MtOutcome::inconclusive;
    return r;
  }

  // Type IV fourfolds: IV(1,1) has no rank-1 simple factor; IV(2,1) is a
  // Q-simple form of SL2^2.
  if (big.f->e0 == 1) {
    fire(v, "fourfold_iv11", kAnchorIv11,
         "\"" + big.f->label + "\": candidate types exclude A1");
    fire(v, "different_simple_factors", kAnchorDsf,
         "no simple type shared with the elliptic curve", "splits=yes");
  } else {
    fire(v, "fourfold_iv21", kAnchorIv21,
         "rank interval [3,3] = 2+1: " +
             std::string(rank_additivity_check({3, 3}, {2, 1}) ? "additivity holds"
                                                               : "additivity fails"));
    fire(v, "rank_additivity", kAnchorRankAdd,
         "equal ranks force the inclusion to be an equality", "splits=yes");
  }
  r.splits = SplitsOutcome::yes;
  mt_single(v, big);
  mt_single(v, elliptic);
  fire(v, "product_implies_mt", kAnchorProductImpliesMt,
       "both factors satisfy Mumford-Tate and the product splits", "mt=holds");
  r.mt = MtOutcome::holds;
  return r;
}

MtResult mt_eval(Verdict& v, const std::vector<FactorInfo>& infos, std::vector<int> idx,
                 const FieldContext& ctx) {
  MtResult r;
  if (idx.size() == 1) return mt_single(v, infos[idx.front()], /*as_whole=*/true);

  const bool all_cm = std::all_of(idx.begin(), idx.end(), [&](int i) { return infos[i].f->is_cm; });
  if (all_cm) {
    fire(v, "cm_mt", kAnchorCmMt,
         "a product of CM factors is CM: {" + label_list(infos, idx) + "}", "mt=holds");
    r.mt = MtOutcome::holds;
    const bool small = std::all_of(idx.begin(), idx.end(),
                                   [&](int i) { return infos[i].f->dimension <= 2; });
    if (small) {
      fire(v, "cm_products_low_dim", kAnchorCmProducts, "all CM factors of dimension <= 2",
           "splits=yes");
      r.splits = SplitsOutcome::yes;
    } else {
      fire(v, "cm_block_guard", kAnchorShioda,
           "splitting is not claimed for this CM product", "splits=inconclusive");
      r.splits = SplitsOutcome::inconclusive;
    }
    return r;
  }

  const bool small = std::all_of(idx.begin(), idx.end(),
                                 [&](int i) { return infos[i].f->dimension <= 2; });
  if (small) {
    fire(v, "products_dim_le2", kAnchorDimLe2,
         "all factors of dimension <= 2: {" + label_list(infos, idx) + "}");
    fire(v, "split_dim_le2", kAnchorDimLe2, "full splitting", "splits=yes");
    fire(v, "mt_dim_le2", kAnchorDimLe2, "Mumford-Tate holds", "mt=holds");
    r.splits = SplitsOutcome::yes;
    r.mt = MtOutcome::holds;
    return r;
  }

  std::vector<int> cm, rest;
  for (int i : idx) (infos[i].f->is_cm ? cm : rest).push_back(i);

  if (!cm.empty()) {
    MtResult sub = mt_eval(v, infos, rest, ctx);
    if (sub.mt == MtOutcome::holds) {
      fire(v, "cm_implies_mt", kAnchorCmImpliesMt,
           "appending the CM block {" + label_list(infos, cm) + "} preserves Mumford-Tate",
           "mt=holds");
      r.mt = MtOutcome::holds;
    } else {
      fire(v, "mt5_case1_cm", kAnchorCase2,
           "the non-CM part {" + label_list(infos, rest) + "} is the open fourfold case",
           "mt=inconclusive");
      r.mt = MtOutcome::inconclusive;
    }
    const bool rest_no_iv = std::none_of(rest.begin(), rest.end(),
                                         [&](int i) { return infos[i].type_iv(); });
    SplitsOutcome cm_split = SplitsOutcome::yes;
    if (cm.size() > 1) {
      const bool cm_small = std::all_of(cm.begin(), cm.end(),
                                        [&](int i) { return infos[i].f->dimension <= 2; });
      if (cm_small)
        fire(v, "cm_products_low_dim", kAnchorCmProducts, "CM block of dimension <= 2 factors");
      else {
        fire(v, "cm_block_guard", kAnchorShioda, "the CM block is not split further");
        cm_split = SplitsOutcome::inconclusive;
      }
    }
    if (rest_no_iv && sub.splits == SplitsOutcome::yes && cm_split == SplitsOutcome::yes) {
      fire(v, "semisimple_times_cm", kAnchorCmTimesRest,
           "the CM block splits off the rest", "splits=yes");
      r.splits = SplitsOutcome::yes;
    } else if (rest_no_iv) {
      fire(v, "semisimple_times_cm", kAnchorCmTimesRest,
           "the CM block splits off the rest; interior blocks stay unresolved",
           "splits=inconclusive");
      r.splits = SplitsOutcome::inconclusive;
    } else {
      fire(v, "cm_vs_iv_guard", kAnchorCmTimesRest,
           "a type IV factor prevents the CM splitting rule", "splits=inconclusive");
      r.splits = SplitsOutcome::inconclusive;
    }
    return r;
  }

  return mt_noncm_big(v, infos, idx);
}

}  // namespace

Verdict mt_verdict(const Catalog& c) {
  {
    auto violations = validate_catalog(c);
    if (!violations.empty()) throw std::invalid_argument("mt_verdict: " + violations.front());
  }
  if (c.context.positive_characteristic())
    throw std::domain_error("mt_verdict: Mumford-Tate evaluation is a characteristic-zero question");

  Verdict v;
  const bool had_multiplicities =
      std::any_of(c.factors.begin(), c.factors.end(),
                  [](const FactorDescriptor& f) { return f.multiplicity > 1; });
  if (had_multiplicities)
    fire(v, "multiplicity_reduction", kAnchorMultiplicity, "multiplicities reset to 1");

  const auto factors = multiplicity_one(c.factors);
  long long total = 0;
  for (const auto& f : factors) total += f.dimension;
  if (total > 5)
    throw std::out_of_range("mt_verdict: total dimension " + std::to_string(total) +
                            " exceeds 5; use decide_product for splitting information");

  const auto infos = analyze(factors, c.context);
  std::vector<int> idx(infos.size());
  std::iota(idx.begin(), idx.end(), 0);
  MtResult r = mt_eval(v, infos, idx, c.context);
  v.mt = r.mt;
  v.splits = r.splits;
  if (v.splits == SplitsOutcome::yes)
    for (const auto& f : factors) v.blocks.push_back({f.label});
  return v;
}

}  // namespace avsplit
