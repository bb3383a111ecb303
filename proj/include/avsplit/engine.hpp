#pragma once

#include <string>
#include <utility>
#include <vector>

#include "avsplit/albert.hpp"
#include "avsplit/lie_model.hpp"

namespace avsplit {

enum class SplitsOutcome { yes, no_hom_nonzero, inconclusive };
enum class MtOutcome { holds, inconclusive };

std::string to_string(SplitsOutcome s);
std::string to_string(MtOutcome m);

// One applied rule. `effect` is machine-readable ("splits=yes",
// "mt=holds", "" for audit-only firings) so a trace replays to the verdict.
struct RuleFiring {
  std::string rule;
  std::string anchor;
  std::string details;
  std::string effect;
};

struct Verdict {
  SplitsOutcome splits = SplitsOutcome::inconclusive;
  MtOutcome mt = MtOutcome::inconclusive;
  std::vector<RuleFiring> trace;
  std::vector<std::vector<std::string>> blocks;  // proven split of the factor labels
};

// Reconstructs (splits, mt) from the effects recorded in a trace.
std::pair<SplitsOutcome, MtOutcome> replay_trace(const std::vector<RuleFiring>& trace);

struct Catalog {
  std::vector<FactorDescriptor> factors;
  FieldContext context;
};

// Label uniqueness, context sanity and per-factor validation.
std::vector<std::string> validate_catalog(const Catalog& c);

struct RankInterval {
  int lo = 0;
  int hi = 0;
};

// True iff the interval collapses onto the sum of the part ranks; the final
// arbiter wherever a rule argues by rank bookkeeping.
bool rank_additivity_check(RankInterval whole, const std::vector<int>& part_ranks);

// Splitting verdict for a pair of declared non-isogenous factors.
Verdict decide_pair(const FactorDescriptor& f1, const FactorDescriptor& f2, const FieldContext& ctx);

// Finest provable splitting of the whole catalog; splits = yes only when
// every factor separates.
Verdict decide_product(const Catalog& c);

// Mumford-Tate decision for catalogs of total dimension <= 5 over
// characteristic zero. Throws std::domain_error in positive characteristic
// and std::out_of_range above dimension 5.
Verdict mt_verdict(const Catalog& c);

}  // namespace avsplit
