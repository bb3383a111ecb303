#pragma once

#include <string>
#include <utility>
#include <vector>

#include "avsplit/albert.hpp"
#include "avsplit/minuscule.hpp"
#include "avsplit/root_systems.hpp"

namespace avsplit {

// Isotypic decomposition of the module a single simple factor acts on.
struct FactorAction {
  SimpleRootSystem system;
  std::vector<std::pair<WeightLabel, int>> module;  // (highest weight, multiplicity), sorted

  friend bool operator==(const FactorAction&, const FactorAction&) = default;
};

// Module piece on which several simple factors act jointly as a tensor
// product. Only the trivial-endomorphism fourfold model needs this.
struct TensorBlock {
  std::vector<std::pair<int, WeightLabel>> legs;  // factor index -> highest weight
  int multiplicity = 1;

  friend bool operator==(const TensorBlock&, const TensorBlock&) = default;
};

// Symbolic model of a connected reductive group: center rank plus simple
// factors with their module data.
struct GroupModelCandidate {
  int center_rank = 0;
  std::vector<FactorAction> factors;
  std::vector<TensorBlock> tensor_blocks;
  // > 0 when the group is known to be a form of a Q-simple group with this
  // many absolutely simple factors (enables the simple-prime arguments).
  int q_simple_factor_count = 0;

  bool componentwise() const { return tensor_blocks.empty(); }
  bool semisimple() const { return center_rank == 0; }
  int semisimple_rank() const;
  long long total_module_dimension() const;

  friend bool operator==(const GroupModelCandidate&, const GroupModelCandidate&) = default;
};

// The classification results are sometimes disjunctive; engine verdicts
// must hold for every candidate. An unclassified set carries the reason.
struct ModelSet {
  bool classified = false;
  std::string unclassified_reason;
  std::vector<GroupModelCandidate> candidates;
};

// Candidate models permitted by the classification results for one factor.
// Requires validate(f, ctx) to pass; throws std::invalid_argument otherwise.
ModelSet build_model_set(const FactorDescriptor& f, const FieldContext& ctx = {});

// Conditions (1)-(4) of the general Lefschetz shape: trivial center,
// componentwise action, and per-family module rules (A_l: l odd and copies
// of the middle exterior power; B_l: spin; C_l/D_l: standard).
bool is_general_lefschetz(const GroupModelCandidate& m);

struct HazamaReport {
  bool centers_trivial = false;
  bool componentwise_faithful = false;
  bool weight_condition = false;
  std::vector<std::string> violations;

  bool ok() const { return centers_trivial && componentwise_faithful && weight_condition; }
};

// Hypotheses of the Hazama criterion for the pair of models: semisimple,
// componentwise faithful, and every pair of isomorphic simple factors
// (within or across the models) acts through one automorphism-stable
// weight class.
HazamaReport hazama_hypotheses_hold(const GroupModelCandidate& m1, const GroupModelCandidate& m2);

bool shares_simple_factor_type(const GroupModelCandidate& m1, const GroupModelCandidate& m2);

// All simple systems occurring in any candidate of the set.
std::vector<SimpleRootSystem> candidate_system_types(const ModelSet& ms);

// The normalized (system, weight) pair the standard symplectic factor of
// relative dimension h acts through: C_h with C1 -> A1, C2 -> B2.
std::pair<SimpleRootSystem, WeightLabel> standard_symplectic_factor(long long h);

}  // namespace avsplit
