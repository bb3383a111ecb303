#pragma once

#include <cstdint>
#include <vector>

#include "avsplit/root_systems.hpp"

namespace avsplit {

// One row of the minuscule-weight catalog. `duality` is +1 for orthogonal
// modules, -1 for symplectic ones and 0 when the module is not self-dual.
struct MinusculeEntry {
  SimpleRootSystem system;
  WeightLabel weight;
  long long dimension;
  int duality;

  friend auto operator<=>(const MinusculeEntry&, const MinusculeEntry&) = default;
};

// Minuscule highest weights of a canonical system:
//   A_l: w_1..w_l;  B_l: w_l;  C_l: w_1;  D_l: w_1, w_{l-1}, w_l.
std::vector<WeightLabel> minuscule_weights(SimpleRootSystem s);

bool is_minuscule(SimpleRootSystem s, WeightLabel w);

// Closed-form module dimension; throws std::domain_error on a
// non-minuscule weight.
long long minuscule_dimension(SimpleRootSystem s, WeightLabel w);

// +1 / -1 / 0 per the duality column of the catalog.
int duality_indicator(SimpleRootSystem s, WeightLabel w);

// True iff some minuscule module of s has odd dimension. Always false for
// B/C/D; for A_l this holds exactly when l+1 is not a power of two.
bool has_odd_dimensional_nontrivial_minuscule(SimpleRootSystem s);

// |W(s)| / |W(stabilizer parabolic at w)| for any fundamental weight,
// computed from the classical Weyl group orders. Independent of the
// dimension formulas above.
long long weyl_orbit_size(SimpleRootSystem s, WeightLabel w);

long long weyl_group_order(SimpleRootSystem s);

// Full catalog for all canonical systems of rank <= max_rank, ordered by
// (family, rank, weight).
std::vector<MinusculeEntry> minuscule_catalog(int max_rank);

long long binomial(int n, int k);
bool is_power_of_two(long long n);

}  // namespace avsplit
