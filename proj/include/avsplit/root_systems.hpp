#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace avsplit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

char family_letter(Family f);
Family family_from_letter(char c);

// One classical simple root system. A value is "canonical" when its rank
// lies in the standard bounds (A: l>=1, B: l>=2, C: l>=3, D: l>=4); values
// outside the bounds only exist transiently before normalize().
struct SimpleRootSystem {
  Family family;
  int rank;

  friend auto operator<=>(const SimpleRootSystem&, const SimpleRootSystem&) = default;
};

bool is_canonical(SimpleRootSystem s);
std::string to_string(SimpleRootSystem s);

// Finite direct sum of simple systems, kept sorted by (family, rank) so
// that multiset equality is plain sequence equality.
struct RootSystemSum {
  std::vector<SimpleRootSystem> factors;

  RootSystemSum() = default;
  explicit RootSystemSum(std::vector<SimpleRootSystem> fs);

  bool empty() const { return factors.empty(); }
  int total_rank() const;

  friend auto operator<=>(const RootSystemSum&, const RootSystemSum&) = default;
};

std::string to_string(const RootSystemSum& sum);

// Parses strings like "A3+B2+2*A1" (order and low-rank coincidences are
// accepted) and canonicalizes. "0" or the empty string denote the empty sum.
// Throws std::invalid_argument with the offending position on bad input.
RootSystemSum parse_root_system_sum(const std::string& text);

// Fundamental-weight index in Bourbaki numbering.
struct WeightLabel {
  int index;

  friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
};

std::string to_string(WeightLabel w);
WeightLabel parse_weight_label(const std::string& text);

// Canonical form under the standard coincidences:
//   B1 -> A1, C1 -> A1, C2 -> B2, D2 -> A1+A1, D3 -> A3, D1 -> empty sum.
// Idempotent; throws std::invalid_argument on rank < 1.
RootSystemSum normalize(SimpleRootSystem s);
RootSystemSum normalize(const RootSystemSum& sum);

// Sub-root-system of short roots: A_l -> A_l, B_l -> l*A1, C_l -> D_l
// (canonicalized), D_l -> D_l. Input must be canonical.
RootSystemSum short_root_restriction(SimpleRootSystem s);
RootSystemSum short_root_restriction_sum(const RootSystemSum& sum);

// All canonical sums S with every simple factor of rank <= max_rank and
// short_root_restriction_sum(S) == target. Exhaustive within the bound.
std::set<RootSystemSum> phi0_preimage(const RootSystemSum& target, int max_rank);

// Dynkin-diagram automorphism group as permutations of the fundamental
// weight indices 1..rank. `generators` may be empty (trivial group).
struct DiagramAutomorphismGroup {
  long long order;
  std::vector<std::vector<int>> generators;  // g[r-1] = image of index r
};

DiagramAutomorphismGroup diagram_automorphism_group(SimpleRootSystem s);

// True iff every diagram automorphism fixes the index of w.
bool is_weight_automorphism_stable(SimpleRootSystem s, WeightLabel w);

// Self-duality of the minuscule module with highest weight w, via the
// longest-Weyl-element rule. Throws std::domain_error if w is not minuscule.
bool is_self_dual(SimpleRootSystem s, WeightLabel w);

}  // namespace avsplit
