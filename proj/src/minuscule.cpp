#include "avsplit/minuscule.hpp"

#include <stdexcept>

namespace avsplit {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at every step
  }
  return r;
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<WeightLabel> minuscule_weights(SimpleRootSystem s) {
  if (!is_canonical(s)) throw std::invalid_argument("minuscule_weights requires a canonical system");
  std::vector<WeightLabel> out;
  switch (s.family) {
    case Family::A:
      for (int r = 1; r <= s.rank; ++r) out.push_back({r});
      break;
    case Family::B:
      out.push_back({s.rank});
      break;
    case Family::C:
      out.push_back({1});
      break;
    case Family::D:
      out.push_back({1});
      out.push_back({s.rank - 1});
      out.push_back({s.rank});
      break;
  }
  return out;
}

bool is_minuscule(SimpleRootSystem s, WeightLabel w) {
  if (w.index < 1 || w.index > s.rank) return false;
  switch (s.family) {
    case Family::A: return true;
    case Family::B: return w.index == s.rank;
    case Family::C: return w.index == 1;
    case Family::D: return w.index == 1 || w.index == s.rank - 1 || w.index == s.rank;
  }
  return false;
}

namespace {

void require_minuscule(SimpleRootSystem s, WeightLabel w, const char* who) {
  if (!is_minuscule(s, w))
    throw std::domain_error(std::string(who) + ": " + to_string(w) + " is not minuscule for " + to_string(s));
}

}  // namespace

long long minuscule_dimension(SimpleRootSystem s, WeightLabel w) {
  require_minuscule(s, w, "minuscule_dimension");
  if (s.rank > 62) throw std::overflow_error("minuscule_dimension: rank exceeds the exact 64-bit range");
  const int l = s.rank;
  switch (s.family) {
    case Family::A: return binomial(l + 1, w.index);
    case Family::B: return 1LL << l;
    case Family::C: return 2LL * l;
    case Family::D: return w.index == 1 ? 2LL * l : (1LL << (l - 1));
  }
  throw std::logic_error("unreachable");
}

int duality_indicator(SimpleRootSystem s, WeightLabel w) {
  require_minuscule(s, w, "duality_indicator");
  const int l = s.rank;
  switch (s.family) {
    case Family::A:
      if (2 * w.index != l + 1) return 0;
      return w.index % 2 == 0 ? +1 : -1;
    case Family::B:
      return (l % 4 == 0 || l % 4 == 3) ? +1 : -1;
    case Family::C:
      return -1;
    case Family::D:
      if (w.index == 1) return +1;
      if (l % 4 == 0) return +1;
      if (l % 4 == 2) return -1;
      return 0;
  }
  throw std::logic_error("unreachable");
}

bool has_odd_dimensional_nontrivial_minuscule(SimpleRootSystem s) {
  for (WeightLabel w : minuscule_weights(s))
    if (minuscule_dimension(s, w) % 2 != 0) return true;
  return false;
}

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Weyl order of a (possibly degenerate) classical diagram component.
// Rank 0 contributes 1; the formulas hold for all small ranks (B1/C1 = A1,
// D1 trivial, D2 = A1 x A1, D3 = A3).
long long weyl_order(Family f, int rank) {
  if (rank > 16) throw std::overflow_error("Weyl group order exceeds the exact 64-bit range");
  if (rank <= 0) return 1;
  switch (f) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return (1LL << rank) * factorial(rank);
    case Family::D: return (1LL << (rank - 1)) * factorial(rank);
  }
  return 1;
}

}  // namespace

long long weyl_group_order(SimpleRootSystem s) {
  if (!is_canonical(s)) throw std::invalid_argument("weyl_group_order requires a canonical system");
  return weyl_order(s.family, s.rank);
}

long long weyl_orbit_size(SimpleRootSystem s, WeightLabel w) {
  if (!is_canonical(s)) throw std::invalid_argument("weyl_orbit_size requires a canonical system");
  if (w.index < 1 || w.index > s.rank) throw std::invalid_argument("weight index out of range");
  const int l = s.rank;
  const int r = w.index;

  // Stabilizer of a fundamental weight is the parabolic Weyl group of the
  // diagram with node r removed.
  long long stab = 1;
  switch (s.family) {
    case Family::A:
      stab = weyl_order(Family::A, r - 1) * weyl_order(Family::A, l - r);
      break;
    case Family::B:
      stab = weyl_order(Family::A, r - 1) * weyl_order(Family::B, l - r);
      break;
    case Family::C:
      stab = weyl_order(Family::A, r - 1) * weyl_order(Family::C, l - r);
      break;
    case Family::D:
      if (r <= l - 3) stab = weyl_order(Family::A, r - 1) * weyl_order(Family::D, l - r);
      else if (r == l - 2) stab = weyl_order(Family::A, l - 3) * 2 * 2;
      else stab = weyl_order(Family::A, l - 1);  // removing a fork tip leaves a chain
      break;
  }
  return weyl_group_order(s) / stab;
}

std::vector<MinusculeEntry> minuscule_catalog(int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
  std::vector<MinusculeEntry> out;
  auto emit = [&](Family f, int lo) {
    for (int l = lo; l <= max_rank; ++l) {
      SimpleRootSystem s{f, l};
      for (WeightLabel w : minuscule_weights(s))
        out.push_back({s, w, minuscule_dimension(s, w), duality_indicator(s, w)});
    }
  };
  emit(Family::A, 1);
  emit(Family::B, 2);
  emit(Family::C, 3);
  emit(Family::D, 4);
  return out;
}

}  // namespace avsplit
