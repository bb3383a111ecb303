#include "avsplit/lie_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace avsplit {

int GroupModelCandidate::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.system.rank;
  return r;
}

long long GroupModelCandidate::total_module_dimension() const {
  long long total = 0;
  for (const auto& f : factors)
    for (const auto& [w, mult] : f.module) total += mult * minuscule_dimension(f.system, w);
  for (const auto& b : tensor_blocks) {
    long long dim = b.multiplicity;
    for (const auto& [idx, w] : b.legs) dim *= minuscule_dimension(factors.at(idx).system, w);
    total += dim;
  }
  return total;
}

std::pair<SimpleRootSystem, WeightLabel> standard_symplectic_factor(long long h) {
  if (h < 1) throw std::invalid_argument("relative dimension must be positive");
  if (h == 1) return {{Family::A, 1}, {1}};
  if (h == 2) return {{Family::B, 2}, {2}};  // Sp4-standard is the B2 spin module
  return {{Family::C, static_cast<int>(h)}, {1}};
}

namespace {

// D_h with the vector weight, in canonical form (D3 becomes A3 acting
// through its middle fundamental weight).
std::pair<SimpleRootSystem, WeightLabel> standard_orthogonal_factor(long long h) {
  if (h == 3) return {{Family::A, 3}, {2}};
  if (h >= 4) return {{Family::D, static_cast<int>(h)}, {1}};
  throw std::invalid_argument("orthogonal factor needs relative dimension >= 3");
}

GroupModelCandidate repeated_factor_candidate(const std::pair<SimpleRootSystem, WeightLabel>& fw,
                                              int copies, int multiplicity) {
  GroupModelCandidate c;
  for (int i = 0; i < copies; ++i)
    c.factors.push_back({fw.first, {{fw.second, multiplicity}}});
  std::sort(c.factors.begin(), c.factors.end(),
            [](const FactorAction& a, const FactorAction& b) { return a.system < b.system; });
  return c;
}

// Ways one odd-dimensional module piece can arise as a tensor product of
// odd-dimensional minuscule A_l modules; each leg is (rank, weight index)
// with the weight taken on the canonical side r <= (l+1)/2.
std::vector<std::pair<int, int>> odd_minuscule_legs(long long dim) {
  std::vector<std::pair<int, int>> out;
  for (int l = 2; l + 1 <= dim; ++l)
    for (int r = 1; 2 * r <= l + 1; ++r)
      if (binomial(l + 1, r) == dim && dim % 2 == 1) out.emplace_back(l, r);
  return out;
}

void enumerate_factorizations(long long remaining, const std::vector<std::pair<int, int>>& options,
                              std::size_t first, std::vector<std::pair<int, int>>& legs,
                              std::vector<std::vector<std::pair<int, int>>>& out) {
  if (remaining == 1) {
    if (!legs.empty()) out.push_back(legs);
    return;
  }
  for (std::size_t i = first; i < options.size(); ++i) {
    const long long dim = binomial(options[i].first + 1, options[i].second);
    if (remaining % dim != 0) continue;
    legs.push_back(options[i]);
    enumerate_factorizations(remaining / dim, options, i, legs, out);
    legs.pop_back();
  }
}

// Candidates for a non-CM type IV factor of odd relative dimension h: all
// tensor factorizations of an h-dimensional piece into odd minuscule A_l
// modules, one conjugate pair of pieces per embedding slot, multiplicity d.
std::vector<GroupModelCandidate> type_iv_candidates(long long h, long long slots, int d) {
  std::vector<std::pair<int, int>> options;
  for (long long part = 3; part <= h; part += 2)
    if (h % part == 0)
      for (const auto& leg : odd_minuscule_legs(part)) options.push_back(leg);
  std::sort(options.begin(), options.end());
  options.erase(std::unique(options.begin(), options.end()), options.end());

  std::vector<std::vector<std::pair<int, int>>> factorizations;
  std::vector<std::pair<int, int>> legs;
  enumerate_factorizations(h, options, 0, legs, factorizations);

  std::vector<GroupModelCandidate> out;
  for (const auto& fz : factorizations) {
    GroupModelCandidate c;
    c.center_rank = 1;
    if (fz.size() == 1) {
      const auto [l, r] = fz.front();
      for (long long s = 0; s < slots; ++s)
        c.factors.push_back({{Family::A, l}, {{WeightLabel{r}, d}, {WeightLabel{l + 1 - r}, d}}});
    } else {
      for (long long s = 0; s < slots; ++s) {
        int base = static_cast<int>(c.factors.size());
        TensorBlock piece, dual;
        piece.multiplicity = dual.multiplicity = d;
        for (std::size_t i = 0; i < fz.size(); ++i) {
          const auto [l, r] = fz[i];
          c.factors.push_back({{Family::A, l}, {}});
          piece.legs.emplace_back(base + static_cast<int>(i), WeightLabel{r});
          dual.legs.emplace_back(base + static_cast<int>(i), WeightLabel{l + 1 - r});
        }
        c.tensor_blocks.push_back(piece);
        c.tensor_blocks.push_back(dual);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Multisets of per-slot choices from `options`, one choice per slot.
void slot_assignments(const std::vector<std::pair<SimpleRootSystem, WeightLabel>>& options,
                      long long slots, std::size_t first,
                      std::vector<std::pair<SimpleRootSystem, WeightLabel>>& current,
                      std::vector<std::vector<std::pair<SimpleRootSystem, WeightLabel>>>& out) {
  if (static_cast<long long>(current.size()) == slots) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = first; i < options.size(); ++i) {
    current.push_back(options[i]);
    slot_assignments(options, slots, i, current, out);
    current.pop_back();
  }
}

}  // namespace

ModelSet build_model_set(const FactorDescriptor& f, const FieldContext& ctx) {
  {
    auto violations = validate(f, ctx);
    if (!violations.empty())
      throw std::invalid_argument("build_model_set: invalid descriptor \"" + f.label +
                                  "\": " + violations.front());
  }

  const long long g = f.dimension;
  const long long h = relative_dimension(f);
  ModelSet ms;

  if (f.is_cm) {
    GroupModelCandidate torus;
    torus.center_rank = static_cast<int>(f.e0);
    ms.classified = true;
    ms.candidates.push_back(torus);
    return ms;
  }

  switch (f.albert_type) {
    case AlbertType::I:
    case AlbertType::II: {
      // Trivial-endomorphism fourfolds: either the full symplectic group or
      // a form of SL2^3 acting through the triple tensor product.
      if (g == 4 && f.trivial_endomorphisms) {
        GroupModelCandidate sp8 = repeated_factor_candidate({{Family::C, 4}, {1}}, 1, 1);
        GroupModelCandidate sl2cubed;
        sl2cubed.factors = {{{Family::A, 1}, {}}, {{Family::A, 1}, {}}, {{Family::A, 1}, {}}};
        sl2cubed.tensor_blocks = {{{{0, {1}}, {1, {1}}, {2, {1}}}, 1}};
        sl2cubed.q_simple_factor_count = 3;
        ms.classified = true;
        ms.candidates = {sp8, sl2cubed};
        return ms;
      }
      if (h % 2 == 1 || h == 2) {
        const int d = f.albert_type == AlbertType::II ? 2 : 1;
        ms.classified = true;
        ms.candidates.push_back(
            repeated_factor_candidate(standard_symplectic_factor(h), static_cast<int>(f.e), d));
        return ms;
      }
      ms.unclassified_reason = "type " + to_string(f.albert_type) +
                               " with even relative dimension > 2: no classification in scope";
      return ms;
    }
    case AlbertType::III: {
      if (h == 1) {  // reachable only in characteristic p
        ms.unclassified_reason = "type III with relative dimension 1: no classification in scope";
        return ms;
      }
      if (h % 2 == 1) {
        std::vector<std::pair<SimpleRootSystem, WeightLabel>> options;
        options.push_back(standard_orthogonal_factor(h));
        // Orthogonal middle exterior powers of sl_{l+1} with l+1 a power of
        // two and matching dimension 2h.
        for (int l = 3; binomial(l + 1, (l + 1) / 2) <= 2 * h; l += 2)
          if (is_power_of_two(l + 1) && binomial(l + 1, (l + 1) / 2) == 2 * h)
            options.push_back({{Family::A, l}, {(l + 1) / 2}});
        std::sort(options.begin(), options.end());
        options.erase(std::unique(options.begin(), options.end()), options.end());

        std::vector<std::vector<std::pair<SimpleRootSystem, WeightLabel>>> assignments;
        std::vector<std::pair<SimpleRootSystem, WeightLabel>> current;
        slot_assignments(options, f.e, 0, current, assignments);
        ms.classified = true;
        for (const auto& a : assignments) {
          GroupModelCandidate c;
          for (const auto& fw : a) c.factors.push_back({fw.first, {{fw.second, 2}}});
          std::sort(c.factors.begin(), c.factors.end(),
                    [](const FactorAction& x, const FactorAction& y) { return x.system < y.system; });
          if (std::find(ms.candidates.begin(), ms.candidates.end(), c) == ms.candidates.end())
            ms.candidates.push_back(c);
        }
        return ms;
      }
      ms.unclassified_reason = "type III with even relative dimension: no classification in scope";
      return ms;
    }
    case AlbertType::IV: {
      if (h == 1) {  // non-CM with h = 1 is reachable only in characteristic p
        ms.unclassified_reason =
            "non-CM type IV with relative dimension 1: no classification in scope";
        return ms;
      }
      if (h % 2 == 1) {
        ms.classified = true;
        ms.candidates = type_iv_candidates(h, f.e0, static_cast<int>(f.d));
        return ms;
      }
      ms.unclassified_reason = "type IV with even relative dimension: no classification in scope";
      return ms;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_general_lefschetz(const GroupModelCandidate& m) {
  if (!m.semisimple() || !m.componentwise() || m.factors.empty()) return false;
  for (const auto& fa : m.factors) {
    if (fa.module.empty()) return false;
    const int l = fa.system.rank;
    for (const auto& [w, mult] : fa.module) {
      (void)mult;
      switch (fa.system.family) {
        case Family::A:
          if (l % 2 == 0 || 2 * w.index != l + 1) return false;
          break;
        case Family::B:
          if (w.index != l) return false;
          break;
        case Family::C:
        case Family::D:
          if (w.index != 1) return false;
          break;
      }
    }
  }
  return true;
}

namespace {

// Weight classes a factor acts through, deduplicated.
std::vector<WeightLabel> weight_classes(const FactorAction& fa) {
  std::vector<WeightLabel> ws;
  for (const auto& [w, mult] : fa.module) {
    (void)mult;
    if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
  }
  return ws;
}

}  // namespace

HazamaReport hazama_hypotheses_hold(const GroupModelCandidate& m1, const GroupModelCandidate& m2) {
  HazamaReport rep;
  rep.centers_trivial = m1.semisimple() && m2.semisimple();
  if (!rep.centers_trivial) rep.violations.push_back("a center has positive rank");

  auto faithful_componentwise = [](const GroupModelCandidate& m) {
    if (!m.componentwise()) return false;
    for (const auto& fa : m.factors)
      if (fa.module.empty()) return false;
    return true;
  };
  rep.componentwise_faithful = faithful_componentwise(m1) && faithful_componentwise(m2);
  if (!rep.componentwise_faithful)
    rep.violations.push_back("a model does not act componentwise and faithfully");

  std::vector<const FactorAction*> all;
  for (const auto& fa : m1.factors) all.push_back(&fa);
  for (const auto& fa : m2.factors) all.push_back(&fa);

  rep.weight_condition = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i]->system != all[j]->system) continue;
      auto wi = weight_classes(*all[i]);
      auto wj = weight_classes(*all[j]);
      if (wi.size() != 1 || wj.size() != 1 || wi.front() != wj.front()) {
        rep.weight_condition = false;
        rep.violations.push_back("factors of type " + to_string(all[i]->system) +
                                 " do not act through a single common weight class");
        continue;
      }
      if (!is_weight_automorphism_stable(all[i]->system, wi.front())) {
        rep.weight_condition = false;
        rep.violations.push_back("weight " + to_string(wi.front()) + " of " +
                                 to_string(all[i]->system) +
                                 " is not stable under all diagram automorphisms");
      }
    }
  }
  return rep;
}

bool shares_simple_factor_type(const GroupModelCandidate& m1, const GroupModelCandidate& m2) {
  std::set<SimpleRootSystem> types;
  for (const auto& fa : m1.factors) types.insert(fa.system);
  for (const auto& fa : m2.factors)
    if (types.count(fa.system)) return true;
  return false;
}

std::vector<SimpleRootSystem> candidate_system_types(const ModelSet& ms) {
  std::set<SimpleRootSystem> types;
  for (const auto& c : ms.candidates)
    for (const auto& fa : c.factors) types.insert(fa.system);
  return {types.begin(), types.end()};
}

}  // namespace avsplit
