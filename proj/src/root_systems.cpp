#include "avsplit/root_systems.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace avsplit {

char family_letter(Family f) { return static_cast<char>(f); }

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    default: throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
  }
}

bool is_canonical(SimpleRootSystem s) {
  switch (s.family) {
    case Family::A: return s.rank >= 1;
    case Family::B: return s.rank >= 2;
    case Family::C: return s.rank >= 3;
    case Family::D: return s.rank >= 4;
  }
  return false;
}

std::string to_string(SimpleRootSystem s) {
  return family_letter(s.family) + std::to_string(s.rank);
}

RootSystemSum::RootSystemSum(std::vector<SimpleRootSystem> fs) : factors(std::move(fs)) {
  std::sort(factors.begin(), factors.end());
}

int RootSystemSum::total_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string to_string(const RootSystemSum& sum) {
  if (sum.factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < sum.factors.size();) {
    std::size_t j = i;
    while (j < sum.factors.size() && sum.factors[j] == sum.factors[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i) + "*";
    out += to_string(sum.factors[i]);
    i = j;
  }
  return out;
}

std::string to_string(WeightLabel w) { return "w" + std::to_string(w.index); }

WeightLabel parse_weight_label(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'w' && text[0] != 'W'))
    throw std::invalid_argument("weight label must look like \"w3\": got \"" + text + "\"");
  int idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("weight label must look like \"w3\": got \"" + text + "\"");
    idx = idx * 10 + (text[i] - '0');
  }
  if (idx < 1) throw std::invalid_argument("weight index must be positive");
  return WeightLabel{idx};
}

RootSystemSum parse_root_system_sum(const std::string& text) {
  std::vector<SimpleRootSystem> factors;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) return RootSystemSum{};
  if (text[i] == '0') {
    ++i;
    skip_ws();
    if (i != text.size())
      throw std::invalid_argument("unexpected input after \"0\" at position " + std::to_string(i));
    return RootSystemSum{};
  }
  while (true) {
    skip_ws();
    std::size_t term_pos = i;
    long long mult = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mult = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        mult = mult * 10 + (text[i++] - '0');
      skip_ws();
      if (i >= text.size() || text[i] != '*')
        throw std::invalid_argument("expected '*' after multiplicity at position " + std::to_string(i));
      ++i;
      skip_ws();
      if (mult < 1)
        throw std::invalid_argument("multiplicity must be positive at position " + std::to_string(term_pos));
    }
    if (i >= text.size())
      throw std::invalid_argument("expected a root system term at position " + std::to_string(i));
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D')
      throw std::invalid_argument("unknown family letter at position " + std::to_string(i));
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected a rank after family letter at position " + std::to_string(i));
    int rank = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      rank = rank * 10 + (text[i++] - '0');
    for (long long k = 0; k < mult; ++k)
      factors.push_back(SimpleRootSystem{family_from_letter(fam), rank});
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+')
      throw std::invalid_argument("expected '+' at position " + std::to_string(i));
    ++i;
  }
  return normalize(RootSystemSum(std::move(factors)));
}

RootSystemSum normalize(SimpleRootSystem s) {
  if (s.rank < 1) throw std::invalid_argument("root system rank must be >= 1");
  std::vector<SimpleRootSystem> out;
  switch (s.family) {
    case Family::A:
      out.push_back(s);
      break;
    case Family::B:
      out.push_back(s.rank == 1 ? SimpleRootSystem{Family::A, 1} : s);
      break;
    case Family::C:
      if (s.rank == 1) out.push_back({Family::A, 1});
      else if (s.rank == 2) out.push_back({Family::B, 2});
      else out.push_back(s);
      break;
    case Family::D:
      // D1 = so(2) has the empty root system; D2 and D3 are the usual
      // coincidences.
      if (s.rank == 2) out = {{Family::A, 1}, {Family::A, 1}};
      else if (s.rank == 3) out.push_back({Family::A, 3});
      else if (s.rank >= 4) out.push_back(s);
      break;
  }
  return RootSystemSum(std::move(out));
}

RootSystemSum normalize(const RootSystemSum& sum) {
  std::vector<SimpleRootSystem> out;
  for (const auto& f : sum.factors) {
    RootSystemSum n = normalize(f);
    out.insert(out.end(), n.factors.begin(), n.factors.end());
  }
  return RootSystemSum(std::move(out));
}

RootSystemSum short_root_restriction(SimpleRootSystem s) {
  if (!is_canonical(s)) throw std::invalid_argument("short_root_restriction requires a canonical system");
  switch (s.family) {
    case Family::A:
      return RootSystemSum({s});
    case Family::B:
      return RootSystemSum(std::vector<SimpleRootSystem>(s.rank, {Family::A, 1}));
    case Family::C:
      return normalize(SimpleRootSystem{Family::D, s.rank});
    case Family::D:
      return RootSystemSum({s});
  }
  throw std::logic_error("unreachable");
}

RootSystemSum short_root_restriction_sum(const RootSystemSum& sum) {
  std::vector<SimpleRootSystem> out;
  for (const auto& f : sum.factors) {
    RootSystemSum r = short_root_restriction(f);
    out.insert(out.end(), r.factors.begin(), r.factors.end());
  }
  return RootSystemSum(std::move(out));
}

namespace {

// Multiset subtraction; nullopt-like failure signalled by bool.
bool subtract(std::vector<SimpleRootSystem>& from, const std::vector<SimpleRootSystem>& what) {
  for (const auto& w : what) {
    auto it = std::find(from.begin(), from.end(), w);
    if (it == from.end()) return false;
    from.erase(it);
  }
  return true;
}

void preimage_search(const std::vector<std::pair<SimpleRootSystem, RootSystemSum>>& candidates,
                     std::size_t first, std::vector<SimpleRootSystem>& remaining,
                     std::vector<SimpleRootSystem>& chosen, std::set<RootSystemSum>& out) {
  if (remaining.empty()) {
    out.insert(RootSystemSum(chosen));
    return;
  }
  for (std::size_t i = first; i < candidates.size(); ++i) {
    const auto& [sys, image] = candidates[i];
    if (image.total_rank() > static_cast<int>(remaining.size()) * 16) continue;
    std::vector<SimpleRootSystem> next = remaining;
    if (!subtract(next, image.factors)) continue;
    chosen.push_back(sys);
    preimage_search(candidates, i, next, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::set<RootSystemSum> phi0_preimage(const RootSystemSum& target, int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
  std::vector<std::pair<SimpleRootSystem, RootSystemSum>> candidates;
  auto add = [&](Family f, int lo) {
    for (int l = lo; l <= max_rank; ++l) {
      SimpleRootSystem s{f, l};
      candidates.emplace_back(s, short_root_restriction(s));
    }
  };
  add(Family::A, 1);
  add(Family::B, 2);
  add(Family::C, 3);
  add(Family::D, 4);

  // Restriction preserves total rank, so only candidates fitting the
  // remaining rank can contribute; the generic subtract() check prunes.
  std::set<RootSystemSum> out;
  std::vector<SimpleRootSystem> remaining = target.factors;
  std::vector<SimpleRootSystem> chosen;
  preimage_search(candidates, 0, remaining, chosen, out);
  return out;
}

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

}  // namespace

DiagramAutomorphismGroup diagram_automorphism_group(SimpleRootSystem s) {
  if (!is_canonical(s)) throw std::invalid_argument("diagram_automorphism_group requires a canonical system");
  const int l = s.rank;
  switch (s.family) {
    case Family::A: {
      if (l == 1) return {1, {}};
      std::vector<int> flip(l);
      for (int r = 1; r <= l; ++r) flip[r - 1] = l + 1 - r;
      return {2, {flip}};
    }
    case Family::B:
    case Family::C:
      return {1, {}};
    case Family::D: {
      if (l == 4) {
        // Full permutation group of the three outer nodes {1, 3, 4}.
        std::vector<int> swap34 = identity_perm(4);
        swap34[2] = 4;
        swap34[3] = 3;
        std::vector<int> cycle = identity_perm(4);  // 1 -> 3 -> 4 -> 1
        cycle[0] = 3;
        cycle[2] = 4;
        cycle[3] = 1;
        return {6, {swap34, cycle}};
      }
      std::vector<int> swap_tips = identity_perm(l);
      swap_tips[l - 2] = l;
      swap_tips[l - 1] = l - 1;
      return {2, {swap_tips}};
    }
  }
  throw std::logic_error("unreachable");
}

bool is_weight_automorphism_stable(SimpleRootSystem s, WeightLabel w) {
  if (w.index < 1 || w.index > s.rank) throw std::invalid_argument("weight index out of range");
  for (const auto& g : diagram_automorphism_group(s).generators)
    if (g[w.index - 1] != w.index) return false;
  return true;
}

namespace {

bool minuscule_for(SimpleRootSystem s, WeightLabel w) {
  if (w.index < 1 || w.index > s.rank) return false;
  switch (s.family) {
    case Family::A: return true;
    case Family::B: return w.index == s.rank;
    case Family::C: return w.index == 1;
    case Family::D: return w.index == 1 || w.index == s.rank - 1 || w.index == s.rank;
  }
  return false;
}

}  // namespace

bool is_self_dual(SimpleRootSystem s, WeightLabel w) {
  if (!is_canonical(s)) throw std::invalid_argument("is_self_dual requires a canonical system");
  if (!minuscule_for(s, w)) throw std::domain_error("is_self_dual: weight is not minuscule for " + to_string(s));
  switch (s.family) {
    case Family::A:
      return w.index == s.rank + 1 - w.index;
    case Family::B:
    case Family::C:
      return true;
    case Family::D:
      if (w.index == 1) return true;
      return s.rank % 2 == 0;
  }
  throw std::logic_error("unreachable");
}

}  // namespace avsplit
