#include <doctest.h>

#include <set>
#include <stdexcept>

#include "avsplit/root_systems.hpp"
#include "root_enum_oracle.hpp"

using namespace avsplit;

namespace {

RootSystemSum sum_of(std::initializer_list<SimpleRootSystem> fs) {
  return RootSystemSum(std::vector<SimpleRootSystem>(fs));
}

std::multiset<std::pair<char, int>> as_multiset(const RootSystemSum& s) {
  std::multiset<std::pair<char, int>> out;
  for (const auto& f : s.factors) out.insert({family_letter(f.family), f.rank});
  return out;
}

// Every canonical sum with total rank == n and factor ranks <= max_rank.
void all_sums_of_rank(int n, int max_rank, std::vector<SimpleRootSystem>& acc,
                      std::vector<RootSystemSum>& out) {
  if (n == 0) {
    out.push_back(RootSystemSum(acc));
    return;
  }
  auto try_factor = [&](SimpleRootSystem s) {
    if (s.rank > n || s.rank > max_rank) return;
    if (!acc.empty() && s < acc.back()) return;  // non-decreasing to avoid duplicates
    acc.push_back(s);
    all_sums_of_rank(n - s.rank, max_rank, acc, out);
    acc.pop_back();
  };
  for (int l = 1; l <= n; ++l) try_factor({Family::A, l});
  for (int l = 2; l <= n; ++l) try_factor({Family::B, l});
  for (int l = 3; l <= n; ++l) try_factor({Family::C, l});
  for (int l = 4; l <= n; ++l) try_factor({Family::D, l});
}

std::vector<RootSystemSum> all_sums_of_rank(int n, int max_rank) {
  std::vector<SimpleRootSystem> acc;
  std::vector<RootSystemSum> out;
  all_sums_of_rank(n, max_rank, acc, out);
  return out;
}

}  // namespace

TEST_CASE("normalize resolves the low-rank coincidences") {
  CHECK(normalize(SimpleRootSystem{Family::D, 3}) == sum_of({{Family::A, 3}}));
  CHECK(normalize(SimpleRootSystem{Family::B, 5}) == sum_of({{Family::B, 5}}));
  CHECK(normalize(SimpleRootSystem{Family::D, 2}) == sum_of({{Family::A, 1}, {Family::A, 1}}));
  CHECK(normalize(SimpleRootSystem{Family::B, 1}) == sum_of({{Family::A, 1}}));
  CHECK(normalize(SimpleRootSystem{Family::C, 1}) == sum_of({{Family::A, 1}}));
  CHECK(normalize(SimpleRootSystem{Family::C, 2}) == sum_of({{Family::B, 2}}));
  CHECK(normalize(SimpleRootSystem{Family::D, 1}).empty());
  CHECK_THROWS_AS(normalize(SimpleRootSystem{Family::A, 0}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and lands on canonical factors") {
  for (char fam : {'A', 'B', 'C', 'D'}) {
    for (int l = 1; l <= 12; ++l) {
      const RootSystemSum once = normalize(SimpleRootSystem{family_from_letter(fam), l});
      CHECK(normalize(once) == once);
      for (const auto& f : once.factors) {
        CHECK(is_canonical(f));
        // No canonical value is B1, C1, C2, D2 or D3.
        CHECK(f != SimpleRootSystem{Family::B, 1});
        CHECK(f != SimpleRootSystem{Family::C, 1});
        CHECK(f != SimpleRootSystem{Family::C, 2});
        CHECK(f != SimpleRootSystem{Family::D, 2});
        CHECK(f != SimpleRootSystem{Family::D, 3});
      }
    }
  }
}

TEST_CASE("short root restriction follows the four family rules") {
  CHECK(short_root_restriction({Family::B, 3}) ==
        sum_of({{Family::A, 1}, {Family::A, 1}, {Family::A, 1}}));
  CHECK(short_root_restriction({Family::C, 4}) == sum_of({{Family::D, 4}}));
  CHECK(short_root_restriction({Family::C, 3}) == sum_of({{Family::A, 3}}));
  CHECK(short_root_restriction({Family::A, 7}) == sum_of({{Family::A, 7}}));
  CHECK(short_root_restriction({Family::D, 9}) == sum_of({{Family::D, 9}}));
  CHECK_THROWS_AS(short_root_restriction({Family::C, 2}), std::invalid_argument);
}

TEST_CASE("short root restriction agrees with explicit root enumeration") {
  for (int l = 1; l <= 6; ++l) CHECK(as_multiset(short_root_restriction({Family::A, l})) ==
                                     root_enum::short_root_type('A', l));
  for (int l = 2; l <= 6; ++l) CHECK(as_multiset(short_root_restriction({Family::B, l})) ==
                                     root_enum::short_root_type('B', l));
  for (int l = 3; l <= 6; ++l) CHECK(as_multiset(short_root_restriction({Family::C, l})) ==
                                     root_enum::short_root_type('C', l));
  for (int l = 4; l <= 6; ++l) CHECK(as_multiset(short_root_restriction({Family::D, l})) ==
                                     root_enum::short_root_type('D', l));
}

TEST_CASE("short root restriction on sums") {
  CHECK(short_root_restriction_sum(sum_of({{Family::B, 2}, {Family::C, 4}})) ==
        sum_of({{Family::A, 1}, {Family::A, 1}, {Family::D, 4}}));
  CHECK(short_root_restriction_sum(RootSystemSum{}).empty());
  CHECK(short_root_restriction_sum(sum_of({{Family::A, 2}, {Family::A, 4}})) ==
        sum_of({{Family::A, 2}, {Family::A, 4}}));
}

TEST_CASE("restriction is idempotent on every sum of total rank <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& s : all_sums_of_rank(n, 12)) {
      const RootSystemSum once = short_root_restriction_sum(s);
      CHECK(short_root_restriction_sum(once) == once);
    }
  }
}

TEST_CASE("phi0 preimages are exhaustive and correct") {
  const auto pre_a2 = phi0_preimage(sum_of({{Family::A, 2}}), 8);
  CHECK(pre_a2 == std::set<RootSystemSum>{sum_of({{Family::A, 2}})});

  const auto pre_a1 = phi0_preimage(sum_of({{Family::A, 1}}), 8);
  CHECK(pre_a1 == std::set<RootSystemSum>{sum_of({{Family::A, 1}})});

  const auto pre_2a1 = phi0_preimage(sum_of({{Family::A, 1}, {Family::A, 1}}), 8);
  CHECK(pre_2a1 == std::set<RootSystemSum>{sum_of({{Family::A, 1}, {Family::A, 1}}),
                                           sum_of({{Family::B, 2}})});

  // A target containing a C factor is never hit.
  CHECK(phi0_preimage(sum_of({{Family::C, 4}}), 8).empty());
}

TEST_CASE("phi0 preimage members restrict back to the target, brute-force cross-check") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& target : all_sums_of_rank(n, 6)) {
      const auto via_library = phi0_preimage(target, 6);
      for (const auto& s : via_library) CHECK(short_root_restriction_sum(s) == target);
      // Independent enumeration: restriction preserves total rank.
      std::set<RootSystemSum> brute;
      for (const auto& s : all_sums_of_rank(n, 6))
        if (short_root_restriction_sum(s) == target) brute.insert(s);
      CHECK(via_library == brute);
    }
  }
}

TEST_CASE("diagram automorphism groups") {
  CHECK(diagram_automorphism_group({Family::A, 1}).order == 1);
  CHECK(diagram_automorphism_group({Family::A, 3}).order == 2);
  CHECK(diagram_automorphism_group({Family::B, 7}).order == 1);
  CHECK(diagram_automorphism_group({Family::C, 5}).order == 1);
  CHECK(diagram_automorphism_group({Family::D, 4}).order == 6);
  CHECK(diagram_automorphism_group({Family::D, 5}).order == 2);

  // The A3 flip sends w_r to w_{4-r}.
  const auto a3 = diagram_automorphism_group({Family::A, 3});
  REQUIRE(a3.generators.size() == 1);
  CHECK(a3.generators[0] == std::vector<int>{3, 2, 1});

  // Triality permutes the outer nodes {1, 3, 4} and fixes node 2.
  const auto d4 = diagram_automorphism_group({Family::D, 4});
  for (const auto& g : d4.generators) {
    CHECK(g[1] == 2);
    std::set<int> outer{g[0], g[2], g[3]};
    CHECK(outer == std::set<int>{1, 3, 4});
  }

  for (int l = 2; l <= 12; ++l) CHECK(diagram_automorphism_group({Family::A, l}).order == 2);
  for (int l = 5; l <= 12; ++l) CHECK(diagram_automorphism_group({Family::D, l}).order == 2);
}

TEST_CASE("automorphism stability of weights") {
  CHECK(is_weight_automorphism_stable({Family::A, 3}, {2}));
  CHECK_FALSE(is_weight_automorphism_stable({Family::A, 3}, {1}));
  CHECK_FALSE(is_weight_automorphism_stable({Family::D, 4}, {1}));
  CHECK(is_weight_automorphism_stable({Family::D, 5}, {1}));
  CHECK_FALSE(is_weight_automorphism_stable({Family::D, 5}, {4}));
  CHECK(is_weight_automorphism_stable({Family::C, 3}, {1}));
  CHECK(is_weight_automorphism_stable({Family::B, 4}, {4}));
  CHECK(is_weight_automorphism_stable({Family::A, 1}, {1}));
}

TEST_CASE("self-duality via the longest Weyl element rule") {
  CHECK(is_self_dual({Family::A, 3}, {2}));
  CHECK_FALSE(is_self_dual({Family::A, 4}, {1}));
  CHECK_FALSE(is_self_dual({Family::D, 5}, {5}));
  CHECK(is_self_dual({Family::D, 5}, {1}));
  CHECK(is_self_dual({Family::D, 6}, {5}));
  CHECK(is_self_dual({Family::B, 3}, {3}));
  CHECK(is_self_dual({Family::C, 4}, {1}));
  CHECK_THROWS_AS(is_self_dual({Family::C, 4}, {2}), std::domain_error);
  CHECK_THROWS_AS(is_self_dual({Family::B, 3}, {1}), std::domain_error);
}

TEST_CASE("sum strings parse and print canonically") {
  CHECK(to_string(parse_root_system_sum("A3+B2+2*A1")) == "2*A1+A3+B2");
  CHECK(to_string(parse_root_system_sum(" b2 + a3+2*a1 ")) == "2*A1+A3+B2");
  CHECK(to_string(parse_root_system_sum("D3")) == "A3");  // canonicalized
  CHECK(to_string(parse_root_system_sum("C2+C1")) == "A1+B2");
  CHECK(to_string(parse_root_system_sum("0")) == "0");
  CHECK(to_string(parse_root_system_sum("")) == "0");
  CHECK(parse_root_system_sum("3*A2").factors.size() == 3);

  CHECK_THROWS_AS(parse_root_system_sum("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_system_sum("A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_system_sum("2A1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_system_sum("A1++B2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_system_sum("A0"), std::invalid_argument);

  // Round trip on everything of small rank.
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : all_sums_of_rank(n, 8))
      CHECK(parse_root_system_sum(to_string(s)) == s);
}
