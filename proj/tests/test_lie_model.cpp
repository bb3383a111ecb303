#include <doctest.h>

#include <stdexcept>

#include "avsplit/lie_model.hpp"
#include "catalog_fixtures.hpp"

using namespace avsplit;

namespace {

bool is_minuscule_model(const GroupModelCandidate& c) {
  for (const auto& fa : c.factors)
    for (const auto& [w, mult] : fa.module) {
      (void)mult;
      if (!is_minuscule(fa.system, w)) return false;
    }
  for (const auto& b : c.tensor_blocks)
    for (const auto& [idx, w] : b.legs)
      if (!is_minuscule(c.factors.at(idx).system, w)) return false;
  return true;
}

}  // namespace

TEST_CASE("CM factors model as tori") {
  const ModelSet ms = build_model_set(fx::cm_factor("Z", 3));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  CHECK(ms.candidates[0].center_rank == 3);
  CHECK(ms.candidates[0].factors.empty());
}

TEST_CASE("elliptic curves give a single sl2 on its standard module") {
  const ModelSet ms = build_model_set(fx::elliptic("E"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  const auto& c = ms.candidates[0];
  CHECK(c.center_rank == 0);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].system == SimpleRootSystem{Family::A, 1});
  CHECK(c.factors[0].module == std::vector<std::pair<WeightLabel, int>>{{{1}, 1}});
  CHECK(c.total_module_dimension() == 2);
}

TEST_CASE("type II surfaces act by two copies of the sl2 standard module") {
  const ModelSet ms = build_model_set(fx::type_ii_surface("X"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  const auto& c = ms.candidates[0];
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].system == SimpleRootSystem{Family::A, 1});
  CHECK(c.factors[0].module == std::vector<std::pair<WeightLabel, int>>{{{1}, 2}});
  CHECK(c.total_module_dimension() == 4);  // commutant is the d^2 = 4 dimensional quaternion algebra
}

TEST_CASE("trivial-endomorphism surfaces normalize C2 to the B2 spin module") {
  const ModelSet ms = build_model_set(fx::surface_end_z("S"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  const auto& c = ms.candidates[0];
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].system == SimpleRootSystem{Family::B, 2});
  CHECK(c.factors[0].module == std::vector<std::pair<WeightLabel, int>>{{{2}, 1}});
  CHECK(c.total_module_dimension() == 4);
}

TEST_CASE("trivial-endomorphism threefolds give sp6") {
  const ModelSet ms = build_model_set(fx::threefold_end_z("Y"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  CHECK(ms.candidates[0].factors[0].system == SimpleRootSystem{Family::C, 3});
  CHECK(ms.candidates[0].total_module_dimension() == 6);
}

TEST_CASE("trivial-endomorphism fourfolds carry the two-candidate disjunction") {
  const ModelSet ms = build_model_set(fx::fourfold_end_z("F"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 2);

  const auto& sp8 = ms.candidates[0];
  CHECK(sp8.factors.size() == 1);
  CHECK(sp8.factors[0].system == SimpleRootSystem{Family::C, 4});
  CHECK(sp8.componentwise());
  CHECK(sp8.total_module_dimension() == 8);

  const auto& sl2cubed = ms.candidates[1];
  CHECK(sl2cubed.factors.size() == 3);
  CHECK_FALSE(sl2cubed.componentwise());
  REQUIRE(sl2cubed.tensor_blocks.size() == 1);
  CHECK(sl2cubed.tensor_blocks[0].legs.size() == 3);
  CHECK(sl2cubed.total_module_dimension() == 8);  // 2 x 2 x 2
  CHECK(sl2cubed.q_simple_factor_count == 3);
  CHECK(sl2cubed.semisimple_rank() == 3);
}

TEST_CASE("type IV threefolds act through a conjugate pair of sl3 modules") {
  const ModelSet ms = build_model_set(fx::iv_threefold("Y"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  const auto& c = ms.candidates[0];
  CHECK(c.center_rank == 1);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].system == SimpleRootSystem{Family::A, 2});
  CHECK(c.factors[0].module ==
        std::vector<std::pair<WeightLabel, int>>{{{1}, 1}, {{2}, 1}});
  CHECK(c.total_module_dimension() == 6);
}

TEST_CASE("even relative dimension without an override stays unclassified") {
  CHECK_FALSE(build_model_set(fx::iv11_fourfold("F")).classified);
  CHECK_FALSE(build_model_set(fx::iv21_fourfold("F")).classified);
  CHECK_FALSE(build_model_set(fx::iii_fourfold("F")).classified);
}

TEST_CASE("type I with real multiplication splits into one factor per embedding") {
  const ModelSet ms = build_model_set(fx::i2_fourfold("F"));
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  const auto& c = ms.candidates[0];
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0].system == SimpleRootSystem{Family::B, 2});
  CHECK(c.factors[1].system == SimpleRootSystem{Family::B, 2});
  CHECK(c.total_module_dimension() == 8);
}

TEST_CASE("type III models offer the orthogonal and power-of-two options") {
  // h = 3 over e = 1: D3 normalizes onto A3 through its middle weight, so
  // the two options coincide.
  FactorDescriptor f;
  f.label = "T";
  f.dimension = 6;
  f.albert_type = AlbertType::III;
  f.d = 2;
  f.e = f.e0 = 1;
  const ModelSet ms = build_model_set(f);
  REQUIRE(ms.classified);
  REQUIRE(ms.candidates.size() == 1);
  CHECK(ms.candidates[0].factors[0].system == SimpleRootSystem{Family::A, 3});
  CHECK(ms.candidates[0].factors[0].module ==
        std::vector<std::pair<WeightLabel, int>>{{{2}, 2}});

  // h = 5: only so(10) remains.
  FactorDescriptor g;
  g.label = "U";
  g.dimension = 10;
  g.albert_type = AlbertType::III;
  g.d = 2;
  g.e = g.e0 = 1;
  const ModelSet ms5 = build_model_set(g);
  REQUIRE(ms5.classified);
  REQUIRE(ms5.candidates.size() == 1);
  CHECK(ms5.candidates[0].factors[0].system == SimpleRootSystem{Family::D, 5});
}

TEST_CASE("every candidate weight is minuscule and dimensions add to 2g") {
  for (const auto& f : fx::all_valid_descriptors(5)) {
    const ModelSet ms = build_model_set(f);
    for (const auto& c : ms.candidates) {
      CHECK(is_minuscule_model(c));
      if (!c.factors.empty()) CHECK(c.total_module_dimension() == 2 * f.dimension);
    }
  }
}

TEST_CASE("odd relative dimension type I II III candidates are of general Lefschetz type") {
  for (const auto& f : fx::all_valid_descriptors(5)) {
    if (f.albert_type == AlbertType::IV || f.is_cm) continue;
    const long long h = relative_dimension(f);
    if (h % 2 == 0) continue;
    const ModelSet ms = build_model_set(f);
    REQUIRE(ms.classified);
    for (const auto& c : ms.candidates) {
      CHECK(is_general_lefschetz(c));
      for (const auto& fa : c.factors) CHECK(fa.system != SimpleRootSystem{Family::D, 4});
    }
  }
}

TEST_CASE("odd relative dimension type IV candidates avoid power-of-two special linear ranks") {
  for (const auto& f : fx::all_valid_descriptors(5)) {
    if (f.albert_type != AlbertType::IV || f.is_cm) continue;
    if (relative_dimension(f) % 2 == 0) continue;
    const ModelSet ms = build_model_set(f);
    REQUIRE(ms.classified);
    for (const auto& c : ms.candidates) {
      CHECK(c.center_rank >= 1);
      for (const auto& fa : c.factors) {
        CHECK(fa.system.family == Family::A);
        CHECK_FALSE(is_power_of_two(fa.system.rank + 1));
        CHECK(has_odd_dimensional_nontrivial_minuscule(fa.system));
      }
    }
  }
}

TEST_CASE("general Lefschetz shapes") {
  GroupModelCandidate c;
  c.factors = {{{Family::C, 3}, {{{1}, 2}}}};
  CHECK(is_general_lefschetz(c));

  c.factors = {{{Family::A, 3}, {{{2}, 1}}}};
  CHECK(is_general_lefschetz(c));

  c.factors = {{{Family::A, 2}, {{{1}, 1}}}};
  CHECK_FALSE(is_general_lefschetz(c));

  c.factors = {{{Family::B, 4}, {{{4}, 3}}}};
  CHECK(is_general_lefschetz(c));
  c.factors = {{{Family::B, 4}, {{{1}, 1}}}};
  CHECK_FALSE(is_general_lefschetz(c));

  c.factors = {{{Family::D, 5}, {{{1}, 2}}}};
  CHECK(is_general_lefschetz(c));

  c.factors = {{{Family::C, 3}, {{{1}, 2}}}};
  c.center_rank = 1;
  CHECK_FALSE(is_general_lefschetz(c));
  c.center_rank = 0;

  // The tensor candidate is not componentwise.
  const auto sl2cubed = build_model_set(fx::fourfold_end_z("F")).candidates[1];
  CHECK_FALSE(is_general_lefschetz(sl2cubed));
}

TEST_CASE("Hazama hypotheses") {
  GroupModelCandidate b2_standard;
  b2_standard.factors = {{{Family::B, 2}, {{{2}, 1}}}};
  GroupModelCandidate c3_standard;
  c3_standard.factors = {{{Family::C, 3}, {{{1}, 1}}}};
  CHECK(hazama_hypotheses_hold(b2_standard, c3_standard).ok());

  GroupModelCandidate d4;
  d4.factors = {{{Family::D, 4}, {{{1}, 2}}}};
  GroupModelCandidate d4_other = d4;
  const auto rep = hazama_hypotheses_hold(d4, d4_other);
  CHECK_FALSE(rep.ok());
  CHECK(rep.centers_trivial);
  CHECK(rep.componentwise_faithful);
  CHECK_FALSE(rep.weight_condition);

  // D5 standard is fine: the diagram flip fixes w1.
  GroupModelCandidate d5;
  d5.factors = {{{Family::D, 5}, {{{1}, 1}}}};
  CHECK(hazama_hypotheses_hold(d5, d5).ok());

  // Same system through different weight classes fails.
  GroupModelCandidate a3_mid, a3_std;
  a3_mid.factors = {{{Family::A, 3}, {{{2}, 1}}}};
  a3_std.factors = {{{Family::A, 3}, {{{1}, 1}}}};
  CHECK_FALSE(hazama_hypotheses_hold(a3_mid, a3_std).ok());
  CHECK(hazama_hypotheses_hold(a3_mid, a3_mid).ok());

  // Nontrivial centers break hypothesis 1.
  GroupModelCandidate iv = build_model_set(fx::iv_threefold("Y")).candidates[0];
  CHECK_FALSE(hazama_hypotheses_hold(iv, c3_standard).ok());

  // Tensor blocks break hypothesis 2.
  const auto sl2cubed = build_model_set(fx::fourfold_end_z("F")).candidates[1];
  GroupModelCandidate a1;
  a1.factors = {{{Family::A, 1}, {{{1}, 1}}}};
  CHECK_FALSE(hazama_hypotheses_hold(sl2cubed, a1).ok());
}

TEST_CASE("shared simple factor types") {
  GroupModelCandidate c4, a2, a3a, a3b, a1;
  c4.factors = {{{Family::C, 4}, {{{1}, 1}}}};
  a2.factors = {{{Family::A, 2}, {{{1}, 1}}}};
  a3a.factors = {{{Family::A, 3}, {{{1}, 1}}}};
  a3b.factors = {{{Family::A, 3}, {{{2}, 1}}}};
  a1.factors = {{{Family::A, 1}, {{{1}, 1}}}};
  CHECK_FALSE(shares_simple_factor_type(c4, a2));
  CHECK(shares_simple_factor_type(a3a, a3b));

  // Normalization makes the C1 = A1 coincidence visible.
  const auto surface = build_model_set(fx::type_ii_surface("X")).candidates[0];
  CHECK(shares_simple_factor_type(surface, a1));
}

TEST_CASE("build_model_set rejects invalid descriptors") {
  FactorDescriptor bad = fx::elliptic("E");
  bad.d = 3;
  CHECK_THROWS_AS(build_model_set(bad), std::invalid_argument);
}
