#pragma once

// Shared descriptor fixtures for the test and acceptance suites.

#include <string>
#include <vector>

#include "avsplit/albert.hpp"

namespace fx {

using avsplit::AlbertType;
using avsplit::FactorDescriptor;

inline FactorDescriptor elliptic(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 1;
  f.albert_type = AlbertType::I;
  f.trivial_endomorphisms = true;
  return f;
}

inline FactorDescriptor cm_factor(std::string label, long long g) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = g;
  f.albert_type = AlbertType::IV;
  f.e = 2 * g;
  f.e0 = g;
  f.d = 1;
  f.is_cm = true;
  return f;
}

inline FactorDescriptor cm_elliptic(std::string label) { return cm_factor(std::move(label), 1); }

inline FactorDescriptor type_ii_surface(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 2;
  f.albert_type = AlbertType::II;
  f.d = 2;
  return f;
}

inline FactorDescriptor surface_end_z(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 2;
  f.albert_type = AlbertType::I;
  f.trivial_endomorphisms = true;
  return f;
}

inline FactorDescriptor surface_real_quadratic(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 2;
  f.albert_type = AlbertType::I;
  f.e = f.e0 = 2;
  return f;
}

inline FactorDescriptor threefold_end_z(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 3;
  f.albert_type = AlbertType::I;
  f.trivial_endomorphisms = true;
  return f;
}

inline FactorDescriptor iv_threefold(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 3;
  f.albert_type = AlbertType::IV;
  f.e = 2;
  f.e0 = 1;
  return f;
}

inline FactorDescriptor ii_sixfold_h3(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 6;
  f.albert_type = AlbertType::II;
  f.d = 2;
  return f;  // relative dimension 3
}

inline FactorDescriptor fourfold_end_z(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 4;
  f.albert_type = AlbertType::I;
  f.trivial_endomorphisms = true;
  return f;
}

inline FactorDescriptor iv11_fourfold(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 4;
  f.albert_type = AlbertType::IV;
  f.e = 2;
  f.e0 = 1;
  return f;
}

inline FactorDescriptor iv21_fourfold(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 4;
  f.albert_type = AlbertType::IV;
  f.e = 4;
  f.e0 = 2;
  return f;
}

inline FactorDescriptor iii_fourfold(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 4;
  f.albert_type = AlbertType::III;
  f.d = 2;
  return f;
}

inline FactorDescriptor i2_fourfold(std::string label) {
  FactorDescriptor f;
  f.label = std::move(label);
  f.dimension = 4;
  f.albert_type = AlbertType::I;
  f.e = f.e0 = 2;
  return f;
}

namespace detail {

inline void enumerate_catalogs(const std::vector<FactorDescriptor>& shapes, std::size_t first,
                               long long budget, std::vector<FactorDescriptor>& acc,
                               std::vector<std::vector<FactorDescriptor>>& out) {
  if (!acc.empty()) out.push_back(acc);
  for (std::size_t i = first; i < shapes.size(); ++i) {
    if (shapes[i].dimension > budget) continue;
    FactorDescriptor f = shapes[i];
    f.label = "g" + std::to_string(acc.size());
    acc.push_back(f);
    enumerate_catalogs(shapes, i, budget - shapes[i].dimension, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// Every validate-clean descriptor shape with dimension <= max_g, flags
// derived from the invariants (End = Z iff type I with e = 1; CM iff type
// IV with e = 2*dim).
inline std::vector<FactorDescriptor> all_valid_descriptors(long long max_g) {
  std::vector<FactorDescriptor> out;
  int counter = 0;
  for (long long g = 1; g <= max_g; ++g) {
    for (AlbertType type : {AlbertType::I, AlbertType::II, AlbertType::III, AlbertType::IV}) {
      for (long long e0 = 1; e0 <= g; ++e0) {
        for (long long d = 1; d * e0 <= g; ++d) {
          FactorDescriptor f;
          f.dimension = g;
          f.albert_type = type;
          f.d = d;
          f.e0 = e0;
          f.e = type == AlbertType::IV ? 2 * e0 : e0;
          f.is_cm = type == AlbertType::IV && f.e == 2 * g;
          f.trivial_endomorphisms = type == AlbertType::I && f.e == 1;
          f.label = "f" + std::to_string(counter);
          if (avsplit::validate(f).empty()) {
            ++counter;
            out.push_back(f);
          }
        }
      }
    }
  }
  return out;
}

// All multisets of valid descriptor shapes with total dimension (at
// multiplicity one) at most max_total; labels made unique per catalog.
inline std::vector<std::vector<FactorDescriptor>> all_catalogs(long long max_total) {
  const auto shapes = all_valid_descriptors(max_total);
  std::vector<FactorDescriptor> acc;
  std::vector<std::vector<FactorDescriptor>> out;
  detail::enumerate_catalogs(shapes, 0, max_total, acc, out);
  return out;
}

inline bool same_shape(const FactorDescriptor& a, const FactorDescriptor& b) {
  return a.dimension == b.dimension && a.albert_type == b.albert_type && a.e == b.e &&
         a.d == b.d && a.e0 == b.e0 && a.is_cm == b.is_cm &&
         a.trivial_endomorphisms == b.trivial_endomorphisms;
}

}  // namespace fx
