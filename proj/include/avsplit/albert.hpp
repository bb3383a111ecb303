#pragma once

#include <string>
#include <vector>

namespace avsplit {

enum class AlbertType { I, II, III, IV };

std::string to_string(AlbertType t);
AlbertType albert_type_from_string(const std::string& s);

// Arithmetic invariants of one absolutely simple factor:
//   dimension  g
//   e          degree over Q of the center E of the endomorphism algebra
//   d          square root of the degree of the endomorphism algebra over E
//   e0         degree of the maximal totally real subfield of E
// Factors are declared pairwise non-isogenous by being listed under
// distinct labels; that declaration is an input hypothesis, not derived.
struct FactorDescriptor {
  std::string label;
  long long dimension = 1;
  AlbertType albert_type = AlbertType::I;
  long long e = 1;
  long long d = 1;
  long long e0 = 1;
  bool is_cm = false;
  bool trivial_endomorphisms = false;
  long long multiplicity = 1;

  friend bool operator==(const FactorDescriptor&, const FactorDescriptor&) = default;
};

// Base-field data. `ordinary_reduction_dim1` is only meaningful in
// characteristic p and asserts the hypothesis for every factor at once.
struct FieldContext {
  long long characteristic = 0;
  bool ordinary_reduction_dim1 = false;

  bool positive_characteristic() const { return characteristic > 0; }

  friend bool operator==(const FieldContext&, const FieldContext&) = default;
};

// dim/(d*e0); throws std::invalid_argument naming the violated invariant
// when the division is not exact.
long long relative_dimension(const FactorDescriptor& f);

// Every violated invariant, as human-readable strings; empty means ok.
// Characteristic-zero-only existence facts are checked when
// ctx.characteristic == 0.
std::vector<std::string> validate(const FactorDescriptor& f, const FieldContext& ctx = {});

std::vector<std::string> validate_context(const FieldContext& ctx);

}  // namespace avsplit
