#include "avsplit/albert.hpp"

#include <stdexcept>

namespace avsplit {

std::string to_string(AlbertType t) {
  switch (t) {
    case AlbertType::I: return "I";
    case AlbertType::II: return "II";
    case AlbertType::III: return "III";
    case AlbertType::IV: return "IV";
  }
  return "?";
}

AlbertType albert_type_from_string(const std::string& s) {
  if (s == "I") return AlbertType::I;
  if (s == "II") return AlbertType::II;
  if (s == "III") return AlbertType::III;
  if (s == "IV") return AlbertType::IV;
  throw std::invalid_argument("unknown Albert type \"" + s + "\" (expected I, II, III or IV)");
}

long long relative_dimension(const FactorDescriptor& f) {
  if (f.d < 1 || f.e0 < 1 || f.dimension < 1)
    throw std::invalid_argument("relative_dimension: d, e0 and dim must be positive");
  if (f.dimension % (f.d * f.e0) != 0)
    throw std::invalid_argument("relative_dimension: d*e0 = " + std::to_string(f.d * f.e0) +
                                " does not divide dim = " + std::to_string(f.dimension) +
                                " (factor \"" + f.label + "\")");
  return f.dimension / (f.d * f.e0);
}

std::vector<std::string> validate_context(const FieldContext& ctx) {
  std::vector<std::string> v;
  if (ctx.characteristic < 0) {
    v.push_back("characteristic must be 0 or a prime");
    return v;
  }
  if (ctx.characteristic > 0) {
    long long p = ctx.characteristic;
    bool prime = p >= 2;
    for (long long q = 2; q * q <= p && prime; ++q)
      if (p % q == 0) prime = false;
    if (!prime) v.push_back("characteristic " + std::to_string(p) + " is not prime");
  }
  return v;
}

std::vector<std::string> validate(const FactorDescriptor& f, const FieldContext& ctx) {
  std::vector<std::string> v;
  const long long g = f.dimension;

  if (g < 1) v.push_back("dimension must be positive");
  if (f.e < 1 || f.d < 1 || f.e0 < 1) v.push_back("e, d and e0 must be positive");
  if (f.multiplicity < 1) v.push_back("multiplicity must be positive");
  if (!v.empty()) return v;

  switch (f.albert_type) {
    case AlbertType::I:
      if (f.d != 1) v.push_back("type I requires d = 1");
      break;
    case AlbertType::II:
    case AlbertType::III:
      if (f.d != 2) v.push_back("type " + to_string(f.albert_type) + " requires d = 2");
      break;
    case AlbertType::IV:
      break;
  }

  if (f.albert_type == AlbertType::IV) {
    if (f.e != 2 * f.e0) v.push_back("type IV requires e = 2*e0 (E is a CM field)");
  } else {
    if (f.e0 != f.e) v.push_back("types I, II, III require e0 = e (E totally real)");
  }

  if (g % (f.d * f.e0) != 0) {
    v.push_back("d*e0 must divide dim (relative dimension would not be an integer)");
    return v;
  }
  const long long h = g / (f.d * f.e0);

  // CM means the endomorphism algebra contains a commutative field of
  // degree 2*dim; for an absolutely simple factor that forces type IV with
  // E itself of degree 2*dim and d = 1, and conversely.
  if (f.is_cm) {
    if (f.albert_type != AlbertType::IV) v.push_back("CM factors are of type IV");
    else if (f.e != 2 * g || f.d != 1) v.push_back("CM requires e = 2*dim and d = 1");
  } else if (f.albert_type == AlbertType::IV && f.e == 2 * g && f.d == 1) {
    v.push_back("type IV with e = 2*dim is CM; set cm = true");
  }

  if (f.trivial_endomorphisms) {
    if (f.albert_type != AlbertType::I || f.e != 1 || f.d != 1 || f.e0 != 1)
      v.push_back("trivial endomorphisms require type I with e = d = e0 = 1");
  } else if (f.albert_type == AlbertType::I && f.e == 1) {
    v.push_back("type I with e = 1 has trivial endomorphisms; set end_Z = true");
  }

  if (ctx.characteristic == 0) {
    // A torus-valued monodromy group means CM, so non-CM factors whose
    // standard module pieces are 1-dimensional cannot occur.
    if (f.albert_type == AlbertType::III && h == 1)
      v.push_back("type III with relative dimension 1 does not occur in char 0");
    if (f.albert_type == AlbertType::IV && !f.is_cm && h == 1)
      v.push_back("non-CM type IV with relative dimension 1 does not occur in char 0");
    if (f.albert_type == AlbertType::III && g == 2)
      v.push_back("type III surface impossible in char 0");
    if (f.albert_type == AlbertType::IV && g == 2 && f.e == 2)
      v.push_back("surface with imaginary quadratic field");
    // Classification of absolutely simple fourfolds: the type IV cases are
    // IV(1,1), IV(2,1) and the CM case IV(4,1), all with d = 1.
    if (f.albert_type == AlbertType::IV && g == 4 && f.d != 1)
      v.push_back("type IV fourfold with d > 1 does not occur");
  }

  return v;
}

}  // namespace avsplit
