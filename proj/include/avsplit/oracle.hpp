#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "avsplit/rational.hpp"

namespace avsplit {

// Lie subalgebra of gl(V_1) + ... + gl(V_n) given by a linearly independent
// bracket-closed basis of block-diagonal matrices.
struct BlockAlgebra {
  std::vector<int> block_dims;
  std::vector<QMatrix> basis;  // block-diagonal, ambient size = sum of dims

  int ambient_dim() const;
  int dimension() const { return static_cast<int>(basis.size()); }
};

// Builds a block-diagonal ambient matrix from per-block pieces.
QMatrix assemble_blocks(const std::vector<int>& block_dims, const std::vector<QMatrix>& pieces);

// Extracts one diagonal block.
QMatrix block_of(const QMatrix& m, const std::vector<int>& block_dims, int block);

// Smallest bracket-closed subspace containing the generators.
// Throws std::invalid_argument on dimension mismatches.
BlockAlgebra bracket_closure(const std::vector<QMatrix>& generators, const std::vector<int>& block_dims);

// Dimension of the image of the algebra under projection to the selected
// blocks (0-based indices).
int projection_dimension(const BlockAlgebra& g, const std::vector<int>& blocks);

struct Commutant {
  int dimension = 0;
  std::vector<QMatrix> basis;  // full ambient endomorphisms, not block-diagonal
};

// All X in gl(V_1 + ... + V_n) with [X, b] = 0 for every basis element.
Commutant commutant(const BlockAlgebra& g);

struct RibetReport {
  std::vector<bool> projection_simple;          // per block
  bool preconditions_ok = false;
  std::map<std::pair<int, int>, bool> condition_a_pairs;
  bool condition_a = false;
  std::map<std::pair<int, int>, bool> condition_b1_pairs;  // only pairs with equal-dimensional projections
  bool condition_b1 = false;
  std::map<std::pair<int, int>, int> intertwiner_dims;
  bool condition_b2 = false;
  bool conclusion = false;  // dim g == sum of dim g_i
  bool b_implies_a = false;
  bool a_implies_conclusion = false;
};

// Evaluates the splitting criterion on a concrete algebra: condition (a)
// via pairwise projection dimensions, (b1) via intertwiner systems between
// blocks with equal-dimensional (candidate-isomorphic) projections, (b2) by
// comparing commutants with per-block commutants, and the conclusion
// dim g = sum dim g_i.
RibetReport verify_ribet(const BlockAlgebra& g);

// Text fixture format, one or more of:
//   fixture <name>
//   blocks <d1> <d2> ...
//   gen <block1 entries, rows ';'-separated> | <block2 entries> | ...
//   end
// '#' starts a comment. Entries are rationals like "-1/2".
struct Fixture {
  std::string name;
  std::vector<int> block_dims;
  std::vector<QMatrix> generators;  // assembled, ambient size
};

std::vector<Fixture> parse_fixtures(std::istream& in);

// The deterministic standard fixtures used by the test and acceptance
// suites, in the text format above.
std::string standard_fixture_text();

}  // namespace avsplit
