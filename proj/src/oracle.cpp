#include "avsplit/oracle.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace avsplit {

int BlockAlgebra::ambient_dim() const {
  return std::accumulate(block_dims.begin(), block_dims.end(), 0);
}

namespace {

std::vector<int> block_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

void check_block_diagonal(const QMatrix& m, const std::vector<int>& dims) {
  const auto off = block_offsets(dims);
  const int n = off.back();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("matrix size does not match the block dimensions");
  for (std::size_t b = 0; b < dims.size(); ++b)
    for (int i = 0; i < n; ++i)
      for (int j = off[b]; j < off[b + 1]; ++j)
        if ((i < off[b] || i >= off[b + 1]) && m.at(i, j).numerator() != 0)
          throw std::invalid_argument("generator is not block-diagonal");
}

// Coordinates of the block-diagonal part (the only nonzero entries).
std::vector<Rational> vectorize_blocks(const QMatrix& m, const std::vector<int>& dims,
                                       const std::vector<int>& selected) {
  const auto off = block_offsets(dims);
  std::vector<Rational> v;
  for (int b : selected)
    for (int i = off[b]; i < off[b + 1]; ++i)
      for (int j = off[b]; j < off[b + 1]; ++j) v.push_back(m.at(i, j));
  return v;
}

std::vector<int> all_blocks(const std::vector<int>& dims) {
  std::vector<int> v(dims.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int selected_vector_dim(const std::vector<int>& dims, const std::vector<int>& selected) {
  int n = 0;
  for (int b : selected) n += dims[b] * dims[b];
  return n;
}

// Commutant of a spanning set inside gl of the given total dimension.
Commutant commutant_of_set(const std::vector<QMatrix>& mats, int n) {
  // Unknowns X_{p,q}; for each basis element b and entry (i,j):
  //   sum_k X_{i,k} b_{k,j} - b_{i,k} X_{k,j} = 0.
  QMatrix system(static_cast<int>(mats.size()) * n * n, n * n);
  int row = 0;
  for (const auto& b : mats) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++row)
        for (int k = 0; k < n; ++k) {
          if (b.at(k, j).numerator() != 0) system.at(row, i * n + k) += b.at(k, j);
          if (b.at(i, k).numerator() != 0) system.at(row, k * n + j) -= b.at(i, k);
        }
  }
  Commutant out;
  for (const auto& x : kernel_basis(system)) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = x[static_cast<std::size_t>(i) * n + j];
    out.basis.push_back(std::move(m));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

// Restriction of the algebra to a sub-ambient space formed by a subset of
// blocks (still block-diagonal there).
std::vector<QMatrix> restrict_to_blocks(const BlockAlgebra& g, const std::vector<int>& selected) {
  const auto off = block_offsets(g.block_dims);
  std::vector<int> sub_off{0};
  for (int b : selected) sub_off.push_back(sub_off.back() + g.block_dims[b]);
  const int n = sub_off.back();
  std::vector<QMatrix> out;
  for (const auto& m : g.basis) {
    QMatrix r(n, n);
    for (std::size_t bi = 0; bi < selected.size(); ++bi) {
      const int b = selected[bi];
      for (int i = 0; i < g.block_dims[b]; ++i)
        for (int j = 0; j < g.block_dims[b]; ++j)
          r.at(sub_off[bi] + i, sub_off[bi] + j) = m.at(off[b] + i, off[b] + j);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

QMatrix assemble_blocks(const std::vector<int>& block_dims, const std::vector<QMatrix>& pieces) {
  if (pieces.size() != block_dims.size())
    throw std::invalid_argument("need one piece per block");
  const auto off = block_offsets(block_dims);
  QMatrix m(off.back(), off.back());
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    if (pieces[b].rows() != block_dims[b] || pieces[b].cols() != block_dims[b])
      throw std::invalid_argument("piece size does not match its block");
    for (int i = 0; i < block_dims[b]; ++i)
      for (int j = 0; j < block_dims[b]; ++j) m.at(off[b] + i, off[b] + j) = pieces[b].at(i, j);
  }
  return m;
}

QMatrix block_of(const QMatrix& m, const std::vector<int>& block_dims, int block) {
  const auto off = block_offsets(block_dims);
  QMatrix out(block_dims[block], block_dims[block]);
  for (int i = 0; i < block_dims[block]; ++i)
    for (int j = 0; j < block_dims[block]; ++j) out.at(i, j) = m.at(off[block] + i, off[block] + j);
  return out;
}

BlockAlgebra bracket_closure(const std::vector<QMatrix>& generators, const std::vector<int>& block_dims) {
  const auto off = block_offsets(block_dims);
  if (off.back() < 1 || off.back() > 64)
    throw std::invalid_argument("total block dimension must be between 1 and 64");
  for (const auto& g : generators) check_block_diagonal(g, block_dims);

  BlockAlgebra out;
  out.block_dims = block_dims;
  const auto all = all_blocks(block_dims);
  SpanBuilder span(selected_vector_dim(block_dims, all));

  std::vector<QMatrix> worklist;
  for (const auto& g : generators)
    if (span.add(vectorize_blocks(g, block_dims, all))) {
      out.basis.push_back(g);
      worklist.push_back(g);
    }

  while (!worklist.empty()) {
    QMatrix x = std::move(worklist.back());
    worklist.pop_back();
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      QMatrix br = bracket(x, out.basis[i]);
      if (br.is_zero()) continue;
      if (span.add(vectorize_blocks(br, block_dims, all))) {
        out.basis.push_back(br);
        worklist.push_back(std::move(br));
      }
    }
  }
  return out;
}

int projection_dimension(const BlockAlgebra& g, const std::vector<int>& blocks) {
  for (int b : blocks)
    if (b < 0 || b >= static_cast<int>(g.block_dims.size()))
      throw std::invalid_argument("block index out of range");
  SpanBuilder span(selected_vector_dim(g.block_dims, blocks));
  for (const auto& m : g.basis) span.add(vectorize_blocks(m, g.block_dims, blocks));
  return span.rank();
}

Commutant commutant(const BlockAlgebra& g) { return commutant_of_set(g.basis, g.ambient_dim()); }

namespace {

struct BlockProjection {
  std::vector<QMatrix> matrices;  // spanning set of pi_b(g), one per algebra basis element
  std::vector<QMatrix> basis;     // linearly independent subset
  int dimension = 0;
};

BlockProjection project_block(const BlockAlgebra& g, int b) {
  BlockProjection p;
  const int d = g.block_dims[b];
  SpanBuilder span(d * d);
  for (const auto& m : g.basis) {
    QMatrix piece = block_of(m, g.block_dims, b);
    if (span.add(vectorize_blocks(piece, {d}, {0}))) p.basis.push_back(piece);
    p.matrices.push_back(std::move(piece));
  }
  p.dimension = static_cast<int>(p.basis.size());
  return p;
}

std::vector<Rational> solve_exact(QMatrix a, std::vector<Rational> rhs) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (a.at(i, col).numerator() != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) {
      for (int j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(pr, j));
      std::swap(rhs[row], rhs[pr]);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == row || a.at(i, col).numerator() == 0) continue;
      Rational f = a.at(i, col) / a.at(row, col);
      for (int j = col; j < cols; ++j) a.at(i, j) -= f * a.at(row, j);
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (rhs[i].numerator() != 0) throw std::invalid_argument("inconsistent linear system");
  std::vector<Rational> x(cols, Rational(0));
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = rhs[i] / a.at(i, pivot_col[i]);
  return x;
}

// Simplicity test used as the lemma's precondition: trivial center,
// perfectness, and 1-dimensional commutant of the adjoint action.
bool projection_is_simple(const BlockProjection& p, int block_dim) {
  const int m = p.dimension;
  if (m == 0) return false;

  // Center: c with sum_k c_k [b_k, b_j] = 0 for all j.
  QMatrix center_system(m * block_dim * block_dim, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      QMatrix br = bracket(p.basis[k], p.basis[j]);
      for (int r = 0; r < block_dim; ++r)
        for (int c = 0; c < block_dim; ++c)
          center_system.at(j * block_dim * block_dim + r * block_dim + c, k) = br.at(r, c);
    }
  if (!kernel_basis(center_system).empty()) return false;

  // Perfectness: brackets span the algebra.
  SpanBuilder derived(block_dim * block_dim);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      derived.add(vectorize_blocks(bracket(p.basis[j], p.basis[k]), {block_dim}, {0}));
  if (derived.rank() != m) return false;

  // Structure constants, then the commutant of the adjoint representation.
  QMatrix coords(block_dim * block_dim, m);
  for (int k = 0; k < m; ++k) {
    const auto v = vectorize_blocks(p.basis[k], {block_dim}, {0});
    for (std::size_t i = 0; i < v.size(); ++i) coords.at(static_cast<int>(i), k) = v[i];
  }
  std::vector<QMatrix> ad(m, QMatrix(m, m));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      const auto v = vectorize_blocks(bracket(p.basis[k], p.basis[j]), {block_dim}, {0});
      std::vector<Rational> rhs(v.begin(), v.end());
      const auto x = solve_exact(coords, rhs);
      for (int i = 0; i < m; ++i) ad[k].at(i, j) = x[i];
    }
  return commutant_of_set(ad, m).dimension == 1;
}

// Nonzero chi with chi * pi_i(b) = pi_j(b) * chi for every basis element.
int intertwiner_dimension(const BlockAlgebra& g, int i, int j) {
  const int di = g.block_dims[i], dj = g.block_dims[j];
  QMatrix system(static_cast<int>(g.basis.size()) * dj * di, dj * di);
  int row = 0;
  for (const auto& m : g.basis) {
    QMatrix bi = block_of(m, g.block_dims, i);
    QMatrix bj = block_of(m, g.block_dims, j);
    // chi: V_i -> V_j is dj x di; equation entry (r, c).
    for (int r = 0; r < dj; ++r)
      for (int c = 0; c < di; ++c, ++row) {
        for (int k = 0; k < di; ++k)
          if (bi.at(k, c).numerator() != 0) system.at(row, r * di + k) += bi.at(k, c);
        for (int k = 0; k < dj; ++k)
          if (bj.at(r, k).numerator() != 0) system.at(row, k * di + c) -= bj.at(r, k);
      }
  }
  return static_cast<int>(kernel_basis(system).size());
}

}  // namespace

RibetReport verify_ribet(const BlockAlgebra& g) {
  const int n = static_cast<int>(g.block_dims.size());
  RibetReport rep;

  std::vector<BlockProjection> proj;
  for (int b = 0; b < n; ++b) proj.push_back(project_block(g, b));

  rep.projection_simple.resize(n);
  rep.preconditions_ok = true;
  for (int b = 0; b < n; ++b) {
    rep.projection_simple[b] = projection_is_simple(proj[b], g.block_dims[b]);
    if (!rep.projection_simple[b]) rep.preconditions_ok = false;
  }

  int sum_dims = 0;
  for (const auto& p : proj) sum_dims += p.dimension;
  rep.conclusion = g.dimension() == sum_dims;

  rep.condition_a = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool onto = projection_dimension(g, {i, j}) == proj[i].dimension + proj[j].dimension;
      rep.condition_a_pairs[{i, j}] = onto;
      if (!onto) rep.condition_a = false;
    }

  rep.condition_b1 = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (proj[i].dimension != proj[j].dimension) continue;  // not candidate-isomorphic
      const int dim = intertwiner_dimension(g, i, j);
      rep.intertwiner_dims[{i, j}] = dim;
      const bool has_common_module = dim > 0;
      rep.condition_b1_pairs[{i, j}] = has_common_module;
      if (!has_common_module) rep.condition_b1 = false;
    }

  rep.condition_b2 = true;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cls;
    for (int j = 0; j < n; ++j)
      if (proj[j].dimension == proj[i].dimension) {
        cls.push_back(j);
        seen[j] = true;
      }
    BlockAlgebra sub;
    for (int b : cls) sub.block_dims.push_back(g.block_dims[b]);
    sub.basis = restrict_to_blocks(g, cls);
    const int joint = commutant_of_set(sub.basis, sub.ambient_dim()).dimension;
    int per_block = 0;
    for (int b : cls) per_block += commutant_of_set(proj[b].matrices, g.block_dims[b]).dimension;
    if (joint != per_block) rep.condition_b2 = false;
  }

  rep.b_implies_a = !(rep.condition_b1 && rep.condition_b2) || rep.condition_a;
  rep.a_implies_conclusion = !rep.condition_a || rep.conclusion;
  return rep;
}

namespace {

QMatrix parse_block_text(const std::string& text, int expected_dim, const std::string& where) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream row_stream(text);
  std::string row_text;
  while (std::getline(row_stream, row_text, ';')) {
    std::vector<Rational> row;
    std::stringstream entry_stream(row_text);
    std::string entry;
    while (entry_stream >> entry) row.push_back(parse_rational(entry));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != expected_dim)
    throw std::invalid_argument(where + ": expected " + std::to_string(expected_dim) + " rows");
  QMatrix m(expected_dim, expected_dim);
  for (int i = 0; i < expected_dim; ++i) {
    if (static_cast<int>(rows[i].size()) != expected_dim)
      throw std::invalid_argument(where + ": expected " + std::to_string(expected_dim) + " entries per row");
    for (int j = 0; j < expected_dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

std::vector<Fixture> parse_fixtures(std::istream& in) {
  std::vector<Fixture> out;
  Fixture current;
  bool open = false;
  std::string line;
  int lineno = 0;

  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;

    if (keyword == "fixture") {
      if (open) fail("previous fixture not closed with \"end\"");
      current = Fixture{};
      if (!(ss >> current.name)) fail("fixture needs a name");
      open = true;
    } else if (keyword == "blocks") {
      if (!open) fail("\"blocks\" outside a fixture");
      int d;
      while (ss >> d) {
        if (d < 1) fail("block dimensions must be positive");
        current.block_dims.push_back(d);
      }
      if (current.block_dims.empty()) fail("\"blocks\" needs at least one dimension");
    } else if (keyword == "gen") {
      if (!open) fail("\"gen\" outside a fixture");
      if (current.block_dims.empty()) fail("\"gen\" before \"blocks\"");
      std::string rest;
      std::getline(ss, rest);
      std::vector<QMatrix> pieces;
      std::stringstream piece_stream(rest);
      std::string piece;
      std::size_t b = 0;
      while (std::getline(piece_stream, piece, '|')) {
        if (b >= current.block_dims.size()) fail("more pieces than blocks");
        pieces.push_back(parse_block_text(piece, current.block_dims[b],
                                          "fixture line " + std::to_string(lineno)));
        ++b;
      }
      if (b != current.block_dims.size()) fail("fewer pieces than blocks");
      current.generators.push_back(assemble_blocks(current.block_dims, pieces));
    } else if (keyword == "end") {
      if (!open) fail("\"end\" outside a fixture");
      if (current.generators.empty()) fail("fixture has no generators");
      out.push_back(std::move(current));
      open = false;
    } else {
      fail("unknown keyword \"" + keyword + "\"");
    }
  }
  if (open) fail("unterminated fixture");
  return out;
}

std::string standard_fixture_text() {
  return R"(# Deterministic verification instances for the splitting criterion.

fixture single_sl2
blocks 2
gen 0 1; 0 0
gen 0 0; 1 0
end

fixture diag_sl2
blocks 2 2
gen 0 1; 0 0 | 0 1; 0 0
gen 0 0; 1 0 | 0 0; 1 0
end

fixture full_sl2_sl2
blocks 2 2
gen 0 1; 0 0 | 0 0; 0 0
gen 0 0; 1 0 | 0 0; 0 0
gen 0 0; 0 0 | 0 1; 0 0
gen 0 0; 0 0 | 0 0; 1 0
end

fixture diag_sl2_three_blocks
blocks 2 2 2
gen 0 1; 0 0 | 0 1; 0 0 | 0 1; 0 0
gen 0 0; 1 0 | 0 0; 1 0 | 0 0; 1 0
end

fixture sl2_plus_diag_pair
blocks 2 2 2
gen 0 1; 0 0 | 0 0; 0 0 | 0 0; 0 0
gen 0 0; 1 0 | 0 0; 0 0 | 0 0; 0 0
gen 0 0; 0 0 | 0 1; 0 0 | 0 1; 0 0
gen 0 0; 0 0 | 0 0; 1 0 | 0 0; 1 0
end

# Graph of x -> -x^T on sl3, acting on Std (+) Dual(Std).
fixture sl3_std_dual_twist
blocks 3 3
gen 0 1 0; 0 0 0; 0 0 0 | 0 0 0; -1 0 0; 0 0 0
gen 0 0 0; 0 0 1; 0 0 0 | 0 0 0; 0 0 0; 0 -1 0
gen 0 0 0; 1 0 0; 0 0 0 | 0 -1 0; 0 0 0; 0 0 0
gen 0 0 0; 0 0 0; 0 1 0 | 0 0 0; 0 0 -1; 0 0 0
end

fixture full_sl2_sl3
blocks 2 3
gen 0 1; 0 0 | 0 0 0; 0 0 0; 0 0 0
gen 0 0; 1 0 | 0 0 0; 0 0 0; 0 0 0
gen 0 0; 0 0 | 0 1 0; 0 0 0; 0 0 0
gen 0 0; 0 0 | 0 0 0; 0 0 1; 0 0 0
gen 0 0; 0 0 | 0 0 0; 1 0 0; 0 0 0
gen 0 0; 0 0 | 0 0 0; 0 0 0; 0 1 0
end
)";
}

}  // namespace avsplit
