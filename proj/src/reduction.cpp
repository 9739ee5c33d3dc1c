#include "slocc/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

using Index = std::vector<std::size_t>;

Index iota_index(std::size_t from, std::size_t to) {
  Index out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

bool is_normalized_first_slice(const Matrix& g1, std::size_t n) {
  for (std::size_t r = 0; r < g1.rows(); ++r)
    for (std::size_t c = 0; c < g1.cols(); ++c)
      if (g1(r, c) != GaussRat(r == c && r < n ? 1 : 0)) return false;
  return true;
}

// Working copy of a pair plus the accumulated row and column factors since
// the last checkpoint.
class Engine {
 public:
  explicit Engine(const MatrixPair& s)
      : g1_(s.gamma1()), g2_(s.gamma2()), p_(Matrix::identity(s.m())), q_(Matrix::identity(s.n())),
        transcript_(ReductionTranscript::identity(s.m(), s.n())) {}

  const Matrix& g1() const { return g1_; }
  const Matrix& g2() const { return g2_; }
  std::size_t rows() const { return g1_.rows(); }
  std::size_t cols() const { return g1_.cols(); }
  MatrixPair pair() const { return {g1_, g2_}; }

  void rows_transform(const Index& rows, const Matrix& g) {
    for (Matrix* m : {&g1_, &g2_, &p_}) {
      Matrix sub = g * m->select(rows, iota_index(0, m->cols()));
      for (std::size_t k = 0; k < rows.size(); ++k) m->set_block(rows[k], 0, sub.block(k, 0, 1, m->cols()));
    }
  }

  void cols_transform(const Index& cols, const Matrix& c) {
    for (Matrix* m : {&g1_, &g2_, &q_}) {
      Matrix sub = m->select(iota_index(0, m->rows()), cols) * c;
      for (std::size_t k = 0; k < cols.size(); ++k) m->set_block(0, cols[k], sub.block(0, k, m->rows(), 1));
    }
  }

  void similarity(const Index& coords, const Matrix& g, const Matrix& g_inv) {
    rows_transform(coords, g);
    cols_transform(coords, g_inv);
  }

  // row_i += a * row_j, then col_j -= a * col_i
  void elementary_similarity(std::size_t i, std::size_t j, const GaussRat& a) {
    for (Matrix* m : {&g1_, &g2_, &p_})
      for (std::size_t c = 0; c < m->cols(); ++c)
        if (!(*m)(j, c).is_zero()) (*m)(i, c) += a * (*m)(j, c);
    for (Matrix* m : {&g1_, &g2_, &q_})
      for (std::size_t r = 0; r < m->rows(); ++r)
        if (!(*m)(r, i).is_zero()) (*m)(r, j) -= a * (*m)(r, i);
  }

  // col_dst += a * col_src
  void add_col(std::size_t dst, std::size_t src, const GaussRat& a) {
    for (Matrix* m : {&g1_, &g2_, &q_})
      for (std::size_t r = 0; r < m->rows(); ++r)
        if (!(*m)(r, src).is_zero()) (*m)(r, dst) += a * (*m)(r, src);
  }

  void permute(const Index& row_order, const Index& col_order) {
    g1_ = g1_.select(row_order, col_order);
    g2_ = g2_.select(row_order, col_order);
    p_ = p_.select(row_order, iota_index(0, p_.cols()));
    q_ = q_.select(iota_index(0, q_.rows()), col_order);
  }

  void checkpoint() {
    IloTriple step{Matrix::identity(2), p_, q_};
    if (!step.is_identity()) transcript_.append(step);
    p_ = Matrix::identity(rows());
    q_ = Matrix::identity(cols());
  }

  const ReductionTranscript& transcript() {
    checkpoint();
    return transcript_;
  }

 private:
  Matrix g1_, g2_, p_, q_;
  ReductionTranscript transcript_;
};

struct Staircase {
  std::vector<Index> levels;
  std::map<std::size_t, std::size_t> link;  // staircase coordinate -> column it is linked to
  Index residual;
  Index inputs;
};

std::size_t level_step(Engine& e, Staircase& st, const WorkingBlock& wb);

// Apply the column change c to a full staircase level, compensating down the
// linked coordinates so that every earlier identity link is restored.
void cascade(Engine& e, const Staircase& st, Index coords, const Matrix& c) {
  Matrix c_inv = invert(c);
  for (std::size_t depth = st.levels.size(); depth-- > 0;) {
    e.similarity(coords, c_inv, c);
    Index below;
    for (std::size_t x : coords) below.push_back(st.link.at(x));
    if (depth == 0) {
      e.cols_transform(below, c);
      return;
    }
    coords = std::move(below);
  }
}

std::size_t level_step(Engine& e, Staircase& st, const WorkingBlock& wb) {
  const Index& w = wb.coords;
  const Index& bc = wb.link_cols;
  if (w.empty() || bc.empty()) return 0;
  RrefResult rr = rref_with_transform(e.g2().select(w, bc));
  const std::size_t r = rr.pivots.size();
  if (r == 0) return 0;
  const std::size_t nw = w.size(), nb = bc.size();

  Index order = iota_index(r, nw);
  for (std::size_t k = 0; k < r; ++k) order.push_back(k);
  Matrix row_change = rr.row_ops.select(order, iota_index(0, nw));

  Matrix kernel = nullspace(rr.reduced.block(0, 0, r, nb));
  Matrix col_change(nb, nb);
  col_change.set_block(0, 0, kernel);
  for (std::size_t k = 0; k < r; ++k) col_change(rr.pivots[k], nb - r + k) = 1;

  e.similarity(w, row_change, invert(row_change));
  if (st.levels.empty()) {
    e.cols_transform(bc, col_change);
  } else {
    cascade(e, st, bc, col_change);
  }

  Index level(w.end() - static_cast<std::ptrdiff_t>(r), w.end());
  for (std::size_t k = 0; k < r; ++k) st.link[level[k]] = bc[nb - r + k];
  st.levels.push_back(level);
  st.residual.assign(w.begin(), w.end() - static_cast<std::ptrdiff_t>(r));
  return r;
}

WorkingBlock next_block(const Staircase& st) {
  WorkingBlock wb{st.residual, st.levels.empty() ? st.inputs : st.levels.back(), false};
  wb.terminal = wb.coords.empty() || wb.link_cols.empty();
  return wb;
}

// Zero every non-link entry of the staircase rows, deepest level first.
void cleanup(Engine& e, const Staircase& st, const Index& state) {
  for (std::size_t lv = st.levels.size(); lv-- > 1;) {
    for (std::size_t x : st.levels[lv]) {
      std::size_t t = st.link.at(x);
      for (std::size_t j : state) {
        if (j == t || e.g2()(x, j).is_zero()) continue;
        GaussRat a = e.g2()(x, j);
        e.elementary_similarity(t, j, a);
      }
    }
  }
  if (st.levels.empty()) return;
  for (std::size_t x : st.levels[0]) {
    std::size_t b = st.link.at(x);
    for (std::size_t j : state) {
      if (e.g2()(x, j).is_zero()) continue;
      GaussRat a = e.g2()(x, j);
      e.add_col(j, b, -a);
    }
  }
  for (const auto& lv : st.levels)
    for (std::size_t x : lv)
      for (std::size_t c = 0; c < e.cols(); ++c)
        if (e.g2()(x, c) != GaussRat(c == st.link.at(x) ? 1 : 0)) {
          throw UnsupportedStructure("staircase cleanup left a non-link entry");
        }
}

Staircase column_staircase(Engine& e, const Index& state, const Index& inputs) {
  Staircase st;
  st.residual = state;
  st.inputs = inputs;
  for (;;) {
    WorkingBlock wb = next_block(st);
    if (wb.terminal) break;
    std::size_t r = level_step(e, st, wb);
    e.checkpoint();
    if (r == 0) break;
  }
  cleanup(e, st, state);
  e.checkpoint();
  return st;
}

// Chains of linked coordinates hanging off each input column, ordered by
// ascending length (stable in input order).
std::vector<std::pair<std::size_t, Index>> chains_of(const Staircase& st) {
  std::map<std::size_t, std::size_t> linked_by;
  for (const auto& [x, t] : st.link) linked_by[t] = x;
  std::vector<std::pair<std::size_t, Index>> chains;
  for (std::size_t b : st.inputs) {
    Index chain;
    for (auto it = linked_by.find(b); it != linked_by.end(); it = linked_by.find(it->second)) {
      chain.push_back(it->second);
    }
    chains.push_back({b, chain});
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  return chains;
}

std::vector<std::size_t> chain_lengths(const std::vector<std::pair<std::size_t, Index>>& chains) {
  std::vector<std::size_t> out;
  for (const auto& c : chains) out.push_back(c.second.size());
  return out;
}

// Coordinates of a chain family in block layout order: deepest level first.
Index layout_order(const std::vector<std::pair<std::size_t, Index>>& chains) {
  std::size_t depth = 0;
  for (const auto& c : chains) depth = std::max(depth, c.second.size());
  Index out;
  for (std::size_t lv = depth; lv >= 1; --lv)
    for (const auto& c : chains)
      if (c.second.size() >= lv) out.push_back(c.second[lv - 1]);
  return out;
}

std::vector<std::size_t> level_sizes(const Staircase& st) {
  std::vector<std::size_t> out;
  for (const auto& lv : st.levels) out.push_back(lv.size());
  return out;
}

void fill_deficiency(BlockNormalPair& b, std::size_t zero_rows, const std::vector<std::size_t>& row_levels) {
  DeficiencyInfo& d = b.deficiency;
  d.zero_rows = zero_rows;
  d.chain = row_levels;
  if (zero_rows > 0) {
    d.c_rank = static_cast<std::size_t>(
        std::count_if(b.column_indices.begin(), b.column_indices.end(), [](std::size_t e) { return e >= 2; }));
    d.r_rank = static_cast<std::size_t>(
        std::count_if(b.row_indices.begin(), b.row_indices.end(), [](std::size_t e) { return e >= 2; }));
  }
  d.c_case = d.c_rank > 0 ? CaseFlag::nonzero : CaseFlag::zero;
  d.r_case = d.r_rank > 0 ? CaseFlag::nonzero : CaseFlag::zero;
}

struct FullRun {
  Engine engine;
  Staircase cols;
  std::vector<std::pair<std::size_t, Index>> col_chains;
  std::vector<std::pair<std::size_t, Index>> row_chains;  // in full-pair indices; inputs are deficient rows
  std::vector<std::size_t> row_levels;
  Index residual;
};

std::size_t first_slice_rank(const MatrixPair& s) {
  std::size_t n = rank(s.gamma1());
  if (!is_normalized_first_slice(s.gamma1(), n)) {
    throw UnsupportedStructure("first slice is not in [[I, 0], [0, 0]] form");
  }
  return n;
}

FullRun run_both_staircases(const MatrixPair& s) {
  const std::size_t n = first_slice_rank(s);
  const std::size_t m = s.m(), cols = s.n();
  FullRun run{Engine(s), {}, {}, {}, {}, {}};
  Engine& e = run.engine;
  Index crows = iota_index(n, m);
  for (std::size_t r : crows)
    for (std::size_t c = n; c < cols; ++c)
      if (!e.g2()(r, c).is_zero()) throw UnsupportedStructure("pencil is not of constant rank on the input block");

  run.cols = column_staircase(e, iota_index(0, n), iota_index(n, cols));
  run.col_chains = chains_of(run.cols);
  const Index& w = run.cols.residual;

  Index level_coords;
  for (const auto& lv : run.cols.levels) level_coords.insert(level_coords.end(), lv.begin(), lv.end());
  for (std::size_t r : crows)
    for (std::size_t c : level_coords)
      if (!e.g2()(r, c).is_zero()) throw UnsupportedStructure("deficient rows meet the column staircase");

  Index sub_rows = w;
  sub_rows.insert(sub_rows.end(), crows.begin(), crows.end());
  MatrixPair sub(e.g1().select(sub_rows, w).transpose(), e.g2().select(sub_rows, w).transpose());
  Engine se(sub);
  Staircase rs = column_staircase(se, iota_index(0, w.size()), iota_index(w.size(), sub_rows.size()));
  IloTriple sub_total = se.transcript().composite;
  e.rows_transform(sub_rows, sub_total.q.transpose());
  e.cols_transform(w, sub_total.p.transpose());
  e.checkpoint();

  for (auto& [input, chain] : chains_of(rs)) {
    Index mapped;
    for (std::size_t x : chain) mapped.push_back(sub_rows[x]);
    run.row_chains.push_back({sub_rows[input], mapped});
  }
  run.row_levels = level_sizes(rs);
  for (std::size_t x : rs.residual) run.residual.push_back(sub_rows[x]);
  return run;
}

}  // namespace

IloTriple IloTriple::make(Matrix t, Matrix p, Matrix q) {
  if (t.rows() != 2 || !t.is_square() || !p.is_square() || !q.is_square()) {
    throw DimensionMismatch("ILO factors must be square with T of size 2");
  }
  if (determinant(t).is_zero() || determinant(p).is_zero() || determinant(q).is_zero()) {
    throw SingularMatrix();
  }
  return {std::move(t), std::move(p), std::move(q)};
}

IloTriple IloTriple::identity(std::size_t m, std::size_t n) {
  return {Matrix::identity(2), Matrix::identity(m), Matrix::identity(n)};
}

bool IloTriple::is_identity() const {
  return t == Matrix::identity(2) && p == Matrix::identity(p.rows()) && q == Matrix::identity(q.rows());
}

MatrixPair apply(const IloTriple& g, const MatrixPair& s) {
  if (g.p.cols() != s.m() || g.q.rows() != s.n()) throw DimensionMismatch("ILO does not fit the state");
  Matrix a = g.p * s.gamma1() * g.q;
  Matrix b = g.p * s.gamma2() * g.q;
  return {g.t(0, 0) * a + g.t(0, 1) * b, g.t(1, 0) * a + g.t(1, 1) * b};
}

IloTriple compose(const IloTriple& outer, const IloTriple& inner) {
  return {outer.t * inner.t, outer.p * inner.p, inner.q * outer.q};
}

IloTriple inverse(const IloTriple& g) { return {invert(g.t), invert(g.p), invert(g.q)}; }

ReductionTranscript ReductionTranscript::identity(std::size_t m, std::size_t n) {
  return {{}, IloTriple::identity(m, n)};
}

void ReductionTranscript::append(const IloTriple& step) {
  steps.push_back(step);
  composite = compose(step, composite);
}

void ReductionTranscript::append(const ReductionTranscript& later) {
  for (const auto& s : later.steps) append(s);
}

NormalizedPair normalize_leading(const MatrixPair& s, const ProjectivePoint& witness) {
  Matrix t = witness.is_infinity() ? Matrix{{0, 1}, {1, 0}} : Matrix{{1, witness.value()}, {0, 1}};
  MatrixPair moved = apply({t, Matrix::identity(s.m()), Matrix::identity(s.n())}, s);
  RrefResult rr = rref_with_transform(moved.gamma1());
  const std::size_t n = rr.pivots.size();
  Matrix kernel = nullspace(rr.reduced.block(0, 0, n, s.n()));
  Matrix q(s.n(), s.n());
  for (std::size_t k = 0; k < n; ++k) q(rr.pivots[k], k) = 1;
  q.set_block(0, n, kernel);

  IloTriple step{t, rr.row_ops, q};
  NormalizedPair out{apply(step, s), ReductionTranscript::identity(s.m(), s.n())};
  if (!step.is_identity()) out.transcript.append(step);
  return out;
}

StepIResult step_i(const MatrixPair& s, std::size_t m) {
  if (s.m() != m || m > s.n() || !is_normalized_first_slice(s.gamma1(), m)) {
    throw UnsupportedStructure("step i needs a first slice of the form (I_m | 0)");
  }
  Engine e(s);
  Staircase st;
  st.residual = iota_index(0, m);
  st.inputs = iota_index(m, s.n());
  StepIResult out;
  out.rB = level_step(e, st, next_block(st));
  cleanup(e, st, iota_index(0, m));
  out.pair = e.pair();
  out.transcript = e.transcript();
  out.block.pair = out.pair;
  out.block.staircase = level_sizes(st);
  out.block.level_coords = st.levels;
  out.block.residual = st.residual;
  out.block.square_block_dim = st.residual.size();
  return out;
}

WorkingBlock step_ii(const BlockNormalPair& b) {
  WorkingBlock wb;
  wb.coords = b.residual;
  if (!b.level_coords.empty()) {
    wb.link_cols = b.level_coords.back();
  } else {
    std::size_t n = rank(b.pair.gamma1());
    wb.link_cols = iota_index(n, b.pair.n());
  }
  wb.terminal = wb.coords.empty() || wb.link_cols.empty() ||
                rank(b.pair.gamma2().select(wb.coords, wb.link_cols)) == 0;
  return wb;
}

ReductionResult staircase_reduce(const MatrixPair& s) {
  const std::size_t n = first_slice_rank(s);
  Engine e(s);
  Staircase st = column_staircase(e, iota_index(0, n), iota_index(n, s.n()));
  ReductionResult out;
  BlockNormalPair& b = out.block;
  b.pair = e.pair();
  b.staircase = level_sizes(st);
  b.level_coords = st.levels;
  b.residual = st.residual;
  b.square_block_dim = st.residual.size();
  b.column_indices = chain_lengths(chains_of(st));
  b.deficiency.zero_rows = s.m() - n;
  out.transcript = e.transcript();
  return out;
}

ReductionResult reduce_deficient(const MatrixPair& s, std::size_t n) {
  if (n != first_slice_rank(s)) throw UnsupportedStructure("declared rank does not match the first slice");
  FullRun run = run_both_staircases(s);
  ReductionResult out;
  BlockNormalPair& b = out.block;
  b.pair = run.engine.pair();
  b.staircase = level_sizes(run.cols);
  b.level_coords = run.cols.levels;
  b.residual = run.residual;
  b.square_block_dim = run.residual.size();
  b.column_indices = chain_lengths(run.col_chains);
  b.row_indices = chain_lengths(run.row_chains);
  fill_deficiency(b, s.m() - n, run.row_levels);
  out.transcript = run.engine.transcript();
  return out;
}

NormalForm reduce_normal_form(const MatrixPair& s) {
  const std::size_t n = first_slice_rank(s);
  FullRun run = run_both_staircases(s);
  Engine& e = run.engine;

  JordanResult jr = jordan_form(e.g2().select(run.residual, run.residual));
  e.similarity(run.residual, invert(jr.s), jr.s);
  e.checkpoint();

  Index state = run.residual;
  for (std::size_t x : layout_order(run.row_chains)) state.push_back(x);
  for (std::size_t x : layout_order(run.col_chains)) state.push_back(x);
  if (state.size() != n) throw UnsupportedStructure("block layout does not cover the state coordinates");
  Index row_order = state, col_order = state;
  for (const auto& c : run.row_chains) row_order.push_back(c.first);
  for (const auto& c : run.col_chains) col_order.push_back(c.first);
  e.permute(row_order, col_order);

  NormalForm out;
  BlockNormalPair& b = out.block;
  b.pair = e.pair();
  b.staircase = level_sizes(run.cols);
  b.square_block_dim = run.residual.size();
  b.column_indices = chain_lengths(run.col_chains);
  b.row_indices = chain_lengths(run.row_chains);
  fill_deficiency(b, s.m() - n, run.row_levels);
  out.raw_segre = jr.segre;
  out.transcript = e.transcript();

  if (b.pair != assemble_normal_pair(b.column_indices, b.row_indices, jr.segre)) {
    throw UnsupportedStructure("reduced pair does not match the assembled block normal form");
  }
  return out;
}

MatrixPair assemble_normal_pair(const std::vector<std::size_t>& column_indices,
                                const std::vector<std::size_t>& row_indices, const SegreSymbol& segre) {
  const std::size_t k = segre.dimension();
  const std::size_t row_part = std::accumulate(row_indices.begin(), row_indices.end(), std::size_t{0});
  const std::size_t col_part = std::accumulate(column_indices.begin(), column_indices.end(), std::size_t{0});
  const std::size_t n = k + row_part + col_part;
  const std::size_t m = n + row_indices.size(), cols = n + column_indices.size();

  // positions[c][lv - 1]: coordinate of chain c at level lv, deepest level first.
  auto positions = [](const std::vector<std::size_t>& lengths, std::size_t offset) {
    std::vector<Index> pos(lengths.size());
    for (std::size_t c = 0; c < lengths.size(); ++c) pos[c].resize(lengths[c]);
    std::size_t depth = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
    for (std::size_t lv = depth; lv >= 1; --lv)
      for (std::size_t c = 0; c < lengths.size(); ++c)
        if (lengths[c] >= lv) pos[c][lv - 1] = offset++;
    return pos;
  };

  Matrix g1(m, cols), g2(m, cols);
  for (std::size_t i = 0; i < n; ++i) g1(i, i) = 1;
  g2.set_block(0, 0, jordan_matrix(segre));
  auto row_pos = positions(row_indices, k);
  for (std::size_t c = 0; c < row_indices.size(); ++c)
    for (std::size_t lv = 1; lv <= row_indices[c]; ++lv)
      g2(lv == 1 ? n + c : row_pos[c][lv - 2], row_pos[c][lv - 1]) = 1;
  auto col_pos = positions(column_indices, k + row_part);
  for (std::size_t c = 0; c < column_indices.size(); ++c)
    for (std::size_t lv = 1; lv <= column_indices[c]; ++lv)
      g2(col_pos[c][lv - 1], lv == 1 ? n + c : col_pos[c][lv - 2]) = 1;
  return {g1, g2};
}

}  // namespace slocc
