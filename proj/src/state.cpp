#include "slocc/state.hpp"

#include <json.hpp>

#include "json_util.hpp"
#include "slocc/errors.hpp"

namespace slocc {

MatrixPair::MatrixPair(Matrix gamma1, Matrix gamma2) : gamma1_(std::move(gamma1)), gamma2_(std::move(gamma2)) {
  if (gamma1_.rows() != gamma2_.rows() || gamma1_.cols() != gamma2_.cols()) {
    throw DimensionMismatch("matrix pair slices differ in shape");
  }
}

ReducedRanks reduced_ranks(const MatrixPair& s) {
  const Matrix& g1 = s.gamma1();
  const Matrix& g2 = s.gamma2();
  ReducedRanks r;
  r.r2 = rank(g1.adjoint() * g1 + g2.adjoint() * g2);
  r.r1 = rank(g1 * g1.adjoint() + g2 * g2.adjoint());
  Matrix gram(2, 2);
  const Matrix* g[2] = {&g1, &g2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gram(i, j) = (*g[i] * g[j]->adjoint()).trace();
  r.r0 = rank(gram);
  return r;
}

bool is_genuine(const MatrixPair& s) {
  return reduced_ranks(s) == ReducedRanks{2, s.m(), s.n()};
}

TrimResult trim(const MatrixPair& s) {
  TrimResult out;
  out.p = Matrix::identity(s.m());
  out.q = Matrix::identity(s.n());
  Matrix g1 = s.gamma1(), g2 = s.gamma2();

  RrefResult rows = rref_with_transform(hstack(g1, g2));
  out.m = rows.pivots.size();
  if (out.m < s.m()) {
    out.p = rows.row_ops;
    g1 = (out.p * g1).block(0, 0, out.m, s.n());
    g2 = (out.p * g2).block(0, 0, out.m, s.n());
  }

  RrefResult cols = rref_with_transform(vstack(g1, g2).transpose());
  out.n = cols.pivots.size();
  if (out.n < s.n()) {
    out.q = cols.row_ops.transpose();
    g1 = (g1 * out.q).block(0, 0, out.m, out.n);
    g2 = (g2 * out.q).block(0, 0, out.m, out.n);
  }
  out.pair = MatrixPair(std::move(g1), std::move(g2));

  Matrix flat(2, s.m() * s.n());
  for (std::size_t r = 0; r < s.m(); ++r)
    for (std::size_t c = 0; c < s.n(); ++c) {
      flat(0, r * s.n() + c) = s.gamma1()(r, c);
      flat(1, r * s.n() + c) = s.gamma2()(r, c);
    }
  out.bipartite = rank(flat) == 1;
  return out;
}

OrientResult transpose_orient(const MatrixPair& s) {
  if (s.m() > s.n()) return {s.transpose(), true};
  return {s, false};
}

namespace {

Matrix parse_slice(const nlohmann::json& doc, const char* name, std::size_t m, std::size_t n) {
  if (!doc.contains(name)) throw MalformedInput(std::string("missing field \"") + name + "\"");
  const auto& rows = doc.at(name);
  if (!rows.is_array()) throw MalformedInput(std::string("field \"") + name + "\" must be an array");
  if (rows.size() != m) {
    throw DimensionMismatch(std::string(name) + " has " + std::to_string(rows.size()) + " rows, expected " +
                            std::to_string(m));
  }
  Matrix out(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = rows[r];
    std::string where = std::string(name) + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw MalformedInput(where + " must be an array");
    if (row.size() != n) {
      throw DimensionMismatch(where + " has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = detail::gaussrat_from_json(row[c], where + "[" + std::to_string(c) + "]");
    }
  }
  return out;
}

nlohmann::ordered_json slice_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(detail::gaussrat_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

MatrixPair parse_state(std::string_view text) {
  nlohmann::json doc = detail::parse_json_document(text);
  if (!doc.is_object()) throw MalformedInput("state document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "m" && key != "n" && key != "gamma1" && key != "gamma2") {
      throw MalformedInput("unknown field \"" + key + "\" in state document");
    }
  }
  std::size_t m = detail::count_field(doc, "m");
  std::size_t n = detail::count_field(doc, "n");
  if (m == 0 || n == 0) throw MalformedInput("state dimensions must be at least 1");
  return MatrixPair(parse_slice(doc, "gamma1", m, n), parse_slice(doc, "gamma2", m, n));
}

std::string serialize_state(const MatrixPair& s) {
  nlohmann::ordered_json doc;
  doc["m"] = s.m();
  doc["n"] = s.n();
  doc["gamma1"] = slice_json(s.gamma1());
  doc["gamma2"] = slice_json(s.gamma2());
  return doc.dump();
}

}  // namespace slocc
