#include "slocc/enumerate.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

std::size_t total(const Partition& p) { return std::accumulate(p.begin(), p.end(), std::size_t{0}); }

// Larger partitions first, then lexicographically larger.
bool shape_before(const Partition& a, const Partition& b) {
  if (total(a) != total(b)) return total(a) > total(b);
  return a > b;
}

std::vector<Partition> partitions_of(std::size_t k, std::size_t max_part) {
  if (k == 0) return {Partition{}};
  std::vector<Partition> out;
  for (std::size_t first = std::min(k, max_part); first >= 1; --first) {
    for (auto rest : partitions_of(k - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// Multisets of nonempty partitions with total size k, each sorted by shape_before.
std::vector<std::vector<Partition>> regular_shapes(std::size_t k) {
  std::vector<Partition> pool;
  for (std::size_t j = k; j >= 1; --j) {
    auto ps = partitions_of(j, j);
    pool.insert(pool.end(), ps.begin(), ps.end());
  }
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (total(pool[i]) > left) continue;
      cur.push_back(pool[i]);
      rec(i, left - total(pool[i]));
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

// Ascending lists of `count` indices, each >= lo, summing to `sum`.
void index_lists(std::size_t count, std::size_t sum, std::size_t lo, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (count == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (std::size_t v = lo; v * count <= sum; ++v) {
    cur.push_back(v);
    index_lists(count - 1, sum - v, v, cur, out);
    cur.pop_back();
  }
}

std::string shape_string(const std::vector<Partition>& shape) {
  if (shape.empty()) return "-";
  std::string out;
  for (const auto& p : shape) {
    out += '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p[i]);
    }
    out += ']';
  }
  return out;
}

std::string describe_constraints(std::size_t params) {
  if (params == 0) return "none";
  std::string names;
  for (std::size_t i = 0; i < params; ++i) names += (i ? ", p" : "p") + std::to_string(i + 1);
  std::string out = names + " not in {0, 1}";
  if (params > 1) out += ", pairwise distinct";
  return out;
}

}  // namespace

std::vector<Partition> segre_shape(const SegreSymbol& segre) {
  std::vector<Partition> out;
  for (const auto& e : segre.entries) out.push_back(e.blocks);
  std::stable_sort(out.begin(), out.end(), shape_before);
  return out;
}

std::string skeleton_key(const CanonicalForm& cf) {
  CanonicalForm bare = cf;
  bare.segre = {};
  std::string enc = encode(bare);
  const std::string tail = " segre -";
  enc.erase(enc.size() - tail.size());
  return enc + " shape " + shape_string(segre_shape(cf.segre));
}

bool matches_family(const ClassFamily& f, const CanonicalForm& cf) { return skeleton_key(cf) == f.key; }

MatrixPair instantiate(const ClassFamily& f, const std::vector<GaussRat>& params) {
  if (params.size() != f.param_count) {
    throw ConstraintViolation("family takes " + std::to_string(f.param_count) + " parameters, got " +
                              std::to_string(params.size()));
  }
  std::set<GaussRat> seen{GaussRat(0), GaussRat(1)};
  for (const auto& p : params) {
    if (!seen.insert(p).second) {
      throw ConstraintViolation("parameter " + p.to_string() + " collides with a pinned point or another parameter");
    }
  }
  SegreSymbol segre;
  for (std::size_t slot = 0; slot < f.shape.size(); ++slot) {
    ProjectivePoint point = slot == 0   ? ProjectivePoint::finite(0)
                            : slot == 1 ? ProjectivePoint::infinity()
                            : slot == 2 ? ProjectivePoint::finite(1)
                                        : ProjectivePoint::finite(params[slot - 3]);
    segre.entries.push_back({point, f.shape[slot]});
  }
  segre.sort_canonical();
  return realize_normal_form(f.column_indices, f.row_indices, segre);
}

std::vector<GaussRat> default_params(const ClassFamily& f) {
  std::vector<GaussRat> out;
  for (std::size_t i = 0; i < f.param_count; ++i) out.emplace_back(static_cast<long>(i + 2));
  return out;
}

std::vector<ClassFamily> enumerate_families(std::size_t m, std::size_t n, bool genuine_only) {
  if (m < 1 || m > n || n > 2 * m) {
    throw DimensionOutOfRange("need 1 <= m <= n <= 2m, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
  std::size_t min_index = genuine_only ? 1 : 0;
  std::vector<ClassFamily> out;
  std::set<std::string> keys;
  for (std::size_t r = m + 1; r-- > 0;) {
    std::size_t n_eta = m - r;
    std::size_t n_eps = n - r;
    for (std::size_t s_eta = n_eta * min_index; s_eta <= r; ++s_eta) {
      std::vector<std::vector<std::size_t>> etas;
      std::vector<std::size_t> cur;
      index_lists(n_eta, s_eta, min_index, cur, etas);
      for (std::size_t s_eps = n_eps * min_index; s_eta + s_eps <= r; ++s_eps) {
        std::vector<std::vector<std::size_t>> epss;
        index_lists(n_eps, s_eps, min_index, cur, epss);
        std::size_t k = r - s_eta - s_eps;
        auto shapes = regular_shapes(k);
        for (const auto& eps : epss) {
          for (const auto& eta : etas) {
            for (const auto& shape : shapes) {
              ClassFamily f;
              f.shape = shape;
              f.column_indices = eps;
              f.row_indices = eta;
              f.param_count = shape.size() > 3 ? shape.size() - 3 : 0;
              f.constraints = describe_constraints(f.param_count);
              f.canonical = classify(instantiate(f, default_params(f)));
              if (genuine_only && !f.canonical.genuine) continue;
              f.key = skeleton_key(f.canonical);
              if (!keys.insert(f.key).second) continue;
              out.push_back(std::move(f));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<CountEntry> count_table(std::size_t max_m, std::size_t max_n) {
  std::vector<CountEntry> out;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = m; n <= std::min(2 * m, max_n); ++n) {
      CountEntry e{m, n, 0, 0};
      for (const auto& f : enumerate_families(m, n, true)) {
        ++e.total;
        if (f.canonical.sig.n == m) ++e.max_rank;
      }
      out.push_back(e);
    }
  }
  return out;
}

std::string render_families(std::size_t m, std::size_t n, const std::vector<ClassFamily>& families) {
  nlohmann::ordered_json doc;
  doc["m"] = m;
  doc["n"] = n;
  doc["count"] = families.size();
  auto list = nlohmann::ordered_json::array();
  for (const auto& f : families) list.push_back(nlohmann::ordered_json::parse(render(f.canonical)));
  doc["families"] = list;
  return doc.dump();
}

}  // namespace slocc
