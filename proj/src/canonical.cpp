#include "slocc/canonical.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "slocc/errors.hpp"

namespace slocc {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

const char* flag_name(CaseFlag f) { return f == CaseFlag::zero ? "zero" : "nonzero"; }

}  // namespace

std::string encode(const CanonicalForm& cf) {
  std::ostringstream os;
  const DeficiencyInfo& d = cf.deficiency;
  os << cf.m << 'x' << cf.n << " trim " << cf.m_trim << 'x' << cf.n_trim << ' '
     << (cf.genuine ? "genuine" : "degenerate") << " sig " << cf.sig.n << ',' << cf.sig.l << " st "
     << join(cf.staircase) << " def " << d.zero_rows << ',' << (d.c_case == CaseFlag::zero ? 'z' : 'c') << ','
     << (d.r_case == CaseFlag::zero ? 'z' : 'r') << ',' << d.c_rank << ',' << d.r_rank << " ch " << join(d.chain)
     << " segre " << (cf.segre.entries.empty() ? "-" : cf.segre.to_string());
  return os.str();
}

std::vector<std::size_t> indices_from_levels(const std::vector<std::size_t>& levels) {
  std::vector<std::size_t> out;
  for (std::size_t lv = 0; lv < levels.size(); ++lv) {
    std::size_t ending = levels[lv] - (lv + 1 < levels.size() ? levels[lv + 1] : 0);
    out.insert(out.end(), ending, lv + 1);
  }
  return out;
}

std::vector<std::size_t> levels_from_indices(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> out;
  for (std::size_t lv = 1;; ++lv) {
    auto k = static_cast<std::size_t>(std::count_if(indices.begin(), indices.end(), [&](std::size_t e) { return e >= lv; }));
    if (k == 0) return out;
    out.push_back(k);
  }
}

namespace {

// Identity unless infinity is among the points; then z -> z / (z - a).
MoebiusMap finite_placement(const SegreSymbol& segre) {
  bool has_infinity = false;
  std::set<GaussRat> finite;
  for (const auto& e : segre.entries) {
    if (e.point.is_infinity()) {
      has_infinity = true;
    } else {
      finite.insert(e.point.value());
    }
  }
  if (!has_infinity) return {};
  long a = -1;
  while (finite.count(GaussRat(a))) --a;
  return {1, 0, 1, -GaussRat(a)};
}

}  // namespace

MatrixPair realize_normal_form(const std::vector<std::size_t>& column_indices,
                               const std::vector<std::size_t>& row_indices, const SegreSymbol& segre) {
  return assemble_normal_pair(column_indices, row_indices, apply_moebius(finite_placement(segre), segre));
}

MatrixPair canonical_pair(const CanonicalForm& cf) {
  return realize_normal_form(indices_from_levels(cf.staircase), indices_from_levels(cf.deficiency.chain), cf.segre);
}

PencilSignature signature(const MatrixPair& s, const CanonicalForm& cf) {
  PencilSignature sig{generic_rank(s).n, 0};
  sig.l = sig.n;
  if (cf.segre.entries.empty()) return sig;
  MatrixPair canon = canonical_pair(cf);
  MoebiusMap shift = finite_placement(cf.segre);
  for (const auto& e : cf.segre.entries) {
    sig.l = std::min(sig.l, rank_at(canon, probe_for_eigenpoint(shift(e.point))));
  }
  return sig;
}

ClassifyDetail classify_detailed(const MatrixPair& s) {
  ClassifyDetail out;
  CanonicalForm& cf = out.form;
  cf.m = s.m();
  cf.n = s.n();
  cf.genuine = is_genuine(s);
  OrientResult oriented = transpose_orient(s);
  out.swapped = oriented.swapped;
  out.trimmed = trim(oriented.pair);
  cf.m_trim = out.trimmed.m;
  cf.n_trim = out.trimmed.n;
  out.t = Matrix::identity(2);

  if (cf.m_trim > 0 && cf.n_trim > 0) {
    const MatrixPair& core = out.trimmed.pair;
    GenericRank gr = generic_rank(core);
    NormalizedPair normalized = normalize_leading(core, gr.witness);
    NormalForm nf = reduce_normal_form(normalized.pair);
    out.t = normalized.transcript.composite.t;
    out.raw_segre = nf.raw_segre;
    MoebiusNormalized mob = moebius_normalize(nf.raw_segre);
    out.moebius = mob.map;
    cf.segre = mob.segre;
    cf.staircase = nf.block.staircase;
    cf.deficiency = nf.block.deficiency;
    out.block = std::move(nf.block);
    cf.sig = signature(core, cf);
  }
  cf.encoding = encode(cf);
  return out;
}

CanonicalForm classify(const MatrixPair& s) { return classify_detailed(s).form; }

bool equivalent(const MatrixPair& a, const MatrixPair& b) { return classify(a) == classify(b); }

std::string render(const CanonicalForm& cf) {
  nlohmann::ordered_json doc;
  doc["m"] = cf.m;
  doc["n"] = cf.n;
  doc["m_trim"] = cf.m_trim;
  doc["n_trim"] = cf.n_trim;
  doc["genuine"] = cf.genuine;
  doc["sig"] = {cf.sig.n, cf.sig.l};
  doc["staircase"] = cf.staircase;
  nlohmann::ordered_json d;
  d["zero_rows"] = cf.deficiency.zero_rows;
  d["c_case"] = flag_name(cf.deficiency.c_case);
  d["r_case"] = flag_name(cf.deficiency.r_case);
  d["c_rank"] = cf.deficiency.c_rank;
  d["r_rank"] = cf.deficiency.r_rank;
  d["chain"] = cf.deficiency.chain;
  doc["deficiency"] = d;
  auto segre = nlohmann::ordered_json::array();
  for (const auto& e : cf.segre.entries) segre.push_back({e.point.to_string(), e.blocks});
  doc["segre"] = segre;
  doc["encoding"] = cf.encoding;
  return doc.dump();
}

namespace {

void require_keys(const nlohmann::json& obj, const std::vector<std::string>& keys, const std::string& where) {
  if (!obj.is_object()) throw MalformedInput(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw MalformedInput("unknown field \"" + key + "\" in " + where);
    }
  }
  for (const auto& key : keys) {
    if (!obj.contains(key)) throw MalformedInput("missing field \"" + key + "\" in " + where);
  }
}

std::vector<std::size_t> count_list(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw MalformedInput(where + " must be an array of counts");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) throw MalformedInput(where + " must contain non-negative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

CaseFlag parse_flag(const nlohmann::json& v, const std::string& where) {
  if (v == "zero") return CaseFlag::zero;
  if (v == "nonzero") return CaseFlag::nonzero;
  throw MalformedInput(where + " must be \"zero\" or \"nonzero\"");
}

}  // namespace

CanonicalForm parse_cf(std::string_view text) {
  nlohmann::json doc = detail::parse_json_document(text);
  require_keys(doc, {"m", "n", "m_trim", "n_trim", "genuine", "sig", "staircase", "deficiency", "segre", "encoding"},
               "canonical form");
  CanonicalForm cf;
  cf.m = detail::count_field(doc, "m");
  cf.n = detail::count_field(doc, "n");
  cf.m_trim = detail::count_field(doc, "m_trim");
  cf.n_trim = detail::count_field(doc, "n_trim");
  if (!doc["genuine"].is_boolean()) throw MalformedInput("genuine must be a boolean");
  cf.genuine = doc["genuine"].get<bool>();
  auto sig = count_list(doc["sig"], "sig");
  if (sig.size() != 2) throw MalformedInput("sig must have exactly two entries");
  cf.sig = {sig[0], sig[1]};
  cf.staircase = count_list(doc["staircase"], "staircase");

  const auto& d = doc["deficiency"];
  require_keys(d, {"zero_rows", "c_case", "r_case", "c_rank", "r_rank", "chain"}, "deficiency");
  cf.deficiency.zero_rows = detail::count_field(d, "zero_rows");
  cf.deficiency.c_case = parse_flag(d["c_case"], "c_case");
  cf.deficiency.r_case = parse_flag(d["r_case"], "r_case");
  cf.deficiency.c_rank = detail::count_field(d, "c_rank");
  cf.deficiency.r_rank = detail::count_field(d, "r_rank");
  cf.deficiency.chain = count_list(d["chain"], "chain");

  if (!doc["segre"].is_array()) throw MalformedInput("segre must be an array");
  for (const auto& e : doc["segre"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string()) {
      throw MalformedInput("segre entries must be [point, [blocks]]");
    }
    SegreEntry entry;
    try {
      entry.point = ProjectivePoint::parse(e[0].get<std::string>());
    } catch (const MalformedInput& err) {
      throw MalformedInput(std::string("segre point: ") + err.what());
    }
    entry.blocks = count_list(e[1], "segre blocks");
    if (entry.blocks.empty()) throw MalformedInput("segre blocks must be nonempty");
    cf.segre.entries.push_back(std::move(entry));
  }
  if (!doc["encoding"].is_string()) throw MalformedInput("encoding must be a string");
  cf.encoding = doc["encoding"].get<std::string>();
  if (cf.encoding != encode(cf)) throw MalformedInput("encoding does not match the structural fields");
  return cf;
}

}  // namespace slocc
