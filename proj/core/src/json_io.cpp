#include "acurv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "acurv/errors.hpp"

namespace acurv {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) {
  return where + "/" + std::to_string(i);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int decode_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) fail(where, "integer out of range");
  return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

Json encode(const Rational& value) { return to_string(value); }

Json encode(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json encode(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json encode(const Permutation& p) { return p.images(); }

Json encode(const GroupRingElement& a) {
  Json terms = Json::array();
  for (const auto& [p, c] : a.terms()) {
    terms.push_back(Json{{"perm", encode(p)}, {"coeff", to_string(c)}});
  }
  return Json{{"r", a.degree()}, {"terms", std::move(terms)}};
}

Json encode(const Partition& lambda) { return lambda.parts(); }

Json encode(const YoungTableau& t) { return Json{{"rows", t.rows()}}; }

Json encode(const DenseTensor& t) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.data()[k] == 0) continue;
    entries.push_back(Json{{"idx", t.index_of(k)}, {"value", to_string(t.data()[k])}});
  }
  return Json{{"order", t.order()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

Json encode(const CurvatureDecomposition& d) {
  Json terms = Json::array();
  auto put = [&](const WeightedMatrix& w, const char* type) {
    terms.push_back(Json{{"type", type},
                         {"sign", w.sign},
                         {"weight", to_string(w.weight)},
                         {"matrix", encode(w.matrix)}});
  };
  for (const auto& w : d.gamma_terms) put(w, "gamma");
  for (const auto& w : d.alpha_terms) put(w, "alpha");
  return Json{{"kind", to_string(d.kind)}, {"dim", d.dim}, {"terms", std::move(terms)}};
}

Json encode(const Metric& g) {
  if (g.is_orthonormal_form()) {
    // Only the canonical ordering round-trips through {"p", "q"}.
    if (g.matrix() == Metric::signature(g.p(), g.q()).matrix()) {
      return Json{{"p", g.p()}, {"q", g.q()}};
    }
  }
  return Json{{"matrix", encode(g.matrix())}};
}

Json encode(const SchurSum& s) {
  Json out = Json::array();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    out.push_back(Json{{"partition", encode(it->first)}, {"multiplicity", it->second}});
  }
  return out;
}

Json encode(const SpectrumReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json roots = Json::array();
    for (const auto& [root, mult] : s.roots) {
      roots.push_back(Json{{"root", to_string(root)}, {"multiplicity", mult}});
    }
    samples.push_back(Json{{"x", encode(s.x)},
                           {"char_poly", s.char_poly.to_string("t")},
                           {"roots", std::move(roots)},
                           {"rational", s.rational}});
  }
  Json out{{"sign", r.sign},
           {"samples", std::move(samples)},
           {"roots", encode(r.roots)},
           {"constant", r.constant},
           {"all_rational", r.all_rational}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Rational decode_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Vector decode_vector(const Json& j, const std::string& where) {
  Vector out;
  std::size_t i = 0;
  for (const auto& x : array(j, where)) out.push_back(decode_rational(x, child(where, i++)));
  return out;
}

Matrix decode_matrix(const Json& j, const std::string& where) {
  array(j, where);
  const std::size_t rows = j.size();
  if (rows == 0) fail(where, "empty matrix");
  std::size_t cols = 0;
  std::vector<Vector> data;
  for (std::size_t i = 0; i < rows; ++i) {
    data.push_back(decode_vector(j[i], child(where, i)));
    if (i == 0) cols = data[0].size();
    if (data[i].size() != cols || cols == 0) fail(child(where, i), "ragged or empty row");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = data[i][k];
  }
  return m;
}

GroupRingElement decode_group_ring(const Json& j, const std::string& where) {
  const int r = decode_int(field(j, "r", where), child(where, "r"));
  if (r < 1) fail(child(where, "r"), "degree must be positive");
  GroupRingElement out(r);
  const std::string tw = child(where, "terms");
  std::size_t i = 0;
  for (const auto& term : array(field(j, "terms", where), tw)) {
    const std::string at = child(tw, i++);
    const Json& perm = field(term, "perm", at);
    std::vector<int> images;
    std::size_t k = 0;
    for (const auto& v : array(perm, child(at, "perm"))) {
      images.push_back(decode_int(v, child(child(at, "perm"), k++)));
    }
    if (static_cast<int>(images.size()) != r) fail(child(at, "perm"), "length differs from r");
    try {
      out.add(Permutation(images), decode_rational(field(term, "coeff", at), child(at, "coeff")));
    } catch (const DomainError& e) {
      fail(child(at, "perm"), e.what());
    }
  }
  return out;
}

Partition decode_partition(const Json& j, const std::string& where) {
  std::vector<int> parts;
  std::size_t i = 0;
  for (const auto& v : array(j, where)) parts.push_back(decode_int(v, child(where, i++)));
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

YoungTableau decode_tableau(const Json& j, const std::string& where) {
  const std::string rw = child(where, "rows");
  std::vector<std::vector<int>> rows;
  std::size_t i = 0;
  for (const auto& row : array(field(j, "rows", where), rw)) {
    const std::string at = child(rw, i++);
    std::vector<int> entries;
    std::size_t k = 0;
    for (const auto& v : array(row, at)) entries.push_back(decode_int(v, child(at, k++)));
    rows.push_back(std::move(entries));
  }
  try {
    return YoungTableau(rows);
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

DenseTensor decode_tensor(const Json& j, const std::string& where) {
  const int order = decode_int(field(j, "order", where), child(where, "order"));
  const int dim = decode_int(field(j, "dim", where), child(where, "dim"));
  if (order < 1 || dim < 1) fail(where, "order and dim must be positive");
  DenseTensor t;
  try {
    t = DenseTensor(order, dim);
  } catch (const Error& e) {
    fail(where, e.what());
  }
  const std::string ew = child(where, "entries");
  std::size_t i = 0;
  for (const auto& entry : array(field(j, "entries", where), ew)) {
    const std::string at = child(ew, i++);
    const std::string iw = child(at, "idx");
    const Json& idx = array(field(entry, "idx", at), iw);
    if (static_cast<int>(idx.size()) != order) fail(iw, "index length differs from order");
    std::vector<int> index;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int v = decode_int(idx[k], child(iw, k));
      if (v < 0 || v >= dim) fail(child(iw, k), "index out of range [0, dim)");
      index.push_back(v);
    }
    t[index] = decode_rational(field(entry, "value", at), child(at, "value"));
  }
  return t;
}

CurvatureDecomposition decode_decomposition(const Json& j, const std::string& where) {
  CurvatureDecomposition d;
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(child(where, "kind"), "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "mixed") {
    d.kind = DecompositionKind::mixed;
  } else if (k == "pure-gamma") {
    d.kind = DecompositionKind::pure_gamma;
  } else if (k == "pure-alpha") {
    d.kind = DecompositionKind::pure_alpha;
  } else {
    fail(child(where, "kind"), "unknown kind \"" + k + "\"");
  }
  d.dim = decode_int(field(j, "dim", where), child(where, "dim"));
  const std::string tw = child(where, "terms");
  std::size_t i = 0;
  for (const auto& term : array(field(j, "terms", where), tw)) {
    const std::string at = child(tw, i++);
    WeightedMatrix w;
    w.sign = decode_int(field(term, "sign", at), child(at, "sign"));
    if (w.sign != 1 && w.sign != -1) fail(child(at, "sign"), "sign must be 1 or -1");
    w.weight = decode_rational(field(term, "weight", at), child(at, "weight"));
    if (w.weight <= 0) fail(child(at, "weight"), "weight must be positive");
    w.matrix = decode_matrix(field(term, "matrix", at), child(at, "matrix"));
    if (!w.matrix.is_square() || static_cast<int>(w.matrix.rows()) != d.dim) {
      fail(child(at, "matrix"), "matrix size differs from dim");
    }
    std::string type;
    if (term.contains("type")) {
      type = term["type"].is_string() ? term["type"].get<std::string>() : "";
    } else if (d.kind != DecompositionKind::mixed) {
      type = d.kind == DecompositionKind::pure_gamma ? "gamma" : "alpha";
    }
    if (type == "gamma") {
      if (!w.matrix.is_symmetric()) fail(child(at, "matrix"), "gamma term needs a symmetric matrix");
      d.gamma_terms.push_back(std::move(w));
    } else if (type == "alpha") {
      if (!w.matrix.is_skew()) fail(child(at, "matrix"), "alpha term needs a skew matrix");
      d.alpha_terms.push_back(std::move(w));
    } else {
      fail(child(at, "type"), "expected \"gamma\" or \"alpha\"");
    }
  }
  return d;
}

Metric decode_metric(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  try {
    if (j.contains("matrix")) return Metric::from_matrix(decode_matrix(j["matrix"], child(where, "matrix")));
    return Metric::signature(decode_int(field(j, "p", where), child(where, "p")),
                             decode_int(field(j, "q", where), child(where, "q")));
  } catch (const DomainError& e) {
    fail(where, e.what());
  } catch (const ShapeError& e) {
    fail(where, e.what());
  }
}

}  // namespace acurv
