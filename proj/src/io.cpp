#include "hopfcoh/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hopfcoh {

namespace {

std::optional<Index> parse_index(const std::string& s) {
  Index v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

Index as_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(where, "expected a non-negative integer");
  return j.get<Index>();
}

Elem as_scalar(const Json& j, PrimeField f, const std::string& where) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar (decimal string or integer)");
}

Index checked(Index v, Index bound, const std::string& where) {
  if (v >= bound) fail(where, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
  return v;
}

// Triples [i1, …, ik, "c"] addressing a rows × cols matrix through `place`.
template <class Place>
SparseMatrix triples(const Json& list, std::size_t arity, PrimeField f, Index rows, Index cols,
                     const std::vector<Index>& bounds, const std::string& where, Place place) {
  if (!list.is_array()) fail(where, "expected an array");
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    const Json& e = list[k];
    if (!e.is_array() || e.size() != arity + 1) fail(at, "expected " + std::to_string(arity) + " indices and a scalar");
    std::vector<Index> ix(arity);
    for (std::size_t i = 0; i < arity; ++i) ix[i] = checked(as_index(e[i], at), bounds[i], at);
    auto [r, c] = place(ix);
    t.push_back({r, c, as_scalar(e[arity], f, at)});
  }
  return SparseMatrix::from_triplets(f, rows, cols, t);
}

std::vector<Elem> dense(const Json& list, PrimeField f, Index n, const std::string& where) {
  if (!list.is_array() || list.size() != n) fail(where, "expected an array of " + std::to_string(n) + " scalars");
  std::vector<Elem> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(as_scalar(list[i], f, where + "/" + std::to_string(i)));
  return v;
}

PrimeField field_of(const Json& j, std::optional<PrimeField> field, const std::string& where) {
  if (field) return *field;
  const Json& p = member(j, "field", where);
  try {
    return PrimeField(FieldSpec::checked(p.get<std::int64_t>()));
  } catch (const Json::exception&) {
    fail(where + "/field", "expected an integer");
  } catch (const Error& e) {
    fail(where + "/field", e.what());
  }
}

Json scalar_json(Elem v) { return std::to_string(v); }

}  // namespace

std::string library_version() { return HOPFCOH_VERSION; }

AlgebraPtr builtin_algebra(const std::string& name, PrimeField f) {
  auto make = [](HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); };
  if (name.rfind("dual:", 0) == 0) return make(dual(*builtin_algebra(name.substr(5), f)));
  if (name.rfind("opposite:", 0) == 0) return make(opposite(*builtin_algebra(name.substr(9), f)));
  if (name == "S3") return make(symmetric_group_s3(f));
  if (name == "sweedler" || name == "H4") return make(sweedler_h4(f));
  if (name.size() > 2 && name.rfind("kZ", 0) == 0) {
    auto n = parse_index(name.substr(2));
    if (!n || *n == 0) throw ParseError("unknown algebra \"" + name + "\"");
    return make(cyclic_group_algebra(*n, f));
  }
  if (name.rfind("taft:", 0) == 0) {
    const auto colon = name.find(':', 5);
    if (colon != std::string::npos) {
      auto n = parse_index(name.substr(5, colon - 5));
      if (n) return make(taft(*n, f, f.parse(name.substr(colon + 1))));
    }
  }
  throw ParseError("unknown algebra \"" + name + "\"");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto cut = msg.find("; ");
    if (cut != std::string::npos) msg = msg.substr(cut + 2);
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

AlgebraPtr resolve_algebra(const std::string& name_or_path, std::optional<PrimeField> field) {
  try {
    return builtin_algebra(name_or_path, field.value_or(PrimeField(2)));
  } catch (const ParseError&) {
    std::ifstream probe(name_or_path);
    if (!probe) throw;
  }
  return std::make_shared<const HopfAlgebra>(algebra_from_json(read_json_file(name_or_path), field, name_or_path));
}

HopfAlgebra algebra_from_json(const Json& j, std::optional<PrimeField> field, const std::string& where) {
  const PrimeField f = field_of(j, field, where);
  const Index n = as_index(member(j, "dim", where), where + "/dim");
  if (n == 0) fail(where + "/dim", "dimension must be positive");
  SparseMatrix mul = triples(member(j, "mul", where), 3, f, n, n * n, {n, n, n}, where + "/mul",
                             [n](const std::vector<Index>& x) { return std::pair{x[2], x[0] * n + x[1]}; });
  SparseMatrix comul = triples(member(j, "comul", where), 3, f, n * n, n, {n, n, n}, where + "/comul",
                               [n](const std::vector<Index>& x) { return std::pair{x[1] * n + x[2], x[0]}; });
  auto pair_of = [](const std::vector<Index>& x) { return std::pair{x[1], x[0]}; };
  SparseMatrix s = triples(member(j, "antipode", where), 2, f, n, n, {n, n}, where + "/antipode", pair_of);
  std::optional<SparseMatrix> s_inv;
  if (j.contains("antipode_inv"))
    s_inv = triples(j["antipode_inv"], 2, f, n, n, {n, n}, where + "/antipode_inv", pair_of);
  auto unit = dense(member(j, "unit", where), f, n, where + "/unit");
  auto counit = dense(member(j, "counit", where), f, n, where + "/counit");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string();
  try {
    return HopfAlgebra(f, mul, unit, comul, counit, s, s_inv, name);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json matrix_to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (Index c = 0; c < m.cols(); ++c)
    for (const Entry& e : m.column(c)) entries.push_back(Json::array({e.index, c, scalar_json(e.value)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json algebra_to_json(const HopfAlgebra& h) {
  const Index n = h.dim();
  Json mul = Json::array(), comul = Json::array(), s = Json::array(), unit = Json::array(), counit = Json::array();
  for (Index c = 0; c < n * n; ++c)
    for (const Entry& e : h.mul().column(c)) mul.push_back(Json::array({c / n, c % n, e.index, scalar_json(e.value)}));
  for (Index i = 0; i < n; ++i) {
    for (const Entry& e : h.comul().column(i))
      comul.push_back(Json::array({i, e.index / n, e.index % n, scalar_json(e.value)}));
    for (const Entry& e : h.antipode().column(i)) s.push_back(Json::array({i, e.index, scalar_json(e.value)}));
    unit.push_back(scalar_json(h.unit()[i]));
    counit.push_back(scalar_json(h.counit()[i]));
  }
  Json j{{"field", h.field().p()}, {"dim", n}};
  if (!h.name().empty()) j["name"] = h.name();
  j["mul"] = mul;
  j["unit"] = unit;
  j["comul"] = comul;
  j["counit"] = counit;
  j["antipode"] = s;
  return j;
}

HopfBimodule bimodule_from_json(const Json& j, AlgebraPtr algebra, std::optional<PrimeField> field,
                                const std::string& where) {
  const Json& a = member(j, "algebra", where);
  AlgebraPtr own;
  if (a.is_string()) {
    std::optional<PrimeField> f = field;
    if (!f && algebra) f = algebra->field();
    if (!f && j.contains("field")) f = field_of(j, std::nullopt, where);
    own = builtin_algebra(a.get<std::string>(), f.value_or(PrimeField(2)));
  } else {
    own = std::make_shared<const HopfAlgebra>(algebra_from_json(a, field, where + "/algebra"));
  }
  if (algebra) {
    if (!(own->field() == algebra->field() && own->mul() == algebra->mul() && own->comul() == algebra->comul()))
      fail(where + "/algebra", "does not match the selected algebra");
    own = algebra;
  }
  const PrimeField f = own->field();
  const Index n = own->dim();
  const Index m = as_index(member(j, "dim", where), where + "/dim");
  HopfBimodule out{own, m, {}, {}, {}, {}, j.value("name", std::string("bimodule"))};
  out.act_left = triples(member(j, "actL", where), 3, f, m, n * m, {n, m, m}, where + "/actL",
                         [m](const std::vector<Index>& x) { return std::pair{x[2], x[0] * m + x[1]}; });
  out.act_right = triples(member(j, "actR", where), 3, f, m, m * n, {m, n, m}, where + "/actR",
                          [n](const std::vector<Index>& x) { return std::pair{x[2], x[0] * n + x[1]}; });
  out.coact_left = triples(member(j, "coactL", where), 3, f, n * m, m, {m, n, m}, where + "/coactL",
                           [m](const std::vector<Index>& x) { return std::pair{x[1] * m + x[2], x[0]}; });
  out.coact_right = triples(member(j, "coactR", where), 3, f, m * n, m, {m, m, n}, where + "/coactR",
                            [n](const std::vector<Index>& x) { return std::pair{x[1] * n + x[2], x[0]}; });
  return out;
}

Json bimodule_to_json(const HopfBimodule& b) {
  const Index n = b.algebra->dim(), m = b.dim;
  Json al = Json::array(), ar = Json::array(), cl = Json::array(), cr = Json::array();
  for (Index c = 0; c < n * m; ++c)
    for (const Entry& e : b.act_left.column(c)) al.push_back(Json::array({c / m, c % m, e.index, scalar_json(e.value)}));
  for (Index c = 0; c < m * n; ++c)
    for (const Entry& e : b.act_right.column(c))
      ar.push_back(Json::array({c / n, c % n, e.index, scalar_json(e.value)}));
  for (Index v = 0; v < m; ++v) {
    for (const Entry& e : b.coact_left.column(v))
      cl.push_back(Json::array({v, e.index / m, e.index % m, scalar_json(e.value)}));
    for (const Entry& e : b.coact_right.column(v))
      cr.push_back(Json::array({v, e.index / n, e.index % n, scalar_json(e.value)}));
  }
  return Json{{"name", b.name}, {"algebra", algebra_to_json(*b.algebra)}, {"dim", m},
              {"actL", al},     {"actR", ar},                            {"coactL", cl},
              {"coactR", cr}};
}

HopfBimodule select_bimodule(const std::string& selector, const AlgebraPtr& h) {
  const auto plus = selector.find('+');
  if (plus != std::string::npos)
    return direct_sum(select_bimodule(selector.substr(0, plus), h), select_bimodule(selector.substr(plus + 1), h));
  if (selector == "regular") return regular_bimodule(h);
  if (selector == "x") return x_as_bimodule(XAlgebra(h));
  for (const char* prefix : {"right:", "left:"}) {
    const std::string p = prefix;
    if (selector.rfind(p, 0) == 0) {
      auto k = parse_index(selector.substr(p.size()));
      if (!k || *k > 16) throw ParseError("bad tensor power in selector \"" + selector + "\"");
      auto a = regular_bimodule(h);
      return p == "right:" ? right_tensor_power(a, static_cast<int>(*k)) : left_tensor_power(a, static_cast<int>(*k));
    }
  }
  std::ifstream probe(selector);
  if (!probe) throw ParseError("unknown bimodule selector \"" + selector + "\"");
  return bimodule_from_json(read_json_file(selector), h, h->field(), selector);
}

Json cochain_to_json(const A4Cochain& c) {
  Json comps = Json::array();
  for (const auto& u : c.components) comps.push_back(matrix_to_json(u));
  return Json{{"degree", c.degree}, {"components", comps}};
}

Json report_to_json(const CohomologyReport& r, bool timings) {
  Json cells = Json::array();
  for (const auto& c : r.cell_dims) cells.push_back(Json::array({c[0], c[1], c[2]}));
  Json j{{"engine", engine_name(r.engine)}, {"dims", r.dims}, {"cell_dims", cells}, {"violations", r.violations}};
  if (timings) {
    Json t = Json::array();
    for (std::size_t k = 0; k < r.cell_dims.size() && k < r.cell_seconds.size(); ++k)
      t.push_back(Json::array({r.cell_dims[k][0], r.cell_dims[k][1], r.cell_seconds[k]}));
    j["timings"] = t;
  }
  return j;
}

}  // namespace hopfcoh
