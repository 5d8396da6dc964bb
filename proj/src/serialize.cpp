#include "qhopf/serialize.hpp"

#include <fstream>
#include <map>

#include "qhopf/error.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

json rational_part(const std::string& s, const Rational& r, bool numerator) {
  if (!r.is_small()) return s;
  return json(std::stoll(numerator ? r.numerator_string() : r.denominator_string()));
}

std::string part_text(const json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_string()) return j.get<std::string>();
  bad("rational part must be an integer or a decimal string");
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (!j.is_array() || j.size() != 2) bad("rational must be [num, den]");
  if (j[0].is_number_integer() && j[1].is_number_integer()) {
    const auto d = j[1].get<std::int64_t>();
    if (d == 0) bad("zero denominator");
    return Rational(j[0].get<std::int64_t>(), d);
  }
  return Rational::parse(part_text(j[0]) + "/" + part_text(j[1]));
}

Index index_from_json(const json& j, Index bound) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad("index must be a nonnegative integer");
  const auto i = j.get<Index>();
  if (i >= bound) bad("index " + std::to_string(i) + " out of range");
  return i;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index ipow(Index b, int e) {
  Index r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// [[i_1, ..., i_k, scalar], ...] with base-`dim` digits, accumulated into a sparse vector.
SparseVec entries_from_json(const json& j, Index dim, int digits, int level, std::map<Index, SparseVec>* by_head) {
  if (!j.is_array()) bad("expected an array of entries");
  Accumulator acc(level);
  std::map<Index, Accumulator> heads;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(digits) + 1) bad("entry has wrong length");
    Index flat = 0;
    for (int t = 0; t < digits; ++t) flat = flat * dim + index_from_json(e[t], dim);
    const CycScalar c = scalar_from_json(e[digits], level);
    if (by_head) {
      const Index head = flat / ipow(dim, digits - 1);
      heads.try_emplace(head, level).first->second.add(flat % ipow(dim, digits - 1), c);
    } else {
      acc.add(flat, c);
    }
  }
  if (by_head)
    for (auto& [h, a] : heads) (*by_head)[h] = a.finish();
  return acc.finish();
}

void push_digits(json& row, Index flat, Index dim, int digits) {
  std::vector<Index> d(digits);
  for (int t = digits - 1; t >= 0; --t) {
    d[t] = flat % dim;
    flat /= dim;
  }
  for (Index x : d) row.push_back(x);
}

}  // namespace

json to_json(const CycScalar& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs())
    coeffs.push_back({rational_part(r.numerator_string(), r, true), rational_part(r.denominator_string(), r, false)});
  return {{"level", c.level()}, {"coeffs", coeffs}};
}

CycScalar scalar_from_json(const json& j, int level) {
  if (j.is_number_integer() || j.is_string()) return CycScalar(level, rational_from_json(j));
  const int src = field(j, "level").get<int>();
  if (src < 1 || level % src != 0) bad("scalar level " + std::to_string(src) + " does not divide " + std::to_string(level));
  const auto& cj = field(j, "coeffs");
  if (!cj.is_array()) bad("coeffs must be an array");
  CycScalar::Coeffs coeffs;
  for (const auto& r : cj) coeffs.push_back(rational_from_json(r));
  const auto deg = static_cast<std::size_t>(euler_phi(src));
  if (coeffs.size() > deg) bad("too many coefficients for level " + std::to_string(src));
  coeffs.resize(deg);
  return CycScalar(src, std::move(coeffs)).lift(level);
}

json sparse_to_json(const SparseVec& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back({i, to_json(c)});
  return out;
}

SparseVec sparse_from_json(const json& j, int level) {
  if (!j.is_array()) bad("sparse vector must be an array");
  Accumulator acc(level);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || e[0].get<std::int64_t>() < 0)
      bad("sparse entry must be [index, scalar]");
    acc.add(e[0].get<Index>(), scalar_from_json(e[1], level));
  }
  return acc.finish();
}

json tensor_to_json(const Element& u) {
  json out = json::array();
  const Index dim = static_cast<Index>(u.algebra().dim());
  for (const auto& [flat, c] : u.coords()) {
    json row = json::array();
    push_digits(row, flat, dim, u.arity());
    row.push_back(to_json(c));
    out.push_back(std::move(row));
  }
  return out;
}

Element tensor_from_json(const json& j, const AlgebraPtr& a, int arity) {
  return Element(a, arity, entries_from_json(j, static_cast<Index>(a->dim()), arity, a->level(), nullptr));
}

json map_to_json(const LinearMap& f) {
  json out = json::array();
  const Index dim = static_cast<Index>(f.parent()->dim());
  for (Index src = 0; src < f.columns().size(); ++src)
    for (const auto& [flat, c] : f.column(src)) {
      json row = json::array();
      push_digits(row, src, dim, f.source_arity());
      push_digits(row, flat, dim, f.target_arity());
      row.push_back(to_json(c));
      out.push_back(std::move(row));
    }
  return out;
}

LinearMap map_from_json(const json& j, const AlgebraPtr& a, int source_arity, int target_arity) {
  if (source_arity != 1) bad("only maps out of A are serialized");
  const Index dim = static_cast<Index>(a->dim());
  std::map<Index, SparseVec> heads;
  entries_from_json(j, dim, 1 + target_arity, a->level(), &heads);
  std::vector<SparseVec> columns(dim);
  for (auto& [h, v] : heads) columns[h] = std::move(v);
  return LinearMap(a, source_arity, target_arity, std::move(columns));
}

json to_json(const StructureAlgebra& a) {
  json mult = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j)) mult.push_back({i, j, k, to_json(c)});
  json out = {{"dim", a.dim()}, {"level", a.level()}};
  const auto& u = a.unit();
  if (u.size() == 1 && u[0].second.is_one())
    out["unit"] = u[0].first;
  else
    out["unit"] = sparse_to_json(u);
  out["mult"] = std::move(mult);
  if (a.grading()) out["grading"] = *a.grading();
  return out;
}

AlgebraPtr algebra_from_json(const json& j) {
  const auto& dj = field(j, "dim");
  const auto& lj = field(j, "level");
  if (!dj.is_number_integer() || dj.get<std::int64_t>() < 1) bad("dim must be a positive integer");
  if (!lj.is_number_integer() || lj.get<std::int64_t>() < 1) bad("level must be a positive integer");
  const int dim = dj.get<int>();
  const int level = lj.get<int>();
  std::map<Index, SparseVec> heads;
  entries_from_json(field(j, "mult"), static_cast<Index>(dim), 3, level, &heads);
  std::vector<SparseVec> mult(static_cast<std::size_t>(dim) * dim);
  for (auto& [h, v] : heads) {
    // head is i; the remainder encodes (j, k)
    for (const auto& [jk, c] : v) mult[h * dim + jk / dim].emplace_back(jk % dim, c);
  }
  const auto& uj = field(j, "unit");
  SparseVec unit;
  if (uj.is_number_integer())
    unit = {{index_from_json(uj, dim), CycScalar(level, Rational(1))}};
  else
    unit = sparse_from_json(uj, level);
  for (const auto& [i, c] : unit)
    if (i >= static_cast<Index>(dim)) bad("unit index out of range");
  std::optional<std::vector<int>> grading;
  if (j.contains("grading") && !j["grading"].is_null()) {
    if (!j["grading"].is_array()) bad("grading must be an array");
    std::vector<int> g;
    for (const auto& d : j["grading"]) {
      if (!d.is_number_integer() || d.get<std::int64_t>() < 0) bad("grading degrees must be nonnegative integers");
      g.push_back(d.get<int>());
    }
    grading = std::move(g);
  }
  try {
    return std::make_shared<const StructureAlgebra>(dim, level, std::move(mult), std::move(unit), std::move(grading));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json to_json(const QuasiHopfDatum& q) {
  json out = to_json(*q.algebra);
  out["name"] = q.name;
  out["delta"] = map_to_json(q.delta);
  out["counit"] = map_to_json(q.counit);
  out["antipode"] = map_to_json(q.antipode);
  out["phi"] = tensor_to_json(q.phi);
  out["phi_inv"] = tensor_to_json(q.phi_inv);
  out["alpha"] = tensor_to_json(q.alpha);
  out["beta"] = tensor_to_json(q.beta);
  json gens = json::array();
  for (const auto& g : q.generators) gens.push_back(tensor_to_json(g));
  out["generators"] = std::move(gens);
  return out;
}

QuasiHopfDatum datum_from_json(const json& j) {
  AlgebraPtr a = algebra_from_json(j);
  Element phi = tensor_from_json(field(j, "phi"), a, 3);
  Element phi_inv = j.contains("phi_inv") ? tensor_from_json(j["phi_inv"], a, 3) : invert(phi);
  std::vector<Element> gens;
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) bad("generators must be an array");
    for (const auto& g : j["generators"]) gens.push_back(tensor_from_json(g, a, 1));
  } else {
    for (int i = 0; i < a->dim(); ++i) gens.push_back(Element::basis(a, i));
  }
  return QuasiHopfDatum{j.value("name", std::string("file")),
                        a,
                        map_from_json(field(j, "delta"), a, 1, 2),
                        map_from_json(field(j, "counit"), a, 1, 0),
                        std::move(phi),
                        std::move(phi_inv),
                        map_from_json(field(j, "antipode"), a, 1, 1),
                        tensor_from_json(field(j, "alpha"), a, 1),
                        tensor_from_json(field(j, "beta"), a, 1),
                        std::move(gens)};
}

json to_json(const AxiomResult& r) {
  json out = {{"axiom", r.axiom}, {"pass", r.pass}};
  out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const AxiomReport& r) {
  json results = json::array();
  for (const auto& x : r.results) results.push_back(to_json(x));
  return {{"all_pass", r.all_pass()}, {"axioms", results}};
}

json to_json(const IsoCheck& c) {
  return {{"ok", c.ok}, {"antipode_gauged", c.antipode_gauged}, {"failure", c.failure}};
}

json to_json(const CohomologyReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"k", d.k},
                       {"cochain_dim", d.cochain_dim},
                       {"rank_in", d.rank_in},
                       {"rank_out", d.rank_out},
                       {"dim", d.dim}});
  return {{"rank_mode", r.rank_mode}, {"normalized", r.normalized}, {"primes", r.primes},
          {"consensus", r.consensus},  {"dims", r.dims()},            {"degrees", degrees}};
}

json to_json(const VanishingReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"w", row.word}, {"length", row.length}, {"gamma", row.gamma}, {"exponent", row.exponent}});
  json out = {{"type", to_string(r.type)},
              {"p", r.p},
              {"d", r.d},
              {"simple_reflections_ok", r.simple_reflections_ok},
              {"length3_ok", r.length3_ok},
              {"length3_count", r.length3_count},
              {"pass", r.pass()},
              {"rows", rows}};
  if (r.length3_count == 0) out["note"] = "no length-3 elements";
  return out;
}

json to_json(const InvariantReport& r) {
  return {{"dimension", r.dimension}, {"basis", r.basis}, {"generators", r.generators}, {"weights", r.weights}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

}  // namespace qhopf
