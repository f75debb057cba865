#include "duocat/io.hpp"

#include <fstream>
#include <sstream>

namespace duocat {
namespace io {

namespace {

constexpr int kSchema = 1;

void require_object(const json& j) {
  if (!j.is_object()) throw Error("document must be a JSON object");
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  require_object(j);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw Error("unknown field: " + it.key());
  }
}

void check_document(const json& j, const std::string& kind,
                    std::initializer_list<const char*> allowed) {
  check_keys(j, allowed);
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != kSchema)
    throw Error("unsupported schema version");
  if (!j.contains("kind") || j["kind"] != kind)
    throw Error("expected document kind " + kind);
}

std::string comp_key_string(ProductKind p, const std::vector<int>& key) {
  std::ostringstream os;
  switch (p) {
    case ProductKind::Cauchy:
      os << key[0] << "," << key[1];
      break;
    case ProductKind::Hadamard:
      os << key[0];
      break;
    case ProductKind::Substitution:
      os << key[0] << ";";
      for (size_t i = 1; i < key.size(); ++i) {
        if (i > 1) os << ",";
        os << key[i];
      }
      break;
  }
  return os.str();
}

std::vector<int> comp_key_parse(ProductKind p, const std::string& s) {
  auto ints = [](const std::string& part) {
    std::vector<int> out;
    if (part.empty()) return out;
    std::istringstream is(part);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 0) throw Error("bad component key");
      out.push_back(v);
    }
    return out;
  };
  if (p == ProductKind::Substitution) {
    size_t semi = s.find(';');
    if (semi == std::string::npos) throw Error("bad component key");
    std::vector<int> key = ints(s.substr(0, semi));
    if (key.size() != 1) throw Error("bad component key");
    for (int v : ints(s.substr(semi + 1))) key.push_back(v);
    return key;
  }
  std::vector<int> key = ints(s);
  if (key.size() != (p == ProductKind::Cauchy ? 2u : 1u))
    throw Error("bad component key");
  return key;
}

std::string structured_tag(StructureKind k) {
  if (kind_product(k) == ProductKind::Substitution)
    return kind_is_comonoid(k) ? "cooperad" : "operad";
  return kind_is_comonoid(k) ? "comonoid" : "monoid";
}

json actions_to_json(const SymmetricSequence& s) {
  json a = json::array();
  for (const auto& degree : s.gens) {
    json row = json::array();
    for (const auto& g : degree) row.push_back(to_json(g));
    a.push_back(row);
  }
  return a;
}

std::vector<std::vector<Matrix>> actions_from_json(const json& j) {
  if (!j.is_array()) throw Error("actions must be an array");
  std::vector<std::vector<Matrix>> gens;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("actions must be arrays per degree");
    std::vector<Matrix> degree;
    for (const auto& g : row) degree.push_back(matrix_from_json(g));
    gens.push_back(std::move(degree));
  }
  return gens;
}

}  // namespace

json to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json e = json::array();
  for (const auto& x : m.entries()) e.push_back(to_string(x));
  j["entries"] = std::move(e);
  return j;
}

Matrix matrix_from_json(const json& j) {
  check_keys(j, {"rows", "cols", "entries"});
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries") ||
      !j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
      !j["entries"].is_array())
    throw Error("bad matrix document");
  int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  const json& e = j["entries"];
  if (static_cast<long long>(rows) * cols !=
      static_cast<long long>(e.size()))
    throw Error("matrix entry count mismatch");
  std::vector<Rational> entries;
  entries.reserve(e.size());
  for (const auto& x : e) {
    if (!x.is_string()) throw Error("matrix entries must be strings");
    entries.push_back(parse_rational(x.get<std::string>()));
  }
  return Matrix(rows, cols, std::move(entries));
}

json to_json(const GradedObject& v) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "graded-object";
  j["truncation"] = v.truncation;
  j["dims"] = v.dims;
  return j;
}

GradedObject graded_object_from_json(const json& j) {
  check_document(j, "graded-object", {"schema", "kind", "truncation", "dims"});
  if (!j.contains("truncation") || !j.contains("dims") ||
      !j["truncation"].is_number_integer() || !j["dims"].is_array())
    throw Error("bad graded-object document");
  return GradedObject(j["truncation"].get<int>(),
                      j["dims"].get<std::vector<int>>());
}

json to_json(const GradedMap& f) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "graded-map";
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  json c = json::array();
  for (const auto& m : f.components) c.push_back(to_json(m));
  j["components"] = std::move(c);
  return j;
}

GradedMap graded_map_from_json(const json& j) {
  check_document(j, "graded-map",
                 {"schema", "kind", "source", "target", "components"});
  if (!j.contains("source") || !j.contains("target") ||
      !j.contains("components") || !j["components"].is_array())
    throw Error("bad graded-map document");
  std::vector<Matrix> comps;
  for (const auto& m : j["components"]) comps.push_back(matrix_from_json(m));
  return GradedMap(graded_object_from_json(j["source"]),
                   graded_object_from_json(j["target"]), std::move(comps));
}

json to_json(const SymmetricSequence& s) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "species";
  j["truncation"] = s.ob.truncation;
  j["dims"] = s.ob.dims;
  j["actions"] = actions_to_json(s);
  return j;
}

SymmetricSequence species_from_json(const json& j) {
  check_document(j, "species",
                 {"schema", "kind", "truncation", "dims", "actions"});
  if (!j.contains("truncation") || !j.contains("dims") ||
      !j.contains("actions"))
    throw Error("bad species document");
  GradedObject ob(j["truncation"].get<int>(),
                  j["dims"].get<std::vector<int>>());
  return SymmetricSequence(std::move(ob), actions_from_json(j["actions"]));
}

json to_json(const Structured& s) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = structured_tag(s.kind);
  j["structure"] = kind_name(s.kind);
  j["carrier"] = to_json(s.carrier);
  json comps = json::object();
  for (const auto& [key, m] : s.comps)
    comps[comp_key_string(kind_product(s.kind), key)] = to_json(m);
  j["components"] = std::move(comps);
  json units = json::array();
  for (const auto& m : s.unit) units.push_back(to_json(m));
  j["units"] = std::move(units);
  if (s.sym) j["actions"] = actions_to_json(*s.sym);
  return j;
}

Structured structured_from_json(const json& j) {
  check_keys(j, {"schema", "kind", "structure", "carrier", "components",
                 "units", "actions"});
  if (!j.contains("structure") || !j["structure"].is_string())
    throw Error("bad structured document");
  Structured s;
  s.kind = kind_from_name(j["structure"].get<std::string>());
  check_document(j, structured_tag(s.kind),
                 {"schema", "kind", "structure", "carrier", "components",
                  "units", "actions"});
  if (!j.contains("carrier") || !j.contains("components") ||
      !j.contains("units") || !j["components"].is_object() ||
      !j["units"].is_array())
    throw Error("bad structured document");
  s.carrier = graded_object_from_json(j["carrier"]);
  for (auto it = j["components"].begin(); it != j["components"].end(); ++it)
    s.comps[comp_key_parse(kind_product(s.kind), it.key())] =
        matrix_from_json(it.value());
  for (const auto& m : j["units"]) s.unit.push_back(matrix_from_json(m));
  if (kind_is_species(s.kind)) {
    if (!j.contains("actions")) throw Error("species kind needs actions");
    s.sym = SymmetricSequence(s.carrier, actions_from_json(j["actions"]));
  } else if (j.contains("actions")) {
    throw Error("unknown field: actions");
  }
  return s;
}

json to_json(const Report& r) {
  json j;
  j["ok"] = r.ok();
  json items = json::array();
  for (const auto& i : r.items) {
    json it;
    it["axiom"] = i.axiom;
    it["indices"] = i.indices;
    it["pass"] = i.pass;
    if (!i.detail.empty()) it["detail"] = i.detail;
    items.push_back(std::move(it));
  }
  j["items"] = std::move(items);
  return j;
}

json to_json(const MeasuringCandidate& m) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "measuring";
  j["pair"] = pair_name(m.pair);
  j["comonoid"] = to_json(m.comonoid);
  j["monoid-a"] = to_json(m.mon_a);
  j["monoid-b"] = to_json(m.mon_b);
  j["phi"] = to_json(m.phi);
  return j;
}

MeasuringCandidate measuring_from_json(const json& j) {
  check_document(j, "measuring", {"schema", "kind", "pair", "comonoid",
                                  "monoid-a", "monoid-b", "phi"});
  if (!j.contains("pair") || !j.contains("comonoid") ||
      !j.contains("monoid-a") || !j.contains("monoid-b") ||
      !j.contains("phi"))
    throw Error("bad measuring document");
  MeasuringCandidate m;
  m.pair = pair_from_name(j["pair"].get<std::string>());
  m.comonoid = structured_from_json(j["comonoid"]);
  m.mon_a = structured_from_json(j["monoid-a"]);
  m.mon_b = structured_from_json(j["monoid-b"]);
  m.phi = graded_map_from_json(j["phi"]);
  return m;
}

std::string document_kind(const json& j) {
  require_object(j);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error("document has no kind");
  return j["kind"].get<std::string>();
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("JSON parse error: ") + e.what());
  }
  require_object(j);
  return j;
}

void save_document(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  out << canonical_dump(j);
}

}  // namespace io
}  // namespace duocat
