#include <hcm/io.hpp>

#include <algorithm>
#include <initializer_list>
#include <limits>

namespace hcm::io {

namespace {

std::string child(const std::string& at, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t index) {
  return at + "/" + std::to_string(index);
}

void require_object(const Json& j, const std::string& at,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InputError(at, "expected an object");
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw InputError(child(at, item.key()), "unknown field");
  }
}

const Json& required(const Json& j, const char* key, const std::string& at) {
  if (!j.contains(key)) throw InputError(child(at, key), "missing required field");
  return j.at(key);
}

bool read_bool(const Json& j, const std::string& at) {
  if (!j.is_boolean()) throw InputError(at, "expected true or false");
  return j.get<bool>();
}

std::string read_string(const Json& j, const std::string& at) {
  if (!j.is_string()) throw InputError(at, "expected a string");
  return j.get<std::string>();
}

long read_long(const Json& j, const std::string& at) {
  const Int v = read_int(j, at);
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
    throw InputError(at, "value out of range");
  }
  return v.convert_to<long>();
}

std::optional<bool> optional_bool(const Json& j, const char* key, const std::string& at) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return read_bool(j.at(key), child(at, key));
}

// Rethrows library validation errors with a location.
template <typename F>
auto located(const std::string& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(at, e.what());
  }
}

GroupElement read_element(const Json& j, const CoefficientGroup& g,
                          const std::string& at) {
  GroupElement e;
  if (g.kind() == GroupKind::OrderTwoSquared) {
    if (!j.is_array() || j.size() != 2) {
      throw InputError(at, "Z2xZ2 elements are written [a, b]");
    }
    e = {read_int(j[0], child(at, 0)), read_int(j[1], child(at, 1))};
  } else {
    e.first = read_int(j, at);
  }
  if (!g.contains(e)) {
    throw InputError(at, "not a reduced element of " +
                             std::string(group_kind_name(g.kind())));
  }
  return e;
}

Json write_element(const GroupElement& e, const CoefficientGroup& g) {
  if (g.kind() == GroupKind::OrderTwoSquared) {
    return Json::array({write_int(e.first), write_int(e.second)});
  }
  return write_int(e.first);
}

Int default_euler(long n, Index rank, BoundaryKind b) {
  const Int middle = (n % 2 == 0 ? 1 : -1) * static_cast<long>(rank);
  return b == BoundaryKind::Closed ? 2 + middle : 1 + middle;
}

Options read_options(const Json& doc) {
  Options o;
  if (!doc.contains("options")) return o;
  const Json& j = doc.at("options");
  const std::string at = "/options";
  require_object(j, at, {"radius", "budget"});
  if (j.contains("radius")) o.radius = static_cast<int>(read_long(j.at("radius"), at + "/radius"));
  if (j.contains("budget")) o.budget = static_cast<int>(read_long(j.at("budget"), at + "/budget"));
  if (o.radius && *o.radius < 1) throw InputError(at + "/radius", "must be positive");
  if (o.budget && *o.budget < 1) throw InputError(at + "/budget", "must be positive");
  return o;
}

void check_version(const Json& doc) {
  const std::string v = read_string(required(doc, "version", ""), "/version");
  if (v != kSchemaVersion) {
    throw InputError("/version", "unsupported schema version '" + v + "'");
  }
}

Json header() { return Json{{"version", kSchemaVersion}}; }

}  // namespace

Int read_int(const Json& j, const std::string& at) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    throw InputError(at, "floating-point numbers are not accepted; write large "
                         "integers as decimal strings");
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    const bool digits = s.size() > start &&
                        std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                    [](char c) { return c >= '0' && c <= '9'; });
    if (!digits) throw InputError(at, "expected a decimal integer string");
    return Int(s);
  }
  throw InputError(at, "expected an integer");
}

Json write_int(const Int& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

IntersectionTriple read_triple(const Json& j, const std::string& at) {
  require_object(j, at, {"n", "form", "euler", "boundary", "nu"});
  const long n = read_long(required(j, "n", at), child(at, "n"));
  if (n < 2) throw InputError(child(at, "n"), "middle dimension must be >= 2");

  const std::string form_at = child(at, "form");
  const Json& rows = required(j, "form", at);
  if (!rows.is_array()) throw InputError(form_at, "expected an array of rows");
  const Index r = static_cast<Index>(rows.size());
  IntMatrix m(r, r);
  for (Index i = 0; i < r; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    const std::string row_at = child(form_at, static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Index>(row.size()) != r) {
      throw InputError(row_at, "form must be square (" + std::to_string(r) +
                                   " entries per row)");
    }
    for (Index c = 0; c < r; ++c) {
      m(i, c) = read_int(row[static_cast<std::size_t>(c)],
                         child(row_at, static_cast<std::size_t>(c)));
    }
  }
  const int epsilon = n % 2 == 0 ? 1 : -1;
  BilinearForm form = located(form_at, [&] { return BilinearForm(m, epsilon); });

  BoundaryKind boundary = BoundaryKind::Closed;
  if (j.contains("boundary")) {
    const std::string b = read_string(j.at("boundary"), child(at, "boundary"));
    bool matched = false;
    for (BoundaryKind k : {BoundaryKind::Closed, BoundaryKind::HomologySphere,
                           BoundaryKind::Other}) {
      if (boundary_kind_name(k) == b) {
        boundary = k;
        matched = true;
      }
    }
    if (!matched) {
      throw InputError(child(at, "boundary"),
                       "expected closed, homology_sphere or other");
    }
  }

  const std::string nu_at = child(at, "nu");
  const Json& nu_json = required(j, "nu", at);
  require_object(nu_json, nu_at,
                 {"group", "boundary_element", "values", "stable", "stable_component"});
  QuadraticData nu;
  const std::string g = read_string(required(nu_json, "group", nu_at), child(nu_at, "group"));
  const std::optional<GroupKind> kind = parse_group_kind(g);
  if (!kind) throw InputError(child(nu_at, "group"), "expected 0, Z, Z2 or Z2xZ2");
  nu.group = CoefficientGroup(*kind);
  if (nu_json.contains("boundary_element")) {
    nu.boundary_element = read_element(nu_json.at("boundary_element"), nu.group,
                                       child(nu_at, "boundary_element"));
  }
  const Json& values = required(nu_json, "values", nu_at);
  const std::string values_at = child(nu_at, "values");
  if (!values.is_array()) throw InputError(values_at, "expected an array");
  if (static_cast<Index>(values.size()) != r) {
    throw InputError(values_at, "expected one value per basis vector (" +
                                    std::to_string(r) + ")");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    nu.basis_values.push_back(read_element(values[i], nu.group, child(values_at, i)));
  }
  if (nu_json.contains("stable")) {
    nu.stable = read_bool(nu_json.at("stable"), child(nu_at, "stable"));
  }
  if (nu_json.contains("stable_component")) {
    const long s = read_long(nu_json.at("stable_component"), child(nu_at, "stable_component"));
    if (s != 0 && s != 1) throw InputError(child(nu_at, "stable_component"), "must be 0 or 1");
    nu.stable_component = static_cast<int>(s);
  }

  Int euler = default_euler(n, r, boundary);
  if (j.contains("euler")) {
    euler = read_int(j.at("euler"), child(at, "euler"));
  } else if (boundary == BoundaryKind::Other) {
    throw InputError(child(at, "euler"), "required when boundary is 'other'");
  }
  return located(at, [&] {
    return IntersectionTriple(n, std::move(form), std::move(nu), euler, boundary);
  });
}

Json write_triple(const IntersectionTriple& t) {
  Json form = Json::array();
  for (Index i = 0; i < t.rank(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < t.rank(); ++c) row.push_back(write_int(t.form()(i, c)));
    form.push_back(std::move(row));
  }
  const QuadraticData& nu = t.nu();
  Json values = Json::array();
  for (const GroupElement& e : nu.basis_values) values.push_back(write_element(e, nu.group));
  Json nu_json{{"group", std::string(group_kind_name(nu.group.kind()))},
               {"boundary_element", write_element(nu.boundary_element, nu.group)},
               {"values", std::move(values)},
               {"stable", nu.stable},
               {"stable_component", nu.stable_component}};
  return Json{{"n", t.n()},
              {"form", std::move(form)},
              {"euler", write_int(t.euler())},
              {"boundary", std::string(boundary_kind_name(t.boundary()))},
              {"nu", std::move(nu_json)}};
}

LinkDescriptor read_link(const Json& j, const std::string& at) {
  require_object(j, at, {"name", "dim", "orientable", "parallelizable",
                         "bounds_parallelizable", "sw_numbers",
                         "known_bordism_trivial", "lift_bordism_trivial"});
  LinkDescriptor link;
  if (j.contains("name")) link.name = read_string(j.at("name"), child(at, "name"));
  link.dim = read_long(required(j, "dim", at), child(at, "dim"));
  link.orientable = read_bool(required(j, "orientable", at), child(at, "orientable"));
  link.parallelizable =
      read_bool(required(j, "parallelizable", at), child(at, "parallelizable"));
  link.bounds_parallelizable = optional_bool(j, "bounds_parallelizable", at);
  link.known_bordism_trivial = optional_bool(j, "known_bordism_trivial", at);
  link.lift_bordism_trivial = optional_bool(j, "lift_bordism_trivial", at);
  if (j.contains("sw_numbers") && !j.at("sw_numbers").is_null()) {
    const Json& table = j.at("sw_numbers");
    const std::string table_at = child(at, "sw_numbers");
    if (!table.is_object()) throw InputError(table_at, "expected an object");
    std::map<Partition, int> numbers;
    for (const auto& item : table.items()) {
      const std::string key_at = child(table_at, item.key());
      const std::optional<Partition> p = parse_monomial(item.key());
      if (!p) throw InputError(key_at, "expected a monomial such as \"w1^2 w2\"");
      if (numbers.count(*p)) throw InputError(key_at, "monomial listed twice");
      numbers[*p] = static_cast<int>(read_long(item.value(), key_at));
    }
    link.sw_numbers = std::move(numbers);
  }
  located(at, [&] { validate_link(link); });
  return link;
}

Json write_link(const LinkDescriptor& link) {
  Json j{{"name", link.name},
         {"dim", link.dim},
         {"orientable", link.orientable},
         {"parallelizable", link.parallelizable}};
  if (link.bounds_parallelizable) j["bounds_parallelizable"] = *link.bounds_parallelizable;
  if (link.sw_numbers) {
    Json table = Json::object();
    for (const Partition& p : partitions(static_cast<int>(link.dim))) {
      table[monomial_name(p)] = link.sw_numbers->at(p);
    }
    j["sw_numbers"] = std::move(table);
  }
  if (link.known_bordism_trivial) j["known_bordism_trivial"] = *link.known_bordism_trivial;
  if (link.lift_bordism_trivial) j["lift_bordism_trivial"] = *link.lift_bordism_trivial;
  return j;
}

NeighborhoodDescriptor read_neighborhood(const Json& j, const std::string& at) {
  require_object(j, at, {"triple", "euler", "index", "boundary_structure_id", "spin"});
  IntersectionTriple t = read_triple(required(j, "triple", at), child(at, "triple"));
  Int euler = t.euler();
  if (j.contains("euler")) euler = read_int(j.at("euler"), child(at, "euler"));
  NeighborhoodDescriptor d{std::move(t), std::move(euler),
                           read_int(required(j, "index", at), child(at, "index")),
                           read_string(required(j, "boundary_structure_id", at),
                                       child(at, "boundary_structure_id")),
                           optional_bool(j, "spin", at)};
  located(child(at, "euler"), [&] { validate_neighborhood(d); });
  return d;
}

Json write_neighborhood(const NeighborhoodDescriptor& d) {
  Json j{{"triple", write_triple(d.triple)},
         {"euler", write_int(d.euler)},
         {"index", write_int(d.index)},
         {"boundary_structure_id", d.boundary_structure_id}};
  if (d.spin) j["spin"] = *d.spin;
  return j;
}

TripleProblem read_triple_problem(const Json& doc) {
  require_object(doc, "", {"version", "triple", "options"});
  check_version(doc);
  return {read_triple(required(doc, "triple", ""), "/triple"), read_options(doc)};
}

Json write_triple_problem(const TripleProblem& p) {
  Json j = header();
  j["triple"] = write_triple(p.triple);
  if (p.options.radius || p.options.budget) {
    Json o = Json::object();
    if (p.options.radius) o["radius"] = *p.options.radius;
    if (p.options.budget) o["budget"] = *p.options.budget;
    j["options"] = std::move(o);
  }
  return j;
}

ResolveProblem read_resolve_problem(const Json& doc) {
  require_object(doc, "", {"version", "rule", "n", "links", "dim_m", "semi_free",
                           "isolated_fixed_points"});
  check_version(doc);
  ResolveProblem p;
  const std::string rule = read_string(required(doc, "rule", ""), "/rule");
  if (rule == "existence") {
    p.rule = ResolveRule::Existence;
  } else if (rule == "optimal") {
    p.rule = ResolveRule::Optimal;
  } else if (rule == "s1_quotient") {
    p.rule = ResolveRule::CircleQuotient;
  } else {
    throw InputError("/rule", "expected existence, optimal or s1_quotient");
  }
  if (p.rule == ResolveRule::CircleQuotient) {
    for (const char* key : {"n", "links"}) {
      if (doc.contains(key)) throw InputError(child("", key), "not used by s1_quotient");
    }
    p.dim_m = read_long(required(doc, "dim_m", ""), "/dim_m");
    p.semi_free = read_bool(required(doc, "semi_free", ""), "/semi_free");
    p.isolated_fixed_points =
        read_bool(required(doc, "isolated_fixed_points", ""), "/isolated_fixed_points");
    return p;
  }
  for (const char* key : {"dim_m", "semi_free", "isolated_fixed_points"}) {
    if (doc.contains(key)) throw InputError(child("", key), "only used by s1_quotient");
  }
  p.n = read_long(required(doc, "n", ""), "/n");
  const Json& links = required(doc, "links", "");
  if (!links.is_array()) throw InputError("/links", "expected an array");
  for (std::size_t i = 0; i < links.size(); ++i) {
    p.links.push_back(read_link(links[i], child("/links", i)));
    if (p.links.back().dim != p.n - 1) {
      throw InputError(child(child("/links", i), "dim"),
                       "link dimension must be n - 1 = " + std::to_string(p.n - 1));
    }
  }
  return p;
}

Json write_resolve_problem(const ResolveProblem& p) {
  Json j = header();
  switch (p.rule) {
    case ResolveRule::CircleQuotient:
      j["rule"] = "s1_quotient";
      j["dim_m"] = p.dim_m;
      j["semi_free"] = p.semi_free;
      j["isolated_fixed_points"] = p.isolated_fixed_points;
      return j;
    case ResolveRule::Existence: j["rule"] = "existence"; break;
    case ResolveRule::Optimal: j["rule"] = "optimal"; break;
  }
  j["n"] = p.n;
  Json links = Json::array();
  for (const LinkDescriptor& l : p.links) links.push_back(write_link(l));
  j["links"] = std::move(links);
  return j;
}

ClassifyProblem read_classify_problem(const Json& doc) {
  require_object(doc, "", {"version", "rule", "n", "pairs"});
  check_version(doc);
  ClassifyProblem p;
  const std::string rule = read_string(required(doc, "rule", ""), "/rule");
  if (rule == "general") {
    p.rule = ClassifyRule::General;
  } else if (rule == "dimension4") {
    p.rule = ClassifyRule::DimensionFour;
  } else {
    throw InputError("/rule", "expected general or dimension4");
  }
  p.n = read_long(required(doc, "n", ""), "/n");
  if (p.rule == ClassifyRule::DimensionFour && p.n != 2) {
    throw InputError("/n", "the dimension4 rule has middle dimension n = 2");
  }
  const Json& pairs = required(doc, "pairs", "");
  if (!pairs.is_array()) throw InputError("/pairs", "expected an array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = child("/pairs", i);
    require_object(pairs[i], at, {"first", "second", "glued"});
    NeighborhoodPair pair{read_neighborhood(required(pairs[i], "first", at), child(at, "first")),
                          read_neighborhood(required(pairs[i], "second", at), child(at, "second")),
                          std::nullopt};
    if (pairs[i].contains("glued") && !pairs[i].at("glued").is_null()) {
      pair.glued = read_triple(pairs[i].at("glued"), child(at, "glued"));
    }
    p.pairs.push_back(std::move(pair));
  }
  return p;
}

Json write_classify_problem(const ClassifyProblem& p) {
  Json j = header();
  j["rule"] = p.rule == ClassifyRule::General ? "general" : "dimension4";
  j["n"] = p.n;
  Json pairs = Json::array();
  for (const NeighborhoodPair& pair : p.pairs) {
    Json item{{"first", write_neighborhood(pair.first)},
              {"second", write_neighborhood(pair.second)}};
    if (pair.glued) item["glued"] = write_triple(*pair.glued);
    pairs.push_back(std::move(item));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json write_vector(const IntVector& v) {
  Json j = Json::array();
  for (Index i = 0; i < v.size(); ++i) j.push_back(write_int(v(i)));
  return j;
}

Json write_basis(const SymplecticBasis& b) {
  Json lambdas = Json::array();
  Json mus = Json::array();
  for (const IntVector& v : b.lambdas) lambdas.push_back(write_vector(v));
  for (const IntVector& v : b.mus) mus.push_back(write_vector(v));
  return Json{{"lambdas", std::move(lambdas)}, {"mus", std::move(mus)}};
}

Json write_witness(const LagrangianWitness& w) {
  Json gens = Json::array();
  for (const IntVector& g : w.generators) gens.push_back(write_vector(g));
  Json checks = Json::array();
  for (const WitnessCheck& c : w.verification) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"generators", std::move(gens)}, {"checks", std::move(checks)}};
}

Json write_verdict(const ElementaryVerdict& v) {
  Json j{{"elementary", v.elementary}, {"case", v.case_used}};
  j["witness"] = v.witness ? write_witness(*v.witness) : Json(nullptr);
  j["obstruction"] = v.obstruction ? Json{{"name", v.obstruction->name},
                                          {"value", write_int(v.obstruction->value)}}
                                   : Json(nullptr);
  return j;
}

Json write_trace(const SurgeryTrace& trace) {
  Json steps = Json::array();
  for (const SurgeryStep& s : trace.steps) {
    steps.push_back(Json{{"pair", s.killed_pair + 1},
                         {"killed", write_vector(s.killed)},
                         {"basis", write_basis(s.basis)},
                         {"result", write_triple(s.after)}});
  }
  return Json{{"length", trace.steps.size()}, {"steps", std::move(steps)}};
}

Json write_resolution(const ResolutionVerdict& v) {
  Json links = Json::array();
  for (const LinkFinding& f : v.links) {
    links.push_back(Json{{"link", f.link},
                         {"status", std::string(existence_name(f.status))},
                         {"rule", f.rule},
                         {"detail", f.detail}});
  }
  return Json{{"exists", std::string(existence_name(v.exists))},
              {"rule", v.rule},
              {"links", std::move(links)},
              {"remarks", v.remarks}};
}

Json write_classification(const ClassificationReport& r) {
  Json per = Json::array();
  for (const SingularityReport& s : r.per_singularity) {
    Json conditions = Json::array();
    for (const ConditionResult& c : s.conditions) {
      conditions.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    per.push_back(Json{{"conditions", std::move(conditions)}});
  }
  Json j{{"verdict", std::string(classification_name(r.verdict))}};
  j["k_range"] = r.k_range.empty() ? Json(nullptr) : Json(r.k_range);
  j["failed_conditions"] = r.failed_conditions;
  j["per_singularity"] = std::move(per);
  return j;
}

namespace {

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_primitive() || (e.is_array() && e.size() <= 2 &&
                                std::all_of(e.begin(), e.end(),
                                            [](const Json& x) { return x.is_primitive(); }));
  });
}

void pretty_into(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& item : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(item.key()).dump() + ": ";
      pretty_into(item.value(), depth + 1, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    bool first = true;
    for (const Json& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      pretty_into(e, depth + 1, out);
    }
    out += "\n" + close + "]";
  } else if (j.is_array()) {
    out += "[";
    bool first = true;
    for (const Json& e : j) {
      if (!first) out += ", ";
      first = false;
      out += e.dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string pretty(const Json& j) {
  std::string out;
  pretty_into(j, 0, out);
  return out;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("", std::string("not valid JSON: ") + e.what());
  }
}

}  // namespace hcm::io
