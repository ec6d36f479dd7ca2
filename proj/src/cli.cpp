#include <hcm/cli.hpp>
#include <hcm/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hcm::cli {

namespace {

using io::Json;

struct Settings {
  std::string command;
  std::string input;
  std::optional<int> radius;
  std::optional<int> budget;
  std::string format = "json";
};

struct Outcome {
  Json input;
  Json result;
  std::vector<std::string> summary;
  int status = kExitOk;
};

std::string read_all(std::istream& s) {
  std::ostringstream os;
  os << s.rdbuf();
  return os.str();
}

SearchBudget budget_for(const Settings& s, const io::Options& o) {
  SearchBudget b;
  if (const auto v = s.budget ? s.budget : o.budget) b.max_radius = *v;
  return b;
}

std::string join(const IntVector& v) { return to_string(v); }

Json invariants(const IntersectionTriple& t, const SearchBudget& budget,
                std::vector<std::string>& summary) {
  Json r;
  std::vector<std::string> notes;
  r["rank"] = t.rank();
  r["determinant"] = io::write_int(t.form().determinant());
  summary.push_back("rank " + std::to_string(t.rank()) + ", determinant " +
                    t.form().determinant().str());
  if (t.form().is_symmetric()) {
    const Inertia in = signature(t.form());
    r["signature"] = Json{{"positive", in.positive},
                          {"negative", in.negative},
                          {"signature", in.signature()}};
    const bool even = form_type(t.form()) == FormType::II;
    r["type"] = even ? "II" : "I";
    summary.push_back("signature " + std::to_string(in.signature()) + " (" +
                      std::to_string(in.positive) + ", " + std::to_string(in.negative) +
                      "), type " + (even ? "II" : "I"));
  } else {
    r["signature"] = nullptr;
    r["type"] = nullptr;
    notes.push_back("skew-symmetric form: no signature or type");
  }

  try {
    r["case"] = elementary_case(t);
  } catch (const Error& e) {
    r["case"] = nullptr;
    notes.push_back(std::string("case: ") + e.what());
  }

  r["arf"] = nullptr;
  const GroupKind kind = t.group().kind();
  if (kind == GroupKind::OrderTwo || kind == GroupKind::OrderTwoSquared) {
    try {
      const SymplecticBasis basis = t.form().is_symmetric()
                                        ? hyperbolic_basis_symmetric(t.form(), budget)
                                        : symplectic_basis_skew(t.form());
      const Int phi = arf_invariant(t, basis);
      r["arf"] = io::write_int(phi);
      summary.push_back("Arf invariant " + phi.str());
    } catch (const Error& e) {
      notes.push_back(std::string("arf: ") + e.what());
    }
  }

  r["kappa"] = nullptr;
  if (t.nu().stable && kind == GroupKind::IntegerCyclic) {
    try {
      const CharacteristicElement ce = characteristic_element(t);
      r["kappa"] = Json{{"vector", io::write_vector(ce.kappa)},
                        {"square", io::write_int(ce.kappa_squared)}};
      summary.push_back("kappa " + join(ce.kappa) + ", kappa^2 = " +
                        ce.kappa_squared.str());
    } catch (const Error& e) {
      notes.push_back(std::string("kappa: ") + e.what());
    }
  } else if (kind == GroupKind::OrderTwoSquared) {
    try {
      const IntVector k = characteristic_element_mod2(t);
      r["kappa"] = Json{{"vector_mod2", io::write_vector(k)}};
      summary.push_back("kappa mod 2 " + join(k));
    } catch (const Error& e) {
      notes.push_back(std::string("kappa: ") + e.what());
    }
  }

  try {
    const IndexResult idx = index_of(t);
    r["index"] = Json{{"k", io::write_int(idx.k)}, {"whole_group", idx.whole_group}};
    summary.push_back("index k = " + idx.k.str() +
                      (idx.whole_group ? " (whole group)" : ""));
  } catch (const Error& e) {
    r["index"] = nullptr;
    notes.push_back(std::string("index: ") + e.what());
  }
  r["notes"] = notes;
  for (const std::string& n : notes) summary.push_back("note: " + n);
  return r;
}

void describe_verdict(const ElementaryVerdict& v, std::vector<std::string>& summary) {
  summary.push_back(std::string(v.elementary ? "elementary" : "not elementary") +
                    " (case " + std::to_string(v.case_used) + ")");
  if (v.witness) {
    std::string line = "Lagrangian:";
    for (const IntVector& g : v.witness->generators) line += " " + join(g);
    if (v.witness->generators.empty()) line += " (empty)";
    summary.push_back(line);
  }
  if (v.obstruction) {
    summary.push_back("obstruction " + v.obstruction->name + " = " +
                      v.obstruction->value.str());
  }
}

Outcome dispatch(const Settings& s, const Json& doc) {
  Outcome o;
  if (s.command == "invariants" || s.command == "decide" || s.command == "surger" ||
      s.command == "oracle") {
    io::TripleProblem p = io::read_triple_problem(doc);
    if (s.radius) p.options.radius = s.radius;
    if (s.budget) p.options.budget = s.budget;
    o.input = io::write_triple_problem(p);
    const SearchBudget budget = budget_for(s, p.options);
    const IntersectionTriple& t = p.triple;
    if (s.command == "invariants") {
      o.result = invariants(t, budget, o.summary);
    } else if (s.command == "decide") {
      const ElementaryVerdict v = decide_elementary(t, budget);
      o.result = io::write_verdict(v);
      describe_verdict(v, o.summary);
    } else if (s.command == "surger") {
      const SurgeryTrace trace = reduce_to_sphere(t, budget);
      o.result = io::write_trace(trace);
      const IntersectionTriple& last = trace.steps.empty() ? t : trace.steps.back().after;
      o.result["final"] = io::write_triple(last);
      o.summary.push_back(std::to_string(trace.steps.size()) +
                          " surgery steps; final rank " + std::to_string(last.rank()) +
                          ", euler " + last.euler().str());
      for (const SurgeryStep& step : trace.steps) {
        o.summary.push_back("  kill pair " + std::to_string(step.killed_pair + 1) +
                            ": " + join(step.killed) + " -> rank " +
                            std::to_string(step.after.rank()));
      }
    } else {
      const int radius = p.options.radius.value_or(3);
      const LagrangianOracle oracle(t.form(), radius);
      const std::optional<LagrangianWitness> w = oracle.search(t);
      o.result = Json{{"radius", radius},
                      {"candidates", oracle.candidate_count()},
                      {"found", w.has_value()},
                      {"witness", w ? io::write_witness(*w) : Json(nullptr)}};
      if (w) {
        std::string line = "Lagrangian found:";
        for (const IntVector& g : w->generators) line += " " + join(g);
        o.summary.push_back(line);
      } else {
        o.summary.push_back("no Lagrangian within radius " + std::to_string(radius));
      }
    }
    return o;
  }
  if (s.command == "resolve") {
    const io::ResolveProblem p = io::read_resolve_problem(doc);
    o.input = io::write_resolve_problem(p);
    ResolutionVerdict v;
    switch (p.rule) {
      case io::ResolveRule::Existence: v = check_resolution_exists(p.links, p.n); break;
      case io::ResolveRule::Optimal: v = check_optimal_resolution(p.links, p.n); break;
      case io::ResolveRule::CircleQuotient:
        v = check_s1_quotient(p.dim_m, p.semi_free, p.isolated_fixed_points);
        break;
    }
    o.result = io::write_resolution(v);
    o.summary.push_back("resolution exists: " + std::string(existence_name(v.exists)) +
                        " [" + v.rule + "]");
    for (const LinkFinding& f : v.links) {
      o.summary.push_back("  " + f.link + ": " + std::string(existence_name(f.status)) +
                          " [" + f.rule + "] " + f.detail);
    }
    for (const std::string& r : v.remarks) o.summary.push_back("remark: " + r);
    if (v.exists == Existence::Undecidable) o.status = kExitUndecidable;
    return o;
  }
  // classify
  const io::ClassifyProblem p = io::read_classify_problem(doc);
  o.input = io::write_classify_problem(p);
  const ClassificationReport r = p.rule == io::ClassifyRule::General
                                     ? classify_resolutions(p.pairs, p.n)
                                     : classify_resolutions_dim4(p.pairs);
  o.result = io::write_classification(r);
  o.summary.push_back(std::string(classification_name(r.verdict)) +
                      (r.k_range.empty() ? "" : " (" + r.k_range + ")"));
  for (const std::string& f : r.failed_conditions) o.summary.push_back("  failed " + f);
  return o;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientInput:
    case ErrorKind::SearchBudget:
      return kExitUndecidable;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Intersection data of highly connected manifolds: elementary "
               "decisions, surgery and resolution rules",
               "hcm"};
  app.require_subcommand(1);
  Settings s;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"invariants", "signature, type, Arf invariant, characteristic element, index"},
      {"decide", "elementary verdict with a verified Lagrangian witness"},
      {"surger", "surgery reduction trace down to rank 0"},
      {"resolve", "resolution existence rules (links, optimal, circle quotients)"},
      {"classify", "classification of two resolutions"},
      {"oracle", "brute-force Lagrangian search"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", s.input, "document path (default: standard input)");
    sub->add_option("--radius", s.radius, "oracle box radius")->check(CLI::PositiveNumber);
    sub->add_option("--budget", s.budget, "isotropic search radius limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", s.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->callback([&s, n = std::string(name)] { s.command = n; });
  }

  std::vector<std::string> storage{"hcm"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Json report{{"command", s.command}};
  try {
    std::string text;
    if (s.input.empty() || s.input == "-") {
      text = read_all(in);
    } else {
      std::ifstream file(s.input);
      if (!file) throw io::InputError("", "cannot open '" + s.input + "'");
      text = read_all(file);
    }
    Outcome o = dispatch(s, io::parse_document(text));
    report["input"] = std::move(o.input);
    report["result"] = std::move(o.result);
    if (s.format == "json") {
      out << io::pretty(report) << '\n';
    } else {
      for (const std::string& line : o.summary) out << line << '\n';
    }
    return o.status;
  } catch (const Error& e) {
    Json error{{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
    if (const auto* ie = dynamic_cast<const io::InputError*>(&e)) {
      error["pointer"] = ie->pointer();
    }
    report["error"] = std::move(error);
    if (s.format == "json") {
      out << io::pretty(report) << '\n';
    }
    err << "hcm " << s.command << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace hcm::cli
