#include <hcm/elementary.hpp>
#include <hcm/resolution.hpp>

#include <algorithm>
#include <sstream>

namespace hcm {

std::string monomial_name(const Partition& p) {
  if (p.empty()) return "1";
  std::vector<int> parts = p;
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i > 0) os << ' ';
    os << 'w' << parts[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::optional<Partition> parse_monomial(const std::string& name) {
  if (name == "1") return Partition{};
  std::istringstream is(name);
  std::string token;
  Partition out;
  while (is >> token) {
    if (token.size() < 2 || token[0] != 'w') return std::nullopt;
    const std::size_t caret = token.find('^');
    const std::string index = token.substr(1, caret == std::string::npos
                                                  ? std::string::npos
                                                  : caret - 1);
    const std::string power =
        caret == std::string::npos ? "1" : token.substr(caret + 1);
    auto number = [](const std::string& s) -> int {
      if (s.empty() || s.size() > 4) return 0;
      for (char c : s) {
        if (c < '0' || c > '9') return 0;
      }
      return std::stoi(s);
    };
    const int i = number(index);
    const int e = number(power);
    if (i <= 0 || e <= 0) return std::nullopt;
    out.insert(out.end(), static_cast<std::size_t>(e), i);
  }
  if (out.empty()) return std::nullopt;
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<Partition> partitions(int degree) {
  std::vector<Partition> out;
  if (degree < 0) return out;
  Partition current;
  auto build = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  build(build, degree, degree);
  return out;
}

void validate_link(const LinkDescriptor& link) {
  if (link.dim < 0) fail(ErrorKind::MalformedInput, "link dimension must be >= 0");
  if (link.parallelizable && !link.orientable) {
    fail(ErrorKind::MalformedInput,
         "link '" + link.name + "' is parallelizable but not orientable");
  }
  if (!link.sw_numbers) return;
  if (link.dim > 64) {
    fail(ErrorKind::MalformedInput, "Stiefel-Whitney tables are limited to dimension 64");
  }
  const std::vector<Partition> expected = partitions(static_cast<int>(link.dim));
  const auto& table = *link.sw_numbers;
  for (const Partition& p : expected) {
    if (!table.count(p)) {
      fail(ErrorKind::MalformedInput, "link '" + link.name +
                                          "': missing Stiefel-Whitney number " +
                                          monomial_name(p));
    }
  }
  for (const auto& [p, value] : table) {
    int degree = 0;
    for (int part : p) degree += part;
    if (degree != link.dim) {
      fail(ErrorKind::MalformedInput, "link '" + link.name + "': monomial " +
                                          monomial_name(p) + " has degree " +
                                          std::to_string(degree));
    }
    if (value != 0 && value != 1) {
      fail(ErrorKind::MalformedInput, "link '" + link.name +
                                          "': Stiefel-Whitney numbers are bits");
    }
  }
}

std::string_view existence_name(Existence e) {
  switch (e) {
    case Existence::Yes: return "yes";
    case Existence::No: return "no";
    case Existence::Undecidable: return "undecidable";
  }
  return "?";
}

namespace {

void require_dims(const std::vector<LinkDescriptor>& links, long n) {
  for (const LinkDescriptor& link : links) {
    validate_link(link);
    if (link.dim != n - 1) {
      fail(ErrorKind::Dimension, "link '" + link.name + "' has dimension " +
                                     std::to_string(link.dim) +
                                     ", expected " + std::to_string(n - 1));
    }
  }
}

// Overall verdict: no beats undecidable beats yes.
void summarize(ResolutionVerdict& v, const char* all_yes_rule) {
  bool unknown = false;
  for (const LinkFinding& f : v.links) {
    if (f.status == Existence::No) {
      v.exists = Existence::No;
      v.rule = f.rule + " (link " + f.link + ")";
      return;
    }
    if (f.status == Existence::Undecidable && !unknown) {
      unknown = true;
      v.rule = f.rule + " (link " + f.link + ")";
    }
  }
  if (unknown) {
    v.exists = Existence::Undecidable;
    return;
  }
  v.exists = Existence::Yes;
  v.rule = all_yes_rule;
}

std::string link_label(const LinkDescriptor& link, std::size_t i) {
  return link.name.empty() ? "#" + std::to_string(i + 1) : link.name;
}

}  // namespace

ResolutionVerdict check_resolution_exists(const std::vector<LinkDescriptor>& links,
                                          long n) {
  require_dims(links, n);
  ResolutionVerdict v;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const LinkDescriptor& link = links[i];
    LinkFinding f{link_label(link, i), Existence::Undecidable, "", ""};
    if (link.known_bordism_trivial) {
      f.status = *link.known_bordism_trivial ? Existence::Yes : Existence::No;
      f.rule = "asserted-bordism-class";
      f.detail = *link.known_bordism_trivial ? "link asserted to bound"
                                              : "link asserted not to bound";
    } else if (link.dim == 1 || link.dim == 3) {
      f.status = Existence::Yes;
      f.rule = "vanishing-bordism-group";
      f.detail = "the unoriented bordism group in dimension " +
                 std::to_string(link.dim) + " is zero";
    } else if (link.sw_numbers) {
      std::vector<std::string> nonzero;
      for (const auto& [p, value] : *link.sw_numbers) {
        if (value != 0) nonzero.push_back(monomial_name(p));
      }
      f.rule = "stiefel-whitney-numbers";
      if (nonzero.empty()) {
        f.status = Existence::Yes;
        f.detail = "all Stiefel-Whitney numbers vanish, so the link bounds";
      } else {
        f.status = Existence::No;
        f.detail = "nonzero Stiefel-Whitney numbers: " + nonzero.front();
        for (std::size_t k = 1; k < nonzero.size(); ++k) f.detail += ", " + nonzero[k];
      }
    } else {
      f.rule = "insufficient-data";
      f.detail = "no bordism assertion and no Stiefel-Whitney numbers";
    }
    v.links.push_back(std::move(f));
  }
  summarize(v, "every link bounds");
  if (v.exists != Existence::Undecidable) {
    v.remarks.push_back(
        "for a compact p-stratifold with isolated singularities, admitting a "
        "resolution is the same as being homeomorphic to a real algebraic set "
        "with isolated singularities, so this verdict answers that question too");
  }
  return v;
}

ResolutionVerdict check_optimal_resolution(const std::vector<LinkDescriptor>& links,
                                           long n) {
  require_dims(links, n);
  ResolutionVerdict v;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const LinkDescriptor& link = links[i];
    LinkFinding f{link_label(link, i), Existence::Undecidable, "", ""};
    if (n == 4) {
      f.rule = "dimension-four-orientability";
      f.status = link.orientable ? Existence::Yes : Existence::No;
      f.detail = link.orientable
                     ? "orientable 3-manifolds are spin and spin bordism vanishes in dimension 3"
                     : "non-orientable link";
    } else if (link.parallelizable && link.bounds_parallelizable.value_or(false)) {
      f.rule = "parallelizable-null-bordism";
      f.status = Existence::Yes;
      f.detail = "parallelizable link bounding a parallelizable manifold";
    } else if (link.lift_bordism_trivial) {
      f.rule = "supplied-lift-bordism-class";
      f.status = *link.lift_bordism_trivial ? Existence::Yes : Existence::No;
      f.detail = "lift of the normal Gauss map over BO<" +
                 std::to_string(n / 2 - 1) + "> asserted " +
                 (*link.lift_bordism_trivial ? "null-bordant" : "not null-bordant");
    } else {
      f.rule = "insufficient-data";
      f.detail = "needs the bordism class of a lift over BO<" +
                 std::to_string(n / 2 - 1) + ">";
    }
    v.links.push_back(std::move(f));
  }
  summarize(v, "every link admits a null-bordant lift");
  return v;
}

ResolutionVerdict check_s1_quotient(long dim_m, bool semi_free,
                                    bool isolated_fixed_points) {
  ResolutionVerdict v;
  if (dim_m < 1) fail(ErrorKind::MalformedInput, "dimension must be positive");
  if (!semi_free || !isolated_fixed_points) {
    v.rule = "hypotheses-not-met";
    v.remarks.push_back("the rule needs a semi-free action with isolated fixed points");
    return v;
  }
  if (dim_m % 2 != 0) {
    v.rule = "odd-dimension";
    v.remarks.push_back(
        "an isolated fixed point of a semi-free circle action forces even "
        "dimension, so no fixed point is possible here");
    return v;
  }
  const long m = dim_m / 2;
  const std::string link = "CP^" + std::to_string(m - 1);
  if (dim_m % 4 == 0) {
    v.exists = Existence::Yes;
    v.rule = "quaternionic-disk-bundle";
    v.remarks.push_back(link + " is the sphere bundle of a disk bundle over HP^" +
                        std::to_string(m / 2 - 1) + ", hence bounds");
  } else {
    v.exists = Existence::No;
    v.rule = "signature-obstruction";
    v.remarks.push_back(link + " has signature 1, hence does not bound an "
                               "oriented manifold");
  }
  v.links.push_back({link, v.exists, v.rule, "link at each fixed point"});
  return v;
}

void validate_neighborhood(const NeighborhoodDescriptor& d) {
  if (d.euler != d.triple.euler()) {
    fail(ErrorKind::MalformedInput, "neighborhood euler " + d.euler.str() +
                                        " does not match its triple (" +
                                        d.triple.euler().str() + ")");
  }
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::AlmostEquivalent: return "almost-equivalent";
    case Classification::StablyAlmostEquivalent: return "stably-almost-equivalent";
    case Classification::TopologicallyEquivalentStably:
      return "topologically-equivalent-stably";
    case Classification::ConditionsFailed: return "conditions-failed";
  }
  return "?";
}

namespace {

IntersectionTriple glued_triple(const NeighborhoodPair& p) {
  if (p.glued) return *p.glued;
  return glue_along_homology_sphere(p.first.triple, p.second.triple);
}

ConditionResult euler_condition(const NeighborhoodPair& p) {
  const bool ok = p.first.euler == p.second.euler;
  return {"euler", ok,
          "e = " + p.first.euler.str() + " vs " + p.second.euler.str()};
}

ConditionResult boundary_condition(const NeighborhoodPair& p) {
  const bool ok = p.first.boundary_structure_id == p.second.boundary_structure_id;
  return {"boundary", ok,
          "'" + p.first.boundary_structure_id + "' vs '" +
              p.second.boundary_structure_id + "'"};
}

ClassificationReport finish(std::vector<SingularityReport> per,
                            Classification success, std::string k_range) {
  ClassificationReport report;
  for (std::size_t i = 0; i < per.size(); ++i) {
    for (const ConditionResult& c : per[i].conditions) {
      if (!c.passed) {
        report.failed_conditions.push_back("singularity " + std::to_string(i + 1) +
                                           ": " + c.name);
      }
    }
  }
  report.per_singularity = std::move(per);
  if (report.failed_conditions.empty()) {
    report.verdict = success;
    report.k_range = std::move(k_range);
  }
  return report;
}

}  // namespace

ClassificationReport classify_resolutions(const std::vector<NeighborhoodPair>& pairs,
                                          long n) {
  if (n <= 2) {
    fail(ErrorKind::Precondition, "this classification needs n > 2; use the dimension 4 rule");
  }
  std::vector<SingularityReport> per;
  for (const NeighborhoodPair& p : pairs) {
    validate_neighborhood(p.first);
    validate_neighborhood(p.second);
    if (p.first.triple.n() != n || p.second.triple.n() != n) {
      fail(ErrorKind::MismatchedData, "neighborhood triples must have middle dimension " +
                                          std::to_string(n));
    }
    SingularityReport s;
    s.conditions.push_back(euler_condition(p));
    s.conditions.push_back({"index", p.first.index == p.second.index,
                            "k = " + p.first.index.str() + " vs " + p.second.index.str()});
    s.conditions.push_back(boundary_condition(p));
    const IntersectionTriple glued = glued_triple(p);
    const ElementaryVerdict v = decide_elementary(glued);
    std::string detail = "glued triple of rank " + std::to_string(glued.rank());
    if (v.obstruction) {
      detail += ": " + v.obstruction->name + " = " + v.obstruction->value.str();
    }
    s.conditions.push_back({"elementary", v.elementary, detail});
    per.push_back(std::move(s));
  }
  if (n % 2 != 0) {
    return finish(std::move(per), Classification::AlmostEquivalent, "k = 0");
  }
  return finish(std::move(per), Classification::StablyAlmostEquivalent,
                "k in {0, 1}");
}

ClassificationReport classify_resolutions_dim4(const std::vector<NeighborhoodPair>& pairs) {
  std::vector<SingularityReport> per;
  for (const NeighborhoodPair& p : pairs) {
    validate_neighborhood(p.first);
    validate_neighborhood(p.second);
    if (!p.first.spin.value_or(false) || !p.second.spin.value_or(false)) {
      fail(ErrorKind::Precondition, "the dimension 4 rule needs both resolutions spin");
    }
    if (p.first.triple.n() != 2 || p.second.triple.n() != 2) {
      fail(ErrorKind::MismatchedData, "dimension 4 neighborhoods have middle dimension 2");
    }
    SingularityReport s;
    s.conditions.push_back(euler_condition(p));
    s.conditions.push_back(boundary_condition(p));
    const IntersectionTriple glued = glued_triple(p);
    const Index sig = signature(glued.form()).signature();
    s.conditions.push_back({"signature", sig == 0,
                            "glued signature " + std::to_string(sig)});
    per.push_back(std::move(s));
  }
  return finish(std::move(per), Classification::TopologicallyEquivalentStably,
                "k in {0, 1}");
}

}  // namespace hcm
