#include "z2z4q8/report.hpp"

#include <sstream>

#include <json.hpp>

namespace z2z4q8 {

AnalysisReport analyze(const CodeGroup& c, const CheckOptions& opt) {
  AnalysisReport r;
  r.structure = analyze_structure(c, opt);
  r.bounds = check_bounds(c, r.structure, opt);
  r.is_hadamard = is_hadamard(c);
  if (r.is_hadamard) {
    r.normalized = normalize_generators(c);
    r.shape = classify_shape(c);
    r.bounds.append(hadamard_bounds(c, r.structure, *r.shape, opt));
  }
  return r;
}

namespace {

using nlohmann::ordered_json;

ordered_json words(const std::vector<GroupWord>& ws) {
  auto out = ordered_json::array();
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

}  // namespace

std::string to_json(const AnalysisReport& r, int indent) {
  const auto& s = r.structure;
  ordered_json j;
  j["signature"] = {{"k1", s.signature.k1}, {"k2", s.signature.k2}, {"k3", s.signature.k3}, {"n", s.signature.n()},
                    {"l", s.signature.l()}};
  j["order"] = s.order;
  j["type"] = {s.type.sigma, s.type.delta, s.type.rho};
  j["rank"] = s.rank;
  j["kernel_dim"] = s.kernel_dim;
  j["is_linear"] = s.is_linear;
  j["is_abelian"] = s.is_abelian;
  j["is_hadamard"] = r.is_hadamard;
  j["shape"] = r.shape ? ordered_json(r.shape->tag) : ordered_json(nullptr);
  j["epsilon"] = r.normalized ? ordered_json(r.normalized->epsilon) : ordered_json(nullptr);
  auto wd = ordered_json::array();
  for (const auto& [w, count] : s.weight_distribution) wd.push_back({{"weight", w}, {"count", count}});
  j["weight_distribution"] = wd;
  auto bounds = ordered_json::array();
  for (const auto& b : r.bounds.checks) {
    ordered_json e = {{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"ok", b.ok}};
    if (b.excepted) e["excepted"] = true;
    bounds.push_back(e);
  }
  j["bounds"] = bounds;
  if (r.normalized) {
    const auto& g = r.normalized->gens;
    j["normalized_generators"] = {{"x", words(g.xs)}, {"y", words(g.ys)}, {"z", words(g.zs)}};
  } else {
    j["normalized_generators"] = nullptr;
  }
  return j.dump(indent);
}

std::string to_text(const AnalysisReport& r) {
  const auto& s = r.structure;
  std::ostringstream os;
  os << "group      " << s.signature.to_string() << " (n = " << s.signature.n() << ")\n";
  os << "order      " << s.order << "\n";
  os << "type       " << to_string(s.type) << "\n";
  os << "rank       " << s.rank << "\n";
  os << "kernel     " << s.kernel_dim << "\n";
  os << "linear     " << (s.is_linear ? "yes" : "no") << "\n";
  os << "abelian    " << (s.is_abelian ? "yes" : "no") << "\n";
  os << "hadamard   " << (r.is_hadamard ? "yes" : "no") << "\n";
  if (r.shape) {
    os << "shape      " << r.shape->tag << "  " << r.shape->structure << "\n";
    os << "epsilon    " << r.normalized->epsilon << "\n";
  }
  os << "weights   ";
  for (const auto& [w, count] : s.weight_distribution) os << " " << w << ":" << count;
  os << "\n";
  std::size_t failed = 0;
  for (const auto& b : r.bounds.checks) {
    if (!b.ok) {
      ++failed;
      os << "FAILED     " << b.name << " (" << b.lhs << " vs " << b.rhs << ")\n";
    } else if (b.excepted) {
      os << "exception  " << b.name << " (" << b.lhs << " vs " << b.rhs << ")\n";
    }
  }
  os << "bounds     " << r.bounds.checks.size() - failed << "/" << r.bounds.checks.size() << " hold\n";
  return os.str();
}

}  // namespace z2z4q8
