#include "ghostnum/report.hpp"

#include <sstream>

#include "ghostnum/classify.hpp"

namespace ghostnum {

using nlohmann::json;

json flags_json(const ClassificationFlags& f) {
  return {
      {"cyclic", f.cyclic},
      {"abelian", f.abelian},
      {"elementary_abelian", f.elementary_abelian},
      {"extraspecial", f.extraspecial},
      {"almost_extraspecial", f.almost_extraspecial},
      {"has_cyclic_maximal_subgroup", f.has_cyclic_maximal_subgroup},
      {"exponent_p_extraspecial", f.is_exponent_p_extraspecial},
      {"p1plus2_minus", f.is_p1plus2_minus},
      {"excluded_from_lower_bound", f.excluded_from_lower_bound},
      {"exponent", f.exponent},
      {"frattini_order", f.frattini_order},
      {"center_order", f.center_order},
      {"derived_order", f.derived_order},
  };
}

json bounds_json(const BoundsReport& r) {
  json sources = json::array();
  for (const auto& s : r.sources)
    sources.push_back({{"role", std::string(to_string(s.role))}, {"value", s.value}, {"provenance", s.provenance}});
  return {
      {"spec", r.spec},
      {"order", r.order},
      {"p", r.p},
      {"n", r.n},
      {"t_jennings", r.t_jennings},
      {"t_radical", r.t_radical ? json(*r.t_radical) : json(nullptr)},
      {"flags", flags_json(r.flags)},
      {"ghost_lower", r.ghost_lower},
      {"ghost_upper", r.ghost_upper},
      {"ghost_exact", r.ghost_exact ? json(*r.ghost_exact) : json(nullptr)},
      {"sources", sources},
  };
}

namespace {

json checks_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string optional_text(const std::optional<long long>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

json verification_json(const VerificationReport& r) {
  json groups = json::array();
  for (const auto& g : r.groups)
    groups.push_back({{"spec", g.spec}, {"bounds", bounds_json(g.bounds)}, {"checks", checks_json(g.checks)}});
  json orders = json::array();
  for (const auto& o : r.orders) orders.push_back({{"n", o.n}, {"checks", checks_json(o.checks)}});
  return {{"p", r.p}, {"n_max", r.n_max}, {"groups", groups}, {"orders", orders}};
}

json certificate_json(const ChainCertificate& c) {
  json nodes = json::array();
  for (const auto& n : c.nodes) nodes.push_back(n.blocks());
  json edges = json::array();
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& m = c.edges[i].matrix;
    json rows = json::array();
    for (fp::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (fp::Index k = 0; k < m.cols(); ++k) row.push_back(m(r, k));
      rows.push_back(row);
    }
    const auto& chk = c.edge_checks[i];
    edges.push_back({{"from", i},
                     {"to", i + 1},
                     {"matrix", rows},
                     {"equivariant", chk.equivariant},
                     {"tate_degree_0_zero", chk.degree0_zero},
                     {"tate_degree_minus1_zero", chk.degree_minus1_zero}});
  }
  return {{"modulus", c.m},
          {"p", c.p},
          {"length", c.length()},
          {"nodes", nodes},
          {"edges", edges},
          {"transcript",
           {{"factoring_rank", c.factoring_rank},
            {"rank_with_composite", c.augmented_rank},
            {"composite_stably_nontrivial", c.composite_stably_nontrivial()}}}};
}

json group_info_json(const GroupTable& g) {
  const StructuralSubgroups s = structural_subgroups(g);
  return {{"spec", g.label()},
          {"order", g.order()},
          {"p", g.prime()},
          {"n", g.log_order()},
          {"exponent", s.exponent},
          {"center_order", s.center.order()},
          {"derived_order", s.derived.order()},
          {"frattini_order", s.frattini.order()},
          {"omega1_center_order", s.omega1_center.order()},
          {"flags", flags_json(classify(g))}};
}

json summary_json(std::size_t pass, std::size_t fail, std::size_t skipped) {
  return {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
}

json make_report(const json& command, const json& result, const json& summary) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"result", result}, {"summary", summary}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string verification_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "spec,order,n,t_jennings,t_radical,ghost_lower,ghost_upper,ghost_exact,checks\n";
  for (const auto& g : r.groups) {
    std::string checks;
    for (const auto& c : g.checks) checks += (checks.empty() ? "" : " ") + c.id + ":" + std::string(to_string(c.status));
    const auto& b = g.bounds;
    os << csv_field(g.spec) << ',' << b.order << ',' << b.n << ',' << b.t_jennings << ',' << optional_text(b.t_radical)
       << ',' << b.ghost_lower << ',' << b.ghost_upper << ',' << optional_text(b.ghost_exact) << ',' << checks << '\n';
  }
  return os.str();
}

std::string verification_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Verification, p = " << r.p << ", n <= " << r.n_max << "\n\n";
  os << "pass " << r.count(CheckStatus::Pass) << ", fail " << r.count(CheckStatus::Fail) << ", skipped "
     << r.count(CheckStatus::Skipped) << "\n\n";
  os << "| group | order | t | ghost | failed |\n|---|---|---|---|---|\n";
  for (const auto& g : r.groups) {
    const auto& b = g.bounds;
    std::string ghost = b.ghost_exact ? std::to_string(*b.ghost_exact)
                                      : "[" + std::to_string(b.ghost_lower) + ", " + std::to_string(b.ghost_upper) + "]";
    std::string failed;
    for (const auto& c : g.checks)
      if (c.status == CheckStatus::Fail) failed += (failed.empty() ? "" : " ") + c.id;
    os << "| " << g.spec << " | " << b.order << " | " << b.t_jennings << " | " << ghost << " | " << failed << " |\n";
  }
  os << "\n## Per order\n\n";
  for (const auto& o : r.orders)
    for (const auto& c : o.checks)
      os << "- n = " << o.n << ", " << c.id << ": " << to_string(c.status) << " (" << c.detail << ")\n";
  bool any = false;
  for (const auto& g : r.groups)
    for (const auto& c : g.checks)
      if (c.status == CheckStatus::Fail) {
        if (!any) os << "\n## Failures\n\n";
        any = true;
        os << "- " << g.spec << " " << c.id << ": " << c.detail << "\n";
      }
  return os.str();
}

}  // namespace ghostnum
