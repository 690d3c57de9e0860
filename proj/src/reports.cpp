#include <cmath>
#include <cstdio>
#include <sstream>

#include "jt/model_report.hpp"
#include "jt/models.hpp"
#include "jt/report.hpp"

namespace jt {

using json = nlohmann::ordered_json;

bool AxiomReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& e : entries)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

namespace {

// below this, residuals are roundoff and differ between kernel backends
constexpr double kNoiseFloor = 1e-12;

// residuals go through the %.3e form so JSON output is stable in the last bits
double rounded(double r) { return std::abs(r) < kNoiseFloor ? 0.0 : std::stod(format_residual(r)); }

json check_json(const CheckResult& c) {
  json j;
  j["pass"] = c.pass;
  j["residual"] = rounded(c.residual);
  return j;
}

}  // namespace

json to_json(const AxiomResult& r) {
  json j;
  j["axiom"] = r.axiom;
  j["pass"] = r.pass;
  j["residual"] = rounded(r.residual);
  return j;
}

json to_json(const AxiomReport& r) {
  json j;
  j["pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& e : r.entries) checks.push_back(to_json(e));
  j["checks"] = std::move(checks);
  return j;
}

std::string to_text(const AxiomReport& r, const std::string& indent) {
  std::ostringstream os;
  for (const auto& e : r.entries)
    os << indent << (e.pass ? "PASS " : "FAIL ") << e.axiom << "  residual " << format_residual(e.residual) << "\n";
  return os.str();
}

json validation_section(const FiniteTriple& t, const ReportOptions& opt) {
  json j;
  const AxiomReport bg = check_background(t.background);
  const AxiomReport dirac = check_dirac(t);
  const CheckResult c1 = check_C1(t);
  const CheckResult weak = check_weak_C1(t);
  j["background"] = to_json(bg);
  j["dirac"] = to_json(dirac);
  json order;
  order["C0"] = check_json(check_C0(t.birep()));
  order["C1"] = check_json(c1);
  order["weak_C1"] = check_json(weak);
  order["policy"] = opt.require_c1 ? "require_C1" : "weak_C1_suffices";
  j["order_conditions"] = std::move(order);
  j["pass"] = bg.all_pass() && dirac.all_pass() && weak.pass && (c1.pass || !opt.require_c1);
  return j;
}

json gauge_section(const FiniteTriple& t, const ReportOptions& opt) {
  const BiRepresentation& r = t.birep();
  const MatrixLieAlgebra g = gauge_algebra(r);
  const AxiomReport props = gauge_properties(g, r);
  json j;
  j["gauge_dim"] = g.dim();
  j["classification"] = to_json(classify(g, opt.seed));
  j["unimodularity"] = to_json(props);
  j["kernel_ad"] = kernel_ad(r);
  j["pass"] = props.all_pass();
  return j;
}

namespace {

json fluct_json(const FiniteTriple& t, const FluctuationSpace& f, const MatrixLieAlgebra& g, const ReportOptions& opt) {
  json j = to_json(f, t.birep().chiral_blocks);
  const AxiomReport post = check_postulates(t, f, g, opt.postulate_samples, opt.seed);
  j["postulates"] = to_json(post);
  return j;
}

}  // namespace

json fluctuation_section(const FiniteTriple& t, const std::string& mode, const ReportOptions& opt) {
  if (mode != "minimal" && mode != "general" && mode != "both")
    throw std::invalid_argument("unknown fluctuation mode '" + mode + "'");
  const MatrixLieAlgebra g = gauge_algebra(t.birep());
  json j;
  bool pass = true;
  std::optional<FluctuationSpace> minimal;
  if (mode != "general") {
    minimal = minimal_fluctuations(t, g, opt.max_depth);
    json m = fluct_json(t, *minimal, g, opt);
    pass = pass && m["postulates"]["pass"].get<bool>();
    j["minimal"] = std::move(m);
  }
  if (mode != "minimal") {
    const CheckResult c1 = check_C1(t);
    if (!c1.pass) {
      json s;
      s["skipped"] = "C1 fails";
      s["C1_residual"] = rounded(c1.residual);
      j["general"] = std::move(s);
      pass = pass && !opt.require_c1;
    } else {
      const FluctuationSpace gen = general_fluctuations(t);
      json m = fluct_json(t, gen, g, opt);
      pass = pass && m["postulates"]["pass"].get<bool>();
      if (minimal) {
        const bool sub = gen.span.contains(minimal->span);
        m["contains_minimal"] = sub;
        pass = pass && sub;
      }
      j["general"] = std::move(m);
    }
  }
  j["pass"] = pass;
  return j;
}

namespace {

std::size_t traceless_dim(const RealSubspace& s) {
  bool any = false;
  for (const auto& b : s.basis()) any = any || std::abs(trace(b)) > s.tol() * std::max(1.0, b.norm());
  return s.dim() - (any ? 1 : 0);
}

json associative_section(const FiniteTriple& t, const ReportOptions& opt) {
  const BiRepresentation& r = t.birep();
  const int n = static_cast<int>(r.hilbert_dim() / 32);
  const RealSubspace skew = real_span(sm_skew_basis(n), r.tol);
  std::vector<ComplexMatrix> lifted;
  for (const auto& a : skew.basis()) lifted.push_back(d_upsilon(r, a));
  const RealSubspace lift = real_span(lifted, r.tol);
  const FluctuationSpace f = associative_fluctuations(t);
  json j;
  j["unitary_group"] = "U(1)xSU(2)xU(3)";
  j["skew_dim"] = skew.dim();
  j["skew_traceless_dim"] = traceless_dim(skew);
  j["lifted_dim"] = lift.dim();
  j["lifted_traceless_dim"] = traceless_dim(lift);
  j["associative_fluctuations"] = to_json(f, r.chiral_blocks);
  (void)opt;
  return j;
}

}  // namespace

json model_report(const FiniteTriple& t, const ReportOptions& opt) {
  const BiRepresentation& r = t.birep();
  json j;
  j["model"] = r.name;
  j["hilbert_dim"] = r.hilbert_dim();
  j["algebra"] = r.algebra.summary();
  j["algebra_dim"] = r.algebra.dim();
  json v = validation_section(t, opt);
  json g = gauge_section(t, opt);
  json f = fluctuation_section(t, "both", opt);
  j["gauge_dim"] = g["gauge_dim"];
  j["higgs"] = {{"minimal_dim", f["minimal"]["dim"]},
                {"general_dim", f["general"].contains("dim") ? f["general"]["dim"] : json(nullptr)}};
  const bool pass = v["pass"].get<bool>() && g["pass"].get<bool>() && f["pass"].get<bool>();
  j["validation"] = std::move(v);
  j["gauge"] = std::move(g);
  j["fluctuations"] = std::move(f);
  if (r.is_associative()) j["associative"] = associative_section(t, opt);
  j["pass"] = pass;
  return j;
}

namespace {

bool scalar_array(const json& a) {
  for (const auto& e : a)
    if (e.is_structured()) return false;
  return true;
}

void render(std::ostringstream& os, const json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    if (x.is_object()) {
      os << indent << it.key() << ":\n";
      render(os, x, indent + "  ");
    } else if (x.is_array() && !scalar_array(x)) {
      os << indent << it.key() << ":\n";
      for (const auto& e : x) {
        if (e.is_object() && e.contains("axiom") && e.size() == 3) {
          os << indent << "  " << (e["pass"].get<bool>() ? "PASS " : "FAIL ") << e["axiom"].get<std::string>()
             << "  residual " << format_residual(e["residual"].get<double>()) << "\n";
        } else if (e.is_object()) {
          os << indent << "  -\n";
          render(os, e, indent + "    ");
        } else {
          os << indent << "  - " << e.dump() << "\n";
        }
      }
    } else if (x.is_string()) {
      os << indent << it.key() << ": " << x.get<std::string>() << "\n";
    } else {
      os << indent << it.key() << ": " << x.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  render(os, doc, "");
  return os.str();
}

}  // namespace jt
