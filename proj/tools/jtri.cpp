#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "jt/gauge.hpp"
#include "jt/kernels.hpp"
#include "jt/model_file.hpp"
#include "jt/model_report.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kCheckFailure = 1, kInputError = 2, kInternal = 3 };

int emit_error(int code, const std::string& kind, const std::string& message, const json& extra = json::object()) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  std::cerr << j.dump() << "\n";
  return code;
}

struct Args {
  std::string file;
  std::string format = "json";
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool require_c1 = false;
  std::string mode = "minimal";
  int samples = 20;
};

std::optional<double> env_tol() {
  const char* v = std::getenv("JTRI_TOL");
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const double t = std::stod(v, &used);
    if (used == std::string(v).size() && t > 0.0) return t;
  } catch (const std::exception&) {
  }
  throw jt::ValidationError(std::string("JTRI_TOL is not a positive number: '") + v + "'");
}

int run(const std::string& command, const Args& a) {
  jt::ModelFile m = jt::parse_model(a.file);
  if (a.tol) {
    m.tol = a.tol;
  } else if (!m.tol) {
    m.tol = env_tol();
  }
  if (a.seed) m.seed = *a.seed;
  jt::validate(m);
  const jt::FiniteTriple t = jt::build_triple(m);

  jt::ReportOptions opt;
  opt.seed = m.seed;
  opt.max_depth = m.max_depth;
  opt.require_c1 = a.require_c1;
  opt.postulate_samples = a.samples;

  json doc;
  if (command == "validate") {
    doc = jt::validation_section(t, opt);
  } else if (command == "gauge") {
    doc = jt::gauge_section(t, opt);
  } else if (command == "fluctuate") {
    doc = jt::fluctuation_section(t, a.mode, opt);
    if (doc.contains("minimal")) {
      for (const auto& b : doc["minimal"]["block_profile"])
        if (b["block"] == "L,R") doc["higgs_LR_complex_dim"] = b["complex_dim"];
    }
  } else {
    doc = jt::model_report(t, opt);
  }
  json out;
  out["command"] = command;
  out["model"] = t.birep().name;
  out["N"] = m.N;
  for (auto it = doc.begin(); it != doc.end(); ++it) out[it.key()] = it.value();
  if (a.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << jt::render_text(out);
  return out["pass"].get<bool>() ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jtri: finite Jordan spectral triples"};
  app.require_subcommand(1);
  Args a;
  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "kernel backend")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", a.file, "model file")->required();
    sub->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol", a.tol, "tolerance (overrides the file and JTRI_TOL)");
    sub->add_option("--seed", a.seed, "seed (overrides the file)");
    sub->add_flag("--require-c1", a.require_c1, "treat a C1 failure as fatal");
    sub->add_option("--samples", a.samples, "postulate samples")->check(CLI::NonNegativeNumber);
  };
  CLI::App* validate = app.add_subcommand("validate", "background and order-condition checks");
  CLI::App* gauge = app.add_subcommand("gauge", "gauge algebra and classification");
  CLI::App* fluctuate = app.add_subcommand("fluctuate", "fluctuation spaces and block profiles");
  CLI::App* report = app.add_subcommand("report", "full model report");
  for (CLI::App* s : {validate, gauge, fluctuate, report}) add_common(s);
  fluctuate->add_option("--mode", a.mode, "minimal | general | both")
      ->check(CLI::IsMember({"minimal", "general", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(kInputError, "usage", e.what());
  }

  std::string command;
  for (CLI::App* s : {validate, gauge, fluctuate, report})
    if (s->parsed()) command = s->get_name();

  try {
    if (kernels != "auto")
      jt::kernels::select_backend(kernels == "scalar" ? jt::kernels::Backend::Scalar : jt::kernels::Backend::Avx2);
    return run(command, a);
  } catch (const jt::ParseError& e) {
    return emit_error(kInputError, "parse_error", e.message(), {{"line", e.line()}, {"column", e.column()}});
  } catch (const jt::ValidationError& e) {
    return emit_error(kInputError, "validation_error", e.what());
  } catch (const jt::UnsupportedSummand& e) {
    return emit_error(kInputError, "validation_error", e.what());
  } catch (const jt::DepthExceeded& e) {
    return emit_error(kInternal, "depth_exceeded", e.what());
  } catch (const std::exception& e) {
    return emit_error(kInternal, "internal", e.what());
  }
}
