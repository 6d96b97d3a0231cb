#include "gkit/job.hpp"

#include "gkit/ainfty.hpp"
#include "gkit/finite_algebra.hpp"
#include "gkit/hochschild.hpp"
#include "gkit/xcomplex.hpp"

namespace gkit {

namespace {

nlohmann::json error_json(const Error& e) {
  nlohmann::json j{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* se = dynamic_cast<const SpecError*>(&e)) {
    j["line"] = se->line();
    j["column"] = se->column();
  }
  return j;
}

nlohmann::json envelope() { return {{"schema", kSchema}, {"tool", {{"name", "gkit"}, {"version", kVersion}}}}; }

nlohmann::json presentation_json(const DGPresentation& p) {
  nlohmann::json diff = nlohmann::json::object();
  for (int a = 0; a < p.quiver->num_arrows(); ++a) diff[p.quiver->arrow(a).name] = p.diff.on(a).to_string();
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : p.reports) reports.push_back(r.to_json());
  return {{"quiver", quiver_to_json(*p.quiver)}, {"differential", diff}, {"truncation", p.truncation},
          {"warnings", p.warnings}, {"reports", reports}};
}

bool reports_pass(const DGPresentation& p) {
  for (const auto& r : p.reports)
    if (!r.pass) return false;
  return true;
}

std::pair<int, int> window_or(const JobSpec& s, std::pair<int, int> fallback) { return s.window.value_or(fallback); }

/// Runs f and records either its result or the error it raised.
template <class F>
nlohmann::json attempt(F&& f, bool& failed) {
  try {
    return f();
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) == kExitCheckFailed) failed = true;
    return {{"status", exit_code_for(e.kind()) == kExitCheckFailed ? "fail" : "skipped"}, {"error", error_json(e)}};
  }
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MasterEquationFails:
    case ErrorKind::NotCyclicallySymmetric:
    case ErrorKind::RoundTripMismatch:
    case ErrorKind::StasheffFails:
    case ErrorKind::NotACocycle:
    case ErrorKind::NotCommutatorSum:
      return kExitCheckFailed;
    default:
      return kExitInputError;
  }
}

DGPresentation presentation(const JobSpec& s) {
  DGPresentation p = build_ginzburg(*s.quiver, s.d, s.potential, s.truncation);
  if (s.overrides.empty()) return p;
  for (const auto& [gen, f] : s.overrides) p.diff.values[p.quiver->require_arrow(gen)] = transport(f, p.quiver).with_truncation(p.truncation);
  for (auto& r : p.reports) {
    if (r.check == "d_squared") r = verify_d_squared(p);
    if (r.check == "master_equation") r.notes.push_back("applies to the potential only; differential overridden on some generators");
  }
  return p;
}

JobResult run_job(const JobSpec& s, std::optional<unsigned> seed) {
  JobResult res;
  res.report = envelope();
  res.report["command"] = to_string(s.command);
  nlohmann::json input{{"spec", print_spec(s)}, {"quiver", quiver_to_json(*s.quiver)}, {"d", s.d}, {"truncation", s.truncation}};
  if (s.window) input["window"] = {s.window->first, s.window->second};
  if (s.arity_max) input["arity_max"] = *s.arity_max;
  if (seed) input["seed"] = *seed;
  res.report["input"] = input;

  bool failed = false;
  nlohmann::json result;
  try {
    const DGPresentation p = presentation(s);
    const int arity = s.arity_max.value_or(6);
    switch (s.command) {
      case Command::Build:
        result = presentation_json(p);
        failed = !reports_pass(p);
        break;
      case Command::Check: {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : p.reports) checks.push_back(r.to_json());
        failed = !reports_pass(p);
        checks.push_back(attempt([&] {
          ExtractionResult e = extract_superpotential(p);
          nlohmann::json j = e.round_trip.to_json();
          j["w"] = e.w.to_string();
          failed = failed || !e.round_trip.pass;
          return j;
        }, failed));
        checks.push_back(attempt([&] {
          NormalizationResult n = normalize_dz(p);
          return nlohmann::json{{"check", "dz_standard_form"}, {"status", n.identity ? "pass" : "fail"}};
        }, failed));
        checks.push_back(attempt([&] {
          AInftyAlgebra a = koszul_dual(p, arity);
          nlohmann::json j = check_stasheff(a).to_json();
          CyclicReport c = cyclic_structure_check(a, s.d);
          failed = failed || !c.pass();
          return nlohmann::json::array({j, c.to_json(a)});
        }, failed));
        result["checks"] = checks;
        break;
      }
      case Command::Homology: {
        const auto [lo, hi] = window_or(s, {-2, 0});
        result = homology_dims(p, lo, hi).to_json();
        break;
      }
      case Command::Jacobi: {
        HomologyTable h = homology_dims(p, 0, 0);
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& b : h.jacobi_basis) basis.push_back(b.to_string());
        nlohmann::json lengths = nlohmann::json::object();
        for (const auto& [l, n] : h.jacobi_length_dims) lengths[std::to_string(l)] = n;
        result = {{"H0_dim", h.jacobi_basis.size()}, {"basis", basis}, {"length_dims", lengths}};
        break;
      }
      case Command::Hochschild: {
        const auto [lo, hi] = window_or(s, {-6, 0});
        FiniteAlgebra A = truncated_algebra(p, s.truncation);
        MixedComplex M = hochschild_mixed(A, -lo, lo, hi);
        InvariantReport inv = check_mixed_invariants(M);
        MixedHomologyReport rep = mixed_homology_report(M, p.quiver->num_vertices());
        result = rep.to_json();
        result["window"] = {lo, hi};
        result["invariants"] = inv.to_json();
        nlohmann::json dims = nlohmann::json::object();
        for (const auto& [m, n] : M.dims) dims[std::to_string(m)] = n;
        result["chain_dims"] = dims;
        result["edge_degrees"] = std::vector<int>(M.edge.begin(), M.edge.end());
        failed = !inv.pass() || !rep.audit_exact;
        break;
      }
      case Command::XComplex: {
        XComparison x = x_complex_report(p);
        result = x.to_json();
        failed = !x.agree;
        break;
      }
      case Command::Koszul: {
        AInftyAlgebra a = koszul_dual(p, arity);
        result = a.to_json();
        result["stasheff"] = check_stasheff(a).to_json();
        break;
      }
      case Command::Cyclic: {
        AInftyAlgebra a = koszul_dual(p, arity);
        CyclicReport c = cyclic_structure_check(a, s.d);
        result = c.to_json(a);
        failed = !c.pass();
        break;
      }
      case Command::Normalize:
        result = normalize_dz(p).to_json();
        break;
      case Command::Extract: {
        ExtractionResult e = extract_superpotential(p);
        result = {{"wbar", e.wbar.to_string()}, {"w", e.w.to_string()}, {"w_terms", element_to_json(e.w)},
                  {"round_trip", e.round_trip.to_json()}};
        failed = !e.round_trip.pass;
        break;
      }
    }
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.kind());
    res.report["status"] = res.exit_code == kExitCheckFailed ? "check_failed" : "error";
    res.report["error"] = error_json(e);
    return res;
  }
  res.exit_code = failed ? kExitCheckFailed : kExitOk;
  res.report["status"] = failed ? "check_failed" : "ok";
  res.report["result"] = result;
  return res;
}

JobResult run_text(const std::string& text, std::optional<unsigned> seed) {
  try {
    return run_job(parse_spec(text), seed);
  } catch (const Error& e) {
    JobResult res;
    res.report = envelope();
    res.report["status"] = "error";
    res.report["error"] = error_json(e);
    res.exit_code = kExitInputError;
    return res;
  }
}

}  // namespace gkit
