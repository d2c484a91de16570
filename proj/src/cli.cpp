#include "loopspace/cli.hpp"

#include "loopspace/bott.hpp"
#include "loopspace/certify.hpp"
#include "loopspace/cohomology.hpp"
#include "loopspace/dsl.hpp"
#include "loopspace/json_io.hpp"
#include "loopspace/spaceform.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

namespace loopspace::cli {

namespace {

using json_io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_max_degree() {
  const char* env = std::getenv("LOOPSPACE_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return kDefaultMaxDegree;
  const std::string_view s(env);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
    throw UsageError("LOOPSPACE_MAX_DEGREE must be a non-negative integer, got '" + std::string(s) + "'");
  return value;
}

template <class T>
T load(const std::string& path, dsl::SourceKind kind, std::ostream& err, std::string* normalized = nullptr) {
  dsl::SourceSpec src;
  try {
    src = dsl::SourceSpec::from_file(path, kind);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const dsl::ParseResult result = dsl::parse(src);
  for (const auto& d : result.diagnostics) err << d.format(src.origin) << '\n';
  if (!result.ok()) throw UsageError("cannot use '" + path + "'");
  const T& value = std::get<T>(*result.value);
  if (normalized) *normalized += dsl::print(value);
  return value;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_truncation(std::ostream& out, int max_degree) { out << "(truncated at degree " << max_degree << ")\n"; }

std::string group_name(const CyclicGroup& g) {
  if (!g.computed()) return "not computed";
  return g.trivial() ? "0 (trivial)" : "Z" + std::to_string(g.order);
}

// --- command handlers ------------------------------------------------------

int cmd_check_model(const std::string& file, bool as_json, std::ostream& out, std::ostream& err) {
  std::string input;
  const auto model = load<DgaModel>(file, dsl::SourceKind::dga, err, &input);
  const ModelReport report = check_model(model);
  if (as_json) {
    print_json(out, json_io::envelope("check-model", input, json_io::to_json(report)));
  } else {
    out << "model " << model.name() << ": " << (report.passed() ? "pass" : "fail") << '\n';
    out << "  degree raising        " << (report.degree_raising ? "yes" : "no") << '\n';
    out << "  d^2 = 0               " << (report.d_squared_zero ? "yes" : "no") << '\n';
    out << "  minimal               " << (report.minimal ? "yes" : "no") << '\n';
    out << "  odd squares excluded  " << (report.odd_squares_excluded ? "yes" : "no") << '\n';
    out << "  degenerate            " << (report.degenerate ? "yes" : "no") << '\n';
    for (const auto& f : report.failures) out << "  - " << f << '\n';
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_cohomology(const std::string& file, int max_degree, bool as_json, std::ostream& out, std::ostream& err) {
  std::string input;
  const auto model = load<DgaModel>(file, dsl::SourceKind::dga, err, &input);
  const ModelReport report = check_model(model);
  if (!report.is_complex()) {
    for (const auto& f : report.failures) err << "error: " << f << '\n';
    return kExitCheckFailed;
  }
  const BettiTable table = cohomology(model, max_degree);
  if (as_json) {
    print_json(out, json_io::envelope("cohomology", input, json_io::to_json(table)));
    return kExitOk;
  }
  out << "cohomology of model " << model.name() << '\n';
  out << std::setw(6) << "degree" << std::setw(6) << "dim" << "  representatives\n";
  for (int d = 0; d <= table.max_degree; ++d) {
    out << std::setw(6) << d << std::setw(6) << table.dims[static_cast<std::size_t>(d)] << "  ";
    const auto& reps = (*table.representatives)[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < reps.size(); ++i) out << (i ? ", " : "") << reps[i].to_string();
    out << '\n';
  }
  print_truncation(out, table.max_degree);
  return kExitOk;
}

int cmd_ring_verify(const std::string& file, const RingPresentation& p, int max_degree, bool as_json,
                    std::ostream& out, std::ostream& err) {
  std::string input;
  const auto model = load<DgaModel>(file, dsl::SourceKind::dga, err, &input);
  RingReport report;
  try {
    report = verify_ring_presentation(model, p, max_degree);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    print_json(out, json_io::envelope("ring-verify", input, json_io::to_json(report)));
  } else {
    out << "Q[w,z]/(w^" << p.nilpotency << "), deg w = " << p.deg_w << ", deg z = " << p.deg_z << " vs model "
        << model.name() << ": " << (report.passed ? "pass" : "fail") << '\n';
    out << "  " << report.message << '\n';
    out << std::setw(8) << "degree" << std::setw(10) << "expected" << std::setw(8) << "actual" << '\n';
    for (int d = 0; d <= max_degree; ++d) {
      const auto i = static_cast<std::size_t>(d);
      out << std::setw(8) << d << std::setw(10) << report.expected_dims[i] << std::setw(8)
          << (i < report.actual_dims.size() ? std::to_string(report.actual_dims[i]) : "-") << '\n';
    }
    if (report.w) out << "  w = " << report.w->to_string() << '\n';
    if (report.z) out << "  z = " << report.z->to_string() << '\n';
    print_truncation(out, max_degree);
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_homotopy(const std::string& file, const std::string& which, int max_degree, bool as_json, std::ostream& out,
                 std::ostream& err) {
  std::string input;
  const auto spec = load<SpaceFormSpec>(file, dsl::SourceKind::spaceform, err, &input);
  const HomotopyTable t =
      which == "lambda" ? loop_component_homotopy(spec, max_degree) : so2_quotient_homotopy(spec, max_degree);
  if (as_json) {
    json result = json_io::to_json(t);
    result["space"] = which == "lambda" ? "LM[h]" : "LM[h]_SO(2)";
    print_json(out, json_io::envelope("homotopy", input, std::move(result)));
    return kExitOk;
  }
  out << "rational homotopy of " << (which == "lambda" ? "LM[h]" : "LM[h]_SO(2)") << " for S^" << spec.n()
      << "/Gamma, C(h) = Z" << spec.centralizer_order() << ", ord h = " << spec.element_order() << '\n';
  out << std::setw(6) << "degree" << "  group\n";
  out << std::setw(6) << 1 << "  " << group_name(t.pi1) << '\n';
  for (const auto& [degree, dim] : t.dims) {
    if (dim == 0) continue;
    out << std::setw(6) << degree << "  " << (dim == 1 ? std::string("Q") : "Q^" + std::to_string(dim)) << '\n';
  }
  out << "  (all other degrees 2.." << max_degree << " are 0)\n";
  print_truncation(out, max_degree);
  return kExitOk;
}

int cmd_spaceform_model(const std::string& file, bool as_json, std::ostream& out, std::ostream& err) {
  std::string input;
  const auto spec = load<SpaceFormSpec>(file, dsl::SourceKind::spaceform, err, &input);
  const DgaModel model = so2_quotient_model(spec);
  if (as_json) {
    json result = json_io::to_json(model);
    const RingPresentation p = so2_quotient_ring(spec);
    result["ring"] = {{"deg_w", p.deg_w}, {"deg_z", p.deg_z}, {"nilpotency", p.nilpotency}};
    print_json(out, json_io::envelope("spaceform-model", input, std::move(result)));
  } else {
    out << dsl::print(model);
  }
  return kExitOk;
}

int cmd_gysin(const std::string& base_file, const std::string& total_file, int max_degree, bool as_json,
              std::ostream& out, std::ostream& err) {
  std::string input;
  const auto base = load<DgaModel>(base_file, dsl::SourceKind::dga, err, &input);
  const auto total = load<DgaModel>(total_file, dsl::SourceKind::dga, err, &input);

  // The total space model is the base plus one degree-1 generator whose
  // differential is the Euler class.
  std::optional<DifferentialSpec> euler;
  std::string fibre;
  for (const auto& g : total.algebra().declared()) {
    const auto in_base = base.algebra().index_of(g.name);
    if (in_base) {
      if (base.algebra().generator(*in_base).degree != g.degree)
        throw UsageError("generator " + g.name + " has different degrees in base and total models");
      continue;
    }
    if (g.degree != 1 || !fibre.empty())
      throw UsageError("total model must add exactly one degree-1 generator to the base model");
    fibre = g.name;
  }
  if (fibre.empty()) throw UsageError("total model adds no fibre generator");
  for (const auto& d : total.declared_differentials())
    if (d.generator == fibre) euler = d;
  if (!euler) throw UsageError("fibre generator " + fibre + " has no differential (Euler class)");

  AlgebraElement e = base.algebra().zero();
  try {
    e = evaluate(base.algebra(), euler->value);
  } catch (const UnknownGenerator& ex) {
    throw UsageError(std::string("Euler class must be written in base generators: ") + ex.what());
  }

  const CohomologyComputation base_comp(base, max_degree + 1);
  const CohomologyComputation total_comp(total, max_degree);
  GysinInput in{base_comp.table(false), euler_multiplication(base_comp, e), total_comp.table(false)};
  const GysinReport report = gysin_check(in);
  if (as_json) {
    json result = json_io::to_json(report);
    result["base_betti"] = in.base.dims;
    result["total_betti"] = in.total.dims;
    result["euler_class"] = dsl::print_poly(euler->value);
    print_json(out, json_io::envelope("gysin-check", input, std::move(result)));
  } else {
    out << "circle bundle " << total.name() << " -> " << base.name() << ", Euler class " << dsl::print_poly(euler->value)
        << ": " << (report.passed ? "pass" : "fail") << '\n';
    out << std::setw(6) << "degree" << std::setw(6) << "base" << std::setw(7) << "total" << std::setw(11)
        << "predicted" << '\n';
    for (int p = 0; p <= max_degree; ++p)
      out << std::setw(6) << p << std::setw(6) << in.base.dim(p) << std::setw(7) << in.total.dim(p) << std::setw(11)
          << report.predicted[static_cast<std::size_t>(p)] << '\n';
    out << "  " << report.message << '\n';
    print_truncation(out, max_degree);
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_bott_index(const std::string& file, std::int64_t m, bool as_json, std::ostream& out, std::ostream& err) {
  if (m < 1) throw UsageError("--iterate must be >= 1");
  std::string input;
  const auto f = load<BottFunction>(file, dsl::SourceKind::bott, err, &input);
  const std::int64_t index = bott_index(f, m);
  const bool nondegenerate = is_nondegenerate(f, m);
  const bool even_shift = schwarz_even(f, m);
  if (as_json) {
    print_json(out, json_io::envelope("bott-index", input,
                                      {{"iterate", m},
                                       {"index", index},
                                       {"base_index", bott_index(f, 1)},
                                       {"nondegenerate", nondegenerate},
                                       {"schwarz_even", even_shift},
                                       {"function", json_io::to_json(f)}}));
  } else {
    out << "ind(gamma^" << m << ") = " << index << '\n';
    out << "ind(gamma)      = " << bott_index(f, 1) << '\n';
    out << "non-degenerate  = " << (nondegenerate ? "yes" : "no") << '\n';
    out << "index shift even = " << (even_shift ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "certificate " << to_string(c.kind) << ": " << to_string(c.verdict) << '\n';
  for (const auto& [k, v] : c.parameters) out << "  " << std::left << std::setw(22) << k << std::right << v << '\n';
  out << "  survivors: " << c.survivors.size() << '\n';
  for (const auto& s : c.survivors) out << "    " << s.description << '\n';
  std::size_t rejected = 0;
  for (const auto& t : c.transcript) {
    if (!t.holds && t.condition == "perfect Morse matching") {
      ++rejected;
      continue;
    }
    out << "  [" << (t.holds ? "holds" : "fails") << "] " << t.candidate << ": " << t.condition
        << (t.detail.empty() ? "" : " (" + t.detail + ")") << '\n';
  }
  if (rejected) out << "  " << rejected << " candidate(s) rejected by the Morse matching (see --json)\n";
  for (const auto& a : c.assumptions) out << "  assumes: " << a << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loop-space toolkit: minimal models, homotopy tables and closed-geodesic certificates", "loopspace"};
  app.require_subcommand(1);

  bool as_json = false;
  auto json_flag = [&as_json](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit JSON on standard output"); };
  // Certificates are JSON documents unless --text is given.
  bool as_text = false;
  auto certificate_flags = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", as_json, "Emit the JSON certificate (default)");
    sub->add_flag("--text", as_text, "Emit a human-readable summary instead of JSON")->excludes(j);
  };

  int max_degree = -1;
  bool max_degree_set = false;
  auto max_degree_opt = [&](CLI::App* sub, bool required = false) {
    auto* opt = sub->add_option("--max-degree", max_degree, "Truncation degree (default $LOOPSPACE_MAX_DEGREE or 24)");
    if (required) opt->required();
    opt->each([&max_degree_set](const std::string&) { max_degree_set = true; });
  };

  std::string file, file2;

  auto* check = app.add_subcommand("check-model", "Validate a DGA model");
  check->add_option("FILE", file)->required();
  json_flag(check);

  auto* coh = app.add_subcommand("cohomology", "Betti numbers of a DGA model");
  max_degree_opt(coh);
  coh->add_option("FILE", file)->required();
  json_flag(coh);

  RingPresentation pres;
  auto* ring = app.add_subcommand("ring-verify", "Check a Q[w,z]/(w^a) presentation of the cohomology");
  ring->add_option("--deg-w", pres.deg_w, "Degree of w")->default_val(2);
  ring->add_option("--deg-z", pres.deg_z, "Degree of z")->required();
  ring->add_option("--nilpotency", pres.nilpotency, "a with w^a = 0")->required();
  max_degree_opt(ring);
  ring->add_option("FILE", file)->required();
  json_flag(ring);

  std::string which;
  auto* hom = app.add_subcommand("homotopy", "Rational homotopy of LM[h] or LM[h]_SO(2)");
  hom->add_option("--which", which, "lambda or quotient")->required()->check(CLI::IsMember({"lambda", "quotient"}));
  max_degree_opt(hom);
  hom->add_option("FILE", file)->required();
  json_flag(hom);

  auto* sfm = app.add_subcommand("spaceform-model", "Minimal model of LM[h]_SO(2)");
  sfm->add_option("FILE", file)->required();
  json_flag(sfm);

  auto* gys = app.add_subcommand("gysin-check", "Gysin rank identity for a circle bundle of models");
  max_degree_opt(gys);
  gys->add_option("BASE_FILE", file)->required();
  gys->add_option("TOTAL_FILE", file2)->required();
  json_flag(gys);

  std::int64_t iterate = 1;
  auto* bott = app.add_subcommand("bott", "Bott index iteration");
  bott->require_subcommand(1);
  auto* bidx = bott->add_subcommand("index", "Index of an iterate");
  bidx->add_option("--iterate", iterate, "Iterate m")->required();
  bidx->add_option("FILE", file)->required();
  json_flag(bidx);

  int grid = 0, values = 0;
  std::int64_t cutoff = 0, k = 1, iterates = 0;
  bool nonconjugate = true;
  auto* cert = app.add_subcommand("certify", "Closed-geodesic certificates");
  cert->require_subcommand(1);
  auto* rp2 = cert->add_subcommand("rp2", "Single-geodesic contradiction search on RP^2");
  rp2->add_option("--grid", grid, "Angle grid denominator N")->required();
  rp2->add_option("--values", values, "Bound V on arc values")->required();
  rp2->add_option("--cutoff", cutoff, "Largest odd iterate M")->required();
  certificate_flags(rp2);
  auto* t5 = cert->add_subcommand("even-index", "Even-index contradiction for S^{2n+1}/Gamma");
  t5->alias("theorem5");
  t5->add_option("--k", k, "c = gamma^k")->required();
  t5->add_option("--iterates", iterates, "Number L of further iterates")->required();
  t5->add_flag("--nonconjugate,!--conjugate", nonconjugate,
               "Elements of C(h) are pairwise non-conjugate (default; --conjugate negates)");
  t5->add_option("SPACEFORM_FILE", file)->required();
  t5->add_option("BOTT_FILE", file2)->required();
  certificate_flags(t5);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run 'loopspace --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (!max_degree_set) max_degree = default_max_degree();
    if (max_degree < 0) throw UsageError("--max-degree must be >= 0");

    if (check->parsed()) return cmd_check_model(file, as_json, out, err);
    if (coh->parsed()) return cmd_cohomology(file, max_degree, as_json, out, err);
    if (ring->parsed()) return cmd_ring_verify(file, pres, max_degree, as_json, out, err);
    if (hom->parsed()) return cmd_homotopy(file, which, max_degree, as_json, out, err);
    if (sfm->parsed()) return cmd_spaceform_model(file, as_json, out, err);
    if (gys->parsed()) return cmd_gysin(file, file2, max_degree, as_json, out, err);
    if (bidx->parsed()) return cmd_bott_index(file, iterate, as_json, out, err);
    if (rp2->parsed()) {
      Certificate c;
      try {
        c = certify_rp2(grid, values, cutoff);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::ostringstream input;
      input << "certify rp2 --grid " << grid << " --values " << values << " --cutoff " << cutoff;
      if (!as_text)
        print_json(out, json_io::envelope("certificate", input.str(), json_io::to_json(c)));
      else
        print_certificate(out, c);
      return c.verdict == Verdict::contradiction_established ? kExitOk : kExitCheckFailed;
    }
    if (t5->parsed()) {
      std::string input;
      const auto spec = load<SpaceFormSpec>(file, dsl::SourceKind::spaceform, err, &input);
      const auto f = load<BottFunction>(file2, dsl::SourceKind::bott, err, &input);
      Certificate c;
      try {
        c = certify_even_index_iterates(spec, nonconjugate, k, f, iterates);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!as_text)
        print_json(out, json_io::envelope("certificate", input, json_io::to_json(c)));
      else
        print_certificate(out, c);
      return c.verdict == Verdict::contradiction_established ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace loopspace::cli
