#include "s3s4/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "s3s4/berger.hpp"
#include "s3s4/bundles.hpp"
#include "s3s4/decide.hpp"
#include "s3s4/linkforms.hpp"

namespace s3s4 {

namespace {

using nlohmann::json;

// Integers are emitted as JSON numbers while they are exactly representable
// in a double (|v| < 2^53), as decimal strings beyond that.
json json_int(const Int& v) {
  static const Int kMax = (Int(1) << 53) - 1;
  if (v >= -kMax && v <= kMax) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json json_bundle_list(const std::vector<BundleSpec>& bundles) {
  json list = json::array();
  for (const BundleSpec& b : bundles) list.push_back(json_int(b.m_canonical()));
  return list;
}

json json_witness(const StandardWitness& w) {
  return json{{"sign", w.sign}, {"tau", json_int(w.tau.value())}};
}

json json_hopf(const HopfWitness& w) {
  return json{{"k", json_int(w.k)}, {"m", json_int(w.m)}, {"sign", w.sign}};
}

json json_verdict(const Verdict& v, const std::string& bundles_key) {
  json out{{"reason", v.reason},
           {"status", to_string(v.status)},
           {"notes", v.notes},
           {bundles_key, json_bundle_list(v.bundles)}};
  out["witness"] = v.standard_witness ? json_witness(*v.standard_witness) : json();
  out["hopf"] = v.hopf ? json_hopf(*v.hopf) : json();
  return out;
}

json json_profile(const CohomologyProfile& profile) {
  json out = json::object();
  for (int degree = 0; degree <= 7; ++degree)
    out["H" + std::to_string(degree)] = profile.at(degree).str();
  return out;
}

json envelope(const std::string& command, json inputs, json result,
              std::vector<std::string> provenance) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"provenance", std::move(provenance)},
              {"result", std::move(result)},
              {"schema_version", kSchemaVersion}};
}

struct Format {
  bool as_json = false;
};

void emit(std::ostream& out, const Format& format, const json& env,
          const std::string& text) {
  if (format.as_json)
    out << env.dump(2) << "\n";
  else
    out << text;
}

std::string sign_str(int sign) { return sign > 0 ? "+1" : "-1"; }

std::string join_m_values(const std::vector<BundleSpec>& bundles) {
  std::string out;
  for (const BundleSpec& b : bundles) {
    if (!out.empty()) out += " ";
    out += b.m_canonical().str();
  }
  return out.empty() ? "(none)" : out;
}

int status_exit(Status status) {
  return status == Status::Yes ? kExitAffirmative : kExitNegative;
}

std::string pl_regime(const Int& n) {
  if (n % 2 == 1) return "n odd";
  if (n % 4 == 2) return "n/2 odd";
  return "indeterminate (n = 0 mod 4)";
}

std::string pl_regime_note(const Int& n) {
  if (n % 2 == 1)
    return "invariant triple classifies uniquely; standard form implies a "
           "PL bundle structure";
  if (n % 4 == 2)
    return "both PL types carrying each admissible invariant triple are "
           "bundles";
  return "PL recognition undecided in this regime";
}

// --- subcommand handlers ----------------------------------------------------

int cmd_check_form(const Int& n, const Int& lambda, const Format& format,
                   std::ostream& out) {
  LinkingForm form(n, lambda);
  bool nondegenerate = is_nondegenerate(form);
  std::optional<StandardWitness> witness;
  if (nondegenerate) witness = is_standard(form);

  json result{{"lambda", json_int(form.lambda().value())},
              {"n", json_int(n)},
              {"nondegenerate", nondegenerate},
              {"square_class_count", json_int(square_class_count(n))},
              {"standard", witness.has_value()}};
  result["witness"] = witness ? json_witness(*witness) : json();

  std::string text = "check-form: n=" + n.str() + " lambda=" +
                     form.lambda().value().str() + "\n";
  text += "  nondegenerate: " + std::string(nondegenerate ? "yes" : "no") + "\n";
  text += "  standard: " + std::string(witness ? "yes" : "no") + "\n";
  if (witness)
    text += "  witness: tau=" + witness->tau.value().str() +
            " sign=" + sign_str(witness->sign) + "\n";
  text += "  square classes (oriented): " + square_class_count(n).str() + "\n";

  emit(out, format,
       envelope("check-form",
                json{{"lambda", json_int(lambda)}, {"n", json_int(n)}}, result,
                {"linking-form-standardness", "unit-square-classes"}),
       text);
  return witness ? kExitAffirmative : kExitNegative;
}

int cmd_classify(const Int& n, const Format& format, std::ostream& out) {
  std::vector<BundleSpec> reps = enumerate_homotopy_types(n);
  Int g = gcd(n, Int(12));

  json result{{"count", json_int(Int(reps.size()))},
              {"g", json_int(g)},
              {"pl_note", pl_regime_note(n)},
              {"pl_regime", pl_regime(n)},
              {"representatives", json_bundle_list(reps)}};

  std::string text = "classify: n=" + n.str() + "\n";
  text += "  gcd(n,12) = " + g.str() + "\n";
  text += "  oriented homotopy types: " + std::to_string(reps.size()) + "\n";
  text += "  representatives m = " + join_m_values(reps) + "\n";
  text += "  pl regime: " + pl_regime(n) + "\n";
  text += "  note: " + pl_regime_note(n) + "\n";

  emit(out, format,
       envelope("classify", json{{"n", json_int(n)}}, result,
                {"james-whitehead-homotopy-types", "wilkens-pl-types"}),
       text);
  return kExitAffirmative;
}

int cmd_match(const Int& n, const Int& lambda, const Int& beta_coeff,
              const Format& format, std::ostream& out) {
  WilkensData data(n, LinkingForm(n, lambda), beta_coeff);
  Verdict verdict = theorem3_decide(data);

  json result = json_verdict(verdict, "matches");
  result["pl_regime"] = pl_regime(n);

  std::string text = "match: n=" + n.str() + " lambda=" +
                     data.form().lambda().value().str() +
                     " beta=" + data.beta_coeff().value().str() + "\n";
  text += "  matches m = " + join_m_values(verdict.bundles) + "\n";
  text += "  status: " + to_string(verdict.status) + " (" + verdict.reason + ")\n";
  for (const std::string& note : verdict.notes) text += "  note: " + note + "\n";

  emit(out, format,
       envelope("match",
                json{{"beta", json_int(beta_coeff)},
                     {"lambda", json_int(lambda)},
                     {"n", json_int(n)}},
                result, {"wilkens-invariants", "spin-class-parity"}),
       text);
  return status_exit(verdict.status);
}

int cmd_decide(const Int& n, const Int& lambda, const std::string& theta,
               bool manifold, const Format& format, std::ostream& out) {
  std::optional<bool> theta_trivial;
  if (theta == "trivial") theta_trivial = true;
  if (theta == "nontrivial") theta_trivial = false;
  ComplexData data(n, LinkingForm(n, lambda), theta_trivial, manifold);
  Verdict verdict = theorem4_decide(data);
  bool prime_power_path = verdict.reason == "prime-power-3-mod-4";

  json result = json_verdict(verdict, "homotopy_representatives");
  result["criterion"] = prime_power_path ? "prime-power" : "general";

  std::string text = "decide: n=" + n.str() + " lambda=" +
                     data.form().lambda().value().str() + " theta=" + theta +
                     " manifold=" + (manifold ? "yes" : "no") + "\n";
  text += "  status: " + to_string(verdict.status) + " (" + verdict.reason + ")\n";
  if (verdict.standard_witness)
    text += "  witness: tau=" + verdict.standard_witness->tau.value().str() +
            " sign=" + sign_str(verdict.standard_witness->sign) + "\n";
  if (verdict.hopf)
    text += "  hopf: m=" + verdict.hopf->m.str() + " k=" + verdict.hopf->k.str() +
            " sign=" + sign_str(verdict.hopf->sign) + "\n";
  if (!verdict.bundles.empty())
    text += "  homotopy representatives m = " + join_m_values(verdict.bundles) + "\n";
  for (const std::string& note : verdict.notes) text += "  note: " + note + "\n";

  std::vector<std::string> provenance{"bundle-recognition-criterion"};
  if (prime_power_path) provenance.push_back("prime-power-residue-criterion");
  emit(out, format,
       envelope("decide",
                json{{"lambda", json_int(lambda)},
                     {"manifold", manifold},
                     {"n", json_int(n)},
                     {"theta", theta}},
                result, std::move(provenance)),
       text);
  return status_exit(verdict.status);
}

int cmd_hopf_witness(const Int& n, const Int& lambda, const Format& format,
                     std::ostream& out) {
  Residue lambda_residue = Residue::reduce(lambda, n);
  std::optional<HopfWitness> witness = hopf_witness(n, lambda_residue);

  json result{{"exists", witness.has_value()}};
  result["witness"] = witness ? json_hopf(*witness) : json();

  std::string text =
      "hopf-witness: n=" + n.str() + " lambda=" + lambda_residue.value().str() + "\n";
  text += "  exists: " + std::string(witness ? "yes" : "no") + "\n";
  if (witness) {
    text += "  m=" + witness->m.str() + " k=" + witness->k.str() +
            " sign=" + sign_str(witness->sign) + "\n";
    Int lhs = witness->m * witness->m * lambda_residue.value() * n +
              witness->k * n * n;
    text += "  check: m^2*lambda*n + k*n^2 = " + lhs.str() + "\n";
  }

  emit(out, format,
       envelope("hopf-witness",
                json{{"lambda", json_int(lambda)}, {"n", json_int(n)}}, result,
                {"hopf-invariant-normalization"}),
       text);
  return witness ? kExitAffirmative : kExitNegative;
}

int cmd_berger(const Format& format, std::ostream& out) {
  BergerReport report = berger_report();

  json linking{{"standard", report.linking_standard}};
  json lambdas = json::array();
  for (const LinkingForm& form : report.linking_forms)
    lambdas.push_back(json_int(form.lambda().value()));
  linking["lambdas"] = std::move(lambdas);
  json witnesses = json::array();
  for (const StandardWitness& w : report.witnesses)
    witnesses.push_back(json_witness(w));
  linking["witnesses"] = std::move(witnesses);

  json beta_candidates = json::array();
  for (const auto& candidate : report.beta_candidates)
    beta_candidates.push_back(
        json{{"beta", json_int(candidate.beta_coeff.value())},
             {"matches", json_bundle_list(candidate.matches)}});

  json classes = json::array();
  for (const Int& rep : report.candidate_classes) classes.push_back(json_int(rep));

  json result{{"beta_candidates", std::move(beta_candidates)},
              {"beta_known", report.beta_known},
              {"candidate_classes", std::move(classes)},
              {"homotopy_types", json_bundle_list(report.homotopy_types)},
              {"linking", std::move(linking)},
              {"n", json_int(report.n)},
              {"note", report.note},
              {"profile", json_profile(report.profile)},
              {"pullback",
               json{{"p1", json_int(report.pullback.p1_coeff)},
                    {"p2", json_int(report.pullback.p2_coeff)}}},
              {"theorem1", json_verdict(report.theorem1, "representatives")},
              {"theorem3", json_verdict(report.theorem3, "matches")},
              {"weights",
               json::array({json_int(report.weights.a()), json_int(report.weights.b())})}};

  std::string text = "berger: Sp(2)/Sp(1), torus weights (1, 3)\n";
  text += "  pullback coefficients: p1 -> " + report.pullback.p1_coeff.str() +
          " p1, p2 -> " + report.pullback.p2_coeff.str() + " p1^2\n";
  text += "  |H^4| = " + report.n.str() + " (H^4 = " + report.profile.at(4).str() +
          ")\n";
  text += "  linking form lambda = +-1, standard: " +
          std::string(report.linking_standard ? "yes" : "no") + "\n";
  for (size_t i = 0; i < report.witnesses.size(); ++i)
    text += "    lambda=" + report.linking_forms[i].lambda().value().str() +
            ": tau=" + report.witnesses[i].tau.value().str() +
            " sign=" + sign_str(report.witnesses[i].sign) + "\n";
  text += "  homotopy equivalent to a bundle: " + to_string(report.theorem1.status) +
          " (" + report.theorem1.reason + ")\n";
  text += "  PL-homeomorphic to a bundle: " + to_string(report.theorem3.status) +
          " (" + report.theorem3.reason + ")\n";
  text += "  homotopy types with n=10: m = " + join_m_values(report.homotopy_types) +
          "\n";
  text += "  candidate classes for the Berger space: ";
  for (size_t i = 0; i < report.candidate_classes.size(); ++i)
    text += (i ? " " : "") + report.candidate_classes[i].str();
  text += "\n  note: " + report.note + "\n";

  emit(out, format,
       envelope("berger", json::object(), result,
                {"berger-weights-pullback", "linking-form-standardness",
                 "wilkens-pl-types"}),
       text);
  return status_exit(report.theorem3.status);
}

int cmd_table(const Int& max_n, const std::string& table_format,
              const std::string& output_path, std::ostream& out,
              std::ostream& err) {
  if (max_n < 1 || max_n > 1000000) {
    err << "error: --max-n must lie in [1, 1000000]\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output_path.empty()) {
    file.open(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write to '" << output_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  bool csv = table_format == "csv";
  if (csv)
    *sink << "n,gcd12,homotopy_type_count,square_class_count,"
             "theorem4_applies,pl_regime\n";

  for (Int n = 1; n <= max_n; ++n) {
    Int g = gcd(n, Int(12));
    Int count = g / 2 + 1;
    Int classes = square_class_count(n);
    Factorization fac = factor(n);
    bool theorem4 =
        fac.is_prime_power() && fac.entries.front().prime % 4 == 3;
    if (csv) {
      *sink << n << "," << g << "," << count << "," << classes << ","
            << (theorem4 ? "true" : "false") << "," << pl_regime(n) << "\n";
    } else {
      json row{{"gcd12", json_int(g)},
               {"homotopy_type_count", json_int(count)},
               {"n", json_int(n)},
               {"pl_regime", pl_regime(n)},
               {"square_class_count", json_int(classes)},
               {"theorem4_applies", theorem4}};
      *sink << row.dump() << "\n";
    }
  }
  if (sink == &file) {
    file.flush();
    if (!file) {
      err << "error: write to '" << output_path << "' failed\n";
      return kExitUsage;
    }
  }
  return kExitAffirmative;
}

}  // namespace

Int parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer");
  for (size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer '" + text + "'");
  return Int(text);
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Invariants and decision procedures for S^3-bundles over S^4"};
  app.require_subcommand(1);

  std::string n_text, lambda_text, beta_text, max_n_text;
  std::string theta = "unknown";
  bool manifold = false;
  std::string format_text = "text";
  std::string table_format = "json-lines";
  std::string output_path;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* check_form =
      app.add_subcommand("check-form", "Test a linking form for standardness");
  check_form->add_option("--n", n_text, "Order of H^4")->required();
  check_form->add_option("--lambda", lambda_text, "Form value on a generator")
      ->required();
  add_format(check_form);

  CLI::App* classify = app.add_subcommand(
      "classify", "Enumerate oriented homotopy types of bundles with Euler number n");
  classify->add_option("--n", n_text, "Euler number / order of H^4")->required();
  add_format(classify);

  CLI::App* match = app.add_subcommand(
      "match", "Match an invariant triple (n, lambda, beta) against bundles");
  match->add_option("--n", n_text, "Order of H^4")->required();
  match->add_option("--lambda", lambda_text, "Linking form value")->required();
  match->add_option("--beta", beta_text, "Spin class coefficient")->required();
  add_format(match);

  CLI::App* decide = app.add_subcommand(
      "decide", "Decide bundle structure for a complex from its invariants");
  decide->add_option("--n", n_text, "Order of H^4")->required();
  decide->add_option("--lambda", lambda_text, "Linking form value")->required();
  decide->add_option("--theta", theta, "Secondary-operation status")
      ->check(CLI::IsMember({"trivial", "nontrivial", "unknown"}))
      ->capture_default_str();
  decide->add_flag("--manifold", manifold,
                   "Input is a smooth manifold (forces theta trivial)");
  add_format(decide);

  CLI::App* hopf = app.add_subcommand(
      "hopf-witness", "Constructive Hopf-invariant normalization witness");
  hopf->add_option("--n", n_text, "Order of H^4")->required();
  hopf->add_option("--lambda", lambda_text, "Linking form value")->required();
  add_format(hopf);

  CLI::App* berger =
      app.add_subcommand("berger", "Full report for the Berger space Sp(2)/Sp(1)");
  add_format(berger);

  CLI::App* table = app.add_subcommand(
      "table", "Export per-n classification records for n = 1..max-n");
  table->add_option("--max-n", max_n_text, "Largest n")->required();
  table->add_option("--format", table_format, "Row format")
      ->check(CLI::IsMember({"json-lines", "csv"}))
      ->capture_default_str();
  table->add_option("--output", output_path, "Destination file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Format format{format_text == "json"};
  try {
    if (check_form->parsed())
      return cmd_check_form(parse_integer(n_text), parse_integer(lambda_text),
                            format, out);
    if (classify->parsed())
      return cmd_classify(parse_integer(n_text), format, out);
    if (match->parsed())
      return cmd_match(parse_integer(n_text), parse_integer(lambda_text),
                       parse_integer(beta_text), format, out);
    if (decide->parsed())
      return cmd_decide(parse_integer(n_text), parse_integer(lambda_text),
                        theta, manifold, format, out);
    if (hopf->parsed())
      return cmd_hopf_witness(parse_integer(n_text), parse_integer(lambda_text),
                              format, out);
    if (berger->parsed()) return cmd_berger(format, out);
    if (table->parsed())
      return cmd_table(parse_integer(max_n_text), table_format, output_path,
                       out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace s3s4
