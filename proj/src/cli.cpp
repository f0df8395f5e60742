#include "selberg/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "selberg/config.hpp"
#include "selberg/construction.hpp"
#include "selberg/errors.hpp"
#include "selberg/number_field.hpp"
#include "selberg/primes.hpp"
#include "selberg/torsion.hpp"
#include "selberg/upper_bound.hpp"

namespace selberg {

IntPolynomial parse_polynomial_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::string> body;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (body) throw DomainError("polynomial file must contain a single coefficient line");
    body = line;
  }
  if (!body) throw DomainError("polynomial file has no coefficient line");
  std::vector<BigInt> coeffs;
  std::istringstream fields(*body);
  std::string field;
  while (std::getline(fields, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw DomainError("empty coefficient in polynomial file");
    coeffs.push_back(parse_bigint(field.substr(b, e - b + 1)));
  }
  if (body->find_last_not_of(" \t\r") != std::string::npos && body->at(body->find_last_not_of(" \t\r")) == ',') {
    throw DomainError("trailing comma in polynomial file");
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read polynomial file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polynomial_text(ss.str());
}

namespace {

enum class Format { json, csv };

struct Output {
  std::ostream& out;
  std::ostream& err;
  Format format;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else {
    rows.emplace_back(prefix, j.is_array() ? j.dump() : scalar_text(j));
  }
}

void emit_report(const Output& o, nlohmann::json report) {
  report["generated_by"] = kGeneratedBy;
  if (o.format == Format::json) {
    o.out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  o.out << "key,value\n";
  for (const auto& [k, v] : rows) o.out << csv_field(k) << "," << csv_field(v) << "\n";
}

void emit_table(const Output& o, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                const nlohmann::json& json_rows) {
  if (o.format == Format::json) {
    o.out << nlohmann::json{{"generated_by", kGeneratedBy}, {"rows", json_rows}}.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) o.out << (i ? "," : "") << header[i];
  o.out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) o.out << (i ? "," : "") << csv_field(r[i]);
    o.out << "\n";
  }
}

void warn(const Output& o, const Config& cfg, const std::vector<std::string>& keys) {
  for (const auto& line : cfg.warnings_for(keys)) o.err << line << "\n";
}

Real real_arg(const std::string& s, const std::string& name) {
  try {
    return parse_real(s);
  } catch (const DomainError&) {
    throw DomainError("--" + name + " expects a real number, got '" + s + "'");
  }
}

BigInt dencap_arg(const std::string& s) {
  BigInt v;
  if (s.rfind("2^", 0) == 0) {
    const BigInt e = parse_bigint(s.substr(2));
    if (e < 0 || e > 4096) throw DomainError("--dencap exponent out of range");
    v = ipow(BigInt(2), e.get_ui());
  } else {
    v = parse_bigint(s);
  }
  if (v < 1 || !is_power_of_two(v)) throw DomainError("--dencap must be a power of two");
  return v;
}

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion-free congruence subgroups, torsion bounds and the order-p lattice construction", "selberg"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name;
  unsigned threads = 1;
  std::optional<std::string> config_path;
  app.add_option("--format", format_name, "json or csv (tables default to csv, reports to json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "worker threads for prime scans and sweeps")->check(CLI::Range(1U, 256U));
  app.add_option("--config", config_path, std::string("JSON file of constants (else $") + kConfigEnvVar + ")");

  std::function<void(const Output&, const Config&)> action;
  bool table_command = false;
  auto sub = [](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // field analyze
  CLI::App* field = sub(&app, "field", "number field utilities");
  field->require_subcommand(1);
  CLI::App* analyze = sub(field, "analyze", "discriminant, embeddings, splitting and prime ideal counts");
  std::string poly_path;
  std::uint64_t count_x = 1000;
  std::uint64_t split_max = 50;
  analyze->add_option("polyfile", poly_path, "polynomial file")->required();
  analyze->add_option("--count-x", count_x, "count prime ideals of norm <= X")->check(CLI::Range(1ULL, 1ULL << 40));
  analyze->add_option("--split-max", split_max, "list splittings of primes <= P")->check(CLI::Range(2ULL, 100000ULL));
  analyze->callback([&] {
    action = [&](const Output& o, const Config&) {
      const NumberField k = NumberField::make(read_polynomial_file(poly_path));
      nlohmann::json j = to_json(k);
      nlohmann::json emb = nlohmann::json::array();
      for (const auto& iv : k.real_embeddings()) emb.push_back({to_string(iv.lo), to_string(iv.hi)});
      j["real_embeddings"] = emb;
      nlohmann::json divisors = nlohmann::json::array();
      for (const auto& q : k.index_divisors()) divisors.push_back(to_string(q));
      j["index_divisors"] = divisors;
      j["disc_partially_factored"] = k.disc_partially_factored();
      const PrimeIdealCount c = count_prime_ideals(k, count_x, threads);
      j["prime_ideal_count"] = {{"x", c.x}, {"count", c.count}, {"index_divisible_primes", c.index_divisible_primes}};
      nlohmann::json splits = nlohmann::json::array();
      for (std::uint64_t p : primes_up_to(split_max)) splits.push_back(to_json(dedekind_split(k, p)));
      j["splits"] = splits;
      emit_report(o, j);
    };
  });

  // level find
  CLI::App* level = sub(&app, "level", "torsion-free congruence levels");
  level->require_subcommand(1);
  CLI::App* find = sub(level, "find", "minimal-norm prime level passing e <= q - 2");
  int dim_g = 0;
  find->add_option("polyfile", poly_path, "polynomial file")->required();
  find->add_option("--dimg", dim_g, "dim G")->required()->check(CLI::Range(1, 1000000));
  find->callback([&] {
    action = [&](const Output& o, const Config& cfg) {
      warn(o, cfg, {"prime_scan_cap"});
      const NumberField k = NumberField::make(read_polynomial_file(poly_path));
      emit_report(o, to_json(find_congruence_level(k, dim_g, cfg.prime_scan_cap, threads)));
    };
  });

  // grh threshold
  CLI::App* grh = sub(&app, "grh", "GRH prime ideal threshold");
  grh->require_subcommand(1);
  CLI::App* threshold = sub(grh, "threshold", "smallest x with Li(x) > Err(x) + d^2");
  int grh_d = 0;
  std::string grh_logd;
  std::string grh_field;
  auto* d_opt = threshold->add_option("--d", grh_d, "field degree")->check(CLI::Range(1, 100000));
  auto* l_opt = threshold->add_option("--logd", grh_logd, "log of the absolute discriminant");
  auto* f_opt = threshold->add_option("--field", grh_field, "polynomial file; takes d and log D from the field");
  threshold->add_option("--dimg", dim_g, "dim G for the level search with --field")->check(CLI::Range(1, 1000000));
  f_opt->excludes(d_opt)->excludes(l_opt);
  d_opt->needs(l_opt);
  l_opt->needs(d_opt);
  threshold->callback([&] {
    if (grh_field.empty() && grh_d == 0) throw CLI::ValidationError("--d/--logd or --field is required");
    action = [&](const Output& o, const Config& cfg) {
      if (!grh_field.empty()) {
        warn(o, cfg, {"prime_scan_cap"});
        const NumberField k = NumberField::make(read_polynomial_file(grh_field));
        emit_report(o, to_json(grh_report_for_field(k, dim_g == 0 ? 3 : dim_g, cfg.prime_scan_cap, threads)));
      } else {
        emit_report(o, to_json(grh_threshold(grh_d, real_arg(grh_logd, "logd"))));
      }
    };
  });

  // bound grh / bound unconditional
  CLI::App* bound = sub(&app, "bound", "index bounds");
  bound->require_subcommand(1);
  CLI::App* bgrh = sub(bound, "grh", "lemma_C ((c1 + c2) log v)^((2 + eps) dim H)");
  std::string v_text;
  int dim_h = 0;
  bgrh->add_option("--v", v_text, "covolume v > e")->required();
  bgrh->add_option("--dimh", dim_h, "dim H")->required()->check(CLI::Range(1, 1000000));
  bgrh->callback([&] {
    action = [&](const Output& o, const Config& cfg) {
      warn(o, cfg, {"epsilon", "lemma_C", "prasad_c1", "prasad_c2"});
      const Real v = real_arg(v_text, "v");
      const Real b = volume_index_bound_grh(v, dim_h, cfg.epsilon, cfg.prasad_c1, cfg.prasad_c2, cfg.lemma_C);
      emit_report(o, {{"v", format_real(v)},
                      {"dim_H", dim_h},
                      {"epsilon", format_real(cfg.epsilon)},
                      {"prasad_c1", format_real(cfg.prasad_c1)},
                      {"prasad_c2", format_real(cfg.prasad_c2)},
                      {"lemma_C", format_real(cfg.lemma_C)},
                      {"bound", format_real(b)}});
    };
  });
  CLI::App* bunc = sub(bound, "unconditional", "3^(d dim H)");
  int unc_d = 0;
  bunc->add_option("--d", unc_d, "field degree")->required()->check(CLI::Range(1, 100000));
  bunc->add_option("--dimh", dim_h, "dim H")->required()->check(CLI::Range(1, 100000));
  bunc->callback([&] {
    action = [&](const Output& o, const Config&) {
      emit_report(o, {{"d", unc_d}, {"dim_H", dim_h}, {"index_bound", to_string(unconditional_index_bound(unc_d, dim_h))}});
    };
  });

  // torsion table
  CLI::App* torsion = sub(&app, "torsion", "maximal torsion orders");
  torsion->require_subcommand(1);
  CLI::App* table = sub(torsion, "table", "exact maximal orders against 2 (nd)^(2n) and 4 (nd)^(2n)");
  int nmax = 0;
  int tor_d = 0;
  table->add_option("--nmax", nmax, "largest n")->required()->check(CLI::Range(1, kMaxTorsionBudget));
  table->add_option("--d", tor_d, "field degree")->required()->check(CLI::Range(1, kMaxTorsionBudget));
  table->callback([&] {
    table_command = true;
    action = [&](const Output& o, const Config&) {
      std::vector<std::vector<std::string>> rows;
      nlohmann::json jrows = nlohmann::json::array();
      for (int n = 1; n <= nmax; ++n) {
        const TorsionProfile t = max_torsion_order(n, tor_d);
        rows.push_back({std::to_string(n), std::to_string(tor_d), to_string(t.exact_max_order),
                        witness_string(t.witness_orders), to_string(t.stated_bound),
                        to_string(t.proof_bound), t.stated_holds ? "true" : "false"});
        jrows.push_back(to_json(t));
      }
      emit_table(o, {"n", "d", "exact", "witness", "stated_bound", "proof_bound", "stated_holds"}, rows, jrows);
    };
  });

  // construct / construct sweep
  CLI::App* construct = sub(&app, "construct", "order-p lattice construction");
  std::uint64_t cons_p = 0;
  std::string dencap_text = "2^20";
  std::optional<int> probe_k;
  auto* p_opt = construct->add_option("--p", cons_p, "prime p >= 5");
  construct->add_option("--dencap", dencap_text, "power-of-two denominator cap for T, e.g. 2^20");
  construct->add_option("--probe-k", probe_k, "run the mod 2^k isotropy probe")->check(CLI::Range(1, 64));
  CLI::App* sweep = sub(construct, "sweep", "discriminant, log volume and ratio for 5 <= p <= pmax");
  std::uint64_t pmax = 0;
  sweep->add_option("--pmax", pmax, "largest p")->required()->check(CLI::Range(5ULL, 1000ULL));
  sweep->callback([&] {
    table_command = true;
    action = [&](const Output& o, const Config& cfg) {
      warn(o, cfg, {"belolipetsky_a", "belolipetsky_b"});
      std::vector<std::vector<std::string>> rows;
      nlohmann::json jrows = nlohmann::json::array();
      for (const SweepRow& r : construction_sweep(pmax, cfg.belolipetsky_a, cfg.belolipetsky_b, threads)) {
        rows.push_back({std::to_string(r.p), to_string(r.disc), format_real(r.log_v_hat), format_real(r.ratio)});
        jrows.push_back({{"p", r.p},
                         {"disc", to_string(r.disc)},
                         {"log_v_hat", format_real(r.log_v_hat)},
                         {"ratio", format_real(r.ratio)}});
      }
      emit_table(o, {"p", "disc", "log_v_hat", "ratio"}, rows, jrows);
    };
  });
  construct->callback([&] {
    if (sweep->parsed()) return;
    if (p_opt->count() == 0) throw CLI::RequiredError("--p");
    action = [&](const Output& o, const Config& cfg) {
      warn(o, cfg, {"belolipetsky_a", "belolipetsky_b", "volume_log_c", "prasad_c2", "jordan_index"});
      ConstructionOptions opt;
      opt.denominator_cap = dencap_arg(dencap_text);
      opt.belolipetsky_a = cfg.belolipetsky_a;
      opt.belolipetsky_b = cfg.belolipetsky_b;
      opt.volume_log_c = cfg.volume_log_c;
      opt.prasad_c2 = cfg.prasad_c2;
      opt.jordan_index = cfg.jordan_index;
      opt.probe_k = probe_k;
      emit_report(o, to_json(build_construction(cons_p, opt)));
    };
  });

  // apply generators
  CLI::App* apply = sub(&app, "apply", "applications");
  apply->require_subcommand(1);
  CLI::App* gens = sub(apply, "generators", "(f(v (log v)^c) + log log v) / v");
  std::string alpha_text = "0.5";
  std::string c_text = "1";
  std::string kappa_text = "1";
  std::string form_text = "power";
  gens->add_option("--v", v_text, "covolume v > e^e")->required();
  gens->add_option("--alpha", alpha_text, "f(u) = u^(1 - alpha)");
  gens->add_option("--c", c_text, "exponent of log v in the argument of f");
  gens->add_option("--form", form_text, "power or polylog");
  gens->add_option("--kappa", kappa_text, "f(u) = (log u)^kappa for --form polylog");
  gens->callback([&] {
    action = [&](const Output& o, const Config&) {
      const GrowthForm form = parse_growth_form(form_text);
      const Real v = real_arg(v_text, "v");
      const Real alpha = real_arg(alpha_text, "alpha");
      const Real c = real_arg(c_text, "c");
      const Real kappa = real_arg(kappa_text, "kappa");
      emit_report(o, {{"v", format_real(v)},
                      {"alpha", format_real(alpha)},
                      {"c", format_real(c)},
                      {"form", form_text},
                      {"kappa", format_real(kappa)},
                      {"value", format_real(generator_bound_pipeline(v, alpha, c, form, kappa))}});
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    const Config cfg = load_config(config_path);
    for (const auto& line : cfg.load_warnings) err << line << "\n";
    const Format format = format_name.empty() ? (table_command ? Format::csv : Format::json)
                                              : (format_name == "csv" ? Format::csv : Format::json);
    action(Output{out, err, format}, cfg);
  } catch (const ResourceLimitError& e) {
    error_line(err, "resource_limit", e.what());
    return kExitResource;
  } catch (const DomainError& e) {
    error_line(err, "domain_error", e.what());
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace selberg
