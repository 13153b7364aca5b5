#include "smcg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "smcg/mcg.hpp"
#include "smcg/quadratic.hpp"

namespace smcg::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson integer_json(const Integer &a) {
  if (fits_int64(a)) return to_int64(a);
  return to_string(a);
}

Integer integer_from_json(const nlohmann::json &j, const char *field) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
      throw DocumentError(std::string(field) + ": " + e.what());
    }
  }
  throw DocumentError(std::string(field) + ": expected an integer or a decimal string");
}

std::string dump(const ojson &j) { return j.dump(2) + "\n"; }

ojson report(const char *command, ojson parameters, ojson results, std::optional<std::uint64_t> seed = std::nullopt) {
  ojson j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = seed ? ojson(*seed) : ojson(nullptr);
  j["parameters"] = std::move(parameters);
  j["results"] = std::move(results);
  return j;
}

CommandResult input_error(const std::string &msg) { return {kInputError, "", "error: " + msg + "\n"}; }

// Right-aligned columns under a header row.
std::string table(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto &row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string> &cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
    os << "\n";
  };
  line(header);
  for (const auto &row : rows) line(row);
  return os.str();
}

ojson verdict_json(const SplittingVerdict &v) {
  ojson j;
  j["modulus"] = v.modulus.value();
  j["base"] = v.base.to_string();
  j["splits"] = v.splits;
  ojson w;
  if (v.section_lift) {
    w["kind"] = "section";
    w["rule"] = "A -> (x.A - x, A)";
    ojson lift = ojson::array();
    for (const auto &c : v.section_lift->coords()) lift.push_back(integer_json(c));
    w["x"] = std::move(lift);
  } else {
    w["kind"] = "certificate";
  }
  w["refinements_checked"] = v.candidates_checked;
  w["fixed_refinements"] = v.fixed_found;
  j["witness"] = std::move(w);
  return j;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

// --- documents --------------------------------------------------------------

ojson element_to_json(const JacobiElement &g) {
  ojson j;
  j["r"] = g.rank().value();
  j["modulus"] = g.modulus().value();
  ojson x = ojson::array();
  for (const auto &c : g.x().coords()) x.push_back(integer_json(c));
  j["x"] = std::move(x);
  ojson a = ojson::array();
  for (std::size_t i = 0; i < g.matrix().dim(); ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < g.matrix().dim(); ++k) row.push_back(integer_json(g.matrix()(i, k)));
    a.push_back(std::move(row));
  }
  j["A"] = std::move(a);
  return j;
}

JacobiElement element_from_json(const nlohmann::json &doc) {
  if (!doc.is_object()) throw DocumentError("element document must be a JSON object");
  for (const char *key : {"r", "modulus", "x", "A"})
    if (!doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  if (!doc["r"].is_number_integer() || doc["r"].get<std::int64_t>() < 1 || doc["r"].get<std::int64_t>() > 1 << 16)
    throw DocumentError("r must be a positive integer");
  const Rank r(static_cast<int>(doc["r"].get<std::int64_t>()));
  if (!doc["modulus"].is_number_integer() || doc["modulus"].get<std::int64_t>() < 0)
    throw DocumentError("modulus must be a non-negative integer");
  const Modulus m(doc["modulus"].get<std::uint64_t>());

  const auto &xj = doc["x"];
  if (!xj.is_array() || xj.size() != r.dim()) throw DocumentError("x must be an array of 2r integers");
  std::vector<Integer> x;
  for (const auto &c : xj) {
    Integer v = integer_from_json(c, "x");
    if (!m.is_integral() && (v < 0 || v >= Integer(static_cast<unsigned long>(m.value()))))
      throw DocumentError("x entries must lie in [0, modulus)");
    x.push_back(std::move(v));
  }

  const auto &aj = doc["A"];
  if (!aj.is_array() || aj.size() != r.dim()) throw DocumentError("A must be a 2r x 2r array");
  std::vector<Integer> entries;
  for (const auto &row : aj) {
    if (!row.is_array() || row.size() != r.dim()) throw DocumentError("A must be a 2r x 2r array");
    for (const auto &c : row) entries.push_back(integer_from_json(c, "A"));
  }
  IntMatrix a(r.dim(), r.dim(), std::move(entries));
  if (!is_symplectic(a)) throw DocumentError("A is not symplectic");
  return JacobiElement(Covector(std::move(x), m), SymplecticMatrix(std::move(a)));
}

JacobiElement parse_element(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return element_from_json(doc);
}

std::string emit_element(const JacobiElement &g) { return dump(element_to_json(g)); }

// --- commands ---------------------------------------------------------------

CommandResult cmd_orbits(int r, Format format) {
  if (r < 1 || r > kMaxDecompositionRank) return input_error("orbits needs 1 <= r <= 8");
  const auto rep = orbit_decomposition(Rank(r));
  bool pass = rep.orbits.size() == 2;
  std::uint64_t total = 0;
  ojson orbits = ojson::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto &o : rep.orbits) {
    const std::uint64_t expected = arf_class_size(Rank(r), o.arf);
    pass = pass && o.arf_constant && o.size == expected;
    total += o.size;
    ojson j;
    j["arf"] = o.arf ? 1 : 0;
    j["size"] = o.size;
    j["expected_size"] = expected;
    j["arf_constant"] = o.arf_constant;
    j["representative"] = o.representative.to_string();
    orbits.push_back(std::move(j));
    rows.push_back({o.arf ? "1" : "0", std::to_string(o.size), std::to_string(expected), o.representative.to_string()});
  }
  if (pass) pass = rep.orbits[0].arf != rep.orbits[1].arf;
  const int code = pass ? kOk : kPropertyFailure;
  if (format == Format::Table) {
    std::ostringstream os;
    os << "orbits r=" << r << " (version " << kVersion << ")\n"
       << table({"arf", "size", "expected", "representative"}, rows) << "total " << total << ", "
       << (pass ? "pass" : "FAIL") << "\n";
    return {code, os.str(), ""};
  }
  ojson results;
  results["orbits"] = std::move(orbits);
  results["total"] = total;
  results["pass"] = pass;
  return {code, dump(report("orbits", ojson{{"r", r}}, std::move(results))), ""};
}

CommandResult cmd_split(int p, int r, std::optional<std::int64_t> modulus, Format format) {
  if (p != 3 && p != 7) return input_error("p must be 3 or 7");
  if (r < 1 || r > kMaxDecompositionRank) return input_error("split needs 1 <= r <= 8");
  if (modulus && (*modulus < 0 || *modulus % 4 != 0)) return input_error("modulus must be 0 or divisible by 4");
  std::optional<Modulus> m;
  if (modulus) m = Modulus(static_cast<std::uint64_t>(*modulus));
  const auto v = splitting_theorem_verdict(p, Rank(r), m);
  const bool agrees = v.smooth == (r == 1) && v.homotopy == (r == 1);
  if (format == Format::Table) {
    std::vector<std::vector<std::string>> rows;
    for (const auto *d : {&v.smooth_detail, &v.homotopy_detail})
      rows.push_back({d == &v.smooth_detail ? "smooth" : "homotopy", std::to_string(d->modulus.value()),
                      d->base.to_string(), d->splits ? "yes" : "no", d->section_lift ? "section" : "certificate",
                      std::to_string(d->fixed_found) + "/" + std::to_string(d->candidates_checked)});
    std::ostringstream os;
    os << "split p=" << p << " r=" << r << " (version " << kVersion << ")\n"
       << table({"model", "modulus", "base", "splits", "witness", "fixed/checked"}, rows);
    return {kOk, os.str(), ""};
  }
  ojson params{{"p", p}, {"r", r}};
  params["modulus"] = modulus ? ojson(*modulus) : ojson(nullptr);
  ojson results;
  results["smooth"] = verdict_json(v.smooth_detail);
  results["homotopy"] = verdict_json(v.homotopy_detail);
  results["splits_iff_r_is_1"] = agrees;
  return {kOk, dump(report("split", std::move(params), std::move(results))), ""};
}

namespace {

CommandResult with_membership(const std::vector<const JacobiElement *> &inputs, const JacobiElement &out,
                              const std::optional<std::string> &psi_bits) {
  if (psi_bits) {
    const auto psi = QuadraticRefinement::parse(*psi_bits);
    for (const auto *g : inputs)
      if (!gamma_psi_member(*g, psi)) return {kPropertyFailure, "", "error: input is not a member of Gamma(psi, C)\n"};
    if (!gamma_psi_member(out, psi)) return {kPropertyFailure, "", "error: result is not a member of Gamma(psi, C)\n"};
  }
  return {kOk, emit_element(out), ""};
}

} // namespace

CommandResult cmd_mul(const std::string &lhs, const std::string &rhs, const std::optional<std::string> &psi) {
  try {
    const auto g = parse_element(lhs);
    const auto h = parse_element(rhs);
    return with_membership({&g, &h}, jmul(g, h), psi);
  } catch (const Error &e) {
    return input_error(e.what());
  }
}

CommandResult cmd_inv(const std::string &element, const std::optional<std::string> &psi) {
  try {
    const auto g = parse_element(element);
    return with_membership({&g}, jinv(g), psi);
  } catch (const Error &e) {
    return input_error(e.what());
  }
}

CommandResult cmd_verify(int r, std::int64_t samples, std::uint64_t seed, bool negative_control, Format format) {
  if (r < 1 || r > 6) return input_error("verify needs 1 <= r <= 6");
  if (samples < 1) return input_error("samples must be positive");
  const auto suites = run_verification(Rank(r), static_cast<std::uint64_t>(samples), seed, negative_control);
  bool all = true;
  for (const auto &s : suites) all = all && s.ok();
  const int code = all ? kOk : kPropertyFailure;
  if (format == Format::Table) {
    std::vector<std::vector<std::string>> rows;
    for (const auto &s : suites)
      rows.push_back({s.name, std::to_string(s.passed), std::to_string(s.checks), s.ok() ? "pass" : "FAIL"});
    std::ostringstream os;
    os << "verify r=" << r << " samples=" << samples << " seed=" << seed << " (version " << kVersion << ")\n"
       << table({"suite", "passed", "checks", "status"}, rows);
    return {code, os.str(), ""};
  }
  ojson list = ojson::array();
  for (const auto &s : suites)
    list.push_back(ojson{{"name", s.name}, {"checks", s.checks}, {"passed", s.passed}, {"ok", s.ok()}});
  ojson params{{"r", r}, {"samples", samples}, {"negative_control", negative_control}};
  ojson results;
  results["suites"] = std::move(list);
  results["all_passed"] = all;
  return {code, dump(report("verify", std::move(params), std::move(results), seed)), ""};
}

CommandResult cmd_coeff(int jmax, Format format) {
  if (jmax < 1) return input_error("jmax must be at least 1");
  std::vector<PontryaginRow> rows;
  for (int j = 1; j <= jmax; ++j) rows.push_back(pontryagin_row(j));
  if (format == Format::Table) {
    std::vector<std::vector<std::string>> cells;
    for (const auto &row : rows)
      cells.push_back({std::to_string(row.j), to_string(row.a), to_string(row.c), to_string(row.factorial),
                       to_string(row.coefficient)});
    std::ostringstream os;
    os << "coeff jmax=" << jmax << " (version " << kVersion << ")\n"
       << table({"j", "a_j", "c_j", "(2j-1)!", "coefficient"}, cells);
    return {kOk, os.str(), ""};
  }
  ojson list = ojson::array();
  for (const auto &row : rows)
    list.push_back(ojson{{"j", row.j},
                         {"a", integer_json(row.a)},
                         {"c", integer_json(row.c)},
                         {"factorial", integer_json(row.factorial)},
                         {"coefficient", integer_json(row.coefficient)}});
  ojson results;
  results["rows"] = std::move(list);
  return {kOk, dump(report("coeff", ojson{{"jmax", jmax}}, std::move(results))), ""};
}

// --- argument handling ------------------------------------------------------

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact algebraic models of mapping class groups of #_r S^p x S^p", "smcg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format_name = "json";
  const auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  int r = 0, p = 0, jmax = 0;
  std::int64_t samples = 0, modulus = 0;
  std::uint64_t seed = 0;
  bool negative_control = false;
  std::string lhs, rhs, psi;

  auto *orbits = app.add_subcommand("orbits", "Orbit decomposition of the quadratic refinements");
  orbits->add_option("--r", r, "Rank")->required();
  add_format(orbits);

  auto *split = app.add_subcommand("split", "Splitting verdicts for the smooth and homotopy models");
  split->add_option("--p", p, "Sphere dimension (3 or 7)")->required();
  split->add_option("--r", r, "Rank")->required();
  auto *mod_opt = split->add_option("--modulus", modulus, "Homotopy modulus override (0 or a multiple of 4)");
  add_format(split);

  auto *mul = app.add_subcommand("mul", "Multiply two Jacobi group elements");
  mul->add_option("--lhs", lhs, "Left element document")->required();
  mul->add_option("--rhs", rhs, "Right element document")->required();
  auto *mul_psi = mul->add_option("--psi", psi, "Base refinement bits for membership validation");

  auto *inv = app.add_subcommand("inv", "Invert a Jacobi group element");
  inv->add_option("--lhs", lhs, "Element document")->required();
  auto *inv_psi = inv->add_option("--psi", psi, "Base refinement bits for membership validation");

  auto *verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--r", r, "Rank")->required();
  verify->add_option("--samples", samples, "Samples per suite")->required();
  verify->add_option("--seed", seed, "Random seed")->required();
  verify->add_flag("--negative-control", negative_control, "Inject a tabulated non-cocycle");
  add_format(verify);

  auto *coeff = app.add_subcommand("coeff", "Pontrjagin coefficient table");
  coeff->add_option("--jmax", jmax, "Largest index")->required();
  add_format(coeff);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion &) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const Format format = format_name == "table" ? Format::Table : Format::Json;
  CommandResult result{kOk, "", ""};
  try {
    if (*orbits) {
      result = cmd_orbits(r, format);
    } else if (*split) {
      result = cmd_split(p, r, mod_opt->count() ? std::optional(modulus) : std::nullopt, format);
    } else if (*mul) {
      result = cmd_mul(read_file(lhs), read_file(rhs), mul_psi->count() ? std::optional(psi) : std::nullopt);
    } else if (*inv) {
      result = cmd_inv(read_file(lhs), inv_psi->count() ? std::optional(psi) : std::nullopt);
    } else if (*verify) {
      result = cmd_verify(r, samples, seed, negative_control, format);
    } else if (*coeff) {
      result = cmd_coeff(jmax, format);
    }
  } catch (const Error &e) {
    result = input_error(e.what());
  }
  out << result.output;
  err << result.error;
  return result.exit_code;
}

} // namespace smcg::cli
