#include "cli.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sflow/sflow.hpp"

namespace sflow::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// A command result in both output shapes, plus the exit code it implies.
struct Result {
  Json json;
  Table table;
  int code = kExitOk;
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

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) os << ',';
      os << csv_field(cells[i]);
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

struct Options {
  std::string format = "json";
  std::string output;
  std::string config;
  bool pretty = false;

  std::string family;
  std::string k;
  std::string sector = "ns";
  std::string rho;
  std::string nu;
  std::string ell;
  std::string oracle;
  bool relax = false;
  bool inverse = false;
  bool sweep = false;

  std::string generator;
  int gamma = 0;
  std::string index;

  GridBounds grid;
  std::optional<unsigned> threads;
};

/// Reads the INI config. Recognized keys:
///   [output] format, pretty
///   [grid]   psl22_max_capacity, spo_min_r, spo_max_r, spo_max_capacity,
///            d21_max_mn, d21_max_t, f4_max_capacity
///   [sweep]  threads
void apply_config(const std::string& path, Options& o, const CLI::App& app) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw parse_error("config: " + std::string(e.what()));
  }
  auto get_long = [&](const char* key, long& slot) {
    if (auto v = tree.get_optional<std::string>(key)) {
      try {
        std::size_t used = 0;
        slot = std::stol(*v, &used);
        if (used != v->size()) throw std::invalid_argument(*v);
      } catch (const std::exception&) {
        throw parse_error(std::string("config: ") + key + " expects an integer, got '" + *v + "'");
      }
    }
  };
  if (app.count("--format") == 0) {
    if (auto v = tree.get_optional<std::string>("output.format")) o.format = *v;
  }
  if (app.count("--pretty") == 0) {
    if (auto v = tree.get_optional<std::string>("output.pretty")) o.pretty = (*v == "true" || *v == "1");
  }
  get_long("grid.psl22_max_capacity", o.grid.psl22_max_capacity);
  get_long("grid.spo_min_r", o.grid.spo_min_r);
  get_long("grid.spo_max_r", o.grid.spo_max_r);
  get_long("grid.spo_max_capacity", o.grid.spo_max_capacity);
  get_long("grid.d21_max_mn", o.grid.d21_max_mn);
  get_long("grid.d21_max_t", o.grid.d21_max_t);
  get_long("grid.f4_max_capacity", o.grid.f4_max_capacity);
  long threads = 0;
  get_long("sweep.threads", threads);
  if (threads > 0) o.threads = static_cast<unsigned>(threads);
  for (const auto& [key, value] :
       {std::pair{"psl22_max_capacity", o.grid.psl22_max_capacity}, {"spo_max_capacity", o.grid.spo_max_capacity},
        {"d21_max_mn", o.grid.d21_max_mn}, {"d21_max_t", o.grid.d21_max_t}, {"f4_max_capacity", o.grid.f4_max_capacity}}) {
    if (value < 0) throw parse_error(std::string("config: grid.") + key + " must be nonnegative");
  }
  if (o.grid.spo_min_r < 3 || o.grid.spo_max_r < o.grid.spo_min_r) {
    throw parse_error("config: grid requires 3 <= spo_min_r <= spo_max_r");
  }
}

// ---------------------------------------------------------------------------
// Shared argument handling

struct Context {
  Family family;
  Rational k;
  RhoChoice rho = RhoChoice::Omega1;
};

Context context(const Options& o, bool need_k = true) {
  if (o.family.empty()) throw parse_error("--family is required");
  Context c;
  c.family = parse_family(o.family);
  if (!o.k.empty()) {
    c.k = Rational::parse(o.k);
  } else if (c.family.kind == FamilyKind::D21) {
    c.k = d21_level(c.family);
  } else if (need_k) {
    throw parse_error("--k is required for " + c.family.display_name());
  }
  c.rho = o.rho.empty() ? default_rho(c.family) : parse_rho(o.rho);
  require_rho(c.family, c.rho);
  return c;
}

Weight required_weight(const Options& o, const Family& f) {
  if (o.nu.empty()) throw parse_error("--nu is required");
  return parse_weight(f, o.nu);
}

Rational required_ell(const Options& o) {
  if (o.ell.empty()) throw parse_error("--ell is required");
  return Rational::parse(o.ell);
}

ExtremalityOracle load_oracle(const std::string& path, const Family& f) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open oracle file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw parse_error("oracle file: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw parse_error("oracle file must be a JSON object keyed by weight coordinates");
  ExtremalityOracle::Table table;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_object() || !value.contains("extremal") || !value["extremal"].is_boolean()) {
      throw parse_error("oracle entry '" + key + "' must be {\"extremal\": true|false}");
    }
    table[parse_weight(f, key).coords()] = value["extremal"].get<bool>();
  }
  return ExtremalityOracle::from_table(std::move(table));
}

// ---------------------------------------------------------------------------
// Commands

Result cmd_bound(const Options& o) {
  const Context c = context(o);
  const Sector sector = parse_sector(o.sector);
  const Weight nu = required_weight(o, c.family);
  const Rational b = bound(c.family, c.k, sector, nu, c.rho, o.relax ? Precondition::Relax : Precondition::Enforce);
  Result r;
  r.json["bound"] = b.to_string();
  r.table = {{"bound"}, {{b.to_string()}}};
  return r;
}

Result cmd_flow(const Options& o) {
  const Context c = context(o);
  const FamilyData data = family_data(c.family);
  const HighestWeight hw{required_weight(o, c.family), required_ell(o)};
  Result r;
  if (o.inverse) {
    const HighestWeight src = unflow_hw(data, c.k, c.rho, hw);
    r.json["nu"] = format_coords(src.nu);
    r.json["ell"] = src.ell.to_string();
    r.table = {{"nu", "ell"}, {{format_coords(src.nu), src.ell.to_string()}}};
  } else {
    const HighestWeight img = flow_hw(data, c.k, c.rho, hw);
    r.json["nu_r"] = format_coords(img.nu);
    r.json["ell_r"] = img.ell.to_string();
    r.table = {{"nu_r", "ell_r"}, {{format_coords(img.nu), img.ell.to_string()}}};
  }
  return r;
}

Result cmd_classify(const Options& o) {
  const Context c = context(o);
  const Sector sector = parse_sector(o.sector);
  const Weight nu = required_weight(o, c.family);
  const Rational ell = required_ell(o);
  const ExtremalityOracle oracle = load_oracle(o.oracle, c.family);
  const ClassificationResult res = sector == Sector::NS ? classify_ns(c.family, c.k, c.rho, nu, ell, oracle)
                                                        : classify_r(c.family, c.k, c.rho, nu, ell, oracle);
  Result r;
  r.json["verdict"] = to_string(res.verdict);
  r.json["bound"] = res.bound ? Json(res.bound->to_string()) : Json(nullptr);
  r.json["extremal_evidence"] = to_string(res.evidence);
  r.json["notes"] = res.notes;
  std::string notes;
  for (const auto& n : res.notes) notes += (notes.empty() ? "" : "; ") + n;
  r.table = {{"verdict", "bound", "extremal_evidence", "notes"},
             {{to_string(res.verdict), res.bound ? res.bound->to_string() : "", to_string(res.evidence), notes}}};
  if (res.verdict == Verdict::NonDominant) r.code = kExitNonDominant;
  return r;
}

Result cmd_enumerate(const Options& o) {
  const Context c = context(o);
  const Sector sector = parse_sector(o.sector);
  const SectorLattice lattice(c.family, c.k, sector, c.rho);
  Result r;
  r.json = Json::array();
  const bool psl = c.family.kind == FamilyKind::Psl22;
  r.table.header = {"coords", "sector", "family", "k"};
  if (psl) r.table.header.push_back("r");
  for (const auto& w : enumerate(lattice)) {
    Json row;
    row["coords"] = format_coords(w);
    row["sector"] = to_string(sector);
    row["family"] = c.family.spec_string();
    row["k"] = c.k.to_string();
    std::vector<std::string> cells{format_coords(w), to_string(sector), c.family.spec_string(), c.k.to_string()};
    if (psl) {
      row["r"] = psl22_label(w, sector).to_string();
      cells.push_back(psl22_label(w, sector).to_string());
    }
    r.json.push_back(std::move(row));
    r.table.rows.push_back(std::move(cells));
  }
  return r;
}

Result sweep_result(const SweepReport& rep) {
  Result r;
  r.json["check"] = to_string(rep.check);
  r.json["pass"] = rep.pass();
  r.json["grid_points"] = rep.results.size();
  r.json["cases"] = rep.total_cases();
  Json failures = Json::array();
  r.table.header = {"family", "k", "rho", "cases", "pass", "witness"};
  for (const auto& cr : rep.results) {
    r.table.rows.push_back({cr.grid_case.family.spec_string(), cr.grid_case.k.to_string(), to_string(cr.grid_case.rho),
                            std::to_string(cr.cases), cr.pass ? "true" : "false", cr.witness.value_or("")});
    if (!cr.pass) {
      Json f;
      f["family"] = cr.grid_case.family.spec_string();
      f["k"] = cr.grid_case.k.to_string();
      f["rho"] = to_string(cr.grid_case.rho);
      f["witness"] = cr.witness.value_or("");
      failures.push_back(std::move(f));
    }
  }
  r.json["failures"] = std::move(failures);
  if (!rep.pass()) r.code = kExitVerificationFailed;
  return r;
}

Result cmd_verify_grid(const Options& o, Check check) {
  if (o.sweep) {
    const auto grid = verification_grid(o.grid);
    return sweep_result(run_sweep(check, grid, {}, o.threads.value_or(worker_count())));
  }
  const Context c = context(o);
  if (!o.nu.empty() && check != Check::Bijection) {
    const FamilyData data = family_data(c.family);
    const Weight nu = required_weight(o, c.family);
    Result r;
    r.json["check"] = to_string(check);
    if (check == Check::Mf) {
      const MfReport rep = verify_mf(data, c.k, c.rho, nu);
      r.json["lhs"] = rep.lhs.to_string();
      r.json["rhs"] = rep.rhs.to_string();
      r.json["pass"] = rep.equal;
      r.table = {{"lhs", "rhs", "pass"}, {{rep.lhs.to_string(), rep.rhs.to_string(), rep.equal ? "true" : "false"}}};
      if (!rep.equal) r.code = kExitVerificationFailed;
    } else {
      const Rational ell = o.ell.empty() ? Rational(0) : Rational::parse(o.ell);
      const CrosscheckReport rep = flowed_ell_crosscheck(data, c.k, c.rho, {nu, ell});
      r.json["via_pairing"] = rep.via_pairing.to_string();
      r.json["via_coordinates"] = rep.via_coordinates.to_string();
      r.json["pass"] = rep.equal;
      r.table = {{"via_pairing", "via_coordinates", "pass"},
                 {{rep.via_pairing.to_string(), rep.via_coordinates.to_string(), rep.equal ? "true" : "false"}}};
      if (!rep.equal) r.code = kExitVerificationFailed;
    }
    return r;
  }
  if (check == Check::Bijection) {
    const BijectionReport rep = bijection_check(family_data(c.family), c.k, c.rho);
    Result r;
    r.json["check"] = "bijection";
    r.json["ns_count"] = rep.ns_count;
    r.json["r_count"] = rep.r_count;
    r.json["images_dominant"] = rep.images_dominant;
    r.json["injective"] = rep.injective;
    r.json["surjective"] = rep.surjective;
    r.json["pass"] = rep.bijective();
    r.json["counterexample"] = rep.counterexample ? Json(format_coords(*rep.counterexample)) : Json(nullptr);
    r.table = {{"ns_count", "r_count", "pass"},
               {{std::to_string(rep.ns_count), std::to_string(rep.r_count), rep.bijective() ? "true" : "false"}}};
    if (!rep.bijective()) r.code = kExitVerificationFailed;
    return r;
  }
  return sweep_result(run_sweep(check, {GridCase{c.family, c.k, c.rho}}, {}, 1));
}

Result cmd_verify_roundtrip(const Options& o) {
  struct Row {
    Generator gen;
    int gamma;
    Rational n;
  };
  std::vector<Row> rows;
  if (o.sweep) {
    const std::vector<std::pair<Generator, std::vector<int>>> legal{
        {Generator::J, {-2, 0, 2}}, {Generator::G, {-1, 1}}, {Generator::L, {0}}, {Generator::JHr, {0}}};
    for (const auto& [g, gammas] : legal) {
      for (int gamma : gammas) {
        for (int twice = -4; twice <= 4; ++twice) {
          const Rational n(twice, 2);
          if (g != Generator::G && !n.is_integer()) continue;
          rows.push_back({g, gamma, n});
        }
      }
    }
  } else {
    if (o.generator.empty() || o.index.empty()) throw parse_error("roundtrip needs --gen and --n (or --sweep)");
    rows.push_back({parse_generator(o.generator), o.gamma, Rational::parse(o.index)});
  }
  Result r;
  bool all = true;
  Json cases = Json::array();
  r.table.header = {"gen", "gamma", "n", "start", "pass", "result"};
  for (const auto& row : rows) {
    const RoundtripReport rep = roundtrip(row.gen, row.gamma, row.n);
    all = all && rep.ok;
    Json j;
    j["gen"] = to_string(row.gen);
    j["gamma"] = row.gamma;
    j["n"] = row.n.to_string();
    j["start"] = rep.start == Frame::R ? "R" : "NS";
    j["pass"] = rep.ok;
    if (!rep.ok) j["result"] = rep.result.to_string();
    r.table.rows.push_back({to_string(row.gen), std::to_string(row.gamma), row.n.to_string(),
                            rep.start == Frame::R ? "R" : "NS", rep.ok ? "true" : "false",
                            rep.ok ? "" : rep.result.to_string()});
    cases.push_back(std::move(j));
  }
  r.json["check"] = "roundtrip";
  r.json["pass"] = all;
  r.json["cases"] = std::move(cases);
  if (!all) r.code = kExitVerificationFailed;
  return r;
}

Result cmd_verify_symbolic(const Options& o) {
  std::vector<Family> families;
  if (o.sweep || o.family.empty()) {
    families = {Family::psl22(), Family::d21(1, 1, 1), Family::f4()};
    for (long rr = o.grid.spo_min_r; rr <= o.grid.spo_max_r; ++rr) families.push_back(Family::spo(static_cast<int>(rr)));
  } else {
    families = {parse_family(o.family)};
  }
  Result r;
  bool all = true;
  Json ids = Json::array();
  r.table.header = {"identity", "pass", "difference"};
  for (const auto& f : families) {
    for (const auto& id : symbolic_suite(family_data(f))) {
      const bool ok = id.holds();
      all = all && ok;
      Json j;
      j["identity"] = id.name;
      j["pass"] = ok;
      if (!ok) j["difference"] = id.difference_string();
      ids.push_back(std::move(j));
      r.table.rows.push_back({id.name, ok ? "true" : "false", ok ? "" : id.difference_string()});
    }
  }
  r.json["check"] = "symbolic";
  r.json["pass"] = all;
  r.json["identities"] = std::move(ids);
  if (!all) r.code = kExitVerificationFailed;
  return r;
}

Result cmd_table(const Options& o) {
  const Context c = context(o);
  const ExtremalEquivalenceReport rep = extremal_equivalence_report(family_data(c.family), c.k, c.rho);
  Result r;
  r.json["family"] = c.family.spec_string();
  r.json["k"] = c.k.to_string();
  r.json["rho"] = to_string(c.rho);
  r.json["capacities"] = Json::array();
  for (const auto& m : level_capacities(c.family, c.k).capacities) r.json["capacities"].push_back(m.to_string());
  Json rows = Json::array();
  r.table.header = {"nu", "a_ns", "nu_r", "ell_r", "a_r", "matched"};
  for (const auto& row : rep.rows) {
    Json j;
    j["nu"] = format_coords(row.nu);
    j["a_ns"] = row.a_ns.to_string();
    j["nu_r"] = format_coords(row.nu_r);
    j["ell_r"] = row.ell_r.to_string();
    j["a_r"] = row.a_r.to_string();
    j["matched"] = row.matched;
    rows.push_back(std::move(j));
    r.table.rows.push_back({format_coords(row.nu), row.a_ns.to_string(), format_coords(row.nu_r),
                            row.ell_r.to_string(), row.a_r.to_string(), row.matched ? "true" : "false"});
  }
  r.json["rows"] = std::move(rows);
  if (!rep.all_matched()) r.code = kExitVerificationFailed;
  return r;
}

void add_family_options(CLI::App* sub, Options& o, bool with_sector) {
  sub->add_option("--family", o.family, "psl22 | spo:r=<int> | d21:m=<int>,n=<int>,t=<int> | f4");
  sub->add_option("--k", o.k, "level as an exact rational, e.g. -4/3");
  sub->add_option("--rho", o.rho, "rho_R choice: w1, wr, wr-1, w1^2, w3");
  if (with_sector) sub->add_option("--sector", o.sector, "ns or r");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral flow between Neveu-Schwarz and Ramond highest-weight data", "sflow"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", o.output, "write output to this file");
  app.add_option("--config", o.config, "INI config file");
  app.add_flag("--pretty", o.pretty, "indent JSON output");

  auto* bound_cmd = app.add_subcommand("bound", "A^NS or A^R at a weight");
  add_family_options(bound_cmd, o, true);
  bound_cmd->add_option("--nu", o.nu, "weight coordinates, e.g. 1/2,-1/2");
  bound_cmd->add_flag("--relax", o.relax, "skip the dominance check");

  auto* flow_cmd = app.add_subcommand("flow", "flow (nu, ell) to the Ramond sector");
  add_family_options(flow_cmd, o, false);
  flow_cmd->add_option("--nu", o.nu, "weight coordinates");
  flow_cmd->add_option("--ell", o.ell, "conformal weight");
  flow_cmd->add_flag("--inverse", o.inverse, "map Ramond data back");

  auto* classify_cmd = app.add_subcommand("classify", "unitarity verdict");
  add_family_options(classify_cmd, o, true);
  classify_cmd->add_option("--nu", o.nu, "weight coordinates");
  classify_cmd->add_option("--ell", o.ell, "conformal weight");
  classify_cmd->add_option("--oracle", o.oracle, "JSON extremality oracle");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list P_+^k(NS) or P_+^k(R)");
  add_family_options(enumerate_cmd, o, true);

  auto* verify_cmd = app.add_subcommand("verify", "identity and property checks");
  verify_cmd->require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::string>> verify_subs;
  for (const char* name : {"mf", "bijection", "crosscheck"}) {
    auto* s = verify_cmd->add_subcommand(name);
    add_family_options(s, o, false);
    s->add_option("--nu", o.nu, "single weight");
    s->add_option("--ell", o.ell, "conformal weight (crosscheck)");
    s->add_flag("--sweep", o.sweep, "run over the whole grid");
    verify_subs.emplace_back(s, name);
  }
  auto* roundtrip_cmd = verify_cmd->add_subcommand("roundtrip");
  roundtrip_cmd->add_option("--gen", o.generator, "J, G, L or JHr");
  roundtrip_cmd->add_option("--gamma", o.gamma, "ad(h^R) eigenvalue");
  roundtrip_cmd->add_option("--n", o.index, "mode index (half-integer)");
  roundtrip_cmd->add_flag("--sweep", o.sweep, "all legal (gen, gamma, n) with |n| <= 2");
  auto* symbolic_cmd = verify_cmd->add_subcommand("symbolic");
  symbolic_cmd->add_option("--family", o.family, "family (default: all)");
  symbolic_cmd->add_flag("--sweep", o.sweep, "all families");

  auto* table_cmd = app.add_subcommand("table", "paired NS/R atlas");
  add_family_options(table_cmd, o, false);

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
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Result result;
  try {
    if (!o.config.empty()) apply_config(o.config, o, app);
    if (o.format != "json" && o.format != "csv") throw parse_error("unknown format '" + o.format + "'");
    if (bound_cmd->parsed()) {
      result = cmd_bound(o);
    } else if (flow_cmd->parsed()) {
      result = cmd_flow(o);
    } else if (classify_cmd->parsed()) {
      result = cmd_classify(o);
    } else if (enumerate_cmd->parsed()) {
      result = cmd_enumerate(o);
    } else if (table_cmd->parsed()) {
      result = cmd_table(o);
    } else if (roundtrip_cmd->parsed()) {
      result = cmd_verify_roundtrip(o);
    } else if (symbolic_cmd->parsed()) {
      result = cmd_verify_symbolic(o);
    } else {
      for (const auto& [s, name] : verify_subs) {
        if (!s->parsed()) continue;
        const Check check = name == "mf" ? Check::Mf : name == "bijection" ? Check::Bijection : Check::Crosscheck;
        result = cmd_verify_grid(o, check);
      }
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const consistency_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  std::ostringstream buffer;
  if (o.format == "csv") {
    write_csv(buffer, result.table);
  } else {
    buffer << result.json.dump(o.pretty ? 2 : -1) << '\n';
  }
  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitDataError;
    }
    file << buffer.str();
  }
  return result.code;
}

}  // namespace sflow::cli
