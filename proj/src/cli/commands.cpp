#include "chiralkit/cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chiralkit/coisson/fourier.hpp"
#include "chiralkit/errors.hpp"
#include "chiralkit/fm/chiral_fm.hpp"
#include "chiralkit/fock/fock_space.hpp"
#include "chiralkit/fock/qseries.hpp"
#include "chiralkit/jet/expr.hpp"
#include "chiralkit/jet/noether.hpp"

namespace chiralkit::cli {

namespace {

using exactlin::Json;
using exactlin::Matrix;
using exactlin::Scalar;

struct Options {
  std::string format;
  std::string out_path;
  std::string model_path;
  std::string radius_unit;
  std::string sign = "minus";
  int cutoff = 2;
  int level = 0;
  int order = 4;

  // fm
  std::string mu_path;
  std::string class_path;
  bool inverse = false;
  // noether
  std::string lagrangian;
  std::string generator = "dt";
  std::vector<std::string> components;
  bool restrict = false;
  // bracket
  std::string left;
  std::string right;
  int fields = 0;
  bool via_fields = false;
  // jacobi
  std::string twist_path;
  // character
  std::string sector;
};

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    return Json::parse(read_file(path, in));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// A literal expression, or one line from stdin for "-".
std::string expression_arg(const std::string& value, std::istream& in) {
  if (value != "-") return value;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("expected an expression on stdin");
  return line;
}

std::string pick_format(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw ParseError("format '" + f + "' is not available for this command");
}

Scalar bracket_sign(const Options& o) {
  if (o.sign == "minus") return Scalar(-1);
  if (o.sign == "plus") return Scalar(1);
  throw ParseError("--sign-convention must be 'plus' or 'minus'");
}

fock::LatticeModel load_model(const Options& o, std::istream& in) {
  if (!o.radius_unit.empty()) {
    if (!o.model_path.empty()) throw ParseError("give either --model or --radius-unit");
    return fock::one_dim_model(exactlin::parse_rational(o.radius_unit));
  }
  if (o.model_path.empty()) throw ParseError("a model is required (--model or --radius-unit)");
  return fock::model_from_json(read_json(o.model_path, in));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ";" : "") + v[k].str();
  return s;
}

Json coords(const fock::Coords& c) {
  Json a = Json::array();
  for (long x : c) a.push_back(x);
  return a;
}

// ---- fm ----------------------------------------------------------------

std::string cmd_fm(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  const Json cls = read_json(o.class_path, in);
  if (!cls.is_object() || !cls.contains("kind")) throw ParseError("class file needs a 'kind'");
  const std::string kind = cls.at("kind").get<std::string>();
  if (kind == "linear") {
    const Matrix a = exactlin::matrix_from_json(cls.at("a"));
    Json out;
    out["kind"] = "linear";
    if (cls.contains("b")) {
      auto [fa, fb] = fm::fm_linear_differential(a, exactlin::matrix_from_json(cls.at("b")));
      out["a"] = exactlin::to_json(fa);
      out["b"] = exactlin::to_json(fb);
    } else {
      out["a"] = exactlin::to_json(fm::fm_linear(a));
    }
    return dump(out);
  }
  if (o.mu_path.empty()) throw ParseError("--mu is required for kind '" + kind + "'");
  fm::NondegClass mu(exactlin::matrix_from_json(read_json(o.mu_path, in)));
  if (o.inverse) mu = mu.inverted();
  if (kind == "cdo") return dump(fm::to_json(fm::fm_cdo(mu, fm::cdo_from_json(cls))));
  if (kind == "tdo") return dump(fm::to_json(fm::fm_tdo(mu, fm::tdo_from_json(cls))));
  if (kind == "cdo_morphism") return dump(fm::to_json(fm::fm_cdo_morphism(mu, fm::morphism_from_json(cls))));
  throw ParseError("unknown class kind '" + kind + "'");
}

// ---- noether -----------------------------------------------------------

jet::Generator named_generator(const std::string& name, std::size_t n) {
  if (name == "dt") return jet::time_translation(n);
  if (name == "ds") return jet::space_translation(n);
  if (name == "hol") return jet::holomorphic_field(n);
  if (name == "antihol") return jet::antiholomorphic_field(n);
  if (name.rfind("shift:", 0) == 0) {
    int j = 0;
    try {
      j = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      throw ParseError("bad field in generator '" + name + "'");
    }
    if (j < 1 || static_cast<std::size_t>(j) > n) throw ParseError("generator field out of range in '" + name + "'");
    return jet::target_shift(n, static_cast<std::size_t>(j - 1));
  }
  throw ParseError("unknown generator '" + name + "' (dt, ds, hol, antihol, shift:j)");
}

std::string cmd_noether(const Options& o, std::istream& in) {
  const std::string format = pick_format(o, "text", {"text", "json"});
  std::optional<jet::Lagrangian> lag;
  if (!o.lagrangian.empty()) {
    const jet::DiffPoly density = jet::parse_expr(expression_arg(o.lagrangian, in));
    const int n = std::max({density.field_count(), o.fields, 1});
    lag.emplace(density, static_cast<std::size_t>(n));
  } else if (!o.model_path.empty() || !o.radius_unit.empty()) {
    const auto m = load_model(o, in);
    lag.emplace(jet::sigma_model_lagrangian(m.g, m.b));
  } else {
    lag.emplace(jet::free_boson_lagrangian());
  }
  const std::size_t n = lag->fields();
  jet::Generator gen;
  if (!o.components.empty()) {
    if (o.components.size() != n) throw ParseError("need one --component per field");
    for (const auto& c : o.components) gen.components.push_back(jet::parse_expr(c));
  } else {
    gen = named_generator(o.generator, n);
  }
  const auto result = jet::noether_detailed(*lag, gen);
  std::optional<jet::VariationalForm> restricted;
  if (o.restrict) restricted = jet::restrict_to_sol0(result.integral, *lag);
  if (format == "json") {
    Json j;
    j["alpha"] = jet::to_json(result.alpha);
    j["integral"] = jet::to_json(result.integral);
    if (restricted) j["restricted"] = jet::to_json(*restricted);
    return dump(j);
  }
  std::string s = "alpha = " + jet::to_text(result.alpha) + "\n";
  s += "integral = " + jet::to_text(result.integral) + "\n";
  if (restricted) s += "restricted = " + jet::to_text(*restricted) + "\n";
  return s;
}

// ---- bracket / jacobi --------------------------------------------------

std::string cmd_bracket(const Options& o, std::istream& in) {
  const std::string format = pick_format(o, "text", {"text", "json"});
  const jet::DiffPoly a = jet::parse_expr(expression_arg(o.left, in));
  const jet::DiffPoly b = jet::parse_expr(expression_arg(o.right, in));
  const int n = std::max({a.field_count(), b.field_count(), o.fields, 1});
  std::optional<coisson::Identification> id;
  if (!o.model_path.empty() || !o.radius_unit.empty()) {
    const auto m = load_model(o, in);
    if (m.dim() < static_cast<std::size_t>(n)) throw DimensionMismatch("densities use more fields than the model");
    id.emplace(m.g, m.b);
  } else if (o.via_fields) {
    id.emplace(coisson::Identification::standard(static_cast<std::size_t>(n)));
  }
  const std::size_t fields = id ? id->fields() : static_cast<std::size_t>(n);
  const coisson::LocalDensity la = o.via_fields ? id->to_canonical(a) : coisson::LocalDensity(a);
  const coisson::LocalDensity lb = o.via_fields ? id->to_canonical(b) : coisson::LocalDensity(b);
  const coisson::BracketTable table(fields, bracket_sign(o));
  const auto expansion = coisson::density_bracket(la, lb, table);
  const jet::DiffPoly cls = coisson::normal_form(expansion.coefficient(0));
  if (format == "json") {
    Json j;
    j["bracket"] = coisson::to_json(expansion);
    j["class"] = jet::to_json(cls);
    if (o.via_fields) j["class_fields"] = jet::to_json(coisson::normal_form(id->from_canonical(cls)));
    return dump(j);
  }
  std::string s = "bracket = " + coisson::to_text(expansion) + "\n";
  s += "class = " + jet::to_text(cls) + "\n";
  if (o.via_fields) s += "class_fields = " + jet::to_text(coisson::normal_form(id->from_canonical(cls))) + "\n";
  return s;
}

std::string cmd_jacobi(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  const Json spec = read_json(o.twist_path, in);
  if (!spec.is_object() || !spec.contains("fields")) throw ParseError("twist file needs 'fields'");
  for (const auto& [key, value] : spec.items())
    if (key != "fields" && key != "twist") throw ParseError("unknown twist key '" + key + "'");
  const auto n = spec.at("fields").get<std::size_t>();
  coisson::BracketTable table(n, bracket_sign(o));
  if (spec.contains("twist"))
    for (const auto& entry : spec.at("twist")) {
      const auto idx = entry.at("idx");
      if (!idx.is_array() || idx.size() != 3) throw ParseError("twist 'idx' must list three 1-based indices");
      std::array<std::size_t, 3> k{};
      for (std::size_t r = 0; r < 3; ++r) {
        const long v = idx[r].get<long>();
        if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError("twist index out of range");
        k[r] = static_cast<std::size_t>(v - 1);
      }
      table.set_twist(k[0], k[1], k[2], jet::parse_expr(entry.at("coeff").get<std::string>()));
    }
  // e^{imσ} p_j for m ∈ {0, 1}
  std::vector<jet::DiffPoly> probes;
  for (int m = 0; m <= 1; ++m)
    for (std::size_t j = 0; j < n; ++j)
      probes.push_back(jet::DiffPoly(jet::trig(m)) * jet::DiffPoly(jet::pvar(static_cast<int>(j))));
  Json names = Json::array();
  for (const auto& p : probes) names.push_back(jet::to_text(p));
  Json residuals = Json::array();
  std::size_t triples = 0;
  for (std::size_t a = 0; a < probes.size(); ++a)
    for (std::size_t b = a + 1; b < probes.size(); ++b)
      for (std::size_t c = b + 1; c < probes.size(); ++c) {
        ++triples;
        const auto r = coisson::jacobi_residual(table, probes[a], probes[b], probes[c]);
        if (r.is_zero()) continue;
        Json e;
        e["triple"] = Json::array({a + 1, b + 1, c + 1});
        e["residual"] = jet::to_text(r.normal_form());
        residuals.push_back(std::move(e));
      }
  Json j;
  j["fields"] = n;
  j["probes"] = std::move(names);
  j["triples"] = triples;
  j["nonzero"] = residuals.size();
  j["residuals"] = std::move(residuals);
  return dump(j);
}

// ---- lattice models ----------------------------------------------------

std::string cmd_spectrum(const Options& o, std::istream& in) {
  const std::string format = pick_format(o, "csv", {"csv", "json"});
  const auto m = load_model(o, in);
  const auto sectors = fock::enumerate_sectors(m, o.cutoff);
  if (format == "csv") {
    std::string s = "l,lstar,hol,antihol\n";
    for (const auto& sec : sectors) {
      auto [hol, antihol] = fock::spectrum_point(m, sec.l, sec.dual);
      s += join(sec.l) + "," + join(sec.dual) + "," + join(hol) + "," + join(antihol) + "\n";
    }
    return s;
  }
  Json rows = Json::array();
  for (const auto& sec : sectors) {
    auto [hol, antihol] = fock::spectrum_point(m, sec.l, sec.dual);
    Json r;
    r["l"] = coords(sec.l_coords);
    r["lstar"] = coords(sec.dual_coords);
    r["hol"] = exactlin::to_json(hol);
    r["antihol"] = exactlin::to_json(antihol);
    rows.push_back(std::move(r));
  }
  return dump(rows);
}

std::string cmd_states(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  const auto m = load_model(o, in);
  Json rows = Json::array();
  for (const auto& sec : fock::enumerate_sectors(m, o.cutoff)) {
    Json r = fock::to_json(sec);
    if (o.level > 0) {
      Json dims = Json::array();
      for (auto d : fock::build_fock(m, sec.a_plus, o.level).level_dimensions()) dims.push_back(d);
      r["level_dimensions"] = std::move(dims);
    }
    rows.push_back(std::move(r));
  }
  Json j;
  j["model"] = fock::to_json(m);
  j["cutoff"] = o.cutoff;
  j["sectors"] = std::move(rows);
  return dump(j);
}

std::string cmd_locality(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  const auto m = load_model(o, in);
  const auto report = fock::ko_locality(m, o.cutoff);
  Json sectors = Json::array();
  for (const auto& s : report.sectors) sectors.push_back(Json::array({coords(s.l_coords), coords(s.dual_coords)}));
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json r;
    r["left"] = e.left + 1;
    r["right"] = e.right + 1;
    r["hol"] = exactlin::to_json(Scalar(e.hol));
    r["antihol"] = exactlin::to_json(Scalar(e.antihol));
    r["integral"] = e.integral;
    entries.push_back(std::move(r));
  }
  Json j;
  j["sectors"] = std::move(sectors);
  j["pairs"] = report.entries.size();
  j["violations"] = report.violations;
  j["exponents"] = std::move(entries);
  return dump(j);
}

std::string cmd_tdual(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  return dump(fock::to_json(fock::t_dual(load_model(o, in))));
}

std::string cmd_chiral(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  const auto m = load_model(o, in);
  Json rows = Json::array();
  for (const auto& s : fock::chiral_sectors(m, o.cutoff)) rows.push_back(fock::to_json(s));
  Json j;
  j["self_dual"] = fock::is_self_dual(m);
  j["sectors"] = std::move(rows);
  return dump(j);
}

fock::Coords parse_coords(const std::string& text, std::size_t n) {
  fock::Coords c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad sector coordinate '" + item + "'");
    }
  }
  if (c.size() != n) throw ParseError("sector needs " + std::to_string(n) + " coordinates per lattice");
  return c;
}

std::string cmd_character(const Options& o, std::istream& in) {
  pick_format(o, "json", {"json"});
  if (o.order < 0) throw ParseError("--order must be nonnegative");
  const auto m = load_model(o, in);
  if (!o.sector.empty()) {
    const auto bar = o.sector.find(';');
    if (bar == std::string::npos) throw ParseError("--sector takes 'l1,..,ln;m1,..,mn'");
    const auto s = fock::make_sector(m, parse_coords(o.sector.substr(0, bar), m.dim()),
                                     parse_coords(o.sector.substr(bar + 1), m.dim()));
    Json j;
    j["sector"] = fock::to_json(s);
    j["character"] = fock::to_json(fock::character(m, s, o.order));
    return dump(j);
  }
  Json j;
  j["cutoff"] = o.cutoff;
  j["partition_function"] = fock::to_json(fock::partition_function(m, o.cutoff, o.order));
  return dump(j);
}

void model_options(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model_path, "Model JSON file");
  sub->add_option("--radius-unit", o.radius_unit, "1-d model with 2πR = p/q");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations for chiral differential operators and sigma models on tori", "chiralkit"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.out_path, "Write the report here instead of stdout");
  app.add_option("--cutoff", o.cutoff, "Sector cutoff")->check(CLI::NonNegativeNumber);
  app.add_option("--level", o.level, "Fock level cutoff")->check(CLI::NonNegativeNumber);
  app.add_option("--order", o.order, "Series order")->check(CLI::NonNegativeNumber);
  app.add_option("--sign-convention", o.sign, "Bracket normalization {p, x} = ∓δ")
      ->check(CLI::IsMember({"plus", "minus"}));
  // Global options may also follow the subcommand name.
  app.fallthrough();

  auto* fm_cmd = app.add_subcommand("fm", "Fourier-Mukai transform of a CDO/TDO class");
  fm_cmd->add_option("--mu", o.mu_path, "Nondegenerate class (JSON matrix)");
  fm_cmd->add_option("--class", o.class_path, "Class file")->required();
  fm_cmd->add_flag("--inverse", o.inverse, "Use μ⁻¹");

  auto* noether_cmd = app.add_subcommand("noether", "Noether integral of motion");
  noether_cmd->add_option("--lagrangian", o.lagrangian, "Density; '-' reads stdin");
  noether_cmd->add_option("--generator", o.generator, "dt, ds, hol, antihol or shift:j");
  noether_cmd->add_option("--component", o.components, "Characteristic per field (repeat)");
  noether_cmd->add_option("--fields", o.fields, "Number of fields")->check(CLI::NonNegativeNumber);
  noether_cmd->add_flag("--restrict", o.restrict, "Also restrict to the τ = 0 solution slice");
  model_options(noether_cmd, o);

  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two local densities");
  bracket_cmd->add_option("--left", o.left, "First density; '-' reads stdin")->required();
  bracket_cmd->add_option("--right", o.right, "Second density; '-' reads stdin")->required();
  bracket_cmd->add_option("--fields", o.fields, "Number of fields")->check(CLI::NonNegativeNumber);
  bracket_cmd->add_flag("--via-fields", o.via_fields, "Inputs are densities in ∂_τx, ∂_σx");
  model_options(bracket_cmd, o);

  auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi residuals of a twisted bracket");
  jacobi_cmd->add_option("--twist", o.twist_path, "Twist table JSON")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Joint spectrum of the zero modes");
  auto* states_cmd = app.add_subcommand("states", "Sectors of the space of states");
  auto* locality_cmd = app.add_subcommand("locality", "Vertex-operator exponent table");
  auto* tdual_cmd = app.add_subcommand("tdual", "T-dual model");
  auto* chiral_cmd = app.add_subcommand("chiral", "Sectors of the chiral algebra");
  auto* character_cmd = app.add_subcommand("character", "Characters and partition function");
  character_cmd->add_option("--sector", o.sector, "Coordinates 'l1,..;m1,..' of one sector");
  for (auto* sub : {spectrum_cmd, states_cmd, locality_cmd, tdual_cmd, chiral_cmd, character_cmd}) model_options(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string report;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "fm") report = cmd_fm(o, in);
    else if (name == "noether") report = cmd_noether(o, in);
    else if (name == "bracket") report = cmd_bracket(o, in);
    else if (name == "jacobi") report = cmd_jacobi(o, in);
    else if (name == "spectrum") report = cmd_spectrum(o, in);
    else if (name == "states") report = cmd_states(o, in);
    else if (name == "locality") report = cmd_locality(o, in);
    else if (name == "tdual") report = cmd_tdual(o, in);
    else if (name == "chiral") report = cmd_chiral(o, in);
    else report = cmd_character(o, in);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return 2;
  }

  if (o.out_path.empty()) {
    out << report;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "input error: cannot write '" << o.out_path << "'\n";
      return 1;
    }
    f << report;
  }
  return 0;
}

}  // namespace chiralkit::cli
