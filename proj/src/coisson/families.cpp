#include "chiralkit/coisson/families.hpp"

#include <algorithm>

#include "chiralkit/errors.hpp"

namespace chiralkit::coisson {

using jet::xvar;

namespace {

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names{"heis+", "heis-", "vir+", "vir-", "ham", "mom", "wind"};
  return names;
}

DiffPoly metric_square(const Matrix& g, const std::vector<DiffPoly>& v) {
  DiffPoly out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!g(i, j).is_zero()) out += g(i, j) * (v[i] * v[j]);
  return out;
}

}  // namespace

ModeGenerator ModeGenerator::parse(const std::string& spec, int mode) {
  ModeGenerator g;
  g.mode = mode;
  auto colon = spec.find(':');
  g.family = spec.substr(0, colon);
  if (std::find(known_families().begin(), known_families().end(), g.family) == known_families().end())
    throw UnknownFamily("unknown generator family '" + g.family + "'");
  if (colon != std::string::npos) {
    try {
      g.field = std::stoi(spec.substr(colon + 1)) - 1;
    } catch (const std::exception&) {
      throw ParseError("bad field index in '" + spec + "'");
    }
    if (g.field < 0) throw ParseError("field indices are 1-based");
  }
  return g;
}

std::string ModeGenerator::label() const {
  std::string s = family;
  if (family != "vir+" && family != "vir-" && family != "ham") s += ":" + std::to_string(field + 1);
  return s + "[" + std::to_string(mode) + "]";
}

DiffPoly mode_density_fields(const ModeGenerator& g, const Identification& id) {
  const std::size_t n = id.fields();
  if (g.field >= static_cast<int>(n)) throw DimensionMismatch("generator field index exceeds the model");
  const DiffPoly wave(jet::trig(g.mode));
  const Scalar i(0, 1);
  std::vector<DiffPoly> uz, uzb, vel, wind;
  for (std::size_t k = 0; k < n; ++k) {
    const int f = static_cast<int>(k);
    uz.push_back(jet::dz(f));
    uzb.push_back(jet::dzbar(f));
    vel.emplace_back(xvar(f, 1, 0));
    wind.emplace_back(xvar(f, 0, 1));
  }
  const auto j = static_cast<std::size_t>(g.field);
  if (g.family == "heis+") return i * (wave * uz[j]);
  if (g.family == "heis-") return i * (wave * uzb[j]);
  if (g.family == "vir+") return -i * (wave * metric_square(id.metric(), uz));
  if (g.family == "vir-") return -i * (wave * metric_square(id.metric(), uzb));
  if (g.family == "ham")
    return Scalar(0, Rational(-1, 2)) * (wave * (metric_square(id.metric(), vel) - metric_square(id.metric(), wind)));
  if (g.family == "wind") return wave * wind[j];
  if (g.family == "mom") return -(wave * id.from_canonical(LocalDensity(DiffPoly(jet::pvar(g.field)))));
  throw UnknownFamily("unknown generator family '" + g.family + "'");
}

LocalDensity mode_density(const ModeGenerator& g, const Identification& id) {
  return id.to_canonical(mode_density_fields(g, id));
}

std::vector<StructureConstant> mode_structure_constants(const std::vector<std::string>& families,
                                                        const std::vector<int>& modes, const Identification& id,
                                                        const BracketTable& t) {
  std::vector<ModeGenerator> gens;
  for (const auto& f : families)
    for (int m : modes) gens.push_back(ModeGenerator::parse(f, m));
  std::vector<FourierClass> classes;
  for (const auto& g : gens) classes.emplace_back(mode_density(g, id));
  std::vector<StructureConstant> out;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      out.push_back({gens[a], gens[b], fourier_bracket(classes[a], classes[b], t)});
  return out;
}

}  // namespace chiralkit::coisson
