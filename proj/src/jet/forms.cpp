#include "chiralkit/jet/forms.hpp"

#include <algorithm>

#include "chiralkit/errors.hpp"

namespace chiralkit::jet {

namespace {

int sort_vertical(std::vector<JetVar>& v) {
  int sign = 1;
  for (std::size_t a = 1; a < v.size(); ++a)
    for (std::size_t b = a; b > 0 && v[b] < v[b - 1]; --b) {
      std::swap(v[b - 1], v[b]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < v.size(); ++a)
    if (v[a] == v[a - 1]) return 0;
  return sign;
}

// Wedge of a horizontal 1-form basis element (dτ or dσ) with h, from the left.
std::pair<int, Horizontal> wedge_left(Horizontal one, Horizontal h) {
  if (one == Horizontal::Tau) {
    if (h == Horizontal::One) return {1, Horizontal::Tau};
    if (h == Horizontal::Sigma) return {1, Horizontal::TauSigma};
    return {0, h};
  }
  if (h == Horizontal::One) return {1, Horizontal::Sigma};
  if (h == Horizontal::Tau) return {-1, Horizontal::TauSigma};
  return {0, h};
}

std::string horizontal_text(Horizontal h) {
  switch (h) {
    case Horizontal::One:
      return "";
    case Horizontal::Tau:
      return "dtau";
    case Horizontal::Sigma:
      return "dsigma";
    case Horizontal::TauSigma:
      return "dtau^dsigma";
  }
  return "";
}

Horizontal horizontal_from_text(const std::string& s) {
  if (s.empty() || s == "1") return Horizontal::One;
  if (s == "dtau") return Horizontal::Tau;
  if (s == "dsigma") return Horizontal::Sigma;
  if (s == "dtau^dsigma") return Horizontal::TauSigma;
  throw ParseError("unknown horizontal basis element '" + s + "'");
}

class CharacteristicCache {
 public:
  explicit CharacteristicCache(const Generator& gen) : gen_(gen) {}

  const DiffPoly& operator()(const JetVar& v) {
    if (v.kind != JetKind::Field) throw MathError("evolutionary fields act on field jets only");
    if (v.field >= static_cast<int>(gen_.fields()))
      throw DimensionMismatch("generator has fewer components than the expression has fields");
    auto it = cache_.find(v);
    if (it == cache_.end())
      it = cache_.emplace(v, total_derivative(gen_.components[static_cast<std::size_t>(v.field)], v.tau, v.sigma)).first;
    return it->second;
  }

 private:
  const Generator& gen_;
  std::map<JetVar, DiffPoly> cache_;
};

DiffPoly prolong_with(CharacteristicCache& chi, const DiffPoly& p) {
  DiffPoly out;
  for (const JetVar& v : p.variables()) out += partial(p, v) * chi(v);
  return out;
}

}  // namespace

int horizontal_degree(Horizontal h) {
  switch (h) {
    case Horizontal::One:
      return 0;
    case Horizontal::TauSigma:
      return 2;
    default:
      return 1;
  }
}

VariationalForm VariationalForm::horizontal(const DiffPoly& coeff, Horizontal h) {
  VariationalForm w;
  w.add({}, h, coeff);
  return w;
}

void VariationalForm::add(std::vector<JetVar> vertical, Horizontal h, const DiffPoly& coeff) {
  if (coeff.is_zero()) return;
  int sign = sort_vertical(vertical);
  if (sign == 0) return;
  FormKey key{std::move(vertical), h};
  auto [it, inserted] = comps_.try_emplace(key);
  if (sign > 0)
    it->second += coeff;
  else
    it->second -= coeff;
  if (it->second.is_zero()) comps_.erase(it);
}

DiffPoly VariationalForm::component(const FormKey& key) const {
  auto it = comps_.find(key);
  return it == comps_.end() ? DiffPoly() : it->second;
}

VariationalForm& VariationalForm::operator+=(const VariationalForm& o) {
  for (const auto& [k, c] : o.comps_) add(k.vertical, k.horizontal, c);
  return *this;
}

VariationalForm& VariationalForm::operator-=(const VariationalForm& o) {
  for (const auto& [k, c] : o.comps_) add(k.vertical, k.horizontal, -c);
  return *this;
}

VariationalForm operator*(const Scalar& s, const VariationalForm& f) {
  VariationalForm out;
  for (const auto& [k, c] : f.comps_) out.add(k.vertical, k.horizontal, s * c);
  return out;
}

VariationalForm horizontal_d(const VariationalForm& w) {
  VariationalForm out;
  for (const auto& [key, coeff] : w.components()) {
    const int k = static_cast<int>(key.vertical.size());
    for (Direction dir : {Direction::Tau, Direction::Sigma}) {
      auto [hsign, h] = wedge_left(dir == Direction::Tau ? Horizontal::Tau : Horizontal::Sigma, key.horizontal);
      if (hsign == 0) continue;
      const Scalar sign((k % 2 == 0 ? 1 : -1) * hsign);
      out.add(key.vertical, h, sign * total_derivative(dir, coeff));
      for (std::size_t j = 0; j < key.vertical.size(); ++j) {
        std::vector<JetVar> v = key.vertical;
        v[j] = dir == Direction::Tau ? xvar(v[j].field, v[j].tau + 1, v[j].sigma)
                                     : JetVar{v[j].kind, v[j].field, v[j].tau, v[j].sigma + 1};
        if (dir == Direction::Tau && key.vertical[j].kind != JetKind::Field)
          throw MathError("D_tau is not defined on momentum jets");
        out.add(std::move(v), h, sign * coeff);
      }
    }
  }
  return out;
}

VariationalForm vertical_d(const VariationalForm& w) {
  VariationalForm out;
  for (const auto& [key, coeff] : w.components()) {
    for (const JetVar& v : coeff.variables()) {
      std::vector<JetVar> vert{v};
      vert.insert(vert.end(), key.vertical.begin(), key.vertical.end());
      out.add(std::move(vert), key.horizontal, partial(coeff, v));
    }
  }
  return out;
}

VariationalForm interior(const Generator& gen, const VariationalForm& w) {
  CharacteristicCache chi(gen);
  VariationalForm out;
  for (const auto& [key, coeff] : w.components()) {
    for (std::size_t j = 0; j < key.vertical.size(); ++j) {
      std::vector<JetVar> rest = key.vertical;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      const Scalar sign(j % 2 == 0 ? 1 : -1);
      out.add(std::move(rest), key.horizontal, sign * (chi(key.vertical[j]) * coeff));
    }
  }
  return out;
}

DiffPoly prolong(const Generator& gen, const DiffPoly& p) {
  CharacteristicCache chi(gen);
  return prolong_with(chi, p);
}

VariationalForm prolong(const Generator& gen, const VariationalForm& w) {
  CharacteristicCache chi(gen);
  VariationalForm out;
  for (const auto& [key, coeff] : w.components()) {
    out.add(key.vertical, key.horizontal, prolong_with(chi, coeff));
    for (std::size_t j = 0; j < key.vertical.size(); ++j) {
      const DiffPoly& moved = chi(key.vertical[j]);
      for (const JetVar& v : moved.variables()) {
        std::vector<JetVar> vert = key.vertical;
        vert[j] = v;
        out.add(std::move(vert), key.horizontal, partial(moved, v) * coeff);
      }
    }
  }
  return out;
}

std::string to_text(const VariationalForm& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : w.components()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_text(coeff) + ")";
    std::vector<std::string> parts;
    for (const auto& v : key.vertical) parts.push_back("delta(" + jet_name(v) + ")");
    if (key.horizontal != Horizontal::One) parts.push_back(horizontal_text(key.horizontal));
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k == 0 ? " " : " ^ ") + parts[k];
  }
  return out;
}

Json to_json(const VariationalForm& w) {
  Json comps = Json::array();
  for (const auto& [key, coeff] : w.components()) {
    Json c;
    Json vert = Json::array();
    for (const auto& v : key.vertical) vert.push_back(to_json(v));
    c["vertical"] = std::move(vert);
    c["horizontal"] = key.horizontal == Horizontal::One ? "1" : horizontal_text(key.horizontal);
    c["coeff"] = to_json(coeff);
    comps.push_back(std::move(c));
  }
  Json j;
  j["op"] = "form";
  j["components"] = std::move(comps);
  return j;
}

VariationalForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components")) throw ParseError("form needs 'components'");
  VariationalForm w;
  for (const auto& c : j.at("components")) {
    std::vector<JetVar> vert;
    for (const auto& v : c.value("vertical", Json::array())) vert.push_back(jet_from_json(v));
    w.add(std::move(vert), horizontal_from_text(c.value("horizontal", std::string("1"))),
          diffpoly_from_json(c.at("coeff")));
  }
  return w;
}

}  // namespace chiralkit::jet
