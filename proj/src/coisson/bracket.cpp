#include "chiralkit/coisson/bracket.hpp"

#include <array>

#include "chiralkit/errors.hpp"
#include "chiralkit/exactlin/alt_tensor.hpp"
#include "chiralkit/jet/lagrangian.hpp"

namespace chiralkit::coisson {

using jet::Direction;
using jet::JetKind;
using jet::total_derivative;

namespace {

Scalar binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(Rational(r));
}

DeltaExpansion shift_first(const DeltaExpansion& e, int times) {
  DeltaExpansion out;
  for (const auto& [k, c] : e.coefficients()) out.add(k + times, c);
  return out;
}

// ∂_σ′ of c(σ′)∂_σ^kδ(σ−σ′) is c′∂_σ^kδ − c∂_σ^{k+1}δ.
DeltaExpansion derive_second(const DeltaExpansion& e, int times) {
  DeltaExpansion cur = e;
  for (int t = 0; t < times; ++t) {
    DeltaExpansion next;
    for (const auto& [k, c] : cur.coefficients()) {
      next.add(k, total_derivative(Direction::Sigma, c));
      next.add(k + 1, -c);
    }
    cur = std::move(next);
  }
  return cur;
}

// f(σ)∂_σ^kδ = Σ_j C(k,j)(−1)^j f^{(j)}(σ′)∂_σ^{k−j}δ.
DeltaExpansion transport(const DiffPoly& f, const DeltaExpansion& e) {
  DeltaExpansion out;
  int top = 0;
  for (const auto& [k, c] : e.coefficients()) top = std::max(top, k);
  std::vector<DiffPoly> derivs{f};
  for (int j = 1; j <= top; ++j) derivs.push_back(total_derivative(Direction::Sigma, derivs.back()));
  for (const auto& [k, c] : e.coefficients())
    for (int j = 0; j <= k; ++j) {
      Scalar coef = binomial(k, j);
      if (j % 2 == 1) coef = -coef;
      out.add(k - j, coef * (derivs[static_cast<std::size_t>(j)] * c));
    }
  return out;
}

DeltaExpansion times(const DeltaExpansion& e, const DiffPoly& f) {
  DeltaExpansion out;
  for (const auto& [k, c] : e.coefficients()) out.add(k, c * f);
  return out;
}

std::size_t twist_key(std::size_t n, exactlin::Index idx) { return (idx[0] * n + idx[1]) * n + idx[2]; }

}  // namespace

LocalDensity::LocalDensity(DiffPoly p) : p_(std::move(p)) {
  for (const JetVar& v : p_.variables())
    if (v.kind == JetKind::Field && v.tau != 0)
      throw MathError("local density contains a time derivative (" + jet::jet_name(v) + ")");
}

DiffPoly DeltaExpansion::coefficient(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? DiffPoly() : it->second;
}

void DeltaExpansion::add(int k, const DiffPoly& c) {
  if (c.is_zero()) return;
  DiffPoly& slot = c_[k];
  slot += c;
  if (slot.is_zero()) c_.erase(k);
}

DeltaExpansion& DeltaExpansion::operator+=(const DeltaExpansion& o) {
  for (const auto& [k, c] : o.c_) add(k, c);
  return *this;
}

std::string to_text(const DeltaExpansion& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : e.coefficients()) {
    if (!out.empty()) out += " + ";
    out += "(" + jet::to_text(c) + ")*";
    out += k == 0 ? "delta" : "ds^" + std::to_string(k) + ".delta";
  }
  return out;
}

Json to_json(const DeltaExpansion& e) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.coefficients()) {
    Json t;
    t["ds_order"] = k;
    t["coeff"] = jet::to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["op"] = "delta_expansion";
  j["terms"] = std::move(terms);
  return j;
}

DeltaExpansion delta_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw ParseError("delta expansion needs 'terms'");
  DeltaExpansion e;
  for (const auto& t : j.at("terms")) e.add(t.at("ds_order").get<int>(), jet::diffpoly_from_json(t.at("coeff")));
  return e;
}

BracketTable::BracketTable(std::size_t fields, Scalar sign) : n_(fields), sign_(std::move(sign)) {
  if (sign_.is_zero()) throw MathError("bracket scale must be nonzero");
}

void BracketTable::set_twist(std::size_t i, std::size_t j, std::size_t k, const DiffPoly& coeff) {
  if (i >= n_ || j >= n_ || k >= n_) throw DimensionMismatch("twist index out of range");
  for (const JetVar& v : coeff.variables())
    if (v.kind != JetKind::Field || v.order() != 0)
      throw MathError("twist coefficients must be polynomials in the fields");
  exactlin::Index idx{i, j, k};
  int s = exactlin::sort_with_sign(idx);
  if (s == 0) {
    if (!coeff.is_zero()) throw NotAntisymmetric("twist must vanish on repeated indices");
    return;
  }
  DiffPoly c = s > 0 ? coeff : -coeff;
  if (c.is_zero())
    twist_.erase(twist_key(n_, idx));
  else
    twist_[twist_key(n_, idx)] = std::move(c);
}

DiffPoly BracketTable::twist(std::size_t i, std::size_t j, std::size_t k) const {
  exactlin::Index idx{i, j, k};
  int s = exactlin::sort_with_sign(idx);
  if (s == 0) return {};
  auto it = twist_.find(twist_key(n_, idx));
  if (it == twist_.end()) return {};
  return s > 0 ? it->second : -it->second;
}

DeltaExpansion BracketTable::generator_bracket(const JetVar& a, const JetVar& b) const {
  DeltaExpansion e;
  const bool ap = a.kind == JetKind::Momentum, bp = b.kind == JetKind::Momentum;
  if (ap && !bp) {
    if (a.field == b.field) e.add(0, DiffPoly(sign_));
  } else if (!ap && bp) {
    if (a.field == b.field) e.add(0, DiffPoly(-sign_));
  } else if (ap && bp && twisted()) {
    DiffPoly c;
    for (std::size_t k = 0; k < n_; ++k) {
      DiffPoly h = twist(static_cast<std::size_t>(a.field), static_cast<std::size_t>(b.field), k);
      if (!h.is_zero()) c += h * DiffPoly(jet::xvar(static_cast<int>(k), 0, 1));
    }
    e.add(0, c);
  }
  return e;
}

DeltaExpansion density_bracket(const LocalDensity& a, const LocalDensity& b, const BracketTable& t) {
  DeltaExpansion out;
  const auto avars = a.poly().variables();
  const auto bvars = b.poly().variables();
  std::vector<DiffPoly> bparts;
  for (const JetVar& vb : bvars) bparts.push_back(jet::partial(b.poly(), vb));
  for (const JetVar& va : avars) {
    const DiffPoly da = jet::partial(a.poly(), va);
    for (std::size_t kb = 0; kb < bvars.size(); ++kb) {
      const JetVar& vb = bvars[kb];
      JetVar ga = va, gb = vb;
      ga.sigma = 0;
      gb.sigma = 0;
      DeltaExpansion e = t.generator_bracket(ga, gb);
      if (e.is_zero()) continue;
      e = derive_second(shift_first(e, va.sigma), vb.sigma);
      out += transport(da, times(e, bparts[kb]));
    }
  }
  return out;
}

DiffPoly hamiltonian_flow(const LocalDensity& h, const LocalDensity& a, const BracketTable& t) {
  return density_bracket(h, a, t).coefficient(0);
}

Identification::Identification(Matrix g, Matrix b) : g_(std::move(g)), b_(std::move(b)) {
  if (!g_.is_square() || !b_.is_square() || b_.rows() != g_.rows())
    throw DimensionMismatch("metric and B-field shapes differ");
  ginv_ = g_.inverse();
}

Identification Identification::standard(std::size_t n) { return Identification(Matrix::identity(n), Matrix(n, n)); }

LocalDensity Identification::to_canonical(const DiffPoly& p) const {
  const std::size_t n = fields();
  // ∂_τx^i = −i g^{ij}(p_j − b_kj ∂_σx^k)
  std::vector<DiffPoly> velocity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (ginv_(i, j).is_zero()) continue;
      DiffPoly pj(jet::pvar(static_cast<int>(j)));
      for (std::size_t k = 0; k < n; ++k)
        if (!b_(k, j).is_zero()) pj -= b_(k, j) * DiffPoly(jet::xvar(static_cast<int>(k), 0, 1));
      velocity[i] += (Scalar(0, -1) * ginv_(i, j)) * pj;
    }
  DiffPoly reduced = jet::reduce_free_wave(p);
  return LocalDensity(jet::substitute(reduced, [&](const JetVar& v) -> std::optional<DiffPoly> {
    if (v.kind != JetKind::Field || v.tau == 0) return std::nullopt;
    if (v.field >= static_cast<int>(n)) throw DimensionMismatch("density uses more fields than the model");
    return total_derivative(Direction::Sigma, velocity[static_cast<std::size_t>(v.field)], v.sigma);
  }));
}

DiffPoly Identification::from_canonical(const LocalDensity& d) const {
  const std::size_t n = fields();
  std::vector<DiffPoly> momentum(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const int fi = static_cast<int>(i);
      if (!g_(i, j).is_zero()) momentum[j] += (Scalar(0, 1) * g_(i, j)) * DiffPoly(jet::xvar(fi, 1, 0));
      if (!b_(i, j).is_zero()) momentum[j] += b_(i, j) * DiffPoly(jet::xvar(fi, 0, 1));
    }
  return jet::substitute(d.poly(), [&](const JetVar& v) -> std::optional<DiffPoly> {
    if (v.kind != JetKind::Momentum) return std::nullopt;
    if (v.field >= static_cast<int>(n)) throw DimensionMismatch("density uses more momenta than the model");
    return total_derivative(Direction::Sigma, momentum[static_cast<std::size_t>(v.field)], v.sigma);
  });
}

}  // namespace chiralkit::coisson
