#include "chiralkit/fock/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "chiralkit/errors.hpp"
#include "chiralkit/fock/fock_space.hpp"

namespace chiralkit::fock {

namespace {

bool all_real(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_real()) return false;
  return true;
}

Vec column(const Matrix& m, const Coords& c) {
  Vec v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (c[k] != 0) v[r] += m(r, k) * Scalar(c[k]);
  return v;
}

Vec combine(const Vec& a, const Vec& b, const Scalar& sb) {
  Vec out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += sb * b[k];
  return out;
}

Rational pairing(const Matrix& form, const Vec& a, const Vec& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!form(i, j).is_zero()) s += a[i] * form(i, j) * b[j];
  return s.re();
}

long l1(const Coords& c) {
  long s = 0;
  for (long x : c) s += std::labs(x);
  return s;
}

// All integer vectors of the given length with |v|₁ ≤ bound, ordered by
// norm and then lexicographically.
std::vector<Coords> integer_ball(std::size_t length, long bound) {
  std::vector<Coords> out;
  Coords cur(length);
  std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
    if (k == length) {
      out.push_back(cur);
      return;
    }
    for (long x = -left; x <= left; ++x) {
      cur[k] = x;
      rec(k + 1, left - std::labs(x));
    }
  };
  rec(0, bound);
  std::stable_sort(out.begin(), out.end(), [](const Coords& a, const Coords& b) { return l1(a) < l1(b); });
  return out;
}

// Ambient vectors and weights, without the conformal weights.
Sector bare_sector(const LatticeModel& m, const Coords& l_coords, const Coords& dual_coords) {
  Sector s;
  s.l_coords = l_coords;
  s.dual_coords = dual_coords;
  s.l = column(m.lattice_basis, l_coords);
  s.dual = column(m.dual_basis, dual_coords);
  const Vec base = combine(b_of(m, s.l), s.dual, Scalar(-1));
  const Vec gl = g_of(m, s.l);
  s.a_plus = combine(base, gl, Scalar(1));
  s.a_minus = combine(base, gl, Scalar(-1));
  return s;
}

bool same_sector_data(const LatticeModel& m, const Sector& s) {
  if (s.l.size() != m.dim() || s.l_coords.size() != m.dim() || s.dual_coords.size() != m.dim()) return false;
  const Sector fresh = bare_sector(m, s.l_coords, s.dual_coords);
  return fresh.l == s.l && fresh.dual == s.dual && fresh.a_plus == s.a_plus && fresh.a_minus == s.a_minus;
}

std::pair<Rational, Rational> exponents(const LatticeModel& m, const Sector& s1, const Sector& s2) {
  const Rational half(1, 2);
  return {-half * pairing(m.g_inverse, s1.a_plus, s2.a_plus), -half * pairing(m.g_inverse, s1.a_minus, s2.a_minus)};
}

Json coords_json(const Coords& c) {
  Json a = Json::array();
  for (long x : c) a.push_back(x);
  return a;
}

}  // namespace

LatticeModel build_model(const Matrix& g, const Matrix& b, const Matrix& lattice_basis) {
  const std::size_t n = g.rows();
  if (!g.is_square() || b.rows() != n || b.cols() != n || lattice_basis.rows() != n || lattice_basis.cols() != n)
    throw DimensionMismatch("model matrices must all be " + std::to_string(n) + "x" + std::to_string(n));
  if (!all_real(g) || !all_real(b) || !all_real(lattice_basis))
    throw MathError("model data must be real");
  if (!g.is_symmetric() || !exactlin::is_positive_definite(g))
    throw NotPositiveDefinite("metric must be symmetric positive definite");
  if (!b.is_antisymmetric()) throw NotAntisymmetric("B-field must be antisymmetric");
  if (lattice_basis.determinant().is_zero()) throw SingularLattice("lattice basis is degenerate");
  LatticeModel m;
  m.g = g;
  m.b = b;
  m.lattice_basis = lattice_basis;
  m.dual_basis = lattice_basis.inverse().transpose();
  m.g_inverse = g.inverse();
  return m;
}

LatticeModel one_dim_model(const Rational& radius_unit) {
  if (sgn(radius_unit) <= 0) throw SingularLattice("radius unit must be positive");
  LatticeModel m = build_model(Matrix{{1}}, Matrix(1, 1), Matrix{{Scalar(radius_unit)}});
  m.radius_unit = radius_unit;
  return m;
}

LatticeModel model_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("model must be a JSON object");
  if (j.contains("radius_unit")) {
    if (j.size() != 1) throw ParseError("radius_unit models take no other keys");
    const Json& u = j.at("radius_unit");
    if (!u.is_string()) throw ParseError("radius_unit must be a rational string");
    return one_dim_model(exactlin::parse_rational(u.get<std::string>()));
  }
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "g" && key != "B" && key != "L") throw ParseError("unknown model key '" + key + "'");
  if (!j.contains("n") || !j.contains("g") || !j.contains("L")) throw ParseError("model needs 'n', 'g' and 'L'");
  if (!j.at("n").is_number_integer() || j.at("n").get<long>() < 1) throw ParseError("'n' must be a positive integer");
  const auto n = j.at("n").get<std::size_t>();
  Matrix g = exactlin::matrix_from_json(j.at("g"));
  Matrix b = j.contains("B") ? exactlin::matrix_from_json(j.at("B")) : Matrix(n, n);
  Matrix l = exactlin::matrix_from_json(j.at("L"));
  if (g.rows() != n) throw DimensionMismatch("'g' does not match 'n'");
  return build_model(g, b, l);
}

Json to_json(const LatticeModel& m) {
  Json j;
  if (m.radius_unit) {
    j["radius_unit"] = exactlin::to_json(Scalar(*m.radius_unit));
    return j;
  }
  j["n"] = m.dim();
  j["g"] = exactlin::to_json(m.g);
  j["B"] = exactlin::to_json(m.b);
  j["L"] = exactlin::to_json(m.lattice_basis);
  return j;
}

Vec b_of(const LatticeModel& m, const Vec& l) { return m.b.transpose().apply(l); }

Vec g_of(const LatticeModel& m, const Vec& l) { return m.g.apply(l); }

Sector make_sector(const LatticeModel& m, const Coords& l_coords, const Coords& dual_coords) {
  if (l_coords.size() != m.dim() || dual_coords.size() != m.dim())
    throw DimensionMismatch("sector coordinates do not match the model");
  Sector s = bare_sector(m, l_coords, dual_coords);
  s.h = lowest_weight(m.g, s.a_plus);
  s.hbar = lowest_weight(m.g, s.a_minus);
  return s;
}

Coords lattice_coords(const Matrix& basis, const Vec& v) {
  if (v.size() != basis.rows()) throw DimensionMismatch("vector does not match the lattice");
  const Vec c = basis.inverse().apply(v);
  Coords out;
  for (const Scalar& x : c) {
    if (!x.is_integer()) throw NotInLattice("vector is not in the lattice");
    out.push_back(x.re().get_num().get_si());
  }
  return out;
}

std::pair<Vec, Vec> spectrum_point(const LatticeModel& m, const Vec& l, const Vec& dual) {
  lattice_coords(m.lattice_basis, l);
  lattice_coords(m.dual_basis, dual);
  const Vec shifted = m.g_inverse.apply(combine(dual, b_of(m, l), Scalar(-1)));
  const Scalar half(Rational(1, 2));
  Vec first = combine(shifted, l, Scalar(-1)), second = combine(shifted, l, Scalar(1));
  for (auto& x : first) x *= half;
  for (auto& x : second) x *= half;
  return {first, second};
}

std::vector<Sector> enumerate_sectors(const LatticeModel& m, int cutoff) {
  const std::size_t n = m.dim();
  std::vector<Sector> out;
  for (const Coords& c : integer_ball(2 * n, std::max(cutoff, 0)))
    out.push_back(make_sector(m, Coords(c.begin(), c.begin() + static_cast<long>(n)),
                              Coords(c.begin() + static_cast<long>(n), c.end())));
  return out;
}

std::pair<Rational, Rational> vertex_exponents(const LatticeModel& m, const Sector& s1, const Sector& s2) {
  if (!same_sector_data(m, s1) || !same_sector_data(m, s2))
    throw ModelMismatch("sector does not belong to this model");
  return exponents(m, s1, s2);
}

LocalityReport ko_locality(const LatticeModel& m, int cutoff) {
  LocalityReport r;
  r.sectors = enumerate_sectors(m, cutoff);
  for (std::size_t a = 0; a < r.sectors.size(); ++a)
    for (std::size_t b = a; b < r.sectors.size(); ++b) {
      auto [hol, antihol] = exponents(m, r.sectors[a], r.sectors[b]);
      const Rational diff = hol - antihol;
      const bool ok = diff.get_den() == 1;
      if (!ok) ++r.violations;
      r.entries.push_back({a, b, hol, antihol, ok});
    }
  return r;
}

LatticeModel t_dual(const LatticeModel& m) {
  if (m.has_b_field()) throw BFieldUnsupported("T-duality is only implemented for B = 0");
  LatticeModel d = build_model(m.g, m.b, m.g_inverse * m.dual_basis);
  if (m.radius_unit) d.radius_unit = Rational(1) / *m.radius_unit;
  return d;
}

bool same_lattice(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) return false;
  const Matrix change = a.inverse() * b;
  if (!change.is_integral()) return false;
  const Scalar det = change.determinant();
  return det == Scalar(1) || det == Scalar(-1);
}

bool is_self_dual(const LatticeModel& m) { return same_lattice(m.dual_basis, m.g * m.lattice_basis); }

std::vector<Sector> chiral_sectors(const LatticeModel& m, int cutoff) {
  std::vector<Sector> out;
  for (const Coords& c : integer_ball(m.dim(), std::max(cutoff, 0))) {
    const Vec l = column(m.lattice_basis, c);
    const Vec dual = combine(b_of(m, l), g_of(m, l), Scalar(-1));
    Coords dc;
    try {
      dc = lattice_coords(m.dual_basis, dual);
    } catch (const NotInLattice&) {
      continue;
    }
    out.push_back(make_sector(m, c, dc));
  }
  return out;
}

std::pair<Rational, Rational> one_dim_labels(const Sector& s) {
  if (s.a_plus.size() != 1) throw DimensionMismatch("labels are defined for 1-d models");
  const Rational half(1, 2);
  return {half * s.a_plus[0].re(), half * s.a_minus[0].re()};
}

Json to_json(const Sector& s) {
  Json j;
  j["l"] = coords_json(s.l_coords);
  j["lstar"] = coords_json(s.dual_coords);
  j["l_vec"] = exactlin::to_json(s.l);
  j["lstar_vec"] = exactlin::to_json(s.dual);
  j["a_plus"] = exactlin::to_json(s.a_plus);
  j["a_minus"] = exactlin::to_json(s.a_minus);
  j["h"] = exactlin::to_json(Scalar(s.h));
  j["hbar"] = exactlin::to_json(Scalar(s.hbar));
  return j;
}

}  // namespace chiralkit::fock
