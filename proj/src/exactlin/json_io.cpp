#include "chiralkit/exactlin/json_io.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::exactlin {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string("bad ") + what);
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string or an integer");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

std::vector<Scalar> vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  std::vector<Scalar> v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json to_json(const AltTensor& t) {
  Json j;
  j["degree"] = t.degree();
  j["dim"] = t.dim();
  if (t.value_dim() != 1) j["value_dim"] = t.value_dim();
  Json entries = Json::array();
  for (const auto& [idx, val] : t.entries()) {
    Json e;
    Json one_based = Json::array();
    for (auto i : idx) one_based.push_back(i + 1);
    e["idx"] = std::move(one_based);
    e["val"] = t.value_dim() == 1 ? to_json(val[0]) : to_json(val);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

AltTensor tensor_from_json(const Json& j) {
  const std::size_t degree = as_size(field(j, "degree"), "degree");
  const std::size_t dim = as_size(field(j, "dim"), "dim");
  const std::size_t value_dim = j.contains("value_dim") ? as_size(j.at("value_dim"), "value_dim") : 1;
  AltTensor t(degree, dim, value_dim);
  const Json& entries = j.contains("entries") ? j.at("entries") : Json::array();
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  for (const auto& e : entries) {
    Index idx;
    for (const auto& i : field(e, "idx")) {
      std::size_t k = as_size(i, "index");
      if (k == 0 || k > dim) throw ParseError("tensor index out of range (indices are 1-based)");
      idx.push_back(k - 1);
    }
    if (idx.size() != degree) throw ParseError("tensor index has the wrong length");
    const Json& val = field(e, "val");
    std::vector<Scalar> v = val.is_array() ? vector_from_json(val) : std::vector<Scalar>{scalar_from_json(val)};
    if (v.size() != value_dim) throw ParseError("tensor value has the wrong dimension");
    Index probe = idx;
    if (sort_with_sign(probe) == 0) throw ParseError("tensor index repeats");
    t.set(std::move(idx), std::move(v));
  }
  return t;
}

}  // namespace chiralkit::exactlin
