#pragma once

#include <json.hpp>

#include "chiralkit/exactlin/alt_tensor.hpp"
#include "chiralkit/exactlin/matrix.hpp"
#include "chiralkit/exactlin/scalar.hpp"

namespace chiralkit::exactlin {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
/// Accepts "p/q", "p/q+r/s i" or a JSON integer.
Scalar scalar_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const std::vector<Scalar>& v);
std::vector<Scalar> vector_from_json(const Json& j);

/// {"degree":k,"dim":n,"entries":[{"idx":[1,2],"val":"1/2"}]} with 1-based
/// indices; vector-valued tensors add "value_dim" and use arrays for "val".
Json to_json(const AltTensor& t);
AltTensor tensor_from_json(const Json& j);

}  // namespace chiralkit::exactlin
