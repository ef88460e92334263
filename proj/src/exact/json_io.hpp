#pragma once

#include "exact/linalg.hpp"

#include <json.hpp>

namespace twistlab {

using Json = nlohmann::ordered_json;

namespace exact {

Json to_json(const Scalar& z);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
/// {"ambient_dim", "dim", "basis"}
Json to_json(const Subspace& s);

Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

}  // namespace exact
}  // namespace twistlab
