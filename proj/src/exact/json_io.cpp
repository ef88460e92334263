#include "exact/json_io.hpp"

namespace twistlab::exact {

Json to_json(const Scalar& z) { return z.to_string(); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
  return a;
}

Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis"] = to_json(s.basis());
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  fail(ErrorKind::InvalidArgument, "expected a Gaussian rational string");
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "expected a JSON array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "expected a JSON array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  size_t cols = rows.empty() ? 0 : rows.front().size();
  return Matrix::from_rows(rows, cols);
}

}  // namespace twistlab::exact
