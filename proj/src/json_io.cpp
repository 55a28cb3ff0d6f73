#include "crosslab/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace crosslab::io {

using nlohmann::json;

namespace {

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected complex number as [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to(const Complex& z) { return json::array({z.real(), z.imag()}); }

void check_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ParseError(std::string(what) + ": entries must be finite");
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      data.push_back(complex_to(m(i, j)));
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw ParseError("matrix: expected {rows, cols, data}");
  }
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0 || !data.is_array() ||
      static_cast<Index>(data.size()) != rows * cols) {
    throw ParseError("matrix: data length does not match rows*cols");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index k = 0; k < cols; ++k) {
      m(i, k) = complex_from(data[static_cast<size_t>(i * cols + k)]);
    }
  }
  check_finite(m, "matrix");
  return m;
}

json vector_to_json(const Vector& v) {
  json data = json::array();
  for (Index i = 0; i < v.size(); ++i) data.push_back(complex_to(v(i)));
  return data;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector: expected array of [re, im]");
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = complex_from(j[static_cast<size_t>(i)]);
  if (!v.allFinite()) throw ParseError("vector: entries must be finite");
  return v;
}

json involution_to_json(const Involution& s) {
  return json{{"kind", "parts"},
              {"j", matrix_to_json(s.j().matrix())},
              {"delta", matrix_to_json(s.delta())}};
}

Involution involution_from_json(const json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError("involution: expected {kind, ...}");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "parts") {
    return Involution::from_parts(AntilinearOp(matrix_from_json(j.at("j"))),
                                  matrix_from_json(j.at("delta")), tol);
  }
  if (kind == "matrix") {
    return Involution::from_matrix(AntilinearOp(matrix_from_json(j.at("s"))), tol);
  }
  throw ParseError("involution: unknown kind '" + kind + "'");
}

json qsystem_to_json(const QSystem& q) {
  return json{{"dim", q.dim}, {"m", matrix_to_json(q.m)}, {"iota", vector_to_json(q.iota)}};
}

QSystem qsystem_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("m") || !j.contains("iota")) {
    throw ParseError("qsystem: expected {dim, m, iota}");
  }
  QSystem q;
  q.dim = j.at("dim").get<Index>();
  q.m = matrix_from_json(j.at("m"));
  q.iota = vector_from_json(j.at("iota"));
  if (q.m.rows() != q.dim || q.m.cols() != q.dim * q.dim || q.iota.size() != q.dim) {
    throw ParseError("qsystem: m must be N x N^2 and iota length N");
  }
  return q;
}

json group_to_json(const FiniteGroup& g) {
  return json{{"order", g.order}, {"cayley", g.cayley}};
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("cayley")) {
    throw ParseError("group: expected {order, cayley}");
  }
  auto table = j.at("cayley").get<std::vector<std::vector<int>>>();
  if (static_cast<Index>(table.size()) != j.at("order").get<Index>()) {
    throw ParseError("group: cayley size does not match order");
  }
  try {
    return FiniteGroup::from_table(std::move(table));
  } catch (const InvalidState& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
}

json multimatrix_to_json(const MultiMatrixAlgebra& a) {
  json rho = json::array();
  for (const Matrix& r : a.rho) rho.push_back(matrix_to_json(r));
  return json{{"blocks", a.blocks}, {"rho", std::move(rho)}};
}

MultiMatrixAlgebra multimatrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.contains("rho")) {
    throw ParseError("multimatrix: expected {blocks, rho}");
  }
  MultiMatrixAlgebra a;
  a.blocks = j.at("blocks").get<std::vector<Index>>();
  for (const auto& r : j.at("rho")) a.rho.push_back(matrix_from_json(r));
  return a;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("parse failure in '" + path + "': " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace crosslab::io
