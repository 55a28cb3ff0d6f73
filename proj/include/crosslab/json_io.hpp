// JSON formats shared by the CLI and file-based interop.
//
//   Matrix      {"rows": n, "cols": m, "data": [[re, im], ...]}  (row-major)
//   Involution  {"kind": "parts", "j": Matrix, "delta": Matrix}
//               {"kind": "matrix", "s": Matrix}
//   QSystem     {"dim": N, "m": Matrix, "iota": [[re, im], ...]}
//   Group       {"order": n, "cayley": [[...]]}
//   MultiMatrix {"blocks": [n1, ...], "rho": [Matrix, ...]}

#pragma once

#include "crosslab/modular.hpp"
#include "crosslab/qsystem.hpp"
#include "crosslab/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace crosslab::io {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json involution_to_json(const Involution& s);
Involution involution_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json qsystem_to_json(const QSystem& q);
QSystem qsystem_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json multimatrix_to_json(const MultiMatrixAlgebra& a);
MultiMatrixAlgebra multimatrix_from_json(const nlohmann::json& j);

// Whole-file helpers; throw ParseError with a diagnostic on failure.
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace crosslab::io
