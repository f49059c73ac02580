// Copyright 2026 The qtcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtcluster/int_matrix.hpp"
#include "qtcluster/laurent.hpp"
#include "qtcluster/qtorus.hpp"
#include "qtcluster/vertex.hpp"

namespace qtcluster {

/// One term per (monomial, power of t^{1/2}) pair, e.g.
/// "t^{-1/2} z[1,-2] + 2 t^{1/2} z[1,2] z[1,0]^-1". Zero renders as "0".
std::string render_text(const TorusElement& a);
/// {"terms":[{"coeff":c,"t_num":k,"exp":[[i,r,e],...]},...]}
nlohmann::json render_json(const TorusElement& a);
nlohmann::json render_json(const LaurentPolynomial& p);
nlohmann::json render_json(const WeightExpr& w);

/// Right-aligned integer matrix, one row per line.
std::string render_matrix(const IntMatrix& m);
nlohmann::json matrix_json(const IntMatrix& m);

nlohmann::json vertex_json(const Vertex& v);
nlohmann::json vertices_json(const std::vector<Vertex>& vs);

}  // namespace qtcluster
