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

#include "qtcluster/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qtcluster {

namespace {

nlohmann::json exp_json(const ExpVector& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [v, x] : e) out.push_back({v.node, v.level, x});
  return out;
}

}  // namespace

std::string render_text(const TorusElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    for (int p = c.low(); p <= c.high(); ++p) {
      std::int64_t k = c.coeff(p);
      if (k == 0) continue;
      std::vector<std::string> parts;
      if (std::llabs(k) != 1) parts.push_back(std::to_string(std::llabs(k)));
      if (p != 0) parts.push_back("t^{" + std::to_string(p) + "/2}");
      if (!e.empty()) parts.push_back(monomial_string(e));
      if (parts.empty()) parts.push_back("1");
      if (!out.empty()) out += k < 0 ? " - " : " + ";
      else if (k < 0) out += "-";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i];
      }
    }
  }
  return out;
}

nlohmann::json render_json(const TorusElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : a.terms()) {
    for (int p = c.low(); p <= c.high(); ++p) {
      if (c.coeff(p) == 0) continue;
      terms.push_back({{"coeff", c.coeff(p)}, {"t_num", p}, {"exp", exp_json(e)}});
    }
  }
  return {{"terms", terms}};
}

nlohmann::json render_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coeff", c}, {"exp", exp_json(e)}});
  }
  return {{"terms", terms}};
}

nlohmann::json render_json(const WeightExpr& w) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [weight, c] : w.terms()) {
    terms.push_back({{"coeff", c}, {"twice_weight", weight.twice}});
  }
  return {{"terms", terms}};
}

std::string render_matrix(const IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      width = std::max(width, std::to_string(m(r, c)).size());
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string s = std::to_string(m(r, c));
      os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json matrix_json(const IntMatrix& m) { return m.to_rows(); }

nlohmann::json vertex_json(const Vertex& v) { return {v.node, v.level}; }

nlohmann::json vertices_json(const std::vector<Vertex>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Vertex& v : vs) out.push_back(vertex_json(v));
  return out;
}

}  // namespace qtcluster
