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

#include "qtcluster/repchar.hpp"

#include <algorithm>
#include <map>

#include "qtcluster/errors.hpp"
#include "qtcluster/render.hpp"

namespace qtcluster {

MutationSequenceSpec mutation_sequence(const CartanData& cartan, int i, int r) {
  cartan.check_node(i);
  if (!cartan.contains(i, r)) {
    throw DomainError("vertex " + to_string(Vertex{i, r}) +
                      " is not in the quiver component");
  }
  MutationSequenceSpec spec;
  spec.origin = {i, r};
  spec.h_prime = (cartan.dual_coxeter() + 1) / 2;

  spec.column_order.push_back(i);
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 1; j <= cartan.rank(); ++j) {
      if (j == i) continue;
      bool same = cartan.parity(j) == cartan.parity(i);
      if (same == (pass == 0)) spec.column_order.push_back(j);
    }
  }

  const int top = r + 2 * spec.h_prime;
  for (int k = spec.h_prime; k >= 2; --k) {
    for (int j : spec.column_order) {
      int eps = cartan.parity(j) == cartan.parity(i) ? 0 : 1;
      for (int step = 0; step < k; ++step) {
        spec.sequence.push_back({j, top - eps - 2 * step});
      }
    }
  }
  spec.sequence.push_back({i, top});
  return spec;
}

Window default_window(const CartanData& cartan, int i, int r) {
  auto spec = mutation_sequence(cartan, i, r);
  return {r - 1, r + 2 * spec.h_prime + 2};
}

QtCharacter fundamental_qt_character(const CartanData& cartan, int i, int r,
                                     std::optional<Window> window,
                                     SeedCache* cache) {
  MutationSequenceSpec spec = mutation_sequence(cartan, i, r);
  Window w = window.value_or(default_window(cartan, i, r));
  QuiverSlice slice = build_slice(cartan, w);
  for (const Vertex& v : spec.sequence) {
    if (!slice.is_exchangeable(v)) {
      throw DomainError("window " + to_string(w) + " is too small: " +
                        to_string(v) + " is not exchangeable");
    }
  }
  QuantumSeed seed = mutate_along(initial_seed(slice), spec.sequence, cache);
  return {spec.origin, spec.read_vertex(), w, seed.var(spec.read_vertex())};
}

namespace {

struct FmEntry {
  int depth = 0;
  std::int64_t mult = 0;
  std::map<int, std::int64_t> colored;
};

// Monomials of an sl2 string character relative to its highest monomial:
// (A^{-1} exponent, number of A^{-1} factors).
using Sl2Term = std::pair<ExpVector, int>;

std::vector<Sl2Term> sl2_character(const CartanData& cartan, int j,
                                   const ExpVector& m) {
  std::map<int, std::int64_t> count;
  for (const auto& [v, x] : m) {
    if (v.node == j && x > 0) count[v.level] += x;
  }
  std::vector<Sl2Term> out{{ExpVector{}, 0}};
  while (!count.empty()) {
    const int a = count.begin()->first;
    int len = 0;
    for (int s = a;; s += 2) {
      auto it = count.find(s);
      if (it == count.end()) break;
      if (--it->second == 0) count.erase(it);
      ++len;
    }
    std::vector<Sl2Term> string_terms{{ExpVector{}, 0}};
    ExpVector acc;
    for (int l = 0; l < len; ++l) {
      int centre = a + 2 * (len - 1) - 2 * l + 1;
      acc = acc - a_monomial(cartan, j, centre + 2);
      string_terms.push_back({acc, l + 1});
    }
    std::vector<Sl2Term> next;
    for (const auto& [e1, d1] : out) {
      for (const auto& [e2, d2] : string_terms) next.push_back({e1 + e2, d1 + d2});
    }
    out = std::move(next);
  }
  return out;
}

bool j_dominant(const ExpVector& m, int j) {
  for (const auto& [v, x] : m) {
    if (v.node == j && x < 0) return false;
  }
  return true;
}

}  // namespace

LaurentPolynomial classical_fm_qchar(const CartanData& cartan, int i, int r,
                                     std::size_t monomial_budget) {
  if (!cartan.contains(i, r)) {
    throw DomainError("vertex " + to_string(Vertex{i, r}) +
                      " is not in the quiver component");
  }
  std::map<ExpVector, FmEntry, MonomialLess> monos;
  std::vector<std::vector<ExpVector>> by_depth(1);
  const ExpVector top = ExpVector::unit({i, r});
  monos[top] = {0, 1, {}};
  by_depth[0].push_back(top);

  for (std::size_t d = 0; d < by_depth.size(); ++d) {
    for (std::size_t idx = 0; idx < by_depth[d].size(); ++idx) {
      const ExpVector m = by_depth[d][idx];
      FmEntry& info = monos.at(m);
      if (d > 0) {
        for (const auto& [j, c] : info.colored) info.mult = std::max(info.mult, c);
      }
      for (int j = 1; j <= cartan.rank(); ++j) {
        std::int64_t have = monos.at(m).colored[j];
        std::int64_t mult = monos.at(m).mult;
        if (have > mult) {
          throw InvariantError("Frenkel-Mukhin algorithm fails at " +
                               monomial_string(m, "Y"));
        }
        if (!j_dominant(m, j)) {
          if (have != mult) {
            throw InvariantError("Frenkel-Mukhin algorithm fails at " +
                                 monomial_string(m, "Y"));
          }
          continue;
        }
        std::int64_t k = mult - have;
        if (k == 0) continue;
        for (const auto& [a_exp, dd] : sl2_character(cartan, j, m)) {
          ExpVector target = m + a_exp;
          auto [it, fresh] = monos.try_emplace(target);
          if (fresh) {
            if (monos.size() > monomial_budget) {
              throw InvariantError("Frenkel-Mukhin monomial budget exhausted");
            }
            it->second.depth = static_cast<int>(d) + dd;
            if (by_depth.size() <= static_cast<std::size_t>(it->second.depth)) {
              by_depth.resize(static_cast<std::size_t>(it->second.depth) + 1);
            }
            by_depth[static_cast<std::size_t>(it->second.depth)].push_back(target);
          } else if (it->second.depth != static_cast<int>(d) + dd) {
            throw InvariantError("inconsistent depth for " +
                                 monomial_string(target, "Y"));
          }
          it->second.colored[j] += k;
        }
      }
    }
  }

  LaurentPolynomial out;
  for (const auto& [m, info] : monos) out.add_term(m, info.mult);
  return out;
}

PrefundamentalCharacter prefundamental_qt_character(const CartanData& cartan,
                                                    int i, int r, int depth) {
  cartan.check_node(i);
  if (!cartan.contains(i, r)) {
    throw DomainError("vertex " + to_string(Vertex{i, r}) +
                      " is not in the quiver component");
  }
  if (depth < 0) throw DomainError("truncation depth must be non-negative");
  if (cartan.type() != DynkinType::A || cartan.rank() != 1) {
    throw DomainError("prefundamental character chi is only available for A1, not " +
                      cartan.label());
  }
  PrefundamentalCharacter out;
  out.monomial = TorusElement::monomial(ExpVector::unit({i, r}));
  out.psi_weight = WeightExpr::fundamental(cartan.rank(), i, r);
  out.chi = WeightExpr(cartan.rank());
  for (int k = 0; k <= depth; ++k) {
    out.chi.add_term(WeightExpr::fundamental(cartan.rank(), 1, -4 * k), 1);
  }
  return out;
}

bool BaxterReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.pass; });
}

BaxterReport baxter_check(int r, BaxterVariant variant) {
  const CartanData a1 = build_cartan(DynkinType::A, 1);
  const QuantumTorus torus(a1);
  BaxterReport report;
  report.r = r;

  QtCharacter chi = fundamental_qt_character(a1, 1, 2 * r - 2);
  auto z = [](int level) {
    return TorusElement::monomial(ExpVector::unit({1, level}));
  };
  int low_power = variant == BaxterVariant::Standard ? -1 : 1;
  TorusElement lhs = torus.multiply(chi.value, z(2 * r));
  TorusElement rhs_low = z(2 * r - 2).scaled(TCoeff::monomial(1, low_power));
  TorusElement rhs_high = z(2 * r + 2).scaled(TCoeff::monomial(1, -low_power));
  TorusElement rhs = rhs_low + rhs_high;
  report.checks.push_back({"torus identity", lhs == rhs, render_text(lhs), render_text(rhs)});

  auto weight = [&](int half_units) {
    return WeightExpr::single(WeightExpr::fundamental(1, 1, half_units));
  };
  WeightExpr lhs_w = weight_character(a1, lhs) * weight(2 * r);
  WeightExpr rhs_w = weight_character(a1, rhs_low) * weight(2) * weight(2 * r - 2) +
                     weight_character(a1, rhs_high) * weight(-2) * weight(2 * r + 2);
  report.checks.push_back(
      {"weight bookkeeping", lhs_w == rhs_w, to_string(lhs_w), to_string(rhs_w)});

  QuiverSlice slice = build_slice(a1, chi.window);
  ClassicalCluster classical = classical_mutate_along(slice, {{1, 2 * r}});
  LaurentPolynomial t1 = evaluate_t1(lhs);
  LaurentPolynomial exchange =
      classical.at({1, 2 * r}) * LaurentPolynomial::monomial(ExpVector::unit({1, 2 * r}));
  report.checks.push_back({"t=1 classical exchange", t1 == exchange,
                           to_string(t1), to_string(exchange)});
  return report;
}

bool DrinfeldReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.pass; });
}

DrinfeldReport drinfeld_double_check(int q_sign) {
  if (q_sign != 1 && q_sign != -1) throw DomainError("q_sign must be +1 or -1");
  const CartanData a1 = build_cartan(DynkinType::A, 1);
  const QuantumTorus torus(a1);
  DrinfeldReport report;
  report.q_sign = q_sign;

  const TorusElement e = fundamental_qt_character(a1, 1, -2).value;
  auto z = [](int level) {
    return TorusElement::monomial(ExpVector::unit({1, level}));
  };
  const TorusElement f = z(0), k = z(-2), kp = z(2);
  auto v = [](int power) { return TCoeff::monomial(1, power); };
  // q^2 = t regardless of the sign of q.
  const TCoeff q2 = v(2), qm2 = v(-2);
  const TCoeff q_minus_qinv = TCoeff::monomial(q_sign, 1) - TCoeff::monomial(q_sign, -1);
  auto mul = [&](const TorusElement& a, const TorusElement& b) {
    return torus.multiply(a, b);
  };
  auto add = [&](std::string name, const TorusElement& lhs, const TorusElement& rhs) {
    report.checks.push_back({std::move(name), lhs == rhs, render_text(lhs), render_text(rhs)});
  };

  add("KE = q^2 EK", mul(k, e), mul(e, k).scaled(q2));
  add("K'E = q^-2 EK'", mul(kp, e), mul(e, kp).scaled(qm2));
  add("KF = q^-2 FK", mul(k, f), mul(f, k).scaled(qm2));
  add("K'F = q^2 FK'", mul(kp, f), mul(f, kp).scaled(q2));
  add("KK' = K'K", mul(k, kp), mul(kp, k));
  add("[E,F] = (q - q^-1)(K - K')", mul(e, f) - mul(f, e), (k - kp).scaled(q_minus_qinv));
  add("C = EF - t^{-1/2}K - t^{1/2}K' = 0",
      mul(e, f) - k.scaled(v(-1)) - kp.scaled(v(1)), TorusElement{});

  TorusElement reference = mul(e, f) - k.scaled(v(1)) - kp.scaled(v(1));
  report.reference_casimir = {"C = EF - t^{1/2}K - t^{1/2}K' = 0", reference.is_zero(),
                            render_text(reference), "0"};
  return report;
}

ThinnessReport thinness_flatten_check(const CartanData& cartan, int i, int r) {
  if (cartan.type() != DynkinType::A) {
    throw DomainError("thinness check applies to type A only, not " + cartan.label());
  }
  ThinnessReport report{fundamental_qt_character(cartan, i, r), true, ""};
  for (const auto& [e, c] : report.character.value.terms()) {
    if (!c.is_one()) {
      report.pass = false;
      report.detail = "coefficient " + to_string(c) + " at " + monomial_string(e);
      break;
    }
  }
  return report;
}

}  // namespace qtcluster
