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

#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtcluster/acceptance.hpp"
#include "qtcluster/compat.hpp"
#include "qtcluster/errors.hpp"
#include "qtcluster/qcluster.hpp"
#include "qtcluster/render.hpp"
#include "qtcluster/repchar.hpp"

using namespace qtcluster;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  std::string window;
  int n = 0;
  std::string path;
  std::string vertex;
  int i = 1;
  int r = 0;
  int degree = 10;
  int depth = 3;
  int q_sign = -1;
  bool swap = false;
  bool json = false;
  bool t1 = false;
  bool quick = false;
  std::string golden_dir = default_golden_dir();
  std::uint64_t seed = AcceptanceOptions{}.seed;
  unsigned parallel = 1;
};

CartanData cartan_of(const RunConfig& cfg) {
  return build_cartan(parse_dynkin_type(cfg.type), cfg.rank);
}

Window window_of(const RunConfig& cfg, const Window& fallback) {
  if (!cfg.window.empty() && cfg.n > 0) throw DomainError("give either --window or --N");
  if (!cfg.window.empty()) return parse_window(cfg.window);
  if (cfg.n > 0) return gamma_window(cfg.n);
  return fallback;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json with_schema(json j) {
  j["schema"] = 1;
  return j;
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// Y-key (i, s) is Y_{i,q^{s+1}}.
std::string y_monomial(const ExpVector& e) {
  if (e.empty()) return "1";
  std::string out;
  for (const auto& [v, x] : e) {
    if (!out.empty()) out += ' ';
    out += "Y[" + std::to_string(v.node) + ",q^" + std::to_string(v.level + 1) + "]";
    if (x != 1) out += "^" + std::to_string(x);
  }
  return out;
}

std::string y_polynomial(const LaurentPolynomial& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + " ";
    out += y_monomial(e);
  }
  return out.empty() ? "0" : out;
}

json relation_json(const RelationCheck& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

int cmd_cartan(const RunConfig& cfg) {
  if (cfg.degree < 0) throw DomainError("--degree must be non-negative");
  CartanData c = cartan_of(cfg);
  json series = json::array();
  for (int i = 1; i <= c.rank(); ++i) {
    for (int j = 1; j <= c.rank(); ++j) {
      std::vector<std::int64_t> coeffs;
      for (int m = 0; m <= cfg.degree; ++m) coeffs.push_back(c.ctilde(i, j, m));
      series.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  }
  if (cfg.json) {
    emit(with_schema({{"type", c.label()},
                      {"cartan", matrix_json(c.matrix())},
                      {"dual_coxeter", c.dual_coxeter()},
                      {"series", series}}));
    return kExitPass;
  }
  std::cout << "type " << c.label() << "\nCartan matrix\n" << render_matrix(c.matrix())
            << "dual Coxeter number " << c.dual_coxeter() << "\n";
  for (const auto& s : series) {
    std::cout << "C~[" << s["i"] << "," << s["j"] << "]:";
    for (const auto& x : s["coeffs"]) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_quiver(const RunConfig& cfg) {
  CartanData c = cartan_of(cfg);
  QuiverSlice s = build_slice(c, window_of(cfg, gamma_window(1)));
  if (cfg.json) {
    emit(with_schema({{"type", c.label()},
                      {"window", to_string(s.window())},
                      {"vertices", vertices_json(s.vertices())},
                      {"exchangeable", vertices_json(s.exchangeable())},
                      {"b", matrix_json(s.exchange().b)}}));
    return kExitPass;
  }
  std::cout << "type " << c.label() << " window " << to_string(s.window()) << "\nvertices:";
  for (const Vertex& v : s.vertices()) {
    std::cout << ' ' << (s.is_exchangeable(v) ? to_string(v) : "[" + to_string(v) + "]");
  }
  std::cout << "\ncolumns: " << to_string(s.exchangeable()) << "\nB~\n"
            << render_matrix(s.exchange().b);
  return kExitPass;
}

int cmd_compat(const RunConfig& cfg) {
  CartanData c = cartan_of(cfg);
  QuiverSlice s = build_slice(c, window_of(cfg, gamma_window(1)));
  IntMatrix lambda = build_lambda(s);
  CompatReport rep = check_compatible(s.exchange(), lambda);
  bool pass = rep.compatible() && rep.constant_diagonal();
  if (cfg.json) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
      violations.push_back({{"row", v.row}, {"col", v.col}, {"value", v.value}, {"reason", v.reason}});
    }
    emit(with_schema({{"type", c.label()},
                      {"window", to_string(s.window())},
                      {"lambda", matrix_json(lambda)},
                      {"btilde_t_lambda", matrix_json(rep.product)},
                      {"diagonal", rep.diagonal},
                      {"sign", rep.sign},
                      {"violations", violations},
                      {"verdict", verdict(pass)}}));
  } else {
    std::cout << "Lambda\n" << render_matrix(lambda) << "B~^T Lambda\n" << render_matrix(rep.product);
    std::cout << verdict(pass) << " diagonal";
    for (auto d : rep.diagonal) std::cout << ' ' << d;
    std::cout << " sign " << (rep.sign > 0 ? "+" : rep.sign < 0 ? "-" : "mixed") << '\n';
    for (const auto& v : rep.violations) {
      std::cout << "  entry (" << v.row << "," << v.col << ") = " << v.value << ": " << v.reason << '\n';
    }
  }
  return pass ? kExitPass : kExitFail;
}

void print_element(const RunConfig& cfg, const TorusElement& x, json extra) {
  if (cfg.json) {
    extra["value"] = cfg.t1 ? render_json(evaluate_t1(x)) : render_json(x);
    emit(with_schema(std::move(extra)));
  } else if (cfg.t1) {
    std::cout << to_string(evaluate_t1(x)) << '\n';
  } else {
    std::cout << render_text(x) << '\n';
  }
}

int cmd_mutate(const RunConfig& cfg) {
  CartanData c = cartan_of(cfg);
  QuiverSlice s = build_slice(c, window_of(cfg, gamma_window(1)));
  std::vector<Vertex> path = parse_path(cfg.path);
  Vertex at{};
  if (!cfg.vertex.empty()) {
    auto v = parse_path(cfg.vertex);
    if (v.size() != 1) throw DomainError("--vertex takes a single (i,r)");
    at = v.front();
  } else if (!path.empty()) {
    at = path.back();
  } else {
    throw DomainError("--vertex is required when --path is empty");
  }
  QuantumSeed seed = mutate_along(initial_seed(s), path);
  print_element(cfg, seed.var(at),
                {{"type", c.label()}, {"window", to_string(s.window())},
                 {"path", vertices_json(path)}, {"vertex", vertex_json(at)}});
  return kExitPass;
}

int cmd_fund_char(const RunConfig& cfg) {
  CartanData c = cartan_of(cfg);
  std::optional<Window> w;
  if (!cfg.window.empty() || cfg.n > 0) w = window_of(cfg, {});
  QtCharacter chi = fundamental_qt_character(c, cfg.i, cfg.r, w);
  print_element(cfg, chi.value,
                {{"type", c.label()}, {"origin", vertex_json(chi.origin)},
                 {"vertex_read", vertex_json(chi.vertex_read)},
                 {"window", to_string(chi.window)}});
  return kExitPass;
}

int cmd_sequence(const RunConfig& cfg) {
  CartanData c = cartan_of(cfg);
  MutationSequenceSpec spec = mutation_sequence(c, cfg.i, cfg.r);
  if (cfg.json) {
    emit(with_schema({{"type", c.label()}, {"origin", vertex_json(spec.origin)},
                      {"h_prime", spec.h_prime}, {"column_order", spec.column_order},
                      {"sequence", vertices_json(spec.sequence)},
                      {"window", to_string(default_window(c, cfg.i, cfg.r))}}));
  } else {
    std::cout << to_string(spec.sequence) << '\n';
  }
  return kExitPass;
}

int report_relations(const RunConfig& cfg, const std::vector<RelationCheck>& checks,
                     bool pass, json extra, const RelationCheck* note = nullptr) {
  if (cfg.json) {
    json rel = json::array();
    for (const auto& c : checks) rel.push_back(relation_json(c));
    extra["relations"] = rel;
    extra["verdict"] = verdict(pass);
    if (note) extra["reference_casimir"] = relation_json(*note);
    emit(with_schema(std::move(extra)));
  } else {
    for (const auto& c : checks) {
      std::cout << verdict(c.pass) << "  " << c.name << "\n    lhs: " << c.lhs
                << "\n    rhs: " << c.rhs << '\n';
    }
    if (note) {
      std::cout << "note  " << note->name << " (reference form): "
                << (note->pass ? "holds" : "residual " + note->lhs) << '\n';
    }
    std::cout << verdict(pass) << '\n';
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_baxter(const RunConfig& cfg) {
  BaxterReport rep = baxter_check(
      cfg.r, cfg.swap ? BaxterVariant::SwappedPowers : BaxterVariant::Standard);
  return report_relations(cfg, rep.checks, rep.pass(), {{"r", cfg.r}, {"swapped", cfg.swap}});
}

int cmd_drinfeld(const RunConfig& cfg) {
  DrinfeldReport rep = drinfeld_double_check(cfg.q_sign);
  return report_relations(cfg, rep.checks, rep.pass(), {{"q_sign", cfg.q_sign}},
                          &rep.reference_casimir);
}

int cmd_oracle(const RunConfig& cfg) {
  CartanData c = cartan_of(cfg);
  LaurentPolynomial q = classical_fm_qchar(c, cfg.i, cfg.r);
  if (cfg.json) {
    emit(with_schema({{"type", c.label()}, {"origin", vertex_json({cfg.i, cfg.r})},
                      {"y_keys", render_json(q)}, {"z_image", render_json(embed_Y(c, q))}}));
  } else {
    std::cout << y_polynomial(q) << '\n' << to_string(embed_Y(c, q)) << '\n';
  }
  return kExitPass;
}

int cmd_thin(const RunConfig& cfg) {
  ThinnessReport rep = thinness_flatten_check(cartan_of(cfg), cfg.i, cfg.r);
  if (cfg.json) {
    emit(with_schema({{"verdict", verdict(rep.pass)}, {"detail", rep.detail},
                      {"value", render_json(rep.character.value)}}));
  } else {
    std::cout << render_text(rep.character.value) << '\n' << verdict(rep.pass);
    if (!rep.detail.empty()) std::cout << ": " << rep.detail;
    std::cout << '\n';
  }
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_prefund(const RunConfig& cfg) {
  PrefundamentalCharacter p = prefundamental_qt_character(cartan_of(cfg), cfg.i, cfg.r, cfg.depth);
  if (cfg.json) {
    emit(with_schema({{"monomial", render_json(p.monomial)},
                      {"psi_weight", p.psi_weight.twice},
                      {"chi", render_json(p.chi)},
                      {"depth", cfg.depth}}));
  } else {
    std::cout << render_text(p.monomial) << ' ' << to_string(p.psi_weight) << '\n'
              << "chi (depth " << cfg.depth << "): " << to_string(p.chi) << '\n';
  }
  return kExitPass;
}

int cmd_verify_all(const RunConfig& cfg) {
  AcceptanceOptions opt;
  opt.golden_dir = cfg.golden_dir;
  opt.quick = cfg.quick;
  opt.seed = cfg.seed;
  opt.threads = cfg.parallel;
  auto results = run_acceptance(opt);
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (cfg.json) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << "[" << verdict(r.pass) << "] " << r.id << ". " << r.name << ": " << r.detail
                << '\n';
    }
  }
  if (cfg.json) emit(with_schema({{"criteria", arr}, {"verdict", verdict(all)}}));
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cluster algebra engine for quantum Grothendieck rings"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output");

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Dynkin type A, D or E")->capture_default_str();
    sub->add_option("--rank", cfg.rank, "Rank")->capture_default_str();
    sub->add_flag("--json", cfg.json, "Machine-readable output");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", cfg.window, "Level window rmin:rmax");
    sub->add_option("--N", cfg.n, "Use the slice Gamma_N")->check(CLI::PositiveNumber);
  };
  auto add_vertex = [&](CLI::App* sub) {
    sub->add_option("--i", cfg.i, "Node")->capture_default_str();
    sub->add_option("--r", cfg.r, "Level")->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* cartan = add("cartan", "Cartan matrix, dual Coxeter number and C~ series", cmd_cartan);
  add_type(cartan);
  cartan->add_option("--degree", cfg.degree, "Highest power of z")->capture_default_str();

  auto* quiver = add("quiver", "Vertices and exchange matrix of a slice", cmd_quiver);
  add_type(quiver);
  add_window(quiver);

  auto* compat = add("compat", "Lambda, B~^T Lambda and the compatibility verdict", cmd_compat);
  add_type(compat);
  add_window(compat);

  auto* mutate_cmd = add("mutate", "Quantum variable after a mutation path", cmd_mutate);
  add_type(mutate_cmd);
  add_window(mutate_cmd);
  mutate_cmd->add_option("--path", cfg.path, "Mutation path, e.g. \"(1,4);(1,2)\"");
  mutate_cmd->add_option("--vertex", cfg.vertex, "Vertex to print (default: last of path)");
  mutate_cmd->add_flag("--t1", cfg.t1, "Specialise t^{1/2} to 1");

  auto* fund = add("fund-char", "(q,t)-character of a fundamental module", cmd_fund_char);
  add_type(fund);
  add_window(fund);
  add_vertex(fund);
  fund->add_flag("--t1", cfg.t1, "Specialise t^{1/2} to 1");

  auto* seq = add("sequence", "Mutation sequence S for (i, r)", cmd_sequence);
  add_type(seq);
  add_vertex(seq);

  auto* baxter = add("baxter", "Quantized Baxter relation in type A1", cmd_baxter);
  baxter->add_option("--r", cfg.r, "Level parameter")->capture_default_str();
  baxter->add_flag("--swap", cfg.swap, "Swap the t-powers of the right side");
  baxter->add_flag("--json", cfg.json, "Machine-readable output");

  auto* drinfeld = add("drinfeld", "Drinfeld double relations in type A1", cmd_drinfeld);
  drinfeld->add_option("--q-sign", cfg.q_sign, "Sign s in q = s t^{1/2}")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  drinfeld->add_flag("--json", cfg.json, "Machine-readable output");

  auto* oracle = add("oracle", "Classical q-character by the Frenkel-Mukhin algorithm", cmd_oracle);
  add_type(oracle);
  add_vertex(oracle);

  auto* thin = add("thin-check", "Type A: every coefficient of the character is 1", cmd_thin);
  add_type(thin);
  add_vertex(thin);

  auto* prefund = add("prefund", "Prefundamental (q,t)-character, chi truncated", cmd_prefund);
  add_type(prefund);
  add_vertex(prefund);
  prefund->add_option("--depth", cfg.depth, "Truncation depth")->capture_default_str();

  auto* verify = add("verify-all", "Run the acceptance suite", cmd_verify_all);
  verify->add_flag("--quick", cfg.quick, "Reduced sweep sizes");
  verify->add_option("--golden-dir", cfg.golden_dir, "Directory of golden matrices")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed of the randomized suites")->capture_default_str();
  verify->add_option("--parallel", cfg.parallel, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  verify->add_flag("--json", cfg.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn(cfg);
    } catch (const DomainError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitFail;
    }
  }
  return kExitUsage;
}
