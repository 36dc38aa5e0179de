// Copyright 2026 The poissonlike Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>

#include "poissonlike/cohomology.hpp"
#include "poissonlike/duality.hpp"
#include "poissonlike/errors.hpp"
#include "poissonlike/forms.hpp"
#include "poissonlike/lie_algebra.hpp"
#include "poissonlike/literal.hpp"
#include "poissonlike/polyfield.hpp"
#include "poissonlike/report.hpp"
#include "poissonlike/schouten.hpp"

namespace poissonlike::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string algebra;
  std::string tensor;
  std::string tensor_file;
  std::string side = "tangent";
  std::vector<std::string> sets;
  std::string format = "table";
  std::size_t n = 0;
  long k = 0;
  std::size_t m = 0;
  std::size_t h = 0;
  std::size_t k0 = 0;
  std::size_t m0 = 1;
};

Assignment parse_sets(const std::vector<std::string>& sets) {
  Assignment a;
  for (const auto& s : sets) {
    auto [name, value] = parse_assignment_item(s);
    a[name] = value;
  }
  return a;
}

Space parse_side(const std::string& s) {
  return (s == "form" || s == "cotangent") ? Space::cotangent : Space::tangent;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_validate(const Options& o, std::ostream& out) {
  LieAlgebra L = LieAlgebra::load(o.algebra);
  auto violations = validate(L);
  if (o.format == "json") {
    print_json(out, {{"algebra", L.name()}, {"dim", L.dim()}, {"violations", jacobi_to_json(violations)}});
    return kOk;
  }
  for (const auto& v : violations) {
    out << "Jacobi fails on (" << v.i << "," << v.j << "," << v.k << "): " << v.residual.to_string() << '\n';
  }
  return kOk;
}

int cmd_poisson(const Options& o, std::ostream& out) {
  LieAlgebra L = LieAlgebra::load(o.algebra);
  const Space side = parse_side(o.side);
  ExteriorElement t = parse_exterior(o.tensor, side, L.dim());
  const Assignment a = parse_sets(o.sets);
  if (!a.empty()) t = t.substitute(a);
  ExteriorElement residual = side == Space::tangent ? poisson_residual(L, t) : form_bracket(L, t, t);
  if (o.format == "json") {
    json eqs = json::array();
    for (const auto& [idx, c] : residual.terms()) eqs.push_back(c.to_string());
    print_json(out, {{"tensor", element_to_json(t)}, {"residual", element_to_json(residual)}, {"equations", eqs}});
    return kOk;
  }
  out << "[T,T] = " << residual.to_string() << '\n';
  for (const auto& [idx, c] : residual.terms()) out << c.to_string() << " = 0\n";
  return kOk;
}

GradedComplex complex_for(const LieAlgebra& L, const ExteriorElement& t, Space side) {
  return side == Space::tangent ? tangent_complex(L, t) : form_complex(L, t);
}

int cmd_betti(const Options& o, std::ostream& out) {
  LieAlgebra L = LieAlgebra::load(o.algebra);
  const Space side = parse_side(o.side);
  const ExteriorElement t = parse_exterior(o.tensor, side, L.dim());
  const Assignment a = parse_sets(o.sets);
  GradedComplex c = complex_for(L, t, side);
  BettiReport r = betti_sequence(c, a);
  AlternatingSum sum = alternating_sum_check(r);
  if (o.format == "json") {
    json mats = json::array();
    for (const auto& s : c.slots) {
      if (s.outgoing) mats.push_back(matrix_to_json(s.outgoing->substitute(a)));
    }
    print_json(out, {{"matrices", mats},
                     {"report", betti_to_json(r)},
                     {"alternating_sum", {{"lhs", sum.lhs}, {"rhs", sum.rhs}, {"equal", sum.equal}}}});
    return kOk;
  }
  for (const auto& s : c.slots) {
    if (s.outgoing) out << matrix_listing(s.outgoing->substitute(a));
  }
  out << betti_table(r);
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  LieAlgebra L = LieAlgebra::load(o.algebra);
  const ExteriorElement t = parse_exterior(o.tensor, Space::tangent, L.dim());
  const Assignment a = parse_sets(o.sets);
  DoubleComplexReport r = double_complex_report(L, t, a);
  std::vector<OperatorMatrix> deltas;
  for (auto& m : dual_operator(L, t)) deltas.push_back(m.substitute(a));
  if (o.format == "json") {
    json j = double_complex_to_json(r);
    json mats = json::array();
    for (const auto& m : deltas) mats.push_back(matrix_to_json(m));
    j["delta"] = mats;
    print_json(out, j);
    return kOk;
  }
  for (const auto& m : deltas) out << matrix_listing(m);
  for (const auto* family : {&r.delta_squared, &r.d_after_delta, &r.delta_after_d}) {
    for (const auto& m : *family) out << matrix_listing(m);
  }
  out << betti_table(r.betti_d) << betti_table(r.betti_delta);
  return kOk;
}

int cmd_poly_dims(const Options& o, std::ostream& out) {
  const std::size_t d = dim_Ckm(o.n, o.k, o.m);
  if (o.format == "json") {
    print_json(out, {{"n", o.n}, {"k", o.k}, {"m", o.m}, {"dim", d}});
  } else {
    out << d << '\n';
  }
  return kOk;
}

int cmd_poly_betti(const Options& o, std::ostream& out) {
  const PolyMultiVector pi = load_tensor_file(o.tensor_file);
  const Assignment a = parse_sets(o.sets);
  const std::size_t n = pi.ambient_dim();
  std::size_t h = o.h;
  if (h == 0) {
    for (const auto& bd : pi.bidegrees()) h = bd.first;
  }
  std::vector<ChainSpace> chain;
  for (std::size_t k = o.k0, m = o.m0; m <= n; ++m) {
    chain.emplace_back(k, m);
    if (k + h < 1) break;
    k = k + h - 1;
  }
  auto dpi = poly_dpi_matrices(pi, h, chain, a);
  auto delta = volume_dual_matrices(pi, h, chain, a);
  std::vector<ChainSpace> dual_chain;
  for (const auto& [k, m] : chain) dual_chain.emplace_back(k, n - m);
  BettiReport r1 = betti_sequence(chain_complex("d_pi", Space::tangent, n, chain, dpi), a);
  BettiReport r2 = betti_sequence(chain_complex("delta", Space::cotangent, n, dual_chain, delta), a);
  if (o.format == "json") {
    print_json(out, {{"d_pi", betti_to_json(r1)}, {"delta", betti_to_json(r2)}});
  } else {
    out << betti_table(r1) << betti_table(r2);
  }
  return kOk;
}

int cmd_poly_system(const Options& o, std::ostream& out) {
  const PoissonSystem s = poisson_system(general_param_tensor(o.n, o.h, o.m));
  if (o.format == "json") {
    print_json(out, poisson_system_to_json(s));
    return kOk;
  }
  for (const auto& e : s.equations) out << e.equation.to_string() << '\n';
  out << "# target dimension " << s.target_dim << ", nonzero equations " << s.equations.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson-like cohomology of Lie superalgebras"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"table", "json"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember(formats));
  };
  auto add_tensor = [&](CLI::App* sub) {
    sub->add_option("algebra", o.algebra, "algebra JSON file")->required();
    sub->add_option("--tensor", o.tensor, "element literal, e.g. \"y1^y4 + y2^y3\"")->required();
    sub->add_option("--set", o.sets, "parameter value, name=rational")->take_all();
    add_format(sub);
  };
  const std::vector<std::string> sides{"tangent", "form", "cotangent"};

  auto* validate_cmd = app.add_subcommand("validate", "check the Jacobi identity");
  validate_cmd->add_option("algebra", o.algebra, "algebra JSON file")->required();
  add_format(validate_cmd);

  auto* poisson_cmd = app.add_subcommand("poisson", "[T,T] and the Poisson equations");
  add_tensor(poisson_cmd);
  poisson_cmd->add_option("--side", o.side, "tangent or form")->check(CLI::IsMember(sides));

  auto* betti_cmd = app.add_subcommand("betti", "matrices, ranks and Betti numbers");
  add_tensor(betti_cmd);
  betti_cmd->add_option("--side", o.side, "tangent or form")->check(CLI::IsMember(sides));

  auto* dual_cmd = app.add_subcommand("dual", "dual operator and double complex");
  add_tensor(dual_cmd);

  auto* poly = app.add_subcommand("polyfield", "polynomial-coefficient fields on R^n");
  poly->require_subcommand(1);
  auto* dims_cmd = poly->add_subcommand("dims", "dimension of C_k^m");
  dims_cmd->add_option("--n", o.n)->required();
  dims_cmd->add_option("--k", o.k)->required();
  dims_cmd->add_option("--m", o.m)->required();
  add_format(dims_cmd);
  auto* pbetti_cmd = poly->add_subcommand("betti", "d_pi and volume-dual Betti tables");
  pbetti_cmd->add_option("--tensor-file", o.tensor_file, "tensor JSON file")->required();
  pbetti_cmd->add_option("--set", o.sets, "parameter value, name=rational")->take_all();
  pbetti_cmd->add_option("--h", o.h, "coefficient degree of pi (default: from the tensor)");
  pbetti_cmd->add_option("--k0", o.k0, "polynomial degree of the first chain space");
  pbetti_cmd->add_option("--m0", o.m0, "exterior degree of the first chain space");
  add_format(pbetti_cmd);
  auto* system_cmd = poly->add_subcommand("system", "Poisson equations of the general tensor");
  system_cmd->add_option("--n", o.n)->required();
  system_cmd->add_option("--h", o.h)->required();
  system_cmd->add_option("--m", o.m)->required();
  add_format(system_cmd);

  std::vector<const char*> argv{"poissonlike"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*poisson_cmd) return cmd_poisson(o, out);
    if (*betti_cmd) return cmd_betti(o, out);
    if (*dual_cmd) return cmd_dual(o, out);
    if (*dims_cmd) return cmd_poly_dims(o, out);
    if (*pbetti_cmd) return cmd_poly_betti(o, out);
    if (*system_cmd) return cmd_poly_system(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace poissonlike::cli
