// crosslab command-line front end: load matrices, involutions, Q-systems and
// groups from JSON, run named verification suites, reproduce the worked
// examples, and emit machine-readable reports.
//
// Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
// 2 = input/parse error.

#include "crosslab/crossing.hpp"
#include "crosslab/endomorphism.hpp"
#include "crosslab/json_io.hpp"
#include "crosslab/qsystem.hpp"
#include "crosslab/random.hpp"
#include "crosslab/symmetry.hpp"
#include "crosslab/tensor.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace crosslab;
using nlohmann::json;

namespace {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json_only = false;
  bool quiet = false;

  Tolerances tolerances() const {
    Tolerances t;
    t.identity_scale = tol;
    t.check_tol = tol;
    return t;
  }
};

void emit(const VerificationReport& report, const Options& opt) {
  if (!opt.quiet) {
    std::cerr << report.summary() << "\n";
    if (!opt.json_only) {
      for (const Check& c : report.checks()) {
        if (!c.passed) {
          std::cerr << "  failed: " << c.name << " residual " << c.residual << " > tol "
                    << c.tolerance << "\n";
        }
      }
    }
  }
  std::cout << report.to_json().dump(2) << "\n";
}

VerificationReport crossing_basic_suite(const Involution& s, const Matrix& t,
                                        const Tolerances& tol) {
  VerificationReport report("crossing-basic");
  const Index n = s.dim();
  const double cut = tol.identity_tol(n * n);
  report.add("oracle-equivalence",
             (cross_fast(s, t) - cross_oracle(s, t)).norm() / std::max(1.0, t.norm()), cut);
  report.add("crossing-symmetry", is_crossing_symmetric(s, t, tol).residual, cut);
  report.add("inverse-round-trip",
             (cross_inverse(s, cross_fast(s, t)) - t).norm() / std::max(1.0, t.norm()), cut);
  return report;
}

VerificationReport kms_suite(const Involution& s, const Matrix& t, const Tolerances& tol,
                             Rng& rng) {
  const Index n = s.dim();
  const std::array<Vector, 4> psi{rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)};
  return kms_boundary_check(s, t, {-1.0, 0.0, 0.5, 1.0}, psi, tol);
}

VerificationReport endomorphism_suite(const Involution& s, const Matrix& t,
                                      const Tolerances& tol) {
  VerificationReport report("endomorphism");
  const StandardSubspace h = StandardSubspace::of(s, tol);
  const double cut = tol.identity_tol(s.dim() * s.dim());
  double worst = 0.0;
  for (const Vector& psi : endomorphism_test_set(s.dim())) {
    const Matrix v = extract_v(t, psi, psi);
    const EndoCheck check = is_endomorphism(v, h, s, tol);
    worst = std::max(worst, check.geometric_residual);
  }
  report.add("extraction-endomorphisms", worst, cut);
  const EndoFamily fam = EndoFamily::from_operator(t);
  report.add("reconstruction-round-trip",
             (reconstruct_t(fam) - t).norm() / std::max(1.0, t.norm()), cut);
  return report;
}

int finish(const VerificationReport& report, const Options& opt) {
  emit(report, opt);
  return report.all_passed() ? 0 : 1;
}

int cmd_verify(const std::string& t_file, const std::string& s_file, const std::string& suite,
               const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const Matrix t = io::matrix_from_json(io::load_json(t_file));
  const Involution s = io::involution_from_json(io::load_json(s_file), tol);
  if (bipartite_base_dim(t, "verify") != s.dim()) {
    throw ShapeMismatch("verify: T must act on the tensor square of the involution space");
  }
  Rng rng(opt.seed);
  VerificationReport report(suite);
  if (suite == "crossing-basic" || suite == "all") {
    report.merge(crossing_basic_suite(s, t, tol));
  }
  if (suite == "crossing-powers" || suite == "all") {
    report.merge(cross_power_checks(s, t, {0.5, -0.3}, tol));
  }
  if (suite == "kms" || suite == "all") {
    report.merge(kms_suite(s, t, tol, rng));
  }
  if (suite == "endomorphism" || suite == "all") {
    report.merge(endomorphism_suite(s, t, tol));
  }
  if (report.checks().empty()) {
    throw InvalidState("verify: unknown suite '" + suite + "'");
  }
  return finish(report, opt);
}

int cmd_qsystem(const std::string& spec_file, const std::string& emit_twist,
                const std::string& emit_involution, const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const json spec = io::load_json(spec_file);
  QSystem q;
  if (spec.contains("group-functions")) {
    q = functions_on_group(io::group_from_json(spec.at("group-functions")));
  } else if (spec.contains("group-algebra")) {
    q = group_algebra(io::group_from_json(spec.at("group-algebra")));
  } else if (spec.contains("multimatrix")) {
    q = from_cstar(io::multimatrix_from_json(spec.at("multimatrix")), tol);
  } else if (spec.contains("raw")) {
    q = io::qsystem_from_json(spec.at("raw"));
  } else {
    throw ParseError(
        "qsystem: expected one of {group-functions, group-algebra, multimatrix, raw}");
  }

  VerificationReport report("qsystem");
  report.merge(validate(q, tol));
  report.merge(twist_certificates(q, tol));
  const QSystemFlags flags = qsystem_flags(q, tol);
  if (!opt.quiet) {
    std::cerr << "d = " << flags.d << (flags.special ? " (special)" : " (mm* not scalar)")
              << (flags.normalized ? ", normalized" : "")
              << (flags.irreducible ? ", irreducible" : "") << "\n";
  }

  const DerivedData data = derived_data(q, tol);
  if (!emit_twist.empty()) {
    io::save_json(emit_twist, io::matrix_to_json(data.twist));
  }
  if (!emit_involution.empty()) {
    io::save_json(emit_involution, io::involution_to_json(data.s));
  }

  // a non-special Frobenius algebra is a legitimate input; the specialness
  // check is reported but only enforced for inputs claiming it
  emit(report, opt);
  return report.all_passed_except("specialness") ? 0 : 1;
}

int cmd_invariants(const std::string& group, const std::vector<double>& spectrum,
                   const Options& opt) {
  const Tolerances tol = opt.tolerances();
  Involution s = [&]() -> Involution {
    if (group == "unitary-random") {
      Rng rng(opt.seed);
      const AntilinearOp j = rng.antiunitary_involution(3);
      return Involution::from_parts(j, rng.modular_operator(j), tol);
    }
    Index n = 0;
    if (group == "o2") n = 2;
    else if (group == "o3") n = 3;
    else if (group == "o4") n = 4;
    else throw InvalidState("invariants: unknown group '" + group + "'");
    std::vector<double> spec = spectrum;
    if (spec.empty()) spec.assign(static_cast<size_t>(n), 1.0);
    return o_n_involution(n, spec, tol);
  }();

  std::vector<Matrix> generators;
  Index expected = 0;
  std::vector<Matrix> spanning;
  if (group == "unitary-random") {
    Rng rng(opt.seed + 1);
    for (int k = 0; k < 6; ++k) generators.push_back(rng.haar_unitary(3));
    expected = 1;
    spanning = {flip(3)};
  } else {
    generators = o_n_generators(s);
    const bool trivial = s.antiunitary();
    const InvariantSpaceCase expect = o_n_expected(s.dim(), trivial, s);
    expected = expect.expected_dim;
    spanning = expect.spanning;
  }

  const auto basis = invariant_crossing_space({generators, s}, tol);
  const double span_residual = mutual_span_residual(basis, spanning);

  json residuals = json::array();
  for (const Matrix& b : basis) {
    residuals.push_back(is_crossing_symmetric(s, b, tol).residual);
  }
  json out = {{"case", {{"group", group}, {"spectrum", spectrum}}},
              {"dim_found", basis.size()},
              {"dim_expected", expected},
              {"span_residual", span_residual},
              {"basis_residuals", residuals}};
  std::cout << out.dump(2) << "\n";
  const bool ok =
      static_cast<Index>(basis.size()) == expected && span_residual <= 1e3 * tol.identity_tol(s.dim() * s.dim());
  if (!opt.quiet) {
    std::cerr << "dim " << basis.size() << " vs expected " << expected
              << (ok ? " (match)" : " (MISMATCH)") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_demo(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  Rng rng(opt.seed);
  VerificationReport gallery("demo");
  auto note = [&](const std::string& name, double residual, double cut) {
    gallery.add(name, residual, cut);
    if (!opt.quiet) {
      std::cerr << (residual <= cut ? "[ok]   " : "[FAIL] ") << name << "  residual " << residual
                << "\n";
    }
  };

  // crossing map basics on a random involution
  {
    const Index n = 3;
    const AntilinearOp j = rng.antiunitary_involution(n);
    const Involution s = Involution::from_parts(j, rng.modular_operator(j), tol);
    const double cut = tol.identity_tol(n * n);
    note("flip-fixed-point", (cross_fast(s, flip(n)) - flip(n)).norm(), cut);
    note("cross-identity-gives-ps",
         (cross_fast(s, Matrix::Identity(n * n, n * n)) - rank_one_ps(s)).norm() /
             rank_one_ps(s).norm(),
         cut);
    const Matrix t = rng.matrix(n * n, n * n);
    note("oracle-equivalence", (cross_fast(s, t) - cross_oracle(s, t)).norm() / t.norm(), cut);
    const VerificationReport powers = cross_power_checks(s, t, {0.4}, tol);
    note("power-and-exchange", powers.max_residual(), cut);
    const std::array<Vector, 4> psi{rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)};
    note("kms-boundary", kms_boundary_check(s, t, {-1.0, 0.0, 0.5, 1.0}, psi, tol).max_residual(),
         cut);
    const Matrix sym = symmetrize_crossing(s, t);
    note("endomorphism-round-trip",
         (reconstruct_t(EndoFamily::from_operator(sym)) - sym).norm() / sym.norm(), cut);
  }

  // klr solution
  {
    const Involution s = o_n_involution(2, {2.0, 0.5}, tol);
    const Matrix t = klr_matrix();
    note("klr-crossing-symmetry", is_crossing_symmetric(s, t, tol).residual,
         tol.identity_tol(4));
    const Matrix id = Matrix::Identity(2, 2);
    const Matrix t1 = kron(t, id), t2 = kron(id, t);
    note("klr-yang-baxter", (t1 * t2 * t1 - t2 * t1 * t2).norm(), tol.identity_tol(8));
  }

  // group Q-systems
  for (int order : {2, 3, 4}) {
    const QSystem q = functions_on_group(FiniteGroup::cyclic(order));
    const double d = qsystem_flags(q, tol).d;
    VerificationReport cert = validate(q, tol);
    cert.merge(twist_certificates(q, tol));
    note("functions-z" + std::to_string(order) + "-certificates",
         cert.max_residual() + std::abs(d - order), tol.identity_tol(order * order));
  }
  {
    const QSystem q = group_algebra(FiniteGroup::cyclic(3));
    VerificationReport cert = validate(q, tol);
    cert.merge(twist_certificates(q, tol));
    note("algebra-z3-certificates", cert.max_residual(), tol.identity_tol(9));
  }
  {
    const QSystem q = group_algebra(FiniteGroup::symmetric(3));
    VerificationReport cert = validate(q, tol);
    cert.merge(twist_certificates(q, tol));
    note("algebra-s3-certificates", cert.max_residual(), tol.identity_tol(36));
  }

  // multi-matrix algebras
  {
    MultiMatrixAlgebra m2;
    m2.blocks = {2};
    m2.rho = {0.5 * Matrix::Identity(2, 2)};
    const QSystem q = from_cstar(m2, tol);
    VerificationReport cert = validate(q, tol);
    cert.merge(twist_certificates(q, tol));
    const double d = qsystem_flags(q, tol).d;
    note("multimatrix-m2-certificates", cert.max_residual() + std::abs(d - 4.0),
         tol.identity_tol(16));
    note("multimatrix-m2-closed-form-twist",
         (twist_of_multimatrix(m2, tol) - q.m.adjoint() * q.m).norm(), tol.identity_tol(16));

    const QSystem jones_q = functions_on_group(FiniteGroup::cyclic(2));
    const Matrix e = jones_projection(jones_q, tol);
    const DerivedData data = derived_data(jones_q, tol);
    const double idem = (e * e - e).norm() + (e - e.adjoint()).norm();
    const double cross_one =
        (cross_fast(data.s, Matrix::Identity(4, 4)) - 2.0 * e).norm();
    note("jones-projection-z2", idem + cross_one, tol.identity_tol(4));
    note("jones-not-crossing-symmetric",
         is_crossing_symmetric(data.s, e, tol).residual > 0.1 ? 0.0 : 1.0, 0.5);
  }
  {
    MultiMatrixAlgebra mixed;
    mixed.blocks = {1, 2};
    mixed.rho = {Matrix::Constant(1, 1, 0.5), 0.25 * Matrix::Identity(2, 2)};
    const auto traces = block_inverse_traces(mixed, tol);
    const bool special = qsystem_flags(from_cstar(mixed, tol), tol).special;
    const bool traces_differ = std::abs(traces[0] - traces[1]) > 1e-9;
    note("specialness-criterion", (special == !traces_differ) ? 0.0 : 1.0, 0.5);
  }

  // O(N) invariant spaces
  {
    const Involution s = o_n_involution(2, {1.0, 1.0}, tol);
    note("o2-trivial-dim-3",
         std::abs(static_cast<double>(invariant_crossing_space({o_n_generators(s), s}, tol).size()) - 3.0),
         0.5);
    const Involution s2 = o_n_involution(2, {2.0, 0.5}, tol);
    note("o2-lambda2-dim-2",
         std::abs(static_cast<double>(invariant_crossing_space({o_n_generators(s2), s2}, tol).size()) - 2.0),
         0.5);
    const Involution s3 = o_n_involution(3, {2.0, 0.5, 1.0}, tol);
    note("o3-lambda2-dim-1",
         std::abs(static_cast<double>(invariant_crossing_space({o_n_generators(s3), s3}, tol).size()) - 1.0),
         0.5);
  }

  if (opt.json_only || !opt.quiet) {
    std::cout << gallery.to_json().dump(2) << "\n";
  }
  if (!opt.quiet) {
    std::cerr << gallery.summary() << "\n";
  }
  return gallery.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crosslab: crossing maps, standard subspaces and Q-system twists"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("CROSSLAB_TOL")) {
    try {
      opt.tol = std::stod(env);
    } catch (...) {
      std::cerr << "invalid CROSSLAB_TOL value '" << env << "'\n";
      return 2;
    }
  }
  app.add_option("--tol", opt.tol, "check tolerance scale (default 1e-9)");
  app.add_option("--seed", opt.seed, "PRNG seed for randomized checks");
  app.add_flag("--json", opt.json_only, "machine-readable output only");
  app.add_flag("--quiet", opt.quiet, "suppress human summary");

  std::string t_file, s_file, suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite on (T, S)");
  verify->add_option("t_file", t_file, "bipartite operator JSON")->required();
  verify->add_option("s_file", s_file, "involution JSON")->required();
  verify->add_option("--suite", suite,
                     "crossing-basic | crossing-powers | kms | endomorphism | all");

  std::string spec_file, emit_twist, emit_involution;
  CLI::App* qsys = app.add_subcommand("qsystem", "build and certify a Q-system");
  qsys->add_option("spec_file", spec_file, "Q-system spec JSON")->required();
  qsys->add_option("--emit-twist", emit_twist, "write the twist matrix to this path");
  qsys->add_option("--emit-involution", emit_involution, "write the involution to this path");

  std::string group;
  std::vector<double> spectrum;
  CLI::App* inv = app.add_subcommand("invariants", "invariant crossing-symmetric spaces");
  inv->add_option("group", group, "o2 | o3 | o4 | unitary-random")->required();
  inv->add_option("--spectrum", spectrum, "modular spectrum (default trivial)");

  CLI::App* demo = app.add_subcommand("demo", "run the worked-example gallery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(t_file, s_file, suite, opt);
    if (qsys->parsed()) return cmd_qsystem(spec_file, emit_twist, emit_involution, opt);
    if (inv->parsed()) return cmd_invariants(group, spectrum, opt);
    if (demo->parsed()) return cmd_demo(opt);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
