#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modlie/cartan.hpp"
#include "modlie/embedding.hpp"
#include "modlie/ring_autos.hpp"
#include "modlie/serialization.hpp"
#include "modlie/verify.hpp"
#include "modlie/weights.hpp"

using namespace modlie;
using nlohmann::ordered_json;

namespace {

u64 resolve_seed(bool seed_set, u64 flag_seed) {
  if (seed_set) return flag_seed;
  if (const char* env = std::getenv("MODLIE_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed MODLIE_SEED\n";
    }
  }
  return kDefaultSeed;
}

std::vector<u32> parse_nbar(const std::string& text) {
  std::vector<u32> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(static_cast<u32>(std::stoul(tok)));
  if (out.empty()) throw std::invalid_argument("empty n-vec");
  return out;
}

/// Instance shorthand: w-2-1, w-1-(2), w-1-(2,3), sl-2, gl-3, s-3-1, h-2-1;
/// anything naming an existing file is loaded instead.
LieAlgebra algebra_from_spec(const std::string& spec, u32 p) {
  if (std::filesystem::exists(spec)) {
    std::cerr << "loading algebra from " << spec << "\n";
    return load_algebra_file(spec);
  }
  auto parts = [&] {
    std::vector<std::string> v;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, '-')) v.push_back(tok);
    return v;
  }();
  auto num = [](const std::string& s) { return static_cast<u32>(std::stoul(s)); };
  if (parts.size() == 3 && parts[0] == "w" && parts[2] == "1" && parts[1].front() != '(')
    return build_jacobson_witt(num(parts[1]), p);
  if (parts.size() == 3 && parts[0] == "w" && parts[2].front() == '(') {
    std::string inner = parts[2].substr(1, parts[2].size() - 2);
    return build_witt_general(num(parts[1]), parse_nbar(inner), p);
  }
  if (parts.size() == 2 && parts[0] == "sl") return build_classical(ClassicalType::kSl, num(parts[1]), p);
  if (parts.size() == 2 && parts[0] == "gl") return build_classical(ClassicalType::kGl, num(parts[1]), p);
  if (parts.size() == 3 && parts[0] == "s" && parts[2] == "1")
    return build_special_S(num(parts[1]), p);
  if (parts.size() == 3 && parts[0] == "h" && parts[2] == "1")
    return build_hamiltonian_H(num(parts[1]), p);
  throw std::invalid_argument("unrecognized algebra spec '" + spec + "'");
}

Torus standard_torus_of(const LieAlgebra& L) {
  if (L.family == "w-n-1") return standard_generic_torus(L);
  if (L.family == "sl-n" || L.family == "gl-n") {
    u32 n = static_cast<u32>(L.params.at("n").at(0));
    std::vector<FpVec> gens;
    if (L.family == "gl-n") {
      for (u32 k = 0; k < n; ++k) gens.push_back(L.basis_vec(k * n + k));
    } else {
      for (u32 k = 0; k + 1 < n; ++k) gens.push_back(L.basis_vec(n * (n - 1) + k));
    }
    return torus_generated(L, gens);
  }
  throw std::invalid_argument("no standard torus for family '" + L.family +
                              "'; use --torus search");
}

FpMat parse_matrix(const PrimeField& F, const std::string& text) {
  std::vector<FpVec> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    FpVec r;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) r.push_back(F.norm(std::stoul(tok)));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw std::invalid_argument("matrix must be square");
  return FpMat::from_rows(F, rows);
}

ordered_json matrix_rows(const FpMat& M) {
  ordered_json rows = ordered_json::array();
  for (u32 i = 0; i < M.rows; ++i) rows.push_back(M.row(i));
  return rows;
}

int cmd_construct(const std::string& family, u32 n, u32 m, const std::string& nvec, u32 p,
                  bool no_pmap, const std::string& out) {
  LieAlgebra L;
  if (family == "w-n-1")
    L = build_jacobson_witt(n, p);
  else if (family == "w-m-n")
    L = build_witt_general(m, parse_nbar(nvec), p);
  else if (family == "sl")
    L = build_classical(ClassicalType::kSl, n, p);
  else if (family == "gl")
    L = build_classical(ClassicalType::kGl, n, p);
  else if (family == "s-n-1")
    L = build_special_S(n, p, !no_pmap);
  else if (family == "h-2r-1")
    L = build_hamiltonian_H(n, p, !no_pmap);
  else
    throw std::invalid_argument("unknown family '" + family + "'");

  ordered_json summary;
  summary["family"] = L.family;
  summary["p"] = p;
  summary["dim"] = L.dim;
  summary["pmap"] = L.has_pmap;
  if (L.family == "w-n-1" || L.family == "w-m-n") {
    std::vector<int> g = witt_grading(L);
    summary["grading"] = {*std::min_element(g.begin(), g.end()),
                          *std::max_element(g.begin(), g.end())};
  }
  if (!out.empty()) {
    save_algebra_file(L, out);
    std::cerr << "wrote " << out << "\n";
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cerr << summary.dump(2) << "\n";
    std::cout << algebra_to_json(L);
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  LieAlgebra L = load_algebra_file(path, /*validate=*/false);
  ValidationReport rep = validate_algebra(L);
  ordered_json doc;
  doc["file"] = path;
  doc["dim"] = L.dim;
  doc["ok"] = rep.ok;
  doc["pmap_checked"] = rep.pmap_checked;
  doc["antisym_failures"] = rep.antisym_failures;
  doc["jacobi_failures"] = rep.jacobi_failures;
  doc["restrict_failures"] = rep.restrict_failures;
  doc["violations"] = rep.violations;
  std::cout << doc.dump(2) << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_weights(const std::string& spec, u32 p, const std::string& torus_mode, u64 seed,
                u32 restarts) {
  LieAlgebra L = algebra_from_spec(spec, p);
  PPowerFn pp;
  if (L.family == "w-n-1") {
    TruncatedPolyRing B = witt_ring(L);
    pp = [B](const FpVec& v) { return p_power_by_composition(B, v); };
  }
  Torus t;
  if (torus_mode == "standard") {
    t = standard_torus_of(L);
  } else {
    std::cerr << "searching for a maximal torus (seed " << seed << ", restarts " << restarts
              << ")\n";
    t = max_torus_search(L, seed, restarts, pp).torus;
  }
  WeightDecomposition wd = decompose(L, t);
  CoverageReport cov = coverage_check(wd);
  EqualDimsReport eq = equal_dims_check(wd);
  DimensionIdentityReport id = dimension_identity_check(L, nullptr, wd);

  ordered_json doc;
  doc["algebra"] = spec;
  doc["dim"] = L.dim;
  doc["torus_dim"] = t.dim();
  doc["torus_basis"] = matrix_rows(t.span.basis);
  ordered_json table = ordered_json::array();
  for (const auto& [chi, d] : wd.table) table.push_back({{"chi", chi}, {"dim", d}});
  doc["table"] = std::move(table);
  doc["zero_dim"] = wd.zero_space.dim();
  doc["coverage_full"] = cov.full;
  ordered_json missing = ordered_json::array();
  for (const auto& chi : cov.missing) missing.push_back(chi);
  doc["missing"] = std::move(missing);
  doc["equal_dims"] = eq.equal;
  doc["common_dim"] = eq.common_dim;
  doc["identity"] = {{"applicable", id.applicable},
                     {"holds", id.holds},
                     {"module_dim", id.module_dim},
                     {"zero_dim", id.zero_dim},
                     {"common_dim", id.common_dim},
                     {"rhs", id.rhs}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_embed(u32 m, const std::string& nvec, u32 p) {
  EmbeddingMap emb = build_iota(m, parse_nbar(nvec), p);
  DExpansionReport dr = check_D_i_expansion(emb);
  PEnvelope env = envelope_in_target(emb);
  Subspace image = emb.image();
  u32 identity_pass = 0;
  for (u32 i = 0; i < image.dim(); ++i)
    if (check_coefficient_identity(emb, image.basis.row(i)).holds) ++identity_pass;

  ordered_json doc;
  doc["source_dim"] = emb.source.dim;
  doc["target"] = "w-" + std::to_string(emb.phi.split.N) + "-1";
  doc["injective"] = rref(emb.matrix).rank == emb.source.dim;
  ordered_json exps = ordered_json::array();
  for (u32 i = 0; i < dr.actual.size(); ++i) {
    ordered_json terms = ordered_json::array();
    const FpVec& a = dr.actual[i];
    for (u32 k = 0; k < emb.target.dim; ++k)
      if (a[k]) terms.push_back({{"coeff", a[k]}, {"basis", emb.target.labels[k]}});
    exps.push_back(std::move(terms));
  }
  doc["d_expansions"] = std::move(exps);
  doc["d_expansions_match"] = dr.all_match;
  doc["coefficient_identity_on_image"] =
      std::to_string(identity_pass) + "/" + std::to_string(image.dim());
  doc["envelope"] = {{"inner_dim", env.inner.dim()}, {"closure_dim", env.closure.dim()}};
  std::cout << doc.dump(2) << "\n";
  bool ok = doc["injective"].get<bool>() && dr.all_match && identity_pass == image.dim();
  return ok ? 0 : 1;
}

int cmd_lift(u32 n, u32 p, const std::string& matrix_text, const std::string& kind) {
  LieAlgebra W = build_jacobson_witt(n, p);
  TruncatedPolyRing B = witt_ring(W);
  FpMat g = parse_matrix(W.F, matrix_text);
  if (g.rows != n) throw std::invalid_argument("matrix size must equal n");
  RingEndo e = kind == "demushkin" ? demushkin_lift(B, g) : weyl_lift(B, g);
  LieAuto a = induced_lie_auto(W, e);
  PPowerFn pp = [B](const FpVec& v) { return p_power_by_composition(B, v); };
  bool is_auto = is_lie_automorphism(W, a, 0, 1, pp);
  Torus t0 = standard_generic_torus(W);

  ordered_json doc;
  doc["kind"] = kind;
  doc["matrix"] = matrix_rows(g);
  doc["is_automorphism"] = is_auto;
  ordered_json images = ordered_json::array();
  for (u32 i = 0; i < n; ++i) {
    std::ostringstream os;
    bool first = true;
    for (u32 k = 0; k < B.dim; ++k)
      if (e.images[i][k]) {
        os << (first ? "" : " + ");
        if (e.images[i][k] != 1 || k == 0) os << e.images[i][k];
        if (k != 0) os << B.mono_label(k);
        first = false;
      }
    images.push_back(os.str());
  }
  doc["variable_images"] = std::move(images);
  try {
    FpMat r = restriction_to_torus(a, t0);
    doc["normalizes_t0"] = true;
    doc["restriction"] = matrix_rows(r);
  } catch (const DoesNotNormalize&) {
    doc["normalizes_t0"] = false;
  }
  Subspace c = standard_maximal_solvable(W);
  doc["stabilizes_c"] = stabilizes_subspace(a, c);
  std::cout << doc.dump(2) << "\n";
  return is_auto ? 0 : 1;
}

int cmd_verify(const std::string& suite, u64 seed) {
  std::cerr << "running suite '" << suite << "' with seed " << seed << "\n";
  SuiteReport rep = run_suite(suite, seed);
  std::cout << report_to_json(rep);
  std::cerr << rep.suite << ": " << (rep.checks.size() - rep.failures()) << "/"
            << rep.checks.size() << " checks passed\n";
  return rep.ok() ? 0 : 1;
}

int cmd_torus_search(const std::string& spec, u32 p, u64 seed, u32 restarts) {
  LieAlgebra L = algebra_from_spec(spec, p);
  PPowerFn pp;
  if (L.family == "w-n-1") {
    TruncatedPolyRing B = witt_ring(L);
    pp = [B](const FpVec& v) { return p_power_by_composition(B, v); };
  }
  TorusSearchResult r = max_torus_search(L, seed, restarts, pp);
  ordered_json doc;
  doc["algebra"] = spec;
  doc["dim"] = L.dim;
  doc["torus_dim"] = r.torus.dim();
  doc["restart"] = r.restart;
  doc["seed"] = seed;
  doc["basis"] = matrix_rows(r.torus.span.basis);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and verifications for restricted Lie algebras over F_p"};
  app.require_subcommand(1);

  std::string family, nvec = "1", out, spec, torus_mode = "standard", matrix_text,
              kind = "weyl", suite, path;
  u32 n = 2, m = 1, p = 5, restarts = kTorusSearchRestarts;
  u64 seed = kDefaultSeed;
  bool no_pmap = false, seed_set = false;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "rng seed (default MODLIE_SEED or 12345)")
        ->each([&](const std::string&) { seed_set = true; });
  };

  auto* c_construct = app.add_subcommand("construct", "build a catalog algebra");
  c_construct->add_option("family", family, "w-n-1 | w-m-n | sl | gl | s-n-1 | h-2r-1")
      ->required();
  c_construct->add_option("--n", n, "n (or 2r for h-2r-1)");
  c_construct->add_option("--m", m, "number of variables for w-m-n");
  c_construct->add_option("--n-vec", nvec, "comma-separated heights for w-m-n");
  c_construct->add_option("--p", p, "prime, at least 5");
  c_construct->add_flag("--no-pmap", no_pmap, "skip p-map computation (s-n-1, h-2r-1)");
  c_construct->add_option("--out", out, "write algebra JSON here");

  auto* c_validate = app.add_subcommand("validate", "re-check a saved algebra");
  c_validate->add_option("file", path, "algebra JSON file")->required();

  auto* c_weights = app.add_subcommand("weights", "weight decomposition and checks");
  c_weights->add_option("--algebra", spec, "instance shorthand (w-2-1) or file")->required();
  c_weights->add_option("--p", p, "prime for shorthand specs");
  c_weights->add_option("--torus", torus_mode, "standard | search")
      ->check(CLI::IsMember({"standard", "search"}));
  c_weights->add_option("--restarts", restarts, "search restarts");
  add_seed(c_weights);

  auto* c_embed = app.add_subcommand("embed", "embed w-m-n into w-N-1 and report");
  c_embed->add_option("--m", m, "number of variables");
  c_embed->add_option("--n-vec", nvec, "comma-separated heights")->required();
  c_embed->add_option("--p", p, "prime");

  auto* c_lift = app.add_subcommand("lift", "lift a matrix to an automorphism of w-n-1");
  c_lift->add_option("--n", n, "number of variables");
  c_lift->add_option("--p", p, "prime");
  c_lift->add_option("--matrix", matrix_text, "rows ; separated, entries , separated")
      ->required();
  c_lift->add_option("--kind", kind, "weyl | demushkin")
      ->check(CLI::IsMember({"weyl", "demushkin"}));

  auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
  std::vector<std::string> names = suite_names();
  c_verify->add_option("suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(names));
  add_seed(c_verify);

  auto* c_search = app.add_subcommand("torus-search", "randomized maximal torus search");
  c_search->add_option("--algebra", spec, "instance shorthand or file")->required();
  c_search->add_option("--p", p, "prime for shorthand specs");
  c_search->add_option("--restarts", restarts, "independent restarts");
  add_seed(c_search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  seed = resolve_seed(seed_set, seed);
  try {
    if (*c_construct) return cmd_construct(family, n, m, nvec, p, no_pmap, out);
    if (*c_validate) return cmd_validate(path);
    if (*c_weights) return cmd_weights(spec, p, torus_mode, seed, restarts);
    if (*c_embed) return cmd_embed(m, nvec, p);
    if (*c_lift) return cmd_lift(n, p, matrix_text, kind);
    if (*c_verify) return cmd_verify(suite, seed);
    if (*c_search) return cmd_torus_search(spec, p, seed, restarts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
