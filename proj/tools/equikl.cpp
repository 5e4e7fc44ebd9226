/* Command-line front end.
 *
 * Subcommands:
 *   kl / z           equivariant P- or Z-polynomial (text or --json)
 *   gamma            gamma expansion of Z with a positivity verdict
 *   delete           deletion-route computation cross-checked against the
 *                    defining recursion restricted to the stabilizer
 *   nonequivariant   integer P and Z
 *   survey-gamma     per-n gamma verdicts for a one-parameter family
 *   verify           the bundled verification suites
 *
 * Exit codes: 0 success, 1 parse or usage error, 2 mathematical
 * precondition violation, 3 internal invariant breach or mismatch. */

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <equikl/equikl.hpp>

namespace {

using namespace equikl;

YoungGroup group_for(const Matroid& m, const std::string& blocks_text) {
  if (blocks_text.empty()) return YoungGroup::singletons(m.ground());
  return YoungGroup(parse_blocks(blocks_text));
}

void print_graded(const std::string& name, const GradedVirtualRep& f, bool as_json) {
  if (as_json) {
    std::cout << graded_to_json(f).dump(2) << "\n";
  } else {
    std::cout << name << ":\n" << render_graded(f);
  }
}

int parse_group_size(const std::string& text) {
  if (text.size() < 2 || text[0] != 'S')
    throw parse_error("group must look like S2, S3, ... in '" + text + "'");
  size_t i = 1;
  const int v = equikl::detail::parse_int_at(text, i, "group '" + text + "'");
  if (i != text.size()) throw parse_error("trailing characters in group '" + text + "'");
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Equivariant Kazhdan-Lusztig and Z-polynomials of matroids"};
  app.require_subcommand(1);

  std::string matroid_spec, blocks_text, family = "corank1", group_text = "S2", suite;
  int element = 0, max_n = 10;
  bool as_json = false;

  auto add_matroid_opts = [&](CLI::App* cmd, bool with_blocks) {
    cmd->add_option("--matroid", matroid_spec,
                    "family spec (uniform:k,n cycle:n glued:a,b lambda:r,k,h,n "
                    "boolean:n) or path to a JSON file")
        ->required();
    if (with_blocks)
      cmd->add_option("--blocks", blocks_text,
                      "group blocks, e.g. \"{1,2}|{3}\"; omitted = all singletons");
  };

  CLI::App* kl_cmd = app.add_subcommand("kl", "equivariant P-polynomial");
  add_matroid_opts(kl_cmd, true);
  kl_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* z_cmd = app.add_subcommand("z", "equivariant Z-polynomial");
  add_matroid_opts(z_cmd, true);
  z_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* gamma_cmd =
      app.add_subcommand("gamma", "gamma expansion of the Z-polynomial");
  add_matroid_opts(gamma_cmd, true);
  gamma_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* delete_cmd = app.add_subcommand(
      "delete", "deletion-route P and Z, cross-checked against the recursion");
  add_matroid_opts(delete_cmd, true);
  delete_cmd->add_option("--element", element, "ground element to delete")->required();

  CLI::App* plain_cmd =
      app.add_subcommand("nonequivariant", "integer P- and Z-polynomials");
  add_matroid_opts(plain_cmd, false);
  plain_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* survey_cmd = app.add_subcommand(
      "survey-gamma", "gamma verdicts across a one-parameter family");
  survey_cmd->add_option("--family", family, "corank1 or boolean")->required();
  survey_cmd->add_option("--group", group_text, "permuted prefix, e.g. S2");
  survey_cmd->add_option("--max-n", max_n, "largest ground-set size")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "paper or properties")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  KlEngine& engine = default_engine();
  load_cache(engine);

  if (kl_cmd->parsed() || z_cmd->parsed()) {
    const Matroid m = matroid_from_spec_or_file(matroid_spec);
    const EquivariantMatroid em(m, group_for(m, blocks_text));
    if (kl_cmd->parsed())
      print_graded("P", engine.kl(em), as_json);
    else
      print_graded("Z", engine.zpoly(em), as_json);
  } else if (gamma_cmd->parsed()) {
    const Matroid m = matroid_from_spec_or_file(matroid_spec);
    const EquivariantMatroid em(m, group_for(m, blocks_text));
    const GammaExpansion ge = gamma_expansion(engine.zpoly(em), m.rank());
    if (as_json) {
      ordered_json j;
      j["positive"] = ge.positive;
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : ge.coefficients) coeffs.push_back(rep_to_json(c));
      j["gamma"] = std::move(coeffs);
      std::cout << j.dump(2) << "\n";
    } else {
      for (size_t j = 0; j < ge.coefficients.size(); ++j)
        std::cout << "Γ_" << j << " = " << render_virtual_rep(ge.coefficients[j])
                  << "\n";
      if (ge.positive) {
        std::cout << "Gamma-positive\n";
      } else {
        size_t j = 0;
        while (ge.coefficients[j].is_honest()) ++j;
        std::cout << "NOT Gamma-positive; witness Γ_" << j << " = "
                  << render_virtual_rep(ge.coefficients[j]) << "\n";
      }
    }
  } else if (delete_cmd->parsed()) {
    const Matroid m = matroid_from_spec_or_file(matroid_spec);
    const EquivariantMatroid em(m, group_for(m, blocks_text));
    const YoungGroup wi = stabilizer_of_point(em.group(), element);
    const KlPair via_deletion = engine.deletion_formula(em, element);
    const KlPair direct = engine.compute(em);
    std::cout << "P:\n" << render_graded(via_deletion.p);
    std::cout << "Z:\n" << render_graded(via_deletion.z);
    const bool match = via_deletion.p == graded_restrict(direct.p, wi) &&
                       via_deletion.z == graded_restrict(direct.z, wi);
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!match) return 3;
  } else if (plain_cmd->parsed()) {
    const Matroid m = matroid_from_spec_or_file(matroid_spec);
    const EquivariantMatroid em(m, YoungGroup::singletons(m.ground()));
    const KlPair pair = engine.compute(em);
    const auto p = dimension_polynomial(pair.p);
    const auto z = dimension_polynomial(pair.z);
    if (as_json) {
      ordered_json j;
      j["P"] = ordered_json::array();
      for (const auto& [d, c] : p) j["P"].push_back({d, c});
      j["Z"] = ordered_json::array();
      for (const auto& [d, c] : z) j["Z"].push_back({d, c});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "P = " << render_int_poly(p) << "\n";
      std::cout << "Z = " << render_int_poly(z) << "\n";
    }
  } else if (survey_cmd->parsed()) {
    const int prefix = parse_group_size(group_text);
    for (const auto& row : survey_gamma(family, prefix, max_n, engine))
      std::cout << "n=" << row.n << ": "
                << (row.positive ? "Gamma-positive" : "NOT Gamma-positive") << "\n";
  } else if (verify_cmd->parsed()) {
    std::vector<int> criteria;
    if (suite == "paper")
      criteria = {1, 2, 3, 4, 6};
    else if (suite == "properties")
      criteria = {5, 7, 8};
    else
      throw parse_error("unknown suite '" + suite + "' (expected paper or properties)");
    int failures = 0;
    for (int c : criteria)
      for (const auto& r : run_criterion(c, engine)) {
        std::cout << (r.ok ? "ok" : "FAIL") << ": " << r.label
                  << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        if (!r.ok) ++failures;
      }
    if (failures > 0) {
      std::cout << failures << " checks failed\n";
      return 3;
    }
    std::cout << "all checks passed\n";
  }

  save_cache(engine);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const equikl::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const equikl::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const equikl::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
