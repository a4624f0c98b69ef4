// Every invariant is reachable from `verify`, and reports follow the schema.

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>

#include "appellkit/errors.hpp"
#include "appellkit/verify.hpp"

using namespace appellkit;

namespace {

// One entry per stated invariant, grouped by module.
const std::map<std::string, std::vector<std::string>>& required() {
  static const std::map<std::string, std::vector<std::string>> r = {
      {"appell",
       {"fueter_regularity", "appell_property", "ck_product", "pk_ck_closure", "fueter_image_monomials", "tjk_row_sums",
        "tjk_pochhammer", "ck_pairs", "qk_modulus_bound", "qk_restrictions", "ck_extension_roundtrip", "eval_ring_real",
        "appell_expand_roundtrip", "gegenbauer_fit", "exp_truncated_real", "fueter_variables"}},
      {"spaces",
       {"orthonormal_basis", "pointwise_bound", "kernel_tail_honesty", "kernel_closed_forms", "kernel_hermitian",
        "reproducing_property", "inner_product_axioms", "series_real_axis", "weight_guards"}},
      {"operators",
       {"commutator_difference", "commutator_composites_reading", "gamma_recurrence", "weighted_commutator_identity",
        "weighted_commutator_iff", "adjoint_S_fock", "adjoint_M_hardy", "shift_isometry_hardy", "norm_identity_fock",
        "number_operator", "annihilate_symbolic", "shift_S_ck_product", "backward_M_ck_inverse", "backward_M_basis",
        "backward_R_equals_M", "backward_R_partial", "backward_inequality"}},
      {"transforms",
       {"hermite_orthonormality", "gaussian_moments", "bf_isometry_coefficient", "bf_isometry_quadrature",
        "bf_hermite_units", "bs_inverse_modes", "bs_inverse_isometry", "upsilon_modes", "upsilon_unit_independence",
        "upsilon_monomials", "upsilon_pointwise", "kernel_AS_closed_form", "kernel_AF_real_axis", "kernel_AF_tail",
        "kernel_L_selfproduct", "exponential_integrals"}},
      {"fmr",
       {"tau_commuting_square", "fmr_norm_identity", "fmr_isometry_corollary", "fmr_range_preimage", "table1",
        "b_from_c", "fmr_convergence"}},
  };
  return r;
}

}  // namespace

TEST(Manifest, EveryInvariantRegisteredUnderItsSuite) {
  std::set<std::pair<std::string, std::string>> have;
  for (const auto& e : invariant_manifest()) {
    have.insert(e);
  }
  for (const auto& [suite, names] : required()) {
    for (const auto& n : names) {
      EXPECT_TRUE(have.count({suite, n})) << suite << "/" << n;
    }
  }
}

TEST(Manifest, NoUnlistedIdentities) {
  std::size_t listed = 0;
  for (const auto& [suite, names] : required()) {
    listed += names.size();
  }
  EXPECT_EQ(invariant_manifest().size(), listed);
}

TEST(Manifest, NamesUniqueAndSuitesKnown) {
  std::set<std::string> names;
  const auto& suites = suite_names();
  for (const auto& [suite, name] : invariant_manifest()) {
    EXPECT_TRUE(names.insert(name).second) << "duplicate " << name;
    EXPECT_NE(std::find(suites.begin(), suites.end(), suite), suites.end()) << suite;
  }
}

TEST(Manifest, UnknownIdentityAndSuite) {
  EXPECT_THROW((void)run_identity("no_such_identity", RunConfig{}), DomainError);
  EXPECT_THROW((void)run_suite("no_such_suite", RunConfig{}), DomainError);
}

TEST(Manifest, ReportMatchesSchema) {
  std::ifstream in(std::string(APPELLKIT_SOURCE_DIR) + "/docs/report.schema.json");
  ASSERT_TRUE(in);
  nlohmann::json schema;
  in >> schema;
  Report r{"fmr", RunConfig{}, {run_identity("table1", RunConfig{})}};
  const auto j = to_json(r);
  for (const auto& key : schema.at("required")) {
    EXPECT_TRUE(j.contains(key.get<std::string>())) << key;
  }
  const auto& item = schema.at("properties").at("results").at("items");
  for (const auto& key : item.at("required")) {
    EXPECT_TRUE(j.at("results")[0].contains(key.get<std::string>())) << key;
  }
  for (const auto& key : schema.at("properties").at("config").at("required")) {
    EXPECT_TRUE(j.at("config").contains(key.get<std::string>())) << key;
  }
}
