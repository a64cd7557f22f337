#include <doctest.h>

#include <algorithm>

#include "grcat/catalog.hpp"
#include "grcat/error.hpp"
#include "grcat/kernel.hpp"
#include "grcat/kernel_search.hpp"
#include "grcat/strictify.hpp"

using namespace grcat;

namespace {

GroupDataPtr data_for(const std::string& name) {
  for (const auto& entry : small_group_catalog())
    if (entry.name == name) return std::make_shared<const GroupData>(entry.group);
  REQUIRE(false);
  return nullptr;
}

const FiniteGroup& catalog_group(const std::string& name) {
  for (const auto& entry : small_group_catalog())
    if (entry.name == name) return entry.group;
  static FiniteGroup dummy;
  REQUIRE(false);
  return dummy;
}

}  // namespace

TEST_CASE("factor sets") {
  // (Z/2, Z/4, psi = id): the section {id, inversion} is a subgroup of Aut,
  // so f is identically the identity element.
  GroupDataPtr c4 = data_for("C4");
  AbstractKernel k = AbstractKernel::make(cyclic_group(2), c4, {0, 1});
  FactorSet fs = factor_set(k);
  CHECK(fs.phi == std::vector<int>{0, 1});
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(fs.f[x][y] == c4->group().identity());
  CHECK_NOTHROW(validate_factor_set(k, fs));

  // Trivial base group.
  AbstractKernel ktriv = AbstractKernel::make(trivial_group(), c4, {0});
  FactorSet fstriv = factor_set(ktriv);
  CHECK(fstriv.f[0][0] == c4->group().identity());

  // Trivial psi: phi is constantly the identity automorphism, f is trivial.
  GroupDataPtr q8 = data_for("Q8");
  AbstractKernel kq = AbstractKernel::make(cyclic_group(2), q8, {0, 0});
  FactorSet fsq = factor_set(kq);
  CHECK(fsq.phi == std::vector<int>{0, 0});
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(fsq.f[x][y] == q8->group().identity());

  // Nontrivial psi into Out(Q8) = S3: the invariants still hold.
  const FiniteGroup& out = q8->aut().out;
  for (int target = 0; target < out.order(); ++target) {
    if (out.element_order(target) != 2) continue;
    AbstractKernel kn = AbstractKernel::make(cyclic_group(2), q8, {out.identity(), target});
    CHECK_NOTHROW(validate_factor_set(kn, factor_set(kn)));
  }
}

TEST_CASE("kernel obstruction: zero cases and class invariance") {
  GroupDataPtr c4 = data_for("C4");
  AbstractKernel k = AbstractKernel::make(cyclic_group(2), c4, {0, 1});
  CHECK(kernel_obstruction(k).is_zero());

  GroupDataPtr s3 = data_for("S3");
  AbstractKernel ks = AbstractKernel::make(cyclic_group(2), s3, {0, 0});
  CHECK(kernel_obstruction(ks).is_zero());  // trivial center forces it

  // Class invariance under re-chosen tie-breaks.
  GroupDataPtr q8 = data_for("Q8");
  const FiniteGroup& out = q8->aut().out;
  for (int target = 0; target < out.order(); ++target) {
    if (out.element_order(target) > 2) continue;
    AbstractKernel kq = AbstractKernel::make(cyclic_group(2), q8, {out.identity(), target});
    Cochain base = kernel_obstruction(kq);
    CohomologyContext ctx(base.module());
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      Cochain other = kernel_obstruction(kq, factor_set(kq, TieBreak::randomized, seed));
      CHECK(ctx.solve_coboundary(other.sub(base)).has_value());
    }
  }
}

TEST_CASE("build_extension") {
  // psi trivial with trivial factor set gives the direct product.
  GroupDataPtr c4 = data_for("C4");
  AbstractKernel ktriv = AbstractKernel::make(cyclic_group(2), c4, {0, 0});
  FiniteGroup direct = build_extension(ktriv, factor_set(ktriv));
  CHECK(direct.order() == 8);
  CHECK(find_isomorphism(direct, catalog_group("C4xC2")).has_value());

  // (Z/4 by Z/2, psi = id, f = 0) is the dihedral group of order 8.
  AbstractKernel k = AbstractKernel::make(cyclic_group(2), c4, {0, 1});
  FiniteGroup e = build_extension(k, factor_set(k));
  CHECK(e.order() == 8);
  CHECK(find_isomorphism(e, catalog_group("D8")).has_value());
  CHECK_FALSE(find_isomorphism(e, catalog_group("Q8")).has_value());

  // G embeds normally as (a, 1) with quotient the base group.
  std::vector<int> embedded;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      int prod = e.mul(a * 2, b * 2);  // (a,x) encoded a*|Pi|+x
      CHECK(prod % 2 == 0);
    }
    embedded.push_back(a * 2);
  }
  FiniteGroup quotient = quotient_group(e, embedded);
  CHECK(quotient.order() == 2);

  // Trivial base group reproduces G.
  AbstractKernel kid = AbstractKernel::make(trivial_group(), c4, {0});
  CHECK(find_isomorphism(build_extension(kid, factor_set(kid)), c4->group()).has_value());
}

TEST_CASE("strictified kernel categories") {
  // Trivial base group: the category is the inner coset of the identity.
  GroupDataPtr s3 = data_for("S3");
  AbstractKernel kid = AbstractKernel::make(trivial_group(), s3, {0});
  StrictGrCat cid = strictify(kid);
  CHECK(cid.n_obj() == 6);  // Inn(S3) = S3

  // (Z/4, Z/2, psi = id): two objects with hom sets of size 4 on matching
  // fibers.
  GroupDataPtr c4 = data_for("C4");
  AbstractKernel k = AbstractKernel::make(cyclic_group(2), c4, {0, 1});
  StrictGrCat c = strictify(k);
  CHECK(c.n_obj() == 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(c.hom(x, y).size() == (x == y ? 4u : 0u));

  // (S3, Z/2, psi trivial): 12 objects (two copies of Inn(S3)).
  AbstractKernel ks = AbstractKernel::make(cyclic_group(2), s3, {0, 0});
  CHECK(strictify(ks).n_obj() == 12);
}

TEST_CASE("verification pipeline on the pinned kernels") {
  GroupDataPtr c4 = data_for("C4");
  AbstractKernel k1 = AbstractKernel::make(cyclic_group(2), c4, {0, 1});
  StrictificationReport r1 = verify_strictification(k1);
  CHECK(r1.ok());
  CHECK(r1.checks.size() == 4);

  GroupDataPtr s3 = data_for("S3");
  AbstractKernel k2 = AbstractKernel::make(cyclic_group(2), s3, {0, 0});
  CHECK(verify_strictification(k2).ok());

  GroupDataPtr q8 = data_for("Q8");
  const FiniteGroup& out = q8->aut().out;
  for (const auto& image : all_homomorphisms(cyclic_group(2), out)) {
    AbstractKernel kq = AbstractKernel::make(cyclic_group(2), q8, image);
    CHECK_MESSAGE(verify_strictification(kq).ok(), "Q8 psi -> " << image[1]);
  }
}

TEST_CASE("kernel search on the trivial type") {
  ModulePtr m = std::make_shared<const PiModule>(
      PiModule::trivial(cyclic_group(2), AbelianGroup({})));
  GrType t = GrType::strict(m);
  KernelSearchResult result = kernel_search(t, small_group_catalog());
  CHECK(result.skipped.empty());
  // Exactly the centerless catalog groups qualify, each with every psi.
  std::vector<std::string> names;
  for (const auto& match : result.matches) names.push_back(match.group_name);
  for (const char* expected : {"C1", "S3", "D10", "A4", "D14"})
    CHECK(std::count(names.begin(), names.end(), expected) >= 1);
  // S3 has trivial Out: exactly one kernel.
  CHECK(std::count(names.begin(), names.end(), "S3") == 1);
  // Every matched group really has trivial center.
  for (const auto& match : result.matches)
    CHECK(center(catalog_group(match.group_name)).group.order() == 1);
}

TEST_CASE("kernel search finds the negation type realizations") {
  ModulePtr neg = std::make_shared<const PiModule>(
      PiModule::make(cyclic_group(2), AbelianGroup({4}), {{{1}}, {{3}}}));
  GrType t = GrType::strict(neg);
  KernelSearchResult result = kernel_search(t, small_group_catalog());
  bool has_c4 = false;
  for (const auto& match : result.matches)
    has_c4 = has_c4 || (match.group_name == "C4" && match.psi_image == std::vector<int>{0, 1});
  CHECK(has_c4);
}
