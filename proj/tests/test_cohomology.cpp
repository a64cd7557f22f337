#include <doctest.h>

#include <functional>
#include <random>

#include "grcat/cohomology.hpp"
#include "grcat/error.hpp"
#include "grcat/snf.hpp"

using namespace grcat;

namespace {

ModulePtr make_mod(FiniteGroup g, AbelianGroup a,
                   std::vector<std::vector<AbelianGroup::Elem>> images) {
  return std::make_shared<const PiModule>(
      PiModule::make(std::move(g), std::move(a), std::move(images)));
}

ModulePtr trivial_mod(FiniteGroup g, AbelianGroup a) {
  return std::make_shared<const PiModule>(PiModule::trivial(std::move(g), std::move(a)));
}

ModulePtr z2_on_z2() { return trivial_mod(cyclic_group(2), AbelianGroup({2})); }
ModulePtr z2_on_z4_neg() { return make_mod(cyclic_group(2), AbelianGroup({4}), {{{1}}, {{3}}}); }

// Independent coboundary oracle: the bar-resolution formula evaluated naively
// on every tuple of the full group, identity included.
uint32_t naive_coboundary_at(const Cochain& c, const std::vector<int>& tuple) {
  const PiModule& mod = c.mod();
  const AbelianGroup& a = mod.carrier();
  const int n = c.degree();
  std::vector<int> sub(tuple.begin() + 1, tuple.end());
  uint32_t acc = mod.act(tuple[0], c.value_at(sub));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> merged;
    for (int j = 0; j < n; ++j) {
      if (j < i - 1)
        merged.push_back(tuple[j]);
      else if (j == i - 1)
        merged.push_back(mod.group().mul(tuple[i - 1], tuple[i]));
      else
        merged.push_back(tuple[j + 1]);
    }
    uint32_t term = c.value_at(merged);
    acc = (i % 2) ? a.sub_idx(acc, term) : a.add_idx(acc, term);
  }
  std::vector<int> front(tuple.begin(), tuple.end() - 1);
  uint32_t last = c.value_at(front);
  return ((n + 1) % 2) ? a.sub_idx(acc, last) : a.add_idx(acc, last);
}

void for_all_tuples(int order, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(len, 0);
  while (true) {
    fn(t);
    int pos = 0;
    while (pos < len && ++t[pos] == order) {
      t[pos] = 0;
      ++pos;
    }
    if (pos == len) return;
  }
}

}  // namespace

TEST_CASE("integer matrix smith normal form") {
  IMat a(3, 3);
  int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = vals[i][j];
  SmithForm f = smith_normal_form(a);
  REQUIRE(f.rank == 3);
  // d1 = gcd of entries = 2; d1 d2 = gcd of 2x2 minors = 4; product = |det| = 624.
  CHECK(f.diag[0] == 2);
  CHECK(f.diag[1] == 2);
  CHECK(f.diag[2] == 156);

  // U*A*V = D and the recorded inverses really invert.
  IMat d = f.u.mul(a).mul(f.v);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d.at(i, j) == (i == j ? f.diag[i] : bigint(0)));
  IMat uu = f.u.mul(f.uinv);
  IMat vv = f.v.mul(f.vinv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(uu.at(i, j) == (i == j ? 1 : 0));
      CHECK(vv.at(i, j) == (i == j ? 1 : 0));
    }
}

TEST_CASE("smith form on random matrices: transforms, solve, kernel") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 5), val(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int m = dim(rng), n = dim(rng);
    IMat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = val(rng);
    SmithForm f = smith_normal_form(a);

    IMat d = f.u.mul(a).mul(f.v);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        bigint expect = (i == j && i < f.rank) ? f.diag[i] : bigint(0);
        CHECK(d.at(i, j) == expect);
      }
    for (int i = 0; i + 1 < f.rank; ++i) CHECK(f.diag[i + 1] % f.diag[i] == 0);

    // Solvable right-hand sides round-trip.
    std::vector<bigint> x(n);
    for (auto& v : x) v = val(rng);
    auto sol = f.solve(a.mul_vec(x));
    REQUIRE(sol.has_value());
    CHECK(a.mul_vec(*sol) == a.mul_vec(x));

    // Kernel vectors are in the kernel and count matches the rank.
    auto kb = f.kernel_basis();
    CHECK(static_cast<int>(kb.size()) == n - f.rank);
    for (const auto& k : kb) {
      auto img = a.mul_vec(k);
      for (const auto& v : img) CHECK(v == 0);
    }
  }
}

TEST_CASE("lattice quotient presentation") {
  // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4.
  std::vector<std::vector<bigint>> basis = {{1, 0}, {0, 1}};
  std::vector<std::vector<bigint>> sub = {{2, 0}, {0, 4}};
  QuotientPresentation q = lattice_quotient(basis, sub);
  std::vector<bigint> expect = {2, 4};
  CHECK(q.invariant_factors == expect);
}

TEST_CASE("cochain storage and normalization") {
  ModulePtr m = z2_on_z4_neg();
  Cochain c(m, 2);
  CHECK(c.tuples() == 1);
  std::vector<int> t = {1, 1};
  c.set_value(t, 3);
  CHECK(c.value_at(t) == 3);
  t = {0, 1};
  CHECK(c.value_at(t) == 0);  // identity tuples vanish
  CHECK_THROWS_AS(c.set_value(t, 1), Error);
  CHECK_THROWS_AS(Cochain(m, 5), Error);

  Cochain d0(m, 0);
  d0.set_by_slot(0, 2);
  std::vector<int> empty;
  CHECK(d0.value_at(empty) == 2);
}

TEST_CASE("coboundary matches the hand-computed examples") {
  // (Z/2, Z/2 trivial): k(s,s) = 1 is a 2-cocycle.
  ModulePtr m = z2_on_z2();
  Cochain k(m, 2);
  std::vector<int> t = {1, 1};
  k.set_value(t, 1);
  Cochain dk = coboundary(k);
  CHECK(dk.is_zero());
  CHECK(is_cocycle(k));

  // xi(s,s,s) = 1 is a 3-cocycle (degree-4 coboundary vanishes everywhere).
  Cochain xi(m, 3);
  t = {1, 1, 1};
  xi.set_value(t, 1);
  CHECK(is_cocycle(xi));
  CHECK(coboundary(xi).is_zero());

  // Degree 0 over the negation module: (da)(g) = g a - a.
  ModulePtr neg = z2_on_z4_neg();
  Cochain a0(neg, 0);
  a0.set_by_slot(0, 1);
  Cochain da = coboundary(a0);
  t = {1};
  CHECK(da.value_at(t) == 2);  // (-1) - 1 = 2 mod 4

  CHECK_THROWS_WITH_AS(coboundary(Cochain(m, 4)), doctest::Contains("DegreeTooHigh"), Error);
}

TEST_CASE("coboundary agrees with the naive full-tuple oracle") {
  std::mt19937 rng(11);
  std::vector<ModulePtr> mods = {z2_on_z2(), z2_on_z4_neg(),
                                 trivial_mod(cyclic_group(3), AbelianGroup({3})),
                                 trivial_mod(dihedral_group(3), AbelianGroup({2}))};
  for (const auto& m : mods)
    for (int deg = 0; deg <= 2; ++deg)
      for (int trial = 0; trial < 5; ++trial) {
        Cochain c = Cochain::random(m, deg, rng);
        Cochain dc = coboundary(c);
        for_all_tuples(m->group().order(), deg + 1, [&](const std::vector<int>& t) {
          CHECK(dc.value_at(t) == naive_coboundary_at(c, t));
        });
      }
}

TEST_CASE("coboundary algebra: dd = 0 and additivity") {
  std::mt19937 rng(3);
  std::vector<ModulePtr> mods = {z2_on_z2(), z2_on_z4_neg(),
                                 trivial_mod(cyclic_group(3), AbelianGroup({3})),
                                 trivial_mod(dihedral_group(3), AbelianGroup({2}))};
  for (const auto& m : mods)
    for (int deg = 0; deg <= 2; ++deg)
      for (int trial = 0; trial < 10; ++trial) {
        Cochain c = Cochain::random(m, deg, rng);
        CHECK(coboundary(coboundary(c)).is_zero());
        Cochain c2 = Cochain::random(m, deg, rng);
        CHECK(coboundary(c.add(c2)) == coboundary(c).add(coboundary(c2)));
      }
}

TEST_CASE("solve_coboundary finds witnesses exactly when they exist") {
  std::mt19937 rng(5);
  std::vector<ModulePtr> mods = {z2_on_z2(), z2_on_z4_neg(),
                                 trivial_mod(cyclic_group(3), AbelianGroup({3}))};
  for (const auto& m : mods) {
    CohomologyContext ctx(m);
    for (int deg = 1; deg <= 3; ++deg) {
      auto w0 = ctx.solve_coboundary(Cochain::zero(m, deg));
      REQUIRE(w0.has_value());
      CHECK(coboundary(*w0).is_zero());
      for (int trial = 0; trial < 8; ++trial) {
        Cochain beta = Cochain::random(m, deg - 1, rng);
        Cochain z = coboundary(beta);
        auto w = ctx.solve_coboundary(z);
        REQUIRE(w.has_value());
        CHECK(coboundary(*w) == z);
      }
    }
  }

  // The nonzero class of H^3(Z/2, Z/2) has no witness; exhaustive search
  // over both normalized 2-cochains confirms.
  ModulePtr m = z2_on_z2();
  Cochain xi(m, 3);
  std::vector<int> t = {1, 1, 1};
  xi.set_value(t, 1);
  CohomologyContext ctx(m);
  CHECK_FALSE(ctx.solve_coboundary(xi).has_value());
  for (uint32_t v = 0; v < 2; ++v) {
    Cochain g(m, 2);
    g.set_by_slot(0, v);
    CHECK_FALSE(coboundary(g) == xi);
  }

  // Non-cocycle inputs are rejected: k(s,s) = 1 over the negation module.
  ModulePtr neg = z2_on_z4_neg();
  Cochain bad(neg, 2);
  bad.set_by_slot(0, 1);
  REQUIRE_FALSE(is_cocycle(bad));
  CohomologyContext nctx(neg);
  CHECK_THROWS_WITH_AS(nctx.solve_coboundary(bad), doctest::Contains("NotACocycle"), Error);
}

TEST_CASE("solve_coboundary completeness at brute-force scale") {
  std::vector<ModulePtr> mods = {z2_on_z2(), z2_on_z4_neg()};
  for (const auto& m : mods) {
    CohomologyContext ctx(m);
    const AbelianGroup& a = m->carrier();
    for (int deg = 2; deg <= 3; ++deg) {
      for (const Cochain& z : ctx.all_cocycles(deg)) {
        bool found = false;
        size_t lower_tuples = Cochain(m, deg - 1).tuples();
        std::vector<uint32_t> vals(lower_tuples, 0);
        while (true) {
          Cochain alpha(m, deg - 1);
          for (size_t i = 0; i < lower_tuples; ++i) alpha.set_by_slot(i, vals[i]);
          if (coboundary(alpha) == z) {
            found = true;
            break;
          }
          size_t pos = 0;
          while (pos < lower_tuples && ++vals[pos] == static_cast<uint32_t>(a.order())) {
            vals[pos] = 0;
            ++pos;
          }
          if (pos == lower_tuples) break;
        }
        CHECK(ctx.solve_coboundary(z).has_value() == found);
      }
    }
  }
}

TEST_CASE("cohomology groups: pinned values") {
  ModulePtr m = trivial_mod(cyclic_group(3), AbelianGroup({4}));
  for (auto method : {CohomologyMethod::snf, CohomologyMethod::brute_force}) {
    CohomologyGroup h0 = cohomology_group(m, 0, method);
    CHECK(h0.invariant_factors == std::vector<int64_t>{4});
  }
  // Fixed points of the negation action on Z/4 are {0, 2}.
  CohomologyGroup h0n = cohomology_group(z2_on_z4_neg(), 0, CohomologyMethod::snf);
  CHECK(h0n.invariant_factors == std::vector<int64_t>{2});

  CHECK(cohomology_group(z2_on_z2(), 1, CohomologyMethod::snf).invariant_factors ==
        std::vector<int64_t>{2});
  CHECK(cohomology_group(z2_on_z2(), 2, CohomologyMethod::brute_force).invariant_factors ==
        std::vector<int64_t>{2});
  CHECK(cohomology_group(z2_on_z2(), 3, CohomologyMethod::brute_force).invariant_factors ==
        std::vector<int64_t>{2});
  CHECK(cohomology_group(z2_on_z4_neg(), 3, CohomologyMethod::snf).invariant_factors ==
        std::vector<int64_t>{2});
  CHECK(cohomology_group(trivial_mod(cyclic_group(3), AbelianGroup({3})), 2,
                         CohomologyMethod::snf)
            .invariant_factors == std::vector<int64_t>{3});
  CHECK(cohomology_group(trivial_mod(cyclic_group(2), AbelianGroup({3})), 2,
                         CohomologyMethod::snf)
            .invariant_factors.empty());
  ModulePtr tm = trivial_mod(trivial_group(), AbelianGroup({6}));
  CHECK(cohomology_group(tm, 2, CohomologyMethod::snf).invariant_factors.empty());
  CHECK(cohomology_group(tm, 0, CohomologyMethod::snf).invariant_factors ==
        std::vector<int64_t>{6});
}

TEST_CASE("representatives are cocycles and generate") {
  for (const auto& m : {z2_on_z2(), z2_on_z4_neg()}) {
    CohomologyContext ctx(m);
    for (int deg = 1; deg <= 3; ++deg) {
      CohomologyGroup h = ctx.group(deg, CohomologyMethod::snf);
      for (const auto& rep : h.representatives) CHECK(is_cocycle(rep));
      // Every cocycle is an integer combination of representatives plus a
      // coboundary.
      for (const Cochain& z : ctx.all_cocycles(deg)) {
        bool matched = false;
        std::vector<int64_t> counter(h.invariant_factors.size(), 0);
        while (true) {
          Cochain combo = Cochain::zero(m, deg);
          for (size_t i = 0; i < counter.size(); ++i)
            combo = combo.add(h.representatives[i].scalar_mul(counter[i]));
          if (ctx.solve_coboundary(z.sub(combo)).has_value()) {
            matched = true;
            break;
          }
          size_t pos = 0;
          while (pos < counter.size() && ++counter[pos] == h.invariant_factors[pos]) {
            counter[pos] = 0;
            ++pos;
          }
          if (pos == counter.size()) break;
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("method agreement across a module matrix") {
  std::vector<FiniteGroup> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                     direct_product(cyclic_group(2), cyclic_group(2))};
  std::vector<AbelianGroup> coeffs = {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4})};
  int compared = 0;
  for (const auto& g : groups)
    for (const auto& a : coeffs)
      for (const auto& mod : all_modules(g, a)) {
        auto m = std::make_shared<const PiModule>(mod);
        CohomologyContext ctx(m);
        for (int deg = 1; deg <= 3; ++deg) {
          CohomologyGroup snf = ctx.group(deg, CohomologyMethod::snf);
          try {
            CohomologyGroup brute = ctx.group(deg, CohomologyMethod::brute_force);
            CHECK(snf.invariant_factors == brute.invariant_factors);
            ++compared;
          } catch (const Error& e) {
            CHECK(e.code() == errc::brute_force_too_large);
          }
        }
      }
  CHECK(compared >= 20);
}

TEST_CASE("classes_of: one representative per class, pairwise non-cohomologous") {
  ModulePtr m = z2_on_z2();
  CohomologyContext ctx(m);
  auto classes = ctx.classes(2);
  CHECK(classes.size() == 2);
  CHECK(classes[0].is_zero());
  std::vector<int> t = {1, 1};
  CHECK(classes[1].value_at(t) == 1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      CHECK_FALSE(ctx.solve_coboundary(classes[i].sub(classes[j])).has_value());

  ModulePtr m23 = trivial_mod(cyclic_group(2), AbelianGroup({3}));
  CohomologyContext ctx23(m23);
  auto one = ctx23.classes(2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_zero());

  CHECK(ctx.classes(3).size() == 2);
}

TEST_CASE("brute force guard") {
  ModulePtr m = trivial_mod(dihedral_group(3), AbelianGroup({4}));
  CHECK_THROWS_WITH_AS(cohomology_group(m, 3, CohomologyMethod::brute_force),
                       doctest::Contains("BruteForceTooLarge"), Error);
  CHECK_NOTHROW(cohomology_group(m, 1, CohomologyMethod::brute_force, int64_t{1} << 13));
}
