#include <doctest.h>

#include <set>

#include "support.hpp"
#include "trivalent/blocks.hpp"
#include "trivalent/colorauto.hpp"
#include "trivalent/oracle.hpp"

using namespace trivalent;
using testsupport::from1;

namespace {

std::set<Perm> coset_elements(const Coset& coset) {
  if (coset.empty) return {};
  std::set<Perm> out;
  const std::vector<Perm> group =
      coset.gens.empty() ? std::vector<Perm>{Perm(coset.rep.degree())}
                         : oracle::enumerate_group(coset.gens);
  for (const Perm& g : group) out.insert(compose(coset.rep, g));
  return out;
}

std::set<Perm> brute_set(const std::vector<Perm>& gens, const Perm& sigma,
                         const ColoredDomain& dom, const PointSet& b) {
  const auto v = oracle::brute_color_aut(gens, sigma, dom, b);
  return {v.begin(), v.end()};
}

const std::vector<Perm> kKleinGens{parse_cycles("(1 3)(2 4)", 4),
                                   parse_cycles("(1 2)(3 4)", 4)};

// colors 1-based: c(1)=c(3)=0 (red), c(2)=c(4)=1 (blue)
const ColoredDomain kRedBlue = ColoredDomain::points(4, {0, 1, 0, 1});

}  // namespace

TEST_CASE("singleton constraint keeps the coset when colors agree") {
  const Coset input = Coset::of(Perm(4), kKleinGens);
  const Coset result = c_b(input, {0}, kRedBlue);
  CHECK(coset_elements(result) == coset_elements(input));
}

TEST_CASE("color clash under a trivial group is empty") {
  // sigma sends the red point 1 onto the blue point 2
  const Coset input = Coset::of(parse_cycles("(1 2)", 4), {});
  const Coset result = c_b(input, {0}, kRedBlue);
  CHECK(result.empty);
}

TEST_CASE("Klein four-group with the red/blue coloring") {
  const Coset result = c_b(Coset::of(Perm(4), kKleinGens), {0, 1, 2, 3},
                           kRedBlue, {.generators_are_sgs = false});
  REQUIRE_FALSE(result.empty);
  const std::set<Perm> expected{Perm(4), parse_cycles("(1 3)(2 4)", 4)};
  CHECK(coset_elements(result) == expected);
}

TEST_CASE("color_count_precheck") {
  SUBCASE("monochrome acceptance") {
    const ColoredDomain mono = ColoredDomain::points(4, {0, 0, 0, 0});
    CHECK(color_count_precheck(Coset::of(parse_cycles("(1 2 3 4)", 4), {}),
                               {0, 1, 2, 3}, mono) == Precheck::kAcceptWhole);
  }
  SUBCASE("count mismatch rejection") {
    // b = {1,2} holds 2 reds, its image {2,3} only one
    const ColoredDomain dom = ColoredDomain::points(4, {0, 0, 1, 1});
    const Perm sigma = parse_cycles("(1 2 3 4)", 4);
    CHECK(color_count_precheck(Coset::of(sigma, {}), {0, 1}, dom) ==
          Precheck::kReject);
  }
  SUBCASE("matched counts stay inconclusive and recursion refines") {
    // the identity keeps all counts yet only half the Klein group survives
    const Coset input = Coset::of(Perm(4), kKleinGens);
    CHECK(color_count_precheck(input, {0, 1, 2, 3}, kRedBlue) ==
          Precheck::kInconclusive);
    const Coset refined = c_b(input, {0, 1, 2, 3}, kRedBlue,
                              {.generators_are_sgs = false});
    CHECK(coset_elements(refined).size() == 2);
    CHECK(coset_elements(refined) !=
          coset_elements(Coset::of(Perm(4), kKleinGens)));
  }
}

TEST_CASE("non-2-groups are detected at the transitive split") {
  const std::vector<Perm> s3{parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  const ColoredDomain dom = ColoredDomain::points(3, {0, 0, 1});
  CHECK_THROWS_AS(c_b(Coset::of(Perm(3), s3), {0, 1, 2}, dom,
                      {.generators_are_sgs = false}),
                  std::invalid_argument);
}

TEST_CASE("unstable constraint is an error") {
  // alphabet misses the image of {1}: pass a subset alphabet
  const std::vector<PointSet> elements{{0}, {2}};
  const ColoredDomain dom(elements, {0, 0});
  CHECK_THROWS_AS(c_b(Coset::of(parse_cycles("(1 2)", 3), {}), {0}, dom),
                  std::invalid_argument);
}

TEST_CASE("empty coset propagates") {
  CHECK(c_b(Coset::empty_coset(), {0}, kRedBlue).empty);
}

TEST_CASE("random 2-groups match the exhaustive filter in every mode") {
  Rng rng(60601);
  int nonempty = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int degree = 4 + rng.uniform(7);  // up to 10
    const Sgs sgs = testsupport::random_2group_sgs(degree, rng, 6);

    std::vector<int> colors(degree);
    const int palette = 2 + rng.uniform(3);
    for (int& c : colors) c = rng.uniform(palette);
    const ColoredDomain dom = ColoredDomain::points(degree, colors);

    const Perm sigma = rng.uniform(2) ? random_perm(degree, rng) : Perm(degree);
    PointSet b;
    {
      PointSet all(degree);
      for (int x = 0; x < degree; ++x) all[x] = x;
      // b must be a union of orbits
      for (const PointSet& orbit : orbits(sgs, all))
        if (rng.uniform(3)) b.insert(b.end(), orbit.begin(), orbit.end());
      std::sort(b.begin(), b.end());
      if (b.empty()) b = all;
    }

    const std::set<Perm> expected = brute_set(sgs, sigma, dom, b);

    const Coset input = Coset::of(sigma, sgs);
    const Coset direct_sgs = c_b(input, b, dom, {.generators_are_sgs = true});
    const Coset direct_chain =
        c_b(input, b, dom, {.generators_are_sgs = false});
    const Coset guided = c_b(input, b, dom,
                             {.generators_are_sgs = true,
                              .use_structure_tree = true});

    CHECK(coset_elements(direct_sgs) == expected);
    CHECK(coset_elements(direct_chain) == expected);
    CHECK(coset_elements(guided) == expected);
    if (!expected.empty()) ++nonempty;

    // the left-coset law: a non-empty answer is rep * C_b(idG)
    if (!direct_sgs.empty) {
      const Coset subgroup = c_b(Coset::of(Perm(degree), sgs), b, dom);
      REQUIRE_FALSE(subgroup.empty);
      std::set<Perm> rebuilt;
      for (const Perm& g : coset_elements(subgroup))
        rebuilt.insert(compose(direct_sgs.rep, compose(inverse(subgroup.rep), g)));
      CHECK(rebuilt == expected);
    }
  }
  CHECK(nonempty > 20);
}

TEST_CASE("decomposition laws on enumerated instances") {
  Rng rng(8080);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 4 + rng.uniform(5);
    const Sgs sgs = testsupport::random_2group_sgs(degree, rng, 5);
    std::vector<int> colors(degree);
    for (int& c : colors) c = rng.uniform(3);
    const ColoredDomain dom = ColoredDomain::points(degree, colors);
    const Perm sigma = random_perm(degree, rng);

    PointSet all(degree);
    for (int x = 0; x < degree; ++x) all[x] = x;
    const std::vector<PointSet> parts = orbits(sgs, all);
    if (parts.size() < 2) continue;

    // C_{B u B'}(T) = C_B(C_{B'}(T)) over a stable split
    PointSet b1 = parts[0], b2;
    for (std::size_t k = 1; k < parts.size(); ++k)
      b2.insert(b2.end(), parts[k].begin(), parts[k].end());
    std::sort(b2.begin(), b2.end());
    PointSet joined = b1;
    joined.insert(joined.end(), b2.begin(), b2.end());
    std::sort(joined.begin(), joined.end());

    const Coset input = Coset::of(sigma, sgs);
    const auto one_shot = coset_elements(c_b(input, joined, dom));
    const auto nested = coset_elements(c_b(c_b(input, b2, dom), b1, dom));
    CHECK(one_shot == nested);

    // C_B(T u T') = C_B(T) u C_B(T') with T' = sigma' G for another rep
    const Perm sigma2 = random_perm(degree, rng);
    std::set<Perm> united = coset_elements(c_b(input, b1, dom));
    for (const Perm& g : coset_elements(c_b(Coset::of(sigma2, sgs), b1, dom)))
      united.insert(g);
    std::set<Perm> expected = brute_set(sgs, sigma, dom, b1);
    for (const Perm& g : brute_set(sgs, sigma2, dom, b1)) expected.insert(g);
    CHECK(united == expected);
  }
}
