#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycl/axioms.hpp"
#include "cycl/modelzoo.hpp"

using namespace cycl;
using Q = Rational;

namespace {

template <class F>
CyclicCochain<F> delta(const AInftyData<F>& data, const Word& w) {
    CyclicCochain<F> f;
    CyclicClass c = canonicalize(data, w);
    REQUIRE_FALSE(c.vanishes);
    f.support[c.representative] = sign_of<F>(c.sign_to_rep == -1 ? 1 : 0);
    return f;
}

}  // namespace

TEST_CASE("bracket with no paired letters is zero") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    LieBialgebra<Q> lb(s2, form);
    GenId v = *s2.find_gen(0, 0, "v");
    // <v, v> = 0: bracket of [v] with [v|v|v] has no contraction
    auto out = lb.bracket(delta(s2, {v}), delta(s2, {v, v, v}));
    CHECK(out.support.empty());
}

TEST_CASE("bracket of two length-1 classes hits the empty-word rule") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    GenId one = *s2.find_gen(0, 0, "1"), v = *s2.find_gen(0, 0, "v");

    LieBialgebra<Q> drop(s2, form, /*adjoin_unit=*/false);
    CHECK(drop.bracket(delta(s2, {one}), delta(s2, {v})).support.empty());

    LieBialgebra<Q> keep(s2, form, /*adjoin_unit=*/true);
    auto out = keep.bracket(delta(s2, {one}), delta(s2, {v}));
    REQUIRE(out.support.size() == 1);
    CHECK(out.support.begin()->first.empty());
    // the coefficient is the raw pairing value <1, v> up to the frozen signs
    CHECK((out.support.begin()->second == Q::one() ||
           out.support.begin()->second == -Q::one()));
}

TEST_CASE("cobracket of a length-1 class is zero") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    LieBialgebra<Q> lb(s2, form);
    GenId v = *s2.find_gen(0, 0, "v");
    CHECK(lb.cobracket(delta(s2, {v})).empty());
}

TEST_CASE("cobracket of a length-2 class follows the empty-word rule") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    GenId one = *s2.find_gen(0, 0, "1"), v = *s2.find_gen(0, 0, "v");
    LieBialgebra<Q> drop(s2, form, false);
    CHECK(drop.cobracket(delta(s2, {one, v})).empty());
}

TEST_CASE("mixed degree inputs are rejected") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    LieBialgebra<Q> lb(s2, form);
    GenId one = *s2.find_gen(0, 0, "1"), v = *s2.find_gen(0, 0, "v");
    CyclicCochain<Q> f;
    f.support[Word{one}] = Q(1);
    f.support[Word{v}] = Q(1);
    CHECK_THROWS_AS(lb.bracket(f, f), MixedDegrees);
}

TEST_CASE("bracket and cobracket are representative independent") {
    auto cp2 = projective_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(cp2, *cp2.pairing);
    LieBialgebra<Q> lb(cp2, form);
    GenId one = *cp2.find_gen(0, 0, "1");
    GenId h = *cp2.find_gen(0, 0, "h1");
    GenId h2 = *cp2.find_gen(0, 0, "h2");
    std::vector<Word> words = {{one, h, h2}, {h, h, h2, one}, {h2, h}, {one, h}};
    for (const Word& a : words) {
        auto [ta, sa] = t_bar(cp2, a);
        // delta at a equals sign * delta at tbar(a) as cochains
        CyclicCochain<Q> fa = delta(cp2, a);
        CyclicCochain<Q> fta = delta(cp2, ta);
        for (auto& [k, v] : fta.support) v *= sign_of<Q>(sa == -1 ? 1 : 0);
        CHECK(fa.support == fta.support);
        for (const Word& b : words) {
            CHECK(lb.bracket(fa, delta(cp2, b)).support ==
                  lb.bracket(fta, delta(cp2, b)).support);
        }
        CHECK(lb.cobracket(fa) == lb.cobracket(fta));
    }
}

TEST_CASE("randomized antisymmetry on the sphere") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    LieBialgebra<Q> lb(s2, form);
    AxiomSuite<Q> suite(lb, 5, false);
    auto check = suite.check_antisymmetry();
    CHECK(check.failures == 0);
    CHECK(check.tuples > 0);
}

TEST_CASE("axiom suite is exactly zero on the three acceptance fixtures") {
    for (auto data : {sphere_fixture<Q>(2), exterior_fixture<Q>(1)}) {
        SymplecticForm<Q> form = induced_omega(data, *data.pairing);
        LieBialgebra<Q> lb(data, form);
        AxiomReport rep = axiom_suite(lb, 4, true);
        for (const auto& c : rep.checks) {
            INFO(c.name, " sample ", c.sample);
            CHECK(c.failures == 0);
        }
    }
    // CP^2 at a smaller cap here; acceptance runs the full depth
    auto cp2 = projective_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(cp2, *cp2.pairing);
    LieBialgebra<Q> lb(cp2, form);
    AxiomReport rep = axiom_suite(lb, 3, true);
    for (const auto& c : rep.checks) {
        INFO(c.name, " sample ", c.sample);
        CHECK(c.failures == 0);
    }
}

TEST_CASE("axiom suite parallel equals serial") {
    auto s2 = sphere_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(s2, *s2.pairing);
    LieBialgebra<Q> lb(s2, form);
    AxiomReport a = axiom_suite(lb, 4, true);
    AxiomReport b = axiom_suite(lb, 4, false);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].tuples == b.checks[i].tuples);
        CHECK(a.checks[i].failures == b.checks[i].failures);
        CHECK(a.checks[i].sample == b.checks[i].sample);
    }
}

TEST_CASE("mutated pairing breaks at least one axiom") {
    auto s2 = sphere_fixture<Q>(2);
    GenId one = *s2.find_gen(0, 0, "1"), v = *s2.find_gen(0, 0, "v");
    // scale one omega entry only: breaks graded symmetry of the pairing, and
    // downstream at least one bialgebra identity
    auto bad = s2;
    bad.pairing->entries[{one, v}] = Q(2);
    SymplecticForm<Q> form;
    form.cy_degree = bad.pairing->degree;
    form.pairing = &*bad.pairing;
    LieBialgebra<Q> lb(bad, form);
    AxiomReport rep = axiom_suite(lb, 4, true);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("dual differential squares to zero and raises length") {
    auto cp2 = projective_fixture<Q>(2);
    SymplecticForm<Q> form = induced_omega(cp2, *cp2.pairing);
    LieBialgebra<Q> lb(cp2, form);
    for (int len = 1; len <= 3; ++len) {
        for (const Word& rep : lb.classes_of_length(len)) {
            CyclicCochain<Q> f;
            f.support[rep] = Q(1);
            auto df = lb.diff(f);
            for (const auto& [w, c] : df.support) {
                (void)c;
                CHECK(cp2.word_sdeg(w) == cp2.word_sdeg(rep) + 1);
            }
            CHECK(lb.diff(df).support.empty());
        }
    }
}
