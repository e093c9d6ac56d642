#include "doctest.h"

#include "qv/monomial.hpp"
#include "qv/rep.hpp"
#include "qv/tables.hpp"

#include <algorithm>
#include <map>

using namespace qv;

namespace {

const FieldCtx& F() { return FieldCtx::default_ctx(); }

std::vector<Mat> u4_of(const CoverGroup& g, const std::vector<int>& ids) {
    std::vector<Mat> out;
    for (int id : ids) out.push_back(g.matrix(id));
    return out;
}

std::vector<int> sorted_dims(const std::vector<std::vector<Vec>>& pieces) {
    std::vector<int> d;
    for (const auto& p : pieces) d.push_back(static_cast<int>(p.size()));
    std::sort(d.begin(), d.end());
    return d;
}

// Split U4 restricted to the preimage of a named subgroup.
std::vector<std::vector<Vec>> split_u4(const std::string& name) {
    const CoverGroup& g = spin_cover(F());
    auto gens = g.lift_generators(named_group(name));
    auto elems = g.closure(gens);
    std::map<int, int> local;
    for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
    auto cls = g.classes_within(gens);
    for (auto& c : cls)
        for (int& x : c) x = local[x];
    auto pieces = split_isotypic(u4_of(g, elems), cls);
    for (const auto& p : pieces) CHECK(is_invariant_subspace(u4_of(g, gens), p));
    return pieces;
}

}  // namespace

TEST_CASE("models: permutation, SO6 and W5 matrices are homomorphisms") {
    Perm p = Perm::parse("(01)"), q = Perm::parse("(0123)(45)");
    CHECK(perm_matrix(F(), p * q) == perm_matrix(F(), p) * perm_matrix(F(), q));
    CHECK(so6_model(F(), p * q) == so6_model(F(), p) * so6_model(F(), q));
    CHECK(w5_model(F(), p * q) == w5_model(F(), p) * w5_model(F(), q));
    Mat t = so6_model(F(), p);
    CHECK(is_orthogonal(t));
    CHECK(det(t).is_one());
    CHECK(t.trace() == CycNum(F(), -2));  // 1 + (-3)
    Mat even = so6_model(F(), Perm::parse("(012)"));
    CHECK(even == perm_matrix(F(), Perm::parse("(012)")));
}

TEST_CASE("models: symmetric powers") {
    Mat g = Mat::from_integers(F(), {{1, 2, 0}, {0, 1, -1}, {3, 0, 1}});
    Mat h = Mat::from_integers(F(), {{0, 1, 1}, {1, 0, 2}, {-1, 1, 0}});
    for (int d = 1; d <= 3; ++d) CHECK(sym_power_matrix(g * h, d) == sym_power_matrix(g, d) * sym_power_matrix(h, d));
    // trace of Sym^2 = (tr(g)^2 + tr(g^2)) / 2
    CycNum tr = g.trace(), tr2 = (g * g).trace();
    CHECK(sym_power_matrix(g, 2).trace() == (tr * tr + tr2) * make_rational(1, 2));
    CHECK(sym_power_matrix(g, 3).rows() == monomial_count(3, 3));
}

TEST_CASE("spin: Clifford relations and the Plucker identification") {
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) {
            Mat a = clifford_gamma(F(), k), b = clifford_gamma(F(), l);
            Mat anti = a * b + b * a;
            if (k == l)
                CHECK(anti == Mat::identity(F(), 8) * CycNum(F(), 2));
            else
                CHECK(anti.is_zero());
        }
    Mat T = plucker_identification(F());
    CHECK(inverse(T).has_value());
}

TEST_CASE("spin: Cartan-Dieudonne factorization") {
    Mat m = so6_model(F(), Perm::parse("(012345)"));
    auto vs = cartan_dieudonne(m);
    CHECK(vs.size() % 2 == 0);
    Mat prod = Mat::identity(F(), 6);
    for (const Vec& v : vs) prod = prod * reflection(v);
    CHECK(prod == m);
}

TEST_CASE("spin: lifts of the generators") {
    const SpinLiftResult& sd = spin_data(F());
    REQUIRE(sd.lifts.size() == 2);
    CHECK(sd.group_order == 1440);
    std::vector<Perm> gens = {Perm::parse("(01)"), Perm::parse("(012345)")};
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(det(sd.lifts[i]).is_one());
        CHECK(sd.plucker_basis * wedge2(sd.lifts[i]) == so6_model(F(), gens[i]) * sd.plucker_basis);
    }
    // transposition lift: trace 0, order 2
    CHECK(sd.lifts[0].trace().is_zero());
    CHECK(matrix_order(sd.lifts[0]) == 2);
    // identity gives +-I
    auto id = spin_lift({Mat::identity(F(), 6)});
    CHECK((id.lifts[0] == Mat::identity(F(), 4) || id.lifts[0] == -Mat::identity(F(), 4)));
    // non-orthogonal input is rejected
    CHECK_THROWS(spin_lift({Mat::from_integers(F(), {{2, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                                      {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}})}));
}

TEST_CASE("cover: structure of 2.S6") {
    const CoverGroup& g = spin_cover(F());
    CHECK(g.order() == 1440);
    REQUIRE(g.central() >= 0);
    CHECK(g.matrix(g.central()) == -Mat::identity(F(), 4));
    for (int p = 0; p < kS6Order; ++p) CHECK(g.preimages(Perm::from_index(p)).size() == 2);
    // mul and inv agree with matrix arithmetic on a sample
    for (int a = 0; a < g.order(); a += 97)
        for (int b = 5; b < g.order(); b += 131) {
            CHECK(g.matrix(g.mul(a, b)) == g.matrix(a) * g.matrix(b));
            CHECK(g.mul(a, g.inv(a)) == 0);
        }
    auto cls = g.classes();
    CHECK(cls.size() == 17);
    int total = 0;
    for (const auto& c : cls) total += c.size();
    CHECK(total == 1440);
}

TEST_CASE("cover: U4 character against the wedge-square oracle") {
    // chi_{wedge2 U4}(g) = (chi(g)^2 - chi(g^2)) / 2 must equal the trace of
    // I + W5 on the projected permutation, for every class.
    const CoverGroup& g = spin_cover(F());
    for (const auto& c : g.classes()) {
        int r = c.rep();
        CycNum chi = g.matrix(r).trace(), chi2 = g.matrix(g.mul(r, r)).trace();
        CycNum lhs = (chi * chi - chi2) * make_rational(1, 2);
        CHECK(lhs == so6_model(F(), g.proj(r)).trace());
    }
}

TEST_CASE("cover: Table 1 rows other than the order-12 classes") {
    const CoverGroup& g = spin_cover(F());
    auto cls = g.classes();
    for (const auto& row : table1()) {
        if (row.u4_root_sign != 0) continue;
        int matches = 0;
        for (const auto& c : cls) {
            if (c.label.order != row.order || c.label.cycle_type != row.cycle_type || c.label.central != row.central) continue;
            ++matches;
            const Perm& p = g.proj(c.rep());
            CHECK(c.size() == row.counts[0]);
            CHECK(perm_matrix(F(), p).trace() == CycNum(F(), row.w));
            CHECK(w5_model(F(), p).trace() == CycNum(F(), row.w5));
            CHECK(g.matrix(c.rep()).trace() == row.u4_value(F()));
        }
        CHECK(matches >= 1);
    }
}

TEST_CASE("cover: order-12 classes carry real character values +-sqrt(3)") {
    const CoverGroup& g = spin_cover(F());
    auto cd = class_data(g);
    int seen = 0;
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
        if (cd.classes[c].label.order != 12) continue;
        ++seen;
        int r = cd.classes[c].rep();
        // r is conjugate to its inverse, so the trace is fixed by complex conjugation.
        CHECK(cd.class_of.at(g.inv(r)) == static_cast<int>(c));
        CycNum tr = g.matrix(r).trace();
        CHECK(tr == tr.conj());
        CHECK(tr * tr == CycNum(F(), 3));
    }
    CHECK(seen == 2);
}

TEST_CASE("characters: symmetric powers against explicit matrices") {
    const CoverGroup& g = spin_cover(F());
    auto cd = class_data(g);
    Character chi = character_from(cd, [&](int id) { return g.matrix(id).trace(); });
    for (int d = 2; d <= 4; ++d) {
        Character s = sym_power_character(cd, chi, d);
        for (std::size_t c = 0; c < cd.classes.size(); c += 3)
            CHECK(s[c] == sym_power_matrix(g.matrix(cd.classes[c].rep()), d).trace());
    }
    std::vector<int> all;
    for (const auto& c : cd.classes) all.push_back(c.size());
    CHECK(inner_product(all, chi, chi) == 1);
    CHECK(trivial_multiplicity(all, chi) == 0);
}

TEST_CASE("commutants and intertwiners") {
    const CoverGroup& g = spin_cover(F());
    auto dim_for = [&](const std::string& name) { return commutant(u4_of(g, g.lift_generators(named_group(name)))).size(); };
    CHECK(dim_for("A6") == 1);
    CHECK(dim_for("A5st") == 2);
    CHECK(dim_for("V4") == 4);
    // Hom(trivial, U4) = 0 on any subgroup containing z
    auto gens = g.lift_generators(named_group("A4nst"));
    std::vector<Mat> triv(gens.size(), Mat::identity(F(), 1));
    CHECK(intertwiners(triv, u4_of(g, gens)).empty());
}

TEST_CASE("split_isotypic shapes") {
    CHECK(sorted_dims(split_u4("A4nst")) == std::vector<int>{2, 2});
    CHECK(sorted_dims(split_u4("S3'")) == std::vector<int>{1, 1, 2});
    CHECK(sorted_dims(split_u4("mu5")) == std::vector<int>{1, 1, 1, 1});
    // V4: two isomorphic constituents stay together
    CHECK(sorted_dims(split_u4("V4")) == std::vector<int>{4});

    const PermGroup& d12 = named_group("D12nst");
    std::vector<Mat> elems;
    for (const Perm& p : d12.elements()) elems.push_back(w5_model(F(), p));
    std::vector<std::vector<int>> cls;
    for (const auto& c : conjugacy_classes(d12)) {
        std::vector<int> ids;
        for (int m : c.members)
            for (std::size_t i = 0; i < d12.elements().size(); ++i)
                if (d12.elements()[i].index() == m) ids.push_back(static_cast<int>(i));
        cls.push_back(ids);
    }
    CHECK(sorted_dims(split_isotypic(elems, cls)) == std::vector<int>{1, 2, 2});
}

TEST_CASE("binary icosahedral group and the twisted-cubic intertwiner") {
    for (int gal : {1, 2}) {
        auto bi = binary_icosahedral_generators(F(), gal);
        CHECK(det(bi[0]).is_one());
        CHECK(det(bi[1]).is_one());
        CHECK(matrix_closure(bi).size() == 120);
        const CoverGroup& g = spin_cover(F());
        auto target = g.preimage(named_group("A5nst"));
        std::vector<Mat> sym3 = {sym_power_matrix(bi[0], 3), sym_power_matrix(bi[1], 3)};
        auto iso = find_isomorphism(sym3, g, target, [&](int i, int id) { return sym3[static_cast<std::size_t>(i)].trace() == g.matrix(id).trace(); });
        REQUIRE(iso.size() == 2);
        auto X = intertwiners(sym3, {g.matrix(iso[0]), g.matrix(iso[1])});
        CHECK(X.size() == 1);
    }
}
