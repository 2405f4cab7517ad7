#include <uqso/branch.hpp>
#include <uqso/pbw.hpp>
#include <uqso/reps.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace uqso;

namespace {
const DeformationParameter kP2{Rational(2)};
const DeformationParameter kP32{Rational(3, 2)};
}  // namespace

TEST_CASE("classical so3 construction", "[reps]") {
    SECTION("l = 0 is the one-dimensional zero representation") {
        Representation rep = classical_so3(HalfInt::whole(0), kP2);
        CHECK(rep.dim() == 1);
        CHECK(rep.chain_image(2).is_zero());
        CHECK(rep.chain_image(3).is_zero());
    }
    SECTION("l = 1/2 diagonal entries") {
        Representation rep = classical_so3(HalfInt::halves(1), kP2);
        REQUIRE(rep.dim() == 2);
        Scalar half = Scalar::i() * q_number(HalfInt::halves(1), kP2);
        CHECK(rep.chain_image(2)(0, 0) == -half);
        CHECK(rep.chain_image(2)(1, 1) == half);
    }
    SECTION("dimensions") {
        CHECK(classical_so3(HalfInt::whole(3), kP2).dim() == 7);
        CHECK(classical_so3(HalfInt::halves(5), kP2).dim() == 6);
        CHECK_THROWS_AS(classical_so3(HalfInt::whole(-1), kP2), InvalidParameter);
    }
    SECTION("defining relations, all l <= 3, several p") {
        for (const auto& d : {kP2, kP32}) {
            for (std::int64_t tw = 0; tw <= 6; ++tw) {
                Representation rep = classical_so3(HalfInt{tw}, d);
                CHECK(verify_defining_relations(rep).all_pass);
            }
        }
    }
    SECTION("traces vanish") {
        for (std::int64_t tw = 0; tw <= 6; ++tw) {
            Representation rep = classical_so3(HalfInt{tw}, kP2);
            CHECK(rep.chain_image(2).trace() == Scalar(0));
            CHECK(rep.chain_image(3).trace() == Scalar(0));
        }
    }
}

TEST_CASE("nonclassical so3 construction", "[reps]") {
    SECTION("one-dimensional members") {
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                Representation rep = nonclassical_so3(1, e1, e2, kP2);
                CHECK(rep.dim() == 1);
                CHECK(rep.chain_image(2)(0, 0) ==
                      Scalar(e1) * q_plus_number(HalfInt::halves(1), kP2));
                Scalar den = Scalar(kP2.p() - kP2.p_pow(-1));
                CHECK(rep.chain_image(3)(0, 0) ==
                      Scalar(e2) * q_number(HalfInt::whole(1), kP2) / den);
            }
    }
    SECTION("defining relations and self-check, sizes 1..5, all eps") {
        for (const auto& d : {kP2, kP32}) {
            for (int size = 1; size <= 5; ++size)
                for (int e1 : {1, -1})
                    for (int e2 : {1, -1}) {
                        Representation rep = nonclassical_so3(size, e1, e2, d);
                        CHECK(verify_defining_relations(rep).all_pass);
                    }
        }
    }
    SECTION("nonzero traces with the expected values") {
        for (int size = 1; size <= 5; ++size) {
            Representation rep = nonclassical_so3(size, 1, 1, kP2);
            Scalar sum;
            for (int k = 1; k <= size; ++k) sum += q_plus_number(HalfInt{2 * k - 1}, kP2);
            CHECK(rep.chain_image(2).trace() == sum);
            CHECK(!rep.chain_image(3).trace().is_zero());
        }
    }
    SECTION("the sign ambiguity in the down-coefficient is forced") {
        // Flipping the resolved sign of the |k-1> coefficient breaks the
        // defining relations: the source formula's doubled '+' is a single +.
        Representation rep = nonclassical_so3(3, 1, 1, kP2);
        Matrix bad = rep.chain_image(3);
        for (int k = 2; k <= 3; ++k) bad(k - 2, k - 1) = -bad(k - 2, k - 1);
        Representation mutated = rep.with_chain_matrix(3, bad, "sign-flipped variant");
        CHECK_FALSE(verify_defining_relations(mutated).all_pass);
    }
    SECTION("parameter validation") {
        CHECK_THROWS_AS(nonclassical_so3(0, 1, 1, kP2), InvalidParameter);
        CHECK_THROWS_AS(nonclassical_so3(2, 0, 1, kP2), InvalidParameter);
    }
}

TEST_CASE("classical so4 construction", "[reps]") {
    SECTION("(0,0) is the trivial representation") {
        Representation rep = classical_so4(HalfInt::whole(0), HalfInt::whole(0), kP2);
        CHECK(rep.dim() == 1);
        for (int j = 2; j <= 4; ++j) CHECK(rep.chain_image(j).is_zero());
    }
    SECTION("(1,0): diagonal eigenvalues enumerate k+l over the 4 basis vectors") {
        Representation rep = classical_so4(HalfInt::whole(1), HalfInt::whole(0), kP2);
        REQUIRE(rep.dim() == 4);
        std::multiset<Scalar> eigs;
        for (int i = 0; i < 4; ++i) eigs.insert(rep.chain_image(2)(i, i));
        std::multiset<Scalar> expected{Scalar::i() * q_number(HalfInt::whole(1), kP2),
                                       Scalar::i() * q_number(HalfInt::whole(-1), kP2), Scalar(0),
                                       Scalar(0)};
        CHECK(eigs == expected);
    }
    SECTION("full relation list for several (r,s) and p") {
        for (const auto& d : {kP2, kP32}) {
            CHECK(verify_defining_relations(classical_so4(HalfInt::whole(1), HalfInt::whole(1), d))
                      .all_pass);
            CHECK(verify_defining_relations(
                      classical_so4(HalfInt::halves(3), HalfInt::halves(1), d))
                      .all_pass);
            CHECK(verify_defining_relations(
                      classical_so4(HalfInt::whole(2), HalfInt::whole(-2), d))
                      .all_pass);
        }
    }
    SECTION("diagonal family commutes") {
        Representation rep = classical_so4(HalfInt::whole(2), HalfInt::whole(1), kP2);
        CHECK(commutator(rep.chain_image(2), rep.chain_image(4)).is_zero());
    }
    SECTION("parameter validation") {
        CHECK_THROWS_AS(classical_so4(HalfInt::whole(1), HalfInt::whole(2), kP2),
                        InvalidParameter);
        CHECK_THROWS_AS(classical_so4(HalfInt::whole(1), HalfInt::halves(1), kP2),
                        InvalidParameter);
    }
}

TEST_CASE("nonclassical so4 construction", "[reps]") {
    SECTION("(1/2,1/2) is one-dimensional") {
        Representation rep =
            nonclassical_so4(HalfInt::halves(1), HalfInt::halves(1), 1, 1, 1, kP2);
        CHECK(rep.dim() == 1);
    }
    SECTION("dimensions follow the truncated bases") {
        CHECK(nonclassical_so4(HalfInt::halves(3), HalfInt::halves(1), 1, 1, 1, kP2).dim() == 3);
        CHECK(nonclassical_so4(HalfInt::halves(3), HalfInt::halves(3), 1, 1, 1, kP2).dim() == 2);
        CHECK(nonclassical_so4(HalfInt::halves(5), HalfInt::halves(1), 1, 1, 1, kP2).dim() == 6);
    }
    SECTION("spectrum of I_21 consists of sign-uniform [m]_+ values only") {
        Representation rep =
            nonclassical_so4(HalfInt::halves(5), HalfInt::halves(1), -1, 1, 1, kP2);
        for (int i = 0; i < rep.dim(); ++i) {
            auto lab = classify_eigenvalue(rep.chain_image(2)(i, i), HalfInt::whole(8), kP2);
            REQUIRE(lab.has_value());
            CHECK(lab->kind == EigenLabel::Kind::Nonclassical);
            CHECK(lab->sign == -1);
        }
    }
    SECTION("full relation list across eps patterns and p") {
        for (const auto& d : {kP2, kP32}) {
            for (int e1 : {1, -1})
                for (int e2 : {1, -1})
                    for (int e3 : {1, -1}) {
                        CHECK(verify_defining_relations(nonclassical_so4(
                                  HalfInt::halves(3), HalfInt::halves(1), e1, e2, e3, d))
                                  .all_pass);
                    }
            CHECK(verify_defining_relations(
                      nonclassical_so4(HalfInt::halves(5), HalfInt::halves(3), -1, 1, -1, d))
                      .all_pass);
        }
    }
    SECTION("an imaginary reflection coefficient fails the relations") {
        Representation good =
            nonclassical_so4(HalfInt::halves(3), HalfInt::halves(3), 1, 1, 1, kP2);
        Matrix b = good.chain_image(3);
        Matrix with_i = b;
        with_i(0, 0) = Scalar::i() * b(0, 0);
        CHECK_FALSE(
            verify_defining_relations(good.with_chain_matrix(3, with_i, "imag-reflection"))
                .all_pass);
    }
    SECTION("parameter validation") {
        CHECK_THROWS_AS(nonclassical_so4(HalfInt::halves(1), HalfInt::halves(3), 1, 1, 1, kP2),
                        InvalidParameter);
        CHECK_THROWS_AS(nonclassical_so4(HalfInt::whole(1), HalfInt::whole(1), 1, 1, 1, kP2),
                        InvalidParameter);
        CHECK_THROWS_AS(nonclassical_so4(HalfInt::halves(3), HalfInt::halves(-1), 1, 1, 1, kP2),
                        InvalidParameter);
    }
}

TEST_CASE("twists", "[reps]") {
    Representation rep = nonclassical_so3(2, 1, 1, kP2);
    SECTION("identity twist preserves matrices") {
        Representation t = twist(rep, AutomorphismG::identity(3));
        for (int j = 2; j <= 3; ++j) CHECK(t.chain_image(j) == rep.chain_image(j));
    }
    SECTION("twisting twice is the identity") {
        AutomorphismG g = AutomorphismG::identity(3);
        g.eps = {-1, 1};
        Representation tt = twist(twist(rep, g), g);
        for (int j = 2; j <= 3; ++j) CHECK(tt.chain_image(j) == rep.chain_image(j));
    }
    SECTION("trace scales by the flipped sign") {
        AutomorphismG g = AutomorphismG::identity(3);
        g.eps = {-1, 1};
        Representation t = twist(rep, g);
        CHECK(t.chain_image(2).trace() == -rep.chain_image(2).trace());
        CHECK(t.chain_image(3).trace() == rep.chain_image(3).trace());
    }
    SECTION("twists stay representations and preserve irreducibility") {
        for (const auto& g : AutomorphismG::all(3)) {
            Representation t = twist(rep, g);
            CHECK(verify_defining_relations(t).all_pass);
            CHECK(commutant_dimension(t) == commutant_dimension(rep));
        }
    }
    SECTION("composite sign bookkeeping") {
        AutomorphismG g = AutomorphismG::identity(4);
        g.eps = {-1, 1, -1};
        CHECK(g.eps_of_composite(2, 1) == -1);
        CHECK(g.eps_of_composite(3, 1) == -1);
        CHECK(g.eps_of_composite(4, 2) == -1);
        CHECK(g.eps_of_composite(4, 1) == 1);
    }
}

TEST_CASE("restriction to a chain", "[reps]") {
    Representation rep = classical_so4(HalfInt::whole(1), HalfInt::whole(0), kP2);
    SECTION("restricting so4 to {I21, I32} satisfies the so3 relations") {
        Representation res = restrict_chain(rep, {2, 3});
        CHECK(res.n() == 3);
        CHECK(res.dim() == rep.dim());
        CHECK(verify_defining_relations(res).all_pass);
    }
    SECTION("iterated restriction equals direct restriction") {
        Representation a = restrict_chain(restrict_chain(rep, {2, 3}), {2});
        Representation b = restrict_chain(rep, {2});
        CHECK(a.chain_image(2) == b.chain_image(2));
    }
    SECTION("invalid subsets") {
        CHECK_THROWS_AS(restrict_chain(rep, {2, 4}), InvalidSubset);
        CHECK_THROWS_AS(restrict_chain(rep, std::vector<int>{}), InvalidSubset);
        CHECK_THROWS_AS(restrict_chain(rep, {3, 4, 5}), InvalidSubset);
    }
}

TEST_CASE("image_of", "[reps]") {
    Representation rep = classical_so3(HalfInt::whole(1), kP2);
    SECTION("unit maps to the identity") {
        CHECK(rep.image_of(AlgebraElement::unit(3, kP2)) == Matrix::identity(3));
    }
    SECTION("composite image matches the explicit q-commutator") {
        Matrix lhs = rep.image_of(generator(3, 3, 1, kP2));
        const Matrix &a = rep.chain_image(2), &b = rep.chain_image(3);
        Matrix rhs = Scalar(kP2.p()) * (a * b) - Scalar(kP2.p_pow(-1)) * (b * a);
        CHECK(lhs == rhs);
    }
    SECTION("homomorphism property on random words") {
        std::mt19937_64 rng(99);
        std::vector<GeneratorId> letters{{2, 1}, {3, 1}, {3, 2}};
        for (int iter = 0; iter < 40; ++iter) {
            Word w;
            int len = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < len; ++i) w.push_back(letters[rng() % letters.size()]);
            Matrix direct = Matrix::identity(3);
            for (const auto& g : w) direct = direct * rep.image(g);
            CHECK(rep.image_of(normal_form(3, w, kP2)) == direct);
        }
    }
    SECTION("dimension mismatch is rejected") {
        CHECK_THROWS_AS(rep.image_of(AlgebraElement::unit(4, kP2)), DimensionMismatch);
    }
}

TEST_CASE("casimir image is scalar and central", "[reps]") {
    AlgebraElement c4 = casimir_so4_element(1, 4, kP2);
    for (auto [r2, s2] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 0}, {2, 2}, {3, 1}}) {
        Representation rep = classical_so4(HalfInt{r2}, HalfInt{s2}, kP2);
        Matrix img = rep.image_of(c4);
        CHECK(img.as_scalar_multiple_of_identity().has_value());
        for (int j = 2; j <= 4; ++j) CHECK(commutator(img, rep.chain_image(j)).is_zero());
    }
    // pinned values
    CHECK(classical_so4(HalfInt::whole(1), HalfInt::whole(0), kP2)
              .image_of(c4)
              .as_scalar_multiple_of_identity() == Scalar(0));
    CHECK(classical_so4(HalfInt::whole(1), HalfInt::whole(1), kP2)
              .image_of(c4)
              .as_scalar_multiple_of_identity() == Scalar(Rational(-17, 4)));
    CHECK(nonclassical_so4(HalfInt::halves(3), HalfInt::halves(1), 1, 1, 1, kP2)
              .image_of(c4)
              .as_scalar_multiple_of_identity() == Scalar(Rational(205, 36)));
}
