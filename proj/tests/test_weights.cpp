#include <uqso/weights.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace uqso;

namespace {
const DeformationParameter kP2{Rational(2)};

Weight w_classical(std::initializer_list<std::int64_t> twices) {
    Weight w;
    for (auto t : twices) w.labels.push_back(EigenLabel::classical(HalfInt{t}));
    return w;
}
Weight w_nonclassical(std::initializer_list<std::pair<std::int64_t, int>> items) {
    Weight w;
    for (auto [t, s] : items) w.labels.push_back(EigenLabel::nonclassical(HalfInt{t}, s));
    return w;
}

/// Conjugates all chain matrices by an invertible integer matrix; exercises
/// the non-diagonal eigenspace path.
Representation conjugated(const Representation& rep, std::mt19937_64& rng) {
    int d = rep.dim();
    Matrix s(d, d), sinv(d, d);
    // random unipotent upper-triangular: easy exact inverse via Neumann series
    Matrix nil(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c) nil(r, c) = Scalar(static_cast<long>(rng() % 3) - 1);
    s = Matrix::identity(d) + nil;
    Matrix acc = Matrix::identity(d), pw = nil;
    int sign = -1;
    for (int t = 1; t < d; ++t) {
        acc = acc + Scalar(sign) * pw;
        pw = pw * nil;
        sign = -sign;
    }
    sinv = acc;
    std::vector<Matrix> mats;
    for (int j = 2; j <= rep.n(); ++j) mats.push_back(sinv * rep.chain_image(j) * s);
    FamilyInfo fi;
    fi.kind = RepFamily::Custom;
    fi.note = "conjugate of " + rep.family().describe();
    return Representation(rep.n(), rep.param(), fi, std::move(mats), rep.basis_labels());
}

}  // namespace

TEST_CASE("weight decomposition of classical so3", "[weights]") {
    Representation rep = classical_so3(HalfInt::whole(1), kP2);
    WeightDiagram dg = weight_decomposition(rep);
    CHECK(dg.multiplicity_sum() == 3);
    CHECK(dg.weight_count() == 3);
    for (std::int64_t m : {-2LL, 0LL, 2LL}) {
        auto it = dg.entries.find(w_classical({m}));
        REQUIRE(it != dg.entries.end());
        CHECK(it->second.multiplicity == 1);
    }
    // eigenvectors really are simultaneous eigenvectors
    for (const auto& [w, e] : dg.entries) {
        Scalar lambda = Scalar::i() * q_number(w.labels[0].m, kP2);
        for (const auto& v : e.eigenbasis) {
            Vector img = rep.chain_image(2) * v;
            for (size_t r = 0; r < img.size(); ++r) CHECK(img[r] == lambda * v[r]);
        }
    }
}

TEST_CASE("weight decomposition of classical so4 (1,0)", "[weights]") {
    Representation rep = classical_so4(HalfInt::whole(1), HalfInt::whole(0), kP2);
    WeightDiagram dg = weight_decomposition(rep);
    CHECK(dg.multiplicity_sum() == 4);
    CHECK(dg.weight_count() == 4);
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 0}, {0, 2}, {0, -2}, {-2, 0}})
        CHECK(dg.entries.count(w_classical({a, b})) == 1);
}

TEST_CASE("weight decomposition of nonclassical so3", "[weights]") {
    Representation rep = nonclassical_so3(2, 1, -1, kP2);
    WeightDiagram dg = weight_decomposition(rep);
    CHECK(dg.weight_count() == 2);
    CHECK(dg.entries.count(w_nonclassical({{1, 1}})) == 1);
    CHECK(dg.entries.count(w_nonclassical({{3, 1}})) == 1);
    // flipped diagonal sign flips the labels
    AutomorphismG g = AutomorphismG::identity(3);
    g.eps = {-1, 1};
    WeightDiagram dg2 = weight_decomposition(twist(rep, g));
    CHECK(dg2.entries.count(w_nonclassical({{1, -1}})) == 1);
    CHECK(dg2.entries.count(w_nonclassical({{3, -1}})) == 1);
}

TEST_CASE("general (non-diagonal) eigenspace path agrees", "[weights]") {
    std::mt19937_64 rng(4242);
    Representation rep = classical_so4(HalfInt::whole(2), HalfInt::whole(0), kP2);
    WeightDiagram expected = weight_decomposition(rep);
    Representation conj = conjugated(rep, rng);
    REQUIRE_FALSE(conj.chain_image(2).is_diagonal());
    WeightDiagram dg = weight_decomposition(conj);
    CHECK(dg.multiplicity_sum() == rep.dim());
    REQUIRE(dg.weight_count() == expected.weight_count());
    for (const auto& [w, e] : expected.entries) {
        auto it = dg.entries.find(w);
        REQUIRE(it != dg.entries.end());
        CHECK(it->second.multiplicity == e.multiplicity);
    }
    // a defective matrix is reported
    Matrix jordan(2, 2);
    jordan(0, 1) = Scalar(1);
    Representation bad(3, kP2, FamilyInfo{}, {jordan, Matrix::zero(2)}, {"a", "b"});
    CHECK_THROWS_AS(weight_decomposition(bad), NotDiagonalizable);
    // an unrecognizable eigenvalue is reported
    Matrix odd = Matrix::identity(1);
    odd(0, 0) = Scalar(Rational(7, 13));
    Representation bad2(3, kP2, FamilyInfo{}, {odd, Matrix::zero(1)}, {"a"});
    CHECK_THROWS_AS(weight_decomposition(bad2), UnclassifiedEigenvalue);
}

TEST_CASE("type classification", "[weights]") {
    CHECK(classify_type(classical_so4(HalfInt::whole(1), HalfInt::whole(1), kP2)) ==
          RepType::Classical);
    CHECK(classify_type(nonclassical_so3(2, 1, 1, kP2)) == RepType::Nonclassical);
    AutomorphismG g = AutomorphismG::identity(4);
    g.eps = {-1, 1, -1};
    CHECK(classify_type(twist(nonclassical_so4(HalfInt::halves(3), HalfInt::halves(1), 1, 1, 1,
                                               kP2),
                              g)) == RepType::Nonclassical);
    // mixed types are a construction bug and must be loud
    Matrix a(2, 2), b(2, 2);
    a(0, 0) = Scalar::i() * q_number(HalfInt::whole(1), kP2);
    a(1, 1) = q_plus_number(HalfInt::halves(1), kP2);
    Representation bad(3, kP2, FamilyInfo{}, {a, b}, {"x", "y"});
    CHECK_THROWS_AS(classify_type(bad), MixedTypes);
}

TEST_CASE("weyl invariance", "[weights]") {
    SECTION("classical so3 diagrams are invariant") {
        for (std::int64_t tw : {2, 3, 6}) {
            WeightDiagram dg = weight_decomposition(classical_so3(HalfInt{tw}, kP2));
            CHECK(weyl_invariance_check(dg, 3).invariant);
        }
    }
    SECTION("classical so4 diagrams are invariant under the even group") {
        for (auto [r2, s2] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                 {2, 2}, {4, 0}, {3, 1}, {4, 2}}) {
            WeightDiagram dg = weight_decomposition(classical_so4(HalfInt{r2}, HalfInt{s2}, kP2));
            CHECK(weyl_invariance_check(dg, 4).invariant);
        }
    }
    SECTION("nonclassical diagrams are not invariant, with a witness") {
        WeightDiagram dg = weight_decomposition(nonclassical_so3(2, 1, 1, kP2));
        auto res = weyl_invariance_check(dg, 3);
        REQUIRE_FALSE(res.invariant);
        CHECK(res.witness_weight.labels.size() == 1);
        WeightDiagram dg4 =
            weight_decomposition(nonclassical_so4(HalfInt::halves(3), HalfInt::halves(1), 1, 1, 1,
                                                  kP2));
        CHECK_FALSE(weyl_invariance_check(dg4, 4).invariant);
    }
    SECTION("so4 oddity: single sign flips are not in the group") {
        // the diagram of (r,s)=(1,1) is {(1,1),(0,0),(-1,-1)}; a single flip
        // would break it, but only even flips belong to the group for n=4
        WeightDiagram dg =
            weight_decomposition(classical_so4(HalfInt::whole(1), HalfInt::whole(1), kP2));
        CHECK(weyl_invariance_check(dg, 4).invariant);
    }
}
