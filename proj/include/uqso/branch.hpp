#pragma once

/**
 * @file branch.hpp
 * @brief Verification and classification services: defining-relation suites,
 *        branching so_4 -> so_3 with type preservation, equivalence
 *        signatures, and classification labels (m) / (m, g).
 */

#include <uqso/ladder.hpp>
#include <uqso/matrix.hpp>
#include <uqso/pbw.hpp>
#include <uqso/reps.hpp>
#include <uqso/scalar.hpp>
#include <uqso/weights.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace uqso {

// ---------------------------------------------------------------------------
// defining-relation suites
// ---------------------------------------------------------------------------

struct RelationCheck {
    std::string id;
    bool pass = false;
    std::string witness;  // first offending entry, when failing
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = true;

    void add(std::string id, const Matrix& residual) {
        RelationCheck c;
        c.id = std::move(id);
        c.pass = residual.is_zero();
        if (!c.pass) {
            for (int r = 0; r < residual.rows() && c.witness.empty(); ++r)
                for (int col = 0; col < residual.cols(); ++col)
                    if (!residual(r, col).is_zero()) {
                        c.witness = "entry(" + std::to_string(r) + "," + std::to_string(col) +
                                    ") = " + residual(r, col).str();
                        break;
                    }
        }
        all_pass = all_pass && c.pass;
        checks.push_back(std::move(c));
    }
};

/// Every defining relation of the algebra, moved to one side and evaluated
/// exactly. For n = 4 this includes the q-commutator triples among the
/// composite generators, the two vanishing commutators, and the interleaved
/// relation [I_42, I_31] = (q - q^{-1})(I_21 I_43 - I_32 I_41).
inline RelationReport verify_defining_relations(const Representation& rep) {
    RelationReport report;
    const DeformationParameter& d = rep.param();
    const Scalar qq = Scalar(d.p_pow(2) + d.p_pow(-2));
    auto name = [](int k, int l) { return "I" + std::to_string(k) + std::to_string(l); };
    for (int i = 2; i < rep.n(); ++i) {
        const Matrix& A = rep.chain_image(i);
        const Matrix& B = rep.chain_image(i + 1);
        report.add("trilinear-1@i=" + std::to_string(i),
                   A * (A * B) - qq * (A * (B * A)) + B * (A * A) + B);
        report.add("trilinear-2@i=" + std::to_string(i),
                   A * (B * B) - qq * (B * (A * B)) + (B * B) * A + A);
    }
    for (int i = 2; i <= rep.n(); ++i)
        for (int j = i + 2; j <= rep.n(); ++j)
            report.add("commute@" + name(i, i - 1) + "," + name(j, j - 1),
                       commutator(rep.chain_image(i), rep.chain_image(j)));
    if (rep.n() == 4) {
        auto qc = [&](GeneratorId a, GeneratorId b, GeneratorId c) {
            Matrix lhs = Scalar(d.p_pow(1)) * (rep.image(a) * rep.image(b)) -
                         Scalar(d.p_pow(-1)) * (rep.image(b) * rep.image(a));
            report.add("qcomm@[" + a.str() + "," + b.str() + "]=" + c.str(),
                       lhs - rep.image(c));
        };
        const GeneratorId i21{2, 1}, i32{3, 2}, i43{4, 3}, i31{3, 1}, i42{4, 2}, i41{4, 1};
        qc(i21, i32, i31); qc(i32, i31, i21); qc(i31, i21, i32);
        qc(i32, i43, i42); qc(i43, i42, i32); qc(i42, i32, i43);
        qc(i31, i43, i41); qc(i43, i41, i31); qc(i41, i31, i43);
        qc(i21, i42, i41); qc(i42, i41, i21); qc(i41, i21, i42);
        report.add("commute@I32,I41", commutator(rep.image(i32), rep.image(i41)));
        Matrix rhs = Scalar(d.delta()) * (rep.image(i21) * rep.image(i43) -
                                          rep.image(i32) * rep.image(i41));
        report.add("interleaved@[I42,I31]", commutator(rep.image(i42), rep.image(i31)) - rhs);
    }
    return report;
}

/// Commutant dimension of the chain images: 1 exactly when irreducible.
inline int commutant_dimension(const Representation& rep) {
    return commutant_dimension(rep.chain_images());
}

inline bool is_irreducible(const Representation& rep) { return commutant_dimension(rep) == 1; }

// ---------------------------------------------------------------------------
// equivalence signatures
// ---------------------------------------------------------------------------

struct Signature {
    int dim = 0;
    RepType type = RepType::Classical;
    Weight highest_weight;
    std::vector<Scalar> traces;                // Tr T(I_{j,j-1}), j = 2..n
    std::vector<std::vector<Scalar>> spectra;  // sorted spectrum per diagonal generator

    bool operator==(const Signature& o) const {
        return dim == o.dim && type == o.type && highest_weight == o.highest_weight &&
               traces == o.traces && spectra == o.spectra;
    }
};

inline Signature equivalence_signature(const Representation& rep, const WeightDiagram& dg) {
    Signature sig;
    sig.dim = rep.dim();
    sig.type = classify_type(dg);
    sig.highest_weight = unique_highest_weight(rep, dg);
    for (int j = 2; j <= rep.n(); ++j) sig.traces.push_back(rep.chain_image(j).trace());
    const int k = diagonal_family_size(rep.n());
    sig.spectra.assign(static_cast<size_t>(k), {});
    for (const auto& [w, entry] : dg.entries) {
        for (int i = 0; i < k; ++i) {
            const EigenLabel& lab = w.labels[static_cast<size_t>(i)];
            Scalar lambda = lab.kind == EigenLabel::Kind::Classical
                                ? Scalar::i() * q_number(lab.m, rep.param())
                                : Scalar(lab.sign) * q_plus_number(lab.m, rep.param());
            for (int c = 0; c < entry.multiplicity; ++c)
                sig.spectra[static_cast<size_t>(i)].push_back(lambda);
        }
    }
    for (auto& sp : sig.spectra) std::sort(sp.begin(), sp.end());
    return sig;
}

inline Signature equivalence_signature(const Representation& rep) {
    return equivalence_signature(rep, weight_decomposition(rep));
}

/// Ground-truth equivalence: a nonzero intertwiner exists (for irreducibles
/// this is Schur-complete).
inline bool equivalent(const Representation& a, const Representation& b) {
    if (a.n() != b.n() || a.dim() != b.dim()) return false;
    return !intertwiner_space(a.chain_images(), b.chain_images()).empty();
}

// ---------------------------------------------------------------------------
// classification labels
// ---------------------------------------------------------------------------

struct ClassicalLabel {
    std::vector<HalfInt> m;  // signed highest-weight coordinates
};
struct NonclassicalLabel {
    std::vector<HalfInt> m;  // all-positive highest-weight coordinates
    AutomorphismG g;
};
using ClassLabel = std::variant<ClassicalLabel, NonclassicalLabel>;

namespace detail {

/// Sign of a trace that is purely real or purely imaginary and nonzero.
inline int canonical_trace_sign(const Scalar& t) {
    if (t.is_zero()) throw UnclassifiableRepresentation("nonclassical trace vanishes");
    if (t.is_real()) return t.re() > 0 ? 1 : -1;
    if (t.is_imaginary()) return t.im() > 0 ? 1 : -1;
    throw UnclassifiableRepresentation("trace is neither purely real nor purely imaginary");
}

/// Builds the all-plus family member with the given highest weight.
inline Representation reference_nonclassical(int n, const std::vector<HalfInt>& m,
                                             const DeformationParameter& d) {
    if (n == 3) {
        if (m.size() != 1 || m[0].is_integer() || m[0].twice < 1)
            throw UnclassifiableRepresentation("invalid nonclassical so3 highest weight");
        return nonclassical_so3(static_cast<int>((m[0].twice + 1) / 2), 1, 1, d);
    }
    if (n == 4) {
        if (m.size() != 2) throw UnclassifiableRepresentation("invalid so4 highest weight");
        return nonclassical_so4(m[0], m[1], 1, 1, 1, d);
    }
    throw UnsupportedIndex("classification covers n = 3 and n = 4");
}

}  // namespace detail

/// Classical: the unique highest weight. Nonclassical: the pair (m, g) where
/// m is the all-positive highest weight of the sign-normalized twist and g is
/// recovered from the trace signs relative to the all-plus reference member;
/// the result is confirmed by an explicit intertwiner.
inline ClassLabel classify_representation(const Representation& rep, const WeightDiagram& dg) {
    if (rep.n() != 3 && rep.n() != 4)
        throw UnsupportedIndex("classification covers n = 3 and n = 4");
    RepType type = classify_type(dg);
    if (type == RepType::Classical) {
        Weight hw = unique_highest_weight(rep, dg);
        ClassicalLabel lab;
        for (const auto& l : hw.labels) lab.m.push_back(l.m);
        return lab;
    }
    // nonclassical: diagonal signs from the highest weight
    Weight hw = unique_highest_weight(rep, dg);
    AutomorphismG g = AutomorphismG::identity(rep.n());
    const int k = diagonal_family_size(rep.n());
    for (int i = 1; i <= k; ++i)
        g.eps[static_cast<size_t>(2 * i - 2)] = hw.labels[static_cast<size_t>(i - 1)].sign;
    std::vector<HalfInt> m;
    for (const auto& l : hw.labels) m.push_back(l.m);
    Representation ref = detail::reference_nonclassical(rep.n(), m, rep.param());
    // remaining (non-diagonal) signs from trace-sign ratios
    for (int j = 2; j <= rep.n(); ++j) {
        if (j % 2 == 0) continue;
        int sr = detail::canonical_trace_sign(rep.chain_image(j).trace());
        int s0 = detail::canonical_trace_sign(ref.chain_image(j).trace());
        g.eps[static_cast<size_t>(j - 2)] = sr * s0;
    }
    // diagonal trace signs must agree with the highest-weight signs
    for (int i = 1; i <= k; ++i) {
        int sr = detail::canonical_trace_sign(rep.chain_image(2 * i).trace());
        int s0 = detail::canonical_trace_sign(ref.chain_image(2 * i).trace());
        if (sr * s0 != g.eps[static_cast<size_t>(2 * i - 2)])
            throw UnclassifiableRepresentation("diagonal trace signs disagree with highest weight");
    }
    if (!equivalent(twist(rep, g), ref))
        throw UnclassifiableRepresentation("sign-normalized twist is not equivalent to the reference");
    return NonclassicalLabel{std::move(m), std::move(g)};
}

inline ClassLabel classify_representation(const Representation& rep) {
    return classify_representation(rep, weight_decomposition(rep));
}

inline std::string class_label_str(const ClassLabel& lab) {
    if (std::holds_alternative<ClassicalLabel>(lab)) {
        const auto& cl = std::get<ClassicalLabel>(lab);
        std::string s = "classical(";
        for (size_t i = 0; i < cl.m.size(); ++i) s += (i ? "," : "") + cl.m[i].str();
        return s + ")";
    }
    const auto& nc = std::get<NonclassicalLabel>(lab);
    std::string s = "nonclassical(";
    for (size_t i = 0; i < nc.m.size(); ++i) s += (i ? "," : "") + nc.m[i].str();
    return s + "; g=" + nc.g.str() + ")";
}

// ---------------------------------------------------------------------------
// branching so_4 -> so_3
// ---------------------------------------------------------------------------

struct BranchComponent {
    ClassLabel label;
    int dim = 0;
    int multiplicity = 0;
};

struct BranchingResult {
    std::string parent;
    RepType parent_type = RepType::Classical;
    int parent_dim = 0;
    std::vector<BranchComponent> components;
    int component_count = 0;  // with multiplicity
};

/// Decomposes the restriction to {I_21, I_32}: highest-weight vectors of the
/// so_3 subalgebra are the per-weight raising kernels; each spans an
/// irreducible component through the lowering chain (tracked by rank growth,
/// because lowering reflects at the m = 1/2 boundary in the nonclassical
/// case). Every component is reassembled as a representation, relation-checked
/// and classified; dimension bookkeeping is exact.
inline BranchingResult branch_so4_to_so3(const Representation& rep) {
    if (rep.n() != 4) throw InvalidParameter("branch_so4_to_so3: need an so_4 representation");
    Representation res = restrict_chain(rep, {2, 3});
    WeightDiagram dg = weight_decomposition(res);
    RepType type = classify_type(dg);

    BranchingResult out;
    out.parent = rep.family().describe();
    out.parent_type = type;
    out.parent_dim = rep.dim();

    std::map<std::string, BranchComponent> tally;
    int covered = 0;
    for (const auto& hw : highest_weight_vectors(res, dg)) {
        for (const auto& v0 : hw.vectors) {
            // lowering chain from the highest-weight vector
            std::vector<Vector> span{v0};
            SignedWeight cur = signed_weight(hw.weight);
            Vector vec = v0;
            while (true) {
                Matrix L = detail::ladder_matrix(res, cur, 1, LadderKind::Lowering);
                Vector nxt = L * vec;
                if (is_zero_vector(nxt)) break;
                if (in_span(span, nxt)) break;  // nonclassical reflection boundary
                span.push_back(nxt);
                vec = std::move(nxt);
                cur = shift_signed(cur, root_shift(3, 1), -1);
                if (static_cast<int>(span.size()) > res.dim())
                    throw DecompositionIncomplete("lowering chain exceeded the dimension");
            }
            // the chain span must be invariant; restrict and classify
            Matrix a = restrict_to_subspace(res.chain_image(2), span);
            Matrix b = restrict_to_subspace(res.chain_image(3), span);
            std::vector<std::string> labels(span.size(), "|component>");
            FamilyInfo fi;
            fi.kind = RepFamily::Custom;
            fi.note = "branch component of " + out.parent;
            Representation comp(3, rep.param(), fi, {a, b}, labels);
            RelationReport rel = verify_defining_relations(comp);
            if (!rel.all_pass)
                throw DecompositionIncomplete("branch component fails the defining relations");
            WeightDiagram cdg = weight_decomposition(comp);
            if (classify_type(cdg) != type)
                throw DecompositionIncomplete("branch component changes type");
            ClassLabel lab = classify_representation(comp, cdg);
            std::string key = class_label_str(lab);
            auto it = tally.find(key);
            if (it == tally.end()) {
                BranchComponent bc;
                bc.label = lab;
                bc.dim = comp.dim();
                bc.multiplicity = 1;
                tally.emplace(key, std::move(bc));
            } else {
                ++it->second.multiplicity;
            }
            covered += comp.dim();
            ++out.component_count;
        }
    }
    if (covered != rep.dim())
        throw DecompositionIncomplete("component dimensions sum to " + std::to_string(covered) +
                                      " of " + std::to_string(rep.dim()));
    for (auto& [key, bc] : tally) out.components.push_back(std::move(bc));
    return out;
}

}  // namespace uqso
