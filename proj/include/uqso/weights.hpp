#pragma once

/**
 * @file weights.hpp
 * @brief Weight theory: simultaneous exact eigenspace decomposition of the
 *        commuting family T(I_21), T(I_43), ..., type classification, and
 *        Weyl-group invariance of weight diagrams.
 */

#include <uqso/matrix.hpp>
#include <uqso/reps.hpp>
#include <uqso/scalar.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace uqso {

struct Weight {
    std::vector<EigenLabel> labels;  // length k = floor(n/2)

    bool operator==(const Weight& o) const { return labels == o.labels; }
    bool operator<(const Weight& o) const {
        if (labels.size() != o.labels.size()) return labels.size() < o.labels.size();
        for (size_t i = 0; i < labels.size(); ++i) {
            if (!(labels[i] == o.labels[i])) return labels[i] < o.labels[i];
        }
        return false;
    }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + labels[i].str();
        return s + ")";
    }
};

struct WeightEntry {
    int multiplicity = 0;
    std::vector<Vector> eigenbasis;
};

struct WeightDiagram {
    int n = 0;
    int dim = 0;
    std::map<Weight, WeightEntry> entries;

    int weight_count() const { return static_cast<int>(entries.size()); }
    int multiplicity_sum() const {
        int s = 0;
        for (const auto& [w, e] : entries) s += e.multiplicity;
        return s;
    }
    bool contains(const Weight& w) const { return entries.count(w) > 0; }
};

/// Number of commuting diagonal-family generators I_{2i,2i-1}.
inline int diagonal_family_size(int n) { return n / 2; }

namespace detail {

struct LabeledSpace {
    EigenLabel label;
    std::vector<Vector> basis;
};

/// Exact eigenspace decomposition of one family member. Candidates are the
/// two closed eigenvalue forms scanned up to `bound`; the scan stops once the
/// eigenspaces fill the space.
inline std::vector<LabeledSpace> eigen_decompose(const Matrix& m, HalfInt bound,
                                                 const DeformationParameter& d) {
    const int dim = m.rows();
    std::vector<LabeledSpace> out;
    if (dim == 0) return out;
    if (m.is_diagonal()) {
        std::map<EigenLabel, std::vector<Vector>> spaces;
        for (int i = 0; i < dim; ++i) {
            auto lab = classify_eigenvalue(m(i, i), bound, d);
            if (!lab)
                throw UnclassifiedEigenvalue("diagonal entry " + m(i, i).str() +
                                             " matches neither eigenvalue form");
            Vector v(dim);
            v[i] = Scalar(1);
            spaces[*lab].push_back(std::move(v));
        }
        for (auto& [lab, basis] : spaces) out.push_back({lab, std::move(basis)});
        return out;
    }
    int accumulated = 0;
    std::vector<std::pair<Scalar, EigenLabel>> candidates;
    for (std::int64_t tw = 0; tw <= bound.twice && accumulated < dim; ++tw) {
        HalfInt hm{tw};
        candidates.clear();
        Scalar cl = Scalar::i() * q_number(hm, d);
        candidates.push_back({cl, EigenLabel::classical(hm)});
        if (tw > 0) candidates.push_back({-cl, EigenLabel::classical(-hm)});
        if (tw % 2 == 1) {
            Scalar nc = q_plus_number(hm, d);
            candidates.push_back({nc, EigenLabel::nonclassical(hm, +1)});
            candidates.push_back({-nc, EigenLabel::nonclassical(hm, -1)});
        }
        for (const auto& [lambda, lab] : candidates) {
            Matrix shifted = m - lambda * Matrix::identity(dim);
            auto basis = kernel(shifted);
            if (!basis.empty()) {
                accumulated += static_cast<int>(basis.size());
                out.push_back({lab, std::move(basis)});
            }
            if (accumulated >= dim) break;
        }
    }
    if (accumulated != dim) {
        // distinguish a defective matrix from an unrecognized eigenvalue
        for (const auto& ls : out) {
            Scalar lambda = ls.label.kind == EigenLabel::Kind::Classical
                                ? Scalar::i() * q_number(ls.label.m, d)
                                : Scalar(ls.label.sign) * q_plus_number(ls.label.m, d);
            Matrix shifted = m - lambda * Matrix::identity(dim);
            if (kernel(shifted * shifted).size() > ls.basis.size())
                throw NotDiagonalizable("generalized eigenspace exceeds eigenspace at " +
                                        ls.label.str());
        }
        throw UnclassifiedEigenvalue(
            "eigenspaces of the classified forms span only " + std::to_string(accumulated) +
            " of " + std::to_string(dim) + " dimensions");
    }
    return out;
}

}  // namespace detail

/// Joint exact eigenspace decomposition of the commuting family. Multiplicity
/// sum equals dim (simultaneous diagonalizability is asserted, not assumed).
inline WeightDiagram weight_decomposition(const Representation& rep) {
    if (rep.n() < 3) throw InvalidParameter("weight_decomposition: need n >= 3");
    const int k = diagonal_family_size(rep.n());
    const HalfInt bound = HalfInt::whole(2 * std::max(rep.dim(), 1));
    const DeformationParameter& d = rep.param();

    struct Node {
        std::vector<EigenLabel> labels;
        std::vector<Vector> basis;  // in ambient coordinates
    };
    std::vector<Node> nodes{{{}, {}}};
    {
        // seed with the full space
        Node& seed = nodes[0];
        seed.basis.resize(static_cast<size_t>(rep.dim()));
        for (int i = 0; i < rep.dim(); ++i) {
            Vector v(rep.dim());
            v[i] = Scalar(1);
            seed.basis[static_cast<size_t>(i)] = std::move(v);
        }
    }
    for (int i = 1; i <= k; ++i) {
        const Matrix& M = rep.chain_image(2 * i);
        std::vector<Node> next;
        for (auto& node : nodes) {
            if (node.basis.empty()) continue;
            Matrix restricted = restrict_to_subspace(M, node.basis);
            for (auto& sub : detail::eigen_decompose(restricted, bound, d)) {
                Node child;
                child.labels = node.labels;
                child.labels.push_back(sub.label);
                for (const auto& coords : sub.basis) {
                    Vector v(rep.dim());
                    for (size_t t = 0; t < node.basis.size(); ++t)
                        if (!coords[t].is_zero())
                            for (int rr = 0; rr < rep.dim(); ++rr)
                                v[static_cast<size_t>(rr)] += coords[t] * node.basis[t][static_cast<size_t>(rr)];
                    child.basis.push_back(std::move(v));
                }
                next.push_back(std::move(child));
            }
        }
        nodes = std::move(next);
    }
    WeightDiagram dg;
    dg.n = rep.n();
    dg.dim = rep.dim();
    for (auto& node : nodes) {
        Weight w{node.labels};
        WeightEntry& e = dg.entries[w];
        e.multiplicity += static_cast<int>(node.basis.size());
        for (auto& v : node.basis) e.eigenbasis.push_back(std::move(v));
    }
    if (dg.multiplicity_sum() != rep.dim())
        throw NotDiagonalizable("joint eigenspaces do not fill the space");
    return dg;
}

enum class RepType { Classical, Nonclassical };

inline std::string rep_type_name(RepType t) {
    return t == RepType::Classical ? "classical" : "nonclassical";
}

/// The shared eigenvalue type; asserts per-operator and cross-operator
/// uniformity (and, for nonclassical coordinates, a fixed sign per
/// coordinate).
inline RepType classify_type(const WeightDiagram& dg) {
    bool any = false;
    EigenLabel::Kind kind{};
    std::vector<int> coord_sign;
    for (const auto& [w, e] : dg.entries) {
        if (coord_sign.empty()) coord_sign.assign(w.labels.size(), 0);
        for (size_t i = 0; i < w.labels.size(); ++i) {
            const EigenLabel& lab = w.labels[i];
            if (!any) {
                kind = lab.kind;
                any = true;
            } else if (lab.kind != kind) {
                throw MixedTypes("weight " + w.str() + " mixes eigenvalue types");
            }
            if (lab.kind == EigenLabel::Kind::Nonclassical) {
                if (coord_sign[i] == 0) coord_sign[i] = lab.sign;
                else if (coord_sign[i] != lab.sign)
                    throw MixedTypes("coordinate " + std::to_string(i + 1) +
                                     " carries both signs of the nonclassical form");
            }
        }
    }
    if (!any) throw InvalidParameter("empty weight diagram");
    return kind == EigenLabel::Kind::Classical ? RepType::Classical : RepType::Nonclassical;
}

inline RepType classify_type(const Representation& rep) {
    return classify_type(weight_decomposition(rep));
}

// ---------------------------------------------------------------------------
// Weyl-group invariance
// ---------------------------------------------------------------------------

struct WeylElement {
    std::vector<int> perm;   // image positions
    std::vector<int> flips;  // +-1 per coordinate
    std::string str() const {
        std::string s = "perm(";
        for (size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i]);
        s += ") flips(";
        for (size_t i = 0; i < flips.size(); ++i) s += (i ? "," : "") + std::string(flips[i] > 0 ? "+" : "-");
        return s + ")";
    }
};

struct WeylCheckResult {
    bool invariant = true;
    WeylElement witness_element;
    Weight witness_weight;
};

inline EigenLabel flip_label(const EigenLabel& lab) {
    if (lab.kind == EigenLabel::Kind::Classical) return EigenLabel::classical(-lab.m);
    return EigenLabel::nonclassical(lab.m, -lab.sign);
}

/// All coordinate permutations combined with sign flips (all flips for odd n,
/// even numbers of flips for even n) must preserve multiplicities.
inline WeylCheckResult weyl_invariance_check(const WeightDiagram& dg, int n) {
    const int k = diagonal_family_size(n);
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    WeylCheckResult res;
    std::map<Weight, int> mults;
    for (const auto& [w, e] : dg.entries) mults[w] = e.multiplicity;
    do {
        for (int mask = 0; mask < (1 << k); ++mask) {
            int parity = 0;
            for (int b = 0; b < k; ++b) parity += (mask >> b) & 1;
            if (n % 2 == 0 && parity % 2 != 0) continue;
            for (const auto& [w, mult] : mults) {
                Weight img;
                img.labels.resize(static_cast<size_t>(k));
                for (int i = 0; i < k; ++i) {
                    EigenLabel lab = w.labels[static_cast<size_t>(perm[static_cast<size_t>(i)])];
                    if ((mask >> i) & 1) lab = flip_label(lab);
                    img.labels[static_cast<size_t>(i)] = lab;
                }
                auto it = mults.find(img);
                if (it == mults.end() || it->second != mult) {
                    res.invariant = false;
                    res.witness_element.perm = perm;
                    res.witness_element.flips.assign(static_cast<size_t>(k), 1);
                    for (int b = 0; b < k; ++b)
                        if ((mask >> b) & 1) res.witness_element.flips[static_cast<size_t>(b)] = -1;
                    res.witness_weight = w;
                    return res;
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

}  // namespace uqso
