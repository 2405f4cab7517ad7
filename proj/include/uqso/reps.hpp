#pragma once

/**
 * @file reps.hpp
 * @brief Concrete matrix representations of U'_q(so_3) and U'_q(so_4): the
 *        classical and nonclassical families, sign-flip twists, restriction
 *        to generator chains, and evaluation of algebra elements.
 *
 * Where the source formulas carry typographical ambiguities (the nonclassical
 * I_32 rows), the constructors use the variant singled out by requiring the
 * defining relations to hold exactly; the selections are pinned by tests
 * that also exhibit the failing alternatives.
 */

#include <uqso/matrix.hpp>
#include <uqso/pbw.hpp>
#include <uqso/scalar.hpp>

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace uqso {

// ---------------------------------------------------------------------------
// automorphism group G = {sign flips of the chain generators}
// ---------------------------------------------------------------------------

/// g = (eps_2, ..., eps_n), eps_j = -1 when g flips I_{j,j-1}. Order 2^{n-1}.
struct AutomorphismG {
    std::vector<int> eps;  // index 0 corresponds to j = 2

    static AutomorphismG identity(int n) {
        AutomorphismG g;
        g.eps.assign(static_cast<size_t>(n - 1), 1);
        return g;
    }
    int n() const { return static_cast<int>(eps.size()) + 1; }
    int eps_of(int j) const { return eps.at(static_cast<size_t>(j - 2)); }
    bool is_identity() const {
        for (int e : eps)
            if (e != 1) return false;
        return true;
    }
    AutomorphismG compose(const AutomorphismG& o) const {
        AutomorphismG g = *this;
        for (size_t i = 0; i < eps.size(); ++i) g.eps[i] *= o.eps[i];
        return g;
    }
    /// The sign g applies to the composite generator I+_{kl}
    /// (each chain generator I_{j,j-1}, l < j <= k, occurs exactly once).
    int eps_of_composite(int k, int l) const {
        int s = 1;
        for (int j = l + 1; j <= k; ++j) s *= eps_of(j);
        return s;
    }
    bool operator==(const AutomorphismG& o) const { return eps == o.eps; }
    bool operator<(const AutomorphismG& o) const { return eps < o.eps; }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < eps.size(); ++i)
            s += (i ? "," : "") + std::string(eps[i] > 0 ? "+1" : "-1");
        return s + ")";
    }

    static std::vector<AutomorphismG> all(int n) {
        std::vector<AutomorphismG> out;
        const int count = 1 << (n - 1);
        for (int mask = 0; mask < count; ++mask) {
            AutomorphismG g = identity(n);
            for (int b = 0; b < n - 1; ++b)
                if (mask & (1 << b)) g.eps[static_cast<size_t>(b)] = -1;
            out.push_back(std::move(g));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// family descriptors
// ---------------------------------------------------------------------------

enum class RepFamily {
    ClassicalSO3,
    NonclassicalSO3,
    ClassicalSO4,
    NonclassicalSO4,
    Twisted,
    Restricted,
    Custom,
};

inline std::string family_name(RepFamily f) {
    switch (f) {
        case RepFamily::ClassicalSO3: return "so3-classical";
        case RepFamily::NonclassicalSO3: return "so3-nonclassical";
        case RepFamily::ClassicalSO4: return "so4-classical";
        case RepFamily::NonclassicalSO4: return "so4-nonclassical";
        case RepFamily::Twisted: return "twisted";
        case RepFamily::Restricted: return "restricted";
        case RepFamily::Custom: return "custom";
    }
    return "?";
}

struct FamilyInfo {
    RepFamily kind = RepFamily::Custom;
    HalfInt l;                      // ClassicalSO3
    int size = 0;                   // NonclassicalSO3
    HalfInt r, s;                   // SO4 families
    std::array<int, 3> eps{1, 1, 1};  // nonclassical sign parameters
    std::string note;               // provenance for twisted/restricted/custom

    std::string describe() const {
        switch (kind) {
            case RepFamily::ClassicalSO3: return "so3-classical(l=" + l.str() + ")";
            case RepFamily::NonclassicalSO3:
                return "so3-nonclassical(size=" + std::to_string(size) +
                       ",eps=" + std::to_string(eps[0]) + "," + std::to_string(eps[1]) + ")";
            case RepFamily::ClassicalSO4:
                return "so4-classical(r=" + r.str() + ",s=" + s.str() + ")";
            case RepFamily::NonclassicalSO4:
                return "so4-nonclassical(r=" + r.str() + ",s=" + s.str() +
                       ",eps=" + std::to_string(eps[0]) + "," + std::to_string(eps[1]) + "," +
                       std::to_string(eps[2]) + ")";
            default: return family_name(kind) + (note.empty() ? "" : "(" + note + ")");
        }
    }
};

// ---------------------------------------------------------------------------
// Representation
// ---------------------------------------------------------------------------

class Representation {
public:
    Representation(int n, DeformationParameter param, FamilyInfo family,
                   std::vector<Matrix> chain_mats, std::vector<std::string> basis_labels)
        : n_(n),
          param_(std::move(param)),
          family_(std::move(family)),
          mats_(std::move(chain_mats)),
          basis_labels_(std::move(basis_labels)) {
        if (static_cast<int>(mats_.size()) != n_ - 1)
            throw DimensionMismatch("expected one matrix per chain generator");
        dim_ = mats_.empty() ? 0 : mats_[0].rows();
        for (const auto& m : mats_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw DimensionMismatch("chain matrices must share one square shape");
        build_image_cache();
    }

    int n() const { return n_; }
    int dim() const { return dim_; }
    const DeformationParameter& param() const { return param_; }
    const FamilyInfo& family() const { return family_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }

    /// Image of the chain generator I_{j,j-1}, j = 2..n.
    const Matrix& chain_image(int j) const {
        if (j < 2 || j > n_) throw IndexOutOfRange("chain generator index out of range");
        return mats_[static_cast<size_t>(j - 2)];
    }

    /// Image of any basis generator I+_{kl}, built once by the defining
    /// recursion I+_{kl} = [I_{l+1,l}, I+_{k,l+1}]_q on matrices.
    const Matrix& image(GeneratorId g) const {
        auto it = images_.find(g);
        if (it == images_.end()) throw IndexOutOfRange("no image for " + g.str());
        return it->second;
    }

    /// Substitution homomorphism on normal-ordered elements.
    Matrix image_of(const AlgebraElement& x) const {
        if (x.n() != n_) throw DimensionMismatch("element algebra size differs from rep");
        if (!(x.param() == param_)) throw DimensionMismatch("element parameter differs from rep");
        Matrix acc(dim_, dim_);
        for (const auto& [mono, coeff] : x.terms()) {
            Matrix term = Matrix::identity(dim_);
            for (const auto& [g, e] : mono.factors)
                for (int t = 0; t < e; ++t) term = term * image(g);
            acc = acc + coeff * term;
        }
        return acc;
    }

    /// Same rep with one chain matrix replaced (mutation testing and
    /// component assembly).
    Representation with_chain_matrix(int j, Matrix m, std::string note) const {
        std::vector<Matrix> mats = mats_;
        mats.at(static_cast<size_t>(j - 2)) = std::move(m);
        FamilyInfo fi;
        fi.kind = RepFamily::Custom;
        fi.note = std::move(note);
        return Representation(n_, param_, fi, std::move(mats), basis_labels_);
    }

    std::vector<Matrix> chain_images() const { return mats_; }

private:
    void build_image_cache() {
        for (int j = 2; j <= n_; ++j) images_[GeneratorId{j, j - 1}] = mats_[static_cast<size_t>(j - 2)];
        const Rational ph = param_.p_pow(1), pl = param_.p_pow(-1);
        for (int span = 2; span < n_; ++span) {
            for (int l = 1; l + span <= n_; ++l) {
                int k = l + span;
                const Matrix& a = images_.at(GeneratorId{l + 1, l});
                const Matrix& b = images_.at(GeneratorId{k, l + 1});
                images_[GeneratorId{k, l}] = Scalar(ph) * (a * b) - Scalar(pl) * (b * a);
            }
        }
    }

    int n_;
    DeformationParameter param_;
    FamilyInfo family_;
    std::vector<Matrix> mats_;
    std::vector<std::string> basis_labels_;
    std::map<GeneratorId, Matrix> images_;
    int dim_ = 0;
};

// ---------------------------------------------------------------------------
// relation checking (used by constructors as a self-check; the full reporting
// variant lives in branch.hpp)
// ---------------------------------------------------------------------------

namespace detail {

/// The two trilinear relations for the adjacent pair (A, B) = (I_{i,i-1}, I_{i+1,i}):
///   A A B - (q+q^{-1}) A B A + B A A = -B
///   A B B - (q+q^{-1}) B A B + B B A = -A
inline bool trilinear_pair_holds(const Matrix& A, const Matrix& B, const DeformationParameter& d) {
    Scalar qq = Scalar(d.p_pow(2) + d.p_pow(-2));
    Matrix r1 = A * (A * B) - qq * (A * (B * A)) + B * (A * A) + B;
    if (!r1.is_zero()) return false;
    Matrix r2 = A * (B * B) - qq * (B * (A * B)) + (B * B) * A + A;
    return r2.is_zero();
}

inline bool defining_relations_hold(const Representation& rep) {
    for (int i = 2; i < rep.n(); ++i)
        if (!trilinear_pair_holds(rep.chain_image(i), rep.chain_image(i + 1), rep.param()))
            return false;
    for (int i = 2; i <= rep.n(); ++i)
        for (int j = i + 2; j <= rep.n(); ++j)
            if (!commutator(rep.chain_image(i), rep.chain_image(j)).is_zero()) return false;
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// explicit families
// ---------------------------------------------------------------------------

/// Classical T_l on basis |l,m>, m = -l..l:
///   I_21 |m> = i [m]_q |m>
///   I_32 |m> = ( [l-m]_q |m+1> - [l+m]_q |m-1> ) / (q^m + q^{-m})
inline Representation classical_so3(HalfInt l, const DeformationParameter& d) {
    if (l.twice < 0) throw InvalidParameter("classical_so3: l must be >= 0");
    std::vector<std::int64_t> basis;  // twice-values of m
    for (std::int64_t t = -l.twice; t <= l.twice; t += 2) basis.push_back(t);
    const int dim = static_cast<int>(basis.size());
    auto idx = [&](std::int64_t t) { return static_cast<int>((t + l.twice) / 2); };
    Matrix A(dim, dim), B(dim, dim);
    std::vector<std::string> labels;
    for (std::int64_t t : basis) {
        int i = idx(t);
        HalfInt m{t};
        labels.push_back("|" + l.str() + "," + m.str() + ">");
        A(i, i) = Scalar::i() * q_number(m, d);
        Scalar den = Scalar(d.q_pow(m) + d.q_pow(-m));
        if (t + 2 <= l.twice) B(idx(t + 2), i) = q_number(l - m, d) / den;
        if (t - 2 >= -l.twice) B(idx(t - 2), i) = -(q_number(l + m, d) / den);
    }
    FamilyInfo fi;
    fi.kind = RepFamily::ClassicalSO3;
    fi.l = l;
    return Representation(3, d, fi, {A, B}, labels);
}

/// Nonclassical T^{e1,e2}_size on basis |k>, k = 1..size:
///   I_21 |k> = e1 [k-1/2]_+ |k>
///   I_32 |1> = ( e2 [size]_q |1> + i [size-1]_q |2> ) / (q^{1/2} - q^{-1/2})
///   I_32 |k> = ( i [size-k]_q |k+1> + i [size+k-1]_q |k-1> ) / (q^{k-1/2} - q^{-k+1/2})
/// The sign of the |k-1> term is the variant that satisfies the defining
/// relations (the printed formula is ambiguous there).
inline Representation nonclassical_so3(int size, int e1, int e2, const DeformationParameter& d) {
    if (size < 1) throw InvalidParameter("nonclassical_so3: size must be >= 1");
    if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
        throw InvalidParameter("nonclassical_so3: eps must be +-1");
    Matrix A(size, size), B(size, size);
    std::vector<std::string> labels;
    for (int k = 1; k <= size; ++k) {
        int i = k - 1;
        labels.push_back("|" + std::to_string(k) + ">");
        A(i, i) = Scalar(e1) * q_plus_number(HalfInt{2 * k - 1}, d);
        if (k == 1) {
            Scalar den = Scalar(d.p_pow(1) - d.p_pow(-1));
            B(0, 0) = Scalar(e2) * q_number(HalfInt::whole(size), d) / den;
            if (size >= 2) B(1, 0) = Scalar::i() * q_number(HalfInt::whole(size - 1), d) / den;
        } else {
            Scalar den = Scalar(d.p_pow(2 * k - 1) - d.p_pow(-(2 * k - 1)));
            if (k + 1 <= size)
                B(i + 1, i) = Scalar::i() * q_number(HalfInt::whole(size - k), d) / den;
            B(i - 1, i) = Scalar::i() * q_number(HalfInt::whole(size + k - 1), d) / den;
        }
    }
    FamilyInfo fi;
    fi.kind = RepFamily::NonclassicalSO3;
    fi.size = size;
    fi.eps = {e1, e2, 1};
    Representation rep(3, d, fi, {A, B}, labels);
    if (!detail::defining_relations_hold(rep))
        throw RelationCheckFailed("nonclassical_so3 construction self-check failed");
    return rep;
}

/// Classical T_{jj'} with j = (r+s)/2, j' = (r-s)/2 on basis |k,l>,
/// k = -j..j, l = -j'..j'. Diagonal family i[k+l]_q, i[k-l]_q; I_32 acts by
/// the four-term nearest-neighbour formula.
inline Representation classical_so4(HalfInt r, HalfInt s, const DeformationParameter& d) {
    if (r.twice < s.abs().twice) throw InvalidParameter("classical_so4: need r >= |s|");
    if ((r.twice + s.twice) % 2 != 0)
        throw InvalidParameter("classical_so4: r and s must both be integral or both half-integral");
    const HalfInt j{(r + s).twice / 2}, jp{(r - s).twice / 2};
    std::vector<std::pair<std::int64_t, std::int64_t>> basis;
    for (std::int64_t k = -j.twice; k <= j.twice; k += 2)
        for (std::int64_t l = -jp.twice; l <= jp.twice; l += 2) basis.push_back({k, l});
    const int dim = static_cast<int>(basis.size());
    std::map<std::pair<std::int64_t, std::int64_t>, int> idx;
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) {
        idx[basis[static_cast<size_t>(i)]] = i;
        labels.push_back("|" + HalfInt{basis[static_cast<size_t>(i)].first}.str() + "," +
                         HalfInt{basis[static_cast<size_t>(i)].second}.str() + ">");
    }
    Matrix A(dim, dim), B(dim, dim), C(dim, dim);
    for (const auto& [k2, l2] : basis) {
        int i = idx.at({k2, l2});
        A(i, i) = Scalar::i() * q_number(HalfInt{k2 + l2}, d);
        C(i, i) = Scalar::i() * q_number(HalfInt{k2 - l2}, d);
        Scalar den = Scalar((d.q_pow(HalfInt{k2 + l2}) + d.q_pow(HalfInt{-k2 - l2})) *
                            (d.q_pow(HalfInt{k2 - l2}) + d.q_pow(HalfInt{-k2 + l2})));
        auto put = [&](std::int64_t tk, std::int64_t tl, const Scalar& num) {
            auto it = idx.find({tk, tl});
            if (it != idx.end()) B(it->second, i) += num / den;
        };
        auto cosh_q = [&](HalfInt m) { return Scalar(d.q_pow(m) + d.q_pow(-m)); };
        put(k2, l2 + 2, -(cosh_q(HalfInt{j.twice - l2}) * q_number(HalfInt{jp.twice - l2}, d)));
        put(k2, l2 - 2, cosh_q(HalfInt{j.twice + l2}) * q_number(HalfInt{jp.twice + l2}, d));
        put(k2 + 2, l2, cosh_q(HalfInt{jp.twice - k2}) * q_number(HalfInt{j.twice - k2}, d));
        put(k2 - 2, l2, -(cosh_q(HalfInt{jp.twice + k2}) * q_number(HalfInt{j.twice + k2}, d)));
    }
    FamilyInfo fi;
    fi.kind = RepFamily::ClassicalSO4;
    fi.r = r;
    fi.s = s;
    return Representation(4, d, fi, {A, B, C}, labels);
}

/// Nonclassical T^{e1,e2,e3}_{jj'}, r >= s > 0 both half-integral
/// non-integral. Exactly one of j, j' is half-integral; the corresponding
/// index is truncated to positive values and the out-of-range step of I_32
/// reflects back with a real coefficient carrying e3:
///   I_21 |k,l> = e1 [k+l]_+ |k,l> ,  I_43 |k,l> = e2 [k-l]_+ |k,l>
///   I_32 |k,l> = { -i[j'-l][j-l] |k,l+1> + i[j'+l][j+l] |k,l-1>
///                  -i[j'-k][j-k] |k+1,l> + i[j'+k][j+k] |k-1,l> }
///                / ( [k+l]_q [k-l]_q (q-q^{-1}) )
/// with |1/2-1,l> replaced by e3 (-1)^l |1/2,-l> (no i on that term), and
/// symmetrically in l when j' is the half-integral one.
inline Representation nonclassical_so4(HalfInt r, HalfInt s, int e1, int e2, int e3,
                                       const DeformationParameter& d) {
    if (!(r >= s && s.twice > 0)) throw InvalidParameter("nonclassical_so4: need r >= s > 0");
    if (r.is_integer() || s.is_integer())
        throw InvalidParameter("nonclassical_so4: r and s must be half-integral non-integral");
    for (int e : {e1, e2, e3})
        if (e != 1 && e != -1) throw InvalidParameter("nonclassical_so4: eps must be +-1");
    const HalfInt j{(r + s).twice / 2}, jp{(r - s).twice / 2};
    const bool half_k = !j.is_integer();  // j half-integral -> k truncated
    std::vector<std::pair<std::int64_t, std::int64_t>> basis;
    if (half_k) {
        for (std::int64_t k = 1; k <= j.twice; k += 2)
            for (std::int64_t l = -jp.twice; l <= jp.twice; l += 2) basis.push_back({k, l});
    } else {
        for (std::int64_t k = -j.twice; k <= j.twice; k += 2)
            for (std::int64_t l = 1; l <= jp.twice; l += 2) basis.push_back({k, l});
    }
    const int dim = static_cast<int>(basis.size());
    std::map<std::pair<std::int64_t, std::int64_t>, int> idx;
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) {
        idx[basis[static_cast<size_t>(i)]] = i;
        labels.push_back("|" + HalfInt{basis[static_cast<size_t>(i)].first}.str() + "," +
                         HalfInt{basis[static_cast<size_t>(i)].second}.str() + ">");
    }
    Matrix A(dim, dim), B(dim, dim), C(dim, dim);
    auto br = [&](std::int64_t tw) { return q_number(HalfInt{tw}, d); };
    for (const auto& [k2, l2] : basis) {
        int i = idx.at({k2, l2});
        A(i, i) = Scalar(e1) * q_plus_number(HalfInt{k2 + l2}, d);
        C(i, i) = Scalar(e2) * q_plus_number(HalfInt{k2 - l2}, d);
        Scalar den = br(k2 + l2) * br(k2 - l2) * Scalar(d.delta());
        auto put = [&](std::int64_t tk, std::int64_t tl, const Scalar& num) {
            auto it = idx.find({tk, tl});
            if (it != idx.end()) B(it->second, i) += num / den;
        };
        put(k2, l2 + 2, -Scalar::i() * br(jp.twice - l2) * br(j.twice - l2));
        put(k2, l2 - 2, Scalar::i() * br(jp.twice + l2) * br(j.twice + l2));
        put(k2 + 2, l2, -Scalar::i() * br(jp.twice - k2) * br(j.twice - k2));
        if (half_k && k2 == 1) {
            // reflection |1/2,-l> with a real coefficient
            int par = ((l2 / 2) % 2 + 2) % 2;  // parity of the integer l
            Scalar sgn = Scalar(e3 * (par == 0 ? 1 : -1));
            put(1, -l2, sgn * br(jp.twice + 1) * br(j.twice + 1));
        } else {
            put(k2 - 2, l2, Scalar::i() * br(jp.twice + k2) * br(j.twice + k2));
        }
        if (!half_k && l2 == 1) {
            // reflection |-k,1/2> with a real coefficient
            int par = ((k2 / 2) % 2 + 2) % 2;  // parity of the integer k
            Scalar sgn = Scalar(e3 * (par == 0 ? 1 : -1));
            put(-k2, 1, sgn * br(jp.twice + 1) * br(j.twice + 1));
        }
    }
    FamilyInfo fi;
    fi.kind = RepFamily::NonclassicalSO4;
    fi.r = r;
    fi.s = s;
    fi.eps = {e1, e2, e3};
    Representation rep(4, d, fi, {A, B, C}, labels);
    if (!detail::defining_relations_hold(rep))
        throw RelationCheckFailed("nonclassical_so4 construction self-check failed");
    return rep;
}

// ---------------------------------------------------------------------------
// twists and restriction
// ---------------------------------------------------------------------------

/// T^(g) = T o g: multiplies each chain matrix by its sign.
inline Representation twist(const Representation& rep, const AutomorphismG& g) {
    if (g.n() != rep.n()) throw DimensionMismatch("automorphism rank differs from rep");
    std::vector<Matrix> mats;
    for (int j = 2; j <= rep.n(); ++j) mats.push_back(Scalar(g.eps_of(j)) * rep.chain_image(j));
    FamilyInfo fi = rep.family();
    if (g.is_identity()) return Representation(rep.n(), rep.param(), fi, mats, rep.basis_labels());
    FamilyInfo twisted;
    twisted.kind = RepFamily::Twisted;
    twisted.note = fi.describe() + " o g=" + g.str();
    // keep the underlying family parameters visible for callers
    twisted.l = fi.l;
    twisted.size = fi.size;
    twisted.r = fi.r;
    twisted.s = fi.s;
    twisted.eps = fi.eps;
    return Representation(rep.n(), rep.param(), twisted, mats, rep.basis_labels());
}

/// Restricts to the contiguous chain I_{a,a-1}, ..., I_{b,b-1} and reindexes
/// it as a representation of U'_q(so_{b-a+2}).
inline Representation restrict_chain(const Representation& rep, const std::vector<int>& js) {
    if (js.empty()) throw InvalidSubset("empty generator subset");
    for (size_t i = 0; i + 1 < js.size(); ++i)
        if (js[i + 1] != js[i] + 1) throw InvalidSubset("generator subset must be contiguous");
    if (js.front() < 2 || js.back() > rep.n())
        throw InvalidSubset("generator subset outside the chain");
    std::vector<Matrix> mats;
    for (int j : js) mats.push_back(rep.chain_image(j));
    FamilyInfo fi;
    fi.kind = RepFamily::Restricted;
    fi.note = rep.family().describe() + " restricted to I(" + std::to_string(js.front()) + ".." +
              std::to_string(js.back()) + ")";
    const int nn = static_cast<int>(js.size()) + 1;
    return Representation(nn, rep.param(), fi, std::move(mats), rep.basis_labels());
}

}  // namespace uqso
