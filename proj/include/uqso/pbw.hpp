#pragma once

/**
 * @file pbw.hpp
 * @brief The abstract algebra U'_q(so_n): free words in the generators
 *        I+_{kl}, q-commutators, the recursive construction of I+-_{kl}, and
 *        normal ordering into the PBW basis by adjacent-pair straightening.
 *
 * The PBW order sorts generators by second index, then first index; a word is
 * normal when every adjacent pair is non-decreasing. Out-of-order pairs are
 * rewritten by one of six precompiled rules (chain, shared-index x2,
 * disjoint, nested, interleaved). Each rule either removes an inversion or
 * replaces the pair by strictly smaller products, so straightening
 * terminates; a step budget converts any latent bug into a diagnosable
 * error instead of a hang.
 */

#include <uqso/scalar.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace uqso {

// ---------------------------------------------------------------------------
// step budget (overridable via the CLI / UQSO_STEP_BUDGET)
// ---------------------------------------------------------------------------

inline std::atomic<std::int64_t>& step_budget_ref() {
    static std::atomic<std::int64_t> budget{1'000'000};
    return budget;
}
inline std::int64_t step_budget() { return step_budget_ref().load(); }
inline void set_step_budget(std::int64_t b) { step_budget_ref().store(b); }

// ---------------------------------------------------------------------------
// generators, words, monomials
// ---------------------------------------------------------------------------

/// I+_{kl} with 1 <= l < k <= n. The minus family is handled by expansion,
/// so only plus generators appear as basis letters.
struct GeneratorId {
    int k = 0;
    int l = 0;

    bool operator==(const GeneratorId& o) const { return k == o.k && l == o.l; }
    /// PBW position order: by second index, then first.
    bool operator<(const GeneratorId& o) const {
        if (l != o.l) return l < o.l;
        return k < o.k;
    }
    std::string str() const { return "I" + std::to_string(k) + std::to_string(l); }
};

inline void check_generator(int n, int k, int l) {
    if (!(1 <= l && l < k && k <= n))
        throw IndexOutOfRange("generator I(" + std::to_string(k) + "," + std::to_string(l) +
                              ") out of range for n=" + std::to_string(n));
}

using Word = std::vector<GeneratorId>;

/// A PBW-ordered monomial: generators in position order with positive
/// exponents.
struct Monomial {
    std::vector<std::pair<GeneratorId, int>> factors;

    static Monomial one() { return {}; }

    static Monomial from_ordered_word(const Word& w) {
        Monomial m;
        for (const auto& g : w) {
            if (!m.factors.empty() && m.factors.back().first == g)
                ++m.factors.back().second;
            else
                m.factors.push_back({g, 1});
        }
        return m;
    }

    Word to_word() const {
        Word w;
        for (const auto& [g, e] : factors)
            for (int i = 0; i < e; ++i) w.push_back(g);
        return w;
    }

    int degree() const {
        int d = 0;
        for (const auto& [g, e] : factors) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return factors == o.factors; }
    /// Canonical order: by total degree, then position-lexicographic.
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        for (size_t i = 0; i < std::min(factors.size(), o.factors.size()); ++i) {
            if (!(factors[i].first == o.factors[i].first))
                return factors[i].first < o.factors[i].first;
            if (factors[i].second != o.factors[i].second)
                return factors[i].second > o.factors[i].second;  // more of an earlier letter first
        }
        return factors.size() < o.factors.size();
    }

    std::string str() const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto& [g, e] : factors) {
            if (!s.empty()) s += "*";
            s += g.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// AlgebraElement: finite PBW-ordered linear combination
// ---------------------------------------------------------------------------

class AlgebraElement {
public:
    AlgebraElement(int n, DeformationParameter param)
        : n_(n), param_(std::move(param)) {}

    static AlgebraElement zero(int n, const DeformationParameter& param) {
        return AlgebraElement(n, param);
    }
    static AlgebraElement unit(int n, const DeformationParameter& param) {
        AlgebraElement e(n, param);
        e.terms_[Monomial::one()] = Scalar(1);
        return e;
    }

    int n() const { return n_; }
    const DeformationParameter& param() const { return param_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        check_compatible(o);
        AlgebraElement r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        check_compatible(o);
        AlgebraElement r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r(n_, param_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
        AlgebraElement r(x.n_, x.param_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : x.terms_) r.terms_[m] = s * c;
        return r;
    }
    AlgebraElement operator*(const AlgebraElement& o) const;  // normal-ordered product

    bool operator==(const AlgebraElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    void check_compatible(const AlgebraElement& o) const {
        if (n_ != o.n_ || !(param_ == o.param_))
            throw DimensionMismatch("algebra elements over different algebras");
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "(" + c.str() + ")*" + m.str();
        }
        return s;
    }

private:
    int n_;
    DeformationParameter param_;
    std::map<Monomial, Scalar> terms_;
};

// ---------------------------------------------------------------------------
// normal ordering
// ---------------------------------------------------------------------------

namespace detail {

struct RuleTerm {
    Rational coeff;   // rational because all rule coefficients are powers of p
    Word replacement;
};

/// Rewrites the out-of-order adjacent product A*B (id(A) > id(B)) using the
/// relation for the applicable index pattern.
inline std::vector<RuleTerm> rewrite_pair(const GeneratorId& A, const GeneratorId& B,
                                          const DeformationParameter& d) {
    const int a = A.k, b = A.l, c = B.k, e = B.l;
    if (c == b) {
        // chain a > b > e:  I_ab I_be = q I_be I_ab - q^{1/2} I_ae
        return {{d.p_pow(2), {B, A}}, {-d.p_pow(1), {GeneratorId{a, e}}}};
    }
    if (b == e) {
        // shared second index, a > c:  I_ab I_cb = q^{-1} I_cb I_ab + q^{-1/2} I_ac
        return {{d.p_pow(-2), {B, A}}, {d.p_pow(-1), {GeneratorId{a, c}}}};
    }
    if (c == a) {
        // shared first index, b > e:  I_ab I_ae = q^{-1} I_ae I_ab + q^{-1/2} I_be
        return {{d.p_pow(-2), {B, A}}, {d.p_pow(-1), {GeneratorId{b, e}}}};
    }
    if (c < b || c > a) {
        // disjoint (a>b>c>e) or nested (c>a>b>e): commute
        return {{Rational(1), {B, A}}};
    }
    // interleaved a > c > b > e:
    //   I_ab I_ce = I_ce I_ab + (q - q^{-1}) (I_be I_ac - I_ae I_cb)
    Rational dq = d.delta();
    return {{Rational(1), {B, A}},
            {dq, {GeneratorId{b, e}, GeneratorId{a, c}}},
            {-dq, {GeneratorId{a, e}, GeneratorId{c, b}}}};
}

}  // namespace detail

/// Normal-orders a linear combination of free words into the PBW basis.
inline AlgebraElement normal_form(int n, const std::map<Word, Scalar>& words,
                                  const DeformationParameter& d) {
    AlgebraElement out(n, d);
    std::map<Word, Scalar> pending = words;
    std::int64_t steps = 0;
    const std::int64_t budget = step_budget();
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar coeff = it->second;
        pending.erase(it);
        if (coeff.is_zero()) continue;
        // leftmost out-of-order adjacent pair
        int pos = -1;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i + 1] < w[i]) { pos = static_cast<int>(i); break; }
        }
        if (pos < 0) {
            out.add_term(Monomial::from_ordered_word(w), coeff);
            continue;
        }
        if (++steps > budget)
            throw NonTerminating("normal_form exceeded the rewrite step budget (" +
                                 std::to_string(budget) + ")");
        for (const auto& rt : detail::rewrite_pair(w[pos], w[pos + 1], d)) {
            Word nw;
            nw.reserve(w.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rt.replacement.begin(), rt.replacement.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            Scalar nc = coeff * Scalar(rt.coeff);
            auto pit = pending.find(nw);
            if (pit == pending.end()) {
                pending.emplace(std::move(nw), nc);
            } else {
                pit->second += nc;
                if (pit->second.is_zero()) pending.erase(pit);
            }
        }
    }
    return out;
}

inline AlgebraElement normal_form(int n, const Word& w, const DeformationParameter& d,
                                  const Scalar& coeff = Scalar(1)) {
    for (const auto& g : w) check_generator(n, g.k, g.l);
    return normal_form(n, std::map<Word, Scalar>{{w, coeff}}, d);
}

/// Re-normalizes an element (identity on well-formed elements; the

/// idempotence property of the straightening).
inline AlgebraElement normal_form(const AlgebraElement& x) {
    std::map<Word, Scalar> words;
    for (const auto& [m, c] : x.terms()) words[m.to_word()] = c;
    return normal_form(x.n(), words, x.param());
}

inline AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_compatible(o);
    std::map<Word, Scalar> words;
    for (const auto& [ma, ca] : terms_) {
        Word wa = ma.to_word();
        for (const auto& [mb, cb] : o.terms_) {
            Word w = wa;
            Word wb = mb.to_word();
            w.insert(w.end(), wb.begin(), wb.end());
            auto it = words.find(w);
            Scalar c = ca * cb;
            if (it == words.end()) words.emplace(std::move(w), c);
            else it->second += c;
        }
    }
    return normal_form(n_, words, param_);
}

// ---------------------------------------------------------------------------
// q-commutators and the recursive generators
// ---------------------------------------------------------------------------

enum class QSign { q, q_inverse };

/// [a,b]_q = q^{1/2} a b - q^{-1/2} b a  (exponents swapped for q_inverse).
inline AlgebraElement q_commutator(const AlgebraElement& a, const AlgebraElement& b,
                                   QSign sign = QSign::q) {
    a.check_compatible(b);
    const DeformationParameter& d = a.param();
    Scalar f = Scalar(d.p_pow(sign == QSign::q ? 1 : -1));
    Scalar g = Scalar(d.p_pow(sign == QSign::q ? -1 : 1));
    return f * (a * b) - g * (b * a);
}

enum class GenSign { plus, minus };

/// The basis generator I+_{kl} as an element.
inline AlgebraElement generator(int n, int k, int l, const DeformationParameter& d) {
    check_generator(n, k, l);
    AlgebraElement e(n, d);
    e.add_term(Monomial::from_ordered_word({GeneratorId{k, l}}), Scalar(1));
    return e;
}

/// I+-_{kl} built by the defining recursion
///   I+_{kl} = [I_{l+1,l}, I+_{k,l+1}]_q ,  I-_{kl} = [I_{l+1,l}, I-_{k,l+1}]_{q^{-1}} .
/// The plus family normal-orders to the single basis letter; the minus family
/// expands into plus-basis monomials.
inline AlgebraElement generator_element(int n, int k, int l, GenSign sign,
                                        const DeformationParameter& d) {
    check_generator(n, k, l);
    if (k == l + 1) return generator(n, k, l, d);
    AlgebraElement chain = generator(n, l + 1, l, d);
    AlgebraElement rest = generator_element(n, k, l + 1, sign, d);
    return q_commutator(chain, rest, sign == GenSign::plus ? QSign::q : QSign::q_inverse);
}

/// The central element of the so_4 subalgebra on indices 2i-1 .. 2i+2:
///   C_4 = q^{-1} I_{2i,2i-1} I_{2i+2,2i+1} - I_{2i+1,2i-1} I_{2i+2,2i}
///         + q I_{2i+1,2i} I_{2i+2,2i-1} .
inline AlgebraElement casimir_so4_element(int i, int n, const DeformationParameter& d) {
    const int lo = 2 * i - 1, hi = 2 * i + 2;
    if (lo < 1 || hi > n)
        throw IndexOutOfRange("casimir_so4_element: indices " + std::to_string(lo) + ".." +
                              std::to_string(hi) + " outside 1.." + std::to_string(n));
    auto G = [&](int k, int l) { return generator(n, k, l, d); };
    Scalar q = Scalar(d.p_pow(2)), qi = Scalar(d.p_pow(-2));
    return qi * (G(lo + 1, lo) * G(hi, hi - 1)) - G(hi - 1, lo) * G(hi, lo + 1) +
           q * (G(hi - 1, lo + 1) * G(hi, lo));
}

}  // namespace uqso
