#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalar arithmetic over the Gaussian rationals Q(i), with a
 *        fixed rational deformation parameter p = q^{1/2}.
 *
 * Everything downstream is exact: identities are tested as literal zero,
 * never against a tolerance. Half-integers are stored as doubled integers
 * so that q^m for half-integral m is always an integral power of p.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace uqso {

using Rational = mpq_class;

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct AmbiguousMatch : Error { using Error::Error; };
struct NonTerminating : Error { using Error::Error; };
struct RelationCheckFailed : Error { using Error::Error; };
struct NotDiagonalizable : Error { using Error::Error; };
struct UnclassifiedEigenvalue : Error { using Error::Error; };
struct MixedTypes : Error { using Error::Error; };
struct WeightNotInDiagram : Error { using Error::Error; };
struct UnsupportedIndex : Error { using Error::Error; };
struct NoHighestWeight : Error { using Error::Error; };
struct MultipleHighestWeights : Error { using Error::Error; };
struct InvalidSubset : Error { using Error::Error; };
struct DecompositionIncomplete : Error { using Error::Error; };
struct UnclassifiableRepresentation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// HalfInt
// ---------------------------------------------------------------------------

/// A half-integer m, stored as twice = 2m.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t tw) : twice(tw) {}

    /// The half-integer n/1, i.e. twice = 2n.
    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(std::int64_t tw) { return HalfInt(tw); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr friend auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return twice < 0 ? HalfInt(-twice) : *this; }
    constexpr int sign() const { return twice < 0 ? -1 : twice > 0 ? 1 : 0; }

    Rational to_rational() const { return Rational(twice, 2); }

    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    /// Parses "3", "-2", "1/2", "-5/2".
    static HalfInt parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return whole(std::stoll(s));
            std::int64_t num = std::stoll(s.substr(0, slash));
            std::int64_t den = std::stoll(s.substr(slash + 1));
            if (den == 2) return halves(num);
            if (den == 1) return whole(num);
        } catch (const std::exception&) {
        }
        throw ParseError("not a half-integer: '" + s + "'");
    }
};

// ---------------------------------------------------------------------------
// Scalar: exact Gaussian rational re + i*im
// ---------------------------------------------------------------------------

class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(const Rational& re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(long re) : re_(re), im_(0) {}             // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n == 0) throw Error("division by zero scalar");
        return Scalar((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
    }
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar conj() const { return Scalar(re_, -im_); }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order (re, then im); used only for canonical sorting.
    bool operator<(const Scalar& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return cmp(im_, o.im_) < 0;
    }

    std::string str() const {
        if (im_ == 0) return re_.get_str();
        if (re_ == 0) return im_.get_str() + "*i";
        return re_.get_str() + (im_ > 0 ? "+" : "") + im_.get_str() + "*i";
    }

private:
    Rational re_, im_;
};

inline Scalar operator*(const Rational& a, const Scalar& b) { return Scalar(a) * b; }

/// x^e for integral e (negative allowed), exact.
inline Rational rational_pow(const Rational& x, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (x == 0) throw InvalidParameter("0 cannot be raised to a negative power");
    mpz_class num = x.get_num(), den = x.get_den();
    bool inv = e < 0;
    std::uint64_t k = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
    Rational r = inv ? Rational(pd, pn) : Rational(pn, pd);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// DeformationParameter: p = q^{1/2}, q = p^2
// ---------------------------------------------------------------------------

class DeformationParameter {
public:
    explicit DeformationParameter(Rational p) : p_(std::move(p)) {
        if (p_ <= 0 || p_ == 1)
            throw InvalidParameter("deformation parameter p must be positive and != 1");
    }

    static DeformationParameter parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return DeformationParameter(Rational(static_cast<long>(std::stol(s))));
            Rational r(static_cast<long>(std::stol(s.substr(0, slash))),
                       static_cast<long>(std::stol(s.substr(slash + 1))));
            r.canonicalize();
            return DeformationParameter(r);
        } catch (const std::invalid_argument&) {
            throw ParseError("not a rational: '" + s + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("not a rational: '" + s + "'");
        }
    }

    const Rational& p() const { return p_; }
    Rational q() const { return p_ * p_; }

    /// p^e, exact, e any integer.
    Rational p_pow(std::int64_t e) const { return rational_pow(p_, e); }

    /// q^m for half-integral m (= p^{2m}, always an integral power of p).
    Rational q_pow(HalfInt m) const { return p_pow(m.twice); }

    /// q - q^{-1}
    Rational delta() const { return p_pow(2) - p_pow(-2); }

    bool operator==(const DeformationParameter& o) const { return p_ == o.p_; }

private:
    Rational p_;
};

/// [m]_q = (q^m - q^{-m}) / (q - q^{-1}); odd in m, purely rational.
inline Scalar q_number(HalfInt m, const DeformationParameter& d) {
    return Scalar((d.q_pow(m) - d.q_pow(-m)) / d.delta());
}

/// [m]_+ = (q^m + q^{-m}) / (q - q^{-1}); even in m.
inline Scalar q_plus_number(HalfInt m, const DeformationParameter& d) {
    return Scalar((d.q_pow(m) + d.q_pow(-m)) / d.delta());
}

// ---------------------------------------------------------------------------
// eigenvalue classification
// ---------------------------------------------------------------------------

/// A classified eigenvalue of a diagonal-family operator: either i[m]_q with
/// signed half-integral m (classical) or sign*[m]_+ with m > 0 half-integral
/// non-integral (nonclassical).
struct EigenLabel {
    enum class Kind { Classical, Nonclassical };

    Kind kind = Kind::Classical;
    HalfInt m;      ///< signed for classical; positive for nonclassical
    int sign = 0;   ///< +-1 for nonclassical, 0 for classical

    static EigenLabel classical(HalfInt m) { return {Kind::Classical, m, 0}; }
    static EigenLabel nonclassical(HalfInt m, int sign) { return {Kind::Nonclassical, m, sign}; }

    bool operator==(const EigenLabel& o) const {
        return kind == o.kind && m == o.m && sign == o.sign;
    }
    bool operator<(const EigenLabel& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (m != o.m) return m < o.m;
        return sign < o.sign;
    }

    std::string str() const {
        if (kind == Kind::Classical) return "i[" + m.str() + "]q";
        return std::string(sign < 0 ? "-" : "+") + "[" + m.str() + "]+";
    }
};

/// Scans half-integers |m| <= bound for an exact match of lambda against
/// i[m]_q or sign*[m]_+. Returns nullopt when nothing matches. Throws
/// AmbiguousMatch if two distinct forms match (degenerate p choice).
inline std::optional<EigenLabel> classify_eigenvalue(const Scalar& lambda, HalfInt bound,
                                                     const DeformationParameter& d) {
    if (bound.twice < 0) throw InvalidParameter("classify_eigenvalue: bound must be >= 0");
    std::optional<EigenLabel> found;
    auto record = [&](EigenLabel lab) {
        if (found && !(*found == lab))
            throw AmbiguousMatch("eigenvalue matches two label forms: " + found->str() + " and " +
                                 lab.str());
        found = lab;
    };
    for (std::int64_t tw = 0; tw <= bound.twice; ++tw) {
        HalfInt m{tw};
        Scalar cl = Scalar::i() * q_number(m, d);
        if (lambda == cl) record(EigenLabel::classical(m));
        if (tw > 0 && lambda == -cl) record(EigenLabel::classical(-m));
        if (tw % 2 == 1) {
            Scalar nc = q_plus_number(m, d);
            if (lambda == nc) record(EigenLabel::nonclassical(m, +1));
            if (lambda == -nc) record(EigenLabel::nonclassical(m, -1));
        }
    }
    return found;
}

}  // namespace uqso
