#pragma once

#include <mpfr.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace ks {

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kDefaultPrecisionCeilingBits = 8192;

// Real scalar at an explicit mantissa-bit precision. A thin value-semantic
// wrapper over mpfr_t: copies carry their precision with them, binary
// operators round at the wider operand's precision, and compound operators
// round at the target's precision. There is no ambient default precision;
// every evaluation allocates its working variables at the precision it was
// asked for. Any double converts exactly (53 bits never exceeds the
// minimum working precision used here).
class BigReal {
public:
    BigReal() { mpfr_init2(v_, 53); }
    BigReal(double d, unsigned bits = 53) {
        mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    BigReal(int i) {
        mpfr_init2(v_, 53);
        mpfr_set_si(v_, i, MPFR_RNDN);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 53);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    BigReal& operator=(double d) {
        mpfr_set_d(v_, d, MPFR_RNDN);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    unsigned precision_bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    // Assigns a value while keeping this variable's own precision (unlike
    // operator=, which adopts the source's precision).
    BigReal& set(const BigReal& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& set(double d) {
        mpfr_set_d(v_, d, MPFR_RNDN);
        return *this;
    }

    explicit operator double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator+=(double d) { mpfr_add_d(v_, v_, d, MPFR_RNDN); return *this; }
    BigReal& operator-=(double d) { mpfr_sub_d(v_, v_, d, MPFR_RNDN); return *this; }
    BigReal& operator*=(double d) { mpfr_mul_d(v_, v_, d, MPFR_RNDN); return *this; }
    BigReal& operator/=(double d) { mpfr_div_d(v_, v_, d, MPFR_RNDN); return *this; }
    BigReal& operator+=(int i) { mpfr_add_si(v_, v_, i, MPFR_RNDN); return *this; }
    BigReal& operator-=(int i) { mpfr_sub_si(v_, v_, i, MPFR_RNDN); return *this; }
    BigReal& operator*=(int i) { mpfr_mul_si(v_, v_, i, MPFR_RNDN); return *this; }
    BigReal& operator/=(int i) { mpfr_div_si(v_, v_, i, MPFR_RNDN); return *this; }

    BigReal operator-() const {
        BigReal r = *this;
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(double d) const { return mpfr_cmp_d(v_, d); }

    // Round-to-nearest decimal rendering with an explicit significant
    // digit count (scientific form).
    std::string str(unsigned digits = 17) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*RNe", static_cast<int>(digits ? digits - 1 : 0), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

namespace detail {
inline unsigned result_bits(const BigReal& a, const BigReal& b) {
    return a.precision_bits() > b.precision_bits() ? a.precision_bits() : b.precision_bits();
}
} // namespace detail

#define KS_BIGREAL_BINOP(op, fn)                                                   \
    inline BigReal operator op(const BigReal& a, const BigReal& b) {               \
        BigReal r(0.0, detail::result_bits(a, b));                                 \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                                  \
        return r;                                                                  \
    }

KS_BIGREAL_BINOP(+, mpfr_add)
KS_BIGREAL_BINOP(-, mpfr_sub)
KS_BIGREAL_BINOP(*, mpfr_mul)
KS_BIGREAL_BINOP(/, mpfr_div)
#undef KS_BIGREAL_BINOP

#define KS_BIGREAL_BINOP_D(op, fn, fn_rev)                                         \
    inline BigReal operator op(const BigReal& a, double b) {                       \
        BigReal r(0.0, a.precision_bits());                                        \
        fn(r.raw(), a.raw(), b, MPFR_RNDN);                                        \
        return r;                                                                  \
    }                                                                              \
    inline BigReal operator op(double a, const BigReal& b) { return fn_rev(a, b); }

namespace detail {
inline BigReal rev_add(double a, const BigReal& b) { return b + a; }
inline BigReal rev_mul(double a, const BigReal& b) { return b * a; }
inline BigReal rev_sub(double a, const BigReal& b) {
    BigReal r(0.0, b.precision_bits());
    mpfr_d_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal rev_div(double a, const BigReal& b) {
    BigReal r(0.0, b.precision_bits());
    mpfr_d_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
} // namespace detail

KS_BIGREAL_BINOP_D(+, mpfr_add_d, detail::rev_add)
KS_BIGREAL_BINOP_D(-, mpfr_sub_d, detail::rev_sub)
KS_BIGREAL_BINOP_D(*, mpfr_mul_d, detail::rev_mul)
KS_BIGREAL_BINOP_D(/, mpfr_div_d, detail::rev_div)
#undef KS_BIGREAL_BINOP_D

inline bool operator<(const BigReal& a, const BigReal& b) { return a.cmp(b) < 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return a.cmp(b) > 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return a.cmp(b) <= 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return a.cmp(b) >= 0; }
inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }

inline bool operator<(const BigReal& a, double b) { return a.cmp(b) < 0; }
inline bool operator>(const BigReal& a, double b) { return a.cmp(b) > 0; }
inline bool operator<=(const BigReal& a, double b) { return a.cmp(b) <= 0; }
inline bool operator>=(const BigReal& a, double b) { return a.cmp(b) >= 0; }
inline bool operator==(const BigReal& a, double b) { return a.cmp(b) == 0; }
inline bool operator!=(const BigReal& a, double b) { return a.cmp(b) != 0; }
inline bool operator<(double a, const BigReal& b) { return b > a; }
inline bool operator>(double a, const BigReal& b) { return b < a; }
inline bool operator<=(double a, const BigReal& b) { return b >= a; }
inline bool operator>=(double a, const BigReal& b) { return b <= a; }

inline BigReal abs(const BigReal& a) {
    BigReal r = a;
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

// bits = 0 keeps the operand's precision.
inline BigReal exp(const BigReal& a, unsigned bits = 0) {
    BigReal r(0.0, bits ? bits : a.precision_bits());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal log(const BigReal& a, unsigned bits = 0) {
    BigReal r(0.0, bits ? bits : a.precision_bits());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal pow(const BigReal& a, const BigReal& b, unsigned bits = 0) {
    BigReal r(0.0, bits ? bits : detail::result_bits(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline BigReal tgamma(const BigReal& a, unsigned bits = 0) {
    BigReal r(0.0, bits ? bits : a.precision_bits());
    mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

// Relative unit-roundoff model at `bits` mantissa bits: 2^(1-bits).
inline BigReal eps_for_bits(unsigned bits) {
    BigReal r;
    mpfr_set_ui_2exp(r.raw(), 1, 1 - static_cast<mpfr_exp_t>(bits), MPFR_RNDN);
    return r;
}

inline std::string to_decimal(const BigReal& v, unsigned digits = 17) {
    return v.str(digits);
}

inline std::ostream& operator<<(std::ostream& os, const BigReal& v) {
    return os << v.str(20);
}

} // namespace ks
