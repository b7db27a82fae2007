#pragma once

#include <gmpxx.h>

#include <string>

#include "repdim/errors.hpp"

namespace repdim {

// Coefficient field: p == 0 means the rationals, otherwise the prime field F_p.
struct FieldSpec {
    unsigned long p = 0;
    bool operator==(const FieldSpec&) const = default;
    bool is_rational() const { return p == 0; }
    std::string str() const { return p == 0 ? "Q" : "Fp(" + std::to_string(p) + ")"; }
};

// Exact field element. Rationals are kept canonical by GMP (lowest terms,
// positive denominator); prime-field values are integers in [0, p).
class Scalar {
public:
    Scalar() : p_(0) {}
    explicit Scalar(FieldSpec f) : p_(f.p) {}
    Scalar(long n, FieldSpec f) : v_(n), p_(f.p) { reduce_(); }
    Scalar(const mpq_class& v, FieldSpec f) : v_(v), p_(f.p) { reduce_(); }

    static Scalar zero(FieldSpec f) { return Scalar(f); }
    static Scalar one(FieldSpec f) { return Scalar(1, f); }

    FieldSpec field() const { return FieldSpec{p_}; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const {
        Scalar r(*this);
        r.v_ = -r.v_;
        r.reduce_();
        return r;
    }
    Scalar& operator+=(const Scalar& o) {
        match_(o);
        v_ += o.v_;
        reduce_();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        match_(o);
        v_ -= o.v_;
        reduce_();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        match_(o);
        v_ *= o.v_;
        reduce_();
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

    Scalar inv() const {
        check(!is_zero(), ErrorCode::InvalidArgument, "division by zero scalar");
        Scalar r(field());
        if (p_ == 0) {
            r.v_ = 1 / v_;
        } else {
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v_.get_num().get_mpz_t(),
                       mpz_class(p_).get_mpz_t());
            r.v_ = s;
            r.reduce_();
        }
        return r;
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
    unsigned long p_;

    void reduce_() {
        if (p_ != 0) {
            // Prime-field values enter as integers or rationals with denominator
            // invertible mod p; normalize to the canonical residue.
            mpz_class num = v_.get_num(), den = v_.get_den();
            mpz_class m(p_);
            num %= m;
            if (num < 0)
                num += m;
            if (den != 1) {
                mpz_class g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
                check(g == 1, ErrorCode::InvalidArgument, "denominator not invertible mod p");
                num = (num * s) % m;
                if (num < 0)
                    num += m;
            }
            v_ = mpq_class(num);
        }
    }
    void match_(const Scalar& o) const {
        check(p_ == o.p_, ErrorCode::ShapeMismatch, "scalar field mismatch");
    }
};

}  // namespace repdim
