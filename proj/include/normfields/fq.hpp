#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "normfields/errors.hpp"

namespace normfields {

class FqCtx;

/// Description of a finite field F_{p^f} with an explicit modulus polynomial.
/// Supported: p in {2,3,5}, f <= 3, so q = p^f <= 125.  The modulus is monic
/// of degree f over F_p, coefficients listed constant term first.
struct FieldSpec {
    int p = 2;
    int f = 1;
    std::vector<int> modulus; // length f+1, modulus.back() == 1

    /// The standard modulus for (p,f) from the table shipped in fq.cpp,
    /// so that serialized data is reproducible across runs.
    static FieldSpec standard(int p, int f);

    int q() const;
    bool operator==(const FieldSpec& o) const = default;

    /// Canonical runtime context (lookup tables); contexts are interned, so
    /// equal specs always return the same pointer.
    const FqCtx* context() const;
};

/// Lookup-table arithmetic for one finite field.  Elements are handled as
/// packed values in [0,q): the element sum d_i x^i maps to sum d_i p^i.
/// Instances live forever in a registry; all tables are immutable after
/// construction, so concurrent use is safe.
class FqCtx {
public:
    explicit FqCtx(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int f() const { return spec_.f; }
    int q() const { return q_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw DomainError("fq: division by zero");
        return inv_[a];
    }
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    /// x -> x^(p^e); e may be negative (k is perfect).
    uint8_t frobenius(uint8_t a, long e) const;
    /// Unique p-th root.
    uint8_t pth_root(uint8_t a) const { return frobenius(a, -1); }
    /// a^n for integer n (n < 0 requires a != 0).
    uint8_t pow(uint8_t a, long n) const;
    /// Multiply by an integer scalar (image of n in F_p).
    uint8_t int_mul(long n, uint8_t a) const;
    /// Image of the integer n in the prime field.
    uint8_t from_int(long n) const;

    std::vector<int> digits(uint8_t a) const;
    uint8_t from_digits(const std::vector<int>& digits) const;

    /// A fixed generator of the multiplicative group (smallest packed value).
    uint8_t generator() const { return generator_; }
    /// An element of exact multiplicative order e; requires e | q-1.
    uint8_t root_of_unity(int e) const;

private:
    FieldSpec spec_;
    int q_;
    std::vector<uint8_t> add_, mul_, neg_, inv_, frob_;
    uint8_t generator_;
};

/// An element of F_{p^f}: a plain value record (spec reference + packed digits).
class FqElem {
public:
    FqElem() : ctx_(nullptr), v_(0) {}
    FqElem(const FqCtx* ctx, uint8_t v) : ctx_(ctx), v_(v) {}
    FqElem(const FqCtx* ctx, const std::vector<int>& digits)
        : ctx_(ctx), v_(ctx->from_digits(digits)) {}

    const FqCtx* ctx() const { return ctx_; }
    uint8_t packed() const { return v_; }
    std::vector<int> digits() const { return ctx_->digits(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FqElem operator+(const FqElem& o) const { return {same(o), ctx_->add(v_, o.v_)}; }
    FqElem operator-(const FqElem& o) const { return {same(o), ctx_->sub(v_, o.v_)}; }
    FqElem operator*(const FqElem& o) const { return {same(o), ctx_->mul(v_, o.v_)}; }
    FqElem operator/(const FqElem& o) const { return {same(o), ctx_->div(v_, o.v_)}; }
    FqElem operator-() const { return {ctx_, ctx_->neg(v_)}; }

    FqElem frobenius(long e) const { return {ctx_, ctx_->frobenius(v_, e)}; }
    FqElem pth_root() const { return {ctx_, ctx_->pth_root(v_)}; }
    FqElem pow(long n) const { return {ctx_, ctx_->pow(v_, n)}; }
    FqElem inv() const { return {ctx_, ctx_->inv(v_)}; }

    bool operator==(const FqElem& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    const FqCtx* same(const FqElem& o) const {
        if (ctx_ != o.ctx_) throw DomainError("fq: mismatched field specs");
        return ctx_;
    }
    const FqCtx* ctx_;
    uint8_t v_;
};

} // namespace normfields
