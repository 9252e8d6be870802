#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normfields/fq.hpp"

namespace normfields {

/// A Laurent series over F_q known modulo T^prec.
///
/// Representation: valuation offset `val`, dense packed coefficients for
/// exponents val, val+1, ..., prec-1, and the absolute precision `prec`.
/// The leading stored coefficient is nonzero; the zero-class ("0 mod T^N")
/// is encoded as val == prec with no coefficients.  Trailing coefficients at
/// or beyond prec are never stored.
///
/// Every operation computes a conservative precision for its result:
///   add/sub   min(prec_a, prec_b)
///   mul       min(prec_a + val_b, prec_b + val_a)
///   inverse   prec_b - 2*val_b (valuation negates)
///   compose   min(prec_g, prec_f * val_g) for val_g >= 1
///   reverse   prec_f (requires val_f == 1)
/// Operations whose result would have no known coefficient throw
/// PrecisionError instead of silently truncating.
class TruncSeries {
public:
    TruncSeries() : ctx_(nullptr), val_(0), prec_(0) {}

    static TruncSeries zero(const FqCtx* ctx, int prec);
    /// The series T.
    static TruncSeries identity(const FqCtx* ctx, int prec);
    static TruncSeries constant(const FqCtx* ctx, FqElem c, int prec);
    static TruncSeries constant(const FqCtx* ctx, long c, int prec);
    static TruncSeries monomial(const FqCtx* ctx, FqElem c, int exp, int prec);
    /// Build from packed coefficients starting at exponent `val`.
    static TruncSeries make(const FqCtx* ctx, int val,
                            std::vector<uint8_t> coeffs, int prec);

    const FqCtx* ctx() const { return ctx_; }
    int val() const { return val_; }
    int prec() const { return prec_; }
    bool is_zero_class() const { return val_ == prec_; }
    /// Number of known coefficients.
    int known() const { return prec_ - val_; }

    /// Valuation as a genuine number; throws on the zero-class.
    int valuation() const;

    /// Packed coefficient of T^e; zero below the valuation, throws at or
    /// beyond the precision.
    uint8_t coeff_packed(int e) const;
    FqElem coeff(int e) const { return FqElem(ctx_, coeff_packed(e)); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator/(const TruncSeries& o) const;
    TruncSeries inverse() const;
    TruncSeries scaled(FqElem c) const;
    /// Multiply by T^k (exact; shifts val and prec).
    TruncSeries shifted(int k) const;
    TruncSeries pow(long k) const;
    /// Formal derivative d/dT.
    TruncSeries derivative() const;
    /// Forget coefficients at or beyond new_prec (new_prec <= prec).
    TruncSeries truncated(int new_prec) const;

    /// f.compose(g) = f(g(T)); requires val(g) >= 1 (poles in f are handled
    /// by explicit inversion).  Uses the process-wide kernel selection.
    TruncSeries compose(const TruncSeries& g) const;
    /// Compositional inverse: returns h with compose(h) == h.compose(*this) == T.
    TruncSeries reverse() const;
    /// Apply x -> x^(p^a) to every coefficient (a may be negative).
    TruncSeries coeff_frobenius(long a) const;

    /// Exact representation equality (same val, prec and coefficients).
    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend TruncSeries compose_horner(const TruncSeries&, const TruncSeries&);
    friend TruncSeries compose_brent_kung(const TruncSeries&, const TruncSeries&);
    friend class SeriesBuilder;

    TruncSeries(const FqCtx* ctx, int val, std::vector<uint8_t> c, int prec)
        : ctx_(ctx), val_(val), prec_(prec), c_(std::move(c)) {}
    void normalize();
    const FqCtx* same(const TruncSeries& o) const;

    const FqCtx* ctx_;
    int val_;
    int prec_;
    std::vector<uint8_t> c_;
};

/// True if a == b mod T^r.  Both operands must be known mod T^r, otherwise
/// the congruence cannot be certified and PrecisionError is thrown.
bool agree_mod(const TruncSeries& a, const TruncSeries& b, int r);

/// a == b on the overlap of their known windows (min of the precisions).
bool agree_on_overlap(const TruncSeries& a, const TruncSeries& b);

/// Largest r <= cap such that a == b mod T^r (r == cap when they agree on
/// the whole common window, cap = min of precisions).
int agreement_exponent(const TruncSeries& a, const TruncSeries& b);

/// Baseline composition: Horner evaluation, O(n) series multiplications.
TruncSeries compose_horner(const TruncSeries& f, const TruncSeries& g);
/// Divide-and-conquer (baby-step/giant-step) composition; same contract.
TruncSeries compose_brent_kung(const TruncSeries& f, const TruncSeries& g);

enum class CompositionKernel { Horner, DivideConquer };
void set_composition_kernel(CompositionKernel k);
CompositionKernel composition_kernel();

/// Solve h(u(T)) == w(T) for h, by greedy leading-term elimination.  At each
/// step the lowest remaining exponent of the residual must be divisible by
/// val(u); otherwise w is not a series in u and ValidationError is thrown
/// ("not in base-field image at this precision") — this error doubles as a
/// Galois-invariance detector.  h is known mod T^(ceil(P/n)) where P is the
/// precision at which the residual was exhausted and n = val(u).
TruncSeries decompose(const TruncSeries& w, const TruncSeries& u);

} // namespace normfields
