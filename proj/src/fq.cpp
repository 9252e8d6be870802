#include "normfields/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace normfields {

namespace {

// Fixed moduli, one per supported (p,f); Conway polynomials, constant first.
struct ModulusEntry {
    int p, f;
    std::vector<int> coeffs;
};
const ModulusEntry kModuli[] = {
    {2, 1, {1, 1}},       {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}},
    {3, 1, {1, 1}},       {3, 2, {2, 2, 1}},    {3, 3, {1, 2, 0, 1}},
    {5, 1, {3, 1}},       {5, 2, {2, 4, 1}},    {5, 3, {3, 3, 0, 1}},
};

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

FieldSpec FieldSpec::standard(int p, int f) {
    for (const auto& m : kModuli)
        if (m.p == p && m.f == f) return FieldSpec{p, f, m.coeffs};
    std::ostringstream os;
    os << "fq: unsupported field F_" << p << "^" << f;
    throw DomainError(os.str());
}

int FieldSpec::q() const { return ipow(p, f); }

const FqCtx* FieldSpec::context() const {
    static std::mutex mu;
    static std::map<std::pair<std::pair<int, int>, std::vector<int>>,
                    std::unique_ptr<FqCtx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(std::make_pair(p, f), modulus);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_unique<FqCtx>(*this)).first;
    return it->second.get();
}

FqCtx::FqCtx(const FieldSpec& spec) : spec_(spec), q_(spec.q()) {
    const int p = spec_.p;
    const int f = spec_.f;
    if (p != 2 && p != 3 && p != 5) throw DomainError("fq: p must be 2, 3 or 5");
    if (f < 1 || f > 3) throw DomainError("fq: f must be 1, 2 or 3");
    if ((int)spec_.modulus.size() != f + 1 || spec_.modulus[f] != 1)
        throw DomainError("fq: modulus must be monic of degree f");
    for (int c : spec_.modulus)
        if (c < 0 || c >= p) throw DomainError("fq: modulus coefficients must be reduced mod p");
    // Degree <= 3: irreducible over F_p iff no root in F_p (any factorization
    // of a quadratic or cubic has a linear factor).
    if (f >= 2) {
        for (int x = 0; x < p; x++) {
            int acc = 0;
            for (int i = f; i >= 0; i--) acc = (acc * x + spec_.modulus[i]) % p;
            if (acc == 0) throw DomainError("fq: modulus is reducible over F_p");
        }
    }

    // Polynomial arithmetic on digit vectors to fill the tables.
    auto to_digits = [&](int v) {
        std::array<int, 3> d{0, 0, 0};
        for (int i = 0; i < f; i++) { d[i] = v % p; v /= p; }
        return d;
    };
    auto from_digits = [&](const std::array<int, 3>& d) {
        int v = 0;
        for (int i = f - 1; i >= 0; i--) v = v * p + d[i];
        return v;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);

    for (int a = 0; a < q_; a++) {
        auto da = to_digits(a);
        std::array<int, 3> dn{};
        for (int i = 0; i < f; i++) dn[i] = (p - da[i]) % p;
        neg_[a] = (uint8_t)from_digits(dn);
        for (int b = 0; b < q_; b++) {
            auto db = to_digits(b);
            std::array<int, 3> ds{};
            for (int i = 0; i < f; i++) ds[i] = (da[i] + db[i]) % p;
            add_[a * q_ + b] = (uint8_t)from_digits(ds);

            // Multiply then reduce by the modulus.
            std::array<int, 5> prod{};
            for (int i = 0; i < f; i++)
                for (int j = 0; j < f; j++) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * f - 2; d >= f; d--) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < f; i++)
                    prod[d - f + i] = ((prod[d - f + i] - c * spec_.modulus[i]) % p + p) % p;
            }
            std::array<int, 3> dm{prod[0], prod[1], prod[2]};
            mul_[a * q_ + b] = (uint8_t)from_digits(dm);
        }
    }
    for (int a = 1; a < q_; a++) {
        // Fermat: a^(q-2)
        uint8_t r = 1, base = (uint8_t)a;
        int e = q_ - 2;
        while (e > 0) {
            if (e & 1) r = mul_[r * q_ + base];
            base = mul_[base * q_ + base];
            e >>= 1;
        }
        inv_[a] = r;
    }
    for (int a = 0; a < q_; a++) {
        uint8_t r = (uint8_t)a;
        for (int i = 1; i < p; i++) r = mul_[r * q_ + a];
        frob_[a] = r; // a^p
    }
    generator_ = 0;
    for (int a = 2; a < q_; a++) {
        int ord = 1;
        uint8_t x = (uint8_t)a;
        while (x != 1) { x = mul_[x * q_ + a]; ord++; }
        if (ord == q_ - 1) { generator_ = (uint8_t)a; break; }
    }
    if (q_ == 2) generator_ = 1;
}

uint8_t FqCtx::frobenius(uint8_t a, long e) const {
    // x^(p^f) = x for all x, so the exponent only matters mod f; negative e
    // wraps around (k is perfect).
    long r = e % spec_.f;
    if (r < 0) r += spec_.f;
    uint8_t x = a;
    for (long i = 0; i < r; i++) x = frob_[x];
    return x;
}

uint8_t FqCtx::pow(uint8_t a, long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    uint8_t r = 1;
    while (n > 0) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

uint8_t FqCtx::int_mul(long n, uint8_t a) const {
    return mul(from_int(n), a);
}

uint8_t FqCtx::from_int(long n) const {
    long r = n % spec_.p;
    if (r < 0) r += spec_.p;
    uint8_t v = 0;
    for (long i = 0; i < r; i++) v = add(v, 1);
    return v;
}

std::vector<int> FqCtx::digits(uint8_t a) const {
    std::vector<int> d(spec_.f);
    int v = a;
    for (int i = 0; i < spec_.f; i++) { d[i] = v % spec_.p; v /= spec_.p; }
    return d;
}

uint8_t FqCtx::from_digits(const std::vector<int>& digits) const {
    if ((int)digits.size() != spec_.f)
        throw DomainError("fq: digit vector has wrong length");
    int v = 0;
    for (int i = spec_.f - 1; i >= 0; i--) {
        int d = digits[i];
        if (d < 0 || d >= spec_.p) throw DomainError("fq: digit out of range");
        v = v * spec_.p + d;
    }
    return (uint8_t)v;
}

uint8_t FqCtx::root_of_unity(int e) const {
    if (e <= 0 || (q_ - 1) % e != 0)
        throw DomainError("fq: no root of unity of that order (e must divide q-1)");
    return pow(generator_, (q_ - 1) / e);
}

} // namespace normfields
