#include "optolink/ntt.hpp"

#include <bit>

namespace optolink::ntt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

u64 log2_exact(u64 n) { return static_cast<u64>(std::countr_zero(n)); }

}  // namespace

u64 add_mod(u64 a, u64 b, u64 q) {
    u128 s = static_cast<u128>(a) + b;
    return static_cast<u64>(s >= q ? s - q : s);
}

u64 sub_mod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }

u64 mul_mod(u64 a, u64 b, u64 q) {
    return static_cast<u64>(static_cast<u128>(a) * b % q);
}

u64 pow_mod(u64 base, u64 exp, u64 q) {
    u64 result = 1 % q;
    u64 acc = base % q;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, acc, q);
        acc = mul_mod(acc, acc, q);
        exp >>= 1;
    }
    return result;
}

u64 inv_mod(u64 a, u64 q) {
    // Extended Euclid over signed 128-bit accumulators.
    __int128 t = 0, new_t = 1;
    __int128 r = q, new_r = a % q;
    while (new_r != 0) {
        __int128 quotient = r / new_r;
        t -= quotient * new_t;
        std::swap(t, new_t);
        r -= quotient * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("inv_mod: value not invertible");
    if (t < 0) t += q;
    return static_cast<u64>(t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set proven sufficient for all n < 3.3e24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ModulusContext ModulusContext::make(u64 q, u64 n) {
    if (!is_prime(q)) throw NotPrimeError("modulus " + std::to_string(q) + " is not prime");
    if (!is_power_of_two(n))
        throw NotPowerOfTwoError("transform size " + std::to_string(n) + " is not a power of two");
    if (n > 1 && (q - 1) % n != 0)
        throw IncompatibleModulusError("q = " + std::to_string(q) + " is not 1 mod n = " +
                                       std::to_string(n));

    ModulusContext ctx;
    ctx.q_ = q;
    ctx.n_ = n;
    ctx.log2_n_ = log2_exact(n);

    if (n == 1) {
        ctx.omega_ = 1 % q;
    } else {
        // Any quadratic non-residue x gives w = x^((q-1)/n) of order exactly n;
        // the full set of order-n elements is then {w^k : k odd}. Take the
        // smallest so contexts are reproducible.
        u64 x = 2;
        while (pow_mod(x, (q - 1) / 2, q) != q - 1) ++x;
        u64 w = pow_mod(x, (q - 1) / n, q);
        u64 w2 = mul_mod(w, w, q);
        u64 best = w;
        u64 cand = w;
        for (u64 k = 3; k < n; k += 2) {
            cand = mul_mod(cand, w2, q);
            if (cand < best) best = cand;
        }
        ctx.omega_ = best;
    }
    ctx.omega_inv_ = inv_mod(ctx.omega_, q);
    ctx.n_inv_ = inv_mod(n % q, q);

    ctx.fwd_.resize(n);
    ctx.inv_.resize(n);
    ctx.fwd_[0] = 1 % q;
    ctx.inv_[0] = 1 % q;
    for (u64 t = 1; t < n; ++t) {
        ctx.fwd_[t] = mul_mod(ctx.fwd_[t - 1], ctx.omega_, q);
        ctx.inv_[t] = mul_mod(ctx.inv_[t - 1], ctx.omega_inv_, q);
    }

    ctx.bitrev_.resize(n);
    for (u64 i = 0, j = 0; i < n; ++i) {
        ctx.bitrev_[i] = static_cast<std::uint32_t>(j);
        u64 bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
    }
    return ctx;
}

void ModulusContext::debug_corrupt_twiddle(std::size_t index) {
    fwd_[index % fwd_.size()] ^= 1;
}

void ModulusContext::check(const Polynomial& a) const {
    if (a.size() != n_)
        throw LengthMismatchError("polynomial length " + std::to_string(a.size()) +
                                  " does not match transform size " + std::to_string(n_));
    for (u64 c : a)
        if (c >= q_)
            throw CoefficientOutOfRangeError("coefficient " + std::to_string(c) +
                                             " not reduced mod " + std::to_string(q_));
}

Polynomial ntt_direct(const ModulusContext& ctx, const Polynomial& a) {
    ctx.check(a);
    const u64 q = ctx.modulus();
    const u64 n = ctx.size();
    Polynomial out(n);
    for (u64 i = 0; i < n; ++i) {
        u64 wi = pow_mod(ctx.omega(), i, q);
        u64 x = 1 % q;
        u128 acc = 0;
        for (u64 j = 0; j < n; ++j) {
            acc += static_cast<u128>(a[j]) * x % q;
            x = mul_mod(x, wi, q);
        }
        out[i] = static_cast<u64>(acc % q);
    }
    return out;
}

Polynomial intt_direct(const ModulusContext& ctx, const Polynomial& a_hat) {
    ctx.check(a_hat);
    const u64 q = ctx.modulus();
    const u64 n = ctx.size();
    Polynomial out(n);
    for (u64 j = 0; j < n; ++j) {
        u64 wj = pow_mod(ctx.omega_inv(), j, q);
        u64 x = 1 % q;
        u128 acc = 0;
        for (u64 i = 0; i < n; ++i) {
            acc += static_cast<u128>(a_hat[i]) * x % q;
            x = mul_mod(x, wj, q);
        }
        out[j] = mul_mod(static_cast<u64>(acc % q), ctx.n_inv(), q);
    }
    return out;
}

std::uint64_t butterfly_count(u64 n) {
    if (n <= 1) return 0;
    return (n / 2) * log2_exact(n);
}

namespace {

void bit_reverse_permute(Polynomial& a, const std::vector<std::uint32_t>& rev) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i < rev[i]) std::swap(a[i], a[rev[i]]);
}

// Cooley-Tukey butterflies on a bit-reversed input; leaves natural order.
u64 ct_stages(const ModulusContext& ctx, Polynomial& a) {
    const u64 q = ctx.modulus();
    const u64 n = ctx.size();
    const auto& tw = ctx.forward_twiddles();
    u64 count = 0;
    for (u64 len = 2; len <= n; len <<= 1) {
        const u64 step = n / len;
        for (u64 block = 0; block < n; block += len) {
            for (u64 j = 0; j < len / 2; ++j) {
                const u64 lo = block + j;
                const u64 hi = lo + len / 2;
                const u64 u = a[lo];
                const u64 v = mul_mod(a[hi], tw[j * step], q);
                a[lo] = add_mod(u, v, q);
                a[hi] = sub_mod(u, v, q);
                ++count;
            }
        }
    }
    return count;
}

// Gentleman-Sande butterflies on a natural-order input; leaves bit-reversed
// order with inverse twiddles applied, no scaling.
u64 gs_stages(const ModulusContext& ctx, Polynomial& a) {
    const u64 q = ctx.modulus();
    const u64 n = ctx.size();
    const auto& tw = ctx.inverse_twiddles();
    u64 count = 0;
    for (u64 len = n; len >= 2; len >>= 1) {
        const u64 step = n / len;
        for (u64 block = 0; block < n; block += len) {
            for (u64 j = 0; j < len / 2; ++j) {
                const u64 lo = block + j;
                const u64 hi = lo + len / 2;
                const u64 u = a[lo];
                const u64 v = a[hi];
                a[lo] = add_mod(u, v, q);
                a[hi] = mul_mod(sub_mod(u, v, q), tw[j * step], q);
                ++count;
            }
        }
    }
    return count;
}

}  // namespace

Polynomial ntt_fast(const ModulusContext& ctx, const Polynomial& a, u64& butterflies) {
    ctx.check(a);
    Polynomial out = a;
    butterflies = 0;
    if (ctx.size() == 1) return out;
    bit_reverse_permute(out, ctx.bit_reversal());
    butterflies = ct_stages(ctx, out);
    return out;
}

Polynomial ntt_fast(const ModulusContext& ctx, const Polynomial& a) {
    u64 ignored = 0;
    return ntt_fast(ctx, a, ignored);
}

Polynomial intt_fast(const ModulusContext& ctx, const Polynomial& a_hat, u64& butterflies) {
    ctx.check(a_hat);
    Polynomial out = a_hat;
    butterflies = 0;
    if (ctx.size() == 1) return out;
    butterflies = gs_stages(ctx, out);
    bit_reverse_permute(out, ctx.bit_reversal());
    const u64 q = ctx.modulus();
    for (u64& c : out) c = mul_mod(c, ctx.n_inv(), q);
    return out;
}

Polynomial intt_fast(const ModulusContext& ctx, const Polynomial& a_hat) {
    u64 ignored = 0;
    return intt_fast(ctx, a_hat, ignored);
}

Polynomial poly_mul_ntt(const ModulusContext& ctx, const Polynomial& a, const Polynomial& b) {
    if (a.size() != b.size())
        throw ContextMismatchError("operands of length " + std::to_string(a.size()) + " and " +
                                   std::to_string(b.size()) + " cannot share a context");
    const u64 q = ctx.modulus();
    Polynomial fa = ntt_fast(ctx, a);
    Polynomial fb = ntt_fast(ctx, b);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = mul_mod(fa[i], fb[i], q);
    return intt_fast(ctx, fa);
}

Polynomial poly_mul_naive(const ModulusContext& ctx, const Polynomial& a, const Polynomial& b) {
    if (a.size() != b.size())
        throw ContextMismatchError("operands of length " + std::to_string(a.size()) + " and " +
                                   std::to_string(b.size()) + " cannot share a context");
    ctx.check(a);
    ctx.check(b);
    const u64 q = ctx.modulus();
    const u64 n = ctx.size();
    Polynomial out(n, 0);
    for (u64 i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (u64 j = 0; j < n; ++j) {
            u64 k = i + j >= n ? i + j - n : i + j;
            out[k] = add_mod(out[k], mul_mod(a[i], b[j], q), q);
        }
    }
    return out;
}

ButterflyPlan butterfly_plan(u64 n) {
    if (!is_power_of_two(n))
        throw NotPowerOfTwoError("plan size " + std::to_string(n) + " is not a power of two");
    ButterflyPlan plan;
    for (u64 len = 2; len <= n; len <<= 1) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> stage;
        stage.reserve(n / 2);
        for (u64 block = 0; block < n; block += len)
            for (u64 j = 0; j < len / 2; ++j)
                stage.emplace_back(static_cast<std::uint32_t>(block + j),
                                   static_cast<std::uint32_t>(block + j + len / 2));
        plan.push_back(std::move(stage));
    }
    return plan;
}

}  // namespace optolink::ntt
