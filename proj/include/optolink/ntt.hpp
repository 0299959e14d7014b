#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace optolink::ntt {

// Residue polynomial of length n with every coefficient in [0, q).
using Polynomial = std::vector<std::uint64_t>;

struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPowerOfTwoError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IncompatibleModulusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CoefficientOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ContextMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q);

// Modular inverse via extended Euclid. Throws std::domain_error when
// gcd(a, q) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Transform parameters for a fixed prime modulus q and power-of-two size n.
///
/// omega is the smallest primitive n-th root of unity mod q; twiddle tables
/// (all powers of omega and omega^-1) are precomputed once and shared by
/// every transform run against this context. Immutable after construction.
class ModulusContext {
  public:
    // q prime, n a power of two with q = 1 (mod n).
    static ModulusContext make(std::uint64_t q, std::uint64_t n);

    std::uint64_t modulus() const { return q_; }
    std::uint64_t size() const { return n_; }
    std::uint64_t omega() const { return omega_; }
    std::uint64_t omega_inv() const { return omega_inv_; }
    std::uint64_t n_inv() const { return n_inv_; }
    std::uint64_t log2_n() const { return log2_n_; }

    // omega^t and omega^-t for t in [0, n)
    const std::vector<std::uint64_t>& forward_twiddles() const { return fwd_; }
    const std::vector<std::uint64_t>& inverse_twiddles() const { return inv_; }
    const std::vector<std::uint32_t>& bit_reversal() const { return bitrev_; }

    // Fault-injection hook for self-test negative controls: XORs one cached
    // forward twiddle. Not for production use.
    void debug_corrupt_twiddle(std::size_t index);

    // Throws LengthMismatchError / CoefficientOutOfRangeError.
    void check(const Polynomial& a) const;

  private:
    ModulusContext() = default;

    std::uint64_t q_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t omega_ = 0;
    std::uint64_t omega_inv_ = 0;
    std::uint64_t n_inv_ = 0;
    std::uint64_t log2_n_ = 0;
    std::vector<std::uint64_t> fwd_;
    std::vector<std::uint64_t> inv_;
    std::vector<std::uint32_t> bitrev_;
};

inline ModulusContext make_context(std::uint64_t q, std::uint64_t n) {
    return ModulusContext::make(q, n);
}

/// O(n^2) forward transform straight from the definition:
/// out[i] = sum_j a[j] * omega^(i*j) mod q.
///
/// Does not touch the cached twiddle tables, so it serves as the reference
/// the fast transforms are checked against.
Polynomial ntt_direct(const ModulusContext& ctx, const Polynomial& a);

/// O(n^2) inverse transform from the definition, scaled by n^-1.
Polynomial intt_direct(const ModulusContext& ctx, const Polynomial& a_hat);

// Exact butterfly count of one fast transform: (n/2) * log2(n).
std::uint64_t butterfly_count(std::uint64_t n);

/// In-place iterative Cooley-Tukey with an initial bit-reversal permutation.
/// Output is in natural order and matches ntt_direct coefficient-for-
/// coefficient. When `butterflies` is given it receives the number of
/// butterfly operations executed, always (n/2)*log2(n).
Polynomial ntt_fast(const ModulusContext& ctx, const Polynomial& a);
Polynomial ntt_fast(const ModulusContext& ctx, const Polynomial& a,
                    std::uint64_t& butterflies);

/// Gentleman-Sande inverse with a trailing bit-reversal permutation and the
/// n^-1 scaling folded in at the end. intt_fast(ntt_fast(x)) == x.
Polynomial intt_fast(const ModulusContext& ctx, const Polynomial& a_hat);
Polynomial intt_fast(const ModulusContext& ctx, const Polynomial& a_hat,
                     std::uint64_t& butterflies);

/// Cyclic convolution mod (x^n - 1) via NTT -> pointwise -> INTT.
Polynomial poly_mul_ntt(const ModulusContext& ctx, const Polynomial& a,
                        const Polynomial& b);

/// Schoolbook cyclic convolution; the O(n^2) baseline poly_mul_ntt is
/// checked against.
Polynomial poly_mul_naive(const ModulusContext& ctx, const Polynomial& a,
                          const Polynomial& b);

// One stage per transform level; each entry is the (lo, hi) in-place index
// pair of a butterfly, listed in issue order. Feed to the traffic simulator's
// read-after-write analysis.
using ButterflyPlan = std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
ButterflyPlan butterfly_plan(std::uint64_t n);

}  // namespace optolink::ntt
