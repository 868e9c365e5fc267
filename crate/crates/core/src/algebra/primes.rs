//! Primality testing, safe-prime generation and integer square roots.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_traits::{One, Zero};
use rand::{CryptoRng, RngCore};

use crate::{Error, Result};

/// Smallest prime size accepted by [`gen_safe_prime`].
pub const MIN_SAFE_PRIME_BITS: u64 = 512;

/// Miller-Rabin rounds used for the final acceptance of each safe prime.
pub const MR_ROUNDS: usize = 64;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        const LIMIT: usize = 4096;
        let mut sieve = vec![true; LIMIT];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < LIMIT {
            if sieve[i] {
                let mut j = i * i;
                while j < LIMIT {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..LIMIT).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// Miller-Rabin with `rounds` random bases, preceded by trial division.
pub fn is_probable_prime<R: RngCore + ?Sized>(n: &BigUint, rounds: usize, rng: &mut R) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if *n == p_big {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n_minus_one);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Whether `(p - 1) / 2` survives trial division given that `p` does.
fn sieve_pass(q: &BigUint) -> bool {
    for &p in small_primes().iter().skip(1) {
        let r = (q % p).to_u32_digits().first().copied().unwrap_or(0);
        // q divisible by p, or 2q + 1 divisible by p.
        let q_hit = r == 0 && *q != BigUint::from(p);
        let p_hit = r == (p - 1) / 2 && (q << 1usize) + 1u32 != BigUint::from(p);
        if q_hit || p_hit {
            return false;
        }
    }
    true
}

/// Generates a safe prime `p` of exactly `bits` bits. The two most significant
/// bits are set, so a product of two such primes has exactly `2 * bits` bits.
pub fn gen_safe_prime<R: RngCore + CryptoRng>(bits: u64, rng: &mut R) -> Result<BigUint> {
    if bits < MIN_SAFE_PRIME_BITS {
        return Err(Error::InvalidParameter(format!(
            "safe primes need at least {MIN_SAFE_PRIME_BITS} bits, got {bits}"
        )));
    }
    search_safe_prime(bits, rng, None)
}

/// Test-mode safe prime generation: any size from 16 bits upward, with an
/// optional cap on candidate draws. Not for production parameters.
pub fn gen_safe_prime_insecure<R: RngCore + CryptoRng>(
    bits: u64,
    rng: &mut R,
    max_candidates: Option<u64>,
) -> Result<BigUint> {
    if bits < 16 {
        return Err(Error::InvalidParameter(format!(
            "safe prime size {bits} is too small"
        )));
    }
    search_safe_prime(bits, rng, max_candidates)
}

fn search_safe_prime<R: RngCore + CryptoRng>(
    bits: u64,
    rng: &mut R,
    max_candidates: Option<u64>,
) -> Result<BigUint> {
    let q_bits = bits - 1;
    let mut draws = 0u64;
    loop {
        if let Some(cap) = max_candidates {
            if draws >= cap {
                return Err(Error::IterationLimit("safe prime search"));
            }
        }
        draws += 1;
        let mut q = rng.gen_biguint(q_bits);
        q.set_bit(q_bits - 1, true);
        q.set_bit(q_bits - 2, true);
        q.set_bit(0, true);
        if !sieve_pass(&q) {
            continue;
        }
        let p: BigUint = (&q << 1usize) + 1u32;
        // Cheap screen before the full rounds.
        if !is_probable_prime(&q, 1, rng) || !is_probable_prime(&p, 1, rng) {
            continue;
        }
        if is_probable_prime(&q, MR_ROUNDS, rng) && is_probable_prime(&p, MR_ROUNDS, rng) {
            debug_assert_eq!(p.bits(), bits);
            return Ok(p);
        }
    }
}

/// Largest `s` with `s^2 <= x`.
pub fn isqrt_floor(x: &BigInt) -> Result<BigInt> {
    if x.sign() == Sign::Minus {
        return Err(Error::NegativeInput);
    }
    let mag = x.magnitude();
    if mag.is_zero() {
        return Ok(BigInt::zero());
    }
    // Newton iteration from an over-estimate.
    let mut s = BigUint::one() << (mag.bits().div_ceil(2) as usize);
    loop {
        let next = (&s + mag / &s) >> 1usize;
        if next >= s {
            break;
        }
        s = next;
    }
    debug_assert!(&s * &s <= *mag && (&s + 1u32) * (&s + 1u32) > *mag);
    Ok(BigInt::from(s))
}

/// Uniform integer in the closed interval `[lo, hi]`.
pub fn sample_interval<R: RngCore + ?Sized>(rng: &mut R, lo: &BigInt, hi: &BigInt) -> BigInt {
    debug_assert!(lo <= hi);
    let span = hi - lo + 1u32;
    lo + rng.gen_bigint_range(&BigInt::zero(), &span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn trial_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn isqrt_small_values() {
        let f = |v: i64| isqrt_floor(&BigInt::from(v)).unwrap();
        assert_eq!(f(0), BigInt::from(0));
        assert_eq!(f(1), BigInt::from(1));
        assert_eq!(f(15), BigInt::from(3));
        assert_eq!(f(16), BigInt::from(4));
        assert_eq!(f(17), BigInt::from(4));
        assert!(matches!(isqrt_floor(&BigInt::from(-1)), Err(Error::NegativeInput)));
    }

    #[test]
    fn isqrt_random_512_bit() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = BigInt::from(rng.gen_biguint(512));
            let s = isqrt_floor(&x).unwrap();
            assert!(&s * &s <= x);
            assert!((&s + 1) * (&s + 1) > x);
        }
    }

    proptest! {
        #[test]
        fn isqrt_postcondition(v in any::<u128>()) {
            let x = BigInt::from(v);
            let s = isqrt_floor(&x).unwrap();
            prop_assert!(&s * &s <= x);
            prop_assert!((&s + 1) * (&s + 1) > x);
        }
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        for n in 0u64..20_000 {
            assert_eq!(
                is_probable_prime(&BigUint::from(n), 16, &mut rng),
                trial_prime(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn sixteen_bit_safe_primes_match_enumeration() {
        let safe: Vec<u64> = (1u64 << 15..1u64 << 16)
            .filter(|&p| trial_prime(p) && trial_prime((p - 1) / 2))
            .collect();
        assert_eq!(safe[safe.len() - 3..], [65123, 65147, 65267]);
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..50 {
            let p = gen_safe_prime_insecure(16, &mut rng, None).unwrap();
            let p = u64::try_from(p).unwrap();
            assert!(safe.contains(&p), "{p} is not a 16-bit safe prime");
            assert!(p >= 0xC000, "top two bits must be set");
        }
    }

    #[test]
    fn rejects_degenerate_sizes() {
        let mut rng = ChaCha20Rng::seed_from_u64(6);
        assert!(gen_safe_prime(0, &mut rng).is_err());
        assert!(gen_safe_prime(256, &mut rng).is_err());
        assert!(gen_safe_prime_insecure(0, &mut rng, None).is_err());
    }

    #[test]
    fn iteration_cap_is_honoured() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let r = gen_safe_prime_insecure(512, &mut rng, Some(3));
        assert!(matches!(r, Err(Error::IterationLimit(_))));
    }

    #[test]
    fn generates_512_bit_safe_prime() {
        let mut rng = ChaCha20Rng::seed_from_u64(8);
        let p = gen_safe_prime(512, &mut rng).unwrap();
        assert_eq!(p.bits(), 512);
        let q = (&p - 1u32) >> 1usize;
        let mut check_rng = ChaCha20Rng::seed_from_u64(9);
        assert!(is_probable_prime(&p, MR_ROUNDS, &mut check_rng));
        assert!(is_probable_prime(&q, MR_ROUNDS, &mut check_rng));
    }

    #[test]
    fn interval_sampling_stays_inside() {
        let mut rng = ChaCha20Rng::seed_from_u64(10);
        let lo = BigInt::from(-5);
        let hi = BigInt::from(5);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..2000 {
            let v = sample_interval(&mut rng, &lo, &hi);
            assert!(v >= lo && v <= hi);
            seen.insert(v);
        }
        assert_eq!(seen.len(), 11);
    }
}
