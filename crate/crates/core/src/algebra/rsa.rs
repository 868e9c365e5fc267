//! The RSA group `Z_n^*` over a product of safe primes, with signed exponents.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{CryptoRng, RngCore};

use super::primes::{gen_safe_prime, gen_safe_prime_insecure};
use crate::codec::{Reader, Writer};
use crate::{Error, Result};

/// Production modulus size.
pub const DEFAULT_MODULUS_BITS: u64 = 2048;
/// Test-mode modulus size. Insecure; only for fast test suites.
pub const TEST_MODULUS_BITS: u64 = 512;

/// An RSA modulus `n = p * q` with `p`, `q` safe primes. The factors are
/// dropped as soon as `n` is formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsaModulus {
    n: BigUint,
}

impl RsaModulus {
    /// Generates a fresh modulus of `bits` bits. Sizes below 1024 use the
    /// insecure test-mode prime search.
    pub fn generate<R: RngCore + CryptoRng>(bits: u64, rng: &mut R) -> Result<Self> {
        if !bits.is_multiple_of(2) || bits < 32 {
            return Err(Error::InvalidParameter(format!("modulus size {bits}")));
        }
        let half = bits / 2;
        let gen = |rng: &mut R| {
            if half >= super::primes::MIN_SAFE_PRIME_BITS {
                gen_safe_prime(half, rng)
            } else {
                gen_safe_prime_insecure(half, rng, None)
            }
        };
        loop {
            let p = gen(rng)?;
            let q = gen(rng)?;
            if p != q {
                return Ok(Self { n: p * q });
            }
        }
    }

    /// Wraps a published modulus whose factorisation is not known to the
    /// caller.
    pub fn from_modulus(n: BigUint) -> Result<Self> {
        if n.is_even() || n.bits() < 32 {
            return Err(Error::InvalidParameter("modulus must be odd and at least 32 bits".into()));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn bit_length(&self) -> u64 {
        self.n.bits()
    }

    pub fn element(&self, value: BigUint) -> Result<RsaGroupElement> {
        if value.is_zero() || value >= self.n || !value.gcd(&self.n).is_one() {
            return Err(Error::Malformed("not a unit modulo n"));
        }
        Ok(RsaGroupElement(value))
    }

    pub fn one(&self) -> RsaGroupElement {
        RsaGroupElement(BigUint::one())
    }

    /// A uniformly random quadratic residue.
    pub fn random_square<R: RngCore + ?Sized>(&self, rng: &mut R) -> RsaGroupElement {
        loop {
            let r = rng.gen_biguint_below(&self.n);
            if !r.is_zero() && r.gcd(&self.n).is_one() {
                return RsaGroupElement((&r * &r) % &self.n);
            }
        }
    }

    pub fn mul(&self, a: &RsaGroupElement, b: &RsaGroupElement) -> RsaGroupElement {
        RsaGroupElement((&a.0 * &b.0) % &self.n)
    }

    pub fn inv(&self, a: &RsaGroupElement) -> RsaGroupElement {
        RsaGroupElement(a.0.modinv(&self.n).expect("group elements are units"))
    }

    pub fn div(&self, a: &RsaGroupElement, b: &RsaGroupElement) -> RsaGroupElement {
        self.mul(a, &self.inv(b))
    }

    /// `base^exp` for a signed exponent.
    pub fn pow(&self, base: &RsaGroupElement, exp: &BigInt) -> RsaGroupElement {
        let mag = exp.magnitude();
        let r = base.0.modpow(mag, &self.n);
        let r = RsaGroupElement(r);
        if exp.sign() == Sign::Minus {
            self.inv(&r)
        } else {
            r
        }
    }

    /// `g^x h^r` for signed exponents.
    pub fn commit(
        &self,
        g: &RsaGroupElement,
        h: &RsaGroupElement,
        x: &BigInt,
        r: &BigInt,
    ) -> RsaGroupElement {
        self.mul(&self.pow(g, x), &self.pow(h, r))
    }

    pub fn decode_element(&self, reader: &mut Reader<'_>) -> Result<RsaGroupElement> {
        let bytes = reader.var_bytes()?;
        if bytes.first() == Some(&0) {
            return Err(Error::Malformed("non-minimal group element"));
        }
        self.element(BigUint::from_bytes_be(bytes))
    }
}

/// Fixed 512-bit modulus from the safe-prime generator, for fast test suites.
/// Insecure by size alone.
const FIXTURE_512: &[&str] = &[
    "b1804ae56f0f81e0e54c1a22ce005dd089e5a872d0f9e76cab51b9646bc8fc68",
    "9b1318b8448b388e86438cd8a829ccc2723002796293bd3e4b00867db2f77fa5",
];

/// Fixed 2048-bit modulus from the safe-prime generator, for benchmarks. The
/// factors existed only inside the generating process, but a published
/// fixture is still a demonstration setup, not a trusted one.
const FIXTURE_2048: &[&str] = &[
    "cc33cafc91e13e7ed8350db9e282b27c9f2f59e38759edfbc1252e576911f2fa",
    "f5efadd455d77260bccb3cd8ac7b17c1dac346459c04ff67be49fe294403aa40",
    "98f004bcba98100fd938f400e9637f9d9b524c661adee8920842c065c8f40fb6",
    "f27fa9790f76bfbcc8104735e811e20847ba1a44c0f876a016162ba94c4e4b3c",
    "004a1ddf2af60a7d119c8f2e2ff41a15b091b634cd7bc157bcbaf3ef99318e07",
    "5db0d3e008e91c8267536b76b514362f7f841b2e268b9b21cc29a2a733a9d022",
    "86ce272b37a8e06182f498203f3f16b6795bcdfe87b9d0c9a5a14af19d5b9c89",
    "f64a038759275c0c3ea7b8dafc2f354a2e6a77c900b8b675216d039b77597fcd",
];

impl RsaModulus {
    /// One of the frozen fixture moduli (512 or 2048 bits).
    pub fn fixture(bits: u64) -> Result<Self> {
        let hex: String = match bits {
            512 => FIXTURE_512.concat(),
            2048 => FIXTURE_2048.concat(),
            _ => return Err(Error::InvalidParameter(format!("no fixture modulus of {bits} bits"))),
        };
        let n = BigUint::parse_bytes(hex.as_bytes(), 16).expect("fixture is valid hex");
        Self::from_modulus(n)
    }
}

/// An element of `Z_n^*`. Arithmetic goes through the owning [`RsaModulus`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RsaGroupElement(BigUint);

impl RsaGroupElement {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    /// 4-octet big-endian length followed by the minimal big-endian value.
    pub fn encode(&self, w: &mut Writer) {
        w.var_bytes(&self.0.to_bytes_be());
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        self.encode(&mut w);
        w.into_bytes()
    }
}

/// A signed integer living in an explicit interval rather than a residue
/// class. Encoded as a sign octet (0 or 1) followed by a length-prefixed
/// minimal magnitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBounded(pub BigInt);

impl SignedBounded {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn in_interval(&self, lo: &BigInt, hi: &BigInt) -> bool {
        &self.0 >= lo && &self.0 <= hi
    }

    pub fn encode(&self, w: &mut Writer) {
        w.u8(u8::from(self.0.is_negative()));
        if self.0.is_zero() {
            w.var_bytes(&[]);
        } else {
            w.var_bytes(&self.0.magnitude().to_bytes_be());
        }
    }

    pub fn decode(r: &mut Reader<'_>) -> Result<Self> {
        let sign = r.u8()?;
        let mag = r.var_bytes()?;
        if sign > 1 {
            return Err(Error::Malformed("sign octet"));
        }
        if mag.first() == Some(&0) || (sign == 1 && mag.is_empty()) {
            return Err(Error::Malformed("non-minimal integer"));
        }
        let mag = BigUint::from_bytes_be(mag);
        let sign = if mag.is_zero() {
            Sign::NoSign
        } else if sign == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        };
        Ok(Self(BigInt::from_biguint(sign, mag)))
    }
}

impl From<BigInt> for SignedBounded {
    fn from(v: BigInt) -> Self {
        Self(v)
    }
}
