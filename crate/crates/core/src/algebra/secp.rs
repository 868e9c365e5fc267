//! secp256k1 group used by Pedersen commitments and Bulletproofs.

use std::sync::OnceLock;

use k256::elliptic_curve::group::prime::PrimeCurveAffine;
use k256::elliptic_curve::group::Group;
use k256::elliptic_curve::ops::Reduce;
use k256::elliptic_curve::sec1::{FromEncodedPoint, ToEncodedPoint};
use k256::elliptic_curve::{Field, PrimeField};
use k256::{AffinePoint, EncodedPoint, FieldBytes, U256};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{CryptoRng, RngCore};
use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub use k256::{ProjectivePoint as GroupElement, Scalar};

/// Compressed SEC1 point length.
pub const POINT_LEN: usize = 33;
pub const SCALAR_LEN: usize = 32;

/// Number of counters tried by [`map_to_group`] before giving up.
pub const MAP_TO_GROUP_ATTEMPTS: u32 = 256;

const FIELD_PRIME_HEX: &str = "fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f";
const GROUP_ORDER_HEX: &str = "fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141";

/// Field prime of secp256k1.
pub fn field_prime() -> &'static BigUint {
    static P: OnceLock<BigUint> = OnceLock::new();
    P.get_or_init(|| BigUint::parse_bytes(FIELD_PRIME_HEX.as_bytes(), 16).unwrap())
}

/// Prime order of the secp256k1 group.
pub fn group_order() -> &'static BigUint {
    static N: OnceLock<BigUint> = OnceLock::new();
    N.get_or_init(|| BigUint::parse_bytes(GROUP_ORDER_HEX.as_bytes(), 16).unwrap())
}

pub fn generator() -> GroupElement {
    GroupElement::GENERATOR
}

pub fn random_scalar<R: RngCore + CryptoRng>(rng: &mut R) -> Scalar {
    Scalar::random(rng)
}

pub fn scalar_from_u64(v: u64) -> Scalar {
    Scalar::from(v)
}

/// Reduces an arbitrary non-negative integer modulo the group order.
pub fn scalar_from_biguint(v: &BigUint) -> Scalar {
    let reduced = v % group_order();
    let mut bytes = [0u8; SCALAR_LEN];
    let be = reduced.to_bytes_be();
    bytes[SCALAR_LEN - be.len()..].copy_from_slice(&be);
    <Scalar as Reduce<U256>>::reduce_bytes(&FieldBytes::from(bytes))
}

pub fn scalar_to_biguint(s: &Scalar) -> BigUint {
    BigUint::from_bytes_be(&s.to_bytes())
}

/// Reduces a 32-octet big-endian digest modulo the group order.
pub fn scalar_from_digest(digest: &[u8; 32]) -> Scalar {
    <Scalar as Reduce<U256>>::reduce_bytes(&FieldBytes::from(*digest))
}

pub fn encode_scalar(s: &Scalar) -> [u8; SCALAR_LEN] {
    s.to_bytes().into()
}

/// Rejects non-canonical encodings (values at or above the group order).
pub fn decode_scalar(bytes: &[u8]) -> Result<Scalar> {
    if bytes.len() != SCALAR_LEN {
        return Err(Error::Malformed("scalar length"));
    }
    let mut fb = FieldBytes::default();
    fb.copy_from_slice(bytes);
    Option::from(Scalar::from_repr(fb)).ok_or(Error::Malformed("scalar not canonical"))
}

/// 33-octet compressed encoding. The identity, which has no SEC1 compressed
/// form, is written as 33 zero octets.
pub fn encode_point(p: &GroupElement) -> [u8; POINT_LEN] {
    let mut out = [0u8; POINT_LEN];
    if bool::from(p.is_identity()) {
        return out;
    }
    let enc = p.to_affine().to_encoded_point(true);
    out.copy_from_slice(enc.as_bytes());
    out
}

/// Decodes a compressed point, rejecting the identity and off-curve inputs.
pub fn decode_point(bytes: &[u8]) -> Result<GroupElement> {
    if bytes.len() != POINT_LEN {
        return Err(Error::Malformed("point length"));
    }
    if bytes[0] != 0x02 && bytes[0] != 0x03 {
        return Err(Error::Malformed("point prefix"));
    }
    let enc = EncodedPoint::from_bytes(bytes).map_err(|_| Error::Malformed("point"))?;
    let affine: Option<AffinePoint> = AffinePoint::from_encoded_point(&enc).into();
    let affine = affine.ok_or(Error::Malformed("point not on curve"))?;
    if bool::from(affine.is_identity()) {
        return Err(Error::Malformed("identity point"));
    }
    Ok(GroupElement::from(affine))
}

/// Like [`decode_point`] but accepts the all-zero identity encoding.
pub fn decode_point_allow_identity(bytes: &[u8]) -> Result<GroupElement> {
    if bytes.len() == POINT_LEN && bytes.iter().all(|b| *b == 0) {
        return Ok(GroupElement::IDENTITY);
    }
    decode_point(bytes)
}

/// Try-and-increment hash onto `y^2 = x^3 + b (mod p)` for a prime
/// `p = 3 (mod 4)`. Returns affine coordinates with the even square root.
///
/// `x = SHA-256(message || i)` with `i` a 4-octet big-endian counter,
/// reduced modulo `p`.
pub fn map_to_curve(message: &[u8], p: &BigUint, b: u64) -> Result<(BigUint, BigUint)> {
    let four = BigUint::from(4u32);
    if p % &four != BigUint::from(3u32) {
        return Err(Error::InvalidParameter(
            "field prime must be 3 mod 4".into(),
        ));
    }
    let sqrt_exp = (p + BigUint::one()) / &four;
    let euler_exp = (p - BigUint::one()) >> 1;
    for i in 0..MAP_TO_GROUP_ATTEMPTS {
        let digest = Sha256::new()
            .chain_update(message)
            .chain_update(i.to_be_bytes())
            .finalize();
        let x = BigUint::from_bytes_be(&digest) % p;
        let rhs = (x.modpow(&BigUint::from(3u32), p) + BigUint::from(b)) % p;
        // Euler criterion; rhs = 0 would give the 2-torsion point y = 0.
        if rhs.is_zero() || rhs.modpow(&euler_exp, p) != BigUint::one() {
            continue;
        }
        let mut y = rhs.modpow(&sqrt_exp, p);
        if y.bit(0) {
            y = p - y;
        }
        return Ok((x, y));
    }
    Err(Error::CannotMapToGroup)
}

/// Nothing-up-my-sleeve point on secp256k1 derived from `message`.
pub fn map_to_group(message: &[u8]) -> Result<GroupElement> {
    let (x, _y) = map_to_curve(message, field_prime(), 7)?;
    let mut enc = [0u8; POINT_LEN];
    enc[0] = 0x02;
    let xb = x.to_bytes_be();
    enc[POINT_LEN - xb.len()..].copy_from_slice(&xb);
    decode_point(&enc).map_err(|_| Error::CannotMapToGroup)
}

/// Entrywise `a_i * b_i` summed modulo the group order.
pub fn inner_product(a: &[Scalar], b: &[Scalar]) -> Result<Scalar> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).fold(Scalar::ZERO, |acc, (x, y)| acc + x * y))
}

/// `[1, k, k^2, ..., k^{n-1}]`.
pub fn powers(k: &Scalar, n: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n);
    let mut cur = Scalar::ONE;
    for _ in 0..n {
        out.push(cur);
        cur *= k;
    }
    out
}

pub fn scalar_invert(s: &Scalar) -> Option<Scalar> {
    Option::from(s.invert())
}

pub fn is_identity(p: &GroupElement) -> bool {
    bool::from(p.is_identity())
}
