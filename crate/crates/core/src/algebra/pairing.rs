//! BN254 pairing group used by the signature-based proofs.
//!
//! Group law is written additively (arkworks convention): `a + b` is the group
//! operation and `a * s` is exponentiation, including in the target group.

use ark_bn254::{Bn254, Fq, Fq12, Fq2, Fq6};
use ark_ec::pairing::{Pairing, PairingOutput};
use ark_ec::short_weierstrass::SWCurveConfig;
use ark_ec::{AffineRepr, CurveGroup, PrimeGroup};
use ark_ff::{BigInteger, Field, PrimeField, UniformRand, Zero};
use ark_serialize::{CanonicalDeserialize, CanonicalSerialize, Compress, Validate};
use rand::{CryptoRng, RngCore};
use sha2::{Digest, Sha256};

use super::secp::MAP_TO_GROUP_ATTEMPTS;
use crate::{Error, Result};

pub use ark_bn254::{Fr, G1Projective as G1, G2Projective as G2};

pub type Gt = PairingOutput<Bn254>;

pub const G1_LEN: usize = 32;
pub const G2_LEN: usize = 64;
/// Target-group elements are torus-compressed to one `F_{q^6}` element.
pub const GT_LEN: usize = 192;
pub const FR_LEN: usize = 32;

pub fn g1_generator() -> G1 {
    G1::generator()
}

pub fn g2_generator() -> G2 {
    G2::generator()
}

/// `e(a, b)`.
pub fn pairing(a: &G1, b: &G2) -> Gt {
    Bn254::pairing(*a, *b)
}

/// `prod_i e(a_i, b_i)` with a single final exponentiation.
pub fn multi_pairing(a: &[G1], b: &[G2]) -> Gt {
    Bn254::multi_pairing(a.iter().copied(), b.iter().copied())
}

pub fn random_fr<R: RngCore + CryptoRng>(rng: &mut R) -> Fr {
    Fr::rand(rng)
}

pub fn fr_from_u64(v: u64) -> Fr {
    Fr::from(v)
}

pub fn fr_from_digest(digest: &[u8; 32]) -> Fr {
    Fr::from_be_bytes_mod_order(digest)
}

/// 32-octet big-endian.
pub fn encode_fr(s: &Fr) -> [u8; FR_LEN] {
    let mut out = [0u8; FR_LEN];
    let be = s.into_bigint().to_bytes_be();
    out.copy_from_slice(&be);
    out
}

/// Rejects values at or above the group order.
pub fn decode_fr(bytes: &[u8]) -> Result<Fr> {
    if bytes.len() != FR_LEN {
        return Err(Error::Malformed("scalar length"));
    }
    let s = Fr::from_be_bytes_mod_order(bytes);
    if encode_fr(&s) != bytes {
        return Err(Error::Malformed("scalar not canonical"));
    }
    Ok(s)
}

fn ark_encode<T: CanonicalSerialize>(v: &T, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    v.serialize_with_mode(&mut out, Compress::Yes)
        .expect("writing to a Vec cannot fail");
    debug_assert_eq!(out.len(), len);
    out
}

fn ark_decode<T: CanonicalDeserialize>(bytes: &[u8], len: usize) -> Result<T> {
    if bytes.len() != len {
        return Err(Error::Malformed("group element length"));
    }
    T::deserialize_with_mode(bytes, Compress::Yes, Validate::Yes)
        .map_err(|_| Error::Malformed("invalid group element"))
}

pub fn encode_g1(p: &G1) -> Vec<u8> {
    ark_encode(&p.into_affine(), G1_LEN)
}

/// Compressed G1 point with on-curve check.
pub fn decode_g1(bytes: &[u8]) -> Result<G1> {
    let a: ark_bn254::G1Affine = ark_decode(bytes, G1_LEN)?;
    Ok(a.into_group())
}

pub fn encode_g2(p: &G2) -> Vec<u8> {
    ark_encode(&p.into_affine(), G2_LEN)
}

/// Compressed G2 point with on-curve and subgroup checks.
pub fn decode_g2(bytes: &[u8]) -> Result<G2> {
    let a: ark_bn254::G2Affine = ark_decode(bytes, G2_LEN)?;
    Ok(a.into_group())
}

/// Compresses a target-group element `f = c0 + c1 w` (norm one) to
/// `beta = (1 + c0) / c1`. The identity is written as `beta = 0`, which no
/// other element of odd order maps to.
pub fn encode_gt(e: &Gt) -> Vec<u8> {
    let f = e.0;
    if f.c1.is_zero() {
        debug_assert!(f.c0 == Fq6::ONE, "only the identity has c1 = 0 in Gt");
        return ark_encode(&Fq6::zero(), GT_LEN);
    }
    let beta = (Fq6::ONE + f.c0) * f.c1.inverse().expect("c1 is non-zero");
    ark_encode(&beta, GT_LEN)
}

/// Inverse of [`encode_gt`]: `f = (beta + w) / (beta - w)`.
///
/// The result has norm one but is not checked for membership in the order-r
/// subgroup; every verifier compares decoded values against recomputed ones.
pub fn decode_gt(bytes: &[u8]) -> Result<Gt> {
    let beta: Fq6 = ark_decode(bytes, GT_LEN)?;
    if beta.is_zero() {
        return Ok(Gt::zero());
    }
    let num = Fq12::new(beta, Fq6::ONE);
    let den = Fq12::new(beta, -Fq6::ONE);
    let den_inv = den.inverse().ok_or(Error::Malformed("target element"))?;
    Ok(PairingOutput(num * den_inv))
}

/// Try-and-increment hash into G2: the `x` coordinate is built from two
/// SHA-256 outputs over `message || i || j`, then the cofactor is cleared.
pub fn hash_to_g2(message: &[u8]) -> Result<G2> {
    let b = ark_bn254::g2::Config::COEFF_B;
    for i in 0..MAP_TO_GROUP_ATTEMPTS {
        let coord = |j: u8| {
            let d = Sha256::new()
                .chain_update(message)
                .chain_update(i.to_be_bytes())
                .chain_update([j])
                .finalize();
            Fq::from_be_bytes_mod_order(&d)
        };
        let x = Fq2::new(coord(0), coord(1));
        let rhs = x * x * x + b;
        let Some(y) = rhs.sqrt() else { continue };
        let p = ark_bn254::G2Affine::new_unchecked(x, y).clear_cofactor();
        if !p.is_zero() {
            return Ok(p.into_group());
        }
    }
    Err(Error::CannotMapToGroup)
}
