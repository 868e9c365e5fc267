//! Bulletproofs range proofs over secp256k1: generator derivation, the
//! recursive inner-product argument and the `[0, 2^n)` range proof.

mod inner_product;
mod range_proof;

pub use inner_product::{
    prove_ip, round_scalars, verify_ip, verify_ip_multiexp, IpProof,
};
pub use range_proof::{
    proof_len, proof_size, prove_rp, prove_rp_with, verify_rp, verify_rp_multiexp, BitVectors, RpProof,
};

use sha2::{Digest, Sha256};

use crate::algebra::secp::{self, encode_point, GroupElement, Scalar};
use crate::commit::PedersenParams;
use crate::{Error, Result};

/// Label for the inner-product base `u`.
pub const U_SEED: &[u8] = b"bp/u/v1";

/// Largest supported bit length; witnesses are `u64`.
pub const MAX_BITS: usize = 64;

/// Public parameters for ranges `[0, 2^n)`. Every generator is derived by
/// hashing onto the curve, so no party knows a discrete-log relation.
///
/// `gvec` and `hvec` have length `n` rounded up to a power of two. The
/// inner-product vectors are zero-padded to that length, and since the
/// verifier's commitment carries no weight on the padding generators the
/// padded entries are bound to zero.
#[derive(Clone, Debug)]
pub struct BulletproofParams {
    pub g: GroupElement,
    pub h: GroupElement,
    pub gvec: Vec<GroupElement>,
    pub hvec: Vec<GroupElement>,
    pub u: GroupElement,
    pub n: usize,
    /// SHA-256 over the encodings of `g, h, gvec, hvec, u`, absorbed by every
    /// transcript in place of the full generator list.
    generator_digest: [u8; 32],
}

impl BulletproofParams {
    /// Parameters for `n`-bit ranges, `1 <= n <= 64`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BITS {
            return Err(Error::InvalidParameter(format!(
                "bit length {n} outside [1, {MAX_BITS}]"
            )));
        }
        let (g, h, gvec, hvec) = compute_generators(&secp::generator(), n.next_power_of_two())?;
        let u = secp::map_to_group(U_SEED)?;
        let mut hasher = Sha256::new();
        for p in [&g, &h].into_iter().chain(&gvec).chain(&hvec).chain([&u]) {
            hasher.update(encode_point(p));
        }
        Ok(Self {
            g,
            h,
            gvec,
            hvec,
            u,
            n,
            generator_digest: hasher.finalize().into(),
        })
    }

    /// Length of the inner-product vectors.
    pub fn padded_len(&self) -> usize {
        self.gvec.len()
    }

    pub fn generator_digest(&self) -> &[u8; 32] {
        &self.generator_digest
    }

    /// Pedersen commitment `g^v h^gamma` under these parameters.
    pub fn commit(&self, v: &Scalar, gamma: &Scalar) -> GroupElement {
        self.g * v + self.h * gamma
    }
}

/// Parameters for the range `[a, b)`. Only `a = 0` and `b = 2^n` are
/// supported.
pub fn setup_rp(a: u128, b: u128) -> Result<BulletproofParams> {
    if a != 0 {
        return Err(Error::InvalidParameter(
            "range must start at zero".into(),
        ));
    }
    if !b.is_power_of_two() {
        return Err(Error::NotPowerOfTwo);
    }
    BulletproofParams::new(b.trailing_zeros() as usize)
}

/// Returns `(g, h, gvec, hvec)` with `h` the shared Pedersen blinding base and
/// `gvec[i]`, `hvec[i]` hashed from the labels `bp/g/i` and `bp/h/i`.
pub fn compute_generators(
    g: &GroupElement,
    n: usize,
) -> Result<(GroupElement, GroupElement, Vec<GroupElement>, Vec<GroupElement>)> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let h = PedersenParams::new().h;
    let derive = |prefix: &str| -> Result<Vec<GroupElement>> {
        (0..n)
            .map(|i| secp::map_to_group(format!("{prefix}{i}").as_bytes()))
            .collect()
    };
    Ok((*g, h, derive("bp/g/")?, derive("bp/h/")?))
}

/// `(z - z^2) <1^n, y^n> - z^3 <1^n, 2^n>`.
pub fn delta_yz(y: &Scalar, z: &Scalar, n: usize) -> Scalar {
    let sum_y = secp::powers(y, n).iter().fold(Scalar::ZERO, |acc, p| acc + p);
    let sum_2 = secp::powers(&Scalar::from(2u64), n)
        .iter()
        .fold(Scalar::ZERO, |acc, p| acc + p);
    let z2 = z * z;
    (*z - z2) * sum_y - z2 * z * sum_2
}

pub use secp::inner_product;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::secp::{random_scalar, scalar_from_u64};
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn hex(bytes: &[u8]) -> String {
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    #[test]
    fn setup_examples() {
        let p = setup_rp(0, 4096).unwrap();
        assert_eq!((p.n, p.padded_len()), (12, 16));
        assert!(matches!(setup_rp(0, 1000), Err(Error::NotPowerOfTwo)));
        assert!(matches!(setup_rp(0, 2), Ok(ref p) if p.n == 1 && p.padded_len() == 1));
        assert!(setup_rp(0, 1).is_err());
        assert!(setup_rp(3, 8).is_err());
        assert_eq!(setup_rp(0, 1u128 << 64).unwrap().n, 64);
        assert!(BulletproofParams::new(65).is_err());
    }

    // x-coordinates computed by an independent Python implementation of the
    // try-and-increment map.
    #[test]
    fn generators_golden() {
        let (_, _, gvec, hvec) = compute_generators(&secp::generator(), 8).unwrap();
        assert_eq!(
            hex(&encode_point(&gvec[0])[1..]),
            "13bd02914f9fc98c080c38ffb196aff4a5a465e0d4607b5105e7e4c45176b0bc"
        );
        assert_eq!(
            hex(&encode_point(&hvec[0])[1..]),
            "5073afb1850edbdaaf4ed670d19e3926be99de0d7447d3f7571bf8eed4f48098"
        );
        assert_eq!(
            hex(&encode_point(&gvec[7])[1..]),
            "0182e9ccd3b402b6d614b9275a18849bd5c6be849bacb7f8a361c24a711227dd"
        );
        let u = secp::map_to_group(U_SEED).unwrap();
        assert_eq!(
            hex(&encode_point(&u)[1..]),
            "c62ce1a89019a7a3755bf8b9d9e4a8d4d6f28c4299f20a902c86879b348862a7"
        );
    }

    #[test]
    fn generators_are_distinct_and_reproducible() {
        let (g, h, gvec, hvec) = compute_generators(&secp::generator(), 16).unwrap();
        let again = compute_generators(&secp::generator(), 16).unwrap();
        assert_eq!(gvec, again.2);
        assert_eq!(hvec, again.3);
        let mut all: Vec<[u8; 33]> = [g, h]
            .iter()
            .chain(&gvec)
            .chain(&hvec)
            .map(encode_point)
            .collect();
        for p in &all {
            assert!(secp::decode_point(p).is_ok());
        }
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 34);
        let one = compute_generators(&secp::generator(), 1).unwrap();
        assert_eq!((one.2.len(), one.3.len()), (1, 1));
        assert!(compute_generators(&secp::generator(), 0).is_err());
    }

    #[test]
    fn delta_examples() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let y = random_scalar(&mut rng);
        assert_eq!(delta_yz(&y, &Scalar::ZERO, 8), Scalar::ZERO);
        assert_eq!(delta_yz(&Scalar::ONE, &Scalar::ONE, 2), -scalar_from_u64(3));
        assert_eq!(
            delta_yz(&scalar_from_u64(2), &scalar_from_u64(3), 1),
            -scalar_from_u64(33)
        );
    }

    #[test]
    fn delta_matches_direct_summation() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        for n in [1usize, 2, 5, 32] {
            let y = random_scalar(&mut rng);
            let z = random_scalar(&mut rng);
            let mut expected = Scalar::ZERO;
            let mut yi = Scalar::ONE;
            let mut ti = Scalar::ONE;
            for _ in 0..n {
                expected += (z - z * z) * yi - z * z * z * ti;
                yi *= y;
                ti += ti;
            }
            assert_eq!(delta_yz(&y, &z, n), expected);
        }
    }

    #[test]
    fn inner_product_against_loop() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let a: Vec<Scalar> = (0..16).map(|_| random_scalar(&mut rng)).collect();
        let b: Vec<Scalar> = (0..16).map(|_| random_scalar(&mut rng)).collect();
        let mut acc = Scalar::ZERO;
        for i in 0..16 {
            acc += a[i] * b[i];
        }
        assert_eq!(inner_product(&a, &b).unwrap(), acc);
        assert_eq!(inner_product(&a, &[Scalar::ZERO; 16]).unwrap(), Scalar::ZERO);
    }
}
