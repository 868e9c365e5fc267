//! Pedersen and Fujisaki-Okamoto commitments, vector commitments, and the
//! Fiat-Shamir transcript.

mod transcript;

pub use transcript::Transcript;

use num_bigint::BigInt;
use num_traits::One;
use rand::{CryptoRng, RngCore};

use crate::algebra::multiexp::msm;
use crate::algebra::primes::sample_interval;
use crate::algebra::secp::{self, GroupElement, Scalar};
use crate::algebra::{RsaGroupElement, RsaModulus};
use crate::{Error, Result};

/// Seed string for the Pedersen blinding generator on secp256k1.
pub const PEDERSEN_H_SEED: &[u8] = b"zkrange/h/v1";

/// Default statistical hiding parameter for integer commitments.
pub const DEFAULT_STATISTICAL_PARAM: u32 = 80;

/// A commitment with its opening, when held by the prover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commitment<E, W> {
    pub element: E,
    pub opening: Option<Opening<W>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Opening<W> {
    pub message: W,
    pub randomness: W,
}

pub type PedersenCommitment = Commitment<GroupElement, Scalar>;
pub type FoCommitment = Commitment<RsaGroupElement, BigInt>;

/// Pedersen bases `(g, h)` with `h` hashed onto the curve so that nobody knows
/// `log_g h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PedersenParams {
    pub g: GroupElement,
    pub h: GroupElement,
}

impl PedersenParams {
    pub fn new() -> Self {
        Self {
            g: secp::generator(),
            h: secp::map_to_group(PEDERSEN_H_SEED).expect("fixed seed maps to the curve"),
        }
    }
}

impl Default for PedersenParams {
    fn default() -> Self {
        Self::new()
    }
}

/// `g^m h^r`.
pub fn pedersen_commit(params: &PedersenParams, m: &Scalar, r: &Scalar) -> PedersenCommitment {
    Commitment {
        element: params.g * m + params.h * r,
        opening: Some(Opening {
            message: *m,
            randomness: *r,
        }),
    }
}

pub fn pedersen_open(params: &PedersenParams, c: &GroupElement, m: &Scalar, r: &Scalar) -> bool {
    *c == params.g * m + params.h * r
}

/// Fujisaki-Okamoto parameters. `h` is a random square and `g = h^e` for a
/// secret `e` discarded at setup, so `g` lies in the subgroup generated by `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoParams {
    pub modulus: RsaModulus,
    pub g: RsaGroupElement,
    pub h: RsaGroupElement,
    /// Statistical parameter `s`.
    pub s: u32,
}

impl FoParams {
    pub fn setup<R: RngCore + CryptoRng>(modulus: RsaModulus, s: u32, rng: &mut R) -> Self {
        let (g, h) = random_base_pair(&modulus, rng);
        Self { modulus, g, h, s }
    }

    /// The randomness interval `[1, 2^s n - 1]`. The lower end `2^-s n + 1`
    /// is below one for every modulus in use, so it is clamped to one.
    pub fn randomness_interval(&self) -> (BigInt, BigInt) {
        let hi = (BigInt::from(self.modulus.n().clone()) << self.s as usize) - 1;
        (BigInt::one(), hi)
    }
}

/// Independent `(g, h)` pair inside `Z_n^*` with an erased exponent.
pub(crate) fn random_base_pair<R: RngCore + CryptoRng>(
    modulus: &RsaModulus,
    rng: &mut R,
) -> (RsaGroupElement, RsaGroupElement) {
    let h = modulus.random_square(rng);
    let e = num_bigint::RandBigInt::gen_biguint_below(rng, modulus.n());
    let g = modulus.pow(&h, &BigInt::from(e));
    (g, h)
}

/// Commits to `m` with freshly sampled randomness.
pub fn fo_commit<R: RngCore + CryptoRng>(params: &FoParams, m: &BigInt, rng: &mut R) -> FoCommitment {
    let (lo, hi) = params.randomness_interval();
    let r = sample_interval(rng, &lo, &hi);
    fo_commit_with(params, m, &r)
}

pub fn fo_commit_with(params: &FoParams, m: &BigInt, r: &BigInt) -> FoCommitment {
    Commitment {
        element: params.modulus.commit(&params.g, &params.h, m, r),
        opening: Some(Opening {
            message: m.clone(),
            randomness: r.clone(),
        }),
    }
}

pub fn fo_open(params: &FoParams, c: &RsaGroupElement, m: &BigInt, r: &BigInt) -> bool {
    *c == params.modulus.commit(&params.g, &params.h, m, r)
}

/// `prod g_i^{a_i} * prod h_i^{b_i}`.
pub fn vector_commit(
    gvec: &[GroupElement],
    hvec: &[GroupElement],
    a: &[Scalar],
    b: &[Scalar],
) -> Result<GroupElement> {
    let n = gvec.len();
    for len in [hvec.len(), a.len(), b.len()] {
        if len != n {
            return Err(Error::LengthMismatch(n, len));
        }
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let bases: Vec<GroupElement> = gvec.iter().chain(hvec).copied().collect();
    let exps: Vec<Scalar> = a.iter().chain(b).copied().collect();
    Ok(msm(&bases, &exps))
}

/// Bit length of `2^s n`, the magnitude bound on commitment randomness.
pub fn randomness_bits(modulus: &RsaModulus, s: u32) -> u64 {
    modulus.n().bits() + s as u64
}
