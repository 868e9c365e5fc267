//! Signature-based set membership and range proofs over BN254.
//!
//! The verifier publishes Boneh-Boyen signatures on every admissible value;
//! the prover shows in zero knowledge that it holds a blinded signature on
//! its committed value. Range proofs sign only the digits `0..u` and prove
//! each base-`u` digit of the secret separately.
//!
//! Placement: the public key `y = g1^x` lives in G1, signatures
//! `A_i = g2^{1/(x+i)}` and the commitments `C = g2^delta h2^gamma` live in
//! G2, and `e(g1, g2)` generates the target group.

use std::collections::HashMap;

use ark_ff::Field;
use rand::{CryptoRng, RngCore};

use crate::algebra::pairing::{
    self, decode_fr, decode_g2, decode_gt, encode_fr, encode_g2, encode_gt, g1_generator,
    g2_generator, hash_to_g2, random_fr, Fr, Gt, G1, G2,
};
use crate::codec::{Reader, SchemeTag, Writer};
use crate::commit::Transcript;
use crate::{Error, Result};

/// Seed for the second commitment base in G2.
pub const H2_SEED: &[u8] = b"zkrange/sigrange/h/v1";

const SM_LABEL: &str = "ccs/sm/v1";
const RP_LABEL: &str = "ccs/rp/v1";

/// Largest digit count accepted by setup and by the decoder.
pub const MAX_DIGITS: u32 = 64;

/// Largest `u^l` supported; digit arithmetic runs in `u128`.
const MAX_SPAN: u128 = 1 << 127;

/// Public bases shared by every sigrange statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bases {
    pub g1: G1,
    pub g2: G2,
    pub h2: G2,
    /// `e(g1, g2)`.
    pub gt: Gt,
}

impl Bases {
    pub fn new() -> Self {
        let g1 = g1_generator();
        let g2 = g2_generator();
        Self {
            g1,
            g2,
            h2: hash_to_g2(H2_SEED).expect("fixed seed maps to G2"),
            gt: pairing::pairing(&g1, &g2),
        }
    }

    /// `g2^delta h2^gamma`.
    pub fn commit(&self, delta: &Fr, gamma: &Fr) -> G2 {
        self.g2 * delta + self.h2 * gamma
    }
}

impl Default for Bases {
    fn default() -> Self {
        Self::new()
    }
}

/// A Boneh-Boyen key pair. Only setup ever holds one.
pub struct BbKeyPair {
    x: Fr,
    pub y: G1,
}

impl BbKeyPair {
    pub fn generate<R: RngCore + CryptoRng>(bases: &Bases, rng: &mut R) -> Self {
        let x = random_fr(rng);
        Self { x, y: bases.g1 * x }
    }

    pub fn secret(&self) -> &Fr {
        &self.x
    }
}

/// `sigma = g2^{1/(x+m)}`.
pub fn bb_sign(bases: &Bases, x: &Fr, m: &Fr) -> Result<G2> {
    let inv = (*x + m).inverse().ok_or(Error::UnsignableMessage)?;
    Ok(bases.g2 * inv)
}

/// `e(y g1^m, sigma) = e(g1, g2)`.
pub fn bb_verify(bases: &Bases, y: &G1, m: &Fr, sigma: &G2) -> bool {
    pairing::pairing(&(*y + bases.g1 * m), sigma) == bases.gt
}

/// Signs every message under a fresh key, drawing a new key in the
/// negligible event that some `x + m` vanishes. The key is dropped on return.
fn sign_all<R: RngCore + CryptoRng>(bases: &Bases, messages: &[Fr], rng: &mut R) -> (G1, Vec<G2>) {
    loop {
        let key = BbKeyPair::generate(bases, rng);
        let sigs: Result<Vec<G2>> = messages.iter().map(|m| bb_sign(bases, key.secret(), m)).collect();
        if let Ok(sigs) = sigs {
            return (key.y, sigs);
        }
    }
}

// ---------------------------------------------------------------------------
// Set membership

#[derive(Clone, Debug)]
pub struct SmParams {
    pub bases: Bases,
    pub y: G1,
    pub signatures: HashMap<Fr, G2>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmProof {
    pub v: G2,
    pub a: Gt,
    pub d: G2,
    pub z_delta: Fr,
    pub z_tau: Fr,
    pub z_gamma: Fr,
    pub c: Fr,
}

pub fn setup_sm<R: RngCore + CryptoRng>(set: &[Fr], rng: &mut R) -> Result<SmParams> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bases = Bases::new();
    let (y, sigs) = sign_all(&bases, set, rng);
    Ok(SmParams {
        bases,
        y,
        signatures: set.iter().copied().zip(sigs).collect(),
    })
}

fn sm_challenge(v: &G2, a: &Gt, d: &G2) -> Fr {
    let mut tr = Transcript::new(SM_LABEL);
    tr.append_bytes(&encode_g2(v));
    tr.append_bytes(&encode_gt(a));
    tr.append_bytes(&encode_g2(d));
    tr.challenge_fr("c")
}

/// Proves that `c = g2^delta h2^gamma` with `delta` in the signed set.
pub fn prove_sm<R: RngCore + CryptoRng>(
    params: &SmParams,
    delta: &Fr,
    gamma: &Fr,
    rng: &mut R,
) -> Result<SmProof> {
    let sig = params.signatures.get(delta).ok_or(Error::NotAMember)?;
    let b = &params.bases;
    let tau = nonzero_fr(rng);
    let v = *sig * tau;
    let (s, t, m) = (random_fr(rng), random_fr(rng), random_fr(rng));
    let a = pairing::pairing(&(b.g1 * -s), &v) + b.gt * t;
    let d = b.g2 * s + b.h2 * m;
    let c = sm_challenge(&v, &a, &d);
    Ok(SmProof {
        v,
        a,
        d,
        z_delta: s - *delta * c,
        z_tau: t - tau * c,
        z_gamma: m - *gamma * c,
        c,
    })
}

pub fn verify_sm(params: &SmParams, c: &G2, proof: &SmProof) -> bool {
    let b = &params.bases;
    // An identity V would satisfy the pairing check for any digit.
    if proof.v == G2::default() {
        return false;
    }
    if sm_challenge(&proof.v, &proof.a, &proof.d) != proof.c {
        return false;
    }
    let d = *c * proof.c + b.h2 * proof.z_gamma + b.g2 * proof.z_delta;
    if d != proof.d {
        return false;
    }
    let lhs = params.y * proof.c - b.g1 * proof.z_delta;
    proof.a == pairing::pairing(&lhs, &proof.v) + b.gt * proof.z_tau
}

fn nonzero_fr<R: RngCore + CryptoRng>(rng: &mut R) -> Fr {
    loop {
        let v = random_fr(rng);
        if v != Fr::from(0u64) {
            return v;
        }
    }
}

// ---------------------------------------------------------------------------
// Range proofs over [0, u^l)

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigRangeParams {
    pub bases: Bases,
    pub u: u64,
    pub l: u32,
    pub y: G1,
    /// `signatures[i] = g2^{1/(x+i)}` for every digit `i < u`.
    pub signatures: Vec<G2>,
}

impl SigRangeParams {
    /// `u^l`.
    pub fn span(&self) -> u128 {
        span(self.u, self.l).expect("checked at setup")
    }
}

fn span(u: u64, l: u32) -> Option<u128> {
    (u as u128).checked_pow(l).filter(|&s| s <= MAX_SPAN)
}

pub fn setup_range<R: RngCore + CryptoRng>(u: u64, l: u32, rng: &mut R) -> Result<SigRangeParams> {
    if u < 2 {
        return Err(Error::InvalidParameter("base u must be at least 2".into()));
    }
    if l == 0 || l > MAX_DIGITS {
        return Err(Error::InvalidParameter(format!("digit count must be in [1, {MAX_DIGITS}]")));
    }
    if span(u, l).is_none() {
        return Err(Error::InvalidParameter("u^l exceeds 2^127".into()));
    }
    let bases = Bases::new();
    let digits: Vec<Fr> = (0..u).map(Fr::from).collect();
    let (y, signatures) = sign_all(&bases, &digits, rng);
    Ok(SigRangeParams {
        bases,
        u,
        l,
        y,
        signatures,
    })
}

/// Base-`u` digits of `delta`, least significant first.
pub fn digits(delta: u128, u: u64, l: u32) -> Result<Vec<u64>> {
    if u < 2 {
        return Err(Error::InvalidParameter("base u must be at least 2".into()));
    }
    let bound = span(u, l).ok_or(Error::InvalidParameter("u^l exceeds 2^127".into()))?;
    if delta >= bound {
        return Err(Error::WitnessOutOfRange);
    }
    let mut rest = delta;
    let mut out = Vec::with_capacity(l as usize);
    for _ in 0..l {
        out.push((rest % u as u128) as u64);
        rest /= u as u128;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigRangeProof {
    pub v: Vec<G2>,
    pub a: Vec<Gt>,
    pub d: G2,
    pub c: Fr,
    pub z_gamma: Fr,
    pub z_delta: Vec<Fr>,
    pub z_tau: Vec<Fr>,
}

fn rp_challenge(v: &[G2], a: &[Gt], d: &G2) -> Fr {
    let mut tr = Transcript::new(RP_LABEL);
    for vj in v {
        tr.append_bytes(&encode_g2(vj));
    }
    for aj in a {
        tr.append_bytes(&encode_gt(aj));
    }
    tr.append_bytes(&encode_g2(d));
    tr.challenge_fr("c")
}

/// `[1, u, u^2, ...]` in the scalar field.
fn digit_weights(u: u64, l: u32) -> Vec<Fr> {
    let mut w = Vec::with_capacity(l as usize);
    let mut acc = Fr::from(1u64);
    for _ in 0..l {
        w.push(acc);
        acc *= Fr::from(u);
    }
    w
}

/// Proves `delta` in `[0, u^l)` for `c = g2^delta h2^gamma`.
pub fn prove_range<R: RngCore + CryptoRng>(
    params: &SigRangeParams,
    delta: u128,
    gamma: &Fr,
    rng: &mut R,
) -> Result<SigRangeProof> {
    let ds = digits(delta, params.u, params.l)?;
    let b = &params.bases;
    let weights = digit_weights(params.u, params.l);
    let n = ds.len();
    let (mut v, mut a) = (Vec::with_capacity(n), Vec::with_capacity(n));
    let (mut ss, mut ts, mut taus) = (Vec::new(), Vec::new(), Vec::new());
    let mut d = G2::default();
    let mut m_sum = Fr::from(0u64);
    for (j, &dj) in ds.iter().enumerate() {
        let tau = nonzero_fr(rng);
        let vj = params.signatures[dj as usize] * tau;
        let (s, t, m) = (random_fr(rng), random_fr(rng), random_fr(rng));
        a.push(pairing::pairing(&(b.g1 * -s), &vj) + b.gt * t);
        d += b.g2 * (weights[j] * s) + b.h2 * m;
        m_sum += m;
        v.push(vj);
        ss.push(s);
        ts.push(t);
        taus.push(tau);
    }
    let c = rp_challenge(&v, &a, &d);
    let z_delta = ds.iter().zip(&ss).map(|(&dj, s)| *s - Fr::from(dj) * c).collect();
    let z_tau = taus.iter().zip(&ts).map(|(tau, t)| *t - *tau * c).collect();
    Ok(SigRangeProof {
        v,
        a,
        d,
        c,
        z_gamma: m_sum - *gamma * c,
        z_delta,
        z_tau,
    })
}

pub fn verify_range(params: &SigRangeParams, c: &G2, proof: &SigRangeProof) -> bool {
    let n = params.l as usize;
    if proof.v.len() != n || proof.a.len() != n || proof.z_delta.len() != n || proof.z_tau.len() != n {
        return false;
    }
    if proof.v.iter().any(|v| *v == G2::default()) {
        return false;
    }
    if rp_challenge(&proof.v, &proof.a, &proof.d) != proof.c {
        return false;
    }
    let b = &params.bases;
    let weights = digit_weights(params.u, params.l);
    let weighted: Fr = weights.iter().zip(&proof.z_delta).map(|(w, z)| *w * z).sum();
    if proof.d != *c * proof.c + b.h2 * proof.z_gamma + b.g2 * weighted {
        return false;
    }
    let yc = params.y * proof.c;
    (0..n).all(|j| {
        let lhs = yc - b.g1 * proof.z_delta[j];
        proof.a[j] == pairing::pairing(&lhs, &proof.v[j]) + b.gt * proof.z_tau[j]
    })
}

// ---------------------------------------------------------------------------
// Arbitrary ranges [a, b)

/// Two range proofs: `delta - a` and `delta - b + u^l` both in `[0, u^l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArbitraryRangeProof {
    pub lower: SigRangeProof,
    pub upper: SigRangeProof,
}

fn fr_signed(v: i128) -> Fr {
    if v < 0 {
        -Fr::from(v.unsigned_abs())
    } else {
        Fr::from(v as u128)
    }
}

/// The shifted commitments `c / g2^a` and `c / g2^{b - u^l}`.
fn shifted(params: &SigRangeParams, c: &G2, a: u64, b: u64) -> (G2, G2) {
    let g = params.bases.g2;
    let upper_shift = b as i128 - params.span() as i128;
    (*c - g * Fr::from(a), *c - g * fr_signed(upper_shift))
}

fn check_interval(params: &SigRangeParams, a: u64, b: u64) -> Result<()> {
    if a >= b {
        return Err(Error::InvalidParameter("interval must satisfy a < b".into()));
    }
    if params.span() < (b - a) as u128 {
        return Err(Error::InvalidParameter("u^l must cover b - a".into()));
    }
    Ok(())
}

pub fn prove_arbitrary<R: RngCore + CryptoRng>(
    params: &SigRangeParams,
    delta: u64,
    gamma: &Fr,
    a: u64,
    b: u64,
    rng: &mut R,
) -> Result<ArbitraryRangeProof> {
    check_interval(params, a, b)?;
    if delta < a || delta >= b {
        return Err(Error::WitnessOutOfRange);
    }
    let lower = prove_range(params, (delta - a) as u128, gamma, rng)?;
    let upper_value = (delta as i128 - b as i128 + params.span() as i128) as u128;
    let upper = prove_range(params, upper_value, gamma, rng)?;
    Ok(ArbitraryRangeProof { lower, upper })
}

pub fn verify_arbitrary(
    params: &SigRangeParams,
    c: &G2,
    a: u64,
    b: u64,
    proof: &ArbitraryRangeProof,
) -> bool {
    if check_interval(params, a, b).is_err() {
        return false;
    }
    let (ca, cb) = shifted(params, c, a, b);
    verify_range(params, &ca, &proof.lower) && verify_range(params, &cb, &proof.upper)
}

// ---------------------------------------------------------------------------
// Parameter choice

/// Serialized size in octets of one [`SigRangeProof`] body with `l` digits.
pub fn range_proof_len(l: u32) -> usize {
    let l = l as usize;
    let gt_field = 4 + pairing::GT_LEN;
    4 + l * pairing::G2_LEN + l * gt_field + pairing::G2_LEN + 2 * pairing::FR_LEN + 2 * l * pairing::FR_LEN
}

/// Serialized size in octets of an [`ArbitraryRangeProof`] file.
pub fn arbitrary_proof_len(l: u32) -> usize {
    6 + 8 + 2 * range_proof_len(l)
}

/// Smallest `u >= 2` with `u^l >= width`.
fn smallest_base(width: u128, l: u32) -> Option<u64> {
    if width <= 2 {
        return Some(2);
    }
    // start from the floating-point root and correct in both directions
    let mut u = (width as f64).powf(1.0 / l as f64).floor().max(2.0) as u64;
    while u > 2 && span(u - 1, l).is_some_and(|s| s >= width) {
        u -= 1;
    }
    loop {
        match (u as u128).checked_pow(l) {
            Some(s) if s >= width => return Some(u),
            None => return Some(u),
            _ => u = u.checked_add(1)?,
        }
    }
}

/// Chooses `(u, l)` for the interval `[a, b)`.
///
/// Every `l` in `[1, 64]` is paired with the smallest base covering `b - a`.
/// The cost is the serialized arbitrary-range proof plus the published
/// signature table (`u` G2 points); proof size alone would always favor
/// `l = 1`, which needs a signature on every value in the interval. Ties go
/// to the smaller `l`.
pub fn optimal_params(a: u64, b: u64) -> Result<(u64, u32)> {
    if b <= a {
        return Err(Error::InvalidParameter("interval must satisfy a < b".into()));
    }
    let width = (b - a) as u128;
    let mut best: Option<(usize, u64, u32)> = None;
    for l in 1..=MAX_DIGITS {
        let Some(u) = smallest_base(width, l) else { continue };
        if span(u, l).is_none() {
            continue;
        }
        let cost = arbitrary_proof_len(l) + u as usize * pairing::G2_LEN;
        if best.is_none_or(|(c, _, _)| cost < c) {
            best = Some((cost, u, l));
        }
    }
    let (_, u, l) = best.expect("l = 64 with u = 2 always covers a u64 width");
    Ok((u, l))
}

// ---------------------------------------------------------------------------
// Serialization

impl SigRangeProof {
    pub fn encode(&self, w: &mut Writer) {
        w.u32(self.v.len() as u32);
        for v in &self.v {
            w.raw(&encode_g2(v));
        }
        for a in &self.a {
            w.var_bytes(&encode_gt(a));
        }
        w.raw(&encode_g2(&self.d));
        w.raw(&encode_fr(&self.c));
        w.raw(&encode_fr(&self.z_gamma));
        for z in self.z_delta.iter().chain(&self.z_tau) {
            w.raw(&encode_fr(z));
        }
    }

    pub fn decode(r: &mut Reader<'_>) -> Result<Self> {
        let n = r.count(MAX_DIGITS as usize)?;
        let v = (0..n)
            .map(|_| decode_g2(r.raw(pairing::G2_LEN)?))
            .collect::<Result<Vec<_>>>()?;
        let a = (0..n)
            .map(|_| decode_gt(r.var_bytes()?))
            .collect::<Result<Vec<_>>>()?;
        let d = decode_g2(r.raw(pairing::G2_LEN)?)?;
        let c = decode_fr(r.raw(pairing::FR_LEN)?)?;
        let z_gamma = decode_fr(r.raw(pairing::FR_LEN)?)?;
        let mut fr_seq = || {
            (0..n)
                .map(|_| decode_fr(r.raw(pairing::FR_LEN)?))
                .collect::<Result<Vec<_>>>()
        };
        let z_delta = fr_seq()?;
        let z_tau = fr_seq()?;
        Ok(Self {
            v,
            a,
            d,
            c,
            z_gamma,
            z_delta,
            z_tau,
        })
    }
}

impl ArbitraryRangeProof {
    /// Header, `u`, `l`, then the lower and upper proofs.
    pub fn to_bytes(&self, params: &SigRangeParams) -> Vec<u8> {
        let mut w = Writer::new();
        w.header(SchemeTag::SigRange);
        w.u64(params.u);
        self.lower.encode(&mut w);
        self.upper.encode(&mut w);
        w.into_bytes()
    }

    pub fn from_bytes(bytes: &[u8], params: &SigRangeParams) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.expect_header(SchemeTag::SigRange)?;
        if r.u64()? != params.u {
            return Err(Error::Malformed("base does not match parameters"));
        }
        let lower = SigRangeProof::decode(&mut r)?;
        let upper = SigRangeProof::decode(&mut r)?;
        r.finish()?;
        Ok(Self { lower, upper })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn bb_signatures() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let bases = Bases::new();
        let key = BbKeyPair::generate(&bases, &mut rng);
        let m = Fr::from(42u64);
        let sig = bb_sign(&bases, key.secret(), &m).unwrap();
        assert!(bb_verify(&bases, &key.y, &m, &sig));
        assert!(!bb_verify(&bases, &key.y, &Fr::from(43u64), &sig));
        assert!(!bb_verify(&bases, &key.y, &m, &bases.g2));
        assert!(matches!(
            bb_sign(&bases, key.secret(), &-*key.secret()),
            Err(Error::UnsignableMessage)
        ));
    }

    #[test]
    fn set_membership() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let set: Vec<Fr> = [1u64, 2, 3].map(Fr::from).to_vec();
        let params = setup_sm(&set, &mut rng).unwrap();
        for (m, sig) in &params.signatures {
            assert!(bb_verify(&params.bases, &params.y, m, sig));
        }
        let gamma = random_fr(&mut rng);
        let delta = Fr::from(1u64);
        let c = params.bases.commit(&delta, &gamma);
        let proof = prove_sm(&params, &delta, &gamma, &mut rng).unwrap();
        assert!(verify_sm(&params, &c, &proof));

        let mut bad = proof.clone();
        bad.z_delta += Fr::from(1u64);
        assert!(!verify_sm(&params, &c, &bad));

        let mut bad = proof.clone();
        bad.c += Fr::from(1u64);
        assert!(!verify_sm(&params, &c, &bad));

        assert!(matches!(
            prove_sm(&params, &Fr::from(4u64), &gamma, &mut rng),
            Err(Error::NotAMember)
        ));
        assert!(setup_sm(&[], &mut rng).is_err());
    }

    #[test]
    fn set_membership_rejects_identity_blinding() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let params = setup_sm(&[Fr::from(5u64)], &mut rng).unwrap();
        // with V = identity the pairing check degenerates; the verifier must
        // refuse it even when every other equation is arranged to hold
        let c = params.bases.commit(&Fr::from(999u64), &Fr::from(1u64));
        let (s, t, m) = (random_fr(&mut rng), random_fr(&mut rng), random_fr(&mut rng));
        let v = G2::default();
        let a = params.bases.gt * t;
        let d = params.bases.g2 * s + params.bases.h2 * m;
        let ch = sm_challenge(&v, &a, &d);
        let forged = SmProof {
            v,
            a,
            d,
            z_delta: s - Fr::from(999u64) * ch,
            z_tau: t,
            z_gamma: m - ch,
            c: ch,
        };
        assert!(!verify_sm(&params, &c, &forged));
    }

    #[test]
    fn digit_decomposition() {
        assert_eq!(digits(10, 3, 3).unwrap(), vec![1, 0, 1]);
        assert_eq!(digits(0, 5, 4).unwrap(), vec![0; 4]);
        assert_eq!(digits(124, 5, 3).unwrap(), vec![4; 3]);
        assert!(digits(125, 5, 3).is_err());
        for d in 0..243u128 {
            let ds = digits(d, 3, 5).unwrap();
            let back: u128 = ds.iter().rev().fold(0, |acc, &x| acc * 3 + x as u128);
            assert_eq!(back, d);
        }
    }

    #[test]
    fn range_edges() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let params = setup_range(4, 3, &mut rng).unwrap();
        assert_eq!(params.signatures.len(), 4);
        for delta in [0u128, 63] {
            let gamma = random_fr(&mut rng);
            let c = params.bases.commit(&Fr::from(delta), &gamma);
            let proof = prove_range(&params, delta, &gamma, &mut rng).unwrap();
            assert!(verify_range(&params, &c, &proof));
        }
        assert!(prove_range(&params, 64, &Fr::from(1u64), &mut rng).is_err());
        assert!(setup_range(1, 3, &mut rng).is_err());
        assert!(setup_range(2, 0, &mut rng).is_err());
    }

    #[test]
    fn arbitrary_range() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let (a, b) = (18u64, 200u64);
        let params = setup_range(4, 4, &mut rng).unwrap();
        for delta in [18u64, 25, 199] {
            let gamma = random_fr(&mut rng);
            let c = params.bases.commit(&Fr::from(delta), &gamma);
            let proof = prove_arbitrary(&params, delta, &gamma, a, b, &mut rng).unwrap();
            assert!(verify_arbitrary(&params, &c, a, b, &proof));
            let bytes = proof.to_bytes(&params);
            assert_eq!(bytes.len(), arbitrary_proof_len(params.l));
            assert_eq!(ArbitraryRangeProof::from_bytes(&bytes, &params).unwrap(), proof);
        }
        assert!(prove_arbitrary(&params, 17, &Fr::from(1u64), a, b, &mut rng).is_err());
        assert!(prove_arbitrary(&params, 200, &Fr::from(1u64), a, b, &mut rng).is_err());
        // u^l = 256 covers [18, 200) but not a width of 300
        assert!(prove_arbitrary(&params, 20, &Fr::from(1u64), 0, 300, &mut rng).is_err());
    }

    #[test]
    fn smallest_base_search() {
        assert_eq!(smallest_base(252_460_800, 5), Some(48));
        assert_eq!(smallest_base(252_460_800, 6), Some(26));
        assert_eq!(smallest_base(256, 8), Some(2));
        assert_eq!(smallest_base(257, 8), Some(3));
        assert_eq!(smallest_base(1, 1), Some(2));
        assert_eq!(smallest_base(u64::MAX as u128, 64), Some(2));
    }

    #[test]
    fn optimal_params_trivial_width() {
        assert_eq!(optimal_params(5, 6).unwrap(), (2, 1));
        assert!(optimal_params(6, 6).is_err());
    }
}
