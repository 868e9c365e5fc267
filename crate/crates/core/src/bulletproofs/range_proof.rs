//! Range proof for `v in [0, 2^n)` committed as `V = g^v h^gamma`.

use rand::{CryptoRng, RngCore};

use crate::algebra::multiexp::msm;
use crate::algebra::secp::{
    decode_point, decode_scalar, encode_point, encode_scalar, inner_product, powers,
    random_scalar, scalar_invert, GroupElement, Scalar, POINT_LEN, SCALAR_LEN,
};
use crate::codec::{Reader, SchemeTag, Writer};
use crate::commit::Transcript;
use crate::{Error, Result};

use super::inner_product::{folding, prove_rounds, round_challenges, verify_rounds, IpProof};
use super::{delta_yz, BulletproofParams, MAX_BITS};

const RP_LABEL: &str = "bp/rp/v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RpProof {
    pub v: GroupElement,
    pub a: GroupElement,
    pub s: GroupElement,
    pub t1: GroupElement,
    pub t2: GroupElement,
    pub tau_x: Scalar,
    pub mu: Scalar,
    pub t_hat: Scalar,
    pub ip: IpProof,
}

/// Prover-side bit vectors and blinding vectors.
#[derive(Clone, Debug)]
pub struct BitVectors {
    pub a_l: Vec<Scalar>,
    pub a_r: Vec<Scalar>,
    pub s_l: Vec<Scalar>,
    pub s_r: Vec<Scalar>,
}

impl BitVectors {
    pub fn new<R: RngCore + CryptoRng>(v: u64, n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 || n > MAX_BITS {
            return Err(Error::InvalidParameter(format!("bit length {n}")));
        }
        if n < 64 && v >> n != 0 {
            return Err(Error::WitnessOutOfRange);
        }
        let a_l: Vec<Scalar> = (0..n).map(|i| Scalar::from((v >> i) & 1)).collect();
        let a_r = a_l.iter().map(|b| *b - Scalar::ONE).collect();
        Ok(Self {
            a_l,
            a_r,
            s_l: (0..n).map(|_| random_scalar(rng)).collect(),
            s_r: (0..n).map(|_| random_scalar(rng)).collect(),
        })
    }

    fn n(&self) -> usize {
        self.a_l.len()
    }

    /// `l(x) = a_L - z 1^n + s_L x`.
    pub fn l(&self, z: &Scalar, x: &Scalar) -> Vec<Scalar> {
        (0..self.n())
            .map(|i| self.a_l[i] - z + self.s_l[i] * x)
            .collect()
    }

    /// `r(x) = y^n o (a_R + z 1^n + s_R x) + z^2 2^n`.
    pub fn r(&self, y: &Scalar, z: &Scalar, x: &Scalar) -> Vec<Scalar> {
        let yn = powers(y, self.n());
        let twos = powers(&Scalar::from(2u64), self.n());
        let z2 = z.square();
        (0..self.n())
            .map(|i| yn[i] * (self.a_r[i] + z + self.s_r[i] * x) + z2 * twos[i])
            .collect()
    }

    /// Linear coefficient of `<l(X), r(X)>`:
    /// `<a_L - z 1^n, y^n o s_R> + <s_L, y^n o (a_R + z 1^n) + z^2 2^n>`.
    pub fn t1(&self, y: &Scalar, z: &Scalar) -> Scalar {
        let yn = powers(y, self.n());
        let twos = powers(&Scalar::from(2u64), self.n());
        let z2 = z.square();
        (0..self.n()).fold(Scalar::ZERO, |acc, i| {
            acc + (self.a_l[i] - z) * yn[i] * self.s_r[i]
                + self.s_l[i] * (yn[i] * (self.a_r[i] + z) + z2 * twos[i])
        })
    }

    /// Quadratic coefficient `<s_L, y^n o s_R>`.
    pub fn t2(&self, y: &Scalar) -> Scalar {
        let yn = powers(y, self.n());
        (0..self.n()).fold(Scalar::ZERO, |acc, i| acc + self.s_l[i] * yn[i] * self.s_r[i])
    }
}

/// `h'_i = h_i^{y^-i}` over the padded generator vector.
fn scaled_hvec(params: &BulletproofParams, y_inv: &Scalar) -> Vec<GroupElement> {
    params
        .hvec
        .iter()
        .zip(powers(y_inv, params.padded_len()))
        .map(|(h, e)| *h * e)
        .collect()
}

fn pad(mut v: Vec<Scalar>, len: usize) -> Vec<Scalar> {
    v.resize(len, Scalar::ZERO);
    v
}

struct Challenges {
    y: Scalar,
    z: Scalar,
    x: Scalar,
    w: Scalar,
}

fn start_transcript(params: &BulletproofParams, v: &GroupElement) -> Transcript {
    let mut tr = Transcript::new(RP_LABEL);
    tr.append_bytes(params.generator_digest());
    tr.append_u64(params.n as u64);
    tr.append_point(v);
    tr
}

/// Replays the verifier side of the transcript up to the inner-product rounds.
fn replay(params: &BulletproofParams, proof: &RpProof) -> (Transcript, Challenges) {
    let mut tr = start_transcript(params, &proof.v);
    tr.append_point(&proof.a);
    tr.append_point(&proof.s);
    let y = tr.challenge_scalar("y");
    let z = tr.challenge_scalar("z");
    tr.append_point(&proof.t1);
    tr.append_point(&proof.t2);
    let x = tr.challenge_scalar("x");
    tr.append_scalar(&proof.tau_x);
    tr.append_scalar(&proof.mu);
    tr.append_scalar(&proof.t_hat);
    let w = tr.challenge_scalar("w");
    (tr, Challenges { y, z, x, w })
}

/// Proves `v in [0, 2^n)` with fresh blinding `gamma`.
pub fn prove_rp<R: RngCore + CryptoRng>(
    params: &BulletproofParams,
    v: u64,
    rng: &mut R,
) -> Result<RpProof> {
    let gamma = random_scalar(rng);
    prove_rp_with(params, v, &gamma, rng)
}

/// Proves `v in [0, 2^n)` for the commitment `g^v h^gamma`.
pub fn prove_rp_with<R: RngCore + CryptoRng>(
    params: &BulletproofParams,
    v: u64,
    gamma: &Scalar,
    rng: &mut R,
) -> Result<RpProof> {
    let n = params.n;
    let bits = BitVectors::new(v, n, rng)?;
    let big_v = params.commit(&Scalar::from(v), gamma);
    let mut tr = start_transcript(params, &big_v);

    let gn = &params.gvec[..n];
    let hn = &params.hvec[..n];
    let alpha = random_scalar(rng);
    let rho = random_scalar(rng);
    let bases: Vec<GroupElement> = [params.h].iter().chain(gn).chain(hn).copied().collect();
    let a_exps: Vec<Scalar> = [alpha].iter().chain(&bits.a_l).chain(&bits.a_r).copied().collect();
    let s_exps: Vec<Scalar> = [rho].iter().chain(&bits.s_l).chain(&bits.s_r).copied().collect();
    let big_a = msm(&bases, &a_exps);
    let big_s = msm(&bases, &s_exps);
    tr.append_point(&big_a);
    tr.append_point(&big_s);
    let y = tr.challenge_scalar("y");
    let z = tr.challenge_scalar("z");

    let t1 = bits.t1(&y, &z);
    let t2 = bits.t2(&y);
    let tau1 = random_scalar(rng);
    let tau2 = random_scalar(rng);
    let big_t1 = params.commit(&t1, &tau1);
    let big_t2 = params.commit(&t2, &tau2);
    tr.append_point(&big_t1);
    tr.append_point(&big_t2);
    let x = tr.challenge_scalar("x");

    let l = bits.l(&z, &x);
    let r = bits.r(&y, &z, &x);
    let t_hat = inner_product(&l, &r)?;
    let tau_x = tau2 * x.square() + tau1 * x + z.square() * gamma;
    let mu = alpha + rho * x;
    tr.append_scalar(&tau_x);
    tr.append_scalar(&mu);
    tr.append_scalar(&t_hat);
    let w = tr.challenge_scalar("w");

    let y_inv = scalar_invert(&y).expect("challenges are non-zero");
    let len = params.padded_len();
    let ip = prove_rounds(
        &mut tr,
        params.gvec.clone(),
        scaled_hvec(params, &y_inv),
        params.u * w,
        pad(l, len),
        pad(r, len),
    );
    Ok(RpProof {
        v: big_v,
        a: big_a,
        s: big_s,
        t1: big_t1,
        t2: big_t2,
        tau_x,
        mu,
        t_hat,
        ip,
    })
}

/// `g^t_hat h^tau_x == V^{z^2} g^delta T1^x T2^{x^2}`.
fn polynomial_check(params: &BulletproofParams, proof: &RpProof, ch: &Challenges) -> bool {
    let delta = delta_yz(&ch.y, &ch.z, params.n);
    let bases = [params.g, params.h, proof.v, proof.t1, proof.t2];
    let exps = [
        proof.t_hat - delta,
        proof.tau_x,
        -ch.z.square(),
        -ch.x,
        -ch.x.square(),
    ];
    msm(&bases, &exps) == GroupElement::IDENTITY
}

/// Verifier that folds the inner-product generators round by round.
pub fn verify_rp(params: &BulletproofParams, proof: &RpProof) -> bool {
    let (mut tr, ch) = replay(params, proof);
    if !polynomial_check(params, proof, &ch) {
        return false;
    }
    let n = params.n;
    let y_inv = scalar_invert(&ch.y).expect("challenges are non-zero");
    let h_prime = scaled_hvec(params, &y_inv);
    let yn = powers(&ch.y, n);
    let twos = powers(&Scalar::from(2u64), n);
    let z2 = ch.z.square();

    // P = A S^x gvec^-z h'^{z y^n + z^2 2^n} h^-mu
    let mut bases = vec![proof.a, proof.s, params.h];
    let mut exps = vec![Scalar::ONE, ch.x, -proof.mu];
    bases.extend_from_slice(&params.gvec[..n]);
    exps.extend(std::iter::repeat_n(-ch.z, n));
    bases.extend_from_slice(&h_prime[..n]);
    exps.extend((0..n).map(|i| ch.z * yn[i] + z2 * twos[i]));
    let p = msm(&bases, &exps);

    let u = params.u * ch.w;
    verify_rounds(
        &mut tr,
        params.gvec.clone(),
        h_prime,
        &u,
        p + u * proof.t_hat,
        &proof.ip,
    )
}

/// Same decision as [`verify_rp`]; the commitment reconstruction and the
/// whole inner-product argument collapse into one multi-exponentiation.
pub fn verify_rp_multiexp(params: &BulletproofParams, proof: &RpProof) -> bool {
    let (mut tr, ch) = replay(params, proof);
    if !polynomial_check(params, proof, &ch) {
        return false;
    }
    let len = params.padded_len();
    let Some(xs) = round_challenges(&mut tr, len, &proof.ip) else {
        return false;
    };
    let f = folding(&xs);
    let n = params.n;
    let y_inv = scalar_invert(&ch.y).expect("challenges are non-zero");
    let y_inv_pows = powers(&y_inv, len);
    let twos = powers(&Scalar::from(2u64), n);
    let (a, b) = (proof.ip.a, proof.ip.b);
    let z2 = ch.z.square();

    let mut bases = Vec::with_capacity(2 * len + 2 * xs.len() + 4);
    let mut exps = Vec::with_capacity(bases.capacity());
    bases.extend_from_slice(&params.gvec);
    exps.extend((0..len).map(|i| {
        let e = a * f.s[i];
        if i < n {
            e + ch.z
        } else {
            e
        }
    }));
    bases.extend_from_slice(&params.hvec);
    exps.extend((0..len).map(|i| {
        let e = b * f.s_inv[i] * y_inv_pows[i];
        if i < n {
            e - ch.z - z2 * twos[i] * y_inv_pows[i]
        } else {
            e
        }
    }));
    bases.push(params.u);
    exps.push(ch.w * (a * b - proof.t_hat));
    bases.push(params.h);
    exps.push(proof.mu);
    bases.push(proof.a);
    exps.push(-Scalar::ONE);
    bases.push(proof.s);
    exps.push(-ch.x);
    bases.extend_from_slice(&proof.ip.ls);
    exps.extend(f.x_sq.iter().map(|v| -*v));
    bases.extend_from_slice(&proof.ip.rs);
    exps.extend(f.x_inv_sq.iter().map(|v| -*v));
    msm(&bases, &exps) == GroupElement::IDENTITY
}

impl RpProof {
    /// `"ZKRP" || 1 || 0x03 || n || V A S T1 T2 || tau_x mu t_hat || Ls || Rs || a b`.
    pub fn to_bytes(&self, n: usize) -> Vec<u8> {
        let mut w = Writer::new();
        w.header(SchemeTag::Bulletproofs);
        w.u32(n as u32);
        for p in [&self.v, &self.a, &self.s, &self.t1, &self.t2] {
            w.raw(&encode_point(p));
        }
        for s in [&self.tau_x, &self.mu, &self.t_hat] {
            w.raw(&encode_scalar(s));
        }
        for seq in [&self.ip.ls, &self.ip.rs] {
            w.u32(seq.len() as u32);
            for p in seq {
                w.raw(&encode_point(p));
            }
        }
        w.raw(&encode_scalar(&self.ip.a));
        w.raw(&encode_scalar(&self.ip.b));
        w.into_bytes()
    }

    /// Returns the proof and its declared bit length.
    pub fn from_bytes(bytes: &[u8]) -> Result<(Self, usize)> {
        let mut r = Reader::new(bytes);
        r.expect_header(SchemeTag::Bulletproofs)?;
        let n = r.u32()? as usize;
        if n == 0 || n > MAX_BITS {
            return Err(Error::Malformed("bit length"));
        }
        let point = |r: &mut Reader<'_>| decode_point(r.raw(POINT_LEN)?);
        let scalar = |r: &mut Reader<'_>| decode_scalar(r.raw(SCALAR_LEN)?);
        let v = point(&mut r)?;
        let a = point(&mut r)?;
        let s = point(&mut r)?;
        let t1 = point(&mut r)?;
        let t2 = point(&mut r)?;
        let tau_x = scalar(&mut r)?;
        let mu = scalar(&mut r)?;
        let t_hat = scalar(&mut r)?;
        let max_rounds = MAX_BITS.trailing_zeros() as usize;
        let mut seqs = Vec::with_capacity(2);
        for _ in 0..2 {
            let k = r.count(max_rounds)?;
            seqs.push((0..k).map(|_| point(&mut r)).collect::<Result<Vec<_>>>()?);
        }
        let ip_a = scalar(&mut r)?;
        let ip_b = scalar(&mut r)?;
        r.finish()?;
        let rs = seqs.pop().expect("two sequences");
        let ls = seqs.pop().expect("two sequences");
        let ip = IpProof {
            ls,
            rs,
            a: ip_a,
            b: ip_b,
        };
        Ok((
            Self {
                v,
                a,
                s,
                t1,
                t2,
                tau_x,
                mu,
                t_hat,
                ip,
            },
            n,
        ))
    }
}

/// Serialized length in octets.
pub fn proof_size(proof: &RpProof) -> usize {
    layout_len(proof.ip.ls.len() + proof.ip.rs.len())
}

/// Serialized length of an honest proof for `n`-bit ranges.
pub fn proof_len(n: usize) -> usize {
    layout_len(2 * n.next_power_of_two().trailing_zeros() as usize)
}

fn layout_len(round_points: usize) -> usize {
    6 + 4 + 5 * POINT_LEN + 3 * SCALAR_LEN + 2 * 4 + round_points * POINT_LEN + 2 * SCALAR_LEN
}
