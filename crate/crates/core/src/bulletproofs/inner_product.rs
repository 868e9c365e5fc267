//! The recursive inner-product argument and its two verifiers.

use crate::algebra::multiexp::msm;
use crate::algebra::secp::{inner_product, scalar_invert, GroupElement, Scalar};
use crate::commit::Transcript;
use crate::{Error, Result};

use super::BulletproofParams;

const IP_LABEL: &str = "bp/ip/v1";

/// Proof that the prover knows `a, b` with `P = g^a h^b` and `<a, b> = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpProof {
    pub ls: Vec<GroupElement>,
    pub rs: Vec<GroupElement>,
    pub a: Scalar,
    pub b: Scalar,
}

/// Absorbs the statement and derives the challenge that scales `u`.
fn ip_transcript(params: &BulletproofParams, p: &GroupElement, c: &Scalar) -> (Transcript, Scalar) {
    let mut tr = Transcript::new(IP_LABEL);
    tr.append_bytes(params.generator_digest());
    tr.append_point(p);
    tr.append_scalar(c);
    let x = tr.challenge_scalar("x");
    (tr, x)
}

fn check_lengths(params: &BulletproofParams, a: &[Scalar], b: &[Scalar]) -> Result<()> {
    let n = params.padded_len();
    for len in [a.len(), b.len()] {
        if len != n {
            return Err(Error::LengthMismatch(n, len));
        }
    }
    Ok(())
}

/// Proves `P = gvec^a hvec^b` and `c = <a, b>` over the parameter generators.
/// The statement is not checked; a false one yields a rejected proof.
pub fn prove_ip(
    params: &BulletproofParams,
    p: &GroupElement,
    c: &Scalar,
    a: &[Scalar],
    b: &[Scalar],
) -> Result<IpProof> {
    check_lengths(params, a, b)?;
    let (mut tr, x) = ip_transcript(params, p, c);
    Ok(prove_rounds(
        &mut tr,
        params.gvec.clone(),
        params.hvec.clone(),
        params.u * x,
        a.to_vec(),
        b.to_vec(),
    ))
}

/// Folds `(g, h, a, b)` in half per round until one entry remains.
/// `u` is the already scaled base.
pub(crate) fn prove_rounds(
    tr: &mut Transcript,
    mut g: Vec<GroupElement>,
    mut h: Vec<GroupElement>,
    u: GroupElement,
    mut a: Vec<Scalar>,
    mut b: Vec<Scalar>,
) -> IpProof {
    debug_assert!(g.len().is_power_of_two());
    let mut ls = Vec::new();
    let mut rs = Vec::new();
    while a.len() > 1 {
        let half = a.len() / 2;
        let (a_lo, a_hi) = a.split_at(half);
        let (b_lo, b_hi) = b.split_at(half);
        let (g_lo, g_hi) = g.split_at(half);
        let (h_lo, h_hi) = h.split_at(half);
        let c_l = inner_product(a_lo, b_hi).expect("halves match");
        let c_r = inner_product(a_hi, b_lo).expect("halves match");

        let bases: Vec<GroupElement> = g_hi.iter().chain(h_lo).chain([&u]).copied().collect();
        let exps: Vec<Scalar> = a_lo.iter().chain(b_hi).chain([&c_l]).copied().collect();
        let l = msm(&bases, &exps);
        let bases: Vec<GroupElement> = g_lo.iter().chain(h_hi).chain([&u]).copied().collect();
        let exps: Vec<Scalar> = a_hi.iter().chain(b_lo).chain([&c_r]).copied().collect();
        let r = msm(&bases, &exps);

        tr.append_point(&l);
        tr.append_point(&r);
        let x = tr.challenge_scalar("x");
        let x_inv = scalar_invert(&x).expect("challenges are non-zero");

        let g_next = fold_points(g_lo, g_hi, &x_inv, &x);
        let h_next = fold_points(h_lo, h_hi, &x, &x_inv);
        let a_next = fold_scalars(a_lo, a_hi, &x, &x_inv);
        let b_next = fold_scalars(b_lo, b_hi, &x_inv, &x);
        g = g_next;
        h = h_next;
        a = a_next;
        b = b_next;
        ls.push(l);
        rs.push(r);
    }
    IpProof {
        ls,
        rs,
        a: a[0],
        b: b[0],
    }
}

fn fold_points(lo: &[GroupElement], hi: &[GroupElement], x_lo: &Scalar, x_hi: &Scalar) -> Vec<GroupElement> {
    lo.iter().zip(hi).map(|(l, h)| *l * x_lo + *h * x_hi).collect()
}

fn fold_scalars(lo: &[Scalar], hi: &[Scalar], x_lo: &Scalar, x_hi: &Scalar) -> Vec<Scalar> {
    lo.iter().zip(hi).map(|(l, h)| *l * x_lo + *h * x_hi).collect()
}

/// Re-derives the per-round challenges, or `None` when the round count does
/// not match a vector length of `n`.
pub(crate) fn round_challenges(tr: &mut Transcript, n: usize, proof: &IpProof) -> Option<Vec<Scalar>> {
    let rounds = n.trailing_zeros() as usize;
    if !n.is_power_of_two() || proof.ls.len() != rounds || proof.rs.len() != rounds {
        return None;
    }
    Some(
        proof
            .ls
            .iter()
            .zip(&proof.rs)
            .map(|(l, r)| {
                tr.append_point(l);
                tr.append_point(r);
                tr.challenge_scalar("x")
            })
            .collect(),
    )
}

/// Round-by-round verifier: folds the generators and `P` exactly as the
/// prover folded its vectors. `p` must already include `u^c`.
pub(crate) fn verify_rounds(
    tr: &mut Transcript,
    mut g: Vec<GroupElement>,
    mut h: Vec<GroupElement>,
    u: &GroupElement,
    mut p: GroupElement,
    proof: &IpProof,
) -> bool {
    let Some(xs) = round_challenges(tr, g.len(), proof) else {
        return false;
    };
    for ((x, l), r) in xs.iter().zip(&proof.ls).zip(&proof.rs) {
        let x_inv = scalar_invert(x).expect("challenges are non-zero");
        let x2 = x.square();
        let x2_inv = x_inv.square();
        p = *l * x2 + p + *r * x2_inv;
        let half = g.len() / 2;
        g = fold_points(&g[..half], &g[half..], &x_inv, x);
        h = fold_points(&h[..half], &h[half..], x, &x_inv);
    }
    p == g[0] * proof.a + h[0] * proof.b + *u * (proof.a * proof.b)
}

/// `s_i = prod_j x_j^{b(i, j)}` where `b(i, j)` is `+1` when bit `j` of `i`
/// (counting from the most significant of `log2 n` bits) is set and `-1`
/// otherwise. Indices are zero-based, so `i` here is the `i - 1` of the
/// one-based formulation.
pub fn round_scalars(xs: &[Scalar]) -> Vec<Scalar> {
    let k = xs.len();
    let n = 1usize << k;
    let inv: Vec<Scalar> = xs
        .iter()
        .map(|x| scalar_invert(x).expect("challenges are non-zero"))
        .collect();
    let mut s = Vec::with_capacity(n);
    s.push(inv.iter().fold(Scalar::ONE, |acc, v| acc * v));
    for i in 1..n {
        let top = usize::BITS - 1 - i.leading_zeros();
        // Bit `top` of `i` belongs to the challenge of round `k - 1 - top`;
        // flipping it from clear to set swaps `x^-1` for `x`.
        let x = xs[k - 1 - top as usize];
        s.push(s[i - (1 << top)] * x.square());
    }
    s
}

/// Exponents of the single-multiexp check for a vector length of `n`:
/// `(s, s^-1, x_j^2, x_j^-2)`.
pub(crate) struct Folding {
    pub s: Vec<Scalar>,
    pub s_inv: Vec<Scalar>,
    pub x_sq: Vec<Scalar>,
    pub x_inv_sq: Vec<Scalar>,
}

pub(crate) fn folding(xs: &[Scalar]) -> Folding {
    let s = round_scalars(xs);
    let x_inv: Vec<Scalar> = xs
        .iter()
        .map(|x| scalar_invert(x).expect("challenges are non-zero"))
        .collect();
    // The inverse of `s_i` is `s_i` with every challenge inverted.
    let s_inv = round_scalars(&x_inv);
    Folding {
        s,
        s_inv,
        x_sq: xs.iter().map(|x| x.square()).collect(),
        x_inv_sq: x_inv.iter().map(|x| x.square()).collect(),
    }
}

pub fn verify_ip(params: &BulletproofParams, p: &GroupElement, c: &Scalar, proof: &IpProof) -> bool {
    let (mut tr, x) = ip_transcript(params, p, c);
    let u = params.u * x;
    verify_rounds(
        &mut tr,
        params.gvec.clone(),
        params.hvec.clone(),
        &u,
        *p + u * c,
        proof,
    )
}

/// Same decision as [`verify_ip`], computed as one multi-exponentiation of
/// `2n + 2 log2 n + 2` terms.
pub fn verify_ip_multiexp(
    params: &BulletproofParams,
    p: &GroupElement,
    c: &Scalar,
    proof: &IpProof,
) -> bool {
    let (mut tr, x) = ip_transcript(params, p, c);
    let n = params.padded_len();
    let Some(xs) = round_challenges(&mut tr, n, proof) else {
        return false;
    };
    let f = folding(&xs);
    let mut bases = Vec::with_capacity(2 * n + 2 * xs.len() + 2);
    let mut exps = Vec::with_capacity(bases.capacity());
    bases.extend_from_slice(&params.gvec);
    exps.extend(f.s.iter().map(|s| proof.a * s));
    bases.extend_from_slice(&params.hvec);
    exps.extend(f.s_inv.iter().map(|s| proof.b * s));
    bases.push(params.u);
    exps.push(x * (proof.a * proof.b - c));
    bases.push(*p);
    exps.push(-Scalar::ONE);
    bases.extend_from_slice(&proof.ls);
    exps.extend(f.x_sq.iter().map(|v| -*v));
    bases.extend_from_slice(&proof.rs);
    exps.extend(f.x_inv_sq.iter().map(|v| -*v));
    msm(&bases, &exps) == GroupElement::IDENTITY
}
