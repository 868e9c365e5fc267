//! Square-decomposition range proofs over Fujisaki-Okamoto commitments.
//!
//! Building blocks, bottom up: proof of same secret, proof of square, proof
//! of larger interval, proof with tolerance, and the exact-range proof that
//! scales the statement by `2^T` until the tolerance disappears.
//!
//! All exponents are integers, never residues. Masking intervals are written
//! as `2^{t+l} * bound`, where `bound` caps the magnitude of the secret being
//! masked; for commitment randomness drawn from `[1, 2^s n - 1]` this gives the
//! familiar `2^{t+l+s} n`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::{CryptoRng, RngCore};

use crate::algebra::primes::{isqrt_floor, sample_interval};
use crate::algebra::{RsaGroupElement, RsaModulus, SignedBounded};
use crate::codec::{Reader, SchemeTag, Writer};
use crate::commit::{random_base_pair, FoParams, Transcript, DEFAULT_STATISTICAL_PARAM};
use crate::{Error, Result};

pub const DEFAULT_SOUNDNESS: u32 = 128;
pub const DEFAULT_ZK: u32 = 80;

const SS_LABEL: &str = "boudot/ss/v1";
const LI_LABEL: &str = "boudot/li/v1";
const OPEN_LABEL: &str = "boudot/open/v1";

/// Cap on the repeat-until loops (larger-interval retries and randomness
/// splitting). Both succeed with probability at least one half per attempt.
const MAX_ATTEMPTS: u32 = 1 << 16;

/// Soundness, zero-knowledge and statistical parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Security {
    pub t: u32,
    pub l: u32,
    pub s: u32,
    pub s1: u32,
    pub s2: u32,
}

impl Default for Security {
    fn default() -> Self {
        Self {
            t: DEFAULT_SOUNDNESS,
            l: DEFAULT_ZK,
            s: DEFAULT_STATISTICAL_PARAM,
            s1: DEFAULT_STATISTICAL_PARAM,
            s2: DEFAULT_STATISTICAL_PARAM,
        }
    }
}

/// Public parameters for a proof that a committed `x` lies in `[a, b]`.
///
/// `(fo.g, fo.h)` carry the statement commitment; `(g2, h2)` is the second,
/// independent pair used by standalone same-secret proofs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoudotParams {
    pub fo: FoParams,
    pub g2: RsaGroupElement,
    pub h2: RsaGroupElement,
    pub security: Security,
    pub a: BigInt,
    pub b: BigInt,
}

impl BoudotParams {
    pub fn setup<R: RngCore + CryptoRng>(
        modulus: RsaModulus,
        a: BigInt,
        b: BigInt,
        security: Security,
        rng: &mut R,
    ) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidParameter("interval must satisfy a < b".into()));
        }
        if security.t == 0 || security.l == 0 {
            return Err(Error::InvalidParameter("t and l must be positive".into()));
        }
        let fo = FoParams::setup(modulus, security.s, rng);
        let (g2, h2) = random_base_pair(&fo.modulus, rng);
        Ok(Self {
            fo,
            g2,
            h2,
            security,
            a,
            b,
        })
    }

    pub fn modulus(&self) -> &RsaModulus {
        &self.fo.modulus
    }

    /// `T = 2(t + l + 1) + bitlen(b - a)`.
    pub fn scaling_exponent(&self) -> u32 {
        let width = (&self.b - &self.a).magnitude().bits() as u32;
        2 * (self.security.t + self.security.l + 1) + width
    }

    fn ctx(&self) -> Ctx<'_> {
        Ctx {
            m: &self.fo.modulus,
            t: self.security.t,
            l: self.security.l,
        }
    }

    /// `2^k n`.
    fn randomness_bound(&self, k: u32) -> BigInt {
        BigInt::from(self.fo.modulus.n().clone()) << k
    }

    /// Commits to `x` under `(g, h)` with fresh FO randomness.
    pub fn commit<R: RngCore + CryptoRng>(
        &self,
        x: &BigInt,
        rng: &mut R,
    ) -> (RsaGroupElement, BigInt) {
        let c = crate::commit::fo_commit(&self.fo, x, rng);
        let r = c.opening.expect("fresh commitment").randomness;
        (c.element, r)
    }
}

#[derive(Clone, Copy)]
struct Ctx<'a> {
    m: &'a RsaModulus,
    t: u32,
    l: u32,
}

impl Ctx<'_> {
    /// `2^{t+l} * bound`.
    fn mask(&self, bound: &BigInt) -> BigInt {
        bound << (self.t + self.l) as usize
    }

    fn challenge_len(&self) -> usize {
        (2 * self.t).div_ceil(8) as usize
    }
}

fn symmetric(rng: &mut (impl RngCore + ?Sized), bound: &BigInt) -> BigInt {
    sample_interval(rng, &(-bound + 1), &(bound - 1))
}

fn positive(rng: &mut (impl RngCore + ?Sized), top: &BigInt) -> BigInt {
    sample_interval(rng, &BigInt::one(), &(top - 1))
}

/// Same-secret statement: `e = g1^x h1^{r1}` and `f = g2^x h2^{r2}`.
#[derive(Clone, Copy)]
struct SsStatement<'a> {
    g1: &'a RsaGroupElement,
    h1: &'a RsaGroupElement,
    e: &'a RsaGroupElement,
    g2: &'a RsaGroupElement,
    h2: &'a RsaGroupElement,
    f: &'a RsaGroupElement,
}

/// Magnitude caps for `(x, r1, r2)`.
struct SsBounds {
    x: BigInt,
    r1: BigInt,
    r2: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsProof {
    /// `2t`-bit challenge.
    pub c: BigUint,
    pub d: SignedBounded,
    pub d1: SignedBounded,
    pub d2: SignedBounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareProof {
    pub f: RsaGroupElement,
    pub ss: SsProof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiProof {
    /// Full `2t`-bit hash output; the challenge is `C mod 2^t`.
    pub big_c: BigUint,
    pub d1: SignedBounded,
    pub d2: SignedBounded,
}

/// Two-base Schnorr proof of knowledge of an opening `(x, r)` of `e = g^x h^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpeningProof {
    pub c: BigUint,
    pub dx: SignedBounded,
    pub dr: SignedBounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WtProof {
    pub e_a1: RsaGroupElement,
    pub e_a2: RsaGroupElement,
    pub e_b1: RsaGroupElement,
    pub e_b2: RsaGroupElement,
    pub sq_a: SquareProof,
    pub sq_b: SquareProof,
    pub li_a: LiProof,
    pub li_b: LiProof,
    pub opening: OpeningProof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdProof {
    pub e_prime: RsaGroupElement,
    pub wt: WtProof,
    pub t: u32,
}

// ---------------------------------------------------------------------------
// Proof of same secret

fn ss_challenge(ctx: Ctx<'_>, o1: &RsaGroupElement, o2: &RsaGroupElement) -> BigUint {
    let mut tr = Transcript::new(SS_LABEL);
    tr.append_rsa(o1);
    tr.append_rsa(o2);
    tr.challenge_bits("c", 2 * ctx.t)
}

#[allow(clippy::too_many_arguments)]
fn ss_prove<R: RngCore + CryptoRng>(
    ctx: Ctx<'_>,
    st: SsStatement<'_>,
    bounds: &SsBounds,
    x: &BigInt,
    r1: &BigInt,
    r2: &BigInt,
    rng: &mut R,
) -> SsProof {
    let m = ctx.m;
    let omega = positive(rng, &ctx.mask(&bounds.x));
    let eta1 = positive(rng, &ctx.mask(&bounds.r1));
    let eta2 = positive(rng, &ctx.mask(&bounds.r2));
    let o1 = m.commit(st.g1, st.h1, &omega, &eta1);
    let o2 = m.commit(st.g2, st.h2, &omega, &eta2);
    let c = ss_challenge(ctx, &o1, &o2);
    let ci = BigInt::from(c.clone());
    SsProof {
        d: SignedBounded(omega + &ci * x),
        d1: SignedBounded(eta1 + &ci * r1),
        d2: SignedBounded(eta2 + &ci * r2),
        c,
    }
}

fn ss_verify(ctx: Ctx<'_>, st: SsStatement<'_>, proof: &SsProof) -> bool {
    if proof.c.bits() > 2 * ctx.t as u64 {
        return false;
    }
    let m = ctx.m;
    let neg_c = -BigInt::from(proof.c.clone());
    let o1 = m.mul(
        &m.commit(st.g1, st.h1, proof.d.value(), proof.d1.value()),
        &m.pow(st.e, &neg_c),
    );
    let o2 = m.mul(
        &m.commit(st.g2, st.h2, proof.d.value(), proof.d2.value()),
        &m.pow(st.f, &neg_c),
    );
    ss_challenge(ctx, &o1, &o2) == proof.c
}

/// Proves that `e = g^x h^{r1}` and `f = g2^x h2^{r2}` hide the same `x`.
#[allow(clippy::too_many_arguments)]
pub fn prove_ss<R: RngCore + CryptoRng>(
    params: &BoudotParams,
    x: &BigInt,
    r1: &BigInt,
    r2: &BigInt,
    e: &RsaGroupElement,
    f: &RsaGroupElement,
    rng: &mut R,
) -> SsProof {
    let st = SsStatement {
        g1: &params.fo.g,
        h1: &params.fo.h,
        e,
        g2: &params.g2,
        h2: &params.h2,
        f,
    };
    let bounds = SsBounds {
        x: params.b.abs().max(params.a.abs()),
        r1: params.randomness_bound(params.security.s1),
        r2: params.randomness_bound(params.security.s2),
    };
    ss_prove(params.ctx(), st, &bounds, x, r1, r2, rng)
}

pub fn verify_ss(
    params: &BoudotParams,
    e: &RsaGroupElement,
    f: &RsaGroupElement,
    proof: &SsProof,
) -> bool {
    let st = SsStatement {
        g1: &params.fo.g,
        h1: &params.fo.h,
        e,
        g2: &params.g2,
        h2: &params.h2,
        f,
    };
    ss_verify(params.ctx(), st, proof)
}

// ---------------------------------------------------------------------------
// Proof of square

/// `e = g^{x^2} h^{r1}`. The auxiliary `F = g^x h^{r2}` lets `e` be read as
/// `F^x h^{r1 - r2 x}`, so a same-secret proof over `(g, h)` for `F` and
/// `(F, h)` for `e` shows that the exponent of `e` is a square.
#[allow(clippy::too_many_arguments)]
fn square_prove<R: RngCore + CryptoRng>(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    s: u32,
    x: &BigInt,
    r1: &BigInt,
    e: &RsaGroupElement,
    x_bound: &BigInt,
    r1_bound: &BigInt,
    rng: &mut R,
) -> SquareProof {
    let rb = BigInt::from(ctx.m.n().clone()) << s as usize;
    let r2 = symmetric(rng, &rb);
    let f = ctx.m.commit(g, h, x, &r2);
    let r3 = r1 - &r2 * x;
    let bounds = SsBounds {
        x: x_bound.clone(),
        r1: rb.clone(),
        r2: r1_bound + &rb * x_bound,
    };
    let st = SsStatement {
        g1: g,
        h1: h,
        e: &f,
        g2: &f,
        h2: h,
        f: e,
    };
    let ss = ss_prove(ctx, st, &bounds, x, &r2, &r3, rng);
    SquareProof { f, ss }
}

fn square_verify(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    e: &RsaGroupElement,
    proof: &SquareProof,
) -> bool {
    let st = SsStatement {
        g1: g,
        h1: h,
        e: &proof.f,
        g2: &proof.f,
        h2: h,
        f: e,
    };
    ss_verify(ctx, st, &proof.ss)
}

/// Proves that `e = g^{x^2} h^{r1}` commits to a square.
pub fn prove_square<R: RngCore + CryptoRng>(
    params: &BoudotParams,
    x: &BigInt,
    r1: &BigInt,
    e: &RsaGroupElement,
    rng: &mut R,
) -> SquareProof {
    let x_bound = params.b.abs().max(params.a.abs()).max(x.abs());
    square_prove(
        params.ctx(),
        &params.fo.g,
        &params.fo.h,
        params.security.s,
        x,
        r1,
        e,
        &x_bound,
        &params.randomness_bound(params.security.s),
        rng,
    )
}

pub fn verify_square(params: &BoudotParams, e: &RsaGroupElement, proof: &SquareProof) -> bool {
    square_verify(params.ctx(), &params.fo.g, &params.fo.h, e, proof)
}

// ---------------------------------------------------------------------------
// Proof of larger interval

fn li_challenge(ctx: Ctx<'_>, omega: &RsaGroupElement) -> BigUint {
    let mut tr = Transcript::new(LI_LABEL);
    tr.append_rsa(omega);
    tr.challenge_bits("C", 2 * ctx.t)
}

fn low_bits(v: &BigUint, bits: u32) -> BigInt {
    BigInt::from(v % (BigUint::one() << bits as usize))
}

/// One round of the larger-interval prover. Returns the candidate proof and
/// whether `D1` landed in the accepted window.
#[allow(clippy::too_many_arguments)]
fn li_attempt<R: RngCore + CryptoRng>(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    x: &BigInt,
    r: &BigInt,
    b: &BigInt,
    r_bound: &BigInt,
    rng: &mut R,
) -> (LiProof, bool) {
    let top = ctx.mask(b) - 1;
    let omega = sample_interval(rng, &BigInt::zero(), &top);
    let eta = symmetric(rng, &ctx.mask(r_bound));
    let big_omega = ctx.m.commit(g, h, &omega, &eta);
    let big_c = li_challenge(ctx, &big_omega);
    let c = low_bits(&big_c, ctx.t);
    let d1 = omega + x * &c;
    let ok = d1 >= &c * b && d1 <= top;
    let d2 = eta + r * &c;
    let proof = LiProof {
        big_c,
        d1: SignedBounded(d1),
        d2: SignedBounded(d2),
    };
    (proof, ok)
}

#[allow(clippy::too_many_arguments)]
fn li_prove<R: RngCore + CryptoRng>(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    x: &BigInt,
    r: &BigInt,
    b: &BigInt,
    r_bound: &BigInt,
    rng: &mut R,
) -> Result<LiProof> {
    for _ in 0..MAX_ATTEMPTS {
        let (proof, ok) = li_attempt(ctx, g, h, x, r, b, r_bound, rng);
        if ok {
            return Ok(proof);
        }
    }
    Err(Error::IterationLimit("larger-interval proof"))
}

fn li_verify(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    e: &RsaGroupElement,
    b: &BigInt,
    proof: &LiProof,
) -> bool {
    if proof.big_c.bits() > 2 * ctx.t as u64 {
        return false;
    }
    let c = low_bits(&proof.big_c, ctx.t);
    let d1 = proof.d1.value();
    if *d1 < &c * b || *d1 > ctx.mask(b) - 1 {
        return false;
    }
    let m = ctx.m;
    let omega = m.mul(&m.commit(g, h, d1, proof.d2.value()), &m.pow(e, &-c));
    li_challenge(ctx, &omega) == proof.big_c
}

/// Proves `x` in `[-2^{t+l} b, 2^{t+l} b]` for `e = g^x h^r`, given an honest
/// `x` in `[0, b]`.
pub fn prove_li<R: RngCore + CryptoRng>(
    params: &BoudotParams,
    x: &BigInt,
    r: &BigInt,
    rng: &mut R,
) -> Result<LiProof> {
    if x.is_negative() || *x > params.b {
        return Err(Error::WitnessOutOfRange);
    }
    li_prove(
        params.ctx(),
        &params.fo.g,
        &params.fo.h,
        x,
        r,
        &params.b,
        &params.randomness_bound(params.security.s),
        rng,
    )
}

pub fn verify_li(params: &BoudotParams, e: &RsaGroupElement, proof: &LiProof) -> bool {
    li_verify(params.ctx(), &params.fo.g, &params.fo.h, e, &params.b, proof)
}

// ---------------------------------------------------------------------------
// Proof of opening

fn open_challenge(ctx: Ctx<'_>, e: &RsaGroupElement, omega: &RsaGroupElement) -> BigUint {
    let mut tr = Transcript::new(OPEN_LABEL);
    tr.append_rsa(e);
    tr.append_rsa(omega);
    tr.challenge_bits("c", 2 * ctx.t)
}

#[allow(clippy::too_many_arguments)]
fn open_prove<R: RngCore + CryptoRng>(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    e: &RsaGroupElement,
    x: &BigInt,
    r: &BigInt,
    x_bound: &BigInt,
    r_bound: &BigInt,
    rng: &mut R,
) -> OpeningProof {
    let omega = positive(rng, &ctx.mask(x_bound));
    let eta = positive(rng, &ctx.mask(r_bound));
    let big_omega = ctx.m.commit(g, h, &omega, &eta);
    let c = open_challenge(ctx, e, &big_omega);
    let ci = BigInt::from(c.clone());
    OpeningProof {
        dx: SignedBounded(omega + &ci * x),
        dr: SignedBounded(eta + &ci * r),
        c,
    }
}

fn open_verify(
    ctx: Ctx<'_>,
    g: &RsaGroupElement,
    h: &RsaGroupElement,
    e: &RsaGroupElement,
    proof: &OpeningProof,
) -> bool {
    if proof.c.bits() > 2 * ctx.t as u64 {
        return false;
    }
    let m = ctx.m;
    let neg_c = -BigInt::from(proof.c.clone());
    let omega = m.mul(
        &m.commit(g, h, proof.dx.value(), proof.dr.value()),
        &m.pow(e, &neg_c),
    );
    open_challenge(ctx, e, &omega) == proof.c
}

// ---------------------------------------------------------------------------
// Proof with tolerance

/// Caps on the square roots and the remainders of the two decompositions:
/// `x - a` and `b - x` are at most `b - a`, so their floor square roots are
/// at most `isqrt(b - a)` and the remainders at most twice that.
fn wt_bounds(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    let sq = isqrt_floor(&(b - a))?.max(BigInt::one());
    let li = &sq << 1;
    Ok((sq, li))
}

/// `v = v1^2 + v2` with `v1 = floor(sqrt(v))`. A negative `v` (only reachable
/// from the forging tests) gets `v1 = 0`.
fn decompose(v: &BigInt) -> (BigInt, BigInt) {
    if v.is_negative() {
        return (BigInt::zero(), v.clone());
    }
    let v1 = isqrt_floor(v).expect("non-negative");
    let v2 = v - &v1 * &v1;
    (v1, v2)
}

/// Splits `r = r1 + r2` with both halves in `(-bound, bound)`.
fn split_randomness<R: RngCore + CryptoRng>(
    r: &BigInt,
    bound: &BigInt,
    rng: &mut R,
) -> Result<(BigInt, BigInt)> {
    for _ in 0..MAX_ATTEMPTS {
        let r1 = symmetric(rng, bound);
        let r2 = r - &r1;
        if r2.abs() < *bound {
            return Ok((r1, r2));
        }
    }
    Err(Error::IterationLimit("randomness split"))
}

struct WtInstance<'a> {
    a: &'a BigInt,
    b: &'a BigInt,
    /// Cap on `|r|`, and on every share it is split into.
    r_bound: &'a BigInt,
}

#[allow(clippy::too_many_arguments)]
fn wt_prove<R: RngCore + CryptoRng>(
    ctx: Ctx<'_>,
    params: &BoudotParams,
    inst: &WtInstance<'_>,
    x: &BigInt,
    r: &BigInt,
    e: &RsaGroupElement,
    forge: bool,
    rng: &mut R,
) -> Result<WtProof> {
    let (g, h, m) = (&params.fo.g, &params.fo.h, ctx.m);
    let (b_sq, b_li) = wt_bounds(inst.a, inst.b)?;

    let x_bound = inst.a.abs().max(inst.b.abs());
    let opening = open_prove(ctx, g, h, e, x, r, &x_bound, inst.r_bound, rng);

    let (xa1, xa2) = decompose(&(x - inst.a));
    let (xb1, xb2) = decompose(&(inst.b - x));
    debug_assert!(forge || (xa2 >= BigInt::zero() && xa2 <= &xa1 << 1));
    debug_assert!(forge || (xb2 >= BigInt::zero() && xb2 <= &xb1 << 1));

    let (ra1, ra2) = split_randomness(r, inst.r_bound, rng)?;
    let (rb1, rb2) = split_randomness(&-r, inst.r_bound, rng)?;

    let e_a1 = m.commit(g, h, &(&xa1 * &xa1), &ra1);
    let e_a2 = m.commit(g, h, &xa2, &ra2);
    let e_b1 = m.commit(g, h, &(&xb1 * &xb1), &rb1);
    let e_b2 = m.commit(g, h, &xb2, &rb2);

    let s = params.security.s;
    let sq_a = square_prove(ctx, g, h, s, &xa1, &ra1, &e_a1, &b_sq, inst.r_bound, rng);
    let sq_b = square_prove(ctx, g, h, s, &xb1, &rb1, &e_b1, &b_sq, inst.r_bound, rng);

    let (li_a, li_b) = if forge {
        let (pa, _) = li_attempt(ctx, g, h, &xa2, &ra2, &b_li, inst.r_bound, rng);
        let (pb, _) = li_attempt(ctx, g, h, &xb2, &rb2, &b_li, inst.r_bound, rng);
        (pa, pb)
    } else {
        (
            li_prove(ctx, g, h, &xa2, &ra2, &b_li, inst.r_bound, rng)?,
            li_prove(ctx, g, h, &xb2, &rb2, &b_li, inst.r_bound, rng)?,
        )
    };

    Ok(WtProof {
        e_a1,
        e_a2,
        e_b1,
        e_b2,
        sq_a,
        sq_b,
        li_a,
        li_b,
        opening,
    })
}

fn wt_verify(
    ctx: Ctx<'_>,
    params: &BoudotParams,
    a: &BigInt,
    b: &BigInt,
    e: &RsaGroupElement,
    proof: &WtProof,
) -> bool {
    let (g, h, m) = (&params.fo.g, &params.fo.h, ctx.m);
    let Ok((_, b_li)) = wt_bounds(a, b) else {
        return false;
    };
    let e_a = m.div(e, &m.pow(g, a));
    let e_b = m.div(&m.pow(g, b), e);
    if proof.e_a2 != m.div(&e_a, &proof.e_a1) || proof.e_b2 != m.div(&e_b, &proof.e_b1) {
        return false;
    }
    open_verify(ctx, g, h, e, &proof.opening)
        && square_verify(ctx, g, h, &proof.e_a1, &proof.sq_a)
        && square_verify(ctx, g, h, &proof.e_b1, &proof.sq_b)
        && li_verify(ctx, g, h, &proof.e_a2, &b_li, &proof.li_a)
        && li_verify(ctx, g, h, &proof.e_b2, &b_li, &proof.li_b)
}

/// Proves `x` in `[a - theta, b + theta]` with `theta = 2^{t+l+1} sqrt(b - a)`.
pub fn prove_wt<R: RngCore + CryptoRng>(
    params: &BoudotParams,
    x: &BigInt,
    r: &BigInt,
    e: &RsaGroupElement,
    rng: &mut R,
) -> Result<WtProof> {
    if *x < params.a || *x > params.b {
        return Err(Error::WitnessOutOfRange);
    }
    let r_bound = params.randomness_bound(params.security.s);
    let inst = WtInstance {
        a: &params.a,
        b: &params.b,
        r_bound: &r_bound,
    };
    wt_prove(params.ctx(), params, &inst, x, r, e, false, rng)
}

pub fn verify_wt(params: &BoudotParams, e: &RsaGroupElement, proof: &WtProof) -> bool {
    wt_verify(params.ctx(), params, &params.a, &params.b, e, proof)
}

// ---------------------------------------------------------------------------
// Exact range

fn sd_prove_inner<R: RngCore + CryptoRng>(
    params: &BoudotParams,
    x: &BigInt,
    r: &BigInt,
    e: &RsaGroupElement,
    forge: bool,
    rng: &mut R,
) -> Result<SdProof> {
    let t = params.scaling_exponent();
    let scale = |v: &BigInt| v << t as usize;
    let e_prime = params.modulus().pow(e, &(BigInt::one() << t as usize));
    let (a, b) = (scale(&params.a), scale(&params.b));
    // The scaled randomness 2^T r no longer fits 2^s n, so the shares of the
    // decomposition are drawn from 2^{s+T} n.
    let r_bound = params.randomness_bound(params.security.s + t);
    let inst = WtInstance {
        a: &a,
        b: &b,
        r_bound: &r_bound,
    };
    let wt = wt_prove(params.ctx(), params, &inst, &scale(x), &scale(r), &e_prime, forge, rng)?;
    Ok(SdProof { e_prime, wt, t })
}

/// Proves that `e = g^x h^r` commits to `x` in `[a, b]`.
pub fn prove_sd<R: RngCore + CryptoRng>(
    params: &BoudotParams,
    x: &BigInt,
    r: &BigInt,
    e: &RsaGroupElement,
    rng: &mut R,
) -> Result<SdProof> {
    if *x < params.a || *x > params.b {
        return Err(Error::WitnessOutOfRange);
    }
    sd_prove_inner(params, x, r, e, false, rng)
}

pub fn verify_sd(params: &BoudotParams, e: &RsaGroupElement, proof: &SdProof) -> bool {
    let t = params.scaling_exponent();
    if proof.t != t {
        return false;
    }
    let m = params.modulus();
    if proof.e_prime != m.pow(e, &(BigInt::one() << t as usize)) {
        return false;
    }
    let a = &params.a << t as usize;
    let b = &params.b << t as usize;
    wt_verify(params.ctx(), params, &a, &b, &proof.e_prime, &proof.wt)
}

// ---------------------------------------------------------------------------
// Serialization

fn write_challenge(w: &mut Writer, c: &BigUint, len: usize) {
    let bytes = c.to_bytes_be();
    let mut out = vec![0u8; len];
    if !c.is_zero() {
        out[len - bytes.len()..].copy_from_slice(&bytes);
    }
    w.var_bytes(&out);
}

fn read_challenge(r: &mut Reader<'_>, len: usize) -> Result<BigUint> {
    let bytes = r.var_bytes()?;
    if bytes.len() != len {
        return Err(Error::Malformed("challenge length"));
    }
    Ok(BigUint::from_bytes_be(bytes))
}

impl SsProof {
    fn encode(&self, w: &mut Writer, clen: usize) {
        write_challenge(w, &self.c, clen);
        self.d.encode(w);
        self.d1.encode(w);
        self.d2.encode(w);
    }

    fn decode(r: &mut Reader<'_>, clen: usize) -> Result<Self> {
        Ok(Self {
            c: read_challenge(r, clen)?,
            d: SignedBounded::decode(r)?,
            d1: SignedBounded::decode(r)?,
            d2: SignedBounded::decode(r)?,
        })
    }
}

impl SquareProof {
    fn encode(&self, w: &mut Writer, clen: usize) {
        self.f.encode(w);
        self.ss.encode(w, clen);
    }

    fn decode(r: &mut Reader<'_>, m: &RsaModulus, clen: usize) -> Result<Self> {
        Ok(Self {
            f: m.decode_element(r)?,
            ss: SsProof::decode(r, clen)?,
        })
    }
}

impl LiProof {
    fn encode(&self, w: &mut Writer, clen: usize) {
        write_challenge(w, &self.big_c, clen);
        self.d1.encode(w);
        self.d2.encode(w);
    }

    fn decode(r: &mut Reader<'_>, clen: usize) -> Result<Self> {
        Ok(Self {
            big_c: read_challenge(r, clen)?,
            d1: SignedBounded::decode(r)?,
            d2: SignedBounded::decode(r)?,
        })
    }
}

impl OpeningProof {
    fn encode(&self, w: &mut Writer, clen: usize) {
        write_challenge(w, &self.c, clen);
        self.dx.encode(w);
        self.dr.encode(w);
    }

    fn decode(r: &mut Reader<'_>, clen: usize) -> Result<Self> {
        Ok(Self {
            c: read_challenge(r, clen)?,
            dx: SignedBounded::decode(r)?,
            dr: SignedBounded::decode(r)?,
        })
    }
}

impl WtProof {
    fn encode(&self, w: &mut Writer, clen: usize) {
        for e in [&self.e_a1, &self.e_a2, &self.e_b1, &self.e_b2] {
            e.encode(w);
        }
        self.sq_a.encode(w, clen);
        self.sq_b.encode(w, clen);
        self.li_a.encode(w, clen);
        self.li_b.encode(w, clen);
        self.opening.encode(w, clen);
    }

    fn decode(r: &mut Reader<'_>, m: &RsaModulus, clen: usize) -> Result<Self> {
        Ok(Self {
            e_a1: m.decode_element(r)?,
            e_a2: m.decode_element(r)?,
            e_b1: m.decode_element(r)?,
            e_b2: m.decode_element(r)?,
            sq_a: SquareProof::decode(r, m, clen)?,
            sq_b: SquareProof::decode(r, m, clen)?,
            li_a: LiProof::decode(r, clen)?,
            li_b: LiProof::decode(r, clen)?,
            opening: OpeningProof::decode(r, clen)?,
        })
    }
}

impl SdProof {
    /// Writes the body without the file header.
    pub fn encode(&self, w: &mut Writer, params: &BoudotParams) {
        let clen = params.ctx().challenge_len();
        self.e_prime.encode(w);
        self.wt.encode(w, clen);
        w.u32(self.t);
    }

    pub fn decode(r: &mut Reader<'_>, params: &BoudotParams) -> Result<Self> {
        let clen = params.ctx().challenge_len();
        let m = params.modulus();
        Ok(Self {
            e_prime: m.decode_element(r)?,
            wt: WtProof::decode(r, m, clen)?,
            t: r.u32()?,
        })
    }

    pub fn to_bytes(&self, params: &BoudotParams) -> Vec<u8> {
        let mut w = Writer::new();
        w.header(SchemeTag::Boudot);
        self.encode(&mut w, params);
        w.into_bytes()
    }

    pub fn from_bytes(bytes: &[u8], params: &BoudotParams) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.expect_header(SchemeTag::Boudot)?;
        let p = Self::decode(&mut r, params)?;
        r.finish()?;
        Ok(p)
    }
}
