//! Uniform prove/verify front end over the three proof families.
//!
//! Parameters are rebuilt deterministically from a seed, so a prover and a
//! verifier running in separate processes agree on them. Anyone holding the
//! seed also holds the setup secrets of the RSA and signature schemes; seeded
//! parameters are for reproducible experiments, not deployment.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{CryptoRng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::algebra::pairing::{decode_g2, encode_g2, random_fr, Fr, G2_LEN};
use crate::algebra::rsa::DEFAULT_MODULUS_BITS;
use crate::algebra::RsaModulus;
use crate::boudot::{prove_sd, verify_sd, BoudotParams, SdProof, Security};
use crate::bulletproofs::{prove_rp, setup_rp, verify_rp, verify_rp_multiexp, BulletproofParams, RpProof};
use crate::codec::{Reader, SchemeTag, Writer};
use crate::sigrange::{
    optimal_params, prove_arbitrary, setup_range, verify_arbitrary, ArbitraryRangeProof,
    SigRangeParams, SigRangeProof,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Boudot,
    SigRange,
    Bulletproofs,
    /// Bulletproofs with the single multi-exponentiation verifier.
    BulletproofsOpt,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::Boudot,
        Scheme::SigRange,
        Scheme::Bulletproofs,
        Scheme::BulletproofsOpt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Boudot => "boudot",
            Scheme::SigRange => "sigrange",
            Scheme::Bulletproofs => "bulletproofs",
            Scheme::BulletproofsOpt => "bulletproofs-opt",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown scheme {s:?}")))
    }
}

/// Half-open interval `[a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub a: u128,
    pub b: u128,
}

impl Range {
    pub fn new(a: u128, b: u128) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidParameter("range must satisfy a < b".into()));
        }
        Ok(Self { a, b })
    }

    /// `[0, 2^bits)`.
    pub fn bits(bits: u32) -> Result<Self> {
        if bits == 0 || bits > 64 {
            return Err(Error::InvalidParameter(format!("bit length {bits} outside [1, 64]")));
        }
        Self::new(0, 1u128 << bits)
    }

    /// Bit length of the largest member, `b - 1`.
    pub fn bit_length(&self) -> u32 {
        128 - (self.b - 1).leading_zeros()
    }

    fn as_u64(&self) -> Result<(u64, u64)> {
        match (u64::try_from(self.a), u64::try_from(self.b)) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(Error::InvalidParameter("range bounds must fit in 64 bits".into())),
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a, self.b)
    }
}

impl FromStr for Range {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("range {s:?} is not of the form a:b"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Self::new(a, b)
    }
}

/// Setup knobs beyond scheme and range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// RSA modulus size for the square-decomposition scheme. 512 and 2048
    /// load frozen fixtures; other sizes are generated from the seed.
    pub modulus_bits: u64,
    /// Digit base and count for the signature scheme; chosen by
    /// [`optimal_params`] when absent.
    pub base: Option<u64>,
    pub digits: Option<u32>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            seed: 0,
            modulus_bits: DEFAULT_MODULUS_BITS,
            base: None,
            digits: None,
        }
    }
}

/// Parameters for one scheme over one range.
#[derive(Clone, Debug)]
pub enum System {
    Boudot(Box<BoudotParams>),
    SigRange {
        params: Box<SigRangeParams>,
        a: u64,
        b: u64,
    },
    Bulletproofs {
        params: Box<BulletproofParams>,
        optimized: bool,
    },
}

impl System {
    pub fn setup(scheme: Scheme, range: Range, opts: &Options) -> Result<Self> {
        let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
        match scheme {
            Scheme::Boudot => {
                let modulus = match opts.modulus_bits {
                    512 | 2048 => RsaModulus::fixture(opts.modulus_bits)?,
                    bits => RsaModulus::generate(bits, &mut rng)?,
                };
                // The scheme works on the closed interval [a, b - 1].
                let params = BoudotParams::setup(
                    modulus,
                    BigInt::from(range.a),
                    BigInt::from(range.b - 1),
                    Security::default(),
                    &mut rng,
                )?;
                Ok(System::Boudot(Box::new(params)))
            }
            Scheme::SigRange => {
                let (a, b) = range.as_u64()?;
                let (u, l) = match (opts.base, opts.digits) {
                    (Some(u), Some(l)) => (u, l),
                    (None, None) => optimal_params(a, b)?,
                    _ => {
                        return Err(Error::InvalidParameter(
                            "base and digits must be given together".into(),
                        ))
                    }
                };
                let params = setup_range(u, l, &mut rng)?;
                if params.span() < (b - a) as u128 {
                    return Err(Error::InvalidParameter("u^l must cover b - a".into()));
                }
                Ok(System::SigRange {
                    params: Box::new(params),
                    a,
                    b,
                })
            }
            Scheme::Bulletproofs | Scheme::BulletproofsOpt => Ok(System::Bulletproofs {
                params: Box::new(setup_rp(range.a, range.b)?),
                optimized: scheme == Scheme::BulletproofsOpt,
            }),
        }
    }

    pub fn scheme(&self) -> Scheme {
        match self {
            System::Boudot(_) => Scheme::Boudot,
            System::SigRange { .. } => Scheme::SigRange,
            System::Bulletproofs { optimized: false, .. } => Scheme::Bulletproofs,
            System::Bulletproofs { optimized: true, .. } => Scheme::BulletproofsOpt,
        }
    }

    /// Commits to `witness` and proves it lies in the range. Returns the
    /// proof file: the scheme header, the commitment, then the proof body.
    pub fn prove<R: RngCore + CryptoRng>(&self, witness: &BigInt, rng: &mut R) -> Result<Vec<u8>> {
        match self {
            System::Boudot(params) => {
                if *witness < params.a || *witness > params.b {
                    return Err(Error::WitnessOutOfRange);
                }
                let (e, r) = params.commit(witness, rng);
                let proof = prove_sd(params, witness, &r, &e, rng)?;
                let mut w = Writer::new();
                w.header(SchemeTag::Boudot);
                e.encode(&mut w);
                proof.encode(&mut w, params);
                Ok(w.into_bytes())
            }
            System::SigRange { params, a, b } => {
                let delta = witness.to_u64().ok_or(Error::WitnessOutOfRange)?;
                let gamma = random_fr(rng);
                let c = params.bases.commit(&Fr::from(delta), &gamma);
                let proof = prove_arbitrary(params, delta, &gamma, *a, *b, rng)?;
                let mut w = Writer::new();
                w.header(SchemeTag::SigRange);
                w.u64(params.u);
                w.raw(&encode_g2(&c));
                proof.lower.encode(&mut w);
                proof.upper.encode(&mut w);
                Ok(w.into_bytes())
            }
            System::Bulletproofs { params, .. } => {
                let v = witness.to_u64().ok_or(Error::WitnessOutOfRange)?;
                Ok(prove_rp(params, v, rng)?.to_bytes(params.n))
            }
        }
    }

    /// `Ok(true)` on accept, `Ok(false)` on reject and `Err` when the file
    /// does not parse.
    pub fn verify(&self, bytes: &[u8]) -> Result<bool> {
        match self {
            System::Boudot(params) => {
                let mut r = Reader::new(bytes);
                r.expect_header(SchemeTag::Boudot)?;
                let e = params.modulus().decode_element(&mut r)?;
                let proof = SdProof::decode(&mut r, params)?;
                r.finish()?;
                Ok(verify_sd(params, &e, &proof))
            }
            System::SigRange { params, a, b } => {
                let mut r = Reader::new(bytes);
                r.expect_header(SchemeTag::SigRange)?;
                if r.u64()? != params.u {
                    return Ok(false);
                }
                let c = decode_g2(r.raw(G2_LEN)?)?;
                let lower = SigRangeProof::decode(&mut r)?;
                let upper = SigRangeProof::decode(&mut r)?;
                r.finish()?;
                let proof = ArbitraryRangeProof { lower, upper };
                Ok(verify_arbitrary(params, &c, *a, *b, &proof))
            }
            System::Bulletproofs { params, optimized } => {
                let (proof, n) = RpProof::from_bytes(bytes)?;
                if n != params.n {
                    return Ok(false);
                }
                Ok(if *optimized {
                    verify_rp_multiexp(params, &proof)
                } else {
                    verify_rp(params, &proof)
                })
            }
        }
    }

    /// Human-readable parameter summary.
    pub fn describe(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("scheme", self.scheme().to_string())];
        match self {
            System::Boudot(p) => {
                out.push(("interval", format!("[{}, {}]", p.a, p.b)));
                out.push(("modulus_bits", p.modulus().bit_length().to_string()));
                let s = p.security;
                out.push(("t", s.t.to_string()));
                out.push(("l", s.l.to_string()));
                out.push(("s", s.s.to_string()));
                out.push(("scaling_exponent", p.scaling_exponent().to_string()));
            }
            System::SigRange { params, a, b } => {
                out.push(("interval", format!("[{a}, {b})")));
                out.push(("u", params.u.to_string()));
                out.push(("l", params.l.to_string()));
                out.push(("signatures", params.signatures.len().to_string()));
                out.push((
                    "proof_octets",
                    crate::sigrange::arbitrary_proof_len(params.l).to_string(),
                ));
            }
            System::Bulletproofs { params, .. } => {
                out.push(("interval", format!("[0, 2^{})", params.n)));
                out.push(("n", params.n.to_string()));
                out.push(("padded_n", params.padded_len().to_string()));
                out.push((
                    "proof_octets",
                    crate::bulletproofs::proof_len(params.n).to_string(),
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_scheme_and_range() {
        assert_eq!("bulletproofs-opt".parse::<Scheme>().unwrap(), Scheme::BulletproofsOpt);
        assert!("bp".parse::<Scheme>().is_err());
        assert_eq!("18:200".parse::<Range>().unwrap(), Range { a: 18, b: 200 });
        assert!("200:18".parse::<Range>().is_err());
        assert!("5".parse::<Range>().is_err());
        assert!("a:b".parse::<Range>().is_err());
        assert_eq!(Range::bits(32).unwrap().bit_length(), 32);
        assert_eq!("347184000:599644800".parse::<Range>().unwrap().bit_length(), 30);
    }

    #[test]
    fn round_trips_and_witness_errors() {
        let opts = Options {
            modulus_bits: 512,
            ..Options::default()
        };
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        for scheme in Scheme::ALL {
            let range = if scheme == Scheme::Boudot || scheme == Scheme::SigRange {
                Range::new(18, 200).unwrap()
            } else {
                Range::new(0, 4096).unwrap()
            };
            let sys = System::setup(scheme, range, &opts).unwrap();
            let bytes = sys.prove(&BigInt::from(25), &mut rng).unwrap();
            assert_eq!(bytes[5], if scheme == Scheme::Boudot { 1 } else if scheme == Scheme::SigRange { 2 } else { 3 });
            assert!(sys.verify(&bytes).unwrap(), "{scheme}");
            let again = System::setup(scheme, range, &opts).unwrap();
            assert!(again.verify(&bytes).unwrap(), "{scheme} with rebuilt params");
            let above = BigInt::from(range.b);
            assert!(matches!(sys.prove(&above, &mut rng), Err(Error::WitnessOutOfRange)));
            assert!(sys.verify(&bytes[..bytes.len() - 1]).is_err());
        }
    }
}
