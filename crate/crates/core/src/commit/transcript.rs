//! Fiat-Shamir transcript over SHA-256.
//!
//! A transcript is a domain-separation label plus a running buffer of
//! absorbed items. Every item is written as a 4-octet big-endian length
//! followed by its canonical encoding. A challenge is
//!
//! ```text
//! SHA-256( len(label) || label || buffer || len(challenge label) || challenge label || counter )
//! ```
//!
//! with `counter` a 4-octet big-endian retry counter. The derived challenge is
//! absorbed back into the buffer, so later challenges bind earlier ones.

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::algebra::pairing::{encode_fr, fr_from_digest, Fr};
use crate::algebra::secp::{encode_point, encode_scalar, scalar_from_digest, GroupElement, Scalar};
use crate::algebra::RsaGroupElement;

#[derive(Clone, Debug)]
pub struct Transcript {
    label: Vec<u8>,
    buffer: Vec<u8>,
}

fn push_framed(buf: &mut Vec<u8>, bytes: &[u8]) {
    buf.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
    buf.extend_from_slice(bytes);
}

impl Transcript {
    pub fn new(label: &str) -> Self {
        Self {
            label: label.as_bytes().to_vec(),
            buffer: Vec::new(),
        }
    }

    pub fn label(&self) -> &[u8] {
        &self.label
    }

    pub fn buffer(&self) -> &[u8] {
        &self.buffer
    }

    pub fn append_bytes(&mut self, bytes: &[u8]) {
        push_framed(&mut self.buffer, bytes);
    }

    pub fn append_u64(&mut self, v: u64) {
        self.append_bytes(&v.to_be_bytes());
    }

    pub fn append_point(&mut self, p: &GroupElement) {
        self.append_bytes(&encode_point(p));
    }

    pub fn append_scalar(&mut self, s: &Scalar) {
        self.append_bytes(&encode_scalar(s));
    }

    pub fn append_rsa(&mut self, e: &RsaGroupElement) {
        self.append_bytes(&e.value().to_bytes_be());
    }

    fn digest(&self, challenge_label: &[u8], counter: u32) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update((self.label.len() as u32).to_be_bytes());
        h.update(&self.label);
        h.update(&self.buffer);
        h.update((challenge_label.len() as u32).to_be_bytes());
        h.update(challenge_label);
        h.update(counter.to_be_bytes());
        h.finalize().into()
    }

    /// Non-zero secp256k1 scalar. A zero reduction bumps the retry counter.
    pub fn challenge_scalar(&mut self, label: &str) -> Scalar {
        let mut counter = 0u32;
        loop {
            let s = scalar_from_digest(&self.digest(label.as_bytes(), counter));
            if !bool::from(s.is_zero()) {
                self.append_scalar(&s);
                return s;
            }
            counter += 1;
        }
    }

    /// Non-zero BN254 scalar, derived the same way as [`Self::challenge_scalar`].
    pub fn challenge_fr(&mut self, label: &str) -> Fr {
        let mut counter = 0u32;
        loop {
            let s = fr_from_digest(&self.digest(label.as_bytes(), counter));
            if s != Fr::from(0u64) {
                self.append_bytes(&encode_fr(&s));
                return s;
            }
            counter += 1;
        }
    }

    /// A `bits`-bit challenge: SHA-256 blocks with counters 0, 1, ...
    /// concatenated, truncated to `ceil(bits / 8)` octets, excess high bits
    /// cleared.
    pub fn challenge_bits(&mut self, label: &str, bits: u32) -> BigUint {
        let nbytes = bits.div_ceil(8) as usize;
        let mut out = Vec::with_capacity(nbytes + 32);
        let mut counter = 0u32;
        while out.len() < nbytes {
            out.extend_from_slice(&self.digest(label.as_bytes(), counter));
            counter += 1;
        }
        out.truncate(nbytes);
        let excess = (nbytes * 8) as u32 - bits;
        if excess > 0 {
            out[0] &= 0xff >> excess;
        }
        let c = BigUint::from_bytes_be(&out);
        self.append_bytes(&out);
        c
    }
}
