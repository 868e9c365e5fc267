//! Multi-scalar multiplication over secp256k1 (bucket method).

use super::secp::{GroupElement, Scalar};
use crate::{Error, Result};

/// Below this many terms the plain sum of products is faster than bucketing.
const NAIVE_THRESHOLD: usize = 8;

/// Computes `prod_i bases_i ^ exponents_i` (additively, `sum_i e_i * B_i`).
pub fn multiexp(bases: &[GroupElement], exponents: &[Scalar]) -> Result<GroupElement> {
    if bases.len() != exponents.len() {
        return Err(Error::LengthMismatch(bases.len(), exponents.len()));
    }
    if bases.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(msm(bases, exponents))
}

/// Unchecked variant used internally once lengths are known to agree.
pub(crate) fn msm(bases: &[GroupElement], exponents: &[Scalar]) -> GroupElement {
    debug_assert_eq!(bases.len(), exponents.len());
    if bases.len() < NAIVE_THRESHOLD {
        return naive(bases, exponents);
    }
    pippenger(bases, exponents)
}

pub(crate) fn naive(bases: &[GroupElement], exponents: &[Scalar]) -> GroupElement {
    bases
        .iter()
        .zip(exponents)
        .fold(GroupElement::IDENTITY, |acc, (b, e)| acc + b * e)
}

fn window_bits(n: usize) -> usize {
    match n {
        0..=31 => 3,
        32..=127 => 4,
        128..=511 => 5,
        512..=2047 => 6,
        _ => 7,
    }
}

/// Reads `width` bits starting at bit `start` (bit 0 = least significant) of a
/// big-endian 32-octet scalar.
fn window(bytes: &[u8; 32], start: usize, width: usize) -> usize {
    let mut out = 0usize;
    for k in 0..width {
        let bit = start + k;
        if bit >= 256 {
            break;
        }
        let byte = bytes[31 - bit / 8];
        if (byte >> (bit % 8)) & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

fn pippenger(bases: &[GroupElement], exponents: &[Scalar]) -> GroupElement {
    let c = window_bits(bases.len());
    let digits: Vec<[u8; 32]> = exponents.iter().map(|e| e.to_bytes().into()).collect();
    let windows = 256usize.div_ceil(c);
    let mut buckets = vec![GroupElement::IDENTITY; (1 << c) - 1];
    let mut acc = GroupElement::IDENTITY;
    for w in (0..windows).rev() {
        for _ in 0..c {
            acc = acc.double();
        }
        buckets.iter_mut().for_each(|b| *b = GroupElement::IDENTITY);
        for (base, d) in bases.iter().zip(&digits) {
            let idx = window(d, w * c, c);
            if idx != 0 {
                buckets[idx - 1] += base;
            }
        }
        let mut running = GroupElement::IDENTITY;
        let mut sum = GroupElement::IDENTITY;
        for b in buckets.iter().rev() {
            running += b;
            sum += running;
        }
        acc += sum;
    }
    acc
}
