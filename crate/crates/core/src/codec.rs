//! Byte-level framing shared by every proof format.
//!
//! All proof files start with the header `"ZKRP" || version || scheme tag`.
//! Integers are big-endian; variable-length fields carry a 4-octet length.

use crate::{Error, Result};

pub const MAGIC: &[u8; 4] = b"ZKRP";
pub const VERSION: u8 = 1;

/// Upper bound on any single length-prefixed field, so a corrupted length
/// cannot trigger a huge allocation.
const MAX_FIELD_LEN: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum SchemeTag {
    Boudot = 0x01,
    SigRange = 0x02,
    Bulletproofs = 0x03,
}

impl SchemeTag {
    pub fn from_u8(v: u8) -> Result<Self> {
        match v {
            0x01 => Ok(Self::Boudot),
            0x02 => Ok(Self::SigRange),
            0x03 => Ok(Self::Bulletproofs),
            _ => Err(Error::Malformed("unknown scheme tag")),
        }
    }
}

#[derive(Default)]
pub struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn header(&mut self, tag: SchemeTag) {
        self.buf.extend_from_slice(MAGIC);
        self.buf.push(VERSION);
        self.buf.push(tag as u8);
    }

    pub fn u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    pub fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_be_bytes());
    }

    pub fn u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_be_bytes());
    }

    pub fn raw(&mut self, bytes: &[u8]) {
        self.buf.extend_from_slice(bytes);
    }

    pub fn var_bytes(&mut self, bytes: &[u8]) {
        self.u32(bytes.len() as u32);
        self.buf.extend_from_slice(bytes);
    }

    pub fn len(&self) -> usize {
        self.buf.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buf.is_empty()
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf
    }
}

pub struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    pub fn new(buf: &'a [u8]) -> Self {
        Self { buf, pos: 0 }
    }

    pub fn header(&mut self) -> Result<SchemeTag> {
        if self.raw(4)? != MAGIC {
            return Err(Error::Malformed("bad magic"));
        }
        if self.u8()? != VERSION {
            return Err(Error::Malformed("unsupported version"));
        }
        SchemeTag::from_u8(self.u8()?)
    }

    pub fn expect_header(&mut self, tag: SchemeTag) -> Result<()> {
        if self.header()? != tag {
            return Err(Error::Malformed("wrong scheme tag"));
        }
        Ok(())
    }

    pub fn raw(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.buf.len())
            .ok_or(Error::Malformed("truncated input"))?;
        let out = &self.buf[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    pub fn u8(&mut self) -> Result<u8> {
        Ok(self.raw(1)?[0])
    }

    pub fn u32(&mut self) -> Result<u32> {
        let b = self.raw(4)?;
        Ok(u32::from_be_bytes([b[0], b[1], b[2], b[3]]))
    }

    pub fn u64(&mut self) -> Result<u64> {
        let b = self.raw(8)?;
        let mut a = [0u8; 8];
        a.copy_from_slice(b);
        Ok(u64::from_be_bytes(a))
    }

    pub fn var_bytes(&mut self) -> Result<&'a [u8]> {
        let len = self.u32()? as usize;
        if len > MAX_FIELD_LEN {
            return Err(Error::Malformed("field too long"));
        }
        self.raw(len)
    }

    /// Reads a sequence count, bounded by `max`.
    pub fn count(&mut self, max: usize) -> Result<usize> {
        let n = self.u32()? as usize;
        if n > max {
            return Err(Error::Malformed("sequence too long"));
        }
        Ok(n)
    }

    pub fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    /// Fails unless every input octet has been consumed.
    pub fn finish(&self) -> Result<()> {
        if self.pos != self.buf.len() {
            return Err(Error::Malformed("trailing bytes"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_round_trip() {
        let mut w = Writer::new();
        w.header(SchemeTag::Bulletproofs);
        w.u32(7);
        let bytes = w.into_bytes();
        assert_eq!(&bytes[..6], b"ZKRP\x01\x03");
        let mut r = Reader::new(&bytes);
        r.expect_header(SchemeTag::Bulletproofs).unwrap();
        assert_eq!(r.u32().unwrap(), 7);
        r.finish().unwrap();
    }

    #[test]
    fn truncation_and_bad_headers() {
        assert!(Reader::new(b"ZKR").header().is_err());
        assert!(Reader::new(b"ZKRP\x02\x01").header().is_err());
        assert!(Reader::new(b"ZKRP\x01\x09").header().is_err());
        assert!(Reader::new(&[0, 0, 0, 5, 1, 2]).var_bytes().is_err());
        assert!(Reader::new(&[0xff, 0xff, 0xff, 0xff]).var_bytes().is_err());
        let r = Reader::new(&[1]);
        assert!(r.finish().is_err());
    }
}
