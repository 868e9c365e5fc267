//! Zero-knowledge range proofs over a shared commitment and transcript layer.
//!
//! Three proof families are provided:
//!
//! * [`boudot`]: square decomposition over Fujisaki-Okamoto commitments in an
//!   RSA group.
//! * [`sigrange`]: Boneh-Boyen signature based set membership and u-ary range
//!   proofs over the BN254 pairing.
//! * [`bulletproofs`]: the inner-product based range proof over secp256k1.
//!
//! [`harness`] holds the command-line front end and the benchmark suite.

pub mod algebra;
pub mod boudot;
pub mod bulletproofs;
pub mod codec;
pub mod commit;
mod error;
pub mod harness;
pub mod sigrange;

pub use error::{Error, Result};
