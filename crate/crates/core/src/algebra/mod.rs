//! Group and integer arithmetic shared by every proof system.

pub mod multiexp;
pub mod pairing;
pub mod primes;
pub mod rsa;
pub mod secp;

pub use multiexp::multiexp;
pub use pairing::{pairing, Fr, Gt, G1, G2};
pub use primes::{gen_safe_prime, isqrt_floor};
pub use rsa::{RsaGroupElement, RsaModulus, SignedBounded};
pub use secp::{map_to_group, GroupElement, Scalar};
