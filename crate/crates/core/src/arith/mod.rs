//! Exact arithmetic: rationals, `p`-adic valuations, extended integers and
//! Laurent polynomials over the rationals.

mod ext;
mod poly;
mod rational;
mod ring;

pub use ext::{ExtInt, Extended};
pub use poly::MultiPoly;
pub use rational::{ceil, floor, frac, int, parse_rational, rat, to_i64, val_p, Prime, Rational};
pub use ring::Ring;
