use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ExtInt;
use crate::error::Error;

/// Exact arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Builds `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"n/d"` (optional sign on the numerator).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Rational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - Rational::from_integer(floor(q))
}

pub fn to_i64(n: &BigInt) -> i64 {
    n.to_i64().expect("integer exceeds i64 range")
}

/// An odd rational prime, the uniformizer of the local field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 2
            || (2..)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        if p == 2 {
            return Err(Error::Config("the prime 2 is not supported".into()));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self.0))
    }

    /// `p^k` for any integer `k`.
    pub fn pow(self, k: i64) -> Rational {
        let base = BigInt::from(self.0).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Rational::from_integer(base)
        } else {
            Rational::new(BigInt::from(1), base)
        }
    }
}

impl Default for Prime {
    fn default() -> Self {
        Prime(5)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// The `p`-adic valuation of a rational; `val_p(0) = +inf`.
pub fn val_p(q: &Rational, p: Prime) -> ExtInt {
    if q.is_zero() {
        return ExtInt::Infinity;
    }
    let p = BigInt::from(p.0);
    ExtInt::Finite(multiplicity(q.numer(), &p) - multiplicity(q.denom(), &p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert_eq!(int(4).to_string(), "4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn floor_ceil_frac() {
        assert_eq!(floor(&rat(-1, 3)), BigInt::from(-1));
        assert_eq!(ceil(&rat(-1, 3)), BigInt::from(0));
        assert_eq!(ceil(&rat(2, 3)), BigInt::from(1));
        assert_eq!(frac(&rat(-1, 6)), rat(5, 6));
        assert_eq!(frac(&int(3)), int(0));
    }

    #[test]
    fn primes() {
        assert!(Prime::new(5).is_ok());
        assert!(Prime::new(9).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(2).is_err());
        assert_eq!(Prime::new(3).unwrap().pow(-2), rat(1, 9));
    }

    #[test]
    fn valuations() {
        let p5 = Prime::new(5).unwrap();
        let p3 = Prime::new(3).unwrap();
        assert_eq!(val_p(&int(0), p5), ExtInt::Infinity);
        assert_eq!(val_p(&int(5), p5), ExtInt::Finite(1));
        assert_eq!(val_p(&rat(9, 6), p3), ExtInt::Finite(1));
        assert_eq!(val_p(&rat(2, 75), p5), ExtInt::Finite(-2));
    }
}
