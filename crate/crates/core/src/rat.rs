//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational (reduced form, positive
//! denominator, both maintained by `num-rational`). All arithmetic in the
//! crate goes through this type; no floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// Parses "p/q" or "p". Rejects empty strings, junk and zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| format!("bad integer `{num_s}`"))?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| format!("bad integer `{d}`"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rat::new(num, den))
}

/// Canonical display form: "p" when the denominator is 1, else "p/q".
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is a perfect square of a rational; returns the nonnegative root.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}
