//! Shared exact-rational helpers: p-adic valuations of integers and
//! rationals, a fast comparator for large rationals, parsing and rendering.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `v_p(n)` for a nonzero integer; `None` for zero.
pub fn vp_int(p: u64, n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// Splits a nonzero integer as `p^v * u` with `p ∤ u`.
pub fn split_unit(p: u64, n: &BigInt) -> (u64, BigInt) {
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// `v_p(a/b) = v_p(a) - v_p(b)`; `None` for zero.
pub fn vp_rational(p: u64, x: &Rational) -> Option<i64> {
    let vn = vp_int(p, x.numer())?;
    let vd = vp_int(p, x.denom()).expect("denominator is nonzero");
    Some(vn as i64 - vd as i64)
}

/// `floor(log2 |n|)` bracket helper: number of significant bits.
fn bits(n: &BigInt) -> i64 {
    n.bits() as i64
}

/// Exact comparison of two rationals.
///
/// Values far apart in magnitude are decided from bit lengths alone; only
/// near-ties fall back to cross multiplication. For sequences such as
/// `(a/b)^n` with `n` in the thousands this avoids multiplying numbers with
/// tens of thousands of bits on every comparison.
pub fn cmp(a: &Rational, b: &Rational) -> Ordering {
    if a.numer() == b.numer() && a.denom() == b.denom() {
        return Ordering::Equal;
    }
    let (sa, sb) = (a.numer().sign(), b.numer().sign());
    if sa != sb {
        return sign_rank(sa).cmp(&sign_rank(sb));
    }
    if sa == Sign::NoSign {
        return Ordering::Equal;
    }
    // log2|x| lies in (l - 1, l + 1) with l = bits(num) - bits(den).
    let la = bits(a.numer()) - bits(a.denom());
    let lb = bits(b.numer()) - bits(b.denom());
    let magnitude = if la + 1 <= lb - 1 {
        Some(Ordering::Less)
    } else if lb + 1 <= la - 1 {
        Some(Ordering::Greater)
    } else {
        None
    };
    let ord = match magnitude {
        Some(o) => o,
        None => {
            let lhs = a.numer().abs() * b.denom();
            let rhs = b.numer().abs() * a.denom();
            lhs.cmp(&rhs)
        }
    };
    if sa == Sign::Minus {
        ord.reverse()
    } else {
        ord
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// `r^n` for `r` in lowest terms; the result is already reduced.
pub fn pow(r: &Rational, n: u64) -> Rational {
    let exp: u32 = n.try_into().expect("exponent fits in u32");
    if exp == 0 {
        return Rational::one();
    }
    let (num, den) = if r.numer().is_negative() && exp % 2 == 0 {
        (r.numer().abs().pow(exp), r.denom().pow(exp))
    } else {
        (r.numer().pow(exp), r.denom().pow(exp))
    };
    Rational::new_raw(num, den)
}

/// `p^e` as a rational for any integer `e`.
pub fn prime_power(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new_raw(BigInt::one(), base)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::invalid("empty rational"));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational::new(n, d))
    } else {
        BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| Error::invalid(format!("bad rational {s:?}")))
    }
}

/// `floor(log_p(x))` for a positive rational.
pub fn floor_log(p: u64, x: &Rational) -> i64 {
    assert!(x.is_positive());
    // Estimate from bit lengths, then correct exactly.
    let est = (bits(x.numer()) - bits(x.denom())) as f64 / (p as f64).log2();
    let mut e = est.floor() as i64;
    while prime_power(p, e) > *x {
        e -= 1;
    }
    while prime_power(p, e + 1) <= *x {
        e += 1;
    }
    e
}

pub fn to_biguint(n: &BigInt) -> BigUint {
    n.to_biguint().expect("nonnegative")
}
