//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use ulab::lethargy::{JumpSpec, SequenceSpec};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// `v_p` of a nonzero rational by repeated division.
pub fn val(p: u64, x: &Q) -> i64 {
    assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let count = |n: &BigInt| {
        let mut n = n.abs();
        let mut k = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            k += 1;
        }
        k
    };
    count(x.numer()) - count(x.denom())
}

pub fn pow(p: u64, e: i64) -> Q {
    let b = Q::from_integer(BigInt::from(p).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        b
    } else {
        b.recip()
    }
}

/// `u p^e` with a random unit `u = a/b`, `a, b` prime to `p`.
pub fn random_rational<R: Rng>(rng: &mut R, p: u64, vrange: std::ops::RangeInclusive<i64>) -> Q {
    let unit = |rng: &mut R| loop {
        let a: i64 = rng.gen_range(1..=500);
        if a as u64 % p != 0 {
            return a;
        }
    };
    let a = unit(rng);
    let b = unit(rng);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    q(sign * a, b) * pow(p, rng.gen_range(vrange))
}

/// Lower hull vertices of `(i, y_i)` for distinct increasing `i`.
///
/// A point is a vertex exactly when some line through it leaves every other
/// point strictly above, i.e. the largest slope arriving from the left is
/// below the smallest slope leaving to the right.
pub fn hull_oracle(points: &[(usize, Q)]) -> Vec<(usize, Q)> {
    let slope = |a: &(usize, Q), b: &(usize, Q)| (&b.1 - &a.1) / Q::from_integer(BigInt::from(b.0 as i64 - a.0 as i64));
    let mut out = Vec::new();
    for k in 0..points.len() {
        let left = points[..k].iter().map(|a| slope(a, &points[k])).max();
        let right = points[k + 1..].iter().map(|b| slope(&points[k], b)).min();
        let vertex = match (left, right) {
            (Some(l), Some(r)) => l < r,
            _ => true,
        };
        if vertex {
            out.push(points[k].clone());
        }
    }
    out
}

pub fn random_eps<R: Rng>(rng: &mut R) -> SequenceSpec {
    match rng.gen_range(0..3) {
        0 => {
            let b = rng.gen_range(2..=12);
            let a = rng.gen_range(1..b);
            SequenceSpec::geometric(q(a, b)).unwrap()
        }
        1 => SequenceSpec::power_law(rng.gen_range(1..=3)).unwrap(),
        _ => {
            let len = rng.gen_range(1..=8);
            let mut v = Q::one();
            let mut values = Vec::new();
            for _ in 0..len {
                if rng.gen_bool(0.6) {
                    v = v * q(rng.gen_range(1..=4), 5);
                }
                values.push(v.clone());
            }
            SequenceSpec::table(values).unwrap()
        }
    }
}

pub fn random_jump<R: Rng>(rng: &mut R) -> JumpSpec {
    match rng.gen_range(0..4) {
        0 => JumpSpec::linear(rng.gen_range(1..=4)).unwrap(),
        1 => JumpSpec::Square,
        2 => {
            let len = rng.gen_range(1..=10);
            let values = (1..=len).map(|i| i + rng.gen_range(0..=3 * i)).collect();
            JumpSpec::table(values).unwrap()
        }
        _ => JumpSpec::shifted(if rng.gen_bool(0.5) { JumpSpec::Square } else { JumpSpec::linear(2).unwrap() }),
    }
}
