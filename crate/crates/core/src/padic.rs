//! Exact arithmetic in `Q_p` with explicit precision, absolute values with
//! rational exponents and the scalar scalings of the unit ball.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{self, Rational};
use crate::{Error, Result};

/// A prime small enough to fit a machine word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Validates primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d.saturating_mul(d) <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn big(self) -> BigUint {
        BigUint::from(self.0)
    }

    /// `p^k` as an unsigned big integer.
    pub fn pow(self, k: u32) -> BigUint {
        self.big().pow(k)
    }

    fn ensure_same(self, other: Prime) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.0, other.0))
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The valuation of a p-adic number as far as its precision certifies it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Exact(i64),
    /// The value is zero to the stored precision; only `v >= bound` is known.
    AtLeast(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Zero {
        abs_precision: i64,
    },
    Unit {
        valuation: i64,
        unit: BigUint,
        precision: u32,
    },
}

/// An element `p^v * (d_0 + d_1 p + ... + d_{N-1} p^{N-1}) + O(p^{v+N})` of
/// `Q_p` with `d_0 != 0`, or `O(p^A)` when it is zero to precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNumber {
    prime: Prime,
    repr: Repr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(x: &PadicNumber, y: &PadicNumber, op: ArithOp) -> Result<PadicNumber> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

impl PadicNumber {
    /// The expansion of `num/den` with `precision` unit digits.
    pub fn from_rational(num: &BigInt, den: &BigInt, prime: Prime, precision: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if precision == 0 {
            return Err(Error::invalid("precision must be at least 1"));
        }
        if num.is_zero() {
            return Ok(Self::zero(prime, precision as i64));
        }
        let (vn, un) = exact::split_unit(prime.get(), num);
        let (vd, ud) = exact::split_unit(prime.get(), den);
        let modulus = BigInt::from(prime.pow(precision));
        let un = exact::to_biguint(&un.mod_floor(&modulus));
        let ud = exact::to_biguint(&ud.mod_floor(&modulus));
        let modulus = exact::to_biguint(&modulus);
        let inv = ud.modinv(&modulus).expect("unit is invertible mod p^N");
        Ok(PadicNumber {
            prime,
            repr: Repr::Unit {
                valuation: vn as i64 - vd as i64,
                unit: (un * inv) % modulus,
                precision,
            },
        })
    }

    pub fn from_ratio(x: &Rational, prime: Prime, precision: u32) -> Result<Self> {
        Self::from_rational(x.numer(), x.denom(), prime, precision)
    }

    pub fn from_i64(n: i64, prime: Prime, precision: u32) -> Result<Self> {
        Self::from_rational(&BigInt::from(n), &BigInt::one(), prime, precision)
    }

    /// `O(p^abs_precision)`.
    pub fn zero(prime: Prime, abs_precision: i64) -> Self {
        PadicNumber {
            prime,
            repr: Repr::Zero { abs_precision },
        }
    }

    /// `p^valuation * unit + O(p^{valuation + precision})`; `unit` is reduced
    /// mod `p^precision` and must not be divisible by `p`.
    pub fn from_unit(prime: Prime, valuation: i64, unit: BigUint, precision: u32) -> Result<Self> {
        if precision == 0 {
            return Err(Error::invalid("precision must be at least 1"));
        }
        let unit = unit % prime.pow(precision);
        if (&unit % prime.big()).is_zero() {
            return Err(Error::invalid("unit part is divisible by p"));
        }
        Ok(PadicNumber {
            prime,
            repr: Repr::Unit {
                valuation,
                unit,
                precision,
            },
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero_to_precision(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn valuation(&self) -> Valuation {
        match &self.repr {
            Repr::Zero { abs_precision } => Valuation::AtLeast(*abs_precision),
            Repr::Unit { valuation, .. } => Valuation::Exact(*valuation),
        }
    }

    /// Number of certified unit digits (0 when zero to precision).
    pub fn relative_precision(&self) -> u32 {
        match &self.repr {
            Repr::Zero { .. } => 0,
            Repr::Unit { precision, .. } => *precision,
        }
    }

    /// The exponent `A` such that the value is known modulo `p^A`.
    pub fn absolute_precision(&self) -> i64 {
        match &self.repr {
            Repr::Zero { abs_precision } => *abs_precision,
            Repr::Unit {
                valuation, precision, ..
            } => valuation + *precision as i64,
        }
    }

    pub fn unit(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { unit, .. } => Some(unit),
        }
    }

    /// Base-p digits `d_0 .. d_{N-1}` of the unit part.
    pub fn unit_digits(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Zero { .. } => Vec::new(),
            Repr::Unit { unit, precision, .. } => {
                let p = self.prime.big();
                let mut rest = unit.clone();
                (0..*precision)
                    .map(|_| {
                        let (q, r) = rest.div_rem(&p);
                        rest = q;
                        r.to_u64().expect("digit below p")
                    })
                    .collect()
            }
        }
    }

    /// Digits `a_lo ..= a_hi` of the canonical expansion; positions below the
    /// valuation read as 0.
    pub fn digit_window(&self, lo: i64, hi: i64) -> Result<Vec<u64>> {
        if lo > hi {
            return Err(Error::invalid(format!("empty digit window [{lo}, {hi}]")));
        }
        let limit = self.absolute_precision();
        if hi >= limit {
            return Err(Error::BeyondPrecision { lo, hi, limit });
        }
        let digits = self.unit_digits();
        let v = match self.valuation() {
            Valuation::Exact(v) => v,
            Valuation::AtLeast(_) => return Ok(vec![0; (hi - lo + 1) as usize]),
        };
        Ok((lo..=hi)
            .map(|i| if i < v { 0 } else { digits[(i - v) as usize] })
            .collect())
    }

    /// The rational `p^v * unit` this expansion stores (0 when zero to
    /// precision).
    pub fn representative(&self) -> Rational {
        match &self.repr {
            Repr::Zero { .. } => Rational::zero(),
            Repr::Unit { valuation, unit, .. } => {
                Rational::from_integer(BigInt::from(unit.clone())) * exact::prime_power(self.prime.get(), *valuation)
            }
        }
    }

    pub fn abs(&self) -> AbsValue {
        match &self.repr {
            Repr::Zero { .. } => AbsValue::Zero,
            Repr::Unit { valuation, .. } => AbsValue::from_int_exponent(*valuation),
        }
    }

    pub fn neg(&self) -> PadicNumber {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => PadicNumber {
                prime: self.prime,
                repr: Repr::Unit {
                    valuation: *valuation,
                    unit: self.prime.pow(*precision) - unit,
                    precision: *precision,
                },
            },
        }
    }

    /// Sum with absolute precision `min(v_x + N_x, v_y + N_y)`.
    pub fn try_add(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.prime.ensure_same(other.prime)?;
        let p = self.prime;
        let abs_precision = self.absolute_precision().min(other.absolute_precision());
        let terms: Vec<(i64, &BigUint)> = [&self.repr, &other.repr]
            .into_iter()
            .filter_map(|r| match r {
                Repr::Unit { valuation, unit, .. } => Some((*valuation, unit)),
                Repr::Zero { .. } => None,
            })
            .collect();
        let Some(v) = terms.iter().map(|t| t.0).min() else {
            return Ok(Self::zero(p, abs_precision));
        };
        if abs_precision <= v {
            return Ok(Self::zero(p, abs_precision));
        }
        let width = (abs_precision - v) as u32;
        let modulus = p.pow(width);
        let sum = terms
            .iter()
            .fold(BigUint::zero(), |acc, (vi, u)| acc + *u * p.pow((vi - v) as u32))
            % &modulus;
        if sum.is_zero() {
            return Ok(Self::zero(p, abs_precision));
        }
        let (k, unit) = exact::split_unit(p.get(), &BigInt::from(sum));
        Ok(PadicNumber {
            prime: p,
            repr: Repr::Unit {
                valuation: v + k as i64,
                unit: exact::to_biguint(&unit),
                precision: width - k as u32,
            },
        })
    }

    pub fn try_sub(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.try_add(&other.neg())
    }

    /// Product with relative precision `min(N_x, N_y)`.
    pub fn try_mul(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.prime.ensure_same(other.prime)?;
        let p = self.prime;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Zero { abs_precision: a }, Repr::Zero { abs_precision: b }) => Self::zero(p, a + b),
            (Repr::Zero { abs_precision: a }, Repr::Unit { valuation, .. })
            | (Repr::Unit { valuation, .. }, Repr::Zero { abs_precision: a }) => Self::zero(p, a + valuation),
            (
                Repr::Unit {
                    valuation: vx,
                    unit: ux,
                    precision: nx,
                },
                Repr::Unit {
                    valuation: vy,
                    unit: uy,
                    precision: ny,
                },
            ) => {
                let precision = *nx.min(ny);
                PadicNumber {
                    prime: p,
                    repr: Repr::Unit {
                        valuation: vx + vy,
                        unit: (ux * uy) % p.pow(precision),
                        precision,
                    },
                }
            }
        })
    }

    pub fn try_div(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.prime.ensure_same(other.prime)?;
        let p = self.prime;
        let (vy, uy, ny) = match &other.repr {
            Repr::Zero { abs_precision } => return Err(Error::DivisionByZero(*abs_precision)),
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => (*valuation, unit, *precision),
        };
        Ok(match &self.repr {
            Repr::Zero { abs_precision } => Self::zero(p, abs_precision - vy),
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                let precision = (*precision).min(ny);
                let modulus = p.pow(precision);
                let inv = (uy % &modulus).modinv(&modulus).expect("unit is invertible");
                PadicNumber {
                    prime: p,
                    repr: Repr::Unit {
                        valuation: valuation - vy,
                        unit: (unit * inv) % modulus,
                        precision,
                    },
                }
            }
        })
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prime;
        let mut first = true;
        if let Valuation::Exact(v) = self.valuation() {
            for (i, d) in self.unit_digits().into_iter().enumerate() {
                if d == 0 {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match v + i as i64 {
                    0 => write!(f, "{d}")?,
                    1 => write!(f, "{d}*{p}")?,
                    e => write!(f, "{d}*{p}^{e}")?,
                }
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O({p}^{})", self.absolute_precision())
    }
}

/// An absolute value `p^{-q}` with rational exponent `q`, or the value 0.
///
/// Ordered by the real number it denotes: a larger exponent is a smaller
/// value and `Zero` sits below everything.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AbsValue {
    Zero,
    Pow(Rational),
}

impl AbsValue {
    pub fn one() -> Self {
        AbsValue::Pow(Rational::zero())
    }

    pub fn from_exponent(q: Rational) -> Self {
        AbsValue::Pow(q)
    }

    pub fn from_int_exponent(q: i64) -> Self {
        AbsValue::Pow(exact::int(q))
    }

    pub fn exponent(&self) -> Option<&Rational> {
        match self {
            AbsValue::Zero => None,
            AbsValue::Pow(q) => Some(q),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, AbsValue::Zero)
    }

    pub fn mul(&self, other: &AbsValue) -> AbsValue {
        match (self, other) {
            (AbsValue::Pow(a), AbsValue::Pow(b)) => AbsValue::Pow(a + b),
            _ => AbsValue::Zero,
        }
    }

    /// `p^{-q}` rendered as `p^-q`, e.g. `7^-1`, `3^-1/2`, `3^2`; zero as `0`.
    pub fn render(&self, p: Prime) -> String {
        match self {
            AbsValue::Zero => "0".to_string(),
            AbsValue::Pow(q) => format!("{p}^{}", -q),
        }
    }
}

impl Ord for AbsValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (AbsValue::Zero, AbsValue::Zero) => Ordering::Equal,
            (AbsValue::Zero, _) => Ordering::Less,
            (_, AbsValue::Zero) => Ordering::Greater,
            (AbsValue::Pow(a), AbsValue::Pow(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for AbsValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A positive real `c * p^{-q}` with `1/p < c <= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Radius {
    prime: Prime,
    coefficient: Rational,
    exponent: Rational,
}

impl Radius {
    /// Builds `c * p^{-q}` and moves powers of `p` between coefficient and
    /// exponent until `1/p < c <= 1`.
    pub fn new(prime: Prime, coefficient: Rational, exponent: Rational) -> Result<Self> {
        if !coefficient.is_positive() {
            return Err(Error::invalid("radius coefficient must be positive"));
        }
        let p = Rational::from_integer(BigInt::from(prime.get()));
        let one = Rational::one();
        let (mut c, mut q) = (coefficient, exponent);
        // Jump by whole powers first so huge coefficients do not loop.
        let shift = exact::floor_log(prime.get(), &c);
        if shift != 0 {
            c /= exact::prime_power(prime.get(), shift);
            q -= exact::int(shift);
        }
        while c > one {
            c /= &p;
            q -= &one;
        }
        while &c * &p <= one {
            c *= &p;
            q += &one;
        }
        Ok(Radius {
            prime,
            coefficient: c,
            exponent: q,
        })
    }

    pub fn from_abs(prime: Prime, value: &AbsValue) -> Option<Radius> {
        value.exponent().map(|q| Radius {
            prime,
            coefficient: Rational::one(),
            exponent: q.clone(),
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    /// Exact comparison of `c1 p^{-q1}` with `c2 p^{-q2}`: with
    /// `q1 - q2 = a/d` in lowest terms, the order is that of `(c1/c2)^d`
    /// against `p^a`.
    pub fn compare(&self, other: &Radius) -> Result<Ordering> {
        self.prime.ensure_same(other.prime)?;
        let delta = &self.exponent - &other.exponent;
        let ratio = &self.coefficient / &other.coefficient;
        let one = Rational::one();
        if delta.is_zero() {
            return Ok(ratio.cmp(&one));
        }
        // Canonical coefficients keep the ratio inside (1/p, p).
        if delta >= one {
            return Ok(Ordering::Less);
        }
        if delta <= -one.clone() {
            return Ok(Ordering::Greater);
        }
        let a = delta.numer().to_i64().expect("|a| < d");
        let d = delta.denom().to_u64().ok_or_else(|| Error::overflow("exponent denominator"))?;
        let lhs = exact::pow(&ratio, d);
        let rhs = exact::prime_power(self.prime.get(), a);
        Ok(exact::cmp(&lhs, &rhs))
    }

    /// The exact value when the exponent is an integer.
    pub fn as_rational(&self) -> Option<Rational> {
        self.exponent.is_integer().then(|| {
            let e = self.exponent.to_integer().to_i64().expect("exponent fits i64");
            &self.coefficient * exact::prime_power(self.prime.get(), -e)
        })
    }
}

impl PartialOrd for Radius {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}*{}^{}", self.coefficient, self.prime, -&self.exponent),
        }
    }
}

fn floor_to_i64(x: &Rational) -> Result<i64> {
    x.floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::overflow("scaling exponent"))
}

/// The integer `e` with `0 <= e + q < 1`, so that `p^{-1} < |p^e x| <= 1`
/// for `|x| = p^{-q}` (scalar `λ = p^e`, `ρ = p`).
pub fn normalize_scalar(x: &AbsValue) -> Result<i64> {
    let q = x
        .exponent()
        .ok_or_else(|| Error::invalid("cannot normalise the zero vector"))?;
    Ok(-floor_to_i64(q)?)
}

/// The integer `e = ceil(s - q)` for `|x| = p^{-q}`, `r = p^{-s}`: then
/// `|p^e x| <= r` and `p^e <= p^2 * p^{s - q}`.
pub fn scale_into_ball(x: &AbsValue, r: &AbsValue) -> Result<i64> {
    let q = x
        .exponent()
        .ok_or_else(|| Error::invalid("cannot scale the zero vector"))?;
    let s = r.exponent().ok_or_else(|| Error::invalid("radius must be positive"))?;
    let diff = s - q;
    Ok(-floor_to_i64(&-diff)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn from(n: i64, d: i64, prime: u64, prec: u32) -> PadicNumber {
        PadicNumber::from_rational(&BigInt::from(n), &BigInt::from(d), p(prime), prec).unwrap()
    }

    /// Extended Euclid, independent of `BigUint::modinv`.
    fn inverse_mod(a: i64, m: i64) -> i64 {
        let (mut r0, mut r1, mut s0, mut s1) = (m, a.rem_euclid(m), 0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        assert_eq!(r0, 1);
        s0.rem_euclid(m)
    }

    fn base_digits(mut n: i64, p: i64, len: usize) -> Vec<u64> {
        (0..len)
            .map(|_| {
                let d = n % p;
                n /= p;
                d as u64
            })
            .collect()
    }

    #[test]
    fn primality() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert_eq!(Prime::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn from_rational_examples() {
        let x = from(7, 1, 7, 3);
        assert_eq!(x.valuation(), Valuation::Exact(1));
        assert_eq!(x.unit_digits(), vec![1, 0, 0]);

        let z = from(0, 1, 5, 4);
        assert!(z.is_zero_to_precision());
        assert_eq!(z.valuation(), Valuation::AtLeast(4));

        let third = from(1, 3, 5, 2);
        let inv = inverse_mod(3, 25);
        assert_eq!(inv, 17);
        assert_eq!(third.valuation(), Valuation::Exact(0));
        assert_eq!(third.unit_digits(), base_digits(inv, 5, 2));

        assert_eq!(
            PadicNumber::from_rational(&BigInt::from(1), &BigInt::from(0), p(5), 2),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_examples() {
        let five = p(5);
        let one = from(1, 1, 5, 2);
        let small = PadicNumber::from_unit(five, 2, BigUint::from(3u32), 2).unwrap();
        let sum = one.try_add(&small).unwrap();
        assert_eq!(sum, one);
        assert_eq!(sum.absolute_precision(), 2);

        let x = from(3, 1, 3, 4);
        let y = from(1, 27, 3, 4);
        assert_eq!(x.try_mul(&y).unwrap().valuation(), Valuation::Exact(-2));

        // 2 + 3 over p = 5: digits cancel at position 0 and carry.
        let a = from(2, 1, 5, 3);
        let b = from(3, 1, 5, 3);
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.valuation(), Valuation::Exact(1));
        assert_eq!(s.unit_digits(), base_digits(1, 5, 2));
        assert_eq!(s.absolute_precision(), 3);

        let q = from(2, 3, 7, 4).try_div(&from(5, 7, 7, 3)).unwrap();
        assert_eq!(q, from(14, 15, 7, 3));
    }

    #[test]
    fn arithmetic_errors() {
        let a = from(1, 1, 3, 2);
        let b = from(1, 1, 5, 2);
        assert_eq!(a.try_add(&b), Err(Error::PrimeMismatch(3, 5)));
        let z = from(0, 1, 3, 4);
        assert_eq!(a.try_div(&z), Err(Error::DivisionByZero(4)));
    }

    #[test]
    fn zero_propagation() {
        let z = from(0, 1, 3, 4);
        let x = from(9, 1, 3, 4);
        assert_eq!(z.try_mul(&x).unwrap().valuation(), Valuation::AtLeast(6));
        assert_eq!(z.try_div(&x).unwrap().valuation(), Valuation::AtLeast(2));
        assert_eq!(x.try_sub(&x).unwrap().valuation(), Valuation::AtLeast(6));
        let s = z.try_add(&x).unwrap();
        assert_eq!(s.valuation(), Valuation::Exact(2));
        assert_eq!(s.absolute_precision(), 4);
    }

    #[test]
    fn abs_examples() {
        assert_eq!(from(1, 9, 3, 2).abs(), AbsValue::from_int_exponent(-2));
        assert_eq!(from(1, 9, 3, 2).abs().render(p(3)), "3^2");
        assert_eq!(from(7, 1, 7, 3).abs(), AbsValue::from_int_exponent(1));
        assert_eq!(from(7, 1, 7, 3).abs().render(p(7)), "7^-1");
        let z = from(0, 1, 5, 4);
        assert_eq!(z.abs(), AbsValue::Zero);
        assert_eq!(z.valuation(), Valuation::AtLeast(4));
    }

    #[test]
    fn abs_order() {
        let half = AbsValue::from_exponent(rat(1, 2));
        assert!(AbsValue::Zero < half);
        assert!(half < AbsValue::one());
        assert!(AbsValue::from_int_exponent(-1) > AbsValue::one());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_scalar(&AbsValue::one()).unwrap(), 0);
        assert_eq!(normalize_scalar(&AbsValue::from_exponent(rat(5, 2))).unwrap(), -2);
        assert_eq!(normalize_scalar(&AbsValue::from_int_exponent(-4)).unwrap(), 4);
        assert!(normalize_scalar(&AbsValue::Zero).is_err());
        // Scan oracle for q = 5/2.
        let q = rat(5, 2);
        let hits: Vec<i64> = (-10..10)
            .filter(|e| {
                let t = &q + int(*e);
                t >= int(0) && t < int(1)
            })
            .collect();
        assert_eq!(hits, vec![-2]);
    }

    #[test]
    fn scale_examples() {
        let x = AbsValue::one();
        let r = AbsValue::from_int_exponent(3);
        let e = scale_into_ball(&x, &r).unwrap();
        assert_eq!(e, 3);
        // |p^e x| = 2^-3 <= r and p^e = 8 <= p^2 * 2^3 = 32
        assert!(AbsValue::from_int_exponent(e) <= r);
        assert!(8 <= 4 * 8);

        assert_eq!(scale_into_ball(&r, &r).unwrap(), 0);
        let e = scale_into_ball(&AbsValue::from_exponent(rat(7, 3)), &AbsValue::from_int_exponent(1)).unwrap();
        assert_eq!(e, -1);
        assert_eq!((rat(1, 1) - rat(7, 3)).ceil(), int(-1));
    }

    #[test]
    fn digit_windows() {
        assert_eq!(from(7, 1, 7, 3).digit_window(0, 2).unwrap(), vec![0, 1, 0]);
        assert_eq!(from(1, 1, 5, 4).digit_window(0, 3).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(from(-1, 1, 5, 3).digit_window(0, 2).unwrap(), vec![4, 4, 4]);
        assert_eq!(from(1, 25, 5, 3).digit_window(-3, 0).unwrap(), vec![0, 1, 0, 0]);
        assert!(matches!(
            from(1, 1, 5, 3).digit_window(0, 3),
            Err(Error::BeyondPrecision { limit: 3, .. })
        ));
        assert_eq!(from(0, 1, 5, 3).digit_window(0, 2).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn radius_canonical_and_compare() {
        let two = p(2);
        let r = Radius::new(two, rat(1, 2), int(1)).unwrap();
        assert_eq!(r.coefficient(), &int(1));
        assert_eq!(r.exponent(), &int(2));
        assert_eq!(r.to_string(), "1/4");

        let three = p(3);
        let c0 = Radius::new(three, rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(c0.coefficient(), &rat(1, 2));
        let gap = Radius::from_abs(three, &AbsValue::from_exponent(rat(1, 2))).unwrap();
        assert_eq!(c0.compare(&gap).unwrap(), Ordering::Less);
        assert_eq!(gap.compare(&c0).unwrap(), Ordering::Greater);

        // 3^{-1/2} ≈ 0.577 vs 1/2 * 3^{0} = 0.5
        let half = Radius::new(three, rat(1, 2), int(0)).unwrap();
        assert_eq!(gap.compare(&half).unwrap(), Ordering::Greater);
        assert!(Radius::new(three, int(0), int(0)).is_err());
        assert!(gap.compare(&r).is_err());

        let big = Radius::new(three, int(100), int(0)).unwrap();
        assert_eq!(big.coefficient(), &rat(100, 243));
        assert_eq!(big.exponent(), &int(-5));
    }
}
