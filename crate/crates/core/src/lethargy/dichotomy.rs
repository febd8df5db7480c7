use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sequence::JumpSpec;
use crate::exact::{self, Rational};
use crate::padic::AbsValue;
use crate::{Error, Result};

/// Fractional bits kept by the fixed-point brackets.
const WORK_BITS: u64 = 192;
/// Bits of `log2 C` extracted before inverting.
const LOG_BITS: u32 = 48;
/// Reported brackets are rounded outward to this many binary places.
pub const BOUND_BITS: u32 = 20;

/// `r_0 = 3`, `r_{s+1} = 2(r_s - 1)` for `s = 0..=s_max`.
pub fn dichotomy_recurrence(s_max: u32) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(s_max as usize + 1);
    let mut r = BigUint::from(3u32);
    for _ in 0..=s_max {
        let next = (&r - 1u32) * 2u32;
        out.push(r);
        r = next;
    }
    out
}

/// A closed interval of rational exponents; `lower == upper` when exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentBound {
    pub lower: Rational,
    pub upper: Rational,
}

impl ExponentBound {
    pub fn exact(value: Rational) -> Self {
        ExponentBound {
            lower: value.clone(),
            upper: value,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    fn scale(&self, c: &Rational) -> Self {
        let (a, b) = (&self.lower * c, &self.upper * c);
        if a <= b {
            ExponentBound { lower: a, upper: b }
        } else {
            ExponentBound { lower: b, upper: a }
        }
    }

    fn round_outward(&self) -> Self {
        if self.is_exact() {
            return self.clone();
        }
        let unit = BigInt::one() << BOUND_BITS;
        let lo = (&self.lower * Rational::from_integer(unit.clone())).floor().to_integer();
        let hi = (&self.upper * Rational::from_integer(unit.clone())).ceil().to_integer();
        ExponentBound {
            lower: Rational::new(lo, unit.clone()),
            upper: Rational::new(hi, unit),
        }
    }
}

impl fmt::Display for ExponentBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// `j` with `C = 2^j`, if any.
fn power_of_two(c: &Rational) -> Option<u64> {
    if !c.denom().is_one() || !c.numer().is_positive() {
        return None;
    }
    let n = c.numer().magnitude();
    let j = n.trailing_zeros()?;
    (n.count_ones() == 1).then_some(j)
}

fn fixed(x: &Rational, ceil: bool) -> BigUint {
    let scaled = x * Rational::from_integer(BigInt::one() << WORK_BITS);
    let v = if ceil { scaled.ceil() } else { scaled.floor() };
    exact::to_biguint(&v.to_integer())
}

fn from_fixed(x: &BigUint) -> Rational {
    Rational::new(BigInt::from(x.clone()), BigInt::one() << WORK_BITS)
}

fn mul_fixed(a: &BigUint, b: &BigUint, ceil: bool) -> BigUint {
    let prod = a * b;
    let q = &prod >> WORK_BITS;
    if ceil && (q.clone() << WORK_BITS) != prod {
        q + 1u32
    } else {
        q
    }
}

fn sqrt_fixed(a: &BigUint, ceil: bool) -> BigUint {
    let wide = a << WORK_BITS;
    let s = wide.sqrt();
    if ceil && &s * &s != wide {
        s + 1u32
    } else {
        s
    }
}

/// Dyadic bracket `[L, U]` of `log2 C` for rational `C > 1`.
fn log2_bracket(c: &Rational) -> (Rational, Rational) {
    let mut ip = c.numer().bits() as i64 - c.denom().bits() as i64;
    while exact::cmp(c, &exact::prime_power(2, ip)).is_lt() {
        ip -= 1;
    }
    while exact::cmp(c, &exact::prime_power(2, ip + 1)).is_ge() {
        ip += 1;
    }
    let y = c * exact::prime_power(2, -ip);
    let mut lo = fixed(&y, false);
    let mut hi = fixed(&y, true);
    let two = BigUint::from(2u32) << WORK_BITS;
    let mut frac = BigUint::zero();
    let mut bits = 0u32;
    while bits < LOG_BITS {
        lo = mul_fixed(&lo, &lo, false);
        hi = mul_fixed(&hi, &hi, true);
        let bit = if lo >= two {
            true
        } else if hi < two {
            false
        } else {
            break;
        };
        frac <<= 1;
        if bit {
            frac += 1u32;
            lo >>= 1;
            hi = (hi + 1u32) >> 1;
        }
        bits += 1;
    }
    let den = BigInt::one() << bits;
    let base = Rational::from_integer(BigInt::from(ip));
    let low = &base + Rational::new(BigInt::from(frac.clone()), den.clone());
    let high = base + Rational::new(BigInt::from(frac + 1u32), den);
    (low, high)
}

/// Bracket of `α = 1/log2 C`, exact when `C` is an integral power of two.
pub fn rate_exponent(c: &Rational) -> Result<ExponentBound> {
    if exact::cmp(c, &Rational::one()).is_le() {
        return Err(Error::invalid(format!("C = {c} must exceed 1")));
    }
    if let Some(j) = power_of_two(c) {
        return Ok(ExponentBound::exact(exact::rat(1, j as i64)));
    }
    let (l, u) = log2_bracket(c);
    if l.is_zero() {
        return Err(Error::invalid(format!("C = {c} is too close to 1 to bracket log2 C")));
    }
    Ok(ExponentBound {
        lower: u.recip(),
        upper: l.recip(),
    }
    .round_outward())
}

/// `k^{1/j}` bracketed in fixed point, exact for perfect powers.
fn root_bracket(k: u64, j: u64) -> ExponentBound {
    let kb = BigUint::from(k);
    let j32 = u32::try_from(j).unwrap_or(u32::MAX);
    let r = kb.nth_root(j32);
    if r.pow(j32) == kb {
        return ExponentBound::exact(Rational::from_integer(BigInt::from(r)));
    }
    let wide = &kb << (WORK_BITS * j);
    let lo = wide.nth_root(j32);
    ExponentBound {
        lower: from_fixed(&lo),
        upper: from_fixed(&(lo + 1u32)),
    }
}

/// `k^a` for dyadic `a = m / 2^BOUND_BITS >= 0`, rounded `ceil`-ward or down.
fn dyadic_power(k: u64, a: &Rational, ceil: bool) -> Rational {
    let unit = BigInt::one() << BOUND_BITS;
    let m = (a * Rational::from_integer(unit.clone())).to_integer();
    let (whole, frac) = m.div_rem(&unit);
    let whole = u64::try_from(&whole).expect("rate exponents are small");
    let frac = exact::to_biguint(&frac);
    let mut acc = BigUint::from(k).pow(whole as u32) << WORK_BITS;
    let mut root = BigUint::from(k) << WORK_BITS;
    for i in 1..=BOUND_BITS {
        root = sqrt_fixed(&root, ceil);
        if frac.bit(u64::from(BOUND_BITS - i)) {
            acc = mul_fixed(&acc, &root, ceil);
        }
    }
    from_fixed(&acc)
}

/// The exponent `(ρ/2) k^{1/log2 C}` of the stretched-exponential rate.
///
/// Exact when `C = 2^j` and `k` is a perfect `j`-th power (in particular
/// for `C = 2` or `k = 1`); otherwise an interval rounded outward to
/// denominator `2^20`.
pub fn dichotomy_bound(c: &Rational, rho: &Rational, k: u64) -> Result<ExponentBound> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let alpha = rate_exponent(c)?;
    let half_rho = rho / exact::int(2);
    if k == 1 {
        return Ok(ExponentBound::exact(half_rho));
    }
    let power = match power_of_two(c) {
        Some(j) => root_bracket(k, j),
        None => ExponentBound {
            lower: dyadic_power(k, &alpha.lower, false),
            upper: dyadic_power(k, &alpha.upper, true),
        },
    };
    Ok(power.scale(&half_rho).round_outward())
}

/// One level of the cascade: `E(K^s(m_0)) <= p^{-exponent}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeStep {
    pub s: u32,
    /// `K^s(m_0)`, `None` once it leaves the `u64` range.
    pub index: Option<u64>,
    pub r: BigUint,
    pub exponent: Rational,
}

/// The recurrence, the iterated jump indices and the exponents they carry.
#[derive(Clone, Debug)]
pub struct DichotomyTrace {
    pub rho: Rational,
    pub m0: u64,
    pub jump: JumpSpec,
    pub steps: Vec<CascadeStep>,
}

impl DichotomyTrace {
    /// True when every exponent equals `ρ r_s`.
    pub fn matches_recurrence(&self) -> bool {
        self.steps
            .iter()
            .all(|st| st.exponent == &self.rho * Rational::from_integer(BigInt::from(st.r.clone())))
    }
}

/// Feeds `E(m_0) <= p^{-3ρ}` through `E(K(n)) <= p^{2ρ} E(n)^2` along
/// `n = K^s(m_0)`.
pub fn dichotomy_cascade(rho: &Rational, k: &JumpSpec, m0: u64, s_max: u32) -> Result<DichotomyTrace> {
    if !rho.is_positive() {
        return Err(Error::invalid("rho exponent must be positive"));
    }
    let rs = dichotomy_recurrence(s_max);
    let mut steps = Vec::with_capacity(rs.len());
    let mut index = Some(m0);
    let mut exponent = rho * exact::int(3);
    for (s, r) in rs.into_iter().enumerate() {
        steps.push(CascadeStep {
            s: s as u32,
            index,
            r,
            exponent: exponent.clone(),
        });
        exponent = exponent * exact::int(2) - rho * exact::int(2);
        index = match index.map(|n| k.eval(n)) {
            Some(Ok(v)) => Some(v),
            Some(Err(Error::Overflow(_))) | None => None,
            Some(Err(e)) => return Err(e),
        };
    }
    Ok(DichotomyTrace {
        rho: rho.clone(),
        m0,
        jump: k.clone(),
        steps,
    })
}

/// Pairs `(n, m)` breaking `E(h(n, m)) <= p^{2ρ} E(n) E(m)`.
///
/// `e[i]` holds `E(i + 1)` and must be nonincreasing.
pub fn product_inequality_check<H>(e: &[AbsValue], pair_jump: H, rho: &Rational, pairs: &[(u64, u64)]) -> Result<Vec<(u64, u64)>>
where
    H: Fn(u64, u64) -> u64,
{
    if let Some(i) = e.windows(2).position(|w| w[1] > w[0]) {
        return Err(Error::invalid(format!("deviations increase at n = {}", i + 2)));
    }
    let limit = e.len() as u64;
    let at = |n: u64| -> Result<&AbsValue> {
        if n == 0 || n > limit {
            return Err(Error::OutOfRange { index: n, limit });
        }
        Ok(&e[(n - 1) as usize])
    };
    let factor = AbsValue::from_exponent(-(rho * exact::int(2)));
    let mut out = Vec::new();
    for &(n, m) in pairs {
        let lhs = at(pair_jump(n, m))?;
        let rhs = factor.mul(at(n)?).mul(at(m)?);
        if lhs > &rhs {
            out.push((n, m));
        }
    }
    Ok(out)
}
