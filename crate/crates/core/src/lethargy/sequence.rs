use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::exact::{self, Rational};
use crate::{Error, Result};

/// A positive sequence indexed from `n = 1`.
pub trait Sequence {
    fn term(&self, n: u64) -> Result<Cow<'_, Rational>>;
}

/// A positive, nonincreasing rate `ε_n → 0`.
///
/// Grammar: `geometric:R` (`ε_n = R^n`, `0 < R < 1`), `power:E`
/// (`ε_n = n^{-E}`, integer `E >= 1`), `table:v1,v2,...` (given values, then
/// halving from the last one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    Geometric(Rational),
    PowerLaw(u32),
    Table { values: Vec<Rational>, tail_ratio: Rational },
}

impl SequenceSpec {
    pub fn geometric(ratio: Rational) -> Result<Self> {
        if !ratio.is_positive() || ratio >= Rational::one() {
            return Err(Error::invalid(format!("geometric ratio {ratio} must lie in (0, 1)")));
        }
        Ok(SequenceSpec::Geometric(ratio))
    }

    pub fn power_law(exponent: u32) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::invalid("power-law exponent must be positive"));
        }
        Ok(SequenceSpec::PowerLaw(exponent))
    }

    /// A finite table continued geometrically by halving.
    pub fn table(values: Vec<Rational>) -> Result<Self> {
        Self::table_with_tail(values, exact::rat(1, 2))
    }

    pub fn table_with_tail(values: Vec<Rational>, tail_ratio: Rational) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("sequence table is empty"));
        }
        if values.iter().any(|v| !v.is_positive()) {
            return Err(Error::invalid("sequence values must be strictly positive"));
        }
        if values.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::invalid("sequence table must be nonincreasing"));
        }
        if !tail_ratio.is_positive() || tail_ratio >= Rational::one() {
            return Err(Error::invalid("tail ratio must lie in (0, 1)"));
        }
        Ok(SequenceSpec::Table { values, tail_ratio })
    }

    /// `ε_n` for `n >= 1`.
    pub fn value(&self, n: u64) -> Result<Rational> {
        if n == 0 {
            return Err(Error::invalid("sequences are indexed from 1"));
        }
        Ok(match self {
            SequenceSpec::Geometric(r) => exact::pow(r, n),
            SequenceSpec::PowerLaw(e) => Rational::new_raw(BigInt::one(), BigInt::from(n).pow(*e)),
            SequenceSpec::Table { values, tail_ratio } => {
                let len = values.len() as u64;
                if n <= len {
                    values[(n - 1) as usize].clone()
                } else {
                    values.last().expect("nonempty") * exact::pow(tail_ratio, n - len)
                }
            }
        })
    }

    /// `ε_1, ε_2, ...` computed incrementally.
    pub fn iter(&self) -> impl Iterator<Item = Rational> + '_ {
        let mut n = 0u64;
        let mut prev: Option<Rational> = None;
        std::iter::from_fn(move || {
            n += 1;
            let next = match (self, prev.take()) {
                (SequenceSpec::Geometric(r), Some(p)) => Rational::new_raw(p.numer() * r.numer(), p.denom() * r.denom()),
                (SequenceSpec::Table { values, tail_ratio }, Some(p)) if n > values.len() as u64 => {
                    p * tail_ratio
                }
                _ => self.value(n).expect("n >= 1"),
            };
            prev = Some(next.clone());
            Some(next)
        })
    }

    /// The smallest `n >= 1` with `ε_n <= t`.
    pub fn first_index_at_most(&self, t: &Rational) -> Result<u64> {
        if !t.is_positive() {
            return Err(Error::invalid("threshold must be positive"));
        }
        match self {
            SequenceSpec::Geometric(r) => Ok(geometric_first_index(r, t)),
            SequenceSpec::PowerLaw(e) => {
                let est = (-log2(t) / *e as f64).exp2().ceil().max(1.0);
                let mut n = if est.is_finite() && est < 1e18 {
                    est as u64
                } else {
                    return Err(Error::overflow("power-law index"));
                };
                while n > 1 && exact::cmp(&self.value(n - 1)?, t).is_le() {
                    n -= 1;
                }
                while exact::cmp(&self.value(n)?, t).is_gt() {
                    n = n.checked_add(1).ok_or_else(|| Error::overflow("power-law index"))?;
                }
                Ok(n)
            }
            SequenceSpec::Table { values, tail_ratio } => {
                if let Some(i) = values.iter().position(|v| exact::cmp(v, t).is_le()) {
                    return Ok(i as u64 + 1);
                }
                let last = values.last().expect("nonempty");
                Ok(values.len() as u64 + geometric_first_index(tail_ratio, &(t / last)))
            }
        }
    }
}

/// Smallest `n >= 1` with `r^n <= t`, for `0 < r < 1`, `t > 0`.
fn geometric_first_index(r: &Rational, t: &Rational) -> u64 {
    if exact::cmp(r, t).is_le() {
        return 1;
    }
    let est = (log2(t) / log2(r)).ceil();
    let mut n = if est.is_finite() && est >= 1.0 { est as u64 } else { 1 };
    while n > 1 && exact::cmp(&exact::pow(r, n - 1), t).is_le() {
        n -= 1;
    }
    while exact::cmp(&exact::pow(r, n), t).is_gt() {
        n += 1;
    }
    n
}

/// `log2` estimate of a positive rational; used only to seed exact searches.
fn log2(x: &Rational) -> f64 {
    fn big_log2(n: &BigInt) -> f64 {
        let bits = n.bits();
        if bits <= 60 {
            return n.to_f64().expect("small").log2();
        }
        let shift = bits - 60;
        let top: BigInt = n >> shift;
        top.to_f64().expect("60 bits").log2() + shift as f64
    }
    big_log2(x.numer()) - big_log2(x.denom())
}

impl Sequence for SequenceSpec {
    fn term(&self, n: u64) -> Result<Cow<'_, Rational>> {
        self.value(n).map(Cow::Owned)
    }
}

impl FromStr for SequenceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        match kind.trim() {
            "geometric" => SequenceSpec::geometric(exact::parse_rational(arg)?),
            "power" => {
                let e = exact::parse_rational(arg)?;
                if !e.is_integer() {
                    return Err(Error::invalid(format!(
                        "power-law exponent {e} must be an integer so that n^-E stays rational"
                    )));
                }
                let e = e
                    .to_integer()
                    .to_u32()
                    .ok_or_else(|| Error::invalid(format!("power-law exponent {e} out of range")))?;
                SequenceSpec::power_law(e)
            }
            "table" => SequenceSpec::table(
                arg.split(',')
                    .map(exact::parse_rational)
                    .collect::<Result<Vec<_>>>()?,
            ),
            other => Err(Error::invalid(format!("unknown sequence kind {other:?}"))),
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Geometric(r) => write!(f, "geometric:{r}"),
            SequenceSpec::PowerLaw(e) => write!(f, "power:{e}"),
            SequenceSpec::Table { values, .. } => {
                let vals: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "table:{}", vals.join(","))
            }
        }
    }
}

/// A map `K: N -> N` with `K(n) >= n`.
///
/// Grammar: `linear:C` (`K(n) = Cn`), `square` (`K(n) = n^2`),
/// `table:k1,k2,...` (given values, then the identity), `shift-of:SPEC`
/// (`h(n) = K(n+1) - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JumpSpec {
    Linear(u64),
    Square,
    Table { values: Vec<u64>, tail: Box<JumpSpec> },
    /// `h(n) = K(n + 1) - 1`, the wiring that turns a jump function into the
    /// index map of the jump-compatibility condition.
    Shifted(Box<JumpSpec>),
    /// `h'(n) = max_{1 <= k <= n} h(k) + n`, strictly increasing with
    /// `h'(n) > n`.
    Sanitized(Box<JumpSpec>),
}

impl JumpSpec {
    pub fn linear(c: u64) -> Result<Self> {
        if c == 0 {
            return Err(Error::invalid("linear jump needs C >= 1"));
        }
        Ok(JumpSpec::Linear(c))
    }

    /// Tabulated values, continued by the identity.
    pub fn table(values: Vec<u64>) -> Result<Self> {
        Self::table_with_tail(values, JumpSpec::Linear(1))
    }

    pub fn table_with_tail(values: Vec<u64>, tail: JumpSpec) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("jump table is empty"));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(i, v)| **v < *i as u64 + 1) {
            return Err(Error::invalid(format!("jump table value K({}) = {v} is below its index", i + 1)));
        }
        Ok(JumpSpec::Table {
            values,
            tail: Box::new(tail),
        })
    }

    pub fn shifted(base: JumpSpec) -> Self {
        JumpSpec::Shifted(Box::new(base))
    }

    pub fn eval(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::invalid("jump functions are indexed from 1"));
        }
        let v = match self {
            JumpSpec::Linear(c) => n.checked_mul(*c).ok_or_else(|| Error::overflow(format!("{c}*{n}")))?,
            JumpSpec::Square => n.checked_mul(n).ok_or_else(|| Error::overflow(format!("{n}^2")))?,
            JumpSpec::Table { values, tail } => match values.get((n - 1) as usize) {
                Some(v) => *v,
                None => tail.eval(n)?,
            },
            JumpSpec::Shifted(base) => {
                let next = n.checked_add(1).ok_or_else(|| Error::overflow("n + 1"))?;
                base.eval(next)? - 1
            }
            JumpSpec::Sanitized(base) => base
                .range_max(1, n)?
                .checked_add(n)
                .ok_or_else(|| Error::overflow("sanitized jump"))?,
        };
        if v < n {
            return Err(Error::invalid(format!("jump value K({n}) = {v} is below its index")));
        }
        Ok(v)
    }

    /// `max_{lo <= k <= hi} K(k)`.
    pub fn range_max(&self, lo: u64, hi: u64) -> Result<u64> {
        if lo == 0 || lo > hi {
            return Err(Error::invalid(format!("empty jump range [{lo}, {hi}]")));
        }
        match self {
            JumpSpec::Linear(_) | JumpSpec::Square | JumpSpec::Sanitized(_) => self.eval(hi),
            JumpSpec::Table { values, tail } => {
                let len = values.len() as u64;
                let mut best = 0;
                if lo <= len {
                    let end = hi.min(len);
                    best = *values[(lo - 1) as usize..end as usize].iter().max().expect("nonempty");
                }
                if hi > len {
                    best = best.max(tail.range_max(lo.max(len + 1), hi)?);
                }
                Ok(best)
            }
            JumpSpec::Shifted(base) => {
                let lo1 = lo.checked_add(1).ok_or_else(|| Error::overflow("range"))?;
                let hi1 = hi.checked_add(1).ok_or_else(|| Error::overflow("range"))?;
                Ok(base.range_max(lo1, hi1)? - 1)
            }
        }
    }
}

impl FromStr for JumpSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("shift-of:") {
            return Ok(JumpSpec::shifted(rest.parse()?));
        }
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let int = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad jump value {t:?}")))
        };
        match kind {
            "linear" => JumpSpec::linear(int(arg)?),
            "square" if arg.is_empty() => Ok(JumpSpec::Square),
            "table" => JumpSpec::table(arg.split(',').map(int).collect::<Result<Vec<_>>>()?),
            other => Err(Error::invalid(format!("unknown jump kind {other:?}"))),
        }
    }
}

impl fmt::Display for JumpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JumpSpec::Linear(c) => write!(f, "linear:{c}"),
            JumpSpec::Square => write!(f, "square"),
            JumpSpec::Table { values, .. } => {
                let vals: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "table:{}", vals.join(","))
            }
            JumpSpec::Shifted(base) => write!(f, "shift-of:{base}"),
            JumpSpec::Sanitized(base) => write!(f, "sanitized({base})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn parse_sequences() {
        assert_eq!("geometric:1/2".parse::<SequenceSpec>().unwrap(), SequenceSpec::Geometric(rat(1, 2)));
        assert_eq!("power:2".parse::<SequenceSpec>().unwrap(), SequenceSpec::PowerLaw(2));
        assert!("power:1/2".parse::<SequenceSpec>().is_err());
        assert!("geometric:3/2".parse::<SequenceSpec>().is_err());
        assert!("table:1,2".parse::<SequenceSpec>().is_err());
        assert!("table:1,0".parse::<SequenceSpec>().is_err());
        assert!("wobble:1".parse::<SequenceSpec>().is_err());
        let t: SequenceSpec = "table:1,1/2,1/2".parse().unwrap();
        assert_eq!(t.value(3).unwrap(), rat(1, 2));
        assert_eq!(t.value(5).unwrap(), rat(1, 8));
        assert_eq!(t.to_string(), "table:1,1/2,1/2");
    }

    #[test]
    fn values_and_iter_agree() {
        for spec in ["geometric:2/3", "power:3", "table:1,1/3,1/7"] {
            let s: SequenceSpec = spec.parse().unwrap();
            for (i, v) in s.iter().take(40).enumerate() {
                assert_eq!(v, s.value(i as u64 + 1).unwrap(), "{spec} at {}", i + 1);
            }
        }
        assert!(SequenceSpec::PowerLaw(1).value(0).is_err());
        assert_eq!(SequenceSpec::PowerLaw(2).value(10).unwrap(), rat(1, 100));
    }

    #[test]
    fn first_index_matches_scan() {
        let specs: Vec<SequenceSpec> = ["geometric:2/3", "geometric:1/10", "power:1", "power:2", "table:1,1/3,1/7"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let thresholds = [rat(1, 1), rat(1, 2), rat(1, 3), rat(1, 1000), rat(7, 100000), int(5)];
        for s in &specs {
            for t in &thresholds {
                let scan = (1..).find(|n| s.value(*n).unwrap() <= *t).unwrap();
                assert_eq!(s.first_index_at_most(t).unwrap(), scan, "{s} <= {t}");
            }
        }
    }

    #[test]
    fn jumps() {
        let sq: JumpSpec = "square".parse().unwrap();
        assert_eq!(sq.eval(5).unwrap(), 25);
        let sh: JumpSpec = "shift-of:square".parse().unwrap();
        assert_eq!(sh.eval(3).unwrap(), 15);
        let lin: JumpSpec = "linear:3".parse().unwrap();
        assert_eq!(lin.eval(4).unwrap(), 12);
        assert!("linear:0".parse::<JumpSpec>().is_err());
        assert!("table:1,1".parse::<JumpSpec>().is_err());
        let t: JumpSpec = "table:5,2,9".parse().unwrap();
        assert_eq!(t.eval(4).unwrap(), 4);
        assert_eq!(t.range_max(1, 3).unwrap(), 9);
        assert_eq!(t.range_max(2, 2).unwrap(), 2);
        assert_eq!(t.range_max(2, 7).unwrap(), 9);
        let st = JumpSpec::shifted(t);
        assert_eq!(st.range_max(1, 1).unwrap(), 1);
        assert_eq!(st.range_max(1, 2).unwrap(), 8);
        assert!(JumpSpec::Square.eval(u64::MAX).is_err());
        assert_eq!("shift-of:linear:2".parse::<JumpSpec>().unwrap().to_string(), "shift-of:linear:2");
    }
}
