use std::borrow::Cow;

use num_traits::Signed;

use super::sequence::{JumpSpec, Sequence, SequenceSpec};
use crate::exact::{self, Rational};
use crate::{Error, Result};

/// `h'(n) = max_{1 <= k <= n} h(k) + n`.
pub fn sanitize_jump(h: &JumpSpec) -> JumpSpec {
    JumpSpec::Sanitized(Box::new(h.clone()))
}

/// One constant stretch `ξ_n = value` for `n` in `[start, next start)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plateau {
    pub index: usize,
    /// `m_k`, or `None` past the `u64` range.
    pub start: Option<u64>,
    pub value: Rational,
}

/// The plateau sequence `ξ` built from `ε` and `h`.
///
/// Checkpoints are `m_0 = 1`, `m_k = h'(m_{k-1})`; plateau values are
/// `β_0 = ε_1`, `β_k = max(ε_{m_k}, β_{k-1}/2)`, and `ξ_n = β_k` on
/// `[m_k, m_{k+1})`. Enough plateaus are stored that `ξ` is defined on the
/// horizon and at `h(n)` for every `n` up to it.
#[derive(Clone, Debug)]
pub struct RegularizedSequence {
    eps: SequenceSpec,
    jump: JumpSpec,
    sanitized: JumpSpec,
    horizon: u64,
    starts: Vec<u64>,
    values: Vec<Rational>,
    /// First index past the last stored plateau; `None` when it exceeds `u64`.
    end: Option<u64>,
}

/// `β_k` from `β_{k-1}` at checkpoint `m`.
///
/// When some `ε_N <= β_{k-1}/2` with `N <= m`, monotonicity settles the max
/// without evaluating `ε_m`, which may sit at an astronomically large index.
fn next_value(eps: &SequenceSpec, prev: &Rational, m: u64) -> Result<Rational> {
    let half = prev / exact::int(2);
    let settle = eps.first_index_at_most(&half)?;
    if settle <= m {
        Ok(half)
    } else {
        eps.value(m)
    }
}

fn next_start(sanitized: &JumpSpec, m: u64) -> Result<Option<u64>> {
    match sanitized.eval(m) {
        Ok(v) => Ok(Some(v)),
        Err(Error::Overflow(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn regularize(eps: &SequenceSpec, h: &JumpSpec, horizon: u64) -> Result<RegularizedSequence> {
    if horizon == 0 {
        return Err(Error::invalid("horizon must be at least 1"));
    }
    let sanitized = sanitize_jump(h);
    let mut starts = vec![1u64];
    let mut values = vec![eps.value(1)?];
    let end = loop {
        let last = *starts.last().expect("nonempty");
        let Some(next) = next_start(&sanitized, last)? else {
            break None;
        };
        // Once a plateau starts past the horizon it is the last one needed:
        // for n <= horizon, h(n) <= h'(n) < h'(that start).
        if starts.len() >= 2 && last > horizon {
            break Some(next);
        }
        let value = next_value(eps, values.last().expect("nonempty"), next)?;
        starts.push(next);
        values.push(value);
    };
    Ok(RegularizedSequence {
        eps: eps.clone(),
        jump: h.clone(),
        sanitized,
        horizon,
        starts,
        values,
        end,
    })
}

impl RegularizedSequence {
    pub fn eps(&self) -> &SequenceSpec {
        &self.eps
    }

    pub fn jump(&self) -> &JumpSpec {
        &self.jump
    }

    pub fn sanitized_jump(&self) -> &JumpSpec {
        &self.sanitized
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn checkpoints(&self) -> &[u64] {
        &self.starts
    }

    pub fn plateau_values(&self) -> &[Rational] {
        &self.values
    }

    /// Exclusive end of the range where `ξ` is known; `None` means past `u64`.
    pub fn covered_until(&self) -> Option<u64> {
        self.end
    }

    pub fn plateau_of(&self, n: u64) -> Result<usize> {
        let limit = self.end.map_or(u64::MAX, |e| e - 1);
        if n == 0 || n > limit {
            return Err(Error::OutOfRange { index: n, limit });
        }
        Ok(self.starts.partition_point(|&m| m <= n) - 1)
    }

    pub fn xi(&self, n: u64) -> Result<&Rational> {
        Ok(&self.values[self.plateau_of(n)?])
    }

    pub fn plateaus(&self) -> impl Iterator<Item = Plateau> + '_ {
        self.starts
            .iter()
            .zip(&self.values)
            .enumerate()
            .map(|(index, (&start, value))| Plateau {
                index,
                start: Some(start),
                value: value.clone(),
            })
    }

    /// The first plateau with value strictly below `delta`, computing further
    /// checkpoints past the stored ones as needed.
    ///
    /// Checkpoints past `u64` are reported as `None`; their values stay exact
    /// as long as `ε` reaches `β_{k-1}/2` at an index inside the `u64` range.
    pub fn plateau_below(&self, delta: &Rational, max_plateaus: usize) -> Result<Plateau> {
        if !delta.is_positive() {
            return Err(Error::invalid("threshold must be positive"));
        }
        if let Some(p) = self.plateaus().find(|p| exact::cmp(&p.value, delta).is_lt()) {
            return Ok(p);
        }
        let mut index = self.starts.len() - 1;
        let mut value = self.values[index].clone();
        let mut start = self.end;
        while index < max_plateaus {
            value = match start {
                Some(m) => next_value(&self.eps, &value, m)?,
                None => {
                    let half = &value / exact::int(2);
                    match self.eps.first_index_at_most(&half) {
                        Ok(_) => half,
                        Err(Error::Overflow(_)) => {
                            return Err(Error::overflow("cannot evaluate the rate past the u64 index range"))
                        }
                        Err(e) => return Err(e),
                    }
                }
            };
            index += 1;
            if exact::cmp(&value, delta).is_lt() {
                return Ok(Plateau { index, start, value });
            }
            start = match start {
                Some(m) => next_start(&self.sanitized, m)?,
                None => None,
            };
        }
        Err(Error::invalid(format!("no plateau below {delta} within {max_plateaus} plateaus")))
    }
}

impl Sequence for RegularizedSequence {
    fn term(&self, n: u64) -> Result<Cow<'_, Rational>> {
        self.xi(n).map(Cow::Borrowed)
    }
}

/// `ξ_n <= C ξ_{K(n+1)-1}` for every `n` in `[1, range]`.
pub fn check_jump_condition<S: Sequence + ?Sized>(xi: &S, k: &JumpSpec, c: &Rational, range: u64) -> Result<bool> {
    if !c.is_positive() {
        return Err(Error::invalid("the constant C must be positive"));
    }
    let wired = JumpSpec::shifted(k.clone());
    for n in 1..=range {
        let lhs = xi.term(n)?;
        let rhs = c * xi.term(wired.eval(n)?)?.as_ref();
        if exact::cmp(&lhs, &rhs).is_gt() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sample pairs `(i, n)` breaking `E(x_i, A_n) <= D ||x_i|| ξ_n`.
///
/// Each sample is `(||x||, [E(x, A_1), E(x, A_2), ...])`.
pub fn uniform_bound_violations<S: Sequence + ?Sized>(
    samples: &[(Rational, Vec<Rational>)],
    xi: &S,
    d: &Rational,
) -> Result<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    for (i, (norm, errors)) in samples.iter().enumerate() {
        for (j, e) in errors.iter().enumerate() {
            let n = j as u64 + 1;
            let bound = d * norm * xi.term(n)?.as_ref();
            if exact::cmp(e, &bound).is_gt() {
                out.push((i, n));
            }
        }
    }
    Ok(out)
}
