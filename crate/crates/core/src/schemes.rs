//! Concrete approximation schemes.
//!
//! Model A is the space of null sequences over `Q_p` with `A_n` the vectors
//! supported on the first `n` coordinates. Model B approximates elements of
//! `C_p` by algebraic numbers of bounded degree, with roots of unity as
//! witnesses.

use num_bigint::BigInt;
use num_traits::One;

use crate::cyclo::{self, RootOfUnitySpec, SeparationCertificate};
use crate::exact::{self, Rational};
use crate::lethargy::SequenceSpec;
use crate::padic::{AbsValue, PadicNumber, Prime, Radius};
use crate::{Error, Result};

/// A null sequence over `Q_p` known through the absolute values of its
/// coordinates.
///
/// Listed coordinates are nonzero powers of `p`. Every unlisted coordinate
/// has absolute value at most `tail_cap`, and `tail_cap` never exceeds a
/// listed value, so norms and errors are determined by the listed part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C0Vector {
    prime: Prime,
    coords: Vec<(u64, AbsValue)>,
    tail_cap: AbsValue,
}

impl C0Vector {
    pub fn new(prime: Prime, mut coords: Vec<(u64, AbsValue)>, tail_cap: AbsValue) -> Result<Self> {
        coords.retain(|(_, v)| !v.is_zero());
        coords.sort_by_key(|(i, _)| *i);
        if coords.iter().any(|(i, _)| *i == 0) {
            return Err(Error::invalid("coordinates are indexed from 1"));
        }
        if coords.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::invalid("repeated coordinate index"));
        }
        let on_lattice = |v: &AbsValue| v.exponent().is_none_or(|q| q.is_integer());
        if !coords.iter().all(|(_, v)| on_lattice(v)) || !on_lattice(&tail_cap) {
            return Err(Error::invalid("coordinate absolute values must lie in p^Z"));
        }
        if coords.iter().any(|(_, v)| v < &tail_cap) {
            return Err(Error::invalid("tail cap exceeds a listed coordinate"));
        }
        Ok(C0Vector { prime, coords, tail_cap })
    }

    /// A finitely supported vector.
    pub fn finite(prime: Prime, coords: Vec<(u64, AbsValue)>) -> Result<Self> {
        Self::new(prime, coords, AbsValue::Zero)
    }

    /// Projects digit-level coordinates onto their absolute values.
    pub fn from_padic(coords: &[(u64, PadicNumber)]) -> Result<Self> {
        let prime = coords
            .first()
            .map(|(_, x)| x.prime())
            .ok_or_else(|| Error::invalid("no coordinates"))?;
        if let Some((_, x)) = coords.iter().find(|(_, x)| x.prime() != prime) {
            return Err(Error::PrimeMismatch(prime.get(), x.prime().get()));
        }
        Self::finite(prime, coords.iter().map(|(i, x)| (*i, x.abs())).collect())
    }

    /// The unit vector `e_k`.
    pub fn basis(prime: Prime, k: u64) -> Result<Self> {
        Self::finite(prime, vec![(k, AbsValue::one())])
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn coords(&self) -> &[(u64, AbsValue)] {
        &self.coords
    }

    pub fn tail_cap(&self) -> &AbsValue {
        &self.tail_cap
    }

    /// Largest listed index, 0 when nothing is listed.
    pub fn listed_until(&self) -> u64 {
        self.coords.last().map_or(0, |(i, _)| *i)
    }

    pub fn norm(&self) -> AbsValue {
        self.coords
            .iter()
            .map(|(_, v)| v.clone())
            .max()
            .unwrap_or_else(|| self.tail_cap.clone())
    }

    pub fn in_unit_ball(&self) -> bool {
        self.norm() <= AbsValue::one()
    }
}

/// `E(x, A_n) = sup_{k > n} |x_k|`, attained by truncating `x` to its first
/// `n` coordinates.
///
/// Fails when `n` reaches past the listed coordinates of a vector whose
/// tail is only known up to a cap.
pub fn model_a_error(x: &C0Vector, n: u64) -> Result<AbsValue> {
    if let Some(v) = x.coords.iter().filter(|(i, _)| *i > n).map(|(_, v)| v).max() {
        return Ok(v.clone());
    }
    if x.tail_cap.is_zero() {
        return Ok(AbsValue::Zero);
    }
    Err(Error::OutOfRange {
        index: n,
        limit: x.listed_until().saturating_sub(1),
    })
}

/// `E(B(X), A_n)` in Model A with the vector attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelADeviation {
    pub n: u64,
    pub deviation: AbsValue,
    pub witness: C0Vector,
    /// `p_K = p^{-1}`, the floor guaranteed for closed linear schemes.
    pub floor: AbsValue,
}

impl ModelADeviation {
    pub fn floor_holds(&self) -> bool {
        self.deviation >= self.floor
    }
}

/// The unit ball is never closer than `1` to `A_n`: `e_{n+1}` sits at
/// distance exactly 1, and no vector of norm at most 1 can be farther.
pub fn model_a_deviation(prime: Prime, n: u64) -> Result<ModelADeviation> {
    let k = n.checked_add(1).ok_or_else(|| Error::overflow("n + 1"))?;
    let witness = C0Vector::basis(prime, k)?;
    let deviation = model_a_error(&witness, n)?;
    Ok(ModelADeviation {
        n,
        deviation,
        witness,
        floor: AbsValue::from_int_exponent(1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapiroRow {
    pub n: u64,
    pub eps: Rational,
    /// `q_n` with `E(x, A_n) = p^{-q_n}`.
    pub error_exponent: i64,
    /// `E(x, A_n) / ε_n`.
    pub ratio: Rational,
}

/// A vector whose errors beat every constant multiple of `ε`.
#[derive(Clone, Debug)]
pub struct ShapiroWitness {
    pub prime: Prime,
    pub eps: SequenceSpec,
    pub vector: C0Vector,
    pub rows: Vec<ShapiroRow>,
}

impl ShapiroWitness {
    /// First `n` with `E(x, A_n) / ε_n > bound`.
    pub fn first_index_exceeding(&self, bound: &Rational) -> Option<u64> {
        self.rows
            .iter()
            .find(|r| exact::cmp(&r.ratio, bound).is_gt())
            .map(|r| r.n)
    }
}

/// Builds `x` with `|x_1| = 1` and `|x_{n+1}| = p^{-q_n}`, where
/// `q_n = max(q_{n-1}, min{q : p^{2q} ε_n >= 1})`.
///
/// Then `E(x, A_n) = p^{-q_n} >= sqrt(ε_n) / p`, so the ratio to `ε_n` is
/// unbounded.
pub fn shapiro_witness(eps: &SequenceSpec, prime: Prime, horizon: u64) -> Result<ShapiroWitness> {
    if horizon < 2 {
        return Err(Error::invalid("horizon must be at least 2"));
    }
    let mut coords = vec![(1, AbsValue::one())];
    let mut rows = Vec::with_capacity(horizon as usize);
    let step = BigInt::from(prime.get() * prime.get());
    let mut q = 0i64;
    // p^{2q} and p^q, kept in step with q
    let mut square = BigInt::one();
    let mut power = BigInt::one();
    for (e, n) in eps.iter().zip(1..=horizon) {
        while &square * e.numer() < *e.denom() {
            q += 1;
            square *= &step;
            power *= prime.get();
        }
        coords.push((n + 1, AbsValue::from_int_exponent(q)));
        let ratio = Rational::new(e.denom().clone(), e.numer() * &power);
        rows.push(ShapiroRow {
            n,
            eps: e,
            error_exponent: q,
            ratio,
        });
    }
    let tail = AbsValue::from_int_exponent(q);
    Ok(ShapiroWitness {
        prime,
        eps: eps.clone(),
        vector: C0Vector::new(prime, coords, tail)?,
        rows,
    })
}

/// `A_n + A_m ⊆ A_{nm}` in the degree scheme, so `K(n) = n^2`.
pub fn cp_jump(n: u64, m: u64) -> Result<u64> {
    if n == 0 || m == 0 {
        return Err(Error::invalid("scheme indices start at 1"));
    }
    n.checked_mul(m).ok_or_else(|| Error::overflow(format!("{n}*{m}")))
}

/// A lower bound on `E(σ_ℓ, A_m)` and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifiedBound {
    /// `E >= c_0` by Krasner's lemma, valid because `m < deg σ_ℓ`.
    Krasner(Radius),
    /// `σ_ℓ ∈ A_m`, so `E = 0`.
    ExactZero,
}

impl CertifiedBound {
    pub fn route(&self) -> &'static str {
        match self {
            CertifiedBound::Krasner(_) => "krasner",
            CertifiedBound::ExactZero => "exact",
        }
    }
}

pub fn cp_bound(p: Prime, level: u32, m: u64) -> Result<CertifiedBound> {
    if m == 0 {
        return Err(Error::invalid("degree bound m must be at least 1"));
    }
    Ok(match cyclo::separation_lower_bound(p, level, m)? {
        Some(r) => CertifiedBound::Krasner(r),
        None => CertifiedBound::ExactZero,
    })
}

/// One level of the Model B table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRow {
    pub witness: RootOfUnitySpec,
    pub degree: u64,
    /// Bound for every `m` with `1 <= m < bound_holds_below`; exact zero
    /// when that range is empty.
    pub bound: CertifiedBound,
    pub bound_holds_below: u64,
    pub dist_to_one: AbsValue,
    pub conjugate_gap: Option<AbsValue>,
    pub c0_below_gap: bool,
    pub newton_verified: bool,
    pub unit_norm_verified: bool,
}

impl WitnessRow {
    pub fn level(&self) -> u32 {
        self.witness.level
    }

    pub fn verified(&self) -> bool {
        self.c0_below_gap && self.newton_verified && self.unit_norm_verified
    }
}

pub fn cp_witness_table(p: Prime, max_level: u32) -> Result<Vec<WitnessRow>> {
    if max_level == 0 {
        return Err(Error::invalid("max level must be at least 1"));
    }
    (1..=max_level)
        .map(|level| {
            let cert = SeparationCertificate::new(p, level)?;
            let bound = if cert.degree > 1 {
                CertifiedBound::Krasner(cert.c0.clone())
            } else {
                CertifiedBound::ExactZero
            };
            Ok(WitnessRow {
                witness: cert.spec,
                degree: cert.degree,
                bound,
                bound_holds_below: cert.bound_holds_for_degrees_below,
                c0_below_gap: cert.c0_below_gap()?,
                newton_verified: cyclo::verify_dist_via_newton(p, level)?,
                unit_norm_verified: cyclo::verify_unit_norm(p, level)?,
                dist_to_one: cert.dist_to_one,
                conjugate_gap: cert.conjugate_gap,
            })
        })
        .collect()
}

/// `E(x, A_n) / ε_n` as the integer part of its base-`p` logarithm.
pub fn ratio_log_floor(p: Prime, ratio: &Rational) -> i64 {
    exact::floor_log(p.get(), ratio)
}

/// `10^k` as a rational.
pub fn power_of_ten(k: u32) -> Rational {
    Rational::from_integer(BigInt::from(10u32).pow(k))
}
