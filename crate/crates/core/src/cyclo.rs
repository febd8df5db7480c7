//! Primitive `p^n`-th roots of unity `σ_n` in `C_p`, handled through their
//! minimal polynomials: degrees, distances, the separation constant `c_0`
//! and Krasner-style lower bounds on approximation by algebraic elements of
//! smaller degree.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::exact::{self, rat, Rational};
use crate::padic::{AbsValue, Prime, Radius};
use crate::poly::{self, PadicPoly};
use crate::{Error, Result};

/// Largest degree for which a cyclotomic polynomial is materialised.
pub const MAX_MATERIALIZED_DEGREE: u64 = 1 << 22;

/// `σ_n`, a primitive `p^n`-th root of unity, identified by `(p, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnitySpec {
    pub prime: Prime,
    pub level: u32,
}

impl RootOfUnitySpec {
    pub fn new(prime: Prime, level: u32) -> Result<Self> {
        sigma_degree(prime, level)?;
        Ok(RootOfUnitySpec { prime, level })
    }

    pub fn degree(&self) -> u64 {
        sigma_degree(self.prime, self.level).expect("checked at construction")
    }
}

/// `[Q_p(σ_n) : Q_p] = p^n - p^{n-1}`.
pub fn sigma_degree(p: Prime, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("root of unity level must be >= 1"));
    }
    let pn = p
        .get()
        .checked_pow(n)
        .ok_or_else(|| Error::overflow(format!("{p}^{n}")))?;
    Ok(pn - pn / p.get())
}

/// `g(t) = h(t^{p^{n-1}})` with `h(t) = 1 + t + ... + t^{p-1}`.
pub fn cyclotomic(p: Prime, n: u32) -> Result<PadicPoly> {
    let degree = sigma_degree(p, n)?;
    if degree > MAX_MATERIALIZED_DEGREE {
        return Err(Error::overflow(format!(
            "cyclotomic polynomial of degree {degree} exceeds {MAX_MATERIALIZED_DEGREE}"
        )));
    }
    let h = PadicPoly::new(p, vec![Rational::one(); p.get() as usize]);
    let k = p.get().pow(n - 1) as usize;
    h.compose_power(k)
}

/// `|σ_n - 1| = p^{-1/(p^n - p^{n-1})}`.
pub fn dist_to_one(p: Prime, n: u32) -> Result<AbsValue> {
    let d = sigma_degree(p, n)?;
    Ok(AbsValue::from_exponent(Rational::new(1.into(), d.into())))
}

/// Reads `|σ - 1|` off the Newton polygon of `g(t + 1)`, whose roots are
/// `σ - 1` over all conjugates `σ`, and also requires `g(t + 1)` to be
/// Eisenstein.
pub fn verify_dist_via_newton(p: Prime, n: u32) -> Result<bool> {
    let degree = sigma_degree(p, n)?;
    let expected = dist_to_one(p, n)?;
    let shifted = cyclotomic(p, n)?.shift(&Rational::one());
    let vals = poly::root_valuations(&shifted)?;
    let single = vals.len() == 1
        && Some(&vals[0].0) == expected.exponent()
        && vals[0].1 as u64 == degree;
    Ok(single && poly::eisenstein_check(&shifted))
}

/// `|σ_n| = 1`: the unshifted polygon is flat at height 0.
pub fn verify_unit_norm(p: Prime, n: u32) -> Result<bool> {
    let degree = sigma_degree(p, n)?;
    let vals = poly::root_valuations(&cyclotomic(p, n)?)?;
    Ok(vals == vec![(Rational::zero(), degree as usize)])
}

/// Distances from `σ_n` to its other conjugates, as `(|σ_n - τ|, count)`.
///
/// `|σ - τ| = |τ/σ - 1|` and `τ/σ = σ^{j-1}` for a unit `j != 1` mod `p^n`.
/// That root has exact order `p^k` with `k = n - v_p(j - 1)`, so the
/// distance is `|σ_k - 1|`; `φ(p^k)` conjugates sit at level `k < n` and
/// `p^{n-1}(p - 2)` at level `n`.
pub fn conjugate_distances(p: Prime, n: u32) -> Result<Vec<(AbsValue, u64)>> {
    let top = sigma_degree(p, n)?;
    let mut out = Vec::new();
    for k in 1..n {
        out.push((dist_to_one(p, k)?, sigma_degree(p, k)?));
    }
    let at_top = top - p.get().pow(n - 1);
    if at_top > 0 {
        out.push((dist_to_one(p, n)?, at_top));
    }
    Ok(out)
}

/// The smallest distance from `σ_n` to another conjugate.
///
/// For `n >= 2` the nearest conjugates are `σ_n ζ` with `ζ` a primitive
/// `p`-th root of unity, at distance `p^{-1/(p-1)}`; only for `n = 1` does
/// this coincide with `|σ_n - 1|`. `None` when `σ_n` has no other conjugate
/// (`p = 2, n = 1`).
pub fn conjugate_gap(p: Prime, n: u32) -> Result<Option<AbsValue>> {
    Ok(conjugate_distances(p, n)?.into_iter().map(|(d, _)| d).min())
}

/// `c_0 = (1/2) p^{-1/(p-1)}`, half the smallest conjugate gap over all
/// levels.
pub fn c_zero(p: Prime) -> Radius {
    Radius::new(p, rat(1, 2), Rational::new(1.into(), (p.get() - 1).into()))
        .expect("positive coefficient")
}

/// A certified lower bound on `E(σ_n, A_m)`.
///
/// Any `α` of degree `m` with `|σ_n - α| <= c_0` would be strictly closer to
/// `σ_n` than every other conjugate, forcing `Q_p(σ_n) ⊆ Q_p(α)`, which is
/// impossible when `m` is below the degree of `σ_n`. Returns `None` when
/// `m >= deg σ_n`, where `σ_n ∈ A_m` and the error is 0.
pub fn separation_lower_bound(p: Prime, n: u32, m: u64) -> Result<Option<Radius>> {
    let degree = sigma_degree(p, n)?;
    Ok((m < degree).then(|| c_zero(p)))
}

/// A distance fed to [`krasner_applies`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distance {
    Abs(AbsValue),
    Radius(Radius),
}

impl From<AbsValue> for Distance {
    fn from(v: AbsValue) -> Self {
        Distance::Abs(v)
    }
}

impl From<Radius> for Distance {
    fn from(r: Radius) -> Self {
        Distance::Radius(r)
    }
}

impl Distance {
    fn as_radius(&self, p: Prime) -> Result<Option<Radius>> {
        match self {
            Distance::Abs(v) => Ok(Radius::from_abs(p, v)),
            Distance::Radius(r) if r.prime() == p => Ok(Some(r.clone())),
            Distance::Radius(r) => Err(Error::PrimeMismatch(r.prime().get(), p.get())),
        }
    }

    pub fn compare(&self, other: &Distance, p: Prime) -> Result<Ordering> {
        match (self.as_radius(p)?, other.as_radius(p)?) {
            (None, None) => Ok(Ordering::Equal),
            (None, Some(_)) => Ok(Ordering::Less),
            (Some(_), None) => Ok(Ordering::Greater),
            (Some(a), Some(b)) => a.compare(&b),
        }
    }
}

/// Krasner's hypothesis `|b - a| < min_i |a - a_i|`, decided exactly. When
/// it holds, `K(a) ⊆ K(b)`.
pub fn krasner_applies(p: Prime, dist: impl Into<Distance>, gaps: &[AbsValue]) -> Result<bool> {
    let min_gap = gaps
        .iter()
        .min()
        .ok_or_else(|| Error::invalid("Krasner check needs at least one conjugate gap"))?;
    let ord = dist.into().compare(&Distance::Abs(min_gap.clone()), p)?;
    Ok(ord == Ordering::Less)
}

/// Everything known about `σ_n` that the approximation bound uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub spec: RootOfUnitySpec,
    pub degree: u64,
    pub dist_to_one: AbsValue,
    /// `None` when `σ_n` is rational (`p = 2, n = 1`).
    pub conjugate_gap: Option<AbsValue>,
    pub c0: Radius,
    pub bound_holds_for_degrees_below: u64,
}

impl SeparationCertificate {
    pub fn new(p: Prime, n: u32) -> Result<Self> {
        let spec = RootOfUnitySpec::new(p, n)?;
        let degree = spec.degree();
        let cert = SeparationCertificate {
            spec,
            degree,
            dist_to_one: dist_to_one(p, n)?,
            conjugate_gap: conjugate_gap(p, n)?,
            c0: c_zero(p),
            bound_holds_for_degrees_below: degree,
        };
        Ok(cert)
    }

    /// `c_0` is strictly inside the gap, so Krasner applies to anything
    /// within `c_0` of `σ_n`. Vacuously true without other conjugates.
    pub fn c0_below_gap(&self) -> Result<bool> {
        match &self.conjugate_gap {
            Some(gap) => krasner_applies(self.spec.prime, self.c0.clone(), std::slice::from_ref(gap)),
            None => Ok(true),
        }
    }
}

/// `g(1)`, which equals `p` for every level.
pub fn value_at_one(p: Prime, n: u32) -> Result<Rational> {
    Ok(cyclotomic(p, n)?.eval(&exact::int(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(pr(2), 2).unwrap(), PadicPoly::from_ints(pr(2), &[1, 0, 1]));
        assert_eq!(cyclotomic(pr(3), 1).unwrap(), PadicPoly::from_ints(pr(3), &[1, 1, 1]));
        assert_eq!(
            cyclotomic(pr(3), 2).unwrap(),
            PadicPoly::from_ints(pr(3), &[1, 0, 0, 1, 0, 0, 1])
        );
        assert!(cyclotomic(pr(3), 0).is_err());
        assert!(matches!(cyclotomic(pr(7), 9), Err(Error::Overflow(_))));
    }

    #[test]
    fn degrees() {
        assert_eq!(sigma_degree(pr(2), 3).unwrap(), 4);
        assert_eq!(sigma_degree(pr(3), 1).unwrap(), 2);
        assert_eq!(sigma_degree(pr(5), 2).unwrap(), 20);
        assert!(sigma_degree(pr(2), 64).is_err());
        for p in [3, 5, 7] {
            for n in 1..=10 {
                assert!(sigma_degree(pr(p), n).unwrap() > n as u64);
            }
        }
        // p = 2 needs n >= 3 for the degree to exceed n
        assert_eq!(sigma_degree(pr(2), 1).unwrap(), 1);
        assert_eq!(sigma_degree(pr(2), 2).unwrap(), 2);
        for n in 3..=20 {
            assert!(sigma_degree(pr(2), n).unwrap() > n as u64);
        }
    }

    #[test]
    fn distances() {
        assert_eq!(dist_to_one(pr(3), 1).unwrap(), AbsValue::from_exponent(rat(1, 2)));
        assert_eq!(dist_to_one(pr(2), 1).unwrap(), AbsValue::from_int_exponent(1));
        assert_eq!(dist_to_one(pr(3), 2).unwrap(), AbsValue::from_exponent(rat(1, 6)));
        // σ_1 = -1 for p = 2: |-1 - 1|_2 = |2|_2 = 1/2
        assert_eq!(crate::exact::vp_rational(2, &int(-2)), Some(1));
    }

    #[test]
    fn newton_route() {
        assert!(verify_dist_via_newton(pr(3), 1).unwrap());
        assert!(verify_dist_via_newton(pr(2), 2).unwrap());
        assert!(verify_dist_via_newton(pr(2), 1).unwrap());
        assert_eq!(
            cyclotomic(pr(2), 2).unwrap().shift(&int(1)),
            PadicPoly::from_ints(pr(2), &[2, 2, 1])
        );
        assert!(verify_unit_norm(pr(5), 2).unwrap());
    }

    /// Enumerates `j` in `(Z/p^n)^*`, `j != 1`, and reads off the order of
    /// `σ^{j-1}` directly.
    fn brute_force_gaps(p: u64, n: u32) -> Vec<(AbsValue, u64)> {
        let modulus = p.pow(n);
        let mut counts = std::collections::BTreeMap::new();
        for j in 2..modulus {
            if j % p == 0 {
                continue;
            }
            let mut diff = j - 1;
            let mut v = 0;
            while diff % p == 0 && v < n {
                diff /= p;
                v += 1;
            }
            let k = n - v;
            *counts.entry(k).or_insert(0u64) += 1;
        }
        counts
            .into_iter()
            .map(|(k, c)| (dist_to_one(pr(p), k).unwrap(), c))
            .collect()
    }

    #[test]
    fn gaps() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=4 {
                if p.pow(n) > 3000 {
                    continue;
                }
                assert_eq!(conjugate_distances(pr(p), n).unwrap(), brute_force_gaps(p, n), "p={p} n={n}");
                let total: u64 = conjugate_distances(pr(p), n).unwrap().iter().map(|c| c.1).sum();
                assert_eq!(total, sigma_degree(pr(p), n).unwrap() - 1);
            }
        }
        assert_eq!(conjugate_gap(pr(3), 1).unwrap(), Some(AbsValue::from_exponent(rat(1, 2))));
        assert_eq!(conjugate_gap(pr(3), 2).unwrap(), Some(AbsValue::from_exponent(rat(1, 2))));
        assert_eq!(conjugate_gap(pr(2), 2).unwrap(), Some(AbsValue::from_int_exponent(1)));
        assert_eq!(conjugate_gap(pr(2), 1).unwrap(), None);
        for p in [2, 3, 5] {
            let gaps: Vec<AbsValue> = (1..=6).filter_map(|n| conjugate_gap(pr(p), n).unwrap()).collect();
            assert!(gaps.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(gaps.iter().min().unwrap(), &AbsValue::from_exponent(rat(1, p as i64 - 1)));
        }
    }

    #[test]
    fn c0_values() {
        let c = c_zero(pr(2));
        assert_eq!(c.coefficient(), &int(1));
        assert_eq!(c.exponent(), &int(2));
        let c = c_zero(pr(3));
        assert_eq!(c.coefficient(), &rat(1, 2));
        assert_eq!(c.exponent(), &rat(1, 2));
        for p in [2, 3, 5, 7] {
            for n in 1..=5 {
                let cert = SeparationCertificate::new(pr(p), n).unwrap();
                assert!(cert.c0_below_gap().unwrap());
                if let Some(gap) = &cert.conjugate_gap {
                    assert!(gap <= &cert.dist_to_one);
                }
            }
        }
    }

    #[test]
    fn separation_bounds() {
        let b = separation_lower_bound(pr(2), 2, 1).unwrap().unwrap();
        assert_eq!(b.as_rational(), Some(rat(1, 4)));
        assert_eq!(separation_lower_bound(pr(2), 2, 2).unwrap(), None);
        let b = separation_lower_bound(pr(3), 2, 5).unwrap().unwrap();
        assert_eq!((b.coefficient(), b.exponent()), (&rat(1, 2), &rat(1, 2)));
    }

    #[test]
    fn krasner() {
        let three = pr(3);
        let gap = AbsValue::from_exponent(rat(1, 2));
        let dist = Radius::new(three, rat(1, 2), rat(1, 2)).unwrap();
        assert!(krasner_applies(three, dist, std::slice::from_ref(&gap)).unwrap());
        assert!(!krasner_applies(three, gap.clone(), std::slice::from_ref(&gap)).unwrap());
        assert!(krasner_applies(three, AbsValue::Zero, std::slice::from_ref(&gap)).unwrap());
        assert!(krasner_applies(three, AbsValue::Zero, &[]).is_err());
        let far = AbsValue::one();
        assert!(!krasner_applies(three, far, &[gap, AbsValue::from_int_exponent(2)]).unwrap());
    }

    #[test]
    fn phi_at_one() {
        for p in [2, 3, 5, 7] {
            for n in 1..=3 {
                assert_eq!(value_at_one(pr(p), n).unwrap(), int(p as i64));
            }
        }
    }
}
