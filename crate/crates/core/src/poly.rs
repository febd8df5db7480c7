//! Exact polynomials over `Q` read p-adically: arithmetic, substitutions,
//! Newton polygons and the Eisenstein criterion.

use std::fmt;
use std::ops::{AddAssign, Div, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{self, Rational};
use crate::padic::Prime;
use crate::{Error, Result};

/// `a_0 + a_1 t + ... + a_d t^d` with exact rational coefficients. The
/// coefficient list never ends in a zero, so the zero polynomial has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicPoly {
    prime: Prime,
    coeffs: Vec<Rational>,
}

impl PadicPoly {
    pub fn new(prime: Prime, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PadicPoly { prime, coeffs }
    }

    pub fn from_ints(prime: Prime, coeffs: &[i64]) -> Self {
        Self::new(prime, coeffs.iter().map(|&c| exact::int(c)).collect())
    }

    pub fn zero(prime: Prime) -> Self {
        PadicPoly { prime, coeffs: Vec::new() }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn same_prime(&self, other: &PadicPoly) -> Result<()> {
        if self.prime == other.prime {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.prime.get(), other.prime.get()))
        }
    }

    pub fn add(&self, other: &PadicPoly) -> Result<PadicPoly> {
        self.same_prime(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(self.prime, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect()))
    }

    pub fn sub(&self, other: &PadicPoly) -> Result<PadicPoly> {
        self.same_prime(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(self.prime, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect()))
    }

    pub fn mul(&self, other: &PadicPoly) -> Result<PadicPoly> {
        self.same_prime(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.prime));
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(self.prime, out))
    }

    /// Horner evaluation over `Q`.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `h(t^k)`.
    pub fn compose_power(&self, k: usize) -> Result<PadicPoly> {
        if k == 0 {
            return Err(Error::invalid("compose_power needs k >= 1"));
        }
        let Some(d) = self.degree() else {
            return Ok(self.clone());
        };
        let len = d
            .checked_mul(k)
            .and_then(|n| n.checked_add(1))
            .ok_or_else(|| Error::overflow("degree of h(t^k)"))?;
        let mut out = vec![Rational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Ok(Self::new(self.prime, out))
    }

    /// `f(t + a)`.
    ///
    /// Integer polynomials shifted by an integer stay in `Z`; sparse inputs
    /// (cyclotomic polynomials) are expanded term by term with binomial rows,
    /// dense ones with the quadratic Taylor shift.
    pub fn shift(&self, a: &Rational) -> PadicPoly {
        if a.is_zero() || self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let integral = a.is_integer() && self.coeffs.iter().all(|c| c.is_integer());
        let coeffs = if integral {
            let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            shift_coeffs(&ints, &a.to_integer())
                .into_iter()
                .map(Rational::from_integer)
                .collect()
        } else {
            shift_coeffs(&self.coeffs, a)
        };
        Self::new(self.prime, coeffs)
    }

    /// `v_p(a_i)` for each coefficient, `None` for zero coefficients.
    pub fn valuations(&self) -> Vec<Option<i64>> {
        self.coeffs
            .iter()
            .map(|c| exact::vp_rational(self.prime.get(), c))
            .collect()
    }
}

fn shift_coeffs<T>(coeffs: &[T], a: &T) -> Vec<T>
where
    T: Clone + Zero + AddAssign + From<BigInt>,
    for<'x> &'x T: Mul<&'x T, Output = T> + Div<&'x T, Output = T>,
{
    let d = coeffs.len() - 1;
    let nonzero = coeffs.iter().filter(|c| !c.is_zero()).count();
    if nonzero.saturating_mul(4) < d {
        sparse_shift(coeffs, a)
    } else {
        taylor_shift(coeffs, a)
    }
}

fn taylor_shift<T>(coeffs: &[T], a: &T) -> Vec<T>
where
    T: Clone + AddAssign,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    let mut c = coeffs.to_vec();
    let d = c.len() - 1;
    for i in 0..d {
        for j in (i..d).rev() {
            let carry = a * &c[j + 1];
            c[j] += carry;
        }
    }
    c
}

/// Adds `a_k (t + a)^k` for each nonzero `a_k`; the row
/// `C(k, i) a^{k-i}` is generated downward from `i = k` with exact division.
fn sparse_shift<T>(coeffs: &[T], a: &T) -> Vec<T>
where
    T: Clone + Zero + AddAssign + From<BigInt>,
    for<'x> &'x T: Mul<&'x T, Output = T> + Div<&'x T, Output = T>,
{
    let mut out = vec![T::zero(); coeffs.len()];
    for (k, ak) in coeffs.iter().enumerate() {
        if ak.is_zero() {
            continue;
        }
        let mut term = ak.clone();
        out[k] += term.clone();
        for i in (1..=k).rev() {
            let num = T::from(BigInt::from(i));
            let den = T::from(BigInt::from(k - i + 1));
            term = &(&(&term * a) * &num) / &den;
            out[i - 1] += term.clone();
        }
    }
    out
}

impl fmt::Display for PadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// One edge of a Newton polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: (usize, Rational),
    pub end: (usize, Rational),
    pub slope: Rational,
    pub length: usize,
}

impl Segment {
    /// The valuation shared by the `length` roots this edge accounts for.
    pub fn root_valuation(&self) -> Rational {
        -self.slope.clone()
    }
}

/// Lower convex hull of the points `(i, v_p(a_i))` over nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    points: Vec<(usize, Rational)>,
    vertices: Vec<(usize, Rational)>,
    segments: Vec<Segment>,
}

impl NewtonPolygon {
    pub fn points(&self) -> &[(usize, Rational)] {
        &self.points
    }

    pub fn vertices(&self) -> &[(usize, Rational)] {
        &self.vertices
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// `(−slope, horizontal length)` per edge, in order of increasing slope.
    pub fn root_valuations(&self) -> Vec<(Rational, usize)> {
        self.segments
            .iter()
            .map(|s| (s.root_valuation(), s.length))
            .collect()
    }
}

fn cross(o: &(usize, Rational), a: &(usize, Rational), b: &(usize, Rational)) -> Rational {
    let ax = exact::int(a.0 as i64 - o.0 as i64);
    let bx = exact::int(b.0 as i64 - o.0 as i64);
    ax * (&b.1 - &o.1) - (&a.1 - &o.1) * bx
}

/// Monotone chain over abscissae with exact cross products. Collinear points
/// are dropped from the vertex list; they still lie inside segment lengths.
pub fn newton_polygon(f: &PadicPoly) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::invalid("the zero polynomial has no Newton polygon"));
    }
    let points: Vec<(usize, Rational)> = f
        .valuations()
        .into_iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, exact::int(v))))
        .collect();
    let mut hull: Vec<(usize, Rational)> = Vec::with_capacity(points.len());
    for pt in &points {
        while hull.len() >= 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], pt).is_positive() {
            hull.pop();
        }
        hull.push(pt.clone());
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].0 - w[0].0;
            Segment {
                start: w[0].clone(),
                end: w[1].clone(),
                slope: (&w[1].1 - &w[0].1) / exact::int(length as i64),
                length,
            }
        })
        .collect();
    Ok(NewtonPolygon {
        points,
        vertices: hull,
        segments,
    })
}

/// Valuations of the nonzero roots in `C_p` with multiplicities.
pub fn root_valuations(f: &PadicPoly) -> Result<Vec<(Rational, usize)>> {
    Ok(newton_polygon(f)?.root_valuations())
}

/// `v(a_d) = 0`, `v(a_i) >= 1` for `i < d` and `v(a_0) = 1`.
pub fn eisenstein_check(f: &PadicPoly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    let vals = f.valuations();
    vals[d] == Some(0)
        && vals[..d].iter().all(|v| v.is_none_or(|v| v >= 1))
        && vals[0] == Some(1)
}

/// The monic `t^k`.
pub fn monomial(prime: Prime, k: usize) -> PadicPoly {
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[k] = Rational::one();
    PadicPoly::new(prime, coeffs)
}
