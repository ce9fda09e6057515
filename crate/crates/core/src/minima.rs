//! Successive minima of `h_L` over the pseudo-effective cone.
//!
//! A point class normalised to degree one is `α₁ + s·θ₂ + t·Q` with
//! `s ≥ g·t²`, and its height against `L = (A, B, C)` is
//! `g!·(B + s·A − 2t·C)`. For `A > 0` the constraint is active at the
//! optimum, leaving a quadratic in `t` minimised at `t* = C/(g·A)`.
//!
//! The minimising ray is hit by a pullback `f_{p,q}^*θ` with coprime
//! integers `q/p = g·t*`; pulling back very ample multiples of `θ` along
//! `f_{p,q}` gives points of unbounded degree that attain the infimum, so
//! both minima equal it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cones::require_nef;
use crate::error::{Error, Result};
use crate::heights::{generic_degree, height_curve, PointClass};
use crate::ns_lattice::{pullback_theta, Genus, NSClass};
use crate::rational::{factorial, int, Rational};

/// Integral pullback class `f_{p,q}^*θ = (g·p², q², p·q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackWitness {
    pub genus: Genus,
    pub p: BigInt,
    pub q: BigInt,
}

impl PullbackWitness {
    pub fn class(&self) -> NSClass {
        let p = Rational::from_integer(self.p.clone());
        let q = Rational::from_integer(self.q.clone());
        pullback_theta(self.genus, &p, &q)
    }

    /// Class of the `n`-th point: `n·f_{p,q}^*θ`, of degree `n·g·p²`.
    pub fn point(&self, n: i64) -> Result<PointClass> {
        if n <= 0 {
            return Err(Error::NonPositiveIndex(n));
        }
        PointClass::new(self.class().scale(&int(n)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaReport {
    pub infimum: Rational,
    pub s_star: Rational,
    pub t_star: Rational,
    pub attained_by_witness: bool,
    pub witness: Option<PullbackWitness>,
}

pub fn cone_minimum(l: &NSClass) -> Result<MinimaReport> {
    require_nef(l)?;
    let genus = l.genus();
    let g = genus.as_rational();
    let g_fact = Rational::from_integer(factorial(genus.get()));
    let (a, b, c) = (&l.a, &l.b, &l.c);

    if a.is_zero() {
        if !c.is_zero() {
            return Err(Error::UnboundedMinimum(c.clone()));
        }
        // height is g!·B for every point; constant sections attain it
        return Ok(MinimaReport {
            infimum: g_fact * b,
            s_star: Rational::zero(),
            t_star: Rational::zero(),
            attained_by_witness: true,
            witness: Some(PullbackWitness { genus, p: BigInt::one(), q: BigInt::zero() }),
        });
    }

    let t_star = c / (&g * a);
    let s_star = &g * &t_star * &t_star;
    let infimum = &g_fact * (&g * a * b - c * c) / (&g * a);
    let witness = ray_witness(genus, &t_star);
    debug_assert_eq!(infimum, objective(&g_fact, &g, l, &t_star));
    Ok(MinimaReport { infimum, s_star, t_star, attained_by_witness: witness.is_some(), witness })
}

/// Coprime `(p, q)` with `p > 0` and `q/p = g·t`.
fn ray_witness(genus: Genus, t: &Rational) -> Option<PullbackWitness> {
    let ratio = genus.as_rational() * t;
    Some(PullbackWitness { genus, p: ratio.denom().clone(), q: ratio.numer().clone() })
}

// g!·(B + g·A·t² − 2t·C): the height on the boundary slice s = g·t².
fn objective(g_fact: &Rational, g: &Rational, l: &NSClass, t: &Rational) -> Rational {
    g_fact * (&l.b + g * &l.a * t * t - int(2) * t * &l.c)
}

/// Exhaustive minimum of the boundary-slice height over
/// `t ∈ {t_lo + i·(t_hi − t_lo)/steps : 0 ≤ i ≤ steps}`.
pub fn grid_oracle(l: &NSClass, t_lo: &Rational, t_hi: &Rational, steps: u64) -> Result<Rational> {
    if steps == 0 {
        return Err(Error::EmptyGrid("steps must be at least 1".into()));
    }
    if t_lo > t_hi {
        return Err(Error::EmptyGrid(format!("t_lo = {t_lo} exceeds t_hi = {t_hi}")));
    }
    require_nef(l)?;
    let a = generic_degree(l);
    if !a.is_positive() {
        return Err(Error::NonPositiveGenericDegree(a));
    }
    let genus = l.genus();
    let g = genus.as_rational();
    let g_fact = Rational::from_integer(factorial(genus.get()));
    let step = (t_hi - t_lo) / Rational::from_integer(BigInt::from(steps));
    let mut best: Option<Rational> = None;
    for i in 0..=steps {
        let t = t_lo + &step * Rational::from_integer(BigInt::from(i));
        let v = objective(&g_fact, &g, l, &t);
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    Ok(best.expect("grid has at least two points"))
}

/// `n`-th member of the attaining family for `ℒ`:
/// `n·f_{g,1}^*θ = (g³n, n, g·n)`.
pub fn witness_sequence(g: Genus, n: i64) -> Result<PointClass> {
    PullbackWitness { genus: g, p: BigInt::from(g.get()), q: BigInt::one() }.point(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZhangAudit {
    pub e1: Rational,
    pub e2: Rational,
    pub h_curve: Rational,
    /// `e₁ ≥ h`.
    pub first_inequality_holds: bool,
    /// `h ≥ (e₁ + e₂)/2`.
    pub second_inequality_holds: bool,
    /// `(e₁ + e₂)/2 − h`; positive means the second inequality fails.
    pub violation_margin: Rational,
    /// Set when no attaining witness was found, in which case `e1` and
    /// `e2` are only lower bounds.
    pub lower_bound_only: bool,
    pub minima: MinimaReport,
}

pub fn zhang_audit(l: &NSClass) -> Result<ZhangAudit> {
    let degree = generic_degree(l);
    if !degree.is_positive() {
        return Err(Error::NonPositiveGenericDegree(degree));
    }
    let minima = cone_minimum(l)?;
    let h_curve = height_curve(l)?;
    let e1 = minima.infimum.clone();
    let e2 = minima.infimum.clone();
    let mean = (&e1 + &e2) / int(2);
    Ok(ZhangAudit {
        first_inequality_holds: e1 >= h_curve,
        second_inequality_holds: h_curve >= mean,
        violation_margin: &mean - &h_curve,
        lower_bound_only: !minima.attained_by_witness,
        e1,
        e2,
        h_curve,
        minima,
    })
}
