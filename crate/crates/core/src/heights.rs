//! Heights for the family `p₂: C × J → J`, polarised on the base by `θ`.
//!
//! The height of a point `x` of the generic fibre with respect to `L` is
//! `x̄ · L · θ₂^{g−1} / deg(x)`, where `x̄` is the class of the closure of
//! `x` and `deg(x) = a` is its degree over the base.

use num_traits::{One, Signed};

use crate::cones::classify;
use crate::error::{Error, Result};
use crate::ns_lattice::{pair_theta_power, Genus, NSClass};
use crate::rational::{int, pow, Rational};

/// Class of the closure of a point of the generic fibre: `a > 0` and
/// pseudo-effective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    cls: NSClass,
}

impl PointClass {
    pub fn new(cls: NSClass) -> Result<Self> {
        if !cls.a.is_positive() {
            return Err(Error::NonPositiveDegree(cls.a.clone()));
        }
        let verdict = classify(&cls);
        if !verdict.is_psef {
            return Err(Error::NotPseudoEffective(verdict.defect));
        }
        Ok(PointClass { cls })
    }

    pub fn class(&self) -> &NSClass {
        &self.cls
    }

    pub fn degree(&self) -> &Rational {
        &self.cls.a
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightReport {
    pub height: Rational,
    pub degree: Rational,
}

/// `ℒ = f_{1,1}^*θ = g·α₁ + θ₂ + Q`.
pub fn standard_polarization(g: Genus) -> NSClass {
    NSClass::new(g, g.as_rational(), Rational::one(), Rational::one())
}

/// Degree of `L` on the generic fibre `C_K`.
pub fn generic_degree(l: &NSClass) -> Rational {
    crate::ns_lattice::restrict_to_c_fiber(l)
}

pub fn height_point(l: &NSClass, p: &PointClass) -> Result<HeightReport> {
    let pairing = pair_theta_power(p.class(), l)?;
    Ok(HeightReport { height: pairing / p.degree(), degree: p.degree().clone() })
}

/// Height with the base polarised by `λ·θ` instead of `θ`; scales by
/// `λ^{g−1}`.
pub fn height_point_with_base(l: &NSClass, p: &PointClass, lambda: &Rational) -> Result<HeightReport> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveScale(lambda.clone()));
    }
    let mut report = height_point(l, p)?;
    report.height *= pow(lambda, l.genus().get() - 1);
    Ok(report)
}

/// `h(C_K) = L² · θ₂^{g−1} / (2·deg L_K)`.
pub fn height_curve(l: &NSClass) -> Result<Rational> {
    let degree = generic_degree(l);
    if !degree.is_positive() {
        return Err(Error::NonPositiveGenericDegree(degree));
    }
    Ok(pair_theta_power(l, l)? / (int(2) * degree))
}
