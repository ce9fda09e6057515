//! Positivity cones. With Picard number 3 the ample and big cones agree,
//! as do the nef and pseudo-effective cones:
//!
//! * nef = psef: `a ≥ 0, b ≥ 0, ab ≥ g·c²`
//! * ample = big: `a > 0, b > 0, ab > g·c²`
//!
//! The boundary of the nef cone is swept out by the pullbacks
//! `f_{m,n}^*θ = (g·m², n², m·n)`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ns_lattice::NSClass;
use crate::rational::{exact_sqrt, sign, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Interior,
    Boundary,
    Outside,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Interior => "interior",
            Region::Boundary => "boundary",
            Region::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeVerdict {
    pub region: Region,
    pub is_ample: bool,
    pub is_nef: bool,
    pub is_big: bool,
    pub is_psef: bool,
    /// `ab − g·c²`, unnormalised.
    pub defect: Rational,
}

pub fn classify(x: &NSClass) -> ConeVerdict {
    let defect = x.defect();
    let nef = !x.a.is_negative() && !x.b.is_negative() && !defect.is_negative();
    let ample = x.a.is_positive() && x.b.is_positive() && defect.is_positive();
    let region = if ample {
        Region::Interior
    } else if nef {
        Region::Boundary
    } else {
        Region::Outside
    };
    ConeVerdict { region, is_ample: ample, is_nef: nef, is_big: ample, is_psef: nef, defect }
}

/// `X = boundary_part + alpha_excess·α₁` with `boundary_part` on the nef
/// boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefDecomposition {
    pub boundary_part: NSClass,
    pub alpha_excess: Rational,
    /// `b = 0`: the class is `a·α₁` and the boundary part is zero.
    pub degenerate: bool,
}

pub fn nef_decomposition(x: &NSClass) -> Result<NefDecomposition> {
    let verdict = classify(x);
    if !verdict.is_nef {
        return Err(not_nef(x, verdict.defect));
    }
    if x.b.is_zero() {
        // nef with b = 0 forces c = 0
        return Ok(NefDecomposition {
            boundary_part: NSClass::zero(x.genus()),
            alpha_excess: x.a.clone(),
            degenerate: true,
        });
    }
    let boundary_a = x.genus().as_rational() * &x.c * &x.c / &x.b;
    let alpha_excess = &x.a - &boundary_a;
    Ok(NefDecomposition {
        boundary_part: NSClass::new(x.genus(), boundary_a, x.b.clone(), x.c.clone()),
        alpha_excess,
        degenerate: false,
    })
}

/// A real number known through its square and its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtWitness {
    pub square: Rational,
    pub sign: i8,
}

impl SqrtWitness {
    fn new(square: Rational, sign: i8) -> Self {
        debug_assert!(!square.is_negative());
        let sign = if square.is_zero() { 0 } else { sign };
        SqrtWitness { square, sign }
    }

    /// The signed value, when the square is a square in ℚ.
    pub fn exact(&self) -> Option<Rational> {
        exact_sqrt(&self.square).map(|r| if self.sign < 0 { -r } else { r })
    }
}

/// `(m, n)` with `X = f_{m,n}^*θ`, i.e. `m² = a/g`, `n² = b`, and
/// `sign(m·n) = sign(c)`.
pub fn boundary_witness(x: &NSClass) -> Result<(SqrtWitness, SqrtWitness)> {
    if x.b.is_zero() && !x.c.is_zero() {
        return Err(Error::InconsistentBoundary { c: x.c.clone() });
    }
    // nef and not ample implies a zero defect
    let verdict = classify(x);
    if !verdict.is_nef || verdict.is_ample {
        return Err(Error::NotOnBoundary { defect: verdict.defect });
    }
    let m_sq = &x.a / x.genus().as_rational();
    let n_sq = x.b.clone();
    // m ≥ 0; n carries the sign of c
    let m = SqrtWitness::new(m_sq, 1);
    let n_sign = if x.c.is_negative() { -1 } else { 1 };
    let n = SqrtWitness::new(n_sq, n_sign);
    debug_assert_eq!(&m.square * &n.square, &x.c * &x.c);
    debug_assert!(x.c.is_zero() || m.sign * n.sign == sign(&x.c));
    Ok((m, n))
}

fn not_nef(x: &NSClass, defect: Rational) -> Error {
    Error::NotNef { class: x.to_string(), defect }
}

pub(crate) fn require_nef(x: &NSClass) -> Result<()> {
    let verdict = classify(x);
    if verdict.is_nef {
        Ok(())
    } else {
        Err(not_nef(x, verdict.defect))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ns_lattice::{pullback_theta, Genus};
    use crate::rational::{frac, int};

    fn cls(g: i64, a: Rational, b: Rational, c: Rational) -> NSClass {
        NSClass::mk_class(g, a, b, c).unwrap()
    }

    #[test]
    fn classify_examples() {
        let v = classify(&cls(2, int(2), int(1), int(1)));
        assert_eq!(v.region, Region::Boundary);
        assert!(v.is_nef && v.is_psef && !v.is_ample && !v.is_big);
        assert_eq!(v.defect, int(0));

        let v = classify(&cls(2, int(1), int(1), int(1)));
        assert_eq!(v.region, Region::Outside);
        assert_eq!(v.defect, int(-1));
        assert!(!v.is_nef && !v.is_psef);

        for g in 2..=6 {
            let v = classify(&NSClass::zero(Genus::new(g).unwrap()));
            assert_eq!(v.region, Region::Boundary);
            assert!(v.is_nef && !v.is_ample);
        }
    }

    #[test]
    fn edges_are_boundary() {
        let g = Genus::new(3).unwrap();
        assert_eq!(classify(&NSClass::alpha1(g)).region, Region::Boundary);
        assert_eq!(classify(&NSClass::theta2(g)).region, Region::Boundary);
        assert_eq!(classify(&NSClass::poincare(g)).region, Region::Outside);
        assert_eq!(classify(&cls(3, int(4), int(1), int(1))).region, Region::Interior);
        // positive defect but negative coordinates
        assert_eq!(classify(&cls(3, int(-4), int(-1), int(1))).region, Region::Outside);
    }

    #[test]
    fn decomposition_examples() {
        let d = nef_decomposition(&cls(2, int(3), int(1), int(1))).unwrap();
        assert_eq!(d.boundary_part, cls(2, int(2), int(1), int(1)));
        assert_eq!(d.alpha_excess, int(1));
        assert!(!d.degenerate);
        assert_eq!(classify(&d.boundary_part).region, Region::Boundary);

        let d = nef_decomposition(&cls(2, int(2), int(1), int(1))).unwrap();
        assert_eq!(d.alpha_excess, int(0));

        let d = nef_decomposition(&cls(3, int(5), int(0), int(0))).unwrap();
        assert!(d.degenerate);
        assert!(d.boundary_part.is_zero());
        assert_eq!(d.alpha_excess, int(5));

        assert!(matches!(nef_decomposition(&cls(2, int(1), int(1), int(1))), Err(Error::NotNef { .. })));
    }

    #[test]
    fn witness_examples() {
        let (m, n) = boundary_witness(&cls(2, int(2), int(1), int(1))).unwrap();
        assert_eq!((m.exact(), n.exact()), (Some(int(1)), Some(int(1))));

        let (m, n) = boundary_witness(&cls(2, int(1), int(2), int(1))).unwrap();
        assert_eq!(m.square, frac(1, 2));
        assert_eq!(m.exact(), None);
        assert_eq!(n.square, int(2));
        assert_eq!(m.sign * n.sign, 1);

        let x = cls(3, int(27), int(1), int(3));
        assert_eq!(x, pullback_theta(Genus::new(3).unwrap(), &int(3), &int(1)));
        let (m, n) = boundary_witness(&x).unwrap();
        assert_eq!((m.exact(), n.exact()), (Some(int(3)), Some(int(1))));

        let (m, n) = boundary_witness(&cls(2, frac(1, 2), int(9), frac(-3, 2))).unwrap();
        assert_eq!((m.exact(), n.exact()), (Some(frac(1, 2)), Some(int(-3))));
    }

    #[test]
    fn witness_rejects_off_boundary() {
        assert!(matches!(boundary_witness(&cls(2, int(3), int(1), int(1))), Err(Error::NotOnBoundary { .. })));
        assert!(matches!(boundary_witness(&cls(2, int(1), int(1), int(1))), Err(Error::NotOnBoundary { .. })));
        assert!(matches!(boundary_witness(&cls(2, int(0), int(0), int(1))), Err(Error::InconsistentBoundary { .. })));
    }
}
