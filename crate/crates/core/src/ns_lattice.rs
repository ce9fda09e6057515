//! Coordinates on `NS(C × J)_ℚ` and the top-degree intersection form.
//!
//! A class is `a·α₁ + b·θ₂ + c·Q`. The intersection number of `g + 1`
//! classes is obtained by multiplying their linear forms in the formal
//! variables `α₁, θ₂, Q` and reading each surviving monomial off the
//! [`MonomialTable`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: i64) -> Result<Self> {
        if g < 2 || g >= u32::MAX as i64 {
            return Err(Error::InvalidGenus(g));
        }
        Ok(Genus(g as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Dimension of `C × J`, i.e. the number of classes in a top product.
    pub fn top_degree(self) -> u32 {
        self.0 + 1
    }

    pub fn as_rational(self) -> Rational {
        int(self.0 as i64)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A class `a·α₁ + b·θ₂ + c·Q` in a fixed genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NSClass {
    genus: Genus,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl NSClass {
    /// No cone condition is imposed.
    pub fn new(genus: Genus, a: Rational, b: Rational, c: Rational) -> Self {
        NSClass { genus, a, b, c }
    }

    /// Checked constructor from a raw genus.
    pub fn mk_class(g: i64, a: Rational, b: Rational, c: Rational) -> Result<Self> {
        Ok(Self::new(Genus::new(g)?, a, b, c))
    }

    pub fn zero(genus: Genus) -> Self {
        Self::new(genus, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn alpha1(genus: Genus) -> Self {
        Self::new(genus, Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn theta2(genus: Genus) -> Self {
        Self::new(genus, Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn poincare(genus: Genus) -> Self {
        Self::new(genus, Rational::zero(), Rational::zero(), Rational::one())
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// `a·b − g·c²`; its sign decides cone membership.
    pub fn defect(&self) -> Rational {
        &self.a * &self.b - self.genus.as_rational() * &self.c * &self.c
    }

    pub fn add(&self, other: &NSClass) -> Result<NSClass> {
        self.same_genus(other)?;
        Ok(NSClass::new(self.genus, &self.a + &other.a, &self.b + &other.b, &self.c + &other.c))
    }

    pub fn sub(&self, other: &NSClass) -> Result<NSClass> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, lambda: &Rational) -> NSClass {
        NSClass::new(self.genus, &self.a * lambda, &self.b * lambda, &self.c * lambda)
    }

    pub(crate) fn same_genus(&self, other: &NSClass) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch { left: self.genus.0, right: other.genus.0 });
        }
        Ok(())
    }
}

impl fmt::Display for NSClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_rational as r;
        write!(f, "({},{},{})", r(&self.a), r(&self.b), r(&self.c))
    }
}

// Operator forms panic on genus mismatch; use the methods for a `Result`.
impl Add for &NSClass {
    type Output = NSClass;
    fn add(self, rhs: &NSClass) -> NSClass {
        NSClass::add(self, rhs).expect("genus mismatch in NSClass addition")
    }
}

impl Sub for &NSClass {
    type Output = NSClass;
    fn sub(self, rhs: &NSClass) -> NSClass {
        NSClass::sub(self, rhs).expect("genus mismatch in NSClass subtraction")
    }
}

impl Neg for &NSClass {
    type Output = NSClass;
    fn neg(self) -> NSClass {
        self.scale(&-Rational::one())
    }
}

/// Intersection numbers `α₁^i · θ₂^j · Q^k` with `i + j + k = g + 1`.
///
/// Nonzero entries are `α₁·θ₂^g = g!` and `θ₂^{g−1}·Q² = −2·g!`.
/// Everything else vanishes: `α₁² = 0` on the curve factor, `Q` restricts
/// to a numerically trivial class on every `{x} × J`, and the remaining
/// pure `θ₂, Q` entries are forced by `(f_{m,n}^*θ)^{g+1} = 0` for all
/// `m, n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTable {
    genus: Genus,
    g_factorial: BigInt,
}

impl MonomialTable {
    pub fn new(genus: Genus) -> Self {
        MonomialTable { genus, g_factorial: factorial(genus.get()) }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn g_factorial(&self) -> &BigInt {
        &self.g_factorial
    }

    /// Intersection number `α₁^i · θ₂^j · Q^k`; errors unless
    /// `i + j + k = g + 1`.
    pub fn value(&self, i: u32, j: u32, k: u32) -> Result<Rational> {
        let top = self.genus.top_degree();
        if i as u64 + j as u64 + k as u64 != top as u64 {
            return Err(Error::NotTopDegree { i, j, k, top });
        }
        Ok(Rational::from_integer(self.integer_value(i, k)))
    }

    // `j` is implied by `i + j + k = g + 1`.
    fn integer_value(&self, i: u32, k: u32) -> BigInt {
        match (i, k) {
            (1, 0) => self.g_factorial.clone(),
            // Poincaré's formula gives θ^{g−1} = (g−1)!·[C], and the
            // restriction of Q to C × C squares to −2g, so the entry is
            // −2g·(g−1)! = −2·g!. This is the value that makes
            // (x·α₁ + y·θ₂ + z·Q)·L·θ₂^{g−1} = (x + g·y − 2z)·g! for
            // L = g·α₁ + θ₂ + Q; writing it as −2·(g−1)! breaks that.
            (0, 2) => -(&self.g_factorial * BigInt::from(2)),
            _ => BigInt::zero(),
        }
    }

    /// Largest `Q` exponent with a nonzero entry among monomials of
    /// `α₁`-degree `i`, or `None` when all such entries vanish.
    pub fn max_q_exponent(&self, i: u32) -> Option<u32> {
        let top = self.genus.top_degree();
        if i > top {
            return None;
        }
        (0..=top - i).rev().find(|&k| !self.integer_value(i, k).is_zero())
    }

    /// All `(i, j, k, value)` with `i + j + k = g + 1`, `O(g²)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u32, Rational)> + '_ {
        let top = self.genus.top_degree();
        (0..=top).flat_map(move |i| {
            (0..=top - i).map(move |k| {
                let j = top - i - k;
                (i, j, k, Rational::from_integer(self.integer_value(i, k)))
            })
        })
    }
}

pub fn monomial_table(g: Genus) -> MonomialTable {
    MonomialTable::new(g)
}

/// Running product of linear forms in `α₁, θ₂, Q`, truncated to terms of
/// `α₁`-degree at most 1.
///
/// After `d` factors the product is homogeneous of degree `d`, so a term
/// is determined by its `α₁` exponent `i ∈ {0, 1}` and its `Q` exponent
/// `k`; the `θ₂` exponent is `d − i − k`. Exponents never decrease under
/// multiplication, so terms whose `Q` exponent already exceeds the
/// table's nonzero support for their `α₁`-degree are dropped as well.
#[derive(Debug, Clone)]
struct TruncatedProduct {
    degree: u32,
    // coefficient of θ₂^{d−k} Q^k, for k ≤ free_cap
    alpha_free: Vec<Rational>,
    // coefficient of α₁ θ₂^{d−1−k} Q^k, for k ≤ linear_cap
    alpha_linear: Vec<Rational>,
    free_cap: Option<usize>,
    linear_cap: Option<usize>,
}

impl TruncatedProduct {
    fn one(table: &MonomialTable) -> Self {
        let free_cap = table.max_q_exponent(0).map(|k| k as usize);
        let linear_cap = table.max_q_exponent(1).map(|k| k as usize);
        let alpha_free = if free_cap.is_some() || linear_cap.is_some() { vec![Rational::one()] } else { Vec::new() };
        TruncatedProduct { degree: 0, alpha_free, alpha_linear: Vec::new(), free_cap, linear_cap }
    }

    fn len(cap: Option<usize>, degree: usize) -> usize {
        cap.map_or(0, |c| c.min(degree) + 1)
    }

    fn mul_linear(&mut self, x: &NSClass) {
        let d = self.degree as usize + 1;
        // a free term feeds the α₁-linear part, so it stays live while
        // either cap allows it
        let free_live = match (self.free_cap, self.linear_cap) {
            (None, None) => None,
            (f, l) => Some(f.unwrap_or(0).max(l.unwrap_or(0))),
        };
        let mut free = vec![Rational::zero(); Self::len(free_live, d)];
        let mut linear = vec![Rational::zero(); Self::len(self.linear_cap, d - 1)];
        for (k, coeff) in self.alpha_free.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if !x.b.is_zero() {
                free[k] += coeff * &x.b;
            }
            if !x.c.is_zero() && k + 1 < free.len() {
                free[k + 1] += coeff * &x.c;
            }
            if !x.a.is_zero() && k < linear.len() {
                linear[k] += coeff * &x.a;
            }
        }
        for (k, coeff) in self.alpha_linear.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if !x.b.is_zero() {
                linear[k] += coeff * &x.b;
            }
            if !x.c.is_zero() && k + 1 < linear.len() {
                linear[k + 1] += coeff * &x.c;
            }
            // α₁² = 0: the α₁ term is dropped
        }
        self.degree += 1;
        self.alpha_free = free;
        self.alpha_linear = linear;
    }

    fn evaluate(&self, table: &MonomialTable) -> Rational {
        debug_assert_eq!(self.degree, table.genus().top_degree());
        let mut total = Rational::zero();
        for (i, part) in [(0, &self.alpha_free), (1, &self.alpha_linear)] {
            for (k, coeff) in part.iter().enumerate() {
                let v = table.integer_value(i, k as u32);
                if !v.is_zero() && !coeff.is_zero() {
                    total += coeff * Rational::from_integer(v);
                }
            }
        }
        total
    }
}

/// Intersection number of exactly `g + 1` classes of genus `g`.
pub fn top_intersect(classes: &[NSClass]) -> Result<Rational> {
    let first = classes.first().ok_or(Error::WrongClassCount { genus: 0, expected: 0, got: 0 })?;
    let genus = first.genus();
    let expected = genus.top_degree() as usize;
    if classes.len() != expected {
        return Err(Error::WrongClassCount { genus: genus.get(), expected, got: classes.len() });
    }
    for x in classes {
        first.same_genus(x)?;
    }
    let table = MonomialTable::new(genus);
    let mut product = TruncatedProduct::one(&table);
    for x in classes {
        product.mul_linear(x);
    }
    Ok(product.evaluate(&table))
}

/// `X · Y · θ₂^{g−1}`, computed through [`top_intersect`].
pub fn pair_theta_power(x: &NSClass, y: &NSClass) -> Result<Rational> {
    x.same_genus(y)?;
    let genus = x.genus();
    let mut classes = Vec::with_capacity(genus.top_degree() as usize);
    classes.push(x.clone());
    classes.push(y.clone());
    classes.extend(std::iter::repeat_n(NSClass::theta2(genus), genus.get() as usize - 1));
    top_intersect(&classes)
}

/// Closed form of [`pair_theta_power`]:
/// `g!·(x_a·y_b + x_b·y_a − 2·x_c·y_c)`.
pub fn pair_theta_power_closed_form(x: &NSClass, y: &NSClass) -> Result<Rational> {
    x.same_genus(y)?;
    let g_fact = Rational::from_integer(factorial(x.genus().get()));
    Ok(g_fact * (&x.a * &y.b + &x.b * &y.a - int(2) * &x.c * &y.c))
}

/// Pullback of `θ` along `f_{m,n}: (x, y) ↦ m(x − α) + n·y`,
/// which is `g·m²·α₁ + n²·θ₂ + m·n·Q`.
pub fn pullback_theta(g: Genus, m: &Rational, n: &Rational) -> NSClass {
    NSClass::new(g, g.as_rational() * m * m, n * n, m * n)
}

/// Restriction to a fibre `{x} × J`: `(b, c)` meaning `b·θ + c·φ(x − α)`.
/// `α₁` restricts to zero.
pub fn restrict_to_j_fiber(x: &NSClass) -> (Rational, Rational) {
    (x.b.clone(), x.c.clone())
}

/// Degree on a fibre `C × {y}`. `θ₂` restricts trivially and `Q`
/// restricts to `y ∈ Pic⁰(C)`, so only `a` survives.
pub fn restrict_to_c_fiber(x: &NSClass) -> Rational {
    x.a.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn g(n: i64) -> Genus {
        Genus::new(n).unwrap()
    }

    fn cls(genus: i64, a: Rational, b: Rational, c: Rational) -> NSClass {
        NSClass::mk_class(genus, a, b, c).unwrap()
    }

    #[test]
    fn genus_below_two_rejected() {
        assert_eq!(Genus::new(1), Err(Error::InvalidGenus(1)));
        assert!(NSClass::mk_class(0, int(1), int(1), int(1)).is_err());
    }

    #[test]
    fn mk_class_examples() {
        let l = cls(2, int(2), int(1), int(1));
        assert_eq!(l, pullback_theta(g(2), &int(1), &int(1)));
        assert!(cls(3, int(0), int(0), int(0)).is_zero());
        let raw = cls(2, int(-1), int(5), frac(1, 2));
        assert_eq!((raw.a.clone(), raw.b.clone(), raw.c.clone()), (int(-1), int(5), frac(1, 2)));
    }

    #[test]
    fn add_and_scale() {
        let x = NSClass::alpha1(g(4)).add(&NSClass::theta2(g(4))).unwrap();
        assert_eq!(x, cls(4, int(1), int(1), int(0)));
        assert_eq!(cls(4, int(2), int(4), int(6)).scale(&frac(1, 2)), cls(4, int(1), int(2), int(3)));
        let y = cls(5, frac(3, 7), int(-2), frac(9, 4));
        assert!(y.add(&y.scale(&int(-1))).unwrap().is_zero());
        assert!((&y - &y).is_zero());
    }

    #[test]
    fn add_rejects_genus_mismatch() {
        let err = NSClass::alpha1(g(2)).add(&NSClass::alpha1(g(3))).unwrap_err();
        assert_eq!(err, Error::GenusMismatch { left: 2, right: 3 });
    }

    #[test]
    fn table_examples() {
        let t2 = monomial_table(g(2));
        assert_eq!(t2.value(1, 2, 0).unwrap(), int(2));
        assert_eq!(t2.value(0, 1, 2).unwrap(), int(-4));
        assert_eq!(t2.value(0, 3, 0).unwrap(), int(0));
        assert_eq!(t2.value(0, 0, 3).unwrap(), int(0));
        assert_eq!(monomial_table(g(3)).value(1, 2, 1).unwrap(), int(0));
        assert!(t2.value(1, 1, 0).is_err());
    }

    #[test]
    fn table_invariants() {
        for n in 2..=15 {
            let t = monomial_table(g(n));
            let gf = Rational::from_integer(factorial(n as u32));
            let top = n as u32 + 1;
            assert_eq!(t.entries().count(), ((top + 1) * (top + 2) / 2) as usize);
            for (i, j, k, v) in t.entries() {
                let expected = match (i, k) {
                    (1, 0) => gf.clone(),
                    (0, 2) => -int(2) * &gf,
                    _ => int(0),
                };
                assert_eq!(v, expected, "g={n} ({i},{j},{k})");
            }
        }
    }

    #[test]
    fn q_exponent_support() {
        for n in 2..=9 {
            let t = monomial_table(g(n));
            assert_eq!(t.max_q_exponent(0), Some(2));
            assert_eq!(t.max_q_exponent(1), Some(0));
            assert_eq!(t.max_q_exponent(2), None);
        }
    }

    #[test]
    fn top_intersect_examples() {
        let l = cls(2, int(2), int(1), int(1));
        let th = NSClass::theta2(g(2));
        assert_eq!(top_intersect(&[l.clone(), l, th]).unwrap(), int(4));
        for n in 2..=10 {
            let th = NSClass::theta2(g(n));
            assert_eq!(top_intersect(&vec![th; n as usize + 1]).unwrap(), int(0));
        }
        let three = g(3);
        let classes =
            [NSClass::poincare(three), NSClass::alpha1(three), NSClass::theta2(three), NSClass::theta2(three)];
        assert_eq!(top_intersect(&classes).unwrap(), int(0));
    }

    #[test]
    fn top_intersect_errors() {
        let th = NSClass::theta2(g(3));
        assert!(matches!(
            top_intersect(&[th.clone(), th.clone()]),
            Err(Error::WrongClassCount { expected: 4, got: 2, .. })
        ));
        assert!(matches!(top_intersect(&[]), Err(Error::WrongClassCount { .. })));
        let mixed = [th.clone(), th.clone(), th, NSClass::theta2(g(4))];
        assert!(matches!(top_intersect(&mixed), Err(Error::GenusMismatch { .. })));
    }

    #[test]
    fn pair_examples() {
        let x = cls(2, int(1), int(1), int(1));
        let l = cls(2, int(2), int(1), int(1));
        assert_eq!(pair_theta_power(&x, &l).unwrap(), int(2));
        for n in 2..=8 {
            let th = NSClass::theta2(g(n));
            assert_eq!(pair_theta_power(&th, &th).unwrap(), int(0));
        }
        let q = NSClass::poincare(g(3));
        assert_eq!(pair_theta_power(&q, &q).unwrap(), int(-12));
        assert_eq!(pair_theta_power_closed_form(&q, &q).unwrap(), int(-12));
        assert!(pair_theta_power(&q, &NSClass::poincare(g(2))).is_err());
    }

    #[test]
    fn pullback_examples() {
        for n in 2..=6 {
            assert_eq!(pullback_theta(g(n), &int(1), &int(1)), cls(n, int(n), int(1), int(1)));
            assert!(pullback_theta(g(n), &int(0), &int(0)).is_zero());
        }
        let p = pullback_theta(g(2), &frac(1, 2), &int(3));
        assert_eq!(p, cls(2, frac(1, 2), int(9), frac(3, 2)));
        assert_eq!(&p.a * &p.b, frac(9, 2));
        assert_eq!(p.defect(), int(0));
        assert_eq!(pullback_theta(g(3), &int(2), &int(5)), cls(3, int(12), int(25), int(10)));
    }

    #[test]
    fn restriction_examples() {
        let x = cls(4, frac(7, 2), int(-1), int(5));
        assert_eq!(restrict_to_j_fiber(&x), (int(-1), int(5)));
        assert_eq!(restrict_to_c_fiber(&x), frac(7, 2));
        assert_eq!(restrict_to_j_fiber(&NSClass::alpha1(g(4))), (int(0), int(0)));
        let l = pullback_theta(g(4), &int(1), &int(1));
        assert_eq!(restrict_to_j_fiber(&l), (int(1), int(1)));
        assert_eq!(restrict_to_c_fiber(&l), int(4));
        assert_eq!(restrict_to_c_fiber(&NSClass::theta2(g(4))), int(0));
    }

    #[test]
    fn display_uses_literal_syntax() {
        assert_eq!(cls(3, int(12), frac(-1, 2), int(0)).to_string(), "(12,-1/2,0)");
    }
}
