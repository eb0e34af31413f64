//! Exact sparse multivariate polynomials over arbitrary-precision integers.
//!
//! Every [`Polynomial`] is kept in canonical form: a map from [`Monomial`] to
//! a nonzero [`BigInt`], ordered graded-lexicographically. Two polynomials are
//! equal exactly when their term maps are equal, so `==` is symbolic equality.

mod monomial;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use monomial::{Family, Monomial, Variable};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term<C: Into<BigInt>>(m: Monomial, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Monomial::var(v), 1)
    }

    pub fn x(i: u32) -> Self {
        Self::var(Variable::x(i))
    }

    pub fn y(i: u32) -> Self {
        Self::var(Variable::y(i))
    }

    pub fn a(i: u32) -> Self {
        Self::var(Variable::a(i))
    }

    pub fn t() -> Self {
        Self::var(Variable::t())
    }

    /// Sums `(monomial, coefficient)` pairs, merging like terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut out, m, c.into());
        }
        Polynomial { terms: out }.checked()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.degree()))
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, family: Family) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.degree_in(family)))
            .max()
            .unwrap_or(-1)
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self.terms.keys().flat_map(|m| m.variables()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Keeps only the terms for which `keep` returns true.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of total degree above `cap`.
    pub fn truncate(&self, cap: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() <= cap)
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() == degree)
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Polynomial {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * &c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product with every monomial of total degree above `degree_cap`
    /// discarded; the exact product when no cap is given.
    pub fn mul_capped(&self, other: &Polynomial, degree_cap: Option<u32>) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            if degree_cap.is_some_and(|cap| m1.degree() > cap) {
                continue;
            }
            for (m2, c2) in &other.terms {
                if degree_cap.is_some_and(|cap| m1.degree() + m2.degree() > cap) {
                    continue;
                }
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
        .checked()
    }

    /// Exact division by the graded-lex leading-term cancellation algorithm.
    ///
    /// Fails with [`Error::NotDivisible`] as soon as the remainder's leading
    /// term is not a multiple of the divisor's; for an exact quotient this
    /// never happens, so the error signals a false identity or a bug.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (dm, dc) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => {
                return Err(Error::InvalidArgument(
                    "division by the zero polynomial".into(),
                ))
            }
        };
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let not_divisible = || Error::NotDivisible {
                remainder: Polynomial::term(rm.clone(), rc.clone()).to_string(),
                divisor: Polynomial::term(dm.clone(), dc.clone()).to_string(),
            };
            let qm = rm.checked_div(&dm).ok_or_else(not_divisible)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (m, c) in &divisor.terms {
                accumulate(&mut rem.terms, qm.mul(m), -(c * &qc));
            }
            accumulate(&mut quot, qm, qc);
        }
        Ok(Polynomial { terms: quot }.checked())
    }

    /// Sets every variable `(family, k)` with `k >= from_index` to zero.
    pub fn substitute_zero(&self, family: Family, from_index: u32) -> Polynomial {
        self.filter_terms(|m| {
            !m.variables()
                .any(|v| v.family() == family && v.index() >= from_index)
        })
    }

    /// Renames every variable `(family, k)` to `(target, k + shift)`; other
    /// families are untouched.
    pub fn substitute_family(
        &self,
        family: Family,
        target: Family,
        shift: i64,
    ) -> Result<Polynomial> {
        if family == Family::T || target == Family::T {
            return Err(Error::InvalidArgument(
                "the interpolation variable t cannot be index-shifted".into(),
            ));
        }
        for v in self.variables() {
            if v.family() == family {
                let index = i64::from(v.index()) + shift;
                if index < 1 || index > i64::from(u32::MAX) {
                    return Err(Error::IndexUnderflow {
                        family,
                        shift,
                        index,
                    });
                }
            }
        }
        Ok(self.map_variables(|v| {
            if v.family() == family {
                Variable::new(target, (i64::from(v.index()) + shift) as u32)
            } else {
                v
            }
        }))
    }

    /// Applies a variable renaming, merging terms that collide.
    pub fn map_variables(&self, mut f: impl FnMut(Variable) -> Variable) -> Polynomial {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut out, m.map_variables(&mut f), c.clone());
        }
        Polynomial { terms: out }.checked()
    }

    /// Substitutes polynomials for variables (variables without an image are kept).
    pub fn compose(&self, image: impl Fn(Variable) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.powers() {
                let base = image(v).unwrap_or_else(|| Polynomial::var(v));
                t = &t * &base.pow(e);
            }
            out += &t;
        }
        out
    }

    pub fn eval_int(&self, assignment: &BTreeMap<Variable, BigInt>) -> Result<BigInt> {
        self.eval_with(|v| assignment.get(&v).cloned())
    }

    pub fn eval_with(&self, value: impl Fn(Variable) -> Option<BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                let x = value(v).ok_or(Error::UnassignedVariable(v))?;
                t *= num_traits::pow(x, e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Monomials whose coefficients differ between `self` and `other`, in
    /// descending order.
    pub fn differing_monomials(&self, other: &Polynomial) -> Vec<Monomial> {
        let diff = self - other;
        diff.terms.keys().rev().cloned().collect()
    }

    pub fn canonical_text(&self) -> String {
        self.to_string()
    }

    /// No zero coefficients are stored and every monomial is normalized.
    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| !c.is_zero() && m.is_canonical())
    }

    #[inline]
    fn checked(self) -> Self {
        debug_assert!(self.is_canonical(), "non-canonical polynomial");
        self
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, m.clone(), c.clone());
        }
        debug_assert!(self.is_canonical());
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, m.clone(), -c.clone());
        }
        debug_assert!(self.is_canonical());
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_capped(rhs, None)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { (&self).$f(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial { (&self).$f(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Polynomial {
        Polynomial::x(i)
    }
    fn y(i: u32) -> Polynomial {
        Polynomial::y(i)
    }

    #[test]
    fn add_examples() {
        assert_eq!((x(1) + x(2)).to_string(), "x1 + x2");
        assert!((x(1) + x(1).scale(-1)).is_zero());
        let p = &x(1) * &x(2) + Polynomial::constant(2);
        assert_eq!((p + &x(1) * &x(2)).to_string(), "2*x1*x2 + 2");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(((x(1) - x(2)) * (x(1) + x(2))).to_string(), "x1^2 - x2^2");
        let p = Polynomial::one() + &x(1) * &y(1);
        assert_eq!(p.mul_capped(&p, Some(2)).to_string(), "2*x1*y1 + 1");
        assert!((x(1) * Polynomial::zero()).is_zero());
    }

    #[test]
    fn exact_div_examples() {
        let p = x(1).pow(2) - x(2).pow(2);
        assert_eq!(p.exact_div(&(x(1) - x(2))).unwrap(), x(1) + x(2));
        assert!(matches!(
            x(1).exact_div(&x(2)),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(
            x(1).exact_div(&Polynomial::constant(2)),
            Err(Error::NotDivisible { .. })
        ));
        assert!(x(1).exact_div(&Polynomial::zero()).is_err());
        assert!(Polynomial::zero().exact_div(&x(3)).unwrap().is_zero());
    }

    #[test]
    fn substitute_zero_examples() {
        assert_eq!((x(1) - x(3)).substitute_zero(Family::X, 3), x(1));
        let p = &x(1) * &x(2);
        assert_eq!(p.substitute_zero(Family::X, 3), p);
        assert_eq!((y(2) + x(5)).substitute_zero(Family::Y, 2), x(5));
    }

    #[test]
    fn substitute_family_examples() {
        let p = (x(1) - x(3))
            .substitute_family(Family::X, Family::X, 1)
            .unwrap();
        assert_eq!(p, x(2) - x(4));
        assert_eq!(
            x(3).substitute_family(Family::X, Family::A, -2).unwrap(),
            Polynomial::a(1)
        );
        assert_eq!(
            y(1).substitute_family(Family::X, Family::A, 0).unwrap(),
            y(1)
        );
        assert!(matches!(
            x(1).substitute_family(Family::X, Family::X, -1),
            Err(Error::IndexUnderflow { index: 0, .. })
        ));
    }

    #[test]
    fn eval_examples() {
        let assign: BTreeMap<_, _> = [
            (Variable::x(1), BigInt::from(5)),
            (Variable::x(2), BigInt::from(3)),
        ]
        .into_iter()
        .collect();
        assert_eq!((x(1) - x(2)).eval_int(&assign).unwrap(), BigInt::from(2));
        assert_eq!(
            Polynomial::zero().eval_int(&BTreeMap::new()).unwrap(),
            BigInt::zero()
        );
        let neg: BTreeMap<_, _> = [(Variable::x(1), BigInt::from(-3))].into_iter().collect();
        assert_eq!(x(1).pow(2).eval_int(&neg).unwrap(), BigInt::from(9));
        assert_eq!(
            x(7).eval_int(&assign),
            Err(Error::UnassignedVariable(Variable::x(7)))
        );
    }

    #[test]
    fn text_examples() {
        assert_eq!((x(1) + x(2)).canonical_text(), "x1 + x2");
        assert_eq!(Polynomial::zero().canonical_text(), "0");
        assert_eq!(
            (x(1).scale(-1) + x(1) - x(2) + x(1)).canonical_text(),
            "x1 - x2"
        );
        assert_eq!((-x(2) + x(1)).canonical_text(), "x1 - x2");
        let p =
            x(1).pow(2).scale(-3) + &Polynomial::t() * &Polynomial::a(2) - Polynomial::constant(4);
        assert_eq!(p.canonical_text(), "t*a2 - 3*x1^2 - 4");
    }

    #[test]
    fn degree_and_truncate() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(Polynomial::one().degree(), 0);
        let p = Polynomial::one() + x(1) + x(1).pow(3);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.truncate(1), Polynomial::one() + x(1));
    }

    #[test]
    fn compose_and_map() {
        let p = &x(1) * &x(2);
        let q = p.map_variables(|v| {
            if v == Variable::x(2) {
                Variable::x(1)
            } else {
                v
            }
        });
        assert_eq!(q, x(1).pow(2));
        let r = p.compose(|v| (v == Variable::x(2)).then(|| x(1) + Polynomial::one()));
        assert_eq!(r, x(1).pow(2) + x(1));
    }
}
