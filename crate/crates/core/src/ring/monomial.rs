use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Variable families. The declaration order is the variable order used
/// everywhere: `T < X < Y < A`, then index ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// The single free variable of Newton interpolation, rendered `t`.
    T,
    X,
    Y,
    A,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::T => 't',
            Family::X => 'x',
            Family::Y => 'y',
            Family::A => 'a',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    /// Panics if `index` is zero for an indexed family.
    pub fn new(family: Family, index: u32) -> Self {
        match family {
            Family::T => Variable { family, index: 0 },
            _ => {
                assert!(index >= 1, "{family:?} variables are indexed from 1");
                Variable { family, index }
            }
        }
    }

    pub fn x(index: u32) -> Self {
        Self::new(Family::X, index)
    }

    pub fn y(index: u32) -> Self {
        Self::new(Family::Y, index)
    }

    pub fn a(index: u32) -> Self {
        Self::new(Family::A, index)
    }

    pub fn t() -> Self {
        Self::new(Family::T, 0)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::T => write!(f, "t"),
            fam => write!(f, "{}{}", fam.letter(), self.index),
        }
    }
}

/// A power product, stored sparsely as `(variable, exponent)` pairs sorted by
/// variable with no zero exponents.
///
/// Ordering is graded lexicographic: total degree first, then the exponent of
/// the earliest variable in the variable order decides, so `x1 > x2 > y1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Variable, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Monomial {
            powers: vec![(v, exp)],
            degree: exp,
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut v: Vec<(Variable, u32)> = powers.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(var, _)| var);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match merged.last_mut() {
                Some((last, le)) if *last == var => *le += e,
                _ => merged.push((var, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial {
            powers: merged,
            degree,
        }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn degree_in(&self, family: Family) -> u32 {
        self.powers
            .iter()
            .filter(|(v, _)| v.family == family)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.powers
            .binary_search_by_key(&v, |&(var, _)| var)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.powers.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.powers, &other.powers);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            powers: out,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                let d = other.powers[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial {
            powers: out,
            degree: self.degree - other.degree,
        })
    }

    pub(crate) fn map_variables(&self, mut f: impl FnMut(Variable) -> Variable) -> Monomial {
        Monomial::from_powers(self.powers.iter().map(|&(v, e)| (f(v), e)))
    }

    pub(crate) fn is_canonical(&self) -> bool {
        self.powers.iter().all(|&(_, e)| e > 0)
            && self.powers.windows(2).all(|w| w[0].0 < w[1].0)
            && self.degree == self.powers.iter().map(|&(_, e)| e).sum::<u32>()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (p, q) in self.powers.iter().zip(other.powers.iter()) {
                if p.0 != q.0 {
                    // The monomial holding the earlier variable has the larger
                    // exponent there (the other one has zero).
                    return q.0.cmp(&p.0);
                }
                if p.1 != q.1 {
                    return p.1.cmp(&q.1);
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
