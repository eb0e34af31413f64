//! Symmetric-function constructions over the polynomial ring: complete
//! homogeneous polynomials, determinants, alternants, the Vandermonde
//! product, bialternant and factorial quotients, and divided differences.

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::ring::{Family, Polynomial, Variable};

/// Matrices up to this size use Leibniz expansion; larger ones use Bareiss.
pub const LEIBNIZ_MAX: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a 0-based entry function.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<Polynomial>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j)?);
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        }))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

/// Exact determinant over the polynomial ring.
pub fn det(m: &PolyMatrix) -> Result<Polynomial> {
    let n = m.square()?;
    if n <= LEIBNIZ_MAX {
        det_leibniz(m)
    } else {
        det_bareiss(m)
    }
}

/// Signed sum over all permutations; no division.
pub fn det_leibniz(m: &PolyMatrix) -> Result<Polynomial> {
    let n = m.square()?;
    let mut total = Polynomial::zero();
    for_each_permutation(n, |perm, sign| {
        let mut prod = Polynomial::constant(sign);
        for (i, &j) in perm.iter().enumerate() {
            let e = m.get(i, j);
            if e.is_zero() {
                return;
            }
            prod = &prod * e;
        }
        total += &prod;
    });
    Ok(total)
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Polynomial> {
    let n = m.square()?;
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Calls `f(perm, sign)` for every permutation of `0..n`, in lexicographic
/// order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i64)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    loop {
        f(&perm, sign);
        // next lexicographic permutation, tracking the parity of the swaps
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        if i - 1 != j {
            sign = -sign;
        }
        let tail = n - i;
        perm[i..].reverse();
        if (tail / 2) % 2 == 1 {
            sign = -sign;
        }
    }
}

/// `h_k(x_1, …, x_n)`: the sum of all monomials of degree `k`. Zero for
/// negative `k`, one for `k = 0`.
pub fn complete_homogeneous(k: i64, n: u32) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    fn go(k: u32, first: u32, n: u32, acc: &mut Vec<u32>, out: &mut Vec<crate::ring::Monomial>) {
        if k == 0 {
            out.push(crate::ring::Monomial::from_powers(
                acc.iter().map(|&i| (Variable::x(i), 1)),
            ));
            return;
        }
        for i in first..=n {
            acc.push(i);
            go(k - 1, i, n, acc, out);
            acc.pop();
        }
    }
    let mut monomials = Vec::new();
    go(k as u32, 1, n, &mut Vec::new(), &mut monomials);
    Polynomial::from_terms(monomials.into_iter().map(|m| (m, 1)))
}

/// Index orientation of the Jacobi–Trudi matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JacobiTrudiIndex {
    /// Entry `(i, j)` is `h_{λ_i − i + j}`.
    #[default]
    ColMinusRow,
    /// Entry `(i, j)` is `h_{λ_i + i − j}`. Only agrees with the Schur
    /// polynomial on shapes whose matrix is symmetric under this flip; kept
    /// as a negative control.
    RowMinusCol,
}

pub fn jacobi_trudi_matrix(
    shape: &Partition,
    n: u32,
    index: JacobiTrudiIndex,
    size: usize,
) -> PolyMatrix {
    PolyMatrix::from_fn(size, size, |i, j| {
        let (i1, j1) = (i as i64 + 1, j as i64 + 1);
        let lambda = i64::from(shape.part(i + 1));
        let k = match index {
            JacobiTrudiIndex::ColMinusRow => lambda - i1 + j1,
            JacobiTrudiIndex::RowMinusCol => lambda + i1 - j1,
        };
        complete_homogeneous(k, n)
    })
}

/// `S_λ = det(h_{λ_i − i + j})` on the `r × r` matrix, `r = rows(λ)`.
pub fn jacobi_trudi(shape: &Partition, n: u32) -> Polynomial {
    jacobi_trudi_with(shape, n, JacobiTrudiIndex::ColMinusRow)
}

pub fn jacobi_trudi_with(shape: &Partition, n: u32, index: JacobiTrudiIndex) -> Polynomial {
    let m = jacobi_trudi_matrix(shape, n, index, shape.rows());
    det(&m).expect("Jacobi-Trudi matrix is square")
}

fn require_rows(shape: &Partition, n: u32) -> Result<()> {
    if shape.rows() > n as usize {
        return Err(Error::InvalidArgument(format!(
            "{shape} has more than {n} rows"
        )));
    }
    Ok(())
}

/// `det(x_i^{λ_j + n − j})` for `λ` padded to length `n`.
pub fn alternant(shape: &Partition, n: u32) -> Result<Polynomial> {
    require_rows(shape, n)?;
    let n = n as usize;
    let m = PolyMatrix::from_fn(n, n, |i, j| {
        let exp = shape.part(j + 1) + (n - j - 1) as u32;
        Polynomial::x(i as u32 + 1).pow(exp)
    });
    det(&m)
}

/// `Π_{1≤i<j≤n} (x_i − x_j)`, expanded directly from the product.
pub fn vandermonde(n: u32) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 1..=n {
        for j in i + 1..=n {
            p = &p * &(Polynomial::x(i) - Polynomial::x(j));
        }
    }
    p
}

/// `det(x_i^{λ_j+n−j}) / det(x_i^{n−j})`, the division being exact.
pub fn bialternant(shape: &Partition, n: u32) -> Result<Polynomial> {
    alternant(shape, n)?.exact_div(&vandermonde(n))
}

/// `(v | a)^k = (v − a_1) ⋯ (v − a_k)`.
pub fn falling_power(v: Variable, k: u32) -> Polynomial {
    (1..=k)
        .map(|t| Polynomial::var(v) - Polynomial::a(t))
        .product()
}

/// `det[(x_j | a)^{λ_i + n − i}]`.
pub fn factorial_alternant(shape: &Partition, n: u32) -> Result<Polynomial> {
    require_rows(shape, n)?;
    let n = n as usize;
    let m = PolyMatrix::from_fn(n, n, |i, j| {
        let exp = shape.part(i + 1) + (n - i - 1) as u32;
        falling_power(Variable::x(j as u32 + 1), exp)
    });
    det(&m)
}

pub fn factorial_schur_quotient(shape: &Partition, n: u32) -> Result<Polynomial> {
    factorial_alternant(shape, n)?.exact_div(&vandermonde(n))
}

/// The divided difference `f[x_1, …, x_k]` of `f(x) = x^power`, via
///
/// `f[x_1..x_k] = (f[x_1..x_{k−1}] − f[x_2..x_k]) / (x_1 − x_k)`
///
/// where `f[x_2..x_k]` is `f[x_1..x_{k−1}]` with every index shifted up by one.
pub fn divided_difference(power: u32, k: u32) -> Result<Polynomial> {
    if k == 0 || k > power + 1 {
        return Err(Error::InvalidArgument(format!(
            "divided difference of x^{power} needs 1 <= k <= {}, got {k}",
            power + 1
        )));
    }
    let mut f = Polynomial::x(1).pow(power);
    for level in 2..=k {
        let shifted = f.substitute_family(Family::X, Family::X, 1)?;
        f = (&f - &shifted).exact_div(&(Polynomial::x(1) - Polynomial::x(level)))?;
    }
    Ok(f)
}

/// `f[x_start, …, x_{start+k−1}]` for `f(x) = x^power`.
pub fn divided_difference_from(power: u32, start: u32, k: u32) -> Result<Polynomial> {
    divided_difference(power, k)?.substitute_family(Family::X, Family::X, i64::from(start) - 1)
}

/// Newton form of `t^power` on the nodes `x_1, …, x_power`:
/// `Σ_k f[x_1..x_{k+1}] · (t − x_1) ⋯ (t − x_k)`.
pub fn newton_expand(power: u32) -> Result<Polynomial> {
    let mut total = Polynomial::zero();
    let mut basis = Polynomial::one();
    for k in 0..=power {
        if k > 0 {
            basis = &basis * &(Polynomial::t() - Polynomial::x(k));
        }
        total += &(&divided_difference(power, k + 1)? * &basis);
    }
    Ok(total)
}
