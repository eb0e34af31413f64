//! Partitions, semistandard Young tableaux, and the tableau-sum definitions of
//! Schur and factorial Schur polynomials.
//!
//! Cells are addressed `(row, col)`, 1-based, in English notation: row 1 is
//! the top row, rows weakly increase to the right and columns strictly
//! increase downwards.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Variable};

/// A weakly decreasing sequence of positive parts (trailing zeros stripped).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|c| self.0.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len as usize).map(move |c| (r + 1, c)))
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (1..=n).map(|i| self.part(i)).collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[2,1]"`; `"[]"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidPartition(format!("{s:?}: {why}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected brackets, e.g. [2,1]"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| bad("parts must be non-negative integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Partitions of `size` with at most `max_rows` rows and parts at most
/// `max_part`, in decreasing lexicographic order.
pub fn partitions_of(size: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
    fn go(rest: u32, max_rows: usize, bound: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if prefix.len() == max_rows {
            return;
        }
        for p in (1..=bound.min(rest)).rev() {
            prefix.push(p);
            go(rest - p, max_rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, max_rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions fitting in a box of `max_rows` rows and `max_cols`
/// columns, ordered by size and then decreasing lexicographically. There are
/// `C(max_rows + max_cols, max_rows)` of them.
pub fn partitions_in_box(max_rows: usize, max_cols: u32) -> Vec<Partition> {
    let top = max_rows as u32 * max_cols;
    (0..=top)
        .flat_map(|s| partitions_of(s, max_rows, max_cols))
        .collect()
}

/// All partitions with at most `max_rows` rows and size at most `max_size`,
/// ordered as in [`partitions_in_box`].
pub fn partitions_up_to(max_rows: usize, max_size: u32) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_of(s, max_rows, s))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<u32>,
}

impl Tableau {
    /// `entries` are row-major; validity (semistandardness) is checked.
    pub fn new(shape: Partition, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.size() as usize {
            return Err(Error::InvalidArgument(format!(
                "tableau of shape {shape} needs {} entries, got {}",
                shape.size(),
                entries.len()
            )));
        }
        let t = Tableau { shape, entries };
        if !t.is_semistandard() {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not semistandard",
                t.entries
            )));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        let offset: usize = self.shape.parts()[..row - 1]
            .iter()
            .map(|&p| p as usize)
            .sum();
        self.entries[offset + col - 1]
    }

    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|&e| e >= 1)
            && self.shape.cells().all(|(r, c)| {
                let v = self.get(r, c);
                let row_ok = c == 1 || self.get(r, c - 1) <= v;
                let col_ok = r == 1 || self.get(r - 1, c) < v;
                row_ok && col_ok
            })
    }

    /// `x^T = x_1^{N_1} ⋯ x_n^{N_n}` where `N_i` counts the letter `i`.
    pub fn monomial(&self) -> Polynomial {
        Polynomial::term(
            Monomial::from_powers(self.entries.iter().map(|&e| (Variable::x(e), 1))),
            1,
        )
    }
}

/// Lazy backtracking enumeration of semistandard tableaux.
///
/// Cells are filled row-major, each with the smallest legal letter first, so
/// the stream order is deterministic.
pub struct SsytIter {
    shape: Partition,
    cells: Vec<(usize, usize)>,
    // index of the cell to the left / above, if any
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    upper: Vec<u32>,
    entries: Vec<u32>,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn new(shape: &Partition, n: u32) -> Self {
        let cells: Vec<_> = shape.cells().collect();
        let conj = shape.conjugate();
        let index_of = |r: usize, c: usize| -> usize {
            shape.parts()[..r - 1]
                .iter()
                .map(|&p| p as usize)
                .sum::<usize>()
                + c
                - 1
        };
        let left = cells
            .iter()
            .map(|&(r, c)| (c > 1).then(|| index_of(r, c - 1)))
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| (r > 1).then(|| index_of(r - 1, c)))
            .collect();
        // a cell must leave room for the strictly larger letters below it
        let upper = cells
            .iter()
            .map(|&(r, c)| {
                let below = conj.part(c) as i64 - r as i64;
                (n as i64 - below).max(0) as u32
            })
            .collect();
        SsytIter {
            shape: shape.clone(),
            entries: vec![0; cells.len()],
            cells,
            left,
            above,
            upper,
            started: false,
            done: shape.rows() > n as usize,
        }
    }

    fn lower(&self, k: usize) -> u32 {
        let l = self.left[k].map_or(1, |i| self.entries[i]);
        let a = self.above[k].map_or(1, |i| self.entries[i] + 1);
        l.max(a)
    }

    /// Fills cells `from..` minimally; returns the first cell that could not
    /// be filled.
    fn fill(&mut self, from: usize) -> Option<usize> {
        for k in from..self.cells.len() {
            let lo = self.lower(k);
            if lo > self.upper[k] {
                return Some(k);
            }
            self.entries[k] = lo;
        }
        None
    }

    fn emit(&self) -> Tableau {
        let t = Tableau {
            shape: self.shape.clone(),
            entries: self.entries.clone(),
        };
        debug_assert!(t.is_semistandard());
        t
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let mut k = if self.started {
            self.cells.len()
        } else {
            self.started = true;
            match self.fill(0) {
                None => return Some(self.emit()),
                Some(stuck) => stuck,
            }
        };
        loop {
            if k == 0 {
                self.done = true;
                return None;
            }
            k -= 1;
            self.entries[k] += 1;
            if self.entries[k] > self.upper[k] {
                continue;
            }
            match self.fill(k + 1) {
                None => return Some(self.emit()),
                Some(stuck) => k = stuck,
            }
        }
    }
}

/// Every semistandard tableau of shape `shape` in the letters `1..=n`.
pub fn ssyt_enumerate(shape: &Partition, n: u32) -> SsytIter {
    SsytIter::new(shape, n)
}

pub fn tableau_monomial(t: &Tableau) -> Polynomial {
    t.monomial()
}

/// `S_λ(x_1, …, x_n)` as the sum of `x^T` over semistandard tableaux.
pub fn schur_tableaux(shape: &Partition, n: u32) -> Polynomial {
    Polynomial::from_terms(ssyt_enumerate(shape, n).map(|t| {
        (
            Monomial::from_powers(t.entries.iter().map(|&e| (Variable::x(e), 1))),
            1,
        )
    }))
}

/// Which `a`-index a factorial tableau cell `(i, j)` holding letter `T`
/// contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorialConvention {
    /// `a_{T + j − i}`: the letter shifted by the cell's content. This is the
    /// convention under which the tableau sum equals the determinant quotient.
    #[default]
    Content,
    /// `a_{T + i − j}`: the transposed shift. Cells with index below 1 are
    /// rejected rather than guessed.
    Transposed,
}

impl FactorialConvention {
    pub fn index(self, letter: u32, row: usize, col: usize) -> i64 {
        let shift = row as i64 - col as i64;
        match self {
            FactorialConvention::Content => letter as i64 - shift,
            FactorialConvention::Transposed => letter as i64 + shift,
        }
    }
}

/// `Π_{(i,j)} (x_{T(i,j)} − a_{index(i,j)})` over the cells of `t`.
pub fn factorial_tableau_weight(
    t: &Tableau,
    convention: FactorialConvention,
) -> Result<Polynomial> {
    let mut w = Polynomial::one();
    for (r, c) in t.shape.cells() {
        let letter = t.get(r, c);
        let index = convention.index(letter, r, c);
        if index < 1 {
            return Err(Error::FactorialIndex {
                row: r,
                col: c,
                index,
            });
        }
        let factor = Polynomial::x(letter) - Polynomial::a(index as u32);
        w = &w * &factor;
    }
    Ok(w)
}

/// `S_λ(x | a)` as a sum of factorial tableau weights.
pub fn factorial_schur_tableaux(
    shape: &Partition,
    n: u32,
    convention: FactorialConvention,
) -> Result<Polynomial> {
    let mut total = Polynomial::zero();
    for t in ssyt_enumerate(shape, n) {
        total += &factorial_tableau_weight(&t, convention)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Family;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_parsing_and_display() {
        assert_eq!(part("[2,1]").parts(), &[2, 1]);
        assert_eq!(part("[]"), Partition::empty());
        assert_eq!(part("[3,0,0]").to_string(), "[3]");
        assert_eq!(part(" [ 2 , 2 ] ").to_string(), "[2,2]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[-1]".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part("[3,1]").conjugate(), part("[2,1,1]"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part("[2,2]").conjugate(), part("[2,2]"));
    }

    #[test]
    fn box_examples() {
        assert_eq!(partitions_in_box(1, 1), vec![part("[]"), part("[1]")]);
        let b = partitions_in_box(2, 2);
        let shown: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["[]", "[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"]);
        assert_eq!(partitions_in_box(0, 5), vec![Partition::empty()]);
        assert_eq!(partitions_in_box(3, 0), vec![Partition::empty()]);
    }

    #[test]
    fn ssyt_examples() {
        let cols: Vec<_> = ssyt_enumerate(&part("[1,1]"), 2).collect();
        assert_eq!(cols.len(), 1);
        assert_eq!(cols[0].entries(), &[1, 2]);
        assert_eq!(ssyt_enumerate(&part("[2,1]"), 3).count(), 8);
        assert_eq!(ssyt_enumerate(&part("[1,1,1]"), 2).count(), 0);
        assert_eq!(ssyt_enumerate(&Partition::empty(), 3).count(), 1);
        assert_eq!(ssyt_enumerate(&part("[1]"), 0).count(), 0);
    }

    #[test]
    fn ssyt_order_is_row_major_lexicographic() {
        let got: Vec<Vec<u32>> = ssyt_enumerate(&part("[2,1]"), 3)
            .map(|t| t.entries().to_vec())
            .collect();
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(got, sorted);
        assert_eq!(got[0], vec![1, 1, 2]);
    }

    #[test]
    fn monomial_examples() {
        let row = Tableau::new(part("[2]"), vec![1, 2]).unwrap();
        let col = Tableau::new(part("[1,1]"), vec![1, 2]).unwrap();
        let sq = Tableau::new(part("[2]"), vec![1, 1]).unwrap();
        assert_eq!(tableau_monomial(&row).to_string(), "x1*x2");
        assert_eq!(tableau_monomial(&col).to_string(), "x1*x2");
        assert_eq!(tableau_monomial(&sq).to_string(), "x1^2");
        assert!(Tableau::new(part("[1,1]"), vec![1, 1]).is_err());
        assert!(Tableau::new(part("[2]"), vec![2, 1]).is_err());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_tableaux(&part("[1]"), 2).to_string(), "x1 + x2");
        assert_eq!(schur_tableaux(&part("[1,1]"), 2).to_string(), "x1*x2");
        assert_eq!(schur_tableaux(&Partition::empty(), 2), Polynomial::one());
        assert!(schur_tableaux(&part("[1,1,1]"), 2).is_zero());
        let expected: Polynomial =
            "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x3^2 + x2^2*x3 + x2*x3^2 + 2*x1*x2*x3"
                .parse()
                .unwrap();
        assert_eq!(schur_tableaux(&part("[2,1]"), 3), expected);
    }

    #[test]
    fn factorial_weight_examples() {
        let single = Tableau::new(part("[1]"), vec![1]).unwrap();
        assert_eq!(
            factorial_tableau_weight(&single, FactorialConvention::Content).unwrap(),
            Polynomial::x(1) - Polynomial::a(1)
        );
        let col = Tableau::new(part("[1,1]"), vec![1, 2]).unwrap();
        // transposed shift: cell (2,1) holds 2 and gets a_{2+2-1}
        assert_eq!(
            factorial_tableau_weight(&col, FactorialConvention::Transposed).unwrap(),
            (Polynomial::x(1) - Polynomial::a(1)) * (Polynomial::x(2) - Polynomial::a(3))
        );
        // content shift: cell (2,1) gets a_{2-1}
        assert_eq!(
            factorial_tableau_weight(&col, FactorialConvention::Content).unwrap(),
            (Polynomial::x(1) - Polynomial::a(1)) * (Polynomial::x(2) - Polynomial::a(1))
        );
        let row = Tableau::new(part("[2]"), vec![1, 1]).unwrap();
        assert_eq!(
            factorial_tableau_weight(&row, FactorialConvention::Transposed),
            Err(Error::FactorialIndex {
                row: 1,
                col: 2,
                index: 0
            })
        );
        for conv in [
            FactorialConvention::Content,
            FactorialConvention::Transposed,
        ] {
            let w = factorial_tableau_weight(&col, conv).unwrap();
            assert_eq!(w.substitute_zero(Family::A, 1), col.monomial());
        }
    }

    #[test]
    fn factorial_schur_examples() {
        let s = factorial_schur_tableaux(&part("[1]"), 2, FactorialConvention::Content).unwrap();
        // tableaux [1] and [2] contribute (x1 - a1) and (x2 - a2)
        assert_eq!(
            s,
            Polynomial::x(1) - Polynomial::a(1) + Polynomial::x(2) - Polynomial::a(2)
        );
        assert_eq!(
            factorial_schur_tableaux(&Partition::empty(), 3, FactorialConvention::Content).unwrap(),
            Polynomial::one()
        );
        let lam = part("[2,1]");
        let f = factorial_schur_tableaux(&lam, 3, FactorialConvention::Content).unwrap();
        assert_eq!(f.substitute_zero(Family::A, 1), schur_tableaux(&lam, 3));
    }
}
