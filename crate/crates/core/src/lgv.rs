//! Weighted lattice graphs, path-weight sums `e(u, v)`, and the
//! Lindström–Gessel–Viennot lemma as an executable equality.
//!
//! Points are `(col, row)`, both 1-based: `col` grows to the right, `row`
//! grows upwards. Every graph is a finite window `1..=col_bound` ×
//! `1..=row_bound` of the infinite lattice. All edges go up one row or move
//! one column along a row, so each window is a DAG.
//!
//! Three weight schemes are supported:
//!
//! * [`SchemeKind::JacobiTrudi`]: `(i,j)→(i+1,j)` has weight `x_j`.
//! * [`SchemeKind::SchurWeighted`]: `(i,j)→(i+1,j)` has weight `x_j − x_{i+j}`.
//! * [`SchemeKind::CauchyDoubled`]: rows `1..=2n`; the lower half is the
//!   Schur-weighted graph, the upper half runs leftwards with
//!   `(i+1,j)→(i,j)` weighted `y_{2n+1−j} − y_{i+2n+1−j}`.
//!
//! Vertical edges always have weight 1. An optional truncation sets
//! `x_k = y_k = 0` for `k ≥ truncate_at`, and an optional degree cap turns
//! every product into a product in the degree-truncated ring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::ring::{Family, Polynomial};
use crate::symfun::{det, for_each_permutation, PolyMatrix};

/// Single-pair path counts above this are refused by the brute-force side.
pub const MAX_PAIR_PATHS: u128 = 1_000_000;
/// Non-intersecting systems above this are refused.
pub const MAX_SYSTEMS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub col: i64,
    pub row: i64,
}

impl LatticePoint {
    pub const fn new(col: i64, row: i64) -> Self {
        LatticePoint { col, row }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

pub fn pt(col: i64, row: i64) -> LatticePoint {
    LatticePoint::new(col, row)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeKind {
    JacobiTrudi,
    SchurWeighted,
    CauchyDoubled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeScheme {
    pub kind: SchemeKind,
    pub n: u32,
    pub truncate_at: Option<u32>,
    pub col_bound: u32,
    pub degree_cap: Option<u32>,
    /// Negative-control hook: shifts the second index of every horizontal
    /// weight by one, breaking every identity built on the scheme.
    pub tamper: bool,
}

impl LatticeScheme {
    pub fn jacobi_trudi(n: u32, col_bound: u32) -> Self {
        LatticeScheme {
            kind: SchemeKind::JacobiTrudi,
            n,
            truncate_at: None,
            col_bound,
            degree_cap: None,
            tamper: false,
        }
    }

    pub fn schur_weighted(n: u32, col_bound: u32) -> Self {
        LatticeScheme {
            kind: SchemeKind::SchurWeighted,
            ..Self::jacobi_trudi(n, col_bound)
        }
    }

    /// The doubled graph with both alphabets truncated at `n + 1`.
    pub fn cauchy_doubled(n: u32, col_bound: u32, degree_cap: Option<u32>) -> Self {
        LatticeScheme {
            kind: SchemeKind::CauchyDoubled,
            n,
            truncate_at: Some(n + 1),
            col_bound,
            degree_cap,
            tamper: false,
        }
    }

    pub fn truncated(mut self, at: u32) -> Self {
        self.truncate_at = Some(at);
        self
    }

    pub fn tampered(mut self) -> Self {
        self.tamper = true;
        self
    }

    pub fn widened(&self, extra_cols: u32) -> Self {
        LatticeScheme {
            col_bound: self.col_bound + extra_cols,
            ..self.clone()
        }
    }

    pub fn row_bound(&self) -> u32 {
        match self.kind {
            SchemeKind::CauchyDoubled => 2 * self.n,
            _ => self.n,
        }
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        (1..=i64::from(self.col_bound)).contains(&p.col)
            && (1..=i64::from(self.row_bound())).contains(&p.row)
    }

    fn check(&self, p: LatticePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfBounds(format!(
                "{p} (window is cols 1..={}, rows 1..={})",
                self.col_bound,
                self.row_bound()
            )))
        }
    }

    /// Rows whose horizontal edges run right to left.
    fn leftward(&self, row: i64) -> bool {
        self.kind == SchemeKind::CauchyDoubled && row > i64::from(self.n)
    }

    fn truncate(&self, p: Polynomial) -> Polynomial {
        match self.truncate_at {
            Some(k) => p
                .substitute_zero(Family::X, k)
                .substitute_zero(Family::Y, k),
            None => p,
        }
    }

    /// Weight of the horizontal edge leaving column `col` on `row` (towards
    /// `col + 1`, or for leftward rows the edge `(col+1,row)→(col,row)`).
    pub fn horizontal_weight(&self, col: i64, row: i64) -> Polynomial {
        let bump = i64::from(self.tamper);
        let idx = |k: i64| k as u32;
        let w = match self.kind {
            SchemeKind::JacobiTrudi => Polynomial::x(idx(row + bump)),
            SchemeKind::SchurWeighted => {
                Polynomial::x(idx(row)) - Polynomial::x(idx(col + row + bump))
            }
            SchemeKind::CauchyDoubled if !self.leftward(row) => {
                Polynomial::x(idx(row)) - Polynomial::x(idx(col + row + bump))
            }
            SchemeKind::CauchyDoubled => {
                let mirrored = 2 * i64::from(self.n) + 1 - row;
                Polynomial::y(idx(mirrored)) - Polynomial::y(idx(col + mirrored + bump))
            }
        };
        self.truncate(w)
    }

    /// Outgoing edges of `p` with their weights: the horizontal edge first,
    /// then the vertical one.
    pub fn out_edges(&self, p: LatticePoint) -> Vec<(LatticePoint, Polynomial)> {
        let mut out = Vec::with_capacity(2);
        if self.leftward(p.row) {
            if p.col > 1 {
                out.push((
                    pt(p.col - 1, p.row),
                    self.horizontal_weight(p.col - 1, p.row),
                ));
            }
        } else if p.col < i64::from(self.col_bound) {
            out.push((pt(p.col + 1, p.row), self.horizontal_weight(p.col, p.row)));
        }
        if p.row < i64::from(self.row_bound()) {
            out.push((pt(p.col, p.row + 1), Polynomial::one()));
        }
        out
    }

    fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        p.mul_capped(q, self.degree_cap)
    }
}

/// The scheme's window materialized as an indexed DAG.
struct Graph {
    scheme: LatticeScheme,
    points: Vec<LatticePoint>,
    out: Vec<Vec<(usize, Polynomial)>>,
    /// Topological order of vertex indices.
    order: Vec<usize>,
}

impl Graph {
    fn new(scheme: &LatticeScheme) -> Self {
        let cols = scheme.col_bound as i64;
        let rows = i64::from(scheme.row_bound());
        let points: Vec<LatticePoint> = (1..=rows)
            .flat_map(|r| (1..=cols).map(move |c| pt(c, r)))
            .collect();
        let index = |p: LatticePoint| ((p.row - 1) * cols + (p.col - 1)) as usize;
        let out = points
            .iter()
            .map(|&p| {
                scheme
                    .out_edges(p)
                    .into_iter()
                    .map(|(q, w)| (index(q), w))
                    .collect()
            })
            .collect();
        let mut order = Vec::with_capacity(points.len());
        for r in 1..=rows {
            if scheme.leftward(r) {
                order.extend((1..=cols).rev().map(|c| index(pt(c, r))));
            } else {
                order.extend((1..=cols).map(|c| index(pt(c, r))));
            }
        }
        Graph {
            scheme: scheme.clone(),
            points,
            out,
            order,
        }
    }

    fn index(&self, p: LatticePoint) -> Result<usize> {
        self.scheme.check(p)?;
        let cols = self.scheme.col_bound as i64;
        Ok(((p.row - 1) * cols + (p.col - 1)) as usize)
    }

    /// `e(source, v)` for every vertex `v`.
    fn weights_from(&self, source: usize) -> Vec<Polynomial> {
        let mut val = vec![Polynomial::zero(); self.points.len()];
        val[source] = Polynomial::one();
        for &v in &self.order {
            if val[v].is_zero() {
                continue;
            }
            let here = val[v].clone();
            for (w, wt) in &self.out[v] {
                let add = self.scheme.mul(&here, wt);
                val[*w] += &add;
            }
        }
        val
    }

    /// Number of directed paths (weights ignored) from `source` to every
    /// vertex, saturating.
    fn counts_from(&self, source: usize) -> Vec<u128> {
        let mut cnt = vec![0u128; self.points.len()];
        cnt[source] = 1;
        for &v in &self.order {
            if cnt[v] == 0 {
                continue;
            }
            for (w, _) in &self.out[v] {
                cnt[*w] = cnt[*w].saturating_add(cnt[v]);
            }
        }
        cnt
    }

    /// Vertices from which `target` is reachable.
    fn reaching(&self, target: usize) -> Vec<bool> {
        let mut reach = vec![false; self.points.len()];
        reach[target] = true;
        for &v in self.order.iter().rev() {
            if self.out[v].iter().any(|(w, _)| reach[*w]) {
                reach[v] = true;
            }
        }
        reach
    }
}

/// `e(a, b)`: the sum of path weights over all directed paths `a → b`.
pub fn e_weight(scheme: &LatticeScheme, a: LatticePoint, b: LatticePoint) -> Result<Polynomial> {
    let g = Graph::new(scheme);
    let (s, t) = (g.index(a)?, g.index(b)?);
    Ok(g.weights_from(s).swap_remove(t))
}

/// The matrix `[e(a_i, b_j)]`.
pub fn e_matrix(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
) -> Result<PolyMatrix> {
    let g = Graph::new(scheme);
    let targets = sinks
        .iter()
        .map(|&b| g.index(b))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::with_capacity(sources.len() * sinks.len());
    for &a in sources {
        let row = g.weights_from(g.index(a)?);
        entries.extend(targets.iter().map(|&t| row[t].clone()));
    }
    PolyMatrix::new(sources.len(), sinks.len(), entries)
}

/// `det(e(a_i, b_j))`, truncated to the scheme's degree cap when it has one.
pub fn lgv_det(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
) -> Result<Polynomial> {
    same_len(sources, sinks)?;
    let d = det(&e_matrix(scheme, sources, sinks)?)?;
    Ok(match scheme.degree_cap {
        Some(cap) => d.truncate(cap),
        None => d,
    })
}

/// The closed form `(x_1 − x_{m+n−1}) ⋯ (x_1 − x_{n+1})`; 1 when `m = 1`.
pub fn lemma_product(m: u32, n: u32) -> Polynomial {
    (n + 1..m + n)
        .map(|k| Polynomial::x(1) - Polynomial::x(k))
        .product()
}

/// `x_t^{m−1}`: the truncated path weight from `(1, t)` to `(m, n)`.
pub fn corollary_power(t: u32, m: u32, n: u32) -> Result<Polynomial> {
    if t == 0 || t >= n || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "need n > t >= 1 and m >= 1, got t={t}, m={m}, n={n}"
        )));
    }
    Ok(Polynomial::x(t).pow(m - 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub vertices: Vec<LatticePoint>,
    pub weight: Polynomial,
}

impl LatticePath {
    pub fn source(&self) -> LatticePoint {
        self.vertices[0]
    }

    pub fn sink(&self) -> LatticePoint {
        *self
            .vertices
            .last()
            .expect("paths have at least one vertex")
    }

    /// Recomputes the weight from the scheme's edges; `None` if two
    /// consecutive vertices are not joined by an edge.
    pub fn recompute_weight(&self, scheme: &LatticeScheme) -> Option<Polynomial> {
        let mut w = Polynomial::one();
        for pair in self.vertices.windows(2) {
            let (_, ew) = scheme
                .out_edges(pair[0])
                .into_iter()
                .find(|(q, _)| *q == pair[1])?;
            w = scheme.mul(&w, &ew);
        }
        Some(w)
    }
}

/// A tuple of pairwise vertex-disjoint paths, path `t` running from source
/// `t` to sink `sigma[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<LatticePath>,
    pub sigma: Vec<usize>,
    pub sign: i64,
}

impl PathSystem {
    pub fn weight(&self, scheme: &LatticeScheme) -> Polynomial {
        self.paths
            .iter()
            .fold(Polynomial::one(), |acc, p| scheme.mul(&acc, &p.weight))
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }
}

/// Lazy depth-first enumeration of all directed paths between two points.
pub struct PathIter {
    graph: Graph,
    target: usize,
    reach: Vec<bool>,
    stack: Vec<(usize, usize)>,
    weights: Vec<Polynomial>,
    source: usize,
    started: bool,
}

impl PathIter {
    fn current(&self) -> LatticePath {
        LatticePath {
            vertices: self
                .stack
                .iter()
                .map(|&(v, _)| self.graph.points[v])
                .collect(),
            weight: self.weights.last().cloned().unwrap_or_else(Polynomial::one),
        }
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if !self.started {
            self.started = true;
            if !self.reach[self.source] {
                return None;
            }
            self.stack.push((self.source, 0));
            self.weights.push(Polynomial::one());
            if self.source == self.target {
                return Some(self.current());
            }
        }
        loop {
            let top = self.stack.last_mut()?;
            let v = top.0;
            if v == self.target || top.1 >= self.graph.out[v].len() {
                self.stack.pop();
                self.weights.pop();
                continue;
            }
            let (w, ref wt) = self.graph.out[v][top.1];
            top.1 += 1;
            if !self.reach[w] {
                continue;
            }
            let weight = self.graph.scheme.mul(self.weights.last().unwrap(), wt);
            self.stack.push((w, 0));
            self.weights.push(weight);
            if w == self.target {
                return Some(self.current());
            }
        }
    }
}

/// Every directed path `a → b`, each exactly once, horizontal moves explored
/// before vertical ones.
pub fn enumerate_paths(
    scheme: &LatticeScheme,
    a: LatticePoint,
    b: LatticePoint,
) -> Result<PathIter> {
    let graph = Graph::new(scheme);
    let source = graph.index(a)?;
    let target = graph.index(b)?;
    let reach = graph.reaching(target);
    Ok(PathIter {
        graph,
        target,
        reach,
        stack: Vec::new(),
        weights: Vec::new(),
        source,
        started: false,
    })
}

/// Number of directed paths `a → b` (saturating at `u128::MAX`).
pub fn count_paths(scheme: &LatticeScheme, a: LatticePoint, b: LatticePoint) -> Result<u128> {
    let g = Graph::new(scheme);
    let (s, t) = (g.index(a)?, g.index(b)?);
    Ok(g.counts_from(s)[t])
}

fn same_len(sources: &[LatticePoint], sinks: &[LatticePoint]) -> Result<()> {
    if sources.len() != sinks.len() {
        return Err(Error::InvalidArgument(format!(
            "{} sources but {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    Ok(())
}

/// Paths between one source and one sink, each with its vertex indices.
type Candidates = Vec<(LatticePath, Vec<usize>)>;

/// Calls `visit` on every non-intersecting system, grouped by permutation in
/// lexicographic order.
pub fn for_each_nonintersecting(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
    mut visit: impl FnMut(&[&LatticePath], &[usize], i64),
) -> Result<usize> {
    same_len(sources, sinks)?;
    let graph = Graph::new(scheme);
    let n = sources.len();
    let src = sources
        .iter()
        .map(|&a| graph.index(a))
        .collect::<Result<Vec<_>>>()?;
    let dst = sinks
        .iter()
        .map(|&b| graph.index(b))
        .collect::<Result<Vec<_>>>()?;

    for &s in &src {
        let counts = graph.counts_from(s);
        for (&t, b) in dst.iter().zip(sinks) {
            if counts[t] > MAX_PAIR_PATHS {
                return Err(Error::TooLarge(format!(
                    "{} paths from {} to {b} exceed the brute-force limit of {MAX_PAIR_PATHS}",
                    counts[t], graph.points[s]
                )));
            }
        }
    }

    let cols = scheme.col_bound as i64;
    let index = |p: LatticePoint| ((p.row - 1) * cols + (p.col - 1)) as usize;
    // paths[i][j]: paths from source i to sink j
    let mut paths: Vec<Vec<Candidates>> = Vec::with_capacity(n);
    for &a in sources {
        let mut row = Vec::with_capacity(n);
        for &b in sinks {
            let list = enumerate_paths(scheme, a, b)?
                .map(|p| {
                    let idx = p.vertices.iter().map(|&q| index(q)).collect();
                    (p, idx)
                })
                .collect();
            row.push(list);
        }
        paths.push(row);
    }

    struct Search<'a, F> {
        paths: &'a [Vec<Candidates>],
        occupied: Vec<bool>,
        chosen: Vec<&'a LatticePath>,
        found: usize,
        visit: F,
    }

    impl<'a, F: FnMut(&[&LatticePath], &[usize], i64)> Search<'a, F> {
        fn go(&mut self, t: usize, sigma: &[usize], sign: i64) -> Result<()> {
            if t == sigma.len() {
                self.found += 1;
                if self.found > MAX_SYSTEMS {
                    return Err(Error::TooLarge(format!(
                        "more than {MAX_SYSTEMS} non-intersecting systems"
                    )));
                }
                (self.visit)(&self.chosen, sigma, sign);
                return Ok(());
            }
            let paths = self.paths;
            for (path, idx) in &paths[t][sigma[t]] {
                if idx.iter().any(|&v| self.occupied[v]) {
                    continue;
                }
                for &v in idx {
                    self.occupied[v] = true;
                }
                self.chosen.push(path);
                let r = self.go(t + 1, sigma, sign);
                self.chosen.pop();
                for &v in idx {
                    self.occupied[v] = false;
                }
                r?;
            }
            Ok(())
        }
    }

    let mut search = Search {
        paths: &paths,
        occupied: vec![false; graph.points.len()],
        chosen: Vec::with_capacity(n),
        found: 0,
        visit: &mut visit,
    };
    let mut outcome = Ok(());
    for_each_permutation(n, |sigma, sign| {
        if outcome.is_ok() {
            outcome = search.go(0, sigma, sign);
        }
    });
    outcome?;
    Ok(search.found)
}

/// All non-intersecting path systems, materialized.
pub fn nonintersecting_systems(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
) -> Result<Vec<PathSystem>> {
    let mut out = Vec::new();
    for_each_nonintersecting(scheme, sources, sinks, |paths, sigma, sign| {
        out.push(PathSystem {
            paths: paths.iter().map(|&p| p.clone()).collect(),
            sigma: sigma.to_vec(),
            sign,
        });
    })?;
    Ok(out)
}

/// `Σ_σ sgn σ Σ X_{P_1} ⋯ X_{P_n}` over non-intersecting systems, by brute force.
pub fn nonintersecting_sum(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
) -> Result<Polynomial> {
    Ok(nonintersecting_sum_counted(scheme, sources, sinks)?.0)
}

/// The signed sum together with the number of systems found.
pub fn nonintersecting_sum_counted(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
) -> Result<(Polynomial, usize)> {
    let mut total = Polynomial::zero();
    let count = for_each_nonintersecting(scheme, sources, sinks, |paths, _, sign| {
        let w = paths.iter().fold(Polynomial::constant(sign), |acc, p| {
            scheme.mul(&acc, &p.weight)
        });
        total += &w;
    })?;
    Ok((total, count))
}

/// Sources `(i, 1)` and sinks `(i + λ_{n+1−i}, n)`.
pub fn schur_endpoints(shape: &Partition, n: u32) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    let n = n as usize;
    let sources = (1..=n).map(|i| pt(i as i64, 1)).collect();
    let sinks = (1..=n)
        .map(|i| pt((i as u32 + shape.part(n + 1 - i)) as i64, n as i64))
        .collect();
    (sources, sinks)
}

/// The Jacobi–Trudi graph wide enough for every path to `shape`'s sinks.
pub fn schur_scheme(shape: &Partition, n: u32) -> LatticeScheme {
    LatticeScheme::jacobi_trudi(n, shape.part(1) + n)
}

/// `S_λ` as the weight of all non-intersecting systems on the Jacobi–Trudi
/// graph. Every system found must pair each source with its own sink.
pub fn schur_via_lgv(shape: &Partition, n: u32) -> Result<Polynomial> {
    if shape.rows() > n as usize {
        return Ok(Polynomial::zero());
    }
    let scheme = schur_scheme(shape, n);
    let (sources, sinks) = schur_endpoints(shape, n);
    let mut total = Polynomial::zero();
    let mut crossing = None;
    for_each_nonintersecting(&scheme, &sources, &sinks, |paths, sigma, _| {
        if sigma.iter().enumerate().any(|(i, &s)| i != s) {
            crossing.get_or_insert_with(|| sigma.to_vec());
        }
        total += &paths
            .iter()
            .map(|p| p.weight.clone())
            .product::<Polynomial>();
    })?;
    if let Some(sigma) = crossing {
        return Err(Error::Invariant(format!(
            "non-identity permutation {sigma:?} among non-intersecting systems for {shape}"
        )));
    }
    Ok(total)
}

/// Sources `(1, i)` and sinks `(n + 1 − j, n)`.
pub fn vandermonde_endpoints(n: u32) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    let n = i64::from(n);
    let sources = (1..=n).map(|i| pt(1, i)).collect();
    let sinks = (1..=n).map(|j| pt(n + 1 - j, n)).collect();
    (sources, sinks)
}

/// The Schur-weighted graph truncated at `n + 1`, `n` columns wide.
pub fn vandermonde_scheme(n: u32) -> LatticeScheme {
    LatticeScheme::schur_weighted(n, n.max(1)).truncated(n + 1)
}

/// Endpoint families of the bialternant reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionEndpoints {
    /// `a″_i = (1, n − i + 1)`
    pub outer: Vec<LatticePoint>,
    /// `a′_i = (i, n − i + 1)`, on the anti-diagonal `col + row = n + 1`
    pub diagonal: Vec<LatticePoint>,
    /// `b_i = (i + λ_{n+1−i}, n)`
    pub sinks: Vec<LatticePoint>,
}

pub fn bialternant_endpoints(shape: &Partition, n: u32) -> ReductionEndpoints {
    let m = i64::from(n);
    ReductionEndpoints {
        outer: (1..=m).map(|i| pt(1, m - i + 1)).collect(),
        diagonal: (1..=m).map(|i| pt(i, m - i + 1)).collect(),
        sinks: schur_endpoints(shape, n).1,
    }
}

/// Schur-weighted graph truncated at `n + 1`, wide enough for `shape`.
pub fn reduction_scheme(shape: &Partition, n: u32) -> LatticeScheme {
    LatticeScheme::schur_weighted(n, shape.part(1) + n).truncated(n + 1)
}

/// Sources `(1, i)` and sinks `b_j = (1, 2n + 1 − j)` of the doubled graph.
pub fn cauchy_endpoints(n: u32) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    let n = i64::from(n);
    let sources = (1..=n).map(|i| pt(1, i)).collect();
    let sinks = (1..=n).map(|j| pt(1, 2 * n + 1 - j)).collect();
    (sources, sinks)
}

/// Doubled graph for `e(a_i, b_j) = Σ_k x_i^k y_j^k`, truncated to total degree
/// `degree_cap`. Columns beyond `degree_cap + 1` cannot contribute.
pub fn cauchy_scheme(n: u32, degree_cap: u32) -> LatticeScheme {
    LatticeScheme::cauchy_doubled(n, degree_cap + 1, Some(degree_cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn e_weight_examples() {
        let sw = LatticeScheme::schur_weighted(2, 3);
        assert_eq!(e_weight(&sw, pt(1, 1), pt(2, 1)).unwrap(), poly("x1 - x2"));
        assert_eq!(e_weight(&sw, pt(1, 1), pt(2, 2)).unwrap(), poly("x1 - x3"));
        assert_eq!(
            e_weight(&sw, pt(2, 2), pt(2, 2)).unwrap(),
            Polynomial::one()
        );
        assert!(e_weight(&sw, pt(2, 2), pt(1, 1)).unwrap().is_zero());
        assert!(matches!(
            e_weight(&sw, pt(0, 1), pt(1, 1)),
            Err(Error::OutOfBounds(_))
        ));
        assert!(matches!(
            e_weight(&sw, pt(1, 1), pt(1, 3)),
            Err(Error::OutOfBounds(_))
        ));

        let cd = LatticeScheme::cauchy_doubled(1, 5, Some(4));
        assert_eq!(
            e_weight(&cd, pt(1, 1), pt(1, 2)).unwrap(),
            poly("x1^2*y1^2 + x1*y1 + 1")
        );
    }

    #[test]
    fn cauchy_weights_mirror_the_lower_half() {
        let cd = LatticeScheme::cauchy_doubled(2, 4, None);
        // row 3 mirrors row 2, row 4 mirrors row 1 (before truncation at 3)
        assert_eq!(cd.horizontal_weight(1, 4), poly("y1 - y2"));
        assert_eq!(cd.horizontal_weight(1, 3), poly("y2"));
        assert_eq!(cd.horizontal_weight(2, 1), poly("x1"));
        assert_eq!(cd.horizontal_weight(1, 1), poly("x1 - x2"));
        assert_eq!(cd.out_edges(pt(1, 4)), vec![]);
        assert_eq!(cd.out_edges(pt(2, 3))[0].0, pt(1, 3));
    }

    #[test]
    fn lemma_product_examples() {
        for n in 1..5 {
            assert_eq!(lemma_product(1, n), Polynomial::one());
        }
        assert_eq!(lemma_product(2, 2), poly("x1 - x3"));
        assert_eq!(lemma_product(3, 1), (poly("x1 - x3") * poly("x1 - x2")));
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(corollary_power(1, 1, 2).unwrap(), Polynomial::one());
        assert_eq!(corollary_power(2, 4, 3).unwrap(), poly("x2^3"));
        assert!(corollary_power(3, 2, 3).is_err());
        assert!(corollary_power(0, 2, 3).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let sw = LatticeScheme::schur_weighted(2, 3);
        let trivial: Vec<_> = enumerate_paths(&sw, pt(1, 1), pt(1, 1)).unwrap().collect();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].vertices, vec![pt(1, 1)]);
        assert_eq!(trivial[0].weight, Polynomial::one());
        let two: Vec<_> = enumerate_paths(&sw, pt(1, 1), pt(2, 2)).unwrap().collect();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].vertices, vec![pt(1, 1), pt(2, 1), pt(2, 2)]);
        for p in &two {
            assert_eq!(p.recompute_weight(&sw).unwrap(), p.weight);
        }
        assert_eq!(enumerate_paths(&sw, pt(2, 1), pt(1, 2)).unwrap().count(), 0);
        assert_eq!(count_paths(&sw, pt(1, 1), pt(3, 2)).unwrap(), 3);
    }

    #[test]
    fn vandermonde_configuration() {
        let (a, b) = vandermonde_endpoints(1);
        assert_eq!((a, b), (vec![pt(1, 1)], vec![pt(1, 1)]));
        let (a, b) = vandermonde_endpoints(2);
        assert_eq!(a, vec![pt(1, 1), pt(1, 2)]);
        assert_eq!(b, vec![pt(2, 2), pt(1, 2)]);
        assert_eq!(
            vandermonde_endpoints(3).1,
            vec![pt(3, 3), pt(2, 3), pt(1, 3)]
        );

        let scheme = vandermonde_scheme(2);
        let systems = nonintersecting_systems(&scheme, &a, &b).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].weight(&scheme), poly("x1 - x2"));
        let (a3, b3) = vandermonde_endpoints(3);
        assert_eq!(
            lgv_det(&vandermonde_scheme(3), &a3, &b3).unwrap(),
            crate::symfun::vandermonde(3)
        );
    }

    #[test]
    fn single_pair_sum_is_e_weight() {
        let sw = LatticeScheme::schur_weighted(3, 3);
        let (a, b) = (pt(1, 1), pt(3, 3));
        assert_eq!(
            nonintersecting_sum(&sw, &[a], &[b]).unwrap(),
            e_weight(&sw, a, b).unwrap()
        );
        assert_eq!(
            lgv_det(&sw, &[a], &[b]).unwrap(),
            e_weight(&sw, a, b).unwrap()
        );
        assert!(nonintersecting_sum(&sw, &[a], &[]).is_err());
    }

    #[test]
    fn schur_via_lgv_examples() {
        let empty = Partition::empty();
        assert_eq!(schur_via_lgv(&empty, 2).unwrap(), Polynomial::one());
        let one: Partition = "[1]".parse().unwrap();
        assert_eq!(schur_via_lgv(&one, 2).unwrap(), poly("x1 + x2"));
        let p: Partition = "[2,1]".parse().unwrap();
        assert_eq!(
            schur_via_lgv(&p, 3).unwrap(),
            crate::combinat::schur_tableaux(&p, 3)
        );
        let tall: Partition = "[1,1,1]".parse().unwrap();
        assert!(schur_via_lgv(&tall, 2).unwrap().is_zero());
    }

    #[test]
    fn reduction_endpoints() {
        let e = bialternant_endpoints(&"[1]".parse().unwrap(), 2);
        assert_eq!(e.diagonal, vec![pt(1, 2), pt(2, 1)]);
        assert_eq!(e.outer, vec![pt(1, 2), pt(1, 1)]);
        let e1 = bialternant_endpoints(&Partition::empty(), 1);
        assert_eq!(e1.diagonal, vec![pt(1, 1)]);
        assert_eq!(e1.outer, vec![pt(1, 1)]);
    }

    #[test]
    fn brute_force_guard() {
        let big = LatticeScheme::jacobi_trudi(12, 14);
        let r = nonintersecting_sum(&big, &[pt(1, 1)], &[pt(14, 12)]);
        assert!(matches!(r, Err(Error::TooLarge(_))));
    }
}
