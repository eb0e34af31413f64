//! Executable checks of the path-counting identities. Each verifier builds
//! both sides through independent routes and returns a [`CheckReport`].
//!
//! Dependency direction: tableau sums come from `combinat`, determinants from
//! `symfun`, path weights from `lgv`. A verifier never derives one side from
//! the other's intermediate results.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{
    factorial_schur_tableaux, partitions_in_box, partitions_up_to, schur_tableaux,
    FactorialConvention, Partition,
};
use crate::error::{Error, Result};
use crate::lgv::{
    bialternant_endpoints, cauchy_endpoints, cauchy_scheme, corollary_power, e_matrix, e_weight,
    lemma_product, lgv_det, nonintersecting_sum, nonintersecting_sum_counted, pt, reduction_scheme,
    schur_via_lgv, vandermonde_endpoints, vandermonde_scheme, LatticePoint, LatticeScheme,
    SchemeKind,
};
use crate::ring::{Family, Polynomial, Variable};
use crate::symfun::{
    alternant, bialternant, complete_homogeneous, det, divided_difference, divided_difference_from,
    factorial_schur_quotient, jacobi_trudi_with, newton_expand, vandermonde, JacobiTrudiIndex,
    PolyMatrix,
};

/// Identity names accepted by [`verify`] and by the suite's `only` filter.
pub const IDENTITIES: [&str; 11] = [
    "main-lemma",
    "corollary",
    "vandermonde",
    "jacobi-trudi",
    "bialternant",
    "cauchy",
    "dual-cauchy",
    "dual-determinant",
    "factorial-schur",
    "newton",
    "lgv-lemma",
];

/// Differing terms shown in a mismatch report.
pub const MISMATCH_TERMS: usize = 50;
/// Random integer points checked after every symbolic equality.
pub const EVAL_POINTS: usize = 10;
pub const EVAL_RANGE: i64 = 9;
const SEED: u64 = 0x5c4e_a11e;

/// Brute-force path enumeration is restricted to these sizes.
pub const LGV_MAX_SIZE: u32 = 4;
pub const LGV_MAX_N: u32 = 3;
pub const VANDERMONDE_BRUTE_MAX: u32 = 3;

const CAUCHY_MAX_N: u32 = 4;
const CAUCHY_MAX_CAP: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Verified,
    Mismatch,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "VERIFIED",
            Status::Mismatch => "MISMATCH",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    /// Left side restricted to the differing terms, on mismatch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    /// Failing stage, or the error text.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for CheckReport {
    /// One line: status, identity, params; then the message and both sides if present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.identity)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(m) = &self.message {
            write!(f, "\n  {m}")?;
        }
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, "\n  lhs: {l}\n  rhs: {r}")?;
        }
        Ok(())
    }
}

enum Failure {
    Mismatch {
        stage: String,
        lhs: Polynomial,
        rhs: Polynomial,
    },
    Eval {
        stage: String,
        lhs: Polynomial,
        rhs: Polynomial,
        point: String,
    },
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Stage = std::result::Result<(), Failure>;

/// Per-report state: extra parameters discovered while checking, and the
/// random source for evaluation spot checks.
struct Ctx {
    params: BTreeMap<String, String>,
    rng: ChaCha8Rng,
}

impl Ctx {
    fn note(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    /// Exact symbolic comparison, followed by evaluation at random integer points.
    fn equal(&mut self, stage: impl Into<String>, lhs: &Polynomial, rhs: &Polynomial) -> Stage {
        if lhs != rhs {
            return Err(Failure::Mismatch {
                stage: stage.into(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
        let vars: BTreeSet<Variable> = lhs.variables().into_iter().chain(rhs.variables()).collect();
        for _ in 0..EVAL_POINTS {
            let point: BTreeMap<Variable, BigInt> = vars
                .iter()
                .map(|&v| {
                    (
                        v,
                        BigInt::from(self.rng.gen_range(-EVAL_RANGE..=EVAL_RANGE)),
                    )
                })
                .collect();
            if lhs.eval_int(&point)? != rhs.eval_int(&point)? {
                let point = point
                    .iter()
                    .map(|(v, c)| format!("{v}={c}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(Failure::Eval {
                    stage: stage.into(),
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    point,
                });
            }
        }
        Ok(())
    }
}

fn run(
    identity: &str,
    params: &[(&str, String)],
    body: impl FnOnce(&mut Ctx) -> Stage,
) -> CheckReport {
    let start = Instant::now();
    let mut ctx = Ctx {
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        rng: ChaCha8Rng::seed_from_u64(SEED),
    };
    let outcome = body(&mut ctx);
    let mut report = CheckReport {
        identity: identity.to_string(),
        params: ctx.params,
        status: Status::Verified,
        lhs: None,
        rhs: None,
        message: None,
        elapsed_ms: 0,
    };
    match outcome {
        Ok(()) => {}
        Err(Failure::Mismatch { stage, lhs, rhs }) => {
            let (l, r, shown, total) = mismatch_excerpt(&lhs, &rhs);
            report.status = Status::Mismatch;
            report.lhs = Some(l);
            report.rhs = Some(r);
            report.message = Some(if shown < total {
                format!("{stage}: showing {shown} of {total} differing terms")
            } else {
                format!("{stage}: {total} differing terms")
            });
        }
        Err(Failure::Eval {
            stage,
            lhs,
            rhs,
            point,
        }) => {
            report.status = Status::Mismatch;
            report.lhs = Some(lhs.to_string());
            report.rhs = Some(rhs.to_string());
            report.message = Some(format!("{stage}: equal symbolically but not at {point}"));
        }
        Err(Failure::Error(e)) => {
            report.status = Status::Error;
            report.message = Some(e.to_string());
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Both sides restricted to their first [`MISMATCH_TERMS`] differing monomials.
fn mismatch_excerpt(lhs: &Polynomial, rhs: &Polynomial) -> (String, String, usize, usize) {
    let diff = lhs.differing_monomials(rhs);
    let total = diff.len();
    let keep: BTreeSet<_> = diff.into_iter().take(MISMATCH_TERMS).collect();
    let l = lhs.filter_terms(|m| keep.contains(m));
    let r = rhs.filter_terms(|m| keep.contains(m));
    (l.to_string(), r.to_string(), keep.len(), total)
}

fn at_least_one(name: &str, value: u32) -> Stage {
    if value == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be at least 1")).into());
    }
    Ok(())
}

fn require_rows(shape: &Partition, n: u32) -> Stage {
    at_least_one("n", n)?;
    if shape.rows() > n as usize {
        return Err(Error::InvalidArgument(format!("{shape} has more than {n} rows")).into());
    }
    Ok(())
}

/// `p` with every `x_i` renamed `y_i`.
fn in_y(p: &Polynomial) -> Polynomial {
    p.substitute_family(Family::X, Family::Y, 0)
        .expect("renaming without a shift cannot underflow")
}

/// `e((1,1),(m,n))` on the Schur-weighted graph equals the closed product, and
/// satisfies `e(a,b) = e(a,b′)(x_n − x_{m+n−1}) + e(a,b″)` with `b′ = (m−1,n)`,
/// `b″ = (m,n−1)`.
pub fn verify_main_lemma(m_max: u32, n_max: u32) -> CheckReport {
    verify_main_lemma_with(m_max, n_max, false)
}

/// `tamper` perturbs the edge weights; the report must then be a mismatch.
pub fn verify_main_lemma_with(m_max: u32, n_max: u32, tamper: bool) -> CheckReport {
    let mut params = vec![("m_max", m_max.to_string()), ("n_max", n_max.to_string())];
    if tamper {
        params.push(("tamper", "true".into()));
    }
    run("main-lemma", &params, |ctx| {
        at_least_one("m_max", m_max)?;
        at_least_one("n_max", n_max)?;
        let mut scheme = LatticeScheme::schur_weighted(n_max, m_max);
        if tamper {
            scheme = scheme.tampered();
        }
        let sinks: Vec<LatticePoint> = (1..=n_max)
            .flat_map(|n| (1..=m_max).map(move |m| pt(i64::from(m), i64::from(n))))
            .collect();
        let row = e_matrix(&scheme, &[pt(1, 1)], &sinks)?;
        let e = |m: u32, n: u32| row.get(0, ((n - 1) * m_max + (m - 1)) as usize);
        for n in 1..=n_max {
            for m in 1..=m_max {
                ctx.equal(format!("e((1,1),({m},{n}))"), e(m, n), &lemma_product(m, n))?;
                if m > 1 && n > 1 {
                    let step = Polynomial::x(n) - Polynomial::x(m + n - 1);
                    let rec = e(m - 1, n) * &step + e(m, n - 1);
                    ctx.equal(format!("recurrence at ({m},{n})"), e(m, n), &rec)?;
                }
            }
        }
        Ok(())
    })
}

/// With `x_k = 0` for `k > n`, `e((1,t),(m,n)) = x_t^{m−1}`; without the
/// truncation it is the closed product shifted to start at `x_t`.
pub fn verify_corollary(n_max: u32, m_max: u32) -> CheckReport {
    verify_corollary_with(n_max, m_max, false)
}

pub fn verify_corollary_with(n_max: u32, m_max: u32, tamper: bool) -> CheckReport {
    let mut params = vec![("m_max", m_max.to_string()), ("n_max", n_max.to_string())];
    if tamper {
        params.push(("tamper", "true".into()));
    }
    run("corollary", &params, |ctx| {
        at_least_one("m_max", m_max)?;
        if n_max < 2 {
            return Err(Error::InvalidArgument("n_max must be at least 2".into()).into());
        }
        for n in 2..=n_max {
            let mut full = LatticeScheme::schur_weighted(n, m_max);
            if tamper {
                full = full.tampered();
            }
            let truncated = full.clone().truncated(n + 1);
            for t in 1..n {
                for m in 1..=m_max {
                    let (a, b) = (pt(1, i64::from(t)), pt(i64::from(m), i64::from(n)));
                    let label = format!("e((1,{t}),({m},{n}))");
                    ctx.equal(
                        format!("{label} truncated"),
                        &e_weight(&truncated, a, b)?,
                        &corollary_power(t, m, n)?,
                    )?;
                    let shifted = lemma_product(m, n - t + 1).substitute_family(
                        Family::X,
                        Family::X,
                        i64::from(t) - 1,
                    )?;
                    ctx.equal(label, &e_weight(&full, a, b)?, &shifted)?;
                }
            }
        }
        Ok(())
    })
}

/// Product form, determinant of powers and the LGV determinant agree; for
/// `n ≤ 3` the brute-force signed sum agrees too and comes from exactly one
/// non-intersecting system.
pub fn verify_vandermonde(n: u32) -> CheckReport {
    verify_vandermonde_with(n, n <= VANDERMONDE_BRUTE_MAX)
}

pub fn verify_vandermonde_with(n: u32, brute_force: bool) -> CheckReport {
    let params = [
        ("n", n.to_string()),
        ("brute_force", brute_force.to_string()),
    ];
    run("vandermonde", &params, |ctx| {
        at_least_one("n", n)?;
        let product = vandermonde(n);
        let scheme = vandermonde_scheme(n);
        let (sources, sinks) = vandermonde_endpoints(n);
        let m = e_matrix(&scheme, &sources, &sinks)?;
        for i in 1..=n {
            for j in 1..=n {
                let want = Polynomial::x(i).pow(n - j);
                ctx.equal(
                    format!("e(a_{i},b_{j})"),
                    m.get(i as usize - 1, j as usize - 1),
                    &want,
                )?;
            }
        }
        ctx.equal(
            "det(x_i^(n-j)) = product",
            &alternant(&Partition::empty(), n)?,
            &product,
        )?;
        ctx.equal(
            "lgv determinant = product",
            &lgv_det(&scheme, &sources, &sinks)?,
            &product,
        )?;
        if brute_force {
            let (sum, systems) = nonintersecting_sum_counted(&scheme, &sources, &sinks)?;
            ctx.note("systems", systems);
            ctx.equal("non-intersecting sum = product", &sum, &product)?;
            if systems != 1 {
                return Err(Error::Invariant(format!(
                    "expected exactly one non-intersecting system, found {systems}"
                ))
                .into());
            }
        }
        Ok(())
    })
}

/// `det(h_{λ_i−i+j})` equals the tableau sum and, at enumeration scale, the
/// non-intersecting path sum.
pub fn verify_jacobi_trudi(shape: &Partition, n: u32) -> CheckReport {
    verify_jacobi_trudi_with(shape, n, JacobiTrudiIndex::ColMinusRow)
}

/// `RowMinusCol` is the transposed index, used as a negative control.
pub fn verify_jacobi_trudi_with(shape: &Partition, n: u32, index: JacobiTrudiIndex) -> CheckReport {
    let mut params = vec![("shape", shape.to_string()), ("n", n.to_string())];
    if index == JacobiTrudiIndex::RowMinusCol {
        params.push(("index", "row-minus-col".into()));
    }
    run("jacobi-trudi", &params, |ctx| {
        require_rows(shape, n)?;
        let tableaux = schur_tableaux(shape, n);
        ctx.equal(
            "jacobi-trudi = tableaux",
            &jacobi_trudi_with(shape, n, index),
            &tableaux,
        )?;
        if shape.size() <= LGV_MAX_SIZE && n <= LGV_MAX_N {
            ctx.note("lgv", true);
            ctx.equal("lgv = tableaux", &schur_via_lgv(shape, n)?, &tableaux)?;
        }
        Ok(())
    })
}

/// The reduction chain from path systems to the bialternant formula.
pub fn verify_bialternant(shape: &Partition, n: u32) -> CheckReport {
    let params = [("shape", shape.to_string()), ("n", n.to_string())];
    run("bialternant", &params, |ctx| {
        require_rows(shape, n)?;
        let tableaux = schur_tableaux(shape, n);
        let scheme = reduction_scheme(shape, n);
        let ends = bialternant_endpoints(shape, n);
        let diag_to_b = det(&e_matrix(&scheme, &ends.diagonal, &ends.sinks)?)?;
        let outer_to_diag = det(&e_matrix(&scheme, &ends.outer, &ends.diagonal)?)?;
        let outer_m = e_matrix(&scheme, &ends.outer, &ends.sinks)?;
        let outer_to_b = det(&outer_m)?;

        ctx.equal("det e(a',b) = tableaux", &diag_to_b, &tableaux)?;
        if shape.size() <= LGV_MAX_SIZE && n <= LGV_MAX_N {
            ctx.note("lgv", true);
            ctx.equal(
                "non-intersecting sum = det e(a',b)",
                &schur_via_lgv(shape, n)?,
                &diag_to_b,
            )?;
        }
        ctx.equal(
            "det e(a'',b) = det e(a'',a') det e(a',b)",
            &outer_to_b,
            &(&outer_to_diag * &diag_to_b),
        )?;
        ctx.equal(
            "det e(a'',a') = vandermonde",
            &outer_to_diag,
            &vandermonde(n),
        )?;
        let nn = n as usize;
        for i in 1..=nn {
            for j in 1..=nn {
                let want = Polynomial::x(i as u32).pow(shape.part(j) + (nn - j) as u32);
                let got = outer_m.get(nn - i, nn - j);
                ctx.equal(
                    format!("e(a''_{},b_{})", nn + 1 - i, nn + 1 - j),
                    got,
                    &want,
                )?;
            }
        }
        ctx.equal(
            "det e(a'',b) = alternant",
            &outer_to_b,
            &alternant(shape, n)?,
        )?;
        let quotient = outer_to_b.exact_div(&outer_to_diag)?;
        ctx.equal("path quotient = tableaux", &quotient, &tableaux)?;
        ctx.equal("bialternant = tableaux", &bialternant(shape, n)?, &tableaux)?;
        Ok(())
    })
}

/// Keeps the terms whose `x`- and `y`-degrees are both at most `cap`.
fn bidegree_at_most(p: &Polynomial, cap: u32) -> Polynomial {
    p.filter_terms(|m| m.degree_in(Family::X) <= cap && m.degree_in(Family::Y) <= cap)
}

/// Graded comparison of `det[Σ_{k≤cap} x_i^k y_j^k]` with
/// `Vdm(x) Vdm(y) Σ_{|λ|≤cap} S_λ(x) S_λ(y)` in every bidegree `(d,d)`, `d ≤ cap`.
pub fn verify_cauchy(n: u32, degree_cap: u32) -> CheckReport {
    let params = [("n", n.to_string()), ("degree_cap", degree_cap.to_string())];
    run("cauchy", &params, |ctx| {
        at_least_one("n", n)?;
        if n > CAUCHY_MAX_N || degree_cap > CAUCHY_MAX_CAP {
            return Err(Error::TooLarge(format!(
                "cauchy check is limited to n <= {CAUCHY_MAX_N} and degree_cap <= {CAUCHY_MAX_CAP}"
            ))
            .into());
        }
        let offset = n * (n - 1) / 2;
        ctx.note("components", (degree_cap + 1).saturating_sub(offset));

        // every entry term x^k y^k has total degree 2k
        let scheme = cauchy_scheme(n, 2 * degree_cap);
        let (sources, sinks) = cauchy_endpoints(n);
        let m = e_matrix(&scheme, &sources, &sinks)?;
        for i in 1..=n {
            for j in 1..=n {
                let series: Polynomial = (0..=degree_cap)
                    .map(|k| (Polynomial::x(i) * Polynomial::y(j)).pow(k))
                    .sum();
                ctx.equal(
                    format!("e(a_{i},b_{j})"),
                    m.get(i as usize - 1, j as usize - 1),
                    &series,
                )?;
            }
        }
        let lhs = bidegree_at_most(&lgv_det(&scheme, &sources, &sinks)?, degree_cap);

        let vdm = vandermonde(n);
        let vdm2 = &vdm * &in_y(&vdm);
        let shapes = partitions_up_to(n as usize, degree_cap);
        ctx.note("partitions", shapes.len());
        let sum: Polynomial = shapes
            .iter()
            .map(|lam| {
                let s = schur_tableaux(lam, n);
                &s * &in_y(&s)
            })
            .sum();
        let rhs = bidegree_at_most(&(&vdm2 * &sum), degree_cap);
        ctx.equal("graded components", &lhs, &rhs)?;

        let cap2 = Some(2 * degree_cap);
        let mut product = vdm2;
        for i in 1..=n {
            for j in 1..=n {
                let series: Polynomial = (0..=degree_cap)
                    .map(|k| (Polynomial::x(i) * Polynomial::y(j)).pow(k))
                    .sum();
                product = product.mul_capped(&series, cap2);
            }
        }
        ctx.equal(
            "product form",
            &lhs,
            &bidegree_at_most(&product, degree_cap),
        )?;
        Ok(())
    })
}

/// `Π(1 + x_i y_j) = Σ_{λ ⊆ n×m} S_λ(x) S_{λ′}(y)`.
pub fn verify_dual_cauchy(n: u32, m: u32) -> CheckReport {
    let params = [("n", n.to_string()), ("m", m.to_string())];
    run("dual-cauchy", &params, |ctx| {
        at_least_one("n", n)?;
        at_least_one("m", m)?;
        let mut product = Polynomial::one();
        for i in 1..=n {
            for j in 1..=m {
                product = &product * &(Polynomial::one() + Polynomial::x(i) * Polynomial::y(j));
            }
        }
        let shapes = partitions_in_box(n as usize, m);
        ctx.note("partitions", shapes.len());
        let sum: Polynomial = shapes
            .iter()
            .map(|lam| &schur_tableaux(lam, n) * &in_y(&schur_tableaux(&lam.conjugate(), m)))
            .sum();
        ctx.equal("product = sum", &product, &sum)?;
        Ok(())
    })
}

/// Global sign relating the dual determinant to its product form. Moving the
/// `y`-columns' reversed row order into place costs `(−1)^{m(m+n−1)}`.
pub fn dual_determinant_sign(n: u32, m: u32) -> i64 {
    if (m * (m + n - 1)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The `(n+m)×(n+m)` matrix with `x_t^{n+m−r}` in column `t ≤ n` and
/// `(−y_s)^{r−1}` in column `n + s`.
pub fn dual_matrix(n: u32, m: u32) -> PolyMatrix {
    let size = (n + m) as usize;
    PolyMatrix::from_fn(size, size, |r, c| {
        if c < n as usize {
            Polynomial::x(c as u32 + 1).pow(size as u32 - 1 - r as u32)
        } else {
            (-Polynomial::y((c - n as usize) as u32 + 1)).pow(r as u32)
        }
    })
}

/// `det(*) = ε · Vdm(x) Vdm(y) Π(1 + x_i y_j)`, with `ε` found by exact
/// division and required to match [`dual_determinant_sign`].
pub fn verify_dual_determinant(n: u32, m: u32) -> CheckReport {
    let params = [("n", n.to_string()), ("m", m.to_string())];
    run("dual-determinant", &params, |ctx| {
        at_least_one("n", n)?;
        at_least_one("m", m)?;
        let d = det(&dual_matrix(n, m))?;
        let mut product = &vandermonde(n) * &in_y(&vandermonde(m));
        for i in 1..=n {
            for j in 1..=m {
                product = &product * &(Polynomial::one() + Polynomial::x(i) * Polynomial::y(j));
            }
        }
        let ratio = d.exact_div(&product)?;
        let formula = dual_determinant_sign(n, m);
        let epsilon = if ratio.is_one() {
            1
        } else if (-&ratio).is_one() {
            -1
        } else {
            return Err(Failure::Mismatch {
                stage: "det(*) / product is a sign".into(),
                lhs: ratio,
                rhs: Polynomial::constant(formula),
            });
        };
        ctx.note("epsilon", epsilon);
        ctx.equal(
            "sign",
            &Polynomial::constant(epsilon),
            &Polynomial::constant(formula),
        )?;
        ctx.equal("det(*) = sign * product", &d, &product.scale(epsilon))?;
        Ok(())
    })
}

/// Factorial tableau sum equals the determinant quotient; setting `a ≡ 0`
/// collapses both to the plain Schur polynomial.
pub fn verify_factorial_schur(shape: &Partition, n: u32) -> CheckReport {
    verify_factorial_schur_with(shape, n, FactorialConvention::Content)
}

pub fn verify_factorial_schur_with(
    shape: &Partition,
    n: u32,
    convention: FactorialConvention,
) -> CheckReport {
    let mut params = vec![("shape", shape.to_string()), ("n", n.to_string())];
    if convention == FactorialConvention::Transposed {
        params.push(("convention", "transposed".into()));
    }
    run("factorial-schur", &params, |ctx| {
        require_rows(shape, n)?;
        let tableaux = factorial_schur_tableaux(shape, n, convention)?;
        let quotient = factorial_schur_quotient(shape, n)?;
        ctx.equal("tableaux = quotient", &tableaux, &quotient)?;
        ctx.equal(
            "tableaux at a = 0",
            &tableaux.substitute_zero(Family::A, 1),
            &schur_tableaux(shape, n),
        )?;
        ctx.equal(
            "quotient at a = 0",
            &quotient.substitute_zero(Family::A, 1),
            &bialternant(shape, n)?,
        )?;
        Ok(())
    })
}

/// Newton interpolation of `t^n` on `x_1..x_n` reproduces `t^n`, and every
/// divided difference `f[x_s..x_{s+k−1}]` is `h_{n−k+1}` in those variables.
pub fn verify_newton(n_power: u32) -> CheckReport {
    let params = [("n", n_power.to_string())];
    run("newton", &params, |ctx| {
        ctx.equal(
            "newton form = t^n",
            &newton_expand(n_power)?,
            &Polynomial::t().pow(n_power),
        )?;
        for k in 1..=n_power + 1 {
            let h = complete_homogeneous(i64::from(n_power) - i64::from(k) + 1, k);
            ctx.equal(
                format!("f[x_1..x_{k}]"),
                &divided_difference(n_power, k)?,
                &h,
            )?;
            if k <= n_power {
                let shifted = h.substitute_family(Family::X, Family::X, 1)?;
                ctx.equal(
                    format!("f[x_2..x_{}]", k + 1),
                    &divided_difference_from(n_power, 2, k)?,
                    &shifted,
                )?;
            }
        }
        Ok(())
    })
}

/// Scheme variants exercised by [`verify_lgv_lemma`].
pub const LGV_SCHEMES: [&str; 4] = [
    "jacobi-trudi",
    "schur-weighted",
    "schur-weighted-truncated",
    "cauchy-doubled",
];

fn random_scheme(name: &str, rng: &mut ChaCha8Rng) -> Result<LatticeScheme> {
    let rows = rng.gen_range(2..=4u32);
    let cols = rng.gen_range(2..=4u32);
    Ok(match name {
        "jacobi-trudi" => LatticeScheme::jacobi_trudi(rows, cols),
        "schur-weighted" => LatticeScheme::schur_weighted(rows, cols),
        "schur-weighted-truncated" => LatticeScheme::schur_weighted(rows, cols).truncated(rows + 1),
        "cauchy-doubled" => LatticeScheme::cauchy_doubled(rows / 2, cols, Some(4)),
        other => return Err(Error::InvalidArgument(format!("unknown scheme {other:?}"))),
    })
}

fn random_points(
    scheme: &LatticeScheme,
    k: usize,
    rows: std::ops::RangeInclusive<i64>,
    rng: &mut ChaCha8Rng,
) -> Vec<LatticePoint> {
    let cols = i64::from(scheme.col_bound);
    let mut out: Vec<LatticePoint> = Vec::with_capacity(k);
    while out.len() < k {
        let p = pt(rng.gen_range(1..=cols), rng.gen_range(rows.clone()));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// `det(e(a_i, b_j))` equals the signed sum over non-intersecting systems on
/// `configurations` random small endpoint sets. Configurations whose
/// determinant vanishes are redrawn a few times to keep the check informative.
pub fn verify_lgv_lemma(scheme_name: &str, configurations: u32, seed: u64) -> CheckReport {
    let params = [
        ("scheme", scheme_name.to_string()),
        ("configurations", configurations.to_string()),
        ("seed", seed.to_string()),
    ];
    run("lgv-lemma", &params, |ctx| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut nonzero = 0;
        for c in 0..configurations {
            let mut attempt = 0;
            loop {
                attempt += 1;
                let scheme = random_scheme(scheme_name, &mut rng)?;
                let rows = i64::from(scheme.row_bound());
                let k = rng.gen_range(1..=3usize).min(scheme.col_bound as usize);
                let (src_rows, dst_rows) = if scheme.kind == SchemeKind::CauchyDoubled {
                    let n = i64::from(scheme.n);
                    (1..=n, n + 1..=rows)
                } else {
                    (1..=rows, 1..=rows)
                };
                let sources = random_points(&scheme, k, src_rows, &mut rng);
                let sinks = random_points(&scheme, k, dst_rows, &mut rng);
                let d = lgv_det(&scheme, &sources, &sinks)?;
                if d.is_zero() && attempt < 20 {
                    continue;
                }
                if !d.is_zero() {
                    nonzero += 1;
                }
                let label = format!(
                    "configuration {c}: {} -> {}",
                    sources
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    sinks
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                ctx.equal(label, &d, &nonintersecting_sum(&scheme, &sources, &sinks)?)?;
                break;
            }
        }
        ctx.note("nonzero", nonzero);
        Ok(())
    })
}

/// Verifies one identity by name with CLI-style parameters. Missing
/// parameters take the suite defaults.
pub fn verify(identity: &str, args: &VerifyArgs) -> Result<CheckReport> {
    let shape = || {
        args.shape
            .clone()
            .unwrap_or_else(|| Partition::new(vec![2, 1]).unwrap())
    };
    let n = args.n;
    Ok(match identity {
        "main-lemma" => verify_main_lemma(args.m.unwrap_or(6), n.unwrap_or(6)),
        "corollary" => verify_corollary(n.unwrap_or(4), args.m.unwrap_or(5)),
        "vandermonde" => verify_vandermonde(n.unwrap_or(3)),
        "jacobi-trudi" => verify_jacobi_trudi(&shape(), n.unwrap_or(3)),
        "bialternant" => verify_bialternant(&shape(), n.unwrap_or(3)),
        "cauchy" => verify_cauchy(n.unwrap_or(2), args.degree_cap.unwrap_or(4)),
        "dual-cauchy" => verify_dual_cauchy(n.unwrap_or(2), args.m.unwrap_or(2)),
        "dual-determinant" => verify_dual_determinant(n.unwrap_or(2), args.m.unwrap_or(2)),
        "factorial-schur" => verify_factorial_schur(&shape(), n.unwrap_or(3)),
        "newton" => verify_newton(n.unwrap_or(6)),
        "lgv-lemma" => {
            let scheme = args.scheme.as_deref().unwrap_or("schur-weighted");
            verify_lgv_lemma(scheme, n.unwrap_or(20), SEED)
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown identity {other:?}; expected one of {}",
                IDENTITIES.join(", ")
            )))
        }
    })
}

#[derive(Debug, Clone, Default)]
pub struct VerifyArgs {
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub shape: Option<Partition>,
    pub degree_cap: Option<u32>,
    /// Scheme variant for `lgv-lemma`; `n` is then the configuration count.
    pub scheme: Option<String>,
}

/// Parameter grid of [`run_suite`]. Unknown keys are rejected when parsing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Largest `|λ|` for the Jacobi–Trudi and bialternant grids.
    pub max_partition_size: u32,
    /// Largest `n` for the Jacobi–Trudi and bialternant grids; Cauchy uses
    /// `n ≤ min(max_n, 3)`.
    pub max_n: u32,
    pub cauchy_cap: u32,
    /// Dual Cauchy runs `n, m ≤ dual_max`.
    pub dual_max: u32,
    /// Newton runs powers `0..=newton_max`; `null` skips it.
    pub newton_max: Option<u32>,
    pub only: Option<Vec<String>>,
    pub lemma_max: u32,
    pub corollary_n_max: u32,
    pub corollary_m_max: u32,
    pub vandermonde_max: u32,
    /// Dual determinant runs `n + m ≤ dual_determinant_max`.
    pub dual_determinant_max: u32,
    pub factorial_size: u32,
    pub factorial_n: u32,
    /// Random configurations per scheme for the LGV lemma.
    pub lgv_configurations: u32,
    pub seed: u64,
    /// Test hook: tamper with the lattice weights and the Jacobi–Trudi
    /// orientation so the suite must report mismatches.
    pub corrupt: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_partition_size: 6,
            max_n: 4,
            cauchy_cap: 4,
            dual_max: 3,
            newton_max: Some(8),
            only: None,
            lemma_max: 6,
            corollary_n_max: 4,
            corollary_m_max: 5,
            vandermonde_max: 5,
            dual_determinant_max: 5,
            factorial_size: 4,
            factorial_n: 3,
            lgv_configurations: 20,
            seed: SEED,
            corrupt: false,
        }
    }
}

impl SuiteConfig {
    /// Every grid empty.
    pub fn empty() -> Self {
        SuiteConfig {
            max_partition_size: 0,
            max_n: 0,
            cauchy_cap: 0,
            dual_max: 0,
            newton_max: None,
            only: None,
            lemma_max: 0,
            corollary_n_max: 0,
            corollary_m_max: 0,
            vandermonde_max: 0,
            dual_determinant_max: 0,
            factorial_size: 0,
            factorial_n: 0,
            lgv_configurations: 0,
            seed: SEED,
            corrupt: false,
        }
    }

    /// Rejects unknown identity names in `only`.
    pub fn validate(&self) -> Result<()> {
        for name in self.only.iter().flatten() {
            if !IDENTITIES.contains(&name.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "unknown identity {name:?} in only; expected one of {}",
                    IDENTITIES.join(", ")
                )));
            }
        }
        Ok(())
    }

    fn wants(&self, identity: &str) -> bool {
        self.only
            .as_ref()
            .is_none_or(|only| only.iter().any(|o| o == identity))
    }
}

type Job = Box<dyn FnOnce() -> CheckReport + Send>;

fn jobs(config: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let c = config.clone();
    let corrupt = c.corrupt;

    if c.wants("main-lemma") && c.lemma_max >= 1 {
        let k = c.lemma_max;
        jobs.push(Box::new(move || verify_main_lemma_with(k, k, corrupt)));
    }
    if c.wants("corollary") && c.corollary_n_max >= 2 && c.corollary_m_max >= 1 {
        let (n, m) = (c.corollary_n_max, c.corollary_m_max);
        jobs.push(Box::new(move || verify_corollary_with(n, m, corrupt)));
    }
    if c.wants("vandermonde") {
        for n in 1..=c.vandermonde_max {
            jobs.push(Box::new(move || verify_vandermonde(n)));
        }
    }
    let schur_grid: Vec<(u32, Partition)> = (1..=c.max_n)
        .flat_map(|n| {
            partitions_up_to(n as usize, c.max_partition_size)
                .into_iter()
                .map(move |lam| (n, lam))
        })
        .collect();
    if c.wants("jacobi-trudi") {
        let index = if corrupt {
            JacobiTrudiIndex::RowMinusCol
        } else {
            JacobiTrudiIndex::ColMinusRow
        };
        for (n, lam) in schur_grid.clone() {
            jobs.push(Box::new(move || verify_jacobi_trudi_with(&lam, n, index)));
        }
    }
    if c.wants("bialternant") {
        for (n, lam) in schur_grid {
            jobs.push(Box::new(move || verify_bialternant(&lam, n)));
        }
    }
    if c.wants("cauchy") {
        for n in 1..=c.max_n.min(3) {
            let cap = if n == 3 {
                c.cauchy_cap.min(3)
            } else {
                c.cauchy_cap
            };
            jobs.push(Box::new(move || verify_cauchy(n, cap)));
        }
    }
    if c.wants("dual-cauchy") {
        for n in 1..=c.dual_max {
            for m in 1..=c.dual_max {
                jobs.push(Box::new(move || verify_dual_cauchy(n, m)));
            }
        }
    }
    if c.wants("dual-determinant") {
        for n in 1..c.dual_determinant_max {
            for m in 1..=c.dual_determinant_max - n {
                jobs.push(Box::new(move || verify_dual_determinant(n, m)));
            }
        }
    }
    if c.wants("factorial-schur") {
        for n in 1..=c.factorial_n {
            for lam in partitions_up_to(n as usize, c.factorial_size) {
                jobs.push(Box::new(move || verify_factorial_schur(&lam, n)));
            }
        }
    }
    if c.wants("newton") {
        if let Some(max) = c.newton_max {
            for p in 0..=max {
                jobs.push(Box::new(move || verify_newton(p)));
            }
        }
    }
    if c.wants("lgv-lemma") && c.lgv_configurations >= 1 {
        for (i, name) in LGV_SCHEMES.iter().enumerate() {
            let (count, seed) = (c.lgv_configurations, c.seed.wrapping_add(i as u64));
            jobs.push(Box::new(move || verify_lgv_lemma(name, count, seed)));
        }
    }
    jobs
}

/// Runs every verifier over the configured grid. Reports come back in grid
/// order regardless of how the work is spread over threads.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let jobs = jobs(config);
    let total = jobs.len();
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(total.max(1));
    let queue: Vec<Mutex<Option<Job>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let results: Vec<Mutex<Option<CheckReport>>> = (0..total).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= total {
                    break;
                }
                let job = queue[i].lock().unwrap().take().expect("each job runs once");
                *results[i].lock().unwrap() = Some(job());
            });
        }
    });
    results
        .into_iter()
        .map(|r| {
            r.into_inner()
                .unwrap()
                .expect("every job produced a report")
        })
        .collect()
}
