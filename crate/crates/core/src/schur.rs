//! One entry point for the four independent routes to `S_λ(x_1, …, x_n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::{schur_tableaux, Partition};
use crate::error::{Error, Result};
use crate::lgv::schur_via_lgv;
use crate::ring::Polynomial;
use crate::symfun::{bialternant, jacobi_trudi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchurMethod {
    /// Sum of `x^T` over semistandard tableaux.
    Tableaux,
    /// `det(h_{λ_i − i + j})`.
    JacobiTrudi,
    /// Alternant divided by the Vandermonde product.
    Bialternant,
    /// Brute-force non-intersecting path systems.
    Lgv,
}

impl SchurMethod {
    pub const ALL: [SchurMethod; 4] = [
        SchurMethod::Tableaux,
        SchurMethod::JacobiTrudi,
        SchurMethod::Bialternant,
        SchurMethod::Lgv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchurMethod::Tableaux => "tableaux",
            SchurMethod::JacobiTrudi => "jacobitrudi",
            SchurMethod::Bialternant => "bialternant",
            SchurMethod::Lgv => "lgv",
        }
    }
}

impl fmt::Display for SchurMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchurMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tableaux" => Ok(SchurMethod::Tableaux),
            "jacobitrudi" | "jacobi-trudi" => Ok(SchurMethod::JacobiTrudi),
            "bialternant" => Ok(SchurMethod::Bialternant),
            "lgv" => Ok(SchurMethod::Lgv),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// `S_λ` in `x_1..x_n` by the chosen route. Shapes with more than `n` rows
/// give 0 on every route.
pub fn compute_schur(shape: &Partition, n: u32, method: SchurMethod) -> Result<Polynomial> {
    if shape.rows() > n as usize {
        return Ok(Polynomial::zero());
    }
    match method {
        SchurMethod::Tableaux => Ok(schur_tableaux(shape, n)),
        SchurMethod::JacobiTrudi => Ok(jacobi_trudi(shape, n)),
        SchurMethod::Bialternant => bialternant(shape, n),
        SchurMethod::Lgv => schur_via_lgv(shape, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_routes_agree_on_small_shapes() {
        let lam: Partition = "[2,1]".parse().unwrap();
        let want = compute_schur(&lam, 3, SchurMethod::Tableaux).unwrap();
        for m in SchurMethod::ALL {
            assert_eq!(compute_schur(&lam, 3, m).unwrap(), want, "{m}");
            assert_eq!(m.name().parse::<SchurMethod>().unwrap(), m);
        }
        let tall: Partition = "[1,1,1]".parse().unwrap();
        for m in SchurMethod::ALL {
            assert!(compute_schur(&tall, 2, m).unwrap().is_zero());
        }
        assert!("nope".parse::<SchurMethod>().is_err());
    }
}
