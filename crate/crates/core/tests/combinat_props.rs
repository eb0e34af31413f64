use std::collections::BTreeSet;

use proptest::prelude::*;
use schurpath::combinat::{
    partitions_in_box, partitions_of, partitions_up_to, schur_tableaux, ssyt_enumerate,
};
use schurpath::{Partition, Polynomial, Tableau, Variable};

fn partition(max_rows: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Number of SSYT of shape λ with entries ≤ n: `Π (n + c(u)) / h(u)`.
fn hook_content(lam: &Partition, n: u32) -> u128 {
    let conj = lam.conjugate();
    let (mut num, mut den) = (1u128, 1u128);
    for (r, c) in lam.cells() {
        let content = c as i64 - r as i64;
        let value = i64::from(n) + content;
        if value <= 0 {
            return 0;
        }
        num *= value as u128;
        let arm = lam.part(r) as usize - c;
        let leg = conj.part(c) as usize - r;
        den *= (arm + leg + 1) as u128;
    }
    num / den
}

/// Every filling with entries in `1..=n`, kept when semistandard.
fn brute_force_ssyt(lam: &Partition, n: u32) -> BTreeSet<Vec<u32>> {
    let cells = lam.size() as usize;
    let mut out = BTreeSet::new();
    let mut filling = vec![1u32; cells];
    if n == 0 {
        return if cells == 0 { [vec![]].into() } else { out };
    }
    loop {
        if let Ok(t) = Tableau::new(lam.clone(), filling.clone()) {
            out.insert(t.entries().to_vec());
        }
        let mut i = 0;
        loop {
            if i == cells {
                return out;
            }
            if filling[i] < n {
                filling[i] += 1;
                break;
            }
            filling[i] = 1;
            i += 1;
        }
    }
}

fn swap_x(p: &Polynomial, i: u32) -> Polynomial {
    p.map_variables(|v| {
        if v == Variable::x(i) {
            Variable::x(i + 1)
        } else if v == Variable::x(i + 1) {
            Variable::x(i)
        } else {
            v
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_matches_brute_force(lam in partition(3, 3), n in 0u32..=3) {
        prop_assume!(lam.size() <= 6);
        let got: BTreeSet<Vec<u32>> = ssyt_enumerate(&lam, n).map(|t| t.entries().to_vec()).collect();
        let count = ssyt_enumerate(&lam, n).count();
        prop_assert_eq!(count, got.len(), "duplicates in enumeration");
        prop_assert_eq!(got, brute_force_ssyt(&lam, n));
    }

    #[test]
    fn counts_match_hook_content(lam in partition(4, 4), n in 1u32..=4) {
        prop_assert_eq!(ssyt_enumerate(&lam, n).count() as u128, hook_content(&lam, n));
    }

    #[test]
    fn schur_polynomials_are_symmetric(lam in partition(3, 3), n in 2u32..=4, i in 1u32..=3) {
        prop_assume!(i < n);
        let s = schur_tableaux(&lam, n);
        prop_assert_eq!(swap_x(&s, i), s);
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition(6, 6)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        prop_assert_eq!(lam.conjugate().rows() as u32, lam.part(1));
    }

    #[test]
    fn partition_text_round_trips(lam in partition(5, 7)) {
        let back: Partition = lam.to_string().parse().unwrap();
        prop_assert_eq!(back, lam);
    }
}

#[test]
fn box_partition_counts_are_binomial() {
    // C(n + m, n)
    for (n, m, want) in [(1, 1, 2), (2, 2, 6), (3, 2, 10), (3, 3, 20)] {
        assert_eq!(partitions_in_box(n, m).len(), want);
    }
    let box22: Vec<String> = partitions_in_box(2, 2)
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(box22, ["[]", "[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"]);
}

#[test]
fn partition_counts() {
    let p: Vec<usize> = (0..=8)
        .map(|k| partitions_of(k, usize::MAX, u32::MAX).len())
        .collect();
    assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
    assert_eq!(partitions_up_to(2, 3).len(), 1 + 1 + 2 + 2);
}

#[test]
fn frozen_schur_polynomials() {
    let s21: Partition = "[2,1]".parse().unwrap();
    assert_eq!(
        schur_tableaux(&s21, 3).to_string(),
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2"
    );
    let s11: Partition = "[1,1]".parse().unwrap();
    assert_eq!(schur_tableaux(&s11, 2).to_string(), "x1*x2");
    assert!(schur_tableaux(&"[1,1,1]".parse().unwrap(), 2).is_zero());
    assert!(schur_tableaux(&Partition::empty(), 0).is_one());
}

#[test]
fn malformed_partitions_are_rejected() {
    for bad in ["[1,2]", "2,1", "[a]", "[1,,1]", "[-1]"] {
        assert!(bad.parse::<Partition>().is_err(), "{bad}");
    }
}
