use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use whitehead_core::chain::{boundary, Chain};
use whitehead_core::generators::simplex_skeleton;
use whitehead_core::homology::reduced_homology;
use whitehead_core::lattice::{combine, solve_chain_relation};
use whitehead_core::matrix::{smith_normal_form, IntegerMatrix};
use whitehead_core::Simplex;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    // fraction-free elimination
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else { return 0 };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Invariant factors from gcds of k×k minors.
fn determinantal_factors(a: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i128> {
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let minor = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                g = gcd(g, det(minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn matrix() -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
        (Just(r), Just(c), prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn smith_form_agrees_with_minors((r, c, rows) in matrix()) {
        let a = IntegerMatrix::from_rows(&rows);
        let d = smith_normal_form(&a);
        prop_assert_eq!(d.u.mul(&a).mul(&d.v), d.s.clone());
        prop_assert!(d.u.determinant().abs().is_one());
        prop_assert!(d.v.determinant().abs().is_one());
        for i in 0..r {
            for j in 0..c {
                if i != j {
                    prop_assert!(d.s.get(i, j).is_zero());
                }
            }
        }
        let factors = d.invariant_factors();
        prop_assert_eq!(factors.len(), d.rank);
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        let expected: Vec<BigInt> = determinantal_factors(&rows, r, c).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(factors, expected);
    }

    #[test]
    fn solved_relations_recombine(
        coeffs in prop::collection::vec(-4i64..=4, 4),
        picks in prop::sample::subsequence((1..=6u32).combinations(3).collect::<Vec<_>>(), 4),
    ) {
        let basis: Vec<Chain> = picks.iter().map(|t| boundary(&Simplex::new(t.clone()).unwrap())).collect();
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        let target = combine(&basis, &coeffs, 1).unwrap();
        let sol = solve_chain_relation(&target, &basis).unwrap();
        prop_assert_eq!(combine(&basis, &sol.particular, 1).unwrap(), target);
        for k in &sol.kernel {
            prop_assert!(combine(&basis, k, 1).unwrap().is_zero());
        }
    }
}

#[test]
fn boundary_squares_to_zero_through_dimension_five() {
    for d in 0..=5usize {
        for s in (1..=8u32).combinations(d + 1) {
            let s = Simplex::new(s).unwrap();
            assert!(boundary(&s).boundary().is_zero(), "{s}");
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn skeleton_homology_is_a_wedge_of_spheres() {
    for m in 2..=7u32 {
        for k in 0..=m - 2 {
            let h = reduced_homology(&simplex_skeleton(m, k).unwrap());
            let mut expected = vec![0; k as usize + 1];
            expected[k as usize] = binomial(m as usize - 1, k as usize + 1);
            assert_eq!(h.betti, expected, "m={m} k={k}");
            assert!(!h.has_torsion());
        }
    }
}
