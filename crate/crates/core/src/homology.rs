//! Reduced integral homology through Smith normal forms of boundary matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chain::boundary;
use crate::complex::{Simplex, SimplicialComplex};
use crate::matrix::{invariant_factors, IntegerMatrix};

/// Matrix of `∂_d` with rows indexed by the `(d-1)`-faces and columns by the
/// `d`-faces, both in lexicographic order.
///
/// For `d = 0` the single row stands for the empty face and every entry is 1,
/// which is the augmentation used by reduced homology.
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> IntegerMatrix {
    let cols = k.faces_of_dim(d);
    if d == 0 {
        let mut m = IntegerMatrix::zeros(1, cols.len());
        for j in 0..cols.len() {
            m.set(0, j, 1);
        }
        return m;
    }
    let rows = k.faces_of_dim(d - 1);
    boundary_matrix_between(&rows, &cols)
}

pub(crate) fn boundary_matrix_between(rows: &[Simplex], cols: &[Simplex]) -> IntegerMatrix {
    let index: HashMap<&Simplex, usize> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for (face, c) in boundary(s).terms() {
            let i = index[face];
            m.set(i, j, c.clone());
        }
    }
    m
}

/// Betti numbers and torsion coefficients of reduced homology, indexed by
/// dimension `0..=dim K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
    /// Face counts, kept for the Euler characteristic cross-check.
    pub f_vector: Vec<usize>,
}

impl HomologyProfile {
    pub fn betti_in(&self, d: usize) -> usize {
        self.betti.get(d).copied().unwrap_or(0)
    }

    pub fn torsion_in(&self, d: usize) -> &[BigInt] {
        self.torsion.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn total_betti(&self) -> usize {
        self.betti.iter().sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    /// All reduced groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.total_betti() == 0 && !self.has_torsion()
    }

    /// Profile of a homology `n`-sphere: `Z` in degree `n`, nothing else.
    pub fn is_sphere_of_dim(&self, n: usize) -> bool {
        !self.has_torsion()
            && self.betti.iter().enumerate().all(|(d, &b)| b == usize::from(d == n))
            && self.betti_in(n) == 1
    }

    /// `Σ (-1)^d f_d == 1 + Σ (-1)^d betti_d`.
    pub fn euler_consistent(&self) -> bool {
        let alt = |v: &[usize]| -> i64 {
            v.iter().enumerate().map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
        };
        alt(&self.f_vector) == 1 + alt(&self.betti)
    }
}

pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    let top = k.dim();
    let faces: Vec<Vec<Simplex>> = (0..=top).map(|d| k.faces_of_dim(d)).collect();
    let f_vector: Vec<usize> = faces.iter().map(Vec::len).collect();

    // factors[d] = invariant factors of ∂_d, with ∂_0 the augmentation
    let mut factors: Vec<Vec<BigInt>> = Vec::with_capacity(top + 2);
    factors.push(vec![BigInt::one()]);
    for d in 1..=top {
        factors.push(invariant_factors(&boundary_matrix_between(&faces[d - 1], &faces[d])));
    }
    factors.push(Vec::new());

    let mut betti = Vec::with_capacity(top + 1);
    let mut torsion = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let cycles = f_vector[d] - factors[d].len();
        betti.push(cycles - factors[d + 1].len());
        let t: Vec<BigInt> = factors[d + 1]
            .iter()
            .filter(|x| !x.is_one() && !x.is_zero())
            .cloned()
            .collect();
        torsion.push(t);
    }
    HomologyProfile { betti, torsion, f_vector }
}
