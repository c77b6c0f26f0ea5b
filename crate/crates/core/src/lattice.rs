//! Integer solutions of `Σ a_j · basis_j = target` for chains.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::chain::Chain;
use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, IntegerMatrix};

/// All integer solutions: `particular + span_Z(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSolution {
    /// Lexicographically smallest representative of the solution coset,
    /// comparing coordinates by absolute value first and preferring the
    /// non-negative sign on ties.
    pub particular: Vec<BigInt>,
    /// Hermite-normal-form basis of the homogeneous solutions.
    pub kernel: Vec<Vec<BigInt>>,
}

impl ChainSolution {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Evaluates `Σ coeffs_j · basis_j`.
pub fn combine(basis: &[Chain], coeffs: &[BigInt], dim: isize) -> Result<Chain> {
    let mut out = Chain::zero(dim);
    for (c, a) in basis.iter().zip(coeffs) {
        out.add_scaled(a, c)?;
    }
    Ok(out)
}

pub fn solve_chain_relation(target: &Chain, basis: &[Chain]) -> Result<ChainSolution> {
    let dim = target.dim();
    if basis.iter().any(|b| b.dim() != dim) {
        return Err(Error::DimensionMismatch);
    }
    let rows: Vec<Simplex> = std::iter::once(target)
        .chain(basis)
        .flat_map(|c| c.terms().keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let n = basis.len();
    let mut a = IntegerMatrix::zeros(rows.len(), n);
    for (j, b) in basis.iter().enumerate() {
        for (i, s) in rows.iter().enumerate() {
            let c = b.coefficient(s);
            if !c.is_zero() {
                a.set(i, j, c);
            }
        }
    }
    let t: Vec<BigInt> = rows.iter().map(|s| target.coefficient(s)).collect();

    let snf = smith_normal_form(&a);
    let ut = snf.u.mul_vec(&t);
    let mut y = vec![BigInt::zero(); n];
    for (i, c) in ut.iter().enumerate() {
        if i < snf.rank {
            let d = snf.s.get(i, i);
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NoSolution);
            }
            y[i] = q;
        } else if !c.is_zero() {
            return Err(Error::NoSolution);
        }
    }
    let particular = snf.v.mul_vec(&y);
    let kernel_cols: Vec<Vec<BigInt>> = (snf.rank..n).map(|j| snf.v.column(j)).collect();
    let kernel = hermite_rows(kernel_cols);
    let particular = reduce_mod_lattice(particular, &kernel);

    debug_assert_eq!(&combine(basis, &particular, dim)?, target);
    Ok(ChainSolution { particular, kernel })
}

/// Row Hermite normal form of the lattice spanned by `rows`: echelon shape,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else { return rows };
    let mut r = 0;
    for col in 0..width {
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                sub_scaled(&mut rows, i, r, &q);
                clean &= rows[i][col].is_zero();
            }
            if clean {
                if rows[r][col].is_negative() {
                    for x in rows[r].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
                for i in 0..r {
                    let q = rows[i][col].div_floor(&rows[r][col]);
                    sub_scaled(&mut rows, i, r, &q);
                }
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// `rows[dst] -= q * rows[src]`
fn sub_scaled(rows: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let s = rows[src].clone();
    for (x, y) in rows[dst].iter_mut().zip(&s) {
        *x -= q * y;
    }
}

/// Lexicographically smallest element of `x + lattice` under the
/// absolute-value-then-sign coordinate order. `lattice` must be in echelon
/// shape with positive pivots, as produced by [`hermite_rows`].
pub fn reduce_mod_lattice(mut x: Vec<BigInt>, lattice: &[Vec<BigInt>]) -> Vec<BigInt> {
    for row in lattice {
        let Some(col) = row.iter().position(|v| !v.is_zero()) else { continue };
        let h = &row[col];
        let r = x[col].mod_floor(h);
        let alt = &r - h;
        let best = if alt.abs() < r { alt } else { r };
        let t = (&x[col] - &best) / h;
        for (xi, ri) in x.iter_mut().zip(row) {
            *xi -= &t * ri;
        }
    }
    x
}
