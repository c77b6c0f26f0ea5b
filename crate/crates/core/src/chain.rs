//! Integer simplicial chains.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::Simplex;
use crate::error::{Error, Result};

/// Integer combination of `dim`-simplices. Zero coefficients are never stored.
///
/// Dimension `-1` only ever holds the zero chain (the boundary of a vertex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: isize,
    terms: BTreeMap<Simplex, BigInt>,
}

impl Chain {
    pub fn zero(dim: isize) -> Self {
        Chain { dim, terms: BTreeMap::new() }
    }

    /// The elementary chain `1 * s`.
    pub fn simplex(s: Simplex) -> Self {
        let dim = s.dim() as isize;
        let mut terms = BTreeMap::new();
        terms.insert(s, BigInt::one());
        Chain { dim, terms }
    }

    /// Builds a chain from `(simplex, coefficient)` pairs; repeated simplices add up.
    pub fn from_terms<C: Into<BigInt>>(
        dim: isize,
        terms: impl IntoIterator<Item = (Simplex, C)>,
    ) -> Result<Self> {
        let mut out = Chain::zero(dim);
        for (s, c) in terms {
            if s.dim() as isize != dim {
                return Err(Error::DimensionMismatch);
            }
            out.add_term(s, c.into());
        }
        Ok(out)
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, s: &Simplex) -> BigInt {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, s: Simplex, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&mut self, factor: &BigInt, other: &Chain) -> Result<()> {
        if other.is_zero() || factor.is_zero() {
            return Ok(());
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch);
        }
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c * factor);
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &BigInt) -> Chain {
        let mut out = Chain::zero(self.dim);
        if !factor.is_zero() {
            for (s, c) in &self.terms {
                out.terms.insert(s.clone(), c * factor);
            }
        }
        out
    }

    /// Boundary of the chain, extended linearly from [`boundary`].
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.dim - 1);
        for (s, c) in &self.terms {
            out.add_scaled(c, &boundary(s)).expect("faces share one dimension");
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if i > 0 {
                f.write_str(" ")?;
            }
            if i > 0 || c.is_negative() {
                write!(f, "{sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `∂{v_1 < ... < v_{d+1}} = Σ (-1)^(i-1) {v_1, ..., v̂_i, ..., v_{d+1}}`.
/// The boundary of a vertex is the zero chain in dimension `-1`.
pub fn boundary(s: &Simplex) -> Chain {
    let mut out = Chain::zero(s.dim() as isize - 1);
    for i in 0..s.len() {
        if let Some(face) = s.without_index(i) {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            out.add_term(face, sign);
        }
    }
    out
}
