//! Iterated higher Whitehead product expressions and the linear identities
//! between them forced by pairs of pure fillings.

pub mod graded;
pub mod render;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chain::{boundary, Chain};
use crate::complex::{MinimalNonFace, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::filling::{is_filling_with_seed, sphere_parts, Filling, DEFAULT_SEED};
use crate::lattice::{solve_chain_relation, ChainSolution};
use crate::ordering::{contraction_ordering, validate_ordering, ContractionOrdering};

pub use graded::{graded_lie_check, specialize_spheres, Bracket, GradedBracketTerm, SphereGrading};
pub use render::{parse_identity_json, render, render_document, Format, IdentityDocument};

/// `[…[[w(M), e_{i1}], e_{i2}], …, e_{ik}] ∘ ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WhiteheadExpr {
    non_face: MinimalNonFace,
    ordering: ContractionOrdering,
    rho: Vec<u32>,
}

impl WhiteheadExpr {
    pub fn non_face(&self) -> &MinimalNonFace {
        &self.non_face
    }

    pub fn ordering(&self) -> &ContractionOrdering {
        &self.ordering
    }

    /// Images of `1, …, m` in order: the members of `M` ascending, then the
    /// contraction ordering.
    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    /// Number of suspensions on the source.
    pub fn source_suspension(&self) -> usize {
        self.non_face.len() - 1
    }

    pub fn label(&self) -> String {
        self.non_face.members().compact_label()
    }
}

fn rho_of(m: &MinimalNonFace, order: &[u32]) -> Vec<u32> {
    m.members().vertices().iter().chain(order).copied().collect()
}

impl fmt::Display for WhiteheadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = self.ordering.order();
        write!(f, "{}", "[".repeat(order.len()))?;
        write!(f, "w({})", self.non_face.members().vertices().iter().join(","))?;
        for i in order {
            write!(f, ", e{i}]")?;
        }
        let identity = self.rho.iter().sorted().join(",");
        write!(f, " ∘ ρ, ρ: ({identity})↦({})", self.rho.iter().join(","))
    }
}

pub fn build_expr(
    k: &SimplicialComplex,
    m: &MinimalNonFace,
    ordering: &ContractionOrdering,
) -> Result<WhiteheadExpr> {
    if ordering.non_face() != m || !validate_ordering(k, m, ordering.order()) {
        return Err(Error::InvalidOrdering {
            non_face: m.members().clone(),
            order: ordering.order().to_vec(),
        });
    }
    Ok(WhiteheadExpr { non_face: m.clone(), ordering: ordering.clone(), rho: rho_of(m, ordering.order()) })
}

/// The fillings and chain solution an identity was read off from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub filling_a: Vec<Simplex>,
    /// Absent for sphere identities, where the target is the omitted facet.
    pub filling_b: Option<Vec<Simplex>>,
    pub target_index: Option<usize>,
    pub solution: ChainSolution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteheadIdentity {
    pub lhs: WhiteheadExpr,
    /// Non-zero terms in the order of the spanning filling.
    pub rhs: Vec<(i64, WhiteheadExpr)>,
    pub pure: bool,
    pub unique: bool,
    pub provenance: Provenance,
}

impl WhiteheadIdentity {
    /// `∂(lhs) − Σ c·∂(rhs)`, which is zero for every identity built here.
    pub fn chain_defect(&self) -> Chain {
        let mut d = boundary(self.lhs.non_face().members());
        for (c, e) in &self.rhs {
            d.add_scaled(&BigInt::from(-c), &boundary(e.non_face().members()))
                .expect("pure identity");
        }
        d
    }

    pub fn coefficient_of(&self, s: &Simplex) -> i64 {
        self.rhs.iter().find(|(_, e)| e.non_face().members() == s).map_or(0, |(c, _)| *c)
    }
}

/// Orderings supplied by the caller, keyed by non-face; missing ones are
/// computed canonically.
pub type Orderings = BTreeMap<Simplex, ContractionOrdering>;

fn expr_for(k: &SimplicialComplex, m: &MinimalNonFace, orderings: &Orderings) -> Result<WhiteheadExpr> {
    match orderings.get(m.members()) {
        Some(o) => build_expr(k, m, o),
        None => build_expr(k, m, &contraction_ordering(k, m)?),
    }
}

fn small(c: &BigInt) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::ParameterRange(format!("coefficient {c} exceeds 64 bits")))
}

/// Left side, non-zero right-hand terms, and the raw solution.
type Solved = (WhiteheadExpr, Vec<(i64, WhiteheadExpr)>, ChainSolution);

fn solve_identity(
    k: &SimplicialComplex,
    target: &MinimalNonFace,
    basis: &[MinimalNonFace],
    orderings: &Orderings,
) -> Result<Solved> {
    let chains: Vec<Chain> = basis.iter().map(|m| boundary(m.members())).collect();
    let solution = solve_chain_relation(&boundary(target.members()), &chains)?;
    let lhs = expr_for(k, target, orderings)?;
    let mut rhs = Vec::new();
    for (c, m) in solution.particular.iter().zip(basis) {
        if !c.is_zero() {
            rhs.push((small(c)?, expr_for(k, m, orderings)?));
        }
    }
    Ok((lhs, rhs, solution))
}

/// Expresses `w_{N_i}` for the `i`-th member of `b` through the members of `a`.
pub fn derive_identity(
    k: &SimplicialComplex,
    a: &Filling,
    b: &Filling,
    i: usize,
    orderings: &Orderings,
) -> Result<WhiteheadIdentity> {
    if i >= b.len() {
        return Err(Error::IndexOutOfRange { index: i, len: b.len() });
    }
    if !a.is_pure() || !b.is_pure() {
        return Err(Error::Purity("both fillings must be pure".into()));
    }
    let size_a = a.non_faces().first().map(MinimalNonFace::len);
    let size_b = b.non_faces().first().map(MinimalNonFace::len);
    if size_a.is_some() && size_a != size_b {
        return Err(Error::Purity(format!(
            "non-face sizes {} and {} differ",
            size_a.unwrap_or(0),
            size_b.unwrap_or(0)
        )));
    }
    let target = &b.non_faces()[i];
    let (lhs, rhs, solution) = solve_identity(k, target, a.non_faces(), orderings)?;
    let members = |f: &Filling| f.non_faces().iter().map(|m| m.members().clone()).collect();
    Ok(WhiteheadIdentity {
        lhs,
        rhs,
        pure: true,
        unique: solution.is_unique(),
        provenance: Provenance {
            filling_a: members(a),
            filling_b: Some(members(b)),
            target_index: Some(i),
            solution,
        },
    })
}

/// Identity on the codimension-one skeleton of a sphere `s`: `w_omit` in
/// terms of the other facets, taken in lexicographic order. Every
/// coefficient must be a unit.
pub fn sphere_identity(s: &SimplicialComplex, omit: &Simplex) -> Result<WhiteheadIdentity> {
    let (k, rest) = sphere_parts(s, omit)?;
    let filling = is_filling_with_seed(&k, &rest, DEFAULT_SEED)?;
    let target = MinimalNonFace::new(&k, omit.clone())?;
    let (lhs, rhs, solution) = solve_identity(&k, &target, filling.non_faces(), &Orderings::new())?;
    if let Some(c) = solution.particular.iter().find(|c| !c.abs().is_one()) {
        return Err(Error::NonUnitCoefficient(c.to_string()));
    }
    Ok(WhiteheadIdentity {
        lhs,
        rhs,
        pure: filling.is_pure(),
        unique: solution.is_unique(),
        provenance: Provenance { filling_a: rest, filling_b: None, target_index: None, solution },
    })
}
