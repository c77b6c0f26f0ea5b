//! Fillings: sets of minimal non-faces whose adjunction makes the complex
//! contractible.
//!
//! Contractibility is certified, in order of strength, by an explicit collapse
//! sequence or by vanishing reduced homology together with a trivialized
//! edge-path group presentation. The certificate kind is always reported.

pub mod collapse;
pub mod edge_path;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::complex::{MinimalNonFace, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, HomologyProfile};

pub use collapse::{replay_collapses, Collapse};
use edge_path::{edge_path_presentation, simplify, TietzeOutcome};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const COLLAPSE_RESTARTS: usize = 32;
pub const TIETZE_MOVES: usize = 10_000;
const TIETZE_LETTERS: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertificateKind {
    CollapseSequence,
    HomologyEvidence,
    Failed,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::CollapseSequence => "collapse_sequence",
            CertificateKind::HomologyEvidence => "homology_evidence",
            CertificateKind::Failed => "failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// Some reduced homology group is non-zero.
    Homology(HomologyProfile),
    /// Homology vanishes but the edge-path group was not shown trivial.
    FundamentalGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractibilityCertificate {
    CollapseSequence(Vec<Collapse>),
    /// Certified under the simple-connectivity check, not shown collapsible.
    HomologyEvidence(HomologyProfile),
    Failed(FailureReason),
}

impl ContractibilityCertificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Self::CollapseSequence(_) => CertificateKind::CollapseSequence,
            Self::HomologyEvidence(_) => CertificateKind::HomologyEvidence,
            Self::Failed(_) => CertificateKind::Failed,
        }
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self, Self::Failed(_))
    }
}

pub fn certify_contractible(l: &SimplicialComplex) -> ContractibilityCertificate {
    certify_contractible_with_seed(l, DEFAULT_SEED)
}

pub fn certify_contractible_with_seed(l: &SimplicialComplex, seed: u64) -> ContractibilityCertificate {
    if let Ok(steps) = collapse::greedy_collapse(l) {
        return ContractibilityCertificate::CollapseSequence(steps);
    }
    // a collapsible complex is acyclic, so restarts are pointless otherwise
    let h = reduced_homology(l);
    if !h.is_acyclic() {
        return ContractibilityCertificate::Failed(FailureReason::Homology(h));
    }
    if let Some(steps) = collapse::find_collapse(l, COLLAPSE_RESTARTS, seed) {
        return ContractibilityCertificate::CollapseSequence(steps);
    }
    let trivial = edge_path_presentation(l).is_some_and(|p| {
        matches!(simplify(&p, TIETZE_MOVES, TIETZE_LETTERS), TietzeOutcome::Trivial { .. })
    });
    if trivial {
        ContractibilityCertificate::HomologyEvidence(h)
    } else {
        ContractibilityCertificate::Failed(FailureReason::FundamentalGroup)
    }
}

/// `k` with each `Δ(M)` adjoined.
pub fn union_with(k: &SimplicialComplex, ms: &[MinimalNonFace]) -> Result<SimplicialComplex> {
    if let Some(bad) = ms.iter().find(|m| !k.is_minimal_non_face(m.members())) {
        return Err(Error::NotMinimalNonFace(bad.members().clone()));
    }
    Ok(k.with_added_faces(ms.iter().map(|m| m.members().clone())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    non_faces: Vec<MinimalNonFace>,
    certificate: ContractibilityCertificate,
}

impl Filling {
    pub fn non_faces(&self) -> &[MinimalNonFace] {
        &self.non_faces
    }

    pub fn certificate(&self) -> &ContractibilityCertificate {
        &self.certificate
    }

    pub fn len(&self) -> usize {
        self.non_faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.non_faces.is_empty()
    }

    /// All non-faces have the same size.
    pub fn is_pure(&self) -> bool {
        self.non_faces.iter().map(MinimalNonFace::len).all_equal()
    }

    /// Sorted sizes of the non-faces.
    pub fn shape(&self) -> Vec<usize> {
        self.non_faces.iter().map(MinimalNonFace::len).sorted().collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.non_faces.iter().any(|m| m.members() == s)
    }

    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.non_faces.iter().position(|m| m.members() == s)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.non_faces.iter().map(|m| m.members().compact_label()).join(" ");
        write!(f, "{labels} [{}]", self.certificate.kind())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotFilling {
    NotMinimalNonFace(Simplex),
    Repeated(Simplex),
    NotContractible(FailureReason),
}

impl fmt::Display for NotFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotFilling::NotMinimalNonFace(s) => write!(f, "{s} is not a minimal non-face"),
            NotFilling::Repeated(s) => write!(f, "{s} listed twice"),
            NotFilling::NotContractible(FailureReason::Homology(h)) => {
                write!(f, "union has reduced Betti numbers {:?}", h.betti)?;
                if h.has_torsion() {
                    write!(f, " and torsion {:?}", h.torsion)?;
                }
                Ok(())
            }
            NotFilling::NotContractible(FailureReason::FundamentalGroup) => {
                f.write_str("union is acyclic but simple connectivity was not established")
            }
        }
    }
}

impl From<NotFilling> for Error {
    fn from(e: NotFilling) -> Self {
        Error::NotFilling(e.to_string())
    }
}

pub fn is_filling(k: &SimplicialComplex, ms: &[Simplex]) -> std::result::Result<Filling, NotFilling> {
    is_filling_with_seed(k, ms, DEFAULT_SEED)
}

/// Keeps the caller's order of `ms`.
pub fn is_filling_with_seed(
    k: &SimplicialComplex,
    ms: &[Simplex],
    seed: u64,
) -> std::result::Result<Filling, NotFilling> {
    let mut seen = BTreeSet::new();
    let mut non_faces = Vec::with_capacity(ms.len());
    for s in ms {
        if !seen.insert(s) {
            return Err(NotFilling::Repeated(s.clone()));
        }
        let m = MinimalNonFace::new(k, s.clone()).map_err(|_| NotFilling::NotMinimalNonFace(s.clone()))?;
        non_faces.push(m);
    }
    let union = union_with(k, &non_faces).expect("validated above");
    match certify_contractible_with_seed(&union, seed) {
        ContractibilityCertificate::Failed(r) => Err(NotFilling::NotContractible(r)),
        certificate => Ok(Filling { non_faces, certificate }),
    }
}

/// Sizes forced on every filling by the reduced homology of `k`: a filling
/// exists only if the suspension is a wedge of spheres, so torsion obstructs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillingShape {
    /// Sorted sizes `d + 2`, repeated `betti_d` times.
    Sizes(Vec<usize>),
    Obstructed(HomologyProfile),
}

impl FillingShape {
    pub fn sizes(&self) -> Option<&[usize]> {
        match self {
            FillingShape::Sizes(s) => Some(s),
            FillingShape::Obstructed(_) => None,
        }
    }
}

pub fn filling_shape(k: &SimplicialComplex) -> FillingShape {
    let h = reduced_homology(k);
    if h.has_torsion() {
        return FillingShape::Obstructed(h);
    }
    let sizes = h
        .betti
        .iter()
        .enumerate()
        .flat_map(|(d, &b)| std::iter::repeat_n(d + 2, b))
        .collect();
    FillingShape::Sizes(sizes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after this many fillings.
    pub limit: usize,
    pub seed: u64,
    /// Stop after examining this many candidates, if set.
    pub max_candidates: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limit: usize::MAX, seed: DEFAULT_SEED, max_candidates: None }
    }
}

/// Number of candidate subsets [`find_fillings`] would examine exhaustively.
pub fn candidate_count(k: &SimplicialComplex) -> Option<u128> {
    let sizes = filling_shape(k).sizes()?.to_vec();
    let by_size = k.minimal_non_faces().into_iter().counts_by(|m| m.len());
    let need = sizes.into_iter().counts();
    let mut total: u128 = 1;
    for (size, c) in need {
        total = total.checked_mul(binomial(*by_size.get(&size).unwrap_or(&0), c)?)?;
    }
    Some(total)
}

fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut r: u128 = 1;
    for i in 0..k.min(n - k) as u128 {
        r = r.checked_mul(n as u128 - i)? / (i + 1);
    }
    Some(r)
}

pub fn find_fillings(k: &SimplicialComplex, limit: usize) -> Vec<Filling> {
    find_fillings_with(k, &SearchOptions { limit, ..SearchOptions::default() })
}

/// Candidates are subsets of the minimal non-faces matching
/// [`filling_shape`], visited in lexicographic order of their sorted lists.
/// Batches are verified in parallel and merged in that order.
pub fn find_fillings_with(k: &SimplicialComplex, opts: &SearchOptions) -> Vec<Filling> {
    let Some(sizes) = filling_shape(k).sizes().map(<[usize]>::to_vec) else {
        return Vec::new();
    };
    let mut pools: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
    for m in k.minimal_non_faces() {
        pools.entry(m.len()).or_default().push(m.into_simplex());
    }
    let need = sizes.iter().copied().counts();

    let candidates: Box<dyn Iterator<Item = Vec<Simplex>>> = if need.len() <= 1 {
        match need.into_iter().next() {
            None => Box::new(std::iter::once(Vec::new())),
            Some((size, c)) => {
                let pool = pools.remove(&size).unwrap_or_default();
                Box::new(pool.into_iter().combinations(c))
            }
        }
    } else {
        let mut all: Vec<Vec<Simplex>> = need
            .into_iter()
            .sorted()
            .map(|(size, c)| pools.remove(&size).unwrap_or_default().into_iter().combinations(c))
            .multi_cartesian_product()
            .map(|parts| parts.into_iter().flatten().sorted().collect())
            .collect();
        all.sort();
        Box::new(all.into_iter())
    };
    let candidates = candidates.take(opts.max_candidates.unwrap_or(usize::MAX));

    const BATCH: usize = 64;
    let mut found = Vec::new();
    for batch in &candidates.chunks(BATCH) {
        let batch: Vec<Vec<Simplex>> = batch.collect();
        let results: Vec<Option<Filling>> = batch
            .par_iter()
            .map(|c| is_filling_with_seed(k, c, opts.seed).ok())
            .collect();
        for f in results.into_iter().flatten() {
            found.push(f);
            if found.len() >= opts.limit {
                return found;
            }
        }
    }
    found
}

/// A filling containing `target`, obtained by replacing one member of `a`.
/// Members are tried in order and the replaced slot keeps its position.
pub fn exchange_filling(k: &SimplicialComplex, a: &Filling, target: &Simplex, seed: u64) -> Result<Filling> {
    if a.contains(target) {
        return Ok(a.clone());
    }
    MinimalNonFace::new(k, target.clone())?;
    let members: Vec<Simplex> = a.non_faces.iter().map(|m| m.members().clone()).collect();
    for j in 0..members.len() {
        if members[j].len() != target.len() {
            continue;
        }
        let mut cand = members.clone();
        cand[j] = target.clone();
        if let Ok(f) = is_filling_with_seed(k, &cand, seed) {
            return Ok(f);
        }
    }
    Err(Error::NotFilling(format!("no single exchange puts {target} into the filling")))
}

/// Filling of the codimension-one skeleton of a sphere `s` by every facet of
/// `s` except `omit`.
pub fn sphere_skeleton_filling(s: &SimplicialComplex, omit: &Simplex) -> Result<Filling> {
    sphere_skeleton_filling_with_seed(s, omit, DEFAULT_SEED)
}

pub fn sphere_skeleton_filling_with_seed(
    s: &SimplicialComplex,
    omit: &Simplex,
    seed: u64,
) -> Result<Filling> {
    let (k, rest) = sphere_parts(s, omit)?;
    Ok(is_filling_with_seed(&k, &rest, seed)?)
}

/// Validates `s` as a homology sphere of dimension at least one with `omit`
/// among its facets; returns the codimension-one skeleton and the remaining
/// facets in lexicographic order.
pub(crate) fn sphere_parts(s: &SimplicialComplex, omit: &Simplex) -> Result<(SimplicialComplex, Vec<Simplex>)> {
    let n = s.dim();
    let pure = s.facets().iter().all(|f| f.dim() == n);
    if n == 0 || !pure || !reduced_homology(s).is_sphere_of_dim(n) {
        return Err(Error::NotSphere);
    }
    if !s.facets().contains(omit) {
        return Err(Error::NotAFacet(omit.clone()));
    }
    let k = s.skeleton(n - 1);
    let rest = s.facets().iter().filter(|f| *f != omit).cloned().collect();
    Ok((k, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cross_polytope_boundary, rp2_six, rp2_skeleton, simplex_boundary, simplex_skeleton};

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    fn mnf(k: &SimplicialComplex, v: &[u32]) -> MinimalNonFace {
        MinimalNonFace::new(k, s(v)).unwrap()
    }

    #[test]
    fn union_examples() {
        let circle = simplex_boundary(3).unwrap();
        let u = union_with(&circle, &[mnf(&circle, &[1, 2, 3])]).unwrap();
        assert_eq!(u, SimplicialComplex::simplex(3).unwrap());

        assert_eq!(union_with(&circle, &[]).unwrap(), circle);

        let k4 = simplex_skeleton(4, 1).unwrap();
        let u = union_with(&k4, &[mnf(&k4, &[1, 2, 3]), mnf(&k4, &[1, 2, 4])]).unwrap();
        assert_eq!(u.faces_of_dim(2), vec![s(&[1, 2, 3]), s(&[1, 2, 4])]);
        assert_eq!(u.edges().len(), 6);

        let tri = SimplicialComplex::simplex(3).unwrap();
        let foreign = MinimalNonFace::unchecked(s(&[1, 2, 3]));
        assert!(union_with(&tri, &[foreign]).is_err());
    }

    #[test]
    fn certificate_examples() {
        let d5 = SimplicialComplex::simplex(5).unwrap();
        assert_eq!(certify_contractible(&d5).kind(), CertificateKind::CollapseSequence);

        let circle = simplex_boundary(3).unwrap();
        match certify_contractible(&circle) {
            ContractibilityCertificate::Failed(FailureReason::Homology(h)) => {
                assert_eq!(h.betti, vec![0, 1])
            }
            other => panic!("unexpected {other:?}"),
        }

        let oct = cross_polytope_boundary(1).unwrap();
        let punctured =
            SimplicialComplex::new(6, oct.facets().iter().filter(|f| **f != s(&[1, 3, 5])).cloned())
                .unwrap();
        let cert = certify_contractible(&punctured);
        let ContractibilityCertificate::CollapseSequence(steps) = cert else { panic!() };
        assert!(replay_collapses(&punctured, &steps));

        assert!(!certify_contractible(&rp2_six()).is_certified());
    }

    #[test]
    fn is_filling_examples() {
        let circle = simplex_boundary(3).unwrap();
        let f = is_filling(&circle, &[s(&[1, 2, 3])]).unwrap();
        assert!(f.is_pure());
        assert_eq!(f.len(), 1);

        let oct1 = cross_polytope_boundary(1).unwrap().skeleton(1);
        let facets = cross_polytope_boundary(1).unwrap().facets().to_vec();
        for skip in 0..facets.len() {
            let seven: Vec<Simplex> =
                facets.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, f)| f.clone()).collect();
            let f = is_filling(&oct1, &seven).unwrap();
            assert!(f.is_pure());
            assert_eq!(f.len(), 7);
        }

        assert!(matches!(
            is_filling(&circle, &[]),
            Err(NotFilling::NotContractible(FailureReason::Homology(_)))
        ));
        assert_eq!(
            is_filling(&circle, &[s(&[1, 2])]),
            Err(NotFilling::NotMinimalNonFace(s(&[1, 2])))
        );
        assert_eq!(
            is_filling(&circle, &[s(&[1, 2, 3]), s(&[1, 2, 3])]),
            Err(NotFilling::Repeated(s(&[1, 2, 3])))
        );
    }

    #[test]
    fn projective_plane_exchange_fillings() {
        let k6 = rp2_skeleton();
        let family: Vec<Simplex> = crate::generators::RP2_FILLING_TRIANGLES
            .iter()
            .map(|t| s(t))
            .collect();
        for drop in &family {
            let cand: Vec<Simplex> =
                family.iter().filter(|t| *t != drop).cloned().chain([s(&[1, 2, 3])]).collect();
            let f = is_filling(&k6, &cand).unwrap_or_else(|e| panic!("dropping {drop}: {e}"));
            assert!(f.is_pure());
        }
        // the ten triangles alone form a projective plane
        assert!(is_filling(&k6, &family).is_err());
    }

    #[test]
    fn shape_examples() {
        let pts = simplex_skeleton(3, 0).unwrap();
        assert_eq!(filling_shape(&pts), FillingShape::Sizes(vec![2, 2]));
        assert_eq!(filling_shape(&rp2_skeleton()), FillingShape::Sizes(vec![3; 10]));
        assert!(matches!(filling_shape(&rp2_six()), FillingShape::Obstructed(_)));
        assert_eq!(filling_shape(&SimplicialComplex::simplex(3).unwrap()), FillingShape::Sizes(vec![]));
    }

    #[test]
    fn search_examples() {
        let pts = simplex_skeleton(3, 0).unwrap();
        let found = find_fillings(&pts, usize::MAX);
        let lists: Vec<Vec<Simplex>> =
            found.iter().map(|f| f.non_faces().iter().map(|m| m.members().clone()).collect()).collect();
        assert_eq!(
            lists,
            vec![
                vec![s(&[1, 2]), s(&[1, 3])],
                vec![s(&[1, 2]), s(&[2, 3])],
                vec![s(&[1, 3]), s(&[2, 3])],
            ]
        );
        assert!(found.iter().all(|f| f.certificate().kind() == CertificateKind::CollapseSequence));

        let oct1 = cross_polytope_boundary(1).unwrap().skeleton(1);
        assert_eq!(find_fillings(&oct1, usize::MAX).len(), 8);
        assert_eq!(find_fillings(&oct1, 2).len(), 2);

        assert!(find_fillings(&rp2_six(), 10).is_empty());
        assert_eq!(candidate_count(&rp2_six()), None);
        assert_eq!(candidate_count(&rp2_skeleton()), Some(184_756));
    }

    #[test]
    fn full_simplex_has_the_empty_filling() {
        let f = find_fillings(&SimplicialComplex::simplex(3).unwrap(), 5);
        assert_eq!(f.len(), 1);
        assert!(f[0].is_empty());
    }

    #[test]
    fn sphere_filling_examples() {
        let f = sphere_skeleton_filling(&simplex_boundary(4).unwrap(), &s(&[2, 3, 4])).unwrap();
        let got: Vec<&Simplex> = f.non_faces().iter().map(MinimalNonFace::members).collect();
        assert_eq!(got, vec![&s(&[1, 2, 3]), &s(&[1, 2, 4]), &s(&[1, 3, 4])]);

        let oct = cross_polytope_boundary(1).unwrap();
        let f = sphere_skeleton_filling(&oct, &s(&[1, 3, 5])).unwrap();
        assert_eq!(f.len(), 7);
        assert!(!f.contains(&s(&[1, 3, 5])));

        let f = sphere_skeleton_filling(&simplex_boundary(3).unwrap(), &s(&[1, 2])).unwrap();
        let got: Vec<&Simplex> = f.non_faces().iter().map(MinimalNonFace::members).collect();
        assert_eq!(got, vec![&s(&[1, 3]), &s(&[2, 3])]);
    }

    #[test]
    fn sphere_filling_errors() {
        let circle = simplex_boundary(3).unwrap();
        assert_eq!(
            sphere_skeleton_filling(&circle, &s(&[1, 2, 3])),
            Err(Error::NotAFacet(s(&[1, 2, 3])))
        );
        assert_eq!(
            sphere_skeleton_filling(&rp2_six(), &s(&[1, 2, 3])),
            Err(Error::NotSphere)
        );
        let disk = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(sphere_skeleton_filling(&disk, &s(&[1, 2, 3])), Err(Error::NotSphere));
    }
}
