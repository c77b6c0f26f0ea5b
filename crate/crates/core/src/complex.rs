//! Finite abstract simplicial complexes stored by their facets.
//!
//! Vertices are positive integer labels. A complex carries an explicit ground
//! set, and every ground vertex must occur in some facet. Full subcomplexes keep
//! the original labels, so their ground set is the chosen subset rather than
//! `1..=m`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-empty, strictly increasing list of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Builds a simplex from labels in any order. Rejects empty input, zero
    /// labels and repeated labels.
    pub fn new(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v: Vec<u32> = labels.into_iter().collect();
        if v.is_empty() {
            return Err(Error::InvalidSimplex("empty vertex list".into()));
        }
        if v.contains(&0) {
            return Err(Error::InvalidSimplex("labels must be positive".into()));
        }
        v.sort_unstable();
        if let Some((a, _)) = v.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::InvalidSimplex(format!("vertex {a} repeated")));
        }
        Ok(Simplex(v))
    }

    /// Caller guarantees the labels are positive and strictly increasing.
    pub(crate) fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(!v.is_empty() && v.iter().tuple_windows().all(|(a, b)| a < b));
        Simplex(v)
    }

    pub fn vertex(v: u32) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// The face obtained by deleting the vertex at `index`; `None` for a vertex.
    pub fn without_index(&self, index: usize) -> Option<Simplex> {
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(index);
        Some(Simplex(v))
    }

    /// All codimension-one faces in deletion-index order.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).filter_map(|i| self.without_index(i))
    }

    pub fn with_vertex(&self, v: u32) -> Simplex {
        let mut w = self.0.clone();
        match w.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => w.insert(pos, v),
        }
        Simplex(w)
    }

    /// Compact label used in listings: digits run together when every label
    /// is a single digit (`124`), otherwise comma separated (`1,10,12`).
    pub fn compact_label(&self) -> String {
        if self.0.iter().all(|&v| v < 10) {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.0.iter().join(",")
        }
    }

    /// Inverse of [`Simplex::compact_label`].
    pub fn parse_compact(token: &str) -> Result<Simplex> {
        let bad = || Error::InvalidSimplex(format!("cannot parse {token:?}"));
        let labels: Vec<u32> = if token.contains(',') {
            token
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            token
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Simplex::new(labels)
    }
}

impl TryFrom<Vec<u32>> for Simplex {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        let s = Simplex::new(v.iter().copied())?;
        if s.0 != v {
            return Err(Error::InvalidSimplex(format!("{v:?} is not strictly increasing")));
        }
        Ok(s)
    }
}

impl From<Simplex> for Vec<u32> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

pub(crate) fn is_sorted_subset(small: &[u32], big: &[u32]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Removes duplicates and every set contained in another one.
pub(crate) fn maximal_elements(sets: impl IntoIterator<Item = Simplex>) -> Vec<Simplex> {
    let mut all: Vec<Simplex> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Simplex> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset_of(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// A simplicial complex given by its maximal faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Complex on the ground set `1..=m`. Dominated faces are dropped.
    pub fn new(m: u32, facets: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ParameterRange("m must be at least 1".into()));
        }
        Self::with_vertices(1..=m, facets)
    }

    /// Complex on an arbitrary ground set of labels.
    pub fn with_vertices(
        vertices: impl IntoIterator<Item = u32>,
        facets: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let vertices: Vec<u32> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if vertices.is_empty() || vertices[0] == 0 {
            return Err(Error::InvalidSubset);
        }
        let facets = maximal_elements(facets);
        let mut covered = BTreeSet::new();
        for f in &facets {
            for &v in f.vertices() {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::InvalidSimplex(format!(
                        "{f} uses a label outside the vertex set"
                    )));
                }
                covered.insert(v);
            }
        }
        let missing: Vec<u32> = vertices.iter().copied().filter(|v| !covered.contains(v)).collect();
        if !missing.is_empty() {
            return Err(Error::UncoveredVertices(missing));
        }
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Full simplex on `1..=m`.
    pub fn simplex(m: u32) -> Result<Self> {
        Self::new(m, [Simplex::new(1..=m)?])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Largest vertex label.
    pub fn max_label(&self) -> u32 {
        *self.vertices.last().expect("vertex set is non-empty")
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Dimension of the largest facet.
    pub fn dim(&self) -> usize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(0)
    }

    pub fn is_face(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(f))
    }

    /// Every non-empty face.
    pub fn faces(&self) -> BTreeSet<Simplex> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for k in 1..=f.len() {
                for c in f.vertices().iter().copied().combinations(k) {
                    out.insert(Simplex::from_sorted(c));
                }
            }
        }
        out
    }

    /// Faces of dimension `d`, lexicographically ordered.
    pub fn faces_of_dim(&self, d: usize) -> Vec<Simplex> {
        let mut out = BTreeSet::new();
        for f in self.facets.iter().filter(|f| f.len() > d) {
            for c in f.vertices().iter().copied().combinations(d + 1) {
                out.insert(Simplex::from_sorted(c));
            }
        }
        out.into_iter().collect()
    }

    /// `f_vector()[d]` is the number of `d`-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|d| self.faces_of_dim(d).len()).collect()
    }

    /// Edges of the 1-skeleton as ordered pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.faces_of_dim(1)
            .into_iter()
            .map(|e| (e.vertices()[0], e.vertices()[1]))
            .collect()
    }

    /// The full subcomplex over `subset`. Labels are kept.
    pub fn full_subcomplex(&self, subset: &[u32]) -> Result<Self> {
        let subset: BTreeSet<u32> = subset.iter().copied().collect();
        if subset.is_empty() || subset.iter().any(|v| self.vertices.binary_search(v).is_err()) {
            return Err(Error::InvalidSubset);
        }
        let facets = self.facets.iter().filter_map(|f| {
            let kept: Vec<u32> = f.vertices().iter().copied().filter(|v| subset.contains(v)).collect();
            (!kept.is_empty()).then(|| Simplex::from_sorted(kept))
        });
        Self::with_vertices(subset.iter().copied(), facets)
    }

    /// Faces of dimension at most `n`.
    pub fn skeleton(&self, n: usize) -> Self {
        let mut facets = Vec::new();
        for f in &self.facets {
            if f.len() <= n + 1 {
                facets.push(f.clone());
            } else {
                facets.extend(
                    f.vertices().iter().copied().combinations(n + 1).map(Simplex::from_sorted),
                );
            }
        }
        Self::with_vertices(self.vertices.iter().copied(), facets)
            .expect("a skeleton keeps every vertex")
    }

    /// Minimal non-faces, in lexicographic order.
    ///
    /// Each minimal non-face `M` is generated exactly once as `(M - max M) + max M`,
    /// where `M - max M` is a face, so only faces are enumerated.
    pub fn minimal_non_faces(&self) -> Vec<MinimalNonFace> {
        let mut out = BTreeSet::new();
        for face in self.faces() {
            let top = *face.vertices().last().unwrap();
            for &v in self.vertices.iter().filter(|&&v| v > top) {
                let cand = face.with_vertex(v);
                if self.is_minimal_non_face(&cand) {
                    out.insert(MinimalNonFace(cand));
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn is_minimal_non_face(&self, s: &Simplex) -> bool {
        s.len() >= 2
            && s.vertices().iter().all(|v| self.vertices.binary_search(v).is_ok())
            && !self.is_face(s)
            && s.facets().all(|f| self.is_face(&f))
    }

    /// The complex with every minimal non-face of `self` adjoined.
    pub fn closure_bar(&self) -> Self {
        let extra = self.minimal_non_faces().into_iter().map(MinimalNonFace::into_simplex);
        Self::with_vertices(self.vertices.iter().copied(), self.facets.iter().cloned().chain(extra))
            .expect("adding faces keeps every vertex covered")
    }

    /// Adjoins arbitrary simplices on the same ground set.
    pub(crate) fn with_added_faces(&self, extra: impl IntoIterator<Item = Simplex>) -> Self {
        Self::with_vertices(self.vertices.iter().copied(), self.facets.iter().cloned().chain(extra))
            .expect("adding faces keeps every vertex covered")
    }

    /// Canonical facet-list document.
    pub fn to_facet_list(&self) -> String {
        let mut out = format!("m={}\n", self.max_label());
        for f in &self.facets {
            out.push_str(&f.vertices().iter().join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_facet_list())
    }
}

/// A subset `M`, `|M| >= 2`, that is not a face while every `M - v` is.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinimalNonFace(Simplex);

impl MinimalNonFace {
    pub fn new(complex: &SimplicialComplex, members: Simplex) -> Result<Self> {
        if complex.is_minimal_non_face(&members) {
            Ok(MinimalNonFace(members))
        } else {
            Err(Error::NotMinimalNonFace(members))
        }
    }

    /// Skips the membership check.
    #[cfg(test)]
    pub(crate) fn unchecked(members: Simplex) -> Self {
        MinimalNonFace(members)
    }

    pub fn members(&self) -> &Simplex {
        &self.0
    }

    pub fn into_simplex(self) -> Simplex {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for MinimalNonFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses a facet-list document: an optional `m=<int>` header, then one facet
/// per line. `#` starts a comment and blank lines are ignored.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut header: Option<u32> = None;
    let mut facets: Vec<Simplex> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some(rest) = line.strip_prefix("m=") {
            if header.is_some() || !facets.is_empty() {
                return Err(err("header must come before every facet and appear once".into()));
            }
            let m: u32 = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad vertex count {rest:?}")))?;
            if m == 0 {
                return Err(err("m must be at least 1".into()));
            }
            header = Some(m);
            continue;
        }
        let mut labels = Vec::new();
        for tok in line.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| err(format!("bad label {tok:?}")))?;
            if v <= 0 || v > u32::MAX as i64 {
                return Err(err(format!("label {v} must be a positive integer")));
            }
            labels.push(v as u32);
        }
        let s = Simplex::new(labels.iter().copied()).map_err(|e| err(e.to_string()))?;
        if let Some(m) = header {
            if let Some(&v) = s.vertices().iter().find(|&&v| v > m) {
                return Err(err(format!("label {v} exceeds m={m}")));
            }
        }
        facets.push(s);
    }
    let m = match header {
        Some(m) => m,
        None => facets
            .iter()
            .flat_map(|f| f.vertices().last().copied())
            .max()
            .ok_or(Error::Parse { line: 0, message: "document has no facets".into() })?,
    };
    SimplicialComplex::new(m, facets)
}
