//! Attachment forests and contraction orderings of minimal non-faces.
//!
//! The forest is grown by breadth-first search in the 1-skeleton of the
//! closure (the complex with all minimal non-faces adjoined), starting from
//! the whole non-face at depth zero. Leaves are contracted first.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::complex::{MinimalNonFace, SimplicialComplex};
use crate::error::{Error, Result};

/// A rooted tree meeting the non-face in its root only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttachmentTree {
    pub root: u32,
    /// `(parent, child)` pairs in discovery order.
    pub edges: Vec<(u32, u32)>,
    /// BFS depth of each non-root vertex.
    pub depth: BTreeMap<u32, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttachmentForest {
    pub trees: Vec<AttachmentTree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContractionOrdering {
    non_face: MinimalNonFace,
    order: Vec<u32>,
}

impl ContractionOrdering {
    /// Validates `order` against `k` before wrapping it.
    pub fn new(k: &SimplicialComplex, non_face: MinimalNonFace, order: Vec<u32>) -> Result<Self> {
        if validate_ordering(k, &non_face, &order) {
            Ok(ContractionOrdering { non_face, order })
        } else {
            Err(Error::InvalidOrdering { non_face: non_face.into_simplex(), order })
        }
    }

    pub(crate) fn unchecked(non_face: MinimalNonFace, order: Vec<u32>) -> Self {
        ContractionOrdering { non_face, order }
    }

    pub fn non_face(&self) -> &MinimalNonFace {
        &self.non_face
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }
}

impl fmt::Display for ContractionOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.order.iter().join(","))
    }
}

/// Adjacency of the closure's 1-skeleton: edges of `k` plus the minimal
/// non-faces of size two.
fn closure_adjacency(k: &SimplicialComplex) -> BTreeMap<u32, BTreeSet<u32>> {
    let mut adj: BTreeMap<u32, BTreeSet<u32>> =
        k.vertices().iter().map(|&v| (v, BTreeSet::new())).collect();
    let extra = k
        .minimal_non_faces()
        .into_iter()
        .filter(|m| m.len() == 2)
        .map(|m| (m.members().vertices()[0], m.members().vertices()[1]));
    for (a, b) in k.edges().into_iter().chain(extra) {
        adj.get_mut(&a).unwrap().insert(b);
        adj.get_mut(&b).unwrap().insert(a);
    }
    adj
}

pub fn attachment_forest(k: &SimplicialComplex, m: &MinimalNonFace) -> Result<AttachmentForest> {
    grow_forest(&closure_adjacency(k), m.members().vertices())
}

fn grow_forest(adj: &BTreeMap<u32, BTreeSet<u32>>, roots: &[u32]) -> Result<AttachmentForest> {
    let mut root_of: HashMap<u32, u32> = roots.iter().map(|&r| (r, r)).collect();
    let mut trees: BTreeMap<u32, AttachmentTree> = BTreeMap::new();

    let mut level: Vec<u32> = roots.to_vec();
    let mut depth = 0;
    while !level.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &u in &level {
            for &w in &adj[&u] {
                if root_of.contains_key(&w) {
                    continue;
                }
                let root = root_of[&u];
                root_of.insert(w, root);
                let tree = trees.entry(root).or_insert_with(|| AttachmentTree {
                    root,
                    edges: Vec::new(),
                    depth: BTreeMap::new(),
                });
                tree.edges.push((u, w));
                tree.depth.insert(w, depth);
                next.push(w);
            }
        }
        next.sort_unstable();
        level = next;
    }
    if root_of.len() != adj.len() {
        return Err(Error::DisconnectedClosure);
    }
    Ok(AttachmentForest { trees: trees.into_values().collect() })
}

fn forest_order(forest: &AttachmentForest) -> Vec<u32> {
    forest
        .trees
        .iter()
        .flat_map(|t| {
            t.depth
                .iter()
                .sorted_by(|(va, da), (vb, db)| db.cmp(da).then(va.cmp(vb)))
                .map(|(&v, _)| v)
        })
        .collect()
}

/// Canonical ordering: inside each tree, deeper vertices first with ties in
/// ascending label order; trees joined by ascending root.
pub fn contraction_ordering(
    k: &SimplicialComplex,
    m: &MinimalNonFace,
) -> Result<ContractionOrdering> {
    let order = forest_order(&attachment_forest(k, m)?);
    Ok(ContractionOrdering::unchecked(m.clone(), order))
}

/// True iff `order` lists the vertices outside `m` exactly once and each entry
/// is adjacent, in the closure's 1-skeleton, to `m` or to a later entry.
pub fn validate_ordering(k: &SimplicialComplex, m: &MinimalNonFace, order: &[u32]) -> bool {
    let outside: BTreeSet<u32> =
        k.vertices().iter().copied().filter(|&v| !m.members().contains(v)).collect();
    let listed: BTreeSet<u32> = order.iter().copied().collect();
    if listed.len() != order.len() || listed != outside {
        return false;
    }
    let adj = closure_adjacency(k);
    order.iter().enumerate().all(|(j, v)| {
        adj[v]
            .iter()
            .any(|w| m.members().contains(*w) || order[j + 1..].contains(w))
    })
}
