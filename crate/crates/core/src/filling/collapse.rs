//! Elementary collapses.
//!
//! A face is free when it lies in exactly one other face; that coface is then
//! maximal and one dimension higher. Removing the pair is an elementary
//! collapse. A sequence ending at a single vertex certifies contractibility.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Collapse {
    pub free: Simplex,
    pub coface: Simplex,
}

/// Face poset with live coface counts.
struct Poset {
    faces: Vec<Simplex>,
    cofaces: Vec<Vec<usize>>,
    facets: Vec<Vec<usize>>,
    alive: Vec<bool>,
    live_cofaces: Vec<usize>,
    remaining: usize,
}

impl Poset {
    fn new(k: &SimplicialComplex) -> Self {
        let faces: Vec<Simplex> = k.faces().into_iter().collect();
        let index: HashMap<&Simplex, usize> = faces.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut cofaces = vec![Vec::new(); faces.len()];
        let mut facets = vec![Vec::new(); faces.len()];
        for (i, s) in faces.iter().enumerate() {
            for f in s.facets() {
                let j = index[&f];
                facets[i].push(j);
                cofaces[j].push(i);
            }
        }
        let live_cofaces = cofaces.iter().map(Vec::len).collect();
        let n = faces.len();
        Poset { faces, cofaces, facets, alive: vec![true; n], live_cofaces, remaining: n }
    }

    /// The coface that makes `i` free, if any.
    fn free_partner(&self, i: usize) -> Option<usize> {
        if !self.alive[i] || self.live_cofaces[i] != 1 {
            return None;
        }
        let c = *self.cofaces[i].iter().find(|&&c| self.alive[c])?;
        (self.live_cofaces[c] == 0).then_some(c)
    }

    fn remove(&mut self, i: usize) {
        self.alive[i] = false;
        self.remaining -= 1;
        for &f in &self.facets[i] {
            self.live_cofaces[f] -= 1;
        }
    }

    fn collapse(&mut self, free: usize, coface: usize) -> Collapse {
        self.remove(coface);
        self.remove(free);
        Collapse { free: self.faces[free].clone(), coface: self.faces[coface].clone() }
    }

    fn free_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.faces.len()).filter_map(|i| self.free_partner(i).map(|c| (i, c))).collect()
    }
}

/// Always removes the lexicographically smallest free face.
pub fn greedy_collapse(k: &SimplicialComplex) -> Result<Vec<Collapse>, usize> {
    let mut p = Poset::new(k);
    let mut steps = Vec::new();
    while p.remaining > 1 {
        // faces are sorted, so the first free one is the smallest
        let Some((i, c)) = (0..p.faces.len()).find_map(|i| p.free_partner(i).map(|c| (i, c)))
        else {
            return Err(p.remaining);
        };
        steps.push(p.collapse(i, c));
    }
    Ok(steps)
}

/// Picks a uniformly random free face at each step.
pub fn random_collapse(k: &SimplicialComplex, rng: &mut ChaCha8Rng) -> Result<Vec<Collapse>, usize> {
    let mut p = Poset::new(k);
    let mut steps = Vec::new();
    while p.remaining > 1 {
        let pairs = p.free_pairs();
        let Some(&(i, c)) = pairs.choose(rng) else {
            return Err(p.remaining);
        };
        steps.push(p.collapse(i, c));
    }
    Ok(steps)
}

/// Greedy pass, then up to `restarts` randomized passes from `seed`.
pub fn find_collapse(k: &SimplicialComplex, restarts: usize, seed: u64) -> Option<Vec<Collapse>> {
    if let Ok(steps) = greedy_collapse(k) {
        return Some(steps);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..restarts).find_map(|_| random_collapse(k, &mut rng).ok())
}

/// Replays `steps` on `k`: each step must remove a free face with its unique
/// coface, and exactly one vertex must survive.
pub fn replay_collapses(k: &SimplicialComplex, steps: &[Collapse]) -> bool {
    let mut p = Poset::new(k);
    let index: HashMap<Simplex, usize> =
        p.faces.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    for step in steps {
        let (Some(&i), Some(&c)) = (index.get(&step.free), index.get(&step.coface)) else {
            return false;
        };
        if p.free_partner(i) != Some(c) {
            return false;
        }
        p.collapse(i, c);
    }
    p.remaining == 1 && (0..p.faces.len()).any(|i| p.alive[i] && p.faces[i].len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cross_polytope_boundary, simplex_skeleton};

    #[test]
    fn simplex_collapses_greedily() {
        let d5 = SimplicialComplex::simplex(5).unwrap();
        let steps = greedy_collapse(&d5).unwrap();
        assert_eq!(steps.len(), 15);
        assert!(replay_collapses(&d5, &steps));
    }

    #[test]
    fn circle_stalls() {
        let circle = simplex_skeleton(3, 1).unwrap();
        assert_eq!(greedy_collapse(&circle), Err(6));
        assert!(find_collapse(&circle, 32, 7).is_none());
    }

    #[test]
    fn punctured_octahedron_collapses() {
        let oct = cross_polytope_boundary(1).unwrap();
        let punctured = SimplicialComplex::new(
            6,
            oct.facets().iter().filter(|f| f.vertices() != [1, 3, 5]).cloned(),
        )
        .unwrap();
        let steps = find_collapse(&punctured, 32, 0).unwrap();
        assert!(replay_collapses(&punctured, &steps));
    }

    #[test]
    fn single_vertex_needs_no_steps() {
        let pt = SimplicialComplex::simplex(1).unwrap();
        assert_eq!(greedy_collapse(&pt), Ok(vec![]));
        assert!(replay_collapses(&pt, &[]));
    }

    #[test]
    fn replay_rejects_bad_steps() {
        let tri = SimplicialComplex::simplex(3).unwrap();
        let mut steps = greedy_collapse(&tri).unwrap();
        assert!(replay_collapses(&tri, &steps));
        steps.pop();
        assert!(!replay_collapses(&tri, &steps));
        let bogus = Collapse {
            free: Simplex::new([1]).unwrap(),
            coface: Simplex::new([1, 2]).unwrap(),
        };
        assert!(!replay_collapses(&tri, &[bogus]));
    }

    #[test]
    fn random_collapse_is_seeded() {
        let d4 = SimplicialComplex::simplex(4).unwrap();
        let a = random_collapse(&d4, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let b = random_collapse(&d4, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(a, b);
        assert!(replay_collapses(&d4, &a));
    }
}
