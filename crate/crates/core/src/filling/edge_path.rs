//! Edge-path group presentations and a bounded Tietze simplifier.
//!
//! Generators are the edges outside a BFS spanning tree of the 1-skeleton;
//! each triangle contributes one relator. The simplifier only ever answers
//! "trivial" when every generator has been eliminated, so an inconclusive run
//! is never mistaken for a trivial group.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::complex::SimplicialComplex;

/// Letters are `±(g + 1)` for generator index `g`.
pub type Word = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TietzeOutcome {
    Trivial { moves: usize },
    /// Generators remain but no relator is empty of them.
    Nontrivial,
    Inconclusive,
}

/// Presentation of the edge-path group based at the smallest vertex. Returns
/// `None` when the 1-skeleton is disconnected.
pub fn edge_path_presentation(k: &SimplicialComplex) -> Option<Presentation> {
    let mut adj: BTreeMap<u32, BTreeSet<u32>> =
        k.vertices().iter().map(|&v| (v, BTreeSet::new())).collect();
    let edges = k.edges();
    for &(a, b) in &edges {
        adj.get_mut(&a)?.insert(b);
        adj.get_mut(&b)?.insert(a);
    }
    let start = k.vertices()[0];
    let mut seen: BTreeSet<u32> = [start].into();
    let mut tree: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if seen.insert(w) {
                tree.insert((u.min(w), u.max(w)));
                queue.push_back(w);
            }
        }
    }
    if seen.len() != k.num_vertices() {
        return None;
    }
    let generator: HashMap<(u32, u32), i32> = edges
        .iter()
        .filter(|e| !tree.contains(e))
        .enumerate()
        .map(|(i, &e)| (e, i as i32 + 1))
        .collect();
    let letter = |a: u32, b: u32| generator.get(&(a, b)).copied();
    let relators = k
        .faces_of_dim(2)
        .iter()
        .map(|t| {
            let [a, b, c] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
            // path a -> b -> c -> a
            [letter(a, b), letter(b, c), letter(a, c).map(|x| -x)].into_iter().flatten().collect()
        })
        .collect();
    Some(Presentation { generators: generator.len(), relators })
}

fn free_reduce(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    // cyclic reduction
    let mut lo = 0;
    let mut hi = out.len();
    while hi - lo >= 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    *w = out[lo..hi].to_vec();
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|x| -x).collect()
}

/// Eliminates generators that occur exactly once in some relator. Each
/// elimination counts as one move; `max_letters` caps total relator length.
pub fn simplify(p: &Presentation, max_moves: usize, max_letters: usize) -> TietzeOutcome {
    let mut live: BTreeSet<i32> = (1..=p.generators as i32).collect();
    let mut rels: Vec<Word> = p.relators.clone();
    let mut moves = 0;
    loop {
        for r in rels.iter_mut() {
            free_reduce(r);
        }
        rels.retain(|r| !r.is_empty());
        if live.is_empty() {
            return TietzeOutcome::Trivial { moves };
        }
        if moves >= max_moves || rels.iter().map(Vec::len).sum::<usize>() > max_letters {
            return TietzeOutcome::Inconclusive;
        }
        // shortest relator with a generator occurring exactly once
        let mut best: Option<(usize, usize, usize)> = None; // (len, relator, position)
        for (ri, r) in rels.iter().enumerate() {
            if best.is_some_and(|(len, _, _)| len <= r.len()) {
                continue;
            }
            let mut counts: HashMap<i32, usize> = HashMap::new();
            for &x in r {
                *counts.entry(x.abs()).or_default() += 1;
            }
            if let Some(pos) = r.iter().position(|x| counts[&x.abs()] == 1) {
                best = Some((r.len(), ri, pos));
            }
        }
        let Some((_, ri, pos)) = best else {
            return if rels.is_empty() { TietzeOutcome::Nontrivial } else { TietzeOutcome::Inconclusive };
        };
        let r = rels.swap_remove(ri);
        let x = r[pos];
        // rotate so x leads: x * rest = 1, hence x = rest^-1
        let rest: Word = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let (gen, image) = if x > 0 { (x, inverse(&rest)) } else { (-x, rest) };
        let image_inv = inverse(&image);
        for w in rels.iter_mut() {
            if w.iter().any(|y| y.abs() == gen) {
                let mut out = Vec::with_capacity(w.len());
                for &y in w.iter() {
                    if y == gen {
                        out.extend_from_slice(&image);
                    } else if y == -gen {
                        out.extend_from_slice(&image_inv);
                    } else {
                        out.push(y);
                    }
                }
                *w = out;
            }
        }
        live.remove(&gen);
        moves += 1;
    }
}
