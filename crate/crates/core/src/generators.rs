//! Built-in complexes: simplex skeleta, cross-polytope boundaries and the
//! six-vertex real projective plane.

use itertools::Itertools;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::reduced_homology;

/// The `k`-skeleton of the boundary of the simplex on `1..=m`.
pub fn simplex_skeleton(m: u32, k: u32) -> Result<SimplicialComplex> {
    if m < 2 || k + 2 > m {
        return Err(Error::ParameterRange(format!(
            "simplex skeleton needs m >= 2 and 0 <= k <= m - 2, got m={m}, k={k}"
        )));
    }
    let facets = (1..=m).combinations(k as usize + 1).map(Simplex::from_sorted);
    SimplicialComplex::new(m, facets)
}

/// Boundary of the simplex on `1..=m`, a sphere of dimension `m - 2`.
pub fn simplex_boundary(m: u32) -> Result<SimplicialComplex> {
    simplex_skeleton(m, m.saturating_sub(2))
}

/// The facet `{2 - a_1, 4 - a_2, ..., 2n + 4 - a_{n+2}}` of the cross-polytope
/// boundary, for `a_i` in `{0, 1}`.
pub fn cross_polytope_facet(alphas: &[u8]) -> Simplex {
    let v = alphas
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            debug_assert!(a <= 1);
            2 * (i as u32 + 1) - a as u32
        })
        .collect();
    Simplex::from_sorted(v)
}

/// Every 0/1 vector of length `len`, in lexicographic order.
pub fn sign_vectors(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u64 << len).map(move |bits| (0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect())
}

/// Boundary of the `(n + 2)`-dimensional cross-polytope on `1..=2n + 4`. The
/// pair `{2i - 1, 2i}` is never a face.
pub fn cross_polytope_boundary(n: u32) -> Result<SimplicialComplex> {
    let d = n as usize + 2;
    SimplicialComplex::new(2 * n + 4, sign_vectors(d).map(|a| cross_polytope_facet(&a)))
}

/// Triangles of the six-vertex projective plane.
pub const RP2_SIX_TRIANGLES: [[u32; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [2, 3, 4],
    [2, 4, 6],
    [2, 5, 6],
    [3, 4, 5],
    [3, 5, 6],
];

/// The triangles `124, 126, 134, 135, 156, 235, 236, 245, 346, 456`. They are
/// minimal non-faces of the complete graph on six vertices and non-faces of
/// [`rp2_six`].
pub const RP2_FILLING_TRIANGLES: [[u32; 3]; 10] = [
    [1, 2, 4],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 5, 6],
    [2, 3, 5],
    [2, 3, 6],
    [2, 4, 5],
    [3, 4, 6],
    [4, 5, 6],
];

/// Six-vertex triangulation of the real projective plane.
///
/// The triangle list is checked on construction: the 1-skeleton must be the
/// complete graph, none of [`RP2_FILLING_TRIANGLES`] may be a face, and the
/// reduced homology must be `Z/2` in degree one and zero elsewhere.
pub fn rp2_six() -> SimplicialComplex {
    let k = SimplicialComplex::new(
        6,
        RP2_SIX_TRIANGLES.iter().map(|t| Simplex::from_sorted(t.to_vec())),
    )
    .expect("hard-coded triangulation is well formed");

    assert_eq!(k.edges().len(), 15, "1-skeleton must be the complete graph");
    assert!(
        RP2_FILLING_TRIANGLES
            .iter()
            .all(|t| !k.is_face(&Simplex::from_sorted(t.to_vec()))),
        "filling triangles must be non-faces"
    );
    let h = reduced_homology(&k);
    assert!(h.betti.iter().all(|&b| b == 0), "projective plane is rationally acyclic");
    assert_eq!(h.torsion_in(1), &[2u32.into()], "H_1 must be Z/2");
    assert!(h.torsion.iter().enumerate().all(|(d, t)| d == 1 || t.is_empty()));
    k
}

/// The complete graph on six vertices, the 1-skeleton of [`rp2_six`].
pub fn rp2_skeleton() -> SimplicialComplex {
    rp2_six().skeleton(1)
}
