use whitehead_core::filling::{
    candidate_count, find_fillings_with, replay_collapses, sphere_skeleton_filling,
    ContractibilityCertificate, FillingShape, SearchOptions,
};
use whitehead_core::generators::{cross_polytope_boundary, rp2_skeleton, simplex_boundary, simplex_skeleton};
use whitehead_core::ordering::{contraction_ordering, validate_ordering};
use whitehead_core::{filling_shape, reduced_homology, SimplicialComplex};

fn generated() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for m in 2..=6u32 {
        for k in 0..=m - 2 {
            out.push((format!("simplex-skeleton:{m},{k}"), simplex_skeleton(m, k).unwrap()));
        }
    }
    for n in 0..=2 {
        out.push((format!("cross-polytope-skeleton:{n}"), cross_polytope_boundary(n).unwrap().skeleton(n as usize)));
    }
    out.push(("rp2-skeleton".into(), rp2_skeleton()));
    out
}

#[test]
fn every_filling_has_the_forced_shape() {
    for (name, k) in generated() {
        let FillingShape::Sizes(shape) = filling_shape(&k) else { panic!("{name} obstructed") };
        let total = reduced_homology(&k).total_betti();
        let exhaustive = candidate_count(&k).is_some_and(|c| c <= 10_000);
        let opts = SearchOptions { limit: if exhaustive { usize::MAX } else { 50 }, ..SearchOptions::default() };
        let found = find_fillings_with(&k, &opts);
        assert!(!found.is_empty(), "{name}");
        for f in &found {
            assert_eq!(f.len(), total, "{name}");
            assert_eq!(f.shape(), shape, "{name}");
            if let ContractibilityCertificate::CollapseSequence(steps) = f.certificate() {
                let union = whitehead_core::union_with(&k, f.non_faces()).unwrap();
                assert!(replay_collapses(&union, steps), "{name}");
            }
        }
    }
}

#[test]
fn octahedron_skeleton_has_eight_fillings() {
    let k = cross_polytope_boundary(1).unwrap().skeleton(1);
    let found = find_fillings_with(&k, &SearchOptions::default());
    assert_eq!(found.len(), 8);
    let facets = cross_polytope_boundary(1).unwrap().facets().to_vec();
    for omit in &facets {
        assert!(found.iter().any(|f| f.len() == 7 && !f.contains(omit)));
    }
}

#[test]
fn search_is_deterministic_across_seeds_and_runs() {
    let k = simplex_skeleton(5, 1).unwrap();
    let a = find_fillings_with(&k, &SearchOptions::default());
    let b = find_fillings_with(&k, &SearchOptions::default());
    assert_eq!(a, b);
    let c = find_fillings_with(&k, &SearchOptions { seed: 99, ..SearchOptions::default() });
    let lists = |v: &[whitehead_core::Filling]| v.iter().map(|f| f.non_faces().to_vec()).collect::<Vec<_>>();
    assert_eq!(lists(&a), lists(&c));
}

#[test]
fn every_sphere_facet_can_be_omitted() {
    let mut spheres: Vec<SimplicialComplex> = (3..=7).map(|m| simplex_boundary(m).unwrap()).collect();
    spheres.extend((0..=2).map(|n| cross_polytope_boundary(n).unwrap()));
    for s in spheres {
        for omit in s.facets() {
            let f = sphere_skeleton_filling(&s, omit).unwrap();
            assert_eq!(f.len(), s.facets().len() - 1);
            assert!(f.is_pure());
        }
    }
}

#[test]
fn canonical_orderings_exist_and_validate() {
    for (name, k) in generated() {
        for m in k.minimal_non_faces() {
            let o = contraction_ordering(&k, &m).unwrap_or_else(|e| panic!("{name} {m}: {e}"));
            assert!(validate_ordering(&k, &m, o.order()), "{name} {m}");
        }
    }
}
