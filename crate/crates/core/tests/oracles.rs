//! Engine results against the brute-force oracles in `common`.

mod common;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use semcensus::catalog::catalog;
use semcensus::enumerate::enumerate_sems;
use semcensus::facetype::admissible_types;
use semcensus::invariants::{char_poly, edge_graph};
use semcensus::iso::{are_isomorphic, automorphisms};
use semcensus::map::{validate, PolyhedralMap};
use semcensus::perm::Permutation;
use semcensus::symmetry::{automorphism_group, face_orbits, vertex_orbits};

use common::*;

#[test]
fn small_census_matches_brute_force() {
    let mut cells = 0;
    for chi in [2, 1, 0, -1, -2] {
        for v in 1..=6 {
            for t in admissible_types(v, chi) {
                let got = enumerate_sems(&t, v, None).unwrap();
                let want = brute_census(t.entries(), v);
                assert_eq!(got.representatives.len(), want, "type {t} on {v} vertices, chi {chi}");
                for m in &got.representatives {
                    assert_eq!(euler(v, &m.faces), chi, "{t} on {v}");
                    let seqs = polyhedral_sequences(v, &m.faces).expect("representative is polyhedral");
                    assert!(seqs.iter().all(|s| same_cyclic(s, t.entries())));
                }
                cells += 1;
            }
        }
    }
    assert!(cells > 0);
}

#[test]
fn known_small_counts() {
    // tetrahedron, octahedron, triangular prism, 6-vertex projective plane
    for (t, v, n) in [("3,3,3", 4, 1), ("3,3,3,3", 6, 1), ("3,4,4", 6, 1), ("3,3,3,3,3", 6, 1)] {
        let t = t.parse().unwrap();
        assert_eq!(enumerate_sems(&t, v, None).unwrap().representatives.len(), n);
    }
}

/// Sphere triangulation on `n` vertices: a bipyramid over an (n-2)-cycle.
fn bipyramid(n: usize) -> Faces {
    let k = n - 2;
    let mut f = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        f.push(vec![i, j, k]);
        f.push(vec![j, i, k + 1]);
    }
    f
}

/// Random edge flips that keep the triangulation polyhedral.
fn scramble<R: Rng>(rng: &mut R, n: usize, mut faces: Faces, flips: usize) -> Faces {
    for _ in 0..flips {
        let i = rng.gen_range(0..faces.len());
        let e = rng.gen_range(0..3);
        let (a, b, c) = (faces[i][e], faces[i][(e + 1) % 3], faces[i][(e + 2) % 3]);
        let Some(j) = (0..faces.len()).find(|&j| j != i && faces[j].contains(&a) && faces[j].contains(&b)) else { continue };
        let d = *faces[j].iter().find(|&&x| x != a && x != b).unwrap();
        let mut next = faces.clone();
        next[i] = vec![a, d, c];
        next[j] = vec![d, b, c];
        if polyhedral_sequences(n, &next).is_some() {
            faces = next;
        }
    }
    faces
}

#[test]
fn isomorphism_matches_factorial_search() {
    let mut rng = StdRng::seed_from_u64(7);
    let (mut yes, mut no) = (0, 0);
    for round in 0..60 {
        let n = 5 + round % 4;
        let a = scramble(&mut rng, n, bipyramid(n), 20);
        let b = if round % 2 == 0 {
            relabel(&a, &random_perm(&mut rng, n))
        } else {
            scramble(&mut rng, n, bipyramid(n), 20)
        };
        let (ma, mb) = (PolyhedralMap::new(n, a.clone()), PolyhedralMap::new(n, b.clone()));
        assert!(validate(&ma).is_ok() && validate(&mb).is_ok());
        let got = are_isomorphic(&ma, &mb);
        assert_eq!(got.is_some(), brute_isomorphic(n, &a, &b), "round {round}");
        if let Some(w) = got {
            assert_eq!(face_set(&relabel(&a, w.images())), face_set(&b));
            yes += 1;
        } else {
            no += 1;
        }
        assert_eq!(automorphisms(&ma).len(), brute_aut_count(n, &a));
    }
    assert!(yes >= 30 && no > 0, "{yes} isomorphic, {no} not");
}

#[test]
fn characteristic_polynomials_agree_with_bareiss() {
    let mut maps: Vec<PolyhedralMap> = catalog().into_iter().map(|e| e.map).collect();
    maps.push(PolyhedralMap::new(8, bipyramid(8)));
    for m in &maps {
        let g = edge_graph(m);
        let p = char_poly(&g);
        let n = m.n_vertices;
        let adj = g.adjacency();
        for x in -3i128..=4 {
            let mat: Vec<Vec<i128>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { x } else { 0 } - adj[i][j] as i128).collect())
                .collect();
            let want = bareiss_det(mat);
            assert_eq!(p.eval(&x.into()), want.into(), "x = {x}");
        }
        // x^(n-2) carries -|E|, x^(n-3) carries -2 * #triangles of the graph
        let edges: BTreeSet<(usize, usize)> = m.edges().into_iter().collect();
        let tri = (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| edges.contains(&(a, b)) && edges.contains(&(a, c)) && edges.contains(&(b, c)))
            .count() as i64;
        assert_eq!(p.coeff(n - 2), (-(edges.len() as i64)).into());
        assert_eq!(p.coeff(n - 3), (-2 * tri).into());
    }
}

#[test]
fn group_orders_match_closure() {
    for e in catalog() {
        let g = automorphism_group(&e.map);
        let gens: Vec<Vec<usize>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
        let all = closure(e.map.n_vertices, &gens);
        assert_eq!(all.len() as u64, g.order_u64(), "{}", e.name);
        for h in &all {
            let p = Permutation::from_images(h.clone()).unwrap();
            assert!(g.contains(&p));
            assert_eq!(face_set(&relabel(&e.map.faces, h)), face_set(&e.map.faces), "{}", e.name);
        }
        // every claimed generator set closes to the same group
        if !e.claims.generators.is_empty() {
            let claimed: Vec<Vec<usize>> = e.claims.generators.iter().map(|(_, c)| cycles(c, 12)).collect();
            assert_eq!(closure(12, &claimed), all, "{}", e.name);
        }
    }
}

#[test]
fn burnside_orbit_counts() {
    for e in catalog() {
        let g = automorphism_group(&e.map);
        let group: BTreeSet<Vec<usize>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
        let verts: Vec<usize> = (0..e.map.n_vertices).collect();
        let nv = burnside(&group, &verts, |p, &x| p[x]);
        assert_eq!(nv, vertex_orbits(&g).len(), "{}", e.name);
        let faces: Vec<Vec<usize>> = face_set(&e.map.faces).into_iter().collect();
        let nf = burnside(&group, &faces, |p, f| rot_min(&f.iter().map(|&x| p[x]).collect::<Vec<_>>()));
        assert_eq!(nf, face_orbits(&g, &e.map).unwrap().len(), "{}", e.name);
        assert_eq!(nf, e.expected.isohedral, "{}", e.name);
    }
}

#[test]
fn element_orders_by_brute_force() {
    for e in catalog() {
        let g = automorphism_group(&e.map);
        let mut orders = std::collections::BTreeMap::new();
        for p in g.elements() {
            *orders.entry(element_order(p.images()) as u64).or_insert(0usize) += 1;
        }
        assert_eq!(orders, semcensus::group::element_orders(&g), "{}", e.name);
    }
}
