mod common;

use proptest::prelude::*;

use semcensus::catalog::{catalog, entry_json, CatalogEntry};
use semcensus::invariants::invariant_fingerprint;
use semcensus::io::{map_to_json, parse_map, parse_valid_map, MapFile};
use semcensus::iso::{are_isomorphic, canonical_form, check_witness};
use semcensus::map::{validate, PolyhedralMap};
use semcensus::perm::Permutation;
use semcensus::symmetry::orientability;

use common::{euler, face_set, relabel};

fn entries() -> Vec<CatalogEntry> {
    catalog()
}

fn perm12() -> impl Strategy<Value = Vec<usize>> {
    Just((0..12).collect::<Vec<usize>>()).prop_shuffle()
}

#[derive(Debug, Clone)]
enum Mutation {
    DropFace(usize),
    DuplicateFace(usize),
    /// Replace the label at a position by one not on that face.
    Swap { face: usize, pos: usize, with: usize },
    OutOfRange { face: usize, pos: usize },
    Truncate(usize),
}

fn mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        any::<usize>().prop_map(Mutation::DropFace),
        any::<usize>().prop_map(Mutation::DuplicateFace),
        (any::<usize>(), any::<usize>(), any::<usize>()).prop_map(|(face, pos, with)| Mutation::Swap { face, pos, with }),
        (any::<usize>(), any::<usize>()).prop_map(|(face, pos)| Mutation::OutOfRange { face, pos }),
        any::<usize>().prop_map(Mutation::Truncate),
    ]
}

fn apply(m: &PolyhedralMap, mu: &Mutation) -> PolyhedralMap {
    let mut faces = m.faces.clone();
    let nf = faces.len();
    match *mu {
        Mutation::DropFace(i) => {
            faces.remove(i % nf);
        }
        Mutation::DuplicateFace(i) => faces.push(faces[i % nf].clone()),
        Mutation::Swap { face, pos, with } => {
            let f = &mut faces[face % nf];
            let others: Vec<usize> = (0..m.n_vertices).filter(|x| !f.contains(x)).collect();
            let k = f.len();
            f[pos % k] = others[with % others.len()];
        }
        Mutation::OutOfRange { face, pos } => {
            let f = &mut faces[face % nf];
            let k = f.len();
            f[pos % k] = m.n_vertices + pos % 5;
        }
        Mutation::Truncate(i) => faces[i % nf].truncate(2),
    }
    PolyhedralMap::new(m.n_vertices, faces)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_invariants(idx in 0usize..11, p in perm12()) {
        let e = &entries()[idx];
        let perm = Permutation::from_images(p.clone()).unwrap();
        let m2 = e.map.relabel(&perm);
        prop_assert_eq!(euler(12, &m2.faces), euler(12, &e.map.faces));
        prop_assert_eq!(invariant_fingerprint(&m2), invariant_fingerprint(&e.map));
        prop_assert_eq!(orientability(&m2), orientability(&e.map));
        let (c1, c2) = (canonical_form(&e.map).unwrap(), canonical_form(&m2).unwrap());
        prop_assert_eq!(&c1.encoding, &c2.encoding);
        let w = are_isomorphic(&e.map, &m2).expect("relabeling is an isomorphism");
        prop_assert!(check_witness(&e.map, &m2, &w));
        prop_assert_eq!(face_set(&relabel(&e.map.faces, w.images())), face_set(&m2.faces));
    }

    #[test]
    fn canonical_form_is_idempotent(idx in 0usize..11, p in perm12()) {
        let e = &entries()[idx];
        let m2 = e.map.relabel(&Permutation::from_images(p).unwrap());
        let c = canonical_form(&m2).unwrap();
        // the stored labeling really produces the encoding
        prop_assert_eq!(face_set(&relabel(&m2.faces, c.labeling.images())), c.encoding.iter().cloned().collect());
        let again = canonical_form(&c.map()).unwrap();
        prop_assert_eq!(again.encoding, c.encoding);
    }

    #[test]
    fn mutations_fail_validation(idx in 0usize..11, mu in mutation()) {
        let e = &entries()[idx];
        let bad = apply(&e.map, &mu);
        prop_assert!(!validate(&bad).is_ok(), "{:?} still validates", mu);
        prop_assert!(common::polyhedral_sequences(12, &bad.faces).is_none());
    }

    #[test]
    fn json_round_trip(idx in 0usize..11, p in perm12()) {
        let e = &entries()[idx];
        let m2 = e.map.relabel(&Permutation::from_images(p).unwrap());
        let mf = MapFile { name: Some(e.name.to_string()), face_type: Some(e.face_type.clone()), map: m2 };
        let text = map_to_json(&mf);
        let back = parse_valid_map(&text, "mem").unwrap();
        prop_assert_eq!(&back, &mf);
        prop_assert_eq!(map_to_json(&back), text);
    }
}

#[test]
fn catalog_files_reserialize_byte_identically() {
    for e in catalog() {
        let text = entry_json(e.name).unwrap();
        let mf = parse_map(text, e.file).unwrap();
        assert_eq!(map_to_json(&mf), text, "{}", e.file);
    }
}
