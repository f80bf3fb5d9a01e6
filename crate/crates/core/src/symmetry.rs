//! Automorphism groups of maps, orbits, vertex-transitivity, isohedrality and
//! orientability.

use std::collections::{BTreeMap, VecDeque};

use crate::error::GroupError;
use crate::group::PermGroup;
use crate::iso::{automorphisms, check_witness};
use crate::map::{canonical_face, edge, PolyhedralMap};

/// The full automorphism group. Its generators are a greedy subset of the
/// sorted element list, so they are deterministic.
pub fn automorphism_group(map: &PolyhedralMap) -> PermGroup {
    PermGroup::from_elements(map.n_vertices, &automorphisms(map))
}

/// One orbit, given by its least member and its size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orbit<T> {
    pub representative: T,
    pub size: usize,
    pub members: Vec<T>,
}

pub fn vertex_orbits(g: &PermGroup) -> Vec<Orbit<usize>> {
    g.vertex_orbits()
        .into_iter()
        .map(|m| Orbit { representative: m[0], size: m.len(), members: m })
        .collect()
}

/// Orbits of `g` on the faces of `map`, with faces in canonical form and the
/// orbits sorted by representative. Fails if a generator is not an
/// automorphism of the map.
pub fn face_orbits(g: &PermGroup, map: &PolyhedralMap) -> Result<Vec<Orbit<Vec<usize>>>, GroupError> {
    let faces = map.face_set();
    let index: BTreeMap<&Vec<usize>, usize> = faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for gen in g.generators() {
        if gen.degree() != map.n_vertices || !check_witness(map, map, gen) {
            return Err(GroupError::NotAutomorphism);
        }
        for (i, f) in faces.iter().enumerate() {
            let img = canonical_face(&f.iter().map(|&x| gen.apply(x)).collect::<Vec<_>>());
            let j = *index.get(&img).ok_or(GroupError::NotAutomorphism)?;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for i in 0..faces.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(faces[i].clone());
    }
    let mut out: Vec<Orbit<Vec<usize>>> = groups
        .into_values()
        .map(|m| Orbit { representative: m[0].clone(), size: m.len(), members: m })
        .collect();
    out.sort();
    Ok(out)
}

pub fn vertex_transitive(map: &PolyhedralMap) -> bool {
    automorphism_group(map).vertex_orbits().len() == 1
}

/// Number of face orbits of the full automorphism group.
pub fn isohedral_number(map: &PolyhedralMap) -> usize {
    let g = automorphism_group(map);
    face_orbits(&g, map).expect("automorphisms act on faces").len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

/// Faces directed coherently (every edge traversed once each way), if the
/// map is orientable.
pub fn orientation(map: &PolyhedralMap) -> Option<Vec<Vec<usize>>> {
    let nf = map.faces.len();
    if nf == 0 {
        return None;
    }
    let across = map.edge_faces();
    let mut dir: Vec<Option<Vec<usize>>> = vec![None; nf];
    for start in 0..nf {
        if dir[start].is_some() {
            continue;
        }
        dir[start] = Some(map.faces[start].clone());
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let seq = dir[f].clone().expect("directed");
            let k = seq.len();
            for i in 0..k {
                let (a, b) = (seq[i], seq[(i + 1) % k]);
                for &g in &across[&edge(a, b)] {
                    if g == f {
                        continue;
                    }
                    // the neighbor must traverse b -> a
                    let gf = &map.faces[g];
                    let pb = gf.iter().position(|&x| x == b).expect("edge endpoint");
                    let forward = gf[(pb + 1) % gf.len()] == a;
                    let want: Vec<usize> = if forward { gf.clone() } else { gf.iter().rev().copied().collect() };
                    match &dir[g] {
                        None => {
                            dir[g] = Some(want);
                            queue.push_back(g);
                        }
                        Some(have) => {
                            if !same_direction(have, &want) {
                                return None;
                            }
                        }
                    }
                }
            }
        }
    }
    Some(dir.into_iter().map(|d| d.expect("all faces reached")).collect())
}

/// Same cyclic sequence up to rotation only.
fn same_direction(a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    if k != b.len() {
        return false;
    }
    let Some(p) = b.iter().position(|&x| x == a[0]) else { return false };
    (0..k).all(|i| a[i] == b[(p + i) % k])
}

pub fn orientability(map: &PolyhedralMap) -> Orientability {
    if orientation(map).is_some() {
        Orientability::Orientable
    } else {
        Orientability::NonOrientable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{identify_group, GroupId};

    fn tetra() -> PolyhedralMap {
        PolyhedralMap::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
    }

    /// The 6-vertex triangulation of the projective plane.
    fn rp2() -> PolyhedralMap {
        PolyhedralMap::new(
            6,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5],
                vec![0, 5, 1],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![3, 4, 1],
                vec![4, 5, 2],
                vec![5, 1, 3],
            ],
        )
    }

    #[test]
    fn tetrahedron() {
        let g = automorphism_group(&tetra());
        assert_eq!(g.order_u64(), 24);
        assert_eq!(identify_group(&g).unwrap(), GroupId::S4);
        assert!(vertex_transitive(&tetra()));
        assert_eq!(isohedral_number(&tetra()), 1);
        assert_eq!(orientability(&tetra()), Orientability::Orientable);
    }

    #[test]
    fn projective_plane() {
        let m = rp2();
        assert!(crate::map::validate(&m).is_ok());
        assert_eq!(crate::map::euler_characteristic(&m), 1);
        assert_eq!(orientability(&m), Orientability::NonOrientable);
        assert_eq!(automorphism_group(&m).order_u64(), 60);
    }

    #[test]
    fn coherent_orientation() {
        let o = orientation(&tetra()).unwrap();
        let mut directed = std::collections::BTreeSet::new();
        for f in &o {
            for i in 0..f.len() {
                assert!(directed.insert((f[i], f[(i + 1) % f.len()])));
            }
        }
        assert_eq!(directed.len(), 12);
    }

    #[test]
    fn trivial_group_orbits() {
        let g = PermGroup::trivial(4);
        assert_eq!(vertex_orbits(&g).len(), 4);
        assert_eq!(face_orbits(&g, &tetra()).unwrap().len(), 4);
    }

    #[test]
    fn rejects_non_automorphism() {
        let m = PolyhedralMap::new(
            5,
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![4, 1, 2], vec![4, 2, 3], vec![4, 3, 1]],
        );
        let bad = crate::perm::Permutation::from_cycles("(0,1)", 5).unwrap();
        let g = PermGroup::new(5, vec![bad]).unwrap();
        assert_eq!(face_orbits(&g, &m), Err(GroupError::NotAutomorphism));
    }
}
