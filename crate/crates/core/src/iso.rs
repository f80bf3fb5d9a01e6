//! Canonical forms by flag traversal, isomorphism tests and witnesses.
//!
//! A flag is a face together with a starting corner and a direction. From a
//! flag the whole map is labeled by breadth-first search over faces: each face
//! is read in its assigned direction, new vertices get the next free label,
//! and the face across each edge `a -> b` is queued reading `b -> a`. The
//! least resulting face list over all flags is canonical.

use std::collections::{BTreeMap, VecDeque};

use crate::map::{canonical_face, edge, PolyhedralMap};
use crate::perm::Permutation;

/// Face list under the canonical labeling plus that labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub n_vertices: usize,
    /// Sorted canonical faces of the relabeled map.
    pub encoding: Vec<Vec<usize>>,
    /// Original label -> canonical label.
    pub labeling: Permutation,
}

impl CanonicalForm {
    pub fn map(&self) -> PolyhedralMap {
        PolyhedralMap::new(self.n_vertices, self.encoding.clone())
    }
}

/// Per-map tables reused across flags.
struct Traversal<'a> {
    map: &'a PolyhedralMap,
    across: BTreeMap<(usize, usize), Vec<usize>>,
}

impl<'a> Traversal<'a> {
    fn new(map: &'a PolyhedralMap) -> Self {
        Traversal { map, across: map.edge_faces() }
    }

    /// Labeling (original -> new) induced by starting at `face`, corner
    /// `start`, reading forward when `forward`. `None` if some vertex is
    /// unreachable.
    fn label_from(&self, face: usize, start: usize, forward: bool) -> Option<Vec<usize>> {
        let n = self.map.n_vertices;
        let nf = self.map.faces.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut queued = vec![false; nf];
        let mut queue = VecDeque::new();
        queue.push_back(oriented(&self.map.faces[face], start, forward));
        queued[face] = true;
        while let Some(seq) = queue.pop_front() {
            for &x in &seq {
                if label[x] == usize::MAX {
                    label[x] = next;
                    next += 1;
                }
            }
            let k = seq.len();
            for i in 0..k {
                let (a, b) = (seq[i], seq[(i + 1) % k]);
                for &g in self.across.get(&edge(a, b)).map(|v| v.as_slice()).unwrap_or(&[]) {
                    if queued[g] {
                        continue;
                    }
                    queued[g] = true;
                    let gf = &self.map.faces[g];
                    let pb = gf.iter().position(|&x| x == b).expect("edge endpoint");
                    let len = gf.len();
                    let fwd = gf[(pb + 1) % len] == a;
                    queue.push_back(oriented(gf, pb, fwd));
                }
            }
        }
        if next == n {
            Some(label)
        } else {
            None
        }
    }

    fn encode(&self, label: &[usize]) -> Vec<Vec<usize>> {
        let mut fs: Vec<Vec<usize>> =
            self.map.faces.iter().map(|f| canonical_face(&f.iter().map(|&x| label[x]).collect::<Vec<_>>())).collect();
        fs.sort();
        fs
    }

    fn flags(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.map.faces.iter().enumerate().flat_map(|(fi, f)| {
            (0..f.len()).flat_map(move |p| [(fi, p, true), (fi, p, false)])
        })
    }
}

/// The face read from position `start`, forward or backward.
fn oriented(face: &[usize], start: usize, forward: bool) -> Vec<usize> {
    let k = face.len();
    (0..k).map(|i| if forward { face[(start + i) % k] } else { face[(start + k - i) % k] }).collect()
}

/// Every labeling that attains the least encoding, with that encoding.
fn minimal_labelings(map: &PolyhedralMap) -> Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let t = Traversal::new(map);
    let mut best: Option<Vec<Vec<usize>>> = None;
    let mut hits: Vec<Vec<usize>> = Vec::new();
    for (f, p, fwd) in t.flags() {
        let label = t.label_from(f, p, fwd)?;
        let enc = t.encode(&label);
        match &best {
            Some(b) if enc > *b => {}
            Some(b) if enc == *b => hits.push(label),
            _ => {
                best = Some(enc);
                hits = vec![label];
            }
        }
    }
    best.map(|b| (b, hits))
}

/// Canonical form of a valid connected map. Returns `None` for a map whose
/// faces do not reach every vertex.
pub fn canonical_form(map: &PolyhedralMap) -> Option<CanonicalForm> {
    let (encoding, hits) = minimal_labelings(map)?;
    let labeling = Permutation::from_images(hits[0].clone()).ok()?;
    Some(CanonicalForm { n_vertices: map.n_vertices, encoding, labeling })
}

/// All automorphisms, one per flag reaching the canonical encoding, sorted.
pub fn automorphisms(map: &PolyhedralMap) -> Vec<Permutation> {
    let Some((_, hits)) = minimal_labelings(map) else {
        return vec![Permutation::identity(map.n_vertices)];
    };
    let base_inv = Permutation::from_images(hits[0].clone()).expect("bijection").inverse();
    let mut out: Vec<Permutation> = hits
        .into_iter()
        .map(|h| base_inv.compose(&Permutation::from_images(h).expect("bijection")))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// True iff `p` maps the faces of `m1` onto the faces of `m2`.
pub fn check_witness(m1: &PolyhedralMap, m2: &PolyhedralMap, p: &Permutation) -> bool {
    if m1.n_vertices != m2.n_vertices || p.degree() != m1.n_vertices || m1.faces.len() != m2.faces.len() {
        return false;
    }
    if m1.faces.iter().flatten().any(|&x| x >= p.degree()) {
        return false;
    }
    m1.relabel(p).face_set() == m2.face_set()
}

/// Cheap necessary conditions for isomorphism.
fn quick_reject(m1: &PolyhedralMap, m2: &PolyhedralMap) -> bool {
    if m1.n_vertices != m2.n_vertices || m1.faces.len() != m2.faces.len() {
        return true;
    }
    let sizes = |m: &PolyhedralMap| {
        let mut s: Vec<usize> = m.faces.iter().map(|f| f.len()).collect();
        s.sort();
        s
    };
    if sizes(m1) != sizes(m2) {
        return true;
    }
    let degs = |m: &PolyhedralMap| crate::invariants::edge_graph(m).degree_sequence();
    degs(m1) != degs(m2)
}

/// Some `p` with `p·m1 = m2`, or `None`.
pub fn are_isomorphic(m1: &PolyhedralMap, m2: &PolyhedralMap) -> Option<Permutation> {
    if quick_reject(m1, m2) {
        return None;
    }
    let c1 = canonical_form(m1)?;
    let c2 = canonical_form(m2)?;
    if c1.encoding != c2.encoding {
        return None;
    }
    Some(c2.labeling.inverse().compose(&c1.labeling))
}
