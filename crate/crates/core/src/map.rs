//! Polyhedral maps: faces as cyclic vertex lists, validation, vertex links.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::MapError;
use crate::facetype::{min_dihedral, FaceSequence};
use crate::perm::Permutation;

/// A map on vertices `0..n_vertices`. Faces keep whatever rotation and
/// direction they were given; comparisons go through [`canonical_face`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralMap {
    pub n_vertices: usize,
    pub faces: Vec<Vec<usize>>,
}

/// Least rotation of a face or its reverse.
pub fn canonical_face(face: &[usize]) -> Vec<usize> {
    min_dihedral(face)
}

/// Undirected edge with the smaller endpoint first.
pub fn edge(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    NoFaces,
    FaceTooShort { face: usize },
    LabelOutOfRange { face: usize, label: usize },
    RepeatedVertex { face: usize, vertex: usize },
    EdgeInOneFace { edge: (usize, usize) },
    EdgeOnTooManyFaces { edge: (usize, usize), count: usize },
    BadIntersection { faces: (usize, usize), common: Vec<usize> },
    IsolatedVertex { vertex: usize },
    LinkNotCycle { vertex: usize },
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoFaces => write!(f, "no faces"),
            Violation::FaceTooShort { face } => write!(f, "face {face} has fewer than 3 vertices"),
            Violation::LabelOutOfRange { face, label } => {
                write!(f, "face {face} uses label {label} out of range")
            }
            Violation::RepeatedVertex { face, vertex } => {
                write!(f, "face {face} repeats vertex {vertex}")
            }
            Violation::EdgeInOneFace { edge } => {
                write!(f, "edge in one face: [{},{}]", edge.0, edge.1)
            }
            Violation::EdgeOnTooManyFaces { edge, count } => {
                write!(f, "edge on {count} faces: [{},{}]", edge.0, edge.1)
            }
            Violation::BadIntersection { faces, common } => write!(
                f,
                "faces {} and {} meet in {:?}, which is not empty, a vertex or an edge",
                faces.0, faces.1, common
            ),
            Violation::IsolatedVertex { vertex } => write!(f, "vertex {vertex} lies on no face"),
            Violation::LinkNotCycle { vertex } => {
                write!(f, "link of vertex {vertex} is not a single cycle")
            }
            Violation::Disconnected { components } => {
                write!(f, "map is disconnected ({components} components)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// For each vertex, the faces through it with the vertex's position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceIncidence {
    pub by_vertex: Vec<Vec<(usize, usize)>>,
}

impl FaceIncidence {
    pub fn build(map: &PolyhedralMap) -> Self {
        let mut by_vertex = vec![Vec::new(); map.n_vertices];
        for (fi, face) in map.faces.iter().enumerate() {
            for (pos, &v) in face.iter().enumerate() {
                if v < map.n_vertices {
                    by_vertex[v].push((fi, pos));
                }
            }
        }
        FaceIncidence { by_vertex }
    }
}

/// One step of a link: a neighbor of the center and the size of the face
/// between it and the next neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkEntry {
    pub neighbor: usize,
    pub gon: usize,
}

/// Link of a vertex read in one direction around it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    pub center: usize,
    pub cycle: Vec<LinkEntry>,
    /// Every vertex of the link in cyclic order, including the far vertices
    /// of faces with more than three sides.
    pub path: Vec<usize>,
}

impl VertexLink {
    pub fn gons(&self) -> Vec<usize> {
        self.cycle.iter().map(|e| e.gon).collect()
    }
}

impl PolyhedralMap {
    pub fn new(n_vertices: usize, faces: Vec<Vec<usize>>) -> Self {
        PolyhedralMap { n_vertices, faces }
    }

    pub fn incidence(&self) -> FaceIncidence {
        FaceIncidence::build(self)
    }

    /// Each undirected edge with the faces containing it.
    pub fn edge_faces(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut m: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            let k = face.len();
            for i in 0..k {
                m.entry(edge(face[i], face[(i + 1) % k])).or_default().push(fi);
            }
        }
        m
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edge_faces().into_keys().collect()
    }

    pub fn n_edges(&self) -> usize {
        self.edge_faces().len()
    }

    /// Sorted canonical faces; two maps on the same labels are equal as
    /// complexes iff these agree.
    pub fn face_set(&self) -> Vec<Vec<usize>> {
        let mut fs: Vec<Vec<usize>> = self.faces.iter().map(|f| canonical_face(f)).collect();
        fs.sort();
        fs
    }

    /// The map with every label `x` replaced by `p(x)`.
    pub fn relabel(&self, p: &Permutation) -> PolyhedralMap {
        PolyhedralMap {
            n_vertices: self.n_vertices,
            faces: self.faces.iter().map(|f| f.iter().map(|&x| p.apply(x)).collect()).collect(),
        }
    }

    /// Same complex with canonical faces in sorted order.
    pub fn normalized(&self) -> PolyhedralMap {
        PolyhedralMap { n_vertices: self.n_vertices, faces: self.face_set() }
    }
}

/// Checks the polyhedral-map conditions; every violation found is reported.
pub fn validate(map: &PolyhedralMap) -> ValidationReport {
    let mut out = Vec::new();
    if map.n_vertices == 0 || map.faces.is_empty() {
        out.push(Violation::NoFaces);
        return ValidationReport { violations: out };
    }
    for (fi, face) in map.faces.iter().enumerate() {
        if face.len() < 3 {
            out.push(Violation::FaceTooShort { face: fi });
        }
        let mut seen = BTreeSet::new();
        for &v in face {
            if v >= map.n_vertices {
                out.push(Violation::LabelOutOfRange { face: fi, label: v });
            } else if !seen.insert(v) {
                out.push(Violation::RepeatedVertex { face: fi, vertex: v });
            }
        }
    }
    if !out.is_empty() {
        // the remaining checks assume simple faces
        return ValidationReport { violations: out };
    }

    for (e, fs) in map.edge_faces() {
        match fs.len() {
            2 => {}
            1 => out.push(Violation::EdgeInOneFace { edge: e }),
            c => out.push(Violation::EdgeOnTooManyFaces { edge: e, count: c }),
        }
    }

    let inc = map.incidence();
    let mut reported = BTreeSet::new();
    for list in &inc.by_vertex {
        for (a, &(f1, _)) in list.iter().enumerate() {
            for &(f2, _) in &list[a + 1..] {
                let key = (f1.min(f2), f1.max(f2));
                if !reported.insert(key) {
                    continue;
                }
                if let Some(common) = bad_intersection(&map.faces[key.0], &map.faces[key.1]) {
                    out.push(Violation::BadIntersection { faces: key, common });
                }
            }
        }
    }

    for v in 0..map.n_vertices {
        if inc.by_vertex[v].is_empty() {
            out.push(Violation::IsolatedVertex { vertex: v });
        } else if link_cycle(map, &inc, v).is_none() {
            out.push(Violation::LinkNotCycle { vertex: v });
        }
    }

    let comps = face_components(map, &inc);
    if comps > 1 {
        out.push(Violation::Disconnected { components: comps });
    }
    ValidationReport { violations: out }
}

/// `Some(common vertices)` when two faces meet in something other than
/// nothing, a vertex, or an edge of both.
fn bad_intersection(f: &[usize], g: &[usize]) -> Option<Vec<usize>> {
    let common: Vec<usize> = f.iter().copied().filter(|x| g.contains(x)).collect();
    match common.len() {
        0 | 1 => None,
        2 => {
            if adjacent_in(f, common[0], common[1]) && adjacent_in(g, common[0], common[1]) {
                None
            } else {
                Some(sorted(common))
            }
        }
        _ => Some(sorted(common)),
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort();
    v
}

pub(crate) fn adjacent_in(face: &[usize], a: usize, b: usize) -> bool {
    let k = face.len();
    (0..k).any(|i| {
        let (x, y) = (face[i], face[(i + 1) % k]);
        (x == a && y == b) || (x == b && y == a)
    })
}

fn face_components(map: &PolyhedralMap, inc: &FaceIncidence) -> usize {
    let nf = map.faces.len();
    let mut seen = vec![false; nf];
    let mut comps = 0;
    for start in 0..nf {
        if seen[start] {
            continue;
        }
        comps += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            for &v in &map.faces[f] {
                for &(g, _) in &inc.by_vertex[v] {
                    if !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
        }
    }
    comps
}

/// Walks the faces around `v`. Returns, in cyclic order, (face id, the
/// neighbor where the face is entered) when they form one closed cycle.
fn link_cycle(map: &PolyhedralMap, inc: &FaceIncidence, v: usize) -> Option<Vec<(usize, usize)>> {
    let around = &inc.by_vertex[v];
    if around.is_empty() {
        return None;
    }
    // each incident face contributes the link edge prev -- next
    let ends: Vec<(usize, usize, usize)> = around
        .iter()
        .map(|&(fi, pos)| {
            let f = &map.faces[fi];
            let k = f.len();
            (fi, f[(pos + k - 1) % k], f[(pos + 1) % k])
        })
        .collect();
    let mut by_nbr: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (idx, &(_, p, q)) in ends.iter().enumerate() {
        by_nbr.entry(p).or_default().push(idx);
        by_nbr.entry(q).or_default().push(idx);
    }
    if by_nbr.values().any(|l| l.len() != 2) {
        return None;
    }
    let start_nbr = *by_nbr.keys().next()?;
    let options = &by_nbr[&start_nbr];
    // leave the smallest neighbor toward the smaller of its two link
    // neighbors so the reading is deterministic
    let other = |idx: usize, from: usize| {
        let (_, p, q) = ends[idx];
        if p == from {
            q
        } else {
            p
        }
    };
    let first = if other(options[0], start_nbr) <= other(options[1], start_nbr) {
        options[0]
    } else {
        options[1]
    };
    let mut order = Vec::with_capacity(ends.len());
    let mut used = vec![false; ends.len()];
    let (mut idx, mut at) = (first, start_nbr);
    loop {
        if used[idx] {
            break;
        }
        used[idx] = true;
        order.push((ends[idx].0, at));
        let next = other(idx, at);
        let l = &by_nbr[&next];
        idx = if l[0] == idx { l[1] } else { l[0] };
        at = next;
    }
    if order.len() != ends.len() || at != start_nbr {
        return None;
    }
    Some(order)
}

/// Link of `v`, starting at its smallest neighbor.
pub fn vertex_link(map: &PolyhedralMap, v: usize) -> Result<VertexLink, MapError> {
    if v >= map.n_vertices {
        return Err(MapError::VertexOutOfRange(v));
    }
    let inc = map.incidence();
    let order = link_cycle(map, &inc, v).ok_or(MapError::BrokenLink(v))?;
    let mut cycle = Vec::with_capacity(order.len());
    let mut path = Vec::new();
    for &(fi, entered) in &order {
        let f = &map.faces[fi];
        let k = f.len();
        let pos = f.iter().position(|&x| x == v).expect("incident face");
        cycle.push(LinkEntry { neighbor: entered, gon: k });
        // walk the face from `entered` away from v, stopping before the
        // neighbor on the other side
        let step = if f[(pos + 1) % k] == entered { 1 } else { k - 1 };
        let mut i = (pos + step) % k;
        for _ in 0..k - 2 {
            path.push(f[i]);
            i = (i + step) % k;
        }
    }
    Ok(VertexLink { center: v, cycle, path })
}

/// Canonical face sequence of the faces around `v`.
pub fn face_sequence_at(map: &PolyhedralMap, v: usize) -> Result<FaceSequence, MapError> {
    let link = vertex_link(map, v)?;
    FaceSequence::canonicalize(&link.gons()).map_err(|e| MapError::Invalid(e.to_string()))
}

/// True iff every vertex has face sequence `t`.
pub fn is_sem(map: &PolyhedralMap, t: &FaceSequence) -> bool {
    (0..map.n_vertices).all(|v| face_sequence_at(map, v).is_ok_and(|s| &s == t))
}

/// `V - E + F`.
pub fn euler_characteristic(map: &PolyhedralMap) -> i64 {
    map.n_vertices as i64 - map.n_edges() as i64 + map.faces.len() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn tetrahedron() -> PolyhedralMap {
        PolyhedralMap::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
    }

    #[test]
    fn tetrahedron_is_valid() {
        let t = tetrahedron();
        assert!(validate(&t).is_ok());
        assert_eq!(euler_characteristic(&t), 2);
        assert!(is_sem(&t, &"3,3,3".parse().unwrap()));
        assert!(!is_sem(&t, &"3,4,4,4,4".parse().unwrap()));
    }

    #[test]
    fn tetrahedron_link() {
        let l = vertex_link(&tetrahedron(), 0).unwrap();
        let got: Vec<(usize, usize)> = l.cycle.iter().map(|e| (e.neighbor, e.gon)).collect();
        assert_eq!(got, vec![(1, 3), (2, 3), (3, 3)]);
        assert_eq!(l.path, vec![1, 2, 3]);
    }

    #[test]
    fn missing_face_is_boundary() {
        let mut t = tetrahedron();
        t.faces.pop();
        let r = validate(&t);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::EdgeInOneFace { .. })));
        assert!(r.to_string().contains("edge in one face"));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(validate(&PolyhedralMap::new(0, vec![])).violations, vec![Violation::NoFaces]);
        assert_eq!(validate(&PolyhedralMap::new(3, vec![])).violations, vec![Violation::NoFaces]);
        let r = validate(&PolyhedralMap::new(3, vec![vec![0, 1]]));
        assert_eq!(r.violations, vec![Violation::FaceTooShort { face: 0 }]);
        let r = validate(&PolyhedralMap::new(3, vec![vec![0, 1, 5]]));
        assert_eq!(r.violations, vec![Violation::LabelOutOfRange { face: 0, label: 5 }]);
        let r = validate(&PolyhedralMap::new(3, vec![vec![0, 1, 1]]));
        assert_eq!(r.violations, vec![Violation::RepeatedVertex { face: 0, vertex: 1 }]);
    }

    #[test]
    fn disjoint_tetrahedra_are_disconnected() {
        let mut faces = tetrahedron().faces;
        faces.extend(tetrahedron().faces.iter().map(|f| f.iter().map(|x| x + 4).collect::<Vec<_>>()));
        let r = validate(&PolyhedralMap::new(8, faces));
        assert_eq!(r.violations, vec![Violation::Disconnected { components: 2 }]);
    }

    #[test]
    fn isolated_vertex() {
        let mut t = tetrahedron();
        t.n_vertices = 5;
        let r = validate(&t);
        assert_eq!(r.violations, vec![Violation::IsolatedVertex { vertex: 4 }]);
    }

    #[test]
    fn doubled_face_breaks_intersection() {
        let mut t = tetrahedron();
        t.faces.push(vec![2, 1, 0]);
        let r = validate(&t);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::BadIntersection { .. })));
        assert!(r.to_string().contains("edge on 3 faces"));
    }

    #[test]
    fn two_vertex_pinch_is_not_a_link_cycle() {
        // two octahedra glued at a vertex: edges fine, link of the shared
        // vertex is two cycles
        let oct = |o: usize, c: usize| -> Vec<Vec<usize>> {
            let m = |x: usize| if x == 0 { c } else { x + o };
            let base = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1], [5, 1, 2], [5, 2, 3], [5, 3, 4], [5, 4, 1]];
            base.iter().map(|f| f.iter().map(|&x| m(x)).collect()).collect()
        };
        let mut faces = oct(0, 0);
        faces.extend(oct(5, 0));
        let r = validate(&PolyhedralMap::new(11, faces));
        assert!(r.violations.contains(&Violation::LinkNotCycle { vertex: 0 }));
        assert!(vertex_link(&PolyhedralMap::new(11, oct(0, 0)), 0).is_ok());
    }

    #[test]
    fn canonical_faces() {
        assert_eq!(canonical_face(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_face(&[3, 2, 1]), vec![1, 2, 3]);
        assert_eq!(canonical_face(&[0, 4, 3]), vec![0, 3, 4]);
        assert_eq!(canonical_face(&[6, 1, 10, 5]), vec![1, 6, 5, 10]);
    }
}
