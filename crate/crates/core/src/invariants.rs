//! Edge graphs, common-neighbor graphs G_i, characteristic polynomials and
//! the fingerprint bundle used to tell maps apart cheaply.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::map::{edge, euler_characteristic, PolyhedralMap};
use crate::perm::Permutation;
use crate::poly::{char_poly_matrix, IntPolynomial};
use crate::symmetry::{automorphism_group, orientability, Orientability};

/// Undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, edges: BTreeSet::new() }
    }

    /// Adds `{a,b}`; loops and out-of-range endpoints are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b && a < self.n && b < self.n {
            self.edges.insert(edge(a, b));
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Union of cycles written as vertex lists, e.g. `[[0,9,10],[1,3,6]]`
    /// for C(0,9,10) ∪ C(1,3,6).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut g = SimpleGraph::new(n);
        for c in cycles {
            for i in 0..c.len() {
                g.add_edge(c[i], c[(i + 1) % c.len()]);
            }
        }
        g
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for &(x, y) in &self.edges {
            a[x][y] = 1;
            a[y][x] = 1;
        }
        a
    }

    pub fn relabel(&self, p: &Permutation) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for &(a, b) in &self.edges {
            g.add_edge(p.apply(a), p.apply(b));
        }
        g
    }

    /// DOT source; `name` becomes the graph name.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  {a} -- {b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// The 1-skeleton of the map.
pub fn edge_graph(map: &PolyhedralMap) -> SimpleGraph {
    let mut g = SimpleGraph::new(map.n_vertices);
    for (a, b) in map.edges() {
        g.add_edge(a, b);
    }
    g
}

/// `N(v)`: every vertex sharing a face with `v`, including `v` itself.
pub fn face_neighbors(map: &PolyhedralMap) -> Vec<BTreeSet<usize>> {
    let mut nb = vec![BTreeSet::new(); map.n_vertices];
    for face in &map.faces {
        for &a in face {
            for &b in face {
                nb[a].insert(b);
            }
        }
    }
    nb
}

/// How `|N(u) ∩ N(v)|` is counted for `u != v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Ignore `u` and `v` themselves. This is the frozen convention: it is
    /// the one that reproduces the published G_i listings.
    Exclusive,
    /// Count literally; `u` and `v` contribute whenever they share a face.
    Inclusive,
}

/// `G_i`: edge `{u,v}` iff the common face-neighbors of `u` and `v` number
/// exactly `i` (exclusive convention).
pub fn common_neighbor_graph(map: &PolyhedralMap, i: usize) -> SimpleGraph {
    common_neighbor_graph_with(map, i, Convention::Exclusive)
}

pub fn common_neighbor_graph_with(map: &PolyhedralMap, i: usize, conv: Convention) -> SimpleGraph {
    let counts = common_counts(map, conv);
    let mut g = SimpleGraph::new(map.n_vertices);
    for ((u, v), c) in counts {
        if c == i {
            g.add_edge(u, v);
        }
    }
    g
}

/// `|N(u) ∩ N(v)|` for every pair `u < v`.
fn common_counts(map: &PolyhedralMap, conv: Convention) -> BTreeMap<(usize, usize), usize> {
    let nb = face_neighbors(map);
    let n = map.n_vertices;
    let mut out = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            let c = nb[u]
                .intersection(&nb[v])
                .filter(|&&w| conv == Convention::Inclusive || (w != u && w != v))
                .count();
            out.insert((u, v), c);
        }
    }
    out
}

/// Every nonempty `G_i`, keyed by `i`.
pub fn all_common_neighbor_graphs(map: &PolyhedralMap) -> BTreeMap<usize, SimpleGraph> {
    let mut out: BTreeMap<usize, SimpleGraph> = BTreeMap::new();
    for ((u, v), c) in common_counts(map, Convention::Exclusive) {
        out.entry(c).or_insert_with(|| SimpleGraph::new(map.n_vertices)).add_edge(u, v);
    }
    out
}

/// `det(xI - A)` of the adjacency matrix.
pub fn char_poly(g: &SimpleGraph) -> IntPolynomial {
    char_poly_matrix(&g.adjacency())
}

/// Relabeling-invariant summary; equal fingerprints are necessary for
/// isomorphism but not sufficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    pub chi: i64,
    /// Degree sequence of `G_i` for `i` in `0..n`.
    pub gi_degrees: Vec<Vec<usize>>,
    pub char_poly: IntPolynomial,
    pub orientable: bool,
    /// Order of the automorphism group and how many elements have each
    /// order. The bundle above cannot separate every pair of catalog maps.
    pub aut_order: u64,
    pub element_orders: BTreeMap<u64, usize>,
}

impl Fingerprint {
    /// `[chi, [[deg..] per i], "poly", orientable, aut_order, [[order, count]..]]`.
    pub fn to_json(&self) -> Value {
        let orders: Vec<Value> = self.element_orders.iter().map(|(o, c)| json!([o, c])).collect();
        json!([self.chi, self.gi_degrees, self.char_poly.to_string(), self.orientable, self.aut_order, orders])
    }
}

pub fn invariant_fingerprint(map: &PolyhedralMap) -> Fingerprint {
    let n = map.n_vertices;
    let counts = common_counts(map, Convention::Exclusive);
    let mut graphs: Vec<SimpleGraph> = (0..n).map(|_| SimpleGraph::new(n)).collect();
    for ((u, v), c) in counts {
        if c < n {
            graphs[c].add_edge(u, v);
        }
    }
    let aut = automorphism_group(map);
    let mut element_orders = BTreeMap::new();
    for p in aut.elements() {
        *element_orders.entry(p.order()).or_insert(0) += 1;
    }
    Fingerprint {
        chi: euler_characteristic(map),
        gi_degrees: graphs.iter().map(|g| g.degree_sequence()).collect(),
        char_poly: char_poly(&edge_graph(map)),
        orientable: orientability(map) == Orientability::Orientable,
        aut_order: aut.order_u64(),
        element_orders,
    }
}
