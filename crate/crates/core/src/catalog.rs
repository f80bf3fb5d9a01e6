//! The eleven known 12-vertex semi-equivelar maps with χ = -2, the
//! published claims about each, and a checker that recomputes everything.
//!
//! Expected values (orientability, |Aut|, group name, isohedral number,
//! vertex-transitivity) are structural and must hold. Published claims
//! (generators, polynomials, G_i listings, orbit rows, printed links) are
//! checked and any that fail land in a discrepancy section instead.

use std::collections::BTreeSet;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use crate::facetype::FaceSequence;
use crate::group::{identify_group, PermGroup};
use crate::invariants::{char_poly, common_neighbor_graph, edge_graph, invariant_fingerprint, SimpleGraph};
use crate::io::{parse_valid_map, MapFile};
use crate::iso::{are_isomorphic, check_witness};
use crate::map::{canonical_face, euler_characteristic, is_sem, PolyhedralMap};
use crate::perm::Permutation;
use crate::poly::IntPolynomial;
use crate::symmetry::{automorphism_group, face_orbits, orientability, Orientability};

/// Structural facts every entry must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub orientable: bool,
    pub aut_order: u64,
    pub group: &'static str,
    pub isohedral: usize,
    pub vertex_transitive: bool,
}

/// What a published G_i listing was used for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListingUse {
    /// Telling two maps of the same type apart.
    Separation,
    /// Pinning down the automorphism group.
    Symmetry,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GiListing {
    pub i: usize,
    pub used_for: ListingUse,
    pub edges: BTreeSet<(usize, usize)>,
}

/// One row of the orbit table: representatives with optional sizes, and the
/// stated isohedral number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub orbits: Vec<(Vec<usize>, Option<usize>)>,
    pub isohedral: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Claims {
    /// Named generators in cycle notation; together they should generate Aut.
    pub generators: Vec<(&'static str, &'static str)>,
    pub char_poly: Option<&'static str>,
    pub listings: Vec<GiListing>,
    pub orbit_row: Option<OrbitRow>,
    /// Printed links `(v, "C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])")`.
    pub links: Vec<(usize, &'static str)>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub file: &'static str,
    pub face_type: FaceSequence,
    pub map: PolyhedralMap,
    pub expected: Expected,
    pub claims: Claims,
    pub provenance: &'static str,
}

struct Raw {
    file: &'static str,
    text: &'static str,
    expected: Expected,
    claims: fn() -> Claims,
    provenance: &'static str,
}

const FROM_DRAWING: &str = "face list read off the drawing, checked against the printed links";

macro_rules! raw {
    ($file:literal, $exp:expr, $claims:expr) => {
        raw!($file, $exp, $claims, FROM_DRAWING)
    };
    ($file:literal, $exp:expr, $claims:expr, $prov:expr) => {
        Raw {
            file: $file,
            text: include_str!(concat!("../catalog/", $file)),
            expected: $exp,
            claims: $claims,
            provenance: $prov,
        }
    };
}

fn exp(orientable: bool, aut_order: u64, group: &'static str, isohedral: usize, vertex_transitive: bool) -> Expected {
    Expected { orientable, aut_order, group, isohedral, vertex_transitive }
}

fn cycles(i: usize, used_for: ListingUse, cs: &[&[usize]]) -> GiListing {
    GiListing { i, used_for, edges: SimpleGraph::from_cycles(12, cs).edges }
}

fn edge_list(i: usize, used_for: ListingUse, es: &[(usize, usize)]) -> GiListing {
    GiListing { i, used_for, edges: SimpleGraph::from_edges(12, es).edges }
}

fn row(orbits: &[(&[usize], Option<usize>)], isohedral: usize) -> Option<OrbitRow> {
    Some(OrbitRow { orbits: orbits.iter().map(|(f, s)| (f.to_vec(), *s)).collect(), isohedral })
}

use ListingUse::{Separation, Symmetry};

fn raw_entries() -> Vec<Raw> {
    vec![
        raw!("kno1_3_4e4.json", exp(false, 4, "Z2xZ2", 6, false), || Claims {
            generators: vec![("alpha1", "(1,6)(2,5)(3,4)(7,9)(10,11)"), ("alpha2", "(0,8)(1,7)(2,3)(4,5)(6,9)(10,11)")],
            listings: vec![
                cycles(7, Symmetry, &[&[1, 2, 6, 5], &[3, 7, 4, 9]]),
                GiListing {
                    i: 8,
                    used_for: Symmetry,
                    edges: {
                        let mut g = SimpleGraph::from_cycles(12, &[&[1, 4, 2, 9, 6, 3, 5, 7]]);
                        for (a, b) in [(0, 8), (0, 10), (0, 11), (8, 10), (8, 11), (10, 11)] {
                            g.add_edge(a, b);
                        }
                        g.edges
                    },
                },
            ],
            orbit_row: row(
                &[
                    (&[0, 3, 4], Some(2)),
                    (&[1, 9, 10], Some(2)),
                    (&[0, 1, 2, 3], Some(4)),
                    (&[0, 6, 7, 8], Some(2)),
                    (&[1, 2, 11, 6], Some(4)),
                    (&[2, 5, 10, 11], Some(2)),
                ],
                5,
            ),
            ..Claims::default()
        }),
        raw!("kno2_3_4e4.json", exp(false, 24, "S4", 2, true), || Claims {
            generators: vec![
                ("beta1", "(1,6)(2,5)(3,4)(7,9)(10,11)"),
                ("beta2", "(0,6,1)(2,8,5)(3,7,10)(4,11,9)"),
                ("beta3", "(0,8)(1,7)(2,4)(3,5)(6,9)(10,11)"),
                ("beta4", "(0,10)(1,4)(2,7)(3,9)(5,6)(8,11)"),
            ],
            orbit_row: row(&[(&[0, 3, 4], Some(4)), (&[0, 1, 2, 3], Some(12))], 2),
            links: vec![
                (0, "C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])"),
                (8, "C9([5,4,7],[7,6,0],[0,1,9],[9,3,2])"),
                (2, "C9([5,10,11],[11,6,1],[1,0,3],[3,9,8])"),
                (3, "C9([4,10,11],[11,7,9],[9,8,2],[2,1,0])"),
                (5, "C9([2,11,10],[10,1,6],[6,0,4],[4,7,8])"),
                (4, "C9([3,11,10],[10,9,7],[7,8,5],[5,6,0])"),
                (6, "C9([11,2,1],[1,10,5],[5,4,0],[0,8,7])"),
                (7, "C9([11,3,9],[9,10,4],[4,5,8],[8,0,6])"),
                (1, "C9([10,5,6],[6,11,2],[2,3,0],[0,8,9])"),
                (9, "C9([1,0,8],[8,2,3],[3,11,7],[7,4,10])"),
                (10, "C9([9,7,4],[4,3,11],[11,2,5],[5,6,1])"),
                (11, "C9([7,9,3],[3,4,10],[10,5,2],[2,1,6])"),
            ],
            ..Claims::default()
        }),
        raw!(
            "ko_3_4e4.json",
            exp(true, 12, "Z12", 2, true),
            || Claims {
                generators: vec![("gamma", "(0,2,9,10,4,6,1,8,3,11,5,7)")],
                listings: vec![edge_list(
                    8,
                    Symmetry,
                    &[
                        (0, 1),
                        (0, 10),
                        (0, 11),
                        (1, 10),
                        (1, 11),
                        (10, 11),
                        (2, 4),
                        (2, 5),
                        (2, 8),
                        (4, 5),
                        (4, 8),
                        (5, 8),
                        (3, 6),
                        (3, 7),
                        (3, 9),
                        (6, 7),
                        (6, 9),
                        (7, 9),
                    ],
                )],
                orbit_row: row(&[(&[0, 3, 4], Some(4)), (&[0, 1, 2, 3], Some(12))], 2),
                links: vec![
                    (0, "C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])"),
                    (7, "C9([10,11,4],[4,5,1],[1,2,6],[6,0,8])"),
                    (5, "C9([9,3,10],[10,11,6],[6,0,4],[4,7,1])"),
                    (10, "C9([2,8,11],[11,6,5],[5,9,3],[3,4,7])"),
                    (2, "C9([11,10,8],[8,9,3],[3,0,1],[1,7,6])"),
                    (8, "C9([10,3,2],[2,11,9],[9,1,0],[0,6,7])"),
                    (9, "C9([5,10,3],[3,4,11],[11,2,8],[8,0,1])"),
                    (3, "C9([0,1,2],[2,8,10],[10,5,9],[9,11,4])"),
                    (4, "C9([3,9,11],[11,10,7],[7,1,5],[5,6,0])"),
                    (11, "C9([6,5,10],[10,7,4],[4,3,9],[9,8,2])"),
                ],
                ..Claims::default()
            },
            "face list read off the drawing; its pentagon [9,11,6,2,8] with chord 2-11 is split into [9,11,2,8] and [11,6,2]"
        ),
        raw!("ko1_3e4_4e2.json", exp(true, 12, "Z2xZ2xZ3", 3, true), || Claims {
            generators: vec![
                ("alpha1", "(0,3,2)(1,4,5)(6,8,9)(7,10,11)"),
                ("alpha2", "(0,4)(1,2)(3,5)(6,10)(7,9)(8,11)"),
                ("alpha3", "(0,9)(1,11)(2,8)(3,6)(4,7)(5,10)"),
            ],
            char_poly: Some("x^12 - 35x^10 - 80x^9 + 204x^8 + 1024x^7 + 1456x^6 + 768x^5 + 64x^4"),
            listings: vec![edge_list(
                5,
                Separation,
                &[(0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5), (6, 8), (6, 9), (8, 9), (7, 10), (7, 11), (10, 11)],
            )],
            ..Claims::default()
        }),
        raw!("ko2_3e4_4e2.json", exp(true, 12, "D6(order 12)", 3, true), || Claims {
            generators: vec![
                ("beta1", "(0,2)(1,3)(4,5)(6,10)(7,9)(8,11)"),
                ("beta2", "(0,4,3)(1,2,5)(6,8,9)(7,10,11)"),
                ("beta3", "(0,6)(1,11)(2,10)(3,8)(4,9)(5,7)"),
            ],
            char_poly: Some("x^12 - 36x^10 - 80x^9 + 240x^8 + 1152x^7 + 1600x^6 + 768x^5"),
            listings: vec![edge_list(
                5,
                Separation,
                &[(0, 3), (0, 4), (3, 4), (1, 2), (1, 5), (2, 5), (6, 8), (6, 9), (8, 9), (7, 10), (7, 11), (10, 11)],
            )],
            orbit_row: row(&[(&[0, 1, 2], Some(12)), (&[0, 3, 4], Some(4)), (&[0, 5, 6, 7], Some(6))], 3),
            ..Claims::default()
        }),
        raw!("kno_3e4_4e2.json", exp(false, 4, "Z2xZ2", 7, false), || Claims {
            generators: vec![("gamma1", "(0,4)(1,2)(3,5)(6,10)(7,9)(8,11)"), ("gamma2", "(0,7)(1,8)(2,11)(3,10)(4,9)(5,6)")],
            listings: vec![edge_list(
                4,
                Symmetry,
                &[
                    (0, 4),
                    (0, 7),
                    (0, 8),
                    (1, 2),
                    (1, 7),
                    (1, 8),
                    (2, 9),
                    (2, 11),
                    (3, 6),
                    (3, 10),
                    (4, 9),
                    (4, 11),
                    (5, 6),
                    (5, 10),
                    (7, 9),
                    (8, 11),
                ],
            )],
            orbit_row: row(
                &[
                    (&[0, 1, 2], Some(4)),
                    (&[0, 2, 3], Some(4)),
                    (&[0, 3, 4], Some(4)),
                    (&[1, 5, 10], Some(4)),
                    (&[0, 5, 6, 7], Some(2)),
                    (&[0, 1, 8, 7], Some(2)),
                    (&[1, 8, 3, 10], Some(2)),
                ],
                7,
            ),
            ..Claims::default()
        }),
        raw!("ko1_3e3_4_3_4.json", exp(true, 2, "Z2", 11, false), || Claims {
            generators: vec![("alpha", "(0,3)(1,9)(2,4)(5,8)(6,10)(7,11)")],
            listings: vec![
                cycles(7, Separation, &[&[0, 9, 10], &[1, 3, 6]]),
                cycles(7, Symmetry, &[&[0, 9, 10], &[1, 3, 6]]),
            ],
            orbit_row: row(
                &[
                    (&[0, 1, 2], Some(2)),
                    (&[0, 2, 3], Some(2)),
                    (&[1, 2, 9], Some(2)),
                    (&[0, 6, 7], Some(2)),
                    (&[5, 7, 9], Some(2)),
                    (&[2, 6, 8], Some(2)),
                    (&[5, 7, 10], Some(2)),
                    (&[5, 6, 11], Some(2)),
                    (&[0, 4, 5, 6], Some(2)),
                    (&[0, 1, 8, 7], Some(2)),
                    (&[2, 6, 7, 9], Some(2)),
                ],
                11,
            ),
            ..Claims::default()
        }),
        raw!("ko2_3e3_4_3_4.json", exp(true, 4, "Z2xZ2", 8, false), || Claims {
            generators: vec![("alpha1", "(0,2)(1,3)(4,9)(5,11)(6,8)(7,10)"), ("alpha2", "(0,4)(2,9)(5,6)(7,10)(8,11)")],
            listings: vec![
                cycles(7, Separation, &[&[0, 9, 10], &[2, 4, 7]]),
                cycles(7, Symmetry, &[&[0, 9, 10], &[2, 4, 7]]),
            ],
            orbit_row: row(
                &[
                    (&[0, 1, 2], Some(4)),
                    (&[0, 3, 4], Some(2)),
                    (&[0, 6, 7], Some(4)),
                    (&[3, 5, 6], Some(2)),
                    (&[5, 8, 20], Some(2)),
                    (&[5, 7, 8], Some(2)),
                    (&[0, 4, 5, 6], Some(2)),
                    (&[0, 1, 8, 7], Some(4)),
                ],
                8,
            ),
            ..Claims::default()
        }),
        raw!("kno1_3e3_4_3_4.json", exp(false, 2, "Z2", 13, false), || Claims {
            generators: vec![("beta", "(0,3)(1,9)(2,4)(5,8)(6,11)")],
            char_poly: Some("x^12 - 48x^10 - 146x^9 + 72x^8 + 576x^7 + 81x^6 - 648x^5"),
            listings: vec![
                cycles(7, Separation, &[&[0, 9, 10], &[1, 3, 6], &[2, 4, 7]]),
                cycles(7, Symmetry, &[&[0, 9, 11], &[1, 3, 6], &[2, 4, 7]]),
                edge_list(6, Symmetry, &[(0, 10), (3, 10), (7, 10), (1, 5), (2, 5), (5, 11), (4, 8), (6, 8), (8, 9)]),
            ],
            orbit_row: row(
                &[
                    (&[0, 1, 2], Some(2)),
                    (&[0, 2, 3], Some(2)),
                    (&[0, 6, 7], Some(2)),
                    (&[1, 2, 9], Some(2)),
                    (&[6, 7, 11], Some(1)),
                    (&[1, 8, 11], Some(2)),
                    (&[2, 8, 10], Some(2)),
                    (&[5, 8, 10], Some(1)),
                    (&[5, 7, 8], Some(1)),
                    (&[6, 10, 11], Some(1)),
                    (&[0, 4, 5, 6], Some(2)),
                    (&[0, 1, 8, 7], Some(2)),
                    (&[1, 4, 10, 11], Some(2)),
                ],
                13,
            ),
            ..Claims::default()
        }),
        raw!("kno2_3e3_4_3_4.json", exp(false, 4, "Z2xZ2", 8, false), || Claims {
            generators: vec![("beta1", "(0,1)(3,9)(5,10)(6,11)(7,8)"), ("beta2", "(0,3)(1,9)(2,4)(5,8)(7,10)")],
            listings: vec![
                cycles(7, Separation, &[]),
                cycles(5, Symmetry, &[&[0, 2, 1, 9, 4, 3], &[5, 6, 8, 7, 11, 10]]),
            ],
            orbit_row: row(
                &[
                    (&[1, 2, 3], Some(2)),
                    (&[0, 2, 3], Some(4)),
                    (&[0, 6, 7], None),
                    (&[2, 7, 8], Some(2)),
                    (&[5, 6, 8], Some(2)),
                    (&[6, 7, 10], Some(2)),
                    (&[0, 4, 5, 6], Some(4)),
                    (&[0, 1, 8, 7], Some(2)),
                ],
                8,
            ),
            ..Claims::default()
        }),
        raw!(
            "kno3_3e3_4_3_4.json",
            exp(false, 4, "Z4", 7, false),
            || Claims {
                generators: vec![("gamma", "(0,1,10,6)(2,11,5,7)(3,4,8,9)")],
                char_poly: Some("x^12 - 48x^10 - 144x^9 + 66x^8 + 50x^7 + 8x^6 - 57x^5 - 27x^4 + 216x^3"),
                listings: vec![
                    cycles(7, Separation, &[&[0, 9, 11], &[1, 3, 5], &[2, 6, 8]]),
                    cycles(7, Symmetry, &[&[0, 9, 11], &[1, 3, 5], &[2, 6, 8], &[4, 7, 10]]),
                ],
                ..Claims::default()
            },
            "face list read off the drawing, then relabelled by [2,11,3,0,1,10,9,7,5,6,4,8] so the printed generator and G_7 listing refer to it"
        ),
    ]
}

/// Loads all eleven entries. Panics only if an embedded file is corrupt,
/// which the test suite rules out.
pub fn catalog() -> Vec<CatalogEntry> {
    raw_entries()
        .into_iter()
        .map(|r| {
            let MapFile { name, face_type, map } =
                parse_valid_map(r.text, r.file).unwrap_or_else(|e| panic!("embedded catalog file is broken: {e}"));
            CatalogEntry {
                name: leak_name(name.expect("catalog files are named")),
                file: r.file,
                face_type: face_type.expect("catalog files declare a type"),
                map,
                expected: r.expected,
                claims: (r.claims)(),
                provenance: r.provenance,
            }
        })
        .collect()
}

fn leak_name(s: String) -> &'static str {
    // Names are one of eleven fixed strings; match them back to literals
    // instead of leaking.
    const NAMES: [&str; 11] = [
        "KNO_1[(3,4^4)]",
        "KNO_2[(3,4^4)]",
        "KO[(3,4^4)]",
        "KO_1[(3^4,4^2)]",
        "KO_2[(3^4,4^2)]",
        "KNO[(3^4,4^2)]",
        "KO_1[(3^3,4,3,4)]",
        "KO_2[(3^3,4,3,4)]",
        "KNO_1[(3^3,4,3,4)]",
        "KNO_2[(3^3,4,3,4)]",
        "KNO_3[(3^3,4,3,4)]",
    ];
    NAMES.iter().find(|n| **n == s).copied().unwrap_or_else(|| panic!("unknown catalog name {s}"))
}

/// Looks up an entry by its name, e.g. `"KO[(3,4^4)]"`.
pub fn entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Raw JSON text of an entry's file.
pub fn entry_json(name: &str) -> Option<&'static str> {
    let file = entry(name)?.file;
    raw_entries().into_iter().find(|r| r.file == file).map(|r| r.text)
}

/// Faces around `v` described by a printed link such as
/// `C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])` or `C8(2,3,[4,5,6],[7,8,1])`.
///
/// The items spell out the link cycle; a bracket `[a,b,c]` is the 4-gon
/// `[v,a,b,c]`, consecutive brackets may share an endpoint, and every
/// other consecutive pair of link vertices spans a 3-gon with `v`.
pub fn star_from_link(v: usize, text: &str) -> Result<Vec<Vec<usize>>, String> {
    let bad = |m: &str| format!("link {text:?}: {m}");
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = t.strip_prefix('C').ok_or_else(|| bad("expected C<k>(...)"))?;
    let open = rest.find('(').ok_or_else(|| bad("missing '('"))?;
    let k: usize = rest[..open].parse().map_err(|_| bad("bad cycle length"))?;
    let body = rest[open + 1..].strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;

    let mut items: Vec<(Vec<usize>, bool)> = Vec::new();
    let mut chars = body.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ',' => {
                chars.next();
            }
            '[' => {
                chars.next();
                let mut s = String::new();
                for c in chars.by_ref() {
                    if c == ']' {
                        break;
                    }
                    s.push(c);
                }
                let g: Result<Vec<usize>, _> = s.split(',').map(str::parse).collect();
                let g = g.map_err(|_| bad("bad bracket group"))?;
                if g.len() != 3 {
                    return Err(bad("bracket groups need three labels"));
                }
                items.push((g, true));
            }
            _ => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c == ',' {
                        break;
                    }
                    s.push(c);
                    chars.next();
                }
                items.push((vec![s.parse().map_err(|_| bad("bad label"))?], false));
            }
        }
    }

    let mut path: Vec<usize> = Vec::new();
    let mut quads: Vec<Vec<usize>> = Vec::new();
    let mut in_quad: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (g, quad) in &items {
        let skip = usize::from(path.last() == g.first());
        path.extend_from_slice(&g[skip..]);
        if *quad {
            quads.push(vec![v, g[0], g[1], g[2]]);
            in_quad.insert(crate::map::edge(g[0], g[1]));
            in_quad.insert(crate::map::edge(g[1], g[2]));
        }
    }
    if path.len() > 1 && path.first() == path.last() {
        path.pop();
    }
    if path.len() != k {
        return Err(bad(&format!("spells {} link vertices, expected {k}", path.len())));
    }
    let mut faces = quads;
    for i in 0..k {
        let (a, b) = (path[i], path[(i + 1) % k]);
        if !in_quad.contains(&crate::map::edge(a, b)) {
            faces.push(vec![v, a, b]);
        }
    }
    let mut faces: Vec<Vec<usize>> = faces.iter().map(|f| canonical_face(f)).collect();
    faces.sort();
    Ok(faces)
}

/// Faces of `map` containing `v`, canonical and sorted.
pub fn star_of(map: &PolyhedralMap, v: usize) -> Vec<Vec<usize>> {
    map.face_set().into_iter().filter(|f| f.contains(&v)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Structural,
    Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub entry: String,
    pub kind: CheckKind,
    pub what: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct CatalogReport {
    pub entries: usize,
    pub checks: Vec<Check>,
}

impl CatalogReport {
    pub fn structural_ok(&self) -> bool {
        self.checks.iter().filter(|c| c.kind == CheckKind::Structural).all(|c| c.pass)
    }

    /// Published claims that the recomputation does not reproduce.
    pub fn discrepancies(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Claim && !c.pass)
    }

    pub fn find(&self, entry: &str, what: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.entry == entry && c.what == what)
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "catalog: {} entries", self.entries)?;
        for c in &self.checks {
            let tag = match (c.pass, c.kind) {
                (true, _) => "PASS",
                (false, CheckKind::Structural) => "FAIL",
                (false, CheckKind::Claim) => "DIFF",
            };
            write!(f, "{tag} {}: {}", c.entry, c.what)?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        let diffs: Vec<&Check> = self.discrepancies().collect();
        writeln!(f, "\ndiscrepancies: {}", diffs.len())?;
        for c in diffs {
            writeln!(f, "- {}: {}: {}", c.entry, c.what, c.detail)?;
        }
        let structural_failures = self.checks.iter().filter(|c| c.kind == CheckKind::Structural && !c.pass).count();
        write!(f, "\nstructural checks: {}", if structural_failures == 0 { "all pass".to_string() } else { format!("{structural_failures} failing") })
    }
}

struct Recorder<'a> {
    entry: &'a str,
    out: Vec<Check>,
}

impl Recorder<'_> {
    fn push(&mut self, kind: CheckKind, what: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.out.push(Check { entry: self.entry.to_string(), kind, what: what.into(), pass, detail: detail.into() });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, kind: CheckKind, what: &str, got: T, want: T) {
        let detail = if got == want { format!("{got}") } else { format!("computed {got}, expected {want}") };
        self.push(kind, what, got == want, detail);
    }
}

fn show_edges(e: &BTreeSet<(usize, usize)>) -> String {
    let parts: Vec<String> = e.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    format!("{{{}}}", parts.join(","))
}

fn verify_entry(e: &CatalogEntry) -> Vec<Check> {
    use CheckKind::{Claim, Structural};
    let mut r = Recorder { entry: e.name, out: Vec::new() };
    let m = &e.map;

    r.push(Structural, "type", is_sem(m, &e.face_type), e.face_type.to_string());
    r.eq(Structural, "euler characteristic", euler_characteristic(m), -2);
    let orientable = orientability(m) == Orientability::Orientable;
    r.eq(Structural, "orientable", orientable, e.expected.orientable);

    let aut = automorphism_group(m);
    r.eq(Structural, "aut order", aut.order_u64(), e.expected.aut_order);
    let name = identify_group(&aut).map(|g| g.to_string()).unwrap_or_else(|err| err.to_string());
    r.eq(Structural, "aut group", name.as_str(), e.expected.group);
    let orbits = face_orbits(&aut, m).expect("automorphisms act on faces");
    r.eq(Structural, "isohedral number", orbits.len(), e.expected.isohedral);
    let transitive = aut.vertex_orbits().len() == 1;
    r.eq(Structural, "vertex-transitive", transitive, e.expected.vertex_transitive);

    let mut gens = Vec::new();
    for (label, cyc) in &e.claims.generators {
        match Permutation::from_cycles(cyc, m.n_vertices) {
            Ok(p) => {
                let ok = check_witness(m, m, &p);
                r.push(Claim, format!("generator {label} is an automorphism"), ok, *cyc);
                if ok {
                    gens.push(p);
                }
            }
            Err(err) => r.push(Claim, format!("generator {label} is an automorphism"), false, err.to_string()),
        }
    }
    if !e.claims.generators.is_empty() && gens.len() == e.claims.generators.len() {
        let g = PermGroup::new(m.n_vertices, gens).expect("degrees match");
        r.eq(Claim, "generators generate Aut", g.order_u64(), aut.order_u64());
    }

    if let Some(text) = e.claims.char_poly {
        let got = char_poly(&edge_graph(m));
        match text.parse::<IntPolynomial>() {
            Ok(want) => {
                let detail = if got == want { got.to_string() } else { format!("computed {got}; printed {want}") };
                r.push(Claim, "edge-graph characteristic polynomial", got == want, detail);
            }
            Err(err) => r.push(Claim, "edge-graph characteristic polynomial", false, err.to_string()),
        }
    }

    for l in &e.claims.listings {
        let got = common_neighbor_graph(m, l.i).edges;
        let what = match l.used_for {
            ListingUse::Separation => format!("G_{} listing (separation)", l.i),
            ListingUse::Symmetry => format!("G_{} listing (symmetry)", l.i),
        };
        let detail =
            if got == l.edges { show_edges(&got) } else { format!("computed {}; printed {}", show_edges(&got), show_edges(&l.edges)) };
        r.push(Claim, what, got == l.edges, detail);
    }

    if let Some(row) = &e.claims.orbit_row {
        let faces: BTreeSet<Vec<usize>> = m.face_set().into_iter().collect();
        let mut problems = Vec::new();
        if row.orbits.len() != row.isohedral {
            problems.push(format!("{} orbits listed for a stated {}-isohedral map", row.orbits.len(), row.isohedral));
        }
        for (f, s) in &row.orbits {
            if !faces.contains(&canonical_face(f)) {
                problems.push(format!("{f:?} is not a face"));
            }
            if s.is_none() {
                problems.push(format!("{f:?} has no size"));
            }
        }
        let total: usize = row.orbits.iter().filter_map(|(_, s)| *s).sum();
        if problems.is_empty() && total != faces.len() {
            problems.push(format!("sizes sum to {total}, not {}", faces.len()));
        }
        if !problems.is_empty() {
            problems.push(format!("computed {} orbits", orbits.len()));
            r.push(Claim, "orbit row is self-consistent", false, problems.join("; "));
        } else {
            let mut hit = BTreeSet::new();
            let mut ok = orbits.len() == row.isohedral;
            let mut notes = Vec::new();
            for (f, s) in &row.orbits {
                let cf = canonical_face(f);
                match orbits.iter().position(|o| o.members.contains(&cf)) {
                    Some(i) => {
                        if !hit.insert(i) || Some(orbits[i].size) != *s {
                            ok = false;
                            notes.push(format!("{f:?}: computed size {}", orbits[i].size));
                        }
                    }
                    None => ok = false,
                }
            }
            let detail = if ok { format!("{} orbits", orbits.len()) } else { notes.join("; ") };
            r.push(Claim, "orbit row", ok, detail);
        }
    }

    for (v, text) in &e.claims.links {
        let what = format!("printed lk({v})");
        match star_from_link(*v, text) {
            Ok(star) => {
                let got = star_of(m, *v);
                let detail = if star == got { (*text).to_string() } else { format!("{text} disagrees with faces {got:?}") };
                r.push(Claim, what, star == got, detail);
            }
            Err(err) => r.push(Claim, what, false, err),
        }
    }
    r.out
}

/// Recomputes every expected value and published claim, plus pairwise
/// non-isomorphism within each type. A panic while checking one entry is
/// recorded as a failure of that entry.
pub fn verify_catalog() -> CatalogReport {
    let entries = match catch_unwind(catalog) {
        Ok(e) => e,
        Err(_) => {
            return CatalogReport {
                entries: 0,
                checks: vec![Check {
                    entry: "catalog".into(),
                    kind: CheckKind::Structural,
                    what: "load".into(),
                    pass: false,
                    detail: "embedded files failed to load".into(),
                }],
            }
        }
    };
    let mut checks = Vec::new();
    for e in &entries {
        match catch_unwind(AssertUnwindSafe(|| verify_entry(e))) {
            Ok(c) => checks.extend(c),
            Err(p) => checks.push(Check {
                entry: e.name.to_string(),
                kind: CheckKind::Structural,
                what: "recomputation".into(),
                pass: false,
                detail: panic_text(&p),
            }),
        }
    }
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.face_type != b.face_type {
                continue;
            }
            let pair = format!("{} vs {}", a.name, b.name);
            let res = catch_unwind(AssertUnwindSafe(|| {
                (are_isomorphic(&a.map, &b.map).is_none(), invariant_fingerprint(&a.map) != invariant_fingerprint(&b.map))
            }));
            let (nonisomorphic, fp) = res.unwrap_or((false, false));
            checks.push(Check {
                entry: pair.clone(),
                kind: CheckKind::Structural,
                what: "non-isomorphic".into(),
                pass: nonisomorphic,
                detail: String::new(),
            });
            checks.push(Check {
                entry: pair,
                kind: CheckKind::Structural,
                what: "fingerprints differ".into(),
                pass: fp,
                detail: String::new(),
            });
        }
    }
    CatalogReport { entries: entries.len(), checks }
}

fn panic_text(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eleven_entries_load() {
        let c = catalog();
        assert_eq!(c.len(), 11);
        for e in &c {
            assert_eq!(e.map.n_vertices, 12, "{}", e.name);
        }
    }

    #[test]
    fn link_notation_c9() {
        let s = star_from_link(0, "C9([4,5,6],[6,7,8],[8,9,1],[1,2,3])").unwrap();
        assert_eq!(s.len(), 5);
        assert!(s.contains(&vec![0, 3, 4]));
        assert!(s.contains(&canonical_face(&[0, 8, 9, 1])));
    }

    #[test]
    fn link_notation_c8_shapes() {
        // (3^4,4^2): adjacent 4-gons
        let s = star_from_link(0, "C8(2,3,4,[5,6,7],[7,8,1])").unwrap();
        assert_eq!(s.iter().filter(|f| f.len() == 3).count(), 4);
        // (3^3,4,3,4): separated 4-gons
        let s = star_from_link(0, "C8(2,3,[4,5,6],[7,8,1])").unwrap();
        assert_eq!(s.iter().filter(|f| f.len() == 3).count(), 4);
        assert!(s.contains(&vec![0, 6, 7]));
        assert!(s.contains(&vec![0, 1, 2]));
    }

    #[test]
    fn link_notation_errors() {
        assert!(star_from_link(0, "C9([4,5,6],[6,7,8])").is_err());
        assert!(star_from_link(0, "lk([4,5,6])").is_err());
        assert!(star_from_link(0, "C8(2,x,[4,5,6],[7,8,1])").is_err());
    }
}
