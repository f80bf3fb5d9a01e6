//! Permutation groups: Schreier–Sims stabilizer chains, membership, order,
//! element listing and identification of small groups.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::GroupError;
use crate::perm::Permutation;

/// One level of the stabilizer chain: `base` point, its orbit with a
/// transversal, and the strong generators fixing all earlier base points.
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps `base` to `x`, for `x` in the orbit.
    transversal: BTreeMap<usize, Permutation>,
}

impl Level {
    fn new(base: usize) -> Self {
        Level { base, gens: Vec::new(), transversal: BTreeMap::new() }
    }

    fn rebuild_orbit(&mut self, n: usize) {
        self.transversal.clear();
        self.transversal.insert(self.base, Permutation::identity(n));
        let mut queue = vec![self.base];
        while let Some(x) = queue.pop() {
            let tx = self.transversal[&x].clone();
            for g in &self.gens {
                let y = g.apply(x);
                if let std::collections::btree_map::Entry::Vacant(e) = self.transversal.entry(y) {
                    e.insert(g.compose(&tx));
                    queue.push(y);
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    chain: Vec<Level>,
}

impl PermGroup {
    pub fn new(n: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(GroupError::DegreeMismatch { expected: n, got: g.degree() });
        }
        let mut grp = PermGroup { n, generators: Vec::new(), chain: Vec::new() };
        for g in generators {
            if !g.is_identity() {
                grp.generators.push(g.clone());
                grp.extend(g);
            }
        }
        Ok(grp)
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { n, generators: Vec::new(), chain: Vec::new() }
    }

    /// Smallest generating subset of `elements`, taken greedily in order.
    pub fn from_elements(n: usize, elements: &[Permutation]) -> Self {
        let mut grp = PermGroup::trivial(n);
        for e in elements {
            if !grp.contains(e) {
                grp.generators.push(e.clone());
                grp.extend(e.clone());
            }
        }
        grp
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sifts `g` through the chain. Returns the residue and the level where
    /// it stopped (`chain.len()` if it passed every level).
    fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.chain.iter().enumerate() {
            let b = h.apply(lvl.base);
            match lvl.transversal.get(&b) {
                Some(t) => h = t.inverse().compose(&h),
                None => return (h, i),
            }
        }
        (h, self.chain.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let (h, lvl) = self.sift(g);
        lvl == self.chain.len() && h.is_identity()
    }

    /// Adds a generator of the whole group and restores the chain.
    fn extend(&mut self, g: Permutation) {
        self.add_at(0, g);
    }

    fn add_at(&mut self, level: usize, g: Permutation) {
        if level == self.chain.len() {
            let Some(b) = (0..self.n).find(|&x| g.apply(x) != x) else { return };
            self.chain.push(Level::new(b));
        }
        self.chain[level].gens.push(g);
        self.chain[level].rebuild_orbit(self.n);
        // Schreier generators of this level must lie in the next one.
        loop {
            let mut pending = None;
            'outer: for (&x, tx) in &self.chain[level].transversal {
                for s in &self.chain[level].gens {
                    let y = s.apply(x);
                    let ty = &self.chain[level].transversal[&y];
                    let schreier = ty.inverse().compose(&s.compose(tx));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, stop) = self.sift_from(level + 1, &schreier);
                    if !(stop == self.chain.len() && h.is_identity()) {
                        pending = Some(h);
                        break 'outer;
                    }
                }
            }
            // the residue fixes this level's base, so it belongs one level down
            match pending {
                Some(h) => self.add_at(level + 1, h),
                None => break,
            }
        }
    }

    fn sift_from(&self, from: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in from..self.chain.len() {
            let lvl = &self.chain[i];
            let b = h.apply(lvl.base);
            match lvl.transversal.get(&b) {
                Some(t) => h = t.inverse().compose(&h),
                None => return (h, i),
            }
        }
        (h, self.chain.len())
    }

    pub fn order(&self) -> BigUint {
        self.chain.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.transversal.len()))
    }

    /// Order as `u64`, saturating.
    pub fn order_u64(&self) -> u64 {
        self.order().to_u64().unwrap_or(u64::MAX)
    }

    /// All elements, sorted. Intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.n)];
        for lvl in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lvl.transversal.len());
            for t in lvl.transversal.values() {
                for e in &out {
                    next.push(t.compose(e));
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Orbits on `0..n`, each sorted, ordered by least element.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for g in &self.generators {
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.n {
            let r = find(&mut parent, x);
            orbits.entry(r).or_default().push(x);
        }
        orbits.into_values().collect()
    }
}

/// Names for the groups that occur as automorphism groups in the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupId {
    Trivial,
    Z2,
    Z3,
    Z4,
    Z2xZ2,
    Z6,
    /// Dihedral group of order 12, the symmetries of a hexagon.
    D6,
    Z12,
    Z2xZ2xZ3,
    S4,
    Other { order: u64, abelian: bool, element_orders: BTreeMap<u64, usize> },
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Trivial => write!(f, "trivial"),
            GroupId::Z2 => write!(f, "Z2"),
            GroupId::Z3 => write!(f, "Z3"),
            GroupId::Z4 => write!(f, "Z4"),
            GroupId::Z2xZ2 => write!(f, "Z2xZ2"),
            GroupId::Z6 => write!(f, "Z6"),
            GroupId::D6 => write!(f, "D6(order 12)"),
            GroupId::Z12 => write!(f, "Z12"),
            GroupId::Z2xZ2xZ3 => write!(f, "Z2xZ2xZ3"),
            GroupId::S4 => write!(f, "S4"),
            GroupId::Other { order, abelian, element_orders } => {
                let parts: Vec<String> = element_orders.iter().map(|(o, c)| format!("{o}:{c}")).collect();
                write!(f, "other(order {order}, {}, {{{}}})", if *abelian { "abelian" } else { "non-abelian" }, parts.join(","))
            }
        }
    }
}

/// Default cap on the order of groups handed to [`identify_group`].
pub const IDENTIFY_CAP: u64 = 10_000;

/// Element-order multiset: how many elements have each order.
pub fn element_orders(g: &PermGroup) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for e in g.elements() {
        *m.entry(e.order()).or_insert(0) += 1;
    }
    m
}

pub fn identify_group(g: &PermGroup) -> Result<GroupId, GroupError> {
    identify_group_capped(g, IDENTIFY_CAP)
}

/// Names the group from its order, commutativity and element orders.
///
/// Signatures (order: count):
/// Z4 {1:1,2:1,4:2}; Z2xZ2 {1:1,2:3}; Z6 {1:1,2:1,3:2,6:2};
/// D6 {1:1,2:7,3:2,6:2}; Z12 {1:1,2:1,3:2,4:2,6:2,12:4};
/// Z2xZ2xZ3 {1:1,2:3,3:2,6:6}; S4 {1:1,2:9,3:8,4:6}.
pub fn identify_group_capped(g: &PermGroup, cap: u64) -> Result<GroupId, GroupError> {
    let order = g.order();
    let Some(o) = order.to_u64().filter(|&o| o <= cap) else {
        return Err(GroupError::TooLarge { order: order.to_string(), cap });
    };
    let abelian = g.is_abelian();
    let eo = element_orders(g);
    let sig: Vec<(u64, usize)> = eo.iter().map(|(&a, &b)| (a, b)).collect();
    let is = |want: &[(u64, usize)]| sig == want;
    let id = match (o, abelian) {
        (1, _) => GroupId::Trivial,
        (2, _) => GroupId::Z2,
        (3, _) => GroupId::Z3,
        (4, true) if is(&[(1, 1), (2, 1), (4, 2)]) => GroupId::Z4,
        (4, true) if is(&[(1, 1), (2, 3)]) => GroupId::Z2xZ2,
        (6, true) if is(&[(1, 1), (2, 1), (3, 2), (6, 2)]) => GroupId::Z6,
        (12, false) if is(&[(1, 1), (2, 7), (3, 2), (6, 2)]) => GroupId::D6,
        (12, true) if is(&[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)]) => GroupId::Z12,
        (12, true) if is(&[(1, 1), (2, 3), (3, 2), (6, 6)]) => GroupId::Z2xZ2xZ3,
        (24, false) if is(&[(1, 1), (2, 9), (3, 8), (4, 6)]) => GroupId::S4,
        _ => GroupId::Other { order: o, abelian, element_orders: eo },
    };
    Ok(id)
}

/// Sizes of the orbits of `g` on the points `0..n`, keyed by least element.
pub fn orbit_sizes(g: &PermGroup) -> BTreeSet<(usize, usize)> {
    g.vertex_orbits().iter().map(|o| (o[0], o.len())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::from_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        let s4 = PermGroup::new(4, vec![p("(0,1)", 4), p("(0,1,2,3)", 4)]).unwrap();
        assert_eq!(s4.order(), BigUint::from(24u32));
        assert_eq!(identify_group(&s4).unwrap(), GroupId::S4);
        assert_eq!(s4.elements().len(), 24);
        let s6 = PermGroup::new(6, vec![p("(0,1)", 6), p("(0,1,2,3,4,5)", 6)]).unwrap();
        assert_eq!(s6.order(), BigUint::from(720u32));
    }

    #[test]
    fn membership() {
        let a4 = PermGroup::new(4, vec![p("(0,1,2)", 4), p("(1,2,3)", 4)]).unwrap();
        assert_eq!(a4.order_u64(), 12);
        assert!(a4.contains(&p("(0,1)(2,3)", 4)));
        assert!(!a4.contains(&p("(0,1)", 4)));
        // A4 is not one of the named groups
        assert!(matches!(identify_group(&a4).unwrap(), GroupId::Other { order: 12, abelian: false, .. }));
    }

    #[test]
    fn small_names() {
        let n = 12;
        let g = |gens: &[&str]| PermGroup::new(n, gens.iter().map(|s| p(s, n)).collect()).unwrap();
        assert_eq!(identify_group(&PermGroup::trivial(n)).unwrap(), GroupId::Trivial);
        assert_eq!(identify_group(&g(&["(0,1)"])).unwrap(), GroupId::Z2);
        assert_eq!(identify_group(&g(&["(0,1,2,3)"])).unwrap(), GroupId::Z4);
        assert_eq!(identify_group(&g(&["(0,1)", "(2,3)"])).unwrap(), GroupId::Z2xZ2);
        assert_eq!(identify_group(&g(&["(0,1,2,3,4,5)"])).unwrap(), GroupId::Z6);
        assert_eq!(identify_group(&g(&["(0,1,2,3,4,5,6,7,8,9,10,11)"])).unwrap(), GroupId::Z12);
        assert_eq!(identify_group(&g(&["(0,1)", "(2,3)", "(4,5,6)"])).unwrap(), GroupId::Z2xZ2xZ3);
        // symmetries of a hexagon on 0..5
        assert_eq!(identify_group(&g(&["(0,1,2,3,4,5)", "(1,5)(2,4)"])).unwrap(), GroupId::D6);
        assert_eq!(GroupId::D6.to_string(), "D6(order 12)");
    }

    #[test]
    fn cap() {
        let s6 = PermGroup::new(6, vec![p("(0,1)", 6), p("(0,1,2,3,4,5)", 6)]).unwrap();
        assert!(matches!(identify_group_capped(&s6, 100), Err(GroupError::TooLarge { .. })));
    }

    #[test]
    fn orbits() {
        let g = PermGroup::new(6, vec![p("(0,2)", 6), p("(2,4)(1,5)", 6)]).unwrap();
        assert_eq!(g.vertex_orbits(), vec![vec![0, 2, 4], vec![1, 5], vec![3]]);
        assert_eq!(PermGroup::trivial(3).vertex_orbits(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn greedy_generators() {
        let s4 = PermGroup::new(4, vec![p("(0,1)", 4), p("(0,1,2,3)", 4)]).unwrap();
        let elems = s4.elements();
        let g = PermGroup::from_elements(4, &elems);
        assert_eq!(g.order_u64(), 24);
        assert!(g.generators().len() <= 3);
    }
}
