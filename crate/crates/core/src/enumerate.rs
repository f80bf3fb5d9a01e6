//! Isomorph-free enumeration of semi-equivelar maps by completing vertex
//! links one face at a time.
//!
//! The search starts from the full star of vertex 0 (or, for cross-checks,
//! from a single face) and repeatedly picks the open vertex with the fewest
//! missing faces, takes the smallest neighbor `u` where its partial link has
//! a loose end, and tries every face through the edge `x-u`. A new face's
//! other vertices are existing open vertices or the single smallest unused
//! label. After each face every touched star is checked: its partial link
//! must split into arcs that fit disjointly into the cyclic type, or close up
//! to exactly the type. Complete maps are deduplicated by canonical form.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::EnumError;
use crate::facetype::{face_counts, min_dihedral, FaceSequence};
use crate::iso::canonical_form;
use crate::map::PolyhedralMap;

/// How the search is anchored before branching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    /// Fix the whole star of vertex 0 to one rotation of the type.
    VertexStar,
    /// Fix only one face of the given size on labels `0..size`.
    Face(usize),
}

#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Maximum number of search nodes; `None` is unlimited.
    pub budget: Option<u64>,
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
    pub seed: Seed,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { budget: None, jobs: 0, seed: Seed::VertexStar }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search nodes visited.
    pub nodes: u64,
    /// Complete labeled maps reached before deduplication.
    pub labeled_solutions: u64,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone)]
pub struct CensusResult {
    pub face_type: FaceSequence,
    pub n_vertices: usize,
    /// One canonically labeled map per isomorphism class, sorted by encoding.
    pub representatives: Vec<PolyhedralMap>,
    pub stats: SearchStats,
}

/// All SEMs of type `t` on `v` vertices up to isomorphism.
pub fn enumerate_sems(t: &FaceSequence, v: usize, budget: Option<u64>) -> Result<CensusResult, EnumError> {
    enumerate_with(t, v, &EnumOptions { budget, ..EnumOptions::default() })
}

pub fn enumerate_with(t: &FaceSequence, v: usize, opts: &EnumOptions) -> Result<CensusResult, EnumError> {
    let started = Instant::now();
    let empty = |nodes| CensusResult {
        face_type: t.clone(),
        n_vertices: v,
        representatives: Vec::new(),
        stats: SearchStats { nodes, labeled_solutions: 0, elapsed_ms: started.elapsed().as_millis() },
    };
    let Ok(counts) = face_counts(t, v) else { return Ok(empty(0)) };
    // a star holds 1 + sum(a_i - 2) distinct vertices
    if v < 3 || t.link_size() + 1 > v {
        return Ok(empty(0));
    }
    if let Seed::Face(a) = opts.seed {
        if !counts.contains_key(&a) {
            return Ok(empty(0));
        }
    }

    let mut size_left = vec![0usize; v + 1];
    for (&a, &f) in &counts {
        size_left[a] = f;
    }
    let ctx = Ctx {
        n: v,
        t: t.entries().to_vec(),
        canon_t: t.entries().to_vec(),
        sizes: counts.keys().copied().collect(),
        budget: opts.budget,
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
    };
    let mut root = State::new(v, size_left);
    let mut cache = HashMap::new();
    let seeded = match opts.seed {
        Seed::VertexStar => seed_star(&ctx, &mut root, &mut cache),
        Seed::Face(a) => root.try_add(&ctx, (0..a).collect(), &mut cache),
    };
    let mut found = BTreeSet::new();
    let mut labeled = 0u64;
    if seeded {
        let jobs = if opts.jobs == 0 { rayon::current_num_threads() } else { opts.jobs };
        let mut first = Harvest::default();
        let frontier = split(&ctx, root, jobs * 8, &mut cache, &mut first);
        found = first.found;
        labeled = first.labeled;
        let run = || {
            frontier
                .into_par_iter()
                .map_init(HashMap::new, |cache, mut st| {
                    let mut out = Harvest::default();
                    search(&ctx, &mut st, cache, &mut out);
                    out
                })
                .collect::<Vec<_>>()
        };
        let parts = if jobs == rayon::current_num_threads() {
            run()
        } else {
            match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                Ok(pool) => pool.install(run),
                Err(_) => run(),
            }
        };
        for h in parts {
            found.extend(h.found);
            labeled += h.labeled;
        }
    }
    let stats = SearchStats {
        nodes: ctx.nodes.load(Ordering::Relaxed),
        labeled_solutions: labeled,
        elapsed_ms: started.elapsed().as_millis(),
    };
    if ctx.abort.load(Ordering::Relaxed) {
        return Err(EnumError::BudgetExhausted(stats));
    }
    Ok(CensusResult {
        face_type: t.clone(),
        n_vertices: v,
        representatives: found.into_iter().map(|enc| PolyhedralMap::new(v, enc)).collect(),
        stats,
    })
}

/// Outcome of one cell of a sweep.
#[derive(Debug, Clone)]
pub enum CellOutcome {
    Count(usize),
    BudgetExhausted(SearchStats),
}

#[derive(Debug, Clone)]
pub struct SweepCell {
    pub n_vertices: usize,
    pub face_type: FaceSequence,
    pub outcome: CellOutcome,
}

/// Class counts for every arithmetically admissible type on `v <= v_max`
/// vertices with Euler characteristic `chi`.
pub fn sweep(v_max: usize, chi: i64, opts: &EnumOptions) -> Vec<SweepCell> {
    let mut out = Vec::new();
    for v in 1..=v_max {
        for t in crate::facetype::admissible_types(v, chi) {
            let outcome = match enumerate_with(&t, v, opts) {
                Ok(r) => CellOutcome::Count(r.representatives.len()),
                Err(EnumError::BudgetExhausted(s)) => CellOutcome::BudgetExhausted(s),
            };
            out.push(SweepCell { n_vertices: v, face_type: t, outcome });
        }
    }
    out
}

struct Ctx {
    n: usize,
    t: Vec<usize>,
    canon_t: Vec<usize>,
    sizes: Vec<usize>,
    budget: Option<u64>,
    nodes: AtomicU64,
    abort: AtomicBool,
}

impl Ctx {
    fn d(&self) -> usize {
        self.t.len()
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.abort.load(Ordering::Relaxed) {
            return false;
        }
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.budget {
            if k > b {
                self.abort.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Star {
    Bad,
    Open,
    Closed,
}

/// Partial map under construction.
#[derive(Debug, Clone)]
struct State {
    n: usize,
    faces: Vec<Vec<usize>>,
    vfaces: Vec<Vec<usize>>,
    ecount: Vec<u8>,
    size_left: Vec<usize>,
    used: usize,
    closed: Vec<bool>,
}

type Cache = HashMap<Vec<usize>, bool>;

impl State {
    fn new(n: usize, size_left: Vec<usize>) -> Self {
        State {
            n,
            faces: Vec::new(),
            vfaces: vec![Vec::new(); n],
            ecount: vec![0; n * n],
            size_left,
            used: 0,
            closed: vec![false; n],
        }
    }

    fn ec(&self, a: usize, b: usize) -> u8 {
        self.ecount[a * self.n + b]
    }

    fn bump(&mut self, a: usize, b: usize, up: bool) {
        let n = self.n;
        if up {
            self.ecount[a * n + b] += 1;
            self.ecount[b * n + a] += 1;
        } else {
            self.ecount[a * n + b] -= 1;
            self.ecount[b * n + a] -= 1;
        }
    }

    /// Polyhedral checks for a candidate face against the current faces.
    fn admissible(&self, face: &[usize]) -> bool {
        let k = face.len();
        if self.size_left.get(k).copied().unwrap_or(0) == 0 {
            return false;
        }
        for i in 0..k {
            if self.ec(face[i], face[(i + 1) % k]) >= 2 {
                return false;
            }
        }
        let mut seen: Vec<usize> = Vec::new();
        for &x in face {
            for &g in &self.vfaces[x] {
                if seen.contains(&g) {
                    continue;
                }
                seen.push(g);
                let other = &self.faces[g];
                let common: Vec<usize> = face.iter().copied().filter(|y| other.contains(y)).collect();
                match common.len() {
                    0 | 1 => {}
                    2 => {
                        let (a, b) = (common[0], common[1]);
                        if !crate::map::adjacent_in(face, a, b) || !crate::map::adjacent_in(other, a, b) {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    fn push_face(&mut self, face: Vec<usize>) {
        let k = face.len();
        let id = self.faces.len();
        for i in 0..k {
            self.bump(face[i], face[(i + 1) % k], true);
        }
        for &x in &face {
            self.vfaces[x].push(id);
            if x >= self.used {
                self.used = x + 1;
            }
        }
        self.size_left[k] -= 1;
        self.faces.push(face);
    }

    fn pop_face(&mut self, used_before: usize) {
        let face = self.faces.pop().expect("face to pop");
        let k = face.len();
        for i in 0..k {
            self.bump(face[i], face[(i + 1) % k], false);
        }
        for &x in &face {
            self.vfaces[x].pop();
        }
        self.size_left[k] += 1;
        self.used = used_before;
    }

    /// Adds `face` if it passes every check, updating closed flags.
    fn try_add(&mut self, ctx: &Ctx, face: Vec<usize>, cache: &mut Cache) -> bool {
        if !self.admissible(&face) {
            return false;
        }
        let used_before = self.used;
        let verts = face.clone();
        self.push_face(face);
        let mut status = Vec::with_capacity(verts.len());
        for &x in &verts {
            let s = self.star(ctx, x, cache);
            if s == Star::Bad {
                self.pop_face(used_before);
                return false;
            }
            status.push(s);
        }
        for (&x, s) in verts.iter().zip(status) {
            self.closed[x] = s == Star::Closed;
        }
        true
    }

    fn remove_last(&mut self, used_before: usize) {
        let verts = self.faces.last().expect("face").clone();
        self.pop_face(used_before);
        for x in verts {
            self.closed[x] = false;
        }
    }

    /// Classifies the partial link of `x`.
    fn star(&self, ctx: &Ctx, x: usize, cache: &mut Cache) -> Star {
        let d = ctx.d();
        let fs = &self.vfaces[x];
        if fs.len() > d {
            return Star::Bad;
        }
        // link edges p -- q labeled by face size
        let mut ends: Vec<(usize, usize, usize)> = Vec::with_capacity(fs.len());
        for &g in fs {
            let f = &self.faces[g];
            let k = f.len();
            let pos = f.iter().position(|&y| y == x).expect("incident");
            ends.push((f[(pos + k - 1) % k], f[(pos + 1) % k], k));
        }
        let m = ends.len();
        let deg = |y: usize| ends.iter().filter(|e| e.0 == y || e.1 == y).count();
        let mut used = vec![false; m];
        let mut arcs: Vec<Vec<usize>> = Vec::new();
        // open arcs start at a neighbor with one link edge
        let mut starts: Vec<usize> = ends.iter().flat_map(|e| [e.0, e.1]).filter(|&y| deg(y) == 1).collect();
        starts.sort_unstable();
        starts.dedup();
        for s in starts {
            if ends.iter().enumerate().any(|(i, e)| used[i] && (e.0 == s || e.1 == s)) {
                continue;
            }
            let mut arc = Vec::new();
            let mut at = s;
            while let Some(i) = (0..m).find(|&i| !used[i] && (ends[i].0 == at || ends[i].1 == at)) {
                used[i] = true;
                arc.push(ends[i].2);
                at = if ends[i].0 == at { ends[i].1 } else { ends[i].0 };
            }
            arcs.push(arc);
        }
        if used.iter().any(|&u| !u) {
            // what is left is a cycle; it must be the whole star
            if !arcs.is_empty() || m != d {
                return Star::Bad;
            }
            let mut cyc = Vec::with_capacity(m);
            let mut at = ends[0].0;
            let mut seen = vec![false; m];
            while let Some(i) = (0..m).find(|&i| !seen[i] && (ends[i].0 == at || ends[i].1 == at)) {
                seen[i] = true;
                cyc.push(ends[i].2);
                at = if ends[i].0 == at { ends[i].1 } else { ends[i].0 };
            }
            if cyc.len() != m {
                return Star::Bad;
            }
            return if min_dihedral(&cyc) == ctx.canon_t { Star::Closed } else { Star::Bad };
        }
        let mut key: Vec<usize> = Vec::new();
        let mut canon: Vec<Vec<usize>> = arcs
            .iter()
            .map(|a| {
                let r: Vec<usize> = a.iter().rev().copied().collect();
                if r < *a {
                    r
                } else {
                    a.clone()
                }
            })
            .collect();
        canon.sort();
        for a in &canon {
            key.push(a.len());
            key.extend_from_slice(a);
        }
        if let Some(&ok) = cache.get(&key) {
            return if ok { Star::Open } else { Star::Bad };
        }
        let ok = embeds(&ctx.t, &canon);
        cache.insert(key, ok);
        if ok {
            Star::Open
        } else {
            Star::Bad
        }
    }

    /// The most constrained open vertex and the smallest loose end of its
    /// link.
    fn branch_point(&self, ctx: &Ctx) -> Option<(usize, usize)> {
        let d = ctx.d();
        let mut best: Option<(usize, usize)> = None;
        for x in 0..self.used {
            if self.closed[x] || self.vfaces[x].is_empty() {
                continue;
            }
            let missing = d - self.vfaces[x].len();
            if best.is_none_or(|(m, _)| missing < m) {
                best = Some((missing, x));
            }
        }
        let (_, x) = best?;
        let mut loose = usize::MAX;
        for &g in &self.vfaces[x] {
            let f = &self.faces[g];
            let k = f.len();
            let pos = f.iter().position(|&y| y == x).expect("incident");
            for y in [f[(pos + k - 1) % k], f[(pos + 1) % k]] {
                if self.ec(x, y) == 1 && y < loose {
                    loose = y;
                }
            }
        }
        Some((x, loose))
    }

    fn is_complete(&self, ctx: &Ctx) -> bool {
        self.used == ctx.n && (0..ctx.n).all(|x| self.closed[x])
    }
}

/// Whether the arcs fit into the cyclic sequence `t` at disjoint positions
/// with at least one free slot between consecutive arcs. Arcs may be read
/// in either direction.
fn embeds(t: &[usize], arcs: &[Vec<usize>]) -> bool {
    fn place(t: &[usize], arcs: &[Vec<usize>], i: usize, occupied: u64, blocked: u64) -> bool {
        if i == arcs.len() {
            return true;
        }
        let d = t.len();
        let arc = &arcs[i];
        let l = arc.len();
        for s in 0..d {
            for rev in [false, true] {
                let mut occ = occupied;
                let mut fits = true;
                for j in 0..l {
                    let p = (s + j) % d;
                    let want = if rev { arc[l - 1 - j] } else { arc[j] };
                    if t[p] != want || (occ | blocked) & (1 << p) != 0 {
                        fits = false;
                        break;
                    }
                    occ |= 1 << p;
                }
                if !fits {
                    continue;
                }
                let before = (s + d - 1) % d;
                let after = (s + l) % d;
                if occupied & ((1 << before) | (1 << after)) != 0 {
                    continue;
                }
                let blk = blocked | (1 << before) | (1 << after);
                if place(t, arcs, i + 1, occ, blk) {
                    return true;
                }
            }
        }
        false
    }
    let total: usize = arcs.iter().map(|a| a.len()).sum();
    if t.len() > 63 || total + arcs.len() > t.len() {
        return false;
    }
    place(t, arcs, 0, 0, 0)
}

/// Places the star of vertex 0: faces `[0, u_i, ..., u_{i+1}]` with labels
/// handed out in order around the link.
fn seed_star(ctx: &Ctx, st: &mut State, cache: &mut Cache) -> bool {
    let d = ctx.d();
    let mut next = 2;
    let first = 1;
    let mut u = first;
    for (i, &a) in ctx.t.iter().enumerate() {
        let mut face = vec![0, u];
        for _ in 0..a - 3 {
            face.push(next);
            next += 1;
        }
        let w = if i + 1 == d {
            first
        } else {
            let w = next;
            next += 1;
            w
        };
        face.push(w);
        if !st.try_add(ctx, face, cache) {
            return false;
        }
        u = w;
    }
    true
}

#[derive(Default)]
struct Harvest {
    found: BTreeSet<Vec<Vec<usize>>>,
    labeled: u64,
}

impl Harvest {
    fn take(&mut self, ctx: &Ctx, st: &State) {
        self.labeled += 1;
        let m = PolyhedralMap::new(ctx.n, st.faces.clone());
        if let Some(cf) = canonical_form(&m) {
            self.found.insert(cf.encoding);
        }
    }
}

fn search(ctx: &Ctx, st: &mut State, cache: &mut Cache, out: &mut Harvest) {
    if !ctx.tick() {
        return;
    }
    let Some((x, u)) = st.branch_point(ctx) else {
        if st.is_complete(ctx) {
            out.take(ctx, st);
        }
        return;
    };
    for_each_face(ctx, st, cache, x, u, &mut |st, cache| search(ctx, st, cache, out));
}

/// Calls `f` once for every admissible face through the edge `x-u` that
/// extends the partial map, with the face added; removes it afterwards.
fn for_each_face(
    ctx: &Ctx,
    st: &mut State,
    cache: &mut Cache,
    x: usize,
    u: usize,
    f: &mut dyn FnMut(&mut State, &mut Cache),
) {
    for &k in &ctx.sizes {
        if st.size_left[k] == 0 {
            continue;
        }
        let mut face = Vec::with_capacity(k);
        face.push(x);
        face.push(u);
        fill(ctx, st, cache, k, &mut face, f);
    }
}

fn fill(
    ctx: &Ctx,
    st: &mut State,
    cache: &mut Cache,
    k: usize,
    face: &mut Vec<usize>,
    f: &mut dyn FnMut(&mut State, &mut Cache),
) {
    let d = ctx.d();
    if face.len() == k {
        let used_before = st.used;
        if st.try_add(ctx, face.clone(), cache) {
            f(st, cache);
            st.remove_last(used_before);
        }
        return;
    }
    let prev = *face.last().expect("nonempty");
    let last = face.len() + 1 == k;
    let x = face[0];
    // the single smallest unused label stands for every fresh vertex
    let fresh = face.iter().copied().filter(|&y| y >= st.used).max().map_or(st.used, |m| m + 1);
    let limit = fresh.min(ctx.n - 1);
    for y in 0..=limit {
        if face.contains(&y) {
            continue;
        }
        if y < st.used {
            if st.closed[y] || st.vfaces[y].len() >= d || st.ec(prev, y) >= 2 {
                continue;
            }
            if last && st.ec(y, x) >= 2 {
                continue;
            }
        } else if y != fresh {
            continue;
        }
        face.push(y);
        fill(ctx, st, cache, k, face, f);
        face.pop();
    }
}

/// Expands the tree breadth-first until there are at least `target` open
/// nodes, harvesting any complete maps met on the way.
fn split(
    ctx: &Ctx,
    root: State,
    target: usize,
    cache: &mut Cache,
    out: &mut Harvest,
) -> Vec<State> {
    let mut frontier = vec![root];
    for _ in 0..4 {
        if frontier.len() >= target || frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for mut st in frontier {
            if !ctx.tick() {
                return Vec::new();
            }
            match st.branch_point(ctx) {
                None => {
                    if st.is_complete(ctx) {
                        out.take(ctx, &st);
                    }
                }
                Some((x, u)) => {
                    for_each_face(ctx, &mut st, cache, x, u, &mut |child, _| next.push(child.clone()));
                }
            }
        }
        frontier = next;
    }
    // the nodes of the last level are counted when the workers visit them
    frontier
}
