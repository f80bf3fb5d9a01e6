//! Test-side oracles. Nothing here calls into the engine's validation,
//! canonical form or group code, so agreement is a real cross-check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;

pub type Faces = Vec<Vec<usize>>;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// Least rotation/reflection of a cyclic face.
pub fn rot_min(f: &[usize]) -> Vec<usize> {
    let k = f.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..k {
        for dir in [1isize, -1] {
            let c: Vec<usize> = (0..k).map(|i| f[((s as isize + dir * i as isize).rem_euclid(k as isize)) as usize]).collect();
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn face_set(faces: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    faces.iter().map(|f| rot_min(f)).collect()
}

pub fn relabel(faces: &[Vec<usize>], p: &[usize]) -> Faces {
    faces.iter().map(|f| f.iter().map(|&x| p[x]).collect()).collect()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Calls `f` on every permutation of `0..n`, stopping early if it returns true.
pub fn any_perm(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(p: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if p.len() == n {
            return f(p);
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                p.push(x);
                if rec(p, used, n, f) {
                    return true;
                }
                p.pop();
                used[x] = false;
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], n, &mut f)
}

/// Factorial-time isomorphism test.
pub fn brute_isomorphic(n: usize, a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target = face_set(b);
    any_perm(n, |p| face_set(&relabel(a, p)) == target)
}

/// Factorial-time automorphism count.
pub fn brute_aut_count(n: usize, faces: &[Vec<usize>]) -> usize {
    let target = face_set(faces);
    let mut count = 0;
    any_perm(n, |p| {
        if face_set(&relabel(faces, p)) == target {
            count += 1;
        }
        false
    });
    count
}

/// Factorial-time canonical key: least sorted face set over all relabelings.
pub fn brute_key(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut best: Option<Vec<Vec<usize>>> = None;
    any_perm(n, |p| {
        let k: Vec<Vec<usize>> = face_set(&relabel(faces, p)).into_iter().collect();
        if best.as_ref().is_none_or(|b| k < *b) {
            best = Some(k);
        }
        false
    });
    best.unwrap_or_default()
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Independent polyhedral-map check: every edge on two faces, faces meet in
/// nothing, a vertex or a common edge, every vertex link one cycle, and the
/// map connected. Returns each vertex's cyclic face-size sequence.
pub fn polyhedral_sequences(n: usize, faces: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in faces {
        let k = f.len();
        if k < 3 || f.iter().collect::<BTreeSet<_>>().len() != k || f.iter().any(|&x| x >= n) {
            return None;
        }
        for i in 0..k {
            *edges.entry(edge(f[i], f[(i + 1) % k])).or_default() += 1;
        }
    }
    if edges.values().any(|&c| c != 2) {
        return None;
    }
    for (i, f) in faces.iter().enumerate() {
        for g in &faces[i + 1..] {
            let common: Vec<usize> = f.iter().copied().filter(|x| g.contains(x)).collect();
            match common.len() {
                0 | 1 => {}
                2 => {
                    let e = edge(common[0], common[1]);
                    let on = |h: &Vec<usize>| (0..h.len()).any(|j| edge(h[j], h[(j + 1) % h.len()]) == e);
                    if !on(f) || !on(g) {
                        return None;
                    }
                }
                _ => return None,
            }
        }
    }
    let mut seqs = Vec::with_capacity(n);
    for v in 0..n {
        // faces at v as (size, left neighbour, right neighbour)
        let star: Vec<(usize, usize, usize)> = faces
            .iter()
            .filter_map(|f| {
                let k = f.len();
                let p = f.iter().position(|&x| x == v)?;
                Some((k, f[(p + k - 1) % k], f[(p + 1) % k]))
            })
            .collect();
        if star.len() < 3 {
            return None;
        }
        let mut seq = vec![star[0].0];
        let mut used = vec![false; star.len()];
        used[0] = true;
        let (start, mut cur) = (star[0].1, star[0].2);
        while cur != start {
            let i = (0..star.len()).find(|&i| !used[i] && (star[i].1 == cur || star[i].2 == cur))?;
            used[i] = true;
            seq.push(star[i].0);
            cur = if star[i].1 == cur { star[i].2 } else { star[i].1 };
        }
        if used.iter().any(|u| !u) {
            return None;
        }
        seqs.push(seq);
    }
    // connectivity over edges
    let mut seen = vec![false; n];
    let mut q = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = q.pop_front() {
        for &(a, b) in edges.keys() {
            let y = if a == x { b } else if b == x { a } else { continue };
            if !seen[y] {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    seen.iter().all(|&s| s).then_some(seqs)
}

/// True if `seq` equals `t` up to rotation and reflection.
pub fn same_cyclic(seq: &[usize], t: &[usize]) -> bool {
    seq.len() == t.len() && rot_min(seq) == rot_min(t)
}

pub fn euler(n: usize, faces: &[Vec<usize>]) -> i64 {
    let mut e = BTreeSet::new();
    for f in faces {
        for i in 0..f.len() {
            e.insert(edge(f[i], f[(i + 1) % f.len()]));
        }
    }
    n as i64 - e.len() as i64 + faces.len() as i64
}

/// All cyclic faces of size `a` on `0..n`, one per rotation/reflection class.
fn all_faces(n: usize, a: usize) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut cur = Vec::new();
    fn rec(n: usize, a: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if cur.len() == a {
            out.insert(rot_min(cur));
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, a, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, a, &mut cur, &mut out);
    out.into_iter().collect()
}

/// Necessary conditions for adding `f`: no edge on a third face and no two
/// faces sharing three vertices.
fn compatible(chosen: &[Vec<usize>], f: &[usize]) -> bool {
    let k = f.len();
    for i in 0..k {
        let e = edge(f[i], f[(i + 1) % k]);
        let on = chosen
            .iter()
            .filter(|g| (0..g.len()).any(|j| edge(g[j], g[(j + 1) % g.len()]) == e))
            .count();
        if on >= 2 {
            return false;
        }
    }
    chosen.iter().all(|g| g.iter().filter(|x| f.contains(x)).count() <= 2)
}

/// Isomorphism classes of maps of cyclic type `t` on `n` vertices, by
/// choosing face sets with the right per-vertex face counts and checking
/// them with `polyhedral_sequences`. Only practical for `n <= 6`.
pub fn brute_census(t: &[usize], n: usize) -> usize {
    let mut per_vertex: BTreeMap<usize, usize> = BTreeMap::new();
    for &a in t {
        *per_vertex.entry(a).or_default() += 1;
    }
    let mut need: Vec<(usize, usize)> = Vec::new();
    for (&a, &m) in &per_vertex {
        if !(n * m).is_multiple_of(a) {
            return 0;
        }
        need.push((a, n * m / a));
    }
    let pools: Vec<Vec<Vec<usize>>> = need.iter().map(|&(a, _)| all_faces(n, a)).collect();
    let mut classes = BTreeSet::new();
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![vec![0usize; n]; need.len()];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        kind: usize,
        from: usize,
        left: usize,
        need: &[(usize, usize)],
        per_vertex: &BTreeMap<usize, usize>,
        pools: &[Vec<Vec<usize>>],
        counts: &mut Vec<Vec<usize>>,
        chosen: &mut Vec<Vec<usize>>,
        t: &[usize],
        n: usize,
        classes: &mut BTreeSet<Vec<Vec<usize>>>,
    ) {
        if kind == need.len() {
            if let Some(seqs) = polyhedral_sequences(n, chosen) {
                if seqs.iter().all(|s| same_cyclic(s, t)) {
                    classes.insert(brute_key(n, chosen));
                }
            }
            return;
        }
        if left == 0 {
            let cap = per_vertex[&need[kind].0];
            if counts[kind].iter().all(|&c| c == cap) {
                let next = need.get(kind + 1).map_or(0, |x| x.1);
                rec(kind + 1, 0, next, need, per_vertex, pools, counts, chosen, t, n, classes);
            }
            return;
        }
        let cap = per_vertex[&need[kind].0];
        for i in from..pools[kind].len() {
            let f = &pools[kind][i];
            if f.iter().any(|&x| counts[kind][x] == cap) || !compatible(chosen, f) {
                continue;
            }
            // the least vertex still short of faces of this size must be covered now
            if let Some(v) = (0..n).find(|&v| counts[kind][v] < cap) {
                if f[0] > v {
                    break;
                }
            }
            for &x in f {
                counts[kind][x] += 1;
            }
            chosen.push(f.clone());
            rec(kind, i + 1, left - 1, need, per_vertex, pools, counts, chosen, t, n, classes);
            chosen.pop();
            for &x in f {
                counts[kind][x] -= 1;
            }
        }
    }
    let first = need[0].1;
    rec(0, 0, first, &need, &per_vertex, &pools, &mut counts, &mut chosen, t, n, &mut classes);
    classes.len()
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// The group generated by `gens`, by closure under composition.
pub fn closure(n: usize, gens: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut q = VecDeque::from([id]);
    while let Some(g) = q.pop_front() {
        for h in gens {
            let gh: Vec<usize> = (0..n).map(|x| h[g[x]]).collect();
            if seen.insert(gh.clone()) {
                q.push_back(gh);
            }
        }
    }
    seen
}

/// Parses `(0,1,2)(3,4)` into images on `0..n`.
pub fn cycles(s: &str, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for c in s.split(')').filter(|c| !c.trim().is_empty()) {
        let xs: Vec<usize> = c.trim_start_matches('(').split(',').map(|x| x.trim().parse().unwrap()).collect();
        for i in 0..xs.len() {
            p[xs[i]] = xs[(i + 1) % xs.len()];
        }
    }
    p
}

/// Orbit count by Burnside's lemma: average number of fixed objects.
pub fn burnside<T: Ord + Clone>(group: &BTreeSet<Vec<usize>>, objects: &[T], act: impl Fn(&[usize], &T) -> T) -> usize {
    let fixed: usize = group.iter().map(|g| objects.iter().filter(|o| act(g, o) == **o).count()).sum();
    assert_eq!(fixed % group.len(), 0, "Burnside average must be integral");
    fixed / group.len()
}

pub fn element_order(g: &[usize]) -> usize {
    let n = g.len();
    let mut cur: Vec<usize> = g.to_vec();
    let id: Vec<usize> = (0..n).collect();
    let mut k = 1;
    while cur != id {
        cur = (0..n).map(|x| g[cur[x]]).collect();
        k += 1;
    }
    k
}

/// Orientability by propagating face directions across shared edges: a
/// neighbour must traverse the common edge the other way.
pub fn orientable(faces: &[Vec<usize>]) -> bool {
    let directed = |f: &[usize], flip: bool| -> Vec<(usize, usize)> {
        let k = f.len();
        (0..k).map(|i| if flip { (f[(i + 1) % k], f[i]) } else { (f[i], f[(i + 1) % k]) }).collect()
    };
    let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
    for start in 0..faces.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut q = VecDeque::from([start]);
        while let Some(i) = q.pop_front() {
            let mine = directed(&faces[i], flip[i].unwrap());
            for j in 0..faces.len() {
                if j == i {
                    continue;
                }
                for fj in [false, true] {
                    let theirs = directed(&faces[j], fj);
                    let clash = mine.iter().any(|e| theirs.contains(e));
                    let shares = mine.iter().any(|&(a, b)| theirs.contains(&(b, a)) || theirs.contains(&(a, b)));
                    if !shares {
                        break;
                    }
                    if !clash {
                        match flip[j] {
                            None => {
                                flip[j] = Some(fj);
                                q.push_back(j);
                            }
                            Some(x) if x != fj => return false,
                            _ => {}
                        }
                        break;
                    } else if fj {
                        return false;
                    }
                }
            }
        }
    }
    true
}
