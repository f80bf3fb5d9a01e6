//! Face-sequence types and the Euler arithmetic that decides which types can
//! possibly occur for a given vertex count and Euler characteristic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::TypeError;

/// Cyclic sequence of face sizes around a vertex, stored as the
/// lexicographically least rotation or reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceSequence {
    entries: Vec<usize>,
}

impl FaceSequence {
    /// Canonicalizes `raw`. Rejects sequences shorter than 3 or with an entry
    /// below 3.
    pub fn canonicalize(raw: &[usize]) -> Result<Self, TypeError> {
        if raw.len() < 3 {
            return Err(TypeError::TooShort(raw.len()));
        }
        if let Some(&a) = raw.iter().find(|&&a| a < 3) {
            return Err(TypeError::EntryTooSmall(a));
        }
        Ok(FaceSequence { entries: min_dihedral(raw) })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of faces around each vertex.
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// Multiplicity of each distinct face size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &a in &self.entries {
            *m.entry(a).or_insert(0) += 1;
        }
        m
    }

    /// Size of the link of a vertex, i.e. the number of vertices in a star
    /// other than its center.
    pub fn link_size(&self) -> usize {
        self.entries.iter().map(|a| a - 2).sum()
    }

    /// Exponent shorthand such as `(3^4,4^2)`; runs are collapsed along the
    /// canonical order.
    pub fn to_exponent_string(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.entries.len() {
            let mut j = i;
            while j < self.entries.len() && self.entries[j] == self.entries[i] {
                j += 1;
            }
            if j - i == 1 {
                parts.push(self.entries[i].to_string());
            } else {
                parts.push(format!("{}^{}", self.entries[i], j - i));
            }
            i = j;
        }
        format!("({})", parts.join(","))
    }
}

/// Lexicographically least rotation of `s` or of its reverse.
pub(crate) fn min_dihedral<T: Ord + Copy>(s: &[T]) -> Vec<T> {
    let n = s.len();
    let mut best: Option<Vec<T>> = None;
    let rev: Vec<T> = s.iter().rev().copied().collect();
    for base in [s, &rev[..]] {
        for r in 0..n {
            let cand: Vec<T> = base[r..].iter().chain(base[..r].iter()).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

impl fmt::Display for FaceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FaceSequence {
    type Err = TypeError;

    /// Accepts "3,4,4,4,4", "3^4,4^2" and the parenthesized forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut raw = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(TypeError::Parse(s.to_string()));
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let a: usize = base.parse().map_err(|_| TypeError::Parse(s.to_string()))?;
            let k: usize = exp.parse().map_err(|_| TypeError::Parse(s.to_string()))?;
            if k == 0 {
                return Err(TypeError::Parse(s.to_string()));
            }
            raw.extend(std::iter::repeat_n(a, k));
        }
        FaceSequence::canonicalize(&raw)
    }
}

impl serde::Serialize for FaceSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for FaceSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Number of faces of each size in a map of type `t` on `v` vertices:
/// `f_a = v * n_a / a`.
pub fn face_counts(t: &FaceSequence, v: usize) -> Result<BTreeMap<usize, usize>, TypeError> {
    let mut out = BTreeMap::new();
    for (a, na) in t.multiplicities() {
        if !(v * na).is_multiple_of(a) {
            return Err(TypeError::NonIntegral { gon: a });
        }
        out.insert(a, v * na / a);
    }
    Ok(out)
}

/// Exact Euler characteristic `v - v*d/2 + sum f_a` of a map of type `t`.
pub fn euler_of_type(t: &FaceSequence, v: usize) -> Result<Ratio<i64>, TypeError> {
    let counts = face_counts(t, v)?;
    let faces: i64 = counts.values().map(|&f| f as i64).sum();
    let v = v as i64;
    Ok(Ratio::from_integer(v) - Ratio::new(v * t.degree() as i64, 2) + Ratio::from_integer(faces))
}

/// All canonical face sequences with entries in `3..=v` whose Euler arithmetic
/// on `v` vertices is integral and equals `chi`. Distinct cyclic arrangements
/// of one multiset are distinct entries. Sorted by canonical order.
pub fn admissible_types(v: usize, chi: i64) -> Vec<FaceSequence> {
    if v < 3 {
        return Vec::new();
    }
    // chi/v = 1 - d/2 + sum 1/a_i <= 1 - d/6, so d <= 6 (v - chi) / v.
    let num = 6 * (v as i64 - chi);
    if num < 0 {
        return Vec::new();
    }
    let d_max = (num / v as i64) as usize;
    let mut out = BTreeSet::new();
    for d in 3..=d_max {
        // sum 1/a_i must equal chi/v - 1 + d/2.
        let target = Ratio::new(chi, v as i64) - Ratio::from_integer(1) + Ratio::new(d as i64, 2);
        if target <= Ratio::zero() {
            continue;
        }
        let mut cur = Vec::with_capacity(d);
        multisets(v, d, 3, target, &mut cur, &mut |ms| {
            let t = FaceSequence::canonicalize(ms).expect("entries >= 3");
            if face_counts(&t, v).is_err() {
                return;
            }
            for arr in arrangements(ms) {
                out.insert(arr);
            }
        });
    }
    out.into_iter().collect()
}

fn multisets(
    v: usize,
    remaining: usize,
    min_a: usize,
    target: Ratio<i64>,
    cur: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        if target.is_zero() {
            emit(cur);
        }
        return;
    }
    let k = remaining as i64;
    for a in min_a..=v {
        let share = Ratio::new(1, a as i64);
        // every later entry is >= a, so each contributes at most 1/a
        if share * k < target {
            break;
        }
        // and at least 1/v
        if Ratio::new(k, v as i64) > target {
            break;
        }
        cur.push(a);
        multisets(v, remaining - 1, a, target - share, cur, emit);
        cur.pop();
    }
}

/// Distinct cyclic arrangements (up to rotation and reflection) of a multiset.
fn arrangements(ms: &[usize]) -> BTreeSet<FaceSequence> {
    let mut out = BTreeSet::new();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &a in ms {
        *counts.entry(a).or_insert(0) += 1;
    }
    let mut cur = Vec::with_capacity(ms.len());
    fn rec(
        counts: &mut BTreeMap<usize, usize>,
        len: usize,
        cur: &mut Vec<usize>,
        out: &mut BTreeSet<FaceSequence>,
    ) {
        if cur.len() == len {
            out.insert(FaceSequence::canonicalize(cur).expect("entries >= 3"));
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&a, _)| a).collect();
        for a in keys {
            *counts.get_mut(&a).unwrap() -= 1;
            cur.push(a);
            rec(counts, len, cur, out);
            cur.pop();
            *counts.get_mut(&a).unwrap() += 1;
        }
    }
    // fixing the first entry to the smallest size loses no rotation class
    let first = ms.iter().copied().min().unwrap_or(3);
    *counts.get_mut(&first).unwrap() -= 1;
    cur.push(first);
    rec(&mut counts, ms.len(), &mut cur, &mut out);
    out
}

/// Integer value of `euler_of_type` when it is integral.
pub fn integral_euler(t: &FaceSequence, v: usize) -> Option<i64> {
    let r = euler_of_type(t, v).ok()?;
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FaceSequence {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_and_reflection() {
        assert_eq!(FaceSequence::canonicalize(&[4, 3, 4, 4, 4]).unwrap().to_string(), "3,4,4,4,4");
        let a = FaceSequence::canonicalize(&[3, 4, 3, 3, 4, 3]).unwrap();
        let b = FaceSequence::canonicalize(&[3, 4, 3, 3, 4, 3].iter().rev().copied().collect::<Vec<_>>())
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(fs("3^3,4,3,4").to_string(), "3,3,3,4,3,4");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FaceSequence::canonicalize(&[3, 4]), Err(TypeError::TooShort(2))));
        assert!(matches!(FaceSequence::canonicalize(&[3, 2, 4]), Err(TypeError::EntryTooSmall(2))));
        assert!("3,x,4".parse::<FaceSequence>().is_err());
        assert!("".parse::<FaceSequence>().is_err());
    }

    #[test]
    fn exponent_forms() {
        assert_eq!(fs("(3^4,4^2)").to_string(), "3,3,3,3,4,4");
        assert_eq!(fs("3,4,4,4,4").to_exponent_string(), "(3,4^4)");
        assert_eq!(fs("3^3,4,3,4").to_exponent_string(), "(3^3,4,3,4)");
    }

    #[test]
    fn counts() {
        let c = face_counts(&fs("3,4,4,4,4"), 12).unwrap();
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(3, 4), (4, 12)]);
        let c = face_counts(&fs("3^7"), 12).unwrap();
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(3, 28)]);
        assert!(matches!(face_counts(&fs("5,5,5"), 12), Err(TypeError::NonIntegral { gon: 5 })));
    }

    #[test]
    fn euler() {
        assert_eq!(euler_of_type(&fs("3,4,4,4,4"), 12).unwrap(), Ratio::from_integer(-2));
        assert_eq!(euler_of_type(&fs("3,3,3"), 4).unwrap(), Ratio::from_integer(2));
        assert_eq!(euler_of_type(&fs("3^4,4^2"), 12).unwrap(), Ratio::from_integer(-2));
        assert!(euler_of_type(&fs("5,5,5"), 12).is_err());
    }

    #[test]
    fn admissible_small() {
        let t = admissible_types(4, 2);
        assert!(t.contains(&fs("3,3,3")));
        let t = admissible_types(12, -2);
        for s in ["3^2,4^2,6", "3^3,6^2", "4^2,6^2", "3^7", "3^4,4^2", "3^3,4,3,4", "3,4^4", "3,6,6,6"] {
            assert!(t.contains(&fs(s)), "{s}");
        }
    }
}
