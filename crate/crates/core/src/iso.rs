//! Semiring isomorphism: a bijection of carriers fixing the designated
//! elements and commuting with both tables.
//!
//! Search strategy: refine element colors over both structures jointly
//! (distinguishing elements by how their rows interact with the current
//! partition), then backtrack over color-compatible assignments. Every
//! assignment propagates through both tables, so once a generating set is
//! placed the rest of the map is forced.

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

type Signature = (u64, Vec<(u64, u64, u64, u64)>);

fn joint_colors(a: &FiniteSemiring, b: &FiniteSemiring) -> (Vec<u64>, Vec<u64>) {
    let init = |s: &FiniteSemiring| -> Vec<u64> {
        (0..s.order)
            .map(|x| ((x == s.zero) as u64) << 1 | (x == s.one) as u64)
            .collect()
    };
    let mut ca = init(a);
    let mut cb = init(b);
    let mut classes = 0usize;
    for _ in 0..a.order.max(b.order).max(1) {
        let sig_of = |s: &FiniteSemiring, colors: &[u64], x: usize| -> Signature {
            let mut env: Vec<(u64, u64, u64, u64)> = (0..s.order)
                .map(|y| {
                    (
                        colors[y],
                        colors[s.add(x, y)],
                        colors[s.mul(x, y)],
                        colors[s.mul(y, x)],
                    )
                })
                .collect();
            env.sort_unstable();
            (colors[x], env)
        };
        let sigs_a: Vec<Signature> = (0..a.order).map(|x| sig_of(a, &ca, x)).collect();
        let sigs_b: Vec<Signature> = (0..b.order).map(|x| sig_of(b, &cb, x)).collect();
        let mut ids = std::collections::BTreeMap::new();
        for sig in sigs_a.iter().chain(sigs_b.iter()) {
            let next = ids.len() as u64;
            ids.entry(sig.clone()).or_insert(next);
        }
        ca = sigs_a.iter().map(|s| ids[s]).collect();
        cb = sigs_b.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            break;
        }
        classes = ids.len();
    }
    (ca, cb)
}

struct Search<'s> {
    a: &'s FiniteSemiring,
    b: &'s FiniteSemiring,
    ca: Vec<u64>,
    cb: Vec<u64>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl Search<'_> {
    /// Records x -> y and chases every table consequence against elements
    /// already placed. Returns false on any clash; the trail lets the caller
    /// rewind.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if let Some(prev) = self.map[x] {
                if prev != y {
                    return false;
                }
                continue;
            }
            if self.used[y] || self.ca[x] != self.cb[y] {
                return false;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            self.trail.push(x);
            for x2 in 0..self.a.order {
                if let Some(y2) = self.map[x2] {
                    queue.push((self.a.add(x, x2), self.b.add(y, y2)));
                    queue.push((self.a.add(x2, x), self.b.add(y2, y)));
                    queue.push((self.a.mul(x, x2), self.b.mul(y, y2)));
                    queue.push((self.a.mul(x2, x), self.b.mul(y2, y)));
                }
            }
        }
        true
    }

    fn rewind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.map[x].take().unwrap();
            self.used[y] = false;
        }
    }

    fn solve(&mut self) -> bool {
        // Pick the unassigned element with the fewest live candidates.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in 0..self.a.order {
            if self.map[x].is_some() {
                continue;
            }
            let cands: Vec<usize> = (0..self.b.order)
                .filter(|&y| !self.used[y] && self.cb[y] == self.ca[x])
                .collect();
            if cands.is_empty() {
                return false;
            }
            if best.as_ref().map_or(true, |(_, c)| cands.len() < c.len()) {
                best = Some((x, cands));
            }
        }
        let Some((x, cands)) = best else {
            return true;
        };
        for y in cands {
            let mark = self.trail.len();
            if self.assign(x, y) && self.solve() {
                return true;
            }
            self.rewind(mark);
        }
        false
    }
}

/// Finds a table isomorphism from `a` onto `b`, as the image vector
/// `perm[x]`, or None when the structures are not isomorphic.
pub fn find_isomorphism(a: &FiniteSemiring, b: &FiniteSemiring) -> Option<Vec<usize>> {
    if a.order != b.order {
        return None;
    }
    let (ca, cb) = joint_colors(a, b);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return None;
    }
    let mut search = Search {
        a,
        b,
        ca,
        cb,
        map: vec![None; a.order],
        used: vec![false; a.order],
        trail: Vec::new(),
    };
    if !search.assign(a.zero, b.zero) || !search.assign(a.one, b.one) {
        return None;
    }
    if search.solve() {
        Some(search.map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

pub fn are_isomorphic(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Replays a claimed isomorphism: checks `perm` is a bijection carrying
/// zero to zero, one to one, and both tables of `a` onto `b` cell by cell.
pub fn check_isomorphism(a: &FiniteSemiring, b: &FiniteSemiring, perm: &[usize]) -> bool {
    if a.order != b.order || perm.len() != a.order {
        return false;
    }
    let mut seen = vec![false; a.order];
    for &y in perm {
        if y >= a.order || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    if perm[a.zero] != b.zero || perm[a.one] != b.one {
        return false;
    }
    for x in 0..a.order {
        for y in 0..a.order {
            if perm[a.add(x, y)] != b.add(perm[x], perm[y])
                || perm[a.mul(x, y)] != b.mul(perm[x], perm[y])
            {
                return false;
            }
        }
    }
    true
}

/// Relabels a semiring along a permutation: element x becomes perm[x].
pub fn apply_permutation(s: &FiniteSemiring, perm: &[usize]) -> Result<FiniteSemiring> {
    if perm.len() != s.order {
        return Err(Error::Parameter {
            op: "apply_permutation",
            msg: format!("permutation length {} != order {}", perm.len(), s.order),
        });
    }
    let mut seen = vec![false; s.order];
    for &y in perm {
        if y >= s.order || seen[y] {
            return Err(Error::Parameter {
                op: "apply_permutation",
                msg: "not a permutation of the carrier".into(),
            });
        }
        seen[y] = true;
    }
    let mut add = vec![vec![0; s.order]; s.order];
    let mut mul = vec![vec![0; s.order]; s.order];
    for x in 0..s.order {
        for y in 0..s.order {
            add[perm[x]][perm[y]] = perm[s.add(x, y)];
            mul[perm[x]][perm[y]] = perm[s.mul(x, y)];
        }
    }
    let labels = s.labels.as_ref().map(|ls| {
        let mut out = vec![String::new(); s.order];
        for x in 0..s.order {
            out[perm[x]] = ls[x].clone();
        }
        out
    });
    FiniteSemiring::new(s.order, perm[s.zero], perm[s.one], add, mul, labels)
}
