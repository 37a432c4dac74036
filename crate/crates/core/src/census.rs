//! Exhaustive enumeration of commutative semirings of small order with the
//! designated elements normalized to index 0 (zero) and index 1 (one).
//!
//! Two-phase search: addition tables (commutative monoid, identity 0) and
//! multiplication tables (commutative monoid, identity 1, absorbing 0) are
//! enumerated independently with associativity pruning, then joined under
//! the distributivity filter. Work splits across assignments of addition
//! row 1, which is also the checkpoint granularity for long runs.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::decide::{decide, decide_all, Property};
use crate::error::{Error, Result};
use crate::par::{map_vec, Parallelism};
use crate::semiring::FiniteSemiring;

/// Largest order the enumerator accepts at all.
pub const CENSUS_HARD_CAP: usize = 5;
/// Largest order allowed without the explicit long-run opt-in.
pub const CENSUS_DEFAULT_MAX: usize = 4;

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub order: usize,
    /// Valid (add, mul) pairs with zero = 0, one = 1 fixed.
    pub total_tables: u64,
    pub iso_classes: u64,
    /// Property token -> number of iso classes satisfying it.
    pub per_property: BTreeMap<String, u64>,
    /// Canonical forms, sorted by canonical key; pairwise non-isomorphic.
    pub representatives: Vec<FiniteSemiring>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCounts {
    pub total_tables: u64,
    /// Encoded canonical representatives discovered so far.
    pub representatives: Vec<String>,
}

/// Resumable state for long enumerations: how many addition-row-1 work units
/// are already folded into the partial counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub order: usize,
    pub prefix_cursor: usize,
    pub partial_counts: PartialCounts,
}

fn check_order(n: usize, allow_long_run: bool) -> Result<()> {
    let cap = if allow_long_run { CENSUS_HARD_CAP } else { CENSUS_DEFAULT_MAX };
    if n == 0 || n > cap {
        return Err(Error::CensusRange { order: n, cap });
    }
    Ok(())
}

/// Associativity among fully determined triples of a partial symmetric table.
fn partial_assoc_ok(t: &[Vec<usize>], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = t[b][c];
                if bc == UNSET || t[ab][c] == UNSET || t[a][bc] == UNSET {
                    continue;
                }
                if t[ab][c] != t[a][bc] {
                    return false;
                }
            }
        }
    }
    true
}

fn dfs_tables(
    table: &mut Vec<Vec<usize>>,
    cells: &[(usize, usize)],
    idx: usize,
    n: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if idx == cells.len() {
        out.push(table.clone());
        return;
    }
    let (i, j) = cells[idx];
    for v in 0..n {
        table[i][j] = v;
        table[j][i] = v;
        if partial_assoc_ok(table, n) {
            dfs_tables(table, cells, idx + 1, n, out);
        }
    }
    table[i][j] = UNSET;
    table[j][i] = UNSET;
}

/// All commutative monoid tables on {0..n-1} with identity 1 and absorbing 0.
fn mul_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut t = vec![vec![UNSET; n]; n];
    for x in 0..n {
        t[0][x] = 0;
        t[x][0] = 0;
        t[1][x] = x;
        t[x][1] = x;
    }
    let cells: Vec<(usize, usize)> =
        (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    if partial_assoc_ok(&t, n) {
        dfs_tables(&mut t, &cells, 0, n, &mut out);
    }
    out
}

/// Addition tables extending one assignment of row 1 (identity row 0 fixed).
fn add_tables_for_prefix(n: usize, prefix: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut t = vec![vec![UNSET; n]; n];
    for x in 0..n {
        t[0][x] = x;
        t[x][0] = x;
    }
    for (k, &v) in prefix.iter().enumerate() {
        let j = k + 1;
        t[1][j] = v;
        t[j][1] = v;
    }
    let cells: Vec<(usize, usize)> =
        (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    if partial_assoc_ok(&t, n) {
        dfs_tables(&mut t, &cells, 0, n, &mut out);
    }
    out
}

/// Mixed-radix decode of work-unit `index` into an addition row-1 prefix.
fn prefix_of_index(n: usize, mut index: usize) -> Vec<usize> {
    let mut p = vec![0; n - 1];
    for slot in p.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    p
}

pub fn work_unit_count(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        n.pow(n as u32 - 1)
    }
}

fn distributive(add: &[Vec<usize>], mul: &[Vec<usize>], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                    return false;
                }
            }
        }
    }
    true
}

fn assemble(n: usize, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> FiniteSemiring {
    let one = if n == 1 { 0 } else { 1 };
    FiniteSemiring::new(n, 0, one, add, mul, None).expect("enumerated table is well-shaped")
}

/// Valid pairs for one work unit, in local deterministic order.
fn unit_pairs(n: usize, unit: usize, muls: &[Vec<Vec<usize>>]) -> Vec<FiniteSemiring> {
    let prefix = prefix_of_index(n, unit);
    let mut out = Vec::new();
    for add in add_tables_for_prefix(n, &prefix) {
        for mul in muls {
            if distributive(&add, mul, n) {
                out.push(assemble(n, add.clone(), mul.clone()));
            }
        }
    }
    out
}

fn permutations_fixing_identities(n: usize) -> Vec<Vec<usize>> {
    // All bijections on 0..n fixing 0 and 1.
    let mut perms = vec![vec![]];
    let movable: Vec<usize> = (2..n).collect();
    for _ in &movable {
        let mut next = Vec::new();
        for p in &perms {
            for &v in &movable {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    perms
        .into_iter()
        .map(|tail| {
            let mut full: Vec<usize> = (0..n.min(2)).collect();
            full.extend(tail);
            full
        })
        .collect()
}

/// Minimal relabeling (over bijections fixing 0 and 1) of the table pair,
/// returned as (flattened key, relabeled structure).
pub fn canonical_form(s: &FiniteSemiring) -> (Vec<usize>, FiniteSemiring) {
    let n = s.order;
    let mut best: Option<(Vec<usize>, Vec<Vec<usize>>, Vec<Vec<usize>>)> = None;
    for perm in permutations_fixing_identities(n) {
        let mut add = vec![vec![0; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                add[perm[x]][perm[y]] = perm[s.add(x, y)];
                mul[perm[x]][perm[y]] = perm[s.mul(x, y)];
            }
        }
        let key: Vec<usize> =
            add.iter().flatten().chain(mul.iter().flatten()).copied().collect();
        if best.as_ref().map_or(true, |(k, _, _)| key < *k) {
            best = Some((key, add, mul));
        }
    }
    let (key, add, mul) = best.expect("identity permutation always present");
    (key.clone(), assemble(n, add, mul))
}

/// Every valid table pair at order `n`, optionally deduplicated up to
/// isomorphism and filtered by a property. Raw output follows generation
/// order; deduplicated output follows canonical-key order.
pub fn enumerate_semirings(
    n: usize,
    up_to_iso: bool,
    filter: Option<Property>,
    par: Parallelism,
    allow_long_run: bool,
) -> Result<Vec<FiniteSemiring>> {
    check_order(n, allow_long_run)?;
    let raw = if n == 1 {
        vec![assemble(1, vec![vec![0]], vec![vec![0]])]
    } else {
        let muls = mul_tables(n);
        let units: Vec<usize> = (0..work_unit_count(n)).collect();
        map_vec(par, units, |u| unit_pairs(n, u, &muls))
            .into_iter()
            .flatten()
            .collect()
    };
    let kept: Vec<FiniteSemiring> = match filter {
        Some(p) => raw.into_iter().filter(|s| decide(s, p).holds).collect(),
        None => raw,
    };
    if !up_to_iso {
        return Ok(kept);
    }
    let mut classes: BTreeMap<Vec<usize>, FiniteSemiring> = BTreeMap::new();
    for s in kept {
        let (key, canon) = canonical_form(&s);
        classes.entry(key).or_insert(canon);
    }
    Ok(classes.into_values().collect())
}

fn fold_unit(
    n: usize,
    pairs: Vec<FiniteSemiring>,
    total: &mut u64,
    classes: &mut BTreeMap<Vec<usize>, FiniteSemiring>,
) {
    debug_assert!(n >= 1);
    for s in pairs {
        *total += 1;
        let (key, canon) = canonical_form(&s);
        classes.entry(key).or_insert(canon);
    }
}

fn finish_record(
    n: usize,
    total: u64,
    classes: BTreeMap<Vec<usize>, FiniteSemiring>,
    par: Parallelism,
) -> CensusRecord {
    let representatives: Vec<FiniteSemiring> = classes.into_values().collect();
    let verdict_rows = map_vec(par, representatives.clone(), |s| {
        decide_all(&s)
            .into_iter()
            .map(|v| (v.property.token().to_string(), v.holds))
            .collect::<Vec<_>>()
    });
    let mut per_property: BTreeMap<String, u64> =
        Property::ALL.iter().map(|p| (p.token().to_string(), 0)).collect();
    for row in verdict_rows {
        for (token, holds) in row {
            if holds {
                *per_property.get_mut(&token).expect("registry token") += 1;
            }
        }
    }
    CensusRecord {
        order: n,
        total_tables: total,
        iso_classes: representatives.len() as u64,
        per_property,
        representatives,
    }
}

/// Full census with statistics. A checkpoint path makes the run resumable:
/// progress is persisted after every batch of work units, and an existing
/// file for the same order is picked up where it left off.
pub fn census_stats(
    n: usize,
    par: Parallelism,
    allow_long_run: bool,
    checkpoint: Option<&Path>,
) -> Result<CensusRecord> {
    check_order(n, allow_long_run)?;
    if n == 1 {
        let trivial = assemble(1, vec![vec![0]], vec![vec![0]]);
        let mut classes = BTreeMap::new();
        let (key, canon) = canonical_form(&trivial);
        classes.insert(key, canon);
        return Ok(finish_record(1, 1, classes, par));
    }

    let mut total: u64 = 0;
    let mut classes: BTreeMap<Vec<usize>, FiniteSemiring> = BTreeMap::new();
    let mut cursor = 0usize;
    if let Some(path) = checkpoint {
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            let ck: Checkpoint = serde_json::from_str(&text)
                .map_err(|e| Error::Decode(format!("checkpoint: {e}")))?;
            if ck.order != n {
                return Err(Error::Parameter {
                    op: "census_stats",
                    msg: format!("checkpoint is for order {}, not {n}", ck.order),
                });
            }
            total = ck.partial_counts.total_tables;
            for encoded in &ck.partial_counts.representatives {
                let s = FiniteSemiring::decode(encoded)?;
                let (key, canon) = canonical_form(&s);
                classes.insert(key, canon);
            }
            cursor = ck.prefix_cursor;
        }
    }

    let muls = mul_tables(n);
    let unit_total = work_unit_count(n);
    let batch = 64usize;
    while cursor < unit_total {
        let hi = (cursor + batch).min(unit_total);
        let units: Vec<usize> = (cursor..hi).collect();
        let results = map_vec(par, units, |u| unit_pairs(n, u, &muls));
        for pairs in results {
            fold_unit(n, pairs, &mut total, &mut classes);
        }
        cursor = hi;
        if let Some(path) = checkpoint {
            let ck = Checkpoint {
                order: n,
                prefix_cursor: cursor,
                partial_counts: PartialCounts {
                    total_tables: total,
                    representatives: classes.values().map(|s| s.encode()).collect(),
                },
            };
            std::fs::write(path, serde_json::to_string(&ck)?)?;
        }
    }
    Ok(finish_record(n, total, classes, par))
}

/// Independent oracle for tiny orders: scans every table pair whose
/// identity/absorbing rows and columns are forced definitionally, leaving
/// commutativity and associativity to the axiom checker. Returns
/// (total_tables, iso_classes).
pub fn naive_scan_counts(n: usize) -> Result<(u64, u64)> {
    if n == 0 || n > 3 {
        return Err(Error::CensusRange { order: n, cap: 3 });
    }
    if n == 1 {
        return Ok((1, 1));
    }
    let add_free: Vec<(usize, usize)> =
        (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
    let mul_free: Vec<(usize, usize)> =
        (2..n).flat_map(|i| (2..n).map(move |j| (i, j))).collect();

    let fill = |free: &[(usize, usize)], code: usize, base: &Vec<Vec<usize>>| {
        let mut t = base.clone();
        let mut c = code;
        for &(i, j) in free {
            t[i][j] = c % n;
            c /= n;
        }
        t
    };
    let mut add_base = vec![vec![0; n]; n];
    for x in 0..n {
        add_base[0][x] = x;
        add_base[x][0] = x;
    }
    let mut mul_base = vec![vec![0; n]; n];
    for x in 0..n {
        mul_base[1][x] = x;
        mul_base[x][1] = x;
        mul_base[0][x] = 0;
        mul_base[x][0] = 0;
    }

    let mut total = 0u64;
    let mut classes: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    for add_code in 0..n.pow(add_free.len() as u32) {
        let add = fill(&add_free, add_code, &add_base);
        for mul_code in 0..n.pow(mul_free.len() as u32) {
            let mul = fill(&mul_free, mul_code, &mul_base);
            let s = FiniteSemiring::new(n, 0, 1, add.clone(), mul, None)?;
            if s.verify_axioms().ok {
                total += 1;
                let (key, _) = canonical_form(&s);
                classes.entry(key).or_insert(());
            }
        }
    }
    Ok((total, classes.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, zn};
    use crate::iso::{are_isomorphic, find_isomorphism};

    #[test]
    fn golden_counts_small_orders() {
        for (n, want_total, want_iso) in [(1, 1, 1), (2, 2, 2), (3, 6, 6), (4, 69, 36)] {
            let rec = census_stats(n, Parallelism::Auto, false, None).unwrap();
            assert_eq!(rec.total_tables, want_total, "order {n} total");
            assert_eq!(rec.iso_classes, want_iso, "order {n} classes");
        }
    }

    #[test]
    fn naive_oracle_agrees_with_pruned_enumerator() {
        for n in 1..=3 {
            let (total, iso) = naive_scan_counts(n).unwrap();
            let rec = census_stats(n, Parallelism::Sequential, false, None).unwrap();
            assert_eq!((rec.total_tables, rec.iso_classes), (total, iso), "order {n}");
        }
    }

    #[test]
    fn order_two_classes_are_the_field_and_the_lattice() {
        let reps = enumerate_semirings(2, true, None, Parallelism::Auto, false).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().any(|s| are_isomorphic(s, &zn(2).unwrap())));
        assert!(reps.iter().any(|s| are_isomorphic(s, &boolean())));
    }

    #[test]
    fn every_enumerated_structure_passes_axioms() {
        for n in 1..=4 {
            for s in enumerate_semirings(n, false, None, Parallelism::Auto, false).unwrap() {
                assert!(s.verify_axioms().ok);
                assert_eq!((s.zero, s.one), (0, if n == 1 { 0 } else { 1 }));
            }
        }
    }

    #[test]
    fn dedup_is_sound_and_complete_at_order_four() {
        let raw = enumerate_semirings(4, false, None, Parallelism::Auto, false).unwrap();
        let reps = enumerate_semirings(4, true, None, Parallelism::Auto, false).unwrap();
        assert_eq!(raw.len(), 69);
        assert_eq!(reps.len(), 36);
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i + 1) {
                assert!(find_isomorphism(a, b).is_none(), "reps {i} collide");
            }
        }
        for s in &raw {
            assert!(reps.iter().any(|r| are_isomorphic(s, r)));
        }
    }

    #[test]
    fn filtering_matches_per_property_counts() {
        let rec = census_stats(3, Parallelism::Auto, false, None).unwrap();
        let classical =
            enumerate_semirings(3, true, Some(Property::Classical), Parallelism::Auto, false)
                .unwrap();
        assert_eq!(classical.len() as u64, rec.per_property["classical"]);
        assert_eq!(rec.per_property["pi_regular"], rec.iso_classes);
    }

    #[test]
    fn caps_respected() {
        assert!(matches!(
            enumerate_semirings(5, false, None, Parallelism::Auto, false),
            Err(Error::CensusRange { cap: 4, .. })
        ));
        assert!(matches!(
            enumerate_semirings(6, false, None, Parallelism::Auto, true),
            Err(Error::CensusRange { cap: 5, .. })
        ));
        assert!(matches!(naive_scan_counts(4), Err(Error::CensusRange { .. })));
    }

    #[test]
    fn determinism_across_parallelism_modes() {
        let a = census_stats(3, Parallelism::Sequential, false, None).unwrap();
        let b = census_stats(3, Parallelism::Threads(2), false, None).unwrap();
        let c = census_stats(3, Parallelism::Auto, false, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        let ea: Vec<String> = a.representatives.iter().map(|s| s.encode()).collect();
        let eb: Vec<String> = b.representatives.iter().map(|s| s.encode()).collect();
        assert_eq!(ea, eb);
    }

    #[test]
    fn checkpoint_roundtrip_and_resume() {
        let dir = std::env::temp_dir().join("semiring-census-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ck3.json");
        let _ = std::fs::remove_file(&path);

        let direct = census_stats(3, Parallelism::Sequential, false, None).unwrap();
        let with_ck = census_stats(3, Parallelism::Sequential, false, Some(&path)).unwrap();
        assert_eq!(direct, with_ck);

        // The finished checkpoint resumes to an immediate identical result.
        let resumed = census_stats(3, Parallelism::Sequential, false, Some(&path)).unwrap();
        assert_eq!(direct, resumed);

        // A checkpoint for a different order is rejected.
        let err = census_stats(2, Parallelism::Sequential, false, Some(&path));
        assert!(err.is_err());
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let reps = enumerate_semirings(4, true, None, Parallelism::Auto, false).unwrap();
        let s = &reps[10];
        let perm = vec![0, 1, 3, 2];
        let t = crate::iso::apply_permutation(s, &perm).unwrap();
        let (k1, c1) = canonical_form(s);
        let (k2, c2) = canonical_form(&t);
        assert_eq!(k1, k2);
        assert_eq!(c1, c2);
    }
}
