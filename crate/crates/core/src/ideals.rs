//! Ideals of a finite semiring: closed subsets containing 0, closed under
//! addition and under multiplication by arbitrary carrier elements (no
//! subtractivity requirement).
//!
//! Enumeration works over bitmasks: every ideal of a finite semiring is the
//! join of the principal ideals of its members, so breadth-first join-closure
//! starting from the principal ideals reaches the whole lattice. The order
//! cap keeps masks in a single machine word.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// Hard bound for exhaustive ideal enumeration (mask width).
pub const IDEAL_ORDER_CAP: usize = 24;

/// A sorted element subset satisfying the three closure laws.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ideal(pub Vec<usize>);

impl Ideal {
    fn from_mask(mask: u64) -> Self {
        Ideal((0..64).filter(|&b| mask >> b & 1 == 1).collect())
    }

    fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &e| m | 1 << e)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Brute-force recheck of the closure laws.
    pub fn is_ideal_of(&self, s: &FiniteSemiring) -> bool {
        if self.0.iter().any(|&e| e >= s.order) || !self.contains(s.zero) {
            return false;
        }
        for &a in &self.0 {
            for &b in &self.0 {
                if !self.contains(s.add(a, b)) {
                    return false;
                }
            }
            for x in 0..s.order {
                if !self.contains(s.mul(x, a)) {
                    return false;
                }
            }
        }
        true
    }
}

fn close(s: &FiniteSemiring, seed: u64) -> u64 {
    let mut mask = seed | 1 << s.zero;
    loop {
        let mut next = mask;
        let members: Vec<usize> = (0..s.order).filter(|&e| mask >> e & 1 == 1).collect();
        for &a in &members {
            for &b in &members {
                next |= 1 << s.add(a, b);
            }
            for x in 0..s.order {
                next |= 1 << s.mul(x, a);
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// Smallest ideal containing the seed elements; the empty seed yields {0}.
pub fn ideal_generated_by(s: &FiniteSemiring, seed: &[usize]) -> Result<Ideal> {
    if s.order > IDEAL_ORDER_CAP {
        return Err(Error::IdealCap { order: s.order, cap: IDEAL_ORDER_CAP });
    }
    let mut mask = 0u64;
    for &e in seed {
        if e >= s.order {
            return Err(Error::Parameter {
                op: "ideal_generated_by",
                msg: format!("seed element {e} out of range for order {}", s.order),
            });
        }
        mask |= 1 << e;
    }
    Ok(Ideal::from_mask(close(s, mask)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealLattice {
    /// Sorted by (size, element list); {0} first, the carrier last.
    pub ideals: Vec<Ideal>,
    /// Indices into `ideals` of the prime ideals.
    pub primes: Vec<usize>,
    /// Indices into `ideals` of the maximal ideals.
    pub maximals: Vec<usize>,
    /// The nilpotent elements (always an ideal: the intersection of primes).
    pub nil: Vec<usize>,
    /// False only when enumeration stopped at a discovery limit.
    pub complete: bool,
}

impl IdealLattice {
    pub fn index_of(&self, elements: &[usize]) -> Option<usize> {
        self.ideals.iter().position(|i| i.0 == elements)
    }
}

/// Proper, and products land inside only when a factor does.
pub fn is_prime_ideal(s: &FiniteSemiring, ideal: &Ideal) -> bool {
    ideal.is_ideal_of(s) && is_prime_mask(s, ideal.mask())
}

fn is_prime_mask(s: &FiniteSemiring, mask: u64) -> bool {
    let full = (1u64 << s.order) - 1;
    if mask == full {
        return false;
    }
    for a in 0..s.order {
        for b in 0..s.order {
            if mask >> s.mul(a, b) & 1 == 1 && mask >> a & 1 == 0 && mask >> b & 1 == 0 {
                return false;
            }
        }
    }
    true
}

fn build_lattice(s: &FiniteSemiring, limit: Option<usize>) -> IdealLattice {
    let full = (1u64 << s.order) - 1;
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut queue: VecDeque<u64> = VecDeque::new();
    let mut complete = true;
    let seeds = std::iter::once(close(s, 0)).chain((0..s.order).map(|g| close(s, 1 << g)));
    for mask in seeds {
        if seen.contains(&mask) {
            continue;
        }
        if limit.is_some_and(|cap| seen.len() >= cap) {
            complete = false;
            break;
        }
        seen.insert(mask);
        queue.push_back(mask);
    }
    'bfs: while let Some(m) = queue.pop_front() {
        if !complete {
            break;
        }
        for &other in seen.clone().iter() {
            let join = close(s, m | other);
            if seen.contains(&join) {
                continue;
            }
            if limit.is_some_and(|cap| seen.len() >= cap) {
                complete = false;
                break 'bfs;
            }
            seen.insert(join);
            queue.push_back(join);
        }
    }

    let mut ideals: Vec<Ideal> = seen.iter().map(|&m| Ideal::from_mask(m)).collect();
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));

    let primes: Vec<usize> = ideals
        .iter()
        .enumerate()
        .filter(|(_, i)| is_prime_mask(s, i.mask()))
        .map(|(k, _)| k)
        .collect();
    let maximals: Vec<usize> = ideals
        .iter()
        .enumerate()
        .filter(|(k, i)| {
            let m = i.mask();
            m != full
                && ideals.iter().enumerate().all(|(k2, j)| {
                    let jm = j.mask();
                    k2 == *k || jm == full || jm & m != m || jm == m
                })
        })
        .map(|(k, _)| k)
        .collect();
    let nil = classify(s).nilpotents;
    IdealLattice { ideals, primes, maximals, nil, complete }
}

/// Every ideal of `s`, with prime/maximal/nil annotations. Fails above the
/// enumeration cap; use `generated_ideals` to explore larger carriers.
pub fn all_ideals(s: &FiniteSemiring) -> Result<IdealLattice> {
    if s.order > IDEAL_ORDER_CAP {
        return Err(Error::IdealCap { order: s.order, cap: IDEAL_ORDER_CAP });
    }
    Ok(build_lattice(s, None))
}

/// Join-closure enumeration that stops after discovering `max_ideals`
/// ideals; the result says whether it reached a fixpoint.
pub fn generated_ideals(s: &FiniteSemiring, max_ideals: usize) -> Result<IdealLattice> {
    if s.order > IDEAL_ORDER_CAP {
        return Err(Error::IdealCap { order: s.order, cap: IDEAL_ORDER_CAP });
    }
    Ok(build_lattice(s, Some(max_ideals)))
}

/// {s : s b = 0 for every b in the set}. The set must be nonempty.
pub fn annihilator(s: &FiniteSemiring, b: &[usize]) -> Result<Ideal> {
    if b.is_empty() {
        return Err(Error::Parameter { op: "annihilator", msg: "empty annihilated set".into() });
    }
    if let Some(&bad) = b.iter().find(|&&e| e >= s.order) {
        return Err(Error::Parameter {
            op: "annihilator",
            msg: format!("element {bad} out of range for order {}", s.order),
        });
    }
    let elements = (0..s.order)
        .filter(|&x| b.iter().all(|&e| s.mul(x, e) == s.zero))
        .collect();
    Ok(Ideal(elements))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderProps {
    /// Ideals totally ordered by inclusion.
    pub uniserial: bool,
    /// Exactly one maximal ideal.
    pub local: bool,
    /// Every ideal is principal.
    pub pis: bool,
    /// Longest strict prime chain minus one; -1 when there are no primes.
    pub krull_dimension: i64,
}

impl OrderProps {
    pub fn compute(s: &FiniteSemiring, lattice: &IdealLattice) -> OrderProps {
        let masks: Vec<u64> = lattice.ideals.iter().map(Ideal::mask).collect();
        let uniserial = masks
            .iter()
            .all(|&a| masks.iter().all(|&b| a & b == a || a & b == b));
        let local = lattice.maximals.len() == 1;
        let principal: BTreeSet<u64> = (0..s.order)
            .map(|g| close(s, 1 << g))
            .chain(std::iter::once(close(s, 0)))
            .collect();
        let pis = masks.iter().all(|m| principal.contains(m));

        // Longest chain in the prime inclusion order, by memoized DFS.
        let prime_masks: Vec<u64> = lattice.primes.iter().map(|&k| masks[k]).collect();
        fn depth(i: usize, primes: &[u64], memo: &mut [Option<i64>]) -> i64 {
            if let Some(d) = memo[i] {
                return d;
            }
            let mut best = 0;
            for j in 0..primes.len() {
                if j != i && primes[j] & primes[i] == primes[j] {
                    best = best.max(1 + depth(j, primes, memo));
                }
            }
            memo[i] = Some(best);
            best
        }
        let mut memo = vec![None; prime_masks.len()];
        let krull_dimension = if prime_masks.is_empty() {
            -1
        } else {
            (0..prime_masks.len())
                .map(|i| depth(i, &prime_masks, &mut memo))
                .max()
                .unwrap()
        };
        OrderProps { uniserial, local, pis, krull_dimension }
    }
}

pub fn order_props(s: &FiniteSemiring) -> Result<OrderProps> {
    let lattice = all_ideals(s)?;
    Ok(OrderProps::compute(s, &lattice))
}

/// The semiring of ideals: addition is the elementwise sum set, which this
/// construction checks really is an ideal; multiplication is the ideal
/// generated by pairwise products. Zero is {0}, one is the whole carrier.
pub fn ideal_semiring(s: &FiniteSemiring, cap: usize) -> Result<(FiniteSemiring, IdealLattice)> {
    let lattice = all_ideals(s)?;
    let n = lattice.ideals.len();
    if n > cap {
        return Err(Error::SizeCap { requested: n, cap });
    }
    let masks: Vec<u64> = lattice.ideals.iter().map(Ideal::mask).collect();
    let index_of = |mask: u64, op: &'static str| -> Result<usize> {
        masks.iter().position(|&m| m == mask).ok_or_else(|| Error::Parameter {
            op: "ideal_semiring",
            msg: format!("{op} of two ideals escaped the lattice (not an ideal)"),
        })
    };

    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut sum_mask = 0u64;
            for &a in &lattice.ideals[i].0 {
                for &b in &lattice.ideals[j].0 {
                    sum_mask |= 1 << s.add(a, b);
                }
            }
            add[i][j] = index_of(sum_mask, "elementwise sum")?;

            let mut prod_seed = 0u64;
            for &a in &lattice.ideals[i].0 {
                for &b in &lattice.ideals[j].0 {
                    prod_seed |= 1 << s.mul(a, b);
                }
            }
            mul[i][j] = index_of(close(s, prod_seed), "product closure")?;
        }
    }
    let zero = index_of(close(s, 0), "zero ideal")?;
    let one = index_of((1u64 << s.order) - 1, "unit ideal")?;
    let labels = lattice
        .ideals
        .iter()
        .map(|i| {
            let parts: Vec<String> = i.0.iter().map(|&e| s.label(e)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let out = FiniteSemiring::new(n, zero, one, add, mul, Some(labels))?;
    Ok((out, lattice))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnAnnRow {
    pub element: usize,
    pub ann_ann: Ideal,
    pub principal: Ideal,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnAnnReport {
    pub rows: Vec<AnnAnnRow>,
    pub all_equal: bool,
}

/// For each element b, compares Ann(Ann(b)) with the principal ideal (b).
pub fn ann_ann_criterion(s: &FiniteSemiring) -> Result<AnnAnnReport> {
    let rows = (0..s.order)
        .map(|b| {
            let ann = annihilator(s, &[b])?;
            let ann_ann = annihilator(s, &ann.0)?;
            let principal = ideal_generated_by(s, &[b])?;
            let equal = ann_ann == principal;
            Ok(AnnAnnRow { element: b, ann_ann, principal, equal })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(AnnAnnReport { rows, all_equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{adjoin_zero, bni, boolean, chain, hu, xn, zn, BniInterpretation};
    use crate::decide::{holds, Property};
    use crate::iso::are_isomorphic;

    fn sets(lat: &IdealLattice) -> Vec<Vec<usize>> {
        lat.ideals.iter().map(|i| i.0.clone()).collect()
    }

    #[test]
    fn principal_ideal_closure_on_z4() {
        let s = zn(4).unwrap();
        assert_eq!(ideal_generated_by(&s, &[2]).unwrap().0, vec![0, 2]);
        assert_eq!(ideal_generated_by(&s, &[]).unwrap().0, vec![0]);
        assert_eq!(ideal_generated_by(&s, &[1]).unwrap().0, vec![0, 1, 2, 3]);
    }

    #[test]
    fn z4_lattice_is_the_three_chain() {
        let lat = all_ideals(&zn(4).unwrap()).unwrap();
        assert_eq!(sets(&lat), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(lat.primes, vec![1]);
        assert_eq!(lat.maximals, vec![1]);
        assert_eq!(lat.nil, vec![0, 2]);
        assert!(lat.complete);
    }

    #[test]
    fn z6_lattice_splits_into_two_maximals() {
        let lat = all_ideals(&zn(6).unwrap()).unwrap();
        assert_eq!(
            sets(&lat),
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
        assert_eq!(lat.primes, vec![1, 2]);
        assert_eq!(lat.maximals, vec![1, 2]);
        assert_eq!(lat.nil, vec![0]);
    }

    #[test]
    fn chain_and_bottom_heavy_lattices() {
        let lat = all_ideals(&chain(3).unwrap()).unwrap();
        assert_eq!(sets(&lat), vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(lat.primes, vec![0, 1]);
        assert_eq!(lat.maximals, vec![1]);

        let hu_lat = all_ideals(&hu()).unwrap();
        assert_eq!(sets(&hu_lat), vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(hu_lat.maximals, vec![1]);

        let b_lat = all_ideals(&boolean()).unwrap();
        assert_eq!(sets(&b_lat), vec![vec![0], vec![0, 1]]);
        assert_eq!(b_lat.primes, vec![0]);
    }

    #[test]
    fn x2_prime_structure() {
        let lat = all_ideals(&xn(2).unwrap()).unwrap();
        assert_eq!(lat.ideals.len(), 4);
        let prime_sets: Vec<Vec<usize>> =
            lat.primes.iter().map(|&k| lat.ideals[k].0.clone()).collect();
        assert_eq!(prime_sets, vec![vec![0], vec![0, 2, 3]]);
    }

    #[test]
    fn order_props_match_known_instances() {
        let cases: Vec<(&str, FiniteSemiring, OrderProps)> = vec![
            (
                "z4",
                zn(4).unwrap(),
                OrderProps { uniserial: true, local: true, pis: true, krull_dimension: 0 },
            ),
            (
                "z6",
                zn(6).unwrap(),
                OrderProps { uniserial: false, local: false, pis: true, krull_dimension: 0 },
            ),
            (
                "chain3",
                chain(3).unwrap(),
                OrderProps { uniserial: true, local: true, pis: true, krull_dimension: 1 },
            ),
            (
                "boolean",
                boolean(),
                OrderProps { uniserial: true, local: true, pis: true, krull_dimension: 0 },
            ),
        ];
        for (name, s, want) in cases {
            assert_eq!(order_props(&s).unwrap(), want, "{name}");
        }
        assert!(!order_props(&zn(12).unwrap()).unwrap().uniserial);
        assert_eq!(order_props(&zn(1).unwrap()).unwrap().krull_dimension, -1);
        assert_eq!(order_props(&xn(2).unwrap()).unwrap().krull_dimension, 1);
    }

    #[test]
    fn annihilators_on_rings_and_adjoined_zero() {
        let z4 = zn(4).unwrap();
        assert_eq!(annihilator(&z4, &[2]).unwrap().0, vec![0, 2]);
        assert_eq!(annihilator(&z4, &[0]).unwrap().0, vec![0, 1, 2, 3]);
        assert!(annihilator(&z4, &[]).is_err());

        // In the zero-adjoined copy the old partner of 2 no longer kills it.
        let adj = adjoin_zero(&z4).unwrap();
        assert_eq!(annihilator(&adj, &[3]).unwrap().0, vec![0]);
    }

    #[test]
    fn ann_ann_criterion_holds_on_z4_z6_fails_on_bni() {
        assert!(ann_ann_criterion(&zn(4).unwrap()).unwrap().all_equal);
        assert!(ann_ann_criterion(&zn(6).unwrap()).unwrap().all_equal);

        let (s, _) = bni(3, 1, BniInterpretation::CanonicalCongruence).unwrap();
        let report = ann_ann_criterion(&s).unwrap();
        assert!(!report.all_equal);
        let row = &report.rows[2];
        assert_eq!(row.ann_ann.0, vec![0, 1, 2]);
        assert_eq!(row.principal.0, vec![0, 2]);
        assert!(!row.equal);
    }

    #[test]
    fn ideal_semiring_of_z4_is_completely_primary() {
        let (id, lat) = ideal_semiring(&zn(4).unwrap(), 64).unwrap();
        assert!(id.verify_axioms().ok);
        assert_eq!(id.order, 3);
        let two = lat.index_of(&[0, 2]).unwrap();
        assert_eq!(id.mul(two, two), lat.index_of(&[0]).unwrap());
        assert!(holds(&id, Property::CompletelyPrimary));
    }

    #[test]
    fn ideal_semiring_transfer_examples() {
        let (idb, _) = ideal_semiring(&boolean(), 64).unwrap();
        assert!(are_isomorphic(&idb, &boolean()));

        let (id6, _) = ideal_semiring(&zn(6).unwrap(), 64).unwrap();
        assert!(id6.verify_axioms().ok);
        assert!(holds(&id6, Property::Classical));

        // A classical source is not required: the chain is not classical and
        // neither is its ideal semiring.
        let (idc, _) = ideal_semiring(&chain(3).unwrap(), 64).unwrap();
        assert!(idc.verify_axioms().ok);
        assert!(!holds(&idc, Property::Classical));
    }

    #[test]
    fn every_lattice_member_rechecks_as_ideal() {
        for s in [zn(12).unwrap(), xn(3).unwrap(), chain(5).unwrap(), hu()] {
            let lat = all_ideals(&s).unwrap();
            for i in &lat.ideals {
                assert!(i.is_ideal_of(&s));
            }
            for &k in lat.maximals.iter() {
                assert!(lat.primes.contains(&k), "maximal not prime in order {}", s.order);
            }
        }
    }

    #[test]
    fn nil_is_prime_intersection_and_units_avoid_maximals() {
        for s in [zn(4).unwrap(), zn(6).unwrap(), zn(12).unwrap(), hu(), xn(2).unwrap()] {
            let lat = all_ideals(&s).unwrap();
            let inter: Vec<usize> = (0..s.order)
                .filter(|&e| lat.primes.iter().all(|&k| lat.ideals[k].contains(e)))
                .collect();
            assert_eq!(inter, lat.nil);

            let units = classify(&s).units;
            let outside: Vec<usize> = (0..s.order)
                .filter(|&e| !lat.maximals.iter().any(|&k| lat.ideals[k].contains(e)))
                .collect();
            assert_eq!(units, outside);
        }
    }

    #[test]
    fn cap_and_fallback() {
        let big = zn(25).unwrap();
        assert!(matches!(all_ideals(&big), Err(Error::IdealCap { .. })));
        let partial = generated_ideals(&zn(12).unwrap(), 3).unwrap();
        assert!(!partial.complete);
        assert!(partial.ideals.len() <= 3);
        let full = generated_ideals(&zn(12).unwrap(), 100).unwrap();
        assert!(full.complete);
        assert_eq!(full.ideals.len(), 6);
    }
}
