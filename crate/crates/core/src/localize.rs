//! Localization of a finite semiring at a multiplicative set: fractions
//! (a, s) identified when u a t = u b s for some u in the set, with the
//! total quotient (at the cancellative elements) and prime-complement
//! localizations on top.

use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, ideal_generated_by, is_prime_ideal, Ideal, IDEAL_ORDER_CAP};
use crate::iso::find_isomorphism;
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativeSet {
    elements: Vec<usize>,
}

impl MultiplicativeSet {
    /// Validates closure: must contain 1 and be closed under products.
    pub fn new(s: &FiniteSemiring, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&e| e >= s.order) {
            return Err(Error::Parameter {
                op: "multiplicative_set",
                msg: format!("element {bad} out of range for order {}", s.order),
            });
        }
        if !elements.contains(&s.one) {
            return Err(Error::Parameter {
                op: "multiplicative_set",
                msg: "must contain the multiplicative identity".into(),
            });
        }
        for &a in &elements {
            for &b in &elements {
                if !elements.contains(&s.mul(a, b)) {
                    return Err(Error::Parameter {
                        op: "multiplicative_set",
                        msg: format!("not closed: {a}*{b} escapes the set"),
                    });
                }
            }
        }
        Ok(MultiplicativeSet { elements })
    }

    /// The multiplicatively cancellative elements (for finite commutative
    /// semirings these are exactly the units).
    pub fn cancellative(s: &FiniteSemiring) -> Self {
        MultiplicativeSet { elements: classify(s).cancellative }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedSemiring {
    pub quotient: FiniteSemiring,
    /// Image of each base element under a -> [a/1].
    pub canonical_map: Vec<usize>,
    /// Minimal (numerator, denominator) pair per quotient element.
    pub class_reps: Vec<(usize, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }
    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.0[rx.max(ry)] = rx.min(ry);
        }
    }
}

pub fn localize(s: &FiniteSemiring, t: &MultiplicativeSet) -> Result<LocalizedSemiring> {
    let ts = t.elements();
    // Carrier-level relation: x ~ y when some u in T multiplies them equal.
    // Transitive because witnesses compose, so union-find applies.
    let mut carrier = UnionFind::new(s.order);
    for x in 0..s.order {
        for y in x + 1..s.order {
            if ts.iter().any(|&u| s.mul(u, x) == s.mul(u, y)) {
                carrier.union(x, y);
            }
        }
    }
    let carrier_class: Vec<usize> = (0..s.order).map(|x| carrier.find(x)).collect();

    // Pairs in lexicographic order; (a,s) ~ (b,t) iff at ~ bs in the carrier.
    let pairs: Vec<(usize, usize)> =
        (0..s.order).flat_map(|a| ts.iter().map(move |&d| (a, d))).collect();
    let mut uf = UnionFind::new(pairs.len());
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, sa) = pairs[i];
            let (b, sb) = pairs[j];
            if carrier_class[s.mul(a, sb)] == carrier_class[s.mul(b, sa)] {
                uf.union(i, j);
            }
        }
    }

    // Classes keyed by minimal pair; lexicographic pair order = index order.
    let mut class_of_pair = vec![usize::MAX; pairs.len()];
    let mut class_reps: Vec<(usize, usize)> = Vec::new();
    for i in 0..pairs.len() {
        let root = uf.find(i);
        if class_of_pair[root] == usize::MAX {
            class_of_pair[root] = class_reps.len();
            class_reps.push(pairs[root]);
        }
        class_of_pair[i] = class_of_pair[root];
    }
    let order = class_reps.len();
    let pair_index = |a: usize, d: usize| -> usize {
        a * ts.len() + ts.binary_search(&d).expect("denominator in T")
    };
    let class_of = |a: usize, d: usize| class_of_pair[pair_index(a, d)];

    let mut add = vec![vec![0; order]; order];
    let mut mul = vec![vec![0; order]; order];
    for i in 0..order {
        let (a, sa) = class_reps[i];
        for j in 0..order {
            let (b, sb) = class_reps[j];
            let denom = s.mul(sa, sb);
            add[i][j] = class_of(s.add(s.mul(a, sb), s.mul(b, sa)), denom);
            mul[i][j] = class_of(s.mul(a, b), denom);
        }
    }
    let zero = class_of(s.zero, s.one);
    let one = class_of(s.one, s.one);
    let labels = class_reps
        .iter()
        .map(|&(a, d)| format!("{}/{}", s.label(a), s.label(d)))
        .collect();
    let quotient = FiniteSemiring::new(order, zero, one, add, mul, Some(labels))?;

    let canonical_map: Vec<usize> = (0..s.order).map(|a| class_of(a, s.one)).collect();
    for a in 0..s.order {
        for b in 0..s.order {
            if canonical_map[s.add(a, b)] != quotient.add(canonical_map[a], canonical_map[b])
                || canonical_map[s.mul(a, b)] != quotient.mul(canonical_map[a], canonical_map[b])
            {
                return Err(Error::Shape(format!(
                    "canonical map fails to commute at ({a},{b})"
                )));
            }
        }
    }
    Ok(LocalizedSemiring { quotient, canonical_map, class_reps })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalQuotient {
    pub localized: LocalizedSemiring,
    /// Isomorphism from the base onto the quotient, when one exists (always,
    /// for finite inputs, since the cancellative elements are the units).
    pub iso_to_base: Option<Vec<usize>>,
}

pub fn total_quotient(s: &FiniteSemiring) -> Result<TotalQuotient> {
    let mc = MultiplicativeSet::cancellative(s);
    let localized = localize(s, &mc)?;
    let iso_to_base = find_isomorphism(s, &localized.quotient);
    Ok(TotalQuotient { localized, iso_to_base })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeLocalization {
    pub localized: LocalizedSemiring,
    /// Ideal of the quotient generated by the image of the prime.
    pub maximal_image: Ideal,
    /// Lattice-level confirmations; None when the quotient exceeds the
    /// ideal-enumeration cap.
    pub is_local: Option<bool>,
    pub image_is_unique_maximal: Option<bool>,
}

pub fn localize_at_prime(s: &FiniteSemiring, p: &Ideal) -> Result<PrimeLocalization> {
    if !is_prime_ideal(s, p) {
        return Err(Error::NotPrime {
            a: p.0.first().copied().unwrap_or(0),
            b: p.0.len(),
        });
    }
    let complement: Vec<usize> = (0..s.order).filter(|e| !p.contains(*e)).collect();
    let t = MultiplicativeSet::new(s, complement)?;
    let localized = localize(s, &t)?;

    let image: Vec<usize> = p.0.iter().map(|&e| localized.canonical_map[e]).collect();
    let maximal_image = ideal_generated_by(&localized.quotient, &image)?;
    let (is_local, image_is_unique_maximal) = if localized.quotient.order <= IDEAL_ORDER_CAP {
        let lattice = all_ideals(&localized.quotient)?;
        let local = lattice.maximals.len() == 1;
        let unique = local
            && lattice.maximals.first().map(|&k| &lattice.ideals[k]) == Some(&maximal_image);
        (Some(local), Some(unique))
    } else {
        (None, None)
    };
    Ok(PrimeLocalization { localized, maximal_image, is_local, image_is_unique_maximal })
}
