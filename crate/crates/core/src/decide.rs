//! Decision procedures for the elementwise semiring properties, each verdict
//! carrying enough witness data to be replayed against the tables without
//! rerunning the search.

use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Every element is a unit or a zero-divisor.
    Classical,
    /// Every element is a unit or nilpotent.
    CompletelyPrimary,
    /// For every s some power satisfies s^(n+1) t = s^n.
    PiRegular,
    /// Every element's power sequence repeats: s^m = s^n with m < n.
    Periodic,
    /// Every element returns to itself: s^n = s for some n >= 2.
    SimplyPeriodic,
    /// s^2 = s for every element.
    MultIdempotent,
    /// Every s has a complement s* with s s* = 0 and s + s* = 1.
    Complemented,
    /// The only nilpotent element is 0.
    NilpotentFree,
    /// Every element is a unit or fails multiplicative cancellation.
    #[serde(rename = "condition3_unit_or_noncancellative")]
    UnitOrNoncancellative,
    /// No two nonzero elements multiply to 0.
    Entire,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Classical,
        Property::CompletelyPrimary,
        Property::PiRegular,
        Property::Periodic,
        Property::SimplyPeriodic,
        Property::MultIdempotent,
        Property::Complemented,
        Property::NilpotentFree,
        Property::UnitOrNoncancellative,
        Property::Entire,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Property::Classical => "classical",
            Property::CompletelyPrimary => "completely_primary",
            Property::PiRegular => "pi_regular",
            Property::Periodic => "periodic",
            Property::SimplyPeriodic => "simply_periodic",
            Property::MultIdempotent => "mult_idempotent",
            Property::Complemented => "complemented",
            Property::NilpotentFree => "nilpotent_free",
            Property::UnitOrNoncancellative => "condition3_unit_or_noncancellative",
            Property::Entire => "entire",
        }
    }
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let found = match s {
            "classical" => Property::Classical,
            "completely_primary" => Property::CompletelyPrimary,
            "pi_regular" => Property::PiRegular,
            "periodic" => Property::Periodic,
            "simply_periodic" => Property::SimplyPeriodic,
            "mult_idempotent" => Property::MultIdempotent,
            "complemented" => Property::Complemented,
            "nilpotent_free" => Property::NilpotentFree,
            "condition3_unit_or_noncancellative" | "condition3" | "unit_or_noncancellative" => {
                Property::UnitOrNoncancellative
            }
            "entire" => Property::Entire,
            other => return Err(Error::UnknownProperty(other.to_string())),
        };
        Ok(found)
    }
}

/// Witness payload attached to a verdict. Positive payloads record the
/// per-element data found by the search; `Failure` records the smallest
/// offending element (plus a companion index or exponent when one exists).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// The carrier is covered by two witness classes.
    Split { class_a: Vec<usize>, class_b: Vec<usize> },
    /// One witness pair per element, in carrier order.
    ElementPairs { pairs: Vec<(usize, usize)> },
    /// One witness value per element, in carrier order.
    ElementValues { values: Vec<usize> },
    /// Holds by direct table scan; replay repeats the scan.
    Direct,
    Failure { element: usize, companion: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub holds: bool,
    pub evidence: Evidence,
}

fn powers(s: &FiniteSemiring, e: usize, up_to: usize) -> Vec<usize> {
    // powers[k] = e^k, with e^0 = 1.
    let mut p = Vec::with_capacity(up_to + 1);
    p.push(s.one);
    for k in 1..=up_to {
        p.push(s.mul(p[k - 1], e));
    }
    p
}

fn fail(property: Property, element: usize, companion: Option<usize>) -> PropertyVerdict {
    PropertyVerdict { property, holds: false, evidence: Evidence::Failure { element, companion } }
}

pub fn decide(s: &FiniteSemiring, property: Property) -> PropertyVerdict {
    let n = s.order;
    match property {
        Property::Classical => {
            let c = classify(s);
            for p in &c.profiles {
                if !p.is_unit && !p.is_zero_divisor {
                    return fail(property, p.element, None);
                }
            }
            PropertyVerdict {
                property,
                holds: true,
                evidence: Evidence::Split { class_a: c.units, class_b: c.zero_divisors },
            }
        }
        Property::CompletelyPrimary => {
            let c = classify(s);
            for p in &c.profiles {
                if !p.is_unit && !p.is_nilpotent {
                    return fail(property, p.element, None);
                }
            }
            PropertyVerdict {
                property,
                holds: true,
                evidence: Evidence::Split { class_a: c.units, class_b: c.nilpotents },
            }
        }
        Property::PiRegular => {
            let mut pairs = Vec::with_capacity(n);
            'elems: for e in 0..n {
                let p = powers(s, e, 2 * n + 1);
                for exp in 1..=2 * n {
                    for t in 0..n {
                        if s.mul(p[exp + 1], t) == p[exp] {
                            pairs.push((exp, t));
                            continue 'elems;
                        }
                    }
                }
                return fail(property, e, None);
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::ElementPairs { pairs } }
        }
        Property::Periodic => {
            let mut pairs = Vec::with_capacity(n);
            'elems: for e in 0..n {
                let p = powers(s, e, n + 1);
                for m in 1..=n {
                    for k in m + 1..=n + 1 {
                        if p[m] == p[k] {
                            pairs.push((m, k));
                            continue 'elems;
                        }
                    }
                }
                return fail(property, e, None);
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::ElementPairs { pairs } }
        }
        Property::SimplyPeriodic => {
            let mut values = Vec::with_capacity(n);
            'elems: for e in 0..n {
                let p = powers(s, e, n + 1);
                for k in 2..=n + 1 {
                    if p[k] == e {
                        values.push(k);
                        continue 'elems;
                    }
                }
                return fail(property, e, None);
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::ElementValues { values } }
        }
        Property::MultIdempotent => {
            for e in 0..n {
                if s.mul(e, e) != e {
                    return fail(property, e, None);
                }
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::Direct }
        }
        Property::Complemented => {
            let mut values = Vec::with_capacity(n);
            'elems: for e in 0..n {
                for star in 0..n {
                    if s.mul(e, star) == s.zero && s.add(e, star) == s.one {
                        values.push(star);
                        continue 'elems;
                    }
                }
                return fail(property, e, None);
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::ElementValues { values } }
        }
        Property::NilpotentFree => {
            let c = classify(s);
            for p in &c.profiles {
                if p.is_nilpotent && p.element != s.zero {
                    return fail(property, p.element, p.nilpotency_exponent);
                }
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::Direct }
        }
        Property::UnitOrNoncancellative => {
            let c = classify(s);
            for p in &c.profiles {
                if !p.is_unit && p.is_cancellative {
                    return fail(property, p.element, None);
                }
            }
            let noncancellative =
                c.profiles.iter().filter(|p| !p.is_cancellative).map(|p| p.element).collect();
            PropertyVerdict {
                property,
                holds: true,
                evidence: Evidence::Split { class_a: c.units, class_b: noncancellative },
            }
        }
        Property::Entire => {
            for a in 0..n {
                for b in 0..n {
                    if a != s.zero && b != s.zero && s.mul(a, b) == s.zero {
                        return fail(property, a, Some(b));
                    }
                }
            }
            PropertyVerdict { property, holds: true, evidence: Evidence::Direct }
        }
    }
}

/// All ten verdicts in registry order.
pub fn decide_all(s: &FiniteSemiring) -> Vec<PropertyVerdict> {
    Property::ALL.iter().map(|&p| decide(s, p)).collect()
}

pub fn holds(s: &FiniteSemiring, property: Property) -> bool {
    decide(s, property).holds
}

fn is_unit(s: &FiniteSemiring, e: usize) -> bool {
    (0..s.order).any(|t| s.mul(e, t) == s.one)
}

fn is_zero_divisor(s: &FiniteSemiring, e: usize) -> bool {
    (0..s.order).any(|x| x != s.zero && s.mul(e, x) == s.zero)
}

fn is_nilpotent_with_bound(s: &FiniteSemiring, e: usize) -> bool {
    powers(s, e, s.order).iter().skip(1).any(|&p| p == s.zero)
}

fn row_collides(s: &FiniteSemiring, e: usize) -> bool {
    let mut seen = vec![false; s.order];
    (0..s.order).any(|x| {
        let v = s.mul(e, x);
        std::mem::replace(&mut seen[v], true)
    })
}

fn covers_carrier(order: usize, a: &[usize], b: &[usize]) -> bool {
    let mut hit = vec![false; order];
    for &e in a.iter().chain(b) {
        if e >= order {
            return false;
        }
        hit[e] = true;
    }
    hit.iter().all(|&h| h)
}

/// Rechecks a verdict's evidence against the tables. Positive evidence is
/// validated witness by witness; a failure witness is validated by rerunning
/// the per-element test it claims to fail.
pub fn replay_verdict(s: &FiniteSemiring, v: &PropertyVerdict) -> bool {
    let n = s.order;
    match (&v.property, v.holds, &v.evidence) {
        (Property::Classical, true, Evidence::Split { class_a, class_b }) => {
            covers_carrier(n, class_a, class_b)
                && class_a.iter().all(|&u| is_unit(s, u))
                && class_b.iter().all(|&z| is_zero_divisor(s, z))
        }
        (Property::Classical, false, Evidence::Failure { element, .. }) => {
            *element < n && !is_unit(s, *element) && !is_zero_divisor(s, *element)
        }
        (Property::CompletelyPrimary, true, Evidence::Split { class_a, class_b }) => {
            covers_carrier(n, class_a, class_b)
                && class_a.iter().all(|&u| is_unit(s, u))
                && class_b.iter().all(|&z| is_nilpotent_with_bound(s, z))
        }
        (Property::CompletelyPrimary, false, Evidence::Failure { element, .. }) => {
            *element < n && !is_unit(s, *element) && !is_nilpotent_with_bound(s, *element)
        }
        (Property::PiRegular, true, Evidence::ElementPairs { pairs }) => {
            pairs.len() == n
                && pairs.iter().enumerate().all(|(e, &(exp, t))| {
                    exp >= 1 && exp <= 2 * n && t < n && {
                        let p = powers(s, e, exp + 1);
                        s.mul(p[exp + 1], t) == p[exp]
                    }
                })
        }
        (Property::Periodic, true, Evidence::ElementPairs { pairs }) => {
            pairs.len() == n
                && pairs.iter().enumerate().all(|(e, &(m, k))| {
                    m >= 1 && m < k && k <= n + 1 && {
                        let p = powers(s, e, k);
                        p[m] == p[k]
                    }
                })
        }
        (Property::SimplyPeriodic, true, Evidence::ElementValues { values }) => {
            values.len() == n
                && values
                    .iter()
                    .enumerate()
                    .all(|(e, &k)| k >= 2 && k <= n + 1 && powers(s, e, k)[k] == e)
        }
        (Property::SimplyPeriodic, false, Evidence::Failure { element, .. }) => {
            *element < n && {
                let p = powers(s, *element, n + 1);
                (2..=n + 1).all(|k| p[k] != *element)
            }
        }
        (Property::Periodic | Property::PiRegular, false, Evidence::Failure { element, .. }) => {
            // Impossible for finite tables; accept only an in-range element.
            *element < n
        }
        (Property::MultIdempotent, true, Evidence::Direct) => (0..n).all(|e| s.mul(e, e) == e),
        (Property::MultIdempotent, false, Evidence::Failure { element, .. }) => {
            *element < n && s.mul(*element, *element) != *element
        }
        (Property::Complemented, true, Evidence::ElementValues { values }) => {
            values.len() == n
                && values.iter().enumerate().all(|(e, &star)| {
                    star < n && s.mul(e, star) == s.zero && s.add(e, star) == s.one
                })
        }
        (Property::Complemented, false, Evidence::Failure { element, .. }) => {
            *element < n
                && (0..n)
                    .all(|t| s.mul(*element, t) != s.zero || s.add(*element, t) != s.one)
        }
        (Property::NilpotentFree, true, Evidence::Direct) => {
            (0..n).all(|e| e == s.zero || !is_nilpotent_with_bound(s, e))
        }
        (Property::NilpotentFree, false, Evidence::Failure { element, companion }) => {
            *element < n && *element != s.zero && {
                let bound = companion.unwrap_or(n).min(n);
                powers(s, *element, bound).iter().skip(1).any(|&p| p == s.zero)
            }
        }
        (Property::UnitOrNoncancellative, true, Evidence::Split { class_a, class_b }) => {
            covers_carrier(n, class_a, class_b)
                && class_a.iter().all(|&u| is_unit(s, u))
                && class_b.iter().all(|&e| row_collides(s, e))
        }
        (Property::UnitOrNoncancellative, false, Evidence::Failure { element, .. }) => {
            *element < n && !is_unit(s, *element) && !row_collides(s, *element)
        }
        (Property::Entire, true, Evidence::Direct) => (0..n).all(|a| {
            (0..n).all(|b| a == s.zero || b == s.zero || s.mul(a, b) != s.zero)
        }),
        (Property::Entire, false, Evidence::Failure { element, companion: Some(b) }) => {
            *element < n
                && *b < n
                && *element != s.zero
                && *b != s.zero
                && s.mul(*element, *b) == s.zero
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, chain, hu, xn, zn};

    fn flags(s: &FiniteSemiring) -> Vec<bool> {
        decide_all(s).iter().map(|v| v.holds).collect()
    }

    #[test]
    fn z6_profile_of_verdicts() {
        let s = zn(6).unwrap();
        let by: std::collections::BTreeMap<Property, bool> =
            decide_all(&s).into_iter().map(|v| (v.property, v.holds)).collect();
        assert!(by[&Property::Classical]);
        assert!(!by[&Property::CompletelyPrimary]);
        assert!(by[&Property::PiRegular]);
        assert!(by[&Property::Periodic]);
        assert!(by[&Property::SimplyPeriodic]);
        assert!(!by[&Property::MultIdempotent]);
        assert!(!by[&Property::Complemented]);
        assert!(by[&Property::NilpotentFree]);
        assert!(by[&Property::UnitOrNoncancellative]);
        assert!(!by[&Property::Entire]);
    }

    #[test]
    fn idempotency_and_periodicity_flags_match_known_instances() {
        // (mult_idempotent, simply_periodic, periodic) per instance.
        let expect: Vec<(&str, FiniteSemiring, [bool; 3])> = vec![
            ("boolean", boolean(), [true, true, true]),
            ("chain3", chain(3).unwrap(), [true, true, true]),
            ("hu", hu(), [true, true, true]),
            ("z6", zn(6).unwrap(), [false, true, true]),
            ("z4", zn(4).unwrap(), [false, false, true]),
            ("x2", xn(2).unwrap(), [false, false, true]),
        ];
        for (name, s, want) in expect {
            let got = [
                holds(&s, Property::MultIdempotent),
                holds(&s, Property::SimplyPeriodic),
                holds(&s, Property::Periodic),
            ];
            assert_eq!(got, want, "{name}");
        }
    }

    #[test]
    fn x2_pi_regular_witness_pairs_are_minimal() {
        let v = decide(&xn(2).unwrap(), Property::PiRegular);
        assert!(v.holds);
        assert_eq!(
            v.evidence,
            Evidence::ElementPairs { pairs: vec![(1, 0), (1, 1), (2, 1), (1, 1)] }
        );
    }

    #[test]
    fn chain_fails_classical_at_middle_element_but_satisfies_condition3() {
        let s = chain(3).unwrap();
        let v = decide(&s, Property::Classical);
        assert_eq!(v.evidence, Evidence::Failure { element: 1, companion: None });
        assert!(holds(&s, Property::UnitOrNoncancellative));
        assert!(replay_verdict(&s, &v));
    }

    #[test]
    fn complement_witnesses_on_boolean() {
        let v = decide(&boolean(), Property::Complemented);
        assert_eq!(v.evidence, Evidence::ElementValues { values: vec![1, 0] });
        assert!(!holds(&zn(4).unwrap(), Property::Complemented));
        assert!(!holds(&chain(3).unwrap(), Property::Complemented));
    }

    #[test]
    fn nilpotent_free_failure_carries_exponent() {
        let v = decide(&zn(4).unwrap(), Property::NilpotentFree);
        assert_eq!(v.evidence, Evidence::Failure { element: 2, companion: Some(2) });
        assert!(replay_verdict(&zn(4).unwrap(), &v));
    }

    #[test]
    fn trivial_semiring_satisfies_everything() {
        let s = zn(1).unwrap();
        assert!(flags(&s).iter().all(|&h| h));
    }

    #[test]
    fn every_battery_verdict_replays() {
        for (label, s) in crate::construct::battery() {
            if s.order > 24 {
                continue; // keep the quadratic replays quick
            }
            for v in decide_all(&s) {
                assert!(replay_verdict(&s, &v), "{label} / {}", v.property);
            }
        }
    }

    #[test]
    fn tampered_evidence_fails_replay() {
        let s = zn(6).unwrap();
        let mut v = decide(&s, Property::PiRegular);
        if let Evidence::ElementPairs { pairs } = &mut v.evidence {
            pairs[2] = (1, 0); // 2^2 * 0 = 0 != 2^1
        }
        assert!(!replay_verdict(&s, &v));

        let mut w = decide(&s, Property::Classical);
        if let Evidence::Split { class_a, .. } = &mut w.evidence {
            class_a.push(2); // 2 is not a unit mod 6
        }
        assert!(!replay_verdict(&s, &w));
    }

    #[test]
    fn property_tokens_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.token().parse::<Property>().unwrap(), p);
        }
        assert_eq!("condition3".parse::<Property>().unwrap(), Property::UnitOrNoncancellative);
        assert!("frobnicating".parse::<Property>().is_err());
    }
}
