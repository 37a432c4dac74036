//! Element classification: units, zero-divisors, nilpotents, cancellative
//! elements, and whole-structure flags derived from them.
//!
//! A zero-divisor here is an element that is not multiplicatively regular,
//! i.e. `s` with `s*x = 0` for some nonzero `x`. Under that reading the zero
//! element itself is a zero-divisor whenever the order exceeds one.

use serde::{Deserialize, Serialize};

use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementProfile {
    pub element: usize,
    pub is_unit: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inverse: Option<usize>,
    pub is_zero_divisor: bool,
    /// Smallest nonzero x with s*x = zero.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zero_partner: Option<usize>,
    pub is_nilpotent: bool,
    /// Minimal e >= 1 with s^e = zero.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nilpotency_exponent: Option<usize>,
    pub is_cancellative: bool,
    /// Smallest pair x1 < x2 with s*x1 = s*x2.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cancellation_failure: Option<(usize, usize)>,
    pub is_regular: bool,
    pub is_add_invertible: bool,
}

/// Profiles for every element plus the derived sets, all sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub profiles: Vec<ElementProfile>,
    pub units: Vec<usize>,
    pub zero_divisors: Vec<usize>,
    pub nilpotents: Vec<usize>,
    pub cancellative: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub is_ring: bool,
    pub is_entire: bool,
    pub is_add_idempotent: bool,
    pub is_mult_idempotent: bool,
    pub is_proper: bool,
}

pub fn classify(s: &FiniteSemiring) -> Classification {
    let n = s.order;
    let mut profiles = Vec::with_capacity(n);
    for e in 0..n {
        let inverse = (0..n).find(|&t| s.mul(e, t) == s.one);
        let zero_partner = (0..n).find(|&x| x != s.zero && s.mul(e, x) == s.zero);

        let mut nilpotency_exponent = None;
        let mut p = e;
        for k in 1..=n {
            // The power sequence cycles within n steps, so zero appears among
            // the first n powers or not at all.
            if p == s.zero {
                nilpotency_exponent = Some(k);
                break;
            }
            p = s.mul(p, e);
        }

        let mut cancellation_failure = None;
        'outer: for x1 in 0..n {
            for x2 in (x1 + 1)..n {
                if s.mul(e, x1) == s.mul(e, x2) {
                    cancellation_failure = Some((x1, x2));
                    break 'outer;
                }
            }
        }

        let is_add_invertible = (0..n).any(|b| s.add(e, b) == s.zero);

        profiles.push(ElementProfile {
            element: e,
            is_unit: inverse.is_some(),
            inverse,
            is_zero_divisor: zero_partner.is_some(),
            zero_partner,
            is_nilpotent: nilpotency_exponent.is_some(),
            nilpotency_exponent,
            is_cancellative: cancellation_failure.is_none(),
            cancellation_failure,
            is_regular: zero_partner.is_none(),
            is_add_invertible,
        });
    }

    let select = |f: fn(&ElementProfile) -> bool| -> Vec<usize> {
        profiles.iter().filter(|p| f(p)).map(|p| p.element).collect()
    };
    Classification {
        units: select(|p| p.is_unit),
        zero_divisors: select(|p| p.is_zero_divisor),
        nilpotents: select(|p| p.is_nilpotent),
        cancellative: select(|p| p.is_cancellative),
        profiles,
    }
}

pub fn structure_flags(s: &FiniteSemiring) -> StructureFlags {
    let n = s.order;
    let is_ring = (0..n).all(|a| (0..n).any(|b| s.add(a, b) == s.zero));
    let is_entire = !(0..n)
        .any(|a| a != s.zero && (0..n).any(|b| b != s.zero && s.mul(a, b) == s.zero));
    StructureFlags {
        is_ring,
        is_entire,
        is_add_idempotent: (0..n).all(|a| s.add(a, a) == a),
        is_mult_idempotent: (0..n).all(|a| s.mul(a, a) == a),
        is_proper: !is_ring,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn z6_sets() {
        let c = classify(&construct::zn(6).unwrap());
        assert_eq!(c.units, vec![1, 5]);
        assert_eq!(c.zero_divisors, vec![0, 2, 3, 4]);
        assert_eq!(c.nilpotents, vec![0]);
        assert_eq!(c.cancellative, vec![1, 5]);
    }

    #[test]
    fn x2_units_and_zero_divisors() {
        // Index 0 is the absorbing bottom, index 1 the multiplicative identity.
        let c = classify(&construct::xn(2).unwrap());
        assert_eq!(c.units, vec![1]);
        assert_eq!(c.zero_divisors, vec![0]);
    }

    #[test]
    fn hu_middle_element_is_neither_unit_nor_zero_divisor() {
        let c = classify(&construct::hu());
        let u = &c.profiles[1];
        assert!(!u.is_unit && !u.is_zero_divisor);
        assert!(!u.is_nilpotent);
    }

    #[test]
    fn zero_is_a_zero_divisor_above_order_one() {
        let c = classify(&construct::boolean());
        assert!(c.profiles[0].is_zero_divisor);
        let trivial =
            FiniteSemiring::new(1, 0, 0, vec![vec![0]], vec![vec![0]], None).unwrap();
        let ct = classify(&trivial);
        assert!(!ct.profiles[0].is_zero_divisor);
        assert!(ct.profiles[0].is_unit);
    }

    #[test]
    fn profile_invariants_hold_on_battery() {
        for s in [
            construct::boolean(),
            construct::hu(),
            construct::lagrassa(),
            construct::zn(6).unwrap(),
            construct::zn(8).unwrap(),
            construct::xn(3).unwrap(),
            construct::chain(5).unwrap(),
        ] {
            let c = classify(&s);
            for p in &c.profiles {
                assert!(!(p.is_unit && p.is_zero_divisor));
                assert_eq!(p.is_zero_divisor, !p.is_regular);
                if p.is_nilpotent && s.order > 1 {
                    assert!(p.is_zero_divisor);
                }
                if p.is_cancellative {
                    assert!(p.is_regular);
                }
                if let Some(e) = p.nilpotency_exponent {
                    assert_eq!(s.pow(p.element, e), s.zero);
                    assert!(e == 1 || s.pow(p.element, e - 1) != s.zero);
                }
            }
            // Finite semirings: cancellative elements are exactly the units.
            assert_eq!(c.units, c.cancellative);
        }
    }

    #[test]
    fn flags_on_known_instances() {
        let f = structure_flags(&construct::zn(4).unwrap());
        assert!(f.is_ring && !f.is_entire && !f.is_proper);
        let f = structure_flags(&construct::boolean());
        assert!(!f.is_ring && f.is_entire && f.is_add_idempotent && f.is_proper);
        let f = structure_flags(&construct::hu());
        assert!(f.is_mult_idempotent && !f.is_ring);
    }

    #[test]
    fn nilpotency_exponent_is_one_exactly_at_zero() {
        let z4 = construct::zn(4).unwrap();
        let c = classify(&z4);
        assert_eq!(c.profiles[0].nilpotency_exponent, Some(1));
        assert_eq!(c.profiles[2].nilpotency_exponent, Some(2));
        assert_eq!(c.nilpotents, vec![0, 2]);
    }
}
