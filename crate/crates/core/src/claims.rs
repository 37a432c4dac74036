//! Registry of checkable statements about finite commutative semirings,
//! each evaluated over a concrete, reproducible instance set.
//!
//! Every claim produces a structured report whose witnesses re-validate
//! against raw operation tables, so a reader can replay any recorded fact
//! without trusting the run that produced it. Reports are deterministic:
//! identical configuration yields byte-identical JSON regardless of the
//! worker count.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::census::enumerate_semirings;
use crate::classify::{classify, structure_flags};
use crate::construct::{
    adjoin_zero, battery, bni, boolean, chain, direct_product, dual_numbers,
    free_idempotent_monoid, hu, lagrassa, nilpotent_monoid_semiring, trunc_poly_ring, xn, zn,
    BniInterpretation,
};
use crate::decide::{decide, replay_verdict, Property, PropertyVerdict};
use crate::error::{Error, Result};
use crate::ideals::{
    all_ideals, ann_ann_criterion, annihilator, ideal_generated_by, ideal_semiring, order_props,
    OrderProps, IDEAL_ORDER_CAP,
};
use crate::localize::total_quotient;
use crate::par::{map_vec, Parallelism};
use crate::semimodule::{
    abelian_group_tables, expectation_semiring, find_actions, self_algebra, subsemimodule_scan,
    verify_semialgebra, FiniteSemialgebra, FiniteSemimodule,
};
use crate::semiring::{FiniteSemiring, Violation, DEFAULT_SIZE_CAP, DEFAULT_VIOLATION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
    C17,
    C18,
    C19,
    C20,
    C21,
    C22,
    C23,
    C24,
}

impl ClaimId {
    pub const ALL: [ClaimId; 24] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
        ClaimId::C12,
        ClaimId::C13,
        ClaimId::C14,
        ClaimId::C15,
        ClaimId::C16,
        ClaimId::C17,
        ClaimId::C18,
        ClaimId::C19,
        ClaimId::C20,
        ClaimId::C21,
        ClaimId::C22,
        ClaimId::C23,
        ClaimId::C24,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ClaimId::C1 => "C1",
            ClaimId::C2 => "C2",
            ClaimId::C3 => "C3",
            ClaimId::C4 => "C4",
            ClaimId::C5 => "C5",
            ClaimId::C6 => "C6",
            ClaimId::C7 => "C7",
            ClaimId::C8 => "C8",
            ClaimId::C9 => "C9",
            ClaimId::C10 => "C10",
            ClaimId::C11 => "C11",
            ClaimId::C12 => "C12",
            ClaimId::C13 => "C13",
            ClaimId::C14 => "C14",
            ClaimId::C15 => "C15",
            ClaimId::C16 => "C16",
            ClaimId::C17 => "C17",
            ClaimId::C18 => "C18",
            ClaimId::C19 => "C19",
            ClaimId::C20 => "C20",
            ClaimId::C21 => "C21",
            ClaimId::C22 => "C22",
            ClaimId::C23 => "C23",
            ClaimId::C24 => "C24",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        ClaimId::ALL
            .iter()
            .copied()
            .find(|id| id.token().eq_ignore_ascii_case(trimmed))
            .ok_or_else(|| Error::UnknownClaim(trimmed.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// The statement must hold on every instance; a counterexample fails the suite.
    Verify,
    /// Interpretation-dependent statement: outcomes are recorded per instance.
    ReportOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Verified,
    Counterexample,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub id: ClaimId,
    pub statement: &'static str,
    pub expected: Expectation,
}

pub fn registry() -> Vec<Claim> {
    use ClaimId::*;
    use Expectation::*;
    vec![
        Claim { id: C1, expected: Verify, statement: "In a pi-regular semiring every element is a unit or multiplicatively non-cancellative; checked on all census classes up to the configured order plus every library construction." },
        Claim { id: C2, expected: Verify, statement: "Every finite semiring is pi-regular; same instance set as C1." },
        Claim { id: C3, expected: Verify, statement: "Bounded chains under max/min of size 3..8 are not classical, yet every element is a unit or non-cancellative." },
        Claim { id: C4, expected: Verify, statement: "The three-element idempotent examples and the tropical-style families X_1..X_5 are proper and not classical." },
        Claim { id: C5, expected: ReportOnly, statement: "Classicality of the modular-overflow family B(n,i) for 2<=n<=8, 0<=i<n, under both the literal and canonical readings of its overflow rule; per-instance axiom validity and classicality are recorded." },
        Claim { id: C6, expected: Verify, statement: "Finite products of classical semirings are classical; checked on all pairs and triples of classical census classes." },
        Claim { id: C7, expected: Verify, statement: "Complemented semirings are classical; finite Boolean-algebra powers are complemented, nilpotent-free, and classical." },
        Claim { id: C8, expected: Verify, statement: "Products of nilpotent-free classical semirings are nilpotent-free and classical; pairs drawn from Boolean powers, complemented census classes, and prime fields." },
        Claim { id: C9, expected: Verify, statement: "Dual-number extensions R[e]/(e^(k+1)) of finite commutative rings are classical rings; R ranges over Z_2, Z_4, Z_6, F_2[x]/(x^2) and k over 1..2." },
        Claim { id: C10, expected: Verify, statement: "For finite commutative semirings with zero distinct from one these are equivalent: every element is a unit or nilpotent; the nilpotent set is the unique prime ideal; the nilpotent set is a maximal ideal. Checked on census classes of order >= 2 (the one-element structure has no proper ideals, so the prime/maximal characterizations do not apply to it)." },
        Claim { id: C11, expected: Verify, statement: "Krull dimension zero implies classical; checked on all census classes." },
        Claim { id: C12, expected: Verify, statement: "A uniserial semiring is classical exactly when the double annihilator of each element equals the principal ideal it generates; checked on uniserial census classes plus Z_4, Z_8, Z_9." },
        Claim { id: C13, expected: Verify, statement: "For a scalar action on an additive group M: if S is classical the pair semiring on S x M with derivation-style multiplication is classical, and it is completely primary exactly when S is; checked over all actions found for |S|,|M| <= 4." },
        Claim { id: C14, expected: Verify, statement: "If S has no nonzero zero-divisors, neither does its total quotient semiring; checked on entire census classes and zero-adjoined rings." },
        Claim { id: C15, expected: Verify, statement: "For the zero-adjoined rings built from Z_4, Z_6, and Z_2 x Z_2, the total quotient semiring is not classical." },
        Claim { id: C16, expected: Verify, statement: "If S is classical, the canonical map into its total quotient semiring is an isomorphism; checked on classical census classes." },
        Claim { id: C17, expected: Verify, statement: "The three-element idempotent examples have cancellative set {1}, so they equal their total quotient semiring while not being classical." },
        Claim { id: C18, expected: Verify, statement: "If the semiring of ideals is classical, so is the base semiring; when every ideal is principal the converse holds; checked on census classes with computable ideal semirings." },
        Claim { id: C19, expected: Verify, statement: "Truncated polynomial rings over prime fields are completely primary rings, and adjoining an identity to a zero-multiplication idempotent monoid yields proper completely primary semirings." },
        Claim { id: C20, expected: Verify, statement: "A product of at least two completely primary semirings of order >= 2 is classical but not completely primary; checked on pairs of completely primary census classes." },
        Claim { id: C21, expected: Verify, statement: "The three-element idempotent examples are local (and trivially Artinian, being finite) but not completely primary." },
        Claim { id: C22, expected: Verify, statement: "In a finite commutative semialgebra every element is a unit or multiplicatively non-cancellative, because no proper subsemimodule of a finite carrier can be isomorphic to the whole; checked on self-algebras and a mixed-base algebra." },
        Claim { id: C23, expected: Verify, statement: "If the semiring of ideals is completely primary, so is the base semiring; when every ideal is principal the converse holds; same instance set as C18." },
        Claim { id: C24, expected: Verify, statement: "Every finite commutative ring is classical; checked on ring census classes and Z_n for n <= 16." },
    ]
}

pub fn claim(id: ClaimId) -> Claim {
    registry().into_iter().find(|c| c.id == id).expect("registry covers every id")
}

/// Re-checkable evidence attached to a report. Replay recomputes the stated
/// fact from the encoded operation tables (or the embedded table) and
/// compares; it never trusts the stored flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessBody {
    /// A full property verdict, including its internal evidence.
    Verdict { verdict: PropertyVerdict },
    /// A concrete axiom violation with its witness elements.
    Axiom { violation: Violation },
    /// Unit / zero-divisor / nilpotent / cancellative status of one element.
    ElementStatus {
        element: usize,
        is_unit: bool,
        is_zero_divisor: bool,
        is_nilpotent: bool,
        is_cancellative: bool,
    },
    /// One boolean structure flag of the encoded instance.
    StructureFlag { flag: String, value: bool },
    /// The prime ideals, maximal ideals, and nilpotent set of the instance.
    IdealFacts {
        primes: Vec<Vec<usize>>,
        maximals: Vec<Vec<usize>>,
        nil: Vec<usize>,
    },
    /// Double annihilator versus generated principal ideal for one element.
    AnnAnnPair {
        element: usize,
        ann_ann: Vec<usize>,
        principal: Vec<usize>,
    },
    /// The canonical map into the total quotient semiring and whether it is
    /// a bijection.
    CanonicalMap { map: Vec<usize>, bijective: bool },
    /// Unit / cancellative status of an element inside an embedded
    /// commutative monoid table (used for algebra carriers that are not
    /// themselves semirings).
    MonoidElementStatus {
        table: Vec<Vec<usize>>,
        identity: usize,
        element: usize,
        is_unit: bool,
        is_cancellative: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub claim: ClaimId,
    pub instance: String,
    /// Canonical encoding of the structure the fact is about.
    pub encoded: String,
    pub body: WitnessBody,
}

fn is_bijection(map: &[usize], codomain: usize) -> bool {
    let mut seen = vec![false; codomain];
    map.len() == codomain
        && map.iter().all(|&v| {
            if v >= codomain || seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        })
}

/// Recompute a witness's stated fact from raw tables. `Ok(true)` means the
/// evidence still holds.
pub fn replay_witness(w: &Witness) -> Result<bool> {
    let s = FiniteSemiring::decode(&w.encoded)?;
    Ok(match &w.body {
        WitnessBody::Verdict { verdict } => replay_verdict(&s, verdict),
        WitnessBody::Axiom { violation } => violation.reproduces(&s),
        WitnessBody::ElementStatus {
            element,
            is_unit,
            is_zero_divisor,
            is_nilpotent,
            is_cancellative,
        } => {
            if *element >= s.order {
                return Ok(false);
            }
            let c = classify(&s);
            let p = &c.profiles[*element];
            p.is_unit == *is_unit
                && p.is_zero_divisor == *is_zero_divisor
                && p.is_nilpotent == *is_nilpotent
                && p.is_cancellative == *is_cancellative
        }
        WitnessBody::StructureFlag { flag, value } => {
            let f = structure_flags(&s);
            let actual = match flag.as_str() {
                "is_ring" => f.is_ring,
                "is_entire" => f.is_entire,
                "is_add_idempotent" => f.is_add_idempotent,
                "is_mult_idempotent" => f.is_mult_idempotent,
                "is_proper" => f.is_proper,
                _ => return Ok(false),
            };
            actual == *value
        }
        WitnessBody::IdealFacts { primes, maximals, nil } => {
            let lat = all_ideals(&s)?;
            let elems = |indices: &[usize]| -> Vec<Vec<usize>> {
                indices.iter().map(|&i| lat.ideals[i].0.clone()).collect()
            };
            elems(&lat.primes) == *primes && elems(&lat.maximals) == *maximals && lat.nil == *nil
        }
        WitnessBody::AnnAnnPair { element, ann_ann, principal } => {
            if *element >= s.order {
                return Ok(false);
            }
            let first = annihilator(&s, &[*element])?;
            let second = annihilator(&s, &first.0)?;
            let gen = ideal_generated_by(&s, &[*element])?;
            second.0 == *ann_ann && gen.0 == *principal
        }
        WitnessBody::CanonicalMap { map, bijective } => {
            let tq = total_quotient(&s)?;
            tq.localized.canonical_map == *map
                && is_bijection(&tq.localized.canonical_map, tq.localized.quotient.order)
                    == *bijective
        }
        WitnessBody::MonoidElementStatus { table, identity, element, is_unit, is_cancellative } => {
            let m = table.len();
            if *element >= m || *identity >= m || table.iter().any(|r| r.len() != m) {
                return Ok(false);
            }
            let unit = (0..m).any(|b| table[*element][b] == *identity);
            let row = &table[*element];
            let cancellative =
                (0..m).all(|x| (x + 1..m).all(|y| row[x] != row[y]));
            unit == *is_unit && cancellative == *is_cancellative
        }
    })
}

/// One row of the interpretation dossier for the modular-overflow family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BniDossierRow {
    pub n: usize,
    pub i: usize,
    pub interpretation: BniInterpretation,
    pub axioms_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_violation: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: ClaimId,
    pub statement: String,
    pub expected: Expectation,
    pub status: ClaimStatus,
    pub instances_checked: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub dossier: Vec<BniDossierRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// None selects the whole registry.
    pub claim_ids: Option<Vec<ClaimId>>,
    /// Census classes up to this order feed the instance sets.
    pub max_order: usize,
    pub parallelism: Parallelism,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { claim_ids: None, max_order: 4, parallelism: Parallelism::Auto }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub verified: usize,
    pub counterexamples: usize,
    pub mixed: usize,
    pub instances_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub summary: SuiteSummary,
    pub claims: Vec<ClaimReport>,
}

/// True when the suite must signal failure: a claim that was expected to
/// verify produced a counterexample.
pub fn suite_has_blocking_failure(report: &SuiteReport) -> bool {
    report
        .claims
        .iter()
        .any(|c| c.expected == Expectation::Verify && c.status == ClaimStatus::Counterexample)
}

/// Replay every witness of every report; returns how many were checked.
pub fn replay_all(report: &SuiteReport) -> Result<usize> {
    let mut checked = 0;
    for claim in &report.claims {
        for w in &claim.witnesses {
            if !replay_witness(w)? {
                return Err(Error::Shape(format!(
                    "witness for {} on `{}` failed replay",
                    claim.id, w.instance
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

#[derive(Default)]
struct Outcome {
    checked: usize,
    counterexamples: Vec<Witness>,
    support: Vec<Witness>,
    dossier: Vec<BniDossierRow>,
}

impl Outcome {
    fn cex(&mut self, w: Witness) {
        if self.counterexamples.len() < DEFAULT_VIOLATION_CAP {
            self.counterexamples.push(w);
        }
    }
}

struct Ctx {
    census: Vec<(String, FiniteSemiring)>,
    battery: Vec<(String, FiniteSemiring)>,
    parallelism: Parallelism,
}

impl Ctx {
    fn new(cfg: &SuiteConfig) -> Result<Ctx> {
        let mut census = Vec::new();
        for n in 1..=cfg.max_order {
            for (i, s) in
                enumerate_semirings(n, true, None, cfg.parallelism, false)?.into_iter().enumerate()
            {
                census.push((format!("census:o{n}#{i:02}"), s));
            }
        }
        Ok(Ctx { census, battery: battery(), parallelism: cfg.parallelism })
    }

    fn census_where(&self, pred: impl Fn(&FiniteSemiring) -> bool) -> Vec<(String, FiniteSemiring)> {
        self.census
            .iter()
            .filter(|(_, s)| pred(s))
            .map(|(n, s)| (n.clone(), s.clone()))
            .collect()
    }
}

fn wit(id: ClaimId, instance: &str, s: &FiniteSemiring, body: WitnessBody) -> Witness {
    Witness { claim: id, instance: instance.to_string(), encoded: s.encode(), body }
}

fn verdict_wit(id: ClaimId, instance: &str, s: &FiniteSemiring, v: PropertyVerdict) -> Witness {
    wit(id, instance, s, WitnessBody::Verdict { verdict: v })
}

fn ideal_facts(s: &FiniteSemiring) -> Result<WitnessBody> {
    let lat = all_ideals(s)?;
    let elems =
        |idx: &[usize]| -> Vec<Vec<usize>> { idx.iter().map(|&i| lat.ideals[i].0.clone()).collect() };
    Ok(WitnessBody::IdealFacts {
        primes: elems(&lat.primes),
        maximals: elems(&lat.maximals),
        nil: lat.nil.clone(),
    })
}

fn boolean_power(k: usize) -> Result<FiniteSemiring> {
    let factors: Vec<FiniteSemiring> = (0..k).map(|_| boolean()).collect();
    direct_product(&factors, DEFAULT_SIZE_CAP)
}

fn c1_c2(ctx: &Ctx, id: ClaimId) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (name, s) in ctx.census.iter().chain(ctx.battery.iter()) {
        o.checked += 1;
        let pi = decide(s, Property::PiRegular);
        match id {
            ClaimId::C1 => {
                if pi.holds {
                    let c3 = decide(s, Property::UnitOrNoncancellative);
                    if !c3.holds {
                        o.cex(verdict_wit(id, name, s, c3));
                    }
                }
            }
            _ => {
                if !pi.holds {
                    o.cex(verdict_wit(id, name, s, pi));
                }
            }
        }
    }
    Ok(o)
}

fn c3(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    for k in 3..=8 {
        let s = chain(k)?;
        let name = format!("chain:{k}");
        o.checked += 1;
        let cl = decide(&s, Property::Classical);
        let c3 = decide(&s, Property::UnitOrNoncancellative);
        if cl.holds {
            o.cex(verdict_wit(ClaimId::C3, &name, &s, cl));
        } else {
            o.support.push(verdict_wit(ClaimId::C3, &name, &s, cl));
        }
        if !c3.holds {
            o.cex(verdict_wit(ClaimId::C3, &name, &s, c3));
        }
    }
    Ok(o)
}

fn c4(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    let mut instances: Vec<(String, FiniteSemiring)> =
        vec![("hu".into(), hu()), ("lagrassa".into(), lagrassa())];
    for n in 1..=5 {
        instances.push((format!("xn:{n}"), xn(n)?));
    }
    for (name, s) in &instances {
        o.checked += 1;
        let cl = decide(s, Property::Classical);
        if cl.holds {
            o.cex(verdict_wit(ClaimId::C4, name, s, cl));
        } else if name == "hu" || name == "lagrassa" {
            o.support.push(verdict_wit(ClaimId::C4, name, s, cl));
        }
        if !structure_flags(s).is_proper {
            o.cex(wit(
                ClaimId::C4,
                name,
                s,
                WitnessBody::StructureFlag { flag: "is_proper".into(), value: false },
            ));
        }
    }
    Ok(o)
}

fn c5(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    for interp in [BniInterpretation::LiteralMod, BniInterpretation::CanonicalCongruence] {
        for n in 2..=8 {
            for i in 0..n {
                let (s, report) = bni(n, i, interp)?;
                o.checked += 1;
                let axioms_ok = report.ok;
                let classical = axioms_ok.then(|| decide(&s, Property::Classical).holds);
                let first_violation = report.violations.first().cloned();
                let name = format!("bni:{n},{i},{interp}");
                if interp == BniInterpretation::LiteralMod && (n, i) == (3, 1) {
                    let v = first_violation
                        .clone()
                        .ok_or_else(|| Error::Shape("literal (3,1) unexpectedly valid".into()))?;
                    o.support.push(wit(ClaimId::C5, &name, &s, WitnessBody::Axiom { violation: v }));
                }
                if interp == BniInterpretation::CanonicalCongruence && (n, i) == (3, 1) {
                    let p = &classify(&s).profiles[2];
                    o.support.push(wit(
                        ClaimId::C5,
                        &name,
                        &s,
                        WitnessBody::ElementStatus {
                            element: 2,
                            is_unit: p.is_unit,
                            is_zero_divisor: p.is_zero_divisor,
                            is_nilpotent: p.is_nilpotent,
                            is_cancellative: p.is_cancellative,
                        },
                    ));
                }
                o.dossier.push(BniDossierRow { n, i, interpretation: interp, axioms_ok, classical, first_violation });
            }
        }
    }
    Ok(o)
}

fn product_claim(
    id: ClaimId,
    pool: &[(String, FiniteSemiring)],
    arities: &[usize],
    parallelism: Parallelism,
    check: impl Fn(&str, &FiniteSemiring) -> Vec<Witness> + Sync,
) -> Result<Outcome> {
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    for &arity in arities {
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == arity {
                tuples.push(prefix);
                continue;
            }
            let lo = prefix.last().copied().unwrap_or(0);
            // Descending push keeps the popped order ascending.
            for v in (lo..pool.len()).rev() {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    let results = map_vec(parallelism, tuples, |tuple| -> Result<Vec<Witness>> {
        let factors: Vec<FiniteSemiring> = tuple.iter().map(|&i| pool[i].1.clone()).collect();
        let product = direct_product(&factors, DEFAULT_SIZE_CAP)?;
        let name = format!(
            "product:{}",
            tuple.iter().map(|&i| pool[i].0.as_str()).collect::<Vec<_>>().join("*")
        );
        Ok(check(&name, &product))
    });
    let mut o = Outcome::default();
    for r in results {
        o.checked += 1;
        for w in r? {
            o.cex(w);
        }
    }
    let _ = id;
    Ok(o)
}

fn c6(ctx: &Ctx) -> Result<Outcome> {
    let pool = ctx.census_where(|s| decide(s, Property::Classical).holds);
    product_claim(ClaimId::C6, &pool, &[2, 3], ctx.parallelism, |name, p| {
        let cl = decide(p, Property::Classical);
        if cl.holds {
            vec![]
        } else {
            vec![verdict_wit(ClaimId::C6, name, p, cl)]
        }
    })
}

fn c7(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (name, s) in &ctx.census {
        o.checked += 1;
        if decide(s, Property::Complemented).holds {
            let cl = decide(s, Property::Classical);
            if !cl.holds {
                o.cex(verdict_wit(ClaimId::C7, name, s, cl));
            }
        }
    }
    for k in 1..=4 {
        let s = boolean_power(k)?;
        let name = format!("boolean^{k}");
        o.checked += 1;
        for prop in [Property::Complemented, Property::NilpotentFree, Property::Classical] {
            let v = decide(&s, prop);
            if !v.holds {
                o.cex(verdict_wit(ClaimId::C7, &name, &s, v));
            }
        }
    }
    Ok(o)
}

fn c8(ctx: &Ctx) -> Result<Outcome> {
    let mut pool: Vec<(String, FiniteSemiring)> = Vec::new();
    for k in 1..=4 {
        pool.push((format!("boolean^{k}"), boolean_power(k)?));
    }
    pool.extend(ctx.census_where(|s| decide(s, Property::Complemented).holds));
    for p in [2usize, 3, 5, 7] {
        pool.push((format!("zn:{p}"), zn(p)?));
    }
    pool.retain(|(_, s)| {
        decide(s, Property::NilpotentFree).holds && decide(s, Property::Classical).holds
    });
    product_claim(ClaimId::C8, &pool, &[2], ctx.parallelism, |name, p| {
        let mut ws = Vec::new();
        for prop in [Property::NilpotentFree, Property::Classical] {
            let v = decide(p, prop);
            if !v.holds {
                ws.push(verdict_wit(ClaimId::C8, name, p, v));
            }
        }
        ws
    })
}

fn c9(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    let bases: Vec<(String, FiniteSemiring)> = vec![
        ("zn:2".into(), zn(2)?),
        ("zn:4".into(), zn(4)?),
        ("zn:6".into(), zn(6)?),
        ("trunc:2,[2]".into(), trunc_poly_ring(2, &[2], DEFAULT_SIZE_CAP)?),
    ];
    for (rname, r) in &bases {
        for k in 1..=2 {
            let s = dual_numbers(r, k, DEFAULT_SIZE_CAP)?;
            let name = format!("dual:{rname},k={k}");
            o.checked += 1;
            let report = s.verify_axioms();
            if !report.ok {
                let v = report.violations[0].clone();
                o.cex(wit(ClaimId::C9, &name, &s, WitnessBody::Axiom { violation: v }));
                continue;
            }
            if !structure_flags(&s).is_ring {
                o.cex(wit(
                    ClaimId::C9,
                    &name,
                    &s,
                    WitnessBody::StructureFlag { flag: "is_ring".into(), value: false },
                ));
            }
            let cl = decide(&s, Property::Classical);
            if !cl.holds {
                o.cex(verdict_wit(ClaimId::C9, &name, &s, cl));
            }
        }
    }
    Ok(o)
}

fn c10(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    // The one-element semiring has no proper ideals at all, so the
    // prime/maximal characterizations are out of scope for it.
    for (name, s) in ctx.census.iter().filter(|(_, s)| s.order >= 2) {
        o.checked += 1;
        let lat = all_ideals(s)?;
        let cp = decide(s, Property::CompletelyPrimary);
        let unique_prime_is_nil =
            lat.primes.len() == 1 && lat.ideals[lat.primes[0]].0 == lat.nil;
        let nil_is_maximal = lat.maximals.iter().any(|&m| lat.ideals[m].0 == lat.nil);
        if !(cp.holds == unique_prime_is_nil && unique_prime_is_nil == nil_is_maximal) {
            o.cex(verdict_wit(ClaimId::C10, name, s, cp));
            o.cex(wit(ClaimId::C10, name, s, ideal_facts(s)?));
        }
    }
    Ok(o)
}

fn c11(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (name, s) in &ctx.census {
        o.checked += 1;
        let props = order_props(s)?;
        if props.krull_dimension == 0 {
            let cl = decide(s, Property::Classical);
            if !cl.holds {
                o.cex(verdict_wit(ClaimId::C11, name, s, cl));
                o.cex(wit(ClaimId::C11, name, s, ideal_facts(s)?));
            }
        }
    }
    Ok(o)
}

fn c12(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut instances = ctx.census_where(|s| {
        order_props(s).map(|p| p.uniserial).unwrap_or(false)
    });
    for n in [4usize, 8, 9] {
        instances.push((format!("zn:{n}"), zn(n)?));
    }
    for (name, s) in &instances {
        o.checked += 1;
        let cl = decide(s, Property::Classical);
        let report = ann_ann_criterion(s)?;
        if cl.holds != report.all_equal {
            o.cex(verdict_wit(ClaimId::C12, name, s, cl));
            if let Some(row) = report.rows.iter().find(|r| !r.equal) {
                o.cex(wit(
                    ClaimId::C12,
                    name,
                    s,
                    WitnessBody::AnnAnnPair {
                        element: row.element,
                        ann_ann: row.ann_ann.0.clone(),
                        principal: row.principal.0.clone(),
                    },
                ));
            }
        }
    }
    Ok(o)
}

fn c13(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (name, s) in &ctx.census {
        let s_classical = decide(s, Property::Classical).holds;
        let s_cp = decide(s, Property::CompletelyPrimary).holds;
        for (gname, madd, gzero) in abelian_group_tables(1)
            .into_iter()
            .chain(abelian_group_tables(2))
            .chain(abelian_group_tables(3))
            .chain(abelian_group_tables(4))
        {
            for (ai, module) in find_actions(s, &madd, gzero).into_iter().enumerate() {
                o.checked += 1;
                let e = expectation_semiring(&module, DEFAULT_SIZE_CAP)?;
                let ename = format!("expectation:{name}+{gname}#{ai}");
                let e_classical = decide(&e, Property::Classical);
                if s_classical && !e_classical.holds {
                    o.cex(verdict_wit(ClaimId::C13, &ename, &e, e_classical));
                }
                let e_cp = decide(&e, Property::CompletelyPrimary);
                if s_cp != e_cp.holds {
                    o.cex(verdict_wit(ClaimId::C13, &ename, &e, e_cp));
                }
            }
        }
    }
    Ok(o)
}

fn adjoin_instances() -> Result<Vec<(String, FiniteSemiring)>> {
    let z2xz2 = direct_product(&[zn(2)?, zn(2)?], DEFAULT_SIZE_CAP)?;
    Ok(vec![
        ("adjoin_zero:zn4".into(), adjoin_zero(&zn(4)?)?),
        ("adjoin_zero:zn6".into(), adjoin_zero(&zn(6)?)?),
        ("adjoin_zero:zn2xzn2".into(), adjoin_zero(&z2xz2)?),
    ])
}

fn c14(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut instances = ctx.census_where(|s| structure_flags(s).is_entire);
    instances.extend(adjoin_instances()?);
    for (name, s) in &instances {
        if !structure_flags(s).is_entire {
            continue;
        }
        o.checked += 1;
        let q = total_quotient(s)?.localized.quotient;
        if !structure_flags(&q).is_entire {
            o.cex(wit(
                ClaimId::C14,
                &format!("total_quotient({name})"),
                &q,
                WitnessBody::StructureFlag { flag: "is_entire".into(), value: false },
            ));
        }
    }
    Ok(o)
}

fn c15(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    for (name, s) in adjoin_instances()? {
        o.checked += 1;
        let q = total_quotient(&s)?.localized.quotient;
        let qname = format!("total_quotient({name})");
        let cl = decide(&q, Property::Classical);
        if cl.holds {
            o.cex(verdict_wit(ClaimId::C15, &qname, &q, cl));
        } else {
            o.support.push(verdict_wit(ClaimId::C15, &qname, &q, cl));
        }
    }
    Ok(o)
}

fn c16(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (name, s) in ctx.census_where(|s| decide(s, Property::Classical).holds) {
        o.checked += 1;
        let tq = total_quotient(&s)?;
        let bij = is_bijection(&tq.localized.canonical_map, tq.localized.quotient.order);
        if !bij || tq.localized.quotient.order != s.order {
            o.cex(wit(
                ClaimId::C16,
                &name,
                &s,
                WitnessBody::CanonicalMap { map: tq.localized.canonical_map.clone(), bijective: bij },
            ));
        }
    }
    Ok(o)
}

fn c17(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    for (name, s) in [("hu", hu()), ("lagrassa", lagrassa())] {
        o.checked += 1;
        let c = classify(&s);
        if c.cancellative != vec![s.one] {
            for &e in c.cancellative.iter().filter(|&&e| e != s.one) {
                let p = &c.profiles[e];
                o.cex(wit(
                    ClaimId::C17,
                    name,
                    &s,
                    WitnessBody::ElementStatus {
                        element: e,
                        is_unit: p.is_unit,
                        is_zero_divisor: p.is_zero_divisor,
                        is_nilpotent: p.is_nilpotent,
                        is_cancellative: p.is_cancellative,
                    },
                ));
            }
        }
        let tq = total_quotient(&s)?;
        let bij = is_bijection(&tq.localized.canonical_map, tq.localized.quotient.order);
        let map_body =
            WitnessBody::CanonicalMap { map: tq.localized.canonical_map.clone(), bijective: bij };
        if !bij || tq.localized.quotient.order != s.order {
            o.cex(wit(ClaimId::C17, name, &s, map_body));
        } else {
            o.support.push(wit(ClaimId::C17, name, &s, map_body));
        }
        let cl = decide(&s, Property::Classical);
        if cl.holds {
            o.cex(verdict_wit(ClaimId::C17, name, &s, cl));
        } else {
            o.support.push(verdict_wit(ClaimId::C17, name, &s, cl));
        }
    }
    Ok(o)
}

fn ideal_transfer(ctx: &Ctx, id: ClaimId, property: Property) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (name, s) in &ctx.census {
        let (idr, lattice) = ideal_semiring(s, IDEAL_ORDER_CAP)?;
        let props = OrderProps::compute(s, &lattice);
        o.checked += 1;
        let on_ideals = decide(&idr, property);
        let on_base = decide(s, property);
        if on_ideals.holds && !on_base.holds {
            o.cex(verdict_wit(id, &format!("ideals({name})"), &idr, on_ideals.clone()));
            o.cex(verdict_wit(id, name, s, on_base.clone()));
        }
        if props.pis && on_base.holds && !on_ideals.holds {
            o.cex(verdict_wit(id, name, s, on_base));
            o.cex(verdict_wit(id, &format!("ideals({name})"), &idr, on_ideals));
        }
    }
    Ok(o)
}

fn c19(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    let trunc_specs: [(usize, &[usize]); 7] =
        [(2, &[2]), (2, &[3]), (2, &[4]), (3, &[2]), (5, &[1]), (2, &[2, 2]), (2, &[2, 2, 2])];
    for (p, exps) in trunc_specs {
        let s = trunc_poly_ring(p, exps, DEFAULT_SIZE_CAP)?;
        let name = format!("trunc:{p},{exps:?}");
        o.checked += 1;
        if !structure_flags(&s).is_ring {
            o.cex(wit(
                ClaimId::C19,
                &name,
                &s,
                WitnessBody::StructureFlag { flag: "is_ring".into(), value: false },
            ));
        }
        let cp = decide(&s, Property::CompletelyPrimary);
        if !cp.holds {
            o.cex(verdict_wit(ClaimId::C19, &name, &s, cp));
        }
    }
    for g in 0..=3 {
        let (table, identity, labels) = free_idempotent_monoid(g);
        let s = nilpotent_monoid_semiring(&table, identity, Some(labels))?;
        let name = format!("nilpotent_monoid:free({g})");
        o.checked += 1;
        let cp = decide(&s, Property::CompletelyPrimary);
        if !cp.holds {
            o.cex(verdict_wit(ClaimId::C19, &name, &s, cp));
        }
        if !structure_flags(&s).is_proper {
            o.cex(wit(
                ClaimId::C19,
                &name,
                &s,
                WitnessBody::StructureFlag { flag: "is_proper".into(), value: false },
            ));
        }
    }
    Ok(o)
}

fn c20(ctx: &Ctx) -> Result<Outcome> {
    let pool = ctx
        .census_where(|s| s.order >= 2 && decide(s, Property::CompletelyPrimary).holds);
    product_claim(ClaimId::C20, &pool, &[2], ctx.parallelism, |name, p| {
        let mut ws = Vec::new();
        let cl = decide(p, Property::Classical);
        if !cl.holds {
            ws.push(verdict_wit(ClaimId::C20, name, p, cl));
        }
        let cp = decide(p, Property::CompletelyPrimary);
        if cp.holds {
            ws.push(verdict_wit(ClaimId::C20, name, p, cp));
        }
        ws
    })
}

fn c21(ctx: &Ctx) -> Result<Outcome> {
    let _ = ctx;
    let mut o = Outcome::default();
    for (name, s) in [("hu", hu()), ("lagrassa", lagrassa())] {
        o.checked += 1;
        let props = order_props(&s)?;
        if !props.local {
            o.cex(wit(ClaimId::C21, name, &s, ideal_facts(&s)?));
        }
        let cp = decide(&s, Property::CompletelyPrimary);
        if cp.holds {
            o.cex(verdict_wit(ClaimId::C21, name, &s, cp));
        } else {
            o.support.push(verdict_wit(ClaimId::C21, name, &s, cp));
        }
    }
    Ok(o)
}

fn mixed_base_algebra() -> Result<FiniteSemialgebra> {
    // Z_2 with scalars from Z_4 acting through reduction mod 2.
    let base = zn(4)?;
    let madd = vec![vec![0, 1], vec![1, 0]];
    let action = (0..4).map(|s| vec![0, s % 2]).collect();
    let module = FiniteSemimodule::new(base, 2, 0, madd, action)?;
    FiniteSemialgebra::new(module, vec![vec![0, 0], vec![0, 1]], 1)
}

fn c22(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut algebras: Vec<(String, FiniteSemialgebra)> = ctx
        .census
        .iter()
        .map(|(n, s)| (format!("self_algebra({n})"), self_algebra(s)))
        .collect();
    for (name, s) in [("hu".into(), hu()), ("lagrassa".into(), lagrassa())] {
        let name: String = name;
        algebras.push((format!("self_algebra({name})"), self_algebra(&s)));
    }
    for k in 3..=5 {
        algebras.push((format!("self_algebra(chain:{k})"), self_algebra(&chain(k)?)));
    }
    algebras.push(("algebra(zn2_over_zn4)".into(), mixed_base_algebra()?));

    for (name, alg) in &algebras {
        let report = verify_semialgebra(alg);
        if !report.module.ok || !report.ok {
            return Err(Error::Shape(format!("instance `{name}` is not a valid semialgebra")));
        }
        o.checked += 1;
        let scan = subsemimodule_scan(alg)?;
        if scan.has_proper_iso_copy {
            return Err(Error::Shape(format!(
                "finite carrier `{name}` reported a proper isomorphic subsemimodule"
            )));
        }
        if !scan.unit_or_noncancellative {
            for e in 0..alg.module.order {
                if !scan.units.contains(&e) && !scan.noncancellative.contains(&e) {
                    o.cex(wit(
                        ClaimId::C22,
                        name,
                        &alg.module.base,
                        WitnessBody::MonoidElementStatus {
                            table: alg.mmul.clone(),
                            identity: alg.one,
                            element: e,
                            is_unit: false,
                            is_cancellative: true,
                        },
                    ));
                }
            }
        }
    }
    Ok(o)
}

fn c24(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut instances = ctx.census_where(|s| structure_flags(s).is_ring);
    for n in 2..=16 {
        instances.push((format!("zn:{n}"), zn(n)?));
    }
    for (name, s) in &instances {
        o.checked += 1;
        if !structure_flags(s).is_ring {
            o.cex(wit(
                ClaimId::C24,
                name,
                s,
                WitnessBody::StructureFlag { flag: "is_ring".into(), value: false },
            ));
            continue;
        }
        let cl = decide(s, Property::Classical);
        if !cl.holds {
            o.cex(verdict_wit(ClaimId::C24, name, s, cl));
        }
    }
    Ok(o)
}

fn run_claim_inner(ctx: &Ctx, id: ClaimId) -> Result<ClaimReport> {
    let c = claim(id);
    let outcome = match id {
        ClaimId::C1 | ClaimId::C2 => c1_c2(ctx, id)?,
        ClaimId::C3 => c3(ctx)?,
        ClaimId::C4 => c4(ctx)?,
        ClaimId::C5 => c5(ctx)?,
        ClaimId::C6 => c6(ctx)?,
        ClaimId::C7 => c7(ctx)?,
        ClaimId::C8 => c8(ctx)?,
        ClaimId::C9 => c9(ctx)?,
        ClaimId::C10 => c10(ctx)?,
        ClaimId::C11 => c11(ctx)?,
        ClaimId::C12 => c12(ctx)?,
        ClaimId::C13 => c13(ctx)?,
        ClaimId::C14 => c14(ctx)?,
        ClaimId::C15 => c15(ctx)?,
        ClaimId::C16 => c16(ctx)?,
        ClaimId::C17 => c17(ctx)?,
        ClaimId::C18 => ideal_transfer(ctx, ClaimId::C18, Property::Classical)?,
        ClaimId::C19 => c19(ctx)?,
        ClaimId::C20 => c20(ctx)?,
        ClaimId::C21 => c21(ctx)?,
        ClaimId::C22 => c22(ctx)?,
        ClaimId::C23 => ideal_transfer(ctx, ClaimId::C23, Property::CompletelyPrimary)?,
        ClaimId::C24 => c24(ctx)?,
    };
    let status = if id == ClaimId::C5 {
        let good = outcome
            .dossier
            .iter()
            .filter(|r| r.axioms_ok && r.classical == Some(true))
            .count();
        if good == outcome.dossier.len() {
            ClaimStatus::Verified
        } else if good == 0 {
            ClaimStatus::Counterexample
        } else {
            ClaimStatus::Mixed
        }
    } else if outcome.counterexamples.is_empty() {
        ClaimStatus::Verified
    } else {
        ClaimStatus::Counterexample
    };
    let mut witnesses = outcome.counterexamples;
    witnesses.extend(outcome.support);
    Ok(ClaimReport {
        id,
        statement: c.statement.to_string(),
        expected: c.expected,
        status,
        instances_checked: outcome.checked,
        witnesses,
        dossier: outcome.dossier,
    })
}

pub fn run_claim(id: ClaimId, cfg: &SuiteConfig) -> Result<ClaimReport> {
    let ctx = Ctx::new(cfg)?;
    run_claim_inner(&ctx, id)
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let ids: Vec<ClaimId> = match &cfg.claim_ids {
        Some(sel) => {
            // Preserve registry order and drop duplicates.
            ClaimId::ALL.iter().copied().filter(|id| sel.contains(id)).collect()
        }
        None => ClaimId::ALL.to_vec(),
    };
    let ctx = Ctx::new(cfg)?;
    let claims: Vec<ClaimReport> = map_vec(cfg.parallelism, ids, |id| run_claim_inner(&ctx, id))
        .into_iter()
        .collect::<Result<_>>()?;
    let mut summary =
        SuiteSummary { verified: 0, counterexamples: 0, mixed: 0, instances_checked: 0 };
    for c in &claims {
        summary.instances_checked += c.instances_checked;
        match c.status {
            ClaimStatus::Verified => summary.verified += 1,
            ClaimStatus::Counterexample => summary.counterexamples += 1,
            ClaimStatus::Mixed => summary.mixed += 1,
        }
    }
    Ok(SuiteReport { summary, claims })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> SuiteConfig {
        SuiteConfig { claim_ids: None, max_order: 3, parallelism: Parallelism::Auto }
    }

    #[test]
    fn claim_ids_round_trip() {
        for id in ClaimId::ALL {
            assert_eq!(id.token().parse::<ClaimId>().unwrap(), id);
            assert_eq!(id.token().to_lowercase().parse::<ClaimId>().unwrap(), id);
        }
        assert!("C25".parse::<ClaimId>().is_err());
        assert!("".parse::<ClaimId>().is_err());
    }

    #[test]
    fn registry_is_complete_and_only_c5_reports() {
        let reg = registry();
        assert_eq!(reg.len(), 24);
        for (claim, id) in reg.iter().zip(ClaimId::ALL) {
            assert_eq!(claim.id, id);
        }
        let report_only: Vec<ClaimId> =
            reg.iter().filter(|c| c.expected == Expectation::ReportOnly).map(|c| c.id).collect();
        assert_eq!(report_only, vec![ClaimId::C5]);
    }

    #[test]
    fn chain_claim_verifies_with_replayable_support() {
        let cfg = small_cfg();
        let report = run_claim(ClaimId::C3, &cfg).unwrap();
        assert_eq!(report.status, ClaimStatus::Verified);
        assert_eq!(report.instances_checked, 6);
        assert_eq!(report.witnesses.len(), 6);
        for w in &report.witnesses {
            assert!(replay_witness(w).unwrap(), "support witness must replay");
        }
    }

    #[test]
    fn bni_dossier_is_mixed_with_anchor_witnesses() {
        let cfg = small_cfg();
        let report = run_claim(ClaimId::C5, &cfg).unwrap();
        assert_eq!(report.status, ClaimStatus::Mixed);
        assert_eq!(report.expected, Expectation::ReportOnly);
        assert_eq!(report.instances_checked, 70);
        assert_eq!(report.dossier.len(), 70);

        let literal_31 = report
            .dossier
            .iter()
            .find(|r| (r.n, r.i, r.interpretation) == (3, 1, BniInterpretation::LiteralMod))
            .unwrap();
        assert!(!literal_31.axioms_ok);
        assert_eq!(literal_31.classical, None);

        let canonical_31 = report
            .dossier
            .iter()
            .find(|r| {
                (r.n, r.i, r.interpretation) == (3, 1, BniInterpretation::CanonicalCongruence)
            })
            .unwrap();
        assert!(canonical_31.axioms_ok);
        assert_eq!(canonical_31.classical, Some(false));

        assert_eq!(report.witnesses.len(), 2);
        for w in &report.witnesses {
            assert!(replay_witness(w).unwrap());
        }
        // The canonical reading leaves element 2 neither unit nor zero-divisor.
        assert!(report.witnesses.iter().any(|w| matches!(
            &w.body,
            WitnessBody::ElementStatus { element: 2, is_unit: false, is_zero_divisor: false, .. }
        )));
    }

    #[test]
    fn full_suite_at_order_three_has_no_blocking_failures() {
        let cfg = small_cfg();
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.claims.len(), 24);
        assert!(!suite_has_blocking_failure(&report));
        for c in &report.claims {
            if c.expected == Expectation::Verify {
                assert_eq!(c.status, ClaimStatus::Verified, "{} must verify", c.id);
            } else {
                assert_eq!(c.status, ClaimStatus::Mixed, "{} records mixed outcomes", c.id);
            }
            assert!(c.instances_checked > 0, "{} checked nothing", c.id);
        }
        let replayed = replay_all(&report).unwrap();
        assert!(replayed > 0);
    }

    #[test]
    fn suite_selection_preserves_registry_order_and_dedups() {
        let cfg = SuiteConfig {
            claim_ids: Some(vec![ClaimId::C9, ClaimId::C3, ClaimId::C9]),
            max_order: 2,
            parallelism: Parallelism::Sequential,
        };
        let report = run_suite(&cfg).unwrap();
        let ids: Vec<ClaimId> = report.claims.iter().map(|c| c.id).collect();
        assert_eq!(ids, vec![ClaimId::C3, ClaimId::C9]);
    }

    #[test]
    fn reports_are_byte_identical_across_worker_counts() {
        let seq = SuiteConfig {
            claim_ids: Some(vec![ClaimId::C5, ClaimId::C6, ClaimId::C10]),
            max_order: 3,
            parallelism: Parallelism::Sequential,
        };
        let par = SuiteConfig { parallelism: Parallelism::Threads(4), ..seq.clone() };
        let a = serde_json::to_string_pretty(&run_suite(&seq).unwrap()).unwrap();
        let b = serde_json::to_string_pretty(&run_suite(&par).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_claim_is_an_error() {
        assert!(matches!("C0".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let cfg = small_cfg();
        let report = run_claim(ClaimId::C17, &cfg).unwrap();
        assert_eq!(report.status, ClaimStatus::Verified);
        let mut w = report
            .witnesses
            .iter()
            .find(|w| matches!(w.body, WitnessBody::CanonicalMap { .. }))
            .cloned()
            .unwrap();
        if let WitnessBody::CanonicalMap { map, .. } = &mut w.body {
            map.swap(0, 1);
        }
        assert!(!replay_witness(&w).unwrap());
    }
}
