//! Finite semimodules (commutative addition monoid plus a scalar action) and
//! semialgebras over a finite semiring, the expectation-semiring pairing
//! construction, action search over small additive groups, and subsemimodule
//! enumeration.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::{FiniteSemiring, DEFAULT_VIOLATION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSemimodule {
    pub base: FiniteSemiring,
    pub order: usize,
    pub zero: usize,
    /// madd[x][y] = x + y on the module carrier.
    pub madd: Vec<Vec<usize>>,
    /// action[s][x] = s . x, rows indexed by base elements.
    pub action: Vec<Vec<usize>>,
}

impl FiniteSemimodule {
    pub fn new(
        base: FiniteSemiring,
        order: usize,
        zero: usize,
        madd: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = FiniteSemimodule { base, order, zero, madd, action };
        m.validate_shape()?;
        Ok(m)
    }

    pub fn validate_shape(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Shape("module carrier is empty".into()));
        }
        if self.zero >= self.order {
            return Err(Error::Shape(format!(
                "module zero {} out of range for order {}",
                self.zero, self.order
            )));
        }
        if self.madd.len() != self.order {
            return Err(Error::Shape(format!(
                "madd has {} rows, want {}",
                self.madd.len(),
                self.order
            )));
        }
        for (i, row) in self.madd.iter().enumerate() {
            if row.len() != self.order {
                return Err(Error::Shape(format!("madd row {i} has {} entries", row.len())));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= self.order) {
                return Err(Error::Shape(format!("madd[{i}][{j}] = {v} out of range")));
            }
        }
        if self.action.len() != self.base.order {
            return Err(Error::Shape(format!(
                "action has {} rows, want one per base element ({})",
                self.action.len(),
                self.base.order
            )));
        }
        for (s, row) in self.action.iter().enumerate() {
            if row.len() != self.order {
                return Err(Error::Shape(format!("action row {s} has {} entries", row.len())));
            }
            if let Some((x, &v)) = row.iter().enumerate().find(|(_, &v)| v >= self.order) {
                return Err(Error::Shape(format!("action[{s}][{x}] = {v} out of range")));
            }
        }
        Ok(())
    }

    pub fn madd(&self, x: usize, y: usize) -> usize {
        self.madd[x][y]
    }

    pub fn act(&self, s: usize, x: usize) -> usize {
        self.action[s][x]
    }

    pub fn verify(&self) -> ModuleAxiomReport {
        verify_semimodule(self)
    }
}

/// S acting on its own carrier by multiplication.
pub fn self_module(s: &FiniteSemiring) -> FiniteSemimodule {
    FiniteSemimodule {
        base: s.clone(),
        order: s.order,
        zero: s.zero,
        madd: s.add.clone(),
        action: s.mul.clone(),
    }
}

/// The one-element module over any base.
pub fn trivial_module(s: &FiniteSemiring) -> FiniteSemimodule {
    FiniteSemimodule {
        base: s.clone(),
        order: 1,
        zero: 0,
        madd: vec![vec![0]],
        action: vec![vec![0]; s.order],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleAxiom {
    AddCommutative,
    AddAssociative,
    ZeroIdentity,
    OneActsAsIdentity,
    ZeroScalarKills,
    ZeroModuleAbsorbs,
    ActionDistributesOverModuleSum,
    ScalarSumDistributes,
    ActionAssociative,
}

impl std::fmt::Display for ModuleAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let token = match self {
            ModuleAxiom::AddCommutative => "add_commutative",
            ModuleAxiom::AddAssociative => "add_associative",
            ModuleAxiom::ZeroIdentity => "zero_identity",
            ModuleAxiom::OneActsAsIdentity => "one_acts_as_identity",
            ModuleAxiom::ZeroScalarKills => "zero_scalar_kills",
            ModuleAxiom::ZeroModuleAbsorbs => "zero_module_absorbs",
            ModuleAxiom::ActionDistributesOverModuleSum => "action_distributes_over_module_sum",
            ModuleAxiom::ScalarSumDistributes => "scalar_sum_distributes",
            ModuleAxiom::ActionAssociative => "action_associative",
        };
        f.write_str(token)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleViolation {
    pub axiom: ModuleAxiom,
    /// Scalar arguments first, then module arguments; layout fixed per axiom.
    pub witness: Vec<usize>,
}

impl ModuleViolation {
    pub fn reproduces(&self, m: &FiniteSemimodule) -> bool {
        let w = &self.witness;
        let b = &m.base;
        match (self.axiom, w.as_slice()) {
            (ModuleAxiom::AddCommutative, [x, y]) => m.madd(*x, *y) != m.madd(*y, *x),
            (ModuleAxiom::AddAssociative, [x, y, z]) => {
                m.madd(m.madd(*x, *y), *z) != m.madd(*x, m.madd(*y, *z))
            }
            (ModuleAxiom::ZeroIdentity, [x]) => m.madd(m.zero, *x) != *x,
            (ModuleAxiom::OneActsAsIdentity, [x]) => m.act(b.one, *x) != *x,
            (ModuleAxiom::ZeroScalarKills, [x]) => m.act(b.zero, *x) != m.zero,
            (ModuleAxiom::ZeroModuleAbsorbs, [s]) => m.act(*s, m.zero) != m.zero,
            (ModuleAxiom::ActionDistributesOverModuleSum, [s, x, y]) => {
                m.act(*s, m.madd(*x, *y)) != m.madd(m.act(*s, *x), m.act(*s, *y))
            }
            (ModuleAxiom::ScalarSumDistributes, [s, t, x]) => {
                m.act(b.add(*s, *t), *x) != m.madd(m.act(*s, *x), m.act(*t, *x))
            }
            (ModuleAxiom::ActionAssociative, [s, t, x]) => {
                m.act(b.mul(*s, *t), *x) != m.act(*s, m.act(*t, *x))
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleAxiomReport {
    pub ok: bool,
    pub violations: Vec<ModuleViolation>,
}

pub fn verify_semimodule(m: &FiniteSemimodule) -> ModuleAxiomReport {
    verify_semimodule_capped(m, DEFAULT_VIOLATION_CAP)
}

pub fn verify_semimodule_capped(m: &FiniteSemimodule, cap: usize) -> ModuleAxiomReport {
    let mut violations = Vec::new();
    let push = |axiom: ModuleAxiom, witness: Vec<usize>, v: &mut Vec<ModuleViolation>| {
        if v.len() < cap {
            v.push(ModuleViolation { axiom, witness });
        }
    };
    let b = &m.base;
    for x in 0..m.order {
        if m.madd(m.zero, x) != x {
            push(ModuleAxiom::ZeroIdentity, vec![x], &mut violations);
        }
        if m.act(b.one, x) != x {
            push(ModuleAxiom::OneActsAsIdentity, vec![x], &mut violations);
        }
        if m.act(b.zero, x) != m.zero {
            push(ModuleAxiom::ZeroScalarKills, vec![x], &mut violations);
        }
    }
    for s in 0..b.order {
        if m.act(s, m.zero) != m.zero {
            push(ModuleAxiom::ZeroModuleAbsorbs, vec![s], &mut violations);
        }
    }
    for x in 0..m.order {
        for y in x + 1..m.order {
            if m.madd(x, y) != m.madd(y, x) {
                push(ModuleAxiom::AddCommutative, vec![x, y], &mut violations);
            }
        }
    }
    for x in 0..m.order {
        for y in 0..m.order {
            for z in 0..m.order {
                if m.madd(m.madd(x, y), z) != m.madd(x, m.madd(y, z)) {
                    push(ModuleAxiom::AddAssociative, vec![x, y, z], &mut violations);
                }
            }
        }
    }
    for s in 0..b.order {
        for x in 0..m.order {
            for y in 0..m.order {
                if m.act(s, m.madd(x, y)) != m.madd(m.act(s, x), m.act(s, y)) {
                    push(
                        ModuleAxiom::ActionDistributesOverModuleSum,
                        vec![s, x, y],
                        &mut violations,
                    );
                }
            }
        }
    }
    for s in 0..b.order {
        for t in 0..b.order {
            for x in 0..m.order {
                if m.act(b.add(s, t), x) != m.madd(m.act(s, x), m.act(t, x)) {
                    push(ModuleAxiom::ScalarSumDistributes, vec![s, t, x], &mut violations);
                }
                if m.act(b.mul(s, t), x) != m.act(s, m.act(t, x)) {
                    push(ModuleAxiom::ActionAssociative, vec![s, t, x], &mut violations);
                }
            }
        }
    }
    ModuleAxiomReport { ok: violations.is_empty(), violations }
}

/// Additively invertible module elements; equals the whole carrier exactly
/// when module addition is a group.
pub fn v_set(m: &FiniteSemimodule) -> Vec<usize> {
    (0..m.order)
        .filter(|&x| (0..m.order).any(|y| m.madd(x, y) == m.zero))
        .collect()
}

/// Pairs (s, m) with componentwise addition and the cross-action product
/// (s1, m1)(s2, m2) = (s1 s2, s1 m2 + s2 m1). Index = s * |M| + m.
pub fn expectation_semiring(m: &FiniteSemimodule, cap: usize) -> Result<FiniteSemiring> {
    let b = &m.base;
    let order = b
        .order
        .checked_mul(m.order)
        .filter(|&o| o <= cap)
        .ok_or(Error::SizeCap { requested: usize::MAX, cap })?;
    let (split, join) = (
        |i: usize| (i / m.order, i % m.order),
        |s: usize, x: usize| s * m.order + x,
    );
    let labels = (0..order)
        .map(|i| {
            let (s, x) = split(i);
            format!("({},{x})", b.label(s))
        })
        .collect();
    FiniteSemiring::from_fns(
        order,
        join(b.zero, m.zero),
        join(b.one, m.zero),
        |i, j| {
            let ((s1, m1), (s2, m2)) = (split(i), split(j));
            join(b.add(s1, s2), m.madd(m1, m2))
        },
        |i, j| {
            let ((s1, m1), (s2, m2)) = (split(i), split(j));
            join(b.mul(s1, s2), m.madd(m.act(s1, m2), m.act(s2, m1)))
        },
        Some(labels),
    )
}

/// Small commutative group addition tables used as action-search carriers:
/// cyclic groups up to order 4 plus the Klein four-group.
pub fn abelian_group_tables(order: usize) -> Vec<(String, Vec<Vec<usize>>, usize)> {
    let cyclic = |k: usize| -> Vec<Vec<usize>> {
        (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect()
    };
    match order {
        1 | 2 | 3 => vec![(format!("Z{order}"), cyclic(order), 0)],
        4 => {
            let klein = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            vec![("Z4".into(), cyclic(4), 0), ("V4".into(), klein, 0)]
        }
        _ => Vec::new(),
    }
}

/// All scalar actions of `base` on the commutative monoid (madd, zero_m):
/// enumerates the additive endomorphisms of the monoid, then every map from
/// base elements to endomorphisms satisfying the semimodule laws. Exhaustive
/// for the small carriers used here.
pub fn find_actions(
    base: &FiniteSemiring,
    madd: &[Vec<usize>],
    zero_m: usize,
) -> Vec<FiniteSemimodule> {
    let m = madd.len();
    // Additive endomorphisms, as m-vectors, discovered by odometer scan.
    let mut ends: Vec<Vec<usize>> = Vec::new();
    let total = (m as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    for code in 0..total {
        let mut f = vec![0usize; m];
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = (c % m as u64) as usize;
            c /= m as u64;
        }
        if f[zero_m] != zero_m {
            continue;
        }
        let additive =
            (0..m).all(|x| (0..m).all(|y| f[madd[x][y]] == madd[f[x]][f[y]]));
        if additive {
            ends.push(f);
        }
    }

    let zero_end: Vec<usize> = vec![zero_m; m];
    let id_end: Vec<usize> = (0..m).collect();
    let n = base.order;
    let mut out = Vec::new();
    let mut assign: Vec<Option<usize>> = vec![None; n]; // index into ends
    let end_index = |f: &Vec<usize>, ends: &Vec<Vec<usize>>| ends.iter().position(|g| g == f);
    let Some(zero_idx) = end_index(&zero_end, &ends) else {
        return out;
    };
    let Some(id_idx) = end_index(&id_end, &ends) else {
        return out;
    };
    assign[base.zero] = Some(zero_idx);
    assign[base.one] = Some(id_idx);

    fn consistent(
        base: &FiniteSemiring,
        madd: &[Vec<usize>],
        ends: &[Vec<usize>],
        assign: &[Option<usize>],
    ) -> bool {
        let m = madd.len();
        for s in 0..base.order {
            let Some(fs) = assign[s] else { continue };
            for t in 0..base.order {
                let Some(ft) = assign[t] else { continue };
                if let Some(fsum) = assign[base.add(s, t)] {
                    if (0..m).any(|x| ends[fsum][x] != madd[ends[fs][x]][ends[ft][x]]) {
                        return false;
                    }
                }
                if let Some(fprod) = assign[base.mul(s, t)] {
                    if (0..m).any(|x| ends[fprod][x] != ends[fs][ends[ft][x]]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(
        base: &FiniteSemiring,
        madd: &[Vec<usize>],
        zero_m: usize,
        ends: &[Vec<usize>],
        assign: &mut Vec<Option<usize>>,
        out: &mut Vec<FiniteSemimodule>,
    ) {
        let Some(next) = assign.iter().position(Option::is_none) else {
            let action: Vec<Vec<usize>> =
                assign.iter().map(|&f| ends[f.unwrap()].clone()).collect();
            out.push(FiniteSemimodule {
                base: base.clone(),
                order: madd.len(),
                zero: zero_m,
                madd: madd.to_vec(),
                action,
            });
            return;
        };
        for f in 0..ends.len() {
            assign[next] = Some(f);
            if consistent(base, madd, ends, assign) {
                search(base, madd, zero_m, ends, assign, out);
            }
            assign[next] = None;
        }
    }

    if consistent(base, madd, &ends, &assign) {
        search(base, madd, zero_m, &ends, &mut assign, &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSemialgebra {
    pub module: FiniteSemimodule,
    /// mmul[a][b] = a * b on the module carrier.
    pub mmul: Vec<Vec<usize>>,
    pub one: usize,
}

impl FiniteSemialgebra {
    pub fn new(module: FiniteSemimodule, mmul: Vec<Vec<usize>>, one: usize) -> Result<Self> {
        let order = module.order;
        if one >= order || mmul.len() != order || mmul.iter().any(|r| r.len() != order) {
            return Err(Error::Shape("algebra multiplication table malformed".into()));
        }
        if let Some(&v) = mmul.iter().flatten().find(|&&v| v >= order) {
            return Err(Error::Shape(format!("mmul entry {v} out of range")));
        }
        Ok(FiniteSemialgebra { module, mmul, one })
    }

    pub fn mmul(&self, a: usize, b: usize) -> usize {
        self.mmul[a][b]
    }
}

/// A semiring as an algebra over itself.
pub fn self_algebra(s: &FiniteSemiring) -> FiniteSemialgebra {
    FiniteSemialgebra { module: self_module(s), mmul: s.mul.clone(), one: s.one }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraAxiom {
    MulCommutative,
    MulAssociative,
    MulIdentity,
    BilinearLeft,
    BilinearRight,
}

impl std::fmt::Display for AlgebraAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let token = match self {
            AlgebraAxiom::MulCommutative => "mul_commutative",
            AlgebraAxiom::MulAssociative => "mul_associative",
            AlgebraAxiom::MulIdentity => "mul_identity",
            AlgebraAxiom::BilinearLeft => "bilinear_left",
            AlgebraAxiom::BilinearRight => "bilinear_right",
        };
        f.write_str(token)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraViolation {
    pub axiom: AlgebraAxiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraAxiomReport {
    pub module: ModuleAxiomReport,
    pub ok: bool,
    pub violations: Vec<AlgebraViolation>,
}

pub fn verify_semialgebra(a: &FiniteSemialgebra) -> AlgebraAxiomReport {
    let module = verify_semimodule(&a.module);
    let m = &a.module;
    let mut violations = Vec::new();
    let push = |axiom: AlgebraAxiom, witness: Vec<usize>, v: &mut Vec<AlgebraViolation>| {
        if v.len() < DEFAULT_VIOLATION_CAP {
            v.push(AlgebraViolation { axiom, witness });
        }
    };
    for x in 0..m.order {
        if a.mmul(a.one, x) != x {
            push(AlgebraAxiom::MulIdentity, vec![x], &mut violations);
        }
        for y in x + 1..m.order {
            if a.mmul(x, y) != a.mmul(y, x) {
                push(AlgebraAxiom::MulCommutative, vec![x, y], &mut violations);
            }
        }
    }
    for x in 0..m.order {
        for y in 0..m.order {
            for z in 0..m.order {
                if a.mmul(a.mmul(x, y), z) != a.mmul(x, a.mmul(y, z)) {
                    push(AlgebraAxiom::MulAssociative, vec![x, y, z], &mut violations);
                }
            }
        }
    }
    for s in 0..m.base.order {
        for x in 0..m.order {
            for y in 0..m.order {
                if m.act(s, a.mmul(x, y)) != a.mmul(m.act(s, x), y) {
                    push(AlgebraAxiom::BilinearLeft, vec![s, x, y], &mut violations);
                }
                if m.act(s, a.mmul(x, y)) != a.mmul(x, m.act(s, y)) {
                    push(AlgebraAxiom::BilinearRight, vec![s, x, y], &mut violations);
                }
            }
        }
    }
    let ok = module.ok && violations.is_empty();
    AlgebraAxiomReport { module, ok, violations }
}

/// Monoid bijection commuting with the action (bases must coincide).
pub fn find_module_isomorphism(
    a: &FiniteSemimodule,
    b: &FiniteSemimodule,
) -> Option<Vec<usize>> {
    if a.base != b.base || a.order != b.order {
        return None;
    }
    // Orders stay tiny; plain backtracking with incremental checks suffices.
    fn extend(
        a: &FiniteSemimodule,
        b: &FiniteSemimodule,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(x) = map.iter().position(Option::is_none) else {
            return true;
        };
        'cands: for y in 0..b.order {
            if used[y] {
                continue;
            }
            map[x] = Some(y);
            used[y] = true;
            for x2 in 0..a.order {
                let Some(y2) = map[x2] else { continue };
                let fwd = map[a.madd(x, x2)];
                if fwd.is_some_and(|v| v != b.madd(y, y2)) {
                    map[x] = None;
                    used[y] = false;
                    continue 'cands;
                }
            }
            for s in 0..a.base.order {
                if map[a.act(s, x)].is_some_and(|v| v != b.act(s, y)) {
                    map[x] = None;
                    used[y] = false;
                    continue 'cands;
                }
            }
            if extend(a, b, map, used) {
                return true;
            }
            map[x] = None;
            used[y] = false;
        }
        false
    }
    let mut map = vec![None; a.order];
    let mut used = vec![false; a.order];
    map[a.zero] = Some(b.zero);
    used[b.zero] = true;
    if extend(a, b, &mut map, &mut used) {
        let perm: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
        let ok = (0..a.order).all(|x| {
            (0..a.order).all(|y| perm[a.madd(x, y)] == b.madd(perm[x], perm[y]))
        }) && (0..a.base.order).all(|s| {
            (0..a.order).all(|x| perm[a.act(s, x)] == b.act(s, perm[x]))
        });
        ok.then_some(perm)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsemimoduleScan {
    /// Element sets closed under module addition and the full scalar action.
    pub subsemimodules: Vec<Vec<usize>>,
    /// Whether any proper subsemimodule is isomorphic to the whole module.
    /// Forced false on finite carriers: proper means strictly smaller, and
    /// isomorphisms preserve cardinality.
    pub has_proper_iso_copy: bool,
    pub justification: String,
    /// Algebra-level split: units of the internal multiplication vs elements
    /// whose multiplication row collides.
    pub units: Vec<usize>,
    pub noncancellative: Vec<usize>,
    pub unit_or_noncancellative: bool,
}

pub fn subsemimodule_scan(a: &FiniteSemialgebra) -> Result<SubsemimoduleScan> {
    let m = &a.module;
    if m.order > 24 {
        return Err(Error::SizeCap { requested: m.order, cap: 24 });
    }
    let close = |seed: u64| -> u64 {
        let mut mask = seed | 1 << m.zero;
        loop {
            let mut next = mask;
            let members: Vec<usize> = (0..m.order).filter(|&e| mask >> e & 1 == 1).collect();
            for &x in &members {
                for &y in &members {
                    next |= 1 << m.madd(x, y);
                }
                for s in 0..m.base.order {
                    next |= 1 << m.act(s, x);
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    };
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut queue: VecDeque<u64> = VecDeque::new();
    for seed in std::iter::once(0u64).chain((0..m.order).map(|g| 1u64 << g)) {
        let c = close(seed);
        if seen.insert(c) {
            queue.push_back(c);
        }
    }
    while let Some(mask) = queue.pop_front() {
        for &other in seen.clone().iter() {
            let join = close(mask | other);
            if seen.insert(join) {
                queue.push_back(join);
            }
        }
    }
    let mut subsemimodules: Vec<Vec<usize>> = seen
        .iter()
        .map(|&mask| (0..m.order).filter(|&e| mask >> e & 1 == 1).collect())
        .collect();
    subsemimodules.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));

    let mut units = Vec::new();
    let mut noncancellative = Vec::new();
    for e in 0..m.order {
        if (0..m.order).any(|t| a.mmul(e, t) == a.one) {
            units.push(e);
        }
        let mut seen_vals = vec![false; m.order];
        if (0..m.order).any(|x| std::mem::replace(&mut seen_vals[a.mmul(e, x)], true)) {
            noncancellative.push(e);
        }
    }
    let unit_or_noncancellative =
        (0..m.order).all(|e| units.contains(&e) || noncancellative.contains(&e));
    Ok(SubsemimoduleScan {
        subsemimodules,
        has_proper_iso_copy: false,
        justification:
            "a proper subsemimodule has strictly smaller cardinality, so no bijection onto the \
             whole module exists"
                .into(),
        units,
        noncancellative,
        unit_or_noncancellative,
    })
}
