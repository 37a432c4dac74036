//! Constructors for the named semiring families and the derived builders
//! (direct products, zero adjunction, dual numbers, truncated polynomial
//! rings, nilpotent-monoid semirings).
//!
//! Everything here returns index tables; designated elements keep natural
//! positions (the bottom of `xn` sits at index 0, the adjoined zero of
//! `adjoin_zero` likewise), with labels recording the intended reading.

use serde::{Deserialize, Serialize};

use crate::classify::structure_flags;
use crate::error::{Error, Result};
use crate::semiring::{AxiomReport, FiniteSemiring, DEFAULT_SIZE_CAP};

/// The overflow rule for the two-parameter modular family `bni(n, i)`.
///
/// The family is defined by reducing sums and products that exceed `n-1`
/// modulo `n-i`. The reduction target is ambiguous: taking the literal
/// residue lands in `[0, n-i)`, while taking the congruent representative
/// inside the carrier's tail lands in `[i, n-1]`. Both are implemented;
/// they genuinely differ (the literal rule breaks associativity for most
/// parameters), so the choice is an explicit argument everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BniInterpretation {
    LiteralMod,
    CanonicalCongruence,
}

impl std::fmt::Display for BniInterpretation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BniInterpretation::LiteralMod => f.write_str("literal"),
            BniInterpretation::CanonicalCongruence => f.write_str("canonical"),
        }
    }
}

impl std::str::FromStr for BniInterpretation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" | "literal_mod" => Ok(BniInterpretation::LiteralMod),
            "canonical" | "canonical_congruence" => Ok(BniInterpretation::CanonicalCongruence),
            other => Err(Error::Parameter {
                op: "bni",
                msg: format!("unknown interpretation {other:?} (want literal|canonical)"),
            }),
        }
    }
}

pub fn boolean() -> FiniteSemiring {
    FiniteSemiring::new(
        2,
        0,
        1,
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![0, 0], vec![0, 1]],
        None,
    )
    .expect("fixed table")
}

/// Totally ordered carrier 0 < 1 < ... < k-1 under max/min.
pub fn chain(k: usize) -> Result<FiniteSemiring> {
    if k < 2 {
        return Err(Error::Parameter { op: "chain", msg: format!("need k >= 2, got {k}") });
    }
    if k > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCap { requested: k, cap: DEFAULT_SIZE_CAP });
    }
    FiniteSemiring::from_fns(k, 0, k - 1, |a, b| a.max(b), |a, b| a.min(b), None)
}

/// Three elements 0 < u < 1; addition is max except 1+1 = u, multiplication
/// is min. The middle element is neither a unit nor a zero-divisor.
pub fn hu() -> FiniteSemiring {
    FiniteSemiring::new(
        3,
        0,
        2,
        vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]],
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
        Some(vec!["0".into(), "u".into(), "1".into()]),
    )
    .expect("fixed table")
}

/// Three elements with both operations idempotent and 1+u = u. The cells not
/// forced by identity/absorption laws are u+u = u, 1+1 = 1, 1+u = u, u*u = u.
pub fn lagrassa() -> FiniteSemiring {
    FiniteSemiring::new(
        3,
        0,
        2,
        vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]],
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
        Some(vec!["0".into(), "u".into(), "1".into()]),
    )
    .expect("fixed table")
}

/// Integers modulo n.
pub fn zn(n: usize) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::Parameter { op: "zn", msg: "need n >= 1".into() });
    }
    if n > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCap { requested: n, cap: DEFAULT_SIZE_CAP });
    }
    FiniteSemiring::from_fns(n, 0, 1 % n, |a, b| (a + b) % n, |a, b| (a * b) % n, None)
}

/// Carrier {-inf, 0, 1, ..., n} with max addition and capped-sum
/// multiplication xy = min(x+y, n); -inf (index 0) is absorbing, the integer
/// 0 (index 1) is the multiplicative identity.
pub fn xn(n: usize) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::Parameter { op: "xn", msg: "need n >= 1".into() });
    }
    if n + 2 > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCap { requested: n + 2, cap: DEFAULT_SIZE_CAP });
    }
    let order = n + 2;
    let labels = std::iter::once("-inf".to_string())
        .chain((0..=n).map(|v| v.to_string()))
        .collect();
    FiniteSemiring::from_fns(
        order,
        0,
        1,
        |a, b| a.max(b),
        move |a, b| {
            if a == 0 || b == 0 {
                0
            } else {
                ((a - 1) + (b - 1)).min(n) + 1
            }
        },
        Some(labels),
    )
}

/// Carrier {0, ..., n-1}; sums and products that stay below n are exact, and
/// overflow reduces modulo n-i per the chosen interpretation. Returned with
/// the axiom report because the literal rule can fail associativity; that
/// failure is data, not an error.
pub fn bni(
    n: usize,
    i: usize,
    interpretation: BniInterpretation,
) -> Result<(FiniteSemiring, AxiomReport)> {
    if n < 2 {
        return Err(Error::Parameter { op: "bni", msg: format!("need n >= 2, got {n}") });
    }
    if i >= n {
        return Err(Error::Parameter {
            op: "bni",
            msg: format!("need 0 <= i <= n-1, got i={i} for n={n}"),
        });
    }
    if n > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCap { requested: n, cap: DEFAULT_SIZE_CAP });
    }
    let m = n - i;
    let norm = move |k: usize| -> usize {
        if k < n {
            k
        } else {
            match interpretation {
                BniInterpretation::LiteralMod => k % m,
                BniInterpretation::CanonicalCongruence => i + (k - i) % m,
            }
        }
    };
    let s = FiniteSemiring::from_fns(n, 0, 1, move |a, b| norm(a + b), move |a, b| norm(a * b), None)?;
    let report = s.verify_axioms();
    Ok((s, report))
}

/// Componentwise operations on the cartesian product; element index is the
/// mixed-radix encoding of the factor tuple, last factor fastest.
pub fn direct_product(factors: &[FiniteSemiring], cap: usize) -> Result<FiniteSemiring> {
    if factors.is_empty() {
        return Err(Error::Parameter { op: "direct_product", msg: "need at least one factor".into() });
    }
    let mut order: usize = 1;
    for f in factors {
        order = order
            .checked_mul(f.order)
            .filter(|&o| o <= cap)
            .ok_or(Error::SizeCap { requested: usize::MAX, cap })?;
    }
    if order > cap {
        return Err(Error::SizeCap { requested: order, cap });
    }
    let r = factors.len();
    let mut stride = vec![1usize; r];
    for j in (0..r.saturating_sub(1)).rev() {
        stride[j] = stride[j + 1] * factors[j + 1].order;
    }
    let split = |mut x: usize| -> Vec<usize> {
        let mut t = vec![0; r];
        for j in 0..r {
            t[j] = x / stride[j];
            x %= stride[j];
        }
        t
    };
    let join = |t: &[usize]| -> usize { t.iter().zip(&stride).map(|(&d, &s)| d * s).sum() };

    let zero = join(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
    let one = join(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
    let labels = (0..order)
        .map(|x| {
            let t = split(x);
            let parts: Vec<String> =
                t.iter().enumerate().map(|(j, &d)| factors[j].label(d)).collect();
            format!("({})", parts.join(","))
        })
        .collect();

    FiniteSemiring::from_fns(
        order,
        zero,
        one,
        |x, y| {
            let (tx, ty) = (split(x), split(y));
            join(&(0..r).map(|j| factors[j].add(tx[j], ty[j])).collect::<Vec<_>>())
        },
        |x, y| {
            let (tx, ty) = (split(x), split(y));
            join(&(0..r).map(|j| factors[j].mul(tx[j], ty[j])).collect::<Vec<_>>())
        },
        Some(labels),
    )
}

/// Adds a fresh absorbing zero below a ring: the old ring zero becomes an
/// ordinary element. Requires an actual ring with 1 != 0; the output is
/// always entire and never a ring.
pub fn adjoin_zero(r: &FiniteSemiring) -> Result<FiniteSemiring> {
    if r.order < 2 {
        return Err(Error::Parameter { op: "adjoin_zero", msg: "need 1 != 0 in the ring".into() });
    }
    if !structure_flags(r).is_ring {
        return Err(Error::Parameter { op: "adjoin_zero", msg: "input must be a ring".into() });
    }
    let order = r.order + 1;
    let labels = std::iter::once("z".to_string())
        .chain((0..r.order).map(|e| r.label(e)))
        .collect();
    FiniteSemiring::from_fns(
        order,
        0,
        r.one + 1,
        |a, b| {
            if a == 0 {
                b
            } else if b == 0 {
                a
            } else {
                r.add(a - 1, b - 1) + 1
            }
        },
        |a, b| {
            if a == 0 || b == 0 {
                0
            } else {
                r.mul(a - 1, b - 1) + 1
            }
        },
        Some(labels),
    )
}

/// Ring extension by k nilpotent generators e1..ek with all pairwise products
/// zero: elements are (k+1)-tuples (a0, a1, ..., ak) over R, addition is
/// componentwise, and (a0,a)(b0,b) = (a0 b0, a0 b + b0 a).
pub fn dual_numbers(r: &FiniteSemiring, k: usize, cap: usize) -> Result<FiniteSemiring> {
    if k == 0 {
        return Err(Error::Parameter { op: "dual_numbers", msg: "need k >= 1".into() });
    }
    if !structure_flags(r).is_ring {
        return Err(Error::Parameter { op: "dual_numbers", msg: "input must be a ring".into() });
    }
    let base = r.order;
    let mut order: usize = 1;
    for _ in 0..=k {
        order = order
            .checked_mul(base)
            .filter(|&o| o <= cap)
            .ok_or(Error::SizeCap { requested: usize::MAX, cap })?;
    }
    // Digit 0 is a0 (highest stride); digits 1..=k are the generator coords.
    let split = move |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; k + 1];
        for j in (0..=k).rev() {
            d[j] = x % base;
            x /= base;
        }
        d
    };
    let join = move |d: &[usize]| -> usize { d.iter().fold(0, |acc, &v| acc * base + v) };

    let one = {
        let mut d = vec![r.zero; k + 1];
        d[0] = r.one;
        join(&d)
    };
    let zero = join(&vec![r.zero; k + 1]);
    let labels = (0..order)
        .map(|x| {
            let d = split(x);
            let mut parts = vec![r.label(d[0])];
            for (j, &c) in d.iter().enumerate().skip(1) {
                if c != r.zero {
                    parts.push(format!("{}e{}", r.label(c), j));
                }
            }
            parts.join("+")
        })
        .collect();

    FiniteSemiring::from_fns(
        order,
        zero,
        one,
        |x, y| {
            let (dx, dy) = (split(x), split(y));
            join(&(0..=k).map(|j| r.add(dx[j], dy[j])).collect::<Vec<_>>())
        },
        |x, y| {
            let (dx, dy) = (split(x), split(y));
            let mut d = vec![0; k + 1];
            d[0] = r.mul(dx[0], dy[0]);
            for j in 1..=k {
                d[j] = r.add(r.mul(dx[0], dy[j]), r.mul(dy[0], dx[j]));
            }
            join(&d)
        },
        Some(labels),
    )
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Quotient of the polynomial ring over the p-element field by the relations
/// x_j^{m_j} = 0. Elements are coefficient vectors indexed by the surviving
/// monomials; order is p^(m_1 * ... * m_k).
pub fn trunc_poly_ring(p: usize, exponents: &[usize], cap: usize) -> Result<FiniteSemiring> {
    if !is_prime(p) {
        return Err(Error::Parameter { op: "trunc_poly_ring", msg: format!("{p} is not prime") });
    }
    if exponents.is_empty() || exponents.iter().any(|&m| m == 0) {
        return Err(Error::Parameter {
            op: "trunc_poly_ring",
            msg: "need a nonempty list of exponents >= 1".into(),
        });
    }
    let mut nmono: usize = 1;
    for &m in exponents {
        nmono = nmono
            .checked_mul(m)
            .ok_or(Error::SizeCap { requested: usize::MAX, cap })?;
    }
    let mut order: usize = 1;
    for _ in 0..nmono {
        order = order
            .checked_mul(p)
            .filter(|&o| o <= cap)
            .ok_or(Error::SizeCap { requested: usize::MAX, cap })?;
    }

    let k = exponents.len();
    // Monomial index <-> exponent tuple, first variable fastest.
    let mono_split = |mut m: usize| -> Vec<usize> {
        let mut e = vec![0; k];
        for j in 0..k {
            e[j] = m % exponents[j];
            m /= exponents[j];
        }
        e
    };
    let mono_join = |e: &[usize]| -> Option<usize> {
        let mut idx = 0;
        let mut stride = 1;
        for j in 0..k {
            if e[j] >= exponents[j] {
                return None;
            }
            idx += e[j] * stride;
            stride *= exponents[j];
        }
        Some(idx)
    };
    let coeff_split = move |mut x: usize| -> Vec<usize> {
        let mut c = vec![0; nmono];
        for slot in c.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        c
    };
    let coeff_join = move |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &v| acc * p + v) };

    let monomials: Vec<Vec<usize>> = (0..nmono).map(mono_split).collect();
    let mono_label = |e: &[usize]| -> String {
        let mut parts = Vec::new();
        for (j, &pow) in e.iter().enumerate() {
            match pow {
                0 => {}
                1 => parts.push(format!("x{}", j + 1)),
                _ => parts.push(format!("x{}^{}", j + 1, pow)),
            }
        }
        parts.join("*")
    };
    let labels = (0..order)
        .map(|x| {
            let c = coeff_split(x);
            let mut terms = Vec::new();
            for (m, &cm) in c.iter().enumerate() {
                if cm == 0 {
                    continue;
                }
                let mono = mono_label(&monomials[m]);
                terms.push(match (cm, mono.is_empty()) {
                    (_, true) => cm.to_string(),
                    (1, false) => mono,
                    (_, false) => format!("{cm}*{mono}"),
                });
            }
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();

    FiniteSemiring::from_fns(
        order,
        0,
        1,
        |x, y| {
            let (cx, cy) = (coeff_split(x), coeff_split(y));
            coeff_join(&(0..nmono).map(|m| (cx[m] + cy[m]) % p).collect::<Vec<_>>())
        },
        |x, y| {
            let (cx, cy) = (coeff_split(x), coeff_split(y));
            let mut out = vec![0usize; nmono];
            for a in 0..nmono {
                if cx[a] == 0 {
                    continue;
                }
                for b in 0..nmono {
                    if cy[b] == 0 {
                        continue;
                    }
                    let sum: Vec<usize> =
                        monomials[a].iter().zip(&monomials[b]).map(|(u, v)| u + v).collect();
                    if let Some(m) = mono_join(&sum) {
                        out[m] = (out[m] + cx[a] * cy[b]) % p;
                    }
                }
            }
            coeff_join(&out)
        },
        Some(labels),
    )
}

/// Adjoins a multiplicative identity to an idempotent commutative monoid P
/// whose elements multiply to the monoid identity: addition extends P's
/// operation with the new element absorbing, and a*b = 0 for a, b in P.
/// Every element except the adjoined identity squares to zero.
pub fn nilpotent_monoid_semiring(
    p_table: &[Vec<usize>],
    p_identity: usize,
    p_labels: Option<Vec<String>>,
) -> Result<FiniteSemiring> {
    let m = p_table.len();
    if m == 0 || p_identity >= m {
        return Err(Error::Parameter {
            op: "nilpotent_monoid_semiring",
            msg: "monoid table empty or identity out of range".into(),
        });
    }
    for (i, row) in p_table.iter().enumerate() {
        if row.len() != m || row.iter().any(|&v| v >= m) {
            return Err(Error::Parameter {
                op: "nilpotent_monoid_semiring",
                msg: format!("monoid row {i} malformed"),
            });
        }
    }
    for a in 0..m {
        if p_table[a][p_identity] != a || p_table[a][a] != a {
            return Err(Error::Parameter {
                op: "nilpotent_monoid_semiring",
                msg: format!("monoid not idempotent-with-identity at element {a}"),
            });
        }
        for b in 0..m {
            if p_table[a][b] != p_table[b][a] {
                return Err(Error::Parameter {
                    op: "nilpotent_monoid_semiring",
                    msg: format!("monoid not commutative at ({a},{b})"),
                });
            }
            for c in 0..m {
                if p_table[p_table[a][b]][c] != p_table[a][p_table[b][c]] {
                    return Err(Error::Parameter {
                        op: "nilpotent_monoid_semiring",
                        msg: format!("monoid not associative at ({a},{b},{c})"),
                    });
                }
            }
        }
    }

    let order = m + 1;
    let one = m;
    let labels = match p_labels {
        Some(ls) if ls.len() == m => {
            Some(ls.into_iter().chain(std::iter::once("1".to_string())).collect())
        }
        Some(_) => {
            return Err(Error::Parameter {
                op: "nilpotent_monoid_semiring",
                msg: "label count mismatch".into(),
            })
        }
        None => None,
    };
    FiniteSemiring::from_fns(
        order,
        p_identity,
        one,
        |a, b| {
            if a == one || b == one {
                one
            } else {
                p_table[a][b]
            }
        },
        |a, b| {
            if a == one {
                b
            } else if b == one {
                a
            } else {
                p_identity
            }
        },
        labels,
    )
}

/// The subsets of g generators under union: the free idempotent commutative
/// monoid on g generators, as a table plus identity (the empty set, mask 0).
pub fn free_idempotent_monoid(generators: usize) -> (Vec<Vec<usize>>, usize, Vec<String>) {
    let m = 1usize << generators;
    let table = (0..m).map(|a| (0..m).map(|b| a | b).collect()).collect();
    let labels = (0..m)
        .map(|mask: usize| {
            if mask == 0 {
                "0".to_string()
            } else {
                (0..generators)
                    .filter(|g| mask & (1 << g) != 0)
                    .map(|g| char::from(b'a' + g as u8).to_string())
                    .collect::<Vec<_>>()
                    .join("+")
            }
        })
        .collect();
    (table, 0, labels)
}

/// Named-family selector: the part of the construction vocabulary that needs
/// no nested semiring arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Boolean,
    Chain,
    Hu,
    Lagrassa,
    Zn,
    Xn,
    Bni,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bni_interpretation: Option<BniInterpretation>,
}

impl FamilySpec {
    /// Parses the compact `family[:p1,p2[,interp]]` syntax, e.g. `chain:3`,
    /// `bni:4,1,canonical`.
    pub fn parse(text: &str) -> Result<Self> {
        let (name, rest) = match text.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (text, None),
        };
        let family = match name {
            "boolean" => Family::Boolean,
            "chain" => Family::Chain,
            "hu" => Family::Hu,
            "lagrassa" => Family::Lagrassa,
            "zn" => Family::Zn,
            "xn" => Family::Xn,
            "bni" => Family::Bni,
            other => {
                return Err(Error::Parameter {
                    op: "construct",
                    msg: format!("unknown family {other:?}"),
                })
            }
        };
        let mut params = Vec::new();
        let mut bni_interpretation = None;
        if let Some(rest) = rest {
            for part in rest.split(',') {
                if let Ok(v) = part.parse::<usize>() {
                    params.push(v);
                } else if family == Family::Bni {
                    bni_interpretation = Some(part.parse()?);
                } else {
                    return Err(Error::Parameter {
                        op: "construct",
                        msg: format!("bad parameter {part:?} for {name}"),
                    });
                }
            }
        }
        Ok(FamilySpec { family, params, bni_interpretation })
    }
}

/// Builds the named family and verifies it, returning the table together
/// with its axiom report. Only `bni` under the literal rule can produce a
/// failing report; that outcome is returned, not raised.
pub fn construct_named(spec: &FamilySpec) -> Result<(FiniteSemiring, AxiomReport)> {
    let arity_err = |want: &str| Error::Parameter {
        op: "construct",
        msg: format!("{:?} takes {want}", spec.family),
    };
    let built = match (&spec.family, spec.params.as_slice()) {
        (Family::Boolean, []) => boolean(),
        (Family::Chain, [k]) => chain(*k)?,
        (Family::Hu, []) => hu(),
        (Family::Lagrassa, []) => lagrassa(),
        (Family::Zn, [n]) => zn(*n)?,
        (Family::Xn, [n]) => xn(*n)?,
        (Family::Bni, [n, i]) => {
            let interp = spec
                .bni_interpretation
                .unwrap_or(BniInterpretation::CanonicalCongruence);
            return bni(*n, *i, interp);
        }
        (Family::Boolean | Family::Hu | Family::Lagrassa, _) => return Err(arity_err("no parameters")),
        (Family::Chain | Family::Zn | Family::Xn, _) => return Err(arity_err("one parameter")),
        (Family::Bni, _) => return Err(arity_err("two parameters plus optional interpretation")),
    };
    let report = built.verify_axioms();
    Ok((built, report))
}

/// The standard instance pool: one labelled copy of every construction the
/// crate ships, at the scales the test suites exercise. Deterministic order.
pub fn battery() -> Vec<(String, FiniteSemiring)> {
    let cap = DEFAULT_SIZE_CAP;
    let mut out: Vec<(String, FiniteSemiring)> = Vec::new();
    let mut push = |label: String, s: FiniteSemiring| out.push((label, s));

    push("boolean".into(), boolean());
    push("hu".into(), hu());
    push("lagrassa".into(), lagrassa());
    for k in 2..=8 {
        push(format!("chain({k})"), chain(k).unwrap());
    }
    for n in 2..=64 {
        push(format!("zn({n})"), zn(n).unwrap());
    }
    for n in 1..=5 {
        push(format!("xn({n})"), xn(n).unwrap());
    }
    for n in 2..=8 {
        for i in 0..n {
            let (s, report) = bni(n, i, BniInterpretation::CanonicalCongruence).unwrap();
            debug_assert!(report.ok);
            push(format!("bni({n},{i},canonical)"), s);
        }
    }
    // The literal overflow rule only yields semirings at i = 0 and at n = 2.
    for n in 2..=8 {
        let (s, _) = bni(n, 0, BniInterpretation::LiteralMod).unwrap();
        push(format!("bni({n},0,literal)"), s);
    }
    let (b21, _) = bni(2, 1, BniInterpretation::LiteralMod).unwrap();
    push("bni(2,1,literal)".into(), b21);

    let b = boolean();
    let z2 = zn(2).unwrap();
    let z3 = zn(3).unwrap();
    let z4 = zn(4).unwrap();
    let z6 = zn(6).unwrap();
    push("product(boolean,boolean)".into(), direct_product(&[b.clone(), b.clone()], cap).unwrap());
    push(
        "product(boolean,boolean,boolean)".into(),
        direct_product(&[b.clone(), b.clone(), b.clone()], cap).unwrap(),
    );
    push(
        "product(boolean,boolean,boolean,boolean)".into(),
        direct_product(&[b.clone(), b.clone(), b.clone(), b.clone()], cap).unwrap(),
    );
    push("product(zn(2),zn(3))".into(), direct_product(&[z2.clone(), z3.clone()], cap).unwrap());
    push("product(boolean,zn(4))".into(), direct_product(&[b.clone(), z4.clone()], cap).unwrap());
    push("product(zn(2),zn(2))".into(), direct_product(&[z2.clone(), z2.clone()], cap).unwrap());

    push("adjoin_zero(zn(2))".into(), adjoin_zero(&z2).unwrap());
    push("adjoin_zero(zn(4))".into(), adjoin_zero(&z4).unwrap());
    push("adjoin_zero(zn(6))".into(), adjoin_zero(&z6).unwrap());
    let z2xz2 = direct_product(&[z2.clone(), z2.clone()], cap).unwrap();
    push("adjoin_zero(zn(2)xzn(2))".into(), adjoin_zero(&z2xz2).unwrap());

    push("dual_numbers(zn(4),1)".into(), dual_numbers(&z4, 1, cap).unwrap());
    push("dual_numbers(zn(2),2)".into(), dual_numbers(&z2, 2, cap).unwrap());

    push("trunc_poly(2,[2])".into(), trunc_poly_ring(2, &[2], cap).unwrap());
    push("trunc_poly(2,[3])".into(), trunc_poly_ring(2, &[3], cap).unwrap());
    push("trunc_poly(2,[4])".into(), trunc_poly_ring(2, &[4], cap).unwrap());
    push("trunc_poly(3,[2])".into(), trunc_poly_ring(3, &[2], cap).unwrap());
    push("trunc_poly(5,[1])".into(), trunc_poly_ring(5, &[1], cap).unwrap());
    push("trunc_poly(2,[2,2])".into(), trunc_poly_ring(2, &[2, 2], cap).unwrap());
    push("trunc_poly(2,[2,2,2])".into(), trunc_poly_ring(2, &[2, 2, 2], cap).unwrap());

    for g in 0..=3 {
        let (table, id, labels) = free_idempotent_monoid(g);
        push(
            format!("nilpotent_monoid(free({g}))"),
            nilpotent_monoid_semiring(&table, id, Some(labels)).unwrap(),
        );
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, structure_flags};
    use crate::iso::find_isomorphism;
    use crate::semiring::Axiom;

    #[test]
    fn named_families_pass_axioms_at_tested_scales() {
        for k in 2..=16 {
            assert!(chain(k).unwrap().verify_axioms().ok, "chain({k})");
        }
        for n in 1..=8 {
            assert!(xn(n).unwrap().verify_axioms().ok, "xn({n})");
        }
        for n in 1..=64 {
            assert!(zn(n).unwrap().verify_axioms().ok, "zn({n})");
        }
        assert!(boolean().verify_axioms().ok);
        assert!(hu().verify_axioms().ok);
        assert!(lagrassa().verify_axioms().ok);
    }

    #[test]
    fn bni_canonical_always_valid_literal_valid_only_at_degenerate_params() {
        for n in 2..=8 {
            for i in 0..n {
                let (_, canonical) = bni(n, i, BniInterpretation::CanonicalCongruence).unwrap();
                assert!(canonical.ok, "canonical bni({n},{i})");
                let (_, literal) = bni(n, i, BniInterpretation::LiteralMod).unwrap();
                let expect_ok = i == 0 || n == 2;
                assert_eq!(literal.ok, expect_ok, "literal bni({n},{i})");
            }
        }
    }

    #[test]
    fn literal_bni_3_1_fails_add_associativity_at_1_1_2() {
        let (_, report) = bni(3, 1, BniInterpretation::LiteralMod).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::AddAssociative && v.witness == vec![1, 1, 2]));
    }

    #[test]
    fn canonical_bni_3_1_squares_two_to_two() {
        let (s, report) = bni(3, 1, BniInterpretation::CanonicalCongruence).unwrap();
        assert!(report.ok);
        assert_eq!(s.mul(2, 2), 2);
        let c = classify(&s);
        assert!(!c.profiles[2].is_unit && !c.profiles[2].is_zero_divisor);
    }

    #[test]
    fn bni_at_i_zero_is_the_modular_ring() {
        for n in 2..=8 {
            for interp in [BniInterpretation::LiteralMod, BniInterpretation::CanonicalCongruence] {
                let (s, report) = bni(n, 0, interp).unwrap();
                assert!(report.ok);
                assert!(find_isomorphism(&s, &zn(n).unwrap()).is_some(), "bni({n},0,{interp})");
            }
        }
    }

    #[test]
    fn product_of_cyclic_factors_matches_crt() {
        let p = direct_product(&[zn(2).unwrap(), zn(3).unwrap()], 4096).unwrap();
        assert!(p.verify_axioms().ok);
        assert!(find_isomorphism(&p, &zn(6).unwrap()).is_some());
        let single = direct_product(&[hu()], 4096).unwrap();
        assert!(find_isomorphism(&single, &hu()).is_some());
    }

    #[test]
    fn product_respects_cap() {
        let z64 = zn(64).unwrap();
        assert!(matches!(
            direct_product(&[z64.clone(), z64.clone()], 1000),
            Err(Error::SizeCap { .. })
        ));
        assert!(direct_product(&[z64.clone(), z64.clone()], 4096).is_ok());
    }

    #[test]
    fn adjoin_zero_is_entire_proper_and_keeps_ring_units() {
        let s = adjoin_zero(&zn(2).unwrap()).unwrap();
        assert!(s.verify_axioms().ok);
        assert_eq!(s.order, 3);
        let flags = structure_flags(&s);
        assert!(flags.is_entire && flags.is_proper);
        let c = classify(&s);
        assert_eq!(c.units, vec![2]);
        assert_eq!(c.zero_divisors, vec![0]);

        let s4 = adjoin_zero(&zn(4).unwrap()).unwrap();
        assert!(s4.verify_axioms().ok);
        // Old ring zero-divisor 2 sits at index 3 and loses its partner.
        let c4 = classify(&s4);
        assert!(!c4.profiles[3].is_unit && !c4.profiles[3].is_zero_divisor);
        assert!(matches!(adjoin_zero(&boolean()), Err(Error::Parameter { .. })));
    }

    #[test]
    fn dual_numbers_invert_units_and_square_generators_to_zero() {
        let d = dual_numbers(&zn(4).unwrap(), 1, 4096).unwrap();
        assert!(d.verify_axioms().ok);
        assert_eq!(d.order, 16);
        // (1 + 2e1)^2 = 1 and e1^2 = 0, in the digit encoding a0*4 + a1.
        assert_eq!(d.mul(6, 6), 4 * 1 + 0);
        assert_eq!(d.mul(1, 1), 0);
        assert_eq!(d.labels.as_ref().unwrap()[6], "1+2e1");
        assert!(matches!(dual_numbers(&hu(), 1, 4096), Err(Error::Parameter { .. })));
    }

    #[test]
    fn trunc_poly_small_instances() {
        let t = trunc_poly_ring(2, &[2], 4096).unwrap();
        assert!(t.verify_axioms().ok);
        assert_eq!(t.order, 4);
        let c = classify(&t);
        assert_eq!(c.units, vec![1, 3]);
        assert_eq!(c.nilpotents, vec![0, 2]);
        assert_eq!(t.labels.as_ref().unwrap()[3], "1+x1");

        let p = trunc_poly_ring(5, &[1], 4096).unwrap();
        assert!(find_isomorphism(&p, &zn(5).unwrap()).is_some());

        let big = trunc_poly_ring(2, &[2, 2], 4096).unwrap();
        assert!(big.verify_axioms().ok);
        assert_eq!(big.order, 16);

        assert!(matches!(trunc_poly_ring(4, &[2], 4096), Err(Error::Parameter { .. })));
    }

    #[test]
    fn nilpotent_monoid_on_no_generators_is_boolean() {
        let (table, id, labels) = free_idempotent_monoid(0);
        let s = nilpotent_monoid_semiring(&table, id, Some(labels)).unwrap();
        assert_eq!(s, {
            let mut b = boolean();
            b.labels = Some(vec!["0".into(), "1".into()]);
            b
        });
    }

    #[test]
    fn nilpotent_monoid_squares_to_zero_off_identity() {
        for g in 1..=3 {
            let (table, id, labels) = free_idempotent_monoid(g);
            let s = nilpotent_monoid_semiring(&table, id, Some(labels)).unwrap();
            assert!(s.verify_axioms().ok, "g={g}");
            assert_eq!(s.order, (1 << g) + 1);
            for a in 0..s.order - 1 {
                if a != s.zero {
                    assert_eq!(s.mul(a, a), s.zero);
                }
            }
        }
        // A non-idempotent monoid (cyclic of order 2) is rejected.
        let z2_add = vec![vec![0, 1], vec![1, 0]];
        assert!(nilpotent_monoid_semiring(&z2_add, 0, None).is_err());
    }

    #[test]
    fn family_spec_parses_compact_syntax() {
        assert_eq!(
            FamilySpec::parse("bni:4,1,canonical").unwrap(),
            FamilySpec {
                family: Family::Bni,
                params: vec![4, 1],
                bni_interpretation: Some(BniInterpretation::CanonicalCongruence),
            }
        );
        let (s, report) = construct_named(&FamilySpec::parse("chain:3").unwrap()).unwrap();
        assert!(report.ok);
        assert_eq!(s.order, 3);
        assert!(FamilySpec::parse("chain:x").is_err());
        // Arity errors surface at construction time, not parse time.
        let spec = FamilySpec::parse("hu:3").unwrap();
        assert!(construct_named(&spec).is_err());
    }

    #[test]
    fn battery_tables_are_structurally_valid() {
        let all = battery();
        assert!(all.len() > 100);
        for (label, s) in &all {
            s.validate_shape().unwrap_or_else(|e| panic!("{label}: {e}"));
        }
    }
}
