//! Presentations of the Temperley–Lieb algebras T(A_{n-1}), T(B_n) and
//! T(d,n), their Gröbner–Shirshov bases, and their standard monomials.
//!
//! Generators are `E_0, …, E_{n-1}` (type A uses `E_1, …, E_{n-1}`), ordered
//! degree-lexicographically with `E_0 < E_1 < …`. Block notation:
//! `E_{i,j} = E_i E_{i-1} ⋯ E_j` and `E^{i,j} = E_i E_{i+1} ⋯ E_j`, both
//! empty when the range is.

mod algebra;
mod monomial;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, NcPoly, Word};
use crate::rewrite::{RewriteRule, RuleSet};
use crate::scalars::{rational, DeltaPoly};

pub use algebra::{
    completed_basis, dimension, product, subalg_dimension, subalgebra_basis, subalgebra_k_set, TlAlgebra,
};
pub use monomial::{standard_monomials, type_b_forms, StdMonomial};

/// Which algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum Family {
    /// T(A_{n-1}) on `E_1, …, E_{n-1}`.
    TypeA { n: usize },
    /// T(B_n) on `E_0, …, E_{n-1}`.
    TypeB { n: usize },
    /// T(d,n) for G(d,1,n).
    Gd1n { d: usize, n: usize },
}

impl Family {
    pub fn type_a(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Family::TypeA { n })
    }

    pub fn type_b(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Family::TypeB { n })
    }

    pub fn gd1n(d: usize, n: usize) -> Result<Self> {
        check_n(n)?;
        if !(2..=64).contains(&d) {
            return Err(Error::InvalidParameter(format!("d must satisfy 2 <= d <= 64, got {d}")));
        }
        Ok(Family::Gd1n { d, n })
    }

    pub fn n(&self) -> usize {
        match *self {
            Family::TypeA { n } | Family::TypeB { n } | Family::Gd1n { n, .. } => n,
        }
    }

    /// The order of `E_0`'s cyclic relation: 2 for type B; meaningless (and
    /// reported as 1) for type A.
    pub fn d(&self) -> usize {
        match *self {
            Family::TypeA { .. } => 1,
            Family::TypeB { .. } => 2,
            Family::Gd1n { d, .. } => d,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        let a = match self {
            Family::TypeA { n } => Alphabet::with_range(1, *n),
            _ => Alphabet::new(self.n()),
        };
        a.expect("family parameters were validated")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::TypeA { n } => write!(f, "T(A_{})", n - 1),
            Family::TypeB { n } => write!(f, "T(B_{n})"),
            Family::Gd1n { d, n } => write!(f, "T({d},{n})"),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=64).contains(&n) {
        return Err(Error::InvalidParameter(format!("n must satisfy 2 <= n <= 64, got {n}")));
    }
    Ok(())
}

/// Kind of relation a rule belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleFamily {
    /// `E_0^d → (d-1)δE_0` (`E_0² → δE_0` in type B).
    ZeroPower,
    /// `E_i² → δE_i`, `i ≥ 1`.
    Idempotent,
    /// `E_iE_j → E_jE_i`, `i > j + 1`.
    Commutation,
    /// `E_iE_jE_i → E_i`, `j = i ± 1`, in the defining relations.
    Untwist,
    /// `E_{i,j}E_i → E_{i-2,j}E_i`.
    DescendingUntwist,
    /// `E_jE_{i,j} → E_jE_{i,j+2}`.
    AscendingUntwist,
    /// `E_0E_1E_0^kE_1 → (k+1)E_0E_1`.
    ZeroOneQuartic,
    /// `E_1E_0^kE_1E_0 → (k+1)E_1E_0`.
    OneZeroQuartic,
    /// `E_{i,1}E_0^kE^{1,j}E_i → E_{i-2,1}E_0^kE^{1,j}E_i`.
    ZeroBraid,
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleFamily::ZeroPower => "zero-power",
            RuleFamily::Idempotent => "idempotent",
            RuleFamily::Commutation => "commutation",
            RuleFamily::Untwist => "untwist",
            RuleFamily::DescendingUntwist => "descending-untwist",
            RuleFamily::AscendingUntwist => "ascending-untwist",
            RuleFamily::ZeroOneQuartic => "zero-one-quartic",
            RuleFamily::OneZeroQuartic => "one-zero-quartic",
            RuleFamily::ZeroBraid => "zero-braid",
        };
        f.write_str(s)
    }
}

/// `[i, i-1, …, j]`, empty when `i < j`.
pub(crate) fn desc(i: usize, j: usize) -> Vec<u8> {
    if i < j {
        Vec::new()
    } else {
        (j..=i).rev().map(|x| x as u8).collect()
    }
}

/// `[i, i+1, …, j]`, empty when `i > j`.
pub(crate) fn asc(i: usize, j: usize) -> Vec<u8> {
    if i > j {
        Vec::new()
    } else {
        (i..=j).map(|x| x as u8).collect()
    }
}

fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.concat()
}

fn zeros(k: usize) -> Vec<u8> {
    vec![0; k]
}

/// Rules paired with the family they belong to.
pub type TaggedRules = Vec<(RuleFamily, RewriteRule)>;

fn push(out: &mut TaggedRules, fam: RuleFamily, lhs: Vec<u8>, coeff: DeltaPoly, rhs: Vec<u8>) {
    let rule = RewriteRule::simple(lhs, coeff, rhs).expect("relation is oriented with lhs on top");
    out.push((fam, rule));
}

fn one() -> DeltaPoly {
    DeltaPoly::one()
}

fn delta_times(c: i64) -> DeltaPoly {
    DeltaPoly::delta().scale(&rational(c, 1))
}

fn idempotents(out: &mut TaggedRules, from: usize, n: usize) {
    for i in from..n {
        push(out, RuleFamily::Idempotent, vec![i as u8, i as u8], DeltaPoly::delta(), vec![i as u8]);
    }
}

fn commutations(out: &mut TaggedRules, min_j: usize, n: usize) {
    for i in 0..n {
        for j in min_j..n {
            if i > j + 1 {
                push(out, RuleFamily::Commutation, vec![i as u8, j as u8], one(), vec![j as u8, i as u8]);
            }
        }
    }
}

fn untwists(out: &mut TaggedRules, n: usize) {
    for i in 1..n {
        for j in [i.wrapping_sub(1), i + 1] {
            if (1..n).contains(&j) {
                push(out, RuleFamily::Untwist, vec![i as u8, j as u8, i as u8], one(), vec![i as u8]);
            }
        }
    }
}

fn quartics(out: &mut TaggedRules, d: usize) {
    for k in 1..d {
        let z = zeros(k);
        push(out, RuleFamily::ZeroOneQuartic, cat(&[&[0, 1], &z, &[1]]), DeltaPoly::from_int(k as i64 + 1), vec![0, 1]);
    }
    for k in 1..d {
        let z = zeros(k);
        push(out, RuleFamily::OneZeroQuartic, cat(&[&[1], &z, &[1, 0]]), DeltaPoly::from_int(k as i64 + 1), vec![1, 0]);
    }
}

fn zero_power(out: &mut TaggedRules, d: usize) {
    push(out, RuleFamily::ZeroPower, zeros(d), delta_times(d as i64 - 1), vec![0]);
}

/// `E_{i,j}E_i → E_{i-2,j}E_i` and `E_jE_{i,j} → E_jE_{i,j+2}` for `i > j ≥ 1`.
fn type_a_untwists(out: &mut TaggedRules, n: usize) {
    for i in 1..n {
        for j in 1..i {
            push(
                out,
                RuleFamily::DescendingUntwist,
                cat(&[&desc(i, j), &[i as u8]]),
                one(),
                cat(&[&desc(i.saturating_sub(2), j), &[i as u8]]),
            );
        }
    }
    for i in 1..n {
        for j in 1..i {
            push(
                out,
                RuleFamily::AscendingUntwist,
                cat(&[&[j as u8], &desc(i, j)]),
                one(),
                cat(&[&[j as u8], &desc(i, j + 2)]),
            );
        }
    }
}

/// `E_{i,1}E_0^kE^{1,j}E_i → E_{i-2,1}E_0^kE^{1,j}E_i` for `i > j+1 ≥ 1`,
/// `1 ≤ k < d`.
fn zero_braids(out: &mut TaggedRules, d: usize, n: usize) {
    for i in 2..n {
        for j in 0..i - 1 {
            for k in 1..d {
                let z = zeros(k);
                let up = asc(1, j);
                let lo = if i >= 3 { desc(i - 2, 1) } else { Vec::new() };
                push(
                    out,
                    RuleFamily::ZeroBraid,
                    cat(&[&desc(i, 1), &z, &up, &[i as u8]]),
                    one(),
                    cat(&[&lo, &z, &up, &[i as u8]]),
                );
            }
        }
    }
}

fn ruleset(f: &Family, tagged: &TaggedRules) -> RuleSet {
    RuleSet::new(f.alphabet(), tagged.iter().map(|(_, r)| r.clone()).collect())
        .expect("presentation rules are distinct")
}

/// Defining relations with family tags.
pub fn defining_relations_tagged(f: &Family) -> TaggedRules {
    let mut out = Vec::new();
    let n = f.n();
    match *f {
        Family::TypeA { .. } => {
            idempotents(&mut out, 1, n);
            commutations(&mut out, 1, n);
            untwists(&mut out, n);
        }
        Family::TypeB { .. } => {
            push(&mut out, RuleFamily::ZeroPower, vec![0, 0], DeltaPoly::delta(), vec![0]);
            idempotents(&mut out, 1, n);
            commutations(&mut out, 0, n);
            untwists(&mut out, n);
            push(&mut out, RuleFamily::ZeroOneQuartic, vec![0, 1, 0, 1], DeltaPoly::from_int(2), vec![0, 1]);
            push(&mut out, RuleFamily::OneZeroQuartic, vec![1, 0, 1, 0], DeltaPoly::from_int(2), vec![1, 0]);
        }
        Family::Gd1n { d, .. } => {
            idempotents(&mut out, 1, n);
            zero_power(&mut out, d);
            commutations(&mut out, 0, n);
            untwists(&mut out, n);
            quartics(&mut out, d);
        }
    }
    out
}

/// The defining relations, oriented with the larger word as lhs.
pub fn defining_relations(f: &Family) -> RuleSet {
    ruleset(f, &defining_relations_tagged(f))
}

/// Gröbner–Shirshov basis with family tags.
pub fn gs_basis_tagged(f: &Family) -> TaggedRules {
    let mut out = Vec::new();
    let n = f.n();
    match *f {
        Family::TypeA { .. } => {
            idempotents(&mut out, 1, n);
            commutations(&mut out, 1, n);
            type_a_untwists(&mut out, n);
        }
        Family::TypeB { .. } => {
            // E_i² for 0 ≤ i < n, commutations with j ≥ 0, the type A
            // untwists, both quartics, and E_{i,0}E^{1,j}E_i.
            push(&mut out, RuleFamily::ZeroPower, vec![0, 0], DeltaPoly::delta(), vec![0]);
            idempotents(&mut out, 1, n);
            commutations(&mut out, 0, n);
            type_a_untwists(&mut out, n);
            push(&mut out, RuleFamily::ZeroOneQuartic, vec![0, 1, 0, 1], DeltaPoly::from_int(2), vec![0, 1]);
            push(&mut out, RuleFamily::OneZeroQuartic, vec![1, 0, 1, 0], DeltaPoly::from_int(2), vec![1, 0]);
            for i in 2..n {
                for j in 0..i - 1 {
                    let tail = cat(&[&asc(1, j), &[i as u8]]);
                    push(
                        &mut out,
                        RuleFamily::ZeroBraid,
                        cat(&[&desc(i, 0), &tail]),
                        one(),
                        cat(&[&desc(i - 2, 0), &tail]),
                    );
                }
            }
        }
        Family::Gd1n { d, .. } => {
            zero_power(&mut out, d);
            for i in 2..n {
                push(&mut out, RuleFamily::Commutation, vec![i as u8, 0], one(), vec![0, i as u8]);
            }
            quartics(&mut out, d);
            zero_braids(&mut out, d, n);
            idempotents(&mut out, 1, n);
            commutations(&mut out, 1, n);
            type_a_untwists(&mut out, n);
        }
    }
    out
}

/// The Gröbner–Shirshov basis, fully instantiated.
pub fn gs_basis(f: &Family) -> RuleSet {
    ruleset(f, &gs_basis_tagged(f))
}

/// The basis with every rule of the listed families removed.
pub fn gs_basis_without(f: &Family, drop: &[RuleFamily]) -> RuleSet {
    let tagged: TaggedRules = gs_basis_tagged(f)
        .into_iter()
        .filter(|(fam, _)| !drop.contains(fam))
        .collect();
    ruleset(f, &tagged)
}

/// Number of rules of the basis, computed from the index ranges alone.
pub fn gs_basis_size_formula(f: &Family) -> usize {
    let n = f.n();
    let pairs = |m: usize| m * m.saturating_sub(1) / 2;
    // #{i > j ≥ 1, i ≤ n-1} = C(n-1, 2); #{i > j+1, j ≥ 1} = C(n-2, 2);
    // #{i > j+1 ≥ 1} = C(n-1, 2)
    match *f {
        Family::TypeA { .. } => (n - 1) + pairs(n - 2) + 2 * pairs(n - 1),
        Family::TypeB { .. } | Family::Gd1n { .. } => {
            let d = f.d();
            1 + (n - 2) + 2 * (d - 1) + (d - 1) * pairs(n - 1) + (n - 1) + pairs(n - 2) + 2 * pairs(n - 1)
        }
    }
}

/// Helper for callers holding a word and wanting its normal form in a family.
pub fn normal_form_in(f: &Family, w: &Word) -> Result<NcPoly> {
    if !f.alphabet().contains(w) {
        return Err(Error::InvalidParameter(format!("word {w} uses letters outside {f}")));
    }
    Ok(gs_basis(f).normal_form(&NcPoly::word(w.clone())))
}
