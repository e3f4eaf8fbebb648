//! Compositions of intersection and inclusion, and the closure check.
//!
//! For monic `p`, `q` with leading words `p̄`, `q̄`:
//!
//! * intersection: `p̄·a = b·q̄ = w` with `l(p̄) > l(b)`, composition `p·a - b·q`;
//! * inclusion: `a·p̄·b = q̄ = w` with `a ≠ 1`, composition `a·p·b - q`.
//!
//! A rule set is closed under composition when every composition reduces to
//! zero. Residues are computed in parallel but always reported in
//! `(degree, lex)` order of the ambiguity word `w`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{RewriteRule, RuleSet};
use crate::free_algebra::{NcPoly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositionKind {
    Intersection,
    Inclusion,
}

/// Whether an intersection may have `b = 1`, i.e. `p̄` a prefix of `q̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OverlapConvention {
    /// `0 <= l(b) < l(p̄)`.
    #[default]
    AllowEmptyB,
    /// `0 < l(b) < l(p̄)`; prefix containments are then not examined at all.
    ProperOnly,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CompositionOptions {
    pub convention: OverlapConvention,
    /// Skip ambiguities whose word `w` is longer than this.
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Composition {
    pub kind: CompositionKind,
    pub left_rule: usize,
    pub right_rule: usize,
    pub overlap_word: Word,
    /// `a` in `p̄a = bq̄` resp. `ap̄b = q̄`.
    pub a: Word,
    pub b: Word,
    pub raw: NcPoly,
    pub residue: NcPoly,
}

#[derive(Clone, Debug)]
pub(crate) struct Ambiguity {
    pub kind: CompositionKind,
    pub left: usize,
    pub right: usize,
    pub w: Word,
    pub a: Word,
    pub b: Word,
}

impl Ambiguity {
    pub fn raw(&self, rules: &[RewriteRule]) -> NcPoly {
        let p = rules[self.left].to_poly();
        let q = rules[self.right].to_poly();
        match self.kind {
            CompositionKind::Intersection => p.wrap(&[], self.a.letters()).sub(&q.wrap(self.b.letters(), &[])),
            CompositionKind::Inclusion => p.wrap(self.a.letters(), self.b.letters()).sub(&q),
        }
    }

    fn sort_key(&self) -> (&Word, usize, usize, CompositionKind, usize) {
        (&self.w, self.left, self.right, self.kind, self.b.len())
    }
}

/// All ambiguities of a rule set in `(degree, lex)` order of `w`, ties broken
/// by rule indices.
pub(crate) fn ambiguities(rules: &[RewriteRule], opts: &CompositionOptions) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    let max = opts.max_degree.unwrap_or(usize::MAX);
    let min_b = match opts.convention {
        OverlapConvention::AllowEmptyB => 0,
        OverlapConvention::ProperOnly => 1,
    };
    for (i, p) in rules.iter().enumerate() {
        let pl = p.lhs().letters();
        for (j, q) in rules.iter().enumerate() {
            let ql = q.lhs().letters();
            for blen in min_b..pl.len() {
                if i == j && blen == 0 {
                    continue;
                }
                let overlap = pl.len() - blen;
                if overlap > ql.len() || pl[blen..] != ql[..overlap] {
                    continue;
                }
                let wlen = blen + ql.len();
                if wlen > max {
                    continue;
                }
                let b = Word::from(&pl[..blen]);
                let a = Word::from(&ql[overlap..]);
                out.push(Ambiguity {
                    kind: CompositionKind::Intersection,
                    left: i,
                    right: j,
                    w: b.concat(q.lhs()),
                    a,
                    b,
                });
            }
            if ql.len() > pl.len() && ql.len() <= max {
                for pos in 1..=ql.len() - pl.len() {
                    if ql[pos..pos + pl.len()] == *pl {
                        out.push(Ambiguity {
                            kind: CompositionKind::Inclusion,
                            left: i,
                            right: j,
                            w: q.lhs().clone(),
                            a: Word::from(&ql[..pos]),
                            b: Word::from(&ql[pos + pl.len()..]),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out
}

/// Every composition of `rules` with its residue (default options).
pub fn compositions(rules: &RuleSet) -> Vec<Composition> {
    compositions_with(rules, &CompositionOptions::default())
}

pub fn compositions_with(rules: &RuleSet, opts: &CompositionOptions) -> Vec<Composition> {
    ambiguities(rules.rules(), opts)
        .into_par_iter()
        .map(|amb| {
            let raw = amb.raw(rules.rules());
            let residue = rules.normal_form(&raw);
            Composition {
                kind: amb.kind,
                left_rule: amb.left,
                right_rule: amb.right,
                overlap_word: amb.w,
                a: amb.a,
                b: amb.b,
                raw,
                residue,
            }
        })
        .collect()
}

/// Outcome of the closure check. Serializes as
/// `{"rules": [...], "compositions_checked": N, "failures": [...], "closed": bool}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClosureReport {
    pub rules: Vec<RewriteRule>,
    pub compositions_checked: usize,
    pub failures: Vec<Composition>,
    pub closed: bool,
}

/// Checks that every composition of `rules` reduces to zero. The failures
/// list is the certificate of non-closure.
pub fn is_closed_under_composition(rules: &RuleSet) -> ClosureReport {
    is_closed_with(rules, &CompositionOptions::default())
}

pub fn is_closed_with(rules: &RuleSet, opts: &CompositionOptions) -> ClosureReport {
    let all = compositions_with(rules, opts);
    let checked = all.len();
    let failures: Vec<_> = all.into_iter().filter(|c| !c.residue.is_zero()).collect();
    ClosureReport {
        rules: rules.rules().to_vec(),
        compositions_checked: checked,
        closed: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::Alphabet;
    use crate::scalars::{rational, DeltaPoly};

    fn rule(lhs: &[u8], c: DeltaPoly, rhs: &[u8]) -> RewriteRule {
        RewriteRule::simple(lhs.to_vec(), c, rhs.to_vec()).unwrap()
    }

    #[test]
    fn idempotent_and_commutation_overlap() {
        let rs = RuleSet::new(
            Alphabet::new(3).unwrap(),
            vec![
                rule(&[2, 2], DeltaPoly::delta(), &[2]),
                rule(&[2, 0], DeltaPoly::one(), &[0, 2]),
            ],
        )
        .unwrap();
        let comps = compositions(&rs);
        let c = comps
            .iter()
            .find(|c| c.overlap_word == Word::from(&[2u8, 2, 0][..]))
            .unwrap();
        assert_eq!(c.kind, CompositionKind::Intersection);
        // (E_2² - δE_2)E_0 - E_2(E_2E_0 - E_0E_2) = -δE_2E_0 + E_2E_0E_2
        let expected = NcPoly::word(Word::from(&[2u8, 0, 2][..]))
            .sub(&NcPoly::term(Word::from(&[2u8, 0][..]), DeltaPoly::delta()));
        assert_eq!(c.raw, expected);
        assert!(c.residue.is_zero());
        assert!(is_closed_under_composition(&rs).closed);
    }

    #[test]
    fn self_overlaps_of_zero_power() {
        let two_delta = DeltaPoly::delta().scale(&rational(2, 1));
        let rs = RuleSet::new(Alphabet::new(2).unwrap(), vec![rule(&[0, 0, 0], two_delta, &[0])]).unwrap();
        let comps = compositions(&rs);
        // b of length 1 and 2: words of length 4 and 5
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().any(|c| c.overlap_word.len() == 5));
        assert!(comps.iter().all(|c| c.residue.is_zero()));
    }

    #[test]
    fn disjoint_letters() {
        let rs = RuleSet::new(
            Alphabet::new(4).unwrap(),
            vec![
                rule(&[1, 1], DeltaPoly::delta(), &[1]),
                rule(&[3, 1], DeltaPoly::one(), &[1, 3]),
            ],
        )
        .unwrap();
        let comps = compositions(&rs);
        let c = comps
            .iter()
            .find(|c| c.overlap_word == Word::from(&[3u8, 1, 1][..]))
            .unwrap();
        assert!(c.residue.is_zero());
    }

    #[test]
    fn inclusion_requires_nonempty_a() {
        let rs = RuleSet::new(
            Alphabet::new(3).unwrap(),
            vec![
                rule(&[1, 2], DeltaPoly::one(), &[]),
                rule(&[1, 2, 1], DeltaPoly::one(), &[1]),
                rule(&[0, 1, 2], DeltaPoly::one(), &[0]),
            ],
        )
        .unwrap();
        let ambs = ambiguities(rs.rules(), &CompositionOptions::default());
        // prefix containment of [1,2] in [1,2,1] is an intersection with b = 1
        assert!(ambs.iter().any(|a| a.kind == CompositionKind::Intersection
            && a.left == 0
            && a.right == 1
            && a.b.is_empty()));
        assert!(ambs.iter().any(|a| a.kind == CompositionKind::Inclusion
            && a.left == 0
            && a.right == 2
            && a.a == Word::letter(0)));
        assert!(!ambs
            .iter()
            .any(|a| a.kind == CompositionKind::Inclusion && a.a.is_empty()));
        let proper = ambiguities(
            rs.rules(),
            &CompositionOptions {
                convention: OverlapConvention::ProperOnly,
                max_degree: None,
            },
        );
        assert!(proper.iter().all(|a| !a.b.is_empty() || a.kind == CompositionKind::Inclusion));
    }

    #[test]
    fn nonclosed_set_has_certificate() {
        // E_1E_0 -> E_0, E_0E_1 -> E_1 : overlap E_1E_0E_1 gives E_0E_1 - E_1E_1 -> E_1 - E_1E_1
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![
                rule(&[1, 0], DeltaPoly::one(), &[0]),
                rule(&[0, 1], DeltaPoly::one(), &[1]),
            ],
        )
        .unwrap();
        let report = is_closed_under_composition(&rs);
        assert!(!report.closed);
        assert!(!report.failures.is_empty());
        let json = serde_json::to_string(&report).unwrap();
        let back: ClosureReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.failures, report.failures);
    }
}
