//! Degree-bounded completion: adjoin nonzero composition residues as new
//! rules until every composition up to the degree bound reduces to zero.

use std::collections::VecDeque;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::composition::{ambiguities, CompositionOptions};
use super::{RewriteRule, RuleSet};
use crate::error::{Error, Result};
use crate::free_algebra::NcPoly;
use crate::scalars::{DeltaPoly, Rational};

#[derive(Clone, Debug)]
pub struct CompletionReport {
    pub rules: RuleSet,
    pub passes: usize,
    pub compositions_examined: usize,
    pub rules_added: usize,
    pub rules_removed: usize,
    /// Residues whose leading coefficient was a nonconstant polynomial in δ
    /// and had to be divided out.
    pub scalings: Vec<String>,
}

/// The JSON shape of a [`CompletionReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletionSummary {
    pub rules: Vec<RewriteRule>,
    pub passes: usize,
    pub compositions_examined: usize,
    pub rules_added: usize,
    pub rules_removed: usize,
    pub scalings: Vec<String>,
}

impl CompletionReport {
    pub fn summary(&self) -> CompletionSummary {
        CompletionSummary {
            rules: self.rules.rules().to_vec(),
            passes: self.passes,
            compositions_examined: self.compositions_examined,
            rules_added: self.rules_added,
            rules_removed: self.rules_removed,
            scalings: self.scalings.clone(),
        }
    }
}

impl Serialize for CompletionReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.summary().serialize(s)
    }
}

struct Completion {
    alphabet: crate::free_algebra::Alphabet,
    rules: Vec<RewriteRule>,
    index: RuleSet,
    added: usize,
    removed: usize,
    scalings: Vec<String>,
}

impl Completion {
    fn rebuild(&mut self) {
        self.index = RuleSet::new(self.alphabet, self.rules.clone()).expect("lhs kept distinct");
    }

    fn make_monic(&mut self, p: NcPoly) -> Result<NcPoly> {
        let (_, lead) = p.leading()?;
        let lead = lead.clone();
        if lead.is_nonzero_constant() {
            let inv = Rational::one() / &lead.coeffs()[0];
            return Ok(p.scale(&DeltaPoly::constant(inv)));
        }
        let mut terms = Vec::with_capacity(p.len());
        for (w, c) in p.terms() {
            let q = c.div_exact(&lead).ok_or_else(|| {
                Error::Completion(format!(
                    "leading coefficient {lead} of {p} is not invertible over Q[δ]"
                ))
            })?;
            terms.push((w.clone(), q));
        }
        self.scalings.push(format!("divided {p} by {lead}"));
        Ok(NcPoly::from_terms(terms))
    }

    /// Reduces `p` and, if nonzero, adds it as a rule. Rules whose lhs
    /// becomes reducible are removed and their relations re-queued.
    fn adjoin(&mut self, p: NcPoly) -> Result<bool> {
        let mut queue = VecDeque::from([p]);
        let mut changed = false;
        while let Some(p) = queue.pop_front() {
            let r = self.index.normal_form(&p);
            if r.is_zero() {
                continue;
            }
            let monic = self.make_monic(r)?;
            let rule = RewriteRule::from_monic(&monic)?;
            let lhs = rule.lhs().clone();
            let (stale, keep): (Vec<_>, Vec<_>) = std::mem::take(&mut self.rules)
                .into_iter()
                .partition(|old| old.lhs().contains_factor(lhs.letters()));
            self.rules = keep;
            self.removed += stale.len();
            queue.extend(stale.iter().map(RewriteRule::to_poly));
            self.rules.push(rule);
            self.added += 1;
            changed = true;
            self.rebuild();
        }
        Ok(changed)
    }

    /// Replaces each rhs by its normal form.
    fn interreduce_rhs(&mut self) {
        let mut out = Vec::with_capacity(self.rules.len());
        for (i, r) in self.rules.iter().enumerate() {
            let others = RuleSet::new(
                self.alphabet,
                self.rules
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, r)| r.clone())
                    .collect(),
            )
            .expect("subset is valid");
            let rhs = others.normal_form(r.rhs());
            out.push(RewriteRule::new(r.lhs().clone(), rhs).expect("rhs stays below lhs"));
        }
        self.rules = out;
        self.rebuild();
    }
}

/// Runs completion on `rules`, considering only ambiguities of degree at
/// most `max_degree`. Processing order is the `(degree, lex)` order of the
/// ambiguity words, so the result is deterministic.
pub fn bounded_completion(rules: &RuleSet, max_degree: usize) -> Result<CompletionReport> {
    if max_degree < rules.max_lhs_len() {
        return Err(Error::InvalidParameter(format!(
            "max_degree {max_degree} is below the longest lhs ({})",
            rules.max_lhs_len()
        )));
    }
    let alphabet = rules.alphabet();
    let mut state = Completion {
        alphabet,
        rules: Vec::new(),
        index: RuleSet::new(alphabet, Vec::new())?,
        added: 0,
        removed: 0,
        scalings: Vec::new(),
    };
    for r in rules.rules() {
        state.adjoin(r.to_poly())?;
    }
    let opts = CompositionOptions {
        max_degree: Some(max_degree),
        ..Default::default()
    };
    let mut passes = 0;
    let mut examined = 0;
    loop {
        passes += 1;
        let snapshot = state.rules.clone();
        let mut changed = false;
        for amb in ambiguities(&snapshot, &opts) {
            examined += 1;
            let raw = amb.raw(&snapshot);
            changed |= state.adjoin(raw)?;
        }
        if !changed {
            break;
        }
    }
    state.interreduce_rhs();
    let mut sorted = state.rules.clone();
    sorted.sort_by(|a, b| a.lhs().cmp(b.lhs()));
    Ok(CompletionReport {
        rules: RuleSet::new(alphabet, sorted)?,
        passes,
        compositions_examined: examined,
        rules_added: state.added,
        rules_removed: state.removed,
        scalings: state.scalings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::{Alphabet, Word};
    use crate::rewrite::{enumerate_standard_words, is_closed_under_composition};

    #[test]
    fn single_idempotent_is_fixed() {
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![RewriteRule::simple(vec![1, 1], DeltaPoly::delta(), vec![1]).unwrap()],
        )
        .unwrap();
        let rep = bounded_completion(&rs, 6).unwrap();
        assert_eq!(rep.rules.lhs_set(), rs.lhs_set());
        assert_eq!(rep.rules_removed, 0);
    }

    #[test]
    fn completes_simple_monoid() {
        // a b -> 1 and b a -> 1 in letters {0,1}: already closed
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![
                RewriteRule::simple(vec![1, 0], DeltaPoly::one(), vec![]).unwrap(),
                RewriteRule::simple(vec![1, 1, 0], DeltaPoly::one(), vec![1]).unwrap(),
            ],
        )
        .unwrap();
        let rep = bounded_completion(&rs, 6).unwrap();
        // [1,1,0] is reducible by [1,0] and gets dropped
        assert_eq!(rep.rules.len(), 1);
        assert!(is_closed_under_composition(&rep.rules).closed);
    }

    #[test]
    fn adds_missing_rule() {
        // x² -> x, yx -> x over {x=0, y=1}, plus xy -> y: overlap xyx gives x·x vs y·x
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![
                RewriteRule::simple(vec![0, 1], DeltaPoly::one(), vec![1]).unwrap(),
                RewriteRule::simple(vec![1, 0], DeltaPoly::one(), vec![0]).unwrap(),
            ],
        )
        .unwrap();
        let rep = bounded_completion(&rs, 6).unwrap();
        assert!(is_closed_under_composition(&rep.rules).closed);
        assert!(rep.rules_added > 2);
        let words = enumerate_standard_words(&rep.rules, Some(4)).unwrap();
        assert!(words.contains(&Word::empty()));
    }

    #[test]
    fn rejects_small_degree() {
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![RewriteRule::simple(vec![1, 1, 1], DeltaPoly::delta(), vec![1]).unwrap()],
        )
        .unwrap();
        assert!(bounded_completion(&rs, 2).is_err());
    }
}
