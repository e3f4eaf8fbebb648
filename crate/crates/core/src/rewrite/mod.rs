//! Reduction modulo a set of monic relations.
//!
//! A [`RewriteRule`] `lhs -> rhs` encodes the monic element `lhs - rhs` whose
//! leading word is `lhs`. A [`RuleSet`] indexes its left-hand sides in a trie
//! so that redexes can be located in one pass over a word.

mod completion;
mod composition;
mod standard;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_algebra::{Alphabet, NcPoly, Word};
use crate::scalars::DeltaPoly;

pub use completion::{bounded_completion, CompletionReport, CompletionSummary};
pub use composition::{
    compositions, compositions_with, is_closed_under_composition, is_closed_with, ClosureReport,
    Composition, CompositionKind, CompositionOptions, OverlapConvention,
};
pub use standard::{enumerate_standard_words, enumerate_standard_words_with, EnumerationBound};

/// `lhs -> rhs`, every word of `rhs` strictly below `lhs`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RewriteRule {
    lhs: Word,
    rhs: NcPoly,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: NcPoly) -> Result<Self> {
        if lhs.is_empty() {
            return Err(Error::InvalidRule("empty left-hand side".into()));
        }
        if let Some(w) = rhs.words().find(|w| **w >= lhs) {
            return Err(Error::InvalidRule(format!(
                "right-hand side word {w} is not below {lhs}"
            )));
        }
        Ok(Self { lhs, rhs })
    }

    /// Rule from a monic polynomial: its leading word becomes the lhs.
    pub fn from_monic(p: &NcPoly) -> Result<Self> {
        let (lead, coeff) = p.leading()?;
        if !coeff.is_one() {
            return Err(Error::InvalidRule(format!("{p} is not monic")));
        }
        let lhs = lead.clone();
        let rhs = NcPoly::word(lhs.clone()).sub(p);
        Self::new(lhs, rhs)
    }

    /// `lhs -> c · rhs_word`.
    pub fn simple(lhs: Vec<u8>, coeff: DeltaPoly, rhs_word: Vec<u8>) -> Result<Self> {
        Self::new(Word::new(lhs), NcPoly::term(Word::new(rhs_word), coeff))
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &NcPoly {
        &self.rhs
    }

    /// The monic element `lhs - rhs`.
    pub fn to_poly(&self) -> NcPoly {
        NcPoly::word(self.lhs.clone()).sub(&self.rhs)
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RewriteRule({self})")
    }
}

/// Which redex [`RuleSet::find_redex_with`] picks when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Leftmost start position, then longest lhs, then lowest rule index.
    #[default]
    Leftmost,
    /// Rightmost start position, then longest lhs, then lowest rule index.
    Rightmost,
}

/// A located occurrence of a rule's lhs inside a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub rule: usize,
    pub pos: usize,
}

const NO_CHILD: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Trie {
    width: usize,
    children: Vec<u32>,
    terminal: Vec<Option<u32>>,
}

impl Trie {
    fn new(width: usize) -> Self {
        Self {
            width,
            children: vec![NO_CHILD; width],
            terminal: vec![None],
        }
    }

    fn insert(&mut self, key: &[u8], rule: usize) -> Option<usize> {
        let mut node = 0usize;
        for &x in key {
            let slot = node * self.width + x as usize;
            if self.children[slot] == NO_CHILD {
                let id = self.terminal.len();
                self.terminal.push(None);
                self.children.extend(std::iter::repeat_n(NO_CHILD, self.width));
                self.children[slot] = id as u32;
            }
            node = self.children[slot] as usize;
        }
        match self.terminal[node] {
            Some(prev) => Some(prev as usize),
            None => {
                self.terminal[node] = Some(rule as u32);
                None
            }
        }
    }

    /// Longest lhs starting at `start`.
    fn longest_match(&self, word: &[u8], start: usize) -> Option<usize> {
        let mut node = 0usize;
        let mut best = None;
        for &x in &word[start..] {
            let child = self.children[node * self.width + x as usize];
            if child == NO_CHILD {
                break;
            }
            node = child as usize;
            if let Some(r) = self.terminal[node] {
                best = Some(r as usize);
            }
        }
        best
    }

    /// Whether some lhs is exactly `word[start..]`.
    fn matches_to_end(&self, word: &[u8], start: usize) -> bool {
        let mut node = 0usize;
        for &x in &word[start..] {
            let child = self.children[node * self.width + x as usize];
            if child == NO_CHILD {
                return false;
            }
            node = child as usize;
        }
        self.terminal[node].is_some()
    }
}

/// An ordered set of rewrite rules over a fixed alphabet, with no two rules
/// sharing a left-hand side.
#[derive(Clone)]
pub struct RuleSet {
    alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    trie: Trie,
    max_lhs_len: usize,
}

impl RuleSet {
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule>) -> Result<Self> {
        let mut trie = Trie::new(alphabet.n());
        for (i, r) in rules.iter().enumerate() {
            if !alphabet.contains(r.lhs()) || r.rhs().words().any(|w| !alphabet.contains(w)) {
                return Err(Error::InvalidRule(format!(
                    "rule {r} uses letters outside the alphabet"
                )));
            }
            if let Some(prev) = trie.insert(r.lhs().letters(), i) {
                return Err(Error::InvalidRule(format!(
                    "duplicate left-hand side {} (rules {prev} and {i})",
                    r.lhs()
                )));
            }
        }
        let max_lhs_len = rules.iter().map(|r| r.lhs().len()).max().unwrap_or(0);
        Ok(Self {
            alphabet,
            rules,
            trie,
            max_lhs_len,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, i: usize) -> &RewriteRule {
        &self.rules[i]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn max_lhs_len(&self) -> usize {
        self.max_lhs_len
    }

    pub fn into_rules(self) -> Vec<RewriteRule> {
        self.rules
    }

    pub fn lhs_set(&self) -> HashSet<Word> {
        self.rules.iter().map(|r| r.lhs().clone()).collect()
    }

    /// Removes every rule for which `keep` is false.
    pub fn filtered(&self, mut keep: impl FnMut(usize, &RewriteRule) -> bool) -> RuleSet {
        let rules = self
            .rules
            .iter()
            .enumerate()
            .filter(|(i, r)| keep(*i, r))
            .map(|(_, r)| r.clone())
            .collect();
        RuleSet::new(self.alphabet, rules).expect("subset of a valid rule set is valid")
    }

    pub fn find_redex(&self, u: &[u8]) -> Option<Redex> {
        self.find_redex_with(u, Strategy::Leftmost)
    }

    pub fn find_redex_with(&self, u: &[u8], strategy: Strategy) -> Option<Redex> {
        let hit = |pos: usize| self.trie.longest_match(u, pos).map(|rule| Redex { rule, pos });
        match strategy {
            Strategy::Leftmost => (0..u.len()).find_map(hit),
            Strategy::Rightmost => (0..u.len()).rev().find_map(hit),
        }
    }

    /// True if no lhs occurs in `u`.
    pub fn is_standard(&self, u: &[u8]) -> bool {
        self.find_redex(u).is_none()
    }

    /// True if some lhs is a suffix of `u`.
    pub(crate) fn has_lhs_suffix(&self, u: &[u8]) -> bool {
        let lo = u.len().saturating_sub(self.max_lhs_len);
        (lo..u.len()).any(|s| self.trie.matches_to_end(u, s))
    }

    /// Normal form with the default (leftmost) strategy.
    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        self.normal_form_with(p, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, p: &NcPoly, strategy: Strategy) -> NcPoly {
        self.reduce(p, strategy, |_| {}).0
    }

    /// Normal form plus the number of rewriting steps, with the sequence of
    /// processed words passed to `observe` (it is strictly decreasing).
    pub fn reduce(
        &self,
        p: &NcPoly,
        strategy: Strategy,
        mut observe: impl FnMut(&Word),
    ) -> (NcPoly, usize) {
        let mut work = p.clone();
        let mut out = NcPoly::zero();
        let mut steps = 0;
        while let Some((w, c)) = work.pop_leading() {
            observe(&w);
            match self.find_redex_with(w.letters(), strategy) {
                None => out.add_term(w, c),
                Some(Redex { rule, pos }) => {
                    steps += 1;
                    let r = &self.rules[rule];
                    let a = &w.letters()[..pos];
                    let b = &w.letters()[pos + r.lhs().len()..];
                    for (rw, rc) in r.rhs().terms() {
                        work.add_term(rw.wrap(a, b), &c * rc);
                    }
                }
            }
        }
        (out, steps)
    }
}

impl fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleSet")
            .field("alphabet", &self.alphabet)
            .field("rules", &self.rules)
            .finish()
    }
}

impl PartialEq for RuleSet {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.rules == other.rules
    }
}

/// Leftmost redex of `u`, if any.
pub fn find_redex(u: &Word, rules: &RuleSet) -> Option<Redex> {
    rules.find_redex(u.letters())
}

/// Normal form of `p` modulo `rules`.
pub fn normal_form(p: &NcPoly, rules: &RuleSet) -> NcPoly {
    rules.normal_form(p)
}
