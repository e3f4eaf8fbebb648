//! Enumeration of standard (irreducible) words by prefix extension.

use super::RuleSet;
use crate::error::{Error, Result};
use crate::free_algebra::Word;

/// Environment variable overriding [`EnumerationBound::max_words`].
pub const MAX_WORDS_ENV: &str = "TLGSB_MAX_WORDS";

/// Runaway protection for enumerations that are expected to be finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBound {
    pub max_words: usize,
    /// A standard word longer than this aborts an unbounded enumeration.
    pub max_len: usize,
}

impl EnumerationBound {
    /// `n·(n + L)` letters, where `L` is the longest lhs, and one million
    /// words unless `TLGSB_MAX_WORDS` says otherwise.
    pub fn for_rules(rules: &RuleSet) -> Self {
        let n = rules.alphabet().n();
        let max_words = std::env::var(MAX_WORDS_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(1_000_000);
        Self {
            max_words,
            max_len: n * (n + rules.max_lhs_len()),
        }
    }
}

/// Standard words of length at most `max_len` (or all of them when `None`),
/// in length-then-lex order.
pub fn enumerate_standard_words(rules: &RuleSet, max_len: Option<usize>) -> Result<Vec<Word>> {
    enumerate_standard_words_with(rules, max_len, EnumerationBound::for_rules(rules))
}

pub fn enumerate_standard_words_with(
    rules: &RuleSet,
    max_len: Option<usize>,
    bound: EnumerationBound,
) -> Result<Vec<Word>> {
    let letters: Vec<u8> = rules.alphabet().letters().collect();
    let mut out = vec![Word::empty()];
    let mut level: Vec<Vec<u8>> = vec![Vec::new()];
    let mut len = 0;
    loop {
        if max_len.is_some_and(|m| len >= m) {
            break;
        }
        let mut next = Vec::new();
        for u in &level {
            for &x in &letters {
                let mut v = Vec::with_capacity(u.len() + 1);
                v.extend_from_slice(u);
                v.push(x);
                // u is standard, so only factors ending at the new letter matter
                if !rules.has_lhs_suffix(&v) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        len += 1;
        if max_len.is_none() && len > bound.max_len {
            return Err(Error::SafetyBound(format!(
                "standard words of length {len} exist (bound {})",
                bound.max_len
            )));
        }
        if out.len() + next.len() > bound.max_words {
            return Err(Error::SafetyBound(format!(
                "more than {} standard words (set {MAX_WORDS_ENV} to raise)",
                bound.max_words
            )));
        }
        out.extend(next.iter().cloned().map(Word::new));
        level = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::Alphabet;
    use crate::rewrite::RewriteRule;
    use crate::scalars::DeltaPoly;

    #[test]
    fn free_monoid_hits_safety_bound() {
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![RewriteRule::simple(vec![1, 1], DeltaPoly::delta(), vec![1]).unwrap()],
        )
        .unwrap();
        let err = enumerate_standard_words(&rs, None).unwrap_err();
        assert!(matches!(err, Error::SafetyBound(_)));
        let bounded = enumerate_standard_words(&rs, Some(3)).unwrap();
        // words in {0,1} of length <= 3 avoiding 11: 1 + 2 + 3 + 5
        assert_eq!(bounded.len(), 11);
        assert!(bounded.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn word_cap() {
        let rs = RuleSet::new(
            Alphabet::new(2).unwrap(),
            vec![RewriteRule::simple(vec![1, 1], DeltaPoly::delta(), vec![1]).unwrap()],
        )
        .unwrap();
        let bound = EnumerationBound {
            max_words: 5,
            max_len: 100,
        };
        assert!(enumerate_standard_words_with(&rs, None, bound).is_err());
    }
}
