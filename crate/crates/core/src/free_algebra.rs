//! Words over the generators E_0, …, E_{n-1}, the degree-lexicographic
//! order, and elements of the free associative algebra over ℚ[δ].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::DeltaPoly;

/// The generator set `{first, …, n-1}`.
///
/// Type A presentations use the generators `E_1, …, E_{n-1}` only, so the
/// lowest letter is configurable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    n: u8,
    first: u8,
}

impl Alphabet {
    /// Generators `0..n`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_range(0, n)
    }

    /// Generators `first..n`.
    pub fn with_range(first: usize, n: usize) -> Result<Self> {
        if n < 2 || n > 64 {
            return Err(Error::InvalidParameter(format!(
                "alphabet size must satisfy 2 <= n <= 64, got {n}"
            )));
        }
        if first >= n {
            return Err(Error::InvalidParameter(format!(
                "empty alphabet {first}..{n}"
            )));
        }
        Ok(Self {
            n: n as u8,
            first: first as u8,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn first(&self) -> u8 {
        self.first
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + Clone {
        self.first..self.n
    }

    pub fn len(&self) -> usize {
        (self.n - self.first) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_letter(&self, x: u8) -> bool {
        (self.first..self.n).contains(&x)
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.letters().iter().all(|&x| self.contains_letter(x))
    }
}

/// A monomial in the free monoid; the empty word is the unit `1`.
///
/// Ordered degree-lexicographically: shorter words are smaller, and words of
/// equal length compare letter by letter with `E_0 < E_1 < …`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: u8) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `a · self · b`.
    pub fn wrap(&self, a: &[u8], b: &[u8]) -> Word {
        let mut v = Vec::with_capacity(a.len() + self.len() + b.len());
        v.extend_from_slice(a);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(b);
        Word(v)
    }

    pub fn push(&mut self, x: u8) {
        self.0.push(x);
    }

    /// True if `factor` occurs as a contiguous subword.
    pub fn contains_factor(&self, factor: &[u8]) -> bool {
        factor.is_empty() || self.0.windows(factor.len()).any(|w| w == factor)
    }

    /// Parses comma-separated generator indices such as `"0,1,2"`; the empty
    /// string is the empty word.
    pub fn parse_indices(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Parse(format!("bad generator index {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Renders with a custom generator symbol, compressing runs:
    /// `s0^2.s1.s0^2`.
    pub fn render_runs(&self, symbol: &str) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == x {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("{symbol}{x}"));
            } else {
                parts.push(format!("{symbol}{x}^{}", j - i));
            }
            i = j;
        }
        parts.join(".")
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Dotted rendering `E2.E1.E0`, `1` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "E{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Degree-lexicographic comparison.
pub fn compare_deglex(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// Element of the free associative algebra with δ-polynomial coefficients.
///
/// Terms with zero coefficient are never stored. Iteration runs in
/// descending monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, DeltaPoly>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 · w`.
    pub fn word(w: Word) -> Self {
        Self::term(w, DeltaPoly::one())
    }

    pub fn term(w: Word, c: DeltaPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, DeltaPoly)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · w` in place.
    pub fn add_term(&mut self, w: Word, c: DeltaPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> Option<&DeltaPoly> {
        self.terms.get(w)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &DeltaPoly)> + '_ {
        self.terms.iter().rev()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.terms.keys().rev()
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Result<(&Word, &DeltaPoly)> {
        self.terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::Domain("leading monomial of the zero polynomial".into()))
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, DeltaPoly)> {
        self.terms.pop_last()
    }

    pub fn scale(&self, c: &DeltaPoly) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// `a · self · b` for words `a`, `b`.
    pub fn wrap(&self, a: &[u8], b: &[u8]) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.wrap(a, b), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

/// Sum.
pub fn nc_add(p: &NcPoly, q: &NcPoly) -> NcPoly {
    p.add(q)
}

/// Scalar multiple.
pub fn nc_scale(c: &DeltaPoly, p: &NcPoly) -> NcPoly {
    p.scale(c)
}

/// Product in the free algebra.
pub fn nc_mul(p: &NcPoly, q: &NcPoly) -> NcPoly {
    p.mul(q)
}

/// Leading word and coefficient; errors on zero.
pub fn leading_monomial(p: &NcPoly) -> Result<(Word, DeltaPoly)> {
    p.leading().map(|(w, c)| (w.clone(), c.clone()))
}

fn fmt_coeff_word(c: &DeltaPoly, w: &Word, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // A single-term coefficient carries its own sign; longer ones are
    // parenthesized after a '+'.
    let single = c.term_count() == 1;
    let negative = single
        && c.coeffs()
            .iter()
            .rev()
            .find(|x| !num_traits::Zero::is_zero(*x))
            .is_some_and(num_traits::Signed::is_negative);
    let abs = if negative { -c } else { c.clone() };
    if first {
        if negative {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if negative { " - " } else { " + " })?;
    }
    if w.is_empty() {
        if single {
            write!(f, "{abs}")
        } else {
            write!(f, "({abs})")
        }
    } else if abs.is_one() {
        write!(f, "{w}")
    } else if single {
        write!(f, "{abs}*{w}")
    } else {
        write!(f, "({abs})*{w}")
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            fmt_coeff_word(c, w, i == 0, f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Word,
    coeff: DeltaPoly,
}

/// JSON: array of `{"word": [...], "coeff": [[num, den], ...]}` in
/// descending monomial order.
impl Serialize for NcPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(w, c)| TermJson {
            word: w.clone(),
            coeff: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for NcPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        Ok(NcPoly::from_terms(terms.into_iter().map(|t| (t.word, t.coeff))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational;
    use proptest::prelude::*;

    fn w(v: &[u8]) -> Word {
        Word::from(v)
    }

    #[test]
    fn deglex_examples() {
        assert_eq!(compare_deglex(&w(&[0]), &w(&[1])), Ordering::Less);
        assert_eq!(compare_deglex(&w(&[2, 1]), &w(&[0, 0, 0])), Ordering::Less);
        assert_eq!(compare_deglex(&w(&[1, 0, 1]), &w(&[1, 1, 0])), Ordering::Less);
        assert_eq!(compare_deglex(&w(&[]), &w(&[0])), Ordering::Less);
    }

    #[test]
    fn leading_monomial_examples() {
        let p = NcPoly::word(w(&[1, 0, 1, 0])).sub(&NcPoly::term(w(&[1, 0]), DeltaPoly::from_int(2)));
        let (lw, lc) = leading_monomial(&p).unwrap();
        assert_eq!(lw, w(&[1, 0, 1, 0]));
        assert!(lc.is_one());

        let p = NcPoly::term(Word::empty(), DeltaPoly::delta());
        assert_eq!(leading_monomial(&p).unwrap(), (Word::empty(), DeltaPoly::delta()));

        let p = NcPoly::word(w(&[2, 0])).sub(&NcPoly::word(w(&[0, 2])));
        assert_eq!(leading_monomial(&p).unwrap().0, w(&[2, 0]));

        assert!(matches!(leading_monomial(&NcPoly::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn arithmetic_examples() {
        let e1 = NcPoly::word(w(&[1]));
        assert!(nc_add(&e1, &e1.scale(&DeltaPoly::from_int(-1))).is_zero());
        assert_eq!(nc_mul(&e1, &NcPoly::word(w(&[0]))), NcPoly::word(w(&[1, 0])));
        let de0 = NcPoly::term(w(&[0]), DeltaPoly::delta());
        assert_eq!(
            nc_mul(&de0, &NcPoly::word(w(&[0]))),
            NcPoly::term(w(&[0, 0]), DeltaPoly::delta())
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w(&[2, 1, 0]).to_string(), "E2.E1.E0");
        assert_eq!(w(&[0, 0, 1, 0, 0]).render_runs("s"), "s0^2.s1.s0^2");
        let p = NcPoly::term(w(&[0]), DeltaPoly::delta().scale(&rational(2, 1)));
        assert_eq!(p.to_string(), "2*δ*E0");
        let p = NcPoly::word(w(&[1, 0, 1, 0])).sub(&NcPoly::term(w(&[1, 0]), DeltaPoly::from_int(2)));
        assert_eq!(p.to_string(), "E1.E0.E1.E0 - 2*E1.E0");
        let p = NcPoly::term(w(&[1]), DeltaPoly::delta() + DeltaPoly::one());
        assert_eq!(p.to_string(), "(δ + 1)*E1");
        assert_eq!(
            serde_json::to_string(&NcPoly::term(w(&[0]), DeltaPoly::delta())).unwrap(),
            r#"[{"word":[0],"coeff":[[0,1],[1,1]]}]"#
        );
    }

    #[test]
    fn parse_indices() {
        assert_eq!(Word::parse_indices("0,0,1").unwrap(), w(&[0, 0, 1]));
        assert_eq!(Word::parse_indices("").unwrap(), Word::empty());
        assert!(Word::parse_indices("0,x").is_err());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..4, 0..6).prop_map(Word::new)
    }

    fn arb_poly() -> impl Strategy<Value = NcPoly> {
        prop::collection::vec((arb_word(), -3i64..4, 0usize..3), 0..4).prop_map(|ts| {
            NcPoly::from_terms(
                ts.into_iter()
                    .map(|(w, c, e)| (w, DeltaPoly::monomial(rational(c, 1), e))),
            )
        })
    }

    proptest! {
        #[test]
        fn deglex_is_monomial_order(x in arb_word(), y in arb_word(), a in arb_word(), b in arb_word()) {
            prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
            if x < y {
                prop_assert!(x.wrap(a.letters(), b.letters()) < y.wrap(a.letters(), b.letters()));
            }
        }

        #[test]
        fn deglex_transitive(x in arb_word(), y in arb_word(), z in arb_word()) {
            if x <= y && y <= z {
                prop_assert!(x <= z);
            }
        }

        #[test]
        fn algebra_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(nc_mul(&nc_mul(&p, &q), &r), nc_mul(&p, &nc_mul(&q, &r)));
            prop_assert_eq!(nc_mul(&p, &nc_add(&q, &r)), nc_add(&nc_mul(&p, &q), &nc_mul(&p, &r)));
            prop_assert_eq!(nc_mul(&nc_add(&p, &q), &r), nc_add(&nc_mul(&p, &r), &nc_mul(&q, &r)));
            if !p.is_zero() && !q.is_zero() {
                let (lp, _) = leading_monomial(&p).unwrap();
                let (lq, _) = leading_monomial(&q).unwrap();
                prop_assert_eq!(leading_monomial(&nc_mul(&p, &q)).unwrap().0, lp.concat(&lq));
            }
        }

        #[test]
        fn json_round_trip(p in arb_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<NcPoly>(&s).unwrap(), p);
        }
    }
}
