//! Standard monomials in block form.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{asc, desc, Family};
use crate::free_algebra::Word;

/// A standard monomial described by its blocks.
///
/// * `TypeA`: `E_{i_1,j_1} ⋯ E_{i_p,j_p}` with `i` and `j` strictly
///   increasing and `1 ≤ j ≤ i ≤ n-1`.
/// * `Plus`: `E_{i_1,1}E_0^{k_1} ⋯ E_{i_q,1}E_0^{k_q}` followed by a type A
///   tail starting above `i_q`; `0 ≤ i_1 < … < i_q`, `1 ≤ k ≤ d-1`.
/// * `Minus`: `E_{i_1,1}E_0^kE^{1,j_1}` followed by a type A tail with
///   `i > i_1` and `j > j_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StdMonomial {
    TypeA { blocks: Vec<(u8, u8)> },
    Plus { zero_blocks: Vec<(u8, u8)>, tail: Vec<(u8, u8)> },
    Minus { head: (u8, u8, u8), tail: Vec<(u8, u8)> },
}

fn push_tail(out: &mut Vec<u8>, blocks: &[(u8, u8)]) {
    for &(i, j) in blocks {
        out.extend(desc(i as usize, j as usize));
    }
}

impl StdMonomial {
    pub fn word(&self) -> Word {
        let mut out = Vec::new();
        match self {
            StdMonomial::TypeA { blocks } => push_tail(&mut out, blocks),
            StdMonomial::Plus { zero_blocks, tail } => {
                for &(i, k) in zero_blocks {
                    out.extend(desc(i as usize, 1));
                    out.extend(std::iter::repeat(0).take(k as usize));
                }
                push_tail(&mut out, tail);
            }
            StdMonomial::Minus { head: (i, k, j), tail } => {
                out.extend(desc(*i as usize, 1));
                out.extend(std::iter::repeat(0).take(*k as usize));
                out.extend(asc(1, *j as usize));
                push_tail(&mut out, tail);
            }
        }
        Word::new(out)
    }

    pub fn variant(&self) -> &'static str {
        match self {
            StdMonomial::TypeA { .. } => "a",
            StdMonomial::Plus { .. } => "plus",
            StdMonomial::Minus { .. } => "minus",
        }
    }

    /// Sum of the `E_0` exponents.
    pub fn zero_degree(&self) -> usize {
        match self {
            StdMonomial::TypeA { .. } => 0,
            StdMonomial::Plus { zero_blocks, .. } => zero_blocks.iter().map(|b| b.1 as usize).sum(),
            StdMonomial::Minus { head, .. } => head.1 as usize,
        }
    }

    /// The type A blocks following the prefix (all blocks for type A).
    pub fn tail(&self) -> &[(u8, u8)] {
        match self {
            StdMonomial::TypeA { blocks } => blocks,
            StdMonomial::Plus { tail, .. } | StdMonomial::Minus { tail, .. } => tail,
        }
    }

    /// Checks the index constraints for `f`.
    pub fn is_valid_for(&self, f: &Family) -> bool {
        let n = f.n() as u8;
        let d = f.d() as u8;
        let tail_ok = |tail: &[(u8, u8)], min_i: u8, min_j: u8| {
            let mut pi = min_i;
            let mut pj = min_j;
            for &(i, j) in tail {
                if i < pi || j < pj || j < 1 || i < j || i >= n {
                    return false;
                }
                pi = i + 1;
                pj = j + 1;
            }
            true
        };
        match self {
            StdMonomial::TypeA { blocks } => tail_ok(blocks, 1, 1),
            _ if matches!(f, Family::TypeA { .. }) => false,
            StdMonomial::Plus { zero_blocks, tail } => {
                let Some(&(last, _)) = zero_blocks.last() else { return false };
                let incr = zero_blocks.windows(2).all(|w| w[0].0 < w[1].0);
                incr && last < n
                    && zero_blocks.iter().all(|&(_, k)| (1..d).contains(&k))
                    && tail_ok(tail, last + 1, 1)
            }
            StdMonomial::Minus { head: (i, k, j), tail } => {
                *j >= 1 && j <= i && *i < n && (1..d).contains(k) && tail_ok(tail, i + 1, j + 1)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<(u8, u8)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero_blocks: Option<Vec<(u8, u8)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    head: Option<(u8, u8, u8)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tail: Option<Vec<(u8, u8)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    word: Option<Word>,
}

impl Serialize for StdMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut j = MonomialJson {
            variant: self.variant().into(),
            blocks: None,
            zero_blocks: None,
            head: None,
            tail: None,
            word: Some(self.word()),
        };
        match self {
            StdMonomial::TypeA { blocks } => j.blocks = Some(blocks.clone()),
            StdMonomial::Plus { zero_blocks, tail } => {
                j.zero_blocks = Some(zero_blocks.clone());
                j.tail = Some(tail.clone());
            }
            StdMonomial::Minus { head, tail } => {
                j.head = Some(*head);
                j.tail = Some(tail.clone());
            }
        }
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StdMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MonomialJson::deserialize(d)?;
        let m = match j.variant.as_str() {
            "a" => StdMonomial::TypeA {
                blocks: j.blocks.ok_or_else(|| D::Error::missing_field("blocks"))?,
            },
            "plus" => StdMonomial::Plus {
                zero_blocks: j.zero_blocks.ok_or_else(|| D::Error::missing_field("zero_blocks"))?,
                tail: j.tail.unwrap_or_default(),
            },
            "minus" => StdMonomial::Minus {
                head: j.head.ok_or_else(|| D::Error::missing_field("head"))?,
                tail: j.tail.unwrap_or_default(),
            },
            other => return Err(D::Error::custom(format!("unknown monomial variant {other:?}"))),
        };
        if let Some(w) = j.word {
            if w != m.word() {
                return Err(D::Error::custom(format!("word {w} does not match the blocks")));
            }
        }
        Ok(m)
    }
}

/// All strictly increasing block sequences `(i, j)` with `i ≥ min_i`,
/// `j ≥ min_j`, `1 ≤ j ≤ i ≤ n-1`, including the empty one.
fn type_a_tails(min_i: usize, min_j: usize, n: usize) -> Vec<Vec<(u8, u8)>> {
    let mut out = vec![Vec::new()];
    for i in min_i.max(1)..n {
        for j in min_j.max(1)..=i {
            for rest in type_a_tails(i + 1, j + 1, n) {
                let mut v = vec![(i as u8, j as u8)];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

fn zero_block_seqs(min_i: usize, n: usize, d: usize) -> Vec<Vec<(u8, u8)>> {
    let mut out = Vec::new();
    for i in min_i..n {
        for k in 1..d {
            out.push(vec![(i as u8, k as u8)]);
            for rest in zero_block_seqs(i + 1, n, d) {
                let mut v = vec![(i as u8, k as u8)];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

/// The standard monomials of `f`, built from the block constraints and
/// sorted by word in degree-lexicographic order.
pub fn standard_monomials(f: &Family) -> Vec<StdMonomial> {
    let n = f.n();
    let mut out: Vec<StdMonomial> = type_a_tails(1, 1, n)
        .into_iter()
        .map(|blocks| StdMonomial::TypeA { blocks })
        .collect();
    if !matches!(f, Family::TypeA { .. }) {
        let d = f.d();
        for zb in zero_block_seqs(0, n, d) {
            let last = zb.last().expect("nonempty").0 as usize;
            for tail in type_a_tails(last + 1, 1, n) {
                out.push(StdMonomial::Plus { zero_blocks: zb.clone(), tail });
            }
        }
        for i in 1..n {
            for k in 1..d {
                for j in 1..=i {
                    for tail in type_a_tails(i + 1, j + 1, n) {
                        out.push(StdMonomial::Minus { head: (i as u8, k as u8, j as u8), tail });
                    }
                }
            }
        }
    }
    out.sort_by_cached_key(StdMonomial::word);
    out
}

/// The type B normal forms written as `E_0E_{i_1,j_1}⋯E_{i_p,j_p}` and
/// `E_{i_1,0}E^{1,j_1}E_{i_2,j_2}⋯E_{i_p,j_p}` (with `j ≥ 0`, weakly
/// increasing, strictly once positive), together with the type A forms.
pub fn type_b_forms(n: usize) -> Vec<Word> {
    fn seqs(min_i: usize, min_j: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new()];
        for i in min_i..n {
            for j in min_j..=i {
                let next_j = if j == 0 { 0 } else { j + 1 };
                for rest in seqs(i + 1, next_j, n) {
                    let mut v = vec![(i, j)];
                    v.extend(rest);
                    out.push(v);
                }
            }
        }
        out
    }
    let blocks = |s: &[(usize, usize)]| -> Vec<u8> { s.iter().flat_map(|&(i, j)| desc(i, j)).collect() };
    let mut out = Vec::new();
    for s in seqs(1, 0, n) {
        let mut w = vec![0];
        w.extend(blocks(&s));
        out.push(Word::new(w));
        if let Some((&(i1, j1), rest)) = s.split_first() {
            let mut w = desc(i1, 0);
            w.extend(asc(1, j1));
            w.extend(blocks(rest));
            out.push(Word::new(w));
        }
        if s.iter().all(|&(_, j)| j > 0) {
            out.push(Word::new(blocks(&s)));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn blocks_flatten() {
        let m = StdMonomial::Plus { zero_blocks: vec![(0, 2), (2, 1)], tail: vec![(3, 1)] };
        assert_eq!(m.word().letters(), &[0, 0, 2, 1, 0, 3, 2, 1]);
        let m = StdMonomial::Minus { head: (2, 1, 2), tail: vec![(3, 3)] };
        assert_eq!(m.word().letters(), &[2, 1, 0, 1, 2, 3]);
    }

    #[test]
    fn words_are_distinct_and_valid() {
        for (d, n) in [(2, 3), (3, 3), (4, 4), (3, 5)] {
            let f = Family::gd1n(d, n).unwrap();
            let ms = standard_monomials(&f);
            let words: HashSet<_> = ms.iter().map(StdMonomial::word).collect();
            assert_eq!(words.len(), ms.len());
            assert!(ms.iter().all(|m| m.is_valid_for(&f)));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = Family::gd1n(3, 3).unwrap();
        for m in standard_monomials(&f) {
            let s = serde_json::to_string(&m).unwrap();
            let back: StdMonomial = serde_json::from_str(&s).unwrap();
            assert_eq!(back, m);
        }
        let bad = r#"{"variant":"plus","zero_blocks":[[0,1]],"tail":[],"word":[1]}"#;
        assert!(serde_json::from_str::<StdMonomial>(bad).is_err());
    }

    #[test]
    fn type_b_forms_agree() {
        for n in 2..=6 {
            let f = Family::type_b(n).unwrap();
            let ours: Vec<Word> = standard_monomials(&f).iter().map(StdMonomial::word).collect();
            assert_eq!(ours, type_b_forms(n), "n = {n}");
        }
    }
}
