//! G(d,1,n) as the wreath product `(Z/dZ)^n ⋊ S_n`, used to certify that the
//! fc words are reduced, distinct and fully commutative.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::fc::fc_words;
use crate::error::{Error, Result};
use crate::free_algebra::Word;
use crate::presentations::{asc, desc, dimension, Family};

/// `(w, a)` with `w` a permutation of `0..n` (stored as images) and `a` a
/// vector of residues mod `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathElement {
    pub perm: Vec<u8>,
    pub phases: Vec<u8>,
}

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n as u8).collect(), phases: vec![0; n] }
    }

    /// `s_0 = (id, e_1)`, `s_i = (transposition of positions i-1, i, 0)`.
    pub fn generator(i: usize, n: usize) -> Self {
        let mut g = Self::identity(n);
        if i == 0 {
            g.phases[0] = 1;
        } else {
            g.perm.swap(i - 1, i);
        }
        g
    }
}

/// `(w,a)·(v,b) = (w∘v, a∘v + b)` with `(a∘v)_i = a_{v(i)}`.
pub fn wreath_mul(x: &WreathElement, y: &WreathElement, d: usize) -> WreathElement {
    let perm = y.perm.iter().map(|&v| x.perm[v as usize]).collect();
    let phases = y
        .perm
        .iter()
        .zip(&y.phases)
        .map(|(&v, &b)| ((x.phases[v as usize] as usize + b as usize) % d) as u8)
        .collect();
    WreathElement { perm, phases }
}

pub fn word_to_element(w: &Word, d: usize, n: usize) -> Result<WreathElement> {
    if let Some(&x) = w.letters().iter().find(|&&x| x as usize >= n) {
        return Err(Error::InvalidParameter(format!("letter {x} is not below n = {n}")));
    }
    Ok(w.letters().iter().fold(WreathElement::identity(n), |acc, &x| {
        wreath_mul(&acc, &WreathElement::generator(x as usize, n), d)
    }))
}

/// The canonical words `c_0 c_1 ⋯ c_{n-1}` where `c_i` is `s_{i,a}` or
/// `s_{i,1}s_0^ks^{1,a-1}` with `1 ≤ a ≤ i+1`, `1 ≤ k ≤ d-1`.
pub fn canonical_words(d: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let mut choices = Vec::new();
        for a in 1..=i + 1 {
            choices.push(desc(i, a));
            for k in 1..d {
                let mut c = desc(i, 1);
                c.extend(std::iter::repeat(0).take(k));
                c.extend(asc(1, a - 1));
                choices.push(c);
            }
        }
        out = out
            .iter()
            .flat_map(|w| {
                choices.iter().map(move |c| {
                    let mut v = w.clone();
                    v.extend(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// The whole group with word lengths and reduced-word counts.
#[derive(Clone, Debug)]
pub struct WreathGroup {
    pub d: usize,
    pub n: usize,
    elements: Vec<WreathElement>,
    index: HashMap<WreathElement, usize>,
    length: Vec<usize>,
    /// `right[g][s]` is the index of `g·s_s`.
    right: Vec<Vec<usize>>,
    reduced_counts: Vec<u128>,
}

impl WreathGroup {
    /// Builds the group by breadth-first search from the identity.
    pub fn new(d: usize, n: usize) -> Self {
        let gens: Vec<WreathElement> = (0..n).map(|i| WreathElement::generator(i, n)).collect();
        let id = WreathElement::identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut length = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = wreath_mul(&elements[g], s, d);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    length.push(length[g] + 1);
                    elements.push(h);
                }
            }
        }
        let right: Vec<Vec<usize>> = elements
            .iter()
            .map(|g| gens.iter().map(|s| index[&wreath_mul(g, s, d)]).collect())
            .collect();
        // reduced words of h ending in s come from g with g·s = h, l(g) = l(h) - 1
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by_key(|&g| length[g]);
        let mut reduced_counts = vec![0u128; elements.len()];
        reduced_counts[0] = 1;
        for &g in &order {
            for &h in &right[g] {
                if length[h] == length[g] + 1 {
                    reduced_counts[h] += reduced_counts[g];
                }
            }
        }
        Self { d, n, elements, index, length, right, reduced_counts }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &WreathElement {
        &self.elements[i]
    }

    pub fn position(&self, g: &WreathElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn index_of(&self, w: &Word) -> usize {
        w.letters().iter().fold(0, |g, &x| self.right[g][x as usize])
    }

    pub fn length(&self, i: usize) -> usize {
        self.length[i]
    }

    pub fn reduced_word_count(&self, i: usize) -> u128 {
        self.reduced_counts[i]
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        self.length[self.index_of(w)] == w.len()
    }

    /// Some reduced word of element `i`.
    pub fn reduced_word(&self, i: usize) -> Word {
        let mut letters = Vec::new();
        let mut h = i;
        'outer: while self.length[h] > 0 {
            for g in 0..self.elements.len() {
                if self.length[g] + 1 != self.length[h] {
                    continue;
                }
                if let Some(s) = self.right[g].iter().position(|&x| x == h) {
                    letters.push(s as u8);
                    h = g;
                    continue 'outer;
                }
            }
            unreachable!("every nonidentity element has a predecessor");
        }
        letters.reverse();
        Word::new(letters)
    }

    /// Every reduced word of element `i`, by walking back along lengths.
    pub fn reduced_words(&self, i: usize) -> HashSet<Word> {
        let mut pred: Vec<Vec<(usize, u8)>> = vec![Vec::new(); self.elements.len()];
        for g in 0..self.elements.len() {
            for (s, &h) in self.right[g].iter().enumerate() {
                if self.length[h] == self.length[g] + 1 {
                    pred[h].push((g, s as u8));
                }
            }
        }
        fn go(h: usize, pred: &[Vec<(usize, u8)>], suffix: &mut Vec<u8>, out: &mut HashSet<Word>) {
            if h == 0 {
                out.insert(Word::new(suffix.iter().rev().copied().collect()));
                return;
            }
            for &(g, s) in &pred[h] {
                suffix.push(s);
                go(g, pred, suffix, out);
                suffix.pop();
            }
        }
        let mut out = HashSet::new();
        go(i, &pred, &mut Vec::new(), &mut out);
        out
    }

    /// Whether the reduced word `w` has as many reduced words as its
    /// commutation class (adjacent letters `i`, `j` with `|i - j| > 1` swap),
    /// i.e. whether its element is fully commutative.
    pub fn is_fully_commutative(&self, w: &Word) -> bool {
        let target = self.reduced_counts[self.index_of(w)];
        commutation_class_size(w, target).is_some_and(|c| c == target)
    }
}

/// Words reachable from `w` by swapping adjacent letters `i`, `j` with
/// `|i - j| > 1`.
pub fn commutation_class(w: &Word) -> HashSet<Word> {
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        let l = u.letters();
        for p in 0..l.len().saturating_sub(1) {
            if l[p].abs_diff(l[p + 1]) > 1 {
                let mut v = l.to_vec();
                v.swap(p, p + 1);
                let v = Word::new(v);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Size of the commutation class of `w`, or `None` once it exceeds `cap`.
fn commutation_class_size(w: &Word, cap: u128) -> Option<u128> {
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        let l = u.letters();
        for p in 0..l.len().saturating_sub(1) {
            if l[p].abs_diff(l[p + 1]) > 1 {
                let mut v = l.to_vec();
                v.swap(p, p + 1);
                let v = Word::new(v);
                if seen.insert(v.clone()) {
                    if seen.len() as u128 > cap {
                        return None;
                    }
                    queue.push_back(v);
                }
            }
        }
    }
    Some(seen.len() as u128)
}

/// Outcome of [`group_oracle_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub d: usize,
    pub n: usize,
    pub group_order: usize,
    pub expected_order: usize,
    pub canonical_words: usize,
    pub canonical_distinct_and_reduced: bool,
    pub fc_words: usize,
    pub fc_distinct: bool,
    pub fc_reduced: bool,
    pub fc_commutative: bool,
    pub fc_elements_in_group: usize,
    pub dimension: u128,
    pub passed: bool,
}

/// Certifies the bijection between fc words, standard monomials and fully
/// commutative elements of G(d,1,n). Limited to `n ≤ 4`, `d ≤ 3` and
/// `|G| ≤ 1296`.
pub fn group_oracle_check(d: usize, n: usize) -> Result<OracleReport> {
    let family = Family::gd1n(d, n)?;
    let expected_order: usize = (1..=n).product::<usize>() * d.pow(n as u32);
    if n > 4 || d > 3 || expected_order > 1296 {
        return Err(Error::ScaleGuard(format!(
            "group oracle is limited to n <= 4, d <= 3, |G| <= 1296; G({d},1,{n}) has order {expected_order}"
        )));
    }
    let g = WreathGroup::new(d, n);

    let canon = canonical_words(d, n);
    let canon_idx: HashSet<usize> = canon.iter().map(|w| g.index_of(w)).collect();
    let canonical_ok = canon_idx.len() == canon.len() && canon.iter().all(|w| g.is_reduced(w));

    let fcs = fc_words(d, n)?;
    let words: Vec<Word> = fcs.iter().map(|w| w.word()).collect();
    let fc_idx: HashSet<usize> = words.iter().map(|w| g.index_of(w)).collect();
    let fc_distinct = fc_idx.len() == words.len();
    let fc_reduced = words.iter().all(|w| g.is_reduced(w));
    let fc_commutative = fc_reduced
        && words.iter().all(|w| {
            let all = g.reduced_words(g.index_of(w));
            all == commutation_class(w)
        });

    let fc_in_group = (0..g.order())
        .filter(|&i| g.is_fully_commutative(&g.reduced_word(i)))
        .count();
    let dim = dimension(&family)?;
    let passed = g.order() == expected_order
        && canon.len() == expected_order
        && canonical_ok
        && fc_distinct
        && fc_reduced
        && fc_commutative
        && fc_in_group as u128 == dim
        && words.len() as u128 == dim;
    Ok(OracleReport {
        d,
        n,
        group_order: g.order(),
        expected_order,
        canonical_words: canon.len(),
        canonical_distinct_and_reduced: canonical_ok,
        fc_words: words.len(),
        fc_distinct,
        fc_reduced,
        fc_commutative,
        fc_elements_in_group: fc_in_group,
        dimension: dim,
        passed,
    })
}
