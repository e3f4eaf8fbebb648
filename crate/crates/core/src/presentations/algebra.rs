//! Dimensions, products of standard monomials, and the subalgebras of
//! T(d,n) cut out by conditions on `E_0` exponents.

use std::collections::HashMap;

use super::{defining_relations, gs_basis, standard_monomials, Family, StdMonomial};
use crate::combinatorics::{catalan, catalan_triangle_poly};
use crate::error::{Error, Result};
use crate::free_algebra::{NcPoly, Word};
use crate::rewrite::{bounded_completion, RuleSet};

fn overflow(what: &str) -> Error {
    Error::InvalidParameter(format!("{what} does not fit in 128 bits"))
}

/// Dimension from the closed formulas.
pub fn dimension(f: &Family) -> Result<u128> {
    let n = f.n();
    let c = catalan(n)?;
    match *f {
        Family::TypeA { .. } => Ok(c),
        Family::TypeB { .. } => (n as u128 + 2)
            .checked_mul(c)
            .map(|x| x - 1)
            .ok_or_else(|| overflow("dimension")),
        Family::Gd1n { d, .. } => {
            let fp = catalan_triangle_poly(n, n - 1, d as u64)?;
            (d as u128 - 1)
                .checked_mul(fp - 1)
                .and_then(|a| (d as u128).checked_mul(c).and_then(|b| a.checked_add(b)))
                .ok_or_else(|| overflow("dimension"))
        }
    }
}

fn check_subalg(d: usize, r: usize, n: usize) -> Result<()> {
    Family::gd1n(d, n)?;
    if r < 2 || r > d || d % r != 0 {
        return Err(Error::InvalidParameter(format!("r must divide d with 2 <= r <= d, got r={r}, d={d}")));
    }
    Ok(())
}

/// Closed formula for the dimension of the subalgebra of T(d,n) indexed by
/// `r | d`.
pub fn subalg_dimension(d: usize, r: usize, n: usize) -> Result<u128> {
    check_subalg(d, r, n)?;
    let q = (d / r) as u128;
    let fp = catalan_triangle_poly(n, n - 2, d as u64)?;
    let c = catalan(n)?;
    q.checked_mul(d as u128 - 1)
        .and_then(|x| x.checked_mul(fp))
        .and_then(|x| (1 + q).checked_mul(c).and_then(|y| x.checked_add(y)))
        .map(|x| x - q)
        .ok_or_else(|| overflow("subalgebra dimension"))
}

/// Admissible head exponents `k` of the minus forms: `{1} ∪ {r, 2r, …, d-r}`.
pub fn subalgebra_k_set(d: usize, r: usize) -> Vec<usize> {
    let mut ks = vec![1];
    ks.extend((1..d / r).map(|m| m * r).filter(|&k| k != 1));
    ks
}

/// Standard monomials of T(d,n) spanning the subalgebra: every type A form,
/// plus forms whose total `E_0` exponent is divisible by `r`, and minus forms
/// whose head exponent lies in [`subalgebra_k_set`].
pub fn subalgebra_basis(d: usize, r: usize, n: usize) -> Result<Vec<StdMonomial>> {
    check_subalg(d, r, n)?;
    let ks = subalgebra_k_set(d, r);
    Ok(standard_monomials(&Family::gd1n(d, n)?)
        .into_iter()
        .filter(|m| match m {
            StdMonomial::TypeA { .. } => true,
            StdMonomial::Plus { .. } => m.zero_degree() % r == 0,
            StdMonomial::Minus { head, .. } => ks.contains(&(head.1 as usize)),
        })
        .collect())
}

/// An algebra with a rewriting system and the standard monomials that are
/// irreducible under it.
#[derive(Clone, Debug)]
pub struct TlAlgebra {
    family: Family,
    rules: RuleSet,
    basis: Vec<StdMonomial>,
    index: HashMap<Word, usize>,
}

impl TlAlgebra {
    /// Uses [`gs_basis`].
    pub fn new(family: Family) -> Result<Self> {
        Self::with_rules(family, gs_basis(&family))
    }

    /// Uses the completion of the defining relations up to `max_degree`.
    pub fn completed(family: Family, max_degree: usize) -> Result<Self> {
        Self::with_rules(family, completed_basis(&family, max_degree)?)
    }

    /// The basis is the set of standard monomials irreducible under `rules`.
    pub fn with_rules(family: Family, rules: RuleSet) -> Result<Self> {
        if family.n() > 12 {
            return Err(Error::InvalidParameter(format!(
                "{family}: explicit bases are only built for n <= 12"
            )));
        }
        let basis: Vec<StdMonomial> = standard_monomials(&family)
            .into_iter()
            .filter(|m| rules.is_standard(m.word().letters()))
            .collect();
        let index = basis.iter().enumerate().map(|(i, m)| (m.word(), i)).collect();
        Ok(Self { family, rules, basis, index })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn basis(&self) -> &[StdMonomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn monomial(&self, w: &Word) -> Option<&StdMonomial> {
        self.index_of(w).map(|i| &self.basis[i])
    }

    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        let alpha = self.family.alphabet();
        if let Some(w) = p.words().find(|w| !alpha.contains(w)) {
            return Err(Error::InvalidParameter(format!("word {w} uses letters outside {}", self.family)));
        }
        let nf = self.rules.normal_form(p);
        if let Some(w) = nf.words().find(|w| !self.index.contains_key(*w)) {
            return Err(Error::Inconsistent(format!(
                "normal form contains {w}, which is not a standard monomial of {}",
                self.family
            )));
        }
        Ok(nf)
    }

    /// The product of two words, expanded in the standard basis.
    pub fn product_words(&self, u: &Word, v: &Word) -> Result<NcPoly> {
        self.normal_form(&NcPoly::word(u.concat(v)))
    }

    pub fn product(&self, a: &StdMonomial, b: &StdMonomial) -> Result<NcPoly> {
        self.product_words(&a.word(), &b.word())
    }
}

/// Bounded completion of the defining relations of `f`.
pub fn completed_basis(f: &Family, max_degree: usize) -> Result<RuleSet> {
    Ok(bounded_completion(&defining_relations(f), max_degree)?.rules)
}

/// `a·b` in the algebra of `f`, expanded in standard monomials.
pub fn product(a: &StdMonomial, b: &StdMonomial, f: &Family) -> Result<NcPoly> {
    let rules = gs_basis(f);
    let nf = rules.normal_form(&NcPoly::word(a.word().concat(&b.word())));
    if let Some(w) = nf.words().find(|w| !rules.is_standard(w.letters())) {
        return Err(Error::Inconsistent(format!("normal form contains reducible word {w}")));
    }
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::enumerate_standard_words;
    use crate::scalars::DeltaPoly;

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&Family::gd1n(3, 3).unwrap()).unwrap(), 59);
        assert_eq!(dimension(&Family::type_b(3).unwrap()).unwrap(), 24);
        assert_eq!(dimension(&Family::type_a(3).unwrap()).unwrap(), 5);
        assert_eq!(dimension(&Family::gd1n(2, 4).unwrap()).unwrap(), 83);
    }

    #[test]
    fn structural_forms_match_rewriting() {
        for n in 2..=7 {
            let f = Family::type_a(n).unwrap();
            let words: Vec<Word> = standard_monomials(&f).iter().map(StdMonomial::word).collect();
            assert_eq!(words, enumerate_standard_words(&gs_basis(&f), None).unwrap(), "{f}");
            assert_eq!(words.len() as u128, dimension(&f).unwrap(), "{f}");
        }
        for n in 2..=5 {
            let f = Family::type_b(n).unwrap();
            let words: Vec<Word> = standard_monomials(&f).iter().map(StdMonomial::word).collect();
            let rules = completed_basis(&f, 12).unwrap();
            assert_eq!(words, enumerate_standard_words(&rules, None).unwrap(), "{f}");
            assert_eq!(words.len() as u128, dimension(&f).unwrap(), "{f}");
        }
    }

    #[test]
    fn completed_d3_is_smaller() {
        let f = Family::gd1n(3, 3).unwrap();
        let alg = TlAlgebra::completed(f, 12).unwrap();
        let words = enumerate_standard_words(alg.rules(), None).unwrap();
        assert_eq!(words.len(), 55);
        assert_eq!(alg.dim(), 55);
        assert_eq!(TlAlgebra::new(f).unwrap().dim(), 59);
    }

    #[test]
    fn subalgebra_counts() {
        assert_eq!(subalg_dimension(2, 2, 3).unwrap(), 14);
        assert_eq!(subalg_dimension(3, 3, 3).unwrap(), 21);
        assert_eq!(subalgebra_basis(2, 2, 3).unwrap().len(), 14);
        assert_eq!(subalgebra_basis(3, 3, 3).unwrap().len(), 21);
        assert!(subalg_dimension(4, 3, 3).is_err());
        assert_eq!(subalgebra_k_set(6, 2), vec![1, 2, 4]);
        // the listed spanning set for (4,2,3) is larger than the closed formula
        assert_eq!(subalgebra_basis(4, 2, 3).unwrap().len(), 60);
        assert_eq!(subalg_dimension(4, 2, 3).unwrap(), 55);
    }

    #[test]
    fn products() {
        let alg = TlAlgebra::new(Family::gd1n(3, 3).unwrap()).unwrap();
        let e0 = alg.monomial(&Word::letter(0)).unwrap().clone();
        let p = alg.product(&e0, &e0).unwrap();
        assert_eq!(p.to_string(), "E0.E0");
        let p = alg.product_words(&Word::new(vec![0, 0]), &Word::letter(0)).unwrap();
        assert_eq!(p, NcPoly::term(Word::letter(0), DeltaPoly::delta().scale(&crate::scalars::rational(2, 1))));
        let free = product(&e0, &e0, alg.family()).unwrap();
        assert_eq!(free.to_string(), "E0.E0");
    }
}
