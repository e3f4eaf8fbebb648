//! G(d,1,n)-Dyck paths and ordinary Dyck paths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentations::StdMonomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    East,
    North,
}

/// A sub-diagonal lattice path `(0,0) → (n,n)` through the marked points
/// `(i,0)` (each with a multiplicity `k`) and then the corners `(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckPathG {
    pub marked: Vec<(u8, u8)>,
    pub corners: Vec<(u8, u8)>,
    pub n: usize,
    pub d: usize,
}

impl DyckPathG {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        if self.marked.is_empty() {
            return bad("a path has at least one marked point".into());
        }
        let n = self.n as u8;
        for w in self.marked.windows(2) {
            if w[0].0 >= w[1].0 {
                return bad(format!("marked points {:?} are not strictly increasing", self.marked));
            }
        }
        for &(i, k) in &self.marked {
            if i >= n || k == 0 || k as usize >= self.d {
                return bad(format!("marked point ({i},{k}) out of range"));
            }
        }
        let mut prev = (self.marked.last().expect("nonempty").0, 0u8);
        for &(i, j) in &self.corners {
            if i <= prev.0 || j <= prev.1 || j < 1 || j > i || i >= n {
                return bad(format!("corner ({i},{j}) out of order or above the diagonal"));
            }
            prev = (i, j);
        }
        Ok(())
    }

    /// Waypoints in order, the marked ones repeated by multiplicity, ending
    /// at `(n,n)`.
    pub fn waypoints(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &(i, k) in &self.marked {
            out.extend(std::iter::repeat((i as usize, 0)).take(k as usize));
        }
        out.extend(self.corners.iter().map(|&(i, j)| (i as usize, j as usize)));
        out.push((self.n, self.n));
        out
    }

    /// Unit steps, each hop east first and then north.
    pub fn steps(&self) -> Vec<Step> {
        let mut out = Vec::new();
        let mut at = (0, 0);
        for p in self.waypoints() {
            out.extend(std::iter::repeat(Step::East).take(p.0 - at.0));
            out.extend(std::iter::repeat(Step::North).take(p.1 - at.1));
            at = p;
        }
        out
    }
}

/// The path of a plus-form monomial: zero blocks become marked points and
/// tail blocks become corners.
pub fn monomial_to_path(m: &StdMonomial, d: usize, n: usize) -> Result<DyckPathG> {
    let StdMonomial::Plus { zero_blocks, tail } = m else {
        return Err(Error::Domain(format!("only plus forms have paths, got a {} form", m.variant())));
    };
    let p = DyckPathG { marked: zero_blocks.clone(), corners: tail.clone(), n, d };
    p.validate()?;
    Ok(p)
}

pub fn path_to_monomial(p: &DyckPathG) -> Result<StdMonomial> {
    p.validate()?;
    Ok(StdMonomial::Plus { zero_blocks: p.marked.clone(), tail: p.corners.clone() })
}

/// All Dyck paths `(0,0) → (n,n)` with unit east/north steps that never go
/// above the diagonal.
pub fn dyck_paths(n: usize) -> Vec<Vec<Step>> {
    fn go(x: usize, y: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if x == n && y == n {
            out.push(cur.clone());
            return;
        }
        if x < n {
            cur.push(Step::East);
            go(x + 1, y, n, cur, out);
            cur.pop();
        }
        if y < x {
            cur.push(Step::North);
            go(x, y + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::new(), &mut out);
    out
}

pub fn passes_through(steps: &[Step], point: (usize, usize)) -> bool {
    let mut at = (0, 0);
    if at == point {
        return true;
    }
    for s in steps {
        match s {
            Step::East => at.0 += 1,
            Step::North => at.1 += 1,
        }
        if at == point {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::catalan_entry;
    use crate::presentations::{standard_monomials, Family};

    #[test]
    fn worked_path() {
        // E_0²E_{1,0}E_{2,1} in T(3,3)
        let m = StdMonomial::Plus { zero_blocks: vec![(0, 2), (1, 1)], tail: vec![(2, 1)] };
        assert_eq!(m.word().letters(), &[0, 0, 1, 0, 2, 1]);
        let p = monomial_to_path(&m, 3, 3).unwrap();
        assert_eq!(p.marked, vec![(0, 2), (1, 1)]);
        assert_eq!(p.corners, vec![(2, 1)]);
        assert_eq!(p.waypoints(), vec![(0, 0), (0, 0), (1, 0), (2, 1), (3, 3)]);
        use Step::*;
        assert_eq!(p.steps(), vec![East, East, North, East, North, North]);
    }

    #[test]
    fn round_trip() {
        let f = Family::gd1n(3, 4).unwrap();
        for m in standard_monomials(&f) {
            match monomial_to_path(&m, 3, 4) {
                Ok(p) => assert_eq!(path_to_monomial(&p).unwrap(), m),
                Err(_) => assert!(!matches!(m, StdMonomial::Plus { .. })),
            }
        }
    }

    #[test]
    fn paths_through_points() {
        for n in 0..=7 {
            let paths = dyck_paths(n);
            for k in 0..=n {
                let c = paths.iter().filter(|p| passes_through(p, (n, k))).count();
                assert_eq!(c as u128, catalan_entry(n, k).unwrap());
            }
        }
    }
}
