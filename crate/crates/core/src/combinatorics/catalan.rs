//! Catalan numbers, the Catalan triangle and its generating polynomials.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

fn too_big(what: &str) -> Error {
    Error::InvalidParameter(format!("{what} does not fit in 128 bits"))
}

/// The `n`-th Catalan number.
pub fn catalan(n: usize) -> Result<u128> {
    catalan_entry(n, n)
}

/// Row `n` of the triangle, `C(n,0), …, C(n,n)`, by the recursion
/// `C(n,k) = C(n,k-1) + C(n-1,k)`.
pub fn catalan_row(n: usize) -> Result<Vec<u128>> {
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(row[0]);
        for k in 1..m {
            let v = next[k - 1].checked_add(row[k]).ok_or_else(|| too_big("Catalan entry"))?;
            next.push(v);
        }
        next.push(next[m - 1]);
        row = next;
    }
    Ok(row)
}

/// `C(n,k)`; zero when `k > n`.
pub fn catalan_entry(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    Ok(catalan_row(n)?[k])
}

fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, x| acc * x)
}

/// `C(n,k) = (n+k)!(n-k+1) / (k!(n+1)!)`.
pub fn catalan_entry_closed(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let num = factorial(n + k) * BigUint::from(n - k + 1);
    let den = factorial(k) * factorial(n + 1);
    (num / den).to_u128().ok_or_else(|| too_big("Catalan entry"))
}

/// `𝔉_{n,k}(x) = Σ_{s=0}^{k} C(n,s) x^{k-s}`.
pub fn catalan_triangle_poly(n: usize, k: usize, x: u64) -> Result<u128> {
    if k > n {
        return Err(Error::Domain(format!("need k <= n, got k={k}, n={n}")));
    }
    let row = catalan_row(n)?;
    // Horner in x, from s = 0
    row[..=k].iter().try_fold(0u128, |acc, &c| {
        acc.checked_mul(x as u128)
            .and_then(|v| v.checked_add(c))
            .ok_or_else(|| too_big("Catalan triangle polynomial"))
    })
}
