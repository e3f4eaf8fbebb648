//! Exact coefficients: arbitrary-precision rationals and univariate
//! polynomials in the formal parameter δ.
//!
//! δ is never evaluated. Every coefficient that appears in a relation, a
//! reduction or a composition is a [`DeltaPoly`] with [`Rational`]
//! coefficients, so results hold for generic δ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from machine integers.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Polynomial in δ with rational coefficients.
///
/// `coeffs[m]` is the coefficient of δ^m. Trailing zeros are always stripped,
/// so the zero polynomial is the empty vector and two equal values have the
/// same representation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DeltaPoly {
    coeffs: Vec<Rational>,
}

impl DeltaPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The parameter δ itself.
    pub fn delta() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c · δ^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, normalizing.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Ascending coefficients; empty for zero.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for nonzero constants.
    pub fn is_nonzero_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact quotient `self / divisor` in ℚ[δ], or `None` if the division
    /// leaves a remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &DeltaPoly) -> Option<DeltaPoly> {
        let dlead = divisor.leading_coeff()?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() <= ddeg {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + ddeg] / dlead;
            if c.is_zero() {
                continue;
            }
            for (m, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + m] -= &c * dc;
            }
            quot[shift] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }
}

impl fmt::Debug for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaPoly({self})")
    }
}

fn fmt_rational_abs(c: &Rational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn fmt_delta_power(m: usize) -> String {
    match m {
        1 => "δ".to_string(),
        _ => format!("δ^{m}"),
    }
}

impl fmt::Display for DeltaPoly {
    /// Descending powers, e.g. `2*δ^2 - δ + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = fmt_rational_abs(c);
            if m == 0 {
                f.write_str(&abs)?;
            } else if abs == "1" {
                f.write_str(&fmt_delta_power(m))?;
            } else {
                write!(f, "{abs}*{}", fmt_delta_power(m))?;
            }
        }
        Ok(())
    }
}

impl Add for &DeltaPoly {
    type Output = DeltaPoly;

    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        DeltaPoly::from_coeffs(coeffs)
    }
}

impl Add for DeltaPoly {
    type Output = DeltaPoly;

    fn add(self, rhs: DeltaPoly) -> DeltaPoly {
        &self + &rhs
    }
}

impl AddAssign<&DeltaPoly> for DeltaPoly {
    fn add_assign(&mut self, rhs: &DeltaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;

    fn neg(self) -> DeltaPoly {
        DeltaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for DeltaPoly {
    type Output = DeltaPoly;

    fn neg(self) -> DeltaPoly {
        -&self
    }
}

impl Sub for &DeltaPoly {
    type Output = DeltaPoly;

    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        self + &(-rhs)
    }
}

impl Sub for DeltaPoly {
    type Output = DeltaPoly;

    fn sub(self, rhs: DeltaPoly) -> DeltaPoly {
        &self - &rhs
    }
}

impl Mul for &DeltaPoly {
    type Output = DeltaPoly;

    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || rhs.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DeltaPoly::from_coeffs(coeffs)
    }
}

impl Mul for DeltaPoly {
    type Output = DeltaPoly;

    fn mul(self, rhs: DeltaPoly) -> DeltaPoly {
        &self * &rhs
    }
}

/// Sum of two polynomials.
pub fn dp_add(a: &DeltaPoly, b: &DeltaPoly) -> DeltaPoly {
    a + b
}

/// Product of two polynomials.
pub fn dp_mul(a: &DeltaPoly, b: &DeltaPoly) -> DeltaPoly {
    a * b
}

fn bigint_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn bigint_from_json<E: de::Error>(v: &serde_json::Value) -> Result<BigInt, E> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| E::custom(format!("integer out of range: {n}"))),
        serde_json::Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| E::custom(format!("bad integer {s:?}: {e}"))),
        other => Err(E::custom(format!("expected integer, got {other}"))),
    }
}

/// JSON: array of `[num, den]` pairs in ascending powers of δ. Integers that
/// do not fit in 64 bits are written as decimal strings.
impl Serialize for DeltaPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[bigint_to_json(c.numer()), bigint_to_json(c.denom())])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for DeltaPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<[serde_json::Value; 2]> = Vec::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for [n, d] in &raw {
            let num = bigint_from_json::<D::Error>(n)?;
            let den = bigint_from_json::<D::Error>(d)?;
            if den.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(num, den));
        }
        let p = DeltaPoly::from_coeffs(coeffs);
        if p.coeffs.len() != raw.len() {
            return Err(de::Error::custom("trailing zero coefficient"));
        }
        Ok(p)
    }
}
