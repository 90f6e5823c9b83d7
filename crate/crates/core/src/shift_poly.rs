//! Shift polynomials `P_j(x) = Σ_{r=0}^{j} B_{j−r}·C(j, r)·x^r`.
//!
//! `P_j` carries Stirling rows forward by `j` Bell indices:
//! `B_{n+j} = Σ_{k=1}^{n} P_j(k)·S(n, k)`. Two constructions are provided.
//! [`ShiftPolynomial::closed_form`] reads coefficients off a Bell table and
//! Pascal's triangle; [`ShiftPolynomial::recursive`] iterates
//! `P_{j+1}(x) = P_j(x+1) + x·P_j(x)` from `P_0 = 1` and never looks at a
//! Bell number.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{BellTable, BinomialTable, StirlingTriangle};

/// Coefficients of `P_j` in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftPolynomial {
    coeffs: Vec<BigUint>,
}

impl ShiftPolynomial {
    pub fn closed_form(j: usize, bell: &BellTable, binom: &BinomialTable) -> Result<Self> {
        bell.get(j)?;
        let row = binom.row(j)?;
        let coeffs = (0..=j)
            .map(|r| Ok(bell.get(j - r)? * &row[r]))
            .collect::<Result<Vec<_>>>()?;
        Ok(ShiftPolynomial { coeffs })
    }

    pub fn recursive(j: usize) -> Self {
        let mut coeffs = vec![BigUint::one()];
        for _ in 0..j {
            let mut next = taylor_shift_by_one(&coeffs);
            next.push(BigUint::zero());
            for (r, c) in coeffs.iter().enumerate() {
                next[r + 1] += c;
            }
            coeffs = next;
        }
        ShiftPolynomial { coeffs }
    }

    /// The shift `j`, equal to the degree.
    pub fn shift(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }

    /// `Σ_{k=1}^{n} P_j(k)·S(n, k)`, which equals `B_{n+j}`.
    pub fn bell_shift(&self, n: usize, tri: &StirlingTriangle) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let row = tri.row(n)?;
        Ok((1..=n)
            .map(|k| self.eval(&BigUint::from(k)) * &row[k])
            .sum())
    }
}

/// `B_{n+j}` via a shift polynomial whose `j` must match.
pub fn bell_shift(
    n: usize,
    j: usize,
    tri: &StirlingTriangle,
    poly: &ShiftPolynomial,
) -> Result<BigUint> {
    if poly.shift() != j {
        return Err(Error::ShiftMismatch {
            expected: j,
            actual: poly.shift(),
        });
    }
    poly.bell_shift(n, tri)
}

/// Coefficients of `q(x+1)` given those of `q(x)`, by repeated synthetic
/// division. Only additions are used, so no binomial table is consulted.
fn taylor_shift_by_one(coeffs: &[BigUint]) -> Vec<BigUint> {
    let mut a = coeffs.to_vec();
    let deg = a.len() - 1;
    for i in 0..deg {
        for k in (i..deg).rev() {
            let hi = a[k + 1].clone();
            a[k] += hi;
        }
    }
    a
}

impl fmt::Display for ShiftPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (r, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{r}")?,
                (_, false) => write!(f, "{c}x^{r}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[u64]) -> Vec<BigUint> {
        v.iter().copied().map(BigUint::from).collect()
    }

    #[test]
    fn recursive_small() {
        assert_eq!(ShiftPolynomial::recursive(0).coeffs(), coeffs(&[1]));
        assert_eq!(ShiftPolynomial::recursive(1).coeffs(), coeffs(&[1, 1]));
        assert_eq!(ShiftPolynomial::recursive(2).coeffs(), coeffs(&[2, 2, 1]));
    }

    #[test]
    fn closed_form_needs_depth() {
        let bell = BellTable::build(3);
        let binom = BinomialTable::build(5);
        assert!(ShiftPolynomial::closed_form(3, &bell, &binom).is_ok());
        assert_eq!(
            ShiftPolynomial::closed_form(4, &bell, &binom),
            Err(Error::TableTooShallow { index: 4, depth: 3 })
        );
        let binom = BinomialTable::build(2);
        assert!(ShiftPolynomial::closed_form(3, &bell, &binom).is_err());
    }

    #[test]
    fn taylor_shift_matches_expansion() {
        // (x+1)^3 = 1 + 3x + 3x^2 + x^3
        assert_eq!(
            taylor_shift_by_one(&coeffs(&[0, 0, 0, 1])),
            coeffs(&[1, 3, 3, 1])
        );
        assert_eq!(taylor_shift_by_one(&coeffs(&[7])), coeffs(&[7]));
    }

    #[test]
    fn eval_examples() {
        let p2 = ShiftPolynomial::recursive(2);
        assert_eq!(p2.eval(&BigUint::zero()), BigUint::from(2u32));
        assert_eq!(p2.eval(&BigUint::from(3u32)), BigUint::from(17u32));
        let p5 = ShiftPolynomial::recursive(5);
        assert_eq!(p5.eval(&BigUint::one()), BigUint::from(203u32));
    }

    #[test]
    fn bell_shift_usage_errors() {
        let tri = StirlingTriangle::build(3);
        let p2 = ShiftPolynomial::recursive(2);
        assert_eq!(
            bell_shift(3, 1, &tri, &p2),
            Err(Error::ShiftMismatch {
                expected: 1,
                actual: 2
            })
        );
        assert_eq!(bell_shift(0, 2, &tri, &p2), Err(Error::EmptyGroundSet));
        assert!(bell_shift(4, 2, &tri, &p2).is_err());
        assert_eq!(bell_shift(3, 2, &tri, &p2).unwrap(), BigUint::from(52u32));
    }

    #[test]
    fn display() {
        assert_eq!(
            ShiftPolynomial::recursive(5).to_string(),
            "x^5 + 5x^4 + 20x^3 + 50x^2 + 75x + 52"
        );
        assert_eq!(ShiftPolynomial::recursive(1).to_string(), "x + 1");
    }
}
