//! Dense univariate polynomials over the rationals, in the variable `n`.
//!
//! Coefficients are stored constant-first; trailing zeros are trimmed so the
//! zero polynomial is the empty sequence and `degree` is `None` exactly for
//! zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Build from constant-first coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * n^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Constant-first coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at an integer index.
    pub fn eval_int(&self, x: &BigInt) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * Rational::from_integer(x.clone()) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Taylor shift: the polynomial `p(n + offset)`.
    pub fn shift(&self, offset: &Rational) -> Polynomial {
        // Horner on p with (n + offset) substituted for n.
        let mut acc = Polynomial::zero();
        let linear = Polynomial::new(vec![offset.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Sum of coefficient magnitudes; bounds |p(n)| <= C * n^deg for n >= 1.
    pub fn coeff_abs_sum(&self) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c.abs())
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let val = &rem[k + i] - &(c * &q);
                    rem[k + i] = val;
                }
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor (1 for coprime inputs).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading_coeff().unwrap().clone();
        a.scale(&lead.recip())
    }

    /// Signed content: gcd of coefficient numerators over lcm of denominators,
    /// carrying the sign of the leading coefficient. Dividing by it leaves a
    /// primitive integer polynomial with positive leading coefficient.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().unwrap().is_negative() {
            content = -content;
        }
        content
    }

    /// Split into `(content, primitive)` with `self = content * primitive`.
    pub fn primitive_parts(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), Polynomial::zero());
        }
        let content = self.content();
        (content.clone(), self.scale(&content.recip()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let val = &out[i + j] + &(a * b);
                out[i + j] = val;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_text = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({}/{})", mag.numer(), mag.denom())
            };
            match k {
                0 => write!(f, "{coeff_text}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff_text}")?;
                    }
                    if k == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn eval_factor_roots() {
        // 4n - 3 vanishes at 3/4, 4n - 1 at 1/4
        let p = poly(&[(-3, 1), (4, 1)]);
        assert_eq!(p.eval(&rat(3, 4)), int(0));
        let q = poly(&[(-1, 1), (4, 1)]);
        assert_eq!(q.eval(&rat(1, 4)), int(0));
        // (4n-1) - (4n-3) = 2, constant everywhere
        let diff = &q - &p;
        assert_eq!(diff, Polynomial::constant(int(2)));
        assert_eq!(diff.eval(&int(5)), int(2));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(poly(&[(0, 1), (0, 1)]), Polynomial::zero());
        assert_eq!(poly(&[(1, 1), (0, 1)]).degree(), Some(0));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[(1, 1), (-2, 1), (0, 1), (3, 1)]);
        let b = poly(&[(-1, 2), (1, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = poly(&[(-1, 1), (4, 1)]);
        let g = poly(&[(-3, 1), (4, 1)]);
        let a = &f * &g;
        let b = &f * &poly(&[(1, 1), (1, 1)]);
        let d = a.gcd(&b);
        // monic version of 4n - 1
        assert_eq!(d, poly(&[(-1, 4), (1, 1)]));
    }

    #[test]
    fn shift_matches_pointwise() {
        let p = poly(&[(1, 1), (-2, 1), (3, 1)]);
        let shifted = p.shift(&int(7));
        for x in -3..4 {
            assert_eq!(shifted.eval(&int(x)), p.eval(&int(x + 7)));
        }
    }

    #[test]
    fn primitive_parts_normalize() {
        let p = poly(&[(2, 3), (-4, 3)]);
        let (content, prim) = p.primitive_parts();
        assert_eq!(content, rat(-2, 3));
        assert_eq!(prim, poly(&[(-1, 1), (2, 1)]));
        assert_eq!(prim.scale(&content), p);
    }

    #[test]
    fn display_readable() {
        assert_eq!(poly(&[(-3, 1), (4, 1)]).to_string(), "4n - 3");
        assert_eq!(poly(&[(0, 1), (0, 1), (1, 1)]).to_string(), "n^2");
        assert_eq!(poly(&[(2, 1)]).to_string(), "2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(poly(&[(1, 2), (1, 1)]).to_string(), "n + (1/2)");
    }
}
