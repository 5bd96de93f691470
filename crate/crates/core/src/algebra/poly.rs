//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, AlgebraError, Rational, RationalFunction};

/// A univariate polynomial over the rationals. Coefficients are stored by
/// ascending degree with no trailing zeros; the empty vector is the zero
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// c · x^degree.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// p(q(x)) by Horner's rule over the polynomial ring.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// p evaluated at a rational function, reduced. Horner again; every
    /// intermediate stays in canonical form.
    pub fn eval_ratfun(&self, x: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &RationalFunction::from_rational(c.clone());
        }
        acc
    }

    pub fn mul_scalar(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn div_scalar(&self, c: &Rational) -> Polynomial {
        assert!(!c.is_zero(), "scalar division by zero");
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.div_scalar(&lc.clone()),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn divrem(&self, div: &Polynomial) -> Result<(Polynomial, Polynomial), AlgebraError> {
        let d = div.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(n) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if n < d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lead_inv = div.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); n - d + 1];
        for k in (d..=n).rev() {
            let factor = &rem[k] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for (i, dc) in div.coeffs.iter().enumerate() {
                let idx = k - d + i;
                rem[idx] = &rem[idx] - &(&factor * dc);
            }
            quot[k - d] = factor;
        }
        rem.truncate(d);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Exact division; panics if the remainder is nonzero. Used where a
    /// ring identity guarantees divisibility.
    pub fn exact_div(&self, div: &Polynomial) -> Polynomial {
        let (q, r) = self
            .divrem(div)
            .expect("exact division by the zero polynomial");
        assert!(r.is_zero(), "division expected to be exact");
        q
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// For an even polynomial p, the unique g with g(x²) = p(x).
    pub fn even_substitute(&self) -> Result<Polynomial, AlgebraError> {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % 2 == 1 && !c.is_zero() {
                return Err(AlgebraError::NonEvenPolynomial { degree: k });
            }
        }
        Ok(Polynomial::from_coeffs(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// self · x^k.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Coefficients rendered as exact "p/q" strings, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_one(&self) -> bool {
        Polynomial::is_one(self)
    }
}

impl fmt::Display for Polynomial {
    /// Descending-degree rendering over the variable `x`, e.g.
    /// `x^4 - 3x^2 + 1`.
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
            let coeff_part = if mag.is_one() && k > 0 {
                String::new()
            } else if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => write!(f, "{coeff_part}")?,
                1 => write!(f, "{coeff_part}x")?,
                _ => write!(f, "{coeff_part}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn gcd_of_common_factor() {
        // gcd(x^2 - 1, x - 1) = x - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn divrem_splits_exactly() {
        // (x^2 - 1) / (x + 1) = x - 1 rem 0
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());

        let (q, r) = p(&[1, 0, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());

        let (q, r) = p(&[3, 1]).divrem(&p(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[3, 1]));
    }

    #[test]
    fn division_by_zero_polynomial_is_rejected() {
        assert_eq!(
            p(&[1, 1]).divrem(&Polynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn compose_shifts_argument() {
        // (x^2) composed with (x - 3) = x^2 - 6x + 9
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[-3, 1])), p(&[9, -6, 1]));
    }

    #[test]
    fn eval_uses_horner() {
        let q = p(&[1, -3, 0, 0, 1]); // x^4 - 3x + 1
        assert_eq!(q.eval(&rat(2)), rat(11));
        assert_eq!(q.eval(&ratio(1, 2)), ratio(-7, 16));
    }

    #[test]
    fn even_substitute_halves_degrees() {
        assert_eq!(p(&[1, 0, -3, 0, 1]).even_substitute().unwrap(), p(&[1, -3, 1]));
        assert_eq!(p(&[0, 0, 1]).even_substitute().unwrap(), p(&[0, 1]));
        assert_eq!(
            p(&[0, 1, 0, 1]).even_substitute(),
            Err(AlgebraError::NonEvenPolynomial { degree: 1 })
        );
    }

    #[test]
    fn even_substitute_inverts_square_composition() {
        let g = p(&[1, -3, 1]);
        let square = p(&[0, 0, 1]);
        assert_eq!(g.compose(&square).even_substitute().unwrap(), g);
    }

    #[test]
    fn display_matches_convention() {
        assert_eq!(p(&[1, 0, -3, 0, 1]).to_string(), "x^4 - 3x^2 + 1");
        assert_eq!(p(&[0, -2, 1]).to_string(), "x^2 - 2x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::from_coeffs(vec![ratio(1, 2), rat(-1)]).to_string(),
            "-x + (1/2)"
        );
    }
}
