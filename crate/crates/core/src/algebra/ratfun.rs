//! The field of univariate rational functions over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraError, Polynomial, Rational};

/// A reduced quotient of two polynomials. Canonical form: gcd(num, den) = 1
/// and den monic, so structural equality is field equality. The zero
/// element is 0/1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().expect("den is nonzero").clone();
        if !lc.is_one() {
            num = num.div_scalar(&lc);
            den = den.div_scalar(&lc);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The identity function x.
    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(p) when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero rational function");
        Self::new(self.den.clone(), self.num.clone()).expect("num is nonzero")
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("denominators are nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominators are nonzero")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("divisor numerator is nonzero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    /// `num / den`, with a side parenthesized when it has several terms,
    /// e.g. `2 / (x - 3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| {
            let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if terms > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn construction_reduces_and_normalizes() {
        // (2x^2 - 2) / (2x - 2) = x + 1
        assert_eq!(rf(&[-2, 0, 2], &[-2, 2]), rf(&[1, 1], &[1]));
        // denominator made monic
        let r = rf(&[1], &[0, 2]);
        assert_eq!(r.den(), &p(&[0, 1]));
        assert_eq!(r.num(), &Polynomial::constant(rat(1) / rat(2)));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn field_inverse_round_trips() {
        let r = rf(&[1, 2, 3], &[0, 0, 1]);
        assert!((&r * &r.recip()).is_one());
    }

    #[test]
    fn arithmetic_examples() {
        // x - 1/x = (x^2 - 1)/x
        let x = RationalFunction::x();
        let inv_x = rf(&[1], &[0, 1]);
        assert_eq!(&x - &inv_x, rf(&[-1, 0, 1], &[0, 1]));
        // addition with cancellation: 1/(x-1) + 1/(x+1) = 2x/(x^2-1)
        assert_eq!(
            &rf(&[1], &[-1, 1]) + &rf(&[1], &[1, 1]),
            rf(&[0, 2], &[-1, 0, 1])
        );
    }

    #[test]
    fn eval_ratfun_examples() {
        // p = y at x - 2/x gives (x^2 - 2)/x
        let arg = &RationalFunction::x() - &rf(&[2], &[0, 1]);
        assert_eq!(p(&[0, 1]).eval_ratfun(&arg), rf(&[-2, 0, 1], &[0, 1]));
        // p = y - 1 at 1/x gives (1 - x)/x
        assert_eq!(
            p(&[-1, 1]).eval_ratfun(&rf(&[1], &[0, 1])),
            rf(&[1, -1], &[0, 1])
        );
        // p = y^2 - 3y + 1 at x^2 recovers x^4 - 3x^2 + 1
        assert_eq!(
            p(&[1, -3, 1]).eval_ratfun(&RationalFunction::from_poly(p(&[0, 0, 1]))),
            RationalFunction::from_poly(p(&[1, 0, -3, 0, 1]))
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(rf(&[4], &[0, 1]).to_string(), "4 / x");
        assert_eq!(rf(&[2], &[-3, 1]).to_string(), "2 / (x - 3)");
        assert_eq!(rf(&[-1, 0, 1], &[0, 1]).to_string(), "(x^2 - 1) / x");
        assert_eq!(rf(&[1, 1], &[1]).to_string(), "x + 1");
    }
}
