//! Invertible 2×2 matrices with exact rational entries.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::Rational;

/// `[[a, b], [c, d]]` with `ad − bc ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GL2 {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl GL2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let m = Self { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(m)
    }

    /// Entries must already be known to give a nonzero determinant.
    fn from_entries(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        let m = Self { a, b, c, d };
        debug_assert!(!m.det().is_zero());
        m
    }

    pub fn identity() -> Self {
        Self::from_entries(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn scalar(lambda: &Rational) -> Result<Self> {
        Self::diag(lambda.clone(), lambda.clone())
    }

    pub fn diag(a: Rational, d: Rational) -> Result<Self> {
        Self::new(a, Rational::zero(), Rational::zero(), d)
    }

    /// `u(λ) = diag(λ, −λ)`.
    pub fn u(lambda: &Rational) -> Result<Self> {
        Self::diag(lambda.clone(), -lambda.clone())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        Self::from_entries(
            &self.d / &det,
            -(&self.b / &det),
            -(&self.c / &det),
            &self.a / &det,
        )
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.a.is_one()
    }

    /// `x · self · x⁻¹`.
    pub fn conjugate_by(&self, x: &GL2) -> GL2 {
        &(x * self) * &x.inverse()
    }
}

impl Mul for &GL2 {
    type Output = GL2;

    fn mul(self, rhs: &GL2) -> GL2 {
        GL2::from_entries(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl fmt::Display for GL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}
