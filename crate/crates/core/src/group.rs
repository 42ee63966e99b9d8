//! The central extension `1 → μ_n → G̃ → GL(2, F) → 1` defined by the
//! Kubota cocycle. Elements are pairs `(g, ε)` with
//! `(g₁, ε₁)(g₂, ε₂) = (g₁g₂, c(g₁, g₂) ε₁ ε₂)`.

use std::fmt;

use num_traits::Zero;

use crate::cocycle::cocycle;
use crate::error::{Error, Result};
use crate::gl2::GL2;
use crate::padic::{Mu, PadicContext, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetaElement {
    g: GL2,
    eps: Mu,
}

/// The two one-parameter families `z̃(λ) = (λI, 1)` and `ũ(λ) = (u(λ), 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Z,
    U,
}

impl MetaElement {
    pub fn new(g: GL2, eps: Mu) -> Self {
        Self { g, eps }
    }

    /// The preferred section `ℓ(g) = (g, 1)`.
    pub fn lift(g: GL2, ctx: &PadicContext) -> Self {
        Self::new(g, Mu::one(ctx.n()))
    }

    pub fn identity(ctx: &PadicContext) -> Self {
        Self::lift(GL2::identity(), ctx)
    }

    /// The central element `(I, ε)`.
    pub fn central(eps: Mu) -> Self {
        Self::new(GL2::identity(), eps)
    }

    pub fn g(&self) -> &GL2 {
        &self.g
    }

    pub fn eps(&self) -> Mu {
        self.eps
    }

    /// `Δ(h) = det p(h)`.
    pub fn delta(&self) -> Rational {
        self.g.det()
    }

    /// `ε · h` for central `ε`.
    pub fn twist(&self, eps: Mu) -> Self {
        Self::new(self.g.clone(), self.eps * eps)
    }

    pub fn mul(&self, rhs: &MetaElement, ctx: &PadicContext) -> MetaElement {
        let c = cocycle(&self.g, &rhs.g, ctx);
        MetaElement::new(&self.g * &rhs.g, c * self.eps * rhs.eps)
    }

    /// `(g⁻¹, c(g, g⁻¹)⁻¹ ε⁻¹)`.
    pub fn inv(&self, ctx: &PadicContext) -> MetaElement {
        let gi = self.g.inverse();
        let c = cocycle(&self.g, &gi, ctx);
        MetaElement::new(gi, c.inv() * self.eps.inv())
    }

    /// `z · self · z⁻¹`.
    pub fn conjugate_by(&self, z: &MetaElement, ctx: &PadicContext) -> MetaElement {
        z.mul(self, ctx).mul(&z.inv(ctx), ctx)
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && self.eps.is_one()
    }
}

impl fmt::Display for MetaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.eps)
    }
}

/// Product of a slice of elements, left to right.
pub fn product(items: &[&MetaElement], ctx: &PadicContext) -> MetaElement {
    items
        .iter()
        .fold(MetaElement::identity(ctx), |acc, h| acc.mul(h, ctx))
}

pub fn standard_element(
    kind: StandardKind,
    lambda: &Rational,
    ctx: &PadicContext,
) -> Result<MetaElement> {
    if lambda.is_zero() {
        return Err(Error::ZeroInput);
    }
    let g = match kind {
        StandardKind::Z => GL2::scalar(lambda)?,
        StandardKind::U => GL2::u(lambda)?,
    };
    Ok(MetaElement::lift(g, ctx))
}

/// `z̃(λ)`; panics on `λ = 0`.
pub fn z_tilde(lambda: &Rational, ctx: &PadicContext) -> MetaElement {
    standard_element(StandardKind::Z, lambda, ctx).expect("λ must be nonzero")
}

/// `ũ(λ)`; panics on `λ = 0`.
pub fn u_tilde(lambda: &Rational, ctx: &PadicContext) -> MetaElement {
    standard_element(StandardKind::U, lambda, ctx).expect("λ must be nonzero")
}
