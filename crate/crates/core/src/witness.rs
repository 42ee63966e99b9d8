//! Explicit conjugacy witnesses for the lifts of `τ`.
//!
//! For every `h = (g, η)` the constructor below produces `z` with
//!
//! ```text
//! σ(h) = c(g⁻¹, g)⁻² η⁻² · z h z⁻¹
//! ```
//!
//! by reducing `g` to one of three canonical shapes, using a fixed witness
//! for each shape, and transporting it back along the conjugator. Every
//! returned [`WitnessReport`] has been checked by evaluating both sides.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cocycle::cocycle;
use crate::error::{Error, Result};
use crate::gl2::GL2;
use crate::group::{z_tilde, MetaElement};
use crate::involution::{rho_alpha, self_inverse_cocycle, sigma, sigma_alpha};
use crate::padic::{Mu, PadicContext, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseKind {
    Scalar,
    Companion,
    DiagonalDistinct,
    JordanBlock,
}

impl CaseKind {
    fn name(self) -> &'static str {
        match self {
            CaseKind::Scalar => "scalar",
            CaseKind::Companion => "companion",
            CaseKind::DiagonalDistinct => "diagonal",
            CaseKind::JordanBlock => "Jordan block",
        }
    }
}

/// Canonical shape of `g` with a conjugator `x` such that `x g x⁻¹ = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCase {
    pub kind: CaseKind,
    /// `None` for scalars.
    pub conjugator: Option<GL2>,
    pub target: GL2,
}

/// Outcome of a witness construction. `verified` is exactly `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub z: MetaElement,
    pub lhs: MetaElement,
    pub rhs: MetaElement,
    pub verified: bool,
}

impl WitnessReport {
    fn checked(z: MetaElement, lhs: MetaElement, rhs: MetaElement) -> Result<Self> {
        let verified = lhs == rhs;
        let report = Self {
            z,
            lhs,
            rhs,
            verified,
        };
        if verified {
            Ok(report)
        } else {
            Err(Error::VerificationFailed(Box::new(report)))
        }
    }
}

pub fn classify(g: &GL2) -> CanonicalCase {
    if g.is_scalar() {
        return CanonicalCase {
            kind: CaseKind::Scalar,
            conjugator: None,
            target: g.clone(),
        };
    }
    let (alpha, beta, gamma, delta) = (g.a(), g.b(), g.c(), g.d());
    let (kind, x, target) = if !gamma.is_zero() {
        let v = -g.det();
        let w = g.trace();
        let x = GL2::new(Rational::zero(), &v / gamma, Rational::one(), delta / gamma)
            .expect("det x = −v/γ ≠ 0");
        let target = GL2::new(Rational::zero(), v, Rational::one(), w).expect("det = det g");
        (CaseKind::Companion, x, target)
    } else if alpha != delta {
        let x = GL2::new(
            Rational::one(),
            beta / (alpha - delta),
            Rational::zero(),
            -Rational::one(),
        )
        .expect("det x = −1");
        let target = GL2::diag(alpha.clone(), delta.clone()).expect("det = det g");
        (CaseKind::DiagonalDistinct, x, target)
    } else {
        let x = GL2::diag(Rational::one(), beta.clone()).expect("β ≠ 0 for non-scalar g");
        let target = GL2::new(
            alpha.clone(),
            Rational::one(),
            Rational::zero(),
            alpha.clone(),
        )
        .expect("det = α²");
        (CaseKind::JordanBlock, x, target)
    };
    assert_eq!(g.conjugate_by(&x), target, "conjugator for {g} is wrong");
    CanonicalCase {
        kind,
        conjugator: Some(x),
        target,
    }
}

/// Witness for a matrix already in canonical shape (with trivial `μ_n` part).
pub fn base_witness(target: &GL2, kind: CaseKind, ctx: &PadicContext) -> Result<MetaElement> {
    let (a, b, c, d) = (target.a(), target.b(), target.c(), target.d());
    let y = match kind {
        // [[0, v], [1, w]]
        CaseKind::Companion if a.is_zero() && c.is_one() => {
            GL2::new(Rational::one(), Rational::zero(), -(d / b), Rational::one())?
        }
        CaseKind::DiagonalDistinct if b.is_zero() && c.is_zero() && a != d => GL2::new(
            Rational::zero(),
            d.clone(),
            Rational::one(),
            Rational::zero(),
        )?,
        CaseKind::JordanBlock if c.is_zero() && b.is_one() && a == d => GL2::identity(),
        _ => return Err(Error::WrongKind(kind.name())),
    };
    Ok(MetaElement::lift(y, ctx))
}

/// Replaces a conjugator `x` with `x g x⁻¹ = diag(a, d)` by `t x`, `t` diagonal,
/// chosen so that `c(y⁻¹g₂⁻¹, y) c(y, y⁻¹g₂⁻¹)⁻¹ = 1`.
pub fn normalize_diagonal_conjugator(x: &GL2, target: &GL2) -> GL2 {
    let (f, p, q, r) = (x.a(), x.b(), x.c(), x.d());
    let (a, d) = (target.a(), target.d());
    let t = if q.is_zero() {
        GL2::diag(f.recip(), r.recip())
    } else if f.is_zero() {
        GL2::diag(p.recip(), (q * d).recip())
    } else {
        GL2::diag(d / ((d - a) * f), (q * d).recip())
    }
    .expect("nonzero diagonal");
    &t * x
}

/// `z` for `h = (g, 1)`; by centrality the same `z` serves every `(g, η)`.
fn construct(g: &GL2, ctx: &PadicContext) -> Result<MetaElement> {
    let case = classify(g);
    let x = match case.conjugator {
        None => {
            let u = GL2::new(
                Rational::zero(),
                g.a().clone(),
                Rational::one(),
                Rational::zero(),
            )?;
            return Ok(MetaElement::lift(u, ctx));
        }
        Some(x) => x,
    };
    let (x, s) = match case.kind {
        CaseKind::Companion => (x, Rational::one()),
        CaseKind::DiagonalDistinct => (
            normalize_diagonal_conjugator(&x, &case.target),
            Rational::one(),
        ),
        CaseKind::JordanBlock => {
            let s = if x.c().is_zero() {
                x.a() * x.d()
            } else {
                -(x.c() * x.c())
            };
            (x, s)
        }
        CaseKind::Scalar => unreachable!("scalars carry no conjugator"),
    };
    let y = base_witness(&case.target, case.kind, ctx)?;
    let x_tilde = MetaElement::lift(x, ctx);
    let u = x_tilde.mul(&z_tilde(&s, ctx).inv(ctx), ctx);
    Ok(sigma(&u, ctx).mul(&y, ctx).mul(&x_tilde, ctx))
}

/// `c(g⁻¹, g)⁻² η⁻²`.
fn correction(h: &MetaElement, ctx: &PadicContext) -> Mu {
    (self_inverse_cocycle(h.g(), ctx) * h.eps()).pow(-2)
}

pub fn witness(h: &MetaElement, ctx: &PadicContext) -> Result<WitnessReport> {
    let z = construct(h.g(), ctx)?;
    let rhs = h.conjugate_by(&z, ctx).twist(correction(h, ctx));
    WitnessReport::checked(z, sigma(h, ctx), rhs)
}

pub fn witness_alpha(
    h: &MetaElement,
    alpha: &Rational,
    ctx: &PadicContext,
) -> Result<WitnessReport> {
    let lhs = sigma_alpha(h, alpha, ctx)?;
    let v = witness(h, ctx)?.z;
    let z = if ctx.is_nth_power(&h.delta())? {
        v
    } else {
        let u = z_tilde(&alpha.recip(), ctx);
        sigma(&u, ctx).inv(ctx).mul(&v, ctx)
    };
    let rhs = h.conjugate_by(&z, ctx).twist(correction(h, ctx));
    WitnessReport::checked(z, lhs, rhs)
}

/// `z` with `ρ_α(h) = z (η² h⁻¹) z⁻¹`.
pub fn rho_witness(h: &MetaElement, alpha: &Rational, ctx: &PadicContext) -> Result<WitnessReport> {
    let lhs = rho_alpha(h, alpha, ctx)?;
    let h_inv = h.inv(ctx);
    let z = witness_alpha(&h_inv, alpha, ctx)?.z;
    let rhs = h_inv.twist(h.eps().pow(2)).conjugate_by(&z, ctx);
    WitnessReport::checked(z, lhs, rhs)
}

/// Outcome of testing `h = ([[1,1],[0,1]], ε)`, `ε² ≠ 1`, against the
/// uncorrected conjugacy `σ(h) = z h z⁻¹`.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub eps: u32,
    pub h: MetaElement,
    pub sigma_h: MetaElement,
    pub samples: usize,
    /// `lambda_histogram[e]` counts centralizer samples with `λ = ζ^e`.
    pub lambda_histogram: Vec<usize>,
    pub conjugates_checked: usize,
    pub conjugates_matching_sigma: usize,
    pub corrected_witness_verified: bool,
}

impl ObstructionReport {
    /// Every sample gives `λ = 1`, no conjugate hits `σ(h)`, and the
    /// corrected identity still holds.
    pub fn holds(&self) -> bool {
        self.lambda_histogram.first() == Some(&self.samples)
            && self.conjugates_matching_sigma == 0
            && self.sigma_h != self.h
            && self.corrected_witness_verified
    }
}

/// Runs the obstruction over the supplied centralizer elements `[[a, b], [0, a]]`.
pub fn centralizer_obstruction<I>(ctx: &PadicContext, centralizer: I) -> Result<ObstructionReport>
where
    I: IntoIterator<Item = GL2>,
{
    let n = ctx.n();
    if n <= 2 {
        return Err(Error::PreconditionViolated(format!(
            "every ε in μ_{n} satisfies ε² = 1"
        )));
    }
    let eps = Mu::zeta(n);
    let g = GL2::new(
        Rational::one(),
        Rational::one(),
        Rational::zero(),
        Rational::one(),
    )?;
    let h = MetaElement::new(g.clone(), eps);
    let sigma_h = sigma(&h, ctx);

    let mut hist = vec![0usize; n as usize];
    let mut samples = 0;
    let mut checked = 0;
    let mut matching = 0;
    for x in centralizer {
        if !(x.c().is_zero() && x.a() == x.d()) {
            return Err(Error::PreconditionViolated(format!(
                "{x} is not in the centralizer of [[1,1],[0,1]]"
            )));
        }
        let x_inv = x.inverse();
        let lambda = cocycle(&(&x * &g), &x_inv, ctx)
            * cocycle(&x, &g, ctx)
            * cocycle(&x, &x_inv, ctx).inv();
        hist[lambda.exp() as usize] += 1;
        samples += 1;
        for e in 0..n {
            let z = MetaElement::new(x.clone(), Mu::new(e as i64, n));
            checked += 1;
            if h.conjugate_by(&z, ctx) == sigma_h {
                matching += 1;
            }
        }
    }
    let corrected_witness_verified = witness(&h, ctx).is_ok();
    Ok(ObstructionReport {
        eps: eps.exp(),
        h,
        sigma_h,
        samples,
        lambda_histogram: hist,
        conjugates_checked: checked,
        conjugates_matching_sigma: matching,
        corrected_witness_verified,
    })
}

/// Whether `η ↦ η²` is trivial on `μ_n`, i.e. whether `n = 2`.
pub fn square_map_trivial(n: u32) -> bool {
    (0..n).all(|e| (2 * e) % n == 0)
}
