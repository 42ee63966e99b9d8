//! The standard involution `τ(g) = w₀ gᵀ w₀` and its lifts to the cover.

use crate::cocycle::cocycle;
use crate::error::{Error, Result};
use crate::gl2::GL2;
use crate::group::{product, u_tilde, MetaElement};
use crate::hilbert::hilbert;
use crate::padic::{PadicContext, Rational};

use num_traits::{One, Zero};

/// `[[a, b], [c, d]] ↦ [[d, b], [c, a]]`.
pub fn tau(g: &GL2) -> GL2 {
    GL2::new(g.d().clone(), g.b().clone(), g.c().clone(), g.a().clone())
        .expect("τ preserves the determinant")
}

/// `σ(h) = ũ(Δ(h)) h⁻¹ ũ(1)`, evaluated literally in the group.
pub fn sigma_defining(h: &MetaElement, ctx: &PadicContext) -> MetaElement {
    product(
        &[
            &u_tilde(&h.delta(), ctx),
            &h.inv(ctx),
            &u_tilde(&Rational::one(), ctx),
        ],
        ctx,
    )
}

/// Closed form of `σ`: `(τ(g), ⟨Δ, c⟩ ε⁻¹)` when `c ≠ 0`, `(τ(g), ε⁻¹)` otherwise.
pub fn sigma(h: &MetaElement, ctx: &PadicContext) -> MetaElement {
    let g = h.g();
    let base = if g.c().is_zero() {
        crate::padic::Mu::one(ctx.n())
    } else {
        hilbert(&g.det(), g.c(), ctx).expect("det and c are nonzero")
    };
    MetaElement::new(tau(g), base * h.eps().inv())
}

/// `σ_α(h) = ⟨α, Δ(h)⟩ σ(h)`.
pub fn sigma_alpha(h: &MetaElement, alpha: &Rational, ctx: &PadicContext) -> Result<MetaElement> {
    let phi = twisting_character(alpha, h.g(), ctx)?;
    Ok(sigma(h, ctx).twist(phi))
}

/// `φ_α(g) = ⟨α, det g⟩`, a homomorphism `GL(2, F) → μ_n`.
pub fn twisting_character(
    alpha: &Rational,
    g: &GL2,
    ctx: &PadicContext,
) -> Result<crate::padic::Mu> {
    if alpha.is_zero() {
        return Err(Error::ZeroInput);
    }
    hilbert(alpha, &g.det(), ctx)
}

/// `ρ_α(h) = σ_α(h⁻¹)`, an automorphism of order two.
pub fn rho_alpha(h: &MetaElement, alpha: &Rational, ctx: &PadicContext) -> Result<MetaElement> {
    sigma_alpha(&h.inv(ctx), alpha, ctx)
}

/// `c(g⁻¹, g)`, the recurring correction term.
pub(crate) fn self_inverse_cocycle(g: &GL2, ctx: &PadicContext) -> crate::padic::Mu {
    cocycle(&g.inverse(), g, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{frac, int, Mu};

    fn ctx(p: u64, n: u32) -> PadicContext {
        PadicContext::new(p, n).unwrap()
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> GL2 {
        GL2::new(int(a), int(b), int(c), int(d)).unwrap()
    }

    fn samples() -> Vec<GL2> {
        vec![
            m(1, 2, 3, 4),
            m(2, 7, 0, 5),
            m(2, 9, 0, 2),
            m(0, 5, 1, 0),
            m(5, 0, 10, 3),
            GL2::new(frac(1, 5), int(3), frac(25, 2), int(-1)).unwrap(),
            m(-1, 0, 0, -1),
        ]
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&m(1, 2, 3, 4)), m(4, 2, 3, 1));
        assert_eq!(tau(&m(2, 0, 0, 7)), m(7, 0, 0, 2));
        let w0 = m(0, 1, 1, 0);
        for g in samples() {
            assert_eq!(tau(&g), &(&w0 * &g.transpose()) * &w0);
            let via_u = &(&GL2::u(&g.det()).unwrap() * &g.inverse()) * &GL2::u(&int(1)).unwrap();
            assert_eq!(tau(&g), via_u);
            assert_eq!(tau(&tau(&g)), g);
        }
    }

    #[test]
    fn closed_form_matches_definition() {
        for c in [ctx(5, 4), ctx(7, 3), ctx(2, 2), ctx(3, 2)] {
            for g in samples() {
                for e in 0..c.n() as i64 {
                    let h = MetaElement::new(g.clone(), Mu::new(e, c.n()));
                    assert_eq!(sigma(&h, &c), sigma_defining(&h, &c), "g = {g}");
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let c = ctx(5, 4);
        let g = m(1, 2, 5, 4);
        let h = MetaElement::lift(g.clone(), &c);
        assert_eq!(
            sigma(&h, &c),
            MetaElement::new(tau(&g), hilbert(&g.det(), &int(5), &c).unwrap())
        );
        let eps = MetaElement::central(Mu::new(1, 4));
        assert_eq!(sigma(&eps, &c), MetaElement::central(Mu::new(3, 4)));
        for g in samples() {
            let h = MetaElement::new(g, Mu::new(3, 4));
            assert_eq!(sigma(&sigma(&h, &c), &c), h);
        }
    }

    #[test]
    fn sigma_alpha_examples() {
        let c = ctx(5, 4);
        for g in samples() {
            let h = MetaElement::lift(g.clone(), &c);
            for alpha in [int(1), int(5), int(2), int(10), int(-1)] {
                let s = sigma_alpha(&h, &alpha, &c).unwrap();
                assert_eq!(sigma_alpha(&s, &alpha, &c).unwrap(), h);
                assert_eq!(s.g(), &tau(&g));
                if c.is_nth_power(&g.det()).unwrap() {
                    assert_eq!(s, sigma(&h, &c));
                }
            }
        }
        assert!(sigma_alpha(&MetaElement::identity(&c), &int(0), &c).is_err());
    }

    #[test]
    fn rho_examples() {
        let c = ctx(7, 3);
        assert!(rho_alpha(&MetaElement::identity(&c), &int(3), &c)
            .unwrap()
            .is_identity());
        let gs = samples();
        for (i, g) in gs.iter().enumerate() {
            let h = MetaElement::new(g.clone(), Mu::new(i as i64, 3));
            let k = MetaElement::lift(gs[(i + 1) % gs.len()].clone(), &c);
            let alpha = int(3);
            let r = rho_alpha(&h, &alpha, &c).unwrap();
            assert_eq!(rho_alpha(&r, &alpha, &c).unwrap(), h);
            assert_eq!(
                rho_alpha(&h.mul(&k, &c), &alpha, &c).unwrap(),
                r.mul(&rho_alpha(&k, &alpha, &c).unwrap(), &c)
            );
        }
    }
}
