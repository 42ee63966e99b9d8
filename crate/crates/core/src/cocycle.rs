//! Kubota's 2-cocycle on `GL(2, F)` in the Kazhdan–Patterson form
//!
//! ```text
//! c(g₁, g₂) = ⟨ X(g₁g₂)/X(g₁), X(g₁g₂)/(X(g₂)·det g₁) ⟩
//! ```
//!
//! where `X(m)` is the lower-left entry of `m` when nonzero and the
//! lower-right entry otherwise, together with the map `s` that splits the
//! cover over deep congruence subgroups.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gl2::GL2;
use crate::group::MetaElement;
use crate::hilbert::hilbert;
use crate::padic::{Mu, PadicContext, Rational};

/// `X(m)`: never zero, since `c = 0` forces `d ≠ 0`.
pub fn x_invariant(m: &GL2) -> Rational {
    if m.c().is_zero() {
        m.d().clone()
    } else {
        m.c().clone()
    }
}

pub fn cocycle(g1: &GL2, g2: &GL2, ctx: &PadicContext) -> Mu {
    let x12 = x_invariant(&(g1 * g2));
    let left = &x12 / x_invariant(g1);
    let right = &x12 / (x_invariant(g2) * g1.det());
    hilbert(&left, &right, ctx).expect("X and det are nonzero on GL(2)")
}

/// `s(g) = ⟨c, d·det g⟩` if `cd ≠ 0` and `ord(c)` is odd, else `1`.
pub fn splitting_s(g: &GL2, ctx: &PadicContext) -> Mu {
    let (c, d) = (g.c(), g.d());
    if c.is_zero() || d.is_zero() {
        return Mu::one(ctx.n());
    }
    let v = ctx.valuation(c).expect("c is nonzero");
    if v.rem_euclid(2) == 0 {
        return Mu::one(ctx.n());
    }
    hilbert(c, &(d * g.det()), ctx).expect("c and d·det are nonzero")
}

/// Whether `k ∈ K_λ = 1 + p^λ M(2, o)`.
pub fn in_congruence_subgroup(k: &GL2, depth: u32, ctx: &PadicContext) -> bool {
    let one = Rational::one();
    let diffs = [k.a() - &one, k.b().clone(), k.c().clone(), k.d() - &one];
    diffs
        .iter()
        .all(|x| x.is_zero() || ctx.valuation(x).expect("nonzero") >= depth as i64)
}

/// `κ(k) = (k, s(k))` on `K_λ`.
pub fn kappa(k: &GL2, depth: u32, ctx: &PadicContext) -> Result<MetaElement> {
    if !in_congruence_subgroup(k, depth, ctx) {
        return Err(Error::NotInCongruenceSubgroup(depth));
    }
    Ok(MetaElement::new(k.clone(), splitting_s(k, ctx)))
}
