//! The n-th order Hilbert symbol on `Q_p^×`, valued in `μ_n`.
//!
//! Tame symbols use the residue-field formula
//! `⟨a,b⟩ = ((−1)^(v(a)v(b)) a^v(b) / b^v(a))^((p−1)/n) mod p`;
//! the dyadic quadratic symbol uses the classical `ε`/`ω` formula.

use crate::error::{Error, Result};
use crate::padic::{int, inv_mod, mul_mod, pow_mod, Mode, Mu, PadicContext, Rational};

pub fn hilbert(a: &Rational, b: &Rational, ctx: &PadicContext) -> Result<Mu> {
    match ctx.mode() {
        Mode::Tame => tame(a, b, ctx),
        Mode::Dyadic => dyadic(a, b, ctx),
    }
}

fn tame(a: &Rational, b: &Rational, ctx: &PadicContext) -> Result<Mu> {
    let p = ctx.p();
    let (va, ua) = ctx.split_unit(a, p)?;
    let (vb, ub) = ctx.split_unit(b, p)?;

    let mut t = signed_pow(ua, vb, p);
    t = mul_mod(t, signed_pow(ub, -va, p), p);
    if (va * vb).rem_euclid(2) == 1 {
        t = (p - t) % p;
    }
    let power = pow_mod(t, (p - 1) / ctx.n() as u64, p);
    let e = ctx
        .zeta_powers()
        .iter()
        .position(|&z| z == power)
        .expect("t^((p-1)/n) lies in the order-n subgroup");
    Ok(Mu::new(e as i64, ctx.n()))
}

fn signed_pow(u: u64, e: i64, p: u64) -> u64 {
    let base = if e < 0 {
        inv_mod(u, p).expect("unit residue")
    } else {
        u
    };
    pow_mod(base, e.unsigned_abs(), p)
}

fn dyadic(a: &Rational, b: &Rational, ctx: &PadicContext) -> Result<Mu> {
    let (alpha, u) = ctx.split_unit(a, 8)?;
    let (beta, w) = ctx.split_unit(b, 8)?;
    let eps = |x: u64| ((x - 1) / 2) % 2;
    let omega = |x: u64| ((x * x - 1) / 8) % 2;
    let e = eps(u) * eps(w)
        + alpha.rem_euclid(2) as u64 * omega(w)
        + beta.rem_euclid(2) as u64 * omega(u);
    Ok(Mu::new(e as i64, ctx.n()))
}

/// An `x` with `⟨a, x⟩ ≠ 1`, which exists exactly when `a ∉ (F^×)^n`.
pub fn nondegeneracy_witness(a: &Rational, ctx: &PadicContext) -> Result<Rational> {
    if ctx.is_nth_power(a)? {
        return Err(Error::PreconditionViolated(format!(
            "{a} is an n-th power; the symbol ⟨a,·⟩ is trivial"
        )));
    }
    let v = ctx.valuation(a)?;
    let x = match ctx.mode() {
        Mode::Tame => {
            if v.rem_euclid(ctx.n() as i64) != 0 {
                int(ctx.residue_generator().expect("tame context") as i64)
            } else {
                ctx.prime()
            }
        }
        Mode::Dyadic => {
            let (_, u) = ctx.split_unit(a, 8)?;
            if v.rem_euclid(2) == 1 {
                int(5)
            } else if (u * u - 1) / 8 % 2 == 1 {
                int(2)
            } else {
                int(-1)
            }
        }
    };
    debug_assert!(!hilbert(a, &x, ctx)?.is_one());
    Ok(x)
}
