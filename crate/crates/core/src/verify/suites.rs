//! Suite bodies: one function per property family.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::cocycle::{cocycle, in_congruence_subgroup, kappa, splitting_s};
use crate::gl2::GL2;
use crate::group::{u_tilde, z_tilde, MetaElement};
use crate::hilbert::{hilbert, nondegeneracy_witness};
use crate::involution::{rho_alpha, sigma, sigma_alpha, sigma_defining, tau, twisting_character};
use crate::padic::{Mu, PadicContext, Rational};
use crate::serial::{gl2_to_cli, meta_to_cli, rational_to_string};
use crate::witness::{
    centralizer_obstruction, rho_witness, square_map_trivial, witness, witness_alpha,
};

use super::sample::TrialDraw;
use super::{Failure, SampleConfig, Status, Suite};

/// Minimum number of centralizer samples for the obstruction suite.
pub const MIN_CENTRALIZER_SAMPLES: usize = 500;

struct Checker<'a> {
    ctx: &'a PadicContext,
    inputs: Map<String, Value>,
    failures: Vec<Failure>,
}

impl<'a> Checker<'a> {
    fn new(ctx: &'a PadicContext, trial: u64) -> Self {
        let mut inputs = Map::new();
        inputs.insert("trial".into(), trial.into());
        Self {
            ctx,
            inputs,
            failures: Vec::new(),
        }
    }

    fn meta(&mut self, key: &str, h: &MetaElement) {
        self.inputs.insert(key.into(), meta_to_cli(h).into());
    }

    fn gl2(&mut self, key: &str, g: &GL2) {
        self.inputs.insert(key.into(), gl2_to_cli(g).into());
    }

    fn rat(&mut self, key: &str, x: &Rational) {
        self.inputs.insert(key.into(), rational_to_string(x).into());
    }

    fn eq<T: PartialEq + Serialize>(&mut self, property: &str, lhs: T, rhs: T) {
        if lhs != rhs {
            self.failures.push(Failure {
                property: property.to_string(),
                inputs: Value::Object(self.inputs.clone()),
                lhs: serde_json::to_value(&lhs).expect("serializable"),
                rhs: serde_json::to_value(&rhs).expect("serializable"),
            });
        }
    }

    fn holds(&mut self, property: &str, ok: bool) {
        self.eq(property, ok, true);
    }

    fn symbol(&self, a: &Rational, b: &Rational) -> Mu {
        hilbert(a, b, self.ctx).expect("nonzero arguments")
    }
}

pub(super) fn run_trial(
    suite: Suite,
    ctx: &PadicContext,
    cfg: &SampleConfig,
    i: u64,
) -> Vec<Failure> {
    let mut draw = TrialDraw::new(cfg, ctx, i);
    let mut ck = Checker::new(ctx, i);
    match suite {
        Suite::Hilbert => hilbert_trial(&mut draw, &mut ck),
        Suite::Cocycle => cocycle_trial(&mut draw, &mut ck),
        Suite::Splitting => splitting_trial(&mut draw, &mut ck),
        Suite::Group => group_trial(&mut draw, &mut ck),
        Suite::Involution => involution_trial(&mut draw, &mut ck),
        Suite::Witness => witness_trial(&mut draw, &mut ck),
        Suite::WitnessAlpha => witness_alpha_trial(&mut draw, &mut ck),
        Suite::Rho => rho_trial(&mut draw, &mut ck),
        Suite::Obstruction => unreachable!("obstruction is not trial-based"),
    }
    ck.failures
}

fn hilbert_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let ctx = ck.ctx;
    let n = ctx.n();
    let (a, b, c) = (draw.rational(), draw.rational(), draw.rational());
    ck.rat("a", &a);
    ck.rat("b", &b);
    ck.rat("c", &c);
    let s = |x: &Rational, y: &Rational| hilbert(x, y, ctx).expect("nonzero");
    let one = Rational::one();

    // valuation and residues
    ck.eq(
        "valuation-additive",
        ctx.valuation(&(&a * &b)).unwrap(),
        ctx.valuation(&a).unwrap() + ctx.valuation(&b).unwrap(),
    );
    let m = num_bigint::BigInt::from(ctx.p());
    ck.eq(
        "unit-residue-multiplicative",
        ctx.unit_residue(&(&a * &b), 1).unwrap().to_string(),
        num_integer::Integer::mod_floor(
            &(ctx.unit_residue(&a, 1).unwrap() * ctx.unit_residue(&b, 1).unwrap()),
            &m,
        )
        .to_string(),
    );

    ck.eq("bilinear-left", s(&(&a * &b), &c), s(&a, &c) * s(&b, &c));
    ck.eq("bilinear-right", s(&a, &(&b * &c)), s(&a, &b) * s(&a, &c));
    ck.eq("antisymmetry", s(&a, &b) * s(&b, &a), Mu::one(n));
    if a != one {
        ck.eq("steinberg", s(&a, &(&one - &a)), Mu::one(n));
        ck.eq("steinberg-swapped", s(&(&one - &a), &a), Mu::one(n));
    }
    ck.eq("trivial-right", s(&a, &one), Mu::one(n));
    ck.eq("trivial-left", s(&one, &a), Mu::one(n));
    for k in [2usize, 3, 5] {
        let ak = num_traits::pow(a.clone(), k);
        let bk = num_traits::pow(b.clone(), k);
        ck.eq("power-left", s(&ak, &b), s(&a, &b).pow(k as i64));
        ck.eq("power-right", s(&a, &bk), s(&a, &b).pow(k as i64));
    }
    ck.eq("inverse-args", s(&a.recip(), &b), s(&a, &b).inv());
    ck.eq("inverse-args-right", s(&a, &b.recip()), s(&a, &b).inv());
    ck.eq("a-minus-a", s(&a, &-a.clone()), Mu::one(n));
    ck.eq("minus-a-a", s(&-a.clone(), &a), Mu::one(n));
    ck.eq("a-a-squared", s(&a, &(&a * &a)), Mu::one(n));

    let an = num_traits::pow(a.clone(), n as usize);
    ck.holds("nth-power-detected", ctx.is_nth_power(&an).unwrap());
    ck.eq("nth-power-kernel", s(&an, &b), Mu::one(n));
    ck.eq("nth-power-kernel-2", s(&an, &c), Mu::one(n));
    if !ctx.is_nth_power(&a).unwrap() {
        match nondegeneracy_witness(&a, ctx) {
            Ok(x) => ck.holds("nondegeneracy", !s(&a, &x).is_one()),
            Err(_) => ck.holds("nondegeneracy-witness-exists", false),
        }
    } else {
        ck.holds(
            "nth-power-kernel-witness-rejected",
            nondegeneracy_witness(&a, ctx).is_err(),
        );
    }
}

fn cocycle_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let ctx = ck.ctx;
    let (g1, g2, g3) = (draw.gl2(), draw.gl2(), draw.gl2());
    ck.gl2("g1", &g1);
    ck.gl2("g2", &g2);
    ck.gl2("g3", &g3);
    let c = |x: &GL2, y: &GL2| cocycle(x, y, ctx);

    ck.eq(
        "cocycle-identity",
        c(&(&g1 * &g2), &g3) * c(&g1, &g2),
        c(&g1, &(&g2 * &g3)) * c(&g2, &g3),
    );
    ck.holds(
        "normalized",
        c(&GL2::identity(), &g1).is_one() && c(&g1, &GL2::identity()).is_one(),
    );

    // self-inverse pair: c(g, g⁻¹) = c(g⁻¹, g), 1 or ⟨d, a⟩
    let gi = g1.inverse();
    let closed = if g1.c().is_zero() {
        ck.symbol(g1.d(), g1.a())
    } else {
        Mu::one(ctx.n())
    };
    ck.eq("self-inverse-symmetric", c(&g1, &gi), c(&gi, &g1));
    ck.eq("self-inverse-closed-form", c(&g1, &gi), closed);

    // conjugation bookkeeping with x = g1, g = g2
    let (x, g) = (&g1, &g2);
    let xi = x.inverse();
    let gi = g.inverse();
    let gi_xi = &gi * &xi;
    let lambda = c(&(x * g), &xi) * c(x, g) * c(x, &xi).inv();
    let beta =
        c(x, &xi) * c(&gi_xi, x) * c(g, &xi).inv() * c(x, &(g * &xi)).inv() * c(x, &gi_xi).inv();
    ck.eq(
        "conjugate-pair",
        c(&(&(x * &gi) * &xi), &(&(x * g) * &xi)),
        c(&gi, g) * beta,
    );
    ck.eq(
        "lambda-beta",
        lambda * beta,
        c(&gi_xi, x) * c(x, &gi_xi).inv(),
    );
}

fn splitting_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let ctx = ck.ctx;
    let depth = ctx.default_splitting_depth();
    let (k1, k2) = (draw.congruence(depth), draw.congruence(depth));
    ck.gl2("k1", &k1);
    ck.gl2("k2", &k2);
    let k12 = &k1 * &k2;
    ck.holds(
        "closed-under-product",
        in_congruence_subgroup(&k12, depth, ctx),
    );
    let lhs = kappa(&k1, depth, ctx)
        .unwrap()
        .mul(&kappa(&k2, depth, ctx).unwrap(), ctx);
    let rhs = kappa(&k12, depth, ctx).unwrap();
    ck.eq("kappa-homomorphism", lhs, rhs);
}

fn group_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let ctx = ck.ctx;
    let n = ctx.n();
    let (h1, h2, h3) = (draw.meta(), draw.meta(), draw.meta());
    let (l, l1, l2) = (draw.nonzero(), draw.nonzero(), draw.nonzero());
    ck.meta("h1", &h1);
    ck.meta("h2", &h2);
    ck.meta("h3", &h3);
    ck.rat("lambda", &l);
    ck.rat("lambda1", &l1);
    ck.rat("lambda2", &l2);
    let id = MetaElement::identity(ctx);

    ck.eq(
        "associativity",
        h1.mul(&h2, ctx).mul(&h3, ctx),
        h1.mul(&h2.mul(&h3, ctx), ctx),
    );
    ck.eq("identity-left", id.mul(&h1, ctx), h1.clone());
    ck.eq("identity-right", h1.mul(&id, ctx), h1.clone());
    let inv = h1.inv(ctx);
    ck.eq("inverse-right", h1.mul(&inv, ctx), id.clone());
    ck.eq("inverse-left", inv.mul(&h1, ctx), id.clone());
    ck.eq("inverse-involutive", inv.inv(ctx), h1.clone());
    let g = h1.g();
    let closed = if g.c().is_zero() {
        MetaElement::new(g.inverse(), ck.symbol(g.a(), g.d()) * h1.eps().inv())
    } else {
        MetaElement::new(g.inverse(), h1.eps().inv())
    };
    ck.eq("inverse-closed-form", inv, closed);
    for e in 0..n {
        let eps = MetaElement::central(Mu::new(e as i64, n));
        ck.eq("central", eps.mul(&h1, ctx), h1.mul(&eps, ctx));
    }

    // the five identities for z̃ and ũ
    let delta = h1.delta();
    ck.eq(
        "h-z-commute",
        h1.mul(&z_tilde(&l, ctx), ctx),
        z_tilde(&l, ctx).mul(&h1, ctx).twist(ck.symbol(&delta, &l)),
    );
    let l12 = &l1 * &l2;
    ck.eq(
        "z-z",
        z_tilde(&l1, ctx).mul(&z_tilde(&l2, ctx), ctx),
        z_tilde(&l12, ctx).twist(ck.symbol(&l1, &l2)),
    );
    ck.eq(
        "u-u",
        u_tilde(&l1, ctx).mul(&u_tilde(&l2, ctx), ctx),
        z_tilde(&l12, ctx).twist(ck.symbol(&l1, &-l2.clone())),
    );
    ck.eq(
        "u-inverse",
        u_tilde(&l, ctx).inv(ctx),
        u_tilde(&l.recip(), ctx),
    );
    ck.eq(
        "u-z",
        u_tilde(&l1, ctx).mul(&z_tilde(&l2, ctx), ctx),
        u_tilde(&l12, ctx).twist(ck.symbol(&l1, &l2)),
    );
}

fn involution_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let ctx = ck.ctx;
    let (h1, h2) = (draw.meta(), draw.meta());
    let alpha = draw.alpha();
    let eps = draw.mu();
    ck.meta("h1", &h1);
    ck.meta("h2", &h2);
    ck.rat("alpha", &alpha);
    let h12 = h1.mul(&h2, ctx);
    let (g1, g2) = (h1.g(), h2.g());

    // τ
    let w0 = GL2::new(
        Rational::zero(),
        Rational::one(),
        Rational::one(),
        Rational::zero(),
    )
    .expect("invertible");
    ck.eq("tau-transpose", tau(g1), &(&w0 * &g1.transpose()) * &w0);
    let u1 = GL2::u(&Rational::one()).expect("invertible");
    let u_det = GL2::u(&g1.det()).expect("invertible");
    ck.eq("tau-u-form", tau(g1), &(&u_det * &g1.inverse()) * &u1);
    ck.eq("tau-anti", tau(&(g1 * g2)), &tau(g2) * &tau(g1));
    ck.eq(
        "tau-det",
        rational_to_string(&tau(g1).det()),
        rational_to_string(&g1.det()),
    );

    // σ
    let s = |h: &MetaElement| sigma(h, ctx);
    ck.eq("sigma-closed-form", s(&h1), sigma_defining(&h1, ctx));
    ck.eq("sigma-anti", s(&h12), s(&h2).mul(&s(&h1), ctx));
    let central = MetaElement::central(eps);
    ck.eq(
        "sigma-central",
        s(&central),
        MetaElement::central(eps.inv()),
    );
    ck.eq("sigma-involution", s(&s(&h1)), h1.clone());
    ck.eq("sigma-inverse", s(&h1.inv(ctx)), s(&h1).inv(ctx));
    ck.eq("sigma-lift", s(&h1).g().clone(), tau(g1));

    // σ_α, φ_α and ρ_α
    let sa = |h: &MetaElement| sigma_alpha(h, &alpha, ctx).expect("α ≠ 0");
    let phi = |g: &GL2| twisting_character(&alpha, g, ctx).expect("α ≠ 0");
    ck.eq("sigma-alpha-anti", sa(&h12), sa(&h2).mul(&sa(&h1), ctx));
    ck.eq("sigma-alpha-involution", sa(&sa(&h1)), h1.clone());
    ck.eq("sigma-alpha-lift", sa(&h1).g().clone(), tau(g1));
    ck.eq(
        "sigma-alpha-delta",
        rational_to_string(&sa(&h1).delta()),
        rational_to_string(&h1.delta()),
    );
    ck.eq("phi-multiplicative", phi(&(g1 * g2)), phi(g1) * phi(g2));
    ck.eq("sigma-alpha-twist", sa(&h1), s(&h1).twist(phi(g1)));
    if ctx.is_nth_power(&h1.delta()).unwrap() {
        ck.eq("sigma-alpha-on-powers", sa(&h1), s(&h1));
    }
    let r = |h: &MetaElement| rho_alpha(h, &alpha, ctx).expect("α ≠ 0");
    ck.eq("rho-involution", r(&r(&h1)), h1.clone());
    ck.eq("rho-automorphism", r(&h12), r(&h1).mul(&r(&h2), ctx));
}

fn record_report(ck: &mut Checker, property: &str, result: crate::Result<crate::WitnessReport>) {
    match result {
        Ok(rep) => ck.eq(property, rep.lhs, rep.rhs),
        Err(crate::Error::VerificationFailed(rep)) => ck.eq(property, rep.lhs, rep.rhs),
        Err(e) => ck.eq(property, e.to_string(), String::from("ok")),
    }
}

fn witness_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let h = draw.meta();
    ck.meta("h", &h);
    let rep = witness(&h, ck.ctx);
    record_report(ck, "witness", rep);
}

fn witness_alpha_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let h = draw.meta();
    let alpha = draw.alpha();
    ck.meta("h", &h);
    ck.rat("alpha", &alpha);
    let rep = witness_alpha(&h, &alpha, ck.ctx);
    record_report(ck, "witness-alpha", rep);
}

fn rho_trial(draw: &mut TrialDraw, ck: &mut Checker) {
    let h = draw.meta();
    let alpha = draw.alpha();
    ck.meta("h", &h);
    ck.rat("alpha", &alpha);
    let rep = rho_witness(&h, &alpha, ck.ctx);
    record_report(ck, "rho-witness", rep);
}

/// How often the cocycle and `s` are nontrivial on the sampled pairs, so a
/// vacuous pass is visible in the report.
pub(super) fn splitting_details(ctx: &PadicContext, cfg: &SampleConfig, total: u64) -> Value {
    let depth = ctx.default_splitting_depth();
    let (mut cocycle_nontrivial, mut s_nontrivial) = (0usize, 0usize);
    for i in 0..total {
        let mut draw = TrialDraw::new(cfg, ctx, i);
        let (k1, k2) = (draw.congruence(depth), draw.congruence(depth));
        if !cocycle(&k1, &k2, ctx).is_one() {
            cocycle_nontrivial += 1;
        }
        if !splitting_s(&k1, ctx).is_one() {
            s_nontrivial += 1;
        }
    }
    serde_json::json!({
        "depth": depth,
        "pairs": total,
        "nontrivial_cocycle_pairs": cocycle_nontrivial,
        "nontrivial_s": s_nontrivial,
    })
}

pub(super) fn obstruction(
    ctx: &PadicContext,
    cfg: &SampleConfig,
) -> (Status, usize, Vec<Failure>, Option<Value>) {
    if ctx.n() <= 2 {
        let details = serde_json::json!({
            "reason": "every ε in μ_2 satisfies ε² = 1",
            "square_map_trivial": square_map_trivial(ctx.n()),
        });
        return (Status::NotApplicable, 0, Vec::new(), Some(details));
    }
    let samples = cfg.trials.max(MIN_CENTRALIZER_SAMPLES);
    let xs: Vec<GL2> = (0..samples as u64)
        .map(|i| {
            if i == 0 {
                GL2::identity()
            } else {
                TrialDraw::new(cfg, ctx, i).centralizer()
            }
        })
        .collect();
    let report = centralizer_obstruction(ctx, xs).expect("n ≥ 3 and centralizer samples");
    let mut failures = Vec::new();
    if !report.holds() {
        failures.push(Failure {
            property: "obstruction".into(),
            inputs: serde_json::json!({ "h": meta_to_cli(&report.h) }),
            lhs: serde_json::to_value(&report.lambda_histogram).expect("serializable"),
            rhs: serde_json::json!({ "conjugates_matching_sigma": report.conjugates_matching_sigma }),
        });
    }
    let mut details = serde_json::to_value(&report).expect("serializable");
    details["square_map_trivial"] = square_map_trivial(ctx.n()).into();
    let status = if failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    (status, samples, failures, Some(details))
}
