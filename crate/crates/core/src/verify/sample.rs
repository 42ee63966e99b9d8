//! Deterministic samplers. Every draw is a pure function of
//! `(seed, context, stream index)`, so trials can run in any order.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gl2::GL2;
use crate::group::MetaElement;
use crate::padic::{frac, int, scaled, Mode, Mu, PadicContext, Rational};

use super::SampleConfig;

/// Largest |valuation| drawn for a random entry.
const MAX_EXPONENT: i32 = 3;

pub fn rng_for(cfg: &SampleConfig, ctx: &PadicContext, stream: u64) -> ChaCha8Rng {
    let key = (ctx.p() << 8) ^ ctx.n() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ key.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(stream);
    rng
}

/// `±a · p^e` with `1 ≤ a ≤ H` and `|e| ≤ min(H, 3)`.
pub fn random_nonzero(rng: &mut ChaCha8Rng, ctx: &PadicContext, height: u32) -> Rational {
    let a = rng.random_range(1..=height as i64);
    let sign = if rng.random_bool(0.5) { -1 } else { 1 };
    let e_max = MAX_EXPONENT.min(height as i32);
    let e = rng.random_range(-e_max..=e_max);
    scaled(sign * a, ctx.p(), e)
}

/// Like [`random_nonzero`] but zero a quarter of the time.
pub fn random_entry(rng: &mut ChaCha8Rng, ctx: &PadicContext, height: u32) -> Rational {
    if rng.random_ratio(1, 4) {
        Rational::zero()
    } else {
        random_nonzero(rng, ctx, height)
    }
}

pub fn random_gl2(rng: &mut ChaCha8Rng, ctx: &PadicContext, height: u32) -> GL2 {
    loop {
        let e: Vec<Rational> = (0..4).map(|_| random_entry(rng, ctx, height)).collect();
        let [a, b, c, d]: [Rational; 4] = e.try_into().expect("four entries");
        if let Ok(g) = GL2::new(a, b, c, d) {
            return g;
        }
    }
}

pub fn random_mu(rng: &mut ChaCha8Rng, ctx: &PadicContext) -> Mu {
    Mu::new(rng.random_range(0..ctx.n() as i64), ctx.n())
}

fn m(a: Rational, b: Rational, c: Rational, d: Rational) -> GL2 {
    GL2::new(a, b, c, d).expect("corpus matrices are invertible")
}

/// Hand-built matrices hitting every branch of `X`, `s`, `σ` and `classify`.
pub fn corpus(ctx: &PadicContext) -> Vec<GL2> {
    let p = ctx.p() as i64;
    let g = unit_non_power(ctx);
    let z = Rational::zero;
    let o = Rational::one;
    vec![
        GL2::identity(),
        // scalars
        GL2::scalar(&int(2)).unwrap(),
        GL2::scalar(&int(p)).unwrap(),
        GL2::scalar(&int(-1)).unwrap(),
        GL2::scalar(&frac(3, p * p)).unwrap(),
        // companions, w = 0 and w ≠ 0
        m(z(), int(-p), o(), z()),
        m(z(), g.clone(), o(), int(5)),
        m(z(), int(3), o(), frac(1, p)),
        // upper triangular, distinct diagonal
        m(int(2), int(7), z(), int(5)),
        m(int(p), o(), z(), int(1)),
        m(g.clone(), z(), z(), int(p * p)),
        // upper triangular, repeated diagonal (Jordan)
        m(o(), o(), z(), o()),
        m(int(2), int(9), z(), int(2)),
        m(int(p), frac(1, p), z(), int(p)),
        // c ≠ 0 with odd and even ord(c), with and without d = 0
        m(o(), z(), int(p), o()),
        m(o(), z(), int(p), int(2)),
        m(o(), int(3), int(p * p), int(4)),
        m(int(2), int(1), frac(1, p), z()),
        m(z(), o(), g.clone(), z()),
        m(int(1), int(2), int(3), int(4)),
        m(frac(1, p), int(3), int(p * p * p), int(-1)),
        // lower triangular, c ≠ 0, a = d
        m(int(3), z(), int(p), int(3)),
    ]
}

/// A unit that is not an n-th power: the residue generator, or 5 when `p = 2`.
pub fn unit_non_power(ctx: &PadicContext) -> Rational {
    match ctx.mode() {
        Mode::Tame => int(ctx.residue_generator().expect("tame") as i64),
        Mode::Dyadic => int(5),
    }
}

/// Representatives of several classes of `F^× / (F^×)^n`.
pub fn alpha_corpus(ctx: &PadicContext) -> Vec<Rational> {
    let p = ctx.prime();
    let g = unit_non_power(ctx);
    vec![
        Rational::one(),
        p.clone(),
        g.clone(),
        &p * &g,
        -Rational::one(),
    ]
}

pub fn rational_corpus(ctx: &PadicContext) -> Vec<Rational> {
    let p = ctx.p() as i64;
    let g = unit_non_power(ctx);
    vec![
        int(1),
        int(-1),
        int(p),
        g.clone(),
        &g * ctx.prime(),
        frac(1, p),
        int(-p),
        frac(2, p * p),
        int(p * p * p),
    ]
}

/// Trial `i`'s matrix: the corpus first, then seeded random draws.
pub fn sample_gl2(cfg: &SampleConfig, ctx: &PadicContext, i: u64) -> GL2 {
    let corpus = corpus(ctx);
    if (i as usize) < corpus.len() {
        return corpus[i as usize].clone();
    }
    random_gl2(&mut rng_for(cfg, ctx, i), ctx, cfg.height)
}

/// Draws the operands of one trial.
///
/// The first matrix is `sample_gl2(i)`. While `i` is inside the corpus,
/// later matrices are other corpus entries so that corpus pairs get
/// exercised; afterwards every draw comes from the trial's own stream.
pub struct TrialDraw<'a> {
    cfg: &'a SampleConfig,
    ctx: &'a PadicContext,
    index: u64,
    drawn: u64,
    corpus: Vec<GL2>,
    rng: ChaCha8Rng,
}

impl<'a> TrialDraw<'a> {
    pub fn new(cfg: &'a SampleConfig, ctx: &'a PadicContext, index: u64) -> Self {
        // stream 2^63 + i keeps the per-trial draws apart from `sample_gl2`
        let rng = rng_for(cfg, ctx, (1 << 63) | index);
        Self {
            cfg,
            ctx,
            index,
            drawn: 0,
            corpus: corpus(ctx),
            rng,
        }
    }

    pub fn in_corpus(&self) -> bool {
        (self.index as usize) < self.corpus.len()
    }

    pub fn gl2(&mut self) -> GL2 {
        let k = self.drawn;
        self.drawn += 1;
        if k == 0 {
            return sample_gl2(self.cfg, self.ctx, self.index);
        }
        if self.in_corpus() {
            let len = self.corpus.len() as u64;
            return self.corpus[((self.index * 7 + 3 * k) % len) as usize].clone();
        }
        random_gl2(&mut self.rng, self.ctx, self.cfg.height)
    }

    pub fn mu(&mut self) -> Mu {
        random_mu(&mut self.rng, self.ctx)
    }

    pub fn meta(&mut self) -> MetaElement {
        let g = self.gl2();
        MetaElement::new(g, self.mu())
    }

    pub fn nonzero(&mut self) -> Rational {
        random_nonzero(&mut self.rng, self.ctx, self.cfg.height)
    }

    /// A nonzero rational; corpus values first when the trial is early.
    pub fn rational(&mut self) -> Rational {
        let k = self.drawn;
        self.drawn += 1;
        let corpus = rational_corpus(self.ctx);
        let len = corpus.len() as u64;
        if self.index < len * len {
            let idx = if k == 0 {
                self.index % len
            } else {
                (self.index / len + k) % len
            };
            return corpus[idx as usize].clone();
        }
        self.nonzero()
    }

    /// Alternates the class-covering corpus with random draws.
    pub fn alpha(&mut self) -> Rational {
        let corpus = alpha_corpus(self.ctx);
        if self.index.is_multiple_of(2) {
            corpus[((self.index / 2) % corpus.len() as u64) as usize].clone()
        } else {
            self.nonzero()
        }
    }

    /// An element of `K_λ = 1 + p^λ M(2, o)`.
    pub fn congruence(&mut self, depth: u32) -> GL2 {
        let pl = num_traits::pow(self.ctx.prime(), depth as usize);
        let mut integral = || {
            if self.rng.random_ratio(1, 4) {
                return Rational::zero();
            }
            let a = self
                .rng
                .random_range(-(self.cfg.height as i64)..=self.cfg.height as i64);
            let e = self.rng.random_range(0..=2);
            let mut b = self.rng.random_range(1..=self.cfg.height as i64);
            while b % self.ctx.p() as i64 == 0 {
                b -= 1;
            }
            scaled(a, self.ctx.p(), e) / int(b)
        };
        let (a, b, c, d) = (integral(), integral(), integral(), integral());
        GL2::new(
            Rational::one() + &pl * a,
            &pl * b,
            &pl * c,
            Rational::one() + &pl * d,
        )
        .expect("elements of K_λ are invertible")
    }

    /// An element `[[a, b], [0, a]]` of the centralizer of `[[1,1],[0,1]]`.
    pub fn centralizer(&mut self) -> GL2 {
        let a = self.nonzero();
        let b = random_entry(&mut self.rng, self.ctx, self.cfg.height);
        GL2::new(a.clone(), b, Rational::zero(), a).expect("a ≠ 0")
    }
}
