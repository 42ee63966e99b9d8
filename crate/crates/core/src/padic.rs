//! Exact p-adic bookkeeping over rational representatives.
//!
//! Elements of `Q_p` are represented by exact rationals. Everything the
//! symbol and the cocycle need (valuations and low-precision unit residues)
//! is read off the reduced fraction, so no precision model is required.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact representative of an element of `Q_p`.
pub type Rational = BigRational;

/// Which closed form of the Hilbert symbol applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// `p` odd and `n | p - 1`.
    Tame,
    /// `p = 2`, `n = 2`.
    Dyadic,
}

/// The pair `(p, n)`: base field `Q_p` and the degree of the cover.
#[derive(Clone, Debug)]
pub struct PadicContext {
    p: u64,
    n: u32,
    mode: Mode,
    residue_generator: Option<u64>,
    /// `zeta_powers[e] = zeta^e mod p` where `zeta = g^((p-1)/n)`.
    zeta_powers: Vec<u64>,
}

impl PartialEq for PadicContext {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n
    }
}

impl Eq for PadicContext {}

impl PadicContext {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidContext(format!("p = {p} is not prime")));
        }
        if n < 2 {
            return Err(Error::InvalidContext("n must be at least 2".into()));
        }
        if p == 2 {
            if n != 2 {
                return Err(Error::InvalidContext(
                    "only n = 2 is supported for p = 2".into(),
                ));
            }
            return Ok(Self {
                p,
                n,
                mode: Mode::Dyadic,
                residue_generator: None,
                zeta_powers: Vec::new(),
            });
        }
        if !(p - 1).is_multiple_of(n as u64) {
            return Err(Error::InvalidContext(format!(
                "n must divide p−1 (n = {n}, p = {p})"
            )));
        }
        let g = smallest_primitive_root(p);
        let zeta = pow_mod(g, (p - 1) / n as u64, p);
        let mut zeta_powers = Vec::with_capacity(n as usize);
        let mut acc = 1u64;
        for _ in 0..n {
            zeta_powers.push(acc);
            acc = mul_mod(acc, zeta, p);
        }
        Ok(Self {
            p,
            n,
            mode: Mode::Tame,
            residue_generator: Some(g),
            zeta_powers,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Smallest primitive root mod `p`; `None` in dyadic mode.
    pub fn residue_generator(&self) -> Option<u64> {
        self.residue_generator
    }

    /// Default splitting depth `λ₀` for the congruence filtration.
    pub fn default_splitting_depth(&self) -> u32 {
        match self.mode {
            Mode::Tame => 1,
            Mode::Dyadic => 3,
        }
    }

    pub fn prime(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.p))
    }

    pub(crate) fn zeta_powers(&self) -> &[u64] {
        &self.zeta_powers
    }

    /// `ord_p(a)`.
    pub fn valuation(&self, a: &Rational) -> Result<i64> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (vn, _) = strip_prime(a.numer(), self.p);
        let (vd, _) = strip_prime(a.denom(), self.p);
        Ok(vn as i64 - vd as i64)
    }

    /// Valuation together with the unit part `a·p^(−v)` reduced mod `modulus`,
    /// where `modulus` is a power of `p` fitting in a `u64`.
    pub(crate) fn split_unit(&self, a: &Rational, modulus: u64) -> Result<(i64, u64)> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (vn, num) = strip_prime(a.numer(), self.p);
        let (vd, den) = strip_prime(a.denom(), self.p);
        let m = BigInt::from(modulus);
        let num_r = num.mod_floor(&m).to_u64().expect("residue below modulus");
        let den_r = den.mod_floor(&m).to_u64().expect("residue below modulus");
        let den_inv = inv_mod(den_r, modulus).expect("unit denominators are invertible");
        Ok((vn as i64 - vd as i64, mul_mod(num_r, den_inv, modulus)))
    }

    /// Class of the unit part of `a` modulo `p^k`.
    pub fn unit_residue(&self, a: &Rational, k: u32) -> Result<BigInt> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if k == 0 {
            return Err(Error::PreconditionViolated("k must be at least 1".into()));
        }
        let (_, num) = strip_prime(a.numer(), self.p);
        let (_, den) = strip_prime(a.denom(), self.p);
        let m = num_traits::pow(BigInt::from(self.p), k as usize);
        let den_inv =
            inv_mod_big(&den.mod_floor(&m), &m).expect("unit denominators are invertible");
        Ok((num * den_inv).mod_floor(&m))
    }

    /// Whether `a` lies in `(Q_p^×)^n`.
    pub fn is_nth_power(&self, a: &Rational) -> Result<bool> {
        match self.mode {
            Mode::Tame => {
                let (v, u) = self.split_unit(a, self.p)?;
                Ok(v.rem_euclid(self.n as i64) == 0
                    && pow_mod(u, (self.p - 1) / self.n as u64, self.p) == 1)
            }
            Mode::Dyadic => {
                let (v, u) = self.split_unit(a, 8)?;
                Ok(v.rem_euclid(2) == 0 && u == 1)
            }
        }
    }
}

impl fmt::Display for PadicContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, n={})", self.p, self.n)
    }
}

/// An element of `μ_n`, stored as the exponent of a fixed generator `ζ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mu {
    exp: u32,
    n: u32,
}

impl Mu {
    pub fn new(exp: i64, n: u32) -> Self {
        assert!(n >= 1, "μ_n needs n ≥ 1");
        Self {
            exp: exp.rem_euclid(n as i64) as u32,
            n,
        }
    }

    pub fn one(n: u32) -> Self {
        Self::new(0, n)
    }

    /// The generator `ζ`.
    pub fn zeta(n: u32) -> Self {
        Self::new(1, n)
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn order_n(self) -> u32 {
        self.n
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    pub fn inv(self) -> Self {
        Self::new(-(self.exp as i64), self.n)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::new((self.exp as i64) * k.rem_euclid(self.n as i64), self.n)
    }
}

impl Mul for Mu {
    type Output = Mu;

    fn mul(self, rhs: Mu) -> Mu {
        debug_assert_eq!(self.n, rhs.n, "mixing μ_n for different n");
        Mu::new(self.exp as i64 + rhs.exp as i64, self.n)
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ^{}", self.exp)
    }
}

/// Removes every factor `p` from `x`; returns the count and the cofactor.
fn strip_prime(x: &BigInt, p: u64) -> (u64, BigInt) {
    let pb = BigInt::from(p);
    let mut count = 0;
    let mut rest = x.clone();
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() || rest.is_zero() {
            break;
        }
        rest = q;
        count += 1;
    }
    (count, rest)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// `a · p^k` as a rational, for small signed `k`.
pub fn scaled(a: i64, p: u64, k: i32) -> Rational {
    let pk = num_traits::pow(BigInt::from(p), k.unsigned_abs() as usize);
    let a = BigInt::from(a);
    if k >= 0 {
        Rational::from_integer(a * pk)
    } else {
        Rational::new(a, pk)
    }
}

pub fn int(a: i64) -> Rational {
    Rational::from_integer(BigInt::from(a))
}

pub fn frac(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}
