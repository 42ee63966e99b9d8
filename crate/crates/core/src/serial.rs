//! Text and JSON encodings.
//!
//! Rationals are `"num/den"` strings, matrices are row-major arrays of four
//! rationals, `μ_n` elements are their exponent, and cover elements are
//! `{"g": [...], "eps": e}`. On the command line a matrix is written
//! `a,b;c,d` and a cover element `a,b;c,d` or `a,b;c,d:e`.

use std::str::FromStr;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gl2::GL2;
use crate::group::MetaElement;
use crate::padic::{Mu, PadicContext, Rational};

pub fn rational_to_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = Rational::from_str(s).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
    Ok(r)
}

pub fn parse_gl2(s: &str) -> Result<GL2> {
    let rows: Vec<&str> = s.split(';').collect();
    let entries: Vec<&str> = rows.iter().flat_map(|r| r.split(',')).collect();
    if rows.len() != 2 || entries.len() != 4 {
        return Err(Error::Parse(format!("expected `a,b;c,d`, got `{s}`")));
    }
    let e = entries
        .iter()
        .map(|t| parse_rational(t))
        .collect::<Result<Vec<_>>>()?;
    let [a, b, c, d]: [Rational; 4] = e.try_into().expect("four entries");
    GL2::new(a, b, c, d)
}

pub fn parse_meta(s: &str, ctx: &PadicContext) -> Result<MetaElement> {
    let (m, e) = match s.split_once(':') {
        Some((m, e)) => {
            let e: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad μ_n exponent `{e}`")))?;
            (m, e)
        }
        None => (s, 0),
    };
    Ok(MetaElement::new(parse_gl2(m)?, Mu::new(e, ctx.n())))
}

/// Inverse of [`parse_meta`].
pub fn meta_to_cli(h: &MetaElement) -> String {
    let [a, b, c, d] = h.g().entries().map(rational_to_string);
    format!("{a},{b};{c},{d}:{}", h.eps().exp())
}

pub fn gl2_to_cli(g: &GL2) -> String {
    let [a, b, c, d] = g.entries().map(rational_to_string);
    format!("{a},{b};{c},{d}")
}

impl Serialize for Mu {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.exp())
    }
}

impl Serialize for GL2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().map(rational_to_string).serialize(s)
    }
}

impl Serialize for MetaElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MetaElement", 2)?;
        st.serialize_field("g", self.g())?;
        st.serialize_field("eps", &self.eps())?;
        st.end()
    }
}
