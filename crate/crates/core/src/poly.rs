//! Integer polynomials in two variables.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in `x` and `y` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, BigInt::one());
        p
    }

    /// Builds a polynomial from `(x_exp, y_exp, coeff)` triples; repeated
    /// monomials are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (x, y, c) in terms {
            p.add_term(x, y, c.into());
        }
        p
    }

    /// Univariate polynomial in `x` from coefficients listed by ascending power.
    pub fn univariate<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, 0, c)))
    }

    pub fn add_term(&mut self, x_exp: u32, y_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((x_exp, y_exp)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, y_exp));
        }
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> BigInt {
        self.terms.get(&(x_exp, y_exp)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending `(x_exp, y_exp)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(x, y), c)| (x, y, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|&(_, y)| y == 0)
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(x, _)| x).max()
    }

    /// Coefficients of `x^0, x^1, ..., x^degree` after setting `y = 1`.
    pub fn x_coefficients(&self) -> Vec<BigInt> {
        let Some(deg) = self.x_degree() else {
            return Vec::new();
        };
        let mut out = vec![BigInt::zero(); deg as usize + 1];
        for (&(x, _), c) in &self.terms {
            out[x as usize] += c;
        }
        out
    }

    /// Substitutes `x -> ±x` and `y -> ±1`, optionally negating the whole
    /// polynomial. The result is univariate in `x`.
    pub(crate) fn specialize_signed(&self, negate_x: bool, negate_y: bool, negate_all: bool) -> Self {
        let mut out = Self::zero();
        for (&(x, y), c) in &self.terms {
            let flips = (negate_x && x % 2 == 1) as u32
                + (negate_y && y % 2 == 1) as u32
                + negate_all as u32;
            let c = if flips % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(x, 0, c);
        }
        out
    }

    /// Monomials in display order: total degree descending, then `x` power
    /// descending.
    fn display_order(&self) -> Vec<(u32, u32, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&(x, y, _)| (Reverse(x + y), Reverse(x)));
        v
    }
}

fn write_monomial(out: &mut String, var: char, exp: u32) {
    match exp {
        0 => {}
        1 => out.push(var),
        e => {
            out.push(var);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl fmt::Display for BiPolynomial {
    /// Renders e.g. `x^2 + 3xy + y^2 - 3x - 3y + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (x, y, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if x == 0 && y == 0 {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            write_monomial(&mut out, 'x', x);
            write_monomial(&mut out, 'y', y);
        }
        f.write_str(&out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    x: u32,
    y: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    terms: Vec<TermDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pretty: Option<String>,
}

impl Serialize for BiPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let doc = PolyDoc {
            terms: self
                .display_order()
                .into_iter()
                .map(|(x, y, c)| TermDoc { x, y, coeff: c.to_string() })
                .collect(),
            pretty: Some(self.to_string()),
        };
        doc.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = PolyDoc::deserialize(deserializer)?;
        let mut p = Self::zero();
        for t in doc.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.x, t.y, c);
        }
        Ok(p)
    }
}
