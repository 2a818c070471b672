//! From resolution output to the HOMFLY polynomial, and the braid index
//! bound it gives.
//!
//! Convention: `l P_+ + l^{-1} P_- + m P_0 = 0`, unknot `= 1`. Matching
//! `P_+ = -l^{-2} P_- - l^{-1} m P_0` against `b_+ = A b_- + B b_0` gives
//! `A = -l^{-2}` and `B = -l^{-1} m`. The closure of `v_λ` is an unlink of
//! `m(λ)` components, worth `δ^{m(λ)-1}` with `δ = -(l + l^{-1}) m^{-1}`.
//!
//! Text form: terms ordered by `m`-exponent then `l`-exponent, coefficient
//! written in front, factors separated by a space, e.g.
//! `-l^-4 - 2l^-2 + l^-2 m^2`. JSON: object keyed by `"l,m"` exponent pairs
//! with decimal coefficient strings.

mod jones;
mod oracle;

pub use jones::{jones, JonesPoly};
pub use oracle::homfly_oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::ring::{split_signed_terms, SkeinVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomflyError {
    #[error("the zero polynomial has no l-breadth")]
    Zero,
    #[error("braid index 3 certification needs a 3-strand word, got {0} strands")]
    NotThreeStrands(usize),
    #[error("cannot parse polynomial {0:?}")]
    Malformed(String),
    #[error("bridge weight {0} is not an invertible monomial")]
    NotAUnit(HomflyPoly),
    #[error("Jones specialization is not a real Laurent polynomial in t^(1/2)")]
    NotJones,
}

/// Sparse Laurent polynomial in `l` and `m` with integer coefficients.
/// Stored keyed by `(m, l)` so iteration follows the text ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomflyPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl HomflyPoly {
    pub fn zero() -> HomflyPoly {
        HomflyPoly::default()
    }

    pub fn one() -> HomflyPoly {
        HomflyPoly::term(1, 0, 0)
    }

    /// `c · l^l_exp · m^m_exp`
    pub fn term(c: i64, l_exp: i64, m_exp: i64) -> HomflyPoly {
        let mut p = HomflyPoly::zero();
        p.add_term(l_exp, m_exp, BigInt::from(c));
        p
    }

    fn add_term(&mut self, l: i64, m: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((m, l)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(m, l));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(l_exp, m_exp, coefficient)` in text order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(m, l), c)| (l, m, c))
    }

    pub fn coefficient(&self, l_exp: i64, m_exp: i64) -> BigInt {
        self.terms.get(&(m_exp, l_exp)).cloned().unwrap_or_default()
    }

    /// Smallest and largest `l`-exponent.
    pub fn l_range(&self) -> Option<(i64, i64)> {
        let ls = self.terms.keys().map(|&(_, l)| l);
        Some((ls.clone().min()?, ls.max()?))
    }

    pub fn min_m(&self) -> Option<i64> {
        self.terms.keys().map(|&(m, _)| m).min()
    }

    /// Inverse of `±l^a m^b`; `None` for anything else.
    pub fn inverse_unit(&self) -> Option<HomflyPoly> {
        let mut it = self.terms.iter();
        let (&(m, l), c) = it.next()?;
        if it.next().is_some() || !c.abs().is_one() {
            return None;
        }
        let mut p = HomflyPoly::zero();
        p.add_term(-l, -m, c.clone());
        Some(p)
    }

    /// Integer power; negative exponents need a unit.
    pub fn pow(&self, e: i64) -> Option<HomflyPoly> {
        let base = if e < 0 { self.inverse_unit()? } else { self.clone() };
        Some((0..e.unsigned_abs()).fold(HomflyPoly::one(), |acc, _| &acc * &base))
    }
}

impl Add for &HomflyPoly {
    type Output = HomflyPoly;
    fn add(self, rhs: &HomflyPoly) -> HomflyPoly {
        let mut out = self.clone();
        for (&(m, l), c) in &rhs.terms {
            out.add_term(l, m, c.clone());
        }
        out
    }
}

impl Add for HomflyPoly {
    type Output = HomflyPoly;
    fn add(self, rhs: HomflyPoly) -> HomflyPoly {
        &self + &rhs
    }
}

impl Neg for &HomflyPoly {
    type Output = HomflyPoly;
    fn neg(self) -> HomflyPoly {
        HomflyPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &HomflyPoly {
    type Output = HomflyPoly;
    fn mul(self, rhs: &HomflyPoly) -> HomflyPoly {
        let mut out = HomflyPoly::zero();
        for (&(m1, l1), c1) in &self.terms {
            for (&(m2, l2), c2) in &rhs.terms {
                out.add_term(l1 + l2, m1 + m2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for HomflyPoly {
    type Output = HomflyPoly;
    fn mul(self, rhs: HomflyPoly) -> HomflyPoly {
        &self * &rhs
    }
}

fn fmt_var(name: char, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    }
}

impl fmt::Display for HomflyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(m, l), c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = [fmt_var('l', l), fmt_var('m', m)].into_iter().flatten().collect();
            let abs = c.abs();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                f.write_str(&vars.join(" "))?;
            }
        }
        Ok(())
    }
}

impl FromStr for HomflyPoly {
    type Err = HomflyError;

    /// Accepts the text form, with or without spaces between factors.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HomflyError::Malformed(s.to_string());
        let mut out = HomflyPoly::zero();
        for (negative, term) in split_signed_terms(s) {
            let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
            let mut c: BigInt = if digits.is_empty() { BigInt::one() } else { digits.parse().map_err(|_| bad())? };
            let mut rest = &term[digits.len()..];
            if term.is_empty() {
                return Err(bad());
            }
            let (mut l, mut m) = (0i64, 0i64);
            while let Some(var) = rest.chars().next() {
                rest = &rest[1..];
                let exp = if let Some(after) = rest.strip_prefix('^') {
                    let len = after
                        .char_indices()
                        .take_while(|&(i, ch)| ch.is_ascii_digit() || (i == 0 && ch == '-'))
                        .count();
                    rest = &after[len..];
                    after[..len].parse::<i64>().map_err(|_| bad())?
                } else {
                    1
                };
                match var {
                    'l' => l += exp,
                    'm' => m += exp,
                    _ => return Err(bad()),
                }
            }
            if negative {
                c = -c;
            }
            out.add_term(l, m, c);
        }
        Ok(out)
    }
}

impl Serialize for HomflyPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (l, m, c) in self.terms() {
            map.serialize_entry(&format!("{l},{m}"), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for HomflyPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut out = HomflyPoly::zero();
        for (key, value) in raw {
            let (l, m) = key
                .split_once(',')
                .and_then(|(l, m)| Some((l.trim().parse().ok()?, m.trim().parse().ok()?)))
                .ok_or_else(|| de::Error::custom(format!("bad exponent key {key:?}")))?;
            let c: BigInt = value.parse().map_err(|_| de::Error::custom(format!("bad coefficient {value:?}")))?;
            out.add_term(l, m, c);
        }
        Ok(out)
    }
}

/// Images of `A`, `B` and the unlink factor `δ` under the bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeWeights {
    pub a: HomflyPoly,
    pub b: HomflyPoly,
    pub delta: HomflyPoly,
}

impl BridgeWeights {
    pub fn standard() -> BridgeWeights {
        BridgeWeights {
            a: HomflyPoly::term(-1, -2, 0),
            b: HomflyPoly::term(-1, -1, 1),
            delta: &HomflyPoly::term(-1, 1, -1) + &HomflyPoly::term(-1, -1, -1),
        }
    }
}

impl Default for BridgeWeights {
    fn default() -> Self {
        BridgeWeights::standard()
    }
}

/// HOMFLY polynomial of the closure represented by a resolution output.
pub fn to_homfly(v: &SkeinVector) -> HomflyPoly {
    to_homfly_with(v, &BridgeWeights::standard()).expect("standard weights are units")
}

pub fn to_homfly_with(v: &SkeinVector, weights: &BridgeWeights) -> Result<HomflyPoly, HomflyError> {
    let a_inv = weights.a.inverse_unit().ok_or_else(|| HomflyError::NotAUnit(weights.a.clone()))?;
    let mut out = HomflyPoly::zero();
    for (lambda, coeff) in v.entries() {
        let unlink = weights.delta.pow(lambda.len() as i64 - 1).expect("non-negative power");
        let mut c = HomflyPoly::zero();
        for (mono, k) in coeff.terms() {
            let a_part = if mono.a >= 0 { weights.a.pow(mono.a) } else { a_inv.pow(-mono.a) }.expect("non-negative power");
            let b_part = weights.b.pow(mono.b as i64).expect("non-negative power");
            let mut scalar = HomflyPoly::zero();
            scalar.add_term(0, 0, k.clone());
            c = &c + &(&(&scalar * &a_part) * &b_part);
        }
        out = &out + &(&c * &unlink);
    }
    Ok(out)
}

/// Morton–Franks–Williams: braid index `>= (l-breadth) / 2 + 1`.
pub fn mfw_lower_bound(h: &HomflyPoly) -> Result<usize, HomflyError> {
    let (lo, hi) = h.l_range().ok_or(HomflyError::Zero)?;
    let breadth = (hi - lo) as usize;
    Ok(breadth.div_ceil(2) + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    /// The MFW bound reaches 3, so the braid index is exactly 3.
    Certified,
    /// The bound stays below 3; nothing is claimed.
    Unknown,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::Certified => "certified",
            Certificate::Unknown => "unknown",
        })
    }
}

/// Certifies braid index 3 for the closure of a 3-braid. The diagram itself
/// bounds the index by 3 from above.
pub fn certify_braid_index_3(w: &BraidWord) -> Result<Certificate, HomflyError> {
    if w.strands() != 3 {
        return Err(HomflyError::NotThreeStrands(w.strands()));
    }
    let bound = mfw_lower_bound(&homfly_oracle(w))?;
    Ok(if bound == 3 { Certificate::Certified } else { Certificate::Unknown })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::resolve;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn h(s: &str) -> HomflyPoly {
        s.parse().unwrap()
    }

    #[test]
    fn text_form() {
        let t = h("-l^-4 - 2l^-2 + l^-2 m^2");
        assert_eq!(t.coefficient(-2, 0), BigInt::from(-2));
        assert_eq!(t.to_string(), "-l^-4 - 2l^-2 + l^-2 m^2");
        assert_eq!(h("1").to_string(), "1");
        assert_eq!(h("-l m^-1 - l^-1 m^-1").to_string(), "-l^-1 m^-1 - l m^-1");
        assert!("x^2".parse::<HomflyPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let t = h("-l^-4 - 2l^-2 + l^-2 m^2");
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"-4,0":"-1","-2,0":"-2","-2,2":"1"}"#);
        assert_eq!(serde_json::from_str::<HomflyPoly>(&js).unwrap(), t);
    }

    #[test]
    fn bridge_examples() {
        // (B^2 + A) + A B δ with A = -l^-2, B = -l^-1 m
        assert_eq!(to_homfly(&resolve(&w("2: 1 1 1"))), h("-l^-4 - 2l^-2 + l^-2 m^2"));
        assert_eq!(to_homfly(&resolve(&w("1:"))), HomflyPoly::one());
        assert_eq!(to_homfly(&resolve(&w("2: 1"))), HomflyPoly::one());
        assert_eq!(to_homfly(&resolve(&w("2:"))), BridgeWeights::standard().delta);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(homfly_oracle(&w("2: 1 1 1")), h("-l^-4 - 2l^-2 + l^-2 m^2"));
        assert_eq!(homfly_oracle(&w("1:")), HomflyPoly::one());
        assert_eq!(homfly_oracle(&w("2: 1 -1")), h("-l m^-1 - l^-1 m^-1"));
    }

    #[test]
    fn mfw_examples() {
        assert_eq!(mfw_lower_bound(&h("-l^-4 - 2l^-2 + l^-2 m^2")), Ok(2));
        assert_eq!(mfw_lower_bound(&HomflyPoly::one()), Ok(1));
        assert_eq!(mfw_lower_bound(&homfly_oracle(&w("3: 1 -2 1 -2"))), Ok(3));
        assert_eq!(mfw_lower_bound(&HomflyPoly::zero()), Err(HomflyError::Zero));
    }

    #[test]
    fn certification_examples() {
        assert_eq!(certify_braid_index_3(&w("3: 1 -2 1 -2")), Ok(Certificate::Certified));
        assert_eq!(certify_braid_index_3(&w("3: 1 2")), Ok(Certificate::Unknown));
        // trefoil ⊔ unknot: δ·P(trefoil) spans l^-5..l^-1, breadth 4
        assert_eq!(homfly_oracle(&w("3: 1 1 1")).l_range(), Some((-5, -1)));
        assert_eq!(certify_braid_index_3(&w("3: 1 1 1")), Ok(Certificate::Certified));
        assert_eq!(certify_braid_index_3(&w("2: 1")), Err(HomflyError::NotThreeStrands(2)));
    }

    #[test]
    fn figure_eight_value() {
        // self-consistency with the bridge; the figure-eight is amphichiral
        let fig8 = homfly_oracle(&w("3: 1 -2 1 -2"));
        assert_eq!(fig8, to_homfly(&resolve(&w("3: 1 -2 1 -2"))));
        assert_eq!(fig8, h("-l^-2 - 1 - l^2 + m^2"));
    }

    #[test]
    fn non_unit_weights_are_rejected() {
        let mut weights = BridgeWeights::standard();
        weights.a = h("l + 1");
        assert!(matches!(to_homfly_with(&resolve(&w("2: -1")), &weights), Err(HomflyError::NotAUnit(_))));
    }
}
