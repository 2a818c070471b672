//! Exact arithmetic in `R = Z[A^{±1}, B]` and vectors over the partition
//! basis of `V_n`.
//!
//! Text form of a coefficient: terms ordered by `B`-exponent, then
//! `A`-exponent, e.g. `A + B^2`, `-A^-1*B`, `3*A^2*B - 1`. The zero
//! polynomial prints as `0`.
//!
//! Text form of a vector: entries in reverse-lexicographic partition order
//! joined by ` ; `, e.g. `(2): A + B^2 ; (1,1): A*B`.
//!
//! JSON: a coefficient is an object whose keys are `"a,b"` exponent pairs
//! and whose values are decimal coefficient strings, e.g.
//! `{"1,0":"1","0,2":"1"}`. A vector is
//! `{"n":2,"entries":[{"partition":[2],"coefficient":{...}}]}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("B exponent {0} is negative")]
    NegativeBExponent(i64),
    #[error("cannot parse coefficient {0:?}")]
    Malformed(String),
    #[error("vectors live in V_{left} and V_{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Key of one monomial `A^a B^b`, ordered by `b` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: i64,
    pub b: u32,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b, self.a).cmp(&(other.b, other.a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The units the resolution multiplies by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Unit {
    A,
    AInv,
    B,
    /// `-A^{-1} B`
    NegAInvB,
}

impl Unit {
    pub fn as_poly(self) -> LaurentAB {
        match self {
            Unit::A => LaurentAB::term(1, 1, 0),
            Unit::AInv => LaurentAB::term(1, -1, 0),
            Unit::B => LaurentAB::term(1, 0, 1),
            Unit::NegAInvB => LaurentAB::term(-1, -1, 1),
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::A => "A",
            Unit::AInv => "A^-1",
            Unit::B => "B",
            Unit::NegAInvB => "-A^-1*B",
        })
    }
}

/// Sparse Laurent polynomial in `A`, polynomial in `B`, integer coefficients.
/// No zero coefficient is ever stored, so structural and ring equality agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentAB {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentAB {
    pub fn zero() -> LaurentAB {
        LaurentAB::default()
    }

    pub fn one() -> LaurentAB {
        LaurentAB::term(1, 0, 0)
    }

    /// `c · A^a · B^b`.
    pub fn term(c: i64, a: i64, b: u32) -> LaurentAB {
        let mut p = LaurentAB::zero();
        p.add_term(Monomial { a, b }, BigInt::from(c));
        p
    }

    /// Like [`LaurentAB::term`] but accepts a signed `B`-exponent and rejects
    /// negative ones.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Result<LaurentAB, RingError> {
        let b = u32::try_from(b).map_err(|_| RingError::NegativeBExponent(b))?;
        let mut p = LaurentAB::zero();
        p.add_term(Monomial { a, b }, c.into());
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, a: i64, b: u32) -> BigInt {
        self.terms.get(&Monomial { a, b }).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_unit(&self, u: Unit) -> LaurentAB {
        let (da, db, negate) = match u {
            Unit::A => (1, 0, false),
            Unit::AInv => (-1, 0, false),
            Unit::B => (0, 1, false),
            Unit::NegAInvB => (-1, 1, true),
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (Monomial { a: m.a + da, b: m.b + db }, if negate { -c } else { c.clone() })
            })
            .collect();
        LaurentAB { terms }
    }
}

impl Add for &LaurentAB {
    type Output = LaurentAB;
    fn add(self, rhs: &LaurentAB) -> LaurentAB {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for LaurentAB {
    type Output = LaurentAB;
    fn add(self, rhs: LaurentAB) -> LaurentAB {
        &self + &rhs
    }
}

impl Neg for &LaurentAB {
    type Output = LaurentAB;
    fn neg(self) -> LaurentAB {
        LaurentAB { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentAB {
    type Output = LaurentAB;
    fn neg(self) -> LaurentAB {
        -&self
    }
}

impl Sub for &LaurentAB {
    type Output = LaurentAB;
    fn sub(self, rhs: &LaurentAB) -> LaurentAB {
        self + &(-rhs)
    }
}

impl Sub for LaurentAB {
    type Output = LaurentAB;
    fn sub(self, rhs: LaurentAB) -> LaurentAB {
        &self - &rhs
    }
}

impl Mul for &LaurentAB {
    type Output = LaurentAB;
    fn mul(self, rhs: &LaurentAB) -> LaurentAB {
        let mut out = LaurentAB::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(Monomial { a: m1.a + m2.a, b: m1.b + m2.b }, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentAB {
    type Output = LaurentAB;
    fn mul(self, rhs: LaurentAB) -> LaurentAB {
        &self * &rhs
    }
}

fn fmt_monomial(m: Monomial) -> String {
    let mut factors = Vec::new();
    match m.a {
        0 => {}
        1 => factors.push("A".to_string()),
        a => factors.push(format!("A^{a}")),
    }
    match m.b {
        0 => {}
        1 => factors.push("B".to_string()),
        b => factors.push(format!("B^{b}")),
    }
    factors.join("*")
}

impl fmt::Display for LaurentAB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono = fmt_monomial(*m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Splits `x + y - z` into signed terms, keeping `^-` exponents intact.
pub(crate) fn split_signed_terms(s: &str) -> Vec<(bool, String)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut prev = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !current.is_empty() {
                out.push((negative, std::mem::take(&mut current)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if !current.is_empty() || out.is_empty() || matches!(prev, Some('+' | '-')) {
        out.push((negative, current));
    }
    out
}

impl FromStr for LaurentAB {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::Malformed(s.to_string());
        let mut out = LaurentAB::zero();
        for (negative, term) in split_signed_terms(s) {
            if term.is_empty() {
                return Err(bad());
            }
            let mut c = BigInt::one();
            let (mut a, mut b) = (0i64, 0i64);
            for factor in term.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((base, e)) => (base, e.parse::<i64>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                match base {
                    "A" => a += exp,
                    "B" => b += exp,
                    digits if factor == digits => c *= digits.parse::<BigInt>().map_err(|_| bad())?,
                    _ => return Err(bad()),
                }
            }
            if negative {
                c = -c;
            }
            out = &out + &LaurentAB::monomial(c, a, b)?;
        }
        Ok(out)
    }
}

impl Serialize for LaurentAB {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&format!("{},{}", m.a, m.b), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentAB {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut out = LaurentAB::zero();
        for (key, value) in raw {
            let (a, b) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
                .ok_or_else(|| de::Error::custom(format!("bad exponent key {key:?}")))?;
            let c: BigInt = value
                .parse()
                .map_err(|_| de::Error::custom(format!("bad coefficient {value:?}")))?;
            out = &out + &LaurentAB::monomial(c, a, b).map_err(de::Error::custom)?;
        }
        Ok(out)
    }
}

/// An element of `V_n` in the basis `{v̂_λ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkeinVector {
    n: usize,
    entries: BTreeMap<Partition, LaurentAB>,
}

impl SkeinVector {
    pub fn zero(n: usize) -> SkeinVector {
        SkeinVector { n, entries: BTreeMap::new() }
    }

    /// The basis vector `v̂_λ`.
    pub fn singleton(lambda: Partition, n: usize) -> Result<SkeinVector, RingError> {
        SkeinVector::zero(n).with_entry(lambda, LaurentAB::one())
    }

    fn with_entry(mut self, lambda: Partition, c: LaurentAB) -> Result<SkeinVector, RingError> {
        self.add_entry(lambda, c)?;
        Ok(self)
    }

    /// Adds `c · v̂_λ` in place.
    pub fn add_entry(&mut self, lambda: Partition, c: LaurentAB) -> Result<(), RingError> {
        if lambda.size() != self.n {
            return Err(PartitionError::WrongSum { partition: lambda, n: self.n }.into());
        }
        if c.is_zero() {
            return Ok(());
        }
        let updated = match self.entries.remove(&lambda) {
            Some(old) => &old + &c,
            None => c,
        };
        if !updated.is_zero() {
            self.entries.insert(lambda, updated);
        }
        Ok(())
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&LaurentAB> {
        self.entries.get(lambda)
    }

    /// Entries in canonical partition order.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &LaurentAB)> + '_ {
        self.entries.iter()
    }

    pub fn checked_add(&self, other: &SkeinVector) -> Result<SkeinVector, RingError> {
        if self.n != other.n {
            return Err(RingError::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (lambda, c) in &other.entries {
            out.add_entry(lambda.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentAB) -> SkeinVector {
        let entries = self
            .entries
            .iter()
            .map(|(l, v)| (l.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SkeinVector { n: self.n, entries }
    }

    /// Parses the text form; `n` is needed because `0` carries no partition.
    pub fn parse_text(s: &str, n: usize) -> Result<SkeinVector, RingError> {
        let mut out = SkeinVector::zero(n);
        if s.trim() == "0" {
            return Ok(out);
        }
        for entry in s.split(';') {
            let (lambda, coeff) = entry
                .split_once(':')
                .ok_or_else(|| RingError::Malformed(entry.to_string()))?;
            out.add_entry(lambda.parse()?, coeff.parse()?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{lambda}: {c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    partition: Vec<usize>,
    coefficient: LaurentAB,
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    n: usize,
    entries: Vec<EntryRepr>,
}

impl Serialize for SkeinVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VectorRepr {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(l, c)| EntryRepr { partition: l.parts().to_vec(), coefficient: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkeinVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = VectorRepr::deserialize(deserializer)?;
        let mut out = SkeinVector::zero(raw.n);
        for e in raw.entries {
            let lambda = Partition::from_parts(e.partition).map_err(de::Error::custom)?;
            out.add_entry(lambda, e.coefficient).map_err(de::Error::custom)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentAB {
        s.parse().unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn unit_arithmetic() {
        assert_eq!(p("A") * p("A^-1"), LaurentAB::one());
        assert_eq!(p("B^2 + A") + p("-A"), p("B^2"));
        assert_eq!(p("-A^-1*B") * p("A"), p("-B"));
        assert_eq!(p("A").mul_unit(Unit::NegAInvB), p("-B"));
        for u in [Unit::A, Unit::AInv, Unit::B, Unit::NegAInvB] {
            assert_eq!(p("2*A + B").mul_unit(u), p("2*A + B") * u.as_poly());
        }
    }

    #[test]
    fn negative_b_exponent_is_rejected() {
        assert_eq!(LaurentAB::monomial(1, 0, -1), Err(RingError::NegativeBExponent(-1)));
        assert_eq!("B^-2".parse::<LaurentAB>(), Err(RingError::NegativeBExponent(-2)));
    }

    #[test]
    fn text_form() {
        assert_eq!(p("B^2 + A").to_string(), "A + B^2");
        assert_eq!(p("-A^-1*B").to_string(), "-A^-1*B");
        assert_eq!(p("3*A^2*B - 1 + 2").to_string(), "1 + 3*A^2*B");
        assert_eq!(p("A - A").to_string(), "0");
        assert_eq!(p("0"), LaurentAB::zero());
        assert_eq!(p("-2*B - A^-3").to_string(), "-A^-3 - 2*B");
        assert!("A +".parse::<LaurentAB>().is_err());
        assert!("C".parse::<LaurentAB>().is_err());
    }

    #[test]
    fn json_form() {
        let x = p("A + B^2");
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"1,0":"1","0,2":"1"}"#);
        assert_eq!(serde_json::from_str::<LaurentAB>(&js).unwrap(), x);
        assert!(serde_json::from_str::<LaurentAB>(r#"{"0,-1":"1"}"#).is_err());
    }

    #[test]
    fn vector_examples() {
        let two = SkeinVector::singleton(part(&[2]), 2).unwrap();
        assert!(two.checked_add(&two.scale(&p("-1"))).unwrap().is_zero());

        let s = SkeinVector::singleton(part(&[1, 1]), 2).unwrap().scale(&p("A*B"));
        assert_eq!(s.to_string(), "(1,1): A*B");

        let left = SkeinVector::singleton(part(&[2]), 2).unwrap().scale(&p("A"));
        let mut right = SkeinVector::zero(2);
        right.add_entry(part(&[2]), p("B^2")).unwrap();
        right.add_entry(part(&[1, 1]), p("A*B")).unwrap();
        assert_eq!(left.checked_add(&right).unwrap().to_string(), "(2): A + B^2 ; (1,1): A*B");
    }

    #[test]
    fn vector_errors() {
        let a = SkeinVector::singleton(part(&[2]), 2).unwrap();
        let b = SkeinVector::singleton(part(&[3]), 3).unwrap();
        assert_eq!(a.checked_add(&b), Err(RingError::DimensionMismatch { left: 2, right: 3 }));
        assert!(SkeinVector::singleton(part(&[2, 1]), 2).is_err());
    }

    #[test]
    fn vector_text_and_json_agree() {
        let text = "(2): A + B^2 ; (1,1): A*B";
        let v = SkeinVector::parse_text(text, 2).unwrap();
        assert_eq!(v.to_string(), text);
        let js = serde_json::to_string(&v).unwrap();
        assert_eq!(
            js,
            r#"{"n":2,"entries":[{"partition":[2],"coefficient":{"1,0":"1","0,2":"1"}},{"partition":[1,1],"coefficient":{"1,1":"1"}}]}"#
        );
        assert_eq!(serde_json::from_str::<SkeinVector>(&js).unwrap(), v);
        assert_eq!(SkeinVector::parse_text("0", 3).unwrap(), SkeinVector::zero(3));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentAB> {
        prop::collection::vec((-3i64..=3, -3i64..=3, 0u32..=3), 0..5).prop_map(|ts| {
            ts.into_iter().fold(LaurentAB::zero(), |acc, (c, a, b)| &acc + &LaurentAB::term(c, a, b))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn text_round_trip(x in arb_poly()) {
            prop_assert_eq!(x.to_string().parse::<LaurentAB>().unwrap(), x);
        }
    }
}
