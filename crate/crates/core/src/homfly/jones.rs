//! Jones polynomial as the specialization `l = i t^{-1}`,
//! `m = i (t^{-1/2} - t^{1/2})` of the HOMFLY polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::{HomflyError, HomflyPoly};

/// Laurent polynomial in `s = t^{1/2}` over the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct GaussLaurent(BTreeMap<i64, (BigInt, BigInt)>);

impl GaussLaurent {
    fn monomial(re: i64, im: i64, e: i64) -> GaussLaurent {
        let mut p = GaussLaurent::default();
        p.add(e, (BigInt::from(re), BigInt::from(im)));
        p
    }

    fn add(&mut self, e: i64, (re, im): (BigInt, BigInt)) {
        let slot = self.0.entry(e).or_default();
        slot.0 += re;
        slot.1 += im;
        if slot.0.is_zero() && slot.1.is_zero() {
            self.0.remove(&e);
        }
    }

    fn plus(&self, other: &GaussLaurent) -> GaussLaurent {
        let mut out = self.clone();
        for (&e, c) in &other.0 {
            out.add(e, c.clone());
        }
        out
    }

    fn times(&self, other: &GaussLaurent) -> GaussLaurent {
        let mut out = GaussLaurent::default();
        for (&e1, (a, b)) in &self.0 {
            for (&e2, (c, d)) in &other.0 {
                out.add(e1 + e2, (a * c - b * d, a * d + b * c));
            }
        }
        out
    }

    fn pow(&self, k: u64) -> GaussLaurent {
        (0..k).fold(GaussLaurent::monomial(1, 0, 0), |acc, _| acc.times(self))
    }

    /// Exact quotient by `1 - s^2`.
    fn div_one_minus_s2(&self) -> Option<GaussLaurent> {
        let (&lo, _) = self.0.iter().next()?;
        let (&hi, _) = self.0.iter().next_back()?;
        // q_e = p_e + q_{e-2}, for e in lo..=hi-2
        let mut q = GaussLaurent::default();
        for e in lo..=hi - 2 {
            let p = self.0.get(&e).cloned().unwrap_or_default();
            let prev = q.0.get(&(e - 2)).cloned().unwrap_or_default();
            q.add(e, (p.0 + prev.0, p.1 + prev.1));
        }
        let back = q.times(&GaussLaurent::monomial(1, 0, 0).plus(&GaussLaurent::monomial(-1, 0, 2)));
        (back == *self).then_some(q)
    }
}

/// Laurent polynomial in `t^{1/2}`; keys are exponents of `t` doubled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct JonesPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl JonesPoly {
    /// Coefficient of `t^(half_exp / 2)`.
    pub fn coefficient(&self, half_exp: i64) -> BigInt {
        self.terms.get(&half_exp).cloned().unwrap_or_default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> JonesPoly {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            *out.entry(e).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        JonesPoly { terms: out }
    }
}

fn fmt_t(half: i64) -> Option<String> {
    match half {
        0 => None,
        2 => Some("t".into()),
        h if h % 2 == 0 => Some(format!("t^{}", h / 2)),
        h => Some(format!("t^({h}/2)")),
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            match fmt_t(e) {
                None => write!(f, "{abs}")?,
                Some(t) if abs.is_one() => f.write_str(&t)?,
                Some(t) => write!(f, "{abs}{t}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for JonesPoly {
    /// Keys are `t`-exponents, written as `"k"` or `"k/2"`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (&e, c) in &self.terms {
            let key = if e % 2 == 0 { (e / 2).to_string() } else { format!("{e}/2") };
            map.serialize_entry(&key, &c.to_string())?;
        }
        map.end()
    }
}

/// Specializes a HOMFLY polynomial to the Jones polynomial.
pub fn jones(h: &HomflyPoly) -> Result<JonesPoly, HomflyError> {
    // m = i (s^-1 - s); clear negative m-powers by multiplying through by m^shift
    let shift = h.min_m().map_or(0, |m| (-m).max(0));
    let s_inv_minus_s = GaussLaurent::monomial(1, 0, -1).plus(&GaussLaurent::monomial(-1, 0, 1));
    let m_image = GaussLaurent::monomial(0, 1, 0).times(&s_inv_minus_s);
    let mut total = GaussLaurent::default();
    for (l, m, c) in h.terms() {
        // l^l = i^l s^{-2l}
        let i_pow = [(1, 0), (0, 1), (-1, 0), (0, -1)][l.rem_euclid(4) as usize];
        let l_image = GaussLaurent::monomial(i_pow.0, i_pow.1, -2 * l);
        let term = l_image.times(&m_image.pow((m + shift) as u64));
        for (e, (re, im)) in term.0 {
            total.add(e, (re * c, im * c));
        }
    }
    // divide by i^shift (s^-1 - s)^shift, where s^-1 - s = s^-1 (1 - s^2)
    let i_inv = [(1, 0), (0, -1), (-1, 0), (0, 1)][(shift % 4) as usize];
    total = total.times(&GaussLaurent::monomial(i_inv.0, i_inv.1, shift));
    for _ in 0..shift {
        total = total.div_one_minus_s2().ok_or(HomflyError::NotJones)?;
    }
    let mut terms = BTreeMap::new();
    for (e, (re, im)) in total.0 {
        if !im.is_zero() {
            return Err(HomflyError::NotJones);
        }
        terms.insert(e, re);
    }
    Ok(JonesPoly { terms })
}
