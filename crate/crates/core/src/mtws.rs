//! Word-level forms of the exchange and flype templates, and a search for
//! exchange pairs on which the resolution output is not invariant.
//!
//! Flype: `σ1^a σ2^b σ1^c σ2^ε  ↔  σ1^a σ2^ε σ1^c σ2^b`.
//! Exchange on `n` strands: `u σ_{n-1} v σ_{n-1}^{-1}  ↔  u σ_{n-1}^{-1} v σ_{n-1}`
//! with `u`, `v` words in `σ_1, …, σ_{n-2}`.
//!
//! Both sides of either template close to the same link; every pair the
//! search reports is rechecked with the HOMFLY oracle.

use serde::Serialize;
use thiserror::Error;

use crate::braid::{BraidWord, ParseError, Sign};
use crate::homfly::homfly_oracle;
use crate::resolve::resolve;
use crate::ring::SkeinVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MtwsError {
    #[error("exchange blocks must use generators 1..={max}, found {found}")]
    GeneratorOutOfRange { found: usize, max: usize },
    #[error("exchange needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Weighted strand multiplicities of a template's blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TemplateWeights {
    pub w: u32,
    pub k: u32,
    pub w2: u32,
    pub k2: u32,
}

impl TemplateWeights {
    /// `w' - k = k' - w >= 0`
    pub fn admissible(&self) -> bool {
        let lhs = i64::from(self.w2) - i64::from(self.k);
        let rhs = i64::from(self.k2) - i64::from(self.w);
        lhs == rhs && lhs >= 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlypeInstance {
    pub a: i32,
    pub b: i32,
    pub c: i32,
    pub epsilon: Sign,
}

impl FlypeInstance {
    /// On three strands every block carries a single strand.
    pub fn weights(&self) -> TemplateWeights {
        TemplateWeights { w: 1, k: 1, w2: 1, k2: 1 }
    }
}

fn power(generator: i32, e: i32) -> impl Iterator<Item = i32> {
    std::iter::repeat_n(generator * e.signum(), e.unsigned_abs() as usize)
}

pub fn flype_pair(f: &FlypeInstance) -> (BraidWord, BraidWord) {
    let eps = f.epsilon.as_i32() * 2;
    let left: Vec<i32> = power(1, f.a).chain(power(2, f.b)).chain(power(1, f.c)).chain([eps]).collect();
    let right: Vec<i32> = power(1, f.a).chain([eps]).chain(power(1, f.c)).chain(power(2, f.b)).collect();
    (
        BraidWord::from_signed(3, &left).expect("3-strand letters"),
        BraidWord::from_signed(3, &right).expect("3-strand letters"),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeInstance {
    pub u: Vec<i32>,
    pub v: Vec<i32>,
}

impl ExchangeInstance {
    pub fn new(u: &BraidWord, v: &BraidWord) -> ExchangeInstance {
        ExchangeInstance { u: u.signed(), v: v.signed() }
    }
}

pub fn exchange_pair(e: &ExchangeInstance, n: usize) -> Result<(BraidWord, BraidWord), MtwsError> {
    if n < 2 {
        return Err(MtwsError::TooFewStrands(n));
    }
    let max = n - 2;
    if let Some(&x) = e.u.iter().chain(&e.v).find(|x| x.unsigned_abs() as usize > max || **x == 0) {
        return Err(MtwsError::GeneratorOutOfRange { found: x.unsigned_abs() as usize, max });
    }
    let top = (n - 1) as i32;
    let side = |first: i32| -> Result<BraidWord, ParseError> {
        let letters: Vec<i32> = e.u.iter().copied().chain([first]).chain(e.v.iter().copied()).chain([-first]).collect();
        BraidWord::from_signed(n, &letters)
    };
    Ok((side(top)?, side(-top)?))
}

/// All signed words of length `<= max_len` in generators `1..=generators`,
/// shortest first.
pub fn signed_words(generators: usize, max_len: usize) -> Vec<Vec<i32>> {
    let letters: Vec<i32> = (1..=generators as i32).flat_map(|g| [g, -g]).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&x| {
                    let mut next = w.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
        if layer.is_empty() {
            break;
        }
        out.extend(layer.iter().cloned());
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Divergence {
    pub instance: ExchangeInstance,
    pub left: BraidWord,
    pub right: BraidWord,
    pub left_output: SkeinVector,
    pub right_output: SkeinVector,
    /// HOMFLY oracle agrees on both sides.
    pub same_link: bool,
    pub is_knot: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DivergenceReport {
    pub strands: usize,
    pub max_block_len: usize,
    pub instances: usize,
    pub divergences: Vec<Divergence>,
}

impl DivergenceReport {
    pub fn any_knot(&self) -> bool {
        self.divergences.iter().any(|d| d.is_knot)
    }
}

/// Resolves both sides of every exchange instance with `|u|, |v| <= max_block_len`
/// and keeps those whose outputs differ.
pub fn search_exchange_divergence(n: usize, max_block_len: usize) -> Result<DivergenceReport, MtwsError> {
    if n < 2 {
        return Err(MtwsError::TooFewStrands(n));
    }
    let blocks = signed_words(n - 2, max_block_len);
    let mut divergences = Vec::new();
    let mut instances = 0;
    for u in &blocks {
        for v in &blocks {
            instances += 1;
            let instance = ExchangeInstance { u: u.clone(), v: v.clone() };
            let (left, right) = exchange_pair(&instance, n)?;
            let (left_output, right_output) = (resolve(&left), resolve(&right));
            if left_output == right_output {
                continue;
            }
            divergences.push(Divergence {
                same_link: homfly_oracle(&left) == homfly_oracle(&right),
                is_knot: left.components().len() == 1,
                instance,
                left,
                right,
                left_output,
                right_output,
            });
        }
    }
    Ok(DivergenceReport { strands: n, max_block_len, instances, divergences })
}
