//! Bad-crossing parity and the crossing-change scans built on it.
//!
//! Every resolution output has exactly one monomial free of `B`, namely
//! `A^k` with coefficient 1, reached by switching every bad crossing. Here
//! `k = p - n` where `p` and `n` count the positive and negative bad
//! crossings. Changing one crossing flips exactly that crossing's label,
//! so `k` moves by one and the output changes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::braid::{BraidWord, CrossingId, Partition, Sign};
use crate::resolve::{label_only, resolve, Label};
use crate::ring::SkeinVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("expected exactly one B-free monomial, found {0}")]
    MalformedVector(usize),
    #[error("no crossings to change")]
    EmptyCrossingSet,
    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),
    #[error("crossing {0} listed twice")]
    DuplicateCrossing(CrossingId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BadCount {
    pub positive_bad: usize,
    pub negative_bad: usize,
    pub total: usize,
}

pub fn bad_counts(w: &BraidWord) -> BadCount {
    let labels = label_only(w);
    let (mut positive_bad, mut negative_bad) = (0, 0);
    for l in w.letters() {
        if labels.get(l.id) == Some(Label::Bad) {
            match l.sign {
                Sign::Positive => positive_bad += 1,
                Sign::Negative => negative_bad += 1,
            }
        }
    }
    BadCount { positive_bad, negative_bad, total: positive_bad + negative_bad }
}

/// The unique `B`-free term of a resolution output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BFreeTerm {
    pub partition: Partition,
    pub a_exponent: i64,
    #[serde(serialize_with = "serialize_bigint")]
    pub coefficient: BigInt,
}

fn serialize_bigint<S: serde::Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

pub fn bfree_term(v: &SkeinVector) -> Result<BFreeTerm, AnalysisError> {
    let found: Vec<BFreeTerm> = v
        .entries()
        .flat_map(|(lambda, c)| {
            c.terms().filter(|(m, _)| m.b == 0).map(move |(m, k)| BFreeTerm {
                partition: lambda.clone(),
                a_exponent: m.a,
                coefficient: k.clone(),
            })
        })
        .collect();
    match <[BFreeTerm; 1]>::try_from(found) {
        Ok([t]) => Ok(t),
        Err(found) => Err(AnalysisError::MalformedVector(found.len())),
    }
}

/// `k` in the unique `A^k` term.
pub fn bfree_exponent(v: &SkeinVector) -> Result<i64, AnalysisError> {
    bfree_term(v).map(|t| t.a_exponent)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub k: i64,
    pub positive_bad: usize,
    pub negative_bad: usize,
    /// `k = p - n` and the `A^k` coefficient is `+1`.
    pub consistent: bool,
}

/// Compares `k` read off the resolution output with `p - n` read off the
/// labels.
pub fn parity_consistency(w: &BraidWord) -> Result<ParityReport, AnalysisError> {
    let term = bfree_term(&resolve(w))?;
    let counts = bad_counts(w);
    let expected = counts.positive_bad as i64 - counts.negative_bad as i64;
    Ok(ParityReport {
        k: term.a_exponent,
        positive_bad: counts.positive_bad,
        negative_bad: counts.negative_bad,
        consistent: term.a_exponent == expected && term.coefficient.is_one(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Different,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::Different => "different",
        })
    }
}

fn verdict(a: &SkeinVector, b: &SkeinVector) -> Verdict {
    if a == b {
        Verdict::Equal
    } else {
        Verdict::Different
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub crossing: CrossingId,
    pub changed_word: BraidWord,
    pub changed_output: SkeinVector,
    pub verdict: Verdict,
    /// `k(changed) - k(original)`.
    pub exponent_delta: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NugatoryScanReport {
    pub word: BraidWord,
    pub output: SkeinVector,
    pub entries: Vec<ScanEntry>,
}

impl NugatoryScanReport {
    /// No single crossing change preserved the output.
    pub fn all_different(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Different)
    }
}

/// Resolves every single-crossing change of `w` and compares with `w`.
///
/// A "different" verdict says the diagram output changed. It only says the
/// knot type changed when the output is a knot invariant, i.e. for closed
/// 3-braids of braid index 3.
pub fn nugatory_scan(w: &BraidWord) -> NugatoryScanReport {
    let output = resolve(w);
    let k = bfree_exponent(&output).expect("resolution outputs have one B-free term");
    let entries = w
        .crossing_ids()
        .map(|id| {
            let changed_word = w.change_crossing(id).expect("id comes from the word");
            let changed_output = resolve(&changed_word);
            let k2 = bfree_exponent(&changed_output).expect("resolution outputs have one B-free term");
            ScanEntry {
                crossing: id,
                verdict: verdict(&output, &changed_output),
                exponent_delta: k2 - k,
                changed_word,
                changed_output,
            }
        })
        .collect();
    NugatoryScanReport { word: w.clone(), output, entries }
}

#[derive(Debug, Clone, Serialize)]
pub struct OddChangeReport {
    pub crossings: Vec<CrossingId>,
    pub changed_word: BraidWord,
    pub original: SkeinVector,
    pub changed: SkeinVector,
    pub exponent_delta: i64,
    pub verdict: Verdict,
}

/// Changes every crossing in `ids` at once and compares outputs. With an
/// odd number of changes the `A^k` exponent moves by an odd amount.
pub fn odd_change_check(w: &BraidWord, ids: &[CrossingId]) -> Result<OddChangeReport, AnalysisError> {
    if ids.is_empty() {
        return Err(AnalysisError::EmptyCrossingSet);
    }
    let mut seen = BTreeSet::new();
    let mut changed_word = w.clone();
    for &id in ids {
        if !seen.insert(id) {
            return Err(AnalysisError::DuplicateCrossing(id));
        }
        changed_word = changed_word.change_crossing(id).map_err(|_| AnalysisError::UnknownCrossing(id))?;
    }
    let original = resolve(w);
    let changed = resolve(&changed_word);
    let exponent_delta = bfree_exponent(&changed)? - bfree_exponent(&original)?;
    Ok(OddChangeReport {
        crossings: ids.to_vec(),
        verdict: verdict(&original, &changed),
        changed_word,
        original,
        changed,
        exponent_delta,
    })
}

/// Whether `k` is even or odd, for words related by an even number of
/// changes.
pub fn exponent_parity(v: &SkeinVector) -> Result<bool, AnalysisError> {
    bfree_exponent(v).map(|k| (k % 2).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{basis_braid, partitions_of};

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn bad_count_examples() {
        assert_eq!(bad_counts(&w("2: 1 1 1")), BadCount { positive_bad: 1, negative_bad: 0, total: 1 });
        assert_eq!(bad_counts(&w("2: -1")), BadCount { positive_bad: 0, negative_bad: 1, total: 1 });
        for n in 1..=5 {
            for lambda in partitions_of(n).unwrap() {
                assert_eq!(bad_counts(&basis_braid(&lambda, n).unwrap()).total, 0);
            }
        }
    }

    #[test]
    fn bfree_exponent_examples() {
        assert_eq!(bfree_exponent(&resolve(&w("2: 1 1 1"))), Ok(1));
        assert_eq!(bfree_exponent(&resolve(&w("2: -1"))), Ok(-1));
        assert_eq!(bfree_exponent(&resolve(&basis_braid(&"(3,1)".parse().unwrap(), 4).unwrap())), Ok(0));
    }

    #[test]
    fn malformed_vectors_are_rejected() {
        let none = SkeinVector::parse_text("(2): B", 2).unwrap();
        assert_eq!(bfree_exponent(&none), Err(AnalysisError::MalformedVector(0)));
        let two = SkeinVector::parse_text("(2): A ; (1,1): 1", 2).unwrap();
        assert_eq!(bfree_exponent(&two), Err(AnalysisError::MalformedVector(2)));
    }

    #[test]
    fn parity_examples() {
        let r = parity_consistency(&w("2: 1 1 1")).unwrap();
        assert_eq!((r.k, r.positive_bad, r.negative_bad, r.consistent), (1, 1, 0, true));
        let r = parity_consistency(&w("2:")).unwrap();
        assert_eq!((r.k, r.positive_bad, r.negative_bad, r.consistent), (0, 0, 0, true));
        let fig8 = w("3: 1 -2 1 -2");
        let r = parity_consistency(&fig8).unwrap();
        let counts = bad_counts(&fig8);
        assert_eq!(r.k, counts.positive_bad as i64 - counts.negative_bad as i64);
        assert!(r.consistent);
    }

    #[test]
    fn nugatory_scan_examples() {
        let fig8 = nugatory_scan(&w("3: 1 -2 1 -2"));
        assert_eq!(fig8.entries.len(), 4);
        assert!(fig8.all_different());

        let trefoil = nugatory_scan(&w("2: 1 1 1"));
        assert!(trefoil.all_different());
        assert!(trefoil.entries.iter().all(|e| e.exponent_delta.abs() == 1));

        // the kink of a stabilized unknot is nugatory, yet the diagram output changes
        let kink = nugatory_scan(&w("2: 1"));
        assert_eq!(kink.entries[0].changed_output.to_string(), "(2): A^-1 ; (1,1): -A^-1*B");
        assert_eq!(kink.output.to_string(), "(2): 1");
        assert_eq!(kink.entries[0].verdict, Verdict::Different);
    }

    #[test]
    fn odd_change_examples() {
        let fig8 = w("3: 1 -2 1 -2");
        let one = odd_change_check(&fig8, &[CrossingId(1)]).unwrap();
        assert_eq!(one.verdict, Verdict::Different);
        let three = odd_change_check(&fig8, &[CrossingId(1), CrossingId(2), CrossingId(3)]).unwrap();
        assert_eq!(three.verdict, Verdict::Different);
        assert_eq!(three.exponent_delta.rem_euclid(2), 1);
        assert_eq!(odd_change_check(&fig8, &[]).unwrap_err(), AnalysisError::EmptyCrossingSet);
        assert_eq!(
            odd_change_check(&fig8, &[CrossingId(7)]).unwrap_err(),
            AnalysisError::UnknownCrossing(CrossingId(7))
        );
        assert_eq!(
            odd_change_check(&fig8, &[CrossingId(1), CrossingId(1)]).unwrap_err(),
            AnalysisError::DuplicateCrossing(CrossingId(1))
        );
    }

    #[test]
    fn even_changes_keep_exponent_parity() {
        let x = w("3: 1 -2 1 -2 2 1");
        let r = odd_change_check(&x, &[CrossingId(2), CrossingId(5)]).unwrap();
        assert_eq!(exponent_parity(&r.original), exponent_parity(&r.changed));
    }
}
