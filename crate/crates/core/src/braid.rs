//! Braid words, permutations, partitions and the moves between braid words.
//!
//! Words are read top to bottom. The closure joins bottom endpoint `i` to top
//! endpoint `i` around the axis, with strand position 1 innermost.
//!
//! Crossing convention: at a positive letter `σ_i` the strand entering at
//! position `i` passes over the strand entering at position `i + 1`; at
//! `σ_i^{-1}` it passes under.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing ':' after strand count in {0:?}")]
    MissingColon(String),
    #[error("invalid strand count {0:?}")]
    BadStrandCount(String),
    #[error("invalid letter {0:?}")]
    BadLetter(String),
    #[error("letter {token:?} out of range for {strands} strands")]
    OutOfRange { token: String, strands: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("no braid relation applies at position {0}")]
    NoRelation(usize),
    #[error("rotation by {by} exceeds word length {len}")]
    RotationTooLong { by: usize, len: usize },
    #[error("conjugator has {found} strands, word has {expected}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("cannot destabilize: {0}")]
    Destabilize(&'static str),
    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition {partition} does not sum to {n}")]
    WrongSum { partition: Partition, n: usize },
    #[error("partitions are only defined for n >= 1, got {0}")]
    NonPositive(usize),
    #[error("parts must be positive")]
    ZeroPart,
    #[error("malformed partition {0:?}")]
    Malformed(String),
}

/// Stable identity of a crossing inside one word lineage.
///
/// Ids survive deletion of other letters and sign changes; only insertion
/// mints new ones, and a word never reuses an id it has handed out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

impl FromStr for CrossingId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix('c').unwrap_or(s);
        digits
            .parse::<u32>()
            .map(CrossingId)
            .map_err(|_| ParseError::BadLetter(s.to_string()))
    }
}

impl Serialize for CrossingId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i32(self.as_i32())
    }
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_i32(e: i32) -> Option<Sign> {
        match e {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// One crossing `σ_i^{±1}` of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// `i` in `σ_i`, 1-based.
    pub generator: usize,
    pub sign: Sign,
    pub id: CrossingId,
}

impl Letter {
    pub fn signed(&self) -> i32 {
        self.generator as i32 * self.sign.as_i32()
    }

    /// Whether a walk entering this crossing at `position` travels on the
    /// over-strand.
    pub fn is_over_from(&self, position: usize) -> bool {
        debug_assert!(position == self.generator || position == self.generator + 1);
        (position == self.generator) == (self.sign == Sign::Positive)
    }

    /// Position a strand entering at `position` leaves at, or `None` if the
    /// crossing does not involve that position.
    pub fn exit(&self, position: usize) -> Option<usize> {
        if position == self.generator {
            Some(position + 1)
        } else if position == self.generator + 1 {
            Some(position - 1)
        } else {
            None
        }
    }
}

/// A braid on `strands` strands as a sequence of letters, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
    next_id: u32,
}

impl BraidWord {
    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new(), next_id: 1 }
    }

    /// Builds a word from signed generators, minting ids `c1, c2, ...`.
    pub fn from_signed(strands: usize, signed: &[i32]) -> Result<BraidWord, ParseError> {
        if strands < 1 {
            return Err(ParseError::BadStrandCount(strands.to_string()));
        }
        let mut w = BraidWord::identity(strands);
        for &s in signed {
            let g = s.unsigned_abs() as usize;
            if s == 0 || g >= strands {
                return Err(ParseError::OutOfRange { token: s.to_string(), strands });
            }
            let sign = if s > 0 { Sign::Positive } else { Sign::Negative };
            w.push(g, sign);
        }
        Ok(w)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i32> {
        self.letters.iter().map(Letter::signed).collect()
    }

    pub fn crossing_ids(&self) -> impl Iterator<Item = CrossingId> + '_ {
        self.letters.iter().map(|l| l.id)
    }

    pub fn index_of(&self, id: CrossingId) -> Option<usize> {
        self.letters.iter().position(|l| l.id == id)
    }

    pub fn letter(&self, id: CrossingId) -> Option<&Letter> {
        self.letters.iter().find(|l| l.id == id)
    }

    /// Same strand count and same signed letters, ignoring crossing ids.
    pub fn same_diagram(&self, other: &BraidWord) -> bool {
        self.strands == other.strands
            && self.letters.len() == other.letters.len()
            && self
                .letters
                .iter()
                .zip(&other.letters)
                .all(|(a, b)| a.generator == b.generator && a.sign == b.sign)
    }

    fn mint(&mut self) -> CrossingId {
        let id = CrossingId(self.next_id);
        self.next_id += 1;
        id
    }

    fn push(&mut self, generator: usize, sign: Sign) -> CrossingId {
        let id = self.mint();
        self.letters.push(Letter { generator, sign, id });
        id
    }

    /// Underlying permutation: where the strand entering the top at each
    /// position leaves the bottom.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.strands).collect();
        // at_position[q] is the top position (0-based) of the strand now at q
        let mut at_position: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at_position.swap(l.generator - 1, l.generator);
        }
        for (pos, &start) in at_position.iter().enumerate() {
            images[start] = pos + 1;
        }
        Permutation { images }
    }

    /// Strand positions, grouped by closure component, in order of smallest
    /// position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.permutation().cycles()
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(prev) if prev.generator == l.generator && prev.sign != l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { strands: self.strands, letters: out, next_id: self.next_id }
    }

    /// Positions at which [`BraidWord::apply_braid_relation_at`] succeeds.
    pub fn braid_relation_sites(&self) -> Vec<usize> {
        (0..self.letters.len()).filter(|&p| self.relation_at(p).is_some()).collect()
    }

    fn relation_at(&self, pos: usize) -> Option<Vec<Letter>> {
        let ls = &self.letters;
        let x = *ls.get(pos)?;
        let y = *ls.get(pos + 1)?;
        if x.generator.abs_diff(y.generator) > 1 {
            return Some(vec![y, x]);
        }
        let z = *ls.get(pos + 2)?;
        if x.generator.abs_diff(y.generator) != 1 || z.generator != x.generator {
            return None;
        }
        // σ_i^a σ_j^b σ_i^c = σ_j^c σ_i^b σ_j^a unless b disagrees with both a and c
        if y.sign != x.sign && y.sign != z.sign {
            return None;
        }
        let (i, j) = (x.generator, y.generator);
        Some(vec![
            Letter { generator: j, ..z },
            Letter { generator: i, ..y },
            Letter { generator: j, ..x },
        ])
    }

    /// Applies the far commutation `σ_i σ_j = σ_j σ_i` (|i-j| > 1) or the
    /// braid relation `σ_i^a σ_j^b σ_i^c = σ_j^c σ_i^b σ_j^a` (|i-j| = 1)
    /// starting at letter index `pos`. Each crossing keeps its id and sign.
    pub fn apply_braid_relation_at(&self, pos: usize) -> Result<BraidWord, MoveError> {
        let replacement = self.relation_at(pos).ok_or(MoveError::NoRelation(pos))?;
        let mut letters = self.letters.clone();
        letters.splice(pos..pos + replacement.len(), replacement);
        Ok(BraidWord { letters, ..self.clone() })
    }

    /// Moves the first `k` letters to the back. This is conjugation, so the
    /// closure is unchanged.
    pub fn cyclic_rotate(&self, k: usize) -> Result<BraidWord, MoveError> {
        if k > self.letters.len() {
            return Err(MoveError::RotationTooLong { by: k, len: self.letters.len() });
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k);
        Ok(BraidWord { letters, ..self.clone() })
    }

    /// `a · self · a^{-1}` with fresh ids on the conjugator letters.
    pub fn conjugate_by(&self, a: &BraidWord) -> Result<BraidWord, MoveError> {
        if a.strands != self.strands {
            return Err(MoveError::StrandMismatch { expected: self.strands, found: a.strands });
        }
        let mut w = BraidWord { letters: Vec::new(), ..self.clone() };
        for l in &a.letters {
            w.push(l.generator, l.sign);
        }
        w.letters.extend_from_slice(&self.letters);
        for l in a.letters.iter().rev() {
            w.push(l.generator, l.sign.flip());
        }
        Ok(w)
    }

    /// Markov stabilization: append `σ_n^{±1}` on a new strand.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut w = self.clone();
        w.strands += 1;
        let g = self.strands;
        w.push(g, sign);
        w
    }

    /// Inverse of [`BraidWord::stabilize`].
    pub fn destabilize(&self) -> Result<BraidWord, MoveError> {
        let top = self.strands.checked_sub(1).filter(|&g| g >= 1).ok_or(MoveError::Destabilize(
            "a one-strand braid has no crossing to remove",
        ))?;
        match self.letters.last() {
            Some(l) if l.generator == top => {}
            _ => return Err(MoveError::Destabilize("last letter is not σ_{n-1}^{±1}")),
        }
        if self.letters.iter().filter(|l| l.generator == top).count() != 1 {
            return Err(MoveError::Destabilize("σ_{n-1} occurs more than once"));
        }
        let mut w = self.clone();
        w.letters.pop();
        w.strands -= 1;
        Ok(w)
    }

    /// Flips the sign of one crossing, keeping its id.
    pub fn change_crossing(&self, id: CrossingId) -> Result<BraidWord, MoveError> {
        let idx = self.index_of(id).ok_or(MoveError::UnknownCrossing(id))?;
        let mut w = self.clone();
        w.letters[idx].sign = w.letters[idx].sign.flip();
        Ok(w)
    }

    /// Smooths one crossing away (the `b_0` diagram of the skein relation).
    pub fn remove_crossing(&self, id: CrossingId) -> Result<BraidWord, MoveError> {
        let idx = self.index_of(id).ok_or(MoveError::UnknownCrossing(id))?;
        let mut w = self.clone();
        w.letters.remove(idx);
        Ok(w)
    }

    /// Appends a letter with a fresh id.
    pub fn with_letter(&self, generator: usize, sign: Sign) -> Result<BraidWord, ParseError> {
        if generator == 0 || generator >= self.strands {
            return Err(ParseError::OutOfRange {
                token: (generator as i32 * sign.as_i32()).to_string(),
                strands: self.strands,
            });
        }
        let mut w = self.clone();
        w.push(generator, sign);
        Ok(w)
    }

    /// Concatenation; letters of `other` get fresh ids.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, MoveError> {
        if other.strands != self.strands {
            return Err(MoveError::StrandMismatch { expected: self.strands, found: other.strands });
        }
        let mut w = self.clone();
        for l in &other.letters {
            w.push(l.generator, l.sign);
        }
        Ok(w)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l.signed())?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    /// Grammar: `n : i1 i2 ... ik`, where `ik` is a nonzero integer with
    /// `|ik| <= n - 1`; a negative entry is an inverse generator.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| ParseError::MissingColon(text.to_string()))?;
        let head = head.trim();
        let strands: usize = head
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| ParseError::BadStrandCount(head.to_string()))?;
        let mut w = BraidWord::identity(strands);
        for token in tail.split_whitespace() {
            let s: i64 = token.parse().map_err(|_| ParseError::BadLetter(token.to_string()))?;
            let g = s.unsigned_abs() as usize;
            if s == 0 || g >= strands {
                return Err(ParseError::OutOfRange { token: token.to_string(), strands });
            }
            w.push(g, if s > 0 { Sign::Positive } else { Sign::Negative });
        }
        Ok(w)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn parse_word(text: &str) -> Result<BraidWord, ParseError> {
    text.parse()
}

/// A bijection of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (1..=n).collect() }
    }

    /// Returns `None` unless `images` is a bijection of `1..=len`.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Cycles, each starting at its smallest element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts(self.cycles().iter().map(Vec::len).collect())
            .expect("cycles are nonempty")
    }
}

/// A partition of a positive integer, parts stored non-increasing.
///
/// Partitions are ordered reverse-lexicographically, so `(3) < (2,1) < (1,1,1)`
/// and sorted collections list the larger parts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts; rejects zero parts.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, `m(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| PartitionError::Malformed(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::from_parts(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>, PartitionError> {
    if n < 1 {
        return Err(PartitionError::NonPositive(n));
    }
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Blocks `b_(k) = σ_{k-1} ... σ_1` of the given sizes placed side by side,
/// left to right, in the order given.
pub fn block_braid(blocks: &[usize], n: usize) -> Result<BraidWord, PartitionError> {
    if blocks.contains(&0) {
        return Err(PartitionError::ZeroPart);
    }
    if blocks.iter().sum::<usize>() != n || n == 0 {
        return Err(PartitionError::WrongSum { partition: Partition::from_parts(blocks.to_vec())?, n });
    }
    let mut w = BraidWord::identity(n);
    let mut offset = 0;
    for &k in blocks {
        for g in (offset + 1..offset + k).rev() {
            w.push(g, Sign::Positive);
        }
        offset += k;
    }
    Ok(w)
}

/// The basis braid `v_λ`, whose closure has cycle type `λ`.
pub fn basis_braid(lambda: &Partition, n: usize) -> Result<BraidWord, PartitionError> {
    block_braid(lambda.parts(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::from_parts(p.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let t = w("2: 1 1 1");
        assert_eq!(t.strands(), 2);
        assert_eq!(t.signed(), vec![1, 1, 1]);
        assert_eq!(t.crossing_ids().collect::<Vec<_>>(), vec![CrossingId(1), CrossingId(2), CrossingId(3)]);

        assert_eq!(w("3: 1 -2 1 -2").signed(), vec![1, -2, 1, -2]);
        let one = w("1:");
        assert_eq!(one.strands(), 1);
        assert!(one.is_empty());
        assert_eq!(w("  3 :1   -2 ").to_string(), "3: 1 -2");
    }

    #[test]
    fn parse_errors_name_the_token() {
        assert_eq!(w_err("2: 1 2"), ParseError::OutOfRange { token: "2".into(), strands: 2 });
        assert_eq!(w_err("3: 1 x"), ParseError::BadLetter("x".into()));
        assert_eq!(w_err("3: 0"), ParseError::OutOfRange { token: "0".into(), strands: 3 });
        assert_eq!(w_err("0:"), ParseError::BadStrandCount("0".into()));
        assert_eq!(w_err(""), ParseError::MissingColon("".into()));
        assert_eq!(w_err("1 1 1"), ParseError::MissingColon("1 1 1".into()));
        assert_eq!(w_err("1: 1"), ParseError::OutOfRange { token: "1".into(), strands: 1 });
    }

    fn w_err(s: &str) -> ParseError {
        s.parse::<BraidWord>().unwrap_err()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("2: 1 1 1").permutation().images(), &[2, 1]);
        assert_eq!(w("2: 1 1").permutation(), Permutation::identity(2));
        // (1 2)(2 3)(1 2)(2 3) traced by hand: 1 -> 2, 2 -> 3, 3 -> 1
        assert_eq!(w("3: 1 -2 1 -2").permutation().images(), &[2, 3, 1]);
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(3).cycle_type(), part(&[1, 1, 1]));
        assert_eq!(w("2: 1").permutation().cycle_type(), part(&[2]));
        assert_eq!(w("3: 1 -2 1 -2").permutation().cycle_type(), part(&[3]));
    }

    #[test]
    fn permutation_from_images_checks_bijection() {
        assert!(Permutation::from_images(vec![2, 1, 3]).is_some());
        assert!(Permutation::from_images(vec![2, 2, 3]).is_none());
        assert!(Permutation::from_images(vec![0, 1]).is_none());
    }

    #[test]
    fn basis_braid_examples() {
        assert_eq!(block_braid(&[1, 2, 3], 6).unwrap().to_string(), "6: 2 5 4");
        assert_eq!(basis_braid(&part(&[1, 1, 1, 1]), 4).unwrap().to_string(), "4:");
        assert_eq!(basis_braid(&part(&[2]), 2).unwrap().to_string(), "2: 1");
        assert_eq!(basis_braid(&part(&[3, 2, 1]), 6).unwrap().to_string(), "6: 2 1 4");
        assert!(matches!(basis_braid(&part(&[2, 1]), 4), Err(PartitionError::WrongSum { .. })));
    }

    #[test]
    fn basis_braid_closes_to_its_partition() {
        for n in 1..=8 {
            for lambda in partitions_of(n).unwrap() {
                let v = basis_braid(&lambda, n).unwrap();
                assert_eq!(v.permutation().cycle_type(), lambda);
                assert_eq!(v.len(), n - lambda.len());
                assert!(v.letters().iter().all(|l| l.sign == Sign::Positive));
            }
        }
    }

    #[test]
    fn partition_counts_and_order() {
        let p3: Vec<String> = partitions_of(3).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, vec!["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        assert!(partitions_of(0).is_err());
        let mut sorted = partitions_of(6).unwrap();
        sorted.sort();
        assert_eq!(sorted, partitions_of(6).unwrap());
    }

    /// Brute force: every non-increasing sequence of parts summing to n.
    fn brute_partition_count(n: usize) -> usize {
        fn count(rest: usize, max: usize) -> usize {
            if rest == 0 {
                return 1;
            }
            (1..=max.min(rest)).map(|p| count(rest - p, p)).sum()
        }
        count(n, n)
    }

    #[test]
    fn partition_count_matches_brute_force() {
        assert_eq!(brute_partition_count(6), 11);
        for n in 1..=10 {
            assert_eq!(partitions_of(n).unwrap().len(), brute_partition_count(n));
        }
    }

    #[test]
    fn move_examples() {
        assert_eq!(w("2: 1 -1").free_reduce().to_string(), "2:");
        assert_eq!(w("3: 1 2 -2 -1 2").free_reduce().to_string(), "3: 2");
        assert_eq!(w("1:").stabilize(Sign::Positive).to_string(), "2: 1");
        let fig8 = w("3: 1 -2 1 -2");
        let changed = fig8.change_crossing(CrossingId(2)).unwrap();
        assert_eq!(changed.to_string(), "3: 1 2 1 -2");
        assert_eq!(changed.letters()[1].id, CrossingId(2));
        assert_eq!(
            fig8.change_crossing(CrossingId(9)),
            Err(MoveError::UnknownCrossing(CrossingId(9)))
        );
    }

    #[test]
    fn braid_relations() {
        let x = w("3: 1 2 1");
        let y = x.apply_braid_relation_at(0).unwrap();
        assert_eq!(y.to_string(), "3: 2 1 2");
        assert_eq!(y.crossing_ids().collect::<Vec<_>>(), vec![CrossingId(3), CrossingId(2), CrossingId(1)]);
        assert_eq!(w("3: 1 2 -1").apply_braid_relation_at(0).unwrap().to_string(), "3: -2 1 2");
        assert_eq!(w("4: 1 3").apply_braid_relation_at(0).unwrap().to_string(), "4: 3 1");
        assert_eq!(w("3: 1 -2 1").apply_braid_relation_at(0), Err(MoveError::NoRelation(0)));
        assert_eq!(w("3: 1 1").apply_braid_relation_at(0), Err(MoveError::NoRelation(0)));
        assert_eq!(w("3: 2 1 2").braid_relation_sites(), vec![0]);
    }

    #[test]
    fn rotation_and_conjugation() {
        let x = w("3: 1 -2 2");
        assert_eq!(x.cyclic_rotate(1).unwrap().to_string(), "3: -2 2 1");
        assert_eq!(x.cyclic_rotate(3).unwrap().to_string(), "3: 1 -2 2");
        assert!(x.cyclic_rotate(4).is_err());
        let c = x.conjugate_by(&w("3: 2 -1")).unwrap();
        assert_eq!(c.to_string(), "3: 2 -1 1 -2 2 1 -2");
        let ids: Vec<_> = c.crossing_ids().collect();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
        assert!(x.conjugate_by(&w("2: 1")).is_err());
    }

    #[test]
    fn destabilize_preconditions() {
        assert_eq!(w("3: 1 2").destabilize().unwrap().to_string(), "2: 1");
        assert!(w("3: 2 1").destabilize().is_err());
        assert!(w("3: 2 1 2").destabilize().is_err());
        assert!(w("1:").destabilize().is_err());
        assert!(w("2:").destabilize().is_err());
    }

    #[test]
    fn ids_are_never_reused() {
        let x = w("3: 1 2");
        let y = x.remove_crossing(CrossingId(2)).unwrap().stabilize(Sign::Negative);
        assert_eq!(y.crossing_ids().collect::<Vec<_>>(), vec![CrossingId(1), CrossingId(3)]);
    }
}
