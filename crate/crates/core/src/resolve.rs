//! Resolution of a closed braid diagram into the basis `{v̂_λ}` of `V_n`.
//!
//! Each closure component is walked along its orientation from a basepoint.
//! The first time a crossing is met it is labeled good if the walk is on the
//! over-strand and bad otherwise. The first bad crossing is resolved with
//! the skein relation `b_+ = A b_- + B b_0` (or its inverse
//! `b_- = A^{-1} b_+ - A^{-1} B b_0`), and both resulting diagrams are
//! resolved again from the same basepoint with the labels found so far.
//! A diagram with no bad crossing left is braid isotopic to `v̂_λ`, where
//! `λ` is the cycle type of its permutation.
//!
//! Basepoints sit on the closure arc entering the top of the word. The
//! canonical basepoint is the smallest strand position not on a finished
//! component; since position 1 is innermost, that point is already the
//! closest to the axis among the unfinished components.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::braid::{BraidWord, CrossingId, Partition, Sign};
use crate::ring::{LaurentAB, SkeinVector, Unit};

/// A strand position in `1..=n` on the closure arc above the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Basepoint(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Good,
    Bad,
    Unlabeled,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Good => "good",
            Label::Bad => "bad",
            Label::Unlabeled => "unlabeled",
        })
    }
}

/// Labels keyed by crossing id. The key set is always the crossing set of
/// the word the map belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LabelMap(BTreeMap<CrossingId, Label>);

impl LabelMap {
    pub fn unlabeled(w: &BraidWord) -> LabelMap {
        LabelMap(w.crossing_ids().map(|id| (id, Label::Unlabeled)).collect())
    }

    pub fn get(&self, id: CrossingId) -> Option<Label> {
        self.0.get(&id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CrossingId, Label)> + '_ {
        self.0.iter().map(|(id, l)| (*id, *l))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, label: Label) -> usize {
        self.0.values().filter(|&&l| l == label).count()
    }

    /// Whether the key set is exactly the crossing set of `w`.
    pub fn matches(&self, w: &BraidWord) -> bool {
        self.0.len() == w.len() && w.crossing_ids().all(|id| self.0.contains_key(&id))
    }

    fn set(&mut self, id: CrossingId, label: Label) {
        self.0.insert(id, label);
    }

    fn remove(&mut self, id: CrossingId) {
        self.0.remove(&id);
    }
}

impl fmt::Display for LabelMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (id, l)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{id}={l}")?;
        }
        Ok(())
    }
}

/// Outcome of walking one closure component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Traversal {
    /// The walk met an unlabeled crossing on its under-strand. `labels`
    /// holds everything assigned up to and including this crossing.
    FirstBad { crossing: CrossingId, sign: Sign, entered: usize, labels: LabelMap },
    Completed(LabelMap),
}

/// Smallest strand position whose closure component contains no position
/// in `completed`; `None` once every component is done.
pub fn canonical_basepoint(w: &BraidWord, completed: &BTreeSet<usize>) -> Option<Basepoint> {
    w.components()
        .into_iter()
        .find(|comp| comp.iter().all(|p| !completed.contains(p)))
        .map(|comp| Basepoint(comp[0]))
}

fn walk(w: &BraidWord, bp: Basepoint, mut labels: LabelMap, stop_at_bad: bool) -> Traversal {
    let start = bp.0;
    assert!((1..=w.strands()).contains(&start), "basepoint {start} outside 1..={}", w.strands());
    let mut p = start;
    loop {
        for l in w.letters() {
            let Some(exit) = l.exit(p) else { continue };
            if labels.get(l.id) == Some(Label::Unlabeled) {
                if l.is_over_from(p) {
                    labels.set(l.id, Label::Good);
                } else {
                    labels.set(l.id, Label::Bad);
                    if stop_at_bad {
                        return Traversal::FirstBad { crossing: l.id, sign: l.sign, entered: p, labels };
                    }
                }
            }
            p = exit;
        }
        if p == start {
            return Traversal::Completed(labels);
        }
    }
}

/// Walks the component through `bp`, labeling crossings met for the first
/// time, and stops at the first bad one.
pub fn traverse(w: &BraidWord, bp: Basepoint, labels: &LabelMap) -> Traversal {
    debug_assert!(labels.matches(w));
    walk(w, bp, labels.clone(), true)
}

/// Which basepoint the first component is walked from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BasepointRule {
    #[default]
    Canonical,
    /// Start at this strand position, then continue canonically. Only the
    /// canonical rule is guaranteed to compute basis coordinates; this one
    /// exists for the basepoint diagnostic.
    StartAt(usize),
}

fn next_basepoint(w: &BraidWord, completed: &BTreeSet<usize>, rule: BasepointRule) -> Option<Basepoint> {
    if let BasepointRule::StartAt(s) = rule {
        if !completed.contains(&s) {
            return Some(Basepoint(s));
        }
    }
    canonical_basepoint(w, completed)
}

enum Step {
    Leaf { lambda: Partition },
    Branch { crossing: CrossingId, sign: Sign, flipped: (BraidWord, LabelMap), removed: (BraidWord, LabelMap) },
}

fn step(w: &BraidWord, labels: &LabelMap, rule: BasepointRule) -> Step {
    let mut labels = labels.clone();
    let mut completed = BTreeSet::new();
    while let Some(bp) = next_basepoint(w, &completed, rule) {
        match walk(w, bp, labels, true) {
            Traversal::Completed(l) => {
                labels = l;
                let comp = w.components().into_iter().find(|c| c.contains(&bp.0)).expect("basepoint lies on a component");
                completed.extend(comp);
            }
            Traversal::FirstBad { crossing, sign, labels: mut l, .. } => {
                let flipped = w.change_crossing(crossing).expect("crossing came from this word");
                let removed = w.remove_crossing(crossing).expect("crossing came from this word");
                l.set(crossing, Label::Good);
                let mut removed_labels = l.clone();
                removed_labels.remove(crossing);
                return Step::Branch { crossing, sign, flipped: (flipped, l), removed: (removed, removed_labels) };
            }
        }
    }
    debug_assert_eq!(labels.count(Label::Unlabeled), 0);
    Step::Leaf { lambda: w.permutation().cycle_type() }
}

fn edge_units(sign: Sign) -> (Unit, Unit) {
    match sign {
        Sign::Positive => (Unit::A, Unit::B),
        Sign::Negative => (Unit::AInv, Unit::NegAInvB),
    }
}

fn accumulate(w: &BraidWord, labels: &LabelMap, coeff: &LaurentAB, rule: BasepointRule, out: &mut SkeinVector) {
    match step(w, labels, rule) {
        Step::Leaf { lambda } => out.add_entry(lambda, coeff.clone()).expect("cycle type partitions n"),
        Step::Branch { sign, flipped, removed, .. } => {
            let (flip_unit, remove_unit) = edge_units(sign);
            accumulate(&flipped.0, &flipped.1, &coeff.mul_unit(flip_unit), rule, out);
            accumulate(&removed.0, &removed.1, &coeff.mul_unit(remove_unit), rule, out);
        }
    }
}

/// Coordinates of the closure of `w` in the basis `{v̂_λ}` of `V_n`.
pub fn resolve(w: &BraidWord) -> SkeinVector {
    resolve_with(w, BasepointRule::Canonical)
}

pub fn resolve_with(w: &BraidWord, rule: BasepointRule) -> SkeinVector {
    let mut out = SkeinVector::zero(w.strands());
    accumulate(w, &LabelMap::unlabeled(w), &LaurentAB::one(), rule, &mut out);
    out
}

/// Labels every crossing good or bad without resolving anything.
pub fn label_only(w: &BraidWord) -> LabelMap {
    let mut labels = LabelMap::unlabeled(w);
    let mut completed = BTreeSet::new();
    while let Some(bp) = canonical_basepoint(w, &completed) {
        match walk(w, bp, labels, false) {
            Traversal::Completed(l) => labels = l,
            Traversal::FirstBad { .. } => unreachable!("walk does not stop when stop_at_bad is false"),
        }
        let comp = w.components().into_iter().find(|c| c.contains(&bp.0)).expect("basepoint lies on a component");
        completed.extend(comp);
    }
    labels
}

/// One node of the resolution tree.
#[derive(Debug, Clone, Serialize)]
pub struct ResolutionNode {
    pub word: BraidWord,
    /// Coefficient on the edge from the parent; `None` at the root.
    pub edge: Option<Unit>,
    /// Labels handed down from the parent.
    pub inherited_labels: LabelMap,
    /// The bad crossing resolved here, for internal nodes.
    pub resolved: Option<(CrossingId, Sign)>,
    /// The basis element a leaf is isotopic to.
    pub leaf: Option<Partition>,
    pub children: Vec<ResolutionNode>,
}

/// The full binary tree of skein resolutions.
pub fn resolution_tree(w: &BraidWord) -> ResolutionNode {
    build_node(w.clone(), None, LabelMap::unlabeled(w))
}

fn build_node(word: BraidWord, edge: Option<Unit>, inherited_labels: LabelMap) -> ResolutionNode {
    match step(&word, &inherited_labels, BasepointRule::Canonical) {
        Step::Leaf { lambda } => {
            ResolutionNode { word, edge, inherited_labels, resolved: None, leaf: Some(lambda), children: vec![] }
        }
        Step::Branch { crossing, sign, flipped, removed } => {
            let (flip_unit, remove_unit) = edge_units(sign);
            let children = vec![
                build_node(flipped.0, Some(flip_unit), flipped.1),
                build_node(removed.0, Some(remove_unit), removed.1),
            ];
            ResolutionNode { word, edge, inherited_labels, resolved: Some((crossing, sign)), leaf: None, children }
        }
    }
}

impl ResolutionNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves with their root-to-leaf coefficient products.
    pub fn leaves(&self) -> Vec<(&ResolutionNode, LaurentAB)> {
        let mut out = Vec::new();
        self.collect_leaves(LaurentAB::one(), &mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, coeff: LaurentAB, out: &mut Vec<(&'a ResolutionNode, LaurentAB)>) {
        let coeff = match self.edge {
            Some(u) => coeff.mul_unit(u),
            None => coeff,
        };
        if self.is_leaf() {
            out.push((self, coeff));
        } else {
            for c in &self.children {
                c.collect_leaves(coeff.clone(), out);
            }
        }
    }

    /// Sum over leaves of path coefficient times the leaf's basis vector.
    pub fn sum(&self) -> SkeinVector {
        let mut out = SkeinVector::zero(self.word.strands());
        for (leaf, coeff) in self.leaves() {
            let lambda = leaf.leaf.clone().expect("leaves carry a partition");
            out.add_entry(lambda, coeff).expect("cycle type partitions n");
        }
        out
    }

    /// Indented text rendering, one node per line.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(0, &mut s);
        s
    }

    fn render_into(&self, depth: usize, s: &mut String) {
        let indent = "  ".repeat(depth);
        let edge = self.edge.map(|u| format!("[{u}] ")).unwrap_or_default();
        match (&self.leaf, self.resolved) {
            (Some(lambda), _) => writeln!(s, "{indent}{edge}{} => {lambda}", self.word),
            (None, Some((id, sign))) => {
                let sign = if sign == Sign::Positive { '+' } else { '-' };
                writeln!(s, "{indent}{edge}{} : bad {id} ({sign})", self.word)
            }
            (None, None) => unreachable!("internal nodes record the resolved crossing"),
        }
        .expect("writing to a String");
        for c in &self.children {
            c.render_into(depth + 1, s);
        }
    }
}

/// Output of the resolution from each strand position used as the first
/// basepoint.
#[derive(Debug, Clone, Serialize)]
pub struct BasepointReport {
    pub outputs: Vec<(usize, SkeinVector)>,
    /// Whether every choice gave the canonical output.
    pub consistent: bool,
}

pub fn compare_basepoints(w: &BraidWord) -> BasepointReport {
    let canonical = resolve(w);
    let outputs: Vec<_> = (1..=w.strands()).map(|s| (s, resolve_with(w, BasepointRule::StartAt(s)))).collect();
    let consistent = outputs.iter().all(|(_, v)| *v == canonical);
    BasepointReport { outputs, consistent }
}
