//! The release gate: ten checks run at desk scale, each reporting pass/fail
//! with a one-line summary. `quick` shrinks the exhaustive bounds so the whole
//! suite fits in a few seconds.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{odd_change_check, parity_consistency};
use crate::braid::{basis_braid, partitions_of, BraidWord, CrossingId, Partition, Sign};
use crate::homfly::{certify_braid_index_3, homfly_oracle, to_homfly, to_homfly_with, BridgeWeights, Certificate, HomflyPoly};
use crate::mtws::{exchange_pair, flype_pair, search_exchange_divergence, signed_words, ExchangeInstance, FlypeInstance};
use crate::resolve::{label_only, resolve};
use crate::ring::{LaurentAB, SkeinVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub quick: bool,
    pub seed: u64,
    /// Weights handed to the bridge check; swap in wrong ones for a negative control.
    pub weights: BridgeWeights,
}

impl Default for Config {
    fn default() -> Self {
        Config { quick: false, seed: 0x5eed, weights: BridgeWeights::standard() }
    }
}

impl Config {
    pub fn quick() -> Config {
        Config { quick: true, ..Config::default() }
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Uniform length in `0..=max_len`, uniform signed letters.
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = if strands < 2 { 0 } else { rng.gen_range(0..=max_len) };
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::from_signed(strands, &letters).expect("letters in range")
}

fn all_words(strands: usize, max_len: usize) -> impl Iterator<Item = BraidWord> {
    signed_words(strands.saturating_sub(1), max_len)
        .into_iter()
        .map(move |s| BraidWord::from_signed(strands, &s).expect("letters in range"))
}

fn result(id: u8, name: &'static str, failures: &[String], summary: String) -> CriterionResult {
    let detail = match failures.first() {
        None => summary,
        Some(first) => format!("{summary}; {} failures, first: {first}", failures.len()),
    };
    CriterionResult { id, name, passed: failures.is_empty(), detail }
}

pub fn trefoil_exactness() -> CriterionResult {
    let w: BraidWord = "2: 1 1 1".parse().expect("literal");
    let mut expected = SkeinVector::zero(2);
    let two = Partition::from_parts(vec![2]).expect("literal");
    let one_one = Partition::from_parts(vec![1, 1]).expect("literal");
    // T^3 = (A + B^2) T + AB
    expected.add_entry(two, &LaurentAB::term(1, 1, 0) + &LaurentAB::term(1, 0, 2)).expect("n = 2");
    expected.add_entry(one_one, LaurentAB::term(1, 1, 1)).expect("n = 2");
    let mut times: Vec<Duration> = (0..5)
        .map(|_| {
            let t = Instant::now();
            let _ = resolve(&w);
            t.elapsed()
        })
        .collect();
    times.sort();
    let median = times[2];
    let got = resolve(&w);
    let mut failures = Vec::new();
    if got != expected {
        failures.push(format!("got {got}"));
    }
    if median >= Duration::from_millis(1) {
        failures.push(format!("median time {median:?} >= 1ms"));
    }
    result(1, "trefoil resolution exactness", &failures, format!("{got} in {median:?}"))
}

pub fn basis_fixed_points() -> CriterionResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=6 {
        let lambdas = partitions_of(n).expect("n >= 1");
        let mut outputs = BTreeSet::new();
        for lambda in &lambdas {
            let out = resolve(&basis_braid(lambda, n).expect("partition of n"));
            if out != SkeinVector::singleton(lambda.clone(), n).expect("partition of n") {
                failures.push(format!("v{lambda} -> {out}"));
            }
            outputs.insert(out.to_string());
        }
        if outputs.len() != lambdas.len() {
            failures.push(format!("n={n}: {} distinct outputs for {} partitions", outputs.len(), lambdas.len()));
        }
        counts.push(outputs.len().to_string());
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}"));
    }
    let summary = format!("distinct outputs for n=1..6: {} in {elapsed:?}", counts.join(","));
    result(2, "basis spanning and fixed points", &failures, summary)
}

pub fn well_definedness(cfg: &Config) -> CriterionResult {
    let max_len = if cfg.quick { 5 } else { 7 };
    let mut failures = Vec::new();
    let (mut words, mut checks) = (0, 0);
    for w in all_words(3, max_len) {
        words += 1;
        let out = resolve(&w);
        let mut variants = vec![w.free_reduce()];
        variants.extend(w.braid_relation_sites().into_iter().map(|p| w.apply_braid_relation_at(p).expect("listed site")));
        variants.extend((1..w.len()).map(|k| w.cyclic_rotate(k).expect("k < len")));
        for x in variants {
            checks += 1;
            if resolve(&x) != out {
                failures.push(format!("{w} vs {x}"));
            }
        }
    }
    result(3, "V_n well-definedness", &failures, format!("{words} B_3 words up to length {max_len}, {checks} moves"))
}

pub fn move_invariance() -> CriterionResult {
    let mut failures = Vec::new();
    let mut flypes = 0;
    for a in -3..=3 {
        for b in -3..=3 {
            for c in -3..=3 {
                for epsilon in [Sign::Positive, Sign::Negative] {
                    flypes += 1;
                    let (l, r) = flype_pair(&FlypeInstance { a, b, c, epsilon });
                    if resolve(&l) != resolve(&r) {
                        failures.push(format!("flype {l} / {r}"));
                    }
                }
            }
        }
    }
    let blocks = signed_words(1, 4);
    let mut exchanges = 0;
    for u in &blocks {
        for v in &blocks {
            exchanges += 1;
            let (l, r) = exchange_pair(&ExchangeInstance { u: u.clone(), v: v.clone() }, 3).expect("generator 1 only");
            if resolve(&l) != resolve(&r) {
                failures.push(format!("exchange {l} / {r}"));
            }
        }
    }
    result(4, "flype and exchange invariance", &failures, format!("{flypes} flypes, {exchanges} exchanges"))
}

pub fn bad_crossing_parity(cfg: &Config) -> CriterionResult {
    let mut rng = cfg.rng(5);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let strands = rng.gen_range(2..=3);
        let w = random_word(&mut rng, strands, 12);
        match parity_consistency(&w) {
            Ok(r) if r.consistent => {}
            Ok(r) => failures.push(format!("{w}: k={} p={} n={}", r.k, r.positive_bad, r.negative_bad)),
            Err(e) => failures.push(format!("{w}: {e}")),
        }
    }
    result(5, "bad-crossing parity", &failures, "1000 random words, n in {2,3}, length <= 12".into())
}

/// Distinct certified 3-strand knot diagrams: the figure-eight first, then
/// random words of length <= 10.
pub fn certified_sample(cfg: &Config, count: usize) -> Vec<BraidWord> {
    let mut rng = cfg.rng(6);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let fig8: BraidWord = "3: 1 -2 1 -2".parse().expect("literal");
    seen.insert(fig8.signed());
    out.push(fig8);
    while out.len() < count {
        let w = random_word(&mut rng, 3, 10);
        if w.components().len() != 1 || !seen.insert(w.signed()) {
            continue;
        }
        if certify_braid_index_3(&w) == Ok(Certificate::Certified) {
            out.push(w);
        }
    }
    out
}

pub fn nugatory_free_scan(cfg: &Config) -> CriterionResult {
    let sample = certified_sample(cfg, if cfg.quick { 20 } else { 30 });
    let mut failures = Vec::new();
    let mut changes = 0;
    for w in &sample {
        let out = resolve(w);
        let labels = label_only(w);
        for id in w.crossing_ids().collect::<Vec<_>>() {
            changes += 1;
            let changed = w.change_crossing(id).expect("own id");
            if resolve(&changed) == out {
                failures.push(format!("{w} at {id}: output unchanged"));
            }
            let other = label_only(&changed);
            let differing: Vec<CrossingId> =
                labels.iter().filter(|&(c, l)| other.get(c) != Some(l)).map(|(c, _)| c).collect();
            if differing != [id] {
                failures.push(format!("{w} at {id}: labels differ at {differing:?}"));
            }
        }
    }
    let summary = format!("{} certified knots, {changes} single changes", sample.len());
    result(6, "no nugatory crossings in certified 3-braids", &failures, summary)
}

pub fn odd_changes(cfg: &Config) -> CriterionResult {
    let mut rng = cfg.rng(7);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 200 {
        let strands = rng.gen_range(2..=4);
        let w = random_word(&mut rng, strands, 10);
        if w.is_empty() {
            continue;
        }
        let mut ids: Vec<CrossingId> = w.crossing_ids().collect();
        ids.shuffle(&mut rng);
        let odd = 2 * rng.gen_range(0..ids.len().div_ceil(2)) + 1;
        ids.truncate(odd);
        done += 1;
        match odd_change_check(&w, &ids) {
            Ok(r) if r.changed != r.original && r.exponent_delta % 2 != 0 => {}
            Ok(r) => failures.push(format!("{w} changing {ids:?}: delta {}", r.exponent_delta)),
            Err(e) => failures.push(format!("{w}: {e}")),
        }
    }
    result(7, "odd crossing changes", &failures, "200 random words, n in 2..=4, odd subsets".into())
}

pub fn homfly_bridge(cfg: &Config) -> CriterionResult {
    let max_len = if cfg.quick { 5 } else { 7 };
    let mut failures = Vec::new();
    let mut check = |w: &BraidWord| match to_homfly_with(&resolve(w), &cfg.weights) {
        Ok(h) if h == homfly_oracle(w) => {}
        Ok(h) => failures.push(format!("{w}: bridge {h}")),
        Err(e) => failures.push(format!("{w}: {e}")),
    };
    let mut count = 0;
    for strands in [2, 3] {
        for w in all_words(strands, max_len) {
            count += 1;
            check(&w);
        }
    }
    let mut rng = cfg.rng(8);
    for _ in 0..200 {
        count += 1;
        check(&random_word(&mut rng, 4, 8));
    }
    let trefoil: BraidWord = "2: 1 1 1".parse().expect("literal");
    let expected: HomflyPoly = "-l^-4 - 2l^-2 + l^-2 m^2".parse().expect("literal");
    let got = to_homfly_with(&resolve(&trefoil), &cfg.weights);
    if got.as_ref() != Ok(&expected) {
        failures.push(format!("trefoil: {got:?}"));
    }
    let summary = format!("{count} words (B_2, B_3 exhaustive to length {max_len}; 200 random B_4)");
    result(8, "HOMFLY bridge", &failures, summary)
}

pub fn stabilization_witness() -> CriterionResult {
    let unknot: BraidWord = "1:".parse().expect("literal");
    let stabilized: BraidWord = "2: 1".parse().expect("literal");
    let (a, b) = (resolve(&unknot), resolve(&stabilized));
    let mut failures = Vec::new();
    if a == b {
        failures.push("outputs coincide".to_string());
    }
    if to_homfly(&a) != HomflyPoly::one() || to_homfly(&b) != HomflyPoly::one() {
        failures.push("HOMFLY is not 1".to_string());
    }
    result(9, "stabilization changes the output", &failures, format!("[n=1] {a} vs [n=2] {b}, both HOMFLY 1"))
}

pub fn four_braid_divergence(cfg: &Config) -> CriterionResult {
    let max = if cfg.quick { 2 } else { 3 };
    let report = search_exchange_divergence(4, max).expect("n = 4");
    let mut failures: Vec<String> =
        report.divergences.iter().filter(|d| !d.same_link).map(|d| format!("{} / {} not isotopic", d.left, d.right)).collect();
    if report.divergences.is_empty() {
        failures.push("no diverging pair found".to_string());
    }
    let knots = report.divergences.iter().filter(|d| d.is_knot).count();
    let summary = format!(
        "{} of {} exchange pairs diverge (block length <= {max}), {knots} of them knots",
        report.divergences.len(),
        report.instances
    );
    result(10, "4-braid exchange divergence", &failures, summary)
}

pub fn run_all(cfg: &Config) -> Vec<CriterionResult> {
    vec![
        trefoil_exactness(),
        basis_fixed_points(),
        well_definedness(cfg),
        move_invariance(),
        bad_crossing_parity(cfg),
        nugatory_free_scan(cfg),
        odd_changes(cfg),
        homfly_bridge(cfg),
        stabilization_witness(),
        four_braid_divergence(cfg),
    ]
}
