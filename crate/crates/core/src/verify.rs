//! Mechanical checks of the computational statements about zero-sum squares.
//!
//! Every check returns a [`VerificationOutcome`]. Arithmetic inequalities are
//! cross-multiplied and evaluated in integers; nothing here touches floating
//! point.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, Sign};
use crate::search::{enumerate, enumerate_collect, EnumerationQuery};
use crate::split::{classify_split, corollary2_check, make_t_split, small_disc_splits, split_disc_formula};
use crate::symmetry::dedup;

/// Largest `n` checked by default (shapes up to `9 x 10`).
pub const DEFAULT_MAX_N: usize = 9;
/// Largest `n` reached by the opt-in full run (shapes up to `11 x 12`).
pub const FULL_MAX_N: usize = 11;

/// Exceptional counts for the two shapes that have any.
pub const EXCEPTIONAL_4X5: u64 = 28;
pub const EXCEPTIONAL_5X5: u64 = 32;
/// Orbits of the exceptional matrices under rotations, reflections and negation.
pub const EXCEPTIONAL_CLASSES: usize = 11;
/// How the classes split between the two shapes. Derived by running
/// [`verify_symmetry_classes`]; pinned here so regressions show up.
pub const EXCEPTIONAL_CLASSES_4X5: usize = 5;
pub const EXCEPTIONAL_CLASSES_5X5: usize = 6;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationOutcome {
    pub name: String,
    pub status: Status,
    pub details: Map<String, Value>,
    #[serde(serialize_with = "serialize_witnesses")]
    pub witnesses: Vec<BinaryMatrix>,
    #[serde(rename = "duration_ms", serialize_with = "serialize_millis")]
    pub duration: Duration,
}

fn serialize_witnesses<S: serde::Serializer>(ws: &[BinaryMatrix], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(ws.len()))?;
    for w in ws {
        seq.serialize_element(&w.row_strings())?;
    }
    seq.end()
}

fn serialize_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerificationOutcome {
    fn new(name: impl Into<String>) -> Self {
        VerificationOutcome {
            name: name.into(),
            status: Status::Pass,
            details: Map::new(),
            witnesses: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    fn skipped(name: impl Into<String>, reason: &str) -> Self {
        let mut o = Self::new(name);
        o.status = Status::Skipped;
        o.detail("reason", reason);
        o
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    fn fail_if(&mut self, bad: bool) {
        if bad {
            self.status = Status::Fail;
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.duration = start.elapsed();
        self
    }

    /// The outcome without its timing, for reproducibility comparisons.
    pub fn fingerprint(&self) -> Value {
        json!({
            "name": self.name,
            "status": self.status,
            "details": self.details,
            "witnesses": self.witnesses.iter().map(|w| w.row_strings()).collect::<Vec<_>>(),
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub jobs: usize,
    /// Largest `n` run for size-graded checks; larger shapes are reported as skipped.
    pub max_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            jobs: 1,
            max_n: DEFAULT_MAX_N,
        }
    }
}

fn shape_label(rows: usize, cols: usize) -> String {
    format!("{rows}x{cols}")
}

/// Shapes covered by the small-case computation: `n x (n+1)` for `4 <= n <= 11`
/// and `n x n` for `5 <= n <= 11`, ordered by size.
pub fn lemma3_shapes() -> Vec<(usize, usize)> {
    let mut shapes = vec![(4, 5)];
    for n in 5..=FULL_MAX_N {
        shapes.push((n, n));
        shapes.push((n, n + 1));
    }
    shapes
}

pub fn lemma3_expected_exceptional(rows: usize, cols: usize) -> u64 {
    match (rows, cols) {
        (4, 5) => EXCEPTIONAL_4X5,
        (5, 5) => EXCEPTIONAL_5X5,
        _ => 0,
    }
}

/// Zero-sum-square-free matrices with `|disc| <= 2n` on each small shape are
/// split, apart from 28 at `4 x 5` and 32 at `5 x 5`.
pub fn verify_lemma3(cfg: &VerifyConfig) -> Result<VerificationOutcome> {
    let start = Instant::now();
    let mut out = VerificationOutcome::new("lemma3");
    let mut shapes = Vec::new();
    let mut ran = 0;
    for (rows, cols) in lemma3_shapes() {
        let n = rows.min(cols);
        let label = shape_label(rows, cols);
        if n > cfg.max_n {
            shapes.push(json!({ "shape": label, "status": "skipped" }));
            continue;
        }
        let q = EnumerationQuery::abs_at_most(rows, cols, 2 * n as u64).jobs(cfg.jobs);
        let mut exceptional = Vec::new();
        let report = enumerate(&q, |m| {
            if classify_split(m).is_none() {
                exceptional.push(m.clone());
            }
        })?;
        let expected = lemma3_expected_exceptional(rows, cols);
        let ok = report.exceptional_count == expected && exceptional.len() as u64 == expected;
        if !ok {
            out.witnesses.extend(exceptional.iter().take(8).cloned());
        }
        out.fail_if(!ok);
        ran += 1;
        shapes.push(json!({
            "shape": label,
            "status": if ok { "pass" } else { "fail" },
            "total": report.total,
            "split": report.split_count,
            "exceptional": report.exceptional_count,
            "expected_exceptional": expected,
        }));
    }
    out.detail("max_n", cfg.max_n);
    out.detail("shapes_run", ran);
    out.detail("shapes", shapes);
    Ok(out.timed(start))
}

/// The exceptional matrices of one shape (zero-sum-square-free, `|disc| <= 2n`, not split).
pub fn exceptional_matrices(rows: usize, cols: usize, jobs: usize) -> Result<Vec<BinaryMatrix>> {
    let n = rows.min(cols);
    let (ms, _) = enumerate_collect(&EnumerationQuery::abs_at_most(rows, cols, 2 * n as u64).jobs(jobs))?;
    Ok(ms.into_iter().filter(|m| classify_split(m).is_none()).collect())
}

/// The 60 exceptional matrices fall into 11 orbits: the `4 x 5` ones under
/// the rectangular group, the `5 x 5` ones under the full square group.
pub fn verify_symmetry_classes(jobs: usize) -> Result<VerificationOutcome> {
    let start = Instant::now();
    let mut out = VerificationOutcome::new("classes");
    let rect = exceptional_matrices(4, 5, jobs)?;
    let square = exceptional_matrices(5, 5, jobs)?;
    let rect_classes = dedup(&rect)?;
    let square_classes = dedup(&square)?;
    let total = rect_classes.len() + square_classes.len();
    out.detail("exceptional", (rect.len() + square.len()) as u64);
    out.detail("classes_4x5", rect_classes.len());
    out.detail("classes_5x5", square_classes.len());
    out.detail("classes", total);
    out.fail_if(
        rect.len() + square.len() != (EXCEPTIONAL_4X5 + EXCEPTIONAL_5X5) as usize
            || total != EXCEPTIONAL_CLASSES
            || rect_classes.len() != EXCEPTIONAL_CLASSES_4X5
            || square_classes.len() != EXCEPTIONAL_CLASSES_5X5,
    );
    out.witnesses = rect_classes.into_iter().chain(square_classes).collect();
    Ok(out.timed(start))
}

/// For `n >= 5`: every zero-sum-square-free `n x n` and `n x (n+1)` matrix with
/// `|disc| <= n` is split, and on `n x n` nothing survives `|disc| <= n - 1`.
pub fn verify_theorem5(n: usize, jobs: usize) -> Result<VerificationOutcome> {
    if n < 5 {
        return Err(Error::contract(format!("theorem5 check needs n >= 5, got {n}")));
    }
    let start = Instant::now();
    let mut out = VerificationOutcome::new(format!("theorem5[n={n}]"));
    let bound = n as u64;
    for (rows, cols) in [(n, n), (n, n + 1)] {
        let (ms, report) = enumerate_collect(&EnumerationQuery::abs_at_most(rows, cols, bound).jobs(jobs))?;
        let non_split: Vec<_> = ms.iter().filter(|m| classify_split(m).is_none()).cloned().collect();
        // Survivors must be the small-discrepancy split matrices: |disc| = n on
        // squares, disc = 0 on almost-squares.
        let off_value = ms
            .iter()
            .filter(|m| {
                let d = m.discrepancy();
                if rows == cols {
                    d.unsigned_abs() != bound
                } else {
                    d != 0
                }
            })
            .count();
        out.fail_if(!non_split.is_empty() || off_value != 0);
        out.witnesses.extend(non_split.iter().take(8).cloned());
        let key = shape_label(rows, cols);
        out.detail(
            &key,
            json!({
                "total": report.total,
                "split": report.split_count,
                "non_split": non_split.len(),
                "unexpected_disc": off_value,
            }),
        );
    }
    let tighter = enumerate(
        &EnumerationQuery::abs_at_most(n, n, bound - 1).jobs(jobs).count_only(),
        |_| {},
    )?;
    out.detail("square_below_n_total", tighter.total);
    out.fail_if(tighter.total != 0);
    Ok(out.timed(start))
}

/// Parameters of the counting argument: side `n` and split depth `t` with
/// `floor(n/2) <= t <= floor((2n+1)/3)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ClaimParams {
    n: i64,
    t: i64,
}

impl ClaimParams {
    pub fn new(n: i64, t: i64) -> Result<Self> {
        let (lo, hi) = Self::t_range(n);
        if n < 1 || t < lo || t > hi {
            return Err(Error::contract(format!("t = {t} outside [{lo}, {hi}] for n = {n}")));
        }
        Ok(ClaimParams { n, t })
    }

    /// Inclusive `t` range for side `n`.
    pub fn t_range(n: i64) -> (i64, i64) {
        (n.div_euclid(2), (2 * n + 1).div_euclid(3))
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    /// `floor(3t / 2)`
    pub fn big_t(&self) -> i64 {
        (3 * self.t).div_euclid(2)
    }

    /// `n - floor(3t / 2)`
    pub fn r(&self) -> i64 {
        self.n - self.big_t()
    }
}

/// Lower-bound terms for the number of `+1` entries.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim7Terms {
    pub a0: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl Claim7Terms {
    pub fn sum(&self) -> i64 {
        self.a0 + self.a1 + self.a2 + self.a3
    }
}

fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

/// Evaluates the four terms, with the sums indexed by `k = 1..=R`.
pub fn claim7_terms(p: &ClaimParams) -> Claim7Terms {
    let t = p.t;
    let r = p.r();
    let a0 = t * (t - 1) / 2 + floor_half(t) * floor_half(t) + 2 * t * floor_half(t);
    let a1 = 2 * (1..=r).map(|k| floor_half(t + 1 - k)).sum::<i64>();
    let a2 = 2 * (1..=r).map(|k| t - k).sum::<i64>();
    Claim7Terms { a0, a1, a2, a3: r }
}

/// `2 * (a0 + a1 + a2 + a3) > n^2 + 2n` for `12 <= n <= 15` over the whole `t` range.
pub fn verify_claim8() -> VerificationOutcome {
    let start = Instant::now();
    let mut out = VerificationOutcome::new("claim8");
    let mut rows = Vec::new();
    for n in 12..=15 {
        let (lo, hi) = ClaimParams::t_range(n);
        for t in lo..=hi {
            let p = ClaimParams::new(n, t).expect("t in range");
            let terms = claim7_terms(&p);
            let lhs = 2 * terms.sum();
            let rhs = n * n + 2 * n;
            let ok = lhs > rhs;
            out.fail_if(!ok);
            rows.push(json!({ "n": n, "t": t, "sum": terms.sum(), "twice_sum": lhs, "n2_plus_2n": rhs, "ok": ok }));
        }
    }
    out.detail("cases", rows.len());
    out.detail("table", rows);
    out.timed(start)
}

/// `23n^2 - 70n - 77 > 16(n^2 + 2n)` exactly for `16 <= n <= n_max`, failing at 15.
pub fn verify_parabola_bound(n_max: u64) -> Result<VerificationOutcome> {
    if n_max < 16 {
        return Err(Error::contract(format!(
            "parabola sweep needs n_max >= 16, got {n_max}"
        )));
    }
    let start = Instant::now();
    let mut out = VerificationOutcome::new("parabola");
    let holds = |n: i128| 23 * n * n - 70 * n - 77 > 16 * (n * n + 2 * n);
    let gap = |n: i128| 7 * n * n - 102 * n - 77;
    let first_failure = (16..=n_max as i128).find(|&n| !holds(n));
    out.fail_if(first_failure.is_some());
    out.detail("n_max", n_max);
    out.detail("first_failure", first_failure.map(|n| n as i64));
    let fails_at_15 = !holds(15);
    out.fail_if(!fails_at_15);
    out.detail("fails_at_15", fails_at_15);
    out.detail("fails_at_0", !holds(0));
    // difference of the two parabolas, times 32: changes sign in (-1, 0) and (15, 16)
    let crossings = [(-1, 0), (15, 16)].map(|(a, b)| gap(a) > 0 && gap(b) < 0 || gap(a) < 0 && gap(b) > 0);
    out.fail_if(!crossings.iter().all(|&c| c));
    out.detail(
        "gap_at",
        json!({ "-1": gap(-1) as i64, "0": gap(0) as i64, "15": gap(15) as i64, "16": gap(16) as i64 }),
    );
    out.detail("sign_change_-1_0", crossings[0]);
    out.detail("sign_change_15_16", crossings[1]);
    Ok(out.timed(start))
}

/// Closed-form split discrepancy equals the brute-force sum for all `1 <= n <= m <= 12`.
pub fn verify_observation1() -> Result<VerificationOutcome> {
    let start = Instant::now();
    let mut out = VerificationOutcome::new("observation1");
    let mut cases = 0u64;
    for n in 1..=12 {
        for m in n..=12 {
            for t in 0..n + m {
                let formula = split_disc_formula(n, m, t as i64)?;
                let matrix = make_t_split(n, m, t as i64)?;
                let brute: i64 = (1..=n)
                    .flat_map(|i| (1..=m).map(move |j| (i, j)))
                    .map(|(i, j)| matrix.value(i, j))
                    .sum();
                cases += 1;
                if formula != brute {
                    out.fail_if(true);
                    out.witnesses.push(matrix);
                }
            }
        }
    }
    out.detail("cases", cases);
    Ok(out.timed(start))
}

/// Small-discrepancy split matrices: `t in {n-1, n}` with `|disc| = n` on
/// `n x n`, `t = n` with `disc = 0` on `n x (n+1)`, asserted for `4 <= n <= 12`.
/// Sides 1 to 3 are evaluated and recorded only.
pub fn verify_corollary2() -> Result<VerificationOutcome> {
    let start = Instant::now();
    let mut out = VerificationOutcome::new("corollary2");
    for n in 4..=12 {
        out.fail_if(!corollary2_check(n));
    }
    let mut recorded = Map::new();
    for n in 1..=3usize {
        let square: Vec<_> = small_disc_splits(n, n, n as i64)?
            .into_iter()
            .map(|(t, d)| json!([t, d]))
            .collect();
        let almost: Vec<_> = small_disc_splits(n, n + 1, n as i64)?
            .into_iter()
            .map(|(t, d)| json!([t, d]))
            .collect();
        recorded.insert(
            n.to_string(),
            json!({ "holds": corollary2_check(n), "square": square, "almost_square": almost }),
        );
    }
    out.detail("asserted_n", json!([4, 12]));
    out.detail("recorded", recorded);
    Ok(out.timed(start))
}

// `M[h,k;j,l]` is t-split in its own coordinates.
fn block_is_t_split(m: &BinaryMatrix, h: usize, k: usize, j: usize, l: usize, t: usize) -> bool {
    (h..=k).all(|i| (j..=l).all(|c| (m.get(i, c) == Sign::Minus) == ((i - h + 1) + (c - j + 1) <= t + 1)))
}

/// Per-part counters for the block-growth lemma.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Lemma4Counts {
    pub samples: u64,
    pub out_of_contract: u64,
    pub blocks: u64,
    pub hits: [u64; 4],
    pub counterexamples: u64,
}

/// Block growth: for a zero-sum-square-free `M` with at least 5 rows and a
/// `(b+1) x (b+1)` block `M' = M[h,k;j,l]` with `b >= 2`,
/// (a) `M[h+1,k;j,l]` b-split implies `M'` (b+1)-split,
/// (b) `M[h,k;j+1,l]` b-split implies `M'` (b+1)-split,
/// (c) `M[h,k-1;j,l]` b-split implies `M'` b-split,
/// (d) `M[h,k;j,l-1]` b-split implies `M'` b-split.
pub fn property_check_lemma4<'a, I>(samples: I) -> VerificationOutcome
where
    I: IntoIterator<Item = &'a BinaryMatrix>,
{
    let start = Instant::now();
    let mut out = VerificationOutcome::new("lemma4");
    let mut counts = Lemma4Counts::default();
    for m in samples {
        counts.samples += 1;
        if m.rows() < 5 || !m.is_zero_sum_square_free() {
            counts.out_of_contract += 1;
            continue;
        }
        let (n, cols) = m.shape();
        let mut bad = false;
        for b in 2..n.min(cols) {
            for h in 1..=n - b {
                let k = h + b;
                for j in 1..=cols - b {
                    let l = j + b;
                    counts.blocks += 1;
                    let parts = [
                        (block_is_t_split(m, h + 1, k, j, l, b), b + 1),
                        (block_is_t_split(m, h, k, j + 1, l, b), b + 1),
                        (block_is_t_split(m, h, k - 1, j, l, b), b),
                        (block_is_t_split(m, h, k, j, l - 1, b), b),
                    ];
                    for (part, &(hyp, conclusion_t)) in parts.iter().enumerate() {
                        if hyp {
                            counts.hits[part] += 1;
                            if !block_is_t_split(m, h, k, j, l, conclusion_t) {
                                counts.counterexamples += 1;
                                bad = true;
                            }
                        }
                    }
                }
            }
        }
        if bad && out.witnesses.len() < 8 {
            out.witnesses.push(m.clone());
        }
    }
    let total_hits: u64 = counts.hits.iter().sum();
    out.fail_if(counts.counterexamples != 0);
    out.detail("samples", counts.samples);
    out.detail("out_of_contract", counts.out_of_contract);
    out.detail("blocks", counts.blocks);
    out.detail(
        "hits",
        json!({ "a": counts.hits[0], "b": counts.hits[1], "c": counts.hits[2], "d": counts.hits[3] }),
    );
    out.detail("hypothesis_hits", total_hits);
    out.detail("vacuous_blocks", counts.blocks * 4 - total_hits);
    out.detail("counterexamples", counts.counterexamples);
    out.timed(start)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Lemma5Counts {
    pub samples: u64,
    pub out_of_contract: u64,
    pub qualifying_prefixes: u64,
    pub row_clauses: u64,
    pub column_clauses: u64,
    pub vacuous_samples: u64,
    pub counterexamples: u64,
}

fn all_equal(values: impl IntoIterator<Item = Sign>) -> bool {
    let mut it = values.into_iter();
    match it.next() {
        None => true,
        Some(first) => it.all(|v| v == first),
    }
}

// [1, floor((t + l - r + 1) / 2)] together with [r - t + 1, l], clipped to [1, l]
fn lemma5_indices(t: usize, l: usize, r: usize) -> Vec<usize> {
    let first_hi = ((t + l + 1) as i64 - r as i64).div_euclid(2).clamp(0, l as i64) as usize;
    let second_lo = (r as i64 - t as i64 + 1).max(1) as usize;
    let mut idx: Vec<usize> = (1..=first_hi).chain(second_lo..=l).collect();
    idx.sort_unstable();
    idx.dedup();
    idx
}

/// Forced rows and columns next to a split prefix: if `M[1,k;1,l]` is
/// `t`-split with `t < k < n` and `t < l < m`, then for `l < r <= min(t+l-1, n)`
/// the entries `a_{r,i}` agree for `i` in `[1, floor((t+l-r+1)/2)] U [r-t+1, l]`,
/// and symmetrically for columns `k < c <= min(t+k-1, m)`.
pub fn property_check_lemma5<'a, I>(samples: I) -> VerificationOutcome
where
    I: IntoIterator<Item = &'a BinaryMatrix>,
{
    let start = Instant::now();
    let mut out = VerificationOutcome::new("lemma5");
    let mut counts = Lemma5Counts::default();
    for m in samples {
        counts.samples += 1;
        if !m.is_zero_sum_square_free() {
            counts.out_of_contract += 1;
            continue;
        }
        let (n, cols) = m.shape();
        let mut bad = false;
        let mut hit = false;
        for k in 1..n {
            for l in 1..cols {
                for t in 0..k.min(l) {
                    if !block_is_t_split(m, 1, k, 1, l, t) {
                        continue;
                    }
                    counts.qualifying_prefixes += 1;
                    for r in l + 1..=(t + l).saturating_sub(1).min(n) {
                        let idx = lemma5_indices(t, l, r);
                        counts.row_clauses += 1;
                        hit = true;
                        if !all_equal(idx.iter().map(|&i| m.get(r, i))) {
                            counts.counterexamples += 1;
                            bad = true;
                        }
                    }
                    for c in k + 1..=(t + k).saturating_sub(1).min(cols) {
                        let idx = lemma5_indices(t, k, c);
                        counts.column_clauses += 1;
                        hit = true;
                        if !all_equal(idx.iter().map(|&i| m.get(i, c))) {
                            counts.counterexamples += 1;
                            bad = true;
                        }
                    }
                }
            }
        }
        if !hit {
            counts.vacuous_samples += 1;
        }
        if bad && out.witnesses.len() < 8 {
            out.witnesses.push(m.clone());
        }
    }
    out.fail_if(counts.counterexamples != 0);
    out.detail("samples", counts.samples);
    out.detail("out_of_contract", counts.out_of_contract);
    out.detail("qualifying_prefixes", counts.qualifying_prefixes);
    out.detail("row_clauses", counts.row_clauses);
    out.detail("column_clauses", counts.column_clauses);
    out.detail("hypothesis_hits", counts.row_clauses + counts.column_clauses);
    out.detail("vacuous_samples", counts.vacuous_samples);
    out.detail("counterexamples", counts.counterexamples);
    out.timed(start)
}

/// Shapes whose full zero-sum-square-free sets feed the lemma property checks.
pub const LEMMA_SAMPLE_SHAPES: [(usize, usize); 4] = [(5, 5), (5, 6), (6, 5), (6, 6)];

/// Every zero-sum-square-free matrix (any discrepancy) of the
/// [`LEMMA_SAMPLE_SHAPES`].
pub fn lemma_samples(jobs: usize) -> Result<Vec<BinaryMatrix>> {
    let mut out = Vec::new();
    for (rows, cols) in LEMMA_SAMPLE_SHAPES {
        let q = EnumerationQuery::abs_at_most(rows, cols, (rows * cols) as u64).jobs(jobs);
        enumerate(&q, |m| out.push(m.clone()))?;
    }
    Ok(out)
}

/// Named checks the harness can run.
pub const CHECK_NAMES: [&str; 9] = [
    "lemma3",
    "classes",
    "theorem5",
    "observation1",
    "corollary2",
    "claim8",
    "parabola",
    "lemma4",
    "lemma5",
];

/// Upper end of the parabola sweep.
pub const PARABOLA_N_MAX: u64 = 1_000_000;

/// Runs one named check (or `all`). `theorem5_n` restricts the theorem check
/// to a single side; otherwise it runs `5..=max_n` and reports larger sides
/// up to [`FULL_MAX_N`] as skipped.
pub fn run_check(name: &str, cfg: &VerifyConfig, theorem5_n: Option<usize>) -> Result<Vec<VerificationOutcome>> {
    let mut out = Vec::new();
    let mut samples: Option<Vec<BinaryMatrix>> = None;
    let names: Vec<&str> = if name == "all" {
        CHECK_NAMES.to_vec()
    } else {
        vec![name]
    };
    for check in names {
        match check {
            "lemma3" => out.push(verify_lemma3(cfg)?),
            "classes" => out.push(verify_symmetry_classes(cfg.jobs)?),
            "theorem5" => match theorem5_n {
                Some(n) => out.push(verify_theorem5(n, cfg.jobs)?),
                None => {
                    for n in 5..=FULL_MAX_N.max(cfg.max_n) {
                        if n <= cfg.max_n {
                            out.push(verify_theorem5(n, cfg.jobs)?);
                        } else {
                            out.push(VerificationOutcome::skipped(
                                format!("theorem5[n={n}]"),
                                "above the size budget; pass --full to include",
                            ));
                        }
                    }
                }
            },
            "observation1" => out.push(verify_observation1()?),
            "corollary2" => out.push(verify_corollary2()?),
            "claim8" => out.push(verify_claim8()),
            "parabola" => out.push(verify_parabola_bound(PARABOLA_N_MAX)?),
            "lemma4" | "lemma5" => {
                if samples.is_none() {
                    samples = Some(lemma_samples(cfg.jobs)?);
                }
                let s = samples.as_deref().unwrap_or_default();
                out.push(if check == "lemma4" {
                    property_check_lemma4(s)
                } else {
                    property_check_lemma5(s)
                });
            }
            other => return Err(Error::contract(format!("unknown check {other:?}"))),
        }
    }
    Ok(out)
}
