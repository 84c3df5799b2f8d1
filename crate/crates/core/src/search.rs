//! Exact backtracking enumeration of zero-sum-square-free matrices.
//!
//! Cells are filled in row-major order trying `-1` before `+1`, so matrices
//! come out in lexicographic order. A branch is cut only when the placement
//! closes a zero-sum square, or when no completion of the remaining cells can
//! meet the discrepancy constraint. Nothing else is pruned; in particular no
//! symmetry reduction happens here.
//!
//! Parallel runs expand the first few cells (at most one row) into subtree
//! roots, search each root independently, and hand results to the sink in
//! root order. Output is identical for every worker count.
//!
//! Practical envelope: shapes up to about 11x12 finish in minutes per
//! discrepancy value; the bitboards cap each side at [`MAX_SIDE`].

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, PartialFill, Sign, MAX_SIDE};
use crate::split::SplitClassifier;

/// Default number of leading cells expanded into parallel subtree roots.
pub const DEFAULT_PREFIX_CELLS: usize = 8;

/// Largest cell count the brute-force oracle accepts.
pub const ORACLE_MAX_CELLS: usize = 20;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum DiscConstraint {
    /// `disc == d`
    Exact(i64),
    /// `|disc| <= b`
    AbsAtMost(u64),
}

impl DiscConstraint {
    pub fn admits(self, disc: i64) -> bool {
        match self {
            DiscConstraint::Exact(d) => disc == d,
            DiscConstraint::AbsAtMost(b) => disc.unsigned_abs() <= b,
        }
    }

    /// Inclusive range of reachable target values with the right parity for
    /// `cells` entries, or `None` when nothing can satisfy the constraint.
    fn target_interval(self, cells: usize) -> Option<(i64, i64)> {
        let total = cells as i64;
        let parity = total.rem_euclid(2);
        match self {
            DiscConstraint::Exact(d) => (d.abs() <= total && d.rem_euclid(2) == parity).then_some((d, d)),
            DiscConstraint::AbsAtMost(b) => {
                let mut b = b.min(total as u64) as i64;
                if b.rem_euclid(2) != parity {
                    b -= 1;
                }
                (b >= 0).then_some((-b, b))
            }
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Emit {
    Matrices,
    CountOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub rows: usize,
    pub cols: usize,
    pub disc: DiscConstraint,
    pub require_zssf: bool,
    pub emit: Emit,
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
    /// Leading cells expanded into subtree roots (capped at one row).
    pub prefix_cells: usize,
}

impl EnumerationQuery {
    pub fn new(rows: usize, cols: usize, disc: DiscConstraint) -> Self {
        EnumerationQuery {
            rows,
            cols,
            disc,
            require_zssf: true,
            emit: Emit::Matrices,
            jobs: 1,
            prefix_cells: DEFAULT_PREFIX_CELLS,
        }
    }

    pub fn exact(rows: usize, cols: usize, d: i64) -> Self {
        Self::new(rows, cols, DiscConstraint::Exact(d))
    }

    pub fn abs_at_most(rows: usize, cols: usize, b: u64) -> Self {
        Self::new(rows, cols, DiscConstraint::AbsAtMost(b))
    }

    pub fn count_only(mut self) -> Self {
        self.emit = Emit::CountOnly;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn prefix_cells(mut self, cells: usize) -> Self {
        self.prefix_cells = cells;
        self
    }

    pub fn require_zssf(mut self, on: bool) -> Self {
        self.require_zssf = on;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub rows: usize,
    pub cols: usize,
    pub total: u64,
    pub per_disc: BTreeMap<i64, u64>,
    pub split_count: u64,
    pub exceptional_count: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EnumerationReport {
    fn absorb(&mut self, part: &Tally) {
        self.total += part.total;
        self.split_count += part.split;
        self.exceptional_count += part.total - part.split;
        for (&d, &c) in &part.per_disc {
            *self.per_disc.entry(d).or_default() += c;
        }
    }
}

#[derive(Default)]
struct Tally {
    total: u64,
    split: u64,
    per_disc: BTreeMap<i64, u64>,
}

struct Subtree {
    tally: Tally,
    matrices: Vec<BinaryMatrix>,
}

struct Searcher<'a> {
    require_zssf: bool,
    lo: i64,
    hi: i64,
    keep: bool,
    classifier: &'a SplitClassifier,
}

impl Searcher<'_> {
    #[inline]
    fn feasible(&self, fill: &PartialFill) -> bool {
        let p = fill.partial_disc();
        let r = fill.remaining() as i64;
        p - r <= self.hi && p + r >= self.lo
    }

    #[inline]
    fn allowed(&self, fill: &PartialFill, v: Sign) -> bool {
        !(self.require_zssf && fill.completes_next(v))
    }

    fn run(&self, fill: &mut PartialFill, out: &mut Subtree) {
        if fill.is_complete() {
            self.leaf(fill, out);
            return;
        }
        for v in Sign::BOTH {
            if !self.allowed(fill, v) {
                continue;
            }
            fill.push(v);
            if self.feasible(fill) {
                self.run(fill, out);
            }
            fill.pop();
        }
    }

    fn leaf(&self, fill: &PartialFill, out: &mut Subtree) {
        let m = fill.to_matrix().expect("complete fill");
        let d = fill.partial_disc();
        out.tally.total += 1;
        *out.tally.per_disc.entry(d).or_default() += 1;
        if self.classifier.classify(&m).is_some() {
            out.tally.split += 1;
        }
        if self.keep {
            out.matrices.push(m);
        }
    }

    /// Lexicographically ordered, feasible prefixes of length `depth`.
    fn roots(&self, fill: &mut PartialFill, depth: usize, acc: &mut Vec<Vec<Sign>>) {
        if fill.filled() == depth {
            acc.push(fill.entries());
            return;
        }
        for v in Sign::BOTH {
            if !self.allowed(fill, v) {
                continue;
            }
            fill.push(v);
            if self.feasible(fill) {
                self.roots(fill, depth, acc);
            }
            fill.pop();
        }
    }
}

/// Streams every matching matrix to `sink` in lexicographic order and returns
/// the tally. In count-only mode the sink is never called.
pub fn enumerate<F>(query: &EnumerationQuery, mut sink: F) -> Result<EnumerationReport>
where
    F: FnMut(&BinaryMatrix),
{
    let start = Instant::now();
    let EnumerationQuery { rows, cols, .. } = *query;
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyShape { rows, cols });
    }
    if rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(Error::TooLarge {
            rows,
            cols,
            max: MAX_SIDE,
        });
    }
    let mut report = EnumerationReport {
        rows,
        cols,
        ..Default::default()
    };
    let Some((lo, hi)) = query.disc.target_interval(rows * cols) else {
        report.elapsed = start.elapsed();
        return Ok(report);
    };
    let classifier = SplitClassifier::new(rows, cols)?;
    let searcher = Searcher {
        require_zssf: query.require_zssf,
        lo,
        hi,
        keep: query.emit == Emit::Matrices,
        classifier: &classifier,
    };

    let mut deliver = |part: Subtree, report: &mut EnumerationReport| {
        report.absorb(&part.tally);
        for m in &part.matrices {
            sink(m);
        }
    };

    let jobs = query.jobs.max(1);
    if jobs == 1 {
        let mut fill = PartialFill::new(rows, cols)?;
        let mut part = Subtree {
            tally: Tally::default(),
            matrices: Vec::new(),
        };
        if searcher.feasible(&fill) {
            searcher.run(&mut fill, &mut part);
        }
        deliver(part, &mut report);
    } else {
        let depth = query.prefix_cells.min(cols).min(rows * cols);
        let mut fill = PartialFill::new(rows, cols)?;
        let mut roots = Vec::new();
        if searcher.feasible(&fill) {
            searcher.roots(&mut fill, depth, &mut roots);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::contract(format!("cannot start worker pool: {e}")))?;
        // Count-only results are tiny, so hand the whole root list to the pool.
        // Materialised runs go window by window to bound buffered output.
        let window = match query.emit {
            Emit::CountOnly => roots.len().max(1),
            Emit::Matrices => jobs * 4,
        };
        for chunk in roots.chunks(window) {
            let parts: Vec<Subtree> = pool.install(|| {
                chunk
                    .par_iter()
                    .map(|prefix| {
                        let mut fill = PartialFill::new(rows, cols).expect("shape checked");
                        for &v in prefix {
                            fill.push(v);
                        }
                        let mut part = Subtree {
                            tally: Tally::default(),
                            matrices: Vec::new(),
                        };
                        searcher.run(&mut fill, &mut part);
                        part
                    })
                    .collect()
            });
            for part in parts {
                deliver(part, &mut report);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs `query` and collects the emitted matrices (forces matrix emission).
pub fn enumerate_collect(query: &EnumerationQuery) -> Result<(Vec<BinaryMatrix>, EnumerationReport)> {
    let mut q = query.clone();
    q.emit = Emit::Matrices;
    let mut out = Vec::new();
    let report = enumerate(&q, |m| out.push(m.clone()))?;
    Ok((out, report))
}

/// Brute-force pass over all `2^(rows*cols)` matrices, lexicographic order,
/// keeping those accepted by `predicate`. Refuses more than
/// [`ORACLE_MAX_CELLS`] cells.
pub fn all_unpruned<P>(rows: usize, cols: usize, mut predicate: P) -> Result<Vec<BinaryMatrix>>
where
    P: FnMut(&BinaryMatrix) -> bool,
{
    let mut out = Vec::new();
    for_each_unpruned(rows, cols, |m| {
        if predicate(&m) {
            out.push(m);
        }
    })?;
    Ok(out)
}

/// Count of matrices accepted by `predicate` among all `2^(rows*cols)`.
pub fn count_all_unpruned<P>(rows: usize, cols: usize, mut predicate: P) -> Result<u64>
where
    P: FnMut(&BinaryMatrix) -> bool,
{
    let mut n = 0;
    for_each_unpruned(rows, cols, |m| n += predicate(&m) as u64)?;
    Ok(n)
}

fn for_each_unpruned(rows: usize, cols: usize, mut f: impl FnMut(BinaryMatrix)) -> Result<()> {
    let cells = rows * cols;
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyShape { rows, cols });
    }
    if cells > ORACLE_MAX_CELLS {
        return Err(Error::OracleCap {
            cells,
            cap: ORACLE_MAX_CELLS,
        });
    }
    // cell k (row-major) is bit cells-1-k, so counting upward walks lexicographic order
    for code in 0u64..1 << cells {
        let m = BinaryMatrix::from_fn(rows, cols, |i, j| {
            let k = (i - 1) * cols + (j - 1);
            Sign::from_bit((code >> (cells - 1 - k)) & 1 == 1)
        })?;
        f(m);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_zero_sum_is_empty() {
        let (ms, r) = enumerate_collect(&EnumerationQuery::exact(2, 2, 0)).unwrap();
        assert!(ms.is_empty());
        assert_eq!(r.total, 0);
    }

    #[test]
    fn oracle_trivial_count() {
        assert_eq!(count_all_unpruned(2, 2, |_| true).unwrap(), 16);
        assert!(matches!(
            count_all_unpruned(3, 7, |_| true),
            Err(Error::OracleCap { .. })
        ));
    }

    #[test]
    fn three_by_three_disc_one_matches_oracle() {
        let q = EnumerationQuery::exact(3, 3, 1);
        let (ms, r) = enumerate_collect(&q).unwrap();
        let oracle = all_unpruned(3, 3, |m| m.is_zero_sum_square_free() && m.discrepancy() == 1).unwrap();
        assert_eq!(ms, oracle);
        assert_eq!(r.total, oracle.len() as u64);
    }

    #[test]
    fn parity_mismatch_is_empty() {
        let r = enumerate(&EnumerationQuery::exact(3, 3, 2), |_| panic!("nothing to emit")).unwrap();
        assert_eq!(r.total, 0);
        let r = enumerate(&EnumerationQuery::exact(3, 3, 11), |_| panic!("nothing to emit")).unwrap();
        assert_eq!(r.total, 0);
        // |disc| <= 0 on an odd cell count has no solutions
        let r = enumerate(&EnumerationQuery::abs_at_most(3, 3, 0), |_| panic!("nothing to emit")).unwrap();
        assert_eq!(r.total, 0);
    }

    #[test]
    fn unconstrained_without_square_check_counts_everything() {
        let q = EnumerationQuery::abs_at_most(3, 4, 12).require_zssf(false).count_only();
        let r = enumerate(&q, |_| {}).unwrap();
        assert_eq!(r.total, 1 << 12);
        assert_eq!(r.per_disc.values().sum::<u64>(), 1 << 12);
        assert_eq!(r.per_disc[&0], 924);
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let (ms, _) = enumerate_collect(&EnumerationQuery::abs_at_most(4, 4, 16)).unwrap();
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parallel_matches_sequential() {
        for (rows, cols, b) in [(4, 5, 8), (5, 5, 10), (3, 6, 4), (6, 2, 12)] {
            let seq = enumerate_collect(&EnumerationQuery::abs_at_most(rows, cols, b)).unwrap();
            for jobs in [2, 3, 8] {
                for prefix in [1, 3, 8] {
                    let q = EnumerationQuery::abs_at_most(rows, cols, b)
                        .jobs(jobs)
                        .prefix_cells(prefix);
                    let par = enumerate_collect(&q).unwrap();
                    assert_eq!(par.0, seq.0);
                    assert_eq!(
                        (par.1.total, par.1.split_count, &par.1.per_disc),
                        (seq.1.total, seq.1.split_count, &seq.1.per_disc)
                    );
                }
            }
        }
    }

    #[test]
    fn report_partitions() {
        let r = enumerate(&EnumerationQuery::abs_at_most(5, 5, 10).count_only(), |_| {}).unwrap();
        assert_eq!(r.total, r.split_count + r.exceptional_count);
        assert_eq!(r.total, r.per_disc.values().sum::<u64>());
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(matches!(
            enumerate(&EnumerationQuery::exact(65, 2, 0), |_| {}),
            Err(Error::TooLarge { .. })
        ));
    }
}
