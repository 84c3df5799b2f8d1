use super::{low_bits, BinaryMatrix, Sign};
use crate::error::{Error, Result};

/// Largest side length the incremental search state supports.
pub const MAX_SIDE: usize = 64;

/// Row-major prefix of a matrix under construction.
///
/// Cells are appended with [`push`](Self::push) and removed with
/// [`pop`](Self::pop); there are no random writes. Besides the row bitboards
/// the state keeps column and main-diagonal bitboards so the squares closed
/// by the next placement can be tested with a handful of word operations.
#[derive(Clone, Debug)]
pub struct PartialFill {
    rows: usize,
    cols: usize,
    filled: usize,
    partial_disc: i64,
    // bit c of row_bits[r] is +1 at (r, c)
    row_bits: Vec<u64>,
    // bit r of col_bits[c] is +1 at (r, c)
    col_bits: Vec<u64>,
    // bit r of diag_bits[r - c + cols - 1] is +1 at (r, c)
    diag_bits: Vec<u64>,
}

impl PartialFill {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
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
        Ok(PartialFill {
            rows,
            cols,
            filled: 0,
            partial_disc: 0,
            row_bits: vec![0; rows],
            col_bits: vec![0; cols],
            diag_bits: vec![0; rows + cols - 1],
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn filled(&self) -> usize {
        self.filled
    }

    pub fn remaining(&self) -> usize {
        self.rows * self.cols - self.filled
    }

    pub fn partial_disc(&self) -> i64 {
        self.partial_disc
    }

    pub fn is_complete(&self) -> bool {
        self.remaining() == 0
    }

    /// 1-based coordinates of the next cell to fill.
    pub fn next_cell(&self) -> Option<(usize, usize)> {
        (!self.is_complete()).then(|| (self.filled / self.cols + 1, self.filled % self.cols + 1))
    }

    /// Whether placing `v` at `(r, c)` closes a zero-sum square. `(r, c)` must be
    /// the next row-major cell.
    pub fn completes_zero_sum_square(&self, r: usize, c: usize, v: Sign) -> Result<bool> {
        match self.next_cell() {
            Some(next) if next == (r, c) => Ok(self.completes_next(v)),
            Some(next) => Err(Error::contract(format!(
                "({r}, {c}) is not the next fill position {next:?}"
            ))),
            None => Err(Error::contract("fill is already complete")),
        }
    }

    /// [`completes_zero_sum_square`](Self::completes_zero_sum_square) at the
    /// cursor. The only squares that can close are those whose bottom-right
    /// corner is the cursor.
    #[inline]
    pub fn completes_next(&self, v: Sign) -> bool {
        debug_assert!(!self.is_complete());
        let r = self.filled / self.cols;
        let c = self.filled % self.cols;
        if r == 0 || c == 0 {
            return false;
        }
        // Index candidate squares by their top row k, for k in [lo, r).
        let lo = r.saturating_sub(c);
        let range = low_bits(r) & !low_bits(lo);
        let top_left = self.diag_bits[r + self.cols - 1 - c];
        let top_right = self.col_bits[c];
        let row = self.row_bits[r];
        let bottom_left = if c >= r { row >> (c - r) } else { row << (r - c) };
        let all = top_left & top_right & bottom_left;
        let hits = match v {
            // exactly one other corner is +1
            Sign::Plus => (top_left ^ top_right ^ bottom_left) & !all,
            // exactly two other corners are +1
            Sign::Minus => ((top_left & top_right) | (top_left & bottom_left) | (top_right & bottom_left)) & !all,
        };
        hits & range != 0
    }

    /// Appends `v` at the cursor. Does not check for zero-sum squares.
    #[inline]
    pub fn push(&mut self, v: Sign) {
        assert!(!self.is_complete(), "push on a complete fill");
        let r = self.filled / self.cols;
        let c = self.filled % self.cols;
        if v.is_plus() {
            self.row_bits[r] |= 1 << c;
            self.col_bits[c] |= 1 << r;
            self.diag_bits[r + self.cols - 1 - c] |= 1 << r;
        }
        self.partial_disc += v.value();
        self.filled += 1;
    }

    /// Removes and returns the most recently pushed entry.
    #[inline]
    pub fn pop(&mut self) -> Option<Sign> {
        if self.filled == 0 {
            return None;
        }
        self.filled -= 1;
        let r = self.filled / self.cols;
        let c = self.filled % self.cols;
        let v = Sign::from_bit((self.row_bits[r] >> c) & 1 == 1);
        if v.is_plus() {
            self.row_bits[r] &= !(1 << c);
            self.col_bits[c] &= !(1 << r);
            self.diag_bits[r + self.cols - 1 - c] &= !(1 << r);
        }
        self.partial_disc -= v.value();
        Some(v)
    }

    /// Filled entries in row-major order.
    pub fn entries(&self) -> Vec<Sign> {
        (0..self.filled)
            .map(|k| Sign::from_bit((self.row_bits[k / self.cols] >> (k % self.cols)) & 1 == 1))
            .collect()
    }

    /// The completed matrix, or `None` while cells remain.
    pub fn to_matrix(&self) -> Option<BinaryMatrix> {
        if !self.is_complete() {
            return None;
        }
        BinaryMatrix::from_row_masks(self.cols, &self.row_bits).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Square;

    fn fill_from(rows: usize, cols: usize, entries: &[Sign]) -> PartialFill {
        let mut p = PartialFill::new(rows, cols).unwrap();
        for &e in entries {
            p.push(e);
        }
        p
    }

    // Reference: look at every square with bottom-right corner (r, c) directly.
    fn naive_completes(p: &PartialFill, v: Sign) -> bool {
        let (r, c) = p.next_cell().unwrap();
        let e = p.entries();
        let at = |i: usize, j: usize| e[(i - 1) * p.cols() + (j - 1)].value();
        (1..r.min(c)).any(|s| at(r - s, c - s) + at(r - s, c) + at(r, c - s) + v.value() == 0)
    }

    #[test]
    fn completing_the_first_square() {
        use Sign::*;
        // corners +1, +1, +1 then -1 sum to 2, then +1 sums to 4
        let p = fill_from(2, 2, &[Plus, Plus, Plus]);
        assert!(!p.completes_zero_sum_square(2, 2, Minus).unwrap());
        assert!(!p.completes_zero_sum_square(2, 2, Plus).unwrap());
        let p = fill_from(2, 2, &[Plus, Plus, Minus]);
        assert!(p.completes_zero_sum_square(2, 2, Minus).unwrap());
        assert!(!p.completes_zero_sum_square(2, 2, Plus).unwrap());
    }

    #[test]
    fn wrong_position_is_a_contract_violation() {
        let p = fill_from(2, 2, &[Sign::Plus]);
        assert!(matches!(
            p.completes_zero_sum_square(2, 1, Sign::Plus),
            Err(Error::Contract(_))
        ));
        let full = fill_from(1, 1, &[Sign::Plus]);
        assert!(full.completes_zero_sum_square(1, 1, Sign::Plus).is_err());
    }

    #[test]
    fn running_discrepancy_invariant() {
        let mut p = PartialFill::new(3, 5).unwrap();
        for k in 0..15 {
            p.push(Sign::from_bit(k % 3 != 0));
            assert_eq!(p.partial_disc().rem_euclid(2), (p.filled() % 2) as i64);
            assert!(p.partial_disc().unsigned_abs() as usize <= p.filled());
        }
        let m = p.to_matrix().unwrap();
        assert_eq!(m.discrepancy(), p.partial_disc());
        while p.pop().is_some() {}
        assert_eq!(p.partial_disc(), 0);
        assert_eq!(p.next_cell(), Some((1, 1)));
    }

    #[test]
    fn bitboard_check_matches_naive_on_all_4x4_prefixes() {
        for bits in 0u32..1 << 16 {
            let mut p = PartialFill::new(4, 4).unwrap();
            for k in 0..16 {
                let v = Sign::from_bit((bits >> k) & 1 == 1);
                if k >= 5 {
                    assert_eq!(p.completes_next(v), naive_completes(&p, v), "bits {bits:#x} k {k}");
                }
                p.push(v);
            }
        }
    }

    #[test]
    fn bitboard_check_matches_naive_on_rectangles() {
        // 3x7 and 7x3 exercise both shift directions of the row board.
        for (rows, cols) in [(3, 7), (7, 3), (2, 9)] {
            let n = rows * cols;
            for seed in 0u64..4000 {
                let mut x = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
                let mut p = PartialFill::new(rows, cols).unwrap();
                for _ in 0..n {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    let v = Sign::from_bit(x & 1 == 1);
                    assert_eq!(p.completes_next(v), naive_completes(&p, v));
                    p.push(v);
                }
            }
        }
    }

    #[test]
    fn incremental_rejection_agrees_with_batch_check_4x4() {
        for bits in 0u32..1 << 16 {
            let mut p = PartialFill::new(4, 4).unwrap();
            let mut rejected = false;
            for k in 0..16 {
                let v = Sign::from_bit((bits >> k) & 1 == 1);
                rejected |= p.completes_next(v);
                p.push(v);
            }
            let m = p.to_matrix().unwrap();
            assert_eq!(!rejected, m.is_zero_sum_square_free(), "bits {bits:#x}");
            if let Some(q) = m.find_zero_sum_square() {
                assert_eq!(m.square_disc(&q).unwrap(), 0);
                assert!(q.fits(4, 4));
                let _ = Square::new(q.i, q.j, q.s).unwrap();
            }
        }
    }

    #[test]
    fn rejects_oversized_shapes() {
        assert!(matches!(PartialFill::new(65, 2), Err(Error::TooLarge { .. })));
        assert!(PartialFill::new(64, 64).is_ok());
    }
}
