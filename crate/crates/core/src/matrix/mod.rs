//! Bit-packed `{-1, +1}` matrices, discrepancy, and square detection.
//!
//! Every public coordinate is 1-based: `(i, j)` addresses row `i`, column `j`
//! with `1 <= i <= rows` and `1 <= j <= cols`.

mod fill;
mod text;

use std::cmp::Ordering;
use std::fmt;

pub use fill::{PartialFill, MAX_SIDE};

use crate::error::{Error, Result};

/// One matrix entry. `Minus` orders before `Plus`, which is the enumeration order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    #[inline]
    pub fn negate(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    #[inline]
    pub fn from_bit(bit: bool) -> Sign {
        if bit {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// Immutable `rows x cols` matrix over `{-1, +1}`.
///
/// Storage is one bit per cell (`+1` is a set bit), row-major, with every row
/// starting on a fresh `u64` word. Bits past the last column are always zero so
/// derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BinaryMatrix {
    /// Builds a matrix from a function of 1-based `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Sign) -> Result<Self> {
        let mut m = Self::blank(rows, cols)?;
        for i in 1..=rows {
            for j in 1..=cols {
                if f(i, j).is_plus() {
                    m.set_plus(i - 1, j - 1);
                }
            }
        }
        Ok(m)
    }

    pub fn constant(rows: usize, cols: usize, sign: Sign) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| sign)
    }

    /// Builds a matrix from one `+1` bitmask per row (bit `j - 1` is column `j`).
    pub fn from_row_masks(cols: usize, masks: &[u64]) -> Result<Self> {
        if cols > 64 {
            return Err(Error::contract("row masks hold at most 64 columns"));
        }
        let mut m = Self::blank(masks.len(), cols)?;
        let keep = low_bits(cols);
        for (w, &mask) in m.words.iter_mut().zip(masks) {
            if mask & !keep != 0 {
                return Err(Error::contract(format!(
                    "row mask {mask:#x} has bits past column {cols}"
                )));
            }
            *w = mask;
        }
        Ok(m)
    }

    fn blank(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyShape { rows, cols });
        }
        let stride = cols.div_ceil(64);
        Ok(BinaryMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        })
    }

    #[inline]
    fn set_plus(&mut self, r: usize, c: usize) {
        self.words[r * self.stride + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    fn bit(&self, r: usize, c: usize) -> bool {
        (self.words[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    /// Entry `a_{i,j}`. Panics when `(i, j)` is out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Sign {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "cell ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        Sign::from_bit(self.bit(i - 1, j - 1))
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<Sign> {
        if (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j) {
            Ok(Sign::from_bit(self.bit(i - 1, j - 1)))
        } else {
            Err(Error::CellOutOfRange {
                i,
                j,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Entry as an integer, `-1` or `+1`.
    #[inline]
    pub fn value(&self, i: usize, j: usize) -> i64 {
        self.get(i, j).value()
    }

    /// `+1` bitmask of row `i` (1-based). Only meaningful when `cols <= 64`.
    pub fn row_mask(&self, i: usize) -> u64 {
        debug_assert!(self.cols <= 64);
        self.words[(i - 1) * self.stride]
    }

    /// Number of `+1` entries.
    pub fn count_plus(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of `-1` entries.
    pub fn count_minus(&self) -> usize {
        self.cells() - self.count_plus()
    }

    /// Sum of all entries.
    pub fn discrepancy(&self) -> i64 {
        2 * self.count_plus() as i64 - self.cells() as i64
    }

    /// Sum of the four corners of `square`.
    pub fn square_disc(&self, square: &Square) -> Result<i64> {
        if !square.fits(self.rows, self.cols) {
            return Err(Error::SquareOutOfRange {
                i: square.i,
                j: square.j,
                s: square.s,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(square.corners().iter().map(|&(i, j)| self.value(i, j)).sum())
    }

    /// First zero-sum square in (i, j, s) order, if any.
    pub fn find_zero_sum_square(&self) -> Option<Square> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let corner = self.bit(i, j);
                for s in 1..self.rows.min(self.cols) {
                    if i + s >= self.rows || j + s >= self.cols {
                        break;
                    }
                    let plus = corner as u8
                        + self.bit(i, j + s) as u8
                        + self.bit(i + s, j) as u8
                        + self.bit(i + s, j + s) as u8;
                    if plus == 2 {
                        return Some(Square { i: i + 1, j: j + 1, s });
                    }
                }
            }
        }
        None
    }

    /// True iff no square has corner sum zero.
    pub fn is_zero_sum_square_free(&self) -> bool {
        self.find_zero_sum_square().is_none()
    }

    /// Entrywise negation.
    pub fn negate(&self) -> BinaryMatrix {
        let mut out = self.clone();
        let keep = low_bits_tail(self.cols);
        for r in 0..self.rows {
            for w in 0..self.stride {
                let idx = r * self.stride + w;
                let mask = if w + 1 == self.stride { keep } else { u64::MAX };
                out.words[idx] = !self.words[idx] & mask;
            }
        }
        out
    }

    /// The block `M[h,k;j,l]`: rows `h..=k`, columns `j..=l`.
    pub fn block(&self, h: usize, k: usize, j: usize, l: usize) -> Result<BinaryMatrix> {
        if h < 1 || h > k || k > self.rows || j < 1 || j > l || l > self.cols {
            return Err(Error::contract(format!(
                "block [{h},{k};{j},{l}] does not fit a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        BinaryMatrix::from_fn(k - h + 1, l - j + 1, |i, c| self.get(h + i - 1, j + c - 1))
    }

    /// Entries as `'+'`/`'-'` strings, one per row.
    pub fn row_strings(&self) -> Vec<String> {
        (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.get(i, j).symbol()).collect())
            .collect()
    }

    /// Renders the text format: header line, then one line per row.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity((self.cols + 1) * (self.rows + 1) + 8);
        s.push_str(&format!("{} {}\n", self.rows, self.cols));
        for row in self.row_strings() {
            s.push_str(&row);
            s.push('\n');
        }
        s
    }

    /// Parses the text format. See [`text`](self) for the grammar.
    pub fn parse(input: &str) -> Result<BinaryMatrix, crate::error::ParseError> {
        text::parse(input)
    }
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// mask for the last word of a row
fn low_bits_tail(cols: usize) -> u64 {
    match cols % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

impl Ord for BinaryMatrix {
    /// Shape first, then row-major entries with `-1 < +1`.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols).cmp(&(other.rows, other.cols)).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BinaryMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{}", self.rows, self.cols)?;
        for row in self.row_strings() {
            write!(f, " {row}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for BinaryMatrix {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

/// Axis-aligned square with corners `(i, j)`, `(i, j+s)`, `(i+s, j)`, `(i+s, j+s)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub i: usize,
    pub j: usize,
    pub s: usize,
}

impl Square {
    pub fn new(i: usize, j: usize, s: usize) -> Result<Square> {
        if i == 0 || j == 0 || s == 0 {
            return Err(Error::contract(format!(
                "square ({i}, {j}, s={s}) needs 1-based corner and s >= 1"
            )));
        }
        Ok(Square { i, j, s })
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.i >= 1 && self.j >= 1 && self.s >= 1 && self.i + self.s <= rows && self.j + self.s <= cols
    }

    pub fn corners(&self) -> [(usize, usize); 4] {
        let Square { i, j, s } = *self;
        [(i, j), (i, j + s), (i + s, j), (i + s, j + s)]
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i={}, j={}, s={})", self.i, self.j, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&str]) -> BinaryMatrix {
        let cols = rows[0].len();
        BinaryMatrix::from_fn(rows.len(), cols, |i, j| {
            if rows[i - 1].as_bytes()[j - 1] == b'+' {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .unwrap()
    }

    fn checkerboard_even_minus(n: usize) -> BinaryMatrix {
        BinaryMatrix::from_fn(n, n, |i, j| {
            if i % 2 == 0 && j % 2 == 0 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .unwrap()
    }

    #[test]
    fn constant_discrepancy() {
        assert_eq!(BinaryMatrix::constant(3, 4, Sign::Plus).unwrap().discrepancy(), 12);
        assert_eq!(BinaryMatrix::constant(3, 4, Sign::Minus).unwrap().discrepancy(), -12);
    }

    #[test]
    fn discrepancy_matches_counting_identities() {
        // 15 plus, 10 minus, scattered
        let mut k = 0;
        let m = BinaryMatrix::from_fn(5, 5, |_, _| {
            k += 1;
            if k % 5 == 0 || k % 5 == 2 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .unwrap();
        let direct: i64 = (1..=5)
            .flat_map(|i| (1..=5).map(move |j| (i, j)))
            .map(|(i, j)| m.value(i, j))
            .sum();
        assert_eq!(m.count_plus(), 15);
        assert_eq!(direct, 5);
        assert_eq!(m.discrepancy(), 5);
        assert_eq!(m.discrepancy(), 2 * 15 - 25);
        assert_eq!(m.discrepancy(), 25 - 2 * m.count_minus() as i64);
    }

    #[test]
    fn square_disc_values() {
        let m = from_rows(&["++", "--"]);
        let q = Square::new(1, 1, 1).unwrap();
        assert_eq!(m.square_disc(&q).unwrap(), 0);
        assert_eq!(from_rows(&["++", "+-"]).square_disc(&q).unwrap(), 2);
        assert_eq!(from_rows(&["--", "--"]).square_disc(&q).unwrap(), -4);
    }

    #[test]
    fn square_disc_out_of_range() {
        let m = BinaryMatrix::constant(3, 3, Sign::Plus).unwrap();
        let err = m.square_disc(&Square { i: 2, j: 1, s: 2 }).unwrap_err();
        assert!(matches!(err, Error::SquareOutOfRange { .. }));
        assert!(Square::new(0, 1, 1).is_err());
        assert!(Square::new(1, 1, 0).is_err());
    }

    #[test]
    fn two_by_two_diagonal_is_zero_sum() {
        let m = from_rows(&["+-", "-+"]);
        assert!(!m.is_zero_sum_square_free());
        assert_eq!(m.find_zero_sum_square(), Some(Square { i: 1, j: 1, s: 1 }));
    }

    #[test]
    fn even_even_minus_pattern_is_free() {
        let m = checkerboard_even_minus(6);
        assert!(m.is_zero_sum_square_free());
        assert_eq!(m.discrepancy(), 36 - 2 * 9);
        for n in [4, 8, 10] {
            let m = checkerboard_even_minus(n);
            assert!(m.is_zero_sum_square_free());
            assert_eq!(m.discrepancy() as usize, n * n / 2);
        }
    }

    #[test]
    fn lexicographic_order_minus_first() {
        let a = from_rows(&["-+", "++"]);
        let b = from_rows(&["+-", "--"]);
        assert!(a < b);
        let c = from_rows(&["+-", "-+"]);
        assert!(b < c);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn negate_keeps_padding_clear() {
        let m = BinaryMatrix::constant(2, 70, Sign::Minus).unwrap();
        let n = m.negate();
        assert_eq!(n, BinaryMatrix::constant(2, 70, Sign::Plus).unwrap());
        assert_eq!(n.count_plus(), 140);
        assert_eq!(n.negate(), m);
    }

    #[test]
    fn wide_matrix_order_spans_words() {
        let a = BinaryMatrix::from_fn(1, 100, |_, j| Sign::from_bit(j == 80)).unwrap();
        let b = BinaryMatrix::from_fn(1, 100, |_, j| Sign::from_bit(j == 90)).unwrap();
        assert!(b < a);
    }

    #[test]
    fn block_extraction() {
        let m = from_rows(&["+--", "-+-", "--+"]);
        let b = m.block(2, 3, 2, 3).unwrap();
        assert_eq!(b, from_rows(&["+-", "-+"]));
        assert!(m.block(2, 4, 1, 1).is_err());
    }

    #[test]
    fn empty_shape_rejected() {
        assert_eq!(
            BinaryMatrix::constant(0, 3, Sign::Plus).unwrap_err(),
            Error::EmptyShape { rows: 0, cols: 3 }
        );
    }
}
