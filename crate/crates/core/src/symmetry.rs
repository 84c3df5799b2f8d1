//! Rotations, reflections and negation acting on binary matrices, with
//! orbit-minimum canonical forms.
//!
//! A spatial transform is stored as the 2x2 signed permutation `A` acting on
//! doubled centred coordinates: the image `B = g(M)` satisfies `B(p) = M(A p)`.
//! Composition is then a matrix product, `A(g . h) = A(h) A(g)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
#[cfg(test)]
use crate::matrix::Sign;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spatial {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    /// Columns reversed.
    FlipHorizontal,
    /// Rows reversed.
    FlipVertical,
    /// Main-diagonal flip.
    Transpose,
    /// Anti-diagonal flip.
    AntiTranspose,
}

type Linear = [[i64; 2]; 2];

impl Spatial {
    pub const ALL: [Spatial; 8] = [
        Spatial::Identity,
        Spatial::Rot90,
        Spatial::Rot180,
        Spatial::Rot270,
        Spatial::FlipHorizontal,
        Spatial::FlipVertical,
        Spatial::Transpose,
        Spatial::AntiTranspose,
    ];

    /// The transforms that keep an `n x m` shape when `n != m`.
    pub const RECTANGULAR: [Spatial; 4] = [
        Spatial::Identity,
        Spatial::Rot180,
        Spatial::FlipHorizontal,
        Spatial::FlipVertical,
    ];

    fn linear(self) -> Linear {
        match self {
            Spatial::Identity => [[1, 0], [0, 1]],
            Spatial::Rot90 => [[0, -1], [1, 0]],
            Spatial::Rot180 => [[-1, 0], [0, -1]],
            Spatial::Rot270 => [[0, 1], [-1, 0]],
            Spatial::FlipHorizontal => [[1, 0], [0, -1]],
            Spatial::FlipVertical => [[-1, 0], [0, 1]],
            Spatial::Transpose => [[0, 1], [1, 0]],
            Spatial::AntiTranspose => [[0, -1], [-1, 0]],
        }
    }

    fn from_linear(a: Linear) -> Spatial {
        Spatial::ALL
            .into_iter()
            .find(|s| s.linear() == a)
            .expect("signed permutations are closed under products")
    }

    /// Whether this transform swaps the row and column axes.
    pub fn swaps_axes(self) -> bool {
        self.linear()[0][0] == 0
    }

    pub fn valid_for(self, rows: usize, cols: usize) -> bool {
        rows == cols || !self.swaps_axes()
    }

    /// `self` after `other`.
    pub fn compose(self, other: Spatial) -> Spatial {
        let (a, b) = (other.linear(), self.linear());
        let mut c = [[0; 2]; 2];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Spatial::from_linear(c)
    }

    pub fn inverse(self) -> Spatial {
        // signed permutation matrices are orthogonal
        let a = self.linear();
        Spatial::from_linear([[a[0][0], a[1][0]], [a[0][1], a[1][1]]])
    }

    pub fn apply(self, m: &BinaryMatrix) -> Result<BinaryMatrix> {
        let (rows, cols) = m.shape();
        if !self.valid_for(rows, cols) {
            return Err(Error::contract(format!(
                "{self} needs a square matrix, got {rows}x{cols}"
            )));
        }
        let a = self.linear();
        let (out_rows, out_cols) = if self.swaps_axes() { (cols, rows) } else { (rows, cols) };
        BinaryMatrix::from_fn(out_rows, out_cols, |i, j| {
            let x = 2 * i as i64 - (out_rows as i64 + 1);
            let y = 2 * j as i64 - (out_cols as i64 + 1);
            let sx = a[0][0] * x + a[0][1] * y;
            let sy = a[1][0] * x + a[1][1] * y;
            let si = (sx + rows as i64 + 1) / 2;
            let sj = (sy + cols as i64 + 1) / 2;
            m.get(si as usize, sj as usize)
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Spatial::Identity => "identity",
            Spatial::Rot90 => "rot90",
            Spatial::Rot180 => "rot180",
            Spatial::Rot270 => "rot270",
            Spatial::FlipHorizontal => "flip-horizontal",
            Spatial::FlipVertical => "flip-vertical",
            Spatial::Transpose => "transpose",
            Spatial::AntiTranspose => "anti-transpose",
        }
    }
}

impl fmt::Display for Spatial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A spatial transform optionally followed by entrywise negation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub spatial: Spatial,
    pub negate: bool,
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement {
        spatial: Spatial::Identity,
        negate: false,
    };

    pub const fn new(spatial: Spatial, negate: bool) -> Self {
        SymmetryElement { spatial, negate }
    }

    /// `self` after `other`. Negation commutes with every spatial transform.
    pub fn compose(self, other: SymmetryElement) -> SymmetryElement {
        SymmetryElement {
            spatial: self.spatial.compose(other.spatial),
            negate: self.negate ^ other.negate,
        }
    }

    pub fn inverse(self) -> SymmetryElement {
        SymmetryElement {
            spatial: self.spatial.inverse(),
            negate: self.negate,
        }
    }

    pub fn valid_for(self, rows: usize, cols: usize) -> bool {
        self.spatial.valid_for(rows, cols)
    }

    pub fn apply(self, m: &BinaryMatrix) -> Result<BinaryMatrix> {
        let out = self.spatial.apply(m)?;
        Ok(if self.negate { out.negate() } else { out })
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negate {
            write!(f, "-{}", self.spatial)
        } else {
            write!(f, "{}", self.spatial)
        }
    }
}

/// The symmetry group of an `rows x cols` shape: 16 elements when square, 8 otherwise.
pub fn group(rows: usize, cols: usize) -> Vec<SymmetryElement> {
    let spatial: &[Spatial] = if rows == cols {
        &Spatial::ALL
    } else {
        &Spatial::RECTANGULAR
    };
    [false, true]
        .into_iter()
        .flat_map(|negate| spatial.iter().map(move |&s| SymmetryElement::new(s, negate)))
        .collect()
}

/// Every image of `m` under its shape's group, with repeats.
pub fn orbit_images(m: &BinaryMatrix) -> Vec<BinaryMatrix> {
    group(m.rows(), m.cols())
        .into_iter()
        .map(|g| g.apply(m).expect("group elements fit the shape"))
        .collect()
}

/// Lexicographically smallest image of `m` under its shape's group.
pub fn canonical_form(m: &BinaryMatrix) -> BinaryMatrix {
    orbit_images(m).into_iter().min().expect("group is non-empty")
}

/// Size of the orbit of `m`.
pub fn orbit_size(m: &BinaryMatrix) -> usize {
    let mut images = orbit_images(m);
    images.sort();
    images.dedup();
    images.len()
}

/// One canonical representative per orbit, sorted. All inputs must share a shape.
pub fn dedup<'a, I>(ms: I) -> Result<Vec<BinaryMatrix>>
where
    I: IntoIterator<Item = &'a BinaryMatrix>,
{
    let mut shape = None;
    let mut reps = Vec::new();
    for m in ms {
        match shape {
            None => shape = Some(m.shape()),
            Some(s) if s != m.shape() => {
                return Err(Error::contract(format!(
                    "dedup over mixed shapes {}x{} and {}x{}",
                    s.0,
                    s.1,
                    m.rows(),
                    m.cols()
                )));
            }
            Some(_) => {}
        }
        reps.push(canonical_form(m));
    }
    reps.sort();
    reps.dedup();
    Ok(reps)
}

/// A square matrix with a trivial stabiliser (orbit of size 16 for `n >= 3`).
#[cfg(test)]
pub(crate) fn asymmetric_probe(n: usize) -> BinaryMatrix {
    BinaryMatrix::from_fn(n, n, |i, j| Sign::from_bit(j == 1 || (i == 1 && j == 2))).expect("n >= 1")
}
