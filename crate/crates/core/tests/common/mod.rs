//! Reference implementations written directly from the definitions, sharing
//! nothing with the library beyond the matrix container.

#![allow(dead_code)]

use std::collections::BTreeSet;

use zss::{BinaryMatrix, Sign};

/// Plain row-major ±1 grid.
pub type Grid = Vec<Vec<i8>>;

pub fn grid_of(m: &BinaryMatrix) -> Grid {
    (1..=m.rows())
        .map(|i| (1..=m.cols()).map(|j| m.value(i, j) as i8).collect())
        .collect()
}

pub fn matrix_of(g: &Grid) -> BinaryMatrix {
    BinaryMatrix::from_fn(g.len(), g[0].len(), |i, j| Sign::from_bit(g[i - 1][j - 1] > 0)).unwrap()
}

pub fn disc(g: &Grid) -> i64 {
    g.iter().flatten().map(|&v| v as i64).sum()
}

pub fn has_zero_sum_square(g: &Grid) -> bool {
    let (n, m) = (g.len(), g[0].len());
    for i in 0..n {
        for j in 0..m {
            for s in 1..n.min(m) {
                if i + s < n && j + s < m && g[i][j] + g[i + s][j] + g[i][j + s] + g[i + s][j + s] == 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// Every n x m grid, cell k of the row-major order taken from bit k.
pub fn all_grids(n: usize, m: usize) -> impl Iterator<Item = Grid> {
    assert!(n * m <= 24);
    (0u64..1 << (n * m)).map(move |bits| {
        (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| if bits >> (i * m + j) & 1 == 1 { 1 } else { -1 })
                    .collect()
            })
            .collect()
    })
}

pub fn t_split(n: usize, m: usize, t: usize) -> Grid {
    (1..=n)
        .map(|i| (1..=m).map(|j| if i + j <= t + 1 { -1 } else { 1 }).collect())
        .collect()
}

pub fn negated(g: &Grid) -> Grid {
    g.iter().map(|r| r.iter().map(|v| -v).collect()).collect()
}

pub fn reversed_cols(g: &Grid) -> Grid {
    g.iter().map(|r| r.iter().rev().copied().collect()).collect()
}

pub fn reversed_rows(g: &Grid) -> Grid {
    g.iter().rev().cloned().collect()
}

pub fn transposed(g: &Grid) -> Grid {
    (0..g[0].len()).map(|j| g.iter().map(|r| r[j]).collect()).collect()
}

/// Split by definition: some variant of the grid is a t-split.
pub fn is_split(g: &Grid) -> bool {
    let (n, m) = (g.len(), g[0].len());
    let variants = [g.clone(), negated(g), reversed_cols(g), reversed_rows(g)];
    (0..=n + m - 1).any(|t| {
        let s = t_split(n, m, t);
        variants.contains(&s)
    })
}

/// Orbit under row/column reversal, transposition (square only) and negation.
pub fn orbit(g: &Grid) -> BTreeSet<Grid> {
    let mut seen = BTreeSet::new();
    let mut todo = vec![g.clone()];
    let square = g.len() == g[0].len();
    while let Some(x) = todo.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        todo.push(negated(&x));
        todo.push(reversed_cols(&x));
        todo.push(reversed_rows(&x));
        if square {
            todo.push(transposed(&x));
        }
    }
    seen
}

/// Least orbit member, comparing row by row with -1 < +1.
pub fn canonical(g: &Grid) -> Grid {
    orbit(g).into_iter().next().unwrap()
}
