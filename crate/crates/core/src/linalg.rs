//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rat;

/// Row-reduces `m` in place and returns the pivot columns.
fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Affine rank of a point set: dimension of its affine hull, or `None` for the empty set.
pub fn affine_dim(points: &[&[Rat]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<Rat>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs))
}

/// A nonzero vector spanning the kernel of `rows` (an `(n-1) x n` system of rank
/// `n-1`), or `None` when the kernel is not one-dimensional.
pub fn kernel_line(rows: &[Vec<Rat>], n: usize) -> Option<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rat::zero(); n];
    v[free] = Rat::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][free].clone();
    }
    Some(v)
}

/// Determinant by fraction-exact elimination.
pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let pivot = m[c][c].clone();
        d *= &pivot;
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, y) in row[c..n].iter_mut().zip(&pivot_row[c..n]) {
                *x -= &f * y;
            }
        }
    }
    d
}

/// Solves the square system `a x = b`; `None` if `a` is singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinant() {
        assert_eq!(det(&m(&[&[2, 1], &[1, 3]])), int(5));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), int(0));
        assert_eq!(det(&m(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]])), int(1));
    }

    #[test]
    fn ranks_and_kernel() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        let k = kernel_line(&m(&[&[1, 1]]), 2).unwrap();
        assert_eq!(k, vec![int(-1), int(1)]);
        assert!(kernel_line(&m(&[&[1, 1], &[2, 2]]), 2).is_some());
        assert!(kernel_line(&m(&[&[1, 0], &[0, 1]]), 2).is_none());
        assert_eq!(kernel_line(&[], 1).unwrap(), vec![int(1)]);
    }

    #[test]
    fn linear_solve() {
        let x = solve(&m(&[&[1, 1], &[1, 2]]), &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);
        assert!(solve(&m(&[&[1, 1], &[2, 2]]), &[int(1), int(2)]).is_none());
        let x = solve(&m(&[&[2]]), &[int(1)]).unwrap();
        assert_eq!(x, vec![rat(1, 2)]);
    }
}
