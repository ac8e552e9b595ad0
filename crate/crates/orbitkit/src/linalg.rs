//! Dense exact-rational linear algebra: elimination, rank, kernels, and
//! affine solving. Small matrices only; everything stays in `Q`.

use crate::num::Q;
use num_traits::Zero;

pub type Mat = Vec<Vec<Q>>;

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c];
        for x in m[r].iter_mut() {
            *x = *x / inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let s = m[r][j];
                    m[i][j] = m[i][j] - f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Mat) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

/// Basis of the right kernel of `m`, for a possibly empty row list.
pub fn kernel_with_cols(m: &Mat, cols: usize) -> Vec<Vec<Q>> {
    if m.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut v = vec![Q::zero(); cols];
                v[i] = Q::from_integer(1);
                v
            })
            .collect();
    }
    kernel(m)
}

/// Basis of the right kernel of `m`.
pub fn kernel(m: &Mat) -> Vec<Vec<Q>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::from_integer(1);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[row][free];
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m x = b`, if consistent.
pub fn solve(m: &Mat, b: &[Q]) -> Option<Vec<Q>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut aug: Mat = m
        .iter()
        .zip(b.iter())
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // pivot in the constant column
    }
    let mut x = vec![Q::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols];
    }
    Some(x)
}

pub fn mat_mul_vec(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (&a, &b)| acc + a * b))
        .collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (&x, &y)| acc + x * y)
}

/// Expresses `v` in the span of `basis`, if possible.
pub fn coordinates_in_span(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) { Some(Vec::new()) } else { None };
    }
    let dim = v.len();
    let m: Mat = (0..dim).map(|i| basis.iter().map(|b| b[i]).collect()).collect();
    solve(&m, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::q;

    #[test]
    fn rank_and_kernel() {
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ];
        assert_eq!(rank(&m), 2);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        for row in &m {
            assert_eq!(dot(row, &k[0]), q(0));
        }
    }

    #[test]
    fn solving() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(-1)]];
        let x = solve(&m, &[q(5), q(1)]).unwrap();
        assert_eq!(mat_mul_vec(&m, &x), vec![q(5), q(1)]);
        let inconsistent = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&inconsistent, &[q(1), q(3)]).is_none());
    }
}
