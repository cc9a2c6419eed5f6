//! Gaussian elimination over an exact field.
//!
//! Matrices are row-major `Vec<Vec<_>>`. Every routine requires the ring's
//! nonzero elements to be invertible; a nonzero non-unit pivot panics.

use crate::ring::Ring;

pub type Matrix<E> = Vec<Vec<E>>;

/// Row-reduce in place to reduced echelon form; returns the pivot columns.
pub fn row_reduce<R: Ring>(ring: &R, m: &mut Matrix<R::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !ring.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = ring.inv(&m[r][c]).expect("field element must be invertible");
        for j in c..cols {
            m[r][j] = ring.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !ring.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = ring.mul(&f, &m[r][j]);
                    m[i][j] = ring.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> usize {
    let mut work = m.clone();
    row_reduce(ring, &mut work).len()
}

/// Basis of `{v : M v = 0}`.
pub fn nullspace<R: Ring>(ring: &R, m: &Matrix<R::Elem>, cols: usize) -> Vec<Vec<R::Elem>> {
    let mut work = m.clone();
    let pivots = row_reduce(ring, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ring.zero(); cols];
            v[f] = ring.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = ring.neg(&work[row][f]);
            }
            v
        })
        .collect()
}

/// One solution of `M x = b`, if the system is consistent.
pub fn solve<R: Ring>(ring: &R, m: &Matrix<R::Elem>, b: &[R::Elem]) -> Option<Vec<R::Elem>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix<R::Elem> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(ring, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![ring.zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Determinant by elimination with row swaps.
pub fn det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = ring.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !ring.is_zero(&a[i][c])) else {
            return ring.zero();
        };
        if pr != c {
            a.swap(pr, c);
            acc = ring.neg(&acc);
        }
        acc = ring.mul(&acc, &a[c][c]);
        let inv = ring.inv(&a[c][c]).expect("field element must be invertible");
        for i in c + 1..n {
            if ring.is_zero(&a[i][c]) {
                continue;
            }
            let f = ring.mul(&a[i][c], &inv);
            for j in c..n {
                let t = ring.mul(&f, &a[c][j]);
                a[i][j] = ring.sub(&a[i][j], &t);
            }
        }
    }
    acc
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(ring.zero(), |acc, k| {
                        if ring.is_zero(&row[k]) {
                            acc
                        } else {
                            ring.add(&acc, &ring.mul(&row[k], &b[k][j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ring.one() } else { ring.zero() })
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(tI - A)`, low degree first, via reduction
/// to upper Hessenberg form.
pub fn charpoly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let n = a.len();
    let mut h = a.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| !ring.is_zero(&h[i][c])) else {
            continue;
        };
        if pr != c + 1 {
            h.swap(pr, c + 1);
            for row in h.iter_mut() {
                row.swap(pr, c + 1);
            }
        }
        let inv = ring.inv(&h[c + 1][c]).expect("invertible pivot");
        for i in c + 2..n {
            if ring.is_zero(&h[i][c]) {
                continue;
            }
            let f = ring.mul(&h[i][c], &inv);
            for j in 0..n {
                let t = ring.mul(&f, &h[c + 1][j]);
                h[i][j] = ring.sub(&h[i][j], &t);
            }
            for row in h.iter_mut() {
                let t = ring.mul(&f, &row[i]);
                row[c + 1] = ring.add(&row[c + 1], &t);
            }
        }
    }
    // p_k(t) = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (prod h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<R::Elem>> = vec![vec![ring.one()]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![ring.zero(); k + 2];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] = ring.add(&next[i + 1], c);
            next[i] = ring.sub(&next[i], &ring.mul(c, &h[k][k]));
        }
        let mut sub = ring.one();
        for i in (0..k).rev() {
            sub = ring.mul(&sub, &h[i + 1][i]);
            let coef = ring.mul(&sub, &h[i][k]);
            if ring.is_zero(&coef) {
                continue;
            }
            for (j, c) in polys[i].iter().enumerate() {
                next[j] = ring.sub(&next[j], &ring.mul(&coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}
