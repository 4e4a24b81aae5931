//! Exact linear algebra over cyclotomic fields.
//!
//! Matrices are dense row-major `Vec<Vec<CycloElem>>`.  Everything reduces to
//! a deterministic Gauss-Jordan elimination with first-nonzero pivoting, so
//! repeated runs produce identical bases.

use crate::cyclotomic::CycloElem;
use num_integer::Integer;

pub(crate) type Matrix = Vec<Vec<CycloElem>>;

/// Least common conductor of all entries (1 for an empty matrix).
pub(crate) fn common_conductor(rows: &[Vec<CycloElem>]) -> u32 {
    rows.iter()
        .flatten()
        .fold(1u32, |m, e| m.lcm(&e.conductor()))
}

/// The `n x n` identity matrix over `Q(zeta_conductor)`.
pub(crate) fn identity(n: usize, conductor: u32) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        CycloElem::one(conductor)
                    } else {
                        CycloElem::zero(conductor)
                    }
                })
                .collect()
        })
        .collect()
}

/// Matrix product `a * b`.
pub(crate) fn mat_mul(a: &[Vec<CycloElem>], b: &[Vec<CycloElem>]) -> Matrix {
    let n = a.len();
    let inner = if n == 0 { 0 } else { a[0].len() };
    assert_eq!(inner, b.len(), "dimension mismatch in matrix product");
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let conductor = common_conductor(a).lcm(&common_conductor(b));
    (0..n)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut acc = CycloElem::zero(conductor);
                    for k in 0..inner {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&a[i][k].mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Matrix-vector product `a * v`.
pub(crate) fn mat_vec(a: &[Vec<CycloElem>], v: &[CycloElem]) -> Vec<CycloElem> {
    let conductor = common_conductor(a).lcm(
        &v.iter().fold(1u32, |m, e| m.lcm(&e.conductor())),
    );
    a.iter()
        .map(|row| {
            let mut acc = CycloElem::zero(conductor);
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.add(&x.mul(y));
                }
            }
            acc
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot column of each of the
/// first `rank` rows.
pub(crate) fn rref(rows: &mut Matrix) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c]
            .inverse()
            .expect("pivot entries are nonzero by construction");
        for e in rows[r].iter_mut() {
            *e = e.mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = rows[r][j].mul(&f);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

/// Rank of the matrix (equals the rank of its transpose, so a list of basis
/// vectors can be passed as rows).
pub(crate) fn rank(rows: &[Vec<CycloElem>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel `{x : rows * x = 0}`, deterministic across runs.
pub(crate) fn kernel_basis(rows: &[Vec<CycloElem>]) -> Vec<Vec<CycloElem>> {
    let ncols = if rows.is_empty() { 0 } else { rows[0].len() };
    let conductor = common_conductor(rows);
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![CycloElem::zero(conductor); ncols];
        v[free] = CycloElem::one(conductor);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = work[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Solves `a * x = b` for square invertible `a`; `b` is given by rows, as is
/// the result.  Returns `None` when `a` is singular.
pub(crate) fn solve_matrix(a: &[Vec<CycloElem>], b: &[Vec<CycloElem>]) -> Option<Matrix> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "coefficient matrix must be square");
    assert_eq!(b.len(), n, "dimension mismatch in linear solve");
    let bcols = if n == 0 { 0 } else { b[0].len() };
    let mut work: Matrix = a
        .iter()
        .zip(b)
        .map(|(ar, br)| ar.iter().chain(br).cloned().collect())
        .collect();
    let pivots = rref(&mut work);
    // A singular coefficient block shows up as a pivot spilling into the
    // right-hand-side columns.
    if pivots.iter().filter(|&&c| c < n).count() < n {
        return None;
    }
    Some(
        work.into_iter()
            .map(|row| row[n..n + bcols].to_vec())
            .collect(),
    )
}

/// Inverse of a square matrix, or `None` if singular.
pub(crate) fn invert(a: &[Vec<CycloElem>]) -> Option<Matrix> {
    let conductor = common_conductor(a);
    solve_matrix(a, &identity(a.len(), conductor))
}
