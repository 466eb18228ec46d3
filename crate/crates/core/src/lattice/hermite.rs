use crate::lattice::Matrix;
use crate::Scalar;

/// Column-style Hermite normal form `H = A·V` with `V` unimodular.
///
/// Nonzero columns come first and are in echelon form: the pivot (first
/// nonzero entry) of column `c` sits in row `pivots[c]`, pivot rows strictly
/// increase, pivots are positive, and every entry to the left of a pivot in
/// its row lies in `[0, pivot)`. Trailing columns are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteDecomposition<T> {
    pub h: Matrix<T>,
    pub v: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> HermiteDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Column-style Hermite normal form of `a`.
pub fn hnf<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    hermite_decomposition(a).h
}

pub fn hermite_decomposition<T: Scalar>(a: &Matrix<T>) -> HermiteDecomposition<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut v = Matrix::identity(cols);
    let mut pivots = Vec::new();
    let mut r = 0;

    for i in 0..rows {
        if r == cols {
            break;
        }
        // Euclid across columns r.. of row i until a single nonzero remains.
        loop {
            let smallest = (r..cols)
                .filter(|&j| !h[(i, j)].is_zero())
                .min_by(|&x, &y| h[(i, x)].abs().cmp(&h[(i, y)].abs()));
            let Some(j0) = smallest else { break };
            h.swap_cols(r, j0);
            v.swap_cols(r, j0);
            let mut clean = true;
            for j in r + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = h[(i, j)].div_floor(&h[(i, r)]);
                h.add_col_multiple(j, r, &-q.clone());
                v.add_col_multiple(j, r, &-q);
                clean &= h[(i, j)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(i, r)].is_zero() {
            continue;
        }
        if h[(i, r)].is_negative() {
            h.negate_col(r);
            v.negate_col(r);
        }
        for j in 0..r {
            let q = h[(i, j)].div_floor(&h[(i, r)]);
            h.add_col_multiple(j, r, &-q.clone());
            v.add_col_multiple(j, r, &-q);
        }
        pivots.push(i);
        r += 1;
    }

    HermiteDecomposition { h, v, pivots }
}

/// Greedy reduction of `w` against a Hermite basis. Returns the coefficient
/// vector `c` with `h·c = w`, or `None` when `w` is outside the lattice.
pub(crate) fn reduce<T: Scalar>(dec: &HermiteDecomposition<T>, w: &[T]) -> Option<Vec<T>> {
    let h = &dec.h;
    let mut residual = w.to_vec();
    let mut coeffs = vec![T::zero(); h.cols()];
    for (c, &i) in dec.pivots.iter().enumerate() {
        let (q, rem) = residual[i].div_rem(&h[(i, c)]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (k, x) in residual.iter_mut().enumerate() {
                *x = x.clone() - q.clone() * h[(k, c)].clone();
            }
        }
        coeffs[c] = q;
    }
    residual.iter().all(T::is_zero).then_some(coeffs)
}
