use crate::lattice::Matrix;
use crate::Scalar;

/// `U·A·V = S` with `U`, `V` unimodular and `S` diagonal, its first `rank`
/// diagonal entries positive and each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// The invariant factors `s_1 | s_2 | … | s_rank`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

/// Smith normal form by repeated smallest-magnitude pivoting.
pub fn snf<T: Scalar>(a: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let mut t = 0;

    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&s, t..rows, t..cols) else {
            break;
        };
        move_to_pivot(&mut s, &mut u, &mut v, t, pi, pj);

        loop {
            for i in t + 1..rows {
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &-q.clone());
                u.add_row_multiple(i, t, &-q);
            }
            for j in t + 1..cols {
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col_multiple(j, t, &-q.clone());
                v.add_col_multiple(j, t, &-q);
            }

            // Remainders left in the pivot row or column are smaller than the
            // pivot; promote the smallest and reduce again.
            let in_col = smallest_entry(&s, t + 1..rows, t..t + 1);
            let in_row = smallest_entry(&s, t..t + 1, t + 1..cols);
            let next = match (in_col, in_row) {
                (Some(a), Some(b)) => Some(if s[a].abs() <= s[b].abs() { a } else { b }),
                (a, b) => a.or(b),
            };
            if let Some((pi, pj)) = next {
                move_to_pivot(&mut s, &mut u, &mut v, t, pi, pj);
                continue;
            }

            // Pivot row and column are clear; enforce divisibility of the rest.
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match offender {
                Some(i) => {
                    s.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }

        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithDecomposition { u, s, v, rank: t }
}

fn smallest_entry<T: Scalar>(
    s: &Matrix<T>,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
        .filter(|&idx| !s[idx].is_zero())
        .min_by(|&x, &y| s[x].abs().cmp(&s[y].abs()))
}

fn move_to_pivot<T: Scalar>(
    s: &mut Matrix<T>,
    u: &mut Matrix<T>,
    v: &mut Matrix<T>,
    t: usize,
    i: usize,
    j: usize,
) {
    s.swap_rows(t, i);
    u.swap_rows(t, i);
    s.swap_cols(t, j);
    v.swap_cols(t, j);
}
