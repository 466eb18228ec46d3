//! Detection data for `<ε_{a,n}, ε_{b,n}>` and its odd-primary order.
//!
//! The K-theory of `X = ΣCP^a ∧ ΣCP^b` is free on `ζ₁⊗x^i⊗x^j`. Each generator
//! is sent to the vector of its degree-`2m` Chern classes scaled by `m!`,
//! read off in the basis `σ²(t^p⊗t^q)` with `m = p + q + 1`. The commutator
//! class is the all-ones vector in the same basis, and the order of the
//! Samelson product is the least multiple of it inside the image lattice.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::chern::chern_coeff;
use crate::lattice::{minimal_multiple, LatticeError};
use crate::numeric::{factor_odd, factorial, odd_part};
use crate::{Factorization, Integer, IntegerMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamelsonError {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    /// The lattice solver reported no finite order for a problem whose
    /// generator matrix has full row rank. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

/// The triple `(a, b, n)` with `1 ≤ a, b ≤ n − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductProblem {
    a: u32,
    b: u32,
    n: u32,
}

impl ProductProblem {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self, SamelsonError> {
        let invalid = |msg: String| Err(SamelsonError::InvalidProblem(msg));
        if a < 1 || b < 1 || n < 1 {
            return invalid(format!(
                "a, b and n must be positive (got a={a}, b={b}, n={n})"
            ));
        }
        if a >= n {
            return invalid(format!("a must be less than n (got a={a}, n={n})"));
        }
        if b >= n {
            return invalid(format!("b must be less than n (got b={b}, n={n})"));
        }
        Ok(Self { a, b, n })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `k = a + b − n`; ranges over `[2 − n, n − 2]`.
    pub fn k(&self) -> i64 {
        i64::from(self.a) + i64::from(self.b) - i64::from(self.n)
    }

    /// The same product with the factors exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            n: self.n,
        }
    }
}

impl fmt::Display for ProductProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, n={})", self.a, self.b, self.n)
    }
}

/// Basis class `σ²(t^p⊗t^q)` in degree `2m`, `m = p + q + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowIndex {
    pub p: u32,
    pub q: u32,
}

impl RowIndex {
    pub fn m(&self) -> u32 {
        self.p + self.q + 1
    }
}

impl fmt::Display for RowIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Rows `(p, q)` with `n − 1 ≤ p + q`, lexicographic in `(p, q)`.
pub fn row_basis(problem: &ProductProblem) -> Vec<RowIndex> {
    let low = problem.n - 1;
    (1..=problem.a)
        .flat_map(|p| (1..=problem.b).map(move |q| RowIndex { p, q }))
        .filter(|r| r.p + r.q >= low)
        .collect()
}

/// Columns `(i, j)` for the generators `ζ₁⊗x^i⊗x^j`, lexicographic.
pub fn column_basis(problem: &ProductProblem) -> Vec<(u32, u32)> {
    (1..=problem.a)
        .flat_map(|i| (1..=problem.b).map(move |j| (i, j)))
        .collect()
}

/// `m!·c_p(i)·c_q(j)`, the `σ²(t^p⊗t^q)` component of the image of
/// `ζ₁⊗x^i⊗x^j`.
pub fn generator_entry(row: RowIndex, (i, j): (u32, u32)) -> Rational {
    Rational::from_integer(factorial(row.m())) * chern_coeff(i, row.p) * chern_coeff(j, row.q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub problem: ProductProblem,
    pub row_basis: Vec<RowIndex>,
    pub col_basis: Vec<(u32, u32)>,
    pub matrix: IntegerMatrix,
}

impl GeneratorMatrix {
    /// The image of `ζ₁⊗x^i⊗x^j`.
    pub fn column_for(&self, i: u32, j: u32) -> Option<Vec<Integer>> {
        self.col_basis
            .iter()
            .position(|&c| c == (i, j))
            .map(|idx| self.matrix.column(idx))
    }
}

pub fn generator_matrix(problem: &ProductProblem) -> GeneratorMatrix {
    let rows = row_basis(problem);
    let cols = column_basis(problem);
    let mut matrix = IntegerMatrix::zeros(rows.len(), cols.len());
    for (r, &row) in rows.iter().enumerate() {
        for (c, &col) in cols.iter().enumerate() {
            let entry = generator_entry(row, col);
            assert!(
                entry.is_integer(),
                "non-integral generator entry {entry} at row {row}, column {col:?}"
            );
            matrix[(r, c)] = entry.to_integer();
        }
    }
    GeneratorMatrix {
        problem: *problem,
        row_basis: rows,
        col_basis: cols,
        matrix,
    }
}

/// The commutator class `(1, …, 1)`, one entry per row.
pub fn target_vector(problem: &ProductProblem) -> Vec<Integer> {
    vec![Integer::one(); row_basis(problem).len()]
}

/// Where the method is known to detect the Samelson product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Validity {
    /// `0 ≤ k ≤ n − 1`: the target group is free and the detection map is monic.
    InRange,
    /// `k = −1`, the classical `a + b = n − 1` setting.
    BoundaryKm1,
    /// Anything else; the number is computed but nothing guarantees it.
    OutOfMethodRange,
}

impl Validity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Validity::InRange => "IN_RANGE",
            Validity::BoundaryKm1 => "BOUNDARY_KM1",
            Validity::OutOfMethodRange => "OUT_OF_METHOD_RANGE",
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderResult {
    pub problem: ProductProblem,
    /// Least `d` over the integers; its 2-part is diagnostic only.
    pub d_integral: Integer,
    pub d_odd: Integer,
    pub factorization: Factorization,
    /// `y` with `generator_matrix · y = d_integral · (1, …, 1)`.
    pub certificate: Vec<Integer>,
    pub validity: Validity,
}

/// Odd-primary order of `<ε_{a,n}, ε_{b,n}>`.
pub fn samelson_order(problem: &ProductProblem) -> Result<OrderResult, SamelsonError> {
    let gm = generator_matrix(problem);
    let target = target_vector(problem);
    let k = problem.k();
    let mut validity = if (0..i64::from(problem.n)).contains(&k) {
        Validity::InRange
    } else if k == -1 {
        Validity::BoundaryKm1
    } else {
        Validity::OutOfMethodRange
    };
    if gm.row_basis.is_empty() {
        validity = Validity::OutOfMethodRange;
    }

    let solved = minimal_multiple(&gm.matrix, &target).map_err(|e| match e {
        LatticeError::InfiniteOrder => SamelsonError::Internal(format!(
            "infinite order for {problem}; the generator matrix should have full row rank"
        )),
        other => SamelsonError::Internal(other.to_string()),
    })?;

    let scaled: Vec<Integer> = target.iter().map(|t| t * &solved.d).collect();
    if gm.matrix.mul_vec(&solved.certificate) != scaled {
        return Err(SamelsonError::Internal(format!(
            "certificate for {problem} does not satisfy the lattice equation"
        )));
    }

    let d_odd = odd_part(&solved.d);
    Ok(OrderResult {
        problem: *problem,
        factorization: factor_odd(&d_odd),
        d_odd,
        d_integral: solved.d,
        certificate: solved.certificate,
        validity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{binomial, stirling2};

    fn problem(a: u32, b: u32, n: u32) -> ProductProblem {
        ProductProblem::new(a, b, n).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    fn rows(xs: &[(u32, u32)]) -> Vec<RowIndex> {
        xs.iter().map(|&(p, q)| RowIndex { p, q }).collect()
    }

    #[test]
    fn rejects_invalid_problems() {
        for (a, b, n) in [
            (0, 1, 2),
            (1, 0, 2),
            (2, 1, 2),
            (1, 3, 3),
            (3, 3, 3),
            (1, 1, 0),
        ] {
            assert!(
                matches!(
                    ProductProblem::new(a, b, n),
                    Err(SamelsonError::InvalidProblem(_))
                ),
                "{a} {b} {n}"
            );
        }
    }

    #[test]
    fn row_bases() {
        assert_eq!(
            row_basis(&problem(2, 2, 4)),
            rows(&[(1, 2), (2, 1), (2, 2)])
        );
        assert_eq!(
            row_basis(&problem(3, 3, 4)),
            rows(&[
                (1, 2),
                (1, 3),
                (2, 1),
                (2, 2),
                (2, 3),
                (3, 1),
                (3, 2),
                (3, 3)
            ])
        );
        assert_eq!(row_basis(&problem(4, 4, 5)).len(), 13);
        assert_eq!(row_basis(&problem(1, 1, 2)), rows(&[(1, 1)]));
        assert!(row_basis(&problem(1, 1, 4)).is_empty());
    }

    #[test]
    fn generator_columns() {
        let gm = generator_matrix(&problem(2, 2, 4));
        assert_eq!(gm.column_for(1, 1).unwrap(), ints(&[12, 12, 30]));
        assert_eq!(gm.column_for(2, 2).unwrap(), ints(&[0, 0, 120]));

        let gm = generator_matrix(&problem(2, 3, 5));
        assert_eq!(gm.column_for(1, 1).unwrap(), ints(&[20, 30, 60]));
        assert_eq!(gm.column_for(2, 2).unwrap(), ints(&[0, 120, 720]));

        let gm = generator_matrix(&problem(2, 3, 4));
        assert_eq!(gm.column_for(1, 1).unwrap(), ints(&[12, 20, 12, 30, 60]));
    }

    #[test]
    fn targets() {
        assert_eq!(target_vector(&problem(2, 2, 4)), ints(&[1, 1, 1]));
        assert_eq!(target_vector(&problem(2, 3, 4)), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(target_vector(&problem(1, 1, 2)), ints(&[1]));
    }

    #[test]
    fn orders() {
        let r = samelson_order(&problem(2, 2, 4)).unwrap();
        assert_eq!(r.d_odd, Integer::from(15));
        assert_eq!(r.d_integral, Integer::from(120));
        assert_eq!(r.validity, Validity::InRange);
        assert_eq!(
            samelson_order(&problem(1, 2, 3)).unwrap().d_odd,
            Integer::from(3)
        );
        assert_eq!(
            samelson_order(&problem(2, 3, 4)).unwrap().d_odd,
            Integer::from(45)
        );
        let r = samelson_order(&problem(1, 1, 2)).unwrap();
        assert_eq!(
            (r.d_integral, r.d_odd),
            (Integer::from(6), Integer::from(3))
        );
    }

    #[test]
    fn validity_flags() {
        assert_eq!(
            samelson_order(&problem(1, 2, 4)).unwrap().validity,
            Validity::BoundaryKm1
        );
        let r = samelson_order(&problem(1, 1, 4)).unwrap();
        assert_eq!(r.validity, Validity::OutOfMethodRange);
        assert_eq!(r.d_integral, Integer::from(1));
        assert!(r.certificate.iter().all(|c| *c == Integer::from(0)));
        assert_eq!(
            samelson_order(&problem(1, 2, 5)).unwrap().validity,
            Validity::OutOfMethodRange
        );
        assert_eq!(
            samelson_order(&problem(4, 4, 5)).unwrap().validity,
            Validity::InRange
        );
    }

    fn all_valid_problems(max_n: u32) -> impl Iterator<Item = ProductProblem> {
        (2..=max_n).flat_map(|n| (1..n).flat_map(move |a| (1..n).map(move |b| problem(a, b, n))))
    }

    #[test]
    fn entries_are_integral_by_two_routes() {
        for pr in all_valid_problems(10) {
            let gm = generator_matrix(&pr);
            for (r, row) in gm.row_basis.iter().enumerate() {
                let m = row.m();
                for (c, &(i, j)) in gm.col_basis.iter().enumerate() {
                    let other = Integer::from(m)
                        * binomial::<Integer>(m - 1, row.p)
                        * factorial::<Integer>(i)
                        * factorial::<Integer>(j)
                        * stirling2::<Integer>(row.p, i)
                        * stirling2::<Integer>(row.q, j);
                    assert_eq!(gm.matrix[(r, c)], other, "{pr} row {row} col ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn triangular_with_factorial_diagonal() {
        for pr in all_valid_problems(9) {
            let gm = generator_matrix(&pr);
            for (r, row) in gm.row_basis.iter().enumerate() {
                for (c, &(i, j)) in gm.col_basis.iter().enumerate() {
                    let x = &gm.matrix[(r, c)];
                    if i > row.p || j > row.q {
                        assert_eq!(*x, Integer::from(0));
                    }
                    if (i, j) == (row.p, row.q) {
                        assert_eq!(*x, factorial::<Integer>(row.m()));
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_in_a_and_b() {
        for pr in all_valid_problems(7) {
            assert_eq!(
                samelson_order(&pr).unwrap().d_integral,
                samelson_order(&pr.swapped()).unwrap().d_integral,
                "{pr}"
            );
        }
    }

    #[test]
    fn row_order_does_not_matter() {
        let gm = generator_matrix(&problem(3, 3, 4));
        let n = gm.row_basis.len();
        let perm: Vec<usize> = (0..n).rev().collect();
        let permuted =
            IntegerMatrix::from_rows(perm.iter().map(|&i| gm.matrix.row(i).to_vec()).collect());
        let d = minimal_multiple(&permuted, &vec![Integer::one(); n])
            .unwrap()
            .d;
        assert_eq!(d, samelson_order(&problem(3, 3, 4)).unwrap().d_integral);
    }
}
