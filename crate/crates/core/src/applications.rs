//! Consequences of the order computations: homotopy commutativity of
//! `SU(n)` at odd primes, the order of the `SU(4)` commutator, and the count
//! bound on gauge-group homotopy types.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::numeric::{is_prime, p_valuation, NumericError};
use crate::samelson::{samelson_order, OrderResult, ProductProblem, SamelsonError};
use crate::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplicationError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported; every statement here is localized at an odd prime")]
    EvenPrime,
    #[error("commutator order must be a positive integer")]
    NonPositiveOrder,
    #[error(transparent)]
    Samelson(#[from] SamelsonError),
}

fn check_odd_prime(p: u64) -> Result<(), ApplicationError> {
    if !is_prime(&Integer::from(p)) {
        return Err(ApplicationError::NotPrime(p));
    }
    if p == 2 {
        return Err(ApplicationError::EvenPrime);
    }
    Ok(())
}

/// Order of `SU(4) ∧ SU(4) → SU(4)` at odd primes; it coincides with the
/// order of its restriction to `ΣCP^3 ∧ ΣCP^3`.
pub fn su4_commutator_order() -> OrderResult {
    let problem = ProductProblem::new(3, 3, 4).expect("(3,3,4) is a valid problem");
    samelson_order(&problem).expect("(3,3,4) has a finite order")
}

/// Upper bound `ν_p(m) + 1` on the number of `p`-local homotopy types of the
/// gauge groups, where `m` is the order of the commutator.
pub fn gauge_type_bound(m: &Integer, p: u64) -> Result<u32, ApplicationError> {
    check_odd_prime(p)?;
    if m < &Integer::one() {
        return Err(ApplicationError::NonPositiveOrder);
    }
    match p_valuation(&Integer::from(p), m) {
        Ok(v) => Ok(v + 1),
        Err(NumericError::ZeroInput) => Err(ApplicationError::NonPositiveOrder),
        Err(NumericError::NotPrime(_)) => Err(ApplicationError::NotPrime(p)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Commutative,
    NotCommutative,
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Commutative => "COMMUTATIVE",
            Verdict::NotCommutative => "NOT_COMMUTATIVE",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A nonvanishing Samelson product: `p^valuation` divides its odd order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub problem: ProductProblem,
    pub prime: u64,
    pub valuation: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativityVerdict {
    pub value: Verdict,
    pub witness: Option<Witness>,
    /// The odd order the verdict was read from, when one was computed.
    pub order: Option<OrderResult>,
}

/// The Samelson product deciding commutativity of `SU(n)`, for `n ∈ {3, 4, 5}`.
pub fn governing_problem(n: u32) -> Option<ProductProblem> {
    match n {
        3 => ProductProblem::new(2, 2, 3).ok(),
        4 => ProductProblem::new(3, 3, 4).ok(),
        5 => ProductProblem::new(4, 4, 5).ok(),
        _ => None,
    }
}

/// Is `SU(n)` localized at the odd prime `p` homotopy commutative?
///
/// Decided for `n ∈ {3, 4, 5}` from the governing product `<ε_{n−1}, ε_{n−1}>`:
/// it vanishes at `p` exactly when `p` does not divide its odd order, and a
/// nonzero Samelson product obstructs commutativity.
pub fn homotopy_commutative(n: u32, p: u64) -> Result<CommutativityVerdict, ApplicationError> {
    check_odd_prime(p)?;
    let Some(problem) = governing_problem(n) else {
        return Ok(CommutativityVerdict {
            value: Verdict::Unknown,
            witness: None,
            order: None,
        });
    };
    let order = samelson_order(&problem)?;
    let valuation =
        p_valuation(&Integer::from(p), &order.d_odd).expect("odd order is positive and p is prime");
    let (value, witness) = if valuation == 0 {
        (Verdict::Commutative, None)
    } else {
        (
            Verdict::NotCommutative,
            Some(Witness {
                problem,
                prime: p,
                valuation,
            }),
        )
    };
    Ok(CommutativityVerdict {
        value,
        witness,
        order: Some(order),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_primes_up_to(limit: u64) -> Vec<u64> {
        (3..=limit)
            .filter(|p| is_prime(&Integer::from(*p)))
            .collect()
    }

    #[test]
    fn commutator_order_of_su4() {
        let r = su4_commutator_order();
        assert_eq!(r.d_odd, Integer::from(315));
        assert_eq!(r.factorization.to_string(), "3^2·5·7");
        let gm = crate::samelson::generator_matrix(&r.problem);
        let dv: Vec<Integer> = vec![r.d_integral.clone(); gm.row_basis.len()];
        assert_eq!(gm.matrix.mul_vec(&r.certificate), dv);
        let direct = samelson_order(&ProductProblem::new(3, 3, 4).unwrap()).unwrap();
        assert_eq!(r.d_odd, direct.d_odd);
    }

    #[test]
    fn gauge_bounds() {
        let m = Integer::from(315);
        assert_eq!(gauge_type_bound(&m, 3), Ok(3));
        assert_eq!(gauge_type_bound(&m, 5), Ok(2));
        assert_eq!(gauge_type_bound(&m, 11), Ok(1));
        assert_eq!(gauge_type_bound(&Integer::from(1), 3), Ok(1));
        assert_eq!(gauge_type_bound(&m, 2), Err(ApplicationError::EvenPrime));
        assert_eq!(gauge_type_bound(&m, 9), Err(ApplicationError::NotPrime(9)));
        assert_eq!(
            gauge_type_bound(&Integer::from(0), 3),
            Err(ApplicationError::NonPositiveOrder)
        );
        for p in odd_primes_up_to(200) {
            if 315 % p != 0 {
                assert_eq!(gauge_type_bound(&m, p), Ok(1));
            }
        }
    }

    #[test]
    fn commutativity_examples() {
        assert_eq!(
            homotopy_commutative(3, 7).unwrap().value,
            Verdict::Commutative
        );
        let v = homotopy_commutative(4, 7).unwrap();
        assert_eq!(v.value, Verdict::NotCommutative);
        assert_eq!(
            v.witness,
            Some(Witness {
                problem: ProductProblem::new(3, 3, 4).unwrap(),
                prime: 7,
                valuation: 1
            })
        );
        assert_eq!(
            homotopy_commutative(5, 11).unwrap().value,
            Verdict::Commutative
        );
        assert_eq!(homotopy_commutative(6, 13).unwrap().value, Verdict::Unknown);
        assert_eq!(homotopy_commutative(3, 2), Err(ApplicationError::EvenPrime));
        assert_eq!(
            homotopy_commutative(3, 15),
            Err(ApplicationError::NotPrime(15))
        );
    }

    #[test]
    fn obstructing_primes_are_the_order_divisors() {
        for n in 3..=5 {
            let d_odd = samelson_order(&governing_problem(n).unwrap())
                .unwrap()
                .d_odd;
            for p in odd_primes_up_to(100) {
                let v = homotopy_commutative(n, p).unwrap();
                let divides = (&d_odd % Integer::from(p)) == Integer::from(0);
                assert_eq!(v.value == Verdict::NotCommutative, divides, "n={n} p={p}");
                if let Some(w) = v.witness {
                    assert!(w.valuation >= 1);
                }
                if p > 2 * u64::from(n) {
                    assert_eq!(v.value, Verdict::Commutative, "n={n} p={p}");
                }
            }
        }
    }
}
