//! Independent classical implementations used only to cross-validate the
//! matrix constructions.
//!
//! Nothing here calls into the transfer-matrix build path, and nothing in
//! the build path calls in here. Binomial coefficients are grown as Pascal
//! triangle rows by addition, factorials accumulate locally, and the Euler
//! values come from literal truncated series division, so agreement with
//! the matrix route is evidence, not circularity.

use crate::appell::{
    classical_chebyshev1, classical_chebyshev2, classical_hermite, classical_laguerre,
    classical_legendre, AppellVector,
};
use crate::families::{taylor_coefficients, FamilySpec};
use crate::matrix::RatVector;
use crate::rat::Rat;

/// Pascal triangle rows 0..=n, built by addition only.
fn pascal_rows(n: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    rows.push(vec![Rat::one()]);
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = Vec::with_capacity(i + 1);
        row.push(Rat::one());
        for k in 1..i {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(Rat::one());
        rows.push(row);
    }
    rows
}

/// Bernoulli numbers `B_0..B_m` from the defining recurrence
/// `sum_{k=0}^{n} C(n+1, k) B_k = 0` with `B_0 = 1`.
pub fn bernoulli_numbers(m: usize) -> RatVector {
    let rows = pascal_rows(m + 1);
    let mut b: Vec<Rat> = Vec::with_capacity(m + 1);
    b.push(Rat::one());
    for n in 1..=m {
        let mut s = Rat::zero();
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            s += &rows[n + 1][k] * bk;
        }
        b.push(-s / Rat::integer((n + 1) as i64));
    }
    RatVector::new(b)
}

/// Genocchi numbers `G_0..G_m` via `G_n = 2 (1 - 2^n) B_n`.
pub fn genocchi_numbers(m: usize) -> RatVector {
    let b = bernoulli_numbers(m);
    let mut pow2 = Rat::one();
    RatVector::from_fn(m + 1, |n| {
        if n > 0 {
            pow2 *= &Rat::integer(2);
        }
        &(&Rat::integer(2) * &(&Rat::one() - &pow2)) * &b[n]
    })
}

/// Classical families with a three-term recurrence oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalFamily {
    Hermite,
    Legendre,
    Chebyshev1,
    Chebyshev2,
    Laguerre(Rat),
}

/// Values `p_0(x)..p_m(x)` by the classical three-term recurrences:
///
/// - Hermite:    `H_{n+1} = 2x H_n - 2n H_{n-1}`,        `H_0 = 1, H_1 = 2x`
/// - Legendre:   `(n+1) P_{n+1} = (2n+1)x P_n - n P_{n-1}`, `P_0 = 1, P_1 = x`
/// - Chebyshev:  `T_{n+1} = 2x T_n - T_{n-1}`,            `T_0 = 1, T_1 = x`
///   (second kind identical with `U_1 = 2x`)
/// - Laguerre:   `(n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}`,
///   `L_0 = 1, L_1 = 1 + a - x`
pub fn three_term(family: &ClassicalFamily, m: usize, x: &Rat) -> RatVector {
    let mut values: Vec<Rat> = Vec::with_capacity(m + 1);
    values.push(Rat::one());
    if m == 0 {
        return RatVector::new(values);
    }
    let two_x = &Rat::integer(2) * x;
    values.push(match family {
        ClassicalFamily::Hermite => two_x.clone(),
        ClassicalFamily::Legendre | ClassicalFamily::Chebyshev1 => x.clone(),
        ClassicalFamily::Chebyshev2 => two_x.clone(),
        ClassicalFamily::Laguerre(a) => &(&Rat::one() + a) - x,
    });
    for n in 1..m {
        let nr = Rat::integer(n as i64);
        let next = match family {
            ClassicalFamily::Hermite => {
                &(&two_x * &values[n]) - &(&(&Rat::integer(2) * &nr) * &values[n - 1])
            }
            ClassicalFamily::Legendre => {
                let lead = &(&nr * &two_x) + x; // (2n+1) x
                (&(&lead * &values[n]) - &(&nr * &values[n - 1])) / Rat::integer((n + 1) as i64)
            }
            ClassicalFamily::Chebyshev1 | ClassicalFamily::Chebyshev2 => {
                &(&two_x * &values[n]) - &values[n - 1]
            }
            ClassicalFamily::Laguerre(a) => {
                let lead = &(&(&(&nr + &nr) + &Rat::one()) + a) - x; // 2n + 1 + a - x
                (&(&lead * &values[n]) - &(&(&nr + a) * &values[n - 1]))
                    / Rat::integer((n + 1) as i64)
            }
        };
        values.push(next);
    }
    RatVector::new(values)
}

/// Euler polynomial values `E_0(x)..E_m(x)` by exact truncated series
/// division of `2 e^{xt}` by `e^t + 1`.
pub fn euler_poly_values(m: usize, x: &Rat) -> RatVector {
    // factorials and powers of x, accumulated locally
    let mut fact = vec![Rat::one()];
    let mut xpow = vec![Rat::one()];
    for n in 1..=m {
        fact.push(&fact[n - 1] * &Rat::integer(n as i64));
        xpow.push(&xpow[n - 1] * x);
    }
    // numerator 2 e^{xt}: a_n = 2 x^n / n!; denominator e^t + 1: b_0 = 2, b_n = 1/n!
    let num: Vec<Rat> = (0..=m)
        .map(|n| &(&Rat::integer(2) * &xpow[n]) / &fact[n])
        .collect();
    let den: Vec<Rat> = (0..=m)
        .map(|n| {
            if n == 0 {
                Rat::integer(2)
            } else {
                fact[n].recip()
            }
        })
        .collect();
    // long division: q_n = (a_n - sum_{j<n} q_j b_{n-j}) / b_0
    let mut q: Vec<Rat> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let mut acc = num[n].clone();
        for (j, qj) in q.iter().enumerate() {
            if qj.is_zero() {
                continue;
            }
            acc -= &den[n - j] * qj;
        }
        q.push(acc / &den[0]);
    }
    // E_n(x) = n! q_n
    RatVector::from_fn(m + 1, |n| &fact[n] * &q[n])
}

/// Outcome of one oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleStatus {
    Pass,
    Fail {
        /// Evaluation point of the first mismatch; absent for coefficient
        /// comparisons.
        point: Option<Rat>,
        index: usize,
        expected: Rat,
        actual: Rat,
    },
    /// The family has no independent oracle.
    NotApplicable,
}

impl OracleStatus {
    pub fn passed(&self) -> bool {
        matches!(self, OracleStatus::Pass)
    }
}

/// Record of one family cross-validated against its oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub family: FamilySpec,
    pub m: usize,
    pub checked_points: Vec<Rat>,
    pub status: OracleStatus,
}

fn first_mismatch(
    expected: &RatVector,
    actual: &RatVector,
    point: Option<&Rat>,
) -> Option<OracleStatus> {
    for k in 0..expected.len() {
        if expected[k] != actual[k] {
            return Some(OracleStatus::Fail {
                point: point.cloned(),
                index: k,
                expected: expected[k].clone(),
                actual: actual[k].clone(),
            });
        }
    }
    None
}

/// Compares the matrix-route construction of `spec` against its
/// independent oracle. Coefficient oracles (Bernoulli, Genocchi) ignore
/// the points; value oracles evaluate at each supplied point, and the
/// classical Legendre/Chebyshev reconstructions use only the points inside
/// `(-1, 1)`.
pub fn cross_check(spec: &FamilySpec, m: usize, points: &[Rat]) -> OracleReport {
    let mut checked_points = Vec::new();
    let status = match spec {
        FamilySpec::Monomial => {
            let av = AppellVector::new(spec, m);
            let mut status = OracleStatus::Pass;
            for x in points {
                // plain powers, accumulated by repeated multiplication
                let mut p = Rat::one();
                let expected = RatVector::from_fn(m + 1, |k| {
                    if k > 0 {
                        p *= x;
                    }
                    p.clone()
                });
                checked_points.push(x.clone());
                if let Some(fail) = first_mismatch(&expected, &av.evaluate(x), Some(x)) {
                    status = fail;
                    break;
                }
            }
            status
        }
        FamilySpec::Bernoulli => {
            let expected = bernoulli_numbers(m);
            let actual = taylor_coefficients(spec, m);
            first_mismatch(&expected, &actual, None).unwrap_or(OracleStatus::Pass)
        }
        FamilySpec::Genocchi => {
            let expected = genocchi_numbers(m);
            let actual = taylor_coefficients(spec, m);
            first_mismatch(&expected, &actual, None).unwrap_or(OracleStatus::Pass)
        }
        FamilySpec::Euler => {
            let av = AppellVector::new(spec, m);
            let mut status = OracleStatus::Pass;
            for x in points {
                checked_points.push(x.clone());
                let expected = euler_poly_values(m, x);
                if let Some(fail) = first_mismatch(&expected, &av.evaluate(x), Some(x)) {
                    status = fail;
                    break;
                }
            }
            status
        }
        FamilySpec::HermiteMonic => {
            let mut status = OracleStatus::Pass;
            for x in points {
                checked_points.push(x.clone());
                let expected = three_term(&ClassicalFamily::Hermite, m, x);
                if let Some(fail) = first_mismatch(&expected, &classical_hermite(m, x), Some(x)) {
                    status = fail;
                    break;
                }
            }
            status
        }
        FamilySpec::LaguerreModified { alpha } => {
            let mut status = OracleStatus::Pass;
            for x in points {
                checked_points.push(x.clone());
                let expected = three_term(&ClassicalFamily::Laguerre(alpha.clone()), m, x);
                if let Some(fail) =
                    first_mismatch(&expected, &classical_laguerre(m, alpha, x), Some(x))
                {
                    status = fail;
                    break;
                }
            }
            status
        }
        FamilySpec::LegendreModified
        | FamilySpec::ChebyshevFirstModified
        | FamilySpec::ChebyshevSecondModified => {
            let mut status = OracleStatus::Pass;
            for x in points.iter().filter(|x| x.abs() < Rat::one()) {
                checked_points.push(x.clone());
                let (expected, actual) = match spec {
                    FamilySpec::LegendreModified => (
                        three_term(&ClassicalFamily::Legendre, m, x),
                        classical_legendre(m, x).expect("x is inside (-1, 1)"),
                    ),
                    FamilySpec::ChebyshevFirstModified => (
                        three_term(&ClassicalFamily::Chebyshev1, m, x),
                        classical_chebyshev1(m, x).expect("x is inside (-1, 1)"),
                    ),
                    _ => (
                        three_term(&ClassicalFamily::Chebyshev2, m, x),
                        classical_chebyshev2(m, x).expect("x is inside (-1, 1)"),
                    ),
                };
                if let Some(fail) = first_mismatch(&expected, &actual, Some(x)) {
                    status = fail;
                    break;
                }
            }
            status
        }
        _ => OracleStatus::NotApplicable,
    };
    OracleReport {
        family: spec.clone(),
        m,
        checked_points,
        status,
    }
}
