//! Lower-triangular matrix kernel over exact rationals.
//!
//! Everything in this crate is driven by functions of the creation matrix
//! `H`, the subdiagonal matrix carrying 1..m, which is nilpotent of
//! degree m+1, so every power series in `H` truncates exactly. This module
//! provides `H` itself, the generalized Pascal matrices `P(x) = e^{xH}`,
//! diagonal scalings, truncated series evaluation `f(H)`, and exact
//! triangular inversion by forward substitution.
//!
//! Matrices are stored dense; orders stay small enough that packed
//! triangular storage would buy nothing.

use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use crate::error::{Error, Result};
use crate::rat::{binomial, factorial, Rat};

/// Column vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatVector(Vec<Rat>);

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RatVector(vec![Rat::zero(); len])
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> Rat) -> Self {
        RatVector((0..len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rat> {
        self.0
    }
}

impl Index<usize> for RatVector {
    type Output = Rat;
    fn index(&self, k: usize) -> &Rat {
        &self.0[k]
    }
}

impl From<Vec<Rat>> for RatVector {
    fn from(v: Vec<Rat>) -> Self {
        RatVector(v)
    }
}

impl FromIterator<Rat> for RatVector {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        RatVector(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a RatVector {
    type Item = &'a Rat;
    type IntoIter = std::slice::Iter<'a, Rat>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

/// Dense lower-triangular matrix of exact rationals.
///
/// Entries above the diagonal are exactly zero; the constructors never
/// populate them, so the invariant holds for every value of this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LTMatrix {
    order: usize,
    entries: Vec<Rat>, // row-major, order^2
}

impl LTMatrix {
    /// Builds an order×order matrix from `f`, consulted only for `i >= j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        assert!(order >= 1, "matrix order must be at least 1");
        let mut entries = vec![Rat::zero(); order * order];
        for i in 0..order {
            for j in 0..=i {
                entries[i * order + j] = f(i, j);
            }
        }
        LTMatrix { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        LTMatrix::from_fn(order, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "matrix order must be at least 1");
        LTMatrix {
            order,
            entries: vec![Rat::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn first_column(&self) -> RatVector {
        RatVector::from_fn(self.order, |i| self.entry(i, 0).clone())
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn mat_add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(LTMatrix::from_fn(self.order, |i, j| {
            self.entry(i, j) + rhs.entry(i, j)
        }))
    }

    pub fn mat_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(LTMatrix::from_fn(self.order, |i, j| {
            self.entry(i, j) - rhs.entry(i, j)
        }))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        LTMatrix::from_fn(self.order, |i, j| self.entry(i, j) * k)
    }

    /// Exact product. Lower-triangularity is preserved: entry (i, j) only
    /// sums over k in j..=i.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(LTMatrix::from_fn(self.order, |i, j| {
            let mut acc = Rat::zero();
            for k in j..=i {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.entry(k, j);
                if b.is_zero() {
                    continue;
                }
                acc += a * b;
            }
            acc
        }))
    }

    pub fn mat_vec(&self, v: &RatVector) -> Result<RatVector> {
        if v.len() != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: v.len(),
            });
        }
        Ok(RatVector::from_fn(self.order, |i| {
            let mut acc = Rat::zero();
            for j in 0..=i {
                let a = self.entry(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                acc += a * &v[j];
            }
            acc
        }))
    }

    /// `self^s` by repeated multiplication; `s = 0` gives the identity.
    pub fn mat_pow(&self, s: usize) -> Self {
        let mut acc = LTMatrix::identity(self.order);
        for _ in 0..s {
            acc = acc.mat_mul(self).expect("powers share one order");
        }
        acc
    }

    /// Exact inverse by forward substitution.
    ///
    /// Fails with [`Error::SingularMatrix`] reporting the first zero
    /// diagonal index; a singular transfer matrix (the Genocchi case) must
    /// be reportable, not a crash.
    pub fn lt_inverse(&self) -> Result<Self> {
        for k in 0..self.order {
            if self.entry(k, k).is_zero() {
                return Err(Error::SingularMatrix { index: k });
            }
        }
        let n = self.order;
        let mut inv = vec![Rat::zero(); n * n];
        for j in 0..n {
            inv[j * n + j] = self.entry(j, j).recip();
            for i in j + 1..n {
                let mut s = Rat::zero();
                for k in j..i {
                    let a = self.entry(i, k);
                    if a.is_zero() || inv[k * n + j].is_zero() {
                        continue;
                    }
                    s += a * &inv[k * n + j];
                }
                if !s.is_zero() {
                    inv[i * n + j] = -s / self.entry(i, i);
                }
            }
        }
        Ok(LTMatrix {
            order: n,
            entries: inv,
        })
    }
}

impl Add for &LTMatrix {
    type Output = LTMatrix;
    /// Panics on order mismatch; use [`LTMatrix::mat_add`] to report it.
    fn add(self, rhs: &LTMatrix) -> LTMatrix {
        self.mat_add(rhs).expect("matrix orders must match")
    }
}

impl Sub for &LTMatrix {
    type Output = LTMatrix;
    /// Panics on order mismatch; use [`LTMatrix::mat_sub`] to report it.
    fn sub(self, rhs: &LTMatrix) -> LTMatrix {
        self.mat_sub(rhs).expect("matrix orders must match")
    }
}

impl Mul for &LTMatrix {
    type Output = LTMatrix;
    /// Panics on order mismatch; use [`LTMatrix::mat_mul`] to report it.
    fn mul(self, rhs: &LTMatrix) -> LTMatrix {
        self.mat_mul(rhs).expect("matrix orders must match")
    }
}

impl Mul<&RatVector> for &LTMatrix {
    type Output = RatVector;
    /// Panics on length mismatch; use [`LTMatrix::mat_vec`] to report it.
    fn mul(self, v: &RatVector) -> RatVector {
        self.mat_vec(v)
            .expect("vector length must match matrix order")
    }
}

impl fmt::Display for LTMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            for j in 0..self.order {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The creation matrix `H`: entry (i, i-1) = i for i = 1..m, zero elsewhere.
///
/// `H` is nilpotent of degree m+1, which is what makes every series in `H`
/// below an exact finite sum.
pub fn creation_matrix(m: usize) -> LTMatrix {
    LTMatrix::from_fn(m + 1, |i, j| {
        if i == j + 1 {
            Rat::integer(i as i64)
        } else {
            Rat::zero()
        }
    })
}

/// Generalized Pascal matrix `P(x) = e^{xH}`: entry (i, j) = C(i, j) x^(i-j).
///
/// `P(0)` is the identity and `P(1)` is the lower-triangular Pascal matrix.
pub fn pascal_generalized(m: usize, x: &Rat) -> LTMatrix {
    LTMatrix::from_fn(m + 1, |i, j| {
        if i == j {
            Rat::one()
        } else {
            binomial(i, j) * x.pow((i - j) as i32)
        }
    })
}

/// Geometric diagonal `D[l] = diag[l^0, l^1, ..., l^m]`; `l` must be nonzero.
pub fn diag_geometric(m: usize, l: &Rat) -> Result<LTMatrix> {
    if l.is_zero() {
        return Err(Error::ZeroScale);
    }
    Ok(LTMatrix::from_fn(m + 1, |i, j| {
        if i == j {
            l.pow(i as i32)
        } else {
            Rat::zero()
        }
    }))
}

/// Factorial diagonal `D_f = diag[0!, 1!, ..., m!]`.
pub fn diag_factorial(m: usize) -> LTMatrix {
    LTMatrix::from_fn(
        m + 1,
        |i, j| {
            if i == j {
                factorial(i)
            } else {
                Rat::zero()
            }
        },
    )
}

/// `f(H) = sum c_n H^n / n!` in closed form: entry (i, j) = C(i, j) c_(i-j).
///
/// The coefficient vector fixes the order; `coeffs.len()` is m+1.
pub fn series_of_h(coeffs: &RatVector) -> LTMatrix {
    assert!(!coeffs.is_empty(), "coefficient vector must be nonempty");
    LTMatrix::from_fn(coeffs.len(), |i, j| {
        if coeffs[i - j].is_zero() {
            Rat::zero()
        } else {
            binomial(i, j) * &coeffs[i - j]
        }
    })
}

/// `f(H) = sum c_n H^n / n!` evaluated literally, term by term, with
/// actual matrix powers. Independent of [`series_of_h`]; the two must agree
/// entrywise and the test suites assert that they do.
pub fn series_of_h_by_powers(coeffs: &RatVector) -> LTMatrix {
    assert!(!coeffs.is_empty(), "coefficient vector must be nonempty");
    let m = coeffs.len() - 1;
    let h = creation_matrix(m);
    let mut acc = LTMatrix::identity(m + 1).scale(&coeffs[0]);
    let mut power = LTMatrix::identity(m + 1);
    let mut fact = Rat::one();
    for n in 1..=m {
        power = &power * &h;
        fact *= &Rat::integer(n as i64);
        if coeffs[n].is_zero() {
            continue;
        }
        acc = &acc + &power.scale(&(&coeffs[n] / &fact));
    }
    acc
}
