//! The Appell vector `p(x) = M xi(x)` and its identities: evaluation,
//! differentiation, translation, forward difference, the multiplication
//! theorem, reflection symmetry, the general recurrence, linear
//! combination and composition, and reconstruction of the classical
//! (unmodified) Hermite, Laguerre, Legendre and Chebyshev values.
//!
//! Polynomials are represented only through the transfer matrix: row `n`
//! holds the coefficients of `p_n` in increasing powers of `x`. There is
//! no separate symbolic polynomial type.

use crate::error::{Error, Result};
use crate::families::{
    inverse_coefficients, taylor_coefficients, CustomCoeffs, FamilySpec, TransferMatrix,
};
use crate::matrix::{diag_factorial, diag_geometric, pascal_generalized, LTMatrix, RatVector};
use crate::rat::{binomial, Rat};

/// The monomial vector `xi(x) = [1, x, ..., x^m]`.
pub fn monomial_vector(m: usize, x: &Rat) -> RatVector {
    RatVector::from_fn(m + 1, |k| x.pow(k as i32))
}

/// Symbolic polynomial vector `p(x) = [p_0(x), ..., p_m(x)]` carried by a
/// transfer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppellVector {
    tm: TransferMatrix,
}

impl AppellVector {
    pub fn new(spec: &FamilySpec, m: usize) -> Self {
        AppellVector {
            tm: TransferMatrix::new(spec, m),
        }
    }

    pub fn from_transfer(tm: TransferMatrix) -> Self {
        AppellVector { tm }
    }

    /// Wraps a matrix produced by combination/composition; the family tag
    /// becomes a custom coefficient vector, weak-sense if `c0 = 0`.
    fn from_derived_matrix(matrix: LTMatrix) -> Self {
        let spec = FamilySpec::Custom(CustomCoeffs::weak(matrix.first_column()));
        AppellVector {
            tm: TransferMatrix::from_parts(spec, matrix),
        }
    }

    pub fn transfer(&self) -> &TransferMatrix {
        &self.tm
    }

    pub fn degree_bound(&self) -> usize {
        self.tm.degree_bound()
    }

    /// True when `c0 != 0`, i.e. the sequence is Appell in the strict
    /// sense (`deg p_n = n`). Genocchi and degenerate combinations are
    /// weak-sense: they satisfy the differential relation but not the
    /// degree condition.
    pub fn is_strict(&self) -> bool {
        !self.tm.is_singular()
    }

    /// `p(x) = M xi(x)`, exactly. At `x = 0` this is the coefficient
    /// vector `c`.
    pub fn evaluate(&self, x: &Rat) -> RatVector {
        self.tm.matrix() * &monomial_vector(self.degree_bound(), x)
    }

    /// Coefficient matrix of `d/dx p`: row `n` holds the coefficients of
    /// `p_n'`, differentiated term by term. The differential relation
    /// states this equals `H M`; the suites verify that equality rather
    /// than assuming it.
    pub fn derivative_matrix(&self) -> LTMatrix {
        let mat = self.tm.matrix();
        LTMatrix::from_fn(mat.order(), |i, j| {
            if j < i {
                Rat::integer((j + 1) as i64) * mat.entry(i, j + 1)
            } else {
                Rat::zero()
            }
        })
    }

    /// Translation route `p(x + y) = P(y) p(x)`.
    pub fn translate(&self, y: &Rat, x: &Rat) -> RatVector {
        &pascal_generalized(self.degree_bound(), y) * &self.evaluate(x)
    }

    /// Forward difference `p(x + 1) - p(x) = (P - I) p(x)`.
    pub fn forward_difference(&self, x: &Rat) -> RatVector {
        let m = self.degree_bound();
        let p = pascal_generalized(m, &Rat::one());
        &(&p - &LTMatrix::identity(m + 1)) * &self.evaluate(x)
    }

    /// Multiplication theorem, Pascal route: `p(ax) = P((a-1)x) p(x)`.
    /// Total in `a`, including `a = 0`.
    pub fn scale_argument(&self, a: &Rat, x: &Rat) -> RatVector {
        let shift = &(a - &Rat::one()) * x;
        &pascal_generalized(self.degree_bound(), &shift) * &self.evaluate(x)
    }

    /// Multiplication theorem, dilation route: `p(ax) = M D[a] xi(x)`.
    /// The geometric diagonal requires `a != 0`.
    pub fn scale_argument_dilation(&self, a: &Rat, x: &Rat) -> Result<RatVector> {
        let m = self.degree_bound();
        let d = diag_geometric(m, a)?;
        Ok(self.tm.matrix() * &(&d * &monomial_vector(m, x)))
    }

    /// Reflection symmetry about `h/2`: returns true iff
    /// `p(h) = D[-1] p(0)`, which is equivalent to the functional identity
    /// `p(h - x) = D[-1] p(x)` for all `x`. When the base check holds, the
    /// functional identity is confirmed at every sample point; a sample
    /// failing there would contradict the equivalence and panics.
    pub fn symmetry_holds(&self, h: &Rat, sample_xs: &[Rat]) -> bool {
        let m = self.degree_bound();
        let reflect = diag_geometric(m, &Rat::integer(-1)).expect("-1 is nonzero");
        if self.evaluate(h) != &reflect * &self.evaluate(&Rat::zero()) {
            return false;
        }
        for x in sample_xs {
            let lhs = self.evaluate(&(h - x));
            let rhs = &reflect * &self.evaluate(x);
            assert_eq!(
                lhs, rhs,
                "reflection symmetry must propagate from the base point"
            );
        }
        true
    }
}

/// True iff every odd-index Taylor coefficient of the family vanishes
/// (equivalently `p(-x) = D[-1] p(x)`). When it holds and `c0 != 0`, the
/// odd inverse coefficients vanish with it; that equivalence is checked
/// and a violation panics.
pub fn odd_coeffs_vanish(spec: &FamilySpec, m: usize) -> bool {
    let c = taylor_coefficients(spec, m);
    let vanish = c.iter().skip(1).step_by(2).all(Rat::is_zero);
    if vanish && !c[0].is_zero() {
        let gamma = inverse_coefficients(&c).expect("c0 != 0 was just checked");
        for n in (1..=m).step_by(2) {
            assert!(
                gamma[n].is_zero(),
                "odd Taylor and odd inverse coefficients vanish together; gamma_{n} != 0"
            );
        }
    }
    vanish
}

/// Evaluates `p_0..p_m` at `x` using only the inverse coefficients and the
/// general recurrence
/// `p_n(x) = (1/gamma_0) (x^n - sum_{k<n} C(n,k) gamma_{n-k} p_k(x))`,
/// never the transfer matrix. Must agree exactly with the matrix route.
pub fn recurrence_eval(spec: &FamilySpec, m: usize, x: &Rat) -> Result<RatVector> {
    let c = taylor_coefficients(spec, m);
    let gamma = inverse_coefficients(&c).ok_or_else(|| Error::NotInvertible {
        family: spec.to_string(),
    })?;
    let g0_inv = gamma[0].recip();
    let mut values: Vec<Rat> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let mut acc = x.pow(n as i32);
        for (k, pk) in values.iter().enumerate() {
            if gamma[n - k].is_zero() || pk.is_zero() {
                continue;
            }
            acc -= &(binomial(n, k) * &gamma[n - k]) * pk;
        }
        values.push(&g0_inv * acc);
    }
    Ok(RatVector::new(values))
}

/// Weighted sum of Appell vectors: the transfer matrix of the result is
/// the weighted sum of the inputs' transfer matrices. A degenerate result
/// (`c0 = 0`) is allowed; it reports itself through
/// [`AppellVector::is_strict`].
pub fn combine(terms: &[(Rat, AppellVector)]) -> Result<AppellVector> {
    let (first, rest) = terms.split_first().ok_or_else(|| Error::BadParameter {
        message: "combination needs at least one term".into(),
    })?;
    let mut acc = first.1.tm.matrix().scale(&first.0);
    for (weight, av) in rest {
        acc = acc.mat_add(&av.tm.matrix().scale(weight))?;
    }
    Ok(AppellVector::from_derived_matrix(acc))
}

/// Substitutes the inner sequence for the powers of `x` in the outer one:
/// `w_n(x) = v_n` with `x^k` replaced by `u_k(x)`, so `w(x) = M_v u(x)`
/// and the transfer matrix of the result is `M_v M_u`.
pub fn compose(outer: &AppellVector, inner: &AppellVector) -> Result<AppellVector> {
    let product = outer.tm.matrix().mat_mul(inner.tm.matrix())?;
    Ok(AppellVector::from_derived_matrix(product))
}

/// Classical Hermite values `H_n(x) = D[2] M xi(x)` with `M` the monic
/// Hermite transfer matrix.
pub fn classical_hermite(m: usize, x: &Rat) -> RatVector {
    let tm = TransferMatrix::new(&FamilySpec::HermiteMonic, m);
    let d2 = diag_geometric(m, &Rat::integer(2)).expect("2 is nonzero");
    &d2 * &(tm.matrix() * &monomial_vector(m, x))
}

/// The descending-parameter Laguerre ladder
/// `[L_0^(a)(x), L_1^(a-1)(x), ..., L_m^(a-m)(x)] = D_f^{-1} D[-1] (I-H)^a xi(x)`.
pub fn laguerre_descending(m: usize, alpha: &Rat, x: &Rat) -> RatVector {
    let tm = TransferMatrix::new(
        &FamilySpec::LaguerreModified {
            alpha: alpha.clone(),
        },
        m,
    );
    let v = tm.matrix() * &monomial_vector(m, x);
    let reflect = diag_geometric(m, &Rat::integer(-1)).expect("-1 is nonzero");
    let df_inv = diag_factorial(m)
        .lt_inverse()
        .expect("factorials are nonzero");
    &df_inv * &(&reflect * &v)
}

/// Generalized Laguerre values
/// `[L_0^(a)(x), ..., L_m^(a)(x)] = P D_f^{-1} D[-1] (I-H)^a xi(x)`;
/// equivalently `P(1)` applied to the descending ladder, which satisfies
/// `ladder = P(-1) * this`.
pub fn classical_laguerre(m: usize, alpha: &Rat, x: &Rat) -> RatVector {
    &pascal_generalized(m, &Rat::one()) * &laguerre_descending(m, alpha, x)
}

/// Conjugates an even-series transfer matrix by `D[s]` with `s^2 = w`:
/// entry `(i, j)` becomes `M_{ij} w^{(i-j)/2}`. Only even differences may
/// carry nonzero entries; the even-power structure is asserted, not
/// assumed, and a violation panics.
fn conjugate_even_matrix(mat: &LTMatrix, w: &Rat) -> LTMatrix {
    LTMatrix::from_fn(mat.order(), |i, j| {
        let e = mat.entry(i, j);
        if (i - j) % 2 == 0 {
            if e.is_zero() {
                Rat::zero()
            } else {
                e * w.pow(((i - j) / 2) as i32)
            }
        } else {
            assert!(
                e.is_zero(),
                "even-series matrix has a nonzero odd-difference entry at ({i}, {j})"
            );
            Rat::zero()
        }
    })
}

fn check_open_unit_interval(x: &Rat) -> Result<Rat> {
    let x2 = x * x;
    if x2 >= Rat::one() {
        return Err(Error::OutOfDomain { x: x.clone() });
    }
    Ok(&Rat::one() - &x2)
}

/// Classical Legendre values `P_n(x)` for rational `x` in `(-1, 1)`.
///
/// The defining conjugation `D[s] J_0(H) D^{-1}[s] xi(x)` with
/// `s = sqrt(1 - x^2)` never forms `s` itself: because `J_0(H)` is an even
/// series, every entry picks up `s` to an even power, i.e. a power of
/// `1 - x^2`, and the computation stays in exact rationals.
pub fn classical_legendre(m: usize, x: &Rat) -> Result<RatVector> {
    let w = check_open_unit_interval(x)?;
    let tm = TransferMatrix::new(&FamilySpec::LegendreModified, m);
    Ok(&conjugate_even_matrix(tm.matrix(), &w) * &monomial_vector(m, x))
}

/// Classical Chebyshev values of the first kind `T_n(x)`, `x` in `(-1, 1)`.
pub fn classical_chebyshev1(m: usize, x: &Rat) -> Result<RatVector> {
    let w = check_open_unit_interval(x)?;
    let tm = TransferMatrix::new(&FamilySpec::ChebyshevFirstModified, m);
    Ok(&conjugate_even_matrix(tm.matrix(), &w) * &monomial_vector(m, x))
}

/// Classical Chebyshev values of the second kind `U_n(x)`, `x` in `(-1, 1)`.
/// The family carries a `1/(n+1)` normalization, undone here by the final
/// `diag[1, 2, ..., m+1]`.
pub fn classical_chebyshev2(m: usize, x: &Rat) -> Result<RatVector> {
    let w = check_open_unit_interval(x)?;
    let tm = TransferMatrix::new(&FamilySpec::ChebyshevSecondModified, m);
    let v = &conjugate_even_matrix(tm.matrix(), &w) * &monomial_vector(m, x);
    Ok(RatVector::from_fn(m + 1, |n| {
        Rat::integer((n + 1) as i64) * &v[n]
    }))
}
