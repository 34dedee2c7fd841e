//! Transfer-matrix builders for the supported polynomial families.
//!
//! Each family is determined by the factor `f` of its generating function
//! `f(t) e^{xt}`; its transfer matrix is `M = f(H)`, built here by the
//! family's defining expression: literal truncated series in `H`,
//! triangular inversion, or products of both. The closed form
//! `M_{ij} = C(i,j) c_{i-j}` is deliberately *not* used by these builders
//! (except for user-supplied coefficient vectors, where it is the
//! definition); the kernel's two series paths stay independent so the test
//! suites can compare them.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{creation_matrix, pascal_generalized, series_of_h, LTMatrix, RatVector};
use crate::rat::{binomial, factorial, Rat};

/// Identifies a polynomial family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `f = 1`: the monomials `x^n`.
    Monomial,
    /// `f = t/(e^t - 1)`: Bernoulli polynomials.
    Bernoulli,
    /// `f = 2/(e^t + 1)`: Euler polynomials.
    Euler,
    /// `f = e^{-t^2/4}`: monic Hermite polynomials `2^{-n} H_n`.
    HermiteMonic,
    /// `f = (1-t)^alpha`: the rescaled Laguerre family `(-1)^n n! L_n^(alpha-n)`.
    LaguerreModified { alpha: Rat },
    /// `f = J_0(t)`: Legendre polynomials after the Appell change of variables.
    LegendreModified,
    /// `f = cos t`: Chebyshev polynomials of the first kind, rescaled likewise.
    ChebyshevFirstModified,
    /// `f = sinc t`: Chebyshev polynomials of the second kind (with the
    /// 1/(n+1) normalization), rescaled likewise.
    ChebyshevSecondModified,
    /// `f = 2t/(e^t + 1)`: Genocchi polynomials, the sanctioned `c0 = 0`
    /// boundary case whose transfer matrix is singular.
    Genocchi,
    /// `f = (t/(e^t - 1))^2`: 2-iterated Bernoulli polynomials.
    Bernoulli2Iterated,
    /// `f = (2/(e^t + 1))^2`: 2-iterated Euler polynomials.
    Euler2Iterated,
    /// `f = 2t/((e^t + 1)(e^t - 1)) * ...`: the Bernoulli-Euler mixed family,
    /// transfer matrix `2((P + I) sum H^n/(n+1)!)^{-1}`.
    BernoulliEulerMixed,
    /// Inverse Taylor data `gamma_0 = 1`, `gamma_k = gamma_bar` for `k >= 1`,
    /// so `M^{-1} = (1 - gamma_bar) I + gamma_bar P`.
    GeneralizedEuler { gamma_bar: Rat },
    /// User-supplied Taylor coefficients `c_0..c_m` with `c_0 != 0`.
    Custom(CustomCoeffs),
}

/// Validated coefficient vector for [`FamilySpec::Custom`].
///
/// The public constructor enforces the Appell condition `c0 != 0`. Linear
/// combinations of Appell vectors may legitimately degenerate to `c0 = 0`
/// (Appell only in the weak sense); those are built through the crate-private
/// path and surface as vectors whose `is_strict` flag is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomCoeffs {
    coeffs: RatVector,
}

impl CustomCoeffs {
    pub fn new(coeffs: RatVector) -> Result<Self> {
        if coeffs.is_empty() || coeffs[0].is_zero() {
            return Err(Error::InvalidCustomCoeffs);
        }
        Ok(CustomCoeffs { coeffs })
    }

    pub(crate) fn weak(coeffs: RatVector) -> Self {
        assert!(!coeffs.is_empty(), "coefficient vector must be nonempty");
        CustomCoeffs { coeffs }
    }

    pub fn coeffs(&self) -> &RatVector {
        &self.coeffs
    }
}

impl FamilySpec {
    /// Convenience for `FamilySpec::Custom(CustomCoeffs::new(..)?)`.
    pub fn custom(coeffs: RatVector) -> Result<Self> {
        Ok(FamilySpec::Custom(CustomCoeffs::new(coeffs)?))
    }

    /// The exact serialization name used by the CLI and output documents.
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Monomial => "monomial",
            FamilySpec::Bernoulli => "bernoulli",
            FamilySpec::Euler => "euler",
            FamilySpec::HermiteMonic => "hermite-monic",
            FamilySpec::LaguerreModified { .. } => "laguerre-modified",
            FamilySpec::LegendreModified => "legendre-modified",
            FamilySpec::ChebyshevFirstModified => "chebyshev1-modified",
            FamilySpec::ChebyshevSecondModified => "chebyshev2-modified",
            FamilySpec::Genocchi => "genocchi",
            FamilySpec::Bernoulli2Iterated => "bernoulli-2it",
            FamilySpec::Euler2Iterated => "euler-2it",
            FamilySpec::BernoulliEulerMixed => "bernoulli-euler",
            FamilySpec::GeneralizedEuler { .. } => "generalized-euler",
            FamilySpec::Custom(_) => "custom",
        }
    }

    /// Resolves a serialization name plus optional parameters.
    ///
    /// Exactly the parameters a kind demands must be present: `alpha` for
    /// `laguerre-modified`, `gamma-bar` for `generalized-euler`, none
    /// otherwise. `custom` cannot be built from a name alone.
    pub fn from_name(name: &str, alpha: Option<Rat>, gamma_bar: Option<Rat>) -> Result<Self> {
        let spec = match name {
            "monomial" => FamilySpec::Monomial,
            "bernoulli" => FamilySpec::Bernoulli,
            "euler" => FamilySpec::Euler,
            "hermite-monic" => FamilySpec::HermiteMonic,
            "laguerre-modified" => {
                let alpha = alpha.ok_or_else(|| Error::BadParameter {
                    message: "laguerre-modified requires --alpha".into(),
                })?;
                if gamma_bar.is_some() {
                    return Err(Error::BadParameter {
                        message: "laguerre-modified takes no --gamma-bar".into(),
                    });
                }
                return Ok(FamilySpec::LaguerreModified { alpha });
            }
            "legendre-modified" => FamilySpec::LegendreModified,
            "chebyshev1-modified" => FamilySpec::ChebyshevFirstModified,
            "chebyshev2-modified" => FamilySpec::ChebyshevSecondModified,
            "genocchi" => FamilySpec::Genocchi,
            "bernoulli-2it" => FamilySpec::Bernoulli2Iterated,
            "euler-2it" => FamilySpec::Euler2Iterated,
            "bernoulli-euler" => FamilySpec::BernoulliEulerMixed,
            "generalized-euler" => {
                let gamma_bar = gamma_bar.ok_or_else(|| Error::BadParameter {
                    message: "generalized-euler requires --gamma-bar".into(),
                })?;
                if alpha.is_some() {
                    return Err(Error::BadParameter {
                        message: "generalized-euler takes no --alpha".into(),
                    });
                }
                return Ok(FamilySpec::GeneralizedEuler { gamma_bar });
            }
            "custom" => {
                return Err(Error::BadParameter {
                    message: "custom requires an explicit coefficient vector".into(),
                })
            }
            other => {
                return Err(Error::UnknownFamily {
                    name: other.to_owned(),
                })
            }
        };
        if alpha.is_some() {
            return Err(Error::BadParameter {
                message: format!("{name} takes no --alpha"),
            });
        }
        if gamma_bar.is_some() {
            return Err(Error::BadParameter {
                message: format!("{name} takes no --gamma-bar"),
            });
        }
        Ok(spec)
    }

    /// Families whose `f` is an even series, so every odd Taylor
    /// coefficient vanishes and `p(-x) = D[-1] p(x)`.
    pub fn is_even_family(&self) -> bool {
        matches!(
            self,
            FamilySpec::HermiteMonic
                | FamilySpec::LegendreModified
                | FamilySpec::ChebyshevFirstModified
                | FamilySpec::ChebyshevSecondModified
        )
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::LaguerreModified { alpha } => {
                write!(f, "laguerre-modified(alpha={alpha})")
            }
            FamilySpec::GeneralizedEuler { gamma_bar } => {
                write!(f, "generalized-euler(gamma-bar={gamma_bar})")
            }
            other => f.write_str(other.name()),
        }
    }
}

/// A transfer matrix `M = f(H)` together with its Taylor data and the
/// family it came from.
///
/// Row `n` of the matrix holds the coefficients of `p_n` in increasing
/// powers of `x`; the first column is the coefficient vector
/// `c_n = p_n(0)`, and `M_{ij} = C(i,j) c_{i-j}`. The diagonal is the
/// constant `c_0`, so `M` is invertible exactly when `c_0 != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    spec: FamilySpec,
    matrix: LTMatrix,
    coeffs: RatVector,
}

impl TransferMatrix {
    /// Builds the transfer matrix of `spec` at degree bound `m`.
    pub fn new(spec: &FamilySpec, m: usize) -> Self {
        let matrix = build_matrix(spec, m);
        TransferMatrix::from_parts(spec.clone(), matrix)
    }

    pub(crate) fn from_parts(spec: FamilySpec, matrix: LTMatrix) -> Self {
        let coeffs = matrix.first_column();
        TransferMatrix {
            spec,
            matrix,
            coeffs,
        }
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    /// The degree bound `m`; the matrix order is `m + 1`.
    pub fn degree_bound(&self) -> usize {
        self.matrix.order() - 1
    }

    pub fn matrix(&self) -> &LTMatrix {
        &self.matrix
    }

    /// Taylor coefficients `c_0..c_m` of `f`, i.e. `p_n(0)`.
    pub fn coeffs(&self) -> &RatVector {
        &self.coeffs
    }

    pub fn is_singular(&self) -> bool {
        self.coeffs[0].is_zero()
    }
}

/// Transfer matrix of `spec` at degree bound `m` (alias for
/// [`TransferMatrix::new`]).
pub fn transfer_matrix(spec: &FamilySpec, m: usize) -> TransferMatrix {
    TransferMatrix::new(spec, m)
}

/// Taylor coefficients `c_0..c_m` of the family's `f`, the first column of
/// its transfer matrix.
pub fn taylor_coefficients(spec: &FamilySpec, m: usize) -> RatVector {
    TransferMatrix::new(spec, m).coeffs.clone()
}

/// Generalized binomial coefficient `C(alpha, n) = alpha(alpha-1)...(alpha-n+1)/n!`
/// for rational `alpha`; 1 when `n = 0`.
pub fn generalized_binomial(alpha: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= &(alpha - &Rat::integer(i as i64));
    }
    acc / factorial(n)
}

/// Coefficients `gamma_0..gamma_m` of the inverse series `1/f`, by the
/// recurrence `gamma_0 = 1/c_0`,
/// `gamma_k = -(1/c_0) sum_{s<k} C(k,s) c_{k-s} gamma_s`.
///
/// Returns `None` when `c_0 = 0` (no inverse series exists).
pub fn inverse_coefficients(c: &RatVector) -> Option<RatVector> {
    if c.is_empty() || c[0].is_zero() {
        return None;
    }
    let c0_inv = c[0].recip();
    let mut gamma: Vec<Rat> = Vec::with_capacity(c.len());
    gamma.push(c0_inv.clone());
    for k in 1..c.len() {
        let mut s = Rat::zero();
        for (idx, g) in gamma.iter().enumerate() {
            if g.is_zero() || c[k - idx].is_zero() {
                continue;
            }
            s += &(binomial(k, idx) * &c[k - idx]) * g;
        }
        gamma.push(-&c0_inv * s);
    }
    Some(RatVector::new(gamma))
}

/// Inverse-series coefficients of a family: `series_of_h(gamma)` is the
/// exact inverse of the transfer matrix. Fails for `c_0 = 0` (Genocchi).
pub fn gamma_coefficients(spec: &FamilySpec, m: usize) -> Result<RatVector> {
    inverse_coefficients(&taylor_coefficients(spec, m)).ok_or_else(|| Error::NotInvertible {
        family: spec.to_string(),
    })
}

/// `P + I` at order `m + 1`, the recurring Euler/Genocchi building block.
fn pascal_plus_identity(m: usize) -> LTMatrix {
    &pascal_generalized(m, &Rat::one()) + &LTMatrix::identity(m + 1)
}

/// `sum_{n=0}^{m} H^n / (n+1)!`, the matrix whose inverse is the Bernoulli
/// transfer matrix.
fn bernoulli_inner(m: usize) -> LTMatrix {
    let h = creation_matrix(m);
    let mut acc = LTMatrix::identity(m + 1);
    let mut power = LTMatrix::identity(m + 1);
    let mut fact = Rat::one(); // (n+1)!
    for n in 1..=m {
        power = &power * &h;
        fact *= &Rat::integer((n + 1) as i64);
        acc = &acc + &power.scale(&fact.recip());
    }
    acc
}

/// `sum over 2k <= m of coeff(k) H^{2k}`, the shape shared by the even
/// families (Hermite, Legendre, both Chebyshev kinds).
fn even_h_series(m: usize, mut coeff: impl FnMut(usize) -> Rat) -> LTMatrix {
    let h = creation_matrix(m);
    let h2 = &h * &h;
    let mut acc = LTMatrix::identity(m + 1).scale(&coeff(0));
    let mut power = LTMatrix::identity(m + 1);
    let mut k = 1;
    while 2 * k <= m {
        power = &power * &h2;
        let c = coeff(k);
        if !c.is_zero() {
            acc = &acc + &power.scale(&c);
        }
        k += 1;
    }
    acc
}

fn sign(k: usize) -> Rat {
    if k.is_multiple_of(2) {
        Rat::one()
    } else {
        Rat::integer(-1)
    }
}

fn build_matrix(spec: &FamilySpec, m: usize) -> LTMatrix {
    match spec {
        FamilySpec::Monomial => LTMatrix::identity(m + 1),
        FamilySpec::Bernoulli => bernoulli_inner(m)
            .lt_inverse()
            .expect("sum H^n/(n+1)! has unit diagonal"),
        FamilySpec::Euler => pascal_plus_identity(m)
            .lt_inverse()
            .expect("P + I has diagonal 2")
            .scale(&Rat::integer(2)),
        FamilySpec::HermiteMonic => {
            // e^{-H^2/4} = sum (-1)^k H^{2k} / (4^k k!)
            even_h_series(m, |k| {
                sign(k) / (Rat::integer(4).pow(k as i32) * factorial(k))
            })
        }
        FamilySpec::LaguerreModified { alpha } => {
            // (I - H)^alpha = sum C(alpha, n) (-H)^n
            let h = creation_matrix(m);
            let mut acc = LTMatrix::identity(m + 1);
            let mut power = LTMatrix::identity(m + 1);
            for n in 1..=m {
                power = &power * &h;
                let c = &sign(n) * &generalized_binomial(alpha, n);
                if !c.is_zero() {
                    acc = &acc + &power.scale(&c);
                }
            }
            acc
        }
        FamilySpec::LegendreModified => {
            // J_0(H) = sum (-1)^k H^{2k} / (4^k (k!)^2)
            even_h_series(m, |k| {
                let f = factorial(k);
                sign(k) / (Rat::integer(4).pow(k as i32) * &f * &f)
            })
        }
        FamilySpec::ChebyshevFirstModified => {
            // cos H = sum (-1)^k H^{2k} / (2k)!
            even_h_series(m, |k| sign(k) / factorial(2 * k))
        }
        FamilySpec::ChebyshevSecondModified => {
            // sinc H = sum (-1)^k H^{2k} / (2k+1)!
            even_h_series(m, |k| sign(k) / factorial(2 * k + 1))
        }
        FamilySpec::Genocchi => {
            let inv = pascal_plus_identity(m)
                .lt_inverse()
                .expect("P + I has diagonal 2");
            &creation_matrix(m).scale(&Rat::integer(2)) * &inv
        }
        FamilySpec::Bernoulli2Iterated => {
            let s = bernoulli_inner(m);
            (&s * &s)
                .lt_inverse()
                .expect("square of a unit-diagonal matrix has unit diagonal")
        }
        FamilySpec::Euler2Iterated => {
            let q = pascal_plus_identity(m);
            (&q * &q)
                .lt_inverse()
                .expect("(P + I)^2 has diagonal 4")
                .scale(&Rat::integer(4))
        }
        FamilySpec::BernoulliEulerMixed => {
            let q = pascal_plus_identity(m);
            let s = bernoulli_inner(m);
            (&q * &s)
                .lt_inverse()
                .expect("(P + I) sum H^n/(n+1)! has diagonal 2")
                .scale(&Rat::integer(2))
        }
        FamilySpec::GeneralizedEuler { gamma_bar } => {
            let inv = &LTMatrix::identity(m + 1).scale(&(&Rat::one() - gamma_bar))
                + &pascal_generalized(m, &Rat::one()).scale(gamma_bar);
            inv.lt_inverse().expect("(1 - g) I + g P has unit diagonal")
        }
        FamilySpec::Custom(custom) => {
            // Truncate or zero-extend the supplied coefficients to c_0..c_m.
            let supplied = custom.coeffs();
            let coeffs = RatVector::from_fn(m + 1, |n| {
                if n < supplied.len() {
                    supplied[n].clone()
                } else {
                    Rat::zero()
                }
            });
            series_of_h(&coeffs)
        }
    }
}
