//! Coronals of signed graphs, the diagonal-shifted determinant
//! polynomials, and the factorization of characteristic, Laplacian, and
//! signless-Laplacian polynomials of generalized corona products,
//! including the bipartite square-root forms and cospectrality tests.

use num_traits::One;
use thiserror::Error;

use crate::algebra::{
    char_poly, rat, ratfun_matrix_det, solve_linear_system, Matrix, Polynomial, Rational,
    RationalFunction,
};
use crate::corona::CoronaSpec;
use crate::graph::SignedGraph;

/// Which matrix a coronal or polynomial refers to. The Laplacian and
/// signless variants evaluate their resolvents at a unit-shifted
/// variable: χ(x) = μᵀ((x-1)I - M)⁻¹μ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronalKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl CoronalKind {
    pub const ALL: [CoronalKind; 3] = [
        CoronalKind::Adjacency,
        CoronalKind::Laplacian,
        CoronalKind::SignlessLaplacian,
    ];

    pub fn matrix_of(self, g: &SignedGraph) -> Matrix<Rational> {
        match self {
            CoronalKind::Adjacency => g.adjacency(),
            CoronalKind::Laplacian => g.laplacian(),
            CoronalKind::SignlessLaplacian => g.signless_laplacian(),
        }
    }

    /// Resolvent shift: 0 for the adjacency kind, 1 for the others.
    pub fn shift(self) -> i64 {
        match self {
            CoronalKind::Adjacency => 0,
            _ => 1,
        }
    }

    /// det(xI - M(g)), the plain polynomial of this kind.
    pub fn char_poly_of(self, g: &SignedGraph) -> Polynomial {
        char_poly(&self.matrix_of(g))
    }

    /// The satellite factor of the product theorems: det(xI - M)
    /// evaluated at x-1 for the shifted kinds.
    pub fn shifted_char_poly_of(self, g: &SignedGraph) -> Polynomial {
        let p = self.char_poly_of(g);
        match self.shift() {
            0 => p,
            s => p.compose(&Polynomial::from_coeffs(vec![rat(-s), Rational::one()])),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("factor product failed to clear to a polynomial")]
    InternalInconsistency,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartition parts have sizes {left} and {right}; equal parts are required")]
    PartsUnequal { left: usize, right: usize },
    #[error("underlying graph is not regular")]
    NotRegular,
    #[error("base characteristic polynomial is not even")]
    NonEvenPolynomial,
    #[error("this factorization applies to the Laplacian and signless-Laplacian kinds")]
    ShiftedKindRequired,
}

/// μᵀ((x-shift)I - M)⁻¹μ computed by solving the linear system over the
/// rational-function field. The null graph has coronal 0.
pub fn coronal(h: &SignedGraph, kind: CoronalKind) -> RationalFunction {
    let n = h.order();
    if n == 0 {
        return RationalFunction::zero();
    }
    let m = kind.matrix_of(h);
    let shift = rat(kind.shift());
    let system = Matrix::from_fn(n, n, |i, j| {
        let entry = -m.get(i, j).clone();
        RationalFunction::from_poly(if i == j {
            Polynomial::from_coeffs(vec![entry - &shift, Rational::one()])
        } else {
            Polynomial::constant(entry)
        })
    });
    let mu = h.marking();
    let rhs: Vec<RationalFunction> = mu
        .signs()
        .iter()
        .map(|s| RationalFunction::from_rational(s.rational()))
        .collect();
    let y = solve_linear_system(&system, &rhs)
        .expect("shifted resolvent is invertible over the function field");
    mu.signs()
        .iter()
        .zip(&y)
        .fold(RationalFunction::zero(), |acc, (s, yi)| {
            if s.is_positive() {
                &acc + yi
            } else {
                &acc - yi
            }
        })
}

/// The same coronal through the matrix determinant lemma:
/// μᵀ(B)⁻¹μ = (det B - det(B - μμᵀ)) / det B with B = (x-shift)I - M,
/// i.e. a quotient of two ordinary characteristic polynomials evaluated
/// at the shifted variable. Serves as an independent cross-check of
/// [`coronal`].
pub fn coronal_rank_one(h: &SignedGraph, kind: CoronalKind) -> RationalFunction {
    let n = h.order();
    if n == 0 {
        return RationalFunction::zero();
    }
    let m = kind.matrix_of(h);
    let mu = h.marking();
    let bumped = Matrix::from_fn(n, n, |i, j| {
        m.get(i, j) + &(mu.get(i).rational() * mu.get(j).rational())
    });
    let base = char_poly(&m);
    let shifted = char_poly(&bumped);
    let (base, shifted) = match kind.shift() {
        0 => (base, shifted),
        s => {
            let arg = Polynomial::from_coeffs(vec![rat(-s), Rational::one()]);
            (base.compose(&arg), shifted.compose(&arg))
        }
    };
    RationalFunction::new(&base - &shifted, base).expect("characteristic polynomial is nonzero")
}

/// Closed form n/(x-k) for a k-net-regular graph whose marking is
/// uniform (the uniformity is what makes μ an eigenvector of A).
pub fn coronal_net_regular(h: &SignedGraph) -> Option<RationalFunction> {
    let k = h.net_regularity()?;
    h.marking().uniform_sign()?;
    Some(
        RationalFunction::new(
            Polynomial::constant(rat(h.order() as i64)),
            Polynomial::from_coeffs(vec![rat(-k), Rational::one()]),
        )
        .expect("linear denominator"),
    )
}

/// Closed forms n/(x-1-2d⁻) (Laplacian) and n/(x-1-2d⁺) (signless) for
/// co-regular graphs with a uniform marking and a shared negative
/// (resp. positive) degree. None for the adjacency kind.
pub fn coronal_co_regular(h: &SignedGraph, kind: CoronalKind) -> Option<RationalFunction> {
    if kind == CoronalKind::Adjacency {
        return None;
    }
    h.co_regularity()?;
    h.marking().uniform_sign()?;
    let profiles = h.degree_profiles();
    let first = *profiles.first()?;
    let pole = match kind {
        CoronalKind::Laplacian => {
            if !profiles.iter().all(|p| p.d_minus == first.d_minus) {
                return None;
            }
            1 + 2 * first.d_minus as i64
        }
        CoronalKind::SignlessLaplacian => {
            if !profiles.iter().all(|p| p.d_plus == first.d_plus) {
                return None;
            }
            1 + 2 * first.d_plus as i64
        }
        CoronalKind::Adjacency => unreachable!(),
    };
    Some(
        RationalFunction::new(
            Polynomial::constant(rat(h.order() as i64)),
            Polynomial::from_coeffs(vec![rat(-pole), Rational::one()]),
        )
        .expect("linear denominator"),
    )
}

/// det(diag(x - shiftᵢ - χᵢ) - M(g)) over the rational-function field,
/// where shiftᵢ is the satellite order tᵢ for the Laplacian and signless
/// kinds and 0 for the adjacency kind.
pub fn g_determinant(
    chis: &[RationalFunction],
    g: &SignedGraph,
    kind: CoronalKind,
    satellite_orders: &[usize],
) -> Result<RationalFunction, SpectralError> {
    let n = g.order();
    if chis.len() != n {
        return Err(SpectralError::LengthMismatch {
            expected: n,
            got: chis.len(),
        });
    }
    if kind != CoronalKind::Adjacency && satellite_orders.len() != n {
        return Err(SpectralError::LengthMismatch {
            expected: n,
            got: satellite_orders.len(),
        });
    }
    let m = kind.matrix_of(g);
    let x = RationalFunction::x();
    let matrix = Matrix::from_fn(n, n, |i, j| {
        let entry = RationalFunction::from_rational(-m.get(i, j).clone());
        if i == j {
            let order_shift = if kind == CoronalKind::Adjacency {
                RationalFunction::zero()
            } else {
                RationalFunction::from_rational(rat(satellite_orders[i] as i64))
            };
            &(&(&x - &order_shift) - &chis[i]) + &entry
        } else {
            entry
        }
    });
    Ok(ratfun_matrix_det(&matrix))
}

/// A polynomial together with a factorization retained for display;
/// the factor product equals the expanded polynomial exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub factors: Vec<(Polynomial, u32)>,
    pub expanded: Polynomial,
}

impl FactoredPoly {
    pub fn product_of_factors(&self) -> Polynomial {
        self.factors.iter().fold(Polynomial::one(), |acc, (f, m)| {
            &acc * &f.pow(*m)
        })
    }
}

/// Multiplies the polynomial factors with a rational-function tail and
/// clears the denominator, distributing the cancellation through the
/// factor list so the retained factors stay polynomial.
fn assemble_factored(
    factor_polys: Vec<Polynomial>,
    tail: RationalFunction,
) -> Result<FactoredPoly, SpectralError> {
    let product = factor_polys
        .iter()
        .fold(Polynomial::one(), |acc, f| &acc * f);
    let numer = &product * tail.num();
    let (expanded, rem) = numer.divrem(tail.den()).expect("denominator is nonzero");
    if !rem.is_zero() {
        return Err(SpectralError::InternalInconsistency);
    }
    if expanded.is_zero() {
        return Ok(FactoredPoly {
            factors: vec![(Polynomial::zero(), 1)],
            expanded,
        });
    }

    let mut parts = factor_polys;
    parts.push(tail.num().clone());
    let mut remaining = tail.den().clone();
    while remaining.degree().is_some_and(|d| d > 0) {
        let mut progressed = false;
        for f in parts.iter_mut() {
            if remaining.degree().is_some_and(|d| d == 0) {
                break;
            }
            let g = f.gcd(&remaining);
            if g.degree().is_some_and(|d| d > 0) {
                *f = f.exact_div(&g);
                remaining = remaining.exact_div(&g);
                progressed = true;
            }
        }
        if !progressed {
            return Err(SpectralError::InternalInconsistency);
        }
    }

    let mut constant = Rational::one();
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    for part in parts {
        match part.degree() {
            None => return Err(SpectralError::InternalInconsistency),
            Some(0) => constant *= part.coeff(0),
            Some(_) => {
                if let Some(slot) = factors.iter_mut().find(|(f, _)| *f == part) {
                    slot.1 += 1;
                } else {
                    factors.push((part, 1));
                }
            }
        }
    }
    if !constant.is_one() {
        factors.insert(0, (Polynomial::constant(constant), 1));
    }
    Ok(FactoredPoly { factors, expanded })
}

/// The product factorization theorem for the chosen kind:
/// the product's polynomial equals Πₗ f(H_l, shifted) times the
/// g-determinant of the base in the satellite coronals. The expanded
/// result equals det(xI - M(product)) exactly.
pub fn corona_poly(spec: &CoronaSpec, kind: CoronalKind) -> Result<FactoredPoly, SpectralError> {
    let factors: Vec<Polynomial> = spec
        .satellites()
        .iter()
        .map(|h| kind.shifted_char_poly_of(h))
        .collect();
    let chis: Vec<RationalFunction> = spec
        .satellites()
        .iter()
        .map(|h| coronal(h, kind))
        .collect();
    let tail = g_determinant(&chis, spec.base(), kind, &spec.satellite_orders())?;
    assemble_factored(factors, tail)
}

/// Exact equality of the two graphs' polynomials of the given kind.
pub fn cospectral(g1: &SignedGraph, g2: &SignedGraph, kind: CoronalKind) -> bool {
    kind.char_poly_of(g1) == kind.char_poly_of(g2)
}

/// The two even "square-root" polynomials of a bipartite graph: with
/// adjacency [[0, W], [Wᵀ, 0]] under the parts (left, right), left_gram
/// is det(yI - WWᵀ) and right_gram is det(yI - WᵀW), recovered from the
/// characteristic polynomial by stripping the power of x and halving
/// degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSplit {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_gram: Polynomial,
    pub right_gram: Polynomial,
}

pub fn bipartite_split(g: &SignedGraph) -> Result<BipartiteSplit, SpectralError> {
    let (left, right) = g.bipartition().ok_or(SpectralError::NotBipartite)?;
    let n = g.order();
    let h = left.len();
    let f = char_poly(&g.adjacency());
    let (left_gram, right_gram) = if n >= 2 * h {
        let pad = n - 2 * h;
        let reduced = f.exact_div(&Polynomial::monomial(Rational::one(), pad));
        let left_gram = reduced
            .even_substitute()
            .expect("bipartite characteristic polynomial is even after removing the x power");
        let right_gram = &left_gram * &Polynomial::monomial(Rational::one(), pad);
        (left_gram, right_gram)
    } else {
        let pad = 2 * h - n;
        let reduced = f.exact_div(&Polynomial::monomial(Rational::one(), pad));
        let right_gram = reduced
            .even_substitute()
            .expect("bipartite characteristic polynomial is even after removing the x power");
        let left_gram = &right_gram * &Polynomial::monomial(Rational::one(), pad);
        (left_gram, right_gram)
    };
    Ok(BipartiteSplit {
        left,
        right,
        left_gram,
        right_gram,
    })
}

/// The corona spec equivalent to assigning `z1` to every left-part
/// vertex of a bipartite base and `z2` to every right-part vertex.
pub fn two_family_spec(
    g: &SignedGraph,
    z1: &SignedGraph,
    z2: &SignedGraph,
) -> Result<CoronaSpec, SpectralError> {
    let (left, _) = g.bipartition().ok_or(SpectralError::NotBipartite)?;
    let satellites = (0..g.order())
        .map(|v| {
            if left.contains(&v) {
                z1.clone()
            } else {
                z2.clone()
            }
        })
        .collect();
    CoronaSpec::new(g.clone(), satellites).map_err(|_| SpectralError::InternalInconsistency)
}

/// Characteristic polynomial of the corona over a bipartite base with
/// one satellite family per part, via the square-root polynomials:
/// the gram polynomial of the larger part is evaluated at
/// (x - χ_{Z1})(x - χ_{Z2}) and scaled by the leftover linear power.
pub fn bipartite_two_family_char_poly(
    g: &SignedGraph,
    z1: &SignedGraph,
    z2: &SignedGraph,
) -> Result<FactoredPoly, SpectralError> {
    let split = bipartite_split(g)?;
    let n = g.order();
    let i = split.left.len();
    let chi1 = coronal(z1, CoronalKind::Adjacency);
    let chi2 = coronal(z2, CoronalKind::Adjacency);
    let x = RationalFunction::x();
    let arg = &(&x - &chi1) * &(&x - &chi2);
    let tail = if n >= 2 * i {
        let power = (&x - &chi2).pow((n - 2 * i) as u32);
        &power * &split.left_gram.eval_ratfun(&arg)
    } else {
        let power = (&x - &chi1).pow((2 * i - n) as u32);
        &power * &split.right_gram.eval_ratfun(&arg)
    };
    let mut factors = vec![CoronalKind::Adjacency.char_poly_of(z1); i];
    factors.extend(vec![CoronalKind::Adjacency.char_poly_of(z2); n - i]);
    assemble_factored(factors, tail)
}

/// Laplacian or signless-Laplacian polynomial of the corona over an
/// equal-part bipartite base with a regular underlying graph, one
/// satellite family per part: the even part of the base characteristic
/// polynomial evaluated at (x-m-r-χ₁)(x-s-r-χ₂) times the shifted
/// satellite factors.
pub fn bipartite_regular_poly(
    g: &SignedGraph,
    z1: &SignedGraph,
    z2: &SignedGraph,
    kind: CoronalKind,
) -> Result<FactoredPoly, SpectralError> {
    if kind == CoronalKind::Adjacency {
        return Err(SpectralError::ShiftedKindRequired);
    }
    let split = bipartite_split(g)?;
    let k = split.left.len();
    if split.right.len() != k {
        return Err(SpectralError::PartsUnequal {
            left: k,
            right: split.right.len(),
        });
    }
    let profiles = g.degree_profiles();
    let r = profiles.first().map_or(0, |p| p.total());
    if !profiles.iter().all(|p| p.total() == r) {
        return Err(SpectralError::NotRegular);
    }
    let f_hat = char_poly(&g.adjacency())
        .even_substitute()
        .map_err(|_| SpectralError::NonEvenPolynomial)?;
    let x = RationalFunction::x();
    let offset1 = RationalFunction::from_rational(rat((z1.order() + r) as i64));
    let offset2 = RationalFunction::from_rational(rat((z2.order() + r) as i64));
    let arg1 = &(&x - &offset1) - &coronal(z1, kind);
    let arg2 = &(&x - &offset2) - &coronal(z2, kind);
    let tail = f_hat.eval_ratfun(&(&arg1 * &arg2));
    let mut factors = vec![kind.shifted_char_poly_of(z1); k];
    factors.extend(vec![kind.shifted_char_poly_of(z2); k]);
    assemble_factored(factors, tail)
}
