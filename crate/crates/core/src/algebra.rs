//! Exact scalars, projective points, monomial bases and homogeneous forms.
//!
//! All arithmetic is over the rationals. A plane point doubles as a linear
//! form up to scale, and its d-th power (a form of degree d) is the
//! representative of the point's image under the degree-d Veronese map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps a reduced fraction with a
/// positive denominator, which is exactly the canonical form we need.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational p/q. Panics on q = 0.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Number of monomials of degree `d` in three variables, C(d+2, 2).
pub fn basis_len(d: usize) -> usize {
    (d + 2) * (d + 1) / 2
}

/// A point of the projective plane in canonical homogeneous coordinates:
/// integer entries with gcd 1 and positive first nonzero coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [BigInt; 3],
}

impl ProjPoint {
    /// Canonicalizes integer homogeneous coordinates.
    pub fn new(coords: [impl Into<BigInt>; 3]) -> Result<Self> {
        let [a, b, c] = coords;
        Self::canonical([a.into(), b.into(), c.into()])
    }

    /// Clears denominators of rational coordinates and canonicalizes.
    pub fn from_rationals(coords: [Scalar; 3]) -> Result<Self> {
        let lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = coords.map(|c| {
            let q = &lcm / c.denom();
            c.numer() * q
        });
        Self::canonical(ints)
    }

    fn canonical(mut coords: [BigInt; 3]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidPoint { index: None });
        }
        let gcd = coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        for c in coords.iter_mut() {
            *c = &*c / &gcd;
        }
        let leading_negative = coords
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if leading_negative {
            for c in coords.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// Normalizes rational homogeneous coordinates to a canonical point.
pub fn normalize_point(coords: [Scalar; 3]) -> Result<ProjPoint> {
    ProjPoint::from_rationals(coords)
}

/// Exponent triple (i, j, k) with i + j + k equal to the basis degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: [usize; 3],
}

impl Monomial {
    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// Position of this monomial in `monomial_basis(self.degree())`.
    pub fn index(&self) -> usize {
        let [i, j, _] = self.exponents;
        let d = self.degree();
        let before = (d - i) * (d - i + 1) / 2;
        before + (d - i - j)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [i, j, k] = self.exponents;
        write!(f, "x^{i} y^{j} z^{k}")
    }
}

/// All degree-`d` monomials in graded-lex order with x > y > z
/// (exponent triples in descending lexicographic order).
pub fn monomial_basis(d: usize) -> Vec<Monomial> {
    let mut basis = Vec::with_capacity(basis_len(d));
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            basis.push(Monomial {
                exponents: [i, j, d - i - j],
            });
        }
    }
    basis
}

/// Homogeneous form of a fixed degree as a dense coefficient vector over
/// the monomial basis of that degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: vec![Scalar::zero(); basis_len(degree)],
        }
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != basis_len(degree) {
            return Err(Error::DimensionError {
                got: coeffs.len(),
                expected: basis_len(degree),
            });
        }
        Ok(Self { degree, coeffs })
    }

    /// Form with integer coefficients, e.g. a kernel witness vector.
    pub fn from_int_coeffs(degree: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        Self::from_coeffs(
            degree,
            coeffs.into_iter().map(BigRational::from_integer).collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, m: &Monomial) -> &Scalar {
        debug_assert_eq!(m.degree(), self.degree);
        &self.coeffs[m.index()]
    }

    /// Evaluates the form at integer homogeneous coordinates.
    pub fn eval(&self, point: &ProjPoint) -> Scalar {
        let [a, b, c] = point.coords();
        let mut acc = Scalar::zero();
        for (m, coeff) in monomial_basis(self.degree).iter().zip(&self.coeffs) {
            if coeff.is_zero() {
                continue;
            }
            let [i, j, k] = m.exponents;
            let v = a.pow(i as u32) * b.pow(j as u32) * c.pow(k as u32);
            acc += coeff * BigRational::from_integer(v);
        }
        acc
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Form) {
        debug_assert_eq!(self.degree, other.degree);
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += s * o;
        }
    }
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = Vec::with_capacity(n + 1);
    f.push(BigInt::one());
    for i in 1..=n {
        f.push(&f[i - 1] * BigInt::from(i));
    }
    f
}

/// Expansion of the e-th power of the linear form with the given
/// coefficients: the coefficient of monomial (i, j, k) is
/// multinomial(e; i, j, k) * a^i b^j c^k.
pub fn power_form_from_coords(coords: &[BigInt; 3], e: usize) -> Form {
    let fact = factorials(e);
    let pows: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|c| {
            let mut p = Vec::with_capacity(e + 1);
            p.push(BigInt::one());
            for i in 1..=e {
                p.push(&p[i - 1] * c);
            }
            p
        })
        .collect();
    let coeffs = monomial_basis(e)
        .iter()
        .map(|m| {
            let [i, j, k] = m.exponents;
            let multinomial = &fact[e] / (&fact[i] * &fact[j] * &fact[k]);
            BigRational::from_integer(multinomial * &pows[0][i] * &pows[1][j] * &pows[2][k])
        })
        .collect();
    Form { degree: e, coeffs }
}

/// Coefficient vector of L_P^e for the canonical linear form of `P`.
/// This is the crate's representative of the Veronese image v_e(P).
pub fn power_form(p: &ProjPoint, e: usize) -> Form {
    power_form_from_coords(p.coords(), e)
}

/// Multiplies a form by the variable x_j (j in 0..=2), raising the degree
/// by one: the output coefficient of m equals the input coefficient of
/// m - e_j, or zero when m has no x_j factor.
pub fn multiply_by_variable(form: &Form, j: usize) -> Form {
    assert!(j < 3, "variable index out of range");
    let out_degree = form.degree + 1;
    let mut coeffs = vec![Scalar::zero(); basis_len(out_degree)];
    for (m, c) in monomial_basis(form.degree).iter().zip(&form.coeffs) {
        let mut exps = m.exponents;
        exps[j] += 1;
        let target = Monomial { exponents: exps };
        coeffs[target.index()] = c.clone();
    }
    Form {
        degree: out_degree,
        coeffs,
    }
}

/// A decomposition instance: support points with nonzero-intended
/// coefficients and the degree of the decomposed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    degree: usize,
    points: Vec<ProjPoint>,
    coefficients: Vec<Scalar>,
}

impl Instance {
    /// Checks lengths and pairwise distinctness of the support.
    /// Zero coefficients are tolerated here; the pipeline rejects them.
    pub fn new(degree: usize, points: Vec<ProjPoint>, coefficients: Vec<Scalar>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidInstance("degree must be >= 1".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInstance("empty support".into()));
        }
        if points.len() != coefficients.len() {
            return Err(Error::InvalidInstance(format!(
                "{} points but {} coefficients",
                points.len(),
                coefficients.len()
            )));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint { first: i, second: j });
                }
            }
        }
        Ok(Self {
            degree,
            points,
            coefficients,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }
}

/// The form decomposed by the instance: sum of a_i * L_i^d.
pub fn compose_tensor(inst: &Instance) -> Form {
    let mut acc = Form::zero(inst.degree());
    for (p, a) in inst.points().iter().zip(inst.coefficients()) {
        acc.add_scaled(a, &power_form(p, inst.degree()));
    }
    acc
}
