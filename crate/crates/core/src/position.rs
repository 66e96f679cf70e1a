//! Special-position detection: maximal collinear and conic-incident
//! subsets, cubic containment, and the thresholds that force an infinite
//! family of decompositions.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Form, ProjPoint};
use crate::hilbert::{evaluation_matrix, PointSet};
use crate::linalg::{kernel_basis, primitive_integer};

/// Cross product of homogeneous coordinates: the line through two
/// distinct points.
fn line_through(p: &ProjPoint, q: &ProjPoint) -> Form {
    let a = p.coords();
    let b = q.coords();
    let raw = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    let coeffs = primitive_integer(&raw.map(num_rational::BigRational::from_integer));
    Form::from_int_coeffs(1, coeffs).expect("line has 3 coefficients")
}

fn incidence_count(z: &PointSet, form: &Form) -> usize {
    z.points().iter().filter(|p| form.eval(p).is_zero()).count()
}

/// Maximum number of points of `z` on one line, with the line when the
/// count is at least 2. Every maximal collinear subset is spanned by one
/// of its pairs, so scanning all pairs is exhaustive.
pub fn max_collinear(z: &PointSet) -> (usize, Option<Form>) {
    assert!(!z.is_empty(), "max_collinear needs at least one point");
    if z.len() == 1 {
        return (1, None);
    }
    let mut best = 0usize;
    let mut witness = None;
    for (i, j) in (0..z.len()).tuple_combinations() {
        let line = line_through(&z.points()[i], &z.points()[j]);
        let count = incidence_count(z, &line);
        if count > best {
            best = count;
            witness = Some(line);
        }
    }
    (best, witness)
}

/// Maximum number of points of `z` on one conic (degenerate conics
/// included). Up to five points always lie on a conic; beyond that each
/// 5-subset contributes the conics in the kernel of its evaluation
/// matrix, and incidences are counted over the whole set.
pub fn max_on_conic(z: &PointSet) -> (usize, Option<Form>) {
    assert!(!z.is_empty(), "max_on_conic needs at least one point");
    let conic_from = |kernel_vec: Vec<BigInt>| Form::from_int_coeffs(2, kernel_vec).unwrap();
    if z.len() <= 5 {
        let basis = kernel_basis(&evaluation_matrix(z, 2));
        let witness = basis.into_iter().next().map(conic_from);
        return (z.len(), witness);
    }
    let mut best = 0usize;
    let mut witness = None;
    for subset in (0..z.len()).combinations(5) {
        let sub = z.subset(&subset);
        for vec in kernel_basis(&evaluation_matrix(&sub, 2)) {
            let conic = conic_from(vec);
            let count = incidence_count(z, &conic);
            if count > best {
                best = count;
                witness = Some(conic);
            }
        }
    }
    (best, witness)
}

/// Whether some cubic passes through all of `z`, with a witness cubic.
pub fn contained_in_cubic(z: &PointSet) -> (bool, Option<Form>) {
    let basis = kernel_basis(&evaluation_matrix(z, 3));
    let witness = basis
        .into_iter()
        .next()
        .map(|v| Form::from_int_coeffs(3, v).unwrap());
    (witness.is_some(), witness)
}

/// Position diagnostics for one support set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionReport {
    pub max_collinear: usize,
    pub line_witness: Option<Form>,
    pub max_on_conic: usize,
    pub conic_witness: Option<Form>,
    pub in_cubic: bool,
    pub cubic_witness: Option<Form>,
}

/// Full position scan.
pub fn position_report(z: &PointSet) -> PositionReport {
    let (max_col, line_witness) = max_collinear(z);
    let (max_con, conic_witness) = max_on_conic(z);
    let (in_cubic, cubic_witness) = contained_in_cubic(z);
    PositionReport {
        max_collinear: max_col,
        line_witness,
        max_on_conic: max_con,
        conic_witness,
        in_cubic,
        cubic_witness,
    }
}

/// A configuration that forces a positive-dimensional family of
/// decompositions: at least 5+n points on a line, or at least 9+2n on a
/// conic. The line case takes priority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyObstruction {
    None,
    Collinear {
        threshold: usize,
        witness: Form,
        points: Vec<ProjPoint>,
    },
    Conic {
        threshold: usize,
        witness: Form,
        points: Vec<ProjPoint>,
    },
}

impl FamilyObstruction {
    pub fn is_none(&self) -> bool {
        matches!(self, FamilyObstruction::None)
    }
}

fn points_on(z: &PointSet, form: &Form) -> Vec<ProjPoint> {
    z.points()
        .iter()
        .filter(|p| form.eval(p).is_zero())
        .cloned()
        .collect()
}

/// Checks the two family thresholds for parameter `n` (degree 8 + 2n).
pub fn family_obstruction(z: &PointSet, n: usize) -> FamilyObstruction {
    if z.is_empty() {
        return FamilyObstruction::None;
    }
    let (max_col, line) = max_collinear(z);
    if max_col >= 5 + n {
        let witness = line.expect("count >= 5 implies a line witness");
        let points = points_on(z, &witness);
        return FamilyObstruction::Collinear {
            threshold: 5 + n,
            points,
            witness,
        };
    }
    let (max_con, conic) = max_on_conic(z);
    if max_con >= 9 + 2 * n {
        let witness = conic.expect("count >= 9 implies a conic witness");
        let points = points_on(z, &witness);
        return FamilyObstruction::Conic {
            threshold: 9 + 2 * n,
            points,
            witness,
        };
    }
    FamilyObstruction::None
}
