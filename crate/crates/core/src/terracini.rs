//! The Terracini matrix of a decomposition and the dimension test that
//! certifies identifiability when the tangent spaces at the support are
//! independent.

use crate::algebra::{basis_len, multiply_by_variable, power_form, Instance};
use crate::error::Result;
use crate::linalg::{rank, Matrix, OpCounter};
use crate::pipeline;

/// Rank data of one Terracini matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerraciniReport {
    pub r: usize,
    pub d: usize,
    /// Rank q of the Terracini matrix.
    pub rank: usize,
    /// q - 1, the projective dimension of the Terracini space.
    pub projective_dimension: i64,
    /// 3r - 1, the expected projective dimension.
    pub expected: usize,
    /// q = 3r: the tangent spaces are independent.
    pub full: bool,
    pub ops: OpCounter,
}

/// The 3r x C(d+2, 2) matrix whose rows are the coefficient vectors of
/// x_j * L_i^(d-1), ordered by (i, j).
pub fn terracini_matrix(inst: &Instance) -> Matrix {
    let d = inst.degree();
    assert!(d >= 2, "Terracini matrix needs degree >= 2");
    let mut rows = Vec::with_capacity(3 * inst.len());
    for p in inst.points() {
        let lp = power_form(p, d - 1);
        for j in 0..3 {
            rows.push(multiply_by_variable(&lp, j).coeffs().to_vec());
        }
    }
    Matrix::from_rows(rows)
}

/// Computes the dimension of the Terracini space of the decomposition.
pub fn terracini_dimension(inst: &Instance) -> TerraciniReport {
    let m = terracini_matrix(inst);
    let (q, ops) = rank(&m);
    let r = inst.len();
    debug_assert!(q <= (3 * r).min(basis_len(inst.degree())));
    TerraciniReport {
        r,
        d: inst.degree(),
        rank: q,
        projective_dimension: q as i64 - 1,
        expected: 3 * r - 1,
        full: q == 3 * r,
        ops,
    }
}

/// The identifiability test: validates the instance (degree 8 + 2n,
/// length within range, nonzero coefficients, non-redundant support) and
/// reports whether the Terracini space attains the expected dimension.
pub fn terracini_test(inst: &Instance) -> Result<bool> {
    pipeline::validate_instance(inst)?;
    let (non_redundant, rank_md, _) = pipeline::non_redundant(inst);
    if !non_redundant {
        return Err(crate::error::Error::InvalidInstance(format!(
            "redundant decomposition: rank of M_d is {rank_md} < {}",
            inst.len()
        )));
    }
    Ok(terracini_dimension(inst).full)
}
