//! The end-to-end identifiability pipeline: validation, non-redundancy,
//! the small-rank shortcut, and the Terracini test, with optional
//! position diagnostics attached to the verdict.

use num_traits::Zero;

use crate::algebra::{power_form, Instance};
use crate::error::{Error, Result};
use crate::hilbert::PointSet;
use crate::linalg::{rank, Matrix, OpCounter};
use crate::position::{family_obstruction, position_report, FamilyObstruction, PositionReport};
use crate::terracini::{terracini_dimension, TerraciniReport};

/// Classification returned by the pipeline. The method is one-sided:
/// no variant ever claims non-identifiability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    /// The support is redundant (rank of M_d below r): any form the
    /// instance decomposes has rank below r.
    RankDeficient,
    /// r <= 4 + n certifies the decomposition outright.
    IdentifiableSmallRank,
    /// The Terracini space attains the expected dimension 3r - 1.
    IdentifiableTerracini,
    /// The Terracini space is deficient; uniqueness is undecided.
    Inconclusive,
}

impl VerdictKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictKind::RankDeficient => "rank_deficient",
            VerdictKind::IdentifiableSmallRank => "identifiable_small_rank",
            VerdictKind::IdentifiableTerracini => "identifiable_terracini",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }

    pub fn is_identifiable(&self) -> bool {
        matches!(
            self,
            VerdictKind::IdentifiableSmallRank | VerdictKind::IdentifiableTerracini
        )
    }
}

/// Pipeline outcome with full provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub n: usize,
    pub r: usize,
    /// Rank of the matrix of Veronese rows of the support.
    pub rank_of_md: usize,
    pub terracini: Option<TerraciniReport>,
    pub position: Option<PositionReport>,
    pub obstruction: Option<FamilyObstruction>,
    /// Elimination work across the ranks the pipeline computed.
    pub ops: OpCounter,
    pub notes: Vec<String>,
}

/// Checks the shape constraints of the pipeline's input and returns n
/// with d = 8 + 2n.
pub fn validate_instance(inst: &Instance) -> Result<usize> {
    let d = inst.degree();
    if d < 8 || !d.is_multiple_of(2) {
        return Err(Error::UnsupportedDegree(d));
    }
    let n = (d - 8) / 2;
    let r = inst.len();
    let bound = 3 * n + 11;
    if r > bound {
        return Err(Error::LengthOutOfRange { r, bound, degree: d });
    }
    for i in 0..r {
        for j in i + 1..r {
            if inst.points()[i] == inst.points()[j] {
                return Err(Error::DuplicatePoint { first: i, second: j });
            }
        }
    }
    if let Some(index) = inst.coefficients().iter().position(|a| a.is_zero()) {
        return Err(Error::ZeroCoefficient { index });
    }
    Ok(n)
}

/// Builds M_d (one Veronese row per support point) and checks whether its
/// rank equals r. With nonzero coefficients this is exactly
/// non-redundancy of the decomposition.
pub fn non_redundant(inst: &Instance) -> (bool, usize, OpCounter) {
    let rows = inst
        .points()
        .iter()
        .map(|p| power_form(p, inst.degree()).coeffs().to_vec())
        .collect();
    let (rank_md, ops) = rank(&Matrix::from_rows(rows));
    (rank_md == inst.len(), rank_md, ops)
}

/// Runs the full pipeline without position diagnostics.
pub fn identify(inst: &Instance) -> Result<Verdict> {
    identify_with(inst, false)
}

/// Runs the full pipeline; with `diagnostics` the verdict carries the
/// position report and the family-obstruction scan of the support.
pub fn identify_with(inst: &Instance, diagnostics: bool) -> Result<Verdict> {
    let n = validate_instance(inst)?;
    let r = inst.len();
    let (is_non_redundant, rank_of_md, mut ops) = non_redundant(inst);

    let attach = |verdict: &mut Verdict| {
        let z = PointSet::new(inst.points().to_vec()).expect("validated support is distinct");
        verdict.position = Some(position_report(&z));
        verdict.obstruction = Some(family_obstruction(&z, verdict.n));
    };

    let mut verdict = Verdict {
        kind: VerdictKind::Inconclusive,
        n,
        r,
        rank_of_md,
        terracini: None,
        position: None,
        obstruction: None,
        ops,
        notes: Vec::new(),
    };

    if !is_non_redundant {
        verdict.kind = VerdictKind::RankDeficient;
        verdict.notes.push(format!(
            "the Veronese rows of the support are dependent (rank {rank_of_md} < {r}): \
             the decomposition is redundant and any form it represents has rank below {r}"
        ));
        if diagnostics {
            attach(&mut verdict);
        }
        return Ok(verdict);
    }

    if r <= 4 + n {
        verdict.kind = VerdictKind::IdentifiableSmallRank;
        verdict.notes.push(format!(
            "length {r} <= {} = (d+1)/2 rounded down: the decomposition is minimal and unique",
            4 + n
        ));
        if diagnostics {
            attach(&mut verdict);
        }
        return Ok(verdict);
    }

    let report = terracini_dimension(inst);
    ops.absorb(&report.ops);
    verdict.ops = ops;
    if report.full {
        verdict.kind = VerdictKind::IdentifiableTerracini;
        verdict.notes.push(format!(
            "Terracini space has the expected projective dimension {}: \
             the decomposition is minimal and unique",
            report.expected
        ));
    } else {
        verdict.kind = VerdictKind::Inconclusive;
        verdict.notes.push(format!(
            "Terracini space is deficient (projective dimension {} < {})",
            report.projective_dimension, report.expected
        ));
    }
    verdict.terracini = Some(report);

    if diagnostics {
        attach(&mut verdict);
        if verdict.kind == VerdictKind::Inconclusive {
            match verdict.obstruction.as_ref() {
                Some(FamilyObstruction::Collinear { threshold, points, .. }) => {
                    verdict.notes.push(format!(
                        "{} support points are collinear (threshold {threshold}): \
                         such configurations admit a positive-dimensional family of decompositions",
                        points.len()
                    ));
                }
                Some(FamilyObstruction::Conic { threshold, points, .. }) => {
                    verdict.notes.push(format!(
                        "{} support points lie on a conic (threshold {threshold}): \
                         such configurations admit a positive-dimensional family of decompositions",
                        points.len()
                    ));
                }
                _ => {}
            }
        }
    }
    if verdict.kind == VerdictKind::Inconclusive
        && verdict.obstruction.as_ref().is_none_or(|o| o.is_none())
    {
        verdict.notes.push(
            "uniqueness is undecided: the test is one-sided and a deficient Terracini \
             space does not certify extra decompositions"
                .to_string(),
        );
    }
    Ok(verdict)
}
