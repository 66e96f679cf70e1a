//! Kruskal ranks of point sets and their Veronese images, the reshaped
//! identifiability criterion, and its specialization to plane forms of
//! degree 8 + 2n.

use itertools::Itertools;

use crate::algebra::{basis_len, power_form, Instance, Scalar};
use crate::error::{Error, Result};
use crate::hilbert::PointSet;
use crate::linalg::{rank, Matrix, OpCounter};

/// Outcome of one Kruskal-rank computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KruskalReport {
    /// Veronese degree the rank was computed at.
    pub d: usize,
    /// The Kruskal rank: every subset of at most this size is independent.
    pub k: usize,
    /// Upper bound min(l(Z), C(d+2, 2)).
    pub bound: usize,
    /// Subsets whose rank was actually computed.
    pub subsets_tested: usize,
    /// A dependent subset of size k + 1 (indices into Z), when k < bound.
    pub witness: Option<Vec<usize>>,
    /// Elimination work spent across all subset ranks.
    pub ops: OpCounter,
}

fn veronese_rows(z: &PointSet, d: usize) -> Vec<Vec<Scalar>> {
    z.points()
        .iter()
        .map(|p| power_form(p, d).coeffs().to_vec())
        .collect()
}

fn subset_rank(rows: &[Vec<Scalar>], subset: &[usize], ops: &mut OpCounter) -> usize {
    let m = Matrix::from_rows(subset.iter().map(|&i| rows[i].clone()).collect());
    let (r, c) = rank(&m);
    ops.absorb(&c);
    r
}

/// Scans all subsets of the given size in lexicographic order; stops at
/// the first dependent subset. Returns it when found.
fn first_dependent_subset(
    rows: &[Vec<Scalar>],
    size: usize,
    tested: &mut usize,
    ops: &mut OpCounter,
) -> Option<Vec<usize>> {
    for subset in (0..rows.len()).combinations(size) {
        *tested += 1;
        if subset_rank(rows, &subset, ops) < size {
            return Some(subset);
        }
    }
    None
}

/// Kruskal rank of the degree-d Veronese image of `z`: the largest k such
/// that every subset of at most k image vectors is linearly independent.
///
/// Sizes are scanned downward from the bound; once every subset of a size
/// is independent, all smaller subsets are too.
pub fn kruskal_rank_d(z: &PointSet, d: usize) -> KruskalReport {
    assert!(d >= 1, "Veronese degree must be >= 1");
    assert!(!z.is_empty(), "Kruskal rank of the empty set is undefined");
    let rows = veronese_rows(z, d);
    let bound = z.len().min(basis_len(d));
    let mut tested = 0usize;
    let mut ops = OpCounter::default();
    let mut witness = None;
    let mut size = bound;
    while size >= 1 {
        match first_dependent_subset(&rows, size, &mut tested, &mut ops) {
            None => break,
            Some(dep) => {
                witness = Some(dep);
                size -= 1;
            }
        }
    }
    // size 1 never fails: Veronese images of points are nonzero.
    debug_assert!(size >= 1);
    KruskalReport {
        d,
        k: size,
        bound,
        subsets_tested: tested,
        witness,
        ops,
    }
}

/// Kruskal rank of the point set itself (Veronese degree 1).
pub fn kruskal_rank(z: &PointSet) -> KruskalReport {
    kruskal_rank_d(z, 1)
}

/// Verifies the one-sided bound k_d(Z) >= size by testing every subset of
/// exactly that size, the cheaper check the specialized criterion needs.
fn kruskal_rank_at_least(
    z: &PointSet,
    d: usize,
    size: usize,
) -> (bool, usize, Option<Vec<usize>>, OpCounter) {
    let rows = veronese_rows(z, d);
    let mut tested = 0usize;
    let mut ops = OpCounter::default();
    match first_dependent_subset(&rows, size, &mut tested, &mut ops) {
        None => (true, tested, None, ops),
        Some(dep) => (false, tested, Some(dep), ops),
    }
}

/// The three per-part reports plus the reshaped inequality verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReshapedReport {
    pub r: usize,
    pub partition: (usize, usize, usize),
    pub parts: [KruskalReport; 3],
    /// 2r <= k_a + k_b + k_c - 2, compared in integers.
    pub passed: bool,
}

/// Reshaped Kruskal criterion for a partition d = a + b + c: the
/// decomposition is certified identifiable when
/// r <= (k_a + k_b + k_c - 2) / 2.
pub fn reshaped_kruskal_check(
    z: &PointSet,
    d: usize,
    partition: (usize, usize, usize),
) -> Result<ReshapedReport> {
    let (a, b, c) = partition;
    if a == 0 || b == 0 || c == 0 || a + b + c != d {
        return Err(Error::InvalidPartition(a, b, c, d));
    }
    let parts = [
        kruskal_rank_d(z, a),
        kruskal_rank_d(z, b),
        kruskal_rank_d(z, c),
    ];
    let r = z.len();
    let sum = parts[0].k + parts[1].k + parts[2].k;
    let passed = 2 * r <= sum - 2;
    Ok(ReshapedReport {
        r,
        partition,
        parts,
        passed,
    })
}

/// Specialized criterion for degree d = 8 + 2n with the partition
/// (n+3) + (n+3) + 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaselineReport {
    pub n: usize,
    pub r: usize,
    /// Full second Kruskal rank report.
    pub k2: KruskalReport,
    /// Required value min(6, r) for the second Kruskal rank.
    pub k2_required: usize,
    pub k2_ok: bool,
    /// Threshold min(r, 3n+9) the (n+3)-rd Kruskal rank must reach.
    pub kn3_threshold: usize,
    pub kn3_ok: bool,
    pub kn3_subsets_tested: usize,
    pub kn3_witness: Option<Vec<usize>>,
    /// Both conditions hold, so the decomposition is identifiable.
    pub identifiable: bool,
    /// Total elimination work, the baseline's cost in the benchmark.
    pub ops: OpCounter,
}

/// Checks the two Kruskal-rank conditions that certify identifiability
/// for a length-r decomposition in degree 8 + 2n with r <= 11 + 3n:
/// k_2 = min(6, r) and k_{n+3} >= min(r, 3n + 9).
pub fn baseline_check(inst: &Instance) -> Result<BaselineReport> {
    let d = inst.degree();
    if d < 8 || !d.is_multiple_of(2) {
        return Err(Error::UnsupportedDegree(d));
    }
    let n = (d - 8) / 2;
    let r = inst.len();
    let bound = 11 + 3 * n;
    if r > bound {
        return Err(Error::LengthOutOfRange { r, bound, degree: d });
    }
    let z = PointSet::new(inst.points().to_vec())?;

    let k2 = kruskal_rank_d(&z, 2);
    let k2_required = 6.min(r);
    let k2_ok = k2.k == k2_required;

    let kn3_threshold = r.min(3 * n + 9);
    let (kn3_ok, kn3_subsets_tested, kn3_witness, kn3_ops) =
        kruskal_rank_at_least(&z, n + 3, kn3_threshold);

    let mut ops = k2.ops;
    ops.absorb(&kn3_ops);
    Ok(BaselineReport {
        n,
        r,
        k2,
        k2_required,
        k2_ok,
        kn3_threshold,
        kn3_ok,
        kn3_subsets_tested,
        kn3_witness,
        identifiable: k2_ok && kn3_ok,
        ops,
    })
}
