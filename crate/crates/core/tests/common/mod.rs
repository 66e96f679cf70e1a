//! Shared test oracles, independent of the implementation paths they
//! check: determinant-based rank by minor expansion, exhaustive subset
//! searches, and seeded point-set samplers.
//!
//! Each integration test binary compiles this module separately and uses
//! a different slice of it.
#![allow(dead_code)]

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use waring::algebra::{power_form, ProjPoint, Scalar};
use waring::hilbert::{ideal_dim, PointSet};
use waring::linalg::{rank, Matrix};

/// Determinant by Laplace expansion along the first remaining row,
/// memoized on the remaining column subset. No elimination involved.
fn det_minor(m: &Matrix, rows: &[usize], cols: &[usize], memo: &mut HashMap<Vec<usize>, Scalar>) -> Scalar {
    if cols.len() == 1 {
        return m.get(rows[rows.len() - cols.len()], cols[0]).clone();
    }
    if let Some(v) = memo.get(cols) {
        return v.clone();
    }
    let row = rows[rows.len() - cols.len()];
    let mut acc = Scalar::zero();
    let mut sign = 1i64;
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if !entry.is_zero() {
            let mut rest = cols.to_vec();
            rest.remove(pos);
            let sub = det_minor(m, rows, &rest, memo);
            if sign > 0 {
                acc += entry * sub;
            } else {
                acc -= entry * sub;
            }
        }
        sign = -sign;
    }
    memo.insert(cols.to_vec(), acc.clone());
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// Rank as the size of the largest nonzero minor, searched from the top.
pub fn minor_rank_oracle(m: &Matrix) -> usize {
    let max = m.rows().min(m.cols());
    for k in (1..=max).rev() {
        for rows in combinations(m.rows(), k) {
            // the memo is keyed on absolute column subsets, so it is
            // shared across all top-level column choices for this row set
            let mut memo = HashMap::new();
            for cols in combinations(m.cols(), k) {
                if !det_minor(m, &rows, &cols, &mut memo).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Exhaustive Kruskal rank: tests every subset of every size, no early
/// exit, independence decided by matrix rank.
pub fn kruskal_brute_force(z: &PointSet, d: usize) -> usize {
    let rows: Vec<Vec<Scalar>> = z
        .points()
        .iter()
        .map(|p| power_form(p, d).coeffs().to_vec())
        .collect();
    let bound = z.len().min(waring::algebra::basis_len(d));
    let mut k = 0;
    for size in 1..=bound {
        let all_independent = combinations(z.len(), size).into_iter().all(|subset| {
            let m = Matrix::from_rows(subset.iter().map(|&i| rows[i].clone()).collect());
            rank(&m).0 == size
        });
        if all_independent {
            k = size;
        } else {
            break;
        }
    }
    k
}

/// Largest subset contained in a curve of the given degree, by scanning
/// all subsets and testing containment through the ideal dimension.
/// Up to 2 points always share a line and up to 5 a conic.
pub fn max_on_curve_brute_force(z: &PointSet, degree: usize) -> usize {
    let trivial = match degree {
        1 => 2,
        2 => 5,
        _ => panic!("oracle supports lines and conics"),
    };
    if z.len() <= trivial {
        return z.len();
    }
    for size in (trivial + 1..=z.len()).rev() {
        let found = combinations(z.len(), size)
            .into_iter()
            .any(|subset| ideal_dim(&z.subset(&subset), degree) > 0);
        if found {
            return size;
        }
    }
    trivial
}

/// Checks every Hilbert-function fact the crate relies on for one point
/// set: the basic axioms of h and Dh, the non-increasing tail property,
/// subset monotonicity, and the head/tail inequality whenever the
/// Cayley-Bacharach property holds. Returns human-readable violations.
pub fn hilbert_axiom_violations(z: &PointSet, rng: &mut ChaCha8Rng) -> Vec<String> {
    use waring::hilbert::{cayley_bacharach, gkr_inequality_holds, hilbert_profile};

    let mut violations = Vec::new();
    let mut blame = |cond: bool, msg: String| {
        if !cond {
            violations.push(msg);
        }
    };
    let ell = z.len();
    let profile = hilbert_profile(z, None);
    let stab = profile.stabilization_degree() as i64;

    // h bounded by ell; h(0) = Dh(0) = 1; Dh nonnegative; stabilization
    for d in 0..=stab + 2 {
        blame(profile.h_at(d) <= ell, format!("h({d}) > ell"));
        blame(profile.dh_at(d) >= 0, format!("Dh({d}) < 0"));
        if d >= ell as i64 - 1 {
            blame(profile.h_at(d) == ell, format!("h({d}) != ell at stable range"));
        }
        if profile.h_at(d) == ell {
            blame(profile.dh_at(d + 1) == 0, format!("h({d}) = ell but Dh({}) != 0", d + 1));
        }
        // partial sums of Dh reproduce h
        let sum: i64 = (0..=d).map(|t| profile.dh_at(t)).sum();
        blame(sum == profile.h_at(d) as i64, format!("sum Dh(0..={d}) != h({d})"));
    }
    blame(profile.dh_at(-1) == 0, "Dh(-1) != 0".into());
    blame(profile.h_at(0) == 1, "h(0) != 1".into());
    blame(profile.dh_at(0) == 1, "Dh(0) != 1".into());
    blame(stab < ell as i64, "stabilized later than ell - 1".into());
    let total: i64 = (0..=stab).map(|t| profile.dh_at(t)).sum();
    blame(total == ell as i64, "sum of Dh != ell".into());

    // the first difference is non-increasing once Dh(j) <= j
    for j in 1..=stab + 1 {
        if profile.dh_at(j) <= j {
            blame(
                profile.dh_at(j) >= profile.dh_at(j + 1),
                format!("Dh({j}) <= {j} but Dh({}) grows", j + 1),
            );
            if profile.dh_at(j) == 0 {
                for i in j..=stab + 1 {
                    blame(profile.dh_at(i) == 0, format!("Dh({j}) = 0 but Dh({i}) != 0"));
                }
            }
        }
    }

    // subset monotonicity for a few random subsets
    for _ in 0..3 {
        if ell < 2 {
            break;
        }
        let size = rng.random_range(1..ell);
        let mut indices: Vec<usize> = (0..ell).collect();
        for i in 0..size {
            let j = rng.random_range(i..ell);
            indices.swap(i, j);
        }
        let mut chosen = indices[..size].to_vec();
        chosen.sort_unstable();
        let sub_profile = hilbert_profile(&z.subset(&chosen), None);
        for d in 0..=stab + 1 {
            blame(
                sub_profile.h_at(d) <= profile.h_at(d),
                format!("subset h({d}) exceeds h({d})"),
            );
            blame(
                sub_profile.dh_at(d) <= profile.dh_at(d),
                format!("subset Dh({d}) exceeds Dh({d})"),
            );
        }
    }

    // CB(i) forces the head/tail inequality; CB is evaluated through the
    // profiles of the punctured sets, cross-checked against the direct
    // operation at small degrees.
    let punctured: Vec<_> = (0..ell).map(|i| hilbert_profile(&z.without(i), None)).collect();
    for i in 0..=(stab + 1).max(2) {
        let cb = !z.is_empty()
            && punctured
                .iter()
                .all(|p| p.h_at(i) == profile.h_at(i));
        if i <= 2 {
            blame(
                cb == cayley_bacharach(z, i as usize),
                format!("profile CB({i}) disagrees with the direct test"),
            );
        }
        if cb {
            blame(
                gkr_inequality_holds(z, i as usize),
                format!("CB({i}) holds but the head/tail inequality fails"),
            );
        }
    }

    violations
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point(rng: &mut ChaCha8Rng) -> ProjPoint {
    loop {
        let coords: [i64; 3] = [
            rng.random_range(-9..=9),
            rng.random_range(-9..=9),
            rng.random_range(-9..=9),
        ];
        if coords.iter().any(|&c| c != 0) {
            return ProjPoint::new(coords).unwrap();
        }
    }
}

/// `ell` distinct random points with coordinates in [-9, 9].
pub fn random_pointset(rng: &mut ChaCha8Rng, ell: usize) -> PointSet {
    let mut points: Vec<ProjPoint> = Vec::with_capacity(ell);
    while points.len() < ell {
        let p = random_point(rng);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    PointSet::new(points).unwrap()
}

/// Point sets with deliberate structure mixed in: every third set gets a
/// collinear run, every fifth a conic run, so low Kruskal ranks and large
/// incidence counts actually occur.
pub fn mixed_pointset(rng: &mut ChaCha8Rng, ell: usize, flavor: u64) -> PointSet {
    let mut points: Vec<ProjPoint> = Vec::new();
    if flavor.is_multiple_of(3) && ell >= 3 {
        let take = rng.random_range(3..=ell);
        let base: i64 = rng.random_range(-4..=4);
        for t in 0..take as i64 {
            let p = ProjPoint::new([1, base + t, 0]).unwrap();
            if !points.contains(&p) {
                points.push(p);
            }
        }
    } else if flavor.is_multiple_of(5) && ell >= 4 {
        let take = rng.random_range(4..=ell);
        let mut t: i64 = rng.random_range(-6..=6);
        while points.len() < take {
            let p = ProjPoint::new([1 - t * t, 2 * t, 1 + t * t]).unwrap();
            if !points.contains(&p) {
                points.push(p);
            }
            t += 1;
        }
    }
    while points.len() < ell {
        let p = random_point(rng);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    PointSet::new(points).unwrap()
}
